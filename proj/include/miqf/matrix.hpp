#pragma once

#include <complex>
#include <ostream>
#include <vector>

#include "miqf/field.hpp"

namespace miqf {

using cplx = std::complex<double>;

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;

  friend bool operator==(const Signature& x, const Signature& y) {
    return x.plus == y.plus && x.minus == y.minus && x.zero == y.zero;
  }
  friend std::ostream& operator<<(std::ostream& os, const Signature& s) {
    return os << "(" << s.plus << "," << s.minus << "," << s.zero << ")";
  }
};

/// Dense matrix over Q(sqrt(-delta)). Entries are exact; the field context is
/// carried with the matrix and binary operations require matching deltas.
class KMatrix {
 public:
  KMatrix(int rows, int cols, FieldContext ctx);

  static KMatrix identity(int n, const FieldContext& ctx);
  /// diag(+1 x n, -1 x m).
  static KMatrix signature_matrix(int n, int m, const FieldContext& ctx);
  /// sqrt(-delta) * signature_matrix: the Gram grid of the standard
  /// alternating form in its K-sesquilinear encoding.
  static KMatrix omega_gram(int n, int m, const FieldContext& ctx);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldContext& ctx() const { return ctx_; }

  const KElement& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  KElement& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool same_shape(const KMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  friend bool operator==(const KMatrix& x, const KMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.ctx_ == y.ctx_ && x.data_ == y.data_;
  }
  friend bool operator!=(const KMatrix& x, const KMatrix& y) { return !(x == y); }

 private:
  int rows_, cols_;
  FieldContext ctx_;
  std::vector<KElement> data_;
};

KMatrix conj_transpose(const KMatrix& m);
KMatrix transpose(const KMatrix& m);
KMatrix conj(const KMatrix& m);
KMatrix operator+(const KMatrix& x, const KMatrix& y);
KMatrix operator-(const KMatrix& x, const KMatrix& y);
KMatrix operator-(const KMatrix& x);
KMatrix mul(const KMatrix& x, const KMatrix& y);
KMatrix scale(const KElement& k, const KMatrix& m);
bool is_hermitian(const KMatrix& m);

/// Dense complex matrix. Construction rejects non-finite entries. Zero rows
/// or columns are legal (empty kernels produce 0-column results).
class CMatrix {
 public:
  CMatrix() : CMatrix(0, 0) {}
  CMatrix(int rows, int cols);
  CMatrix(int rows, int cols, std::vector<cplx> data);

  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const cplx& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  cplx& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<cplx>& data() const { return data_; }

  void check_finite() const;

  friend bool operator==(const CMatrix& x, const CMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }
  friend bool operator!=(const CMatrix& x, const CMatrix& y) { return !(x == y); }

 private:
  int rows_, cols_;
  std::vector<cplx> data_;
};

CMatrix conj_transpose(const CMatrix& m);
CMatrix transpose(const CMatrix& m);
CMatrix conj(const CMatrix& m);
CMatrix operator+(const CMatrix& x, const CMatrix& y);
CMatrix operator-(const CMatrix& x, const CMatrix& y);
CMatrix operator-(const CMatrix& x);
CMatrix mul(const CMatrix& x, const CMatrix& y);
CMatrix scale(cplx s, const CMatrix& m);
/// [x | y] side by side.
CMatrix hcat(const CMatrix& x, const CMatrix& y);
/// Copy of the rectangle starting at (r0, c0).
CMatrix block(const CMatrix& m, int r0, int c0, int nrows, int ncols);
double max_abs(const CMatrix& m);
/// Largest entrywise |x - y|; matrices must share shape.
double max_abs_diff(const CMatrix& x, const CMatrix& y);

/// Entrywise image of a K-matrix under the fixed complex embedding.
CMatrix embed(const KMatrix& m);
CMatrix embed_signed(const KMatrix& m, bool flipped);

}  // namespace miqf
