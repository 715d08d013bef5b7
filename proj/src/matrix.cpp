#include "miqf/matrix.hpp"

#include <cmath>
#include <string>

namespace miqf {

namespace {

void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

void require_same_ctx(const KMatrix& x, const KMatrix& y) {
  require(x.ctx() == y.ctx(), ErrorCode::MixedDelta,
          "matrices over different fields: delta " + std::to_string(x.ctx().delta()) + " vs " +
              std::to_string(y.ctx().delta()));
}

}  // namespace

KMatrix::KMatrix(int rows, int cols, FieldContext ctx)
    : rows_(rows), cols_(cols), ctx_(ctx), data_(static_cast<size_t>(rows) * cols) {
  require(rows >= 0 && cols >= 0, ErrorCode::BadShape, "negative matrix dimension");
}

KMatrix KMatrix::identity(int n, const FieldContext& ctx) {
  KMatrix m(n, n, ctx);
  for (int i = 0; i < n; ++i) m.at(i, i) = KElement(1);
  return m;
}

KMatrix KMatrix::signature_matrix(int n, int m, const FieldContext& ctx) {
  KMatrix r(n + m, n + m, ctx);
  for (int i = 0; i < n; ++i) r.at(i, i) = KElement(1);
  for (int i = n; i < n + m; ++i) r.at(i, i) = KElement(-1);
  return r;
}

KMatrix KMatrix::omega_gram(int n, int m, const FieldContext& ctx) {
  KMatrix r(n + m, n + m, ctx);
  for (int i = 0; i < n; ++i) r.at(i, i) = KElement::sqrt_neg_delta();
  for (int i = n; i < n + m; ++i) r.at(i, i) = -KElement::sqrt_neg_delta();
  return r;
}

KMatrix conj_transpose(const KMatrix& m) {
  KMatrix r(m.cols(), m.rows(), m.ctx());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(j, i) = conj(m.at(i, j));
  return r;
}

KMatrix transpose(const KMatrix& m) {
  KMatrix r(m.cols(), m.rows(), m.ctx());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
  return r;
}

KMatrix conj(const KMatrix& m) {
  KMatrix r(m.rows(), m.cols(), m.ctx());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = conj(m.at(i, j));
  return r;
}

KMatrix operator+(const KMatrix& x, const KMatrix& y) {
  require_same_ctx(x, y);
  require(x.same_shape(y), ErrorCode::BadShape, "shape mismatch in matrix addition");
  KMatrix r(x.rows(), x.cols(), x.ctx());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
  return r;
}

KMatrix operator-(const KMatrix& x, const KMatrix& y) {
  require_same_ctx(x, y);
  require(x.same_shape(y), ErrorCode::BadShape, "shape mismatch in matrix subtraction");
  KMatrix r(x.rows(), x.cols(), x.ctx());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
  return r;
}

KMatrix operator-(const KMatrix& x) {
  KMatrix r(x.rows(), x.cols(), x.ctx());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r.at(i, j) = -x.at(i, j);
  return r;
}

KMatrix mul(const KMatrix& x, const KMatrix& y) {
  require_same_ctx(x, y);
  require(x.cols() == y.rows(), ErrorCode::BadShape, "shape mismatch in matrix product");
  KMatrix r(x.rows(), y.cols(), x.ctx());
  const FieldContext& ctx = x.ctx();
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const KElement& xv = x.at(i, k);
      if (xv.is_zero()) continue;
      for (int j = 0; j < y.cols(); ++j) {
        if (y.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + ctx.mul(xv, y.at(k, j));
      }
    }
  return r;
}

KMatrix scale(const KElement& k, const KMatrix& m) {
  KMatrix r(m.rows(), m.cols(), m.ctx());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.ctx().mul(k, m.at(i, j));
  return r;
}

bool is_hermitian(const KMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (m.at(i, j) != conj(m.at(j, i))) return false;
  return true;
}

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  require(rows >= 0 && cols >= 0, ErrorCode::BadShape, "negative matrix dimension");
}

CMatrix::CMatrix(int rows, int cols, std::vector<cplx> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(rows >= 0 && cols >= 0, ErrorCode::BadShape, "negative matrix dimension");
  require(data_.size() == static_cast<size_t>(rows) * cols, ErrorCode::BadShape,
          "matrix data size does not match dimensions");
  check_finite();
}

void CMatrix::check_finite() const {
  for (const cplx& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::NonFinite, "matrix entry is not finite");
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix conj_transpose(const CMatrix& m) {
  CMatrix r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(j, i) = std::conj(m.at(i, j));
  return r;
}

CMatrix transpose(const CMatrix& m) {
  CMatrix r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
  return r;
}

CMatrix conj(const CMatrix& m) {
  CMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = std::conj(m.at(i, j));
  return r;
}

CMatrix operator+(const CMatrix& x, const CMatrix& y) {
  require(x.rows() == y.rows() && x.cols() == y.cols(), ErrorCode::BadShape, "shape mismatch in matrix addition");
  CMatrix r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
  return r;
}

CMatrix operator-(const CMatrix& x, const CMatrix& y) {
  require(x.rows() == y.rows() && x.cols() == y.cols(), ErrorCode::BadShape, "shape mismatch in matrix subtraction");
  CMatrix r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
  return r;
}

CMatrix operator-(const CMatrix& x) {
  CMatrix r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r.at(i, j) = -x.at(i, j);
  return r;
}

CMatrix mul(const CMatrix& x, const CMatrix& y) {
  require(x.cols() == y.rows(), ErrorCode::BadShape, "shape mismatch in matrix product");
  CMatrix r(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      cplx xv = x.at(i, k);
      if (xv == 0.0) continue;
      for (int j = 0; j < y.cols(); ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

CMatrix scale(cplx s, const CMatrix& m) {
  CMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = s * m.at(i, j);
  return r;
}

CMatrix hcat(const CMatrix& x, const CMatrix& y) {
  require(x.rows() == y.rows(), ErrorCode::BadShape, "row mismatch in hcat");
  CMatrix r(x.rows(), x.cols() + y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols(); ++j) r.at(i, x.cols() + j) = y.at(i, j);
  }
  return r;
}

CMatrix block(const CMatrix& m, int r0, int c0, int nrows, int ncols) {
  require(r0 >= 0 && c0 >= 0 && nrows >= 0 && ncols >= 0 && r0 + nrows <= m.rows() && c0 + ncols <= m.cols(),
          ErrorCode::BadShape, "block out of range");
  CMatrix r(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r.at(i, j) = m.at(r0 + i, c0 + j);
  return r;
}

double max_abs(const CMatrix& m) {
  double best = 0.0;
  for (const cplx& v : m.data()) best = std::max(best, std::abs(v));
  return best;
}

double max_abs_diff(const CMatrix& x, const CMatrix& y) {
  require(x.rows() == y.rows() && x.cols() == y.cols(), ErrorCode::BadShape, "shape mismatch in comparison");
  double best = 0.0;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) best = std::max(best, std::abs(x.at(i, j) - y.at(i, j)));
  return best;
}

CMatrix embed(const KMatrix& m) { return embed_signed(m, false); }

CMatrix embed_signed(const KMatrix& m, bool flipped) {
  CMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.ctx().embed_signed(m.at(i, j), flipped);
  return r;
}

}  // namespace miqf
