#include "miqf/exterior.hpp"

#include <string>
#include <utility>

namespace miqf {

namespace {

void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

template <typename Matrix>
Matrix submatrix(const Matrix& m, const WedgeIndex& rows, const WedgeIndex& cols);

template <>
KMatrix submatrix(const KMatrix& m, const WedgeIndex& rows, const WedgeIndex& cols) {
  KMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.ctx());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
  return s;
}

template <>
CMatrix submatrix(const CMatrix& m, const WedgeIndex& rows, const WedgeIndex& cols) {
  CMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
  return s;
}

void check_compound_args(int rows, int cols, int k) {
  require(k >= 1 && k <= rows && k <= cols, ErrorCode::BadK,
          "compound order " + std::to_string(k) + " out of range for " + std::to_string(rows) + " x " +
              std::to_string(cols));
}

/// Deterministic cokernel: rows spanning the left null space, with the
/// kernel_basis pivot policy applied to the transpose.
CMatrix cokernel_rows(const CMatrix& m, double tol) { return transpose(kernel_basis(transpose(m), tol)); }

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<WedgeIndex> wedge_basis(int dim, int k) {
  require(dim >= 1, ErrorCode::BadShape, "wedge basis of a nonpositive dimension");
  require(k >= 1 && k <= dim, ErrorCode::BadK,
          "wedge order " + std::to_string(k) + " out of range for dimension " + std::to_string(dim));
  std::vector<WedgeIndex> out;
  WedgeIndex cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == dim - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

KMatrix compound_serial(const KMatrix& m, int k) {
  check_compound_args(m.rows(), m.cols(), k);
  std::vector<WedgeIndex> rows = wedge_basis(m.rows(), k);
  std::vector<WedgeIndex> cols = wedge_basis(m.cols(), k);
  KMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.ctx());
  for (size_t p = 0; p < rows.size(); ++p)
    for (size_t q = 0; q < cols.size(); ++q)
      out.at(static_cast<int>(p), static_cast<int>(q)) = det_exact(submatrix(m, rows[p], cols[q]));
  return out;
}

KMatrix compound(const KMatrix& m, int k) {
  check_compound_args(m.rows(), m.cols(), k);
  std::vector<WedgeIndex> rows = wedge_basis(m.rows(), k);
  std::vector<WedgeIndex> cols = wedge_basis(m.cols(), k);
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  KMatrix out(nr, nc, m.ctx());
  // Minors are independent; any schedule gives identical results.
#pragma omp parallel for schedule(dynamic, 16)
  for (long long idx = 0; idx < static_cast<long long>(nr) * nc; ++idx) {
    int p = static_cast<int>(idx / nc);
    int q = static_cast<int>(idx % nc);
    out.at(p, q) = det_exact(submatrix(m, rows[p], cols[q]));
  }
  return out;
}

CMatrix compound_serial(const CMatrix& m, int k) {
  check_compound_args(m.rows(), m.cols(), k);
  std::vector<WedgeIndex> rows = wedge_basis(m.rows(), k);
  std::vector<WedgeIndex> cols = wedge_basis(m.cols(), k);
  CMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t p = 0; p < rows.size(); ++p)
    for (size_t q = 0; q < cols.size(); ++q)
      out.at(static_cast<int>(p), static_cast<int>(q)) = det(submatrix(m, rows[p], cols[q]));
  return out;
}

CMatrix compound(const CMatrix& m, int k) {
  check_compound_args(m.rows(), m.cols(), k);
  std::vector<WedgeIndex> rows = wedge_basis(m.rows(), k);
  std::vector<WedgeIndex> cols = wedge_basis(m.cols(), k);
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  CMatrix out(nr, nc);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long idx = 0; idx < static_cast<long long>(nr) * nc; ++idx) {
    int p = static_cast<int>(idx / nc);
    int q = static_cast<int>(idx % nc);
    out.at(p, q) = det(submatrix(m, rows[p], cols[q]));
  }
  return out;
}

KMatrix exterior_hermitian(const KMatrix& g, int k) {
  require(g.rows() == g.cols(), ErrorCode::BadShape, "form matrix must be square");
  KMatrix c = compound(g, k);
  if (k % 2 == 1) return c;
  return -c;
}

double exact_seq_defect(const ExactSeq& s) {
  if (s.kernel.cols() == 0) return 0.0;
  return max_abs(mul(s.quotient, s.kernel));
}

ExactSeq exterior_sequence(const ExactSeq& s, int k, double tol) {
  require(s.total_dim >= 1, ErrorCode::BadShape, "empty middle space");
  require(s.kernel.rows() == s.total_dim, ErrorCode::BadShape, "kernel rows must match total_dim");
  require(s.quotient.cols() == s.total_dim, ErrorCode::BadShape, "quotient cols must match total_dim");
  require(s.quotient.rows() + s.kernel.cols() == s.total_dim, ErrorCode::BadShape,
          "kernel and quotient dimensions must add up to total_dim");
  require(k >= 1 && k <= s.total_dim, ErrorCode::BadK,
          "exterior order " + std::to_string(k) + " out of range for dimension " + std::to_string(s.total_dim));
  double defect = exact_seq_defect(s);
  require(defect <= tol * std::max(1.0, max_abs(s.kernel)) || s.kernel.cols() == 0, ErrorCode::BadShape,
          "input sequence is not exact (defect " + fmt_double(defect) + ")");

  const int total_k = static_cast<int>(binomial(s.total_dim, k));
  CMatrix kernel_k = (k > s.kernel.cols()) ? CMatrix(total_k, 0) : compound(s.kernel, k);
  CMatrix quotient_k = (kernel_k.cols() == 0) ? CMatrix::identity(total_k) : cokernel_rows(kernel_k, tol);
  return ExactSeq{total_k, std::move(kernel_k), std::move(quotient_k)};
}

Triple exterior_power(const Triple& t, int k, double tol) {
  require(t.gram.rows() == t.r && t.alpha.rows() == t.n && t.alpha.cols() == t.r, ErrorCode::BadShape,
          "malformed triple");
  require(k >= 1 && k <= t.r, ErrorCode::BadK,
          "exterior order " + std::to_string(k) + " out of range for r = " + std::to_string(t.r));

  const FieldContext& ctx = t.ctx;
  const int r = t.r;

  if (t.n != 1 && t.n != r - 1)
    throw Error(ErrorCode::WrongSignatureN,
                "exterior powers are only defined for signature blocks n = 1 or n = r-1, got n = " +
                    std::to_string(t.n));

  // Reduce to the n == 1 shape.
  Triple base = t;
  if (t.n != 1) {
    // n == r-1: pass to the equivalent triple of signature (1, r-1). Requires
    // the exactly normalized gram; the new first basis vector is the old last
    // one and the projection row is conjugated.
    require(t.gram == KMatrix::signature_matrix(t.n, 1, ctx), ErrorCode::WrongSignatureN,
            "flip to n = 1 requires the exactly normalized gram; normalize first");
    double err = max_abs_diff(block(t.alpha, 0, 0, t.n, t.n), CMatrix::identity(t.n));
    require(err <= tol, ErrorCode::NotNormalized,
            "alpha's leading block differs from the identity by " + fmt_double(err));
    CMatrix c = block(t.alpha, 0, t.n, t.n, 1);  // old right column
    CMatrix alpha1(1, r);
    alpha1.at(0, 0) = 1.0;
    for (int i = 0; i < t.n; ++i) alpha1.at(0, 1 + i) = std::conj(c.at(i, 0));
    base = Triple{ctx, 1, r, KMatrix::signature_matrix(1, r - 1, ctx), std::move(alpha1)};
  } else {
    double err = max_abs_diff(block(t.alpha, 0, 0, 1, 1), CMatrix::identity(1));
    require(err <= tol, ErrorCode::NotNormalized,
            "alpha's leading block differs from the identity by " + fmt_double(err));
    require(t.gram == KMatrix::signature_matrix(1, r - 1, ctx), ErrorCode::NotNormalized,
            "gram is not the signature matrix; normalize first");
  }

  if (k == 1) return base;

  CMatrix lambda = kernel_basis(base.alpha, tol);
  if (lambda.cols() != r - 1) throw std::logic_error("kernel of a normalized projection has the wrong dimension");

  // Reorder wedge monomials: those containing index 0 first, lex within each
  // group. On this order the twisted compound of the gram is exactly the
  // signature matrix.
  std::vector<WedgeIndex> monomials = wedge_basis(r, k);
  std::vector<int> order;
  order.reserve(monomials.size());
  for (int pass = 0; pass < 2; ++pass)
    for (size_t i = 0; i < monomials.size(); ++i)
      if ((monomials[i][0] == 0) == (pass == 0)) order.push_back(static_cast<int>(i));

  const int rk = static_cast<int>(monomials.size());
  const int nk = static_cast<int>(binomial(r - 1, k - 1));

  KMatrix gram_k_raw = exterior_hermitian(base.gram, k);
  KMatrix gram_k(rk, rk, ctx);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < rk; ++j) gram_k.at(i, j) = gram_k_raw.at(order[i], order[j]);
  if (gram_k != KMatrix::signature_matrix(nk, rk - nk, ctx))
    throw std::logic_error("twisted exterior gram is not the signature matrix");

  CMatrix alpha_k(0, 0);
  if (k > lambda.cols()) {
    // k == r: the kernel's exterior power vanishes and the quotient is the
    // whole one-dimensional space.
    alpha_k = CMatrix::identity(rk);
  } else {
    CMatrix lambda_k = compound(lambda, k);
    CMatrix reordered(rk, lambda_k.cols());
    for (int i = 0; i < rk; ++i)
      for (int j = 0; j < lambda_k.cols(); ++j) reordered.at(i, j) = lambda_k.at(order[i], j);
    alpha_k = cokernel_rows(reordered, tol);
  }
  if (alpha_k.rows() != nk) throw std::logic_error("cokernel has the wrong dimension");

  return Triple{ctx, nk, rk, std::move(gram_k), std::move(alpha_k)};
}

}  // namespace miqf
