#include "miqf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace miqf {

namespace {

void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

// Basis change x_i <-> x_q on a Hermitian grid: swap rows and columns, and the
// matching columns of the accumulated transform.
void swap_basis(KMatrix& a, KMatrix& p, int i, int q) {
  if (i == q) return;
  for (int j = 0; j < a.cols(); ++j) std::swap(a.at(i, j), a.at(q, j));
  for (int j = 0; j < a.rows(); ++j) std::swap(a.at(j, i), a.at(j, q));
  for (int j = 0; j < p.rows(); ++j) std::swap(p.at(j, i), p.at(j, q));
}

// Basis change x_i <- x_i + k * x_j (i != j).
void shear_basis(KMatrix& a, KMatrix& p, int i, int j, const KElement& k) {
  const FieldContext& ctx = a.ctx();
  KElement kc = conj(k);
  for (int m = 0; m < a.cols(); ++m) a.at(i, m) = a.at(i, m) + ctx.mul(k, a.at(j, m));
  for (int m = 0; m < a.rows(); ++m) a.at(m, i) = a.at(m, i) + ctx.mul(kc, a.at(m, j));
  for (int m = 0; m < p.rows(); ++m) p.at(m, i) = p.at(m, i) + ctx.mul(k, p.at(m, j));
}

struct Rref {
  CMatrix r;
  std::vector<std::pair<int, int>> pivots;  // (row, col)
};

Rref rref(const CMatrix& m, double tol) {
  Rref out{m, {}};
  CMatrix& r = out.r;
  int row = 0;
  for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
    int best = -1;
    double best_mag = tol;
    for (int i = row; i < r.rows(); ++i) {
      double mag = std::abs(r.at(i, col));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(row, j), r.at(best, j));
    cplx piv = r.at(row, col);
    for (int j = 0; j < r.cols(); ++j) r.at(row, j) /= piv;
    r.at(row, col) = 1.0;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      cplx f = r.at(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < r.cols(); ++j) r.at(i, j) -= f * r.at(row, j);
      r.at(i, col) = 0.0;
    }
    out.pivots.emplace_back(row, col);
    ++row;
  }
  return out;
}

}  // namespace

Diagonalization congruence_diagonalize(const KMatrix& g) {
  require(g.rows() == g.cols(), ErrorCode::BadShape, "signature of a non-square matrix");
  require(is_hermitian(g), ErrorCode::NotHermitian, "matrix is not equal to its conjugate transpose");
  const int r = g.rows();
  const FieldContext& ctx = g.ctx();
  KMatrix a = g;
  KMatrix p = KMatrix::identity(r, ctx);
  std::vector<Rational> diag;
  for (int step = 0; step < r; ++step) {
    if (a.at(step, step).is_zero()) {
      int q = -1;
      for (int i = step + 1; i < r; ++i)
        if (!a.at(i, i).is_zero()) {
          q = i;
          break;
        }
      if (q >= 0) {
        swap_basis(a, p, step, q);
      } else {
        // All remaining diagonal entries vanish; a nonzero off-diagonal
        // g = x + y*sqrt(-delta) gives a new diagonal entry 2x (shear by 1)
        // or 2*y*delta (shear by sqrt(-delta)).
        int fi = -1, fj = -1;
        for (int i = step; i < r && fi < 0; ++i)
          for (int j = i + 1; j < r; ++j)
            if (!a.at(i, j).is_zero()) {
              fi = i;
              fj = j;
              break;
            }
        if (fi < 0) break;  // remaining block is exactly zero
        const KElement& off = a.at(fi, fj);
        KElement k = off.a.is_zero() ? KElement::sqrt_neg_delta() : KElement(1);
        shear_basis(a, p, fi, fj, k);
        swap_basis(a, p, step, fi);
      }
    }
    const KElement& d = a.at(step, step);
    require(d.is_rational(), ErrorCode::NotHermitian, "diagonal entry is not rational");
    Rational dv = d.a;
    for (int j = step + 1; j < r; ++j) {
      const KElement& e = a.at(j, step);
      if (e.is_zero()) continue;
      KElement c{e.a / dv, e.b / dv};
      shear_basis(a, p, j, step, -c);
    }
    diag.push_back(dv);
  }
  return {std::move(diag), std::move(p)};
}

Signature hermitian_signature_exact(const KMatrix& g) {
  Diagonalization d = congruence_diagonalize(g);
  Signature s;
  for (const Rational& v : d.diag) (v.sign() > 0 ? s.plus : s.minus)++;
  s.zero = g.rows() - static_cast<int>(d.diag.size());
  return s;
}

KMatrix gram_normalize(const KMatrix& g, int n) {
  require(g.rows() == g.cols(), ErrorCode::BadShape, "gram matrix must be square");
  require(n >= 0 && n <= g.rows(), ErrorCode::BadShape, "block size out of range");
  const int r = g.rows();
  const int m = r - n;
  KMatrix target = KMatrix::signature_matrix(n, m, g.ctx());
  if (g == target) return KMatrix::identity(r, g.ctx());

  Diagonalization d = congruence_diagonalize(g);
  Signature s;
  for (const Rational& v : d.diag) (v.sign() > 0 ? s.plus : s.minus)++;
  s.zero = r - static_cast<int>(d.diag.size());
  if (s.plus != n || s.minus != m || s.zero != 0) {
    throw Error(ErrorCode::WrongSignature, "signature is (" + std::to_string(s.plus) + "," +
                                               std::to_string(s.minus) + "," + std::to_string(s.zero) +
                                               "), expected (" + std::to_string(n) + "," + std::to_string(m) +
                                               ",0)");
  }

  // Scale each basis vector by 1/sqrt(|d_i|); only exact square roots allowed.
  KMatrix p = d.p;
  for (int i = 0; i < r; ++i) {
    Rational ad = d.diag[i].abs();
    if (!ad.is_perfect_square())
      throw Error(ErrorCode::NotNormalizable,
                  "diagonal entry " + d.diag[i].str() + " is not a square times a sign");
    Rational inv = Rational(1) / ad.sqrt_exact();
    for (int j = 0; j < r; ++j) {
      KElement& e = p.at(j, i);
      e = KElement{e.a * inv, e.b * inv};
    }
  }

  // Stable reorder: +1 columns first, each group keeping pivot order.
  KMatrix q(r, r, g.ctx());
  int outcol = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < r; ++i) {
      if ((pass == 0) != (d.diag[i].sign() > 0)) continue;
      for (int j = 0; j < r; ++j) q.at(j, outcol) = p.at(j, i);
      ++outcol;
    }
  }

  // Forms are linear in the first slot: the grid on q's columns is q^t g conj(q).
  if (mul(transpose(q), mul(g, conj(q))) != target)
    throw Error(ErrorCode::NotNormalizable, "normalization did not reach the signature matrix");
  return q;
}

PosdefResult posdef_check(const CMatrix& m, double tol) {
  require(m.rows() == m.cols(), ErrorCode::BadShape, "positive definiteness of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return {true, std::numeric_limits<double>::infinity()};
  double herm_err = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) herm_err = std::max(herm_err, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
  if (herm_err > tol)
    throw Error(ErrorCode::NotHermitian,
                "matrix deviates from Hermitian by " + std::to_string(herm_err));

  // Work on the exact Hermitian part so pivots are real by construction.
  CMatrix a = m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));

  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (int step = 0; step < n; ++step) {
    int best_pos = 0;
    for (size_t t = 1; t < live.size(); ++t)
      if (a.at(live[t], live[t]).real() > a.at(live[best_pos], live[best_pos]).real()) best_pos = static_cast<int>(t);
    int piv = live[best_pos];
    double pv = a.at(piv, piv).real();
    if (pv <= tol) return {false, pv};
    min_pivot = std::min(min_pivot, pv);
    live.erase(live.begin() + best_pos);
    for (int i : live)
      for (int j : live) a.at(i, j) -= a.at(i, piv) * std::conj(a.at(j, piv)) / pv;
  }
  return {true, min_pivot};
}

CMatrix kernel_basis(const CMatrix& m, double tol) {
  Rref rr = rref(m, tol);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto& [prow, pcol] : rr.pivots) is_pivot[pcol] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  CMatrix basis(cols, static_cast<int>(free_cols.size()));
  for (size_t idx = 0; idx < free_cols.size(); ++idx) {
    basis.at(free_cols[idx], static_cast<int>(idx)) = 1.0;
    for (auto& [prow, pcol] : rr.pivots) basis.at(pcol, static_cast<int>(idx)) = -rr.r.at(prow, free_cols[idx]);
  }
  return basis;
}

int numeric_rank(const CMatrix& m, double tol) { return static_cast<int>(rref(m, tol).pivots.size()); }

CMatrix solve(const CMatrix& a, const CMatrix& b, double tol, ErrorCode on_singular) {
  require(a.rows() == a.cols(), ErrorCode::BadShape, "solve requires a square matrix");
  require(a.rows() == b.rows(), ErrorCode::BadShape, "right-hand side row mismatch");
  const int n = a.rows();
  const double thresh = tol * std::max(1.0, max_abs(a));
  CMatrix w = hcat(a, b);
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(w.at(i, col)) > std::abs(w.at(best, col))) best = i;
    if (std::abs(w.at(best, col)) <= thresh)
      throw Error(on_singular, "matrix is singular within tolerance (pivot " +
                                   std::to_string(std::abs(w.at(best, col))) + ")");
    if (best != col)
      for (int j = 0; j < w.cols(); ++j) std::swap(w.at(col, j), w.at(best, j));
    cplx piv = w.at(col, col);
    for (int j = col; j < w.cols(); ++j) w.at(col, j) /= piv;
    w.at(col, col) = 1.0;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      cplx f = w.at(i, col);
      if (f == 0.0) continue;
      for (int j = col; j < w.cols(); ++j) w.at(i, j) -= f * w.at(col, j);
      w.at(i, col) = 0.0;
    }
  }
  return block(w, 0, n, n, b.cols());
}

CMatrix invert(const CMatrix& a, double tol, ErrorCode on_singular) {
  return solve(a, CMatrix::identity(a.rows()), tol, on_singular);
}

KElement det_exact(const KMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::BadShape, "determinant of a non-square matrix");
  const int n = m.rows();
  const FieldContext& ctx = m.ctx();
  KMatrix a = m;
  bool negate = false;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return KElement(0);
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(a.at(col, j), a.at(piv, j));
      negate = !negate;
    }
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      KElement f = ctx.div(a.at(i, col), a.at(col, col));
      for (int j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - ctx.mul(f, a.at(col, j));
      a.at(i, col) = KElement(0);
    }
  }
  KElement d(1);
  for (int i = 0; i < n; ++i) d = ctx.mul(d, a.at(i, i));
  return negate ? -d : d;
}

cplx det(const CMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::BadShape, "determinant of a non-square matrix");
  const int n = m.rows();
  CMatrix a = m;
  cplx d = 1.0;
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(a.at(i, col)) > std::abs(a.at(best, col))) best = i;
    if (a.at(best, col) == 0.0) return 0.0;
    if (best != col) {
      for (int j = col; j < n; ++j) std::swap(a.at(col, j), a.at(best, j));
      d = -d;
    }
    d *= a.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      cplx f = a.at(i, col) / a.at(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

Rational det_rational(const std::vector<Rational>& m, int dim) {
  require(static_cast<int>(m.size()) == dim * dim, ErrorCode::BadShape, "determinant data size mismatch");
  std::vector<Rational> a = m;
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<size_t>(i) * dim + j]; };
  bool negate = false;
  for (int col = 0; col < dim; ++col) {
    int piv = -1;
    for (int i = col; i < dim; ++i)
      if (!at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int j = col; j < dim; ++j) std::swap(at(col, j), at(piv, j));
      negate = !negate;
    }
    for (int i = col + 1; i < dim; ++i) {
      if (at(i, col).is_zero()) continue;
      Rational f = at(i, col) / at(col, col);
      for (int j = col; j < dim; ++j) at(i, j) -= f * at(col, j);
    }
  }
  Rational d(1);
  for (int i = 0; i < dim; ++i) d *= at(i, i);
  return negate ? -d : d;
}

CMatrix restrict_hermitian(const CMatrix& g, const CMatrix& basis) {
  require(g.rows() == g.cols() && g.rows() == basis.rows(), ErrorCode::BadShape,
          "basis rows must match form dimension");
  return mul(transpose(basis), mul(g, conj(basis)));
}

KMatrix restrict_hermitian(const KMatrix& g, const KMatrix& basis) {
  require(g.rows() == g.cols() && g.rows() == basis.rows(), ErrorCode::BadShape,
          "basis rows must match form dimension");
  return mul(transpose(basis), mul(g, conj(basis)));
}

}  // namespace miqf
