// Shared test utilities: seeded generators with platform-independent draws,
// naive oracles implemented independently of the library code paths, and
// exact similitude factories.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "miqf/exterior.hpp"

namespace testutil {

using miqf::cplx;
using miqf::CMatrix;
using miqf::FieldContext;
using miqf::KElement;
using miqf::KMatrix;
using miqf::Rational;

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next() { return eng(); }
  // Avoids std::uniform_int_distribution, whose output is implementation-defined.
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  Rational rational(long max_num = 9, long max_den = 5) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }
  Rational rational_nonzero(long max_num = 9, long max_den = 5) {
    while (true) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }
  KElement kelement(long max_num = 9, long max_den = 5) {
    return {rational(max_num, max_den), rational(max_num, max_den)};
  }
  KElement kelement_nonzero(long max_num = 9, long max_den = 5) {
    while (true) {
      KElement k = kelement(max_num, max_den);
      if (!k.is_zero()) return k;
    }
  }

  KMatrix kmatrix(int rows, int cols, const FieldContext& ctx, long max_num = 5, long max_den = 3) {
    KMatrix m(rows, cols, ctx);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = kelement(max_num, max_den);
    return m;
  }

  KMatrix kmatrix_hermitian(int n, const FieldContext& ctx, long max_num = 5, long max_den = 3) {
    KMatrix m(n, n, ctx);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = KElement(rational(max_num, max_den));
      for (int j = i + 1; j < n; ++j) {
        m.at(i, j) = kelement(max_num, max_den);
        m.at(j, i) = miqf::conj(m.at(i, j));
      }
    }
    return m;
  }

  KMatrix kmatrix_invertible(int n, const FieldContext& ctx) {
    while (true) {
      KMatrix m = kmatrix(n, n, ctx, 3, 2);
      if (!miqf::det_exact(m).is_zero()) return m;
    }
  }

  /// Rational diagonal times unipotent upper triangular. Conjugating a
  /// diagonal form by this keeps every congruence pivot a square times a
  /// sign (leading minors pick up norm factors, and norms of rational
  /// diagonals are squares), so entry-wise scaling can renormalize it.
  KMatrix kmatrix_scramble(int n, const FieldContext& ctx) {
    KMatrix m(n, n, ctx);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = KElement(rational_nonzero(5, 3));
      for (int j = i + 1; j < n; ++j) m.at(i, j) = kelement(3, 2);
    }
    return m;
  }

  CMatrix cmatrix(int rows, int cols, double lo = -1.0, double hi = 1.0) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        double re = lo + (hi - lo) * unit();
        double im = lo + (hi - lo) * unit();
        m.at(i, j) = {re, im};
      }
    return m;
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[static_cast<int>(range(0, i))]);
    return p;
  }
};

// Leibniz determinant, deliberately independent of the elimination code.
inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

inline KElement naive_det(const KMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  KElement acc(0);
  do {
    KElement term(permutation_sign(perm));
    for (int i = 0; i < n; ++i) term = m.ctx().mul(term, m.at(i, perm[i]));
    acc = acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

inline cplx naive_det(const CMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  cplx acc = 0.0;
  do {
    cplx term = static_cast<double>(permutation_sign(perm));
    for (int i = 0; i < n; ++i) term *= m.at(i, perm[i]);
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

template <typename Matrix>
Matrix naive_compound(const Matrix& m, int k) {
  auto rows = miqf::wedge_basis(m.rows(), k);
  auto cols = miqf::wedge_basis(m.cols(), k);
  auto sub = [&](const miqf::WedgeIndex& ri, const miqf::WedgeIndex& ci) {
    if constexpr (std::is_same_v<Matrix, KMatrix>) {
      Matrix s(k, k, m.ctx());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) s.at(i, j) = m.at(ri[i], ci[j]);
      return s;
    } else {
      Matrix s(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) s.at(i, j) = m.at(ri[i], ci[j]);
      return s;
    }
  };
  if constexpr (std::is_same_v<Matrix, KMatrix>) {
    Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.ctx());
    for (size_t p = 0; p < rows.size(); ++p)
      for (size_t q = 0; q < cols.size(); ++q)
        out.at(static_cast<int>(p), static_cast<int>(q)) = naive_det(sub(rows[p], cols[q]));
    return out;
  } else {
    Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t p = 0; p < rows.size(); ++p)
      for (size_t q = 0; q < cols.size(); ++q)
        out.at(static_cast<int>(p), static_cast<int>(q)) = naive_det(sub(rows[p], cols[q]));
    return out;
  }
}

/// Complex Jacobi eigenvalue sweep for Hermitian matrices. Independent
/// numeric oracle for signatures.
inline std::vector<double> jacobi_eigenvalues(const CMatrix& input) {
  CMatrix a = input;
  const int n = a.rows();
  double scale = std::max(1.0, miqf::max_abs(a));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a.at(p, q)));
    if (off <= 1e-14 * scale) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        cplx g = a.at(p, q);
        double mag = std::abs(g);
        if (mag <= 1e-16 * scale) continue;
        cplx phase = g / mag;
        double alpha = a.at(p, p).real();
        double beta = a.at(q, q).real();
        double tau = (beta - alpha) / (2.0 * mag);
        double sgn = tau >= 0.0 ? 1.0 : -1.0;
        double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        // Unitary rotation U = [[c, s e^{i phi}], [-s e^{-i phi}, c]] applied
        // as U^H A U; this sign convention is the one the t above annihilates.
        for (int i = 0; i < n; ++i) {
          cplx aip = a.at(i, p), aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * std::conj(phase) * aiq;
          a.at(i, q) = s * phase * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          cplx apj = a.at(p, j), aqj = a.at(q, j);
          a.at(p, j) = c * apj - s * phase * aqj;
          a.at(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a.at(i, i).real();
  return eig;
}

inline miqf::Signature numeric_signature(const CMatrix& m, double tol) {
  miqf::Signature s;
  for (double e : jacobi_eigenvalues(m)) {
    if (e > tol)
      ++s.plus;
    else if (e < -tol)
      ++s.minus;
    else
      ++s.zero;
  }
  return s;
}

// Exact similitudes of the split form: building blocks with rational
// multipliers, composable into arbitrary words.

inline KMatrix gu_scalar(const FieldContext& ctx, int n, int m, const KElement& u) {
  KMatrix g = KMatrix::identity(n + m, ctx);
  for (int i = 0; i < n + m; ++i) g.at(i, i) = u;
  return g;
}

/// diag(k_i / conj(k_i)): norm-one entries, multiplier 1.
inline KMatrix gu_unit_diag(const FieldContext& ctx, int n, int m, const std::vector<KElement>& ks) {
  KMatrix g = KMatrix::identity(n + m, ctx);
  for (int i = 0; i < n + m && i < static_cast<int>(ks.size()); ++i)
    g.at(i, i) = ctx.div(ks[i], miqf::conj(ks[i]));
  return g;
}

/// Permutations inside each sign block preserve the form, multiplier 1.
inline KMatrix gu_block_perm(const FieldContext& ctx, int n, int m, const std::vector<int>& perm_plus,
                             const std::vector<int>& perm_minus) {
  KMatrix g(n + m, n + m, ctx);
  for (int i = 0; i < n; ++i) g.at(perm_plus[i], i) = KElement(1);
  for (int i = 0; i < m; ++i) g.at(n + perm_minus[i], n + i) = KElement(1);
  return g;
}

/// Rational hyperbolic rotation on a mixed coordinate pair (i < n <= j):
/// [[a, b], [b, a]] with a^2 - b^2 = 1, parametrized by t > 0.
inline KMatrix gu_hyperbolic(const FieldContext& ctx, int n, int m, int i, int j, const Rational& t) {
  Rational a = (t * t + Rational(1)) / (Rational(2) * t);
  Rational b = (t * t - Rational(1)) / (Rational(2) * t);
  KMatrix g = KMatrix::identity(n + m, ctx);
  g.at(i, i) = KElement(a);
  g.at(i, j) = KElement(b);
  g.at(j, i) = KElement(b);
  g.at(j, j) = KElement(a);
  return g;
}

/// Random word of 1..4 exact generators; always a valid similitude with a
/// positive rational multiplier.
inline KMatrix random_similitude(Rng& rng, const FieldContext& ctx, int n, int m) {
  const int r = n + m;
  KMatrix g = KMatrix::identity(r, ctx);
  int words = static_cast<int>(rng.range(1, 4));
  for (int w = 0; w < words; ++w) {
    switch (rng.range(0, 3)) {
      case 0:
        g = miqf::mul(g, gu_scalar(ctx, n, m, rng.kelement_nonzero(3, 2)));
        break;
      case 1: {
        std::vector<KElement> ks;
        for (int i = 0; i < r; ++i) ks.push_back(rng.kelement_nonzero(3, 1));
        g = miqf::mul(g, gu_unit_diag(ctx, n, m, ks));
        break;
      }
      case 2:
        g = miqf::mul(g, gu_block_perm(ctx, n, m, rng.permutation(n), rng.permutation(m)));
        break;
      default: {
        int i = static_cast<int>(rng.range(0, n - 1));
        int j = n + static_cast<int>(rng.range(0, m - 1));
        Rational t(rng.range(1, 5), rng.range(1, 3));
        g = miqf::mul(g, gu_hyperbolic(ctx, n, m, i, j, t));
        break;
      }
    }
  }
  return g;
}

}  // namespace testutil
