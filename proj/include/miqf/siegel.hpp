#pragma once

#include <cstdint>

#include "miqf/linalg.hpp"

namespace miqf {

/// Point of the matrix ball: an n x m complex matrix z with E_n - z z*
/// positive definite (strictly; the boundary is outside). The struct itself
/// does not enforce membership so that candidate points can be examined.
struct SiegelPoint {
  CMatrix z;

  int n() const { return z.rows(); }
  int m() const { return z.cols(); }
};

struct MembershipResult {
  bool member = false;
  double min_pivot = 0.0;
};

/// Strict membership test: posdef_check(E_n - z z*, tol).
MembershipResult siegel_contains(const CMatrix& z, double tol);

/// Largest singular value via power iteration on the smaller Gram square.
/// Deterministic: fixed start vector, fixed iteration budget.
double operator_norm_2(const CMatrix& m);

struct SampleDetail {
  CMatrix raw;   // entries uniform in [0,1) x [0,1)i, row-major, re then im
  double s = 0;  // largest singular value of raw
  double c = 0;  // shrink factor in (0,1), drawn after the matrix
  SiegelPoint point;
};

/// Seeded interior point: z = c * raw / (s + 1). Same seed, same point.
SiegelPoint siegel_sample(int n, int m, std::uint64_t seed);
SampleDetail siegel_sample_detail(int n, int m, std::uint64_t seed);

/// Validated similitude of the standard split Hermitian form: gamma with
/// conj_transpose(gamma) * T * gamma == multiplier * T exactly, multiplier a
/// positive rational, where T = omega_gram(n, m).
struct GUElement {
  KMatrix gamma;
  int n = 0;
  int m = 0;
  Rational multiplier;
};

GUElement gu_validate(const KMatrix& gamma, int n, int m);

/// Fractional-linear action z -> (A z + B)(C z + D)^{-1}, blocks split at n.
/// The result must land back in the domain (LeftDomain otherwise, which can
/// only happen for hand-built GUElement values or precision loss).
SiegelPoint gu_act(const GUElement& g, const SiegelPoint& p, double tol);

}  // namespace miqf
