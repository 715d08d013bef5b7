#include "miqf/siegel.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace miqf {

namespace {

double unit_interval(std::mt19937_64& eng) {
  // 53 high bits to a double in [0, 1).
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

MembershipResult siegel_contains(const CMatrix& z, double tol) {
  CMatrix gap = CMatrix::identity(z.rows()) - mul(z, conj_transpose(z));
  PosdefResult r = posdef_check(gap, tol);
  return {r.is_posdef, r.min_pivot};
}

double operator_norm_2(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  CMatrix b = (m.rows() <= m.cols()) ? mul(m, conj_transpose(m)) : mul(conj_transpose(m), m);
  const int k = b.rows();
  std::vector<cplx> v(k, cplx(1.0 / std::sqrt(static_cast<double>(k)), 0.0));
  double lam = 0.0;
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<cplx> w(k, 0.0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) w[i] += b.at(i, j) * v[j];
    double nw = 0.0;
    for (const cplx& x : w) nw += std::norm(x);
    nw = std::sqrt(nw);
    if (nw == 0.0) return 0.0;
    for (int i = 0; i < k; ++i) v[i] = w[i] / nw;
    if (iter > 2 && std::abs(nw - lam) <= 1e-15 * std::max(1.0, nw)) {
      lam = nw;
      break;
    }
    lam = nw;
  }
  return std::sqrt(lam);
}

SampleDetail siegel_sample_detail(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw Error(ErrorCode::BadShape, "sample dimensions must be positive");
  std::mt19937_64 eng(seed);
  CMatrix raw(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      double re = unit_interval(eng);
      double im = unit_interval(eng);
      raw.at(i, j) = {re, im};
    }
  double s = operator_norm_2(raw);
  double c = 0.0;
  do {
    c = unit_interval(eng);
  } while (c == 0.0);
  CMatrix z = scale(c / (s + 1.0), raw);
  MembershipResult mem = siegel_contains(z, 0.0);
  if (!mem.member) throw std::logic_error("sampled point failed strict membership");
  return {std::move(raw), s, c, SiegelPoint{std::move(z)}};
}

SiegelPoint siegel_sample(int n, int m, std::uint64_t seed) {
  return siegel_sample_detail(n, m, seed).point;
}

GUElement gu_validate(const KMatrix& gamma, int n, int m) {
  if (n < 0 || m < 0 || n + m < 1) throw Error(ErrorCode::BadShape, "invalid block sizes");
  if (gamma.rows() != gamma.cols() || gamma.rows() != n + m)
    throw Error(ErrorCode::BadShape, "gamma must be " + std::to_string(n + m) + " x " +
                                         std::to_string(n + m) + ", got " + std::to_string(gamma.rows()) +
                                         " x " + std::to_string(gamma.cols()));
  const FieldContext& ctx = gamma.ctx();
  KMatrix t = KMatrix::omega_gram(n, m, ctx);
  KMatrix w = mul(conj_transpose(gamma), mul(t, gamma));
  // T[0][0] = +-sqrt(-delta) is invertible, so the candidate multiplier is
  // pinned by the (0,0) entry.
  KElement mu_k = ctx.div(w.at(0, 0), t.at(0, 0));
  if (!mu_k.is_rational())
    throw Error(ErrorCode::NotSimilitude, "multiplier candidate is not rational");
  if (w != scale(mu_k, t))
    throw Error(ErrorCode::NotSimilitude, "gamma does not scale the form by a single factor");
  if (mu_k.a.sign() <= 0)
    throw Error(ErrorCode::NonPositiveMultiplier, "multiplier " + mu_k.a.str() + " is not positive");
  return {gamma, n, m, mu_k.a};
}

SiegelPoint gu_act(const GUElement& g, const SiegelPoint& p, double tol) {
  if (p.n() != g.n || p.m() != g.m)
    throw Error(ErrorCode::BadShape, "point is " + std::to_string(p.n()) + " x " + std::to_string(p.m()) +
                                         " but gamma splits at (" + std::to_string(g.n) + "," +
                                         std::to_string(g.m) + ")");
  CMatrix ge = embed(g.gamma);
  const int n = g.n, m = g.m;
  CMatrix a = block(ge, 0, 0, n, n);
  CMatrix b = block(ge, 0, n, n, m);
  CMatrix c = block(ge, n, 0, m, n);
  CMatrix d = block(ge, n, n, m, m);
  CMatrix den = mul(c, p.z) + d;
  CMatrix den_inv = invert(den, tol, ErrorCode::SingularDenominator);
  CMatrix w = mul(mul(a, p.z) + b, den_inv);
  MembershipResult mem = siegel_contains(w, tol);
  if (!mem.member)
    throw Error(ErrorCode::LeftDomain,
                "image left the domain (min_pivot " + std::to_string(mem.min_pivot) + ")");
  return SiegelPoint{std::move(w)};
}

}  // namespace miqf
