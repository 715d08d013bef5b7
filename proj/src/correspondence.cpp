#include "miqf/correspondence.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace miqf {

namespace {

void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

void check_triple_shape(const Triple& t) {
  // n == r is the degenerate top exterior power; maps back to a domain
  // object only for n < r, which variety_build enforces separately.
  require(t.n >= 1 && t.n <= t.r, ErrorCode::BadShape,
          "need 1 <= n <= r, got n=" + std::to_string(t.n) + " r=" + std::to_string(t.r));
  require(t.gram.rows() == t.r && t.gram.cols() == t.r, ErrorCode::BadShape, "gram must be r x r");
  require(t.alpha.rows() == t.n && t.alpha.cols() == t.r, ErrorCode::BadShape, "alpha must be n x r");
  require(t.gram.ctx() == t.ctx, ErrorCode::MixedDelta, "gram carries a different delta");
}

/// alpha's left n x n block must be the identity within tol.
void check_normalized_alpha(const Triple& t, double tol) {
  check_triple_shape(t);
  double err = max_abs_diff(block(t.alpha, 0, 0, t.n, t.n), CMatrix::identity(t.n));
  require(err <= tol, ErrorCode::NotNormalized,
          "alpha's leading block differs from the identity by " + fmt_double(err));
}

void check_normalized_gram(const Triple& t) {
  require(t.gram == KMatrix::signature_matrix(t.n, t.r - t.n, t.ctx), ErrorCode::NotNormalized,
          "gram is not the signature matrix");
}

KElement basis_scalar(int idx, int r) {
  return idx < r ? KElement(1) : KElement::sqrt_neg_delta();
}

}  // namespace

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool OmegaForm::is_alternating() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

bool OmegaForm::is_nondegenerate() const { return !det_rational(grid_, dim()).is_zero(); }

OmegaForm standard_omega(const FieldContext& ctx, int n, int r) {
  KMatrix t = KMatrix::omega_gram(n, r - n, ctx);
  OmegaForm omega(r);
  for (int bi = 0; bi < 2 * r; ++bi) {
    KElement k1 = basis_scalar(bi, r);
    int i = bi % r;
    for (int bj = 0; bj < 2 * r; ++bj) {
      KElement k2 = basis_scalar(bj, r);
      int j = bj % r;
      if (t.at(i, j).is_zero()) continue;
      omega.at(bi, bj) = trace(ctx.mul(ctx.mul(k1, t.at(i, j)), conj(k2)));
    }
  }
  return omega;
}

Variety variety_build(long delta, int n, int r, const CMatrix& z, double tol) {
  FieldContext ctx(delta);
  require(n >= 1 && n < r, ErrorCode::BadShape,
          "need 1 <= n < r, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  const int m = r - n;
  require(z.rows() == n && z.cols() == m, ErrorCode::BadShape,
          "z must be " + std::to_string(n) + " x " + std::to_string(m) + ", got " +
              std::to_string(z.rows()) + " x " + std::to_string(z.cols()));
  MembershipResult mem = siegel_contains(z, tol);
  if (!mem.member)
    throw Error(ErrorCode::NotInDomain, "point outside the domain (min_pivot " + fmt_double(mem.min_pivot) + ")");

  KMatrix t = KMatrix::omega_gram(n, m, ctx);
  if (conj_transpose(t) != -t) throw std::logic_error("t is not skew under conjugate transpose");
  KMatrix herm(r, r, ctx);
  KElement inv_sqrt(Rational(0), Rational(-1) / ctx.delta_q());  // 1/sqrt(-delta)
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) herm.at(i, j) = ctx.mul(t.at(i, j), inv_sqrt);
  Signature sig = hermitian_signature_exact(herm);
  if (!(sig == Signature{n, m, 0})) throw std::logic_error("t has the wrong associated signature");

  CMatrix y(r, r);
  for (int i = 0; i < n; ++i) {
    y.at(i, i) = 1.0;
    for (int j = 0; j < m; ++j) y.at(i, n + j) = z.at(i, j);
  }
  for (int i = 0; i < m; ++i) {
    y.at(n + i, n + i) = 1.0;
    for (int j = 0; j < n; ++j) y.at(n + i, j) = z.at(j, i);  // plain transpose, no conjugate
  }

  OmegaForm omega = standard_omega(ctx, n, r);
  if (!omega.is_alternating()) throw std::logic_error("omega is not alternating");
  if (!omega.is_nondegenerate()) throw std::logic_error("omega is degenerate");

  return Variety{ctx, n, r, SiegelPoint{z}, std::move(t), std::move(y), std::move(omega)};
}

Rational omega_pair(const Variety& v, const KElement& k1, int i, const KElement& k2, int j) {
  require(i >= 0 && i < v.r && j >= 0 && j < v.r, ErrorCode::BadShape, "basis index out of range");
  return trace(v.ctx.mul(v.ctx.mul(k1, v.t.at(i, j)), conj(k2)));
}

CMatrix star_act(const FieldContext& ctx, int n, const KElement& k, const CMatrix& v) {
  require(n >= 0 && n <= v.rows(), ErrorCode::BadShape, "split index out of range");
  cplx top = ctx.embed(k);
  cplx bottom = std::conj(top);
  CMatrix r(v.rows(), v.cols());
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) r.at(i, j) = (i < n ? top : bottom) * v.at(i, j);
  return r;
}

Triple variety_to_triple(const Variety& v) {
  const int m = v.r - v.n;
  KMatrix gram = KMatrix::signature_matrix(v.n, m, v.ctx);
  CMatrix alpha = hcat(CMatrix::identity(v.n), v.point.z);
  Triple t{v.ctx, v.n, v.r, std::move(gram), std::move(alpha)};
  if (!validate_triple(t, 1e-9).all_pass())
    throw std::logic_error("constructed triple failed its own validation");
  return t;
}

KMatrix h_from_omega(const OmegaForm& omega, const FieldContext& ctx) {
  if (!omega.is_alternating())
    throw Error(ErrorCode::InconsistentOmega, "grid is not alternating");
  const int r = omega.r();
  KElement sqrt_nd = KElement::sqrt_neg_delta();
  KMatrix h(r, r, ctx);
  KMatrix t(r, r, ctx);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      t.at(i, j) = trace_dual_solve(omega.at(i, j), omega.at(r + i, j), ctx);
      h.at(i, j) = ctx.div(t.at(i, j), sqrt_nd);
    }
  // The recovered t must reproduce the full grid, all four quadrants.
  for (int bi = 0; bi < 2 * r; ++bi)
    for (int bj = 0; bj < 2 * r; ++bj) {
      Rational expect = trace(ctx.mul(ctx.mul(basis_scalar(bi, r), t.at(bi % r, bj % r)), conj(basis_scalar(bj, r))));
      if (expect != omega.at(bi, bj))
        throw Error(ErrorCode::InconsistentOmega,
                    "grid entry (" + std::to_string(bi) + "," + std::to_string(bj) +
                        ") is not reproduced by any sesquilinear form");
    }
  if (!is_hermitian(h))
    throw Error(ErrorCode::InconsistentOmega, "recovered form is not Hermitian");
  return h;
}

CMatrix ker_alpha_basis(const Triple& t, double tol) {
  check_normalized_alpha(t, tol);
  return kernel_basis(t.alpha, tol);
}

CMatrix ker_gram(const Triple& t, double tol) {
  check_normalized_alpha(t, tol);
  check_normalized_gram(t);
  CMatrix lambda = kernel_basis(t.alpha, tol);
  return restrict_hermitian(embed(t.gram), lambda);
}

MuResult mu_basis(const Triple& t, double tol) {
  check_normalized_alpha(t, tol);
  check_normalized_gram(t);
  const int n = t.n, r = t.r, m = r - n;
  CMatrix z = block(t.alpha, 0, n, n, m);
  CMatrix mu(r, n);
  for (int i = 0; i < n; ++i) {
    mu.at(i, i) = 1.0;
    for (int k = 0; k < m; ++k) mu.at(n + k, i) = -std::conj(z.at(i, k));
  }
  CMatrix lambda = kernel_basis(t.alpha, tol);
  // Cross Gram H(lambda_i, mu_j); exactly zero in exact arithmetic.
  CMatrix cross = mul(transpose(lambda), mul(embed(t.gram), conj(mu)));
  double max_pairing = max_abs(cross);
  bool spans = numeric_rank(hcat(lambda, mu), tol) == r;
  return {std::move(mu), max_pairing, spans};
}

ValidationReport validate_triple(const Triple& t, double tol) {
  check_triple_shape(t);
  ValidationReport rep;
  const int m = t.r - t.n;

  bool herm = is_hermitian(t.gram);
  rep.checks.push_back({"hermitian", herm,
                        herm ? "gram equals its conjugate transpose" : "gram != conj_transpose(gram)"});

  {
    CheckEntry e{"signature", false, ""};
    if (herm) {
      Signature s = hermitian_signature_exact(t.gram);
      e.pass = s == Signature{t.n, m, 0};
      e.detail = "exact signature (" + std::to_string(s.plus) + "," + std::to_string(s.minus) + "," +
                 std::to_string(s.zero) + "), expected (" + std::to_string(t.n) + "," + std::to_string(m) + ",0)";
    } else {
      e.detail = "skipped: gram is not Hermitian";
    }
    rep.checks.push_back(std::move(e));
  }

  {
    CheckEntry e{"normalizable", false, ""};
    if (herm) {
      try {
        gram_normalize(t.gram, t.n);
        e.pass = true;
        e.detail = "exact congruence to the signature matrix found";
      } catch (const Error& err) {
        e.detail = err.what();
      }
    } else {
      e.detail = "skipped: gram is not Hermitian";
    }
    rep.checks.push_back(std::move(e));
  }

  {
    int rank = numeric_rank(t.alpha, tol);
    rep.checks.push_back({"surjective", rank == t.n,
                          "rank " + std::to_string(rank) + " of " + std::to_string(t.n)});
  }

  {
    CheckEntry e{"kernel_posdef", false, ""};
    try {
      CMatrix lambda = kernel_basis(t.alpha, tol);
      if (lambda.cols() == 0) {
        e.pass = true;
        e.detail = "degenerate: zero-dimensional kernel, nothing to check";
      } else {
        CMatrix restr = restrict_hermitian(embed(t.gram), lambda);
        PosdefResult pd = posdef_check(-restr, tol);
        e.pass = pd.is_posdef;
        e.detail = "negated kernel Gram min_pivot " + fmt_double(pd.min_pivot);
      }
    } catch (const Error& err) {
      e.detail = err.what();
    }
    rep.checks.push_back(std::move(e));
  }

  return rep;
}

Triple normalize_triple(const Triple& t, double tol) {
  check_triple_shape(t);
  KMatrix p = gram_normalize(t.gram, t.n);
  CMatrix alpha = mul(t.alpha, embed(p));
  CMatrix s = block(alpha, 0, 0, t.n, t.n);
  // Column permutations inside the sign blocks keep the leading column set,
  // so they can never repair a singular block; fail directly.
  CMatrix z = [&] {
    try {
      return solve(s, block(alpha, 0, t.n, t.n, t.r - t.n), tol, ErrorCode::SingularLeadingBlock);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SingularLeadingBlock)
        throw Error(ErrorCode::SingularLeadingBlock,
                    "left block of alpha is singular after normalization; no in-block column "
                    "permutation can change its span");
      throw;
    }
  }();
  return Triple{t.ctx, t.n, t.r, KMatrix::signature_matrix(t.n, t.r - t.n, t.ctx),
                hcat(CMatrix::identity(t.n), z)};
}

RiemannCertificate riemann_certificate(const Triple& normalized, double tol) {
  return detail::riemann_certificate_signed(normalized, tol, false);
}

namespace detail {

RiemannCertificate riemann_certificate_signed(const Triple& nt, double tol, bool flipped) {
  check_normalized_alpha(nt, tol);
  check_normalized_gram(nt);
  const FieldContext& ctx = nt.ctx;
  const int n = nt.n, r = nt.r, m = r - n;

  CMatrix lambda = kernel_basis(nt.alpha, tol);
  require(lambda.cols() == m, ErrorCode::RiemannCheckFailed,
          "kernel dimension " + std::to_string(lambda.cols()) + ", expected " + std::to_string(m));
  CMatrix mu = mu_basis(nt, tol).mu;

  // Coordinates of each lattice basis vector in the (kernel | complement)
  // frame; the kernel component is the projection the embedding conjugates.
  CMatrix frame = hcat(lambda, mu);
  CMatrix coords = invert(frame, tol, ErrorCode::RiemannCheckFailed);
  CMatrix proj = block(coords, 0, 0, m, r);  // kernel components of x_1..x_r

  CMatrix beta = CMatrix(r, r);
  {
    CMatrix bottom = ConjSpace::transport(proj);
    for (int j = 0; j < r; ++j) {
      for (int i = 0; i < n; ++i) beta.at(i, j) = nt.alpha.at(i, j);
      for (int i = 0; i < m; ++i) beta.at(n + i, j) = bottom.at(i, j);
    }
  }

  // Second half of the period matrix is the scalar action of sqrt(-delta).
  cplx top = ctx.embed_signed(KElement::sqrt_neg_delta(), flipped);
  CMatrix beta2(r, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) beta2.at(i, j) = (i < n ? top : std::conj(top)) * beta.at(i, j);

  CMatrix period_real(2 * r, 2 * r);
  for (int col = 0; col < 2 * r; ++col) {
    const CMatrix& src = col < r ? beta : beta2;
    int j = col % r;
    for (int i = 0; i < r; ++i) {
      period_real.at(i, col) = src.at(i, j).real();
      period_real.at(r + i, col) = src.at(i, j).imag();
    }
  }

  CMatrix pinv = invert(period_real, tol, ErrorCode::RiemannCheckFailed);

  OmegaForm omega = standard_omega(ctx, n, r);
  CMatrix omega_dbl(2 * r, 2 * r);
  for (int i = 0; i < 2 * r; ++i)
    for (int j = 0; j < 2 * r; ++j) omega_dbl.at(i, j) = omega.at(i, j).to_double();

  CMatrix omega_v = mul(transpose(pinv), mul(omega_dbl, pinv));

  RiemannCertificate cert;
  cert.h = CMatrix(r, r);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      cert.h.at(p, q) = cplx(omega_v.at(r + p, q).real(), omega_v.at(p, q).real());

  cert.herm_err = max_abs_diff(cert.h, conj_transpose(cert.h));
  if (cert.herm_err > tol) {
    cert.posdef = false;
    cert.min_pivot = 0.0;
    return cert;
  }
  PosdefResult pd = posdef_check(cert.h, tol);
  cert.posdef = pd.is_posdef;
  cert.min_pivot = pd.min_pivot;
  return cert;
}

}  // namespace detail

Variety triple_to_variety(const Triple& t, double tol) {
  Triple nt = normalize_triple(t, tol);
  const int m = nt.r - nt.n;
  CMatrix z = block(nt.alpha, 0, nt.n, nt.n, m);
  MembershipResult mem = siegel_contains(z, tol);
  if (!mem.member)
    throw Error(ErrorCode::NotInDomain,
                "extracted point outside the domain (min_pivot " + fmt_double(mem.min_pivot) + ")");
  RiemannCertificate cert = riemann_certificate(nt, tol);
  if (cert.herm_err > tol)
    throw Error(ErrorCode::RiemannCheckFailed,
                "induced form deviates from Hermitian by " + fmt_double(cert.herm_err));
  if (!cert.posdef)
    throw Error(ErrorCode::RiemannCheckFailed,
                "induced form is not positive definite (min_pivot " + fmt_double(cert.min_pivot) + ")");
  return variety_build(t.ctx.delta(), nt.n, nt.r, z, tol);
}

ValidationReport verify_triple_report(const Triple& t, double tol) {
  ValidationReport rep = validate_triple(t, tol);

  CheckEntry in_domain{"in_domain", false, ""};
  CheckEntry riemann{"riemann_positive", false, ""};
  try {
    Triple nt = normalize_triple(t, tol);
    CMatrix z = block(nt.alpha, 0, nt.n, nt.n, nt.r - nt.n);
    MembershipResult mem = siegel_contains(z, tol);
    in_domain.pass = mem.member;
    in_domain.detail = "min_pivot " + fmt_double(mem.min_pivot);
    if (mem.member) {
      RiemannCertificate cert = riemann_certificate(nt, tol);
      riemann.pass = cert.posdef && cert.herm_err <= tol;
      riemann.detail = "min_pivot " + fmt_double(cert.min_pivot) + ", hermitian deviation " +
                       fmt_double(cert.herm_err);
    } else {
      riemann.detail = "skipped: point outside domain";
    }
  } catch (const Error& e) {
    in_domain.detail = in_domain.detail.empty() ? e.what() : in_domain.detail;
    riemann.detail = e.what();
  }
  rep.checks.push_back(std::move(in_domain));
  rep.checks.push_back(std::move(riemann));
  return rep;
}

ValidationReport verify_variety_report(long delta, int n, int r, const CMatrix& z, double tol) {
  ValidationReport rep;
  FieldContext ctx(delta);
  require(n >= 1 && n < r, ErrorCode::BadShape, "need 1 <= n < r");
  require(z.rows() == n && z.cols() == r - n, ErrorCode::BadShape, "z shape does not match (n, r)");

  MembershipResult mem = siegel_contains(z, tol);
  rep.checks.push_back({"in_domain", mem.member, "min_pivot " + fmt_double(mem.min_pivot)});
  if (!mem.member) {
    for (const char* name :
         {"t_antihermitian", "t_signature", "omega_alternating", "omega_nondegenerate", "h_recovery",
          "riemann_positive"})
      rep.checks.push_back({name, false, "skipped: point outside domain"});
    return rep;
  }

  Variety v = variety_build(delta, n, r, z, tol);
  rep.checks.push_back({"t_antihermitian", conj_transpose(v.t) == -v.t, "exact check of conj_transpose(t) == -t"});

  KElement inv_sqrt(Rational(0), Rational(-1) / ctx.delta_q());
  KMatrix herm(r, r, ctx);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) herm.at(i, j) = ctx.mul(v.t.at(i, j), inv_sqrt);
  Signature sig = hermitian_signature_exact(herm);
  rep.checks.push_back({"t_signature", sig == Signature{n, r - n, 0},
                        "exact signature (" + std::to_string(sig.plus) + "," + std::to_string(sig.minus) + "," +
                            std::to_string(sig.zero) + ")"});

  rep.checks.push_back({"omega_alternating", v.omega.is_alternating(), "exact antisymmetry of the grid"});
  rep.checks.push_back({"omega_nondegenerate", v.omega.is_nondegenerate(), "exact determinant is nonzero"});

  {
    CheckEntry e{"h_recovery", false, ""};
    try {
      KMatrix h = h_from_omega(v.omega, ctx);
      e.pass = h == KMatrix::signature_matrix(n, r - n, ctx);
      e.detail = e.pass ? "grid round-trips to the signature matrix" : "recovered form differs";
    } catch (const Error& err) {
      e.detail = err.what();
    }
    rep.checks.push_back(std::move(e));
  }

  {
    CheckEntry e{"riemann_positive", false, ""};
    try {
      Triple t = variety_to_triple(v);
      RiemannCertificate cert = riemann_certificate(t, tol);
      e.pass = cert.posdef && cert.herm_err <= tol;
      e.detail = "min_pivot " + fmt_double(cert.min_pivot) + ", hermitian deviation " + fmt_double(cert.herm_err);
    } catch (const Error& err) {
      e.detail = err.what();
    }
    rep.checks.push_back(std::move(e));
  }

  return rep;
}

}  // namespace miqf
