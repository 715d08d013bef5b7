#pragma once

#include <string>
#include <vector>

#include "miqf/siegel.hpp"

namespace miqf {

/// The standard alternating Q-valued form on the rational span of the basis
/// (x_1..x_r, sqrt(-delta)x_1..sqrt(-delta)x_r), stored as an exact 2r x 2r
/// grid. Index I < r means x_{I+1}, index I >= r means sqrt(-delta)x_{I-r+1}.
class OmegaForm {
 public:
  explicit OmegaForm(int r) : r_(r), grid_(static_cast<size_t>(4) * r * r) {}

  int r() const { return r_; }
  int dim() const { return 2 * r_; }

  const Rational& at(int i, int j) const { return grid_[static_cast<size_t>(i) * dim() + j]; }
  Rational& at(int i, int j) { return grid_[static_cast<size_t>(i) * dim() + j]; }
  const std::vector<Rational>& grid() const { return grid_; }

  bool is_alternating() const;
  /// Exact rational determinant test.
  bool is_nondegenerate() const;

 private:
  int r_;
  std::vector<Rational> grid_;
};

/// Omega on the standard basis for the split form of signature (n, r-n):
/// Omega(k1 x_i, k2 x_j) = Tr(k1 T_ij conj(k2)) with T = omega_gram(n, r-n).
OmegaForm standard_omega(const FieldContext& ctx, int n, int r);

/// Domain-side object: a point of the matrix ball together with the exact
/// multiplication data it induces (T, the coordinate matrix Y, and the
/// rational grid of the polarization form).
struct Variety {
  FieldContext ctx;
  int n;
  int r;
  SiegelPoint point;
  KMatrix t;      // sqrt(-delta) * signature matrix; conj_transpose(t) == -t
  CMatrix y;      // rows are lattice basis vectors in eigen-coordinates
  OmegaForm omega;
};

/// Algebra-side object: Hermitian K-form plus a surjective complex map whose
/// kernel the form is negative definite on (checked, not assumed).
struct Triple {
  FieldContext ctx;
  int n;
  int r;
  KMatrix gram;    // r x r over K
  CMatrix alpha;   // n x r
};

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckEntry> checks;

  bool all_pass() const {
    for (const CheckEntry& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Marker for coordinates transported into the conjugated copy of a space:
/// the transport is antilinear, so scalars act through their conjugate.
struct ConjSpace {
  static CMatrix transport(const CMatrix& coords) { return conj(coords); }
  static CMatrix scale_in(cplx k, const CMatrix& transported) { return scale(std::conj(k), transported); }
};

Variety variety_build(long delta, int n, int r, const CMatrix& z, double tol);

/// Omega evaluated on K-multiples of basis vectors: Tr(k1 t_ij conj(k2)).
Rational omega_pair(const Variety& v, const KElement& k1, int i, const KElement& k2, int j);

/// Scalar action on split coordinates: the first n coordinates move by
/// embed(k), the remaining ones by conj(embed(k)). v has r rows.
CMatrix star_act(const FieldContext& ctx, int n, const KElement& k, const CMatrix& v);

Triple variety_to_triple(const Variety& v);

/// Recovers the Hermitian K-matrix h with grid == Tr(k1 sqrt(-delta) h_ij conj(k2))
/// from an alternating grid; InconsistentOmega when no such h reproduces it.
KMatrix h_from_omega(const OmegaForm& omega, const FieldContext& ctx);

/// Kernel of alpha for a normalized triple (alpha = [E_n | z] within tol).
CMatrix ker_alpha_basis(const Triple& t, double tol);

/// Gram matrix of the kernel basis under gram (normalized triples only).
CMatrix ker_gram(const Triple& t, double tol);

struct MuResult {
  CMatrix mu;          // r x n complement basis, orthogonal to the kernel
  double max_pairing;  // largest |H(lambda_i, mu_j)|
  bool spans;          // rank [kernel | mu] == r
};

MuResult mu_basis(const Triple& t, double tol);

/// Report entries, in order: hermitian, signature, normalizable, surjective,
/// kernel_posdef. Failures are entries, not exceptions.
ValidationReport validate_triple(const Triple& t, double tol);

/// Gram normalization plus target-space change of basis, yielding gram ==
/// signature matrix exactly and alpha == [E_n | z].
Triple normalize_triple(const Triple& t, double tol);

struct RiemannCertificate {
  CMatrix h;            // reconstructed form on the split coordinates
  double herm_err = 0;  // deviation of h from Hermitian
  bool posdef = false;
  double min_pivot = 0;
};

/// Builds the period matrix of the normalized triple, pulls the exact lattice
/// form through it, and reads off the induced Hermitian form; positive
/// definiteness of the result is the Riemann positivity condition.
RiemannCertificate riemann_certificate(const Triple& normalized, double tol);

namespace detail {
/// Test hook: same computation under the flipped embedding orientation.
RiemannCertificate riemann_certificate_signed(const Triple& normalized, double tol, bool flipped);
}  // namespace detail

Variety triple_to_variety(const Triple& t, double tol);

/// Full report for a triple: validate_triple entries plus in_domain and
/// riemann_positive obtained through normalization.
ValidationReport verify_triple_report(const Triple& t, double tol);

/// Full report for domain-side data: in_domain, t_antihermitian, t_signature,
/// omega_alternating, omega_nondegenerate, h_recovery, riemann_positive.
ValidationReport verify_variety_report(long delta, int n, int r, const CMatrix& z, double tol);

std::string fmt_double(double v);

}  // namespace miqf
