#pragma once

#include <complex>
#include <ostream>
#include <string>

#include "miqf/rational.hpp"

namespace miqf {

/// Element a + b*sqrt(-delta) of an imaginary quadratic field. The delta it
/// belongs to is carried externally by a FieldContext; mixing deltas is the
/// caller's bug and is caught at matrix boundaries.
struct KElement {
  Rational a;  // rational part
  Rational b;  // coefficient of sqrt(-delta)

  KElement() = default;
  KElement(long n) : a(n) {}  // NOLINT: implicit by design
  explicit KElement(Rational ra) : a(std::move(ra)) {}
  KElement(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static KElement sqrt_neg_delta() { return KElement(Rational(0), Rational(1)); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }

  friend bool operator==(const KElement& x, const KElement& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const KElement& x, const KElement& y) { return !(x == y); }

  friend KElement operator+(const KElement& x, const KElement& y) { return {x.a + y.a, x.b + y.b}; }
  friend KElement operator-(const KElement& x, const KElement& y) { return {x.a - y.a, x.b - y.b}; }
  KElement operator-() const { return {-a, -b}; }

  std::string str() const {
    if (b.is_zero()) return a.str();
    std::string s = a.is_zero() ? "" : a.str();
    if (!s.empty() && b.sign() >= 0) s += "+";
    s += b.str() + "*sqrt(-D)";
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const KElement& x) { return os << x.str(); }
};

/// The field Q(sqrt(-delta)) for a fixed square-free delta >= 1, together with
/// the one fixed complex embedding used everywhere downstream.
class FieldContext {
 public:
  explicit FieldContext(long delta);

  long delta() const { return delta_; }
  const Rational& delta_q() const { return delta_q_; }

  friend bool operator==(const FieldContext& x, const FieldContext& y) { return x.delta_ == y.delta_; }
  friend bool operator!=(const FieldContext& x, const FieldContext& y) { return !(x == y); }

  KElement mul(const KElement& x, const KElement& y) const {
    return {x.a * y.a - delta_q_ * (x.b * y.b), x.a * y.b + x.b * y.a};
  }
  KElement div(const KElement& x, const KElement& y) const;

  Rational norm(const KElement& x) const { return x.a * x.a + delta_q_ * (x.b * x.b); }

  /// The fixed embedding into C. The sign of the imaginary part is pinned by
  /// the polarization positivity checks; see embed_signed for the test hook.
  std::complex<double> embed(const KElement& x) const { return embed_signed(x, false); }

  /// Test hook: flipped=true embeds sqrt(-delta) with the opposite imaginary
  /// sign. Only the canonical orientation makes the reconstructed Riemann
  /// form positive definite; a dedicated test asserts the dichotomy.
  std::complex<double> embed_signed(const KElement& x, bool flipped) const;

 private:
  long delta_;
  Rational delta_q_;
  double sqrt_delta_;
};

inline KElement conj(const KElement& x) { return {x.a, -x.b}; }
inline Rational trace(const KElement& x) { return x.a + x.a; }

/// Recovers k from the two values of the Q-linear functional x -> Tr(k*x) on
/// the basis {1, sqrt(-delta)}.
KElement trace_dual_solve(const Rational& at_one, const Rational& at_sqrt, const FieldContext& ctx);

}  // namespace miqf
