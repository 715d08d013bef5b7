#include "miqf/field.hpp"

#include <cmath>

namespace miqf {

namespace {

bool square_free(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

FieldContext::FieldContext(long delta) : delta_(delta), delta_q_(delta) {
  if (delta < 1) throw Error(ErrorCode::BadShape, "delta must be >= 1, got " + std::to_string(delta));
  if (!square_free(delta))
    throw Error(ErrorCode::BadShape, "delta must be square-free, got " + std::to_string(delta));
  sqrt_delta_ = std::sqrt(static_cast<double>(delta));
}

KElement FieldContext::div(const KElement& x, const KElement& y) const {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero field element");
  Rational n = norm(y);
  KElement num = mul(x, conj(y));
  return {num.a / n, num.b / n};
}

std::complex<double> FieldContext::embed_signed(const KElement& x, bool flipped) const {
  double im = x.b.to_double() * sqrt_delta_;
  return {x.a.to_double(), flipped ? im : -im};
}

KElement trace_dual_solve(const Rational& at_one, const Rational& at_sqrt, const FieldContext& ctx) {
  // Tr(k*1) = 2a and Tr(k*sqrt(-delta)) = -2*b*delta for k = a + b*sqrt(-delta).
  Rational a = at_one / Rational(2);
  Rational b = -(at_sqrt / (Rational(2) * ctx.delta_q()));
  return {a, b};
}

}  // namespace miqf
