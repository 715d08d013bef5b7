#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "miqf/errors.hpp"

namespace miqf {

/// Exact rational number backed by GMP. Always canonical: reduced fraction,
/// positive denominator, zero stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional leading '-' on either part.
  static Rational parse(std::string_view s) {
    if (!looks_like_rational(s))
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(s) + "'");
    mpq_class q(std::string(s), 10);
    if (q.get_den() == 0)
      throw Error(ErrorCode::ParseError, "rational '" + std::string(s) + "' has zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  double to_double() const { return v_.get_d(); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }

  /// True when both numerator and denominator are perfect squares (value >= 0).
  bool is_perfect_square() const {
    if (sgn(v_) < 0) return false;
    return mpz_perfect_square_p(v_.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(v_.get_den().get_mpz_t()) != 0;
  }

  /// Exact square root; caller must have checked is_perfect_square().
  Rational sqrt_exact() const {
    if (!is_perfect_square())
      throw Error(ErrorCode::NotNormalizable, "no exact rational square root of " + str());
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(n, d);
  }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ + y.v_)); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ - y.v_)); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ * y.v_)); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    return Rational(mpq_class(x.v_ / y.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
  Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  static bool looks_like_rational(std::string_view s) {
    auto digits = [](std::string_view t) {
      if (t.empty()) return false;
      if (t.front() == '-') t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return digits(s);
    return digits(s.substr(0, slash)) && digits(s.substr(slash + 1));
  }

  mpq_class v_;
};

}  // namespace miqf
