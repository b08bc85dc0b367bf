#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace paving {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Backed by GMP so there is no overflow at any size.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
  /// and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  double to_double() const { return value_.get_d(); }

  /// Always "numerator/denominator", e.g. "2/49", "1/1", "-3/4", "0/1".
  std::string to_string() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const;

  Rational& operator+=(const Rational& y);
  Rational& operator-=(const Rational& y);
  Rational& operator*=(const Rational& y);

  friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  mpq_class value_{0};
};

Rational rat_add(const Rational& x, const Rational& y);
Rational rat_mul(const Rational& x, const Rational& y);
Rational rat_neg(const Rational& x);
/// Throws std::domain_error when x == 0.
Rational rat_inv(const Rational& x);

/// True iff x = y² for some rational y (x ≥ 0).
bool is_rational_square(const Rational& x);

}  // namespace paving
