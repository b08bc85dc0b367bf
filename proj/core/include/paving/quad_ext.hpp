#pragma once

#include <string>

#include "paving/rational.hpp"

namespace paving {

/// The real number a + b·√rho with rational a, b and radicand rho ≥ 0.
///
/// Each value carries its own radicand; binary operations require equal
/// radicands and throw std::invalid_argument otherwise. Equality is
/// componentwise, which is exact whenever rho is not a rational square.
class QuadExt {
 public:
  QuadExt() = default;
  /// Throws std::invalid_argument if rho < 0.
  QuadExt(Rational a, Rational b, Rational rho);

  static QuadExt rational(Rational a, Rational rho) { return {std::move(a), Rational(0), std::move(rho)}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& rho() const noexcept { return rho_; }

  bool is_rational() const noexcept { return b_.is_zero(); }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  double to_double() const;

  /// "a + b*sqrt(rho)" with each part in "p/q" form.
  std::string to_string() const;

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  QuadExt operator-() const;

  friend bool operator==(const QuadExt& x, const QuadExt& y);

 private:
  Rational a_;
  Rational b_;
  Rational rho_;
};

QuadExt quad_mul(const QuadExt& x, const QuadExt& y);

/// Exact sign of a + b·√rho: -1, 0 or +1.
int quad_sign(const QuadExt& x);

/// Exact three-way comparison via the sign of the difference.
int quad_compare(const QuadExt& x, const QuadExt& y);

}  // namespace paving
