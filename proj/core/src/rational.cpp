#include "paving/rational.hpp"

#include <climits>
#include <stdexcept>

namespace paving {

Rational::Rational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through strings
  // only when the value does not fit a long.
  if (value >= LONG_MIN && value <= LONG_MAX) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    value_ = mpq_class(std::to_string(value));
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("Rational: empty component");
    mpz_class z;
    if (z.set_str(std::string(digits), 10) != 0) {
      throw std::invalid_argument("Rational: malformed integer '" + std::string(digits) + "'");
    }
    return z;
  };
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(x.value_ / y.value_));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& y) {
  value_ += y.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& y) {
  value_ -= y.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& y) {
  value_ *= y.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const int c = cmp(x.value_, y.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational rat_add(const Rational& x, const Rational& y) { return x + y; }
Rational rat_mul(const Rational& x, const Rational& y) { return x * y; }
Rational rat_neg(const Rational& x) { return -x; }

Rational rat_inv(const Rational& x) {
  if (x.is_zero()) throw std::domain_error("rat_inv: inverse of zero");
  return Rational(1) / x;
}

bool is_rational_square(const Rational& x) {
  if (x.sign() < 0) return false;
  return mpz_perfect_square_p(x.raw().get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(x.raw().get_den_mpz_t()) != 0;
}

}  // namespace paving
