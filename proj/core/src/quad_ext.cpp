#include "paving/quad_ext.hpp"

#include <cmath>
#include <stdexcept>

namespace paving {
namespace {

void require_same_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.rho() != y.rho()) {
    throw std::invalid_argument("QuadExt: mismatched radicands " + x.rho().to_string() + " and " +
                                y.rho().to_string());
  }
}

}  // namespace

QuadExt::QuadExt(Rational a, Rational b, Rational rho) : a_(std::move(a)), b_(std::move(b)), rho_(std::move(rho)) {
  if (rho_.sign() < 0) throw std::invalid_argument("QuadExt: negative radicand " + rho_.to_string());
}

double QuadExt::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(rho_.to_double()); }

std::string QuadExt::to_string() const {
  return a_.to_string() + " + " + b_.to_string() + "*sqrt(" + rho_.to_string() + ")";
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  require_same_radicand(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, x.rho_};
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  require_same_radicand(x, y);
  return {x.a_ - y.a_, x.b_ - y.b_, x.rho_};
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  require_same_radicand(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * x.rho_, x.a_ * y.b_ + y.a_ * x.b_, x.rho_};
}

QuadExt QuadExt::operator-() const { return {-a_, -b_, rho_}; }

bool operator==(const QuadExt& x, const QuadExt& y) {
  require_same_radicand(x, y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }

int quad_sign(const QuadExt& x) {
  const int sa = x.a().sign();
  const int sb = x.rho().is_zero() ? 0 : x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Mixed signs: |a| versus |b|·√rho, decided by squaring.
  const Rational lhs = x.a() * x.a();
  const Rational rhs = x.b() * x.b() * x.rho();
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

int quad_compare(const QuadExt& x, const QuadExt& y) { return quad_sign(x - y); }

}  // namespace paving
