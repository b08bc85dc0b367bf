#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "paving/linalg.hpp"

namespace paving {
namespace {

constexpr std::uint32_t kFrameStream = 1;
constexpr std::uint32_t kVectorStream = 2;
constexpr std::uint32_t kMaxAttempts = 64;

// Uniform in (0, 1]: 53 random mantissa bits, shifted away from zero so the
// logarithm in Box-Muller is finite.
double unit_open_closed(std::mt19937_64& engine) {
  return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

std::vector<double> gaussian_draws(std::size_t count, std::uint64_t seed, std::uint32_t stream,
                                   std::uint32_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32), stream,
                    attempt};
  std::mt19937_64 engine(seq);
  std::vector<double> out;
  out.reserve(count + 1);
  while (out.size() < count) {
    const double u1 = unit_open_closed(engine);
    const double u2 = unit_open_closed(engine);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    out.push_back(radius * std::cos(angle));
    out.push_back(radius * std::sin(angle));
  }
  out.resize(count);
  return out;
}

Projection random_projection(std::size_t n, std::size_t r, std::uint64_t seed) {
  if (r > n) throw std::invalid_argument("random_projection: rank exceeds dimension");

  for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<double> rows = gaussian_draws(r * n, seed, kFrameStream, attempt);
    bool deficient = false;
    for (std::size_t k = 0; k < r && !deficient; ++k) {
      std::span<double> v(rows.data() + k * n, n);
      const double original = std::sqrt(dot(v, v));
      // Two passes of modified Gram-Schmidt against the accepted rows.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < k; ++j) {
          std::span<const double> u(rows.data() + j * n, n);
          const double c = dot(u, v);
          for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
        }
      }
      const double len = std::sqrt(dot(v, v));
      if (!(len > 1e-8 * original)) {
        deficient = true;
        break;
      }
      for (double& x : v) x /= len;
    }
    if (!deficient) return Projection(OrthonormalFrame(r, n, std::move(rows)));
  }
  throw std::runtime_error("random_projection: repeated rank deficiency");
}

Vector random_unit_vector(std::size_t n, std::uint64_t seed) {
  for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Vector v(gaussian_draws(n, seed, kVectorStream, attempt));
    const double len = v.norm();
    if (len > 0.0) {
      for (auto& x : v.coords()) x /= len;
      return v;
    }
  }
  throw std::runtime_error("random_unit_vector: could not draw a nonzero vector");
}

}  // namespace paving
