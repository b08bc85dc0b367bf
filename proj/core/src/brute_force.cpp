#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "paving/errors.hpp"
#include "paving/experiments.hpp"

namespace paving::experiments {
namespace {

// The free coordinates 1..n-1 are split into low coordinates (walked in
// Gray-code order inside a block) and up to kPrefixBits high coordinates
// (fixed per block). Block layout depends only on n.
constexpr std::size_t kPrefixBits = 6;

struct Candidate {
  double value = 0.0;
  std::vector<std::int8_t> signs;
  bool set = false;
};

// Replace `best` by (value, signs) if strictly smaller beyond the tie
// tolerance, or tied and lexicographically smaller.
void offer(Candidate& best, double value, const std::vector<std::int8_t>& signs) {
  if (!best.set || value < best.value - kTieTolerance) {
    best.value = value;
    best.signs = signs;
    best.set = true;
  } else if (value <= best.value + kTieTolerance && signs < best.signs) {
    best.value = std::min(best.value, value);
    best.signs = signs;
  }
}

void merge(Candidate& best, const Candidate& other) {
  if (other.set) offer(best, other.value, other.signs);
}

// Evaluates an objective over every sign vector with s[0] = +1.
// `State` maintains an incrementally updated representation of the
// current sign vector and knows how to (re)initialize, flip one
// coordinate, bound from below, and evaluate exactly.
template <typename State>
BruteForceResult enumerate(std::size_t n, const BruteForceOptions& options, const State& prototype) {
  if (n == 0) throw std::invalid_argument("brute force: empty instance");
  if (n > options.max_n) throw CapExceeded(n, options.max_n);

  const std::size_t free_bits = n - 1;
  const std::size_t prefix_bits = std::min(free_bits, kPrefixBits);
  const std::size_t low_bits = free_bits - prefix_bits;
  const std::uint64_t blocks = std::uint64_t{1} << prefix_bits;
  const std::uint64_t steps = std::uint64_t{1} << low_bits;

  std::vector<Candidate> results(blocks);
  std::vector<std::uint64_t> counts(blocks, 0);

  auto run_block = [&](std::uint64_t block) {
    std::vector<std::int8_t> signs(n, 1);
    for (std::size_t t = 0; t < prefix_bits; ++t) {
      if ((block >> t) & 1u) signs[1 + low_bits + t] = -1;
    }
    State state = prototype;
    state.reset(signs);
    Candidate best;
    std::uint64_t visited = 0;
    for (std::uint64_t g = 0; g < steps; ++g) {
      if (g > 0) {
        const auto c = 1 + static_cast<std::size_t>(std::countr_zero(g));
        state.flip(c, signs[c]);
        signs[c] = static_cast<std::int8_t>(-signs[c]);
      }
      ++visited;
      if (best.set && state.lower_bound() > best.value + kTieTolerance) continue;
      offer(best, state.evaluate(), signs);
    }
    results[block] = std::move(best);
    counts[block] = visited;
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1 || blocks == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::uint64_t>(workers, blocks); ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < blocks; b = next++) run_block(b);
      });
    }
  }

  Candidate best;
  BruteForceResult out;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    merge(best, results[b]);
    out.visited += counts[b];
  }
  out.min_norm = best.value;
  out.argmin = Symmetry(std::move(best.signs));
  return out;
}

// Columns f_i = p(e_i) in frame coordinates, contiguous per coordinate.
std::vector<double> frame_columns(const Projection& p) {
  const std::size_t n = p.dim();
  const std::size_t r = p.rank();
  std::vector<double> cols(n * r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto row = p.frame().row(k);
    for (std::size_t i = 0; i < n; ++i) cols[i * r + k] = row[i];
  }
  return cols;
}

// Compression M = Σ s_i f_i f_iᵀ, updated by rank-1 terms per flip.
struct CompressionState {
  const std::vector<double>* cols = nullptr;
  std::size_t r = 0;
  std::vector<double> m;
  std::vector<double> scratch;

  void reset(const std::vector<std::int8_t>& signs) {
    m.assign(r * r, 0.0);
    scratch.resize(r * r);
    for (std::size_t i = 0; i < signs.size(); ++i) add_outer(i, signs[i]);
  }
  void add_outer(std::size_t i, double weight) {
    const double* f = cols->data() + i * r;
    for (std::size_t a = 0; a < r; ++a) {
      const double wa = weight * f[a];
      if (wa == 0.0) continue;
      for (std::size_t b = 0; b < r; ++b) m[a * r + b] += wa * f[b];
    }
  }
  void flip(std::size_t i, std::int8_t old_sign) { add_outer(i, -2.0 * old_sign); }
  double lower_bound() const {
    double lb = 0.0;
    for (std::size_t a = 0; a < r; ++a) lb = std::max(lb, std::abs(m[a * r + a]));
    return lb;
  }
  double evaluate() {
    if (r == 0) return 0.0;
    std::copy(m.begin(), m.end(), scratch.begin());
    return detail::jacobi_spectral_radius(scratch, r, 1e-13, 100);
  }
};

// z = Σ s_i c_i f_i = F S p(v), the frame coordinates of psp(v).
struct VectorImageState {
  const std::vector<double>* cols = nullptr;
  const std::vector<double>* weights = nullptr;  // c_i = (p v)_i
  std::size_t r = 0;
  std::vector<double> z;

  void reset(const std::vector<std::int8_t>& signs) {
    z.assign(r, 0.0);
    for (std::size_t i = 0; i < signs.size(); ++i) add(i, signs[i]);
  }
  void add(std::size_t i, double weight) {
    const double w = weight * (*weights)[i];
    if (w == 0.0) return;
    const double* f = cols->data() + i * r;
    for (std::size_t a = 0; a < r; ++a) z[a] += w * f[a];
  }
  void flip(std::size_t i, std::int8_t old_sign) { add(i, -2.0 * old_sign); }
  double lower_bound() const { return 0.0; }
  double evaluate() const { return std::sqrt(dot(z, z)); }
};

}  // namespace

BruteForceResult brute_force_min(const Projection& p, const BruteForceOptions& options) {
  if (p.dim() > options.max_n) throw CapExceeded(p.dim(), options.max_n);
  const std::vector<double> cols = frame_columns(p);
  CompressionState proto;
  proto.cols = &cols;
  proto.r = p.rank();
  return enumerate(p.dim(), options, proto);
}

BruteForceResult brute_force_min_vector(const Projection& p, const Vector& v, const BruteForceOptions& options) {
  if (v.size() != p.dim()) throw std::invalid_argument("brute_force_min_vector: dimension mismatch");
  if (p.dim() > options.max_n) throw CapExceeded(p.dim(), options.max_n);
  const std::vector<double> cols = frame_columns(p);
  const Vector pv = p.apply(v);
  const std::vector<double> weights(pv.coords().begin(), pv.coords().end());
  VectorImageState proto;
  proto.cols = &cols;
  proto.weights = &weights;
  proto.r = p.rank();
  return enumerate(p.dim(), options, proto);
}

}  // namespace paving::experiments
