#include "paving/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "paving/errors.hpp"
#include "paving/rearrange.hpp"

namespace paving::experiments {
namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ‖Σ_{i : mask_i} f_i f_iᵀ‖, the norm of the compression of p to a
// coordinate subset.
double coordinate_compression_norm(const Projection& p, const Symmetry& signs, int keep) {
  const std::size_t r = p.rank();
  const std::size_t n = p.dim();
  std::vector<double> m(r * r, 0.0);
  for (std::size_t a = 0; a < r; ++a) {
    const auto ra = p.frame().row(a);
    for (std::size_t b = a; b < r; ++b) {
      const auto rb = p.frame().row(b);
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (signs[i] == keep) acc += ra[i] * rb[i];
      }
      m[a * r + b] = m[b * r + a] = acc;
    }
  }
  return operator_norm(SymmetricMatrix(r, std::move(m)));
}

std::vector<std::optional<double>> theorem1_norms(const Projection& p) {
  std::vector<std::optional<double>> out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Vector e(p.dim());
    e[i] = 1.0;
    try {
      out[i] = rearrange::theorem1_symmetry(p, e).achieved_norm;
    } catch (const DegenerateInput&) {
      out[i] = std::nullopt;
    }
  }
  return out;
}

}  // namespace

double delta_p_numeric(const Projection& p) {
  double delta = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const std::vector<double> f = p.frame().column(i);
    delta = std::max(delta, dot(f, f));
  }
  return delta;
}

PavingPair paving_pair(const Projection& p, const Symmetry& q_signs) {
  if (q_signs.size() != p.dim()) throw std::invalid_argument("paving_pair: symmetry length differs from dimension");
  PavingPair out;
  out.q_norm = coordinate_compression_norm(p, q_signs, +1);
  out.q_perp_norm = coordinate_compression_norm(p, q_signs, -1);
  out.maxnorm = std::max(out.q_norm, out.q_perp_norm);
  out.threshold = 0.5 + delta_p_numeric(p);
  return out;
}

ExperimentRecord conjectureA_test(const Projection& p, std::uint64_t seed, const BruteForceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.seed = seed;
  rec.n = p.dim();
  rec.rank = p.rank();
  rec.delta_p = delta_p_numeric(p);
  rec.two_delta_p = 2.0 * rec.delta_p;
  BruteForceResult bf = brute_force_min(p, options);
  rec.min_psp_norm = bf.min_norm;
  rec.conjectureA_satisfied = bf.min_norm <= rec.two_delta_p + kConjectureTolerance;
  rec.paving_at_argmin = paving_pair(p, bf.argmin);
  rec.argmin_signs = std::move(bf.argmin);
  rec.runtime_ms = elapsed_ms(start);
  return rec;
}

bool conjectureB_probe(const Projection& p, double gamma, double epsilon, const BruteForceOptions& options) {
  if (delta_p_numeric(p) >= gamma) return true;
  return brute_force_min(p, options).min_norm < 1.0 - epsilon;
}

const char* to_string(ScanMode mode) { return mode == ScanMode::Full ? "full" : "conjectureA"; }

ScanMode parse_scan_mode(const std::string& text) {
  if (text == "conjectureA") return ScanMode::ConjectureA;
  if (text == "full") return ScanMode::Full;
  throw std::invalid_argument("unknown scan mode '" + text + "' (expected conjectureA or full)");
}

std::vector<ExperimentRecord> scan(const ScanConfig& config) {
  std::vector<ExperimentRecord> records(config.count);

  auto run_one = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t seed = config.seed + i;
    ExperimentRecord rec;
    rec.seed = seed;
    rec.n = config.n;
    rec.rank = config.rank;
    try {
      const Projection p = random_projection(config.n, config.rank, seed);
      BruteForceOptions bf = config.brute_force;
      bf.workers = 1;
      rec = conjectureA_test(p, seed, bf);
      if (config.mode == ScanMode::Full) rec.theorem1_norms = theorem1_norms(p);
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    rec.runtime_ms = elapsed_ms(start);
    records[i] = std::move(rec);
  };

  const unsigned workers = std::max(1u, config.workers);
  if (workers == 1 || config.count < 2) {
    for (std::size_t i = 0; i < config.count; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, config.count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < config.count; i = next++) run_one(i);
      });
    }
  }
  return records;
}

}  // namespace paving::experiments
