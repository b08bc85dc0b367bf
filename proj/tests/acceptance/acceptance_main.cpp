// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "paving/experiments.hpp"
#include "paving/rearrange.hpp"
#include "paving/weaver.hpp"

using namespace paving;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome exact_orthonormality() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int m = 6; m <= 12; ++m) {
    if (!weaver::verify_orthonormal(weaver::build_frame(m))) {
      o.pass = false;
      o.detail += "m=" + std::to_string(m) + " not orthonormal; ";
    }
  }
  const double t = seconds_since(t0);
  if (t >= 30.0) o.pass = false;
  o.detail += "m=6..12 exact, " + fmt("%.2f s", t) + " (limit 30 s)";
  return o;
}

Outcome row_norm_formulas() {
  Outcome o;
  for (int m = 6; m <= 12; ++m) {
    const Rational m2 = Rational(m) * Rational(m);
    const Rational mp1sq = Rational(m + 1) * Rational(m + 1);
    const weaver::BlockRowNorms got = weaver::block_row_norms(m);
    const bool ok = got.a == rat_inv(mp1sq) + Rational(2 * m + 1) / (m2 * m2 * mp1sq) &&
                    got.b == Rational(2) / mp1sq && got.c == Rational(2) / (m2 * mp1sq) &&
                    got.d == Rational(m - 1) / (m2 * Rational(m + 1)) &&
                    weaver::delta_p_exact(m) == Rational(2) / mp1sq;
    if (!ok) {
      o.pass = false;
      o.detail += "mismatch at m=" + std::to_string(m) + "; ";
    }
  }
  o.detail += "four block formulas and delta_p = 2/(m+1)^2 for m=6..12";
  return o;
}

Outcome falsification_certificate() {
  Outcome o;
  double worst = 0.0;
  int first = -1;
  for (int m = 6; m <= 16; ++m) {
    const auto t0 = Clock::now();
    const weaver::CertificateReport r = weaver::min_over_symmetries_v0(m);
    const double t = seconds_since(t0);
    worst = std::max(worst, t);
    const auto want = m >= 8 ? weaver::Verdict::FalsifiesA : weaver::Verdict::Inconclusive;
    if (r.verdict != want || t >= 1.0) {
      o.pass = false;
      o.detail += "m=" + std::to_string(m) + " verdict " + weaver::to_string(r.verdict) + "; ";
    }
    if (r.verdict == weaver::Verdict::FalsifiesA && first < 0) first = m;
    if (m == 8) {
      const bool exact = r.min_norm_sq == Rational(2, 729) && r.two_delta_p_sq == Rational(16, 6561) &&
                         Rational(2, 729) == Rational(18, 6561) && r.min_norm_sq > r.two_delta_p_sq;
      if (!exact) {
        o.pass = false;
        o.detail += "m=8 values " + r.min_norm_sq.to_string() + " vs " + r.two_delta_p_sq.to_string() + "; ";
      }
    }
  }
  o.detail += "m=6,7 INCONCLUSIVE, m=8..16 FALSIFIES_A, first falsifying m=" + std::to_string(first) +
              ", m=8 min 2/729 > 16/6561, slowest m " + fmt("%.3f s", worst) + " (limit 1 s)";
  return o;
}

Outcome branch_bound_soundness() {
  Outcome o;
  std::size_t cells = 0;
  for (int m = 6; m <= 12; ++m)
    for (int a = 0; 2 * a <= m * m; ++a) {
      const double bound = weaver::branch_bound(m, a);
      for (int b = 0; b <= 2 * m + 1; ++b) {
        ++cells;
        const double norm = std::sqrt(weaver::psp_v0_norm_sq(m, a, b).to_double());
        if (norm < bound - 1e-12) {
          o.pass = false;
          o.detail += "violated at m=" + std::to_string(m) + " alpha=" + std::to_string(a) +
                      " beta=" + std::to_string(b) + "; ";
        }
      }
    }
  o.detail += std::to_string(cells) + " lattice cells with alpha <= m^2/2, m=6..12";
  return o;
}

Outcome closed_form_vs_dense() {
  Outcome o;
  std::mt19937_64 rng(20240605);
  double worst_err = 0.0;
  double slowest = 0.0;
  for (int m : {6, 8}) {
    const auto t0 = Clock::now();
    const weaver::ExactFrame f = weaver::build_frame(m);
    const Projection p = f.to_projection();
    const Vector v0 = f.to_vector(0);
    const auto a = static_cast<std::size_t>(m * m);
    const auto b = static_cast<std::size_t>(2 * m + 1);
    const std::size_t rest = p.dim() - a - b;
    for (int t = 0; t < 100; ++t) {
      weaver::SignProfile prof;
      prof.eps.resize(a);
      prof.eps_prime.resize(b);
      std::vector<std::int8_t> tail(rest);
      for (auto& x : prof.eps) x = (rng() & 1) ? 1 : -1;
      for (auto& x : prof.eps_prime) x = (rng() & 1) ? 1 : -1;
      for (auto& x : tail) x = (rng() & 1) ? 1 : -1;
      const Symmetry s = weaver::extend_profile(m, prof, tail);
      const double dense = apply_psp(p, s, v0).norm_sq();
      const double exact = weaver::psp_v0_norm_sq(m, prof.alpha(), prof.beta()).to_double();
      worst_err = std::max(worst_err, std::abs(dense - exact));
    }
    slowest = std::max(slowest, seconds_since(t0));
  }
  if (worst_err > 1e-9 || slowest >= 120.0) o.pass = false;
  o.detail = "m=6,8 x 100 profiles, max |closed form - dense| = " + fmt("%.2e", worst_err) + ", slowest m " +
             fmt("%.2f s", slowest) + " (limit 120 s)";
  return o;
}

Outcome theorem1_upper_bound() {
  Outcome o;
  std::mt19937_64 rng(4141);
  double worst_slack = -1.0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 63;
    const std::size_t r = 1 + rng() % n;
    const Projection p = random_projection(n, r, 10000 + t);
    const Vector v = random_unit_vector(n, 20000 + t);
    const rearrange::Decomposition d = rearrange::decompose(p, v);
    const rearrange::Theorem1Result res = rearrange::theorem1_symmetry(p, v);
    worst_slack = std::max(worst_slack, res.achieved_norm - rearrange::theorem1_bound(res.delta_p));
    bool ok = res.achieved_norm <= rearrange::theorem1_bound(res.delta_p) + 1e-9;
    double prefix = 0.0, total = 0.0;
    for (std::size_t i = 0; i < res.k; ++i) prefix += res.alpha_sq[res.permutation[i]];
    for (double x : res.alpha_sq) total += x;
    ok = ok && std::abs(0.5 - prefix) <= res.delta_p / 2 + 1e-12 && std::abs(total - 1.0) <= 1e-9;
    for (std::size_t i = 0; i < n; ++i) {
      const double alpha = std::sqrt(d.alpha_sq[i]);
      const double beta = std::sqrt(d.beta_sq[i]);
      ok = ok && std::abs(Vector(d.x[i]).norm() - d.alpha_sq[i]) <= 1e-9 &&
           std::abs(Vector(d.y[i]).norm() - alpha * beta) <= 1e-9;
    }
    if (!ok) {
      o.pass = false;
      o.detail += "instance " + std::to_string(t) + " (n=" + std::to_string(n) + ") failed; ";
    }
  }
  o.detail += "200 instances, n <= 64, max(achieved - bound) = " + fmt("%.4f", worst_slack);
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  std::mt19937_64 rng(31415);
  std::normal_distribution<double> g;
  int failures = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t dim = 2 + rng() % 15;
    const std::size_t size = 2 + rng() % 39;
    std::vector<Vector> vs(size, Vector(dim));
    for (std::size_t i = 0; i + 1 < size; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        vs[i][k] = g(rng);
        vs[size - 1][k] -= vs[i][k];
      }
    const rearrange::ZeroSumFamily fam(std::move(vs));
    const rearrange::Permutation order = rearrange::greedy_rearrange(fam);
    if (!rearrange::check_prefix_property(fam, order) || !rearrange::lemma2_bound_holds(fam, order)) ++failures;
  }
  o.pass = failures == 0;
  o.detail = "500 zero-sum families (dims 2-16, sizes 2-40), " + std::to_string(failures) + " failures";
  return o;
}

Outcome brute_force_cross_check() {
  const auto t0 = Clock::now();
  Outcome o;
  std::mt19937_64 rng(2718);
  int satisfied = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 13;
    const std::size_t r = 1 + rng() % n;
    const Projection p = random_projection(n, r, 30000 + t);
    const Vector v = random_unit_vector(n, 40000 + t);
    const rearrange::Theorem1Result res = rearrange::theorem1_symmetry(p, v);
    const Vector unit = rearrange::decompose(p, v).unit;
    const double best = experiments::brute_force_min_vector(p, unit).min_norm;
    if (best > res.achieved_norm + 1e-9) {
      o.pass = false;
      o.detail += "instance " + std::to_string(t) + " brute force above construction; ";
    }
    const experiments::ExperimentRecord rec = experiments::conjectureA_test(p, 30000 + t);
    satisfied += (rec.conjectureA_satisfied && *rec.conjectureA_satisfied) ? 1 : 0;
  }
  const double t = seconds_since(t0);
  if (t >= 300.0) o.pass = false;
  o.detail += "50 instances, n <= 14, conjecture A satisfaction rate " + fmt("%.2f", satisfied / 50.0) + ", " +
              fmt("%.2f s", t) + " (limit 300 s)";
  return o;
}

std::string capture(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str();
}

Outcome determinism() {
  Outcome o;
  auto with_workers = [](std::vector<std::string> args, const char* w) {
    args.insert(args.end(), {"--workers", w});
    return args;
  };
  const std::vector<std::string> certify{"certify", "--m", "6..16"};
  const std::vector<std::string> scan{"scan", "--n", "10", "--rank", "5", "--count", "12", "--seed", "7",
                                      "--mode", "full", "--no-timing"};
  const std::vector<std::string> scan_csv{"scan", "--n", "10", "--rank", "5", "--count", "12", "--seed", "7",
                                          "--format", "csv", "--no-timing"};
  for (const auto* cmd : {&certify, &scan, &scan_csv}) {
    const std::string a = capture(with_workers(*cmd, "1"));
    const std::string b = capture(with_workers(*cmd, "1"));
    const std::string c = capture(with_workers(*cmd, "4"));
    if (a.empty() || a != b || a != c) {
      o.pass = false;
      o.detail += (*cmd)[0] + " output differs; ";
    }
  }
  o.detail += "certify (json), scan (json, csv): two runs and workers 1 vs 4 byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exact orthonormality", exact_orthonormality},
      {"row-norm formulas", row_norm_formulas},
      {"conjecture A falsification certificate", falsification_certificate},
      {"branch-bound soundness", branch_bound_soundness},
      {"closed form vs dense", closed_form_vs_dense},
      {"single-vector upper bound", theorem1_upper_bound},
      {"rearrangement lemmas", lemma_suite},
      {"brute-force cross-check", brute_force_cross_check},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << " (" << name << "): " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
