#include "paving/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "paving/errors.hpp"

namespace paving::rearrange {
namespace {

constexpr double kPrefixTolerance = 1e-10;
constexpr double kLemma2Tolerance = 1e-9;
constexpr double kHalfMassSlack = 1e-12;
constexpr double kDegenerateNorm = 1e-10;

bool is_permutation_of(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto i : order) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

void add_into(std::vector<double>& acc, std::span<const double> v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

}  // namespace

ZeroSumFamily::ZeroSumFamily(std::vector<Vector> vectors, std::optional<double> sum_tolerance)
    : vectors_(std::move(vectors)) {
  dim_ = vectors_.empty() ? 0 : vectors_.front().size();
  std::vector<double> sum(dim_, 0.0);
  double total_norm = 0.0;
  for (const auto& v : vectors_) {
    if (v.size() != dim_) throw std::invalid_argument("ZeroSumFamily: vectors have different dimensions");
    add_into(sum, v.coords());
    total_norm += v.norm();
    scale_ = std::max(scale_, v.norm_sq());
  }
  sum_tolerance_ = sum_tolerance.value_or(1e-9 * total_norm);
  const double residual = std::sqrt(dot(sum, sum));
  if (residual > sum_tolerance_) {
    throw std::invalid_argument("ZeroSumFamily: ‖Σ v_i‖ = " + std::to_string(residual) + " exceeds tolerance " +
                                std::to_string(sum_tolerance_));
  }
}

bool check_prefix_property(const ZeroSumFamily& family, std::span<const std::size_t> order) {
  if (!is_permutation_of(order, family.size())) throw std::invalid_argument("check_prefix_property: not a permutation");
  if (order.empty()) return true;
  std::vector<double> w(family.dim(), 0.0);
  add_into(w, family[order[0]].coords());
  const double tol = kPrefixTolerance * family.scale();
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto v = family[order[i]].coords();
    if (dot(v, w) > tol) return false;
    add_into(w, v);
  }
  return true;
}

bool lemma2_bound_holds(const ZeroSumFamily& family, std::span<const std::size_t> order) {
  if (!is_permutation_of(order, family.size())) throw std::invalid_argument("lemma2_bound_holds: not a permutation");
  std::vector<double> w(family.dim(), 0.0);
  double mass = 0.0;
  for (auto idx : order) {
    add_into(w, family[idx].coords());
    mass += family[idx].norm_sq();
    if (dot(w, w) > mass + kLemma2Tolerance) return false;
  }
  return true;
}

Permutation greedy_rearrange(const ZeroSumFamily& family) {
  const std::size_t n = family.size();
  Permutation order;
  order.reserve(n);
  if (n == 0) return order;

  std::vector<bool> used(n, false);
  std::vector<double> w(family.dim(), 0.0);
  order.push_back(0);
  used[0] = true;
  add_into(w, family[0].coords());

  const double floor = 1e-12 * family.scale();
  while (order.size() < n) {
    std::size_t pick = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double ip = dot(family[j].coords(), w);
      if (ip < best) {
        best = ip;
        pick = j;
      }
    }
    // Σ_remaining v_j = -w (up to the family tolerance), so the most
    // negative inner product is at most sum_tolerance·‖w‖.
    const double allowed = family.sum_tolerance() * std::sqrt(dot(w, w)) + floor;
    if (best > allowed) {
      throw std::invalid_argument("greedy_rearrange: no remaining vector opposes the partial sum (inner product " +
                                  std::to_string(best) + "); the family does not sum to zero");
    }
    used[pick] = true;
    order.push_back(pick);
    add_into(w, family[pick].coords());
  }
  return order;
}

Decomposition decompose(const Projection& p, const Vector& v) {
  if (v.size() != p.dim()) throw std::invalid_argument("decompose: vector length differs from dimension");
  const std::size_t n = p.dim();
  const std::size_t r = p.rank();

  std::vector<double> u = p.to_frame(v.coords());
  const double len = std::sqrt(dot(u, u));
  if (!(len > kDegenerateNorm)) throw DegenerateInput("theorem1: p(v) is numerically zero");
  for (double& x : u) x /= len;

  Decomposition d;
  d.unit = p.from_frame(u);
  d.unit_frame = u;
  d.alpha_sq.resize(n);
  d.beta_sq.resize(n);
  d.x.assign(n, std::vector<double>(r));
  d.y.assign(n, std::vector<double>(r));
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> f = p.frame().column(i);  // p(e_i)
    const double vi = d.unit[i];                         // ⟨e_i, unit⟩
    d.delta_p = std::max(d.delta_p, dot(f, f));
    d.alpha_sq[i] = vi * vi;
    double beta_sq = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
      const double p2_ei = f[k] - vi * u[k];
      beta_sq += p2_ei * p2_ei;
      d.x[i][k] = vi * vi * u[k];
      d.y[i][k] = vi * p2_ei;
    }
    d.beta_sq[i] = beta_sq;
  }
  return d;
}

double theorem1_bound(double delta_p) { return std::sqrt(2.0 * delta_p + 3.0 * delta_p * delta_p); }

Theorem1Result theorem1_symmetry(const Projection& p, const Vector& v) {
  const Decomposition d = decompose(p, v);
  const std::size_t n = p.dim();

  std::vector<Vector> ys;
  ys.reserve(n);
  double total = 0.0;
  for (const auto& y : d.y) {
    ys.emplace_back(y);
    total += ys.back().norm();
  }
  ZeroSumFamily family(std::move(ys), std::max(1e-9 * total, 1e-12));
  Permutation order = greedy_rearrange(family);

  const double half_window = d.delta_p / 2.0 + kHalfMassSlack;
  std::size_t k = 0;
  double mass = 0.0;
  bool found = std::abs(0.5 - mass) <= half_window;
  while (!found && k < n) {
    mass += d.alpha_sq[order[k]];
    ++k;
    found = std::abs(0.5 - mass) <= half_window;
  }
  if (!found) {
    throw NumericalError("theorem1: no prefix has α² mass within δ_p/2 of 1/2", d.alpha_sq);
  }

  std::vector<std::int8_t> signs(n, -1);
  for (std::size_t t = 0; t < k; ++t) signs[order[t]] = 1;
  Symmetry s(std::move(signs));

  // psp(unit) = p(s·unit) since unit ∈ range(p).
  std::vector<double> su(n);
  for (std::size_t i = 0; i < n; ++i) su[i] = s[i] * d.unit[i];
  const std::vector<double> image = p.to_frame(su);

  Theorem1Result out;
  out.s = std::move(s);
  out.achieved_norm = std::sqrt(dot(image, image));
  out.delta_p = d.delta_p;
  out.bound = theorem1_bound(d.delta_p);
  out.k = k;
  out.permutation = std::move(order);
  out.alpha_sq = d.alpha_sq;
  return out;
}

}  // namespace paving::rearrange
