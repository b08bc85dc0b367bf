#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "paving/linalg.hpp"

namespace paving::rearrange {

/// 0-based index order.
using Permutation = std::vector<std::size_t>;

/// A finite family of equal-length vectors whose sum is zero up to
/// `sum_tolerance`. The default tolerance is 1e-9·Σ‖v_i‖.
class ZeroSumFamily {
 public:
  /// Throws std::invalid_argument on ragged dimensions or when
  /// ‖Σ v_i‖ exceeds the tolerance.
  explicit ZeroSumFamily(std::vector<Vector> vectors, std::optional<double> sum_tolerance = std::nullopt);

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  double sum_tolerance() const noexcept { return sum_tolerance_; }
  /// max ‖v_i‖²; the scale for inner-product tolerances.
  double scale() const noexcept { return scale_; }

 private:
  std::vector<Vector> vectors_;
  std::size_t dim_ = 0;
  double sum_tolerance_ = 0.0;
  double scale_ = 0.0;
};

/// ⟨v_{order[i+1]}, w_i⟩ ≤ 1e-10·scale for every prefix sum w_i.
bool check_prefix_property(const ZeroSumFamily& family, std::span<const std::size_t> order);

/// ‖w_i‖² ≤ Σ_{j≤i} ‖v_j‖² + 1e-9 for every prefix in the given order.
bool lemma2_bound_holds(const ZeroSumFamily& family, std::span<const std::size_t> order);

/// Starts from index 0 and repeatedly appends the remaining vector with
/// the most negative inner product against the running sum (ties go to
/// the smaller index). Throws std::invalid_argument if no remaining
/// vector has inner product ≤ sum_tolerance·‖w‖, which only happens when
/// the family does not really sum to zero.
Permutation greedy_rearrange(const ZeroSumFamily& family);

/// The ingredients of the single-vector construction, in frame
/// coordinates of p (length r each).
struct Decomposition {
  Vector unit;                    // p(v)/‖p(v)‖, ambient
  std::vector<double> unit_frame; // F·unit
  double delta_p = 0.0;
  std::vector<double> alpha_sq;   // ‖p1 e_i‖²
  std::vector<double> beta_sq;    // ‖p2 e_i‖²
  std::vector<std::vector<double>> x;  // p1 q_i p(unit)
  std::vector<std::vector<double>> y;  // p2 q_i p(unit)
};

/// Throws DegenerateInput if ‖p(v)‖ ≤ 1e-10.
Decomposition decompose(const Projection& p, const Vector& v);

struct Theorem1Result {
  Symmetry s;
  double achieved_norm = 0.0;
  double bound = 0.0;
  double delta_p = 0.0;
  std::size_t k = 0;
  Permutation permutation;
  std::vector<double> alpha_sq;  // in original index order
};

/// √(2δ + 3δ²).
double theorem1_bound(double delta_p);

/// A diagonal symmetry s with ‖p s p(v̂)‖ ≤ √(2δ_p + 3δ_p²), where
/// v̂ = p(v)/‖p(v)‖: rearrange the p2-components with
/// greedy_rearrange, take the shortest prefix whose α² mass is within
/// δ_p/2 of 1/2, and put +1 on that prefix.
Theorem1Result theorem1_symmetry(const Projection& p, const Vector& v);

}  // namespace paving::rearrange
