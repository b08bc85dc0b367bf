#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paving/linalg.hpp"
#include "paving/quad_ext.hpp"
#include "paving/rational.hpp"

// The explicit counterexample to the 2δ_p symmetry conjecture: a rank 2m+2
// projection on a space with basis groups a, b, c, d whose first frame
// vector v0 cannot be compressed below a fixed multiple of δ_p by any
// diagonal symmetry.
namespace paving::weaver {

/// Throws std::invalid_argument unless m ≥ 2.
void require_valid_m(int m);

/// The parameter range on which the two-branch lower bound is stated.
inline bool claims_apply(int m) { return m >= 6; }

struct BlockSizes {
  std::int64_t a = 0;  // m²
  std::int64_t b = 0;  // 2m+1
  std::int64_t c = 0;  // (2m+1)·2m/2
  std::int64_t d = 0;  // (2m+1)(m+1)²
  std::int64_t total() const { return a + b + c + d; }
};

BlockSizes block_sizes(int m);

/// 2m³ + 8m² + 7m + 2.
std::int64_t dimension(int m);

/// Frame rank, 2m + 2.
inline std::size_t frame_rank(int m) { return static_cast<std::size_t>(2 * m + 2); }

/// A basis coordinate, 1-based as in the construction:
///   A(i), 1 ≤ i ≤ m²;  B(i), 1 ≤ i ≤ 2m+1;
///   C(i,j), 1 ≤ i < j ≤ 2m+1;  D(i,j), 1 ≤ i ≤ 2m+1, 1 ≤ j ≤ (m+1)².
/// Linear order: A block, B block, C lexicographic, D lexicographic.
struct BasisIndex {
  enum class Block : std::uint8_t { A, B, C, D };

  Block block = Block::A;
  int i = 1;
  int j = 0;

  static BasisIndex A(int i) { return {Block::A, i, 0}; }
  static BasisIndex B(int i) { return {Block::B, i, 0}; }
  static BasisIndex C(int i, int j) { return {Block::C, i, j}; }
  static BasisIndex D(int i, int j) { return {Block::D, i, j}; }

  bool valid(int m) const;
  /// Throws std::out_of_range if the index is invalid for m.
  std::size_t to_linear(int m) const;
  static BasisIndex from_linear(int m, std::size_t index);

  std::string to_string() const;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Entry ⟨e_x, v_k⟩ of the construction, k = 0..2m+1.
QuadExt frame_entry(int m, std::size_t k, const BasisIndex& x);

/// The radicand (m-1)/(m+1) shared by every d-coordinate.
Rational radicand(int m);

/// The 2m+2 frame vectors in exact arithmetic, stored sparsely as
/// (linear index, value) pairs sorted by index.
class ExactFrame {
 public:
  using Entry = std::pair<std::size_t, QuadExt>;

  ExactFrame(int m, std::vector<std::vector<Entry>> vectors);

  int m() const noexcept { return m_; }
  std::size_t rank() const noexcept { return vectors_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const Rational& rho() const noexcept { return rho_; }

  std::span<const Entry> vector(std::size_t k) const { return vectors_[k]; }
  QuadExt entry(std::size_t k, const BasisIndex& x) const;
  /// Overwrites (or inserts) one coordinate; zero values are removed.
  void set_entry(std::size_t k, const BasisIndex& x, const QuadExt& value);

  /// Floating-point copy of the frame as a projection (r = 2m+2, n = dim).
  Projection to_projection() const;
  /// The floating-point frame vector v_k in ambient coordinates.
  Vector to_vector(std::size_t k) const;

 private:
  int m_;
  std::size_t dim_;
  Rational rho_;
  std::vector<std::vector<Entry>> vectors_;
};

ExactFrame build_frame(int m);

/// Exact inner product of two frame vectors.
QuadExt exact_inner(const ExactFrame& f, std::size_t k, std::size_t l);

/// True iff the exact Gram matrix is the identity.
bool verify_orthonormal(const ExactFrame& f);

/// ‖p(e_x)‖² = Σ_k ⟨e_x, v_k⟩², exact.
Rational row_norm_sq(int m, const BasisIndex& x);

struct BlockRowNorms {
  Rational a, b, c, d;
};

/// row_norm_sq at one representative per block: A(1), B(1), C(1,2), D(1,1).
BlockRowNorms block_row_norms(int m);

/// Exact δ_p: the largest block row norm.
Rational delta_p_exact(int m);

/// Signs of a symmetry on the A block (eps, length m²) and B block
/// (eps_prime, length 2m+1). Signs on C and D do not affect psp(v0).
struct SignProfile {
  std::vector<std::int8_t> eps;
  std::vector<std::int8_t> eps_prime;

  int alpha() const;  // #{eps = +1}
  int beta() const;   // #{eps_prime = +1}
  /// Throws std::invalid_argument on wrong lengths or non-±1 entries.
  void validate(int m) const;
};

/// Full-length symmetry agreeing with the profile on A ∪ B and with
/// `rest` (length dim - m² - (2m+1)) on C ∪ D.
Symmetry extend_profile(int m, const SignProfile& profile, std::span<const std::int8_t> rest);

struct V0Coefficients {
  Rational c0;
  std::vector<Rational> c;  // c[i-1] multiplies v_i, i = 1..2m+1

  Rational norm_sq() const;
};

/// Coefficients of psp(v0) in the frame basis.
V0Coefficients psp_v0_coeffs(int m, const SignProfile& profile);

/// ‖psp(v0)‖² for any symmetry with A-count alpha and B-count beta.
/// Throws std::out_of_range for counts outside [0, m²] × [0, 2m+1].
Rational psp_v0_norm_sq(int m, int alpha, int beta);

enum class Verdict { FalsifiesA, Inconclusive };

const char* to_string(Verdict v);

struct CertificateReport {
  int m = 0;
  Rational delta_p;
  Rational two_delta_p;
  Rational two_delta_p_sq;
  Rational min_norm_sq;
  int argmin_alpha = 0;
  int argmin_beta = 0;
  /// (δ_p/4)·min(m²-4m-2, √(2m+1)); absent when m < 6.
  std::optional<double> branch_bound;
  Verdict verdict = Verdict::Inconclusive;
};

/// Exhaustive minimum of psp_v0_norm_sq over the (alpha, beta) lattice.
/// `workers` partitions the alpha range; the result does not depend on it.
CertificateReport min_over_symmetries_v0(int m, unsigned workers = 1);

/// Two-branch lower bound on ‖psp(v0)‖ for a given alpha ≤ m²/2:
/// ((m²-4m-2)/4)·δ_p when 4·alpha < m², else √(2m+1)·2·alpha/(m²(m+1)²).
/// Requires m ≥ 6. Throws std::invalid_argument otherwise.
double branch_bound(int m, int alpha);

/// (δ_p/4)·min(m²-4m-2, √(2m+1)). Requires m ≥ 6.
double overall_branch_bound(int m);

}  // namespace paving::weaver
