#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace paving {

/// Dense real vector of fixed length.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, double fill = 0.0) : coords_(n, fill) {}
  explicit Vector(std::vector<double> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<double> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  std::span<double> coords() noexcept { return coords_; }

  double norm() const;
  double norm_sq() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

double dot(std::span<const double> x, std::span<const double> y);

/// Dense n×n real symmetric matrix, row-major. The constructor rejects
/// input whose asymmetry exceeds 1e-12·max|entry| and stores the
/// symmetrized average.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  SymmetricMatrix(std::size_t n, std::vector<double> entries);

  static SymmetricMatrix zero(std::size_t n);
  static SymmetricMatrix identity(std::size_t n);
  static SymmetricMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const double> entries() const noexcept { return entries_; }

  double max_abs() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

/// r rows of length n (row-major). Construction does not check
/// orthonormality; use `is_orthonormal` or wrap in a Projection.
class OrthonormalFrame {
 public:
  OrthonormalFrame() = default;
  OrthonormalFrame(std::size_t rank, std::size_t dim, std::vector<double> rows);
  static OrthonormalFrame from_rows(const std::vector<Vector>& rows, std::size_t dim);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> row(std::size_t k) const { return {rows_.data() + k * dim_, dim_}; }
  std::span<const double> data() const noexcept { return rows_; }
  /// Coordinates of p(e_i) in the frame basis: column i of F.
  std::vector<double> column(std::size_t i) const;

  bool is_orthonormal(double tol = 1e-10) const;

 private:
  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> rows_;
};

/// Orthogonal projection onto the span of an orthonormal frame.
/// Throws std::invalid_argument if the frame's Gram matrix deviates from
/// the identity by more than 1e-10 in any entry.
class Projection {
 public:
  explicit Projection(OrthonormalFrame frame);

  static Projection identity(std::size_t n);
  /// Rank-1 projection onto span(v); v need not be normalized.
  static Projection onto(const Vector& v);

  const OrthonormalFrame& frame() const noexcept { return frame_; }
  std::size_t rank() const noexcept { return frame_.rank(); }
  std::size_t dim() const noexcept { return frame_.dim(); }

  /// F·x: coordinates of p(x) in the frame basis (length r).
  std::vector<double> to_frame(std::span<const double> x) const;
  /// Fᵀ·c: the ambient vector with frame coordinates c (length n).
  Vector from_frame(std::span<const double> c) const;
  Vector apply(const Vector& x) const;

 private:
  OrthonormalFrame frame_;
};

/// Diagonal ±1 matrix, stored as its sign vector.
class Symmetry {
 public:
  Symmetry() = default;
  /// Throws std::invalid_argument on any entry other than ±1.
  explicit Symmetry(std::vector<std::int8_t> signs);

  static Symmetry identity(std::size_t n) { return Symmetry(std::vector<std::int8_t>(n, 1)); }
  /// +1 where `in_q` is true, -1 elsewhere (s = q - q⊥).
  static Symmetry from_mask(const std::vector<bool>& in_q);

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }
  Symmetry negated() const;

  friend bool operator==(const Symmetry&, const Symmetry&) = default;
  /// Lexicographic with -1 < +1.
  friend auto operator<=>(const Symmetry& x, const Symmetry& y) { return x.signs_ <=> y.signs_; }

 private:
  std::vector<std::int8_t> signs_;
};

SymmetricMatrix gram(const OrthonormalFrame& f);
SymmetricMatrix materialize(const Projection& p);

/// F·S·Fᵀ (r×r); its operator norm equals ‖psp‖.
SymmetricMatrix compress_psp(const Projection& p, const Symmetry& s);

/// p(s(p(v))).
Vector apply_psp(const Projection& p, const Symmetry& s, const Vector& v);

struct OperatorNormOptions {
  std::size_t jacobi_max_dim = 256;
  double jacobi_tolerance = 1e-13;
  int jacobi_max_sweeps = 100;
  double power_tolerance = 1e-12;
  std::size_t power_max_iterations = 100000;
};

/// Largest absolute eigenvalue. Cyclic Jacobi up to `jacobi_max_dim`,
/// power iteration on M² above it. Throws NumericalError on
/// non-convergence.
double operator_norm(const SymmetricMatrix& m, const OperatorNormOptions& options = {});

/// All eigenvalues (ascending) by cyclic Jacobi.
std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& m, const OperatorNormOptions& options = {});

/// Power iteration on M², exposed for tests of the large-r path.
double power_operator_norm(const SymmetricMatrix& m, double tolerance = 1e-12, std::size_t max_iterations = 100000);

namespace detail {

/// In-place cyclic Jacobi on a dense n×n symmetric buffer. Returns max |λ|.
/// `a` is destroyed.
double jacobi_spectral_radius(std::span<double> a, std::size_t n, double tolerance, int max_sweeps);

}  // namespace detail

/// Random rank-r projection in ℝⁿ: r standard Gaussian vectors
/// orthonormalized by modified Gram-Schmidt with one reorthogonalization
/// pass. Generator: std::mt19937_64 seeded with std::seed_seq over
/// (seed low word, seed high word, stream, attempt); Gaussians by
/// Box-Muller on 53-bit uniforms. Bitwise reproducible on a fixed platform.
Projection random_projection(std::size_t n, std::size_t r, std::uint64_t seed);

/// Random unit vector in ℝⁿ from an independent stream of the same generator.
Vector random_unit_vector(std::size_t n, std::uint64_t seed);

/// Deterministic standard-normal draws, shared by the generators above.
std::vector<double> gaussian_draws(std::size_t count, std::uint64_t seed, std::uint32_t stream, std::uint32_t attempt);

}  // namespace paving
