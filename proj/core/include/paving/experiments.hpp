#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paving/linalg.hpp"

// Paving experiments on arbitrary projections: exhaustive minimization of
// ‖psp‖ over diagonal symmetries, per-instance conjecture tests, the
// two-sided compression quantity, and seeded batch scans.
namespace paving::experiments {

/// max_i ⟨p e_i, e_i⟩, read off the frame columns.
double delta_p_numeric(const Projection& p);

struct BruteForceOptions {
  std::size_t max_n = 24;
  unsigned workers = 1;
};

struct BruteForceResult {
  double min_norm = 0.0;
  Symmetry argmin;           // first sign is +1
  std::uint64_t visited = 0; // sign vectors enumerated, 2^(n-1)
};

/// Values closer than this are treated as tied; ties go to the
/// lexicographically smaller sign vector (-1 < +1).
inline constexpr double kTieTolerance = 1e-12;

/// min over all 2^(n-1) symmetries (s and -s coincide) of ‖F S Fᵀ‖.
/// Gray-code walk with rank-1 updates of the r×r compression. The search
/// is cut into a fixed set of sign-prefix blocks, so the result does not
/// depend on `workers`. Throws CapExceeded when n > max_n and
/// std::invalid_argument when n == 0.
BruteForceResult brute_force_min(const Projection& p, const BruteForceOptions& options = {});

/// min over symmetries of ‖p s p(v)‖ for a fixed vector v.
BruteForceResult brute_force_min_vector(const Projection& p, const Vector& v, const BruteForceOptions& options = {});

struct PavingPair {
  double maxnorm = 0.0;    // max(‖qpq‖, ‖(1-q)p(1-q)‖)
  double threshold = 0.0;  // 1/2 + δ_p
  double q_norm = 0.0;
  double q_perp_norm = 0.0;
};

/// q is the diagonal projection onto the +1 positions of `q_signs`.
PavingPair paving_pair(const Projection& p, const Symmetry& q_signs);

struct ExperimentRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t rank = 0;
  double delta_p = 0.0;
  double two_delta_p = 0.0;
  std::optional<double> min_psp_norm;
  std::optional<Symmetry> argmin_signs;
  std::optional<bool> conjectureA_satisfied;  // min_psp_norm ≤ 2δ_p + 1e-9
  std::optional<PavingPair> paving_at_argmin;
  /// ‖psp(e_i)‖ achieved by the single-vector construction per basis
  /// vector; nullopt where p(e_i) = 0.
  std::optional<std::vector<std::optional<double>>> theorem1_norms;
  double runtime_ms = 0.0;
  std::optional<std::string> error;
};

inline constexpr double kConjectureTolerance = 1e-9;

/// Propagates CapExceeded.
ExperimentRecord conjectureA_test(const Projection& p, std::uint64_t seed = 0, const BruteForceOptions& options = {});

/// True iff δ_p ≥ gamma (vacuous) or min_s ‖psp‖ < 1 - epsilon.
bool conjectureB_probe(const Projection& p, double gamma, double epsilon, const BruteForceOptions& options = {});

enum class ScanMode { ConjectureA, Full };

const char* to_string(ScanMode mode);
/// Accepts "conjectureA" and "full"; throws std::invalid_argument otherwise.
ScanMode parse_scan_mode(const std::string& text);

struct ScanConfig {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  ScanMode mode = ScanMode::ConjectureA;
  BruteForceOptions brute_force;
  /// Worker threads across instances; does not change the records.
  unsigned workers = 1;
};

/// Instance i uses random_projection(n, rank, seed + i). Per-instance
/// failures are stored in the record's `error` field.
std::vector<ExperimentRecord> scan(const ScanConfig& config);

}  // namespace paving::experiments
