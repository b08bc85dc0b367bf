#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paving/experiments.hpp"
#include "paving/linalg.hpp"
#include "paving/rearrange.hpp"
#include "paving/weaver.hpp"

// Text serialization for every report the library produces. JSON output
// is deterministic: fixed key order, shortest round-trip doubles.
namespace paving::io {

/// {"rank": r, "dim": n, "rows": [[...], ...]}
std::string frame_to_json(const OrthonormalFrame& f);
/// Throws std::invalid_argument on malformed input.
OrthonormalFrame frame_from_json(std::string_view text);

/// {"n": n, "entries": [[...], ...]}
std::string matrix_to_json(const SymmetricMatrix& m);
SymmetricMatrix matrix_from_json(std::string_view text);

/// Exact rationals as reduced "p/q" strings plus *_decimal companions.
std::string certificate_to_json(const weaver::CertificateReport& report);

std::string theorem1_to_json(const rearrange::Theorem1Result& result);

/// One line, no trailing newline. `include_timing` controls runtime_ms.
std::string record_to_json(const experiments::ExperimentRecord& record, bool include_timing = true);

/// Column names of record_to_csv, comma separated.
std::string csv_header(bool include_timing = true);
std::string record_to_csv(const experiments::ExperimentRecord& record, bool include_timing = true);

/// printf("%.17g").
std::string format_double(double x);

}  // namespace paving::io
