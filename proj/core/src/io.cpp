#include "paving/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace paving::io {
namespace {

using Json = nlohmann::ordered_json;

Json rows_to_json(std::span<const double> data, std::size_t rows, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t k = 0; k < rows; ++k) {
    Json row = Json::array();
    for (std::size_t i = 0; i < cols; ++i) row.push_back(data[k * cols + i]);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<double> rows_from_json(const Json& rows, std::size_t expected_rows, std::size_t expected_cols) {
  if (!rows.is_array() || rows.size() != expected_rows) throw std::invalid_argument("JSON: wrong number of rows");
  std::vector<double> data;
  data.reserve(expected_rows * expected_cols);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != expected_cols) throw std::invalid_argument("JSON: wrong row length");
    for (const auto& x : row) {
      if (!x.is_number()) throw std::invalid_argument("JSON: non-numeric entry");
      data.push_back(x.get<double>());
    }
  }
  return data;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

Json signs_to_json(const Symmetry& s) {
  Json out = Json::array();
  for (auto x : s.signs()) out.push_back(static_cast<int>(x));
  return out;
}

std::string signs_compact(const Symmetry& s) {
  std::string out;
  out.reserve(s.size());
  for (auto x : s.signs()) out.push_back(x > 0 ? '+' : '-');
  return out;
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string frame_to_json(const OrthonormalFrame& f) {
  Json j;
  j["rank"] = f.rank();
  j["dim"] = f.dim();
  j["rows"] = rows_to_json(f.data(), f.rank(), f.dim());
  return j.dump();
}

OrthonormalFrame frame_from_json(std::string_view text) {
  const Json j = parse(text);
  try {
    const auto rank = j.at("rank").get<std::size_t>();
    const auto dim = j.at("dim").get<std::size_t>();
    return {rank, dim, rows_from_json(j.at("rows"), rank, dim)};
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("frame JSON: ") + e.what());
  }
}

std::string matrix_to_json(const SymmetricMatrix& m) {
  Json j;
  j["n"] = m.dim();
  j["entries"] = rows_to_json(m.entries(), m.dim(), m.dim());
  return j.dump();
}

SymmetricMatrix matrix_from_json(std::string_view text) {
  const Json j = parse(text);
  try {
    const auto n = j.at("n").get<std::size_t>();
    return {n, rows_from_json(j.at("entries"), n, n)};
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("matrix JSON: ") + e.what());
  }
}

std::string certificate_to_json(const weaver::CertificateReport& r) {
  Json j;
  j["m"] = r.m;
  j["dimension"] = weaver::dimension(r.m);
  j["claims_apply"] = weaver::claims_apply(r.m);
  j["delta_p"] = r.delta_p.to_string();
  j["delta_p_decimal"] = r.delta_p.to_double();
  j["two_delta_p"] = r.two_delta_p.to_string();
  j["two_delta_p_decimal"] = r.two_delta_p.to_double();
  j["two_delta_p_sq"] = r.two_delta_p_sq.to_string();
  j["min_norm_sq"] = r.min_norm_sq.to_string();
  j["min_norm_sq_decimal"] = r.min_norm_sq.to_double();
  j["min_norm_decimal"] = std::sqrt(r.min_norm_sq.to_double());
  j["argmin"] = {{"alpha", r.argmin_alpha}, {"beta", r.argmin_beta}};
  j["branch_bound"] = optional_number(r.branch_bound);
  j["verdict"] = weaver::to_string(r.verdict);
  return j.dump();
}

std::string theorem1_to_json(const rearrange::Theorem1Result& r) {
  Json j;
  j["delta_p"] = r.delta_p;
  j["bound"] = r.bound;
  j["achieved_norm"] = r.achieved_norm;
  j["within_bound"] = r.achieved_norm <= r.bound + 1e-9;
  j["k"] = r.k;
  j["permutation"] = r.permutation;
  j["signs"] = signs_to_json(r.s);
  j["alpha_sq"] = r.alpha_sq;
  return j.dump();
}

std::string record_to_json(const experiments::ExperimentRecord& rec, bool include_timing) {
  Json j;
  j["seed"] = rec.seed;
  j["n"] = rec.n;
  j["rank"] = rec.rank;
  j["delta_p"] = rec.delta_p;
  j["two_delta_p"] = rec.two_delta_p;
  j["min_psp_norm"] = optional_number(rec.min_psp_norm);
  j["conjectureA_satisfied"] = rec.conjectureA_satisfied ? Json(*rec.conjectureA_satisfied) : Json(nullptr);
  j["argmin_signs"] = rec.argmin_signs ? signs_to_json(*rec.argmin_signs) : Json(nullptr);
  if (rec.paving_at_argmin) {
    const auto& pp = *rec.paving_at_argmin;
    j["paving_pair"] = {{"maxnorm", pp.maxnorm},
                        {"threshold", pp.threshold},
                        {"q_norm", pp.q_norm},
                        {"q_perp_norm", pp.q_perp_norm}};
  } else {
    j["paving_pair"] = nullptr;
  }
  if (rec.theorem1_norms) {
    Json arr = Json::array();
    for (const auto& x : *rec.theorem1_norms) arr.push_back(optional_number(x));
    j["theorem1_norms"] = std::move(arr);
  } else {
    j["theorem1_norms"] = nullptr;
  }
  if (include_timing) j["runtime_ms"] = rec.runtime_ms;
  j["error"] = rec.error ? Json(*rec.error) : Json(nullptr);
  return j.dump();
}

std::string csv_header(bool include_timing) {
  std::string h =
      "seed,n,rank,delta_p,two_delta_p,min_psp_norm,conjectureA_satisfied,argmin_signs,paving_maxnorm,"
      "paving_threshold,theorem1_max_norm";
  if (include_timing) h += ",runtime_ms";
  h += ",error";
  return h;
}

std::string record_to_csv(const experiments::ExperimentRecord& rec, bool include_timing) {
  std::string row;
  auto field = [&row](const std::string& s) {
    if (!row.empty()) row.push_back(',');
    row += s;
  };
  field(std::to_string(rec.seed));
  field(std::to_string(rec.n));
  field(std::to_string(rec.rank));
  field(format_double(rec.delta_p));
  field(format_double(rec.two_delta_p));
  field(rec.min_psp_norm ? format_double(*rec.min_psp_norm) : "");
  field(rec.conjectureA_satisfied ? (*rec.conjectureA_satisfied ? "true" : "false") : "");
  field(rec.argmin_signs ? signs_compact(*rec.argmin_signs) : "");
  field(rec.paving_at_argmin ? format_double(rec.paving_at_argmin->maxnorm) : "");
  field(rec.paving_at_argmin ? format_double(rec.paving_at_argmin->threshold) : "");
  std::string t1;
  if (rec.theorem1_norms) {
    double mx = 0.0;
    for (const auto& x : *rec.theorem1_norms) {
      if (x) mx = std::max(mx, *x);
    }
    t1 = format_double(mx);
  }
  field(t1);
  if (include_timing) field(format_double(rec.runtime_ms));
  field(rec.error ? csv_escape(*rec.error) : "");
  return row;
}

}  // namespace paving::io
