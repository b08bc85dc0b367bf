#include "cli/commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "paving/errors.hpp"
#include "paving/experiments.hpp"
#include "paving/io.hpp"
#include "paving/rearrange.hpp"
#include "paving/version.hpp"
#include "paving/weaver.hpp"

namespace paving::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json flags_json(const CliConfig& c) {
  Json f;
  auto opt = [](const auto& x) { return x ? Json(*x) : Json(nullptr); };
  f["m"] = opt(c.m);
  f["n"] = opt(c.n);
  f["rank"] = opt(c.rank);
  f["count"] = opt(c.count);
  f["seed"] = c.seed;
  f["vector_seed"] = opt(c.vector_seed);
  f["gamma"] = opt(c.gamma);
  f["epsilon"] = opt(c.epsilon);
  f["mode"] = c.mode;
  f["max_n"] = c.max_n;
  f["workers"] = c.workers;
  f["format"] = c.format == Format::Csv ? "csv" : "json";
  f["timing"] = c.timing;
  return f;
}

// Worker count is an execution detail, not part of the result, so it is
// left out of the echoed flags to keep reports identical across pool sizes.
Json envelope(const CliConfig& c) {
  Json j;
  j["tool"] = "paving";
  j["version"] = kVersion;
  j["command"] = c.command;
  Json flags = flags_json(c);
  flags.erase("workers");
  j["flags"] = std::move(flags);
  return j;
}

template <typename T>
const T& require(const std::optional<T>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required flag --") + flag);
  return *value;
}

int parse_single_m(const std::string& text) {
  std::size_t used = 0;
  int m = 0;
  try {
    m = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("--m: expected an integer, got '" + text + "'");
  }
  if (used != text.size()) throw UsageError("--m: expected an integer, got '" + text + "'");
  return m;
}

void require_valid_m(int m) {
  if (m < 2) throw UsageError("--m must be at least 2 (got " + std::to_string(m) + ")");
}

struct Report {
  std::string text;
  int exit_code = kSuccess;
};

Report cmd_construct(const CliConfig& c, std::ostream& err) {
  if (c.format != Format::Json) throw UsageError("construct supports only --format json");
  const int m = parse_single_m(require(c.m, "m"));
  require_valid_m(m);

  const weaver::ExactFrame frame = weaver::build_frame(m);
  const bool orthonormal = weaver::verify_orthonormal(frame);
  const weaver::BlockRowNorms rows = weaver::block_row_norms(m);
  const Rational delta = weaver::delta_p_exact(m);
  const weaver::BlockSizes sizes = weaver::block_sizes(m);

  Json j = envelope(c);
  j["m"] = m;
  j["dimension"] = weaver::dimension(m);
  j["rank"] = frame.rank();
  j["block_sizes"] = {{"a", sizes.a}, {"b", sizes.b}, {"c", sizes.c}, {"d", sizes.d}};
  j["orthonormal"] = orthonormal;
  j["delta_p"] = delta.to_string();
  j["delta_p_decimal"] = delta.to_double();
  auto exact = [](const Rational& r) { return Json{{"exact", r.to_string()}, {"decimal", r.to_double()}}; };
  j["row_norm_sq"] = {{"a", exact(rows.a)}, {"b", exact(rows.b)}, {"c", exact(rows.c)}, {"d", exact(rows.d)}};
  j["b_block_dominates"] = rows.b > rows.a && rows.b > rows.c && rows.b > rows.d;
  j["claims_apply"] = weaver::claims_apply(m);

  err << "construct: m=" << m << " dimension=" << weaver::dimension(m) << " orthonormal=" << std::boolalpha
      << orthonormal << '\n';
  return {j.dump(2) + "\n", orthonormal ? kSuccess : kVerificationFailure};
}

Report cmd_certify(const CliConfig& c, std::ostream& err) {
  std::pair<int, int> range;
  try {
    range = parse_m_range(require(c.m, "m"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto [lo, hi] = range;

  std::vector<weaver::CertificateReport> reports;
  std::optional<int> first_falsifying;
  for (int m = lo; m <= hi; ++m) {
    reports.push_back(weaver::min_over_symmetries_v0(m, c.workers));
    const auto& r = reports.back();
    err << "certify: m=" << m << " min_norm_sq=" << r.min_norm_sq.to_string()
        << " (2 delta_p)^2=" << r.two_delta_p_sq.to_string() << " " << weaver::to_string(r.verdict) << '\n';
    if (r.verdict == weaver::Verdict::FalsifiesA && !first_falsifying) first_falsifying = m;
  }
  const int code = first_falsifying ? kSuccess : kInconclusive;

  Json head = envelope(c);
  head["m_range"] = {lo, hi};
  head["any_falsifies"] = first_falsifying.has_value();
  head["first_falsifying_m"] = first_falsifying ? Json(*first_falsifying) : Json(nullptr);

  std::ostringstream out;
  if (c.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(Json::parse(io::certificate_to_json(r)));
    head["reports"] = std::move(arr);
    out << head.dump(2) << '\n';
  } else {
    out << "# " << head.dump() << '\n';
    out << "m,dimension,delta_p,two_delta_p,two_delta_p_sq,min_norm_sq,min_norm_decimal,argmin_alpha,argmin_beta,"
           "branch_bound,verdict\n";
    for (const auto& r : reports) {
      out << r.m << ',' << weaver::dimension(r.m) << ',' << r.delta_p.to_string() << ','
          << r.two_delta_p.to_string() << ',' << r.two_delta_p_sq.to_string() << ',' << r.min_norm_sq.to_string()
          << ',' << io::format_double(std::sqrt(r.min_norm_sq.to_double())) << ',' << r.argmin_alpha << ','
          << r.argmin_beta << ',' << (r.branch_bound ? io::format_double(*r.branch_bound) : "") << ','
          << weaver::to_string(r.verdict) << '\n';
    }
  }
  return {out.str(), code};
}

Projection instance(const CliConfig& c) {
  const std::size_t n = require(c.n, "n");
  const std::size_t rank = require(c.rank, "rank");
  if (n == 0) throw UsageError("--n must be positive");
  if (rank > n) throw UsageError("--rank must not exceed --n");
  return random_projection(n, rank, c.seed);
}

experiments::BruteForceOptions brute_force_options(const CliConfig& c) {
  return {c.max_n, c.workers};
}

Report cmd_bruteforce(const CliConfig& c, std::ostream& err) {
  if (c.format != Format::Json) throw UsageError("bruteforce supports only --format json");
  if (c.gamma.has_value() != c.epsilon.has_value()) throw UsageError("--gamma and --epsilon must be given together");
  const Projection p = instance(c);
  const experiments::ExperimentRecord rec = experiments::conjectureA_test(p, c.seed, brute_force_options(c));

  Json j = envelope(c);
  j["record"] = Json::parse(io::record_to_json(rec, c.timing));
  if (c.gamma) {
    const bool ok = experiments::conjectureB_probe(p, *c.gamma, *c.epsilon, brute_force_options(c));
    j["conjectureB"] = {{"gamma", *c.gamma}, {"epsilon", *c.epsilon}, {"satisfied", ok}};
  }
  err << "bruteforce: n=" << p.dim() << " rank=" << p.rank() << " min=" << io::format_double(*rec.min_psp_norm)
      << " 2delta_p=" << io::format_double(rec.two_delta_p) << '\n';
  return {j.dump(2) + "\n", kSuccess};
}

Report cmd_theorem1(const CliConfig& c, std::ostream& err) {
  if (c.format != Format::Json) throw UsageError("theorem1 supports only --format json");
  const Projection p = instance(c);
  const std::uint64_t vseed = c.vector_seed.value_or(c.seed);
  const Vector v = random_unit_vector(p.dim(), vseed);
  const rearrange::Theorem1Result result = rearrange::theorem1_symmetry(p, v);

  Json j = envelope(c);
  j["vector_seed"] = vseed;
  j["result"] = Json::parse(io::theorem1_to_json(result));
  err << "theorem1: achieved=" << io::format_double(result.achieved_norm)
      << " bound=" << io::format_double(result.bound) << '\n';
  return {j.dump(2) + "\n", kSuccess};
}

Report cmd_scan(const CliConfig& c, std::ostream& err) {
  experiments::ScanConfig sc;
  sc.n = require(c.n, "n");
  sc.rank = require(c.rank, "rank");
  sc.count = require(c.count, "count");
  sc.seed = c.seed;
  try {
    sc.mode = experiments::parse_scan_mode(c.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (sc.n == 0) throw UsageError("--n must be positive");
  if (sc.rank > sc.n) throw UsageError("--rank must not exceed --n");
  if (sc.n > c.max_n) throw CapExceeded(sc.n, c.max_n);
  sc.brute_force = brute_force_options(c);
  sc.workers = c.workers;

  const auto records = experiments::scan(sc);

  std::size_t satisfied = 0;
  std::size_t tested = 0;
  for (const auto& r : records) {
    if (r.conjectureA_satisfied) {
      ++tested;
      satisfied += *r.conjectureA_satisfied ? 1 : 0;
    }
  }

  Json head = envelope(c);
  Json seeds = Json::array();
  for (std::size_t i = 0; i < sc.count; ++i) seeds.push_back(sc.seed + i);
  head["seeds"] = std::move(seeds);

  std::ostringstream out;
  if (c.format == Format::Json) {
    out << head.dump() << '\n';
    for (const auto& r : records) out << io::record_to_json(r, c.timing) << '\n';
  } else {
    out << "# " << head.dump() << '\n';
    out << io::csv_header(c.timing) << '\n';
    for (const auto& r : records) out << io::record_to_csv(r, c.timing) << '\n';
  }
  err << "scan: " << records.size() << " instances, conjecture A satisfied in " << satisfied << "/" << tested << '\n';
  return {out.str(), kSuccess};
}

}  // namespace

std::pair<int, int> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  int lo = 0;
  int hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_single_m(text);
  } else {
    lo = parse_single_m(text.substr(0, dots));
    hi = parse_single_m(text.substr(dots + 2));
  }
  require_valid_m(lo);
  if (hi < lo) throw UsageError("--m range '" + text + "' is empty");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Construct, certify and search paving counterexamples", "paving"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string format = "json";
  bool no_timing = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", config.output, "Write the report to this file instead of stdout");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--workers", config.workers, "Worker threads (results do not depend on this)")
        ->check(CLI::Range(1u, 256u));
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Ambient dimension")->required();
    sub->add_option("--rank", config.rank, "Projection rank")->required();
    sub->add_option("--seed", config.seed, "Generator seed");
    sub->add_option("--max-n", config.max_n, "Brute-force dimension cap");
    sub->add_flag("--no-timing", no_timing, "Omit runtime fields from the report");
  };

  auto* construct = app.add_subcommand("construct", "Build the counterexample frame for one m and verify it");
  construct->add_option("--m", config.m, "Parameter m >= 2")->required();
  add_common(construct);

  auto* certify = app.add_subcommand("certify", "Exact minimum of ||psp(v0)|| over all symmetries, per m");
  certify->add_option("--m", config.m, "m or a range lo..hi")->required();
  add_common(certify);

  auto* bruteforce = app.add_subcommand("bruteforce", "Exhaustive min over symmetries for a random projection");
  add_instance(bruteforce);
  bruteforce->add_option("--gamma", config.gamma, "Also probe the (gamma, epsilon) conjecture");
  bruteforce->add_option("--epsilon", config.epsilon);
  add_common(bruteforce);

  auto* theorem1 = app.add_subcommand("theorem1", "Single-vector symmetry for a random projection and vector");
  add_instance(theorem1);
  theorem1->add_option("--vector-seed", config.vector_seed, "Seed for the random unit vector (default: --seed)");
  add_common(theorem1);

  auto* scan = app.add_subcommand("scan", "Seeded batch of conjecture tests");
  add_instance(scan);
  scan->add_option("--count", config.count, "Number of instances")->required();
  scan->add_option("--mode", config.mode, "conjectureA or full")->check(CLI::IsMember({"conjectureA", "full"}));
  add_common(scan);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "csv" ? Format::Csv : Format::Json;
  config.timing = !no_timing;

  Report report;
  try {
    if (config.command == "construct") {
      report = cmd_construct(config, err);
    } else if (config.command == "certify") {
      report = cmd_certify(config, err);
    } else if (config.command == "bruteforce") {
      report = cmd_bruteforce(config, err);
    } else if (config.command == "theorem1") {
      report = cmd_theorem1(config, err);
    } else {
      report = cmd_scan(config, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }

  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.output << " for writing\n";
      return kUsageError;
    }
    file << report.text;
  } else {
    out << report.text;
  }
  return report.exit_code;
}

}  // namespace paving::cli
