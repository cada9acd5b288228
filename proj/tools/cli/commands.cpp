#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "hochschild/cochain.hpp"
#include "hochschild/homology.hpp"
#include "job.hpp"

namespace hochschild::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

json matrix_json(const SparseMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back({e.row, e.col, e.value.to_string()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json violations_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations()) {
    json item{{"axiom", v.axiom}, {"witness", v.witness}};
    if (!v.detail.empty()) item["detail"] = v.detail;
    out.push_back(std::move(item));
  }
  return out;
}

json difference_json(const MatrixDifference& d) {
  return {{"row", d.row}, {"col", d.col}, {"lhs", d.lhs.to_string()}, {"rhs", d.rhs.to_string()}};
}

class Timer {
 public:
  void phase(const std::string& name, auto&& fn) {
    auto start = Clock::now();
    fn();
    timing_[name] = std::chrono::duration<double>(Clock::now() - start).count();
  }
  const json& timing() const { return timing_; }

 private:
  json timing_ = json::object();
};

ValidationReport validate_job(const Job& job) {
  ValidationReport report;
  report.append(validate_triple(job.triple), "");
  report.append(validate_pair(job.pair), "pair.");
  return report;
}

int cmd_validate(const Job&, json& report) {
  return report["validation"]["ok"].get<bool>() ? kOk : kDomainFailure;
}

int cmd_cohomology(const Job& job, const Options& options, json& report, Timer& timer) {
  if (job.q_max + 1 > job.pair.max_degree()) {
    report["status"] = "degree_out_of_range";
    report["error"] = "q_max " + std::to_string(job.q_max) + " needs the pair through degree " +
                      std::to_string(job.q_max + 1) + ", it stops at " + std::to_string(job.pair.max_degree());
    return kDomainFailure;
  }
  std::vector<SparseMatrix> differentials;
  timer.phase("assemble", [&] {
    for (std::size_t q = 0; q <= job.q_max; ++q) differentials.push_back(pair_differential(job.pair, q, job.triple));
  });
  CohomologyReport result;
  timer.phase("rank", [&] { result = cohomology_from_differentials(differentials); });
  json degrees = json::array();
  for (const auto& d : result.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"cochain_dim", d.cochain_dim},
                       {"rank_out", d.rank_out},
                       {"rank_in", d.rank_in},
                       {"dim", d.cohomology_dim}});
  }
  report["cohomology"] = {{"dims", result.dims()}, {"degrees", std::move(degrees)}};
  if (options.emit_matrices) {
    json ms = json::array();
    for (const auto& d : differentials) ms.push_back(matrix_json(d));
    report["matrices"] = {{"differentials", std::move(ms)}};
  }
  return kOk;
}

int cmd_verify_theorem(const Job& job, const Options& options, json& report, Timer& timer) {
  const auto order = options.reverse_b_order ? BFactorOrder::reversed : BFactorOrder::tensor_matrix;
  const bool ground_b = job.triple.B.dim() == 1;
  bool all_equal = true;
  json degrees = json::array();
  json direct_ms = json::array(), pair_ms = json::array();
  for (std::size_t q = 0; q <= job.q_max; ++q) {
    // δ^ε_{n-1} : C^{n-1} -> C^n against ∂_q : C^q -> C^{q+1}, n = q + 1.
    const std::size_t n = q + 1;
    SparseMatrix direct(job.triple.field(), 0, 0), pair(job.triple.field(), 0, 0);
    timer.phase("direct_n" + std::to_string(n), [&] { direct = secondary_differential_direct(n, job.triple, order); });
    timer.phase("pair_q" + std::to_string(q), [&] { pair = pair_differential(job.pair, q, job.triple); });
    json entry{{"n", n}, {"pair_degree", q}, {"rows", pair.rows()}, {"cols", pair.cols()}};
    auto diff = first_difference(direct, pair);
    entry["equal"] = !diff.has_value();
    if (diff) {
      entry["first_difference"] = difference_json(*diff);
      all_equal = false;
    }
    if (ground_b) {
      bool classical = classical_differential(q, job.triple.A, job.triple.M) == pair;
      entry["classical_equal"] = classical;
      all_equal = all_equal && classical;
    }
    degrees.push_back(std::move(entry));
    if (options.emit_matrices) {
      direct_ms.push_back(matrix_json(direct));
      pair_ms.push_back(matrix_json(pair));
    }
  }
  report["theorem"] = {{"all_equal", all_equal}, {"b_factor_order", options.reverse_b_order ? "reversed" : "tensor_matrix"},
                       {"degrees", std::move(degrees)}};
  if (options.emit_matrices) report["matrices"] = {{"direct", std::move(direct_ms)}, {"pair", std::move(pair_ms)}};
  if (!all_equal) report["status"] = "mismatch";
  return all_equal ? kOk : kDomainFailure;
}

int cmd_phi(const Job& job, const Options& options, json& report, Timer& timer) {
  auto inclusion = inclusion_circle_into_disk(job.q_max + 1);
  bool consistent = true;
  json degrees = json::array(), ms = json::array();
  timer.phase("phi", [&] {
    for (std::size_t q = 0; q <= job.q_max; ++q) {
      auto phi = pair_pullback(inclusion, q, job.triple);
      auto next = pair_pullback(inclusion, q + 1, job.triple);
      bool cochain_map = next * pair_differential(inclusion.target(), q, job.triple) ==
                         pair_differential(inclusion.source(), q, job.triple) * phi;
      // Each row should pick out a single column with coefficient 1.
      bool selection = true;
      std::vector<bool> hit(phi.cols(), false);
      std::size_t distinct = 0;
      for (std::size_t r = 0; r < phi.rows(); ++r) {
        auto row = phi.row(r);
        if (row.size() != 1 || !row[0].value.is_one()) {
          selection = false;
          continue;
        }
        if (!hit[row[0].col]) ++distinct;
        hit[row[0].col] = true;
      }
      consistent = consistent && cochain_map;
      degrees.push_back({{"q", q},
                         {"rows", phi.rows()},
                         {"cols", phi.cols()},
                         {"nnz", phi.nnz()},
                         {"cochain_map", cochain_map},
                         {"column_selection", selection},
                         {"bijective", selection && distinct == phi.rows() && phi.rows() == phi.cols()}});
      if (options.emit_matrices) ms.push_back(matrix_json(phi));
    }
  });
  report["phi"] = {{"degrees", std::move(degrees)}};
  if (options.emit_matrices) report["matrices"] = {{"phi", std::move(ms)}};
  if (!consistent) report["status"] = "inconsistent";
  return consistent ? kOk : kDomainFailure;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const Options& options, std::ostream& out) {
  std::optional<nlohmann::json> config;
  if (options.config_path) config = parse_config_text(read_file(*options.config_path));
  Job job = resolve_job(options, config);

  json report;
  report["schema_version"] = "1";
  report["command"] = options.command;
  report["config_digest"] = digest(job.echo);
  report["job"] = json::parse(job.echo.dump());
  report["status"] = "ok";

  Timer timer;
  ValidationReport validation;
  timer.phase("validate", [&] { validation = validate_job(job); });
  report["validation"] = {{"ok", validation.ok()}, {"violations", violations_json(validation)}};

  int code = kOk;
  if (!validation.ok()) {
    report["status"] = "validation_failed";
    code = kDomainFailure;
  } else {
    try {
      if (options.command == "validate") {
        code = cmd_validate(job, report);
      } else if (options.command == "cohomology") {
        code = cmd_cohomology(job, options, report, timer);
      } else if (options.command == "verify-theorem") {
        code = cmd_verify_theorem(job, options, report, timer);
      } else {
        code = cmd_phi(job, options, report, timer);
      }
    } catch (const ConsistencyError& e) {
      report["status"] = "inconsistent";
      report["error"] = e.what();
      code = kDomainFailure;
    }
  }
  if (options.timing) report["timing"] = timer.timing();
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher order Hochschild cohomology of simplicial pairs", "hochschild"};
  app.require_subcommand(1);
  Options options;
  std::string config_path, fixture, field, pair;
  std::size_t q_max = 0;
  for (auto [name, help] : {std::pair{"validate", "check the algebra, morphism, module and pair axioms"},
                            {"cohomology", "cohomology dimensions up to --qmax"},
                            {"verify-theorem", "compare the secondary differential with the disk-pair differential"},
                            {"phi", "the comparison map from the disk pair to the circle pair"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&options, sub] { options.command = sub->get_name(); });
  }
  auto* config_opt = app.add_option("--config", config_path, "JSON job description");
  auto* fixture_opt = app.add_option("--fixture", fixture, "builtin triple as A or A:B");
  config_opt->excludes(fixture_opt);
  auto* field_opt = app.add_option("--field", field, "Q or a prime below 2^31");
  auto* pair_opt = app.add_option("--pair", pair, "point, circle or disk-pair");
  auto* qmax_opt = app.add_option("--qmax", q_max, "highest cohomological degree");
  app.add_flag("!--no-timing", options.timing, "omit the timing block");
  app.add_flag("--emit-matrices", options.emit_matrices, "include the matrices in the report");
  app.add_flag("--reverse-b-order", options.reverse_b_order, "verify-theorem with the B slots reversed (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
  if (*config_opt) options.config_path = config_path;
  if (*fixture_opt) options.fixture = fixture;
  if (*field_opt) options.field = field;
  if (*pair_opt) options.pair = pair;
  if (*qmax_opt) options.q_max = q_max;

  try {
    return run(options, out);
  } catch (const ConfigError& e) {
    err << "config error at " << e.location() << ": " << e.message() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace hochschild::cli
