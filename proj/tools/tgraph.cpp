#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tgraph/analysis.hpp"
#include "tgraph/formulas.hpp"
#include "tgraph/graph.hpp"
#include "tgraph/harness.hpp"
#include "tgraph/presentation.hpp"

namespace {

using namespace tgraph;

Int element_cap_from_env() {
  if (const char* value = std::getenv("TGRAPH_MAX_ELEMENTS")) {
    try {
      return std::stoll(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("TGRAPH_MAX_ELEMENTS is not an integer");
    }
  }
  return kDefaultElementCap;
}

// "bounds:2,4" or a named tag like "dihedral:7", "cyclic:12", "q8", "s5",
// "product:2,3,4".
GeneratorBounds parse_group_spec(const std::string& spec, Int element_cap) {
  constexpr std::string_view prefix = "bounds:";
  if (spec.starts_with(prefix)) {
    std::vector<Int> values;
    std::string token;
    std::istringstream stream(spec.substr(prefix.size()));
    while (std::getline(stream, token, ',')) {
      values.push_back(std::stoll(token));
    }
    Exponents b(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
      b[static_cast<Eigen::Index>(i)] = values[i];
    }
    return GeneratorBounds(std::move(b), element_cap);
  }
  return bounds_of(NamedGroup::parse(spec), element_cap);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
  }
}

void add_sweep_flags(CLI::App* cmd, SweepOptions& options) {
  cmd->add_option("--n-max", options.n_max, "upper end of the n range");
  cmd->add_option("--max", options.max, "upper end of square (m, n) ranges");
  cmd->add_option("--m-max", options.m_max, "upper end of the even-m range");
  cmd->add_option("--workers", options.workers,
                  "worker threads (0 = available parallelism)");
}

int run(int argc, char** argv) {
  CLI::App app{"t-graphs of normal-form group families: construction, analysis "
               "and verification against brute force"};
  app.require_subcommand(1);
  const Int element_cap = element_cap_from_env();

  std::string group_spec;
  Int t = 1;
  std::string format = "json";
  std::string out_path;

  auto* build = app.add_subcommand("build", "build a t-graph and export it");
  build->add_option("group", group_spec,
                    "group spec: bounds:<csv> | cyclic:<m> | product:<csv> | "
                    "dihedral:<n> | q8 | s5")
      ->required();
  build->add_option("--t", t, "distance defining adjacency")->required();
  build->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  build->add_option("--out", out_path, "output file (default: stdout)");

  auto* analyze_cmd = app.add_subcommand("analyze", "full structural analysis");
  analyze_cmd->add_option("group", group_spec, "group spec")->required();
  analyze_cmd->add_option("--t", t, "distance defining adjacency")->required();
  analyze_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* predict = app.add_subcommand("predict", "closed-form predictions");
  predict->add_option("group", group_spec, "group spec")->required();
  predict->add_option("--t", t, "distance defining adjacency")->required();

  SweepOptions sweep_options;
  std::string sweep_id = "all";
  auto* verify = app.add_subcommand("verify", "compare claims to brute force");
  verify->add_option("claim", sweep_id, "sweep name or 'all'");
  add_sweep_flags(verify, sweep_options);
  verify->add_option("--out", out_path, "write the instance CSV here");

  Int table_m = 2;
  Int table_n_max = 20;
  auto* tables = app.add_subcommand("tables", "reproduce a component table");
  tables->add_option("--m", table_m, "table family: 2 or 3")
      ->check(CLI::IsMember({"2", "3"}));
  tables->add_option("--n-max", table_n_max, "rows to check (n = 2..n-max)");
  tables->add_option("--workers", sweep_options.workers, "worker threads");
  tables->add_option("--out", out_path, "write the instance CSV here");

  int conjecture_id = 0;
  std::string artifact_dir = ".";
  auto* conjecture = app.add_subcommand("conjecture", "scan an open question");
  conjecture->add_option("id", conjecture_id, "conjecture id, 1..4")
      ->required()
      ->check(CLI::Range(1, 4));
  SweepOptions conjecture_options;
  conjecture_options.n_max = 12;
  add_sweep_flags(conjecture, conjecture_options);
  conjecture->add_option("--out", artifact_dir, "directory for emitted data files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;
  }

  if (*build) {
    const TGraph g = build_tgraph(parse_group_spec(group_spec, element_cap), t);
    emit(format == "dot" ? to_dot(g) : graph_json(g).dump(), out_path);
    return 0;
  }

  if (*analyze_cmd) {
    const TGraph g = build_tgraph(parse_group_spec(group_spec, element_cap), t);
    emit(report_json(analyze(g)).dump(), out_path);
    return 0;
  }

  if (*predict) {
    const GeneratorBounds bounds = parse_group_spec(group_spec, element_cap);
    auto predictions = nlohmann::json::array();
    if (bounds.generator_count() == 1) {
      predictions.push_back(prediction_json(predict_components_cyclic(bounds[0], t)));
    } else if (bounds.generator_count() == 2) {
      const Int m = bounds[0];
      const Int n = bounds[1];
      predictions.push_back(prediction_json(predict_components_2gen(m, n, t)));
      predictions.push_back(prediction_json(predict_isolated_free(m, n, t)));
      if (m == 2) {
        predictions.push_back(prediction_json(predict_components_dihedral(n, t)));
        predictions.push_back(prediction_json(predict_edges_dihedral(n, t)));
        for (const auto& p : predict_structure_corollaries(n, t)) {
          predictions.push_back(prediction_json(p));
        }
      }
    }
    std::cout << predictions.dump() << '\n';
    return 0;
  }

  if (*verify) {
    std::vector<std::string> sweeps;
    if (sweep_id == "all") {
      sweeps = known_sweeps();
    } else {
      sweeps.push_back(sweep_id);
    }
    auto summaries = nlohmann::json::array();
    std::string csv;
    bool pinned_failure = false;
    for (const auto& id : sweeps) {
      const SweepResult result = verify_claim_sweep(id, sweep_options);
      summaries.push_back(summary_json(result));
      if (!result.all_match() && sweep_is_pinned(id)) pinned_failure = true;
      if (!out_path.empty()) {
        const std::string part = to_csv(result.instances);
        csv += csv.empty() ? part : part.substr(part.find('\n') + 1);
      }
    }
    if (!out_path.empty()) emit(csv, out_path);
    std::cout << (summaries.size() == 1 ? summaries[0] : summaries).dump() << '\n';
    return pinned_failure ? 1 : 0;
  }

  if (*tables) {
    const SweepResult result =
        reproduce_component_table(table_m, table_n_max, sweep_options);
    if (!out_path.empty()) emit(to_csv(result.instances), out_path);
    std::cout << summary_json(result).dump() << '\n';
    return result.all_match() ? 0 : 1;
  }

  if (*conjecture) {
    const ConjectureReport report =
        conjecture_scan(conjecture_id, conjecture_options, artifact_dir);
    std::cout << conjecture_json(report).dump() << '\n';
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tgraph::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
