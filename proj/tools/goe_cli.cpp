#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "goe/commands.hpp"

namespace {

goe::io::json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw goe::io::SchemaError("cannot open " + path);
  return goe::io::json::parse(in);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string dump(const goe::io::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garden-of-Eden analysis for cellular automata over homogeneous spaces"};
  app.require_subcommand(1);

  std::string config_path, report_path, out_path, csv_path, windows;
  std::optional<std::uint64_t> seed, budget_patterns;
  std::optional<unsigned> threads;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "experiment config (JSON, schema 1)")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "RNG seed for sampled modes");
    sub->add_option("--budget-patterns", budget_patterns, "cap on enumerated patterns per search step");
    sub->add_option("--threads", threads, "worker threads");
    sub->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* geometry = app.add_subcommand("geometry", "interior, closure and boundary of a set (JSON)");
  auto* folner = app.add_subcommand("folner", "Følner defects and boundary ratios (CSV)");
  auto* tile = app.add_subcommand("tile", "greedy tiling (JSON) and its density table (CSV)");
  auto* entropy = app.add_subcommand("entropy", "entropy series (CSV)");
  auto* analyze = app.add_subcommand("analyze", "surjectivity / pre-injectivity report (JSON)");
  auto* verify = app.add_subcommand("verify", "replay the witnesses in a report");
  for (auto* sub : {geometry, folner, tile, entropy, analyze}) add_common(sub);
  tile->add_option("--csv", csv_path, "density table output (default: skip)");
  analyze->add_option("--windows", windows, "GOE window schedule, e.g. 1..8 or 2,4,6");
  verify->add_option("--report", report_path, "report written by analyze")->required()->check(CLI::ExistingFile);
  verify->add_option("--budget-patterns", budget_patterns, "cap on enumerated patterns");
  verify->add_option("--threads", threads, "worker threads");
  verify->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    goe::Budget budget;
    if (budget_patterns) budget.max_patterns = *budget_patterns;
    if (threads) budget.threads = std::max(1u, *threads);

    if (verify->parsed()) {
      auto result = goe::cli::cmd_verify(read_json(report_path), budget);
      emit(dump(result.document), out_path);
      return result.exit_code;
    }

    auto config = goe::cli::parse_config(read_json(config_path));
    if (seed) config.seed = *seed;
    if (budget_patterns) config.budget.max_patterns = *budget_patterns;
    if (threads) config.budget.threads = budget.threads;
    if (!windows.empty()) config.windows = windows;

    goe::cli::CommandOutput result;
    if (geometry->parsed()) {
      result = goe::cli::cmd_geometry(config);
      emit(dump(result.document), out_path);
    } else if (folner->parsed()) {
      result = goe::cli::cmd_folner(config);
      emit(result.csv, out_path);
    } else if (tile->parsed()) {
      result = goe::cli::cmd_tile(config);
      emit(dump(result.document), out_path);
      if (!csv_path.empty()) emit(result.csv, csv_path);
    } else if (entropy->parsed()) {
      result = goe::cli::cmd_entropy(config);
      emit(result.csv, out_path);
    } else {
      result = goe::cli::cmd_analyze(config);
      emit(dump(result.document), out_path);
      if (result.exit_code == 2) std::cerr << "goe: MAIN-THEOREM-VIOLATION flagged in report\n";
    }
    return result.exit_code;
  } catch (const goe::io::json::exception& e) {
    std::cerr << "goe: malformed JSON: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "goe: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "goe: error: " << e.what() << "\n";
  }
  return 1;
}
