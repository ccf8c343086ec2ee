#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "goe/io.hpp"

// Batch subcommands behind the `goe` CLI. Each takes a validated experiment
// configuration and returns a JSON document and/or CSV text plus an exit
// code: 0 on success, 1 on usage errors, 2 when a report is inconsistent or a
// witness fails to re-verify.
//
// Config (schema 1):
//   {"schema": 1, "space": {...}, "rule": {...}, "params": {...},
//    "seed": 0, "budget_patterns": 4194304, "threads": 1}

namespace goe::cli {

using io::json;
using io::SchemaError;

struct ExperimentConfig {
  json space;
  json rule;
  json params = json::object();
  std::uint64_t seed = 0;
  Budget budget{};
  std::optional<std::string> windows;
};

struct CommandOutput {
  json document;
  std::string csv;
  int exit_code = 0;
};

inline ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw SchemaError("config must be a JSON object");
  if (j.value("schema", 0) != 1) throw SchemaError("config needs \"schema\": 1");
  if (!j.contains("space") || !j.at("space").is_object()) throw SchemaError("config needs a \"space\" object");
  ExperimentConfig config;
  config.space = j.at("space");
  config.rule = j.value("rule", json(nullptr));
  config.params = j.value("params", json::object());
  if (!config.params.is_object()) throw SchemaError("\"params\" must be an object");
  config.seed = j.value("seed", std::uint64_t{0});
  config.budget.max_patterns = j.value("budget_patterns", config.budget.max_patterns);
  config.budget.threads = j.value("threads", 1u);
  if (config.params.contains("windows")) {
    const auto& w = config.params.at("windows");
    config.windows = w.is_string() ? w.get<std::string>() : w.dump();
  }
  io::parse_space(config.space);  // validates
  return config;
}

// "3", "1..8", "1,2,5" or a JSON array "[1,2,5]".
inline std::vector<std::int64_t> parse_index_spec(const std::string& spec) {
  std::vector<std::int64_t> out;
  if (!spec.empty() && spec.front() == '[') {
    for (const auto& v : json::parse(spec)) out.push_back(v.get<std::int64_t>());
  } else if (auto dots = spec.find(".."); dots != std::string::npos) {
    auto lo = std::stoll(spec.substr(0, dots));
    auto hi = std::stoll(spec.substr(dots + 2));
    if (hi < lo) throw SchemaError("empty index range: " + spec);
    for (auto i = lo; i <= hi; ++i) out.push_back(i);
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  }
  if (out.empty()) throw SchemaError("empty index list");
  for (auto i : out)
    if (i < 1) throw SchemaError("indices must be at least 1");
  return out;
}

inline std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

namespace detail {

template <class Fn>
auto with_space(const json& space_json, Fn&& fn) {
  auto space = io::parse_space(space_json);
  return std::visit([&](const auto& s) { return fn(s); }, space);
}

// {"box": i} | {"cells": [...]} | {"window": i}
template <CellSpace S>
CellSet<S> parse_set(const S& space, const json& j) {
  if (j.contains("box")) return folner_boxes(space, j.at("box").get<std::int64_t>());
  if (j.contains("window")) return search_window(space, j.at("window").get<std::int64_t>());
  if (j.contains("cells")) return io::cells_from_json<S>(j.at("cells"));
  throw SchemaError("set spec needs \"box\", \"window\" or \"cells\"");
}

template <CellSpace S>
json set_summary(const CellSet<S>& A) {
  return json{{"size", A.size()}, {"cells", io::cells_to_json<S>(A)}};
}

template <CellSpace S>
typename S::cell_type default_step(const S& space) {
  if constexpr (std::is_integral_v<typename S::cell_type>) {
    (void)space;
    return 1;
  } else {
    typename S::cell_type c{};
    c[0] = 1;
    return c;
  }
}

template <CellSpace S>
CosetSet<S> param_neighbourhood(const S& space, const json& params, const char* key) {
  if (params.contains(key)) return io::parse_neighbourhood(space, params.at(key));
  return io::parse_neighbourhood(space, json("moore"));
}

inline std::vector<std::int64_t> param_indices(const json& params, const char* key, const std::string& fallback) {
  if (!params.contains(key)) return parse_index_spec(fallback);
  const auto& v = params.at(key);
  return parse_index_spec(v.is_string() ? v.get<std::string>() : v.dump());
}

}  // namespace detail

// Interior, closure and boundary of a set.
inline CommandOutput cmd_geometry(const ExperimentConfig& config) {
  return detail::with_space(config.space, [&](const auto& space) {
    using S = std::decay_t<decltype(space)>;
    const auto& params = config.params;
    if (!params.contains("set")) throw SchemaError("geometry needs params.set");
    auto A = detail::parse_set(space, params.at("set"));
    auto E = detail::param_neighbourhood(space, params, "E");
    CellSet<S> inner, outer, edge;
    if (params.contains("region")) {
      auto region = detail::parse_set(space, params.at("region"));
      inner = interior(space, A, E, region);
      outer = closure(space, A, E, region);
      edge = boundary(space, A, E, region);
    } else {
      inner = interior(space, A, E);
      outer = closure(space, A, E);
      edge = boundary(space, A, E);
    }
    json e_cells = json::array();
    for (const auto& e : E) e_cells.push_back(io::cell_to_json<S>(semi_act(space, space.origin(), e)));
    CommandOutput out;
    out.document = json{{"A", detail::set_summary<S>(A)},
                        {"E", e_cells},
                        {"interior", detail::set_summary<S>(inner)},
                        {"closure", detail::set_summary<S>(outer)},
                        {"boundary", detail::set_summary<S>(edge)}};
    return out;
  });
}

// Følner defect and boundary ratio per index.
inline CommandOutput cmd_folner(const ExperimentConfig& config) {
  return detail::with_space(config.space, [&](const auto& space) {
    using S = std::decay_t<decltype(space)>;
    const auto& params = config.params;
    auto c = iota(space, params.contains("coset") ? io::cell_from_json<S>(params.at("coset")) : detail::default_step(space));
    auto E = detail::param_neighbourhood(space, params, "E");
    auto i_min = params.value("i_min", std::int64_t{1});
    auto i_max = params.value("i_max", std::int64_t{20});
    std::string csv = "i,size,defect,defect_value,boundary_ratio,boundary_ratio_value\n";
    json rows = json::array();
    for (auto i = i_min; i <= i_max; ++i) {
      auto F = folner_boxes(space, i);
      auto defect = folner_defect(space, F, c);
      auto ratio = boundary_ratio(space, F, E);
      csv += std::to_string(i) + "," + std::to_string(F.size()) + "," + format_rational(defect) + "," +
             format_double(to_double(defect)) + "," + format_rational(ratio) + "," + format_double(to_double(ratio)) +
             "\n";
      rows.push_back(json{{"i", i}, {"size", F.size()}, {"defect", format_rational(defect)}, {"boundary_ratio", format_rational(ratio)}});
    }
    CommandOutput out;
    out.csv = std::move(csv);
    out.document = json{{"rows", rows}};
    return out;
  });
}

// Greedy tiling of a region plus its density table over Følner sets.
inline CommandOutput cmd_tile(const ExperimentConfig& config) {
  return detail::with_space(config.space, [&](const auto& space) {
    using S = std::decay_t<decltype(space)>;
    const auto& params = config.params;
    auto E = detail::param_neighbourhood(space, params, "E");
    auto region = params.contains("region") ? detail::parse_set(space, params.at("region")) : folner_boxes(space, 30);
    auto tiling = greedy_tiling(space, region, E);
    auto verdict = verify_tiling(space, tiling);
    const Rational bound(1, 2 * static_cast<std::int64_t>(tiling.Eprime.size()));
    std::string csv = "i,size,centers_in_interior,density,density_value,bound,meets_bound\n";
    for (auto i : detail::param_indices(params, "folner", "1..10")) {
      auto F = folner_boxes(space, i);
      if (!region.includes(F)) continue;
      Rational density;
      try {
        density = tiling_density(space, tiling, F);
      } catch (const RegionOverflow&) {
        continue;
      }
      auto hits = density.numerator() * static_cast<std::int64_t>(F.size()) / density.denominator();
      csv += std::to_string(i) + "," + std::to_string(F.size()) + "," + std::to_string(hits) + "," +
             format_rational(density) + "," + format_double(to_double(density)) + "," + format_rational(bound) + "," +
             (density >= bound ? "true" : "false") + "\n";
    }
    json verify{{"ok", verdict.ok()}, {"message", verdict.message}};
    if (verdict.cell) verify["cell"] = io::cell_to_json<S>(*verdict.cell);
    CommandOutput out;
    out.document = json{{"centers", io::cells_to_json<S>(tiling.centers)},
                        {"count", tiling.centers.size()},
                        {"E_size", tiling.E.size()},
                        {"Eprime_size", tiling.Eprime.size()},
                        {"region_size", region.size()},
                        {"verify", verify}};
    out.csv = std::move(csv);
    return out;
  });
}

// Entropy series of the full shift or of the image of the rule.
inline CommandOutput cmd_entropy(const ExperimentConfig& config) {
  return detail::with_space(config.space, [&](const auto& space) {
    const auto& params = config.params;
    const auto subject_name = params.value("subject", std::string("image"));
    if (subject_name != "image" && subject_name != "full-shift") throw SchemaError("subject must be image or full-shift");
    const auto mode_name = params.value("mode", std::string("exact"));
    if (mode_name != "exact" && mode_name != "sampled") throw SchemaError("mode must be exact or sampled");
    json rule = config.rule;
    if (rule.is_null()) {
      if (subject_name == "image") throw SchemaError("entropy of an image needs a rule");
      rule = json{{"builtin", "identity"}, {"q", params.value("q", 2)}, {"neighborhood", "identity"}};
    }
    auto ca = io::parse_rule(space, rule);
    auto series = entropy_series(ca, subject_name == "image" ? EntropySubject::image : EntropySubject::full_shift,
                                 params.value("i_min", std::int64_t{1}), params.value("i_max", std::int64_t{8}),
                                 mode_name == "exact" ? EntropyMode::exact : EntropyMode::sampled,
                                 params.value("samples", std::uint64_t{4096}), config.seed, config.budget);
    std::string csv = "i,size,count,bits_per_cell,status\n";
    for (const auto& r : series.rows)
      csv += std::to_string(r.index) + "," + std::to_string(r.size) + "," + (r.count ? std::to_string(*r.count) : "") +
             "," + format_double(r.bits_per_cell) + "," + r.status + "\n";
    CommandOutput out;
    out.csv = std::move(csv);
    out.document = json{{"subject", subject_name}, {"mode", mode_name}, {"rows", io::entropy_to_json(series)}};
    return out;
  });
}

namespace detail {

inline ReportOptions report_options(const ExperimentConfig& config) {
  ReportOptions options;
  options.budget = config.budget;
  options.windows = config.windows ? parse_index_spec(*config.windows) : param_indices(config.params, "windows", "1..8");
  options.cores = param_indices(config.params, "cores", "1..6");
  options.entropy_max = config.params.value("entropy_max", std::int64_t{8});
  return options;
}

inline CommandOutput eca_sweep(const ExperimentConfig& config) {
  auto options = report_options(config);
  json rules = json::array();
  int surjective = 0;
  int pre_injective = 0;
  bool identical = true;
  bool flagged = false;
  options.entropy_max = 0;
  for (int k = 0; k < 256; ++k) {
    auto ca = make_eca(k);
    auto report = goe_report(ca, options);
    bool s = report.surjective == Verdict::yes;
    bool p = report.pre_injective == Verdict::yes;
    surjective += s;
    pre_injective += p;
    identical = identical && s == p;
    flagged = flagged || report.consistency_flag;
    rules.push_back(json{{"rule", k},
                         {"surjective", to_string(report.surjective)},
                         {"pre_injective", to_string(report.pre_injective)},
                         {"goe_width", report.goe ? json(report.goe->core.size()) : json(nullptr)},
                         {"erasable_core", report.erasable ? json(report.erasable->core.size()) : json(nullptr)},
                         {"consistency_flag", report.consistency_flag}});
  }
  CommandOutput out;
  out.document = json{{"schema", 1},
                      {"sweep", "eca:all"},
                      {"surjective_count", surjective},
                      {"pre_injective_count", pre_injective},
                      {"identical_verdicts", identical},
                      {"consistency_flag", flagged},
                      {"rules", rules}};
  out.exit_code = flagged ? 2 : 0;
  return out;
}

}  // namespace detail

// Full Garden-of-Eden report; rule "eca:all" sweeps every elementary rule.
inline CommandOutput cmd_analyze(const ExperimentConfig& config) {
  if (config.rule.is_null()) throw SchemaError("analyze needs a rule");
  if (config.rule.value("builtin", std::string()) == "eca:all") {
    if (io::parse_space(config.space).index() != 0) throw SchemaError("eca:all needs the zd dim-1 space");
    return detail::eca_sweep(config);
  }
  return detail::with_space(config.space, [&](const auto& space) {
    auto ca = io::parse_rule(space, config.rule);
    auto options = detail::report_options(config);
    auto report = goe_report(ca, options);
    CommandOutput out;
    out.document = io::report_to_json(report, config.space, config.rule, ca.name(), options);
    out.exit_code = report.consistency_flag ? 2 : 0;
    return out;
  });
}

// Replays every witness in a report from scratch.
inline CommandOutput cmd_verify(const json& report, const Budget& budget = {}) {
  if (!report.is_object() || report.value("schema", 0) != 1 || !report.contains("ca"))
    throw SchemaError("not a schema-1 analysis report");
  const auto& ca_json = report.at("ca");
  return detail::with_space(ca_json.at("space"), [&](const auto& space) {
    using S = std::decay_t<decltype(space)>;
    auto ca = io::parse_rule(space, ca_json.at("rule"));
    const auto& witness = report.at("witness");
    bool ok = true;
    json result = json::object();
    auto check = [&](const char* key, const char* verdict_key) {
      if (!witness.contains(key) || witness.at(key).is_null()) {
        result[key] = "absent";
        return;
      }
      auto w = io::witness_from_json<S>(witness.at(key));
      bool valid = verify_witness(ca, w, budget);
      bool coherent = report.value(verdict_key, std::string()) == "no";
      result[key] = valid && coherent ? "verified" : "failed";
      ok = ok && valid && coherent;
    };
    check("goe_pattern", "surjective");
    check("mutually_erasable", "pre_injective");
    result["ok"] = ok;
    CommandOutput out;
    out.document = result;
    out.exit_code = ok ? 0 : 2;
    return out;
  });
}

}  // namespace goe::cli
