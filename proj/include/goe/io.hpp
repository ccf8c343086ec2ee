#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "goe/analyzer.hpp"

// JSON descriptors for spaces, neighbourhoods, rules, patterns, witnesses and
// reports.
//
// Space:  {"kind": "zd", "dim": 1|2|3}
//         {"kind": "p4m"}
//         {"kind": "dihedral", "n": 5, "coords": "rotation"|"reflection"}
//         {"kind": "finite-perm", "degree": n, "generators": [[...], ...],
//          "transporters": {"<cell>": [...]}}
// Rule:   {"builtin": "eca:90" | "life" | "majority" | "identity" | "const:K",
//          "q": 2, "neighborhood": ...}
//         {"q": 2, "neighborhood": [cells] | "moore" | "von-neumann",
//          "table": [...], "name": "...", "strict": true}
// Tables list δ for every local configuration ℓ, read over the neighbourhood
// cosets sorted by canonical representative, at index Σ ℓ_k q^(|N|-1-k).

namespace goe::io {

using json = nlohmann::json;

using AnySpace = std::variant<Z1, Z2, Z3, P4m, Dihedral, PermSpace>;

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline AnySpace parse_space(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw SchemaError("space descriptor needs a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "zd") {
    const int dim = j.value("dim", 1);
    switch (dim) {
      case 1: return Z1{};
      case 2: return Z2{};
      case 3: return Z3{};
      default: throw SchemaError("zd supports dim 1, 2 or 3");
    }
  }
  if (kind == "p4m") return P4m{};
  if (kind == "dihedral") {
    const auto coords = j.value("coords", std::string("rotation"));
    if (coords != "rotation" && coords != "reflection") throw SchemaError("dihedral coords must be rotation or reflection");
    return Dihedral(j.at("n").get<std::int32_t>(),
                    coords == "rotation" ? Dihedral::Coordinates::rotation : Dihedral::Coordinates::reflection);
  }
  if (kind == "finite-perm") {
    auto gens = j.at("generators").get<std::vector<std::vector<std::uint16_t>>>();
    PermSpace space(j.at("degree").get<std::size_t>(), gens);
    if (j.contains("transporters")) {
      std::map<std::int32_t, PermSpace::element_type> overrides;
      for (const auto& [key, value] : j.at("transporters").items())
        overrides[std::stoi(key)] = value.get<PermSpace::element_type>();
      space.set_transporters(overrides);
    }
    return space;
  }
  throw SchemaError("unknown space kind: " + kind);
}

// ---------------------------------------------------------------------------
// Cells, elements, sets, patterns.

template <CellSpace S>
json cell_to_json(const typename S::cell_type& m) {
  if constexpr (std::is_same_v<S, Z1>) {
    return json(m[0]);
  } else {
    return json(m);
  }
}

template <CellSpace S>
typename S::cell_type cell_from_json(const json& j) {
  using Cell = typename S::cell_type;
  if constexpr (std::is_integral_v<Cell>) {
    if (!j.is_number_integer()) throw SchemaError("cell must be an integer");
    return j.get<Cell>();
  } else {
    if constexpr (std::tuple_size_v<Cell> == 1) {
      if (j.is_number_integer()) return Cell{j.get<std::int64_t>()};
    }
    if (!j.is_array() || j.size() != std::tuple_size_v<Cell>)
      throw SchemaError("cell must be an array of " + std::to_string(std::tuple_size_v<Cell>) + " integers");
    return j.get<Cell>();
  }
}

template <CellSpace S>
json element_to_json(const typename S::element_type& g) {
  if constexpr (std::is_same_v<S, P4m>) {
    return json{{"t", g.t}, {"r", g.r}};
  } else if constexpr (std::is_same_v<S, Dihedral>) {
    return json{{"k", g.k}, {"s", g.s}};
  } else {
    return json(g);
  }
}

template <CellSpace S>
json cells_to_json(const CellSet<S>& A) {
  json out = json::array();
  for (const auto& m : A) out.push_back(cell_to_json<S>(m));
  return out;
}

template <CellSpace S>
CellSet<S> cells_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("cell list must be an array");
  std::vector<typename S::cell_type> out;
  for (const auto& c : j) out.push_back(cell_from_json<S>(c));
  return CellSet<S>(std::move(out));
}

template <CellSpace S>
json pattern_to_json(const Pattern<S>& p) {
  json states = json::array();
  for (auto s : p.states) states.push_back(static_cast<int>(s));
  return json{{"cells", cells_to_json<S>(p.domain)}, {"states", states}};
}

template <CellSpace S>
Pattern<S> pattern_from_json(const json& j) {
  const auto& cells = j.at("cells");
  const auto& states = j.at("states");
  if (!cells.is_array() || !states.is_array() || cells.size() != states.size())
    throw SchemaError("pattern needs equally long \"cells\" and \"states\" arrays");
  std::vector<std::pair<typename S::cell_type, State>> entries;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto v = states[i].get<int>();
    if (v < 0 || v > 255) throw SchemaError("pattern state out of range");
    entries.emplace_back(cell_from_json<S>(cells[i]), static_cast<State>(v));
  }
  std::sort(entries.begin(), entries.end());
  std::vector<typename S::cell_type> domain;
  std::vector<State> values;
  for (auto& [m, s] : entries) {
    if (!domain.empty() && domain.back() == m) throw SchemaError("pattern lists a cell twice");
    domain.push_back(m);
    values.push_back(s);
  }
  return {CellSet<S>::from_sorted(std::move(domain)), std::move(values)};
}

// ---------------------------------------------------------------------------
// Neighbourhoods and rules.

template <CellSpace S>
CosetSet<S> parse_neighbourhood(const S& space, const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "moore") return moore_neighbourhood(space);
    if (name == "von-neumann") return von_neumann_neighbourhood(space);
    if (name == "identity" || name == "origin") return CosetSet<S>{trivial_coset(space)};
    throw SchemaError("unknown neighbourhood name: " + name);
  }
  if (!j.is_array()) throw SchemaError("neighbourhood must be a name or a list of cells");
  std::vector<typename S::cell_type> cells;
  for (const auto& c : j) cells.push_back(cell_from_json<S>(c));
  return neighbourhood_from_cells(space, cells);
}

template <CellSpace S>
CosetSet<S> default_neighbourhood(const S& space) {
  if constexpr (std::is_same_v<S, PermSpace>) {
    throw SchemaError("finite-perm spaces need an explicit neighbourhood");
  } else {
    return von_neumann_neighbourhood(space);
  }
}

template <CellSpace S>
SemiCellularAutomaton<S> parse_rule(const S& space, const json& j) {
  if (!j.is_object()) throw SchemaError("rule descriptor must be an object");
  const int q = j.value("q", 2);
  auto neighbourhood = [&] {
    return j.contains("neighborhood") ? parse_neighbourhood(space, j.at("neighborhood")) : default_neighbourhood(space);
  };
  if (j.contains("builtin")) {
    const auto name = j.at("builtin").get<std::string>();
    if (name.rfind("eca:", 0) == 0) {
      if constexpr (std::is_same_v<S, Z1>) {
        return make_eca(std::stoi(name.substr(4)));
      } else {
        throw SchemaError("elementary rules need the space {\"kind\": \"zd\", \"dim\": 1}");
      }
    }
    if (name == "life") {
      if constexpr (std::is_same_v<S, Z2> || std::is_same_v<S, P4m>) {
        return make_life(space);
      } else {
        throw SchemaError("life needs a zd dim-2 or p4m space");
      }
    }
    if (name == "majority") return make_majority(space, neighbourhood(), q);
    if (name == "identity") return make_identity(space, neighbourhood(), q);
    if (name.rfind("const:", 0) == 0) return make_constant(space, neighbourhood(), std::stoi(name.substr(6)), q);
    throw SchemaError("unknown builtin rule: " + name);
  }
  if (!j.contains("table") || !j.contains("neighborhood")) throw SchemaError("table rules need \"neighborhood\" and \"table\"");
  auto N = parse_neighbourhood(space, j.at("neighborhood"));
  LocalRule rule{j.value("name", std::string("table")), q, N.size(), {}};
  for (const auto& v : j.at("table")) {
    auto s = v.get<int>();
    if (s < 0 || s >= q) throw SchemaError("rule table value outside the state range");
    rule.table.push_back(static_cast<State>(s));
  }
  return new_semi_ca(space, q, N, rule, j.value("strict", true)).ca;
}

// ---------------------------------------------------------------------------
// Witnesses and reports.

template <CellSpace S>
json witness_to_json(const GoeWitness<S>& w) {
  if (w.kind == WitnessKind::goe_pattern)
    return json{{"kind", "goe-pattern"}, {"window", cells_to_json<S>(w.core)}, {"pattern", pattern_to_json(w.pattern)}};
  return json{{"kind", "mutually-erasable"},
              {"core", cells_to_json<S>(w.core)},
              {"p", pattern_to_json(w.pattern)},
              {"p_prime", pattern_to_json(*w.partner)}};
}

template <CellSpace S>
GoeWitness<S> witness_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "goe-pattern")
    return {WitnessKind::goe_pattern, cells_from_json<S>(j.at("window")), pattern_from_json<S>(j.at("pattern")),
            std::nullopt};
  if (kind == "mutually-erasable")
    return {WitnessKind::mutually_erasable, cells_from_json<S>(j.at("core")), pattern_from_json<S>(j.at("p")),
            pattern_from_json<S>(j.at("p_prime"))};
  throw SchemaError("unknown witness kind: " + kind);
}

inline json entropy_to_json(const EntropySeries& series) {
  json rows = json::array();
  for (const auto& r : series.rows) {
    rows.push_back(json{{"i", r.index},
                        {"size", r.size},
                        {"count", r.count ? json(*r.count) : json(nullptr)},
                        {"bits_per_cell", r.bits_per_cell},
                        {"status", r.status}});
  }
  return rows;
}

inline json window_log_to_json(const std::vector<WindowLog>& log) {
  json out = json::array();
  for (const auto& e : log)
    out.push_back(json{{"window_size", e.window_size}, {"source_size", e.source_size}, {"status", e.status}});
  return out;
}

template <CellSpace S>
json report_to_json(const AnalysisReport<S>& report, const json& space, const json& rule, const std::string& name,
                    const ReportOptions& options) {
  json witness = json::object();
  witness["goe_pattern"] = report.goe ? witness_to_json(*report.goe) : json(nullptr);
  witness["mutually_erasable"] = report.erasable ? witness_to_json(*report.erasable) : json(nullptr);
  return json{{"schema", 1},
              {"ca", {{"space", space}, {"rule", rule}, {"name", name}}},
              {"surjective", to_string(report.surjective)},
              {"pre_injective", to_string(report.pre_injective)},
              {"evidence", {{"surjective", report.surjective_evidence}, {"pre_injective", report.pre_injective_evidence}}},
              {"witness", witness},
              {"entropy", entropy_to_json(report.entropy)},
              {"search_log", {{"goe", window_log_to_json(report.goe_log)}, {"erasable", window_log_to_json(report.erasable_log)}}},
              {"budgets",
               {{"max_patterns", options.budget.max_patterns},
                {"windows", options.windows},
                {"cores", options.cores},
                {"entropy_max", options.entropy_max}}},
              {"consistency_flag", report.consistency_flag},
              {"notes", report.notes}};
}

}  // namespace goe::io
