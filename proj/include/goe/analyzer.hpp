#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "goe/amenability.hpp"
#include "goe/automaton.hpp"
#include "goe/tiling.hpp"

namespace goe {

struct Budget {
  std::uint64_t max_patterns = std::uint64_t{1} << 22;
  unsigned threads = 1;
};

namespace detail {

// Splits [0, total) into contiguous chunks, runs work(begin, end) on up to
// `threads` workers and returns the results in chunk order.
template <class Work>
auto run_chunks(std::uint64_t total, unsigned threads, Work work) {
  using Result = decltype(work(std::uint64_t{0}, std::uint64_t{0}));
  std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total / 4096 + 1));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = work(0, total);
    return results;
  }
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    std::uint64_t begin = total * w / workers;
    std::uint64_t end = total * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] { results[w] = work(begin, end); });
  }
  for (auto& t : pool) t.join();
  return results;
}

// Advances a base-q digit vector (last digit least significant).
inline void increment(std::vector<State>& digits, int q) {
  for (std::size_t k = digits.size(); k > 0; --k) {
    if (++digits[k - 1] < q) return;
    digits[k - 1] = 0;
  }
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

inline std::uint64_t source_count(int q, std::size_t cells, const Budget& budget, const char* what) {
  auto total = checked_power(static_cast<std::uint64_t>(q), cells, budget.max_patterns);
  if (!total) throw BudgetExceeded(std::string(what) + ": " + std::to_string(q) + "^" +
                                   std::to_string(cells) + " patterns exceed the budget");
  return *total;
}

}  // namespace detail

// ⋃_{m∈F} m ⇀ N, the least A with F ⊆ A^{-N}.
template <CellSpace S>
CellSet<S> out_neighborhood(const S& space, const CellSet<S>& F, const CosetSet<S>& N) {
  std::vector<typename S::cell_type> out;
  for (const auto& m : F)
    for (const auto& n : N) out.push_back(semi_act(space, m, n));
  CellSet<S> A(std::move(out));
  if (!N.empty() && !interior(space, A, N).includes(F))
    throw std::logic_error("out-neighbourhood does not contain F in its interior");
  return A;
}

// π_F(Δ(Q^M)) as sorted state codes over F.
template <CellSpace S>
struct ImagePatterns {
  CellSet<S> window;
  CellSet<S> source;
  std::vector<std::uint64_t> codes;

  [[nodiscard]] bool contains(std::uint64_t code) const {
    return std::binary_search(codes.begin(), codes.end(), code);
  }
};

template <CellSpace S>
ImagePatterns<S> image_patterns(const SemiCellularAutomaton<S>& ca, const CellSet<S>& F,
                                const Budget& budget = {}) {
  auto A = out_neighborhood(ca.space(), F, ca.neighbourhood());
  auto total = detail::source_count(ca.q(), A.size(), budget, "image enumeration");
  auto plan = make_step_plan(ca, A, F);
  const int q = ca.q();
  auto chunks = detail::run_chunks(total, budget.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::unordered_set<std::uint64_t> seen;
    auto source = decode_states(begin, A.size(), q);
    std::vector<State> out(F.size());
    for (std::uint64_t i = begin; i < end; ++i) {
      plan.apply(ca, source, out);
      seen.insert(encode_states(out, q));
      detail::increment(source, q);
    }
    return std::vector<std::uint64_t>(seen.begin(), seen.end());
  });
  std::vector<std::uint64_t> codes;
  for (auto& c : chunks) codes.insert(codes.end(), c.begin(), c.end());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return {F, std::move(A), std::move(codes)};
}

// ---------------------------------------------------------------------------
// Witnesses.

enum class WitnessKind { goe_pattern, mutually_erasable };

template <CellSpace S>
struct GoeWitness {
  WitnessKind kind = WitnessKind::goe_pattern;
  CellSet<S> core;        // A for a mutually erasable pair; F for a GOE pattern
  Pattern<S> pattern;     // p (on F, or on A^{+N'})
  std::optional<Pattern<S>> partner;  // p' for a mutually erasable pair
};

struct WindowLog {
  std::size_t window_size = 0;
  std::size_t source_size = 0;
  std::string status;  // "complete", "witness", "budget-exceeded", "skipped"
};

template <CellSpace S>
struct WitnessSearch {
  std::optional<GoeWitness<S>> witness;
  std::vector<WindowLog> log;
  bool budget_hit = false;
};

// Search windows: the built-in Følner sets on infinite spaces and the first
// i cells (in cell order) on finite ones.
template <CellSpace S>
CellSet<S> search_window(const S& space, std::int64_t i) {
  if constexpr (FiniteCellSpace<S>) {
    if (i < 1) throw std::invalid_argument("window index must be at least 1");
    auto cells = space.cells();
    auto k = std::min<std::size_t>(static_cast<std::size_t>(i), cells.size());
    return CellSet<S>(std::vector<typename S::cell_type>(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(k)));
  } else {
    return folner_boxes(space, i);
  }
}

// First window F (in schedule order) whose image misses a pattern; returns
// the least missing pattern. An exhausted schedule proves nothing.
template <CellSpace S>
WitnessSearch<S> find_goe_pattern(const SemiCellularAutomaton<S>& ca, const std::vector<CellSet<S>>& windows,
                                  const Budget& budget = {}) {
  WitnessSearch<S> result;
  std::optional<std::size_t> exceeded_at;
  for (const auto& F : windows) {
    auto A = out_neighborhood(ca.space(), F, ca.neighbourhood());
    WindowLog entry{F.size(), A.size(), "complete"};
    if (exceeded_at && A.size() >= *exceeded_at) {
      entry.status = "skipped";
      result.log.push_back(entry);
      continue;
    }
    auto full = checked_power(static_cast<std::uint64_t>(ca.q()), A.size(), budget.max_patterns);
    if (!full) {
      entry.status = "budget-exceeded";
      result.budget_hit = true;
      exceeded_at = A.size();
      result.log.push_back(entry);
      continue;
    }
    auto image = image_patterns(ca, F, budget);
    auto all = *checked_power(static_cast<std::uint64_t>(ca.q()), F.size());
    if (image.codes.size() < all) {
      std::uint64_t missing = 0;
      while (missing < image.codes.size() && image.codes[missing] == missing) ++missing;
      entry.status = "witness";
      result.log.push_back(entry);
      result.witness = GoeWitness<S>{WitnessKind::goe_pattern, F,
                                     Pattern<S>(F, decode_states(missing, F.size(), ca.q())), std::nullopt};
      return result;
    }
    result.log.push_back(entry);
  }
  return result;
}

// Least pair p < p' on A^{+N'} that agree off A and share Δ⁻ images, for the
// first core A in the schedule that has one.
template <CellSpace S>
WitnessSearch<S> find_mutually_erasable(const SemiCellularAutomaton<S>& ca, const std::vector<CellSet<S>>& cores,
                                        const Budget& budget = {}) {
  WitnessSearch<S> result;
  const auto& space = ca.space();
  const int q = ca.q();
  auto Nprime = derive_Nprime(space, ca.neighbourhood());
  std::optional<std::size_t> exceeded_at;
  for (const auto& A : cores) {
    auto C = closure(space, A, Nprime);
    WindowLog entry{A.size(), C.size(), "complete"};
    if (exceeded_at && C.size() >= *exceeded_at) {
      entry.status = "skipped";
      result.log.push_back(entry);
      continue;
    }
    auto total = checked_power(static_cast<std::uint64_t>(q), C.size(), budget.max_patterns);
    if (!total) {
      entry.status = "budget-exceeded";
      result.budget_hit = true;
      exceeded_at = C.size();
      result.log.push_back(entry);
      continue;
    }
    auto out_domain = interior(space, C, ca.neighbourhood());
    auto plan = make_step_plan(ca, C, out_domain);
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < C.size(); ++i)
      if (!A.contains(C[i])) outside.push_back(i);

    using Key = std::pair<std::uint64_t, std::uint64_t>;
    using Best = std::pair<std::uint64_t, std::uint64_t>;  // least two codes, second = UINT64_MAX if absent
    auto chunks = detail::run_chunks(*total, budget.threads, [&](std::uint64_t begin, std::uint64_t end) {
      std::unordered_map<Key, Best, detail::PairHash> classes;
      auto source = decode_states(begin, C.size(), q);
      std::vector<State> image(out_domain.size());
      std::vector<State> rest(outside.size());
      for (std::uint64_t code = begin; code < end; ++code) {
        plan.apply(ca, source, image);
        for (std::size_t k = 0; k < outside.size(); ++k) rest[k] = source[outside[k]];
        Key key{encode_states(rest, q), encode_states(image, q)};
        auto [it, inserted] = classes.try_emplace(key, Best{code, UINT64_MAX});
        if (!inserted && it->second.second == UINT64_MAX) it->second.second = code;
        detail::increment(source, q);
      }
      return classes;
    });
    std::unordered_map<Key, Best, detail::PairHash> merged;
    for (auto& chunk : chunks) {
      for (auto& [key, best] : chunk) {
        auto [it, inserted] = merged.try_emplace(key, best);
        if (inserted) continue;
        std::uint64_t v[4] = {it->second.first, it->second.second, best.first, best.second};
        std::sort(v, v + 4);
        it->second = {v[0], v[1]};
      }
    }
    std::optional<Best> winner;
    for (const auto& [key, best] : merged)
      if (best.second != UINT64_MAX && (!winner || best < *winner)) winner = best;
    if (winner) {
      entry.status = "witness";
      result.log.push_back(entry);
      result.witness = GoeWitness<S>{WitnessKind::mutually_erasable, A,
                                     Pattern<S>(C, decode_states(winner->first, C.size(), q)),
                                     Pattern<S>(C, decode_states(winner->second, C.size(), q))};
      return result;
    }
    result.log.push_back(entry);
  }
  return result;
}

// Re-validates a witness from scratch: a GOE pattern must be absent from the
// freshly enumerated image of its window; a mutually erasable pair must
// satisfy the exchange preconditions exactly.
template <CellSpace S>
bool verify_witness(const SemiCellularAutomaton<S>& ca, const GoeWitness<S>& w, const Budget& budget = {}) {
  const auto& space = ca.space();
  for (auto s : w.pattern.states)
    if (s >= ca.q()) return false;
  if (w.kind == WitnessKind::goe_pattern) {
    if (w.pattern.domain != w.core || w.core.empty()) return false;
    auto image = image_patterns(ca, w.core, budget);
    return !image.contains(encode_states(w.pattern.states, ca.q()));
  }
  if (!w.partner || w.core.empty()) return false;
  const auto& p = w.pattern;
  const auto& p2 = *w.partner;
  auto C = closure(space, w.core, derive_Nprime(space, ca.neighbourhood()));
  if (p.domain != C || p2.domain != C || p == p2) return false;
  for (auto s : p2.states)
    if (s >= ca.q()) return false;
  auto outside = set_difference(C, w.core);
  if (p.restrict_to(outside) != p2.restrict_to(outside)) return false;
  return restricted_step(ca, p) == restricted_step(ca, p2);
}

// ---------------------------------------------------------------------------
// Entropy rows log2|π_{F_i}(X)| / |F_i| over the built-in Følner sets.

enum class EntropySubject { full_shift, image };
enum class EntropyMode { exact, sampled };

struct EntropyRow {
  std::int64_t index = 0;
  std::size_t size = 0;
  std::optional<std::uint64_t> count;  // absent when it does not fit or was not computed
  double bits_per_cell = 0.0;
  std::string status;  // "exact", "sampled-lower-bound", "budget-exceeded"
};

struct EntropySeries {
  EntropySubject subject = EntropySubject::full_shift;
  EntropyMode mode = EntropyMode::exact;
  std::vector<EntropyRow> rows;
};

template <CellSpace S>
EntropySeries entropy_series(const SemiCellularAutomaton<S>& ca, EntropySubject subject, std::int64_t i_min,
                             std::int64_t i_max, EntropyMode mode = EntropyMode::exact,
                             std::uint64_t samples = 4096, std::uint64_t seed = 0, const Budget& budget = {}) {
  EntropySeries series{subject, mode, {}};
  const int q = ca.q();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> state_dist(0, q - 1);
  for (auto i = i_min; i <= i_max; ++i) {
    auto F = folner_boxes(ca.space(), i);
    EntropyRow row{i, F.size(), std::nullopt, 0.0, "exact"};
    auto finish = [&](std::uint64_t count) {
      row.count = count;
      row.bits_per_cell = std::log2(static_cast<double>(count)) / static_cast<double>(F.size());
    };
    if (mode == EntropyMode::exact) {
      if (subject == EntropySubject::full_shift) {
        if (auto c = checked_power(static_cast<std::uint64_t>(q), F.size())) {
          finish(*c);
        } else {
          row.bits_per_cell = std::log2(static_cast<double>(q));
        }
      } else {
        try {
          finish(image_patterns(ca, F, budget).codes.size());
        } catch (const BudgetExceeded&) {
          row.status = "budget-exceeded";
        }
      }
    } else {
      row.status = "sampled-lower-bound";
      std::set<std::vector<State>> distinct;
      if (subject == EntropySubject::full_shift) {
        std::vector<State> p(F.size());
        for (std::uint64_t k = 0; k < samples; ++k) {
          for (auto& s : p) s = static_cast<State>(state_dist(rng));
          distinct.insert(p);
        }
      } else {
        auto A = out_neighborhood(ca.space(), F, ca.neighbourhood());
        auto plan = make_step_plan(ca, A, F);
        std::vector<State> source(A.size());
        std::vector<State> out(F.size());
        for (std::uint64_t k = 0; k < samples; ++k) {
          for (auto& s : source) s = static_cast<State>(state_dist(rng));
          plan.apply(ca, source, out);
          distinct.insert(out);
        }
      }
      finish(distinct.size());
    }
    series.rows.push_back(row);
  }
  return series;
}

// ---------------------------------------------------------------------------
// Exact one-dimensional deciders over Z, independent of the witness searches.

namespace detail {

// The rule re-expressed over the contiguous hull [lo, hi] of N.
struct HullRule {
  int q = 2;
  std::size_t width = 0;
  std::vector<State> table;  // indexed by the hull word, first cell most significant
  std::uint64_t states = 1;  // q^(width-1) de Bruijn states
};

inline HullRule hull_rule(const SemiCellularAutomaton<Z1>& ca, std::uint64_t cap) {
  std::vector<std::int64_t> offsets;
  for (const auto& n : ca.neighbourhood()) offsets.push_back(n.rep[0]);
  const auto lo = offsets.front();
  const auto hi = offsets.back();
  HullRule h;
  h.q = ca.q();
  h.width = static_cast<std::size_t>(hi - lo + 1);
  auto size = checked_power(static_cast<std::uint64_t>(h.q), h.width, cap);
  if (!size) throw BudgetExceeded("de Bruijn table exceeds the budget");
  h.states = *size / static_cast<std::uint64_t>(h.q);
  h.table.resize(*size);
  std::vector<State> ell(offsets.size());
  for (std::uint64_t w = 0; w < *size; ++w) {
    auto word = decode_states(w, h.width, h.q);
    for (std::size_t k = 0; k < offsets.size(); ++k) ell[k] = word[static_cast<std::size_t>(offsets[k] - lo)];
    h.table[w] = ca.local(ell);
  }
  return h;
}

}  // namespace detail

// Surjective iff the subset construction over the de Bruijn graph, started
// from the set of all states, never reaches the empty set.
inline bool surjectivity_oracle_1d(const SemiCellularAutomaton<Z1>& ca,
                                   std::uint64_t budget = std::uint64_t{1} << 20) {
  auto h = detail::hull_rule(ca, budget);
  const auto q = static_cast<std::uint64_t>(h.q);
  using Subset = std::vector<bool>;
  std::set<Subset> seen;
  std::vector<Subset> frontier{Subset(h.states, true)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& subset : frontier) {
      for (std::uint64_t y = 0; y < q; ++y) {
        Subset succ(h.states, false);
        bool any = false;
        for (std::uint64_t u = 0; u < h.states; ++u) {
          if (!subset[u]) continue;
          for (std::uint64_t a = 0; a < q; ++a) {
            auto word = u * q + a;
            if (h.table[word] == y) {
              succ[word % h.states] = true;
              any = true;
            }
          }
        }
        if (!any) return false;
        if (seen.insert(succ).second) {
          if (seen.size() > budget) throw BudgetExceeded("subset construction exceeds the budget");
          next.push_back(std::move(succ));
        }
      }
    }
    frontier = std::move(next);
  }
  return true;
}

// Pre-injective iff the pair graph has no path from a diagonal state to a
// diagonal state that uses at least one pair of distinct symbols.
inline bool pre_injectivity_oracle_1d(const SemiCellularAutomaton<Z1>& ca,
                                      std::uint64_t budget = std::uint64_t{1} << 20) {
  auto h = detail::hull_rule(ca, budget);
  const auto q = static_cast<std::uint64_t>(h.q);
  const auto n = h.states;
  if (n > budget / n) throw BudgetExceeded("pair graph exceeds the budget");
  // visited[(u*n + v)*2 + differed]
  std::vector<bool> visited(n * n * 2, false);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t u = 0; u < n; ++u) {
    visited[(u * n + u) * 2] = true;
    stack.push_back((u * n + u) * 2);
  }
  while (!stack.empty()) {
    auto node = stack.back();
    stack.pop_back();
    const bool differed = node % 2;
    const auto u = (node / 2) / n;
    const auto v = (node / 2) % n;
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        auto wu = u * q + a;
        auto wv = v * q + b;
        if (h.table[wu] != h.table[wv]) continue;
        auto nu = wu % n;
        auto nv = wv % n;
        bool d = differed || a != b;
        if (d && nu == nv) return false;
        auto next = (nu * n + nv) * 2 + (d ? 1 : 0);
        if (!visited[next]) {
          visited[next] = true;
          stack.push_back(next);
        }
      }
    }
  }
  return true;
}

struct FiniteOracleResult {
  bool surjective = false;
  bool pre_injective = false;
  std::uint64_t image_size = 0;
  std::uint64_t configurations = 0;
};

// Exhaustive Δ over Q^M. On finite M every difference is finite, so
// pre-injectivity is injectivity.
template <FiniteCellSpace S>
FiniteOracleResult finite_space_oracle(const SemiCellularAutomaton<S>& ca, const Budget& budget = {}) {
  auto cells = ca.space().cells();
  CellSet<S> M(std::vector<typename S::cell_type>(cells.begin(), cells.end()));
  auto total = detail::source_count(ca.q(), M.size(), budget, "finite-space oracle");
  auto plan = make_step_plan(ca, M, M);
  // Surjectivity from coverage of the targets, injectivity from the first
  // collision; the two only agree because M is finite.
  std::vector<bool> hit(total, false);
  bool collision = false;
  std::uint64_t distinct = 0;
  std::vector<State> config(M.size(), 0);
  std::vector<State> out(M.size());
  for (std::uint64_t i = 0; i < total; ++i) {
    plan.apply(ca, config, out);
    auto code = encode_states(out, ca.q());
    if (hit[code]) {
      collision = true;
    } else {
      hit[code] = true;
      ++distinct;
    }
    detail::increment(config, ca.q());
  }
  const bool covered = std::find(hit.begin(), hit.end(), false) == hit.end();
  return {covered, !collision, distinct, total};
}

// ---------------------------------------------------------------------------
// Garden-of-Eden report.

enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
  }
}

struct ReportOptions {
  std::vector<std::int64_t> windows{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<std::int64_t> cores{1, 2, 3, 4, 5, 6};
  std::int64_t entropy_max = 8;
  Budget budget{};
};

template <CellSpace S>
struct AnalysisReport {
  Verdict surjective = Verdict::unknown;
  Verdict pre_injective = Verdict::unknown;
  std::string surjective_evidence;
  std::string pre_injective_evidence;
  std::optional<GoeWitness<S>> goe;
  std::optional<GoeWitness<S>> erasable;
  std::vector<WindowLog> goe_log;
  std::vector<WindowLog> erasable_log;
  EntropySeries entropy;
  bool consistency_flag = false;  // surjective and pre-injective verdicts disagree: a bug
  std::vector<std::string> notes;
};

template <CellSpace S>
AnalysisReport<S> goe_report(const SemiCellularAutomaton<S>& ca, const ReportOptions& options = {}) {
  AnalysisReport<S> report;
  const auto& space = ca.space();
  std::vector<CellSet<S>> windows;
  for (auto i : options.windows) windows.push_back(search_window(space, i));
  std::vector<CellSet<S>> cores;
  for (auto i : options.cores) cores.push_back(search_window(space, i));

  auto goe = find_goe_pattern(ca, windows, options.budget);
  report.goe_log = goe.log;
  if (goe.witness && verify_witness(ca, *goe.witness, options.budget)) {
    report.goe = goe.witness;
    report.surjective = Verdict::no;
    report.surjective_evidence = "garden-of-eden pattern";
  } else {
    report.surjective_evidence = goe.budget_hit ? "search budget exhausted" : "no witness in schedule";
  }
  auto erasable = find_mutually_erasable(ca, cores, options.budget);
  report.erasable_log = erasable.log;
  if (erasable.witness && verify_witness(ca, *erasable.witness, options.budget)) {
    report.erasable = erasable.witness;
    report.pre_injective = Verdict::no;
    report.pre_injective_evidence = "mutually erasable pair";
  } else {
    report.pre_injective_evidence = erasable.budget_hit ? "search budget exhausted" : "no witness in schedule";
  }

  std::optional<bool> oracle_surjective;
  std::optional<bool> oracle_pre_injective;
  std::string oracle_name;
  if constexpr (std::is_same_v<S, Z1>) {
    try {
      oracle_surjective = surjectivity_oracle_1d(ca, options.budget.max_patterns);
      oracle_pre_injective = pre_injectivity_oracle_1d(ca, options.budget.max_patterns);
      oracle_name = "de Bruijn oracle";
    } catch (const BudgetExceeded& e) {
      report.notes.push_back(std::string("1-D oracle skipped: ") + e.what());
    }
  } else if constexpr (FiniteCellSpace<S>) {
    try {
      auto r = finite_space_oracle(ca, options.budget);
      oracle_surjective = r.surjective;
      oracle_pre_injective = r.pre_injective;
      oracle_name = "exhaustive finite-space oracle";
    } catch (const BudgetExceeded& e) {
      report.notes.push_back(std::string("finite-space oracle skipped: ") + e.what());
    }
  }

  auto merge = [&](Verdict& verdict, std::string& evidence, std::optional<bool> oracle, const char* what) {
    if (!oracle) return;
    if (verdict == Verdict::no && *oracle) {
      report.consistency_flag = true;
      report.notes.push_back(std::string(what) + ": oracle contradicts a verified witness");
      return;
    }
    if (verdict == Verdict::unknown) {
      verdict = *oracle ? Verdict::yes : Verdict::no;
      evidence = oracle_name;
    } else {
      evidence += " (confirmed by " + oracle_name + ")";
    }
  };
  merge(report.surjective, report.surjective_evidence, oracle_surjective, "surjectivity");
  merge(report.pre_injective, report.pre_injective_evidence, oracle_pre_injective, "pre-injectivity");

  // Every built-in space is right amenable with finite stabilisers, so a
  // settled disagreement between the two properties is an implementation bug.
  bool settled = report.surjective != Verdict::unknown && report.pre_injective != Verdict::unknown;
  if (settled && report.surjective != report.pre_injective) {
    report.consistency_flag = true;
    report.notes.push_back("MAIN-THEOREM-VIOLATION: surjectivity and pre-injectivity disagree");
  }

  if (options.entropy_max >= 1)
    report.entropy = entropy_series(ca, EntropySubject::image, 1, options.entropy_max, EntropyMode::exact, 0, 0,
                                    options.budget);
  return report;
}

}  // namespace goe
