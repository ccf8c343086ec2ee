#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "goe/geometry.hpp"
#include "goe/spaces.hpp"

namespace goe {

using State = std::uint8_t;

// A finite partial configuration: states on an ordered finite domain.
template <CellSpace S>
struct Pattern {
  CellSet<S> domain;
  std::vector<State> states;

  Pattern() = default;
  Pattern(CellSet<S> d, std::vector<State> s) : domain(std::move(d)), states(std::move(s)) {
    if (domain.size() != states.size())
      throw std::invalid_argument("pattern domain and state vector differ in size");
  }

  [[nodiscard]] std::size_t size() const { return states.size(); }

  [[nodiscard]] std::optional<State> find(const typename S::cell_type& m) const {
    auto i = domain.index_of(m);
    if (i < 0) return std::nullopt;
    return states[static_cast<std::size_t>(i)];
  }

  [[nodiscard]] State at(const typename S::cell_type& m) const {
    auto i = domain.index_of(m);
    if (i < 0) throw RegionOverflow("cell outside the pattern domain");
    return states[static_cast<std::size_t>(i)];
  }

  // p restricted to sub; sub must be a subset of the domain.
  [[nodiscard]] Pattern restrict_to(const CellSet<S>& sub) const {
    std::vector<State> out;
    out.reserve(sub.size());
    for (const auto& m : sub) out.push_back(at(m));
    return {sub, std::move(out)};
  }

  // Canonical order: domain first, then states lexicographically.
  friend auto operator<=>(const Pattern& a, const Pattern& b) {
    if (auto c = a.domain.items() <=> b.domain.items(); c != 0) return c;
    return a.states <=> b.states;
  }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Integer code of a state vector in base q, first cell most significant, so
// numeric order equals the canonical (lexicographic) pattern order.
inline std::uint64_t encode_states(std::span<const State> states, int q) {
  std::uint64_t code = 0;
  for (auto s : states) code = code * static_cast<std::uint64_t>(q) + s;
  return code;
}

inline std::vector<State> decode_states(std::uint64_t code, std::size_t length, int q) {
  std::vector<State> out(length);
  for (std::size_t k = length; k > 0; --k) {
    out[k - 1] = static_cast<State>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  return out;
}

// q^n, or nullopt when it exceeds `cap`.
inline std::optional<std::uint64_t> checked_power(std::uint64_t q, std::size_t n,
                                                  std::uint64_t cap = UINT64_MAX) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (q != 0 && r > cap / q) return std::nullopt;
    r *= q;
  }
  return r;
}

// Local transition function δ: Q^N → Q as a table. A local configuration ℓ
// is read over N in coset order and indexed by Σ ℓ_k q^(|N|-1-k).
struct LocalRule {
  std::string name;
  int q = 2;
  std::size_t arity = 0;
  std::vector<State> table;

  [[nodiscard]] State operator()(std::span<const State> ell) const {
    return table[static_cast<std::size_t>(encode_states(ell, q))];
  }
};

// Builds a rule table by evaluating fn on every local configuration.
template <class Fn>
LocalRule tabulate_rule(std::string name, int q, std::size_t arity, Fn&& fn) {
  auto size = checked_power(static_cast<std::uint64_t>(q), arity, std::uint64_t{1} << 26);
  if (!size) throw BudgetExceeded("rule table too large");
  LocalRule rule{std::move(name), q, arity, std::vector<State>(*size)};
  for (std::uint64_t i = 0; i < *size; ++i) {
    auto ell = decode_states(i, arity, q);
    rule.table[i] = static_cast<State>(fn(std::span<const State>(ell)));
  }
  return rule;
}

inline LocalRule eca_rule(int number) {
  if (number < 0 || number > 255) throw std::invalid_argument("elementary rule number must be in 0..255");
  LocalRule rule{"eca:" + std::to_string(number), 2, 3, std::vector<State>(8)};
  for (int i = 0; i < 8; ++i) rule.table[i] = static_cast<State>((number >> i) & 1);
  return rule;
}

// <R, Q, N, δ> with G0·N ⊆ N. States are 0..q-1.
template <CellSpace S>
class SemiCellularAutomaton {
 public:
  using cell_type = typename S::cell_type;

  SemiCellularAutomaton(S space, int q, CosetSet<S> N, LocalRule rule)
      : space_(std::move(space)), q_(q), N_(std::move(N)), rule_(std::move(rule)) {
    if (q_ < 1 || q_ > 256) throw std::invalid_argument("state count must be in 1..256");
    if (N_.empty()) throw std::invalid_argument("neighbourhood must be non-empty");
    if (!is_g0_closed(space_, N_)) throw PreconditionViolation("neighbourhood is not G0-closed: G0·N ⊄ N");
    if (rule_.q != q_ || rule_.arity != N_.size())
      throw std::invalid_argument("rule table does not match state count and neighbourhood");
    auto size = checked_power(static_cast<std::uint64_t>(q_), N_.size());
    if (!size || rule_.table.size() != *size) throw std::invalid_argument("rule table has the wrong length");
    for (auto v : rule_.table)
      if (v >= q_) throw std::invalid_argument("rule table value outside the state range");
    auto centre = N_.index_of(trivial_coset(space_));
    centre_ = centre < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(centre));
  }

  [[nodiscard]] const S& space() const { return space_; }
  [[nodiscard]] int q() const { return q_; }
  [[nodiscard]] const CosetSet<S>& neighbourhood() const { return N_; }
  [[nodiscard]] const LocalRule& rule() const { return rule_; }
  [[nodiscard]] const std::string& name() const { return rule_.name; }
  // Position of G0 in N, when present.
  [[nodiscard]] std::optional<std::size_t> centre_index() const { return centre_; }

  [[nodiscard]] State local(std::span<const State> ell) const { return rule_(ell); }

  // m ⇀ n for each n in N, in coset order.
  [[nodiscard]] std::vector<cell_type> neighbours(const cell_type& m) const {
    std::vector<cell_type> out;
    out.reserve(N_.size());
    for (const auto& n : N_) out.push_back(semi_act(space_, m, n));
    return out;
  }

 private:
  S space_;
  int q_;
  CosetSet<S> N_;
  LocalRule rule_;
  std::optional<std::size_t> centre_;
};

template <CellSpace S>
struct ConstructedAutomaton {
  SemiCellularAutomaton<S> ca;
  CosetSet<S> added;  // cosets added to close N under G0
};

// Builds a semi-cellular automaton. When N is not G0-closed it is either
// rejected (strict) or replaced by G0·N, with δ ignoring the added cosets.
template <CellSpace S>
ConstructedAutomaton<S> new_semi_ca(S space, int q, const CosetSet<S>& N, const LocalRule& rule,
                                    bool strict) {
  if (q < 1) throw std::invalid_argument("state set must be non-empty");
  if (is_g0_closed(space, N)) return {SemiCellularAutomaton<S>(std::move(space), q, N, rule), {}};
  if (strict) throw PreconditionViolation("neighbourhood is not G0-closed: G0·N ⊄ N");
  auto closed = g0_closure(space, N);
  auto added = set_difference(closed, N);
  std::vector<std::size_t> positions;
  for (const auto& n : N) positions.push_back(static_cast<std::size_t>(closed.index_of(n)));
  auto lifted = tabulate_rule(rule.name, q, closed.size(), [&](std::span<const State> ell) {
    std::vector<State> original;
    for (auto k : positions) original.push_back(ell[k]);
    return rule(original);
  });
  return {SemiCellularAutomaton<S>(std::move(space), q, closed, std::move(lifted)), added};
}

// ---------------------------------------------------------------------------
// Named neighbourhoods, given as cells around the origin and turned into
// cosets by ι.

template <CellSpace S>
CosetSet<S> neighbourhood_from_cells(const S& space, const std::vector<typename S::cell_type>& cells) {
  std::vector<Coset<S>> out;
  for (const auto& m : cells) out.push_back(iota(space, m));
  return CosetSet<S>(std::move(out));
}

template <CellSpace S>
CosetSet<S> moore_neighbourhood(const S& space, std::int64_t radius = 1) {
  std::vector<typename S::cell_type> cells;
  if constexpr (std::is_same_v<S, Dihedral>) {
    for (std::int64_t k = -radius; k <= radius; ++k)
      cells.push_back(static_cast<std::int32_t>(((k % space.n()) + space.n()) % space.n()));
  } else if constexpr (std::is_same_v<typename S::cell_type, std::array<std::int64_t, 2>>) {
    for (auto x = -radius; x <= radius; ++x)
      for (auto y = -radius; y <= radius; ++y) cells.push_back({x, y});
  } else if constexpr (std::is_same_v<S, Zd<1>>) {
    for (auto x = -radius; x <= radius; ++x) cells.push_back({x});
  } else if constexpr (std::is_same_v<S, Zd<3>>) {
    for (auto x = -radius; x <= radius; ++x)
      for (auto y = -radius; y <= radius; ++y)
        for (auto z = -radius; z <= radius; ++z) cells.push_back({x, y, z});
  } else {
    throw std::invalid_argument("no Moore neighbourhood for this space");
  }
  return neighbourhood_from_cells(space, cells);
}

template <CellSpace S>
CosetSet<S> von_neumann_neighbourhood(const S& space) {
  std::vector<typename S::cell_type> cells;
  if constexpr (std::is_same_v<S, Dihedral>) {
    return moore_neighbourhood(space, 1);
  } else if constexpr (requires { S::dimension; }) {
    cells.push_back({});
    for (std::size_t k = 0; k < S::dimension; ++k)
      for (std::int64_t s : {-1, 1}) {
        typename S::cell_type c{};
        c[k] = s;
        cells.push_back(c);
      }
  } else if constexpr (std::is_same_v<S, P4m>) {
    cells = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  } else {
    throw std::invalid_argument("no von Neumann neighbourhood for this space");
  }
  return neighbourhood_from_cells(space, cells);
}

// ---------------------------------------------------------------------------
// Built-in automata.

inline SemiCellularAutomaton<Z1> make_eca(int number) {
  Z1 space;
  return {space, 2, moore_neighbourhood(space), eca_rule(number)};
}

// Conway's Game of Life over the Moore neighbourhood of Z² or p4m.
template <CellSpace S>
SemiCellularAutomaton<S> make_life(const S& space) {
  auto N = moore_neighbourhood(space);
  auto centre = static_cast<std::size_t>(N.index_of(trivial_coset(space)));
  auto rule = tabulate_rule("life", 2, N.size(), [&](std::span<const State> ell) {
    int alive = 0;
    for (std::size_t k = 0; k < ell.size(); ++k)
      if (k != centre) alive += ell[k];
    return (alive == 3 || (alive == 2 && ell[centre] == 1)) ? 1 : 0;
  });
  return {space, 2, N, std::move(rule)};
}

// Most frequent state in the neighbourhood; ties keep the centre's state when
// it is among the most frequent, otherwise the smallest tied state.
template <CellSpace S>
SemiCellularAutomaton<S> make_majority(const S& space, const CosetSet<S>& N, int q = 2) {
  auto centre = N.index_of(trivial_coset(space));
  auto rule = tabulate_rule("majority", q, N.size(), [&](std::span<const State> ell) {
    std::vector<int> count(static_cast<std::size_t>(q), 0);
    for (auto s : ell) ++count[s];
    int best = *std::max_element(count.begin(), count.end());
    if (centre >= 0 && count[ell[static_cast<std::size_t>(centre)]] == best)
      return static_cast<int>(ell[static_cast<std::size_t>(centre)]);
    return static_cast<int>(std::find(count.begin(), count.end(), best) - count.begin());
  });
  return {space, q, N, std::move(rule)};
}

template <CellSpace S>
SemiCellularAutomaton<S> make_identity(const S& space, const CosetSet<S>& N, int q = 2) {
  auto centre = N.index_of(trivial_coset(space));
  if (centre < 0) throw PreconditionViolation("identity rule needs G0 in the neighbourhood");
  auto rule = tabulate_rule("identity", q, N.size(), [&](std::span<const State> ell) {
    return static_cast<int>(ell[static_cast<std::size_t>(centre)]);
  });
  return {space, q, N, std::move(rule)};
}

template <CellSpace S>
SemiCellularAutomaton<S> make_constant(const S& space, const CosetSet<S>& N, int value, int q = 2) {
  if (value < 0 || value >= q) throw std::invalid_argument("constant outside the state range");
  auto rule = tabulate_rule("const:" + std::to_string(value), q, N.size(),
                            [&](std::span<const State>) { return value; });
  return {space, q, N, std::move(rule)};
}

// ---------------------------------------------------------------------------
// •-invariance: δ(g0 • ℓ) = δ(ℓ) with (g0 • ℓ)(n) = ℓ(g0⁻¹·n).

template <CellSpace S>
struct BulletVerdict {
  bool invariant = true;
  std::uint64_t checks = 0;
  std::optional<typename S::element_type> g0;
  std::vector<State> ell;
};

template <CellSpace S>
BulletVerdict<S> check_bullet_invariance(const SemiCellularAutomaton<S>& ca,
                                         std::uint64_t budget = std::uint64_t{1} << 26) {
  const auto& space = ca.space();
  const auto& N = ca.neighbourhood();
  auto configs = checked_power(static_cast<std::uint64_t>(ca.q()), N.size(), budget);
  auto stab = space.stabiliser();
  if (!configs || *configs > budget / stab.size())
    throw BudgetExceeded("•-invariance check exceeds the budget");
  BulletVerdict<S> verdict;
  for (const auto& g0 : stab) {
    std::vector<std::size_t> perm;
    auto g0inv = space.inverse(g0);
    for (const auto& n : N) perm.push_back(static_cast<std::size_t>(N.index_of(coset_mul(space, g0inv, n))));
    std::vector<State> moved(N.size());
    for (std::uint64_t i = 0; i < *configs; ++i) {
      auto ell = decode_states(i, N.size(), ca.q());
      for (std::size_t k = 0; k < N.size(); ++k) moved[k] = ell[perm[k]];
      ++verdict.checks;
      if (ca.local(moved) != ca.local(ell)) {
        verdict.invariant = false;
        verdict.g0 = g0;
        verdict.ell = std::move(ell);
        return verdict;
      }
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Windowed global transition Δ_A⁻.

// Index table for evaluating δ at every output cell from a source domain.
struct StepPlan {
  std::size_t source_size = 0;
  std::size_t output_size = 0;
  std::size_t arity = 0;
  std::vector<std::uint32_t> index;  // output_size × arity positions in the source

  template <class Ca>
  void apply(const Ca& ca, std::span<const State> source, std::span<State> output) const {
    std::vector<State> ell(arity);
    for (std::size_t i = 0; i < output_size; ++i) {
      for (std::size_t k = 0; k < arity; ++k) ell[k] = source[index[i * arity + k]];
      output[i] = ca.local(ell);
    }
  }
};

// Plan for outputs on `output` ⊆ source^{-N}.
template <CellSpace S>
StepPlan make_step_plan(const SemiCellularAutomaton<S>& ca, const CellSet<S>& source,
                        const CellSet<S>& output) {
  StepPlan plan{source.size(), output.size(), ca.neighbourhood().size(), {}};
  plan.index.reserve(plan.output_size * plan.arity);
  for (const auto& m : output) {
    for (const auto& cell : ca.neighbours(m)) {
      auto i = source.index_of(cell);
      if (i < 0) throw RegionOverflow("output cell's neighbourhood leaves the source domain");
      plan.index.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return plan;
}

// Δ_A⁻(p) on A^{-N}: output(m) = δ(n ↦ p(m ⇀ n)).
template <CellSpace S>
Pattern<S> restricted_step(const SemiCellularAutomaton<S>& ca, const Pattern<S>& p) {
  auto out_domain = interior(ca.space(), p.domain, ca.neighbourhood());
  auto plan = make_step_plan(ca, p.domain, out_domain);
  std::vector<State> out(out_domain.size());
  plan.apply(ca, p.states, out);
  return {std::move(out_domain), std::move(out)};
}

// ---------------------------------------------------------------------------
// Pattern actions.

// g ▸ p: domain g ◂ dom(p), (g ▸ p)(m) = p(g⁻¹ ◂ m).
template <CellSpace S>
Pattern<S> induced_left_action(const S& space, const typename S::element_type& g, const Pattern<S>& p) {
  std::vector<std::pair<typename S::cell_type, State>> moved;
  moved.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) moved.emplace_back(space.act(g, p.domain[i]), p.states[i]);
  std::sort(moved.begin(), moved.end());
  std::vector<typename S::cell_type> cells;
  std::vector<State> states;
  for (auto& [m, s] : moved) {
    cells.push_back(m);
    states.push_back(s);
  }
  return {CellSet<S>::from_sorted(std::move(cells)), std::move(states)};
}

template <CellSpace S>
Pattern<S> induced_left_action(const S& space, const typename S::element_type& g, const Pattern<S>& p,
                               const CellSet<S>& region) {
  auto out = induced_left_action(space, g, p);
  if (!region.includes(out.domain)) throw RegionOverflow("translated pattern leaves the region");
  return out;
}

// m ⇁ p = g_{m0,m} ▸ p, with domain m ⇀ ι(dom(p)).
template <CellSpace S>
Pattern<S> induced_right_semi_action(const S& space, const typename S::cell_type& m, const Pattern<S>& p) {
  return induced_left_action(space, space.transporter(m), p);
}

template <CellSpace S>
Pattern<S> induced_right_semi_action(const S& space, const typename S::cell_type& m, const Pattern<S>& p,
                                     const CellSet<S>& region) {
  return induced_left_action(space, space.transporter(m), p, region);
}

// Whether p occurs at m in the window pattern c.
template <CellSpace S>
bool occurs(const S& space, const Pattern<S>& p, const typename S::cell_type& m, const Pattern<S>& c) {
  auto moved = induced_right_semi_action(space, m, p);
  if (!c.domain.includes(moved.domain)) throw RegionOverflow("occurrence site leaves the window");
  for (std::size_t i = 0; i < moved.size(); ++i)
    if (c.at(moved.domain[i]) != moved.states[i]) return false;
  return true;
}

// N' = {g⁻¹·n' : n, n' ∈ N, g ∈ n}.
template <CellSpace S>
CosetSet<S> derive_Nprime(const S& space, const CosetSet<S>& N) {
  std::vector<Coset<S>> out;
  for (const auto& n : N)
    for (const auto& g : coset_members(space, n)) {
      auto ginv = space.inverse(g);
      for (const auto& np : N) out.push_back(coset_mul(space, ginv, np));
    }
  CosetSet<S> result(std::move(out));
  if (!is_g0_closed(space, result)) throw std::logic_error("derived N' is not G0-closed");
  return result;
}

// Replaces the occurrence of p at each s ∈ S in the window c by p2. p and p2
// live on A^{+N'}, agree off A and have the same image under Δ⁻; the sets
// s ⇀ ι(A^{+N'}) are pairwise disjoint and p occurs at every s.
template <CellSpace S>
Pattern<S> replace_occurrences(const SemiCellularAutomaton<S>& ca, const Pattern<S>& c,
                               const CellSet<S>& sites, const CellSet<S>& A, const Pattern<S>& p,
                               const Pattern<S>& p2) {
  const auto& space = ca.space();
  auto domain = closure(space, A, derive_Nprime(space, ca.neighbourhood()));
  if (p.domain != domain || p2.domain != domain)
    throw PreconditionViolation("patterns must be defined exactly on A^{+N'}");
  auto outside = set_difference(domain, A);
  if (p.restrict_to(outside) != p2.restrict_to(outside))
    throw PreconditionViolation("patterns differ outside A");
  if (restricted_step(ca, p) != restricted_step(ca, p2))
    throw PreconditionViolation("patterns have different images under the restricted step");
  std::map<typename S::cell_type, State> replacement;
  for (const auto& s : sites) {
    auto moved = induced_right_semi_action(space, s, p2);
    if (!c.domain.includes(moved.domain)) throw RegionOverflow("replacement site leaves the window");
    if (!occurs(space, p, s, c)) throw PreconditionViolation("p does not occur at a replacement site");
    for (std::size_t i = 0; i < moved.size(); ++i) {
      if (!replacement.emplace(moved.domain[i], moved.states[i]).second)
        throw PreconditionViolation("replacement sites overlap");
    }
  }
  auto out = c;
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto it = replacement.find(out.domain[i]);
    if (it != replacement.end()) out.states[i] = it->second;
  }
  return out;
}

}  // namespace goe
