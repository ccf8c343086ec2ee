#pragma once

#include <random>
#include <string>
#include <vector>

#include "goe/goe.hpp"

// Random instances and definition-level reference implementations shared by
// the unit tests and the acceptance binary. Nothing here calls the library's
// preimage machinery: interiors and closures are recomputed by scanning a
// candidate set and testing m ⇀ E directly.

namespace goe::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

template <std::size_t D>
typename Zd<D>::element_type random_element(const Zd<D>&, Rng& rng, std::int64_t radius = 6) {
  typename Zd<D>::element_type g{};
  for (auto& x : g) x = uniform(rng, -radius, radius);
  return g;
}

inline P4m::element_type random_element(const P4m&, Rng& rng, std::int64_t radius = 6) {
  return {{uniform(rng, -radius, radius), uniform(rng, -radius, radius)}, static_cast<std::uint8_t>(uniform(rng, 0, 7))};
}

inline Dihedral::element_type random_element(const Dihedral& space, Rng& rng, std::int64_t = 0) {
  return {static_cast<std::int32_t>(uniform(rng, 0, space.n() - 1)), uniform(rng, 0, 1) == 1};
}

inline PermSpace::element_type random_element(const PermSpace& space, Rng& rng, std::int64_t = 0) {
  return space.elements()[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(space.order()) - 1))];
}

template <CellSpace S>
typename S::cell_type random_cell(const S& space, Rng& rng, std::int64_t radius = 6) {
  return space.act(random_element(space, rng, radius), space.origin());
}

template <CellSpace S>
Coset<S> random_coset(const S& space, Rng& rng, std::int64_t radius = 2) {
  return coset_of(space, random_element(space, rng, radius));
}

template <CellSpace S>
CellSet<S> random_cells(const S& space, Rng& rng, std::size_t count, std::int64_t radius = 4) {
  std::vector<typename S::cell_type> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_cell(space, rng, radius));
  return CellSet<S>(std::move(out));
}

template <CellSpace S>
CosetSet<S> random_cosets(const S& space, Rng& rng, std::size_t count, std::int64_t radius = 2) {
  std::vector<Coset<S>> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_coset(space, rng, radius));
  return CosetSet<S>(std::move(out));
}

template <CellSpace S>
Pattern<S> random_pattern(const S&, const CellSet<S>& domain, int q, Rng& rng) {
  std::vector<State> states(domain.size());
  for (auto& s : states) s = static_cast<State>(uniform(rng, 0, q - 1));
  return {domain, std::move(states)};
}

// Every cell that could lie in A^{+E} or A^{-E}: all of M for finite spaces,
// otherwise the bounding box of A grown by the largest displacement in E
// (transporters are translations on the lattice spaces).
template <CellSpace S>
CellSet<S> candidate_cells(const S& space, const CellSet<S>& A, const CosetSet<S>& E) {
  if constexpr (FiniteCellSpace<S>) {
    auto cells = space.cells();
    (void)A;
    (void)E;
    return CellSet<S>(std::vector<typename S::cell_type>(cells.begin(), cells.end()));
  } else {
    using Cell = typename S::cell_type;
    constexpr std::size_t D = std::tuple_size_v<Cell>;
    std::int64_t reach = 0;
    for (const auto& e : E) {
      auto d = semi_act(space, space.origin(), e);
      for (auto x : d) reach = std::max(reach, x < 0 ? -x : x);
    }
    Cell lo{}, hi{};
    bool first = true;
    for (const auto& a : A) {
      for (std::size_t k = 0; k < D; ++k) {
        lo[k] = first ? a[k] : std::min(lo[k], a[k]);
        hi[k] = first ? a[k] : std::max(hi[k], a[k]);
      }
      first = false;
    }
    std::vector<Cell> out;
    if (first) return {};
    Cell m = lo;
    for (std::size_t k = 0; k < D; ++k) m[k] -= reach;
    while (true) {
      out.push_back(m);
      std::size_t k = 0;
      for (; k < D; ++k) {
        if (m[k] < hi[k] + reach) {
          ++m[k];
          break;
        }
        m[k] = lo[k] - reach;
      }
      if (k == D) break;
    }
    return CellSet<S>(std::move(out));
  }
}

template <CellSpace S>
CellSet<S> brute_interior(const S& space, const CellSet<S>& A, const CosetSet<S>& E, const CellSet<S>& candidates) {
  std::vector<typename S::cell_type> out;
  for (const auto& m : candidates)
    if (A.includes(semi_act_set(space, m, E))) out.push_back(m);
  return CellSet<S>(std::move(out));
}

template <CellSpace S>
CellSet<S> brute_closure(const S& space, const CellSet<S>& A, const CosetSet<S>& E, const CellSet<S>& candidates) {
  std::vector<typename S::cell_type> out;
  for (const auto& m : candidates)
    if (!disjoint(semi_act_set(space, m, E), A)) out.push_back(m);
  return CellSet<S>(std::move(out));
}

template <CellSpace S>
CellSet<S> brute_preimage(const S& space, const CellSet<S>& A, const Coset<S>& c, const CellSet<S>& candidates) {
  std::vector<typename S::cell_type> out;
  for (const auto& m : candidates)
    if (A.contains(semi_act(space, m, c))) out.push_back(m);
  return CellSet<S>(std::move(out));
}

// Checks the interior/closure/boundary identities on one random instance
// (A, E): the {G0} and {G0, e} formulas, complements, monotonicity in E, the
// inclusions when G0 ∈ E, commutation with the left action and with m ⇀ ι(·),
// the size bound on closures and the preimage bound. Returns the names of
// the identities that failed.
template <CellSpace S>
std::vector<std::string> check_set_identities(const S& space, const CellSet<S>& A, const CosetSet<S>& E, Rng& rng) {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };
  const auto G0 = trivial_coset(space);
  const std::size_t stab = space.stabiliser().size();

  // Library results against the definition.
  {
    auto cand = candidate_cells(space, A, E);
    expect(interior(space, A, E) == brute_interior(space, A, E, cand), "interior = definition");
    expect(closure(space, A, E) == brute_closure(space, A, E, cand), "closure = definition");
  }

  // {G0}
  {
    CosetSet<S> E0{G0};
    expect(interior(space, A, E0) == A, "{G0} interior");
    expect(closure(space, A, E0) == A, "{G0} closure");
    expect(boundary(space, A, E0).empty(), "{G0} boundary");
  }

  // {G0, e}
  {
    auto e = random_coset(space, rng);
    CosetSet<S> E1{G0, e};
    auto cand = candidate_cells(space, A, E1);
    auto pre = brute_preimage(space, A, e, cand);
    expect(interior(space, A, E1) == set_intersection(A, pre), "{G0,e} interior");
    expect(closure(space, A, E1) == set_union(A, pre), "{G0,e} closure");
    expect(boundary(space, A, E1) == set_union(set_difference(A, pre), set_difference(pre, A)), "{G0,e} boundary");
  }

  // Complements, inside a window W large enough that every m with m ⇀ E ⊆ W
  // sees the whole of the relevant neighbourhood.
  {
    CellSet<S> W;
    if constexpr (FiniteCellSpace<S>) {
      W = candidate_cells(space, A, E);
    } else {
      W = candidate_cells(space, candidate_cells(space, A, E), E);
    }
    auto complement = set_difference(W, A);
    auto inner_c = interior(space, complement, E);
    auto outer_c = closure(space, complement, E);
    auto outer = closure(space, A, E);
    auto inner = interior(space, A, E);
    bool ok3a = true, ok3b = true;
    for (const auto& m : W) {
      if (!W.includes(semi_act_set(space, m, E))) continue;
      ok3a = ok3a && (inner_c.contains(m) == !outer.contains(m));
      ok3b = ok3b && (outer_c.contains(m) == !inner.contains(m));
    }
    expect(ok3a, "interior of complement");
    expect(ok3b, "closure of complement");
  }

  // E ⊆ E'
  {
    auto E2 = set_union(E, random_cosets(space, rng, 2));
    expect(interior(space, A, E).includes(interior(space, A, E2)), "monotone in E: interior");
    expect(closure(space, A, E2).includes(closure(space, A, E)), "monotone in E: closure");
    expect(boundary(space, A, E2).includes(boundary(space, A, E)), "monotone in E: boundary");
  }

  // G0 ∈ E
  {
    auto E3 = set_union(E, CosetSet<S>{G0});
    expect(A.includes(interior(space, A, E3)), "G0 in E: interior");
    expect(closure(space, A, E3).includes(A), "G0 in E: closure");
    expect(closure(space, A, E3).size() <= stab * A.size() * E3.size(), "closure size bound");
  }

  // Commutation for G0-closed E.
  {
    auto Ec = g0_closure(space, E);
    auto g = random_element(space, rng);
    auto gA = left_act_set(space, g, A);
    expect(left_act_set(space, g, interior(space, A, Ec)) == interior(space, gA, Ec), "left action: interior");
    expect(left_act_set(space, g, closure(space, A, Ec)) == closure(space, gA, Ec), "left action: closure");
    expect(left_act_set(space, g, boundary(space, A, Ec)) == boundary(space, gA, Ec), "left action: boundary");

    auto m = random_cell(space, rng);
    auto mA = transport_set(space, m, A);
    expect(transport_set(space, m, interior(space, A, Ec)) == interior(space, mA, Ec), "transport: interior");
    expect(transport_set(space, m, closure(space, A, Ec)) == closure(space, mA, Ec), "transport: closure");
    expect(transport_set(space, m, boundary(space, A, Ec)) == boundary(space, mA, Ec), "transport: boundary");
  }

  // Preimage bound.
  {
    auto c = random_coset(space, rng);
    expect(semi_preimage(space, A, c).size() <= stab * A.size(), "preimage bound");
  }
  return failed;
}

// Symmetric binary rules on N = {-1, 0, 1} over a dihedral space: tables
// invariant under swapping the two outer neighbours.
inline std::vector<LocalRule> symmetric_rules(const Dihedral& space, std::size_t limit) {
  auto N = moore_neighbourhood(space);
  std::vector<LocalRule> out;
  for (int number = 0; number < 256 && out.size() < limit; ++number) {
    LocalRule rule = eca_rule(number);
    rule.name = "sym:" + std::to_string(number);
    SemiCellularAutomaton<Dihedral> ca(space, 2, N, rule);
    if (check_bullet_invariance(ca).invariant) out.push_back(rule);
  }
  return out;
}

}  // namespace goe::testing
