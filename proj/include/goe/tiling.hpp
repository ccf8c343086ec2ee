#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "goe/amenability.hpp"
#include "goe/geometry.hpp"

namespace goe {

// A set of centres T whose E-images are pairwise disjoint and whose
// E'-images cover the interior of the region.
template <CellSpace S>
struct Tiling {
  CellSet<S> centers;
  CosetSet<S> E;
  CosetSet<S> Eprime;
  CellSet<S> region;
};

// E' = {g g'⁻¹ G0 : e, e' ∈ E, g ∈ e, g' ∈ e'}.
template <CellSpace S>
CosetSet<S> derive_Eprime(const S& space, const CosetSet<S>& E) {
  std::vector<Coset<S>> out;
  std::vector<std::vector<typename S::element_type>> members;
  for (const auto& e : E) members.push_back(coset_members(space, e));
  for (const auto& ge : members)
    for (const auto& gpe : members)
      for (const auto& g : ge)
        for (const auto& gp : gpe) out.push_back(coset_of(space, space.multiply(g, space.inverse(gp))));
  return CosetSet<S>(std::move(out));
}

// Greedy maximal selection: scan the region in cell order and accept t when
// t ⇀ E lies in the region and misses every accepted tile.
template <CellSpace S>
Tiling<S> greedy_tiling(const S& space, const CellSet<S>& region, const CosetSet<S>& E) {
  if (E.empty()) throw PreconditionViolation("tiling needs a non-empty E");
  std::vector<typename S::cell_type> centers;
  std::set<typename S::cell_type> occupied;
  for (const auto& t : region) {
    auto tile = semi_act_set(space, t, E);
    if (!region.includes(tile)) continue;
    bool free = std::none_of(tile.begin(), tile.end(),
                             [&](const auto& m) { return occupied.contains(m); });
    if (!free) continue;
    centers.push_back(t);
    occupied.insert(tile.begin(), tile.end());
  }
  return {CellSet<S>(std::move(centers)), E, derive_Eprime(space, E), region};
}

template <CellSpace S>
struct TilingVerdict {
  enum class Kind { ok, overlap, uncovered };
  Kind kind = Kind::ok;
  std::optional<typename S::cell_type> cell;
  std::vector<typename S::cell_type> tiles;  // witnessing centres
  std::string message;

  [[nodiscard]] bool ok() const { return kind == Kind::ok; }
};

// Checks disjointness of {t ⇀ E} and coverage of the cells m whose E- and
// E'-images both lie in the region by {t ⇀ E'}. Reports the first violation.
template <CellSpace S>
TilingVerdict<S> verify_tiling(const S& space, const Tiling<S>& tiling) {
  using Cell = typename S::cell_type;
  TilingVerdict<S> verdict;
  std::map<Cell, Cell> owner;
  for (const auto& t : tiling.centers) {
    for (const auto& m : semi_act_set(space, t, tiling.E)) {
      auto [it, inserted] = owner.emplace(m, t);
      if (!inserted) {
        verdict.kind = TilingVerdict<S>::Kind::overlap;
        verdict.cell = m;
        verdict.tiles = {it->second, t};
        verdict.message = "tiles overlap";
        return verdict;
      }
    }
  }
  std::vector<Cell> covered_items;
  for (const auto& t : tiling.centers) {
    auto cover = semi_act_set(space, t, tiling.Eprime);
    covered_items.insert(covered_items.end(), cover.begin(), cover.end());
  }
  CellSet<S> covered(std::move(covered_items));
  for (const auto& m : tiling.region) {
    if (!tiling.region.includes(semi_act_set(space, m, tiling.Eprime))) continue;
    if (!tiling.region.includes(semi_act_set(space, m, tiling.E))) continue;
    if (!covered.contains(m)) {
      verdict.kind = TilingVerdict<S>::Kind::uncovered;
      verdict.cell = m;
      verdict.message = "cell not covered by any E'-tile";
      return verdict;
    }
  }
  return verdict;
}

// |T ∩ F^{-E}| / |F|.
template <CellSpace S>
Rational tiling_density(const S& space, const Tiling<S>& tiling, const CellSet<S>& F) {
  if (F.empty()) throw PreconditionViolation("density needs a non-empty F");
  auto inner = interior(space, F, tiling.E, tiling.region);
  auto hit = set_intersection(tiling.centers, inner);
  return {static_cast<std::int64_t>(hit.size()), static_cast<std::int64_t>(F.size())};
}

}  // namespace goe
