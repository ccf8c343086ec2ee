#pragma once

#include <string>
#include <vector>

#include "goe/space.hpp"

// E-interiors, E-closures and E-boundaries of finite cell sets.
//
// All results are computed exactly as subsets of M, through semi-action
// preimages, so no window is needed for correctness. The region overloads
// additionally assert that the exact answer fits the declared window and
// throw RegionOverflow otherwise; results are never silently truncated.

namespace goe {

namespace detail {

template <CellSpace S>
void require_within(const CellSet<S>& result, const CellSet<S>& region, const char* what) {
  if (!region.includes(result))
    throw RegionOverflow(std::string(what) + " leaves the declared region");
}

template <CellSpace S>
void require_subset_of_region(const CellSet<S>& A, const CellSet<S>& region) {
  if (!region.includes(A)) throw RegionOverflow("input set is not contained in the region");
}

}  // namespace detail

// (-⇀c)⁻¹(A) = {m : m ⇀ c ∈ A}; at most |G0|·|A| cells.
template <CellSpace S>
CellSet<S> semi_preimage(const S& space, const CellSet<S>& A, const Coset<S>& c) {
  std::vector<typename S::cell_type> out;
  for (const auto& a : A)
    for (auto& m : semi_preimage_of_cell(space, a, c)) out.push_back(std::move(m));
  return CellSet<S>(std::move(out));
}

// A^{+E} = {m : (m ⇀ E) ∩ A ≠ ∅}.
template <CellSpace S>
CellSet<S> closure(const S& space, const CellSet<S>& A, const CosetSet<S>& E) {
  std::vector<typename S::cell_type> out;
  for (const auto& e : E)
    for (const auto& a : A)
      for (auto& m : semi_preimage_of_cell(space, a, e)) out.push_back(std::move(m));
  return CellSet<S>(std::move(out));
}

// A^{-E} = {m : m ⇀ E ⊆ A}. For empty E this is all of M, which is only
// representable on finite spaces.
template <CellSpace S>
CellSet<S> interior(const S& space, const CellSet<S>& A, const CosetSet<S>& E) {
  if (E.empty()) {
    if constexpr (FiniteCellSpace<S>) {
      auto cells = space.cells();
      return CellSet<S>(std::vector<typename S::cell_type>(cells.begin(), cells.end()));
    } else {
      throw RegionOverflow("interior with respect to the empty set is all of M");
    }
  }
  // Every member of the interior is a preimage of A under the first coset.
  auto candidates = semi_preimage(space, A, E[0]);
  std::vector<typename S::cell_type> out;
  for (const auto& m : candidates) {
    bool inside = true;
    for (const auto& e : E) {
      if (!A.contains(semi_act(space, m, e))) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(m);
  }
  return CellSet<S>::from_sorted(std::move(out));
}

// ∂_E A = A^{+E} ∖ A^{-E}.
template <CellSpace S>
CellSet<S> boundary(const S& space, const CellSet<S>& A, const CosetSet<S>& E) {
  if (E.empty()) return {};
  return set_difference(closure(space, A, E), interior(space, A, E));
}

template <CellSpace S>
CellSet<S> semi_preimage(const S& space, const CellSet<S>& A, const Coset<S>& c,
                         const CellSet<S>& region) {
  detail::require_subset_of_region<S>(A, region);
  auto r = semi_preimage(space, A, c);
  detail::require_within<S>(r, region, "semi-action preimage");
  return r;
}

template <CellSpace S>
CellSet<S> closure(const S& space, const CellSet<S>& A, const CosetSet<S>& E,
                   const CellSet<S>& region) {
  detail::require_subset_of_region<S>(A, region);
  auto r = closure(space, A, E);
  detail::require_within<S>(r, region, "closure");
  return r;
}

template <CellSpace S>
CellSet<S> interior(const S& space, const CellSet<S>& A, const CosetSet<S>& E,
                    const CellSet<S>& region) {
  detail::require_subset_of_region<S>(A, region);
  if (E.empty()) {
    if constexpr (FiniteCellSpace<S>) {
      auto r = interior(space, A, E);
      detail::require_within<S>(r, region, "interior");
      return r;
    } else {
      throw RegionOverflow("interior with respect to the empty set leaves every finite region");
    }
  }
  auto r = interior(space, A, E);
  detail::require_within<S>(r, region, "interior");
  return r;
}

template <CellSpace S>
CellSet<S> boundary(const S& space, const CellSet<S>& A, const CosetSet<S>& E,
                    const CellSet<S>& region) {
  auto plus = closure(space, A, E, region);
  if (E.empty()) return {};
  return set_difference(plus, interior(space, A, E, region));
}

}  // namespace goe
