#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "goe/geometry.hpp"
#include "goe/spaces.hpp"

namespace goe {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

namespace detail {

// Cells of the box [lo, lo+side)^D in lexicographic (= cell) order.
template <std::size_t D>
std::vector<std::array<std::int64_t, D>> box_cells(std::int64_t lo, std::int64_t side) {
  std::vector<std::array<std::int64_t, D>> out;
  std::array<std::int64_t, D> x;
  x.fill(lo);
  if (side <= 0) return out;
  while (true) {
    out.push_back(x);
    std::size_t k = D;
    while (k > 0) {
      --k;
      if (++x[k] < lo + side) break;
      x[k] = lo;
      if (k == 0) return out;
    }
  }
}

}  // namespace detail

// The i-th set of the built-in right Følner sequence: [0, i) on Z, the i×…×i
// box with lower corner -⌊i/2⌋ on Z^d (d ≥ 2) and p4m, and all of M on finite
// spaces.
template <CellSpace S>
CellSet<S> folner_boxes(const S& space, std::int64_t i) {
  if (i < 1) throw std::invalid_argument("Følner index must be at least 1");
  if constexpr (FiniteCellSpace<S>) {
    auto cells = space.cells();
    return CellSet<S>(std::vector<typename S::cell_type>(cells.begin(), cells.end()));
  } else if constexpr (std::is_same_v<S, Zd<1>>) {
    return CellSet<S>::from_sorted(detail::box_cells<1>(0, i));
  } else if constexpr (std::is_same_v<S, P4m>) {
    return CellSet<S>::from_sorted(detail::box_cells<2>(-(i / 2), i));
  } else if constexpr (requires { S::dimension; }) {
    return CellSet<S>::from_sorted(detail::box_cells<S::dimension>(-(i / 2), i));
  } else {
    static_assert(sizeof(S) == 0, "no built-in Følner sequence for this space");
  }
}

// |F ∖ (-⇀c)⁻¹(F)| / |F|.
template <CellSpace S>
Rational folner_defect(const S& space, const CellSet<S>& F, const Coset<S>& c) {
  if (F.empty()) throw PreconditionViolation("Følner set must be non-empty");
  auto escaped = set_difference(F, semi_preimage(space, F, c));
  return {static_cast<std::int64_t>(escaped.size()), static_cast<std::int64_t>(F.size())};
}

template <CellSpace S>
Rational folner_defect(const S& space, const CellSet<S>& F, const Coset<S>& c,
                       const CellSet<S>& region) {
  if (F.empty()) throw PreconditionViolation("Følner set must be non-empty");
  auto escaped = set_difference(F, semi_preimage(space, F, c, region));
  return {static_cast<std::int64_t>(escaped.size()), static_cast<std::int64_t>(F.size())};
}

// |∂_E F| / |F|.
template <CellSpace S>
Rational boundary_ratio(const S& space, const CellSet<S>& F, const CosetSet<S>& E) {
  if (F.empty()) throw PreconditionViolation("Følner set must be non-empty");
  return {static_cast<std::int64_t>(boundary(space, F, E).size()),
          static_cast<std::int64_t>(F.size())};
}

template <CellSpace S>
Rational boundary_ratio(const S& space, const CellSet<S>& F, const CosetSet<S>& E,
                        const CellSet<S>& region) {
  if (F.empty()) throw PreconditionViolation("Følner set must be non-empty");
  return {static_cast<std::int64_t>(boundary(space, F, E, region).size()),
          static_cast<std::int64_t>(F.size())};
}

}  // namespace goe
