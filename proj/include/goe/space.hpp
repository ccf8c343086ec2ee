#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "goe/sorted_set.hpp"

namespace goe {

// A cell (or a derived set) fell outside the declared finite window.
class RegionOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured pattern budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition does not hold; the message names the clause.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A left homogeneous space <M, G, ◂> together with a coordinate system
// <m0, (g_{m0,m})>. The stabiliser G0 of the origin must be finite and is
// listed explicitly.
template <class S>
concept CellSpace =
    std::totally_ordered<typename S::element_type> &&
    std::totally_ordered<typename S::cell_type> &&
    requires(const S& s, const typename S::element_type& g,
             const typename S::cell_type& m) {
      { s.identity() } -> std::same_as<typename S::element_type>;
      { s.multiply(g, g) } -> std::same_as<typename S::element_type>;
      { s.inverse(g) } -> std::same_as<typename S::element_type>;
      { s.act(g, m) } -> std::same_as<typename S::cell_type>;
      { s.origin() } -> std::same_as<typename S::cell_type>;
      { s.transporter(m) } -> std::same_as<typename S::element_type>;
      { s.stabiliser() } -> std::convertible_to<std::span<const typename S::element_type>>;
    };

// Spaces whose cell set is finite and enumerable.
template <class S>
concept FiniteCellSpace = CellSpace<S> && requires(const S& s) {
  { s.cells() } -> std::convertible_to<std::span<const typename S::cell_type>>;
};

// Left coset g·G0 held by its canonical representative, the least element of
// the coset in the element order.
template <class S>
struct Coset {
  typename S::element_type rep;

  friend auto operator<=>(const Coset&, const Coset&) = default;
  friend bool operator==(const Coset&, const Coset&) = default;
};

template <class S>
using CellSet = SortedSet<typename S::cell_type>;

template <class S>
using CosetSet = SortedSet<Coset<S>>;

template <CellSpace S>
Coset<S> coset_of(const S& space, const typename S::element_type& g) {
  auto best = g;
  for (const auto& g0 : space.stabiliser()) {
    auto candidate = space.multiply(g, g0);
    if (candidate < best) best = candidate;
  }
  return Coset<S>{best};
}

// The coset G0 itself.
template <CellSpace S>
Coset<S> trivial_coset(const S& space) {
  return coset_of(space, space.identity());
}

// All |G0| elements of a coset, in element order.
template <CellSpace S>
std::vector<typename S::element_type> coset_members(const S& space, const Coset<S>& c) {
  std::vector<typename S::element_type> out;
  for (const auto& g0 : space.stabiliser()) out.push_back(space.multiply(c.rep, g0));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <CellSpace S>
bool in_stabiliser(const S& space, const typename S::element_type& g) {
  auto stab = space.stabiliser();
  return std::find(stab.begin(), stab.end(), g) != stab.end();
}

// m ⇀ gG0 = g_{m0,m} g ◂ m0.
template <CellSpace S>
typename S::cell_type semi_act(const S& space, const typename S::cell_type& m,
                               const Coset<S>& c) {
  return space.act(space.multiply(space.transporter(m), c.rep), space.origin());
}

// ι(m) = G_{m0,m} = g_{m0,m} G0; inverse of m0 ⇀ ·.
template <CellSpace S>
Coset<S> iota(const S& space, const typename S::cell_type& m) {
  return coset_of(space, space.transporter(m));
}

// g · c as a coset.
template <CellSpace S>
Coset<S> coset_mul(const S& space, const typename S::element_type& g, const Coset<S>& c) {
  return coset_of(space, space.multiply(g, c.rep));
}

// An element g of c with (m ⇀ c) ⇀ 𝔤' = m ⇀ g·𝔤' for every coset 𝔤', in
// particular (m ⇀ c) ⇀ g⁻¹G0 = m. The choice g_{m0,m}⁻¹ g_{m0,m⇀c} makes the
// identity hold element-wise.
template <CellSpace S>
typename S::element_type undo_representative(const S& space, const typename S::cell_type& m,
                                             const Coset<S>& c) {
  return space.multiply(space.inverse(space.transporter(m)),
                        space.transporter(semi_act(space, m, c)));
}

// All m with m ⇀ c = a. Every such m is a ⇀ g⁻¹G0 for some g ∈ c, so at most
// |G0| candidates need checking.
template <CellSpace S>
std::vector<typename S::cell_type> semi_preimage_of_cell(const S& space,
                                                         const typename S::cell_type& a,
                                                         const Coset<S>& c) {
  std::vector<typename S::cell_type> out;
  for (const auto& g : coset_members(space, c)) {
    auto m = semi_act(space, a, coset_of(space, space.inverse(g)));
    if (semi_act(space, m, c) == a) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// m ⇀ E as a set of cells.
template <CellSpace S>
CellSet<S> semi_act_set(const S& space, const typename S::cell_type& m, const CosetSet<S>& E) {
  std::vector<typename S::cell_type> out;
  out.reserve(E.size());
  for (const auto& e : E) out.push_back(semi_act(space, m, e));
  return CellSet<S>(std::move(out));
}

// g ◂ A.
template <CellSpace S>
CellSet<S> left_act_set(const S& space, const typename S::element_type& g, const CellSet<S>& A) {
  std::vector<typename S::cell_type> out;
  out.reserve(A.size());
  for (const auto& a : A) out.push_back(space.act(g, a));
  return CellSet<S>(std::move(out));
}

// m ⇀ ι(A) = g_{m0,m} ◂ A.
template <CellSpace S>
CellSet<S> transport_set(const S& space, const typename S::cell_type& m, const CellSet<S>& A) {
  return left_act_set(space, space.transporter(m), A);
}

template <CellSpace S>
CosetSet<S> iota_set(const S& space, const CellSet<S>& A) {
  std::vector<Coset<S>> out;
  for (const auto& a : A) out.push_back(iota(space, a));
  return CosetSet<S>(std::move(out));
}

template <CellSpace S>
bool is_g0_closed(const S& space, const CosetSet<S>& E) {
  for (const auto& g0 : space.stabiliser())
    for (const auto& e : E)
      if (!E.contains(coset_mul(space, g0, e))) return false;
  return true;
}

// Smallest G0-closed superset G0·E.
template <CellSpace S>
CosetSet<S> g0_closure(const S& space, const CosetSet<S>& E) {
  std::vector<Coset<S>> out;
  for (const auto& g0 : space.stabiliser())
    for (const auto& e : E) out.push_back(coset_mul(space, g0, e));
  return CosetSet<S>(std::move(out));
}

// Checks the structural requirements on a space: the listed stabiliser fixes
// the origin, is closed under products and inverses, and the coordinate
// system maps the origin to the identity. Throws std::invalid_argument.
template <CellSpace S>
void validate_space(const S& space) {
  const auto stab = space.stabiliser();
  if (stab.empty()) throw std::invalid_argument("stabiliser list is empty");
  for (const auto& g0 : stab) {
    if (space.act(g0, space.origin()) != space.origin())
      throw std::invalid_argument("stabiliser element does not fix the origin");
    if (!in_stabiliser(space, space.inverse(g0)))
      throw std::invalid_argument("stabiliser not closed under inverse");
    for (const auto& h0 : stab)
      if (!in_stabiliser(space, space.multiply(g0, h0)))
        throw std::invalid_argument("stabiliser not closed under multiplication");
  }
  if (space.transporter(space.origin()) != space.identity())
    throw std::invalid_argument("transporter of the origin must be the identity");
}

}  // namespace goe
