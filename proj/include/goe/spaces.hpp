#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "goe/space.hpp"

namespace goe {

// ---------------------------------------------------------------------------
// Z^d acting on itself by translation. G0 is trivial and the transporter of m
// is the translation by m.
template <std::size_t D>
class Zd {
 public:
  static_assert(D >= 1);
  using element_type = std::array<std::int64_t, D>;
  using cell_type = std::array<std::int64_t, D>;
  static constexpr std::size_t dimension = D;

  element_type identity() const { return {}; }
  element_type multiply(const element_type& a, const element_type& b) const {
    element_type r;
    for (std::size_t k = 0; k < D; ++k) r[k] = a[k] + b[k];
    return r;
  }
  element_type inverse(const element_type& a) const {
    element_type r;
    for (std::size_t k = 0; k < D; ++k) r[k] = -a[k];
    return r;
  }
  cell_type act(const element_type& g, const cell_type& m) const { return multiply(g, m); }
  cell_type origin() const { return {}; }
  element_type transporter(const cell_type& m) const { return m; }
  std::span<const element_type> stabiliser() const { return {&stab_, 1}; }

 private:
  element_type stab_{};
};

using Z1 = Zd<1>;
using Z2 = Zd<2>;
using Z3 = Zd<3>;

// ---------------------------------------------------------------------------
// The wallpaper group p4m = Z² ⋊ D4 acting on the square lattice Z². The
// stabiliser of the origin is the point group D4.
struct P4mElement {
  std::array<std::int64_t, 2> t{};
  // Point-group index: rotation by (r % 4) quarter turns after a reflection
  // across the x-axis when r >= 4. Index 0 is the identity.
  std::uint8_t r = 0;

  friend auto operator<=>(const P4mElement&, const P4mElement&) = default;
  friend bool operator==(const P4mElement&, const P4mElement&) = default;
};

class P4m {
 public:
  using element_type = P4mElement;
  using cell_type = std::array<std::int64_t, 2>;
  using Matrix = std::array<std::array<int, 2>, 2>;

  P4m() {
    for (std::uint8_t r = 0; r < 8; ++r) stab_[r] = P4mElement{{0, 0}, r};
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) compose_[a][b] = index_of(product(matrix(a), matrix(b)));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        if (compose_[a][b] == 0) inverse_[a] = static_cast<std::uint8_t>(b);
  }

  element_type identity() const { return {}; }
  element_type multiply(const element_type& a, const element_type& b) const {
    auto rb = apply(a.r, b.t);
    return {{a.t[0] + rb[0], a.t[1] + rb[1]}, compose_[a.r][b.r]};
  }
  element_type inverse(const element_type& a) const {
    auto ri = inverse_[a.r];
    auto t = apply(ri, a.t);
    return {{-t[0], -t[1]}, ri};
  }
  cell_type act(const element_type& g, const cell_type& m) const {
    auto rm = apply(g.r, m);
    return {rm[0] + g.t[0], rm[1] + g.t[1]};
  }
  cell_type origin() const { return {0, 0}; }
  element_type transporter(const cell_type& m) const { return {m, 0}; }
  std::span<const element_type> stabiliser() const { return stab_; }

  // Point-group element only: rotation by k quarter turns, optionally after
  // reflecting across the x-axis.
  static element_type rotation(int quarter_turns) {
    return {{0, 0}, static_cast<std::uint8_t>(((quarter_turns % 4) + 4) % 4)};
  }
  static element_type reflection() { return {{0, 0}, 4}; }
  static element_type translation(std::int64_t x, std::int64_t y) { return {{x, y}, 0}; }

  static Matrix matrix(int r) {
    Matrix m{{{1, 0}, {0, 1}}};
    if (r >= 4) m = {{{1, 0}, {0, -1}}};
    const Matrix quarter{{{0, -1}, {1, 0}}};
    for (int k = 0; k < r % 4; ++k) m = product(quarter, m);
    return m;
  }

 private:
  static Matrix product(const Matrix& a, const Matrix& b) {
    Matrix c{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
  }
  static std::uint8_t index_of(const Matrix& m) {
    for (int r = 0; r < 8; ++r)
      if (matrix(r) == m) return static_cast<std::uint8_t>(r);
    throw std::logic_error("matrix outside D4");
  }
  std::array<std::int64_t, 2> apply(int r, const std::array<std::int64_t, 2>& v) const {
    const auto& m = matrices()[r];
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
  }
  static const std::array<Matrix, 8>& matrices() {
    static const std::array<Matrix, 8> table = [] {
      std::array<Matrix, 8> t{};
      for (int r = 0; r < 8; ++r) t[r] = matrix(r);
      return t;
    }();
    return table;
  }

  std::array<element_type, 8> stab_{};
  std::array<std::array<std::uint8_t, 8>, 8> compose_{};
  std::array<std::uint8_t, 8> inverse_{};
};

// ---------------------------------------------------------------------------
// The dihedral group D_n acting on the vertices 0..n-1 of an n-gon. Element
// (k, s) maps vertex m to k + (s ? -m : m) mod n; G0 = {(0,false), (0,true)}.
struct DihedralElement {
  std::int32_t k = 0;
  bool s = false;

  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

class Dihedral {
 public:
  using element_type = DihedralElement;
  using cell_type = std::int32_t;

  enum class Coordinates { rotation, reflection };

  explicit Dihedral(std::int32_t n, Coordinates coords = Coordinates::rotation)
      : n_(n), coords_(coords) {
    if (n < 1) throw std::invalid_argument("dihedral space needs n >= 1");
    for (std::int32_t m = 0; m < n; ++m) cells_.push_back(m);
    stab_ = {DihedralElement{0, false}, DihedralElement{0, true}};
  }

  std::int32_t n() const { return n_; }
  Coordinates coordinates() const { return coords_; }

  element_type identity() const { return {}; }
  element_type multiply(const element_type& a, const element_type& b) const {
    return {mod(a.k + (a.s ? -b.k : b.k)), a.s != b.s};
  }
  element_type inverse(const element_type& a) const { return {mod(a.s ? a.k : -a.k), a.s}; }
  cell_type act(const element_type& g, const cell_type& m) const {
    return mod(g.k + (g.s ? -m : m));
  }
  cell_type origin() const { return 0; }
  // Rotation coordinates: g_{0,m} is the rotation by m. Reflection
  // coordinates: g_{0,m} is the reflection through the bisector of 0 and m
  // (identity at the origin).
  element_type transporter(const cell_type& m) const {
    if (m == 0) return identity();
    return {mod(m), coords_ == Coordinates::reflection};
  }
  std::span<const element_type> stabiliser() const { return stab_; }
  std::span<const cell_type> cells() const { return cells_; }

  static element_type rotation(std::int32_t k) { return {k, false}; }

 private:
  std::int32_t mod(std::int64_t x) const {
    auto r = static_cast<std::int32_t>(x % n_);
    return r < 0 ? r + n_ : r;
  }

  std::int32_t n_;
  Coordinates coords_;
  std::vector<cell_type> cells_;
  std::vector<element_type> stab_;
};

// ---------------------------------------------------------------------------
// A finite permutation group, given by generators, acting transitively on
// {0, ..., degree-1}. The origin is 0 and, unless overridden, the transporter
// of m is the least group element (lexicographically) mapping 0 to m.
class PermSpace {
 public:
  using element_type = std::vector<std::uint16_t>;
  using cell_type = std::int32_t;

  PermSpace(std::size_t degree, const std::vector<element_type>& generators,
            std::size_t max_order = 200000)
      : degree_(degree) {
    if (degree == 0 || degree > 65535) throw std::invalid_argument("permutation degree out of range");
    for (const auto& g : generators) check_permutation(g);
    element_type id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint16_t>(i);
    std::set<element_type> group{id};
    std::vector<element_type> frontier{id};
    while (!frontier.empty()) {
      std::vector<element_type> next;
      for (const auto& h : frontier)
        for (const auto& g : generators) {
          auto gh = compose(g, h);
          if (group.insert(gh).second) {
            if (group.size() > max_order) throw std::invalid_argument("permutation group too large");
            next.push_back(std::move(gh));
          }
        }
      frontier = std::move(next);
    }
    elements_.assign(group.begin(), group.end());
    transporters_.assign(degree, element_type{});
    std::vector<bool> seen(degree, false);
    for (const auto& g : elements_) {
      if (g[0] == 0) stab_.push_back(g);
      if (!seen[g[0]]) {
        seen[g[0]] = true;
        transporters_[g[0]] = g;
      }
    }
    for (std::size_t m = 0; m < degree; ++m) {
      if (!seen[m]) throw std::invalid_argument("permutation group does not act transitively");
      cells_.push_back(static_cast<cell_type>(m));
    }
  }

  // Replaces the default coordinate system. Each transporter must be a group
  // element mapping 0 to its cell; the origin's must be the identity.
  void set_transporters(const std::map<cell_type, element_type>& overrides) {
    for (const auto& [m, g] : overrides) {
      if (m < 0 || static_cast<std::size_t>(m) >= degree_) throw std::invalid_argument("transporter cell out of range");
      if (!std::binary_search(elements_.begin(), elements_.end(), g))
        throw std::invalid_argument("transporter is not a group element");
      if (g[0] != m) throw std::invalid_argument("transporter does not map the origin to its cell");
      transporters_[static_cast<std::size_t>(m)] = g;
    }
    validate_space(*this);
  }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<element_type>& elements() const { return elements_; }

  element_type identity() const { return elements_.front(); }
  element_type multiply(const element_type& a, const element_type& b) const { return compose(a, b); }
  element_type inverse(const element_type& a) const {
    element_type r(degree_);
    for (std::size_t i = 0; i < degree_; ++i) r[a[i]] = static_cast<std::uint16_t>(i);
    return r;
  }
  cell_type act(const element_type& g, const cell_type& m) const { return g[static_cast<std::size_t>(m)]; }
  cell_type origin() const { return 0; }
  element_type transporter(const cell_type& m) const { return transporters_[static_cast<std::size_t>(m)]; }
  std::span<const element_type> stabiliser() const { return stab_; }
  std::span<const cell_type> cells() const { return cells_; }

 private:
  static element_type compose(const element_type& a, const element_type& b) {
    element_type r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
  }
  void check_permutation(const element_type& g) const {
    if (g.size() != degree_) throw std::invalid_argument("generator has wrong degree");
    std::vector<bool> hit(degree_, false);
    for (auto x : g) {
      if (x >= degree_ || hit[x]) throw std::invalid_argument("generator is not a permutation");
      hit[x] = true;
    }
  }

  std::size_t degree_;
  std::vector<element_type> elements_;
  std::vector<element_type> stab_;
  std::vector<element_type> transporters_;
  std::vector<cell_type> cells_;
};

static_assert(CellSpace<Z1>);
static_assert(CellSpace<Z2>);
static_assert(CellSpace<P4m>);
static_assert(FiniteCellSpace<Dihedral>);
static_assert(FiniteCellSpace<PermSpace>);
static_assert(!FiniteCellSpace<Z2>);

}  // namespace goe
