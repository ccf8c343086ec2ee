#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace goe;

namespace {

std::vector<CellSet<Z1>> widths(std::int64_t lo, std::int64_t hi) {
  std::vector<CellSet<Z1>> out;
  for (auto i = lo; i <= hi; ++i) out.push_back(folner_boxes(Z1{}, i));
  return out;
}

std::string bits(const Pattern<Z1>& p) {
  std::string s;
  for (auto v : p.states) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace

TEST(Analyzer, OutNeighbourhood) {
  Z1 z;
  auto F = folner_boxes(z, 6);
  EXPECT_EQ(out_neighborhood(z, F, CosetSet<Z1>{trivial_coset(z)}), F);
  auto A = out_neighborhood(z, F, moore_neighbourhood(z));
  ASSERT_EQ(A.size(), 8u);
  EXPECT_EQ(A[0], (Z1::cell_type{-1}));
  EXPECT_EQ(A[7], (Z1::cell_type{6}));
  Z2 z2;
  EXPECT_EQ(out_neighborhood(z2, folner_boxes(z2, 5), moore_neighbourhood(z2)).size(), 49u);
}

TEST(Analyzer, ImagePatterns) {
  auto zero = image_patterns(make_eca(0), folner_boxes(Z1{}, 5));
  EXPECT_EQ(zero.codes, (std::vector<std::uint64_t>{0}));
  auto r90 = image_patterns(make_eca(90), folner_boxes(Z1{}, 1));
  EXPECT_EQ(r90.codes, (std::vector<std::uint64_t>{0, 1}));
  auto id = image_patterns(make_eca(204), folner_boxes(Z1{}, 6));
  EXPECT_EQ(id.codes.size(), 64u);
  Dihedral d5(5);
  auto idq3 = image_patterns(make_identity(d5, moore_neighbourhood(d5), 3), folner_boxes(d5, 1));
  EXPECT_EQ(idq3.codes.size(), 243u);
  Budget tiny{100, 1};
  EXPECT_THROW(image_patterns(make_eca(90), folner_boxes(Z1{}, 10), tiny), BudgetExceeded);
}

TEST(Analyzer, ImagePatternsIndependentOfThreads) {
  auto ca = make_eca(110);
  auto F = folner_boxes(Z1{}, 12);
  auto one = image_patterns(ca, F, Budget{1u << 22, 1});
  auto four = image_patterns(ca, F, Budget{1u << 22, 4});
  EXPECT_EQ(one.codes, four.codes);
}

TEST(Analyzer, GardenOfEdenSearch) {
  auto zero = find_goe_pattern(make_eca(0), widths(1, 8));
  ASSERT_TRUE(zero.witness.has_value());
  EXPECT_EQ(zero.witness->core, folner_boxes(Z1{}, 1));
  EXPECT_EQ(bits(zero.witness->pattern), "1");

  auto r90 = find_goe_pattern(make_eca(90), widths(1, 8));
  EXPECT_FALSE(r90.witness.has_value());
  EXPECT_FALSE(r90.budget_hit);
  EXPECT_EQ(r90.log.size(), 8u);
  EXPECT_FALSE(find_goe_pattern(make_eca(204), widths(1, 8)).witness.has_value());

  // Rule 110 has no GOE pattern below width 5; the least one at width 5 is 01010.
  auto r110 = find_goe_pattern(make_eca(110), widths(1, 8));
  ASSERT_TRUE(r110.witness.has_value());
  EXPECT_EQ(bits(r110.witness->pattern), "01010");
  EXPECT_TRUE(verify_witness(make_eca(110), *r110.witness));

  auto capped = find_goe_pattern(make_eca(90), widths(1, 8), Budget{1u << 6, 1});
  EXPECT_TRUE(capped.budget_hit);
  EXPECT_EQ(capped.log.back().status, "skipped");
}

TEST(Analyzer, MutuallyErasableSearch) {
  auto zero = find_mutually_erasable(make_eca(0), widths(1, 6));
  ASSERT_TRUE(zero.witness.has_value());
  const auto& w = *zero.witness;
  EXPECT_EQ(w.core, folner_boxes(Z1{}, 1));
  EXPECT_EQ(bits(w.pattern), "00000");
  EXPECT_EQ(bits(*w.partner), "00100");
  EXPECT_TRUE(verify_witness(make_eca(0), w));

  EXPECT_FALSE(find_mutually_erasable(make_eca(90), widths(1, 6)).witness.has_value());
  EXPECT_FALSE(find_mutually_erasable(make_eca(204), widths(1, 6)).witness.has_value());

  auto one = find_mutually_erasable(make_eca(110), widths(1, 6), Budget{1u << 22, 1});
  auto four = find_mutually_erasable(make_eca(110), widths(1, 6), Budget{1u << 22, 4});
  ASSERT_TRUE(one.witness.has_value());
  EXPECT_EQ(one.witness->pattern, four.witness->pattern);
  EXPECT_EQ(*one.witness->partner, *four.witness->partner);
}

TEST(Analyzer, TamperedWitnessesFailVerification) {
  auto ca = make_eca(0);
  auto goe = *find_goe_pattern(ca, widths(1, 3)).witness;
  goe.pattern.states[0] = 0;
  EXPECT_FALSE(verify_witness(ca, goe));
  auto me = *find_mutually_erasable(ca, widths(1, 3)).witness;
  auto bad = me;
  bad.partner->states.front() = 1;  // now differs outside the core
  EXPECT_FALSE(verify_witness(ca, bad));
  bad = me;
  bad.partner = bad.pattern;
  EXPECT_FALSE(verify_witness(ca, bad));
  EXPECT_FALSE(verify_witness(make_eca(204), me));
}

TEST(Analyzer, EntropyRows) {
  auto full = entropy_series(make_eca(90), EntropySubject::full_shift, 1, 12);
  for (const auto& r : full.rows) {
    EXPECT_EQ(r.bits_per_cell, 1.0);
    EXPECT_EQ(*r.count, std::uint64_t{1} << r.size);
  }
  for (const auto& r : entropy_series(make_eca(0), EntropySubject::image, 1, 12).rows) {
    EXPECT_EQ(r.bits_per_cell, 0.0);
    EXPECT_EQ(r.status, "exact");
  }
  for (const auto& r : entropy_series(make_eca(90), EntropySubject::image, 1, 12).rows) EXPECT_EQ(r.bits_per_cell, 1.0);
  for (const auto& r : entropy_series(make_eca(110), EntropySubject::image, 1, 12).rows) EXPECT_LE(r.bits_per_cell, 1.0);

  auto sampled = entropy_series(make_eca(110), EntropySubject::image, 4, 10, EntropyMode::sampled, 500, 7);
  auto again = entropy_series(make_eca(110), EntropySubject::image, 4, 10, EntropyMode::sampled, 500, 7);
  auto exact = entropy_series(make_eca(110), EntropySubject::image, 4, 10);
  for (std::size_t k = 0; k < sampled.rows.size(); ++k) {
    EXPECT_EQ(sampled.rows[k].status, "sampled-lower-bound");
    EXPECT_EQ(sampled.rows[k].count, again.rows[k].count);
    EXPECT_LE(*sampled.rows[k].count, *exact.rows[k].count);
  }
  auto capped = entropy_series(make_eca(110), EntropySubject::image, 20, 20, EntropyMode::exact, 0, 0, Budget{1u << 10, 1});
  EXPECT_EQ(capped.rows[0].status, "budget-exceeded");
  EXPECT_FALSE(capped.rows[0].count.has_value());
}

// count(π_F ΔX) ≤ count(π_{F^{-N}} ΔX) · q^{|F ∖ F^{-N}|} and
// count(π_{F^{-N}} ΔX) ≤ q^{|F|} for X the full shift.
TEST(Analyzer, EntropyNonIncreaseRows) {
  for (int rule : {0, 30, 90, 110}) {
    auto ca = make_eca(rule);
    for (std::int64_t i = 1; i <= 12; ++i) {
      auto F = folner_boxes(Z1{}, i);
      auto inner = interior(Z1{}, F, ca.neighbourhood());
      auto on_f = image_patterns(ca, F).codes.size();
      auto on_inner = inner.empty() ? 1 : image_patterns(ca, inner).codes.size();
      EXPECT_LE(on_inner, std::uint64_t{1} << F.size());
      EXPECT_LE(on_f, on_inner << (F.size() - inner.size()));
    }
  }
}

// count(π_{F^{+E}} X) ≤ count(π_F X) · q^{|∂_E F|}.
TEST(Analyzer, ClosureNetRows) {
  for (int rule : {0, 90, 110}) {
    auto ca = make_eca(rule);
    auto E = ca.neighbourhood();
    for (std::int64_t i = 1; i <= 10; ++i) {
      auto F = folner_boxes(Z1{}, i);
      auto wide = image_patterns(ca, closure(Z1{}, F, E)).codes.size();
      auto narrow = image_patterns(ca, F).codes.size();
      EXPECT_LE(wide, narrow << boundary(Z1{}, F, E).size());
    }
  }
}

// With a GOE window E and a tiling T, exact counts obey
// count ≤ (q^|E| - 1)^|T ∩ F^{-E}| · q^(|F| - |E|·|T ∩ F^{-E}|).
TEST(Analyzer, TilingDeficitRows) {
  Z1 z;
  for (int rule : {0, 110}) {
    auto ca = make_eca(rule);
    auto goe = find_goe_pattern(ca, widths(1, 6));
    ASSERT_TRUE(goe.witness.has_value());
    auto E = iota_set(z, goe.witness->core);
    auto region = folner_boxes(z, 40);
    auto tiling = greedy_tiling(z, region, E);
    const double tile_free = std::log2(std::pow(2.0, static_cast<double>(E.size())) - 1.0);
    for (std::int64_t i = 1; i <= 14; ++i) {
      auto F = folner_boxes(z, i);
      auto t = static_cast<double>(set_intersection(tiling.centers, interior(z, F, E)).size());
      auto count = static_cast<double>(image_patterns(ca, F).codes.size());
      auto bound = t * tile_free + (static_cast<double>(F.size()) - static_cast<double>(E.size()) * t);
      EXPECT_LE(std::log2(count), bound + 1e-12) << "rule " << rule << " i " << i;
    }
  }
}

TEST(Analyzer, OneDimensionalOracles) {
  EXPECT_TRUE(surjectivity_oracle_1d(make_eca(90)));
  EXPECT_FALSE(surjectivity_oracle_1d(make_eca(0)));
  EXPECT_TRUE(surjectivity_oracle_1d(make_eca(204)));
  EXPECT_TRUE(pre_injectivity_oracle_1d(make_eca(90)));
  EXPECT_FALSE(pre_injectivity_oracle_1d(make_eca(0)));
  EXPECT_TRUE(pre_injectivity_oracle_1d(make_eca(204)));
  int surjective = 0;
  for (int k = 0; k < 256; ++k) {
    auto ca = make_eca(k);
    bool s = surjectivity_oracle_1d(ca);
    EXPECT_EQ(s, pre_injectivity_oracle_1d(ca)) << k;
    surjective += s;
  }
  EXPECT_EQ(surjective, 30);
}

TEST(Analyzer, OraclesOnWiderNeighbourhoods) {
  Z1 z;
  // Shift by two cells: N = {0, 2} is not contiguous; the oracle works on its hull.
  auto N = neighbourhood_from_cells(z, {{0}, {2}});
  auto shift = tabulate_rule("shift2", 2, 2, [](std::span<const State> ell) { return ell[1]; });
  SemiCellularAutomaton<Z1> ca(z, 2, N, shift);
  EXPECT_TRUE(surjectivity_oracle_1d(ca));
  EXPECT_TRUE(pre_injectivity_oracle_1d(ca));
  // Three-state "max of neighbours" is neither.
  auto mx = tabulate_rule("max", 3, 3, [](std::span<const State> ell) { return *std::max_element(ell.begin(), ell.end()); });
  SemiCellularAutomaton<Z1> cmax(z, 3, moore_neighbourhood(z), mx);
  EXPECT_FALSE(surjectivity_oracle_1d(cmax));
  EXPECT_FALSE(pre_injectivity_oracle_1d(cmax));
}

TEST(Analyzer, FiniteSpaceOracle) {
  Dihedral d5(5);
  auto N = moore_neighbourhood(d5);
  auto maj = finite_space_oracle(make_majority(d5, N));
  EXPECT_FALSE(maj.surjective);
  EXPECT_FALSE(maj.pre_injective);
  EXPECT_EQ(maj.configurations, 32u);
  auto id = finite_space_oracle(make_identity(d5, N));
  EXPECT_TRUE(id.surjective);
  EXPECT_TRUE(id.pre_injective);
  auto zero = finite_space_oracle(make_constant(d5, N, 0));
  EXPECT_FALSE(zero.surjective);
  EXPECT_EQ(zero.image_size, 1u);

  PermSpace s4(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  auto all = neighbourhood_from_cells(s4, {0, 1, 2, 3});
  ASSERT_TRUE(is_g0_closed(s4, all));
  auto r = finite_space_oracle(make_identity(s4, all));
  EXPECT_TRUE(r.surjective && r.pre_injective);
}

TEST(Analyzer, ReportExamples) {
  ReportOptions options;
  auto zero = goe_report(make_eca(0), options);
  EXPECT_EQ(zero.surjective, Verdict::no);
  EXPECT_EQ(zero.pre_injective, Verdict::no);
  EXPECT_FALSE(zero.consistency_flag);
  EXPECT_LE(zero.goe->core.size(), 3u);
  EXPECT_LE(zero.erasable->core.size(), 3u);

  auto r90 = goe_report(make_eca(90), options);
  EXPECT_EQ(r90.surjective, Verdict::yes);
  EXPECT_EQ(r90.pre_injective, Verdict::yes);
  EXPECT_EQ(r90.surjective_evidence, "de Bruijn oracle");
  EXPECT_FALSE(r90.consistency_flag);
  ASSERT_EQ(r90.entropy.rows.size(), 8u);

  Dihedral d5(5);
  auto maj = goe_report(make_majority(d5, moore_neighbourhood(d5)), options);
  EXPECT_EQ(maj.surjective, Verdict::no);
  EXPECT_EQ(maj.pre_injective, Verdict::no);
  EXPECT_FALSE(maj.consistency_flag);
}

TEST(Analyzer, LifeOnP4mStaysUnknownAtBudget) {
  ReportOptions options;
  options.entropy_max = 2;
  auto report = goe_report(make_life(P4m{}), options);
  EXPECT_EQ(report.surjective, Verdict::unknown);
  EXPECT_EQ(report.pre_injective, Verdict::unknown);
  EXPECT_FALSE(report.consistency_flag);
  EXPECT_EQ(report.surjective_evidence, "search budget exhausted");
  EXPECT_EQ(report.goe_log[2].status, "budget-exceeded");
}

// Observation only: verdicts do not depend on the dihedral coordinate system here.
TEST(Analyzer, DihedralCoordinateSystemsAgree) {
  for (int n : {3, 4, 5}) {
    Dihedral rot(n, Dihedral::Coordinates::rotation);
    Dihedral refl(n, Dihedral::Coordinates::reflection);
    for (const auto& rule : goe::testing::symmetric_rules(rot, 8)) {
      auto a = finite_space_oracle(SemiCellularAutomaton<Dihedral>(rot, 2, moore_neighbourhood(rot), rule));
      auto b = finite_space_oracle(SemiCellularAutomaton<Dihedral>(refl, 2, moore_neighbourhood(refl), rule));
      EXPECT_EQ(a.surjective, b.surjective) << rule.name << " n=" << n;
    }
  }
}
