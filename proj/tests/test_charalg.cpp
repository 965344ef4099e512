#include <gtest/gtest.h>

#include "fsplit/charalg.hpp"
#include "oracles.hpp"

using fsplit::Character;
using fsplit::InputError;
using fsplit::Int;
using fsplit::ResourceError;
using fsplit::RootSystem;
using fsplit::Weight;

namespace {

std::vector<Weight> dominant_box(const RootSystem& rs, Int hi) {
  std::vector<Weight> out;
  std::vector<Int> c(rs.rank(), 0);
  for (;;) {
    out.emplace_back(c);
    int k = 0;
    while (k < rs.rank() && ++c[k] > hi) c[k++] = 0;
    if (k == rs.rank()) return out;
  }
}

Character from_list(std::initializer_list<std::pair<Weight, Int>> l) {
  Character c;
  for (const auto& [w, m] : l) c.add(w, m);
  return c;
}

}  // namespace

TEST(WeylCharacter, Examples) {
  RootSystem a1('A', 1), a2('A', 2);
  EXPECT_EQ(fsplit::weyl_character(a1, Weight({3})),
            from_list({{Weight({3}), 1}, {Weight({1}), 1}, {Weight({-1}), 1}, {Weight({-3}), 1}}));
  for (const char* name : {"A1", "B3", "G2", "E6"}) {
    auto rs = RootSystem::parse(name);
    EXPECT_EQ(fsplit::weyl_character(rs, rs.zero()), Character::single(rs.zero()));
  }
  auto adj = fsplit::weyl_character(a2, Weight({1, 1}));
  EXPECT_EQ(adj.dimension(), 8);
  EXPECT_EQ(adj.multiplicity(a2.zero()), 2);
}

TEST(WeylCharacter, Errors) {
  RootSystem a2('A', 2);
  EXPECT_THROW(fsplit::weyl_character(a2, Weight({-1, 0})), InputError);
  fsplit::Limits tiny;
  tiny.dim_cap = 7;
  EXPECT_THROW(fsplit::weyl_character(a2, Weight({1, 1}), tiny), ResourceError);
}

TEST(WeylCharacter, MatchesKostantMultiplicityFormula) {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    auto rs = RootSystem::parse(name);
    Int hi = rs.rank() == 3 ? 1 : 2;
    for (const auto& lambda : dominant_box(rs, hi)) {
      auto ch = fsplit::weyl_character(rs, lambda);
      for (const auto& [mu, m] : ch.terms()) {
        if (!rs.is_dominant(mu)) continue;
        EXPECT_EQ(m, oracle::kostant_multiplicity(rs, lambda, mu)) << name << lambda.to_string() << mu.to_string();
      }
    }
  }
}

TEST(WeylCharacter, DimensionAndInvariance) {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    auto rs = RootSystem::parse(name);
    for (const auto& lambda : dominant_box(rs, 2)) {
      auto ch = fsplit::weyl_character(rs, lambda);
      EXPECT_EQ(ch.dimension(), oracle::weyl_dimension(rs, lambda)) << name << lambda.to_string();
      for (int i = 0; i < rs.rank(); ++i)
        for (const auto& [mu, m] : ch.terms()) EXPECT_EQ(ch.multiplicity(rs.reflect(i, mu)), m);
    }
  }
  RootSystem g2('G', 2);
  EXPECT_EQ(fsplit::weyl_character(g2, g2.fundamental(0)).dimension() *
                fsplit::weyl_character(g2, g2.fundamental(1)).dimension(),
            7 * 14);
}

TEST(EulerChar, Examples) {
  RootSystem a1('A', 1), a2('A', 2);
  EXPECT_TRUE(fsplit::euler_char(a1, Weight({-1})).empty());
  EXPECT_EQ(fsplit::euler_char(a1, Weight({-5})), -1 * fsplit::weyl_character(a1, Weight({3})));
  for (const auto& l : dominant_box(a2, 2)) EXPECT_EQ(fsplit::euler_char(a2, l), fsplit::weyl_character(a2, l));
}

TEST(EulerChar, DotReflectionFlipsSign) {
  for (const char* name : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::parse(name);
    for (Int a = -4; a <= 4; ++a)
      for (Int b = -4; b <= 4; ++b) {
        Weight l{a, b};
        for (int i = 0; i < 2; ++i)
          EXPECT_EQ(fsplit::euler_char(rs, rs.dot({i}, l)), -1 * fsplit::euler_char(rs, l)) << name;
      }
  }
}

TEST(SymPower, Examples) {
  RootSystem a1('A', 1), a2('A', 2);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(fsplit::sym_power_char(a1, n), Character::single(Weight({2 * n})));
  EXPECT_EQ(fsplit::sym_power_char(a2, 0), Character::single(a2.zero()));
  Weight a = a2.simple_root(0), b = a2.simple_root(1);
  EXPECT_EQ(fsplit::sym_power_char(a2, 1), from_list({{a, 1}, {b, 1}, {a + b, 1}}));
  EXPECT_THROW(fsplit::sym_power_char(a2, -1), InputError);
}

TEST(SymPower, DimensionIsMultisetCount) {
  // dim S^n of an N-dimensional space is C(N + n - 1, n).
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    auto rs = RootSystem::parse(name);
    Int big_n = static_cast<Int>(rs.num_positive());
    Int expect = 1;
    for (int n = 0; n <= 5; ++n) {
      if (n > 0) expect = expect * (big_n + n - 1) / n;
      EXPECT_EQ(fsplit::sym_power_char(rs, n).dimension(), expect) << name << n;
    }
    auto p = rs.parabolic({0});
    EXPECT_EQ(fsplit::sym_power_char(rs, p, 1).dimension(), big_n - 1);
  }
}

TEST(ExteriorPower, Examples) {
  RootSystem a2('A', 2);
  EXPECT_EQ(fsplit::exterior_power_char(a2, 0), Character::single(a2.zero()));
  EXPECT_EQ(fsplit::exterior_power_char(a2, 3), Character::single(-2 * a2.rho()));
  Weight a = a2.simple_root(0), b = a2.simple_root(1);
  EXPECT_EQ(fsplit::exterior_power_char(a2, 1), from_list({{-1 * a, 1}, {-1 * b, 1}, {-1 * (a + b), 1}}));
  EXPECT_THROW(fsplit::exterior_power_char(a2, 4), InputError);
  RootSystem g2('G', 2);
  Int binom = 1;
  for (int j = 0; j <= 6; ++j) {
    if (j > 0) binom = binom * (6 - j + 1) / j;
    EXPECT_EQ(fsplit::exterior_power_char(g2, j).dimension(), binom);
  }
}

TEST(ModuleEuler, Examples) {
  RootSystem a1('A', 1), a2('A', 2);
  Weight l{-3, 2};
  EXPECT_EQ(fsplit::module_euler(a2, Character::single(a2.zero()), l), fsplit::euler_char(a2, l));
  auto m = fsplit::module_euler(a2, fsplit::sym_power_char(a2, 1), a2.zero());
  EXPECT_EQ(m, fsplit::weyl_character(a2, Weight({1, 1})));
  EXPECT_EQ(m.dimension(), 8);
  for (int n = 0; n <= 5; ++n)
    EXPECT_EQ(fsplit::module_euler(a1, fsplit::sym_power_char(a1, n), a1.zero()),
              fsplit::weyl_character(a1, Weight({2 * n})));
}

TEST(ModuleEuler, IsLinear) {
  RootSystem b2('B', 2);
  auto m1 = fsplit::sym_power_char(b2, 2);
  auto m2 = fsplit::exterior_power_char(b2, 2);
  Weight l{-1, 1};
  EXPECT_EQ(fsplit::module_euler(b2, 3 * m1 - m2, l),
            3 * fsplit::module_euler(b2, m1, l) - fsplit::module_euler(b2, m2, l));
}

TEST(Koszul, Examples) {
  RootSystem a1('A', 1), a2('A', 2);
  auto r = fsplit::koszul_check(a1, 1, Weight({-1}), 0);
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(r.vanishing_asserted);
  EXPECT_EQ(r.total, fsplit::weyl_character(a1, Weight({1})));
  EXPECT_EQ(r.shifted, fsplit::weyl_character(a1, Weight({1})));

  EXPECT_TRUE(fsplit::koszul_check(a2, 2, Weight({-1, 1}), 0).pass());

  auto d = fsplit::koszul_check(a2, 2, Weight({1, 2}), 1);
  EXPECT_TRUE(d.identity_holds);
  EXPECT_FALSE(d.vanishing_asserted);
  EXPECT_THROW(fsplit::koszul_check(a2, 0, a2.zero(), 0), InputError);
  EXPECT_THROW(fsplit::koszul_check(a2, 1, a2.zero(), 2), InputError);
}

TEST(Koszul, SmallBoxes) {
  for (const char* name : {"A1", "A2", "B2"}) {
    auto rs = RootSystem::parse(name);
    std::vector<Int> c(rs.rank(), -1);
    for (;;) {
      Weight l(c);
      for (int n = 1; n <= 3; ++n)
        for (int i = 0; i < rs.rank(); ++i) EXPECT_TRUE(fsplit::koszul_check(rs, n, l, i).pass()) << name << l.to_string();
      int k = 0;
      while (k < rs.rank() && ++c[k] > 2) c[k++] = -1;
      if (k == rs.rank()) break;
    }
  }
}

TEST(Truncated, Examples) {
  RootSystem a1('A', 1), a2('A', 2);
  EXPECT_EQ(fsplit::truncated_char(a1, 3), from_list({{Weight({0}), 1}, {Weight({2}), 1}, {Weight({4}), 1}}));
  for (const char* name : {"A1", "A3", "B2", "G2"}) {
    auto rs = RootSystem::parse(name);
    EXPECT_EQ(fsplit::truncated_char(rs, 2).dimension(), Int{1} << rs.num_positive()) << name;
  }
  auto t = fsplit::truncated_char(a2, 2);
  EXPECT_EQ(t.multiplicity(Weight({2, 2})), 1);
  for (const auto& [w, m] : t.terms()) EXPECT_TRUE(a2.dominance_leq(w, Weight({2, 2})));
  EXPECT_THROW(fsplit::truncated_char(a2, 4), InputError);
}

TEST(Decompose, Examples) {
  RootSystem a2('A', 2);
  auto c = fsplit::weyl_character(a2, Weight({1, 0})) + 2 * fsplit::weyl_character(a2, a2.zero());
  auto r = fsplit::decompose_good_filtration(a2, c);
  ASSERT_TRUE(r.ok);
  using Layers = std::vector<std::pair<Weight, Int>>;
  EXPECT_EQ(r.decomposition.layers, (Layers{{Weight({1, 0}), 1}, {a2.zero(), 2}}));

  auto bad = fsplit::decompose_good_filtration(a2, -1 * fsplit::weyl_character(a2, a2.zero()));
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.witness, a2.zero());
  EXPECT_EQ(bad.witness_coefficient, -1);

  auto nondom = fsplit::decompose_good_filtration(a2, Character::single(Weight({-1, 0})));
  EXPECT_FALSE(nondom.ok);

  auto sym2 = fsplit::decompose_good_filtration(a2, fsplit::module_euler(a2, fsplit::sym_power_char(a2, 2), a2.zero()));
  ASSERT_TRUE(sym2.ok);
  for (const auto& [w, m] : sym2.decomposition.layers) EXPECT_GT(m, 0);

  EXPECT_TRUE(fsplit::decompose_good_filtration(a2, Character{}).ok);
}

TEST(Decompose, RoundTripsRandomSums) {
  RootSystem b2('B', 2);
  auto box = dominant_box(b2, 2);
  for (std::size_t s = 0; s < box.size(); ++s) {
    Character c;
    std::map<Weight, Int> want;
    for (std::size_t k = 0; k < box.size(); ++k)
      if ((k * 7 + s) % 3 == 0) {
        Int m = static_cast<Int>(1 + (k + s) % 3);
        c += m * fsplit::weyl_character(b2, box[k]);
        want[box[k]] = m;
      }
    auto r = fsplit::decompose_good_filtration(b2, c);
    ASSERT_TRUE(r.ok);
    std::map<Weight, Int> got(r.decomposition.layers.begin(), r.decomposition.layers.end());
    EXPECT_EQ(got, want);
  }
}

TEST(GradedSection, RankOneDimensions) {
  RootSystem a1('A', 1);
  auto rep = fsplit::graded_section_char(a1, a1.zero(), 8, a1.parabolic({}));
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(rep.graded.at(n).dimension(), 2 * n + 1);
  EXPECT_TRUE(rep.all_decompose());
}

TEST(GradedSection, NilconeHilbertSeries) {
  // degrees of the basic invariants
  const std::vector<std::tuple<std::string, int, std::vector<int>, int>> cases{
      {"A2", 8, {2, 3}, 5}, {"B2", 10, {2, 4}, 5}, {"G2", 14, {2, 6}, 3}, {"A3", 15, {2, 3, 4}, 3}};
  for (const auto& [name, dim, degs, n_max] : cases) {
    auto rs = RootSystem::parse(name);
    auto rep = fsplit::graded_section_char(rs, rs.zero(), n_max, rs.parabolic({}));
    auto want = oracle::nilcone_hilbert(dim, degs, n_max);
    for (int n = 0; n <= n_max; ++n) EXPECT_EQ(rep.graded.at(n).dimension(), want[n]) << name << " n=" << n;
    EXPECT_TRUE(rep.all_decompose()) << name;
    EXPECT_EQ(rep.graded.at(0), Character::single(rs.zero()));
  }
}

TEST(GradedSection, Parabolic) {
  RootSystem a2('A', 2);
  for (int i = 0; i < 2; ++i) {
    auto p = a2.parabolic({i});
    for (Int k = 1; k <= 2; ++k) {
      Weight l = k * a2.fundamental(1 - i);
      auto rep = fsplit::graded_section_char(a2, l, 3, p);
      EXPECT_TRUE(rep.all_decompose()) << i << " " << l.to_string();
    }
  }
  EXPECT_THROW(fsplit::graded_section_char(a2, Weight({1, 1}), 3, a2.parabolic({0})), InputError);
  EXPECT_THROW(fsplit::graded_section_char(a2, Weight({-2, 0}), 3, a2.parabolic({})), InputError);
}

TEST(GradedSection, ConeWeightsOutsideDominantChamber) {
  // Recorded rather than asserted: weights in C that are not dominant.
  RootSystem a2('A', 2);
  for (const auto& l : {Weight({-1, 1}), Weight({-1, 2}), Weight({1, -1})}) {
    auto rep = fsplit::graded_section_char(a2, l, 3, a2.parabolic({}));
    RecordProperty("A2" + l.to_string(), rep.all_decompose() ? "decomposes" : "does not decompose");
  }
}

TEST(G1Cohomology, Examples) {
  RootSystem a1('A', 1), a2('A', 2);
  auto out = fsplit::g1_cohomology_char(a1, {}, Weight({1}), 3, 2);
  EXPECT_EQ(out.at(0), fsplit::weyl_character(a1, Weight({1})));
  EXPECT_TRUE(out.at(1).empty());
  EXPECT_EQ(out.at(2), fsplit::weyl_character(a1, Weight({3})));
  EXPECT_EQ(out.at(2).dimension(), 4);

  auto w = fsplit::g1_cohomology_char(a2, {0, 1}, Weight({1, 1}), 5, 6);
  EXPECT_TRUE(w.at(0).empty());
  EXPECT_TRUE(w.at(1).empty());
  EXPECT_EQ(w.at(2), fsplit::euler_char(a2, Weight({1, 1})));
  EXPECT_TRUE(w.at(3).empty());
}

TEST(G1Cohomology, Errors) {
  RootSystem a2('A', 2);
  EXPECT_THROW(fsplit::g1_cohomology_char(a2, {}, Weight({1, 1}), 3, 2), InputError);  // p <= h
  EXPECT_THROW(fsplit::g1_cohomology_char(a2, {}, Weight({1, 1}), 9, 2), InputError);  // not prime
  EXPECT_THROW(fsplit::g1_cohomology_char(a2, {0}, Weight({0, 0}), 5, 2), InputError);  // target not dominant
  EXPECT_THROW(fsplit::g1_cohomology_char(a2, {}, Weight({-1, 0}), 5, 2), InputError);
}
