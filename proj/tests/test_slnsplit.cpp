#include <gtest/gtest.h>

#include <set>

#include "fsplit/slnsplit.hpp"
#include "oracles.hpp"

using fsplit::Exponent;
using fsplit::InputError;
using fsplit::SparsePolynomial;

namespace {

std::vector<std::string> names(const SparsePolynomial& f) {
  std::vector<std::string> out;
  for (const auto& v : f.vars()) out.push_back(v.name);
  return out;
}

std::set<Exponent> support(const SparsePolynomial& f) {
  std::set<Exponent> s;
  for (const auto& [e, c] : f.terms()) s.insert(e);
  return s;
}

Exponent digits(const std::string& s) {
  Exponent e;
  for (char c : s) e.push_back(static_cast<std::uint32_t>(c - '0'));
  return e;
}

std::set<Exponent> digit_set(std::initializer_list<const char*> l) {
  std::set<Exponent> s;
  for (const char* x : l) s.insert(digits(x));
  return s;
}

bool all_coefficients(const SparsePolynomial& f, fsplit::Coeff c) {
  return std::all_of(f.terms().begin(), f.terms().end(), [c](const auto& t) { return t.second == c; });
}

}  // namespace

// Expansions below were produced by an independent symbolic computation of
// g (I + X) g^{-1} and its leading principal minors.

TEST(ChartFunction, RankOneClosedForm) {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    auto f = fsplit::build_chart_function(1, p);
    EXPECT_EQ(names(f.poly), (std::vector<std::string>{"y21", "x12"}));
    EXPECT_EQ(f.poly.terms(), oracle::rank_one_closed_form(p).terms()) << p;
    EXPECT_EQ(f.poly.size(), p);
    auto v = fsplit::is_splitting_function(f.poly);
    EXPECT_TRUE(v.splits);
    EXPECT_EQ(v.top_coefficient, 1u);
  }
  auto f2 = fsplit::build_chart_function(1, 2);
  EXPECT_EQ(support(f2.poly), digit_set({"00", "11"}));
}

TEST(ChartFunction, RankTwoCharacteristicTwo) {
  auto f = fsplit::build_chart_function(2, 2);
  EXPECT_EQ(names(f.poly), (std::vector<std::string>{"y21", "y31", "y32", "x12", "x13", "x23"}));
  EXPECT_EQ(support(f.poly), digit_set({"000000", "001001", "010101", "011011", "020020", "020111", "100100",
                                        "101010", "101101", "102011", "110110", "110201", "111020", "111111"}));
  EXPECT_TRUE(all_coefficients(f.poly, 1));
  EXPECT_TRUE(fsplit::check_theorem_main(2, 2).pass());
}

TEST(ChartFunction, RankTwoCharacteristicThree) {
  auto rep = fsplit::check_theorem_main(2, 3);
  EXPECT_EQ(rep.terms, 69u);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.verdict.top_coefficient, 1u);
}

TEST(ChartFunction, ZeroFiberGivesOne) {
  for (auto [n, p] : std::vector<std::pair<int, std::uint64_t>>{{1, 2}, {1, 7}, {2, 2}, {2, 3}, {3, 2}}) {
    auto f = fsplit::build_chart_function(n, p);
    EXPECT_EQ(fsplit::zero_fiber_restriction(f), f.poly.constant(1)) << n << "," << p;
  }
}

TEST(ChartFunction, TorusInvariant) {
  for (auto [n, p] : std::vector<std::pair<int, std::uint64_t>>{{1, 5}, {2, 2}, {2, 3}, {3, 2}}) {
    auto f = fsplit::build_chart_function(n, p);
    for (const auto& [e, c] : f.poly.terms()) {
      auto w = fsplit::monomial_weight(f.poly, e);
      EXPECT_TRUE(w.rank() == 0 || w.is_zero());
    }
  }
}

TEST(ChartFunction, Guards) {
  EXPECT_THROW(fsplit::build_chart_function(0, 2), InputError);
  EXPECT_THROW(fsplit::build_chart_function(8, 2), InputError);
  EXPECT_THROW(fsplit::build_chart_function(1, 4), InputError);
  fsplit::Limits tiny;
  tiny.term_cap = 20;
  EXPECT_THROW(fsplit::build_chart_function(2, 3, tiny), fsplit::ResourceError);
}

TEST(LeadingMinor, MatchesDirectDeterminant) {
  SparsePolynomial r(fsplit::PrimeField(7), fsplit::VariableTable{{"a", {}}, {"b", {}}, {"c", {}}, {"d", {}}});
  auto a = r.variable(0), b = r.variable(1), c = r.variable(2), d = r.variable(3);
  fsplit::PolyMatrix m{{a, b, r.zero_like()}, {c, d, r.constant(1)}, {r.constant(2), r.zero_like(), a}};
  EXPECT_EQ(fsplit::leading_minor(m, 0), r.constant(1));
  EXPECT_EQ(fsplit::leading_minor(m, 1), a);
  EXPECT_EQ(fsplit::leading_minor(m, 2), a * d - b * c);
  // expansion along the first row
  EXPECT_EQ(fsplit::leading_minor(m, 3), a * (d * a) - b * (c * a - r.constant(2)));
  EXPECT_THROW(fsplit::leading_minor(m, 4), InputError);
}

TEST(Springer, ConjugationIsEquivariant) {
  for (auto [n, p] : std::vector<std::pair<int, std::uint64_t>>{{1, 3}, {2, 2}, {2, 5}, {3, 3}})
    EXPECT_TRUE(fsplit::springer_equivariance_check(n, p)) << n << "," << p;
}

TEST(Mvk, RankOne) {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    auto f = fsplit::build_chart_function(1, p);
    auto m = fsplit::mvk_component(f);
    Exponent top{static_cast<std::uint32_t>(p - 1), static_cast<std::uint32_t>(p - 1)};
    // (-1)^{p-1} C(p-1, p-1)
    EXPECT_EQ(m, f.poly.monomial(top, (p - 1) % 2 ? p - 1 : 1)) << p;
    EXPECT_TRUE(fsplit::is_splitting_function(m).splits);
  }
  auto f2 = fsplit::build_chart_function(1, 2);
  EXPECT_EQ(fsplit::mvk_component(f2), f2.poly.variable(0) * f2.poly.variable(1));
}

TEST(Mvk, RankTwo) {
  auto f2 = fsplit::build_chart_function(2, 2);
  auto m2 = fsplit::mvk_component(f2);
  EXPECT_EQ(support(m2), digit_set({"020111", "110201", "111111"}));
  EXPECT_TRUE(fsplit::is_splitting_function(m2).splits);
  EXPECT_EQ(f2.max_x_degree(), 3u);

  auto f3 = fsplit::build_chart_function(2, 3);
  auto m3 = fsplit::mvk_component(f3);
  EXPECT_EQ(m3.size(), 6u);
  EXPECT_TRUE(fsplit::is_splitting_function(m3).splits);
  EXPECT_EQ(f3.max_x_degree(), 6u);
}

TEST(Compat, SingleRootParabolics) {
  for (std::uint64_t p : {2ull, 3ull})
    for (int i : {0, 1}) {
      auto v = fsplit::compat_check(2, p, {i});
      EXPECT_TRUE(v.compatible) << p << " I={" << i + 1 << "}";
    }
  EXPECT_TRUE(fsplit::compat_check(2, 2, {}).compatible);
  EXPECT_TRUE(fsplit::compat_check(1, 5, {0}).compatible);
}

TEST(Compat, IdealsAndNegativeControl) {
  auto f = fsplit::build_chart_function(2, 2);
  auto ideal = fsplit::levi_fiber_ideal(f, {0});
  ASSERT_EQ(ideal.generators.size(), 1u);
  EXPECT_EQ(f.poly.vars()[ideal.generators[0]].name, "x12");
  EXPECT_EQ(f.poly.vars()[fsplit::levi_fiber_ideal(f, {1}).generators[0]].name, "x23");
  EXPECT_EQ(fsplit::levi_fiber_ideal(f, {0, 1}).generators.size(), 3u);

  // (x13) is not the ideal of any G x^B u_P and is not compatibly split.
  auto m = fsplit::mvk_component(f);
  fsplit::VariableIdeal x13{{*f.poly.var_index("x13")}};
  auto v = fsplit::splits_ideal_compatibly(m, x13);
  EXPECT_FALSE(v.compatible);
  EXPECT_FALSE(oracle::brute_force_compatible(m, x13));
  EXPECT_TRUE(oracle::brute_force_compatible(m, fsplit::levi_fiber_ideal(f, {0})));
  EXPECT_TRUE(oracle::brute_force_compatible(m, fsplit::levi_fiber_ideal(f, {1})));
}

TEST(Canonical, Examples) {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    auto rep = fsplit::canonical_check(1, p);
    EXPECT_TRUE(rep.pass(p)) << p;
    ASSERT_EQ(rep.directions.size(), 1u);
    EXPECT_EQ(rep.directions[0].t_degree, p - 1);
  }
  auto rep = fsplit::canonical_check(2, 2);
  EXPECT_TRUE(rep.weight_zero);
  ASSERT_EQ(rep.directions.size(), 2u);
  for (const auto& d : rep.directions) {
    EXPECT_TRUE(d.pure_weights);
    EXPECT_LE(d.t_degree, 1u);
  }
  EXPECT_TRUE(fsplit::canonical_check(2, 3).pass(3));
}

TEST(Parabolic, FrozenExpansions) {
  auto f1 = fsplit::build_parabolic_chart_function(2, 2, {0});
  EXPECT_EQ(names(f1.poly), (std::vector<std::string>{"y31", "y32", "x13", "x23"}));
  EXPECT_EQ(support(f1.poly), digit_set({"0000", "0202", "1010", "1111"}));
  EXPECT_TRUE(fsplit::is_splitting_function(f1.poly).splits);

  auto f2 = fsplit::build_parabolic_chart_function(2, 2, {1});
  EXPECT_EQ(names(f2.poly), (std::vector<std::string>{"y21", "y31", "x12", "x13"}));
  EXPECT_EQ(support(f2.poly), digit_set({"0000", "0101", "1111", "2020"}));
  EXPECT_TRUE(fsplit::is_splitting_function(f2.poly).splits);

  for (int i : {0, 1}) {
    auto f = fsplit::build_parabolic_chart_function(2, 3, {i});
    EXPECT_EQ(f.poly.size(), 9u);
    EXPECT_TRUE(fsplit::is_splitting_function(f.poly).splits);
  }
}

TEST(Parabolic, BorelCaseAndZeroFiber) {
  EXPECT_EQ(fsplit::build_parabolic_chart_function(2, 3, {}).poly, fsplit::build_chart_function(2, 3).poly);
  for (int i : {0, 1}) {
    auto f = fsplit::build_parabolic_chart_function(2, 2, {i});
    EXPECT_TRUE(fsplit::zero_fiber_restriction(f).as_nonzero_constant().has_value());
    EXPECT_EQ(f.fiber_dim(), 2u);
  }
  EXPECT_THROW(fsplit::build_parabolic_chart_function(2, 2, {2}), InputError);
}
