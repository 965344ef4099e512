/*
  verify.hpp

  Batch invariant suites behind `fsplit verify <suite>`.  Every suite appends
  named checks to a Report; a cap that trips turns the affected check into a
  skip rather than a failure.
*/
#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fsplit/charalg.hpp"
#include "fsplit/fpoly.hpp"
#include "fsplit/poly_json.hpp"
#include "fsplit/report.hpp"
#include "fsplit/rootdata.hpp"
#include "fsplit/slnsplit.hpp"

namespace fsplit {

inline nlohmann::ordered_json weight_json(const Weight& w) { return w.coords(); }

inline nlohmann::ordered_json character_json(const Character& c) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [w, m] : c.terms()) arr.push_back({{"weight", w.coords()}, {"mult", m}});
  return arr;
}

inline nlohmann::ordered_json decomposition_json(const GoodFiltrationDecomposition& d) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [w, m] : d.layers) arr.push_back({{"lambda", w.coords()}, {"mult", m}});
  return arr;
}

/// Runs body; a ResourceError marks the check skipped.
inline void guarded(Report& rep, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const ResourceError& e) {
    rep.skip(name, e.what());
  }
}

/// The nine families with the good-prime bounds of the classical table.
inline const std::vector<std::pair<std::string, Int>>& good_prime_table() {
  static const std::vector<std::pair<std::string, Int>> t{
      {"A3", 2}, {"B3", 3}, {"C3", 3}, {"D4", 3}, {"E6", 5}, {"E7", 5}, {"E8", 7}, {"F4", 5}, {"G2", 5}};
  return t;
}

/// Uniform random polynomial with at most `terms` terms and exponents < max_exp.
inline SparsePolynomial random_poly(std::mt19937_64& rng, const SparsePolynomial& like, std::size_t terms,
                                    std::uint32_t max_exp) {
  std::uniform_int_distribution<std::uint32_t> ex(0, max_exp - 1);
  std::uniform_int_distribution<std::uint64_t> co(1, like.p() - 1);
  SparsePolynomial f = like.zero_like();
  for (std::size_t k = 0; k < terms; ++k) {
    Exponent e(like.num_vars());
    for (auto& v : e) v = ex(rng);
    f.add_term(std::move(e), co(rng));
  }
  return f;
}

inline void verify_rootdata(Report& rep, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const std::vector<std::pair<std::string, std::size_t>> counts{
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4}, {"B3", 9}, {"C3", 9}, {"C4", 16}, {"D4", 12},
      {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const auto& [name, n] : counts) {
    RootSystem rs = RootSystem::parse(name);
    bool ok = rs.num_positive() == n && rs.coxeter_number() == rs.highest_root().height + 1;
    for (int i = 0; i < rs.rank(); ++i) {
      ok = ok && rs.cartan()[i][i] == 2 && rs.pairing(rs.rho(), i) == 1;
      for (int j = 0; j < rs.rank(); ++j) ok = ok && (i == j || rs.cartan()[i][j] <= 0);
    }
    rep.expect("rootdata/structure/" + name, ok, "N=" + std::to_string(rs.num_positive()));

    // s_i permutes R^+ \ {alpha_i} and negates alpha_i
    bool perm = true;
    std::set<Weight> pos;
    for (const auto& a : rs.positive_roots()) pos.insert(a.weight);
    for (int i = 0; i < rs.rank(); ++i) {
      std::set<Weight> image;
      for (const auto& a : rs.positive_roots()) {
        Weight r = rs.reflect(i, a.weight);
        if (a.weight == rs.simple_root(i)) perm = perm && r == -a.weight;
        else image.insert(r);
      }
      std::set<Weight> expect = pos;
      expect.erase(rs.simple_root(i));
      perm = perm && image == expect;
    }
    rep.expect("rootdata/reflection-permutes/" + name, perm);
  }

  for (const auto& [name, bound] : good_prime_table()) {
    RootSystem rs = RootSystem::parse(name);
    rep.expect("rootdata/good-primes/" + name, rs.min_good_prime() == bound,
               "p >= " + std::to_string(rs.min_good_prime()));
  }

  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    RootSystem rs = RootSystem::parse(name);
    guarded(rep, std::string("rootdata/unique-dominant/") + name, [&] {
      bool ok = true;
      std::vector<Int> c(rs.rank(), -3);
      for (;;) {
        Weight w(c);
        std::size_t dominant = 0;
        for (const auto& v : rs.orbit(w, cfg.limits.weyl_order_cap)) dominant += rs.is_dominant(v);
        ok = ok && dominant == 1;
        int k = 0;
        while (k < rs.rank() && ++c[k] > 3) c[k++] = -3;
        if (k == rs.rank()) break;
      }
      rep.expect(std::string("rootdata/unique-dominant/") + name, ok);
    });

    std::uniform_int_distribution<int> idx(0, rs.rank() - 1), len(0, 4), co(-4, 4);
    bool group = true;
    for (int trial = 0; trial < 200; ++trial) {
      WeylWord w1, w2;
      for (int k = len(rng); k > 0; --k) w1.push_back(idx(rng));
      for (int k = len(rng); k > 0; --k) w2.push_back(idx(rng));
      Weight lam(static_cast<std::size_t>(rs.rank()));
      for (int i = 0; i < rs.rank(); ++i) lam[i] = co(rng);
      WeylWord w12 = w1;
      w12.insert(w12.end(), w2.begin(), w2.end());
      group = group && rs.dot(w1, rs.dot(w2, lam)) == rs.dot(w12, lam) && rs.dot({}, lam) == lam;
    }
    rep.expect(std::string("rootdata/dot-action/") + name, group);

    bool reduce = true;
    std::uniform_int_distribution<int> deg(0, 5), cc(-1, 2);
    for (int trial = 0; trial < 200; ++trial) {
      Weight lam(static_cast<std::size_t>(rs.rank()));
      for (int i = 0; i < rs.rank(); ++i) lam[i] = cc(rng);
      if (!rs.in_cone_C(lam)) continue;
      Int n = deg(rng);
      auto tr = rs.cone_reduce(lam, n);
      for (const auto& w : tr.weights) reduce = reduce && rs.in_cone_C(w);
      reduce = reduce && tr.steps.size() <= static_cast<std::size_t>(n + 1);
      if (auto* d = std::get_if<ReductionTrace::Dominant>(&tr.outcome))
        reduce = reduce && rs.is_dominant(d->weight) && d->remaining_degree >= 0;
    }
    rep.expect(std::string("rootdata/cone-reduce/") + name, reduce);
  }
}

inline void verify_charalg(Report& rep, const RunConfig& cfg, int rank_cap = 3) {
  std::mt19937_64 rng(cfg.seed ^ 0xC4A7ULL);
  const Limits& lim = cfg.limits;
  std::vector<std::string> systems;
  for (const char* s : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"})
    if (RootSystem::parse(s).rank() <= rank_cap) systems.push_back(s);

  for (const auto& name : systems) {
    RootSystem rs = RootSystem::parse(name);
    const int r = rs.rank();
    std::uniform_int_distribution<int> co(0, 2), any(-4, 3);
    guarded(rep, "charalg/weyl-invariance/" + name, [&] {
      auto words = rs.weyl_group(lim.weyl_order_cap);
      bool ok = true;
      for (int trial = 0; trial < 4; ++trial) {
        Weight lam(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) lam[i] = co(rng);
        auto c = weyl_character(rs, lam, lim);
        long double est = weyl_dimension_estimate(rs, lam);
        ok = ok && static_cast<long double>(c.dimension()) == std::round(est) && c.multiplicity(lam) == 1;
        for (const auto& [mu, m] : c.terms())
          for (const auto& w : words) ok = ok && c.multiplicity(rs.act(w, mu)) == m;
      }
      rep.expect("charalg/weyl-invariance/" + name, ok);
    });

    guarded(rep, "charalg/euler-reflection/" + name, [&] {
      bool ok = true;
      for (int trial = 0; trial < 30; ++trial) {
        Weight lam(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) lam[i] = any(rng);
        auto e = euler_char(rs, lam, lim);
        for (int i = 0; i < r; ++i) ok = ok && e == -1 * euler_char(rs, rs.dot({i}, lam), lim);
      }
      rep.expect("charalg/euler-reflection/" + name, ok);
    });

    guarded(rep, "charalg/decomposition-roundtrip/" + name, [&] {
      bool ok = true;
      std::uniform_int_distribution<int> mult(1, 3), count(0, 3);
      for (int trial = 0; trial < 10; ++trial) {
        std::map<Weight, Int> want;
        Character c;
        for (int k = count(rng); k > 0; --k) {
          Weight lam(static_cast<std::size_t>(r));
          for (int i = 0; i < r; ++i) lam[i] = co(rng);
          Int m = mult(rng);
          want[lam] += m;
          c += m * weyl_character(rs, lam, lim);
        }
        auto res = decompose_good_filtration(rs, c, lim);
        std::map<Weight, Int> got;
        for (const auto& [w, m] : res.decomposition.layers) got[w] += m;
        ok = ok && res.ok && got == want;
      }
      rep.expect("charalg/decomposition-roundtrip/" + name, ok);
    });

    guarded(rep, "charalg/truncated/" + name, [&] {
      bool ok = true;
      for (Int p : {2, 3}) {
        auto c = truncated_char(rs, p, lim);
        Weight top = (2 * (p - 1)) * rs.rho();
        Int dim = 1;
        for (std::size_t k = 0; k < rs.num_positive(); ++k) dim *= p;
        ok = ok && c.dimension() == dim && c.multiplicity(top) == 1;
        for (const auto& [w, m] : c.terms()) ok = ok && rs.dominance_leq(w, top);
      }
      rep.expect("charalg/truncated/" + name, ok);
    });
  }

  // Koszul identities in ranks <= 2.
  for (const auto& name : systems) {
    RootSystem rs = RootSystem::parse(name);
    if (rs.rank() > 2) continue;
    guarded(rep, "charalg/koszul/" + name, [&] {
      bool ok = true;
      std::string witness;
      std::vector<Int> c(rs.rank(), -1);
      for (;;) {
        Weight lam(c);
        for (int n = 1; n <= 4; ++n)
          for (int i = 0; i < rs.rank(); ++i) {
            auto k = koszul_check(rs, n, lam, i, lim);
            if (!k.pass() && witness.empty())
              witness = lam.to_string() + " n=" + std::to_string(n) + " i=" + std::to_string(i + 1);
            ok = ok && k.pass();
          }
        int k = 0;
        while (k < rs.rank() && ++c[k] > 2) c[k++] = -1;
        if (k == rs.rank()) break;
      }
      rep.expect("charalg/koszul/" + name, ok, witness);
    });
  }

  // Graded sections: the dominant case must always decompose.
  for (const auto& name : systems) {
    RootSystem rs = RootSystem::parse(name);
    if (rs.rank() > 2) continue;
    const int n_max = rs.type() == 'G' ? 3 : 5;
    guarded(rep, "charalg/graded-sections/" + name, [&] {
      bool ok = true;
      std::string witness;
      std::vector<Int> c(rs.rank(), 0);
      for (;;) {
        Weight lam(c);
        auto g = graded_section_char(rs, lam, n_max, rs.parabolic({}), lim);
        if (!g.all_decompose() && witness.empty()) witness = lam.to_string();
        ok = ok && g.all_decompose();
        int k = 0;
        while (k < rs.rank() && ++c[k] > 2) c[k++] = 0;
        if (k == rs.rank()) break;
      }
      rep.expect("charalg/graded-sections/" + name, ok, witness);
    });
  }
}

inline void verify_fpoly(Report& rep, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0xF9011ULL);
  for (std::uint64_t p : {2, 3, 5}) {
    const std::string tag = "/p" + std::to_string(p);
    VariableTable vars{{"x1", {}}, {"x2", {}}, {"x3", {}}};
    SparsePolynomial like(PrimeField(p), vars);
    const auto max_e = static_cast<std::uint32_t>(2 * p + 1);
    std::uniform_int_distribution<std::size_t> nterms(1, 50);

    bool semi = true, additive = true, equiv = true, shift = true;
    for (int trial = 0; trial < 120; ++trial) {
      auto f = random_poly(rng, like, nterms(rng), max_e);
      auto g = random_poly(rng, like, 6, max_e);
      auto g2 = random_poly(rng, like, 6, max_e);
      auto h = random_poly(rng, like, 3, 3);
      auto f2 = random_poly(rng, like, 10, max_e);

      semi = semi && frobenius_trace(f, h.pow(p) * g) == h * frobenius_trace(f, g);
      additive = additive && frobenius_trace(f, g + g2) == frobenius_trace(f, g) + frobenius_trace(f, g2) &&
                 frobenius_trace(f + f2, g) == frobenius_trace(f, g) + frobenius_trace(f2, g);

      // Half the samples are forced to contain the top monomial.
      if (trial % 2) f.add_term(Exponent(3, static_cast<std::uint32_t>(p - 1)), 1);
      bool split = is_splitting_function(f).splits;
      bool constant = frobenius_trace(f, like.constant(1)).as_nonzero_constant().has_value();
      equiv = equiv && split == constant;

      Exponent beta{static_cast<std::uint32_t>(trial % 2), 1, static_cast<std::uint32_t>(trial % 3)};
      Exponent pbeta = beta;
      for (auto& v : pbeta) v *= static_cast<std::uint32_t>(p);
      shift = shift && frobenius_trace(f, like.monomial(pbeta) * g) == like.monomial(beta) * frobenius_trace(f, g);
    }
    rep.expect("fpoly/semilinearity" + tag, semi);
    rep.expect("fpoly/additivity" + tag, additive);
    rep.expect("fpoly/criterion-equivalence" + tag, equiv);
    rep.expect("fpoly/monomial-shift" + tag, shift);
  }
}

inline void verify_sln_case(Report& rep, const RunConfig& cfg, int n, std::uint64_t p) {
  const std::string tag = "/n" + std::to_string(n) + "p" + std::to_string(p);
  const Limits& lim = cfg.limits;
  guarded(rep, "sln/main" + tag, [&] {
    auto f = build_chart_function(n, p, lim);
    auto v = is_splitting_function(f.poly);
    std::optional<nlohmann::ordered_json> w;
    if (v.witness) w = nlohmann::ordered_json(*v.witness);
    rep.expect("sln/main" + tag, v.splits, std::to_string(f.poly.size()) + " terms", w);

    bool invariant = f.max_x_degree() <= f.fiber_dim() * (p - 1);
    for (const auto& [e, c] : f.poly.terms()) invariant = invariant && monomial_weight(f.poly, e).is_zero();
    rep.expect("sln/t-invariant" + tag, invariant);

    auto mv = is_splitting_function(mvk_component(f));
    rep.expect("sln/mvk" + tag, !v.splits || mv.splits);

    auto x0 = zero_fiber_restriction(f).as_nonzero_constant();
    rep.expect("sln/zero-fiber" + tag, x0 && *x0 == 1);
  });
  guarded(rep, "sln/springer" + tag, [&] { rep.expect("sln/springer" + tag, springer_equivariance_check(n, p, lim)); });
  if (n == 1 || p <= 3) {
    guarded(rep, "sln/canonical" + tag, [&] { rep.expect("sln/canonical" + tag, canonical_check(n, p, lim).pass(p)); });
  }
  for (int i = 0; i < n; ++i) {
    const std::string sub = tag + "/I" + std::to_string(i + 1);
    guarded(rep, "sln/compat" + sub, [&] {
      auto v = compat_check(n, p, {i}, lim);
      std::optional<nlohmann::ordered_json> w;
      if (v.witness_monomial) w = nlohmann::ordered_json(*v.witness_monomial);
      rep.expect("sln/compat" + sub, v.compatible, {}, w);
    });
    guarded(rep, "sln/parabolic" + sub, [&] {
      auto f = build_parabolic_chart_function(n, p, {i}, lim);
      rep.expect("sln/parabolic" + sub, is_splitting_function(f.poly).splits);
    });
  }
}

inline void verify_sln(Report& rep, const RunConfig& cfg, std::optional<int> n = {},
                       std::optional<std::uint64_t> p = {}) {
  if (n && p) {
    verify_sln_case(rep, cfg, *n, *p);
    return;
  }
  if (!n || *n == 1)
    for (std::uint64_t q : {2, 3, 5, 7})
      if (!p || *p == q) verify_sln_case(rep, cfg, 1, q);
  if (!n || *n == 2)
    for (std::uint64_t q : {2, 3})
      if (!p || *p == q) verify_sln_case(rep, cfg, 2, q);
}

}  // namespace fsplit
