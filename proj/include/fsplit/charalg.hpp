/*
  charalg.hpp

  Formal characters over the weight lattice of a RootSystem.  A Character is
  a finite map weight -> nonzero integer; GradedCharacter adds a degree.

  weyl_character computes multiplicities of dominant weights by Freudenthal's
  recursion and spreads them over Weyl orbits.  euler_char implements the
  dot-reflection algorithm: either lambda + rho is singular and the Euler
  characteristic vanishes, or a unique w makes w.lambda dominant and the
  answer is (-1)^l(w) ch H^0(w.lambda).

  The weights of u^* are the positive roots; the cotangent fibre (g/b)^*
  has the negative roots as weights.
*/
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fsplit/errors.hpp"
#include "fsplit/rootdata.hpp"

namespace fsplit {

class Character {
 public:
  using Map = std::map<Weight, Int>;

  Character() = default;
  static Character single(const Weight& w, Int mult = 1) {
    Character c;
    c.add(w, mult);
    return c;
  }

  void add(const Weight& w, Int mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Signed sum of multiplicities.
  Int dimension() const {
    Int d = 0;
    for (const auto& [w, m] : terms_) d += m;
    return d;
  }

  Character shifted(const Weight& by) const {
    Character c;
    for (const auto& [w, m] : terms_) c.terms_.emplace(w + by, m);
    return c;
  }

  Character& operator+=(const Character& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
  }
  Character& operator-=(const Character& o) {
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
  }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(Int k, const Character& a) {
    Character c;
    if (k == 0) return c;
    for (const auto& [w, m] : a.terms_) c.terms_.emplace(w, k * m);
    return c;
  }

  /// Character of the tensor product.
  Character tensor(const Character& o, std::size_t term_cap = Limits{}.term_cap) const {
    Character c;
    for (const auto& [w1, m1] : terms_) {
      for (const auto& [w2, m2] : o.terms_) {
        c.add(w1 + w2, m1 * m2);
        if (c.size() > term_cap) throw ResourceError("character exceeds term cap");
      }
    }
    return c;
  }

  friend bool operator==(const Character&, const Character&) = default;

 private:
  Map terms_;
};

using GradedCharacter = std::map<int, Character>;

struct GoodFiltrationDecomposition {
  std::vector<std::pair<Weight, Int>> layers;  // (dominant lambda_i, multiplicity)

  Int total_multiplicity() const {
    Int s = 0;
    for (const auto& [w, m] : layers) s += m;
    return s;
  }
};

struct DecompositionResult {
  bool ok = true;
  GoodFiltrationDecomposition decomposition;
  // Set when ok is false: the maximal weight that could not be peeled off.
  std::optional<Weight> witness;
  Int witness_coefficient = 0;
  std::string reason;
};

namespace detail {

// Stembridge: the dominant weights below a dominant lambda are connected to
// lambda by subtracting positive roots, staying dominant.
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda,
                                                  std::size_t cap) {
  std::vector<Weight> out{lambda};
  std::set<Weight> seen{lambda};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& a : rs.positive_roots()) {
      Weight nu = out[k] - a.weight;
      if (!rs.is_dominant(nu)) continue;
      if (seen.insert(nu).second) {
        if (out.size() >= cap) throw ResourceError("dominant weight set exceeds cap");
        out.push_back(std::move(nu));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Weyl dimension formula, prod <lambda+rho, a^vee> / <rho, a^vee>, as a float estimate.
inline long double weyl_dimension_estimate(const RootSystem& rs, const Weight& lambda) {
  Weight lr = lambda + rs.rho();
  long double d = 1;
  for (const auto& a : rs.positive_roots())
    d *= static_cast<long double>(rs.coroot_pairing(lr, a)) /
         static_cast<long double>(rs.coroot_pairing(rs.rho(), a));
  return d;
}

/// Character of H^0(G/B, lambda) in characteristic 0, lambda dominant.
inline Character weyl_character(const RootSystem& rs, const Weight& lambda,
                                const Limits& lim = {}) {
  if (!rs.is_dominant(lambda)) throw InputError("weyl_character: " + lambda.to_string() + " is not dominant");
  long double est = weyl_dimension_estimate(rs, lambda);
  if (est > static_cast<long double>(lim.dim_cap) + 0.5) throw ResourceError("weyl_character: dimension cap exceeded");

  auto dom = detail::dominant_weights_below(rs, lambda, lim.term_cap);
  std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) {
    return rs.height_scaled(a) > rs.height_scaled(b);
  });

  std::unordered_map<Weight, Int, WeightHash> mult;
  mult[lambda] = 1;
  const Weight& rho = rs.rho();
  Weight lr = lambda + rho;
  const Int top = rs.form_scaled(lr, lr);

  auto lookup = [&](const Weight& w) -> std::optional<Int> {
    auto it = mult.find(rs.dominant_conjugate(w).first);
    if (it == mult.end()) return std::nullopt;
    return it->second;
  };

  for (std::size_t k = 1; k < dom.size(); ++k) {
    const Weight& mu = dom[k];
    Int num = 0;
    for (const auto& a : rs.positive_roots()) {
      Weight nu = mu + a.weight;
      // mu + k*a stays a weight as long as its dominant conjugate is <= lambda
      while (rs.dominance_leq(rs.dominant_conjugate(nu).first, lambda)) {
        auto m = lookup(nu);
        if (!m) break;
        num += 2 * *m * rs.form_scaled(nu, a.weight);
        nu += a.weight;
      }
    }
    Weight mr = mu + rho;
    Int den = top - rs.form_scaled(mr, mr);
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion lost integrality at " + mu.to_string());
    Int m = num / den;
    mult[mu] = m;
  }

  Character c;
  for (const auto& mu : dom) {
    Int m = mult[mu];
    if (m == 0) continue;
    for (auto& w : rs.orbit(mu, lim.term_cap)) {
      c.add(w, m);
      if (c.size() > lim.term_cap) throw ResourceError("weyl_character: term cap exceeded");
    }
  }
  return c;
}

struct EulerReduction {
  bool singular = false;
  Weight dominant;     // w.lambda
  std::size_t length;  // l(w)
};

/// Finds w with w.lambda dominant, or reports that lambda + rho is singular.
inline EulerReduction dot_reduce(const RootSystem& rs, const Weight& lambda) {
  Weight lr = lambda + rs.rho();
  for (const auto& a : rs.positive_roots())
    if (rs.coroot_pairing(lr, a) == 0) return {true, lambda, 0};
  auto [d, len] = rs.dominant_conjugate(lr);
  return {false, d - rs.rho(), len};
}

/// Euler characteristic sum_i (-1)^i ch H^i(G/B, lambda), any lambda.
inline Character euler_char(const RootSystem& rs, const Weight& lambda, const Limits& lim = {}) {
  auto red = dot_reduce(rs, lambda);
  if (red.singular) return {};
  Character c = weyl_character(rs, red.dominant, lim);
  return red.length % 2 ? -1 * c : c;
}

/// sum_mu m_mu * euler_char(lambda + mu)
inline Character module_euler(const RootSystem& rs, const Character& module, const Weight& lambda,
                              const Limits& lim = {}) {
  // Collect coefficients per dominant target before expanding any character.
  std::map<Weight, Int> coeff;
  for (const auto& [mu, m] : module.terms()) {
    auto red = dot_reduce(rs, lambda + mu);
    if (red.singular) continue;
    coeff[red.dominant] += red.length % 2 ? -m : m;
  }
  Character out;
  for (const auto& [w, k] : coeff) {
    if (k == 0) continue;
    out += k * weyl_character(rs, w, lim);
    if (out.size() > lim.term_cap) throw ResourceError("module_euler: term cap exceeded");
  }
  return out;
}

/// Character of S^n(u_P^*): degree-n monomials in the roots R^+ \ R_I^+.
inline Character sym_power_char(const RootSystem& rs, const ParabolicSubset& parab, int n,
                                const Limits& lim = {}) {
  if (n < 0) throw InputError("sym_power_char: negative degree");
  // by_degree[d] = S^d of the roots processed so far
  std::vector<Character> by_degree(n + 1);
  by_degree[0] = Character::single(rs.zero());
  for (std::size_t r : parab.radical_roots) {
    const Weight& a = rs.positive_roots()[r].weight;
    for (int d = n; d >= 1; --d) {
      Character acc = by_degree[d];
      Weight shift = a;
      for (int j = 1; j <= d; ++j) {
        acc += by_degree[d - j].shifted(shift);
        shift += a;
      }
      if (acc.size() > lim.term_cap) throw ResourceError("sym_power_char: term cap exceeded");
      by_degree[d] = std::move(acc);
    }
  }
  return by_degree[n];
}

inline Character sym_power_char(const RootSystem& rs, int n, const Limits& lim = {}) {
  return sym_power_char(rs, rs.parabolic({}), n, lim);
}

/// Character of Lambda^j((g/b)^*): sums of j distinct negative roots.
inline Character exterior_power_char(const RootSystem& rs, int j, const Limits& lim = {}) {
  const int big_n = static_cast<int>(rs.num_positive());
  if (j < 0 || j > big_n) throw InputError("exterior_power_char: degree out of range");
  std::vector<Character> by_degree(j + 1);
  by_degree[0] = Character::single(rs.zero());
  for (const auto& a : rs.positive_roots()) {
    Weight neg = -a.weight;
    for (int d = j; d >= 1; --d) {
      by_degree[d] += by_degree[d - 1].shifted(neg);
      if (by_degree[d].size() > lim.term_cap) throw ResourceError("exterior_power_char: term cap exceeded");
    }
  }
  return by_degree[j];
}

struct KoszulReport {
  bool identity_holds = false;
  bool vanishing_asserted = false;  // <lambda, alpha_i^vee> == -1
  bool vanishing_holds = true;
  Character total;      // chi(S^n u^* (x) lambda)
  Character shifted;    // chi(S^{n-1} u^* (x) (lambda + alpha_i))
  Character parabolic;  // chi(S^n u^*_{P_alpha_i} (x) lambda)

  bool pass() const { return identity_holds && vanishing_holds; }
};

/// Euler-level form of the Koszul sequence for 0 -> alpha_i -> u^* -> u^*_{P_i} -> 0.
inline KoszulReport koszul_check(const RootSystem& rs, int n, const Weight& lambda, int i,
                                 const Limits& lim = {}) {
  if (n < 1) throw InputError("koszul_check: degree must be >= 1");
  if (i < 0 || i >= rs.rank()) throw InputError("koszul_check: simple index out of range");
  KoszulReport r;
  r.total = module_euler(rs, sym_power_char(rs, n, lim), lambda, lim);
  r.shifted = module_euler(rs, sym_power_char(rs, n - 1, lim), lambda + rs.simple_root(i), lim);
  r.parabolic = module_euler(rs, sym_power_char(rs, rs.parabolic({i}), n, lim), lambda, lim);
  r.identity_holds = (r.total == r.shifted + r.parabolic);
  r.vanishing_asserted = (lambda[i] == -1);
  if (r.vanishing_asserted) r.vanishing_holds = r.parabolic.empty();
  return r;
}

/// Character of k[U_1] = prod over a > 0 of (1 + e^a + ... + e^{(p-1)a}).
inline Character truncated_char(const RootSystem& rs, Int p, const Limits& lim = {}) {
  if (p < 2) throw InputError("truncated_char: p must be prime");
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InputError("truncated_char: p must be prime");
  long double dim = std::pow(static_cast<long double>(p), static_cast<long double>(rs.num_positive()));
  if (dim > static_cast<long double>(lim.dim_cap)) throw ResourceError("truncated_char: dimension cap exceeded");
  Character c = Character::single(rs.zero());
  for (const auto& a : rs.positive_roots()) {
    Character next;
    Weight shift = rs.zero();
    for (Int k = 0; k < p; ++k) {
      next += c.shifted(shift);
      shift += a.weight;
    }
    if (next.size() > lim.term_cap) throw ResourceError("truncated_char: term cap exceeded");
    c = std::move(next);
  }
  return c;
}

/// Peels Weyl characters off maximal weights.  A maximal weight is one with
/// no other weight of the support strictly above it; ties are broken by the
/// lexicographically largest fundamental coordinates.
inline DecompositionResult decompose_good_filtration(const RootSystem& rs, Character c,
                                                     const Limits& lim = {}) {
  DecompositionResult res;
  while (!c.empty()) {
    std::vector<std::pair<Int, Weight>> by_height;
    by_height.reserve(c.size());
    for (const auto& [w, m] : c.terms()) by_height.emplace_back(rs.height_scaled(w), w);
    std::sort(by_height.begin(), by_height.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::optional<Weight> best;
    for (std::size_t k = 0; k < by_height.size(); ++k) {
      const auto& [h, w] = by_height[k];
      bool maximal = true;
      for (std::size_t j = 0; j < k && by_height[j].first > h; ++j) {
        if (rs.dominance_leq(w, by_height[j].second)) {
          maximal = false;
          break;
        }
      }
      if (maximal && (!best || w > *best)) best = w;
    }

    Int coeff = c.multiplicity(*best);
    if (!rs.is_dominant(*best) || coeff < 0) {
      res.ok = false;
      res.witness = *best;
      res.witness_coefficient = coeff;
      res.reason = !rs.is_dominant(*best) ? "maximal weight is not dominant" : "negative multiplicity";
      return res;
    }
    c -= coeff * weyl_character(rs, *best, lim);
    res.decomposition.layers.emplace_back(*best, coeff);
  }
  return res;
}

struct GradedSectionReport {
  GradedCharacter graded;
  std::map<int, DecompositionResult> decompositions;

  bool all_decompose() const {
    return std::all_of(decompositions.begin(), decompositions.end(),
                       [](const auto& kv) { return kv.second.ok; });
  }
};

/// Degreewise ch H^0(G/B, S^n u_P^* (x) lambda) for n <= n_max, each piece
/// decomposed into Weyl characters.
inline GradedSectionReport graded_section_char(const RootSystem& rs, const Weight& lambda, int n_max,
                                               const ParabolicSubset& parab, const Limits& lim = {}) {
  if (n_max < 0) throw InputError("graded_section_char: negative degree");
  if (parab.subset.empty()) {
    if (!rs.in_cone_C(lambda)) throw InputError("graded_section_char: weight not in C");
  } else {
    if (!rs.is_dominant(lambda) || !rs.is_P_regular(lambda, parab))
      throw InputError("graded_section_char: weight must be P-regular dominant in X(P)");
  }
  GradedSectionReport rep;
  for (int n = 0; n <= n_max; ++n) {
    Character piece = module_euler(rs, sym_power_char(rs, parab, n, lim), lambda, lim);
    rep.decompositions[n] = decompose_good_filtration(rs, piece, lim);
    rep.graded[n] = std::move(piece);
  }
  return rep;
}

/// Predicted H^i(G_1, H^0(w.0 + p lambda))^{[-1]} for i <= i_max, p > h.
inline std::map<int, Character> g1_cohomology_char(const RootSystem& rs, const WeylWord& word,
                                                   const Weight& lambda, Int p, int i_max,
                                                   const Limits& lim = {}) {
  bool prime = p >= 2;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw InputError("g1_cohomology_char: p must be prime");
  if (p <= rs.coxeter_number()) throw InputError("g1_cohomology_char: need p > h");
  if (!rs.is_dominant(lambda)) throw InputError("g1_cohomology_char: lambda must be dominant");
  for (int i : word)
    if (i < 0 || i >= rs.rank()) throw InputError("g1_cohomology_char: bad word");
  Weight target = rs.dot(word, rs.zero()) + p * lambda;
  if (!rs.is_dominant(target)) throw InputError("g1_cohomology_char: w.0 + p*lambda is not dominant");

  const int len = static_cast<int>(rs.length(word));
  std::map<int, Character> out;
  for (int i = 0; i <= i_max; ++i) {
    if (i < len || (i - len) % 2 != 0) {
      out[i] = Character{};
    } else {
      out[i] = module_euler(rs, sym_power_char(rs, (i - len) / 2, lim), lambda, lim);
    }
  }
  return out;
}

}  // namespace fsplit
