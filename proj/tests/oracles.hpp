// Independent reference computations used only by the tests.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "fsplit/fpoly.hpp"
#include "fsplit/rootdata.hpp"

namespace oracle {

using fsplit::Int;
using fsplit::RootSystem;
using fsplit::Weight;

// Number of ways to write `target` (simple-root coordinates) as a nonnegative
// combination of the positive roots.
inline Int kostant_partition(const RootSystem& rs, const std::vector<Int>& target) {
  const auto& roots = rs.positive_roots();
  std::map<std::pair<std::size_t, std::vector<Int>>, Int> memo;
  std::function<Int(std::size_t, std::vector<Int>)> count = [&](std::size_t k, std::vector<Int> t) -> Int {
    for (Int v : t)
      if (v < 0) return 0;
    if (k == roots.size()) return std::all_of(t.begin(), t.end(), [](Int v) { return v == 0; }) ? 1 : 0;
    auto key = std::make_pair(k, t);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int total = 0;
    std::vector<Int> cur = t;
    for (;;) {
      total += count(k + 1, cur);
      bool ok = true;
      for (int i = 0; i < rs.rank(); ++i) {
        cur[i] -= roots[k].simple[i];
        ok = ok && cur[i] >= 0;
      }
      if (!ok) break;
    }
    memo[key] = total;
    return total;
  };
  return count(0, target);
}

// Kostant's multiplicity formula: m(mu) = sum_w sign(w) P(w(lambda+rho) - (mu+rho)).
inline Int kostant_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  Int m = 0;
  for (const auto& w : rs.weyl_group(100000)) {
    Weight diff = rs.act(w, lambda + rs.rho()) - (mu + rs.rho());
    auto c = rs.simple_coords(diff);
    if (!c) continue;
    Int sign = rs.length(w) % 2 ? -1 : 1;
    m += sign * kostant_partition(rs, *c);
  }
  return m;
}

// Exact Weyl dimension formula with rational reduction.
inline Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  __int128 num = 1, den = 1;
  Weight lr = lambda + rs.rho();
  for (const auto& a : rs.positive_roots()) {
    num *= rs.coroot_pairing(lr, a);
    den *= rs.coroot_pairing(rs.rho(), a);
    __int128 g = std::gcd(static_cast<long long>(num < 0 ? -num : num), static_cast<long long>(den));
    num /= g;
    den /= g;
  }
  return static_cast<Int>(num / den);
}

// Coefficients of prod_i (1 - t^{d_i}) / (1 - t)^{dim g}: the Hilbert series of
// the nilpotent cone in characteristic zero.
inline std::vector<Int> nilcone_hilbert(int dim_g, const std::vector<int>& degrees, int n_max) {
  std::vector<Int> s(n_max + 1, 0);
  s[0] = 1;
  for (int k = 0; k < dim_g; ++k)
    for (int d = 1; d <= n_max; ++d) s[d] += s[d - 1];
  for (int deg : degrees)
    for (int d = n_max; d >= deg; --d) s[d] -= s[d - deg];
  return s;
}

inline std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  // small n: exact Pascal triangle
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::uint64_t i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (std::uint64_t j = 1; j <= i; ++j) c[i][j] = (c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0)) % p;
  }
  return c[n][k];
}

// (1 - x y)^{p-1} over the variables (y21, x12): the 2x2 conjugation
// [[1,0],[y,1]] (I + X) [[1,0],[-y,1]] has top-left entry 1 - x y.
inline fsplit::SparsePolynomial rank_one_closed_form(std::uint64_t p) {
  fsplit::SparsePolynomial f(fsplit::PrimeField(p), fsplit::VariableTable{{"y21", {}}, {"x12", {}}});
  for (std::uint64_t k = 0; k <= p - 1; ++k) {
    std::uint64_t c = binomial_mod(p - 1, k, p);
    if (k % 2) c = (p - c) % p;
    f.add_term({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k)}, c);
  }
  return f;
}

// Compatibility by full enumeration of reduced exponents e in [0, p-1]^n.
inline bool brute_force_compatible(const fsplit::SparsePolynomial& f, const fsplit::VariableIdeal& ideal) {
  const auto p = f.p();
  const std::size_t n = f.num_vars();
  fsplit::Exponent e(n, 0);
  for (;;) {
    if (ideal.contains_monomial(e)) {
      auto t = fsplit::frobenius_trace(f, f.monomial(e));
      if (!ideal.contains(t)) return false;
    }
    std::size_t k = 0;
    while (k < n && ++e[k] == p) e[k++] = 0;
    if (k == n) return true;
  }
}

}  // namespace oracle
