/*
  slnsplit.hpp

  Explicit splitting functions for SL_{n+1} on the big chart U^+ x u of the
  cotangent bundle G x^B u.

  Chart coordinates: g is generic lower unitriangular with entries y_ij
  (i > j), X is generic strictly upper triangular with entries x_ij (i < j).
  Matrix position (i, j) carries the weight eps_i - eps_j, so y's have
  negative-root weights and x's positive-root weights.  With the Springer map
  X |-> I + X the function attached to v^+ (x) v^- is

      f(g, X) = prod_{s=1}^{n} det_s( g (I + X) g^{-1} )^{p-1},

  det_s the leading principal s x s minor.  Only v^+ (x) v^- is supported.

  Leading principal minors are invariant under A |-> L A U for L lower and U
  upper unitriangular.  The one-parameter subgroup used by canonical_check is
  therefore the lower elementary matrix I + t E_{i+1,i}, i.e. the one fixing
  the vector paired on the left; translating g by its inverse is the
  substitution  y_{i+1,j} -> y_{i+1,j} - t y_{i,j},  y_{i+1,i} -> y_{i+1,i} - t.

  For a parabolic P_I the chart is U_P^+ x u_P (positions outside the Levi
  blocks) and both extreme vectors are moved by the longest element of the
  Levi Weyl group, which on matrices is the permutation reversing every
  Levi block: f_P(g, X) = prod_s det_s(P^T A P)^{p-1}.
*/
#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fsplit/errors.hpp"
#include "fsplit/fpoly.hpp"
#include "fsplit/rootdata.hpp"

namespace fsplit {

using PolyMatrix = std::vector<std::vector<SparsePolynomial>>;

struct ChartFunction {
  SparsePolynomial poly;
  int n = 0;               // rank; matrices are (n+1) x (n+1)
  std::uint64_t p = 0;
  std::vector<int> subset; // parabolic I, empty for B
  std::vector<bool> fiber; // true for x-variables (the u_P direction)
  std::vector<std::pair<int, int>> positions;  // 1-based matrix position per variable

  std::size_t fiber_dim() const {
    std::size_t k = 0;
    for (bool b : fiber) k += b;
    return k;
  }

  std::uint64_t x_degree(const Exponent& e) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (fiber[i]) d += e[i];
    return d;
  }

  std::uint64_t max_x_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : poly.terms()) d = std::max(d, x_degree(e));
    return d;
  }
};

namespace detail {

// eps_i - eps_j in fundamental coordinates of A_n (1-based i, j).
inline Weight position_weight(const RootSystem& rs, int i, int j) {
  Weight w = rs.zero();
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (int k = lo; k < hi; ++k) w += rs.simple_root(k - 1);
  return i < j ? w : -w;
}

// Position (i, j), i < j, lies in the Levi part of P_I iff alpha_i + ... + alpha_{j-1} in R_I.
inline bool in_levi(const std::vector<int>& subset, int i, int j) {
  for (int k = i; k < j; ++k)
    if (!std::binary_search(subset.begin(), subset.end(), k - 1)) return false;
  return true;
}

inline std::string position_name(char prefix, int i, int j, int m) {
  if (m <= 9) return prefix + std::to_string(i) + std::to_string(j);
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

inline std::vector<int> normalize_subset(int n, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int i : subset)
    if (i < 0 || i >= n) throw InputError("parabolic index out of range");
  return subset;
}

inline void check_guards(int n, std::uint64_t p) {
  if (n < 1) throw InputError("n must be >= 1");
  if (n > 7) throw InputError("rank cap is 8 for SL_{n+1}; got n = " + std::to_string(n));
  if (!is_prime(p)) throw InputError("p must be prime");
}

struct Chart {
  SparsePolynomial one;
  PolyMatrix g, x;
  ChartFunction meta;
};

inline Chart make_chart(int n, std::uint64_t p, const std::vector<int>& subset) {
  RootSystem rs('A', n);
  const int m = n + 1;
  VariableTable vars;
  std::vector<std::pair<int, int>> pos;
  std::vector<bool> fiber;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < i; ++j)
      if (!in_levi(subset, j, i)) {
        vars.push_back({position_name('y', i, j, m), position_weight(rs, i, j)});
        pos.emplace_back(i, j);
        fiber.push_back(false);
      }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (!in_levi(subset, i, j)) {
        vars.push_back({position_name('x', i, j, m), position_weight(rs, i, j)});
        pos.emplace_back(i, j);
        fiber.push_back(true);
      }

  SparsePolynomial zero(PrimeField(p), std::move(vars));
  Chart c{zero.constant(1), {}, {}, {zero, n, p, subset, fiber, pos}};
  c.g.assign(m, std::vector<SparsePolynomial>(m, zero));
  c.x.assign(m, std::vector<SparsePolynomial>(m, zero));
  for (int i = 0; i < m; ++i) c.g[i][i] = c.one;
  for (std::size_t v = 0; v < pos.size(); ++v) {
    auto [i, j] = pos[v];
    (fiber[v] ? c.x : c.g)[i - 1][j - 1] = zero.variable(v);
  }
  return c;
}

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, std::size_t cap) {
  const std::size_t m = a.size();
  PolyMatrix r(m, std::vector<SparsePolynomial>(m, a[0][0].zero_like()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) r[i][j] += a[i][k].multiply(b[k][j], cap);
  return r;
}

inline PolyMatrix identity_like(const PolyMatrix& a) {
  const std::size_t m = a.size();
  PolyMatrix r(m, std::vector<SparsePolynomial>(m, a[0][0].zero_like()));
  for (std::size_t i = 0; i < m; ++i) r[i][i] = a[0][0].constant(1);
  return r;
}

// Inverse of a unipotent matrix: sum_{k=0}^{m-1} (I - g)^k.
inline PolyMatrix unipotent_inverse(const PolyMatrix& g, std::size_t cap) {
  const std::size_t m = g.size();
  PolyMatrix nil = identity_like(g);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) nil[i][j] -= g[i][j];
  PolyMatrix sum = identity_like(g), power = identity_like(g);
  for (std::size_t k = 1; k < m; ++k) {
    power = mat_mul(power, nil, cap);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sum[i][j] += power[i][j];
  }
  return sum;
}

}  // namespace detail

/// Determinant of the leading s x s block by Laplace expansion along rows,
/// memoised on the set of remaining columns.
inline SparsePolynomial leading_minor(const PolyMatrix& a, int s, std::size_t cap = Limits{}.term_cap) {
  if (s < 0 || s > static_cast<int>(a.size())) throw InputError("minor size out of range");
  std::map<unsigned, SparsePolynomial> memo;
  const SparsePolynomial one = a[0][0].constant(1);
  std::function<SparsePolynomial(unsigned)> det = [&](unsigned cols) -> SparsePolynomial {
    const int used = s - __builtin_popcount(cols);
    if (cols == 0) return one;
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    SparsePolynomial acc = one.zero_like();
    int sign_pos = 0;
    for (int c = 0; c < s; ++c) {
      if (!(cols & (1u << c))) continue;
      const auto& entry = a[used][c];
      if (!entry.is_zero()) {
        SparsePolynomial term = entry.multiply(det(cols & ~(1u << c)), cap);
        if (sign_pos % 2) acc -= term;
        else acc += term;
      }
      ++sign_pos;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return det((1u << s) - 1);
}

/// g (I + X) g^{-1} over the chart ring.
inline PolyMatrix conjugated_fiber(const PolyMatrix& g, const PolyMatrix& x, std::size_t cap = Limits{}.term_cap) {
  PolyMatrix ix = x;
  for (std::size_t i = 0; i < ix.size(); ++i) ix[i][i] += ix[0][0].constant(1);
  return detail::mat_mul(detail::mat_mul(g, ix, cap), detail::unipotent_inverse(g, cap), cap);
}

inline SparsePolynomial minor_product(const PolyMatrix& a, std::uint64_t p, std::size_t cap) {
  const int n = static_cast<int>(a.size()) - 1;
  SparsePolynomial f = a[0][0].constant(1);
  for (int s = 1; s <= n; ++s) f = f.multiply(leading_minor(a, s, cap).pow(p - 1, cap), cap);
  return f;
}

/// f on U_P^+ x u_P for the parabolic P_I (0-based simple indices).
inline ChartFunction build_parabolic_chart_function(int n, std::uint64_t p, std::vector<int> subset,
                                                    const Limits& lim = {}) {
  detail::check_guards(n, p);
  subset = detail::normalize_subset(n, std::move(subset));
  auto chart = detail::make_chart(n, p, subset);
  PolyMatrix a = conjugated_fiber(chart.g, chart.x, lim.term_cap);

  // Permutation reversing each Levi block {k, k+1, ...} joined through I.
  const int m = n + 1;
  std::vector<int> perm;
  for (int start = 0; start < m;) {
    int end = start;
    while (end < n && std::binary_search(subset.begin(), subset.end(), end)) ++end;
    for (int k = end; k >= start; --k) perm.push_back(k);
    start = end + 1;
  }
  PolyMatrix b = a;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) b[i][j] = a[perm[i]][perm[j]];

  chart.meta.poly = minor_product(b, p, lim.term_cap);
  return chart.meta;
}

inline ChartFunction build_chart_function(int n, std::uint64_t p, const Limits& lim = {}) {
  return build_parabolic_chart_function(n, p, {}, lim);
}

struct MainCheckReport {
  SplittingVerdict verdict;
  std::size_t terms = 0;
  bool pass() const { return verdict.splits && verdict.top_coefficient != 0; }
};

/// Chart form of the splitting criterion for f attached to v^+ (x) v^-.
inline MainCheckReport check_theorem_main(int n, std::uint64_t p, const Limits& lim = {}) {
  auto f = build_chart_function(n, p, lim);
  return {is_splitting_function(f.poly), f.poly.size()};
}

/// Homogeneous component of x-degree dim(u_P) * (p - 1).
inline SparsePolynomial mvk_component(const ChartFunction& f) {
  const std::uint64_t target = f.fiber_dim() * (f.p - 1);
  return f.poly.filtered([&](const Exponent& e) { return f.x_degree(e) == target; });
}

/// Chart ideal of U^+ x u_P inside U^+ x u: the x_ij with (i, j) in the Levi part of I.
inline VariableIdeal levi_fiber_ideal(const ChartFunction& f, const std::vector<int>& subset) {
  auto sub = detail::normalize_subset(f.n, subset);
  VariableIdeal ideal;
  for (std::size_t v = 0; v < f.positions.size(); ++v) {
    auto [i, j] = f.positions[v];
    if (f.fiber[v] && detail::in_levi(sub, i, j)) ideal.generators.push_back(v);
  }
  return ideal;
}

/// The homogeneous splitting preserves the ideal of G x^B u_P on the chart,
/// which meets G x^B u_P densely.
inline CompatibilityVerdict compat_check(int n, std::uint64_t p, const std::vector<int>& subset,
                                         const Limits& lim = {}) {
  auto f = build_chart_function(n, p, lim);
  return splits_ideal_compatibly(mvk_component(f), levi_fiber_ideal(f, subset));
}

struct CanonicalDirection {
  int simple = 0;  // 0-based
  std::uint64_t t_degree = 0;
  bool pure_weights = true;
  std::optional<Exponent> witness;
  bool pass(std::uint64_t p) const { return pure_weights && t_degree <= p - 1; }
};

struct CanonicalReport {
  bool weight_zero = true;
  std::optional<Exponent> weight_witness;
  std::vector<CanonicalDirection> directions;

  bool pass(std::uint64_t p) const {
    if (!weight_zero) return false;
    for (const auto& d : directions)
      if (!d.pass(p)) return false;
    return true;
  }
};

inline Weight monomial_weight(const SparsePolynomial& f, const Exponent& e, std::size_t skip = SIZE_MAX) {
  Weight w;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (v == skip || e[v] == 0) continue;
    const auto& tag = f.vars()[v].weight;
    if (!tag) continue;
    if (w.rank() == 0) w = Weight(tag->rank());
    w += static_cast<Int>(e[v]) * *tag;
  }
  return w;
}

/// T-invariance, plus: translating by the simple one-parameter subgroups gives
/// a polynomial in t of degree <= p-1 whose t^k part has weight k * alpha.
inline CanonicalReport canonical_check(int n, std::uint64_t p, const Limits& lim = {}) {
  RootSystem rs('A', n);
  auto f = build_chart_function(n, p, lim);
  CanonicalReport rep;
  for (const auto& [e, c] : f.poly.terms()) {
    Weight w = monomial_weight(f.poly, e);
    if (!(w.rank() == 0 || w.is_zero())) {
      rep.weight_zero = false;
      rep.weight_witness = e;
      break;
    }
  }

  auto index_of = [&](int i, int j) -> std::size_t {
    for (std::size_t v = 0; v < f.positions.size(); ++v)
      if (!f.fiber[v] && f.positions[v] == std::make_pair(i, j)) return v;
    throw std::logic_error("chart variable missing");
  };

  for (int a = 1; a <= n; ++a) {
    Weight alpha = rs.simple_root(a - 1);
    SparsePolynomial ft = f.poly.extended({{"t", -alpha}});
    const std::size_t t = ft.num_vars() - 1;
    SparsePolynomial tvar = ft.variable(t);
    // row a+1 of g becomes row_{a+1} - t row_a
    ft = ft.substitute(index_of(a + 1, a), ft.variable(index_of(a + 1, a)) - tvar, lim.term_cap);
    for (int j = 1; j < a; ++j) {
      std::size_t v = index_of(a + 1, j);
      ft = ft.substitute(v, ft.variable(v) - tvar.multiply(ft.variable(index_of(a, j))), lim.term_cap);
    }
    CanonicalDirection dir;
    dir.simple = a - 1;
    for (const auto& [e, c] : ft.terms()) {
      dir.t_degree = std::max<std::uint64_t>(dir.t_degree, e[t]);
      Weight w = monomial_weight(ft, e, t);
      Weight expect = static_cast<Int>(e[t]) * alpha;
      if (w.rank() == 0) w = rs.zero();
      if (dir.pure_weights && w != expect) {
        dir.pure_weights = false;
        dir.witness = e;
      }
    }
    rep.directions.push_back(std::move(dir));
  }
  return rep;
}

/// g (I + X) g^{-1} == I + g X g^{-1} entrywise.
inline bool springer_equivariance_check(int n, std::uint64_t p, const Limits& lim = {}) {
  detail::check_guards(n, p);
  auto chart = detail::make_chart(n, p, {});
  PolyMatrix lhs = conjugated_fiber(chart.g, chart.x, lim.term_cap);
  PolyMatrix rhs = detail::mat_mul(detail::mat_mul(chart.g, chart.x, lim.term_cap),
                                   detail::unipotent_inverse(chart.g, lim.term_cap), lim.term_cap);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i][i] += chart.one;
  return lhs == rhs;
}

/// f restricted to X = 0.
inline SparsePolynomial zero_fiber_restriction(const ChartFunction& f) {
  SparsePolynomial r = f.poly.zero_like();
  for (const auto& [e, c] : f.poly.terms())
    if (f.x_degree(e) == 0) r.add_term(e, c);
  return r;
}

}  // namespace fsplit
