/*
  fpoly.hpp

  Sparse multivariate polynomials over F_p and the Frobenius trace

      x^alpha / (dx)^{p-1} :  x^beta  |->  x^{((alpha + beta + 1)/p) - 1},

  where a monomial with a nonintegral exponent is read as zero.  A function f
  on affine space splits it iff trace(f, 1) is a nonzero constant, which in
  coefficient form says: x^{p-1,...,p-1} occurs, and no other x^{p-1 + p*a} does.
*/
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fsplit/errors.hpp"
#include "fsplit/rootdata.hpp"

namespace fsplit {

using Coeff = std::uint64_t;
using Exponent = std::vector<std::uint32_t>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p > (1ULL << 31) || !is_prime(p)) throw InputError("not a prime <= 2^31: " + std::to_string(p));
  }
  std::uint64_t p() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(m < 0 ? m + static_cast<std::int64_t>(p_) : m);
  }
  Coeff add(Coeff a, Coeff b) const { return (a + b) % p_; }
  Coeff sub(Coeff a, Coeff b) const { return (a + p_ - b) % p_; }
  Coeff mul(Coeff a, Coeff b) const { return (a * b) % p_; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

struct Variable {
  std::string name;
  std::optional<Weight> weight;

  friend bool operator==(const Variable&, const Variable&) = default;
};

using VariableTable = std::vector<Variable>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (auto v : e) h = (h ^ v) * 0x100000001b3ULL;
    return h;
  }
};

class SparsePolynomial {
 public:
  using Terms = std::map<Exponent, Coeff>;

  SparsePolynomial(PrimeField field, VariableTable vars)
      : field_(field), vars_(std::make_shared<const VariableTable>(std::move(vars))) {}
  SparsePolynomial(PrimeField field, std::shared_ptr<const VariableTable> vars)
      : field_(field), vars_(std::move(vars)) {}

  /// Same field and variables, no terms.
  SparsePolynomial zero_like() const { return SparsePolynomial(field_, vars_); }
  SparsePolynomial constant(std::int64_t c) const {
    SparsePolynomial r = zero_like();
    r.add_term(Exponent(num_vars(), 0), field_.reduce(c));
    return r;
  }
  SparsePolynomial variable(std::size_t i, std::uint32_t power = 1) const {
    Exponent e(num_vars(), 0);
    e.at(i) = power;
    SparsePolynomial r = zero_like();
    r.add_term(e, 1);
    return r;
  }
  SparsePolynomial monomial(Exponent e, Coeff c = 1) const {
    check_exponent(e);
    SparsePolynomial r = zero_like();
    r.add_term(std::move(e), c % field_.p());
    return r;
  }

  const PrimeField& field() const { return field_; }
  std::uint64_t p() const { return field_.p(); }
  const VariableTable& vars() const { return *vars_; }
  const std::shared_ptr<const VariableTable>& vars_ptr() const { return vars_; }
  std::size_t num_vars() const { return vars_->size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::optional<std::size_t> var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_->size(); ++i)
      if ((*vars_)[i].name == name) return i;
    return std::nullopt;
  }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Nonzero constant, if the polynomial is one.
  std::optional<Coeff> as_nonzero_constant() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    if (std::any_of(e.begin(), e.end(), [](auto v) { return v != 0; })) return std::nullopt;
    return c;
  }

  void add_term(Exponent e, Coeff c) {
    c %= field_.p();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool compatible(const SparsePolynomial& o) const {
    return field_ == o.field_ && (vars_ == o.vars_ || *vars_ == *o.vars_);
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, field_.neg(c));
    return *this;
  }
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator-(const SparsePolynomial& a) { return a.scaled(a.p() - 1); }

  SparsePolynomial scaled(Coeff k) const {
    SparsePolynomial r = zero_like();
    k %= p();
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, field_.mul(c, k));
    return r;
  }

  SparsePolynomial multiply(const SparsePolynomial& o, std::size_t term_cap = Limits{}.term_cap) const {
    require_compatible(o);
    std::unordered_map<Exponent, Coeff, ExponentHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    const std::size_t n = num_vars();
    Exponent e(n);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        for (std::size_t i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
        Coeff& slot = acc[e];
        slot = field_.add(slot, field_.mul(c1, c2));
      }
      if (acc.size() > term_cap) throw ResourceError("polynomial product exceeds term cap");
    }
    SparsePolynomial r = zero_like();
    for (auto& [ex, c] : acc)
      if (c != 0) r.terms_.emplace(ex, c);
    return r;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.multiply(b);
  }

  SparsePolynomial pow(std::uint64_t k, std::size_t term_cap = Limits{}.term_cap) const {
    SparsePolynomial result = constant(1);
    SparsePolynomial base = *this;
    while (k) {
      if (k & 1) result = result.multiply(base, term_cap);
      k >>= 1;
      if (k) base = base.multiply(base, term_cap);
    }
    return result;
  }

  /// Replaces variable `var` by g.
  SparsePolynomial substitute(std::size_t var, const SparsePolynomial& g,
                              std::size_t term_cap = Limits{}.term_cap) const {
    require_compatible(g);
    if (var >= num_vars()) throw InputError("substitute: variable out of range");
    std::map<std::uint32_t, SparsePolynomial> powers;  // g^k, on demand
    std::map<std::uint32_t, SparsePolynomial> grouped;  // by exponent of var
    for (const auto& [e, c] : terms_) {
      Exponent rest = e;
      std::uint32_t k = rest[var];
      rest[var] = 0;
      auto it = grouped.try_emplace(k, zero_like()).first;
      it->second.add_term(std::move(rest), c);
    }
    SparsePolynomial r = zero_like();
    for (auto& [k, part] : grouped) {
      if (k == 0) {
        r += part;
        continue;
      }
      auto it = powers.find(k);
      if (it == powers.end()) it = powers.emplace(k, g.pow(k, term_cap)).first;
      r += part.multiply(it->second, term_cap);
      if (r.size() > term_cap) throw ResourceError("substitute exceeds term cap");
    }
    return r;
  }

  /// Same polynomial over a larger variable table; new variables are appended.
  SparsePolynomial extended(const VariableTable& extra) const {
    VariableTable vt = *vars_;
    vt.insert(vt.end(), extra.begin(), extra.end());
    SparsePolynomial r(field_, std::move(vt));
    for (const auto& [e, c] : terms_) {
      Exponent ex = e;
      ex.resize(r.num_vars(), 0);
      r.terms_.emplace(std::move(ex), c);
    }
    return r;
  }

  /// Terms satisfying a predicate on the exponent.
  template <class Pred>
  SparsePolynomial filtered(Pred&& keep) const {
    SparsePolynomial r = zero_like();
    for (const auto& [e, c] : terms_)
      if (keep(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) s += " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (*vars_)[i].name;
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        s += std::to_string(c);
      } else {
        if (c != 1) s += std::to_string(c) + "*";
        s += mono;
      }
    }
    return s;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.compatible(b) && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const SparsePolynomial& o) const {
    if (!compatible(o)) throw InputError("polynomials over different fields or variable tables");
  }
  void check_exponent(const Exponent& e) const {
    if (e.size() != num_vars()) throw InputError("exponent length does not match variable count");
  }

  PrimeField field_;
  std::shared_ptr<const VariableTable> vars_;
  Terms terms_;
};

/// Image of x^gamma under the trace exponent map, if integral.
inline std::optional<Exponent> trace_exponent(const Exponent& gamma, std::uint64_t p) {
  Exponent out(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    std::uint64_t g = gamma[i] + 1ULL;
    if (g % p != 0) return std::nullopt;
    out[i] = static_cast<std::uint32_t>(g / p - 1);
  }
  return out;
}

/// sigma_f(g): expand f*g and push each monomial through the trace exponent map.
inline SparsePolynomial frobenius_trace(const SparsePolynomial& f, const SparsePolynomial& g,
                                        std::size_t term_cap = Limits{}.term_cap) {
  SparsePolynomial prod = f.multiply(g, term_cap);
  SparsePolynomial r = f.zero_like();
  for (const auto& [e, c] : prod.terms()) {
    if (auto t = trace_exponent(e, f.p())) r.add_term(std::move(*t), c);
  }
  return r;
}

struct SplittingVerdict {
  bool splits = false;
  // On failure: the offending monomial, or the missing all-(p-1) monomial.
  std::optional<Exponent> witness;
  Coeff top_coefficient = 0;
  std::string reason;
};

inline SplittingVerdict is_splitting_function(const SparsePolynomial& f) {
  const auto p = f.p();
  SplittingVerdict v;
  Exponent top(f.num_vars(), static_cast<std::uint32_t>(p - 1));
  v.top_coefficient = f.coefficient(top);
  for (const auto& [e, c] : f.terms()) {
    if (e == top) continue;
    bool bad = std::all_of(e.begin(), e.end(), [p](std::uint32_t x) { return x % p == p - 1; });
    if (bad) {
      v.witness = e;
      v.reason = "monomial x^(p-1 + p*a) with a != 0 occurs";
      return v;
    }
  }
  if (v.top_coefficient == 0) {
    v.witness = top;
    v.reason = "coefficient of x^(p-1) vanishes";
    return v;
  }
  v.splits = true;
  return v;
}

/// Ideal generated by a set of variables.
struct VariableIdeal {
  std::vector<std::size_t> generators;

  bool contains_monomial(const Exponent& e) const {
    return std::any_of(generators.begin(), generators.end(), [&](std::size_t i) { return e[i] > 0; });
  }
  bool contains(const SparsePolynomial& f) const {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& t) { return contains_monomial(t.first); });
  }
};

struct CompatibilityVerdict {
  bool compatible = false;
  std::optional<Exponent> witness_monomial;       // x^e in the ideal
  std::optional<SparsePolynomial> witness_trace;  // sigma_f(x^e), not in the ideal
};

/// sigma_f(J) is contained in J.  Writing J-elements as sums of x^e h^p with
/// 0 <= e_i <= p-1, either x^e or h lies in J, so it suffices that
/// sigma_f(x^e) lies in J for every reduced exponent e meeting a generator.
/// For fixed e the trace map is injective on monomials, and x^gamma
/// contributes to sigma_f(x^e) only when e = (p-1-gamma) mod p, so the
/// check runs over the terms of f instead of all p^n residues.
inline CompatibilityVerdict splits_ideal_compatibly(const SparsePolynomial& f, const VariableIdeal& ideal) {
  for (std::size_t g : ideal.generators)
    if (g >= f.num_vars()) throw InputError("ideal generator out of range");
  CompatibilityVerdict v;
  const auto p = f.p();
  if (ideal.generators.empty()) {
    v.compatible = true;
    return v;
  }
  const std::size_t n = f.num_vars();
  // Only residue classes e that f actually reaches; the rest trace to zero.
  std::map<Exponent, std::vector<Exponent>> hit;
  for (const auto& [gamma, c] : f.terms()) {
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint32_t>((p - 1 - gamma[i] % p) % p);
    if (!ideal.contains_monomial(e)) continue;
    Exponent sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = gamma[i] + e[i];
    auto t = trace_exponent(sum, p);
    if (!ideal.contains_monomial(*t)) hit[e].push_back(*t);
  }
  if (!hit.empty()) {
    const Exponent& e = hit.begin()->first;
    v.witness_monomial = e;
    v.witness_trace = frobenius_trace(f, f.monomial(e));
    return v;
  }
  v.compatible = true;
  return v;
}

}  // namespace fsplit
