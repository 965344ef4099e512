/*
  rootdata.hpp

  Root systems of the simple types A..G and the combinatorics of their
  weight lattices.  Weights are stored in fundamental-weight coordinates, so
  the i-th coordinate of a weight is its pairing with the i-th simple coroot.
  Simple-root coordinates are recovered exactly through the integer matrix
  D * C^{-1} where C is the Cartan matrix and D the smallest integer clearing
  its denominators.

  Conventions
  -----------
  cartan(i, j) = <alpha_i, alpha_j^vee>, so row i is alpha_i written in
  fundamental coordinates.  Simple roots are numbered as in Bourbaki and are
  0-based in the C++ API; the CLI and JSON records use 1-based indices.

  A Weyl group element is a word (i_1, ..., i_k) meaning s_{i_1} ... s_{i_k};
  it acts on a weight by applying s_{i_k} first.

  Both sign conventions for the unipotent radical are available: positive
  roots are returned by positive_roots(), negative roots are their negatives.
  Downstream code states which one it uses.
*/
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "fsplit/errors.hpp"

namespace fsplit {

using Int = std::int64_t;

/// Integer vector in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, 0) {}
  explicit Weight(std::vector<Int> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<Int> coords) : c_(coords) {}

  std::size_t rank() const { return c_.size(); }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Int v) { return v == 0; });
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Weight operator*(Int k, Weight a) {
    for (auto& v : a.c_) v *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  // Lexicographic on fundamental coordinates.
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int v : w.coords()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Word in simple reflections, s_{w[0]} s_{w[1]} ... (0-based indices).
using WeylWord = std::vector<int>;

/// A positive root in three coordinate systems.
struct Root {
  std::vector<Int> simple;   // coefficients on simple roots
  Weight weight;             // fundamental coordinates
  std::vector<Int> coroot;   // alpha^vee on simple coroots
  Int height = 0;
};

namespace detail {

struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n, Int d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return {a.num * b.den, a.den * b.num};
  }
};

// Exact inverse of a small nonsingular integer matrix.
inline std::vector<std::vector<Rational>> invert(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].num == 0) ++piv;
    if (piv == n) throw InputError("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    Rational d = a[col][col];
    for (auto& v : a[col]) v = v / d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].num == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] = a[r][k] - f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// Gram matrix (alpha_i, alpha_j) in Bourbaki numbering, short roots of length^2 2.
inline std::vector<std::vector<Int>> gram_matrix(char type, int rank) {
  std::vector<std::vector<Int>> g(rank, std::vector<Int>(rank, 0));
  auto link = [&](int i, int j, Int v) { g[i][j] = g[j][i] = v; };
  switch (type) {
    case 'A':
      for (int i = 0; i < rank; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < rank; ++i) g[i][i] = 4;
      g[rank - 1][rank - 1] = 2;
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < rank; ++i) g[i][i] = 2;
      g[rank - 1][rank - 1] = 4;
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1);
      link(rank - 2, rank - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < rank; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1);
      link(rank - 3, rank - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < rank; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < rank; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      break;
  }
  return g;
}

inline bool valid_type(char type, int rank) {
  if (rank < 1 || rank > 8) return false;
  switch (type) {
    case 'A': return true;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

}  // namespace detail

class RootSystem;

/// Levi subset I of the simple roots and the data of P = P_I.
struct ParabolicSubset {
  std::vector<int> subset;                // sorted simple indices in I
  std::vector<std::size_t> levi_roots;    // indices into positive_roots(), R_I^+
  std::vector<std::size_t> radical_roots; // R^+ \ R_I^+, the weights of u_P^*
  Weight delta_p;                         // sum over radical_roots

  bool contains(int i) const {
    return std::binary_search(subset.begin(), subset.end(), i);
  }
};

struct ReductionTrace {
  struct Dominant {
    Weight weight;
    Int remaining_degree;
  };
  struct AllCohomologyVanishes {};

  std::vector<int> steps;             // simple indices applied, 0-based
  std::vector<Weight> weights;        // input followed by each intermediate weight
  std::variant<Dominant, AllCohomologyVanishes> outcome;

  bool vanishes() const { return std::holds_alternative<AllCohomologyVanishes>(outcome); }
};

class RootSystem {
 public:
  RootSystem(char type, int rank) : type_(type), rank_(rank) {
    if (type >= 'a' && type <= 'g') type_ = static_cast<char>(type - 'a' + 'A');
    if (!detail::valid_type(type_, rank)) {
      throw InputError("invalid root system " + std::string(1, type) + std::to_string(rank));
    }
    gram_ = detail::gram_matrix(type_, rank_);
    cartan_.assign(rank_, std::vector<Int>(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];

    auto inv = detail::invert(cartan_);
    Int d = 1;
    for (auto& row : inv)
      for (auto& v : row) d = std::lcm(d, v.den);
    inv_scale_ = d;
    inv_scaled_.assign(rank_, std::vector<Int>(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) inv_scaled_[i][j] = inv[i][j].num * (d / inv[i][j].den);

    build_positive_roots();
    rho_ = Weight(std::vector<Int>(rank_, 1));
  }

  /// Parses names like "A2", "g2", "E8".
  static RootSystem parse(const std::string& name) {
    if (name.size() < 2) throw InputError("bad root system name '" + name + "'");
    int rank = 0;
    try {
      std::size_t used = 0;
      rank = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad root system name '" + name + "'");
    }
    return RootSystem(name[0], rank);
  }

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  const std::vector<std::vector<Int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Int>>& gram() const { return gram_; }
  /// Half squared length of alpha_i; 1 for short roots.
  Int half_length(int i) const { return gram_[i][i] / 2; }

  const std::vector<Root>& positive_roots() const { return roots_; }
  std::size_t num_positive() const { return roots_.size(); }
  const Weight& rho() const { return rho_; }
  const Root& highest_root() const { return roots_[highest_]; }
  Int coxeter_number() const { return roots_[highest_].height + 1; }

  Weight simple_root(int i) const { return Weight(cartan_[i]); }
  Weight zero() const { return Weight(static_cast<std::size_t>(rank_)); }
  Weight fundamental(int i) const {
    Weight w = zero();
    w[i] = 1;
    return w;
  }

  Int pairing(const Weight& w, int i) const { return w[i]; }

  /// <w, alpha^vee> for a positive root.
  Int coroot_pairing(const Weight& w, const Root& a) const {
    Int s = 0;
    for (int i = 0; i < rank_; ++i) s += a.coroot[i] * w[i];
    return s;
  }

  Weight reflect(int i, Weight w) const {
    Int k = w[i];
    if (k == 0) return w;
    for (int j = 0; j < rank_; ++j) w[j] -= k * cartan_[i][j];
    return w;
  }

  Weight act(const WeylWord& word, Weight w) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = reflect(*it, std::move(w));
    return w;
  }

  /// w . lambda = w(lambda + rho) - rho
  Weight dot(const WeylWord& word, const Weight& w) const {
    return act(word, w + rho_) - rho_;
  }

  /// Length of the group element represented by a (possibly non-reduced) word.
  std::size_t length(const WeylWord& word) const {
    Weight wr = act(word, rho_);
    std::size_t n = 0;
    for (const auto& a : roots_)
      if (coroot_pairing(wr, a) < 0) ++n;
    return n;
  }

  bool is_dominant(const Weight& w) const {
    for (int i = 0; i < rank_; ++i)
      if (w[i] < 0) return false;
    return true;
  }

  /// Pairing >= -1 with every positive coroot.
  bool in_cone_C(const Weight& w) const {
    for (const auto& a : roots_)
      if (coroot_pairing(w, a) < -1) return false;
    return true;
  }

  bool in_levi_lattice(const Weight& w, const ParabolicSubset& p) const {
    for (int i : p.subset)
      if (w[i] != 0) return false;
    return true;
  }

  bool is_P_regular(const Weight& w, const ParabolicSubset& p) const {
    if (!in_levi_lattice(w, p)) return false;
    for (int i = 0; i < rank_; ++i)
      if (!p.contains(i) && w[i] <= 0) return false;
    return true;
  }

  /// Returns the dominant conjugate and the number of reflections used.
  std::pair<Weight, std::size_t> dominant_conjugate(Weight w) const {
    std::size_t steps = 0;
    for (;;) {
      int i = 0;
      while (i < rank_ && w[i] >= 0) ++i;
      if (i == rank_) return {w, steps};
      w = reflect(i, std::move(w));
      ++steps;
    }
  }

  /// D * (simple-root coordinates of w), with D = simple_scale().
  std::vector<Int> simple_coords_scaled(const Weight& w) const {
    std::vector<Int> c(rank_, 0);
    for (int j = 0; j < rank_; ++j)
      for (int i = 0; i < rank_; ++i) c[j] += w[i] * inv_scaled_[i][j];
    return c;
  }
  Int simple_scale() const { return inv_scale_; }

  /// Simple-root coordinates if w lies in the root lattice.
  std::optional<std::vector<Int>> simple_coords(const Weight& w) const {
    auto c = simple_coords_scaled(w);
    for (auto& v : c) {
      if (v % inv_scale_ != 0) return std::nullopt;
      v /= inv_scale_;
    }
    return c;
  }

  /// D * (height of w) where height is the sum of simple-root coordinates.
  Int height_scaled(const Weight& w) const {
    auto c = simple_coords_scaled(w);
    return std::accumulate(c.begin(), c.end(), Int{0});
  }

  /// D * (u, v) for the invariant form normalised by (short root)^2 = 2.
  Int form_scaled(const Weight& u, const Weight& v) const {
    auto c = simple_coords_scaled(u);
    Int s = 0;
    for (int j = 0; j < rank_; ++j) s += c[j] * v[j] * half_length(j);
    return s;
  }

  /// mu <= lambda, i.e. lambda - mu is a nonnegative integer combination of simple roots.
  bool dominance_leq(const Weight& mu, const Weight& lambda) const {
    auto c = simple_coords(lambda - mu);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](Int v) { return v >= 0; });
  }

  bool is_good_prime(Int p) const {
    for (Int c : highest_root().simple)
      if (c % p == 0) return false;
    return true;
  }

  /// Smallest prime p such that every prime >= p is good.
  Int min_good_prime() const {
    Int bound = 2;
    for (Int q = 2; q <= 64; ++q) {
      bool prime = true;
      for (Int d = 2; d * d <= q; ++d)
        if (q % d == 0) prime = false;
      if (prime && !is_good_prime(q)) bound = q + 1;
    }
    while (true) {
      bool prime = true;
      for (Int d = 2; d * d <= bound; ++d)
        if (bound % d == 0) prime = false;
      if (prime) return bound;
      ++bound;
    }
  }

  ParabolicSubset parabolic(std::vector<int> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (int i : subset)
      if (i < 0 || i >= rank_) throw InputError("parabolic index out of range");
    ParabolicSubset p;
    p.subset = std::move(subset);
    p.delta_p = zero();
    for (std::size_t r = 0; r < roots_.size(); ++r) {
      bool inside = true;
      for (int i = 0; i < rank_; ++i)
        if (roots_[r].simple[i] != 0 && !p.contains(i)) inside = false;
      if (inside) {
        p.levi_roots.push_back(r);
      } else {
        p.radical_roots.push_back(r);
        p.delta_p += roots_[r].weight;
      }
    }
    return p;
  }

  /// The iteration behind the vanishing theorem on the cone C: while lambda is
  /// not dominant, move along a simple root with pairing -1 and drop the degree.
  ReductionTrace cone_reduce(Weight w, Int degree) const {
    if (!in_cone_C(w)) throw InputError("cone_reduce: weight " + w.to_string() + " is not in C");
    if (degree < 0) throw InputError("cone_reduce: negative degree");
    ReductionTrace trace;
    trace.weights.push_back(w);
    for (;;) {
      if (is_dominant(w)) {
        trace.outcome = ReductionTrace::Dominant{w, degree};
        return trace;
      }
      if (degree == 0) {
        trace.outcome = ReductionTrace::AllCohomologyVanishes{};
        return trace;
      }
      int i = 0;
      while (w[i] != -1) ++i;  // exists: non-dominant and in C
      w += simple_root(i);
      --degree;
      trace.steps.push_back(i);
      trace.weights.push_back(w);
    }
  }

  /// Reduced words for every element of W, in order of length.  Elements are
  /// identified through the free orbit of rho.
  std::vector<WeylWord> weyl_group(std::size_t order_cap) const {
    std::vector<WeylWord> words{{}};
    std::set<Weight> seen{rho_};
    std::vector<Weight> images{rho_};
    for (std::size_t k = 0; k < words.size(); ++k) {
      for (int i = 0; i < rank_; ++i) {
        // s_i * w: apply s_i after w
        Weight img = reflect(i, images[k]);
        if (seen.insert(img).second) {
          if (words.size() >= order_cap) throw ResourceError("Weyl group exceeds order cap");
          WeylWord w{i};
          w.insert(w.end(), words[k].begin(), words[k].end());
          words.push_back(std::move(w));
          images.push_back(std::move(img));
        }
      }
    }
    return words;
  }

  /// Orbit W.w, enumerated by simple reflections.
  std::vector<Weight> orbit(const Weight& w, std::size_t cap) const {
    std::vector<Weight> out{w};
    std::unordered_set<Weight, WeightHash> seen{w};
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (int i = 0; i < rank_; ++i) {
        if (out[k][i] == 0) continue;
        Weight r = reflect(i, out[k]);
        if (seen.insert(r).second) {
          if (out.size() >= cap) throw ResourceError("Weyl orbit exceeds cap");
          out.push_back(std::move(r));
        }
      }
    }
    return out;
  }

 private:
  void build_positive_roots() {
    // Closure by root strings: beta + alpha_i is a root iff q > 0 where
    // q = p - <beta, alpha_i^vee> and p is the length of the downward string.
    std::set<std::vector<Int>> known;
    std::vector<std::vector<Int>> layer;
    for (int i = 0; i < rank_; ++i) {
      std::vector<Int> e(rank_, 0);
      e[i] = 1;
      layer.push_back(e);
      known.insert(e);
    }
    std::vector<std::vector<Int>> all = layer;
    while (!layer.empty()) {
      std::vector<std::vector<Int>> next;
      for (const auto& beta : layer) {
        Weight bw = to_weight(beta);
        for (int i = 0; i < rank_; ++i) {
          Int down = 0;
          auto probe = beta;
          for (;;) {
            probe[i] -= 1;
            if (probe[i] < 0 || !known.count(probe)) break;
            ++down;
          }
          if (down - bw[i] > 0) {
            auto up = beta;
            up[i] += 1;
            if (known.insert(up).second) next.push_back(up);
          }
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      layer = std::move(next);
    }

    for (const auto& s : all) {
      Root r;
      r.simple = s;
      r.weight = to_weight(s);
      r.height = std::accumulate(s.begin(), s.end(), Int{0});
      // (alpha, alpha)/2 and alpha^vee = sum_i c_i (|alpha_i|^2 / |alpha|^2) alpha_i^vee
      Int norm2 = 0;
      for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) norm2 += s[i] * s[j] * gram_[i][j];
      Int half = norm2 / 2;
      r.coroot.resize(rank_);
      for (int i = 0; i < rank_; ++i) r.coroot[i] = s[i] * half_length(i) / half;
      roots_.push_back(std::move(r));
    }
    std::stable_sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
      if (a.height != b.height) return a.height < b.height;
      return a.simple > b.simple;
    });
    highest_ = roots_.size() - 1;
  }

  Weight to_weight(const std::vector<Int>& simple) const {
    Weight w(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) w[j] += simple[i] * cartan_[i][j];
    return w;
  }

  char type_;
  int rank_;
  std::vector<std::vector<Int>> gram_;
  std::vector<std::vector<Int>> cartan_;
  std::vector<std::vector<Int>> inv_scaled_;
  Int inv_scale_ = 1;
  std::vector<Root> roots_;
  std::size_t highest_ = 0;
  Weight rho_;
};

}  // namespace fsplit
