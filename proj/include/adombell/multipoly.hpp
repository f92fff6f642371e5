#pragma once

// Sparse multivariate polynomials with exact rational coefficients over the
// variables u0, u1, u2, ..., x, alpha, beta, E.
//
// Canonical form: no zero coefficients, no zero exponents. Terms are kept in
// graded lexicographic order (total degree first, ties broken by comparing
// exponents from the largest variable down), with variable order
// u0 < u1 < u2 < ... < x < alpha < beta < E. Iteration order is therefore
// also the serialization order.

#include "adombell/rational.hpp"

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adombell {

enum class VarKind : std::uint8_t { u = 0, x, alpha, beta, E };

struct Var {
  VarKind kind = VarKind::u;
  unsigned index = 0;  // only meaningful for u

  static constexpr Var u(unsigned i) { return {VarKind::u, i}; }
  static constexpr Var x() { return {VarKind::x, 0}; }
  static constexpr Var alpha() { return {VarKind::alpha, 0}; }
  static constexpr Var beta() { return {VarKind::beta, 0}; }
  static constexpr Var E() { return {VarKind::E, 0}; }

  friend constexpr auto operator<=>(const Var&, const Var&) = default;

  std::string name() const {
    switch (kind) {
      case VarKind::u: return "u" + std::to_string(index);
      case VarKind::x: return "x";
      case VarKind::alpha: return "alpha";
      case VarKind::beta: return "beta";
      case VarKind::E: return "E";
    }
    return "?";
  }

  static Var parse(std::string_view s) {
    if (s == "x") return x();
    if (s == "alpha") return alpha();
    if (s == "beta") return beta();
    if (s == "E") return E();
    if (s.size() >= 2 && s[0] == 'u') {
      unsigned idx = 0;
      for (char c : s.substr(1)) {
        if (c < '0' || c > '9') throw std::invalid_argument("unknown variable '" + std::string(s) + "'");
        idx = idx * 10 + static_cast<unsigned>(c - '0');
      }
      return u(idx);
    }
    throw std::invalid_argument("unknown variable '" + std::string(s) + "'");
  }
};

class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;
  explicit Monomial(Var v, unsigned e = 1) {
    if (e != 0) factors_.emplace_back(v, e);
  }

  /// Accepts factors in any order with repeats; merges and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> fs) {
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : fs) {
      if (e == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == v) {
        m.factors_.back().second += e;
      } else {
        m.factors_.emplace_back(v, e);
      }
    }
    return m;
  }

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  unsigned exponent(Var v) const {
    for (const auto& [w, e] : factors_) {
      if (w == v) return e;
    }
    return 0;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  /// The monomial with v removed entirely.
  Monomial without(Var v) const {
    Monomial m;
    for (const auto& f : factors_) {
      if (f.first != v) m.factors_.push_back(f);
    }
    return m;
  }

  Monomial with_exponent(Var v, unsigned e) const {
    auto fs = without(v).factors_;
    fs.emplace_back(v, e);
    return from_factors(std::move(fs));
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        m.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        m.factors_.push_back(*j++);
      } else {
        m.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string s;
    for (const auto& [v, e] : factors_) {
      if (!s.empty()) s += '*';
      s += v.name();
      if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<Factor> factors_;  // sorted by Var, exponents > 0
};

/// Strict weak order: graded, then lexicographic from the largest variable.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto fa = a.factors();
    auto fb = b.factors();
    auto i = fa.size();
    auto j = fb.size();
    while (i > 0 || j > 0) {
      if (i == 0) return true;
      if (j == 0) return false;
      const auto& [va, ea] = fa[i - 1];
      const auto& [vb, eb] = fb[j - 1];
      if (va == vb) {
        if (ea != eb) return ea < eb;
        --i;
        --j;
      } else {
        return vb > va;
      }
    }
    return false;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLex>;

  MultiPoly() = default;
  template <class T>
    requires std::convertible_to<T, Rational>
  MultiPoly(const T& c) {  // NOLINT: implicit scalar embedding
    Rational r(c);
    if (r != 0) terms_.emplace(Monomial{}, std::move(r));
  }

  static MultiPoly term(const Rational& c, const Monomial& m) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }
  static MultiPoly variable(Var v) { return term(1, Monomial(v)); }
  static MultiPoly u(unsigned i) { return variable(Var::u(i)); }
  static MultiPoly x() { return variable(Var::x()); }
  static MultiPoly alpha() { return variable(Var::alpha()); }
  static MultiPoly beta() { return variable(Var::beta()); }
  static MultiPoly E() { return variable(Var::E()); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Monomial{}); }

  unsigned total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
  }
  unsigned degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
  }

  /// Adds c * m in place, keeping the canonical form.
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  MultiPoly& operator/=(const Rational& s) {
    if (s == 0) throw std::domain_error("division of a polynomial by zero");
    for (auto& [m, c] : terms_) c /= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend MultiPoly operator/(MultiPoly a, const Rational& s) { return a /= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Text form with explicit '*' and '^', rationals as p/q, e.g. "u2 + 1/2*u1^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (first) {
        if (neg) s += '-';
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      if (m.is_one()) {
        s += mag.str();
      } else {
        if (mag != 1) s += mag.str() + '*';
        s += m.to_string();
      }
    }
    return s;
  }

 private:
  TermMap terms_;
};

inline MultiPoly pow(const MultiPoly& base, unsigned e) {
  MultiPoly result = 1;
  MultiPoly b = base;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

/// Formal partial derivative with respect to v.
inline MultiPoly partial(const MultiPoly& p, Var v) {
  MultiPoly r;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(m.with_exponent(v, e - 1), c * e);
  }
  return r;
}

using Bindings = std::map<Var, MultiPoly>;

/// Simultaneous substitution: every bound variable is replaced by its image
/// in the original polynomial; images are never re-substituted.
inline MultiPoly subst(const MultiPoly& p, const Bindings& bindings) {
  std::map<std::pair<Var, unsigned>, MultiPoly> power_cache;
  auto image_pow = [&](Var v, const MultiPoly& image, unsigned e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, pow(image, e)).first;
    return it->second;
  };

  MultiPoly r;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    MultiPoly product = c;
    for (const auto& [v, e] : m.factors()) {
      auto b = bindings.find(v);
      if (b == bindings.end()) {
        kept.emplace_back(v, e);
      } else {
        product *= image_pow(v, b->second, e);
        if (product.is_zero()) break;
      }
    }
    if (product.is_zero()) continue;
    r += product * MultiPoly::term(1, Monomial::from_factors(std::move(kept)));
  }
  return r;
}

/// p / v^e, required to be exact. Throws std::domain_error otherwise.
inline MultiPoly divide_by_power(const MultiPoly& p, Var v, unsigned e) {
  if (e == 0) return p;
  MultiPoly r;
  for (const auto& [m, c] : p.terms()) {
    const unsigned have = m.exponent(v);
    if (have < e) {
      throw std::domain_error("polynomial is not divisible by " + v.name() + "^" + std::to_string(e));
    }
    r.add_term(m.with_exponent(v, have - e), c);
  }
  return r;
}

/// Antiderivative in v with zero constant term: v^j -> v^(j+1)/(j+1).
inline MultiPoly integrate_from_zero(const MultiPoly& p, Var v) {
  MultiPoly r;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(v);
    r.add_term(m.with_exponent(v, e + 1), c / (e + 1));
  }
  return r;
}

/// a (a-1) ... (a-k+1) over the polynomial ring.
inline MultiPoly falling_factorial(const MultiPoly& a, unsigned k) {
  MultiPoly r = 1;
  for (unsigned i = 0; i < k; ++i) r *= a - MultiPoly(Rational(i));
  return r;
}

}  // namespace adombell
