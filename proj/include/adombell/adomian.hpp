#pragma once

// Adomian polynomials for an abstract nonlinearity N.
//
// A_n is stored as sum_j parts[j] * D_j where D_j stands for the derivative
// value N^{(j)}(u_0) and parts[j] is a polynomial in u_1..u_n. Keeping D_j
// uninterpreted lets every construction route be compared as a plain
// polynomial identity; a Nonlinearity specializes the result afterwards.
//
// Routes:
//   adomian_rach           sum over theta vectors (C(k,n) coefficients)
//   adomian_from_bell      (1/n!) B(n,k)[scaled]
//   adomian_from_ord_bell  (1/k!) Bo(n,k)
//   adomian_duan_rec1/2    recursions in lower-order Adomian polynomials
//   adomian_param_oracle   coefficient of lambda^n in the truncated expansion
//                          of N(u_0 + u_1 lambda + ... + u_n lambda^n)

#include "adombell/bell.hpp"
#include "adombell/multipoly.hpp"
#include "adombell/partitions.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace adombell {

struct AdomianPoly {
  unsigned n = 0;
  std::map<unsigned, MultiPoly> parts;  // derivative order -> coefficient polynomial

  /// A_0 = N(u_0): the constant 1 attached to D_0.
  static AdomianPoly zeroth() { return {0, {{0, MultiPoly(1)}}}; }

  void add(unsigned j, const MultiPoly& p) {
    if (p.is_zero()) return;
    auto& slot = parts[j];
    slot += p;
    if (slot.is_zero()) parts.erase(j);
  }

  friend bool operator==(const AdomianPoly&, const AdomianPoly&) = default;

  std::string to_string() const {
    if (parts.empty()) return "0";
    std::string s;
    for (const auto& [j, p] : parts) {
      if (!s.empty()) s += " + ";
      const std::string body = p.to_string();
      const std::string d = "N^(" + std::to_string(j) + ")(u0)";
      if (body == "1") {
        s += d;
      } else if (p.size() == 1) {
        s += body + "*" + d;
      } else {
        s += "(" + body + ")*" + d;
      }
    }
    return s;
  }
};

/// C(k,n) = sum over theta(n,k) of prod u_j^{k_j}/k_j!.
inline MultiPoly c_kn(unsigned k, unsigned n) {
  MultiPoly p;
  for (const auto& v : enum_theta(n, k)) {
    Integer den = 1;
    std::vector<Monomial::Factor> fs;
    for (std::size_t j = 0; j < v.parts.size(); ++j) {
      den *= factorial(v.parts[j]);
      if (v.parts[j]) fs.emplace_back(Var::u(static_cast<unsigned>(j + 1)), v.parts[j]);
    }
    p.add_term(Monomial::from_factors(std::move(fs)), Rational(Integer(1), den));
  }
  return p;
}

inline AdomianPoly adomian_rach(unsigned n) {
  if (n == 0) return AdomianPoly::zeroth();
  AdomianPoly a{n, {}};
  for (unsigned k = 1; k <= n; ++k) a.add(k, c_kn(k, n));
  return a;
}

inline AdomianPoly adomian_from_bell(unsigned n) {
  if (n == 0) return AdomianPoly::zeroth();
  AdomianPoly a{n, {}};
  const Rational inv = Rational(Integer(1), factorial(n));
  for (unsigned k = 1; k <= n; ++k) a.add(k, bell_partial_exp_scaled(n, k) * inv);
  return a;
}

inline AdomianPoly adomian_from_ord_bell(unsigned n) {
  if (n == 0) return AdomianPoly::zeroth();
  AdomianPoly a{n, {}};
  for (unsigned k = 1; k <= n; ++k) a.add(k, bell_partial_ord(n, k) / Rational(factorial(k)));
  return a;
}

namespace detail {

/// d/du_0 acts only through D_j -> D_{j+1}.
inline AdomianPoly d_du0(const AdomianPoly& a) {
  AdomianPoly r{a.n, {}};
  for (const auto& [j, p] : a.parts) r.add(j + 1, p);
  return r;
}

inline AdomianPoly d_du(const AdomianPoly& a, unsigned k) {
  if (k == 0) return d_du0(a);
  AdomianPoly r{a.n, {}};
  for (const auto& [j, p] : a.parts) r.add(j, partial(p, Var::u(k)));
  return r;
}

inline void add_scaled(AdomianPoly& acc, const AdomianPoly& a, const MultiPoly& factor) {
  for (const auto& [j, p] : a.parts) acc.add(j, p * factor);
}

}  // namespace detail

/// A_n = (1/n) sum_{k=0}^{n-1} (k+1) u_{k+1} dA_{n-k-1}/du_0.
inline AdomianPoly adomian_duan_rec1(unsigned n) {
  std::vector<AdomianPoly> a{AdomianPoly::zeroth()};
  for (unsigned m = 1; m <= n; ++m) {
    AdomianPoly next{m, {}};
    for (unsigned k = 0; k < m; ++k) {
      detail::add_scaled(next, detail::d_du0(a[m - k - 1]), MultiPoly::u(k + 1) * Rational(k + 1, m));
    }
    a.push_back(std::move(next));
  }
  return a[n];
}

/// A_n = (1/n) sum_{k=0}^{n-1} (k+1) u_{k+1} dA_{n-1}/du_k.
inline AdomianPoly adomian_duan_rec2(unsigned n) {
  AdomianPoly a = AdomianPoly::zeroth();
  for (unsigned m = 1; m <= n; ++m) {
    AdomianPoly next{m, {}};
    for (unsigned k = 0; k < m; ++k) {
      detail::add_scaled(next, detail::d_du(a, k), MultiPoly::u(k + 1) * Rational(k + 1, m));
    }
    a = std::move(next);
  }
  return a;
}

/// Coefficient of lambda^n in sum_{j=0}^{n} D_j w^j / j!, w = sum_{k=1}^{n} u_k lambda^k,
/// computed with power series truncated at lambda^n. Uses no partition machinery.
inline AdomianPoly adomian_param_oracle(unsigned n) {
  if (n == 0) return AdomianPoly::zeroth();
  std::vector<MultiPoly> w(n + 1);
  for (unsigned k = 1; k <= n; ++k) w[k] = MultiPoly::u(k);

  AdomianPoly a{n, {}};
  std::vector<MultiPoly> power(n + 1);  // w^j truncated
  power[0] = 1;
  for (unsigned j = 1; j <= n; ++j) {
    std::vector<MultiPoly> next(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
      if (power[i].is_zero()) continue;
      for (unsigned k = 1; i + k <= n; ++k) next[i + k] += power[i] * w[k];
    }
    power = std::move(next);
    a.add(j, power[n] / Rational(factorial(j)));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Concrete nonlinearities.

struct SymbolicU0 {
  friend bool operator==(SymbolicU0, SymbolicU0) { return true; }
};
using U0 = std::variant<SymbolicU0, Rational>;

/// N^{(j)}(u_0) = numerator / alpha^alpha_denominator.
struct DerivativeValue {
  MultiPoly numerator;
  unsigned alpha_denominator = 0;
};

class Nonlinearity {
 public:
  enum class Kind { linear, exp, power, polynomial, taylor };

  static Nonlinearity linear() { return Nonlinearity(Kind::linear); }

  /// N(u) = exp(rate * u).
  static Nonlinearity exp(MultiPoly rate) {
    Nonlinearity n(Kind::exp);
    n.rate_ = std::move(rate);
    return n;
  }

  /// N(u) = u^p with p = constant + inverse_alpha / alpha.
  static Nonlinearity power(Rational constant, Rational inverse_alpha = 0) {
    Nonlinearity n(Kind::power);
    n.exponent_constant_ = std::move(constant);
    n.exponent_inverse_alpha_ = std::move(inverse_alpha);
    return n;
  }

  /// N(u) = sum_i coeffs[i] u^i.
  static Nonlinearity polynomial(std::vector<Rational> coeffs) {
    Nonlinearity n(Kind::polynomial);
    n.poly_coeffs_ = std::move(coeffs);
    return n;
  }

  /// N^{(j)}(u_0) given directly as derivatives[j].
  static Nonlinearity taylor(std::vector<MultiPoly> derivatives) {
    Nonlinearity n(Kind::taylor);
    n.taylor_ = std::move(derivatives);
    return n;
  }

  Kind kind() const { return kind_; }

  DerivativeValue derivative_value(unsigned j, const U0& u0) const {
    switch (kind_) {
      case Kind::linear: return {polynomial_derivative({0, 1}, j, u0), 0};
      case Kind::polynomial: return {polynomial_derivative(poly_coeffs_, j, u0), 0};
      case Kind::exp: return {pow(rate_, j) * exp_weight(u0), 0};
      case Kind::power: return power_derivative(j, u0);
      case Kind::taylor:
        if (j >= taylor_.size()) {
          throw std::domain_error("no derivative of order " + std::to_string(j) + " supplied");
        }
        return {taylor_[j], 0};
    }
    throw std::logic_error("unreachable");
  }

  /// A factor common to every derivative value that stays outside the
  /// polynomial ring, such as exp(u0) for a symbolic u0.
  std::optional<std::string> symbolic_factor(const U0& u0) const {
    if (kind_ != Kind::exp || !std::holds_alternative<SymbolicU0>(u0) || rate_.is_zero()) return std::nullopt;
    if (rate_ == MultiPoly(1)) return "exp(u0)";
    const std::string r = rate_.to_string();
    return "exp(" + (rate_.size() == 1 ? r : "(" + r + ")") + "*u0)";
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::linear: return "linear";
      case Kind::exp: return "exp:" + rate_.to_string();
      case Kind::power:
        if (exponent_inverse_alpha_ == 0) return "power:" + exponent_constant_.str();
        return "power:" + exponent_constant_.str() + (exponent_inverse_alpha_ < 0 ? "-" : "+") +
               Rational(abs(exponent_inverse_alpha_)).str() + "/alpha";
      case Kind::polynomial: return "polynomial";
      case Kind::taylor: return "taylor";
    }
    return "?";
  }

 private:
  explicit Nonlinearity(Kind k) : kind_(k) {}

  static MultiPoly polynomial_derivative(const std::vector<Rational>& c, unsigned j, const U0& u0) {
    MultiPoly at = std::holds_alternative<Rational>(u0) ? MultiPoly(std::get<Rational>(u0)) : MultiPoly::u(0);
    MultiPoly r;
    for (std::size_t i = j; i < c.size(); ++i) {
      r += pow(at, static_cast<unsigned>(i - j)) * (c[i] * falling_factorial(Rational(i), j));
    }
    return r;
  }

  // exp(rate * u0) must be E^m at a concrete u0, i.e. rate * u0 = -m beta.
  MultiPoly exp_weight(const U0& u0) const {
    if (std::holds_alternative<SymbolicU0>(u0)) return 1;
    const MultiPoly exponent = rate_ * MultiPoly(std::get<Rational>(u0));
    if (exponent.is_zero()) return 1;
    if (exponent.size() == 1) {
      const auto& [m, c] = *exponent.terms().begin();
      if (m == Monomial(Var::beta()) && c < 0 && is_integer(c)) {
        return pow(MultiPoly::E(), static_cast<unsigned>(numerator(Rational(-c))));
      }
    }
    throw std::domain_error("exp(" + exponent.to_string() + ") is not representable as a power of E = exp(-beta)");
  }

  DerivativeValue power_derivative(unsigned j, const U0& u0) const {
    if (std::holds_alternative<SymbolicU0>(u0)) {
      throw std::domain_error("power nonlinearity needs a concrete u0");
    }
    const Rational& at = std::get<Rational>(u0);
    if (exponent_inverse_alpha_ != 0) {
      if (at != 1) throw std::domain_error("power with an alpha-dependent exponent is only evaluable at u0 = 1");
      // (a + b/alpha)_j = alpha^{-j} prod_{i<j} ((a - i) alpha + b)
      MultiPoly num = 1;
      for (unsigned i = 0; i < j; ++i) {
        num *= MultiPoly::alpha() * Rational(exponent_constant_ - i) + MultiPoly(exponent_inverse_alpha_);
      }
      return {num, j};
    }
    const Rational ff = falling_factorial(exponent_constant_, j);
    if (ff == 0 || at == 1) return {ff, 0};
    if (!is_integer(exponent_constant_)) {
      throw std::domain_error("u0^p with non-integer p is only evaluable at u0 = 1");
    }
    const Integer e = numerator(exponent_constant_) - j;
    if (at == 0 && e < 0) throw std::domain_error("negative power of u0 = 0");
    Rational scale = 1;
    const Rational base = e >= 0 ? at : Rational(1 / at);
    const auto reps = static_cast<unsigned>(e >= 0 ? e : Integer(-e));
    for (unsigned i = 0; i < reps; ++i) scale *= base;
    return {ff * scale, 0};
  }

  Kind kind_;
  MultiPoly rate_;
  Rational exponent_constant_;
  Rational exponent_inverse_alpha_;
  std::vector<Rational> poly_coeffs_;
  std::vector<MultiPoly> taylor_;
};

/// A_n after substituting derivative values: numerator / alpha^alpha_denominator,
/// times `factor` when present.
struct EvaluatedAdomian {
  MultiPoly numerator;
  unsigned alpha_denominator = 0;
  std::optional<std::string> factor;

  friend bool operator==(const EvaluatedAdomian&, const EvaluatedAdomian&) = default;

  /// Removes common powers of alpha between numerator and denominator.
  void cancel_alpha() {
    if (numerator.is_zero()) {
      alpha_denominator = 0;
      return;
    }
    unsigned common = alpha_denominator;
    for (const auto& [m, c] : numerator.terms()) common = std::min(common, m.exponent(Var::alpha()));
    numerator = divide_by_power(numerator, Var::alpha(), common);
    alpha_denominator -= common;
  }

  std::string to_string() const {
    std::string body = numerator.to_string();
    const bool compound = numerator.size() > 1;
    if (alpha_denominator > 0) {
      body = (compound ? "(" + body + ")" : body) + "/alpha";
      if (alpha_denominator > 1) body += "^" + std::to_string(alpha_denominator);
    }
    if (!factor) return body;
    if (body == "1") return *factor;
    if (compound && alpha_denominator == 0) return "(" + body + ")*" + *factor;
    return body + "*" + *factor;
  }
};

inline EvaluatedAdomian adomian_evaluate(const AdomianPoly& a, const Nonlinearity& spec, const U0& u0) {
  std::vector<std::pair<MultiPoly, DerivativeValue>> terms;
  unsigned den = 0;
  for (const auto& [j, p] : a.parts) {
    auto dv = spec.derivative_value(j, u0);
    den = std::max(den, dv.alpha_denominator);
    terms.emplace_back(p, std::move(dv));
  }
  EvaluatedAdomian r{{}, den, spec.symbolic_factor(u0)};
  for (const auto& [p, dv] : terms) {
    r.numerator += p * dv.numerator * pow(MultiPoly::alpha(), den - dv.alpha_denominator);
  }
  r.cancel_alpha();
  return r;
}

/// (1/n!) B_n(1! u_1, ..., n! u_n): the Adomian polynomial of exp(u) with
/// exp(u_0) factored out.
inline MultiPoly adomian_complete_exp(unsigned n) {
  return bell_complete_exp_scaled(n) / Rational(factorial(n));
}

}  // namespace adombell
