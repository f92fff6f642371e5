#pragma once

// Adomian decomposition for u' = alpha N(u), u(0) = u0, written as the
// integral equation u = u0 + alpha int_0^x N(u(t)) dt. With no linear part
// the components satisfy
//
//   u_{n+1}(x) = alpha int_0^x A_n(u_0, u_1(t), ..., u_n(t)) dt.
//
// Coefficients live in Q[alpha, beta, E] with E standing for exp(-beta).
// Derivative values that carry powers of 1/alpha are cleared before
// integration and divided back out exactly afterwards.

#include "adombell/adomian.hpp"
#include "adombell/multipoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adombell {

struct SeriesSolution {
  std::vector<MultiPoly> components;             // u_0 .. u_M as polynomials in x
  std::vector<EvaluatedAdomian> adomian_terms;   // A_0 .. A_{M-1} at the components; empty for closed forms

  unsigned order() const { return components.empty() ? 0 : static_cast<unsigned>(components.size() - 1); }
};

inline SeriesSolution adm_solve(const Nonlinearity& spec, const MultiPoly& alpha, const Rational& u0, unsigned order) {
  if (order < 1) throw std::invalid_argument("ADM order must be at least 1");
  SeriesSolution s;
  s.components.emplace_back(u0);
  for (unsigned n = 0; n < order; ++n) {
    EvaluatedAdomian a = adomian_evaluate(adomian_rach(n), spec, U0{u0});
    if (a.factor) throw std::domain_error("nonlinearity is not evaluable at u0 = " + u0.str());

    Bindings at_components;
    for (unsigned j = 1; j <= n; ++j) at_components.emplace(Var::u(j), s.components[j]);
    a.numerator = subst(a.numerator, at_components);
    a.cancel_alpha();

    const MultiPoly integrated = alpha * integrate_from_zero(a.numerator, Var::x());
    s.components.push_back(divide_by_power(integrated, Var::alpha(), a.alpha_denominator));
    s.adomian_terms.push_back(std::move(a));
  }
  return s;
}

/// u(x) = 1 + ln(1 + alpha beta E x)/beta: u_n = (-1)^{n+1} alpha^n beta^{n-1} E^n x^n / n.
inline SeriesSolution closed_form_exp_series(unsigned order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  SeriesSolution s;
  s.components.emplace_back(1);
  for (unsigned n = 1; n <= order; ++n) {
    const Rational c = Rational(n % 2 == 1 ? 1 : -1, static_cast<int>(n));
    s.components.push_back(MultiPoly::term(c, Monomial::from_factors({{Var::alpha(), n},
                                                                         {Var::beta(), n - 1},
                                                                         {Var::E(), n},
                                                                         {Var::x(), n}})));
  }
  return s;
}

/// u(x) = (1 + x)^alpha: u_n = (alpha)_n / n! x^n.
inline SeriesSolution closed_form_power_series(unsigned order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  SeriesSolution s;
  for (unsigned n = 0; n <= order; ++n) {
    s.components.push_back(falling_factorial(MultiPoly::alpha(), n) * pow(MultiPoly::x(), n) /
                           Rational(factorial(n)));
  }
  return s;
}

/// u(x) = exp(x): u_n = x^n / n!.
inline SeriesSolution closed_form_linear_series(unsigned order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  SeriesSolution s;
  for (unsigned n = 0; n <= order; ++n) s.components.push_back(pow(MultiPoly::x(), n) / Rational(factorial(n)));
  return s;
}

struct SeriesComparison {
  bool equal = true;
  std::optional<unsigned> mismatch_index;
  MultiPoly lhs;
  MultiPoly rhs;
};

inline SeriesComparison compare_series(const SeriesSolution& a, const SeriesSolution& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("cannot compare series of order " + std::to_string(a.order()) + " and " +
                                std::to_string(b.order()));
  }
  for (unsigned i = 0; i < a.components.size(); ++i) {
    if (a.components[i] != b.components[i]) return {false, i, a.components[i], b.components[i]};
  }
  return {};
}

/// The three ODEs supported by the CLI.
enum class OdeKind { exp, power, linear };

/// u' = alpha exp(-beta u), u' = alpha u^{1-1/alpha}, or u' = u; all with u(0) = 1.
inline SeriesSolution solve_ode(OdeKind ode, unsigned order) {
  switch (ode) {
    case OdeKind::exp: return adm_solve(Nonlinearity::exp(-MultiPoly::beta()), MultiPoly::alpha(), 1, order);
    case OdeKind::power: return adm_solve(Nonlinearity::power(1, -1), MultiPoly::alpha(), 1, order);
    case OdeKind::linear: return adm_solve(Nonlinearity::linear(), 1, 1, order);
  }
  throw std::logic_error("unreachable");
}

inline SeriesSolution closed_form_series(OdeKind ode, unsigned order) {
  switch (ode) {
    case OdeKind::exp: return closed_form_exp_series(order);
    case OdeKind::power: return closed_form_power_series(order);
    case OdeKind::linear: return closed_form_linear_series(order);
  }
  throw std::logic_error("unreachable");
}

}  // namespace adombell
