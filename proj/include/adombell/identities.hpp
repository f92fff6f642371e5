#pragma once

// Instance checks of the Bell-polynomial identities obtained from the two
// ADM-solvable ODEs. Every check is an exact polynomial equality in the
// formal parameters alpha and beta; rational functions of alpha are first
// multiplied through by alpha^n.

#include "adombell/bell.hpp"
#include "adombell/multipoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adombell {

struct IdentityReport {
  std::string name;
  unsigned n = 0;
  std::optional<unsigned> m;
  MultiPoly lhs;
  MultiPoly rhs;
  bool holds = false;

  static IdentityReport make(std::string name, unsigned n, std::optional<unsigned> m, MultiPoly lhs, MultiPoly rhs) {
    const bool holds = (lhs - rhs).is_zero();
    return {std::move(name), n, m, std::move(lhs), std::move(rhs), holds};
  }
};

namespace detail {

inline MultiPoly sign_power(unsigned e) { return e % 2 == 0 ? MultiPoly(1) : MultiPoly(-1); }

/// The four (alpha, beta) sign patterns used for the numeric corollaries.
struct SignPair {
  int alpha;
  int beta;
};
inline constexpr SignPair kSignPairs[] = {{-1, 1}, {1, 1}, {-1, -1}, {1, -1}};

inline std::string pair_label(const std::string& base, SignPair p) {
  return base + "[alpha=" + std::to_string(p.alpha) + ",beta=" + std::to_string(p.beta) + "]";
}

inline Bindings sign_bindings(SignPair p) {
  return {{Var::alpha(), MultiPoly(p.alpha)}, {Var::beta(), MultiPoly(p.beta)}};
}

}  // namespace detail

/// Argument j (1-based) of the exponential identity: (-1)^{j-1} (j-1)! alpha^j beta^{j-1}.
inline std::vector<MultiPoly> exp_identity_arguments(unsigned count) {
  std::vector<MultiPoly> args;
  for (unsigned j = 1; j <= count; ++j) {
    args.push_back(detail::sign_power(j - 1) * MultiPoly(factorial(j - 1)) * pow(MultiPoly::alpha(), j) *
                   pow(MultiPoly::beta(), j - 1));
  }
  return args;
}

/// sum_k (-beta)^k B(n,k)(args) = n! (-alpha beta)^n
inline IdentityReport verify_exp_identity(unsigned n) {
  const auto args = exp_identity_arguments(n);
  MultiPoly lhs;
  for (unsigned k = 1; k <= n; ++k) lhs += pow(-MultiPoly::beta(), k) * bell_partial_exp_at(n, k, args);
  MultiPoly rhs = MultiPoly(factorial(n)) * pow(-(MultiPoly::alpha() * MultiPoly::beta()), n);
  return IdentityReport::make("exp", n, std::nullopt, std::move(lhs), std::move(rhs));
}

/// The exponential identity at (alpha, beta) in {(-1,1), (1,1), (-1,-1), (1,-1)}.
inline std::vector<IdentityReport> verify_exp_specializations(unsigned n) {
  const IdentityReport sym = verify_exp_identity(n);
  std::vector<IdentityReport> out;
  for (auto p : detail::kSignPairs) {
    const auto b = detail::sign_bindings(p);
    out.push_back(IdentityReport::make(detail::pair_label("exp", p), n, std::nullopt, subst(sym.lhs, b),
                                       subst(sym.rhs, b)));
  }
  return out;
}

/// Argument j of the ordinary identity: (-1)^{j-1} alpha^j beta^{j-1} / j.
inline std::vector<MultiPoly> ord_identity_arguments(unsigned count) {
  std::vector<MultiPoly> args;
  for (unsigned j = 1; j <= count; ++j) {
    args.push_back(detail::sign_power(j - 1) * pow(MultiPoly::alpha(), j) * pow(MultiPoly::beta(), j - 1) /
                   Rational(j));
  }
  return args;
}

/// sum_k (-beta)^k / k! Bo(n,k)(args) = (-alpha beta)^n
inline IdentityReport verify_ord_identity(unsigned n) {
  const auto args = ord_identity_arguments(n);
  MultiPoly lhs;
  for (unsigned k = 1; k <= n; ++k) {
    lhs += pow(-MultiPoly::beta(), k) * bell_partial_ord_at(n, k, args) / Rational(factorial(k));
  }
  MultiPoly rhs = pow(-(MultiPoly::alpha() * MultiPoly::beta()), n);
  return IdentityReport::make("ord", n, std::nullopt, std::move(lhs), std::move(rhs));
}

inline std::vector<IdentityReport> verify_ord_specializations(unsigned n) {
  const IdentityReport sym = verify_ord_identity(n);
  std::vector<IdentityReport> out;
  for (auto p : detail::kSignPairs) {
    const auto b = detail::sign_bindings(p);
    out.push_back(IdentityReport::make(detail::pair_label("ord", p), n, std::nullopt, subst(sym.lhs, b),
                                       subst(sym.rhs, b)));
  }
  return out;
}

/// alpha^k (1 - 1/alpha)_k = prod_{i<k} ((1-i) alpha - 1).
inline MultiPoly cleared_shifted_falling_factorial(unsigned k) {
  MultiPoly r = 1;
  for (unsigned i = 0; i < k; ++i) r *= MultiPoly::alpha() * Rational(1 - static_cast<int>(i)) - MultiPoly(1);
  return r;
}

/// sum_k (1 - 1/alpha)_k B(n,k)((alpha)_1, ..., (alpha)_{n-k+1}) = (alpha - 1)_n,
/// both sides multiplied by alpha^n.
inline IdentityReport verify_falling_factorial_identity(unsigned n) {
  std::vector<MultiPoly> args;
  for (unsigned j = 1; j <= n; ++j) args.push_back(falling_factorial(MultiPoly::alpha(), j));
  MultiPoly lhs;
  for (unsigned k = 1; k <= n; ++k) {
    lhs += pow(MultiPoly::alpha(), n - k) * cleared_shifted_falling_factorial(k) * bell_partial_exp_at(n, k, args);
  }
  MultiPoly rhs = pow(MultiPoly::alpha(), n) * falling_factorial(MultiPoly::alpha() - MultiPoly(1), n);
  return IdentityReport::make("falling", n, std::nullopt, std::move(lhs), std::move(rhs));
}

/// sum_k (1/k!) (1 - 1/m)_k Bo(n,k)(C(m,1), ..., C(m,n-k+1)) = C(m-1, n), for m > n.
inline IdentityReport verify_binomial_identity(unsigned m, unsigned n) {
  if (n < 1 || m <= n) {
    throw std::invalid_argument("binomial identity requires m > n >= 1, got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  }
  std::vector<MultiPoly> args;
  for (unsigned j = 1; j <= n; ++j) args.push_back(MultiPoly(binomial(m, j)));
  const Rational shift = Rational(1) - Rational(1, static_cast<int>(m));
  MultiPoly lhs;
  for (unsigned k = 1; k <= n; ++k) {
    const Rational w = falling_factorial(shift, k) / Rational(factorial(k));
    lhs += bell_partial_ord_at(n, k, args) * w;
  }
  return IdentityReport::make("binomial", n, m, std::move(lhs), MultiPoly(binomial(m - 1, n)));
}

/// B_n(-0!, 1!, ..., (-1)^n (n-1)!) = (-1)^n n!  and  B_n(0!, 1!, ..., (n-1)!) = n!.
inline std::vector<IdentityReport> verify_complete_bell_remark(unsigned n) {
  std::vector<MultiPoly> alternating, plain;
  for (unsigned j = 1; j <= n; ++j) {
    plain.emplace_back(factorial(j - 1));
    alternating.push_back(detail::sign_power(j) * MultiPoly(factorial(j - 1)));
  }
  std::vector<IdentityReport> out;
  out.push_back(IdentityReport::make("complete-bell[alternating]", n, std::nullopt,
                                     bell_complete_exp_at(n, alternating),
                                     detail::sign_power(n) * MultiPoly(factorial(n))));
  out.push_back(IdentityReport::make("complete-bell[plain]", n, std::nullopt, bell_complete_exp_at(n, plain),
                                     MultiPoly(factorial(n))));
  return out;
}

/// Row n of B(n,k)(0!, 1!, ..., (n-k)!) against unsigned first-kind Stirling
/// numbers; lhs and rhs are the row sums, and `holds` also requires every
/// entry to match and the row sum to equal n!.
inline IdentityReport verify_stirling_connection(unsigned n) {
  std::vector<MultiPoly> args;
  for (unsigned j = 1; j <= n; ++j) args.emplace_back(factorial(j - 1));
  MultiPoly lhs, rhs;
  bool rows_match = true;
  for (unsigned k = 1; k <= n; ++k) {
    const MultiPoly b = bell_partial_exp_at(n, k, args);
    const MultiPoly c(stirling_first_unsigned(n, k));
    rows_match = rows_match && b == c;
    lhs += b;
    rhs += c;
  }
  IdentityReport r = IdentityReport::make("stirling", n, std::nullopt, std::move(lhs), std::move(rhs));
  r.holds = r.holds && rows_match && r.lhs == MultiPoly(factorial(n));
  return r;
}

}  // namespace adombell
