#pragma once

// Partial and complete Bell polynomials, exponential and ordinary.
//
// Naming:
//   B(n,k)         partial exponential, n! sum prod (1/k_j!) (u_j/j!)^{k_j}
//   B(n,k)[scaled] the same evaluated at (1! u_1, 2! u_2, ...)
//   Bo(n,k)        partial ordinary, k! sum prod u_j^{k_j}/k_j!
//
// The *_direct functions expand the definition over the lambda set. The
// recursive constructions are independent routes to the same polynomials:
//   duan  - two-branch recurrence on partition multiplicities
//   conv  - convolution in the first index
//   diff  - u_1 term plus a derivative operator on B(n-1,k)
// Every recursive routine memoizes into a table local to the call.

#include "adombell/multipoly.hpp"
#include "adombell/partitions.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace adombell {

/// A Bell polynomial kept in partition-indexed form: the MultiPoly is
/// sum over keys v of coeffs[v] * prod u_j^{v_j}.
struct PartitionSum {
  unsigned n = 0;
  unsigned k = 0;
  std::map<PartitionVector, Rational> coeffs;

  MultiPoly to_poly() const {
    MultiPoly p;
    for (const auto& [v, c] : coeffs) {
      std::vector<Monomial::Factor> fs;
      for (std::size_t j = 0; j < v.parts.size(); ++j) {
        if (v.parts[j]) fs.emplace_back(Var::u(static_cast<unsigned>(j + 1)), v.parts[j]);
      }
      p.add_term(Monomial::from_factors(std::move(fs)), c);
    }
    return p;
  }

  /// The substitution k_1 -> k_1 + 1: each term u_1^{k_1}/k_1! * rest becomes
  /// u_1^{k_1+1}/(k_1+1)! * rest. Keys are relabelled to (n_new, k_new).
  PartitionSum bump_first(unsigned n_new, unsigned k_new) const {
    PartitionSum r{n_new, k_new, {}};
    for (const auto& [v, c] : coeffs) {
      PartitionVector w{n_new, k_new, v.parts};
      w.parts[0] += 1;
      r.coeffs[w] += c / w.parts[0];
    }
    return r;
  }

  /// Shifts every variable u_j -> u_{j+1}: prefix a zero multiplicity and pad
  /// with trailing zeros up to n_new - k_new + 1 entries.
  PartitionSum shift_variables(unsigned n_new, unsigned k_new) const {
    PartitionSum r{n_new, k_new, {}};
    for (const auto& [v, c] : coeffs) {
      PartitionVector w{n_new, k_new, {0}};
      w.parts.insert(w.parts.end(), v.parts.begin(), v.parts.end());
      w.parts.resize(n_new - k_new + 1, 0);
      r.coeffs[w] += c;
    }
    return r;
  }

  PartitionSum& operator+=(const PartitionSum& o) {
    for (const auto& [v, c] : o.coeffs) coeffs[v] += c;
    std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
    return *this;
  }
  PartitionSum& operator*=(const Rational& s) {
    for (auto& [v, c] : coeffs) c *= s;
    return *this;
  }
};

namespace detail {

inline void check_bell_range(unsigned n, unsigned k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::out_of_range("Bell polynomial index requires 1 <= k <= n, got n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));
  }
}

inline Monomial monomial_of(const PartitionVector& v) {
  std::vector<Monomial::Factor> fs;
  for (std::size_t j = 0; j < v.parts.size(); ++j) {
    if (v.parts[j]) fs.emplace_back(Var::u(static_cast<unsigned>(j + 1)), v.parts[j]);
  }
  return Monomial::from_factors(std::move(fs));
}

/// u_j -> j! u_j for j = 1..m.
inline Bindings factorial_scaling(unsigned m) {
  Bindings b;
  for (unsigned j = 2; j <= m; ++j) b.emplace(Var::u(j), MultiPoly::u(j) * Rational(factorial(j)));
  return b;
}

/// u_j -> u_j / j! for j = 1..m.
inline Bindings factorial_unscaling(unsigned m) {
  Bindings b;
  for (unsigned j = 2; j <= m; ++j) b.emplace(Var::u(j), MultiPoly::u(j) / Rational(factorial(j)));
  return b;
}

inline Bindings argument_bindings(std::span<const MultiPoly> args) {
  Bindings b;
  for (std::size_t j = 0; j < args.size(); ++j) b.emplace(Var::u(static_cast<unsigned>(j + 1)), args[j]);
  return b;
}

}  // namespace detail

/// B(n,k)(u_1, ..., u_{n-k+1}) from its definition.
inline MultiPoly bell_partial_exp(unsigned n, unsigned k) {
  detail::check_bell_range(n, k);
  const Integer nf = factorial(n);
  MultiPoly p;
  for (const auto& v : enum_lambda(n, k)) {
    Integer den = 1;
    for (std::size_t j = 0; j < v.parts.size(); ++j) {
      den *= factorial(v.parts[j]) * boost::multiprecision::pow(factorial(static_cast<unsigned>(j + 1)), v.parts[j]);
    }
    p.add_term(detail::monomial_of(v), Rational(nf, den));
  }
  return p;
}

/// B(n,k)(1! u_1, 2! u_2, ..., (n-k+1)! u_{n-k+1}).
inline MultiPoly bell_partial_exp_scaled(unsigned n, unsigned k) {
  return subst(bell_partial_exp(n, k), detail::factorial_scaling(n - k + 1));
}

/// Bo(n,k)(u_1, ..., u_{n-k+1}) from its definition.
inline MultiPoly bell_partial_ord(unsigned n, unsigned k) {
  detail::check_bell_range(n, k);
  const Integer kf = factorial(k);
  MultiPoly p;
  for (const auto& v : enum_lambda(n, k)) {
    Integer den = 1;
    for (unsigned kj : v.parts) den *= factorial(kj);
    p.add_term(detail::monomial_of(v), Rational(kf, den));
  }
  return p;
}

/// Complete exponential Bell polynomial; B_0 = 1.
inline MultiPoly bell_complete_exp(unsigned n) {
  MultiPoly p = n == 0 ? MultiPoly(1) : MultiPoly();
  for (unsigned k = 1; k <= n; ++k) p += bell_partial_exp(n, k);
  return p;
}

inline MultiPoly bell_complete_exp_scaled(unsigned n) {
  return subst(bell_complete_exp(n), detail::factorial_scaling(n));
}

/// Complete ordinary Bell polynomial sum_k Bo(n,k)/k!; Bo_0 = 1.
inline MultiPoly bell_complete_ord(unsigned n) {
  MultiPoly p = n == 0 ? MultiPoly(1) : MultiPoly();
  for (unsigned k = 1; k <= n; ++k) p += bell_partial_ord(n, k) / Rational(factorial(k));
  return p;
}

/// B(n,k) evaluated at an explicit argument list (args[j-1] is u_j).
inline MultiPoly bell_partial_exp_at(unsigned n, unsigned k, std::span<const MultiPoly> args) {
  detail::check_bell_range(n, k);
  if (args.size() < n - k + 1) throw std::invalid_argument("B(n,k) needs n-k+1 arguments");
  return subst(bell_partial_exp(n, k), detail::argument_bindings(args.first(n - k + 1)));
}

inline MultiPoly bell_partial_ord_at(unsigned n, unsigned k, std::span<const MultiPoly> args) {
  detail::check_bell_range(n, k);
  if (args.size() < n - k + 1) throw std::invalid_argument("Bo(n,k) needs n-k+1 arguments");
  return subst(bell_partial_ord(n, k), detail::argument_bindings(args.first(n - k + 1)));
}

inline MultiPoly bell_complete_exp_at(unsigned n, std::span<const MultiPoly> args) {
  if (args.size() < n) throw std::invalid_argument("B_n needs n arguments");
  return subst(bell_complete_exp(n), detail::argument_bindings(args.first(n)));
}

// ---------------------------------------------------------------------------
// Duan-type recurrences on the partition-indexed form.

namespace detail {

template <class Base, class Branch2Scale>
PartitionSum duan_recurrence(unsigned n, unsigned k, Base base, Rational (*first_scale)(unsigned, unsigned),
                             Branch2Scale second_scale) {
  // table[m][j] for j <= k, m <= n
  std::vector<std::vector<std::optional<PartitionSum>>> table(n + 1, std::vector<std::optional<PartitionSum>>(k + 1));
  std::function<const PartitionSum&(unsigned, unsigned)> get = [&](unsigned m, unsigned j) -> const PartitionSum& {
    auto& slot = table[m][j];
    if (slot) return *slot;
    if (j == 1 || j == m) {
      slot = base(m, j);
      return *slot;
    }
    PartitionSum s = get(m - 1, j - 1).bump_first(m, j);
    s *= first_scale(m, j);
    if (j <= m / 2) {
      PartitionSum t = get(m - j, j).shift_variables(m, j);
      t *= second_scale(m, j);
      s += t;
    }
    slot = std::move(s);
    return *slot;
  };
  return get(n, k);
}

}  // namespace detail

/// B(n,k)[scaled] = n B(n-1,k-1)[scaled]|_{k_1 -> k_1+1}
///                  + (n)_k B(n-k,k)(1! u_2, 2! u_3, ...)   when 2 <= k <= floor(n/2).
/// Bases: B(n,1)[scaled] = n! u_n and B(n,n) = u_1^n.
inline PartitionSum bell_exp_rec_duan(unsigned n, unsigned k) {
  detail::check_bell_range(n, k);
  auto base = [](unsigned m, unsigned j) {
    PartitionSum s{m, j, {}};
    if (j == 1) {
      std::vector<unsigned> parts(m, 0);
      parts.back() = 1;
      s.coeffs[{m, 1, std::move(parts)}] = Rational(factorial(m));
    } else {
      s.coeffs[{m, m, {m}}] = 1;
    }
    return s;
  };
  return detail::duan_recurrence(
      n, k, base, +[](unsigned m, unsigned) { return Rational(m); },
      [](unsigned m, unsigned j) { return Rational(falling_factorial(static_cast<std::int64_t>(m), j)); });
}

/// Bo(n,k) = k Bo(n-1,k-1)|_{k_1 -> k_1+1} + Bo(n-k,k)(u_2, u_3, ...)   when 2 <= k <= floor(n/2).
inline PartitionSum bell_ord_rec_duan(unsigned n, unsigned k) {
  detail::check_bell_range(n, k);
  auto base = [](unsigned m, unsigned j) {
    PartitionSum s{m, j, {}};
    if (j == 1) {
      std::vector<unsigned> parts(m, 0);
      parts.back() = 1;
      s.coeffs[{m, 1, std::move(parts)}] = 1;
    } else {
      s.coeffs[{m, m, {m}}] = 1;
    }
    return s;
  };
  return detail::duan_recurrence(
      n, k, base, +[](unsigned, unsigned j) { return Rational(j); }, [](unsigned, unsigned) { return Rational(1); });
}

// ---------------------------------------------------------------------------
// Convolution and derivative recurrences on flat polynomials.

/// B(n,k)[scaled] = sum_{j=0}^{n-k} (j+1) (n-1)_j u_{j+1} B(n-j-1,k-1)[scaled], base k = 1.
inline MultiPoly bell_exp_rec_conv(unsigned n, unsigned k) {
  detail::check_bell_range(n, k);
  // row[m] holds B(m, level)[scaled]
  std::vector<MultiPoly> row(n + 1);
  for (unsigned m = 1; m <= n; ++m) row[m] = MultiPoly::u(m) * Rational(factorial(m));
  for (unsigned level = 2; level <= k; ++level) {
    std::vector<MultiPoly> next(n + 1);
    for (unsigned m = level; m <= n; ++m) {
      MultiPoly acc;
      for (unsigned j = 0; j <= m - level; ++j) {
        const Rational w = Rational(j + 1) * Rational(falling_factorial(static_cast<std::int64_t>(m) - 1, j));
        acc += MultiPoly::u(j + 1) * row[m - j - 1] * w;
      }
      next[m] = std::move(acc);
    }
    row = std::move(next);
  }
  return row[n];
}

/// Bo(n,k) = (k/n) sum_{j=0}^{n-k} (j+1) u_{j+1} Bo(n-j-1,k-1), base k = 1.
inline MultiPoly bell_ord_rec_conv(unsigned n, unsigned k) {
  detail::check_bell_range(n, k);
  std::vector<MultiPoly> row(n + 1);
  for (unsigned m = 1; m <= n; ++m) row[m] = MultiPoly::u(m);
  for (unsigned level = 2; level <= k; ++level) {
    std::vector<MultiPoly> next(n + 1);
    for (unsigned m = level; m <= n; ++m) {
      MultiPoly acc;
      for (unsigned j = 0; j <= m - level; ++j) acc += MultiPoly::u(j + 1) * row[m - j - 1] * Rational(j + 1);
      next[m] = acc * Rational(level, m);
    }
    row = std::move(next);
  }
  return row[n];
}

namespace detail {

/// sum_{j=1}^{m} (j+1) u_{j+1} d/du_j p
inline MultiPoly raising_operator(const MultiPoly& p, unsigned m) {
  MultiPoly acc;
  for (unsigned j = 1; j <= m; ++j) {
    MultiPoly d = partial(p, Var::u(j));
    if (!d.is_zero()) acc += MultiPoly::u(j + 1) * d * Rational(j + 1);
  }
  return acc;
}

}  // namespace detail

/// B(n,k)[scaled] = u_1 B(n-1,k-1)[scaled] + sum_{j=1}^{n-k} (j+1) u_{j+1} d/du_j B(n-1,k)[scaled]
/// for 2 <= k <= n-1; k = 1 and k = n are the closed-form bases.
inline MultiPoly bell_exp_rec_diff(unsigned n, unsigned k) {
  detail::check_bell_range(n, k);
  // table[m][j]
  std::vector<std::vector<MultiPoly>> t(n + 1, std::vector<MultiPoly>(k + 1));
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = 1; j <= std::min(m, k); ++j) {
      if (j == 1) {
        t[m][j] = MultiPoly::u(m) * Rational(factorial(m));
      } else if (j == m) {
        t[m][j] = pow(MultiPoly::u(1), m);
      } else {
        t[m][j] = MultiPoly::u(1) * t[m - 1][j - 1] + detail::raising_operator(t[m - 1][j], m - j);
      }
    }
  }
  return t[n][k];
}

/// Bo(n,k) = (k/n) u_1 Bo(n-1,k-1) + (1/n) sum_{j=1}^{n-k} (j+1) u_{j+1} d/du_j Bo(n-1,k).
inline MultiPoly bell_ord_rec_diff(unsigned n, unsigned k) {
  detail::check_bell_range(n, k);
  std::vector<std::vector<MultiPoly>> t(n + 1, std::vector<MultiPoly>(k + 1));
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = 1; j <= std::min(m, k); ++j) {
      if (j == 1) {
        t[m][j] = MultiPoly::u(m);
      } else if (j == m) {
        t[m][j] = pow(MultiPoly::u(1), m);
      } else {
        t[m][j] = MultiPoly::u(1) * t[m - 1][j - 1] * Rational(j, m) +
                  detail::raising_operator(t[m - 1][j], m - j) / Rational(m);
      }
    }
  }
  return t[n][k];
}

/// B_n[scaled] = sum_{k=0}^{n-1} (k+1) (n-1)_k u_{k+1} B_{n-k-1}[scaled], with B_0 = 1.
inline MultiPoly bell_complete_rec1(unsigned n) {
  if (n < 1) throw std::out_of_range("complete Bell recursion requires n >= 1");
  std::vector<MultiPoly> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned k = 0; k < m; ++k) {
      const Rational w = Rational(k + 1) * Rational(falling_factorial(static_cast<std::int64_t>(m) - 1, k));
      b[m] += MultiPoly::u(k + 1) * b[m - k - 1] * w;
    }
  }
  return b[n];
}

/// B_n[scaled] = u_1 B_{n-1}[scaled] + sum_{k=1}^{n-1} (k+1) u_{k+1} d/du_k B_{n-1}[scaled].
inline MultiPoly bell_complete_rec2(unsigned n) {
  if (n < 1) throw std::out_of_range("complete Bell recursion requires n >= 1");
  MultiPoly b = 1;
  for (unsigned m = 1; m <= n; ++m) b = MultiPoly::u(1) * b + detail::raising_operator(b, m - 1);
  return b;
}

/// Bo_n = (1/n) sum_{k=0}^{n-1} (k+1) u_{k+1} Bo_{n-k-1}, with Bo_0 = 1.
inline MultiPoly bell_complete_ord_rec1(unsigned n) {
  if (n < 1) throw std::out_of_range("complete Bell recursion requires n >= 1");
  std::vector<MultiPoly> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned k = 0; k < m; ++k) b[m] += MultiPoly::u(k + 1) * b[m - k - 1] * Rational(k + 1);
    b[m] /= Rational(m);
  }
  return b[n];
}

/// Bo_n = (u_1/n) Bo_{n-1} + (1/n) sum_{k=1}^{n-1} (k+1) u_{k+1} d/du_k Bo_{n-1}.
inline MultiPoly bell_complete_ord_rec2(unsigned n) {
  if (n < 1) throw std::out_of_range("complete Bell recursion requires n >= 1");
  MultiPoly b = 1;
  for (unsigned m = 1; m <= n; ++m) b = (MultiPoly::u(1) * b + detail::raising_operator(b, m - 1)) / Rational(m);
  return b;
}

/// Unsigned Stirling numbers of the first kind, c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
inline Integer stirling_first_unsigned(unsigned n, unsigned k) {
  if (k > n) throw std::out_of_range("Stirling number requires 0 <= k <= n");
  std::vector<Integer> row{1};  // row for n = 0
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1, 0);
    for (unsigned j = 1; j <= m; ++j) {
      next[j] = row[j - 1] + (j < m ? Integer(m - 1) * row[j] : Integer(0));
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace adombell
