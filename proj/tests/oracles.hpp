#pragma once

// Independent reference computations used only by the tests. None of these
// go through partition vectors or the library's recurrences.

#include "adombell/multipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using adombell::Integer;
using adombell::MultiPoly;
using adombell::Rational;

using Series = std::vector<MultiPoly>;  // coefficients of t^0 .. t^N

inline Series mul_truncated(const Series& a, const Series& b, unsigned N) {
  Series c(N + 1);
  for (unsigned i = 0; i <= N; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= N; ++j) {
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

inline Series power_truncated(const Series& a, unsigned k, unsigned N) {
  Series r(N + 1);
  r[0] = 1;
  for (unsigned i = 0; i < k; ++i) r = mul_truncated(r, a, N);
  return r;
}

inline Integer fact(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// (n!/k!) [t^n] (sum_j u_j t^j / j!)^k
inline MultiPoly bell_exp_gf(unsigned n, unsigned k) {
  Series g(n + 1);
  for (unsigned j = 1; j <= n; ++j) g[j] = MultiPoly::u(j) / Rational(fact(j));
  return power_truncated(g, k, n)[n] * Rational(fact(n), fact(k));
}

/// [t^n] (sum_j u_j t^j)^k
inline MultiPoly bell_ord_gf(unsigned n, unsigned k) {
  Series g(n + 1);
  for (unsigned j = 1; j <= n; ++j) g[j] = MultiPoly::u(j);
  return power_truncated(g, k, n)[n];
}

/// Coefficients of exp(sum_{k>=1} u_k t^k) through t^N via n f_n = sum_j j g_j f_{n-j}.
inline Series exp_series(unsigned N) {
  Series f(N + 1);
  f[0] = 1;
  for (unsigned n = 1; n <= N; ++n) {
    MultiPoly acc;
    for (unsigned j = 1; j <= n; ++j) acc += MultiPoly::u(j) * f[n - j] * Rational(j);
    f[n] = acc / Rational(n);
  }
  return f;
}

/// [t^n] (u_0 + u_1 t + ... )^m with u_0 symbolic.
inline MultiPoly power_adomian(unsigned n, unsigned m) {
  Series g(n + 1);
  for (unsigned j = 0; j <= n; ++j) g[j] = MultiPoly::u(j);
  return power_truncated(g, m, n)[n];
}

/// Unsigned first-kind Stirling numbers row n by counting permutation cycles.
inline std::vector<std::uint64_t> stirling_by_cycles(unsigned n) {
  std::vector<std::uint64_t> row(n + 1, 0);
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  do {
    std::vector<bool> seen(n, false);
    unsigned cycles = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    ++row[cycles];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return row;
}

/// Coefficients of the rising factorial x(x+1)...(x+n-1); entry k is c(n,k).
inline std::vector<Integer> stirling_by_rising_factorial(unsigned n) {
  std::vector<Integer> c{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Integer> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] += c[k] * i;
    }
    c = std::move(next);
  }
  return c;
}

/// Partitions of n into exactly k parts, by listing nonincreasing part sequences.
inline std::uint64_t count_partitions_brute(unsigned n, unsigned k, unsigned max_part) {
  if (k == 0) return n == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (unsigned p = std::min(n, max_part); p >= 1; --p) {
    if (p * k < n) break;
    total += count_partitions_brute(n - p, k - 1, p);
  }
  return total;
}

inline std::uint64_t count_partitions_brute(unsigned n, unsigned k) { return count_partitions_brute(n, k, n); }

/// Random polynomial over a handful of variables with small rational coefficients.
inline MultiPoly random_poly(std::mt19937& rng, unsigned max_terms = 5, unsigned max_exp = 3) {
  using adombell::Var;
  const Var vars[] = {Var::u(0), Var::u(1), Var::u(2), Var::x(), Var::alpha(), Var::beta()};
  std::uniform_int_distribution<int> nterms(0, static_cast<int>(max_terms));
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> expo(0, static_cast<int>(max_exp));
  MultiPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    MultiPoly mono = Rational(coeff(rng), den(rng));
    for (Var v : vars) mono *= adombell::pow(MultiPoly::variable(v), static_cast<unsigned>(expo(rng)) / 2);
    p += mono;
  }
  return p;
}

}  // namespace oracle
