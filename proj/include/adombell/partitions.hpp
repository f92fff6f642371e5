#pragma once

// Partition vectors of n into exactly k parts, stored as multiplicity
// vectors (k_1, k_2, ...) with sum k_j = k and sum j*k_j = n.
//
//   lambda set: length n-k+1 (the Bell-polynomial index set)
//   theta set:  length n     (the Rach index set; last k-1 entries are zero)
//
// Both sets are produced by direct enumeration and by the two-branch
// recurrences that build (n, k) from (n-1, k-1) and (n-k, k).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace adombell {

struct PartitionVector {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<unsigned> parts;

  friend auto operator<=>(const PartitionVector&, const PartitionVector&) = default;

  unsigned count() const { return std::accumulate(parts.begin(), parts.end(), 0U); }
  unsigned weight() const {
    unsigned w = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) w += static_cast<unsigned>(j + 1) * parts[j];
    return w;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(parts[j]);
    }
    return s + ")";
  }
};

enum class PartitionSet { lambda, theta };

inline void check_partition_range(unsigned n, unsigned k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::out_of_range("partition range requires 1 <= k <= n, got n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));
  }
}

inline bool is_lambda_vector(const PartitionVector& v) {
  return v.n >= 1 && v.k >= 1 && v.k <= v.n && v.parts.size() == v.n - v.k + 1 && v.count() == v.k &&
         v.weight() == v.n;
}

inline bool is_theta_vector(const PartitionVector& v) {
  return v.n >= 1 && v.k >= 1 && v.k <= v.n && v.parts.size() == v.n && v.count() == v.k && v.weight() == v.n;
}

namespace detail {

// Recursive descent over k_1, k_2, ...; each remaining part at position > j
// weighs between j+1 and length.
inline void enumerate_multiplicities(unsigned n, unsigned k, std::size_t length, std::size_t j,
                                     unsigned count_left, unsigned weight_left, std::vector<unsigned>& cur,
                                     std::vector<PartitionVector>& out) {
  if (j == length) {
    if (count_left == 0 && weight_left == 0) out.push_back({n, k, cur});
    return;
  }
  const auto pos = static_cast<unsigned>(j + 1);
  const unsigned max_here = std::min(count_left, weight_left / pos);
  for (unsigned kj = 0; kj <= max_here; ++kj) {
    const unsigned c = count_left - kj;
    const unsigned w = weight_left - kj * pos;
    if (c * (pos + 1) > w && c > 0) continue;
    if (static_cast<std::uint64_t>(c) * (length) < w) continue;
    cur[j] = kj;
    enumerate_multiplicities(n, k, length, j + 1, c, w, cur, out);
  }
  cur[j] = 0;
}

inline std::vector<PartitionVector> enumerate(unsigned n, unsigned k, std::size_t length) {
  std::vector<PartitionVector> out;
  std::vector<unsigned> cur(length, 0);
  enumerate_multiplicities(n, k, length, 0, k, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All lambda vectors for (n, k), sorted lexicographically.
inline std::vector<PartitionVector> enum_lambda(unsigned n, unsigned k) {
  check_partition_range(n, k);
  return detail::enumerate(n, k, n - k + 1);
}

/// All theta vectors for (n, k), sorted lexicographically.
inline std::vector<PartitionVector> enum_theta(unsigned n, unsigned k) {
  check_partition_range(n, k);
  return detail::enumerate(n, k, n);
}

inline std::vector<PartitionVector> enum_partitions(PartitionSet set, unsigned n, unsigned k) {
  return set == PartitionSet::lambda ? enum_lambda(n, k) : enum_theta(n, k);
}

/// Pads a lambda vector with k-1 trailing zeros.
inline PartitionVector embed_lambda_in_theta(const PartitionVector& v) {
  if (!is_lambda_vector(v)) throw std::invalid_argument("not a lambda vector: " + v.to_string());
  PartitionVector t = v;
  t.parts.resize(v.n, 0);
  return t;
}

/// The two branches of a partition recurrence. `second` is empty when
/// k > floor(n/2) or at a base case.
struct RecurrenceBranches {
  std::vector<PartitionVector> first;
  std::vector<PartitionVector> second;

  std::vector<PartitionVector> merged() const {
    std::vector<PartitionVector> all = first;
    all.insert(all.end(), second.begin(), second.end());
    std::sort(all.begin(), all.end());
    return all;
  }
};

namespace detail {

inline std::vector<PartitionVector> lambda_rec(unsigned n, unsigned k);
inline std::vector<PartitionVector> theta_rec(unsigned n, unsigned k);

inline RecurrenceBranches lambda_branches(unsigned n, unsigned k) {
  RecurrenceBranches b;
  if (k == 1) {
    std::vector<unsigned> parts(n, 0);
    parts.back() = 1;
    b.first.push_back({n, 1, std::move(parts)});
    return b;
  }
  if (k == n) {
    b.first.push_back({n, n, {n}});
    return b;
  }
  // first entry incremented, same length n-k+1
  for (auto v : lambda_rec(n - 1, k - 1)) {
    v.n = n;
    v.k = k;
    v.parts[0] += 1;
    b.first.push_back(std::move(v));
  }
  if (k <= n / 2) {
    // prefix 0, suffix k-1 zeros: length 1 + (n-2k+1) + (k-1) = n-k+1
    for (const auto& v : lambda_rec(n - k, k)) {
      PartitionVector w{n, k, {0}};
      w.parts.insert(w.parts.end(), v.parts.begin(), v.parts.end());
      w.parts.resize(n - k + 1, 0);
      b.second.push_back(std::move(w));
    }
  }
  return b;
}

inline RecurrenceBranches theta_branches(unsigned n, unsigned k) {
  RecurrenceBranches b;
  if (k == 1) {
    std::vector<unsigned> parts(n, 0);
    parts.back() = 1;
    b.first.push_back({n, 1, std::move(parts)});
    return b;
  }
  if (k == n) {
    std::vector<unsigned> parts(n, 0);
    parts[0] = n;
    b.first.push_back({n, n, std::move(parts)});
    return b;
  }
  for (auto v : theta_rec(n - 1, k - 1)) {
    v.n = n;
    v.k = k;
    v.parts[0] += 1;
    v.parts.push_back(0);
    b.first.push_back(std::move(v));
  }
  if (k <= n / 2) {
    for (const auto& v : theta_rec(n - k, k)) {
      PartitionVector w{n, k, {0}};
      w.parts.insert(w.parts.end(), v.parts.begin(), v.parts.end());
      w.parts.resize(n, 0);
      b.second.push_back(std::move(w));
    }
  }
  return b;
}

inline std::vector<PartitionVector> lambda_rec(unsigned n, unsigned k) { return lambda_branches(n, k).merged(); }
inline std::vector<PartitionVector> theta_rec(unsigned n, unsigned k) { return theta_branches(n, k).merged(); }

}  // namespace detail

inline RecurrenceBranches lambda_recurrence_branches(unsigned n, unsigned k) {
  check_partition_range(n, k);
  return detail::lambda_branches(n, k);
}

inline RecurrenceBranches theta_recurrence_branches(unsigned n, unsigned k) {
  check_partition_range(n, k);
  return detail::theta_branches(n, k);
}

/// Lambda set built only from the recurrence (and its k = 1, k = n bases).
inline std::vector<PartitionVector> lambda_via_recurrence(unsigned n, unsigned k) {
  check_partition_range(n, k);
  return detail::lambda_rec(n, k);
}

inline std::vector<PartitionVector> theta_via_recurrence(unsigned n, unsigned k) {
  check_partition_range(n, k);
  return detail::theta_rec(n, k);
}

/// Number of partitions of n into exactly k parts: p(n,k) = p(n-1,k-1) + p(n-k,k).
inline std::uint64_t partition_count(unsigned n, unsigned k) {
  check_partition_range(n, k);
  // table[m][j] for 0 <= j <= k, 0 <= m <= n
  std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  table[0][0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = 1; j <= std::min(m, k); ++j) table[m][j] = table[m - 1][j - 1] + table[m - j][j];
  }
  return table[n][k];
}

}  // namespace adombell
