#include "adombell/partitions.hpp"
#include "oracles.hpp"
#include "golden_lambda.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace adombell;

TEST_CASE("lambda sets match the golden 6x6 array", "[partitions][golden]") {
  const auto table = golden_lambda::load(ADOMBELL_TEST_DATA "/lambda_6x6.txt");
  REQUIRE(table.size() == 21);
  for (const auto& [nk, expected] : table) {
    INFO("n=" << nk.first << " k=" << nk.second);
    CHECK(enum_lambda(nk.first, nk.second) == expected);
  }
}

TEST_CASE("enumerated vectors satisfy the defining constraints", "[partitions][property]") {
  for (unsigned n = 1; n <= 14; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const auto lam = enum_lambda(n, k);
      const auto th = enum_theta(n, k);
      CHECK(std::set<PartitionVector>(lam.begin(), lam.end()).size() == lam.size());
      for (const auto& v : lam) {
        CHECK(v.parts.size() == n - k + 1);
        CHECK(v.count() == k);
        CHECK(v.weight() == n);
        CHECK(is_lambda_vector(v));
      }
      for (const auto& v : th) {
        CHECK(v.parts.size() == n);
        CHECK(is_theta_vector(v));
        for (std::size_t j = n - k + 1; j < n; ++j) CHECK(v.parts[j] == 0);
      }
      CHECK(lam.size() == th.size());
    }
  }
}

TEST_CASE("partition_count against brute force", "[partitions]") {
  for (unsigned n = 1; n <= 25; ++n) {
    for (unsigned k = 1; k <= n; ++k) CHECK(partition_count(n, k) == oracle::count_partitions_brute(n, k));
  }
  CHECK(partition_count(25, 5) == 192);
}

TEST_CASE("recurrences equal direct enumeration", "[partitions]") {
  for (unsigned n = 1; n <= 16; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(lambda_via_recurrence(n, k) == enum_lambda(n, k));
      CHECK(theta_via_recurrence(n, k) == enum_theta(n, k));
    }
  }
}

TEST_CASE("recurrence branches are disjoint and branch 2 is present only for k <= n/2", "[partitions]") {
  for (unsigned n = 2; n <= 14; ++n) {
    for (unsigned k = 2; k <= n; ++k) {
      for (const auto& br : {lambda_recurrence_branches(n, k), theta_recurrence_branches(n, k)}) {
        if (k > n / 2) CHECK(br.second.empty());
        for (const auto& v : br.first) CHECK(v.parts[0] >= 1);
        for (const auto& v : br.second) CHECK(v.parts[0] == 0);
        CHECK(br.first.size() + br.second.size() == partition_count(n, k));
      }
    }
  }
  const auto br = lambda_recurrence_branches(4, 2);
  REQUIRE(br.first.size() == 1);
  CHECK(br.first[0].to_string() == "(1,0,1)");
  REQUIRE(br.second.size() == 1);
  CHECK(br.second[0].to_string() == "(0,2,0)");
}

TEST_CASE("lambda embeds into theta by zero padding", "[partitions]") {
  const PartitionVector v{5, 2, {1, 0, 0, 1}};
  CHECK(embed_lambda_in_theta(v).parts == std::vector<unsigned>{1, 0, 0, 1, 0});
  CHECK_THROWS_AS(embed_lambda_in_theta(PartitionVector{5, 2, {1, 1}}), std::invalid_argument);
}

TEST_CASE("out-of-range arguments are rejected", "[partitions]") {
  CHECK_THROWS_AS(enum_lambda(0, 0), std::out_of_range);
  CHECK_THROWS_AS(enum_lambda(3, 4), std::out_of_range);
  CHECK_THROWS_AS(enum_theta(3, 0), std::out_of_range);
  CHECK_THROWS_AS(lambda_via_recurrence(2, 3), std::out_of_range);
}
