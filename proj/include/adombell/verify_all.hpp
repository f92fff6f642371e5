#pragma once

// One-shot run of every equivalence and identity check up to a bound.

#include "adombell/adm_solver.hpp"
#include "adombell/adomian.hpp"
#include "adombell/bell.hpp"
#include "adombell/identities.hpp"
#include "adombell/partitions.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace adombell {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool passed() const { return failures == 0; }

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

struct VerifySummary {
  unsigned max_n = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    for (const auto& s : suites) {
      if (!s.passed()) return false;
    }
    return true;
  }
};

struct VerifyOptions {
  unsigned max_n = 6;
  /// Perturbs one identity right-hand side so callers can test failure paths.
  bool inject_fault = false;
};

namespace detail {

inline SuiteResult timed_suite(const std::string& name, const std::function<void(SuiteResult&)>& body) {
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string nk(unsigned n, unsigned k) { return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")"; }

}  // namespace detail

inline VerifySummary verify_all(const VerifyOptions& opt) {
  if (opt.max_n < 1) throw std::invalid_argument("verify_all needs max_n >= 1");
  const unsigned N = opt.max_n;
  VerifySummary summary{N, {}};

  summary.suites.push_back(detail::timed_suite("partition-recurrences", [&](SuiteResult& r) {
    for (unsigned n = 1; n <= N; ++n) {
      for (unsigned k = 1; k <= n; ++k) {
        const auto lam = enum_lambda(n, k);
        const auto th = enum_theta(n, k);
        const auto count = partition_count(n, k);
        r.check(lam.size() == count && th.size() == count, "cardinality " + detail::nk(n, k));
        r.check(lambda_via_recurrence(n, k) == lam, "lambda recurrence " + detail::nk(n, k));
        r.check(theta_via_recurrence(n, k) == th, "theta recurrence " + detail::nk(n, k));
        std::vector<PartitionVector> embedded;
        for (const auto& v : lam) embedded.push_back(embed_lambda_in_theta(v));
        std::sort(embedded.begin(), embedded.end());
        r.check(embedded == th, "lambda/theta embedding " + detail::nk(n, k));
      }
    }
  }));

  summary.suites.push_back(detail::timed_suite("bell-routes", [&](SuiteResult& r) {
    for (unsigned n = 1; n <= N; ++n) {
      for (unsigned k = 1; k <= n; ++k) {
        const MultiPoly scaled = bell_partial_exp_scaled(n, k);
        const MultiPoly ord = bell_partial_ord(n, k);
        r.check(bell_exp_rec_duan(n, k).to_poly() == scaled, "exp duan " + detail::nk(n, k));
        r.check(bell_exp_rec_conv(n, k) == scaled, "exp conv " + detail::nk(n, k));
        r.check(bell_exp_rec_diff(n, k) == scaled, "exp diff " + detail::nk(n, k));
        r.check(bell_ord_rec_duan(n, k).to_poly() == ord, "ord duan " + detail::nk(n, k));
        r.check(bell_ord_rec_conv(n, k) == ord, "ord conv " + detail::nk(n, k));
        r.check(bell_ord_rec_diff(n, k) == ord, "ord diff " + detail::nk(n, k));
        r.check(scaled * Rational(factorial(k), factorial(n)) == ord, "exp/ord conversion " + detail::nk(n, k));
      }
      const MultiPoly complete = bell_complete_exp_scaled(n);
      r.check(bell_complete_rec1(n) == complete, "complete rec1 n=" + std::to_string(n));
      r.check(bell_complete_rec2(n) == complete, "complete rec2 n=" + std::to_string(n));
      const MultiPoly complete_ord = bell_complete_ord(n);
      r.check(bell_complete_ord_rec1(n) == complete_ord, "complete ord rec1 n=" + std::to_string(n));
      r.check(bell_complete_ord_rec2(n) == complete_ord, "complete ord rec2 n=" + std::to_string(n));
    }
  }));

  summary.suites.push_back(detail::timed_suite("adomian-routes", [&](SuiteResult& r) {
    for (unsigned n = 0; n <= N; ++n) {
      const AdomianPoly oracle = adomian_param_oracle(n);
      const std::string at = "n=" + std::to_string(n);
      r.check(adomian_rach(n) == oracle, "rach " + at);
      r.check(adomian_from_bell(n) == oracle, "bell " + at);
      r.check(adomian_from_ord_bell(n) == oracle, "ordbell " + at);
      r.check(adomian_duan_rec1(n) == oracle, "rec1 " + at);
      r.check(adomian_duan_rec2(n) == oracle, "rec2 " + at);
      if (n >= 1) {
        const auto ev = adomian_evaluate(oracle, Nonlinearity::exp(1), SymbolicU0{});
        r.check(ev.numerator == adomian_complete_exp(n), "exp collapse " + at);
        r.check(adomian_evaluate(oracle, Nonlinearity::linear(), SymbolicU0{}).numerator == MultiPoly::u(n),
                "linear collapse " + at);
      }
    }
  }));

  summary.suites.push_back(detail::timed_suite("identities", [&](SuiteResult& r) {
    auto record = [&](const IdentityReport& rep) {
      r.check(rep.holds, rep.name + " n=" + std::to_string(rep.n) + (rep.m ? " m=" + std::to_string(*rep.m) : ""));
    };
    for (unsigned n = 1; n <= N; ++n) {
      IdentityReport e = verify_exp_identity(n);
      if (opt.inject_fault && n == 1) e = IdentityReport::make(e.name, e.n, e.m, e.lhs, e.rhs + MultiPoly(1));
      record(e);
      for (const auto& rep : verify_exp_specializations(n)) record(rep);
      record(verify_ord_identity(n));
      for (const auto& rep : verify_ord_specializations(n)) record(rep);
      record(verify_falling_factorial_identity(n));
      for (unsigned m = n + 1; m <= N + 2; ++m) record(verify_binomial_identity(m, n));
      for (const auto& rep : verify_complete_bell_remark(n)) record(rep);
      record(verify_stirling_connection(n));
    }
  }));

  summary.suites.push_back(detail::timed_suite("adm-consistency", [&](SuiteResult& r) {
    for (OdeKind ode : {OdeKind::exp, OdeKind::power, OdeKind::linear}) {
      const auto cmp = compare_series(solve_ode(ode, N), closed_form_series(ode, N));
      const char* label = ode == OdeKind::exp ? "exp" : ode == OdeKind::power ? "power" : "linear";
      r.check(cmp.equal, std::string(label) + " ODE" +
                             (cmp.mismatch_index ? " mismatch at u" + std::to_string(*cmp.mismatch_index) : ""));
    }
  }));

  return summary;
}

}  // namespace adombell
