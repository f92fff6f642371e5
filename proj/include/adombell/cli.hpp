#pragma once

// Command dispatch for the adombell tool. `run` never calls exit(), so the
// same entry point is exercised by the CLI binary and by the test suite.
//
// Exit codes: 0 success, 1 a verified identity or comparison failed,
// 2 usage error (unknown flag, bad value, argument out of range).

#include "adombell/adm_solver.hpp"
#include "adombell/adomian.hpp"
#include "adombell/bell.hpp"
#include "adombell/identities.hpp"
#include "adombell/json.hpp"
#include "adombell/partitions.hpp"
#include "adombell/verify_all.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace adombell::cli {

enum ExitCode : int { kOk = 0, kIdentityFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses linear | exp:c | power:p. c may be a rational, "beta" or "-beta";
/// p may be a rational or "a+b/alpha" / "a-b/alpha".
inline Nonlinearity parse_nonlinearity(const std::string& s) {
  if (s == "linear") return Nonlinearity::linear();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("unknown nonlinearity '" + s + "'");
  const std::string kind = s.substr(0, colon);
  const std::string arg = s.substr(colon + 1);
  try {
    if (kind == "exp") {
      if (arg == "beta") return Nonlinearity::exp(MultiPoly::beta());
      if (arg == "-beta") return Nonlinearity::exp(-MultiPoly::beta());
      return Nonlinearity::exp(MultiPoly(parse_rational(arg)));
    }
    if (kind == "power") {
      const std::string suffix = "/alpha";
      if (arg.size() > suffix.size() && arg.ends_with(suffix)) {
        const std::string body = arg.substr(0, arg.size() - suffix.size());
        const auto split = body.find_last_of("+-");
        if (split == std::string::npos || split == 0) throw UsageError("malformed exponent '" + arg + "'");
        Rational b = parse_rational(body.substr(split + 1));
        if (body[split] == '-') b = -b;
        return Nonlinearity::power(parse_rational(body.substr(0, split)), b);
      }
      return Nonlinearity::power(parse_rational(arg));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown nonlinearity '" + s + "'");
}

inline std::pair<unsigned, unsigned> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("expected N,K but got '" + s + "'");
  try {
    std::size_t p1 = 0, p2 = 0;
    const unsigned long n = std::stoul(s.substr(0, comma), &p1);
    const unsigned long k = std::stoul(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1) throw std::invalid_argument("trailing characters");
    return {static_cast<unsigned>(n), static_cast<unsigned>(k)};
  } catch (const std::exception&) {
    throw UsageError("expected N,K but got '" + s + "'");
  }
}

namespace detail {

inline nlohmann::json report_json(const IdentityReport& r) {
  nlohmann::json j = {{"name", r.name}, {"n", r.n}, {"holds", r.holds}};
  if (r.m) j["m"] = *r.m;
  if (!r.holds) {
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
  }
  return j;
}

inline std::string report_text(const IdentityReport& r) {
  std::string s = r.name + " n=" + std::to_string(r.n);
  if (r.m) s += " m=" + std::to_string(*r.m);
  s += r.holds ? ": holds" : ": FAILS";
  if (!r.holds) s += "\n  lhs = " + r.lhs.to_string() + "\n  rhs = " + r.rhs.to_string();
  return s;
}

inline nlohmann::json parts_json(const AdomianPoly& a) {
  nlohmann::json parts = nlohmann::json::object();
  for (const auto& [j, p] : a.parts) parts[std::to_string(j)] = to_json(p);
  return parts;
}

inline AdomianPoly adomian_by_method(const std::string& method, unsigned n) {
  if (method == "rach") return adomian_rach(n);
  if (method == "bell") return adomian_from_bell(n);
  if (method == "ordbell") return adomian_from_ord_bell(n);
  if (method == "rec1") return adomian_duan_rec1(n);
  if (method == "rec2") return adomian_duan_rec2(n);
  return adomian_param_oracle(n);
}

inline MultiPoly bell_by_method(const std::string& kind, const std::string& method, std::optional<std::pair<unsigned, unsigned>> partial,
                                std::optional<unsigned> complete, bool scaled) {
  const bool exp = kind == "exp";
  if (!exp && scaled) throw UsageError("--scaled only applies to --kind exp");
  if (partial) {
    const auto [n, k] = *partial;
    if (!exp) {
      if (method == "direct") return bell_partial_ord(n, k);
      if (method == "duan") return bell_ord_rec_duan(n, k).to_poly();
      if (method == "conv") return bell_ord_rec_conv(n, k);
      return bell_ord_rec_diff(n, k);
    }
    if (method == "direct") return scaled ? bell_partial_exp_scaled(n, k) : bell_partial_exp(n, k);
    MultiPoly p = method == "duan"   ? bell_exp_rec_duan(n, k).to_poly()
                  : method == "conv" ? bell_exp_rec_conv(n, k)
                                     : bell_exp_rec_diff(n, k);
    if (!scaled) {
      if (n < k) return p;
      p = subst(p, adombell::detail::factorial_unscaling(n - k + 1));
    }
    return p;
  }
  const unsigned n = *complete;
  if (method == "duan") throw UsageError("method duan applies only to partial Bell polynomials");
  if (!exp) {
    if (method == "direct") return bell_complete_ord(n);
    return method == "conv" ? bell_complete_ord_rec1(n) : bell_complete_ord_rec2(n);
  }
  if (method == "direct") return scaled ? bell_complete_exp_scaled(n) : bell_complete_exp(n);
  if (n < 1) throw UsageError("recursive complete Bell routes need N >= 1");
  MultiPoly p = method == "conv" ? bell_complete_rec1(n) : bell_complete_rec2(n);
  return scaled ? p : subst(p, adombell::detail::factorial_unscaling(n));
}

inline void add_format(CLI::App* sub, std::string& format, const std::string& def,
                       const std::vector<std::string>& allowed) {
  format = def;
  sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed))->capture_default_str();
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bell and Adomian polynomial toolkit", "adombell"};
  app.require_subcommand(1);

  // partitions
  std::string part_set = "lambda", part_format;
  unsigned part_n = 0, part_k = 0;
  bool part_recurrence = false;
  auto* partitions = app.add_subcommand("partitions", "enumerate partition vectors of n into exactly k parts");
  partitions->add_option("--set", part_set, "lambda or theta")->check(CLI::IsMember({"lambda", "theta"}));
  partitions->add_option("--n", part_n, "n")->required();
  partitions->add_option("--k", part_k, "k")->required();
  partitions->add_flag("--recurrence", part_recurrence, "build the set with the two-branch recurrence");
  detail::add_format(partitions, part_format, "text", {"json", "text", "table"});

  // bell
  std::string bell_kind = "exp", bell_method = "direct", bell_partial, bell_format;
  unsigned bell_complete = 0;
  bool bell_scaled = false;
  auto* bell = app.add_subcommand("bell", "partial or complete Bell polynomials");
  bell->add_option("--kind", bell_kind, "exp or ord")->check(CLI::IsMember({"exp", "ord"}));
  auto* partial_opt = bell->add_option("--partial", bell_partial, "N,K");
  auto* complete_opt = bell->add_option("--complete", bell_complete, "N");
  partial_opt->excludes(complete_opt);
  bell->add_flag("--scaled", bell_scaled, "evaluate at (1! u1, 2! u2, ...)");
  bell->add_option("--method", bell_method, "direct, duan, conv or diff")
      ->check(CLI::IsMember({"direct", "duan", "conv", "diff"}));
  detail::add_format(bell, bell_format, "text", {"json", "text"});

  // adomian
  unsigned ado_n = 0;
  std::string ado_method = "rach", ado_nonlin, ado_u0, ado_format;
  auto* adomian = app.add_subcommand("adomian", "Adomian polynomial A_n");
  adomian->add_option("--n", ado_n, "order n")->required();
  adomian->add_option("--method", ado_method, "rach, bell, ordbell, rec1, rec2 or oracle")
      ->check(CLI::IsMember({"rach", "bell", "ordbell", "rec1", "rec2", "oracle"}));
  adomian->add_option("--nonlinearity", ado_nonlin, "linear, exp:c or power:p");
  adomian->add_option("--u0", ado_u0, "concrete rational u0 (symbolic when omitted)");
  detail::add_format(adomian, ado_format, "text", {"json", "text"});

  // verify
  std::string ver_identity, ver_format;
  unsigned ver_n = 0, ver_m = 0, ver_max = 0;
  bool ver_fault = false;
  auto* verify = app.add_subcommand("verify", "check one identity family");
  verify->add_option("--identity", ver_identity, "exp, ord, falling, binomial, stirling or complete-bell")
      ->required()
      ->check(CLI::IsMember({"exp", "ord", "falling", "binomial", "stirling", "complete-bell"}));
  auto* ver_n_opt = verify->add_option("--n", ver_n, "single n");
  auto* ver_m_opt = verify->add_option("--m", ver_m, "m for the binomial identity");
  auto* ver_max_opt = verify->add_option("--max", ver_max, "check every n from 1 to this bound");
  verify->add_flag("--inject-fault", ver_fault, "perturb the first right-hand side (exit-code testing)");
  detail::add_format(verify, ver_format, "json", {"json", "text"});

  // adm
  std::string adm_ode, adm_format;
  unsigned adm_order = 0;
  auto* adm = app.add_subcommand("adm", "ADM series solution compared against the closed form");
  adm->add_option("--ode", adm_ode, "exp, power or linear")->required()->check(CLI::IsMember({"exp", "power", "linear"}));
  adm->add_option("--order", adm_order, "number of components after u0")->required();
  detail::add_format(adm, adm_format, "text", {"json", "text"});

  // verify-all
  unsigned all_max = 6;
  bool all_fault = false;
  std::string all_format;
  auto* all = app.add_subcommand("verify-all", "run every equivalence and identity check");
  all->add_option("--max", all_max, "bound on n")->capture_default_str();
  all->add_flag("--inject-fault", all_fault, "perturb one identity (exit-code testing)");
  detail::add_format(all, all_format, "text", {"json", "text"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (partitions->parsed()) {
      const PartitionSet set = part_set == "lambda" ? PartitionSet::lambda : PartitionSet::theta;
      std::vector<PartitionVector> vs;
      if (part_recurrence) {
        vs = set == PartitionSet::lambda ? lambda_via_recurrence(part_n, part_k) : theta_via_recurrence(part_n, part_k);
      } else {
        vs = enum_partitions(set, part_n, part_k);
      }
      if (part_format == "json") {
        nlohmann::ordered_json j = {{"n", part_n}, {"k", part_k}, {"vectors", nlohmann::ordered_json::array()}};
        for (const auto& v : vs) j["vectors"].push_back(v.parts);
        out << j.dump() << "\n";
      } else {
        for (const auto& v : vs) out << v.to_string() << "\n";
      }
      return kOk;
    }

    if (bell->parsed()) {
      std::optional<std::pair<unsigned, unsigned>> pk;
      std::optional<unsigned> cn;
      if (partial_opt->count()) pk = parse_pair(bell_partial);
      if (complete_opt->count()) cn = bell_complete;
      if (!pk && !cn) throw UsageError("one of --partial N,K or --complete N is required");
      const MultiPoly p = detail::bell_by_method(bell_kind, bell_method, pk, cn, bell_scaled);
      if (bell_format == "json") {
        nlohmann::json j = {{"kind", bell_kind}, {"method", bell_method}, {"scaled", bell_scaled}, {"poly", to_json(p)}};
        if (pk) {
          j["n"] = pk->first;
          j["k"] = pk->second;
        } else {
          j["n"] = *cn;
        }
        out << j.dump() << "\n";
      } else {
        out << p.to_string() << "\n";
      }
      return kOk;
    }

    if (adomian->parsed()) {
      const AdomianPoly a = detail::adomian_by_method(ado_method, ado_n);
      nlohmann::json j = {{"n", ado_n}, {"method", ado_method}, {"parts", detail::parts_json(a)}};
      if (ado_nonlin.empty()) {
        if (!ado_u0.empty()) throw UsageError("--u0 needs --nonlinearity");
        if (ado_format == "json") {
          out << j.dump() << "\n";
        } else {
          out << a.to_string() << "\n";
        }
        return kOk;
      }
      const Nonlinearity spec = parse_nonlinearity(ado_nonlin);
      U0 u0 = SymbolicU0{};
      if (!ado_u0.empty()) {
        try {
          u0 = parse_rational(ado_u0);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      const EvaluatedAdomian ev = adomian_evaluate(a, spec, u0);
      if (ado_format == "json") {
        j["nonlinearity"] = spec.describe();
        j["value"] = to_json(ev.numerator);
        j["alpha_denominator"] = ev.alpha_denominator;
        j["factor"] = ev.factor ? nlohmann::json(*ev.factor) : nlohmann::json(nullptr);
        out << j.dump() << "\n";
      } else {
        out << ev.to_string() << "\n";
      }
      return kOk;
    }

    if (verify->parsed()) {
      std::vector<unsigned> ns;
      if (ver_max_opt->count()) {
        if (ver_n_opt->count()) throw UsageError("--n and --max are mutually exclusive");
        if (ver_max < 1) throw UsageError("--max must be at least 1");
        for (unsigned n = 1; n <= ver_max; ++n) ns.push_back(n);
      } else if (ver_n_opt->count()) {
        if (ver_n < 1) throw UsageError("--n must be at least 1");
        ns.push_back(ver_n);
      } else {
        throw UsageError("one of --n or --max is required");
      }
      if (ver_m_opt->count() && ver_identity != "binomial") throw UsageError("--m only applies to --identity binomial");

      std::vector<IdentityReport> reports;
      for (unsigned n : ns) {
        if (ver_identity == "exp") {
          reports.push_back(verify_exp_identity(n));
          for (auto& r : verify_exp_specializations(n)) reports.push_back(std::move(r));
        } else if (ver_identity == "ord") {
          reports.push_back(verify_ord_identity(n));
          for (auto& r : verify_ord_specializations(n)) reports.push_back(std::move(r));
        } else if (ver_identity == "falling") {
          reports.push_back(verify_falling_factorial_identity(n));
        } else if (ver_identity == "binomial") {
          if (ver_m_opt->count()) {
            if (ver_m <= n) {
              if (ver_max_opt->count()) continue;
              throw UsageError("binomial identity requires m > n");
            }
            reports.push_back(verify_binomial_identity(ver_m, n));
          } else {
            const unsigned top = ns.back() + 2;
            for (unsigned m = n + 1; m <= top; ++m) reports.push_back(verify_binomial_identity(m, n));
          }
        } else if (ver_identity == "stirling") {
          reports.push_back(verify_stirling_connection(n));
        } else {
          for (auto& r : verify_complete_bell_remark(n)) reports.push_back(std::move(r));
        }
      }
      if (reports.empty()) throw UsageError("no (n, m) pair satisfies m > n");
      if (ver_fault) {
        auto& r = reports.front();
        r = IdentityReport::make(r.name, r.n, r.m, r.lhs, r.rhs + MultiPoly(1));
      }
      const bool all_hold = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
      if (ver_format == "json") {
        nlohmann::json results = nlohmann::json::array();
        for (const auto& r : reports) results.push_back(detail::report_json(r));
        out << nlohmann::json{{"identity", ver_identity}, {"all_hold", all_hold}, {"results", results}}.dump() << "\n";
      } else {
        for (const auto& r : reports) out << detail::report_text(r) << "\n";
      }
      return all_hold ? kOk : kIdentityFailed;
    }

    if (adm->parsed()) {
      if (adm_order < 1) throw UsageError("--order must be at least 1");
      const OdeKind ode = adm_ode == "exp" ? OdeKind::exp : adm_ode == "power" ? OdeKind::power : OdeKind::linear;
      const SeriesSolution s = solve_ode(ode, adm_order);
      const SeriesSolution closed = closed_form_series(ode, adm_order);
      const SeriesComparison cmp = compare_series(s, closed);
      if (adm_format == "json") {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : s.components) comps.push_back(to_json(c));
        nlohmann::json j = {{"ode", adm_ode},
                            {"order", adm_order},
                            {"components", comps},
                            {"matches_closed_form", cmp.equal},
                            {"mismatch_index", cmp.mismatch_index ? nlohmann::json(*cmp.mismatch_index) : nlohmann::json(nullptr)}};
        out << j.dump() << "\n";
      } else {
        for (unsigned i = 0; i < s.components.size(); ++i) out << "u" << i << " = " << s.components[i].to_string() << "\n";
        if (cmp.equal) {
          out << "closed form: match\n";
        } else {
          out << "closed form: MISMATCH at u" << *cmp.mismatch_index << "\n  adm    = " << cmp.lhs.to_string()
              << "\n  closed = " << cmp.rhs.to_string() << "\n";
        }
      }
      return cmp.equal ? kOk : kIdentityFailed;
    }

    if (all->parsed()) {
      if (all_max < 1) throw UsageError("--max must be at least 1");
      const VerifySummary summary = verify_all({all_max, all_fault});
      if (all_format == "json") {
        nlohmann::json suites = nlohmann::json::array();
        for (const auto& s : summary.suites) {
          nlohmann::json js = {{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"passed", s.passed()}, {"seconds", s.seconds}};
          if (!s.passed()) js["first_failure"] = s.first_failure;
          suites.push_back(js);
        }
        out << nlohmann::json{{"max_n", all_max}, {"all_passed", summary.all_passed()}, {"suites", suites}}.dump() << "\n";
      } else {
        for (const auto& s : summary.suites) {
          out << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks, " << std::fixed
              << std::setprecision(3) << s.seconds << " s)";
          if (!s.passed()) out << ": " << s.failures << " failed, first: " << s.first_failure;
          out << "\n";
        }
      }
      return summary.all_passed() ? kOk : kIdentityFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace adombell::cli
