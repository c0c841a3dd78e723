/*
   Copyright 2026 The negafactor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "negafactor/errors.hpp"
#include "negafactor/factorizer.hpp"
#include "negafactor/intmath.hpp"
#include "negafactor/json_io.hpp"
#include "negafactor/negacyclic.hpp"

namespace {

using namespace negafactor;

constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;

u64 checked_mul(u64 a, u64 b) {
  if (a != 0 && b > std::numeric_limits<u64>::max() / a) {
    fail(ErrorCode::CapabilityExceeded, "value exceeds 64 bits");
  }
  return a * b;
}

u64 checked_pow(u64 base, u32 exp) {
  u64 out = 1;
  for (u32 k = 0; k < exp; ++k) out = checked_mul(out, base);
  return out;
}

u64 parse_u64(const std::string& text) {
  if (text.empty()) fail(ErrorCode::InvalidArgument, "empty number");
  u64 value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      fail(ErrorCode::InvalidArgument, "not a number: " + text);
    }
    value = checked_mul(value, 10);
    u64 digit = static_cast<u64>(ch - '0');
    if (value > std::numeric_limits<u64>::max() - digit) {
      fail(ErrorCode::CapabilityExceeded, "value exceeds 64 bits");
    }
    value += digit;
  }
  return value;
}

/// "p", "p^m", or a prime power like 9 auto-detected as 3^2.
std::pair<u64, u32> parse_q(const std::string& text) {
  auto caret = text.find('^');
  if (caret == std::string::npos) {
    return prime_power_split(parse_u64(text));
  }
  u64 p = parse_u64(text.substr(0, caret));
  u64 m = parse_u64(text.substr(caret + 1));
  if (m == 0 || m > kMaxExtensionDegree) {
    fail(ErrorCode::InvalidArgument, "unsupported extension degree in " + text);
  }
  return {p, static_cast<u32>(m)};
}

u64 resolve_seed(bool flag_given, u64 flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("NEGAFACTOR_SEED")) {
    return parse_u64(env);
  }
  return kDefaultOracleSeed;
}

std::string field_label(u64 q) { return "GF(" + std::to_string(q) + ")"; }

std::string csv_quote(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string factor_line(const Poly& f, u64 mult) {
  if (mult == 1) return f.to_string();
  return "(" + f.to_string() + ")^" + std::to_string(mult);
}

// ----- factor -----------------------------------------------------------

int run_factor(u64 p, u32 m, u64 n, bool no_verify, const std::string& format) {
  FieldSpec spec = make_field(p, m);
  FactorizationOptions options;
  options.verify = !no_verify;
  FactorizationReport report = factor_xn_plus_1(spec, n, options);

  if (format == "json") {
    std::cout << report_json(report).dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "poly,mult\n";
    for (const auto& [f, mult] : report.factors.factors) {
      std::cout << csv_quote(f.to_string()) << "," << mult << "\n";
    }
    return 0;
  }
  const CaseProfile& pr = report.profile;
  std::cout << "x^" << n << " + 1 over " << field_label(report.q) << ": "
            << report.distinct_count << " distinct monic irreducible factor"
            << (report.distinct_count == 1 ? "" : "s") << "\n";
  std::cout << "branch " << branch_label(pr.branch) << ", method "
            << method_label(report.method) << ", s=" << pr.s << ", i=" << pr.i
            << ", n'=" << pr.nprime << ", lambda=" << pr.lambda
            << ", beta=" << pr.beta << "\n";
  for (const auto& [f, mult] : report.factors.factors) {
    std::cout << factor_line(f, mult) << "\n";
  }
  return 0;
}

// ----- count -------------------------------------------------------------

void emit_table(std::ostream& out, int which) {
  static const std::vector<std::pair<u64, u64>> kTable1 = {
      {3, 1}, {3, 11}, {3, 13}, {5, 1},  {5, 11}, {7, 1},
      {7, 3}, {7, 9},  {9, 1},  {9, 7},  {9, 11}, {9, 13}};
  static const std::vector<std::pair<u64, u64>> kTable2 = {
      {3, 5}, {3, 7},  {5, 3},  {5, 7},  {5, 9},  {5, 13},
      {7, 5}, {7, 11}, {7, 13}, {7, 15}, {9, 5}};
  const auto& rows = (which == 1) ? kTable1 : kTable2;

  out << "q,nprime,ord,lambda,beta,i,N\n";
  for (const auto& [q, nprime] : rows) {
    CaseProfile base = case_profile(q, nprime, 0, 0);
    u32 t = stable_threshold(q, nprime);
    std::ostringstream prefix;
    prefix << q << "," << nprime << "," << base.ord_nprime << ","
           << base.lambda << "," << base.beta << ",";
    for (u32 i = 0; i < t; ++i) {
      u64 fast = count_factors_fast(case_profile(q, nprime, i, 0));
      u64 sum = count_factors_sum(q, checked_mul(u64(1) << i, nprime));
      if (fast != sum) {
        fail(ErrorCode::InternalVerificationFailure,
             "count formulas disagree below the threshold");
      }
      out << prefix.str() << i << "," << fast << "\n";
    }
    u64 stable = count_factors_fast(case_profile(q, nprime, t, 0));
    for (u32 extra = 0; extra <= 3; ++extra) {
      u64 fast = count_factors_fast(case_profile(q, nprime, t + extra, 0));
      u64 sum = count_factors_sum(q, checked_mul(u64(1) << (t + extra), nprime));
      if (fast != stable || sum != stable) {
        fail(ErrorCode::InternalVerificationFailure,
             "count fails to stay constant above the threshold");
      }
    }
    out << prefix.str() << ">=" << t << "," << stable << "\n";
  }
}

int run_count_single(u64 q, std::optional<u64> n, std::optional<u64> nprime,
                     u32 i, const std::string& format) {
  u64 count = 0;
  Json j;
  j["q"] = q;
  if (n) {
    count = count_factors_sum(q, *n);
    j["n"] = *n;
  } else {
    CaseProfile pr = case_profile(q, *nprime, i, 0);
    count = count_factors_fast(pr);
    u64 sum = count_factors_sum(q, checked_mul(checked_pow(2, i), *nprime));
    if (count != sum) {
      fail(ErrorCode::InternalVerificationFailure, "count formulas disagree");
    }
    j["nprime"] = *nprime;
    j["i"] = i;
  }
  j["count"] = count;
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

// ----- cosets ------------------------------------------------------------

int run_cosets(u64 q, u64 n, const std::string& format) {
  RepresentativeSets sets = representative_sets(q, n);
  std::vector<Coset> cosets;
  cosets.reserve(sets.all.size());
  for (u64 rep : sets.all) cosets.push_back(coset(q, n, rep));

  if (format == "json") {
    Json j;
    j["n"] = n;
    j["q"] = q;
    j["sets"] = representative_sets_json(sets);
    Json list = Json::array();
    for (const Coset& c : cosets) list.push_back(coset_json(c));
    j["cosets"] = std::move(list);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "rep,size,elements\n";
    for (const Coset& c : cosets) {
      std::cout << c.rep << "," << c.elements.size() << ",";
      for (std::size_t k = 0; k < c.elements.size(); ++k) {
        if (k) std::cout << " ";
        std::cout << c.elements[k];
      }
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << sets.all.size() << " cosets modulo " << n << " (multiplier "
            << q << ")";
  if (n % 2 == 0) {
    std::cout << ": " << sets.odd.size() << " odd, " << sets.even.size()
              << " even";
  }
  std::cout << "\n";
  for (const Coset& c : cosets) {
    std::cout << c.rep << ": {";
    for (std::size_t k = 0; k < c.elements.size(); ++k) {
      if (k) std::cout << ", ";
      std::cout << c.elements[k];
    }
    std::cout << "}\n";
  }
  return 0;
}

// ----- codes -------------------------------------------------------------

int run_codes(u64 p, u32 m, u64 n, std::optional<u64> cap,
              const std::string& format) {
  FieldSpec spec = make_field(p, m);
  CodeFamily family = enumerate_codes(spec, n, cap);

  if (format == "json") {
    Json j;
    j["family"] = family_header_json(family);
    Json list = Json::array();
    while (auto code = family.next()) list.push_back(code_json(*code));
    j["codes"] = std::move(list);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "index,generator,dimension\n";
    u64 index = 0;
    while (auto code = family.next()) {
      std::cout << index++ << "," << csv_quote(code->generator.to_string())
                << "," << code->dimension << "\n";
    }
    return 0;
  }
  u64 q = checked_pow(p, m);
  std::cout << family.total().to_string() << " negacyclic codes of length "
            << n << " over " << field_label(q) << ", k=" << family.k()
            << ", base length " << family.base_length();
  if (family.below_threshold()) std::cout << ", below threshold";
  if (family.truncated()) std::cout << ", truncated";
  std::cout << "\n";
  u64 index = 0;
  while (auto code = family.next()) {
    std::cout << "[" << index++ << "] " << code->generator.to_string()
              << " (dimension " << code->dimension << ")\n";
  }
  return 0;
}

// ----- verify ------------------------------------------------------------

int run_verify(u64 p, u32 m, u64 nmax, u64 seed, const std::string& format) {
  FieldSpec spec = make_field(p, m);
  u64 q = checked_pow(p, m);
  std::vector<u64> failures;

  for (u64 n = 1; n <= nmax; ++n) {
    FactorizationReport report = factor_xn_plus_1(spec, n);

    std::vector<FieldElement> coeffs(n + 1, zero(spec));
    coeffs.front() = one(spec);
    coeffs.back() = one(spec);
    FactorMultiset oracle =
        factor_generic(Poly::from_coeffs(spec, std::move(coeffs)), seed);

    bool ok = report.factors == oracle;
    Decomposition d = decompose(n, q);
    u64 fast = count_factors_fast(case_profile(q, d.nprime, d.i, d.s));
    ok = ok && report.distinct_count == fast &&
         report.distinct_count == count_factors_sum(q, n);
    if (!ok) failures.push_back(n);
  }

  bool pass = failures.empty();
  if (format == "json") {
    Json j;
    j["q"] = q;
    j["nmax"] = nmax;
    j["checked"] = nmax;
    j["mismatches"] = failures;
    j["seed"] = seed;
    j["status"] = pass ? "PASS" : "FAIL";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (pass ? "PASS" : "FAIL") << " q=" << q << " nmax=" << nmax
              << ": " << nmax << " lengths, " << failures.size()
              << " mismatch" << (failures.size() == 1 ? "" : "es")
              << ", seed=" << seed << "\n";
    if (!pass) {
      std::cout << "failing lengths:";
      for (u64 n : failures) std::cout << " " << n;
      std::cout << "\n";
    }
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "negafactor: factors x^n + 1 over odd-characteristic finite fields "
      "and constructs negacyclic codes"};
  app.require_subcommand(1);

  std::string q_text;
  std::string format = "text";
  u64 n = 0;
  u64 nprime = 0;
  u64 cap = 0;
  u64 nmax = 60;
  u64 seed = 0;
  u32 i_part = 0;
  u32 s_part = 0;
  int table = 0;
  bool no_verify = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  CLI::App* factor_cmd =
      app.add_subcommand("factor", "Factor x^n + 1 over F_q");
  factor_cmd->add_option("--q", q_text, "Field order, p or p^m")->required();
  CLI::Option* factor_n = factor_cmd->add_option("--n", n, "Exponent of x^n + 1");
  CLI::Option* factor_np =
      factor_cmd->add_option("--n-prime", nprime, "Odd coprime part of n");
  factor_cmd->add_option("--i", i_part, "Power of 2 in n (with --n-prime)");
  factor_cmd->add_option("--s", s_part,
                         "Power of the characteristic in n (with --n-prime)");
  factor_cmd->add_flag("--no-verify", no_verify,
                       "Skip reassembly and irreducibility checks");
  add_format(factor_cmd);

  CLI::App* count_cmd = app.add_subcommand(
      "count", "Count the distinct monic irreducible factors of x^n + 1");
  CLI::Option* count_q =
      count_cmd->add_option("--q", q_text, "Field order, p or p^m");
  CLI::Option* count_n = count_cmd->add_option("--n", n, "Exponent of x^n + 1");
  CLI::Option* count_np =
      count_cmd->add_option("--n-prime", nprime, "Odd coprime part of n");
  count_cmd->add_option("--i", i_part, "Power of 2 in n (with --n-prime)");
  CLI::Option* count_table = count_cmd->add_option(
      "--table", table, "Emit a full reference table as CSV");
  count_table->check(CLI::IsMember({1, 2}));
  add_format(count_cmd);

  CLI::App* cosets_cmd = app.add_subcommand(
      "cosets", "List multiplier orbits of residues modulo n");
  cosets_cmd->add_option("--q", q_text, "Multiplier, p or p^m")->required();
  cosets_cmd->add_option("--n", n, "Modulus")->required();
  add_format(cosets_cmd);

  CLI::App* codes_cmd = app.add_subcommand(
      "codes", "Enumerate negacyclic codes of length n over F_q");
  codes_cmd->add_option("--q", q_text, "Field order, p or p^m")->required();
  codes_cmd->add_option("--n", n, "Code length")->required();
  CLI::Option* codes_cap =
      codes_cmd->add_option("--cap", cap, "Emit at most this many codes");
  add_format(codes_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Cross-check the closed-form factorizations against the "
                "generic factorizer");
  verify_cmd->add_option("--q", q_text, "Field order, p or p^m")->required();
  verify_cmd->add_option("--nmax", nmax, "Check every n up to this bound");
  CLI::Option* verify_seed =
      verify_cmd->add_option("--seed", seed, "Seed for the generic factorizer");
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(factor_cmd)) {
      if ((factor_n->count() > 0) == (factor_np->count() > 0)) {
        std::cerr << "factor needs exactly one of --n or --n-prime\n";
        return kExitUsage;
      }
      auto [p, m] = parse_q(q_text);
      u64 length = n;
      if (factor_np->count() > 0) {
        length = checked_mul(checked_pow(p, s_part),
                             checked_mul(checked_pow(2, i_part), nprime));
      }
      return run_factor(p, m, length, no_verify, format);
    }
    if (app.got_subcommand(count_cmd)) {
      if (count_table->count() > 0) {
        emit_table(std::cout, table);
        return 0;
      }
      if (count_q->count() == 0 ||
          (count_n->count() > 0) == (count_np->count() > 0)) {
        std::cerr << "count needs --table, or --q with exactly one of --n "
                     "and --n-prime\n";
        return kExitUsage;
      }
      auto [p, m] = parse_q(q_text);
      u64 q = checked_pow(p, m);
      std::optional<u64> n_opt, np_opt;
      if (count_n->count() > 0) n_opt = n;
      if (count_np->count() > 0) np_opt = nprime;
      return run_count_single(q, n_opt, np_opt, i_part, format);
    }
    if (app.got_subcommand(cosets_cmd)) {
      auto [p, m] = parse_q(q_text);
      return run_cosets(checked_pow(p, m), n, format);
    }
    if (app.got_subcommand(codes_cmd)) {
      auto [p, m] = parse_q(q_text);
      std::optional<u64> cap_opt;
      if (codes_cap->count() > 0) cap_opt = cap;
      return run_codes(p, m, n, cap_opt, format);
    }
    if (app.got_subcommand(verify_cmd)) {
      auto [p, m] = parse_q(q_text);
      return run_verify(p, m, nmax, resolve_seed(verify_seed->count() > 0, seed),
                        format);
    }
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const Error& err) {
    std::cerr << error_json(err).dump() << "\n";
    return kExitMath;
  } catch (const std::exception& ex) {
    Json j;
    j["error"] = Json{{"code", "Internal"}, {"message", ex.what()}};
    std::cerr << j.dump() << "\n";
    return kExitMath;
  }
}
