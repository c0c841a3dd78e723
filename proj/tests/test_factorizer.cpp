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

#include <doctest.h>

#include <string>
#include <vector>

#include "negafactor/cosets.hpp"
#include "negafactor/errors.hpp"
#include "negafactor/factorizer.hpp"
#include "negafactor/gf.hpp"

using namespace negafactor;

TEST_CASE("decompose splits n into characteristic, power of two, odd part") {
  Decomposition d = decompose(22, 5);
  CHECK(d.s == 0);
  CHECK(d.i == 1);
  CHECK(d.nprime == 11);

  d = decompose(12, 3);  // 12 = 3 * 4
  CHECK(d.s == 1);
  CHECK(d.i == 2);
  CHECK(d.nprime == 1);

  d = decompose(360, 3);  // 360 = 3^2 * 2^3 * 5
  CHECK(d.s == 2);
  CHECK(d.i == 3);
  CHECK(d.nprime == 5);

  d = decompose(1, 7);
  CHECK(d.s == 0);
  CHECK(d.i == 0);
  CHECK(d.nprime == 1);

  d = decompose(54, 9);  // base 9 still has characteristic 3
  CHECK(d.s == 3);
  CHECK(d.i == 1);
  CHECK(d.nprime == 1);

  CHECK_THROWS_AS(decompose(0, 3), Error);
  CHECK_THROWS_AS(decompose(4, 4), Error);
  CHECK_THROWS_AS(decompose(4, 12), Error);
}

TEST_CASE("branch labels cover the case grid") {
  CHECK(std::string(branch_label(Branch::I_i_a)) == "I.i.a");
  CHECK(std::string(branch_label(Branch::I_i_b)) == "I.i.b");
  CHECK(std::string(branch_label(Branch::I_i_c)) == "I.i.c");
  CHECK(std::string(branch_label(Branch::I_ii_a)) == "I.ii.a");
  CHECK(std::string(branch_label(Branch::I_ii_b)) == "I.ii.b");
  CHECK(std::string(branch_label(Branch::I_ii_c)) == "I.ii.c");
  CHECK(std::string(branch_label(Branch::II_i)) == "II.i");
  CHECK(std::string(branch_label(Branch::II_ii)) == "II.ii");
}

TEST_CASE("case_profile computes the invariants") {
  CaseProfile pr = case_profile(5, 11, 1, 0);
  CHECK(pr.ord_nprime == 5);
  CHECK(pr.lambda == 0);
  CHECK(pr.beta == 3);
  CHECK(pr.residue == 1);
  CHECK(pr.branch == Branch::I_i_b);

  pr = case_profile(5, 11, 0, 0);
  CHECK(pr.branch == Branch::I_i_a);
  pr = case_profile(5, 11, 2, 0);
  CHECK(pr.branch == Branch::I_i_c);

  pr = case_profile(3, 13, 1, 0);  // ord = 3, q % 4 == 3
  CHECK(pr.lambda == 0);
  CHECK(pr.beta == 3);
  CHECK(pr.branch == Branch::I_ii_a);
  CHECK(case_profile(3, 13, 0, 0).branch == Branch::I_ii_a);
  CHECK(case_profile(3, 13, 2, 0).branch == Branch::I_ii_b);
  CHECK(case_profile(3, 13, 3, 0).branch == Branch::I_ii_c);

  pr = case_profile(7, 5, 3, 0);  // ord_5(7) = 4, lambda = 2, beta = 4
  CHECK(pr.lambda == 2);
  CHECK(pr.beta == 4);
  CHECK(pr.branch == Branch::II_i);
  CHECK(case_profile(7, 5, 4, 0).branch == Branch::II_i);
  CHECK(case_profile(7, 5, 5, 0).branch == Branch::II_ii);

  CHECK(case_profile(9, 7, 1, 0).beta == 4);  // 9^2 - 1 = 80

  CHECK_THROWS_AS(case_profile(3, 6, 0, 0), Error);   // n' even
  CHECK_THROWS_AS(case_profile(3, 9, 0, 0), Error);   // n' shares the char
  CHECK_THROWS_AS(case_profile(12, 5, 0, 0), Error);  // q not a prime power
  CHECK_THROWS_AS(case_profile(4, 5, 0, 0), Error);   // even characteristic
}

TEST_CASE("ord_two_power matches direct order computation") {
  for (u64 q : {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27}) {
    CHECK(ord_two_power(q, 0) == 1);
    for (u32 i = 1; i <= 12; ++i) {
      CHECK(ord_two_power(q, i) == mult_order_mod(u64(1) << i, q));
    }
  }
  CHECK_THROWS_AS(ord_two_power(4, 1), Error);
}

TEST_CASE("count_factors_sum reproduces published values") {
  // Odd-order rows.
  CHECK(count_factors_sum(3, 1) == 1);
  CHECK(count_factors_sum(3, 2) == 1);
  CHECK(count_factors_sum(3, 4) == 2);
  CHECK(count_factors_sum(3, 8) == 2);
  CHECK(count_factors_sum(5, 11) == 3);
  CHECK(count_factors_sum(5, 22) == 6);
  CHECK(count_factors_sum(5, 44) == 6);
  CHECK(count_factors_sum(7, 9) == 5);
  CHECK(count_factors_sum(7, 36) == 10);
  CHECK(count_factors_sum(9, 13) == 5);
  CHECK(count_factors_sum(9, 26) == 10);
  CHECK(count_factors_sum(9, 52) == 20);
  // Even-order rows.
  CHECK(count_factors_sum(3, 5) == 2);
  CHECK(count_factors_sum(3, 10) == 3);
  CHECK(count_factors_sum(3, 20) == 6);
  CHECK(count_factors_sum(3, 40) == 10);
  CHECK(count_factors_sum(3, 80) == 10);
  CHECK(count_factors_sum(5, 52) == 14);
  CHECK(count_factors_sum(7, 60) == 18);
  CHECK(count_factors_sum(7, 240) == 60);
  // The characteristic part never changes the distinct count.
  CHECK(count_factors_sum(3, 15) == count_factors_sum(3, 5));
  CHECK(count_factors_sum(3, 45) == count_factors_sum(3, 5));
}

TEST_CASE("count_factors_fast agrees with the divisor sum everywhere") {
  for (u64 q : {3, 5, 7, 9, 11, 13}) {
    u64 p = (q == 9) ? 3 : q;
    for (u64 nprime = 1; nprime <= 35; nprime += 2) {
      if (nprime % p == 0) continue;
      for (u32 i = 0; i <= 9; ++i) {
        CaseProfile pr = case_profile(q, nprime, i, 0);
        CHECK(count_factors_fast(pr) ==
              count_factors_sum(q, (u64(1) << i) * nprime));
      }
    }
  }
}

TEST_CASE("stable_threshold gives the first constant index") {
  CHECK(stable_threshold(3, 1) == 2);
  CHECK(stable_threshold(5, 1) == 1);
  CHECK(stable_threshold(3, 5) == 3);
  CHECK(stable_threshold(7, 1) == 3);
  CHECK(stable_threshold(9, 1) == 2);
  CHECK(stable_threshold(7, 15) == 4);
  CHECK(stable_threshold(9, 5) == 3);
  CHECK(stable_threshold(3, 7) == 2);
  // The count at the threshold persists for the next several doublings.
  for (u64 q : {3, 5, 7, 9}) {
    for (u64 nprime : {1, 5, 7, 11, 13}) {
      u64 p = (q == 9) ? 3 : q;
      if (nprime % p == 0) continue;
      u32 t = stable_threshold(q, nprime);
      u64 at = count_factors_sum(q, (u64(1) << t) * nprime);
      for (u32 extra = 1; extra <= 3; ++extra) {
        CHECK(count_factors_sum(q, (u64(1) << (t + extra)) * nprime) == at);
      }
      if (t >= 1) {
        CHECK(count_factors_sum(q, (u64(1) << (t - 1)) * nprime) != at);
      }
    }
  }
}

TEST_CASE("method labels name the three pipelines") {
  CHECK(std::string(method_label(FactorMethod::Direct)) == "direct");
  CHECK(std::string(method_label(FactorMethod::SplitEnumeration)) ==
        "split-enumeration");
  CHECK(std::string(method_label(FactorMethod::RecursiveSubstitution)) ==
        "recursive-substitution");
}

TEST_CASE("factor_xn_plus_1 reproduces the introductory example") {
  FieldSpec f5 = make_field(5, 1);
  FactorizationReport r = factor_xn_plus_1(f5, 22);
  CHECK(r.q == 5);
  CHECK(r.n == 22);
  CHECK(r.profile.branch == Branch::I_i_b);
  CHECK(r.method == FactorMethod::SplitEnumeration);
  CHECK(r.distinct_count == 6);
  std::vector<std::string> expected = {
      "x + 2",
      "x + 3",
      "x^5 + x^4 + x^3 + 2*x^2 + x + 2",
      "x^5 + 2*x^4 + x^3 + 2*x^2 + 3*x + 2",
      "x^5 + 4*x^4 + x^3 + 3*x^2 + x + 3",
      "x^5 + 3*x^4 + x^3 + 3*x^2 + 3*x + 3"};
  REQUIRE(r.factors.factors.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(r.factors.factors[k].first.to_string() == expected[k]);
    CHECK(r.factors.factors[k].second == 1);
  }

  FactorizationReport doubled = factor_xn_plus_1(f5, 44);
  CHECK(doubled.method == FactorMethod::RecursiveSubstitution);
  REQUIRE(doubled.factors.factors.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(doubled.factors.factors[k].first ==
          substitute_power(r.factors.factors[k].first, 2));
  }
}

TEST_CASE("factor_xn_plus_1 covers every branch") {
  struct Case {
    u64 q;
    u64 n;
    Branch branch;
    FactorMethod method;
  };
  const std::vector<Case> cases = {
      {5, 11, Branch::I_i_a, FactorMethod::Direct},
      {5, 22, Branch::I_i_b, FactorMethod::SplitEnumeration},
      {5, 44, Branch::I_i_c, FactorMethod::RecursiveSubstitution},
      {3, 13, Branch::I_ii_a, FactorMethod::Direct},
      {3, 26, Branch::I_ii_a, FactorMethod::RecursiveSubstitution},
      {3, 52, Branch::I_ii_b, FactorMethod::SplitEnumeration},
      {3, 104, Branch::I_ii_c, FactorMethod::RecursiveSubstitution},
      {3, 5, Branch::II_i, FactorMethod::Direct},
      {3, 40, Branch::II_i, FactorMethod::Direct},
      {3, 80, Branch::II_ii, FactorMethod::RecursiveSubstitution},
      {9, 20, Branch::II_i, FactorMethod::Direct},
  };
  for (const Case& c : cases) {
    auto [p, m] = std::pair<u64, u32>{(c.q == 9) ? 3 : c.q, (c.q == 9) ? 2u : 1u};
    FactorizationReport r = factor_xn_plus_1(make_field(p, m), c.n);
    CHECK(r.profile.branch == c.branch);
    CHECK(r.method == c.method);
    CHECK(r.distinct_count == count_factors_sum(c.q, c.n));
  }
}

TEST_CASE("factor_xn_plus_1 applies characteristic multiplicity") {
  FieldSpec f3 = make_field(3, 1);
  FactorizationReport r = factor_xn_plus_1(f3, 12);
  CHECK(r.profile.s == 1);
  CHECK(r.distinct_count == 2);
  for (const auto& [f, mult] : r.factors.factors) {
    CHECK(mult == 3);
    CHECK(f.degree() == 2);
  }

  FactorizationReport r2 = factor_xn_plus_1(make_field(3, 2), 18);
  CHECK(r2.profile.s == 2);  // 18 = 2 * 3^2
  for (const auto& [f, mult] : r2.factors.factors) {
    CHECK(mult == 9);
    (void)f;
  }
}

TEST_CASE("verification can be bypassed but defaults on") {
  FieldSpec f7 = make_field(7, 1);
  FactorizationOptions off;
  off.verify = false;
  FactorizationReport quick = factor_xn_plus_1(f7, 48, off);
  FactorizationReport checked = factor_xn_plus_1(f7, 48);
  CHECK(quick.factors == checked.factors);
}

TEST_CASE("trivial and edge lengths factor correctly") {
  FieldSpec f3 = make_field(3, 1);
  FactorizationReport r = factor_xn_plus_1(f3, 1);
  REQUIRE(r.factors.factors.size() == 1);
  CHECK(r.factors.factors[0].first.to_string() == "x + 1");
  CHECK(r.factors.factors[0].second == 1);

  FactorizationReport r3 = factor_xn_plus_1(f3, 3);
  REQUIRE(r3.factors.factors.size() == 1);
  CHECK(r3.factors.factors[0].first.to_string() == "x + 1");
  CHECK(r3.factors.factors[0].second == 3);

  FactorizationReport r2 = factor_xn_plus_1(f3, 2);
  REQUIRE(r2.factors.factors.size() == 1);
  CHECK(r2.factors.factors[0].first.to_string() == "x^2 + 1");
}
