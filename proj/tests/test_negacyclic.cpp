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

#include <set>
#include <string>
#include <vector>

#include "negafactor/errors.hpp"
#include "negafactor/gf.hpp"
#include "negafactor/negacyclic.hpp"
#include "negafactor/poly.hpp"

using namespace negafactor;

namespace {

std::vector<NegacyclicCode> drain(CodeFamily& family) {
  std::vector<NegacyclicCode> out;
  while (auto code = family.next()) out.push_back(*code);
  return out;
}

}  // namespace

TEST_CASE("lifting_base_exponent matches the stable threshold table") {
  CHECK(lifting_base_exponent(3, 1) == 2);
  CHECK(lifting_base_exponent(5, 1) == 1);
  CHECK(lifting_base_exponent(7, 1) == 3);
  CHECK(lifting_base_exponent(9, 1) == 2);
  CHECK(lifting_base_exponent(3, 5) == 3);
  CHECK(lifting_base_exponent(3, 7) == 2);
  CHECK(lifting_base_exponent(9, 5) == 3);
  CHECK_THROWS_AS(lifting_base_exponent(3, 6), Error);
  CHECK_THROWS_AS(lifting_base_exponent(3, 9), Error);
}

TEST_CASE("count_codes gives the ideal count of F_q[x]/(x^n+1)") {
  CHECK(count_codes(3, 4).count.to_string() == "4");
  CHECK(count_codes(3, 12).count.to_string() == "16");
  CHECK(count_codes(5, 2).count.to_string() == "4");
  CHECK(count_codes(5, 44).count.to_string() == "64");
  CHECK(count_codes(9, 8).count.to_string() == "16");
  CHECK_FALSE(count_codes(3, 4).below_threshold);
  CHECK_FALSE(count_codes(5, 44).below_threshold);

  // Below the lifting threshold the count still holds, only flagged.
  CodeCount small = count_codes(3, 2);
  CHECK(small.count.to_string() == "2");
  CHECK(small.below_threshold);
  CodeCount unit = count_codes(3, 1);
  CHECK(unit.count.to_string() == "2");
  CHECK(unit.below_threshold);

  // Multiplicity p^s widens the per-factor exponent range to p^s + 1.
  CHECK(count_codes(3, 8748).count.to_string() == "4787344");  // 2188^2
}

TEST_CASE("enumerate_codes emits generators in mixed-radix order") {
  FieldSpec f3 = make_field(3, 1);
  CodeFamily family = enumerate_codes(f3, 4);
  CHECK(family.length() == 4);
  CHECK(family.k() == 2);
  CHECK(family.base_length() == 4);
  CHECK(family.total().to_string() == "4");
  CHECK_FALSE(family.below_threshold());
  CHECK_FALSE(family.truncated());

  std::vector<NegacyclicCode> codes = drain(family);
  REQUIRE(codes.size() == 4);
  CHECK(family.emitted() == 4);
  CHECK(codes[0].generator.to_string() == "1");
  CHECK(codes[1].generator.to_string() == "x^2 + x + 2");
  CHECK(codes[2].generator.to_string() == "x^2 + 2*x + 2");
  CHECK(codes[3].generator.to_string() == "x^4 + 1");
  CHECK(codes[0].dimension == 4);
  CHECK(codes[1].dimension == 2);
  CHECK(codes[2].dimension == 2);
  CHECK(codes[3].dimension == 0);
  for (const NegacyclicCode& c : codes) {
    CHECK(c.length == 4);
    CHECK(c.generator.is_monic());
    Poly xn = Poly::one(f3) + substitute_power(Poly::x(f3), 4);
    CHECK(divmod(xn, c.generator).rem.is_zero());
  }
  CHECK_FALSE(family.next().has_value());
}

TEST_CASE("first factor is the least significant mixed-radix digit") {
  FieldSpec f3 = make_field(3, 1);
  CodeFamily family = enumerate_codes(f3, 12, 5);
  CHECK(family.total().to_string() == "16");
  CHECK(family.truncated());
  std::vector<NegacyclicCode> codes = drain(family);
  REQUIRE(codes.size() == 5);
  Poly f0 = Poly::from_residues(f3, {2, 1, 1});
  Poly f1 = Poly::from_residues(f3, {2, 2, 1});
  CHECK(codes[0].generator == Poly::one(f3));
  CHECK(codes[1].generator == f0);
  CHECK(codes[2].generator == f0 * f0);
  CHECK(codes[3].generator == f0 * f0 * f0);
  CHECK(codes[4].generator == f1);
}

TEST_CASE("uncapped oversized families are rejected, capped ones stream") {
  FieldSpec f3 = make_field(3, 1);
  // 8748 = 3^7 * 4: two distinct factors of multiplicity 2187, family 2188^2.
  CHECK_THROWS_AS(enumerate_codes(f3, 8748), Error);
  try {
    enumerate_codes(f3, 8748);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapabilityExceeded);
  }
  CodeFamily capped = enumerate_codes(f3, 8748, 3);
  CHECK(capped.total().to_string() == "4787344");
  CHECK(capped.truncated());
  std::vector<NegacyclicCode> codes = drain(capped);
  REQUIRE(codes.size() == 3);
  CHECK(codes[0].generator.to_string() == "1");
  CHECK(codes[2].generator == codes[1].generator * codes[1].generator);
}

TEST_CASE("below-threshold lengths enumerate with a flag, not an error") {
  FieldSpec f3 = make_field(3, 1);
  CodeFamily family = enumerate_codes(f3, 2);
  CHECK(family.below_threshold());
  CHECK(family.total().to_string() == "2");
  std::vector<NegacyclicCode> codes = drain(family);
  REQUIRE(codes.size() == 2);
  CHECK(codes[0].generator.to_string() == "1");
  CHECK(codes[1].generator.to_string() == "x^2 + 1");
}

TEST_CASE("lift_generator carries divisors up through x -> x^{2^j}") {
  FieldSpec f5 = make_field(5, 1);
  Poly g = Poly::from_residues(f5, {2, 1});  // x + 2 divides x^22 + 1
  Poly lifted = lift_generator(g, 5, 22, 44);
  CHECK(lifted.to_string() == "x^2 + 2");

  // Same length is the identity lift.
  CHECK(lift_generator(g, 5, 22, 22) == g);

  // The two extreme divisors lift to the two extreme divisors.
  CHECK(lift_generator(Poly::one(f5), 5, 22, 88) == Poly::one(f5));
  Poly x22 = Poly::one(f5) + substitute_power(Poly::x(f5), 22);
  Poly x88 = Poly::one(f5) + substitute_power(Poly::x(f5), 88);
  CHECK(lift_generator(x22, 5, 22, 88) == x88);
}

TEST_CASE("lifting the threshold family is a bijection onto the target") {
  FieldSpec f3 = make_field(3, 1);
  CodeFamily base = enumerate_codes(f3, 4);
  CodeFamily target = enumerate_codes(f3, 8);
  CHECK(base.total().to_string() == target.total().to_string());

  std::set<std::string> lifted;
  Poly x8 = Poly::one(f3) + substitute_power(Poly::x(f3), 8);
  while (auto code = base.next()) {
    Poly up = lift_generator(code->generator, 3, 4, 8);
    CHECK(divmod(x8, up).rem.is_zero());
    lifted.insert(up.to_string());
  }
  std::set<std::string> direct;
  while (auto code = target.next()) direct.insert(code->generator.to_string());
  CHECK(lifted == direct);
  CHECK(lifted.size() == 4);
}

TEST_CASE("lift_generator rejects bad inputs with specific codes") {
  FieldSpec f5 = make_field(5, 1);
  FieldSpec f3 = make_field(3, 1);

  try {
    lift_generator(Poly::from_residues(f5, {1, 1}), 5, 22, 44);  // x + 1
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotADivisor);
  }
  try {
    // Non-monic scalar multiple of a divisor.
    lift_generator(Poly::from_residues(f5, {4, 2}), 5, 22, 44);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotADivisor);
  }
  try {
    lift_generator(Poly::from_residues(f5, {2, 1}), 5, 22, 33);  // n' changes
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleLengths);
  }
  try {
    lift_generator(Poly::from_residues(f5, {2, 1}), 5, 44, 22);  // downward
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleLengths);
  }
  try {
    lift_generator(Poly::from_residues(f5, {2, 1}), 5, 22, 110);  // s changes
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleLengths);
  }
  try {
    lift_generator(Poly::from_residues(f3, {1, 1}), 5, 4, 8);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("count_codes agrees with exhaustive enumeration on small lengths") {
  struct Case {
    u64 p;
    u32 m;
    u64 n;
  };
  const std::vector<Case> cases = {
      {3, 1, 4}, {3, 1, 12}, {5, 1, 2}, {5, 1, 44}, {3, 2, 8}, {7, 1, 6}};
  for (const Case& c : cases) {
    FieldSpec spec = make_field(c.p, c.m);
    u64 q = 1;
    for (u32 j = 0; j < c.m; ++j) q *= c.p;
    CodeFamily family = enumerate_codes(spec, c.n);
    std::set<std::string> seen;
    Poly xn = Poly::one(spec) + substitute_power(Poly::x(spec), c.n);
    while (auto code = family.next()) {
      CHECK(divmod(xn, code->generator).rem.is_zero());
      seen.insert(code->generator.to_string());
    }
    CHECK(BigUInt(seen.size()).to_string() == count_codes(q, c.n).count.to_string());
  }
}
