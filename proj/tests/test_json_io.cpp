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

#include "negafactor/json_io.hpp"

using namespace negafactor;

TEST_CASE("elements serialize as numbers or bracket strings") {
  FieldSpec f7 = make_field(7, 1);
  Json j = element_json(make_element(f7, {5}));
  CHECK(j.is_number());
  CHECK(j.get<u64>() == 5);
  CHECK(element_from_json(f7, j) == make_element(f7, {5}));

  FieldSpec f9 = make_field(3, 2);
  FieldElement w1 = make_element(f9, {2, 1});
  Json jw = element_json(w1);
  CHECK(jw.is_string());
  CHECK(jw.get<std::string>() == "[2,1]");
  CHECK(element_from_json(f9, jw) == w1);
}

TEST_CASE("polynomials round-trip through their coefficient arrays") {
  FieldSpec f5 = make_field(5, 1);
  Poly f = Poly::from_residues(f5, {2, 1, 0, 0, 0, 1});  // x^5 + x + 2
  Json j = poly_json(f);
  CHECK(j.dump() == "{\"coeffs\":[2,1,0,0,0,1]}");
  CHECK(poly_from_json(f5, j) == f);

  CHECK(poly_json(Poly::zero(f5)).dump() == "{\"coeffs\":[]}");
  CHECK(poly_from_json(f5, poly_json(Poly::zero(f5))).is_zero());

  FieldSpec f9 = make_field(3, 2);
  Poly g = Poly::from_coeffs(
      f9, {make_element(f9, {1, 1}), zero(f9), one(f9)});
  Json jg = poly_json(g);
  CHECK(jg.dump() == "{\"coeffs\":[\"[1,1]\",\"[0,0]\",\"[1,0]\"]}");
  CHECK(poly_from_json(f9, jg) == g);
}

TEST_CASE("cosets and representative sets serialize with sorted members") {
  Coset c = coset(5, 44, 1);
  Json j = coset_json(c);
  CHECK(j.dump() == "{\"n\":44,\"q\":5,\"rep\":1,\"elements\":[1,5,9,25,37]}");

  RepresentativeSets sets = representative_sets(3, 8);
  Json js = representative_sets_json(sets);
  CHECK(js["all"].is_array());
  CHECK(js["odd"].is_array());
  CHECK(js["even"].is_array());
  std::vector<std::string> keys;
  for (auto it = js.begin(); it != js.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"all", "odd", "even"});
  CHECK(js["odd"].size() + js["even"].size() == js["all"].size());
}

TEST_CASE("factorization reports keep the documented key order") {
  FactorizationReport r = factor_xn_plus_1(make_field(5, 1), 22);
  Json j = report_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"q", "n", "s", "i", "nprime", "beta",
                                         "lambda", "branch", "count",
                                         "factors"});
  CHECK(j["q"].get<u64>() == 5);
  CHECK(j["n"].get<u64>() == 22);
  CHECK(j["s"].get<u32>() == 0);
  CHECK(j["i"].get<u32>() == 1);
  CHECK(j["nprime"].get<u64>() == 11);
  CHECK(j["beta"].get<u32>() == 3);
  CHECK(j["lambda"].get<u32>() == 0);
  CHECK(j["branch"].get<std::string>() == "I.i.b");
  CHECK(j["count"].get<u64>() == 6);
  REQUIRE(j["factors"].size() == 6);
  CHECK(j["factors"][0].dump() == "{\"poly\":{\"coeffs\":[2,1]},\"mult\":1}");
}

TEST_CASE("codes and family headers serialize per schema") {
  FieldSpec f3 = make_field(3, 1);
  CodeFamily family = enumerate_codes(f3, 12, 2);
  Json header = family_header_json(family);
  CHECK(header.dump() == "{\"k\":2,\"count\":\"16\",\"truncated\":true}");

  family.next();
  auto second = family.next();
  REQUIRE(second.has_value());
  Json jc = code_json(*second);
  CHECK(jc.dump() ==
        "{\"n\":12,\"generator\":{\"coeffs\":[2,1,1]},\"dimension\":10}");
}

TEST_CASE("errors serialize with their symbolic code") {
  try {
    make_field(2, 1);
    CHECK(false);
  } catch (const Error& e) {
    Json j = error_json(e);
    CHECK(j["error"]["code"].get<std::string>() == "EvenCharacteristic");
    CHECK(j["error"]["message"].is_string());
    CHECK_FALSE(j["error"]["message"].get<std::string>().empty());
  }
}
