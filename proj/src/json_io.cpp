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

#include "negafactor/json_io.hpp"

#include <string>
#include <vector>

namespace negafactor {

Json element_json(const FieldElement& a) {
  if (a.spec().m() == 1) return Json(a.coeffs()[0]);
  return Json(a.to_string());
}

FieldElement element_from_json(const FieldSpec& spec, const Json& j) {
  if (j.is_number_unsigned()) {
    if (spec.m() != 1) {
      fail(ErrorCode::InvalidArgument,
           "extension coefficients use the bracket form");
    }
    return make_element(spec, {j.get<u64>()});
  }
  if (!j.is_string()) {
    fail(ErrorCode::InvalidArgument, "coefficient must be number or string");
  }
  const std::string text = j.get<std::string>();
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    fail(ErrorCode::InvalidArgument, "malformed coefficient: " + text);
  }
  std::vector<u64> digits;
  u64 current = 0;
  bool have_digit = false;
  for (std::size_t k = 1; k + 1 < text.size(); ++k) {
    char ch = text[k];
    if (ch == ',') {
      if (!have_digit) {
        fail(ErrorCode::InvalidArgument, "malformed coefficient: " + text);
      }
      digits.push_back(current);
      current = 0;
      have_digit = false;
    } else if (ch >= '0' && ch <= '9') {
      current = current * 10 + static_cast<u64>(ch - '0');
      have_digit = true;
    } else {
      fail(ErrorCode::InvalidArgument, "malformed coefficient: " + text);
    }
  }
  if (!have_digit) {
    fail(ErrorCode::InvalidArgument, "malformed coefficient: " + text);
  }
  digits.push_back(current);
  if (digits.size() != spec.m()) {
    fail(ErrorCode::InvalidArgument,
         "coefficient has " + std::to_string(digits.size()) +
             " digits, field needs " + std::to_string(spec.m()));
  }
  return make_element(spec, std::move(digits));
}

Json poly_json(const Poly& f) {
  Json coeffs = Json::array();
  for (const FieldElement& c : f.coeffs()) coeffs.push_back(element_json(c));
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

Poly poly_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    fail(ErrorCode::InvalidArgument, "polynomial JSON needs a coeffs array");
  }
  std::vector<FieldElement> coeffs;
  coeffs.reserve(j["coeffs"].size());
  for (const Json& c : j["coeffs"]) {
    coeffs.push_back(element_from_json(spec, c));
  }
  return Poly::from_coeffs(spec, std::move(coeffs));
}

Json coset_json(const Coset& c) {
  Json j;
  j["n"] = c.n;
  j["q"] = c.q;
  j["rep"] = c.rep;
  j["elements"] = c.elements;
  return j;
}

Json representative_sets_json(const RepresentativeSets& sets) {
  Json j;
  j["all"] = sets.all;
  j["odd"] = sets.odd;
  j["even"] = sets.even;
  return j;
}

Json report_json(const FactorizationReport& report) {
  Json j;
  j["q"] = report.q;
  j["n"] = report.n;
  j["s"] = report.profile.s;
  j["i"] = report.profile.i;
  j["nprime"] = report.profile.nprime;
  j["beta"] = report.profile.beta;
  j["lambda"] = report.profile.lambda;
  j["branch"] = branch_label(report.profile.branch);
  j["count"] = report.distinct_count;
  Json factors = Json::array();
  for (const auto& [poly, mult] : report.factors.factors) {
    Json entry;
    entry["poly"] = poly_json(poly);
    entry["mult"] = mult;
    factors.push_back(std::move(entry));
  }
  j["factors"] = std::move(factors);
  return j;
}

Json code_json(const NegacyclicCode& code) {
  Json j;
  j["n"] = code.length;
  j["generator"] = poly_json(code.generator);
  j["dimension"] = code.dimension;
  return j;
}

Json family_header_json(const CodeFamily& family) {
  Json j;
  j["k"] = family.k();
  j["count"] = family.total().to_string();
  j["truncated"] = family.truncated();
  return j;
}

Json error_json(const Error& err) {
  Json inner;
  inner["code"] = error_code_name(err.code());
  inner["message"] = err.what();
  Json j;
  j["error"] = std::move(inner);
  return j;
}

}  // namespace negafactor
