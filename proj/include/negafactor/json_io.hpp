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

#ifndef NEGAFACTOR_JSON_IO_HPP
#define NEGAFACTOR_JSON_IO_HPP

#include <json.hpp>

#include "negafactor/cosets.hpp"
#include "negafactor/errors.hpp"
#include "negafactor/factorizer.hpp"
#include "negafactor/negacyclic.hpp"
#include "negafactor/poly.hpp"

namespace negafactor {

/// Keys serialize in insertion order so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Prime-field coefficients are numbers; extension coefficients keep the
/// bracket form "[a0,a1]" as strings.
Json element_json(const FieldElement& a);
FieldElement element_from_json(const FieldSpec& spec, const Json& j);

/// {"coeffs":[c0,...,cn]} ascending; the zero polynomial has empty coeffs.
Json poly_json(const Poly& f);
Poly poly_from_json(const FieldSpec& spec, const Json& j);

/// {"n":..., "q":..., "rep":..., "elements":[...]}.
Json coset_json(const Coset& c);

/// {"all":[...], "odd":[...], "even":[...]}.
Json representative_sets_json(const RepresentativeSets& sets);

/// {"q","n","s","i","nprime","beta","lambda","branch","count","factors"};
/// each factor is {"poly":{...},"mult":...}.
Json report_json(const FactorizationReport& report);

/// {"n":..., "generator":{...}, "dimension":...}.
Json code_json(const NegacyclicCode& code);

/// {"k":..., "count":"...", "truncated":...} with count a decimal string.
Json family_header_json(const CodeFamily& family);

/// {"error":{"code":"...", "message":"..."}}.
Json error_json(const Error& err);

}  // namespace negafactor

#endif  // NEGAFACTOR_JSON_IO_HPP
