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

#ifndef NEGAFACTOR_POLY_HPP
#define NEGAFACTOR_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "negafactor/cosets.hpp"
#include "negafactor/gf.hpp"

namespace negafactor {

/// Dense univariate polynomial over a FieldSpec, ascending coefficients with
/// no zero leading coefficient stored.  The zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;

  static Poly zero(const FieldSpec& spec);
  static Poly one(const FieldSpec& spec);
  static Poly x(const FieldSpec& spec);
  static Poly from_coeffs(const FieldSpec& spec, std::vector<FieldElement> coeffs);
  /// Constant-free convenience: residues become coefficients via make_element.
  static Poly from_residues(const FieldSpec& spec, const std::vector<u64>& residues);

  bool valid() const { return spec_.valid(); }
  const FieldSpec& spec() const { return spec_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(std::size_t k) const;
  FieldElement lead() const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monic() const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  /// Canonical order: ascending degree, then lexicographic on the ascending
  /// coefficient vector with FieldElement::cmp.
  static int cmp(const Poly& a, const Poly& b);

  /// Human form, descending powers: "x^5 + 2*x^4 + 1"; extension
  /// coefficients render as "[a0,a1]".  The zero polynomial is "0".
  std::string to_string() const;

 private:
  Poly(FieldSpec spec, std::vector<FieldElement> coeffs)
      : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}
  FieldSpec spec_;
  std::vector<FieldElement> coeffs_;
  friend Poly poly_from_trimmed(FieldSpec spec, std::vector<FieldElement> coeffs);
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const FieldElement& c, const Poly& a);

struct DivModResult {
  Poly quot;
  Poly rem;
};

/// Euclidean division; DivisionByZero when g is zero.
DivModResult divmod(const Poly& f, const Poly& g);

/// Monic greatest common divisor; gcd(0, 0) == 0.
Poly gcd(const Poly& f, const Poly& g);

Poly powmod(const Poly& base, u128 exp, const Poly& modulus);
Poly powmod(const Poly& base, const BigUInt& exp, const Poly& modulus);

Poly make_monic(const Poly& f);
Poly derivative(const Poly& f);
FieldElement eval(const Poly& f, const FieldElement& at);

/// f(x^e) for e >= 1.
Poly substitute_power(const Poly& f, u64 e);

/// Rabin's criterion: f of degree n is irreducible iff x^{q^n} == x (mod f)
/// and gcd(x^{q^{n/r}} - x, f) == 1 for every prime r | n.  Constants and
/// zero are not irreducible.
bool is_irreducible(const Poly& f);

/// Monic minimal polynomial over `spec` of alpha^rep for a fixed primitive
/// n-th root of unity alpha living in the splitting extension; the product
/// runs over the whole orbit, so the result has degree |coset.elements|.
/// Requires gcd(q, n) == 1; the coset must have been built modulo n with a
/// multiplier congruent to the field order.
Poly minimal_polynomial(const FieldSpec& spec, u64 n, const Coset& orbit);

/// Monic irreducible factors with multiplicities, canonically sorted, plus
/// the leading unit: input == unit * prod factors[k]^mult[k].
struct FactorMultiset {
  FieldElement unit;
  std::vector<std::pair<Poly, u64>> factors;
};

bool operator==(const FactorMultiset& a, const FactorMultiset& b);

/// Seed for the random basis used by equal-degree splitting.
constexpr u64 kDefaultOracleSeed = 0xC05E7;

/// Generic factorization over any supported field: squarefree decomposition,
/// then distinct-degree and equal-degree splitting.  Independent of the
/// closed-form pipeline, which it cross-checks in the test suite.
FactorMultiset factor_generic(const Poly& f, u64 seed = kDefaultOracleSeed);

Poly reassemble(const FactorMultiset& parts);

void canonical_sort(std::vector<std::pair<Poly, u64>>& factors);

}  // namespace negafactor

#endif  // NEGAFACTOR_POLY_HPP
