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

#ifndef NEGAFACTOR_GF_HPP
#define NEGAFACTOR_GF_HPP

#include <memory>
#include <string>
#include <vector>

#include "negafactor/biguint.hpp"

namespace negafactor {

/// Largest extension degree over the prime field this build will construct.
/// Group orders and exponents above 128 bits are handled with BigUInt, so the
/// practical ceiling is the cost of arithmetic, not integer width.
constexpr u32 kMaxExtensionDegree = 512;

/// Description of F_{p^m}, odd p.  For m >= 2 the modulus is the
/// lexicographically smallest monic irreducible of degree m over F_p,
/// coefficients compared ascending from the constant term; for m = 1 the
/// modulus is x and arithmetic is plain mod p.  Instances are immutable and
/// cheap to copy; equal (p, m) always yields an equal spec.
class FieldSpec {
 public:
  FieldSpec() = default;

  bool valid() const { return data_ != nullptr; }
  u64 p() const;
  u32 m() const;
  /// Monic modulus, ascending coefficients, length m + 1.
  const std::vector<u64>& modulus() const;

  bool operator==(const FieldSpec& other) const;
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  double order_log2() const;
  bool order_fits_u128() const;
  u128 order_u128() const;
  BigUInt order() const;

  /// "GF(p^m; modulus=[c0,c1,...])", e.g. "GF(3^2; modulus=[1,0,1])".
  std::string to_string() const;

 private:
  struct Data {
    u64 p = 0;
    u32 m = 0;
    std::vector<u64> mod;
  };
  explicit FieldSpec(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
  friend FieldSpec make_field(u64 p, u32 m);
};

/// Canonical field for (p, m).  NotPrime / EvenCharacteristic on bad p,
/// CapabilityExceeded beyond kMaxExtensionDegree.  Cached per (p, m).
FieldSpec make_field(u64 p, u32 m);

/// Element of a FieldSpec: coefficient vector of length exactly m over F_p,
/// ascending powers of the generator of the polynomial basis.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldSpec spec, std::vector<u64> coeffs);

  bool valid() const { return spec_.valid(); }
  const FieldSpec& spec() const { return spec_; }
  const std::vector<u64>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

  /// Lexicographic order on coefficient vectors, constant term first.
  static int cmp(const FieldElement& a, const FieldElement& b);

  /// Prime field: the residue in decimal.  Extension: "[a0,a1,...]".
  std::string to_string() const;

 private:
  FieldSpec spec_;
  std::vector<u64> coeffs_;
};

FieldElement zero(const FieldSpec& spec);
FieldElement one(const FieldSpec& spec);
/// Residues reduced mod p; short vectors are padded with zeros.
FieldElement make_element(const FieldSpec& spec, std::vector<u64> coeffs);
/// Element whose coefficient vector is the little-endian base-p expansion of
/// index; enumerates constants first, then ascending coefficient vectors.
FieldElement element_of_index(const FieldSpec& spec, u64 index);

enum class FieldOp { add, sub, mul, div };

FieldElement arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op);

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement negate(const FieldElement& a);
FieldElement inverse(const FieldElement& a);
FieldElement pow(const FieldElement& base, u128 exp);
FieldElement pow(const FieldElement& base, const BigUInt& exp);

/// Smallest multiplicative generator in enumeration order (constants first,
/// then ascending coefficient vectors).  Deterministic; repeated calls agree.
FieldElement find_generator(const FieldSpec& spec);

/// Element of multiplicative order exactly n; OrderNotDivisible when
/// n does not divide p^m - 1.  Deterministic for fixed (spec, n).
FieldElement nth_root_of_unity(const FieldSpec& spec, u64 n);

/// Ring embedding F_{p^ms} -> F_{p^mt} for ms | mt, fixed once per field pair
/// by mapping the subfield generator to the first root of its modulus found
/// by a deterministic search.  Identity when the specs are equal.
FieldElement embed(const FieldSpec& sub, const FieldSpec& sup, const FieldElement& a);

/// Order of a nonzero element; ZeroElement on zero, CapabilityExceeded when
/// the group order cannot be factored within budget.
u128 multiplicative_order(const FieldElement& a);

}  // namespace negafactor

#endif  // NEGAFACTOR_GF_HPP
