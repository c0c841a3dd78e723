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

#ifndef NEGAFACTOR_NEGACYCLIC_HPP
#define NEGAFACTOR_NEGACYCLIC_HPP

#include <optional>
#include <vector>

#include "negafactor/factorizer.hpp"
#include "negafactor/poly.hpp"

namespace negafactor {

/// Exponent k from which every negacyclic code of length p^s 2^i n' is the
/// lift of one of length p^s 2^k n': lambda + beta - 1 when lambda == 0 and
/// q % 4 == 3, else lambda + beta - 2.  Requires n' odd and coprime to q.
u32 lifting_base_exponent(u64 q, u64 nprime);

/// Number of negacyclic codes of length n over F_q, i.e. of ideals of
/// F_q[x]/(x^n + 1): (p^s + 1)^N for N distinct irreducible factors.  Above
/// the lifting threshold N is the stable count at exponent k; below it the
/// same product formula runs on the factors actually present, flagged.
struct CodeCount {
  BigUInt count;
  bool below_threshold = false;
};

CodeCount count_codes(u64 q, u64 n);

/// Negacyclic code of the given length: the ideal of F_q[x]/(x^n + 1)
/// generated by a monic divisor of x^n + 1, of dimension n - deg(generator).
struct NegacyclicCode {
  u64 length = 0;
  Poly generator;
  u64 dimension = 0;
};

/// Uncapped enumerations stop here rather than exhaust memory.
constexpr u64 kEnumerationHardLimit = 1'000'000;

/// Streams every negacyclic code of length n over the field: generators are
/// the monic divisors prod f_j^{e_j} of x^n + 1 with 0 <= e_j <= p^s, emitted
/// with exponent vectors ascending in mixed radix, first factor least
/// significant.  Single consumer.
class CodeFamily {
 public:
  const FieldSpec& field() const { return spec_; }
  u64 length() const { return n_; }
  /// Lifting threshold exponent for this length's parameters.
  u32 k() const { return k_; }
  /// p^s 2^k n', the shortest length whose family lifts onto this one.
  u64 base_length() const { return base_length_; }
  /// Full family size, independent of any cap.
  const BigUInt& total() const { return total_; }
  bool below_threshold() const { return below_threshold_; }
  /// True when the emission bound cuts the family short.
  bool truncated() const { return truncated_; }
  u64 emitted() const { return emitted_; }

  /// Next code in canonical order; nullopt once the family or cap runs out.
  std::optional<NegacyclicCode> next();

 private:
  friend CodeFamily enumerate_codes(const FieldSpec& spec, u64 n,
                                    std::optional<u64> cap);
  CodeFamily() = default;

  FieldSpec spec_;
  u64 n_ = 0;
  u32 k_ = 0;
  u64 base_length_ = 0;
  BigUInt total_;
  bool below_threshold_ = false;
  bool truncated_ = false;
  u64 bound_ = 0;
  u64 emitted_ = 0;
  u64 radix_ = 1;
  std::vector<Poly> factors_;
  std::vector<u64> exponents_;
};

/// Builds the stream; CapabilityExceeded when the family is larger than
/// kEnumerationHardLimit and no cap bounds the emission.
CodeFamily enumerate_codes(const FieldSpec& spec, u64 n,
                           std::optional<u64> cap = std::nullopt);

/// g(x^{2^{i_to - i_from}}): carries the generator of a code of length
/// n_from to one of length n_to.  The lengths must share s and n' with
/// i_to >= i_from (IncompatibleLengths), g must be a monic divisor of
/// x^{n_from} + 1 (NotADivisor), and over the stated field (FieldMismatch).
/// From the threshold length this is a bijection of code families.
Poly lift_generator(const Poly& g, u64 q, u64 n_from, u64 n_to);

}  // namespace negafactor

#endif  // NEGAFACTOR_NEGACYCLIC_HPP
