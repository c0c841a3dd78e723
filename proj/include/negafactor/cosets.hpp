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

#ifndef NEGAFACTOR_COSETS_HPP
#define NEGAFACTOR_COSETS_HPP

#include <vector>

#include "negafactor/biguint.hpp"

namespace negafactor {

/// Additive order of a modulo n: n / gcd(n, a).  Requires n >= 1.
u64 theta(u64 n, u64 a);

/// Least t >= 1 with q^t == 1 (mod n); requires gcd(n, q) == 1 (NotCoprime
/// otherwise).  By convention the order modulo 1 is 1.
u64 mult_order_mod(u64 n, u64 q);

/// Largest e with 2^e | x; x must be nonzero.
u32 two_adic(u64 x);

/// Orbit of a under multiplication by q modulo n.
struct Coset {
  u64 n = 0;
  u64 q = 0;
  u64 rep = 0;                 // smallest member
  std::vector<u64> elements;   // ascending
};

Coset coset(u64 q, u64 n, u64 a);

/// Smallest members of all orbits modulo n, plus the odd and even sublists
/// when n is even (empty otherwise).  All lists ascend.
struct RepresentativeSets {
  u64 n = 0;
  u64 q = 0;
  std::vector<u64> all;
  std::vector<u64> odd;
  std::vector<u64> even;
};

RepresentativeSets representative_sets(u64 q, u64 n);

/// True when every orbit modulo an even n is parity-pure, which holds
/// whenever q is odd and underpins the odd/even split above.
bool coset_parity_uniform(u64 q, u64 n_even);

/// How orbits modulo 2^i n' relate to orbits modulo 2^{i+1} n' when the
/// modulus doubles: every orbit either splits in two or absorbs its shifted
/// partner.  Mixed reports a modulus where neither happens uniformly.
enum class CosetTransition { Splits, Merges, Mixed };

const char* to_string(CosetTransition t);

/// Classifies the transition at exponent i >= 1 for odd n' coprime to q, and
/// cross-checks the classification against the closed-form prediction where
/// one applies (InternalVerificationFailure on disagreement).  For inputs
/// with ord_{n'}(q) odd a Mixed outcome is impossible and reported as
/// MixedStructure, signalling an implementation bug.
CosetTransition coset_split_structure(u64 q, u64 n_prime, u32 i);

}  // namespace negafactor

#endif  // NEGAFACTOR_COSETS_HPP
