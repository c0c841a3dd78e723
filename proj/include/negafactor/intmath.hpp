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

#ifndef NEGAFACTOR_INTMATH_HPP
#define NEGAFACTOR_INTMATH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "negafactor/biguint.hpp"

namespace negafactor {

/// a * b mod m for any m < 2^128.
u128 mul_mod(u128 a, u128 b, u128 m);
/// base^exp mod m for any m < 2^128.
u128 pow_mod(u128 base, u128 exp, u128 m);

/// Deterministic Miller-Rabin for n < 3.3 * 10^24, fixed extra bases above.
bool is_prime(u128 n);

/// Prime factorisation via trial division and Brent's rho.  Throws
/// CapabilityExceeded when a cofactor resists the iteration budget.
std::vector<std::pair<u128, u32>> factorize(u128 n);

std::vector<u64> prime_factors(u64 n);
u64 euler_phi(u64 n);
/// All divisors of n in ascending order.
std::vector<u64> divisors(u64 n);

/// Largest e with 2^e dividing x; x must be nonzero.
u32 two_adic_u128(u128 x);

/// (p, m) with q = p^m, p prime; InvalidArgument otherwise.
std::pair<u64, u32> prime_power_split(u64 q);

}  // namespace negafactor

#endif  // NEGAFACTOR_INTMATH_HPP
