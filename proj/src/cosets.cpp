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

#include "negafactor/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "negafactor/errors.hpp"
#include "negafactor/intmath.hpp"

namespace negafactor {

u64 theta(u64 n, u64 a) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  return n / std::gcd(n, a % n);
}

u64 mult_order_mod(u64 n, u64 q) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  if (n == 1) return 1;
  u64 base = q % n;
  if (std::gcd(base, n) != 1) {
    fail(ErrorCode::NotCoprime, "order undefined: gcd(" + std::to_string(q) + ", " +
                                    std::to_string(n) + ") > 1");
  }
  u64 acc = base;
  u64 t = 1;
  while (acc != 1) {
    acc = static_cast<u64>(static_cast<u128>(acc) * base % n);
    ++t;
    if (t > n) fail(ErrorCode::InternalVerificationFailure, "order scan exceeded modulus");
  }
  return t;
}

u32 two_adic(u64 x) {
  if (x == 0) fail(ErrorCode::InvalidArgument, "two_adic of zero");
  return static_cast<u32>(__builtin_ctzll(x));
}

Coset coset(u64 q, u64 n, u64 a) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  if (n > 1 && std::gcd(q % n, n) != 1) {
    fail(ErrorCode::NotCoprime, "multiplier shares a factor with the modulus");
  }
  Coset c;
  c.n = n;
  c.q = q;
  u64 start = a % n;
  u64 x = start;
  do {
    c.elements.push_back(x);
    x = static_cast<u64>(static_cast<u128>(x) * q % n);
  } while (x != start);
  std::sort(c.elements.begin(), c.elements.end());
  c.rep = c.elements.front();
  return c;
}

RepresentativeSets representative_sets(u64 q, u64 n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  RepresentativeSets sets;
  sets.n = n;
  sets.q = q;
  std::vector<bool> seen(n, false);
  for (u64 a = 0; a < n; ++a) {
    if (seen[a]) continue;
    Coset c = coset(q, n, a);
    for (u64 x : c.elements) seen[x] = true;
    sets.all.push_back(a);
    if (n % 2 == 0) {
      (a % 2 == 1 ? sets.odd : sets.even).push_back(a);
    }
  }
  return sets;
}

bool coset_parity_uniform(u64 q, u64 n_even) {
  if (n_even == 0 || n_even % 2 != 0) {
    fail(ErrorCode::InvalidArgument, "parity check requires an even modulus");
  }
  std::vector<bool> seen(n_even, false);
  for (u64 a = 0; a < n_even; ++a) {
    if (seen[a]) continue;
    Coset c = coset(q, n_even, a);
    for (u64 x : c.elements) {
      seen[x] = true;
      if (x % 2 != a % 2) return false;
    }
  }
  return true;
}

const char* to_string(CosetTransition t) {
  switch (t) {
    case CosetTransition::Splits: return "splits";
    case CosetTransition::Merges: return "merges";
    case CosetTransition::Mixed: return "mixed";
  }
  return "unknown";
}

CosetTransition coset_split_structure(u64 q, u64 n_prime, u32 i) {
  if (q < 3 || q % 2 == 0) fail(ErrorCode::EvenCharacteristic, "q must be odd and >= 3");
  if (n_prime % 2 == 0) fail(ErrorCode::InvalidArgument, "n' must be odd");
  if (i == 0 || i > 40) fail(ErrorCode::InvalidArgument, "exponent out of range");
  u64 ord = mult_order_mod(n_prime, q);  // also rejects gcd(q, n') > 1

  u64 m_low = (static_cast<u64>(1) << i) * n_prime;
  u64 m_high = m_low * 2;

  bool all_split = true;
  bool all_merge = true;
  for (u64 a = 1; a < m_low; a += 2) {
    Coset low = coset(q, m_low, a);
    Coset up = coset(q, m_high, a);
    Coset shifted = coset(q, m_high, a + m_low);
    if (up.elements != shifted.elements) {
      all_merge = false;
    } else {
      all_split = false;
      // Absorption must be exactly the union with the shifted copy.
      std::vector<u64> expect = low.elements;
      for (u64 x : low.elements) expect.push_back(x + m_low);
      std::sort(expect.begin(), expect.end());
      if (up.elements != expect) {
        all_merge = false;
      }
    }
    if (!all_split && !all_merge) break;
  }

  CosetTransition computed = all_split ? CosetTransition::Splits
                             : all_merge ? CosetTransition::Merges
                                         : CosetTransition::Mixed;

  // Closed-form prediction where one exists.
  u32 beta = two_adic_u128(static_cast<u128>(q) * q - 1);
  u32 lambda = two_adic(ord);
  std::optional<CosetTransition> predicted;
  if (lambda == 0) {
    if (q % 4 == 1) {
      predicted = (i <= beta - 2) ? CosetTransition::Splits : CosetTransition::Merges;
    } else {
      if (i == 1) {
        predicted = CosetTransition::Merges;
      } else if (i <= beta - 1) {
        predicted = CosetTransition::Splits;
      } else {
        predicted = CosetTransition::Merges;
      }
    }
  } else if (i >= lambda + beta - 1) {
    predicted = CosetTransition::Merges;
  }

  if (predicted && *predicted != computed) {
    fail(ErrorCode::InternalVerificationFailure,
         std::string("transition disagrees with prediction: computed ") +
             to_string(computed) + ", predicted " + to_string(*predicted));
  }
  if (lambda == 0 && computed == CosetTransition::Mixed) {
    fail(ErrorCode::MixedStructure, "mixed transition with odd order signals a bug");
  }
  return computed;
}

}  // namespace negafactor
