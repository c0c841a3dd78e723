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

#include "negafactor/intmath.hpp"

#include <algorithm>
#include <numeric>

#include "negafactor/errors.hpp"

namespace negafactor {

namespace {

constexpr u64 kTrialLimit = 1u << 20;
constexpr u64 kRhoIterationBudget = 1u << 26;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

u128 mul_mod(u128 a, u128 b, u128 m) {
  a %= m;
  b %= m;
  if (m <= ~static_cast<u64>(0)) return (a * b) % m;
  // Double-and-add; the product would overflow 128 bits otherwise.
  u128 result = 0;
  while (b != 0) {
    if (b & 1) {
      result += a;
      if (result >= m) result -= m;
    }
    a <<= 1;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return result;
}

u128 pow_mod(u128 base, u128 exp, u128 m) {
  if (m == 1) return 0;
  u128 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u128 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u128 d = n - 1;
  u32 r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u128 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (u32 k = 1; k < r; ++k) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

u128 brent_rho(u128 n) {
  if ((n & 1) == 0) return 2;
  u64 total_spent = 0;
  for (u64 c = 1;; ++c) {
    auto step = [&](u128 v) { return (mul_mod(v, v, n) + c) % n; };
    u128 saved = 2, y = 2, d = 1;
    u64 power = 1, lam = 0;
    bool closed = false;
    while (d == 1 && !closed) {
      if (lam == power) {
        saved = y;
        power *= 2;
        lam = 0;
      }
      // Batch gcd over up to 64 steps keeps the gcd cost negligible.
      u128 prod = 1;
      u64 batch = std::min<u64>(64, power - lam);
      for (u64 k = 0; k < batch; ++k) {
        y = step(y);
        u128 diff = saved > y ? saved - y : y - saved;
        if (diff == 0) {
          closed = true;
          break;
        }
        prod = mul_mod(prod, diff, n);
      }
      lam += batch;
      total_spent += batch;
      d = gcd_u128(prod, n);
      if (total_spent > kRhoIterationBudget) {
        fail(ErrorCode::CapabilityExceeded, "factorization budget exhausted");
      }
    }
    if (d != 1 && d != n) return d;
    // Cycle closed without a factor, or every factor collapsed into d == n;
    // retry with the next polynomial increment.
  }
}

void factor_into(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u128 d = brent_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<u128, u32>> factorize(u128 n) {
  std::vector<std::pair<u128, u32>> result;
  if (n == 0) fail(ErrorCode::InvalidArgument, "factorize(0)");
  for (u64 p = 2; p < kTrialLimit && static_cast<u128>(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      u32 e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      result.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::vector<u128> rest;
    factor_into(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t k = 0; k < rest.size();) {
      std::size_t j = k;
      while (j < rest.size() && rest[j] == rest[k]) ++j;
      result.emplace_back(rest[k], static_cast<u32>(j - k));
      k = j;
    }
  }
  return result;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> primes;
  for (const auto& [p, e] : factorize(n)) primes.push_back(static_cast<u64>(p));
  return primes;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (u64 p : prime_factors(n)) result -= result / p;
  return result;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t base = divs.size();
    u64 pk = 1;
    for (u32 k = 1; k <= e; ++k) {
      pk *= static_cast<u64>(p);
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

u32 two_adic_u128(u128 x) {
  if (x == 0) fail(ErrorCode::InvalidArgument, "two_adic of zero");
  u32 e = 0;
  while ((x & 1) == 0) {
    x >>= 1;
    ++e;
  }
  return e;
}

std::pair<u64, u32> prime_power_split(u64 q) {
  if (q < 2) fail(ErrorCode::InvalidArgument, "not a prime power: " + std::to_string(q));
  auto factors = factorize(q);
  if (factors.size() != 1) {
    fail(ErrorCode::InvalidArgument, "not a prime power: " + std::to_string(q));
  }
  return {static_cast<u64>(factors[0].first), factors[0].second};
}

}  // namespace negafactor
