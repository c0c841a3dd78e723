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

#include "negafactor/factorizer.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "negafactor/cosets.hpp"
#include "negafactor/errors.hpp"
#include "negafactor/intmath.hpp"

namespace negafactor {

namespace {

// Orbit enumeration stays in memory proportional to the doubled modulus.
constexpr u64 kMaxEnumeratedModulus = u64(1) << 26;

u64 checked_pow2_times(u32 exponent, u64 factor) {
  if (exponent >= 63) {
    fail(ErrorCode::CapabilityExceeded,
         "2^" + std::to_string(exponent) + " exceeds the supported range");
  }
  u64 pow2 = u64(1) << exponent;
  if (factor > std::numeric_limits<u64>::max() / pow2) {
    fail(ErrorCode::CapabilityExceeded, "modulus exceeds 64 bits");
  }
  return pow2 * factor;
}

u64 field_order_u64(const FieldSpec& spec) {
  if (!spec.order_fits_u128() ||
      spec.order_u128() > u128(std::numeric_limits<u64>::max())) {
    fail(ErrorCode::CapabilityExceeded,
         "field order exceeds 64 bits: " + spec.to_string());
  }
  return static_cast<u64>(spec.order_u128());
}

// Distinct monic irreducible factors of x^{2^i n'} + 1: the minimal
// polynomials of zeta^a over the base field, one per odd orbit
// representative a modulo 2^{i+1} n', for zeta of order 2^{i+1} n'.
std::vector<Poly> enumerate_distinct(const FieldSpec& spec, u64 q, u64 nprime,
                                     u32 i) {
  u64 doubled = checked_pow2_times(i + 1, nprime);
  if (doubled > kMaxEnumeratedModulus) {
    fail(ErrorCode::CapabilityExceeded,
         "orbit modulus too large: " + std::to_string(doubled));
  }
  RepresentativeSets reps = representative_sets(q, doubled);
  std::vector<Poly> out;
  out.reserve(reps.odd.size());
  for (u64 a : reps.odd) {
    out.push_back(minimal_polynomial(spec, doubled, coset(q, doubled, a)));
  }
  return out;
}

}  // namespace

Decomposition decompose(u64 n, u64 q) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  auto [p, m] = prime_power_split(q);
  (void)m;
  if (p == 2) {
    fail(ErrorCode::EvenCharacteristic, "characteristic must be odd");
  }
  Decomposition d;
  while (n % p == 0) {
    n /= p;
    ++d.s;
  }
  d.i = two_adic(n);
  d.nprime = n >> d.i;
  return d;
}

const char* branch_label(Branch b) {
  switch (b) {
    case Branch::I_i_a:
      return "I.i.a";
    case Branch::I_i_b:
      return "I.i.b";
    case Branch::I_i_c:
      return "I.i.c";
    case Branch::I_ii_a:
      return "I.ii.a";
    case Branch::I_ii_b:
      return "I.ii.b";
    case Branch::I_ii_c:
      return "I.ii.c";
    case Branch::II_i:
      return "II.i";
    case Branch::II_ii:
      return "II.ii";
  }
  fail(ErrorCode::InvalidArgument, "unknown branch");
}

CaseProfile case_profile(u64 q, u64 nprime, u32 i, u32 s) {
  auto [p, m] = prime_power_split(q);
  (void)m;
  if (p == 2) {
    fail(ErrorCode::EvenCharacteristic, "characteristic must be odd");
  }
  if (nprime == 0 || nprime % 2 == 0) {
    fail(ErrorCode::InvalidArgument, "n' must be odd and positive");
  }
  if (nprime % p == 0) {
    fail(ErrorCode::NotCoprime, "n' must be coprime to the characteristic");
  }
  CaseProfile pr;
  pr.q = q;
  pr.nprime = nprime;
  pr.i = i;
  pr.s = s;
  pr.ord_nprime = mult_order_mod(nprime, q);
  pr.lambda = (pr.ord_nprime % 2 == 0) ? two_adic(pr.ord_nprime) : 0;
  pr.beta = two_adic_u128(u128(q) * q - 1);
  pr.residue = static_cast<u32>(q % 4);
  if (pr.lambda == 0) {
    if (pr.residue == 1) {
      pr.branch = (i == 0)            ? Branch::I_i_a
                  : (i <= pr.beta - 2) ? Branch::I_i_b
                                       : Branch::I_i_c;
    } else {
      pr.branch = (i <= 1)             ? Branch::I_ii_a
                  : (i <= pr.beta - 1) ? Branch::I_ii_b
                                       : Branch::I_ii_c;
    }
  } else {
    pr.branch =
        (i <= pr.lambda + pr.beta - 2) ? Branch::II_i : Branch::II_ii;
  }
  return pr;
}

u64 ord_two_power(u64 q, u32 i) {
  if (q < 3 || q % 2 == 0) {
    fail(ErrorCode::InvalidArgument, "q must be odd and at least 3");
  }
  if (i == 0) return 1;
  u32 beta = two_adic_u128(u128(q) * q - 1);
  u32 tail = (i + 1 > beta) ? i + 1 - beta : 0;
  if (tail >= 64) {
    fail(ErrorCode::CapabilityExceeded, "order exceeds 64 bits");
  }
  if (q % 4 == 1) {
    return (i <= beta - 1) ? 1 : u64(1) << tail;
  }
  if (i == 1) return 1;
  return (i <= beta) ? 2 : u64(1) << tail;
}

u64 count_factors_sum(u64 q, u64 n) {
  Decomposition d = decompose(n, q);
  u64 total = 0;
  for (u64 div : divisors(d.nprime)) {
    u64 modulus = checked_pow2_times(d.i + 1, div);
    total += euler_phi(modulus) / mult_order_mod(modulus, q);
  }
  return total;
}

u64 count_factors_fast(const CaseProfile& pr) {
  if (pr.lambda == 0) {
    u64 base = count_factors_sum(pr.q, pr.nprime);
    u32 shift = 0;
    if (pr.residue == 1) {
      shift = std::min(pr.i, pr.beta - 2);
    } else if (pr.i >= 1) {
      shift = std::min(pr.i - 1, pr.beta - 2);
    }
    return base << shift;
  }
  u32 cap = std::min(pr.i, pr.lambda + pr.beta - 2);
  return count_factors_sum(pr.q, checked_pow2_times(cap, pr.nprime));
}

u32 stable_threshold(u64 q, u64 nprime) {
  CaseProfile pr = case_profile(q, nprime, 0, 0);
  if (pr.lambda == 0 && pr.residue == 3) return pr.beta - 1;
  return pr.lambda + pr.beta - 2;
}

const char* method_label(FactorMethod m) {
  switch (m) {
    case FactorMethod::Direct:
      return "direct";
    case FactorMethod::SplitEnumeration:
      return "split-enumeration";
    case FactorMethod::RecursiveSubstitution:
      return "recursive-substitution";
  }
  fail(ErrorCode::InvalidArgument, "unknown method");
}

FactorizationReport factor_xn_plus_1(const FieldSpec& spec, u64 n,
                                     const FactorizationOptions& options) {
  if (!spec.valid()) fail(ErrorCode::InvalidArgument, "invalid field");
  u64 q = field_order_u64(spec);
  Decomposition d = decompose(n, q);

  FactorizationReport report;
  report.q = q;
  report.n = n;
  report.profile = case_profile(q, d.nprime, d.i, d.s);
  const CaseProfile& pr = report.profile;

  // Substitution legs rebuild the factors held at the last exponent where
  // the orbit structure still moves, then apply x -> x^{2^j}.
  bool substitute = false;
  u32 base_i = pr.i;
  switch (pr.branch) {
    case Branch::I_i_a:
    case Branch::II_i:
      report.method = FactorMethod::Direct;
      break;
    case Branch::I_ii_a:
      if (pr.i == 0) {
        report.method = FactorMethod::Direct;
      } else {
        report.method = FactorMethod::RecursiveSubstitution;
        substitute = true;
        base_i = 0;
      }
      break;
    case Branch::I_i_b:
    case Branch::I_ii_b:
      report.method = FactorMethod::SplitEnumeration;
      break;
    case Branch::I_i_c:
      report.method = FactorMethod::RecursiveSubstitution;
      substitute = true;
      base_i = pr.beta - 2;
      break;
    case Branch::I_ii_c:
      report.method = FactorMethod::RecursiveSubstitution;
      substitute = true;
      base_i = pr.beta - 1;
      break;
    case Branch::II_ii:
      report.method = FactorMethod::RecursiveSubstitution;
      substitute = true;
      base_i = pr.lambda + pr.beta - 1;
      break;
  }

  std::vector<Poly> distinct = enumerate_distinct(spec, q, d.nprime, base_i);
  if (substitute) {
    u64 step = checked_pow2_times(pr.i - base_i, 1);
    for (Poly& f : distinct) f = substitute_power(f, step);
  }

  u64 multiplicity = 1;
  for (u32 k = 0; k < d.s; ++k) multiplicity *= spec.p();

  report.factors.unit = one(spec);
  report.factors.factors.reserve(distinct.size());
  for (Poly& f : distinct) {
    report.factors.factors.emplace_back(std::move(f), multiplicity);
  }
  canonical_sort(report.factors.factors);
  report.distinct_count = report.factors.factors.size();

  if (options.verify) {
    if (report.distinct_count != count_factors_fast(pr) ||
        report.distinct_count != count_factors_sum(q, n)) {
      fail(ErrorCode::InternalVerificationFailure,
           "factor count disagrees with the closed-form count");
    }
    std::vector<FieldElement> target(n + 1, zero(spec));
    target.front() = one(spec);
    target.back() = one(spec);
    if (reassemble(report.factors) != Poly::from_coeffs(spec, target)) {
      fail(ErrorCode::InternalVerificationFailure,
           "factor product does not reassemble to x^n + 1");
    }
    for (const auto& [f, mult] : report.factors.factors) {
      (void)mult;
      if (!is_irreducible(f)) {
        fail(ErrorCode::InternalVerificationFailure,
             "claimed factor fails the irreducibility test: " + f.to_string());
      }
    }
  }
  return report;
}

}  // namespace negafactor
