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

#include "negafactor/negacyclic.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "negafactor/errors.hpp"
#include "negafactor/intmath.hpp"

namespace negafactor {

namespace {

u64 checked_shift_mul(u32 exponent, u64 factor) {
  if (exponent >= 63) {
    fail(ErrorCode::CapabilityExceeded,
         "2^" + std::to_string(exponent) + " exceeds the supported range");
  }
  u64 pow2 = u64(1) << exponent;
  if (factor > std::numeric_limits<u64>::max() / pow2) {
    fail(ErrorCode::CapabilityExceeded, "length exceeds 64 bits");
  }
  return pow2 * factor;
}

u64 pow_u64_checked(u64 base, u32 exp) {
  u64 out = 1;
  for (u32 k = 0; k < exp; ++k) {
    if (out > std::numeric_limits<u64>::max() / base) {
      fail(ErrorCode::CapabilityExceeded, "power exceeds 64 bits");
    }
    out *= base;
  }
  return out;
}

Poly xn_plus_1(const FieldSpec& spec, u64 n) {
  std::vector<FieldElement> coeffs(n + 1, zero(spec));
  coeffs.front() = one(spec);
  coeffs.back() = one(spec);
  return Poly::from_coeffs(spec, std::move(coeffs));
}

}  // namespace

u32 lifting_base_exponent(u64 q, u64 nprime) {
  CaseProfile pr = case_profile(q, nprime, 0, 0);
  if (pr.lambda == 0 && pr.residue == 3) return pr.beta - 1;
  return pr.lambda + pr.beta - 2;
}

CodeCount count_codes(u64 q, u64 n) {
  Decomposition d = decompose(n, q);
  u32 k = lifting_base_exponent(q, d.nprime);
  CodeCount result;
  result.below_threshold = d.i < k;
  u32 count_at = std::min(d.i, k);
  u64 distinct = count_factors_sum(q, checked_shift_mul(count_at, d.nprime));
  u64 p = prime_power_split(q).first;
  result.count = BigUInt::power(pow_u64_checked(p, d.s) + 1, distinct);
  return result;
}

std::optional<NegacyclicCode> CodeFamily::next() {
  if (emitted_ >= bound_) return std::nullopt;

  Poly generator = Poly::one(spec_);
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    for (u64 e = 0; e < exponents_[j]; ++e) generator = generator * factors_[j];
  }

  NegacyclicCode code;
  code.length = n_;
  code.generator = generator;
  code.dimension = n_ - static_cast<u64>(generator.degree());
  ++emitted_;

  // Mixed-radix increment, first factor least significant.
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (++exponents_[j] < radix_) break;
    exponents_[j] = 0;
  }
  return code;
}

CodeFamily enumerate_codes(const FieldSpec& spec, u64 n,
                           std::optional<u64> cap) {
  if (!spec.valid()) fail(ErrorCode::InvalidArgument, "invalid field");
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  if (cap && *cap == 0) fail(ErrorCode::InvalidArgument, "cap must be >= 1");

  FactorizationReport report = factor_xn_plus_1(spec, n);

  CodeFamily family;
  family.spec_ = spec;
  family.n_ = n;
  family.k_ = lifting_base_exponent(report.q, report.profile.nprime);
  family.base_length_ =
      pow_u64_checked(spec.p(), report.profile.s) *
      checked_shift_mul(family.k_, report.profile.nprime);
  CodeCount cc = count_codes(report.q, n);
  family.total_ = cc.count;
  family.below_threshold_ = cc.below_threshold;

  family.radix_ = pow_u64_checked(spec.p(), report.profile.s) + 1;
  family.factors_.reserve(report.factors.factors.size());
  for (const auto& [f, mult] : report.factors.factors) {
    (void)mult;
    family.factors_.push_back(f);
  }
  family.exponents_.assign(family.factors_.size(), 0);

  u64 full = family.total_.fits_u64()
                 ? family.total_.to_u64()
                 : std::numeric_limits<u64>::max();
  if (cap) {
    family.bound_ = std::min(*cap, full);
  } else if (full > kEnumerationHardLimit) {
    fail(ErrorCode::CapabilityExceeded,
         "family of " + family.total_.to_string() +
             " codes needs an explicit cap");
  } else {
    family.bound_ = full;
  }
  family.truncated_ = BigUInt(family.bound_) < family.total_;
  return family;
}

Poly lift_generator(const Poly& g, u64 q, u64 n_from, u64 n_to) {
  if (!g.valid()) fail(ErrorCode::InvalidArgument, "invalid generator");
  if (!g.spec().order_fits_u128() || g.spec().order_u128() != u128(q)) {
    fail(ErrorCode::FieldMismatch, "generator is not over F_" + std::to_string(q));
  }
  Decomposition from = decompose(n_from, q);
  Decomposition to = decompose(n_to, q);
  if (from.s != to.s || from.nprime != to.nprime || to.i < from.i) {
    fail(ErrorCode::IncompatibleLengths,
         "cannot lift length " + std::to_string(n_from) + " to " +
             std::to_string(n_to));
  }
  if (!g.is_monic()) {
    fail(ErrorCode::NotADivisor, "generator must be monic");
  }
  if (!divmod(xn_plus_1(g.spec(), n_from), g).rem.is_zero()) {
    fail(ErrorCode::NotADivisor,
         "generator does not divide x^" + std::to_string(n_from) + " + 1");
  }
  return substitute_power(g, checked_shift_mul(to.i - from.i, 1));
}

}  // namespace negafactor
