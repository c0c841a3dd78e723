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

#ifndef NEGAFACTOR_FACTORIZER_HPP
#define NEGAFACTOR_FACTORIZER_HPP

#include <string>

#include "negafactor/poly.hpp"

namespace negafactor {

/// n = p^s * 2^i * n' with n' odd and coprime to the characteristic.
struct Decomposition {
  u32 s = 0;
  u32 i = 0;
  u64 nprime = 1;
};

/// Splits n over the characteristic of q; q must be an odd prime power.
Decomposition decompose(u64 n, u64 q);

/// Which leg of the closed-form pipeline a case (q, n', i) lands on.  Tier I
/// is ord_{n'}(q) odd (lambda == 0), split by q mod 4 into i/ii; tier II is
/// lambda >= 1.  Within a tier: `a` legs are answered directly, `b` legs
/// enumerate orbit pairs below the stable threshold, `c` legs substitute
/// x^{2^j} into the factors held at the threshold.
enum class Branch {
  I_i_a,   // lambda == 0, q % 4 == 1, i == 0
  I_i_b,   // lambda == 0, q % 4 == 1, 1 <= i <= beta - 2
  I_i_c,   // lambda == 0, q % 4 == 1, i >= beta - 1
  I_ii_a,  // lambda == 0, q % 4 == 3, i <= 1
  I_ii_b,  // lambda == 0, q % 4 == 3, 2 <= i <= beta - 1
  I_ii_c,  // lambda == 0, q % 4 == 3, i >= beta
  II_i,    // lambda >= 1, i <= lambda + beta - 2
  II_ii,   // lambda >= 1, i >= lambda + beta - 1
};

const char* branch_label(Branch b);

/// Invariants of a case: beta is the 2-adic valuation of q^2 - 1 (always
/// >= 3), lambda the valuation of ord_{n'}(q), residue q mod 4.
struct CaseProfile {
  u64 q = 0;
  u64 nprime = 1;
  u32 i = 0;
  u32 s = 0;
  u64 ord_nprime = 1;
  u32 lambda = 0;
  u32 beta = 0;
  u32 residue = 0;
  Branch branch = Branch::I_i_a;
};

CaseProfile case_profile(u64 q, u64 nprime, u32 i, u32 s);

/// ord_{2^i}(q) in closed form; agrees with mult_order_mod(2^i, q).
u64 ord_two_power(u64 q, u32 i);

/// Number of distinct monic irreducible factors of x^n + 1 over F_q as a
/// divisor sum: sum over d | n' of phi(2^{i+1} d) / ord_{2^{i+1} d}(q).
u64 count_factors_sum(u64 q, u64 n);

/// Same count from the case table, constant-time given the profile.
u64 count_factors_fast(const CaseProfile& profile);

/// Smallest exponent from which the factor count of x^{2^i n'} + 1 stops
/// changing: lambda + beta - 1 when lambda == 0 and q % 4 == 3, else
/// lambda + beta - 2.
u32 stable_threshold(u64 q, u64 nprime);

enum class FactorMethod {
  Direct,                 // orbit enumeration at the target modulus
  SplitEnumeration,       // orbit enumeration below the stable threshold
  RecursiveSubstitution,  // x^{2^j} substitution into threshold factors
};

const char* method_label(FactorMethod m);

struct FactorizationOptions {
  /// Re-multiply the factors and Rabin-check each one before returning;
  /// InternalVerificationFailure on any mismatch.
  bool verify = true;
};

struct FactorizationReport {
  u64 q = 0;
  u64 n = 0;
  CaseProfile profile;
  FactorMethod method = FactorMethod::Direct;
  FactorMultiset factors;
  u64 distinct_count = 0;
};

/// Factors x^n + 1 over the given field through the closed-form pipeline.
/// Every factor appears with multiplicity p^s; the distinct factors are the
/// minimal polynomials of the odd orbits modulo 2^{i+1} n'.
FactorizationReport factor_xn_plus_1(const FieldSpec& spec, u64 n,
                                     const FactorizationOptions& options = {});

}  // namespace negafactor

#endif  // NEGAFACTOR_FACTORIZER_HPP
