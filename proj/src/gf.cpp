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

#include "negafactor/gf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "negafactor/errors.hpp"
#include "negafactor/intmath.hpp"
#include "negafactor/poly.hpp"

namespace negafactor {

namespace {

// Dense polynomials over F_p as little-endian coefficient vectors, used for
// extension arithmetic and the canonical modulus search.
using Vec = std::vector<u64>;

// Extension fields keep p small enough that schoolbook accumulators cannot
// overflow and the modulus search space stays enumerable.
constexpr u64 kMaxExtensionPrime = 1u << 16;
constexpr u64 kGeneratorScanLimit = 1u << 20;

void trim_vec(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec mul_vec(const Vec& a, const Vec& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    u64 ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<u64>((static_cast<u128>(ai) * b[j] + out[i + j]) % p);
    }
  }
  trim_vec(out);
  return out;
}

// Remainder modulo a monic modulus.
void reduce_vec(Vec& a, const Vec& mod, u64 p) {
  std::size_t deg_mod = mod.size() - 1;
  while (a.size() > deg_mod) {
    u64 lead = a.back();
    std::size_t shift = a.size() - 1 - deg_mod;
    if (lead != 0) {
      for (std::size_t k = 0; k < deg_mod; ++k) {
        u128 sub = static_cast<u128>(lead) * mod[k] % p;
        u64& slot = a[shift + k];
        slot = static_cast<u64>((slot + p - static_cast<u64>(sub)) % p);
      }
    }
    a.pop_back();
    trim_vec(a);
    if (a.size() <= deg_mod) break;
  }
  trim_vec(a);
}

Vec mulmod_vec(const Vec& a, const Vec& b, const Vec& mod, u64 p) {
  Vec out = mul_vec(a, b, p);
  reduce_vec(out, mod, p);
  return out;
}

Vec powmod_vec(Vec base, u128 exp, const Vec& mod, u64 p) {
  Vec result{1};
  reduce_vec(base, mod, p);
  while (exp != 0) {
    if (exp & 1) result = mulmod_vec(result, base, mod, p);
    base = mulmod_vec(base, base, mod, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod_p(u64 a, u64 p) {
  if (a % p == 0) fail(ErrorCode::DivisionByZero, "inverse of zero residue");
  return static_cast<u64>(pow_mod(a % p, p - 2, p));
}

Vec scale_vec(Vec v, u64 c, u64 p) {
  for (auto& x : v) x = static_cast<u64>(static_cast<u128>(x) * c % p);
  trim_vec(v);
  return v;
}

Vec sub_vec(const Vec& a, const Vec& b, u64 p) {
  Vec out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    u64 av = k < a.size() ? a[k] : 0;
    u64 bv = k < b.size() ? b[k] : 0;
    out[k] = (av + p - bv) % p;
  }
  trim_vec(out);
  return out;
}

Vec gcd_vec(Vec a, Vec b, u64 p) {
  trim_vec(a);
  trim_vec(b);
  while (!b.empty()) {
    // Remainder of a by b after making b monic.
    Vec bm = scale_vec(b, inv_mod_p(b.back(), p), p);
    Vec r = a;
    while (r.size() >= bm.size() && !r.empty()) {
      u64 lead = r.back();
      std::size_t shift = r.size() - bm.size();
      if (lead != 0) {
        for (std::size_t k = 0; k + 1 < bm.size(); ++k) {
          u128 sub = static_cast<u128>(lead) * bm[k] % p;
          r[shift + k] = static_cast<u64>((r[shift + k] + p - static_cast<u64>(sub)) % p);
        }
      }
      r.pop_back();
      trim_vec(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale_vec(a, inv_mod_p(a.back(), p), p);
  return a;
}

// Iterated-Frobenius irreducibility check for a monic degree-m candidate:
// no irreducible factor of degree <= m/2 exists iff every gcd below is 1.
bool is_irreducible_vec(const Vec& f, u64 p) {
  std::size_t m = f.size() - 1;
  if (m == 1) return true;
  Vec h{0, 1};
  for (std::size_t j = 1; j <= m / 2; ++j) {
    h = powmod_vec(h, p, f, p);
    Vec diff = sub_vec(h, Vec{0, 1}, p);
    if (diff.empty()) return false;  // x^{p^j} == x below full degree
    if (gcd_vec(diff, f, p).size() != 1) return false;
  }
  return true;
}

Vec canonical_modulus(u64 p, u32 m) {
  if (m == 1) return Vec{0, 1};
  // Scan coefficient tuples (c0,...,c_{m-1}) in lexicographic order with the
  // constant term most significant; the first irreducible hit is canonical.
  // c0 == 0 is skipped (x divides the candidate).
  std::vector<u64> digits(m, 0);
  digits[0] = 1;
  while (true) {
    Vec f(m + 1, 0);
    for (u32 k = 0; k < m; ++k) f[k] = digits[k];
    f[m] = 1;
    if (is_irreducible_vec(f, p)) return f;
    // Increment with the last digit fastest.
    u32 pos = m;
    while (pos-- > 0) {
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) fail(ErrorCode::InternalVerificationFailure, "modulus scan exhausted");
    }
  }
}

}  // namespace

u64 FieldSpec::p() const { return data_->p; }
u32 FieldSpec::m() const { return data_->m; }
const std::vector<u64>& FieldSpec::modulus() const { return data_->mod; }

bool FieldSpec::operator==(const FieldSpec& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->p == other.data_->p && data_->m == other.data_->m;
}

double FieldSpec::order_log2() const {
  return static_cast<double>(data_->m) * std::log2(static_cast<double>(data_->p));
}

bool FieldSpec::order_fits_u128() const {
  u128 acc = 1;
  for (u32 k = 0; k < data_->m; ++k) {
    if (acc > (~static_cast<u128>(0)) / data_->p) return false;
    acc *= data_->p;
  }
  return true;
}

u128 FieldSpec::order_u128() const {
  if (!order_fits_u128()) fail(ErrorCode::CapabilityExceeded, "field order exceeds 128 bits");
  u128 acc = 1;
  for (u32 k = 0; k < data_->m; ++k) acc *= data_->p;
  return acc;
}

BigUInt FieldSpec::order() const { return BigUInt::power(data_->p, data_->m); }

std::string FieldSpec::to_string() const {
  std::ostringstream out;
  out << "GF(" << data_->p << "^" << data_->m << "; modulus=[";
  for (std::size_t k = 0; k < data_->mod.size(); ++k) {
    if (k) out << ",";
    out << data_->mod[k];
  }
  out << "])";
  return out.str();
}

FieldSpec make_field(u64 p, u32 m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "extension degree must be positive");
  if (p == 2) fail(ErrorCode::EvenCharacteristic, "characteristic 2 is out of scope");
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m > kMaxExtensionDegree) {
    fail(ErrorCode::CapabilityExceeded, "extension degree " + std::to_string(m) + " exceeds limit");
  }
  if (m >= 2 && p >= kMaxExtensionPrime) {
    fail(ErrorCode::CapabilityExceeded, "extension fields require p < 65536");
  }

  static std::mutex cache_mutex;
  static std::map<std::pair<u64, u32>, FieldSpec> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find({p, m});
  if (it != cache.end()) return it->second;

  auto data = std::make_shared<FieldSpec::Data>();
  data->p = p;
  data->m = m;
  data->mod = canonical_modulus(p, m);
  FieldSpec spec(std::move(data));
  cache.emplace(std::make_pair(p, m), spec);
  return spec;
}

FieldElement::FieldElement(FieldSpec spec, std::vector<u64> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](u64 c) { return c == 0; });
}

bool FieldElement::operator==(const FieldElement& other) const {
  return spec_ == other.spec_ && coeffs_ == other.coeffs_;
}

int FieldElement::cmp(const FieldElement& a, const FieldElement& b) {
  if (a.coeffs_ < b.coeffs_) return -1;
  if (b.coeffs_ < a.coeffs_) return 1;
  return 0;
}

std::string FieldElement::to_string() const {
  if (spec_.m() == 1) return std::to_string(coeffs_[0]);
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out << ",";
    out << coeffs_[k];
  }
  out << "]";
  return out.str();
}

FieldElement zero(const FieldSpec& spec) {
  return FieldElement(spec, std::vector<u64>(spec.m(), 0));
}

FieldElement one(const FieldSpec& spec) {
  std::vector<u64> c(spec.m(), 0);
  c[0] = 1;
  return FieldElement(spec, std::move(c));
}

FieldElement make_element(const FieldSpec& spec, std::vector<u64> coeffs) {
  if (coeffs.size() > spec.m()) {
    fail(ErrorCode::InvalidArgument, "coefficient vector longer than extension degree");
  }
  coeffs.resize(spec.m(), 0);
  for (auto& c : coeffs) c %= spec.p();
  return FieldElement(spec, std::move(coeffs));
}

FieldElement element_of_index(const FieldSpec& spec, u64 index) {
  std::vector<u64> c(spec.m(), 0);
  for (u32 k = 0; k < spec.m() && index != 0; ++k) {
    c[k] = index % spec.p();
    index /= spec.p();
  }
  return FieldElement(spec, std::move(c));
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.valid() || !b.valid() || a.spec() != b.spec()) {
    fail(ErrorCode::FieldMismatch, "operands belong to different fields");
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  u64 p = a.spec().p();
  std::vector<u64> c(a.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = (a.coeffs()[k] + b.coeffs()[k]) % p;
  return FieldElement(a.spec(), std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  u64 p = a.spec().p();
  std::vector<u64> c(a.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = (a.coeffs()[k] + p - b.coeffs()[k]) % p;
  return FieldElement(a.spec(), std::move(c));
}

FieldElement negate(const FieldElement& a) {
  u64 p = a.spec().p();
  std::vector<u64> c(a.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = (p - a.coeffs()[k]) % p;
  return FieldElement(a.spec(), std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  u64 p = a.spec().p();
  if (a.spec().m() == 1) {
    u64 prod = static_cast<u64>(static_cast<u128>(a.coeffs()[0]) * b.coeffs()[0] % p);
    return FieldElement(a.spec(), {prod});
  }
  Vec out = mul_vec(a.coeffs(), b.coeffs(), p);
  reduce_vec(out, a.spec().modulus(), p);
  out.resize(a.spec().m(), 0);
  return FieldElement(a.spec(), std::move(out));
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  u64 p = a.spec().p();
  if (a.spec().m() == 1) {
    return FieldElement(a.spec(), {inv_mod_p(a.coeffs()[0], p)});
  }
  // Extended Euclid between the coefficient polynomial and the modulus.
  Vec r0 = a.spec().modulus();
  Vec r1 = a.coeffs();
  trim_vec(r1);
  Vec s0{}, s1{1};
  while (!r1.empty()) {
    // r0 = q * r1 + r2 with r1 made monic on the fly.
    u64 lead_inv = inv_mod_p(r1.back(), p);
    Vec q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    Vec r2 = r0;
    while (r2.size() >= r1.size() && !r2.empty()) {
      u64 coef = static_cast<u64>(static_cast<u128>(r2.back()) * lead_inv % p);
      std::size_t shift = r2.size() - r1.size();
      q[shift] = coef;
      if (coef != 0) {
        for (std::size_t k = 0; k < r1.size(); ++k) {
          u128 sub = static_cast<u128>(coef) * r1[k] % p;
          r2[shift + k] = static_cast<u64>((r2[shift + k] + p - static_cast<u64>(sub)) % p);
        }
      } else {
        r2.pop_back();
        trim_vec(r2);
        continue;
      }
      trim_vec(r2);
    }
    trim_vec(q);
    Vec s2 = sub_vec(s0, mul_vec(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd, a nonzero constant; s0 * a == r0 (mod modulus).
  Vec result = scale_vec(std::move(s0), inv_mod_p(r0[0], p), p);
  reduce_vec(result, a.spec().modulus(), p);
  result.resize(a.spec().m(), 0);
  return FieldElement(a.spec(), std::move(result));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * inverse(b);
}

FieldElement arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  fail(ErrorCode::InvalidArgument, "unknown field operation");
}

FieldElement pow(const FieldElement& base, u128 exp) {
  FieldElement result = one(base.spec());
  FieldElement acc = base;
  while (exp != 0) {
    if (exp & 1) result = result * acc;
    acc = acc * acc;
    exp >>= 1;
  }
  return result;
}

FieldElement pow(const FieldElement& base, const BigUInt& exp) {
  FieldElement result = one(base.spec());
  if (exp.is_zero()) return result;
  for (std::size_t k = exp.bit_length(); k-- > 0;) {
    result = result * result;
    if (exp.bit(k)) result = result * base;
  }
  return result;
}

FieldElement find_generator(const FieldSpec& spec) {
  if (!spec.order_fits_u128()) {
    fail(ErrorCode::CapabilityExceeded, "group order exceeds 128 bits");
  }
  u128 group = spec.order_u128() - 1;
  auto factors = factorize(group);
  for (u64 idx = 2; idx < kGeneratorScanLimit; ++idx) {
    FieldElement g = element_of_index(spec, idx);
    bool generator = true;
    for (const auto& [r, e] : factors) {
      if (pow(g, group / r).is_one()) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  fail(ErrorCode::RootNotFound, "generator scan exhausted");
}

u128 multiplicative_order(const FieldElement& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "order of zero is undefined");
  if (!a.spec().order_fits_u128()) {
    fail(ErrorCode::CapabilityExceeded, "group order exceeds 128 bits");
  }
  u128 order = a.spec().order_u128() - 1;
  for (const auto& [r, e] : factorize(order)) {
    for (u32 k = 0; k < e; ++k) {
      if (pow(a, order / r).is_one()) {
        order /= r;
      } else {
        break;
      }
    }
  }
  return order;
}

FieldElement nth_root_of_unity(const FieldSpec& spec, u64 n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  if (n == 1) return one(spec);
  u64 qmod = static_cast<u64>(pow_mod(spec.p() % n, spec.m(), n));
  if ((qmod + n - 1) % n != 0) {
    fail(ErrorCode::OrderNotDivisible,
         std::to_string(n) + " does not divide the multiplicative group order");
  }
  if (n == 2) return negate(one(spec));

  if (spec.order_fits_u128()) {
    try {
      FieldElement g = find_generator(spec);
      return pow(g, (spec.order_u128() - 1) / n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapabilityExceeded) throw;
      // Group order resisted factoring; fall through to the direct scan.
    }
  }

  // Exponentiate candidates by (order - 1) / n and keep the first image of
  // exact order n; the candidate scan is deterministic.
  BigUInt exp = spec.order();
  exp.sub_u64(1);
  u64 rem = exp.divmod_u64(n);
  if (rem != 0) fail(ErrorCode::InternalVerificationFailure, "divisibility check drifted");
  auto n_primes = prime_factors(n);
  for (u64 idx = 2; idx < kGeneratorScanLimit; ++idx) {
    FieldElement w = pow(element_of_index(spec, idx), exp);
    if (w.is_one()) continue;
    bool exact = true;
    for (u64 r : n_primes) {
      if (pow(w, static_cast<u128>(n / r)).is_one()) {
        exact = false;
        break;
      }
    }
    if (exact) return w;
  }
  fail(ErrorCode::RootNotFound, "root-of-unity scan exhausted");
}

namespace {

// Root of the subfield modulus inside the superfield, fixed per field pair.
FieldElement embedding_root(const FieldSpec& sub, const FieldSpec& sup) {
  static std::mutex cache_mutex;
  static std::map<std::tuple<u64, u32, u32>, FieldElement> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(sub.p(), sub.m(), sup.m());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<FieldElement> lifted;
  lifted.reserve(sub.modulus().size());
  for (u64 c : sub.modulus()) lifted.push_back(make_element(sup, {c}));
  Poly u = Poly::from_coeffs(sup, std::move(lifted));

  BigUInt half = sup.order();
  half.sub_u64(1);
  half.divmod_u64(2);

  // Split off roots with character sums over shifted arguments; the shift
  // sequence is fixed, so the surviving root is deterministic.
  for (u64 shift = 0; shift < 4096 && u.degree() > 1; ++shift) {
    Poly base = Poly::from_coeffs(sup, {element_of_index(sup, shift), one(sup)});
    Poly w = powmod(base, half, u);
    Poly diff = w - Poly::one(sup);
    Poly g = gcd(diff, u);
    int dg = g.degree();
    if (dg > 0 && dg < u.degree()) {
      Poly other = divmod(u, g).quot;
      u = (g.degree() <= other.degree()) ? g : other;
    }
  }
  if (u.degree() != 1) fail(ErrorCode::RootNotFound, "modulus root scan exhausted");
  FieldElement root = negate(u.coeff(0));
  cache.emplace(key, root);
  return root;
}

}  // namespace

FieldElement embed(const FieldSpec& sub, const FieldSpec& sup, const FieldElement& a) {
  if (a.spec() != sub) fail(ErrorCode::FieldMismatch, "element does not live in the subfield");
  if (sub.p() != sup.p()) fail(ErrorCode::NoEmbedding, "characteristics differ");
  if (sup.m() % sub.m() != 0) {
    fail(ErrorCode::NoEmbedding, "subfield degree does not divide superfield degree");
  }
  if (sub == sup) return a;
  if (sub.m() == 1) return make_element(sup, {a.coeffs()[0]});

  FieldElement rho = embedding_root(sub, sup);
  FieldElement acc = zero(sup);
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    acc = acc * rho + make_element(sup, {a.coeffs()[k]});
  }
  return acc;
}

}  // namespace negafactor
