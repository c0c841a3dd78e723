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

#include "negafactor/poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "negafactor/errors.hpp"
#include "negafactor/intmath.hpp"

namespace negafactor {

Poly poly_from_trimmed(FieldSpec spec, std::vector<FieldElement> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return Poly(std::move(spec), std::move(coeffs));
}

Poly Poly::zero(const FieldSpec& spec) { return poly_from_trimmed(spec, {}); }

Poly Poly::one(const FieldSpec& spec) { return poly_from_trimmed(spec, {negafactor::one(spec)}); }

Poly Poly::x(const FieldSpec& spec) {
  return poly_from_trimmed(spec, {negafactor::zero(spec), negafactor::one(spec)});
}

Poly Poly::from_coeffs(const FieldSpec& spec, std::vector<FieldElement> coeffs) {
  for (const auto& c : coeffs) {
    if (!c.valid() || c.spec() != spec) {
      fail(ErrorCode::FieldMismatch, "coefficient from a different field");
    }
  }
  return poly_from_trimmed(spec, std::move(coeffs));
}

Poly Poly::from_residues(const FieldSpec& spec, const std::vector<u64>& residues) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(residues.size());
  for (u64 r : residues) coeffs.push_back(make_element(spec, {r}));
  return poly_from_trimmed(spec, std::move(coeffs));
}

FieldElement Poly::coeff(std::size_t k) const {
  if (k < coeffs_.size()) return coeffs_[k];
  return negafactor::zero(spec_);
}

FieldElement Poly::lead() const {
  if (coeffs_.empty()) fail(ErrorCode::ZeroElement, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

bool Poly::operator==(const Poly& other) const {
  return spec_ == other.spec_ && coeffs_ == other.coeffs_;
}

int Poly::cmp(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    int c = FieldElement::cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const FieldElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << c.to_string();
    } else {
      if (!c.is_one()) out << c.to_string() << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

namespace {

void require_same_spec(const Poly& a, const Poly& b) {
  if (!a.valid() || !b.valid() || a.spec() != b.spec()) {
    fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  }
}

bool prime_field(const FieldSpec& spec) { return spec.m() == 1; }

std::vector<u64> raw_coeffs(const Poly& f) {
  std::vector<u64> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.coeffs()[0]);
  return out;
}

Poly poly_from_raw(const FieldSpec& spec, std::vector<u64> raw) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(raw.size());
  for (u64 r : raw) coeffs.push_back(FieldElement(spec, {r}));
  return poly_from_trimmed(spec, std::move(coeffs));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  require_same_spec(a, b);
  std::vector<FieldElement> out;
  std::size_t size = std::max(a.coeffs().size(), b.coeffs().size());
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k) out.push_back(a.coeff(k) + b.coeff(k));
  return poly_from_trimmed(a.spec(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_spec(a, b);
  std::vector<FieldElement> out;
  std::size_t size = std::max(a.coeffs().size(), b.coeffs().size());
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k) out.push_back(a.coeff(k) - b.coeff(k));
  return poly_from_trimmed(a.spec(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_spec(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.spec());
  if (prime_field(a.spec())) {
    u64 p = a.spec().p();
    std::vector<u64> av = raw_coeffs(a), bv = raw_coeffs(b);
    std::vector<u64> out(av.size() + bv.size() - 1, 0);
    for (std::size_t i = 0; i < av.size(); ++i) {
      if (av[i] == 0) continue;
      for (std::size_t j = 0; j < bv.size(); ++j) {
        out[i + j] = static_cast<u64>((static_cast<u128>(av[i]) * bv[j] + out[i + j]) % p);
      }
    }
    return poly_from_raw(a.spec(), std::move(out));
  }
  std::vector<FieldElement> out(a.coeffs().size() + b.coeffs().size() - 1, zero(a.spec()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = out[i + j] + a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return poly_from_trimmed(a.spec(), std::move(out));
}

Poly operator*(const FieldElement& c, const Poly& a) {
  std::vector<FieldElement> out;
  out.reserve(a.coeffs().size());
  for (const auto& ak : a.coeffs()) out.push_back(c * ak);
  return poly_from_trimmed(a.spec(), std::move(out));
}

DivModResult divmod(const Poly& f, const Poly& g) {
  require_same_spec(f, g);
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (f.degree() < g.degree()) return {Poly::zero(f.spec()), f};

  if (prime_field(f.spec())) {
    u64 p = f.spec().p();
    std::vector<u64> r = raw_coeffs(f), d = raw_coeffs(g);
    u64 lead_inv = static_cast<u64>(pow_mod(d.back(), p - 2, p));
    std::vector<u64> q(r.size() - d.size() + 1, 0);
    for (std::size_t k = r.size(); k-- >= d.size();) {
      if (r[k] == 0) {
        if (k == 0) break;
        continue;
      }
      u64 c = static_cast<u64>(static_cast<u128>(r[k]) * lead_inv % p);
      std::size_t shift = k - (d.size() - 1);
      q[shift] = c;
      for (std::size_t j = 0; j < d.size(); ++j) {
        u128 sub = static_cast<u128>(c) * d[j] % p;
        r[shift + j] = static_cast<u64>((r[shift + j] + p - static_cast<u64>(sub)) % p);
      }
      if (k == 0) break;
    }
    r.resize(d.size() - 1);
    return {poly_from_raw(f.spec(), std::move(q)), poly_from_raw(f.spec(), std::move(r))};
  }

  std::vector<FieldElement> r = f.coeffs();
  FieldElement lead_inv = inverse(g.lead());
  std::vector<FieldElement> q(r.size() - g.coeffs().size() + 1, zero(f.spec()));
  for (std::size_t k = r.size(); k-- >= g.coeffs().size();) {
    if (!r[k].is_zero()) {
      FieldElement c = r[k] * lead_inv;
      std::size_t shift = k - (g.coeffs().size() - 1);
      q[shift] = c;
      for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
        r[shift + j] = r[shift + j] - c * g.coeffs()[j];
      }
    }
    if (k == 0) break;
  }
  r.resize(g.coeffs().size() - 1, zero(f.spec()));
  return {poly_from_trimmed(f.spec(), std::move(q)), poly_from_trimmed(f.spec(), std::move(r))};
}

Poly gcd(const Poly& f, const Poly& g) {
  require_same_spec(f, g);
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : make_monic(a);
}

Poly make_monic(const Poly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return inverse(f.lead()) * f;
}

Poly powmod(const Poly& base, u128 exp, const Poly& modulus) {
  Poly result = divmod(Poly::one(base.spec()), modulus).rem;
  Poly acc = divmod(base, modulus).rem;
  while (exp != 0) {
    if (exp & 1) result = divmod(result * acc, modulus).rem;
    acc = divmod(acc * acc, modulus).rem;
    exp >>= 1;
  }
  return result;
}

Poly powmod(const Poly& base, const BigUInt& exp, const Poly& modulus) {
  Poly result = divmod(Poly::one(base.spec()), modulus).rem;
  if (exp.is_zero()) return result;
  Poly acc = divmod(base, modulus).rem;
  for (std::size_t k = exp.bit_length(); k-- > 0;) {
    result = divmod(result * result, modulus).rem;
    if (exp.bit(k)) result = divmod(result * acc, modulus).rem;
  }
  return result;
}

Poly derivative(const Poly& f) {
  std::vector<FieldElement> out;
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) {
    out.push_back(make_element(f.spec(), {k % f.spec().p()}) * f.coeffs()[k]);
  }
  return poly_from_trimmed(f.spec(), std::move(out));
}

FieldElement eval(const Poly& f, const FieldElement& at) {
  FieldElement acc = zero(f.spec());
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    acc = acc * at + f.coeffs()[k];
  }
  return acc;
}

Poly substitute_power(const Poly& f, u64 e) {
  if (e == 0) fail(ErrorCode::InvalidArgument, "substitution exponent must be positive");
  if (f.is_zero()) return f;
  std::vector<FieldElement> out(static_cast<std::size_t>(f.degree()) * e + 1, zero(f.spec()));
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) out[k * e] = f.coeffs()[k];
  return poly_from_trimmed(f.spec(), std::move(out));
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  if (!f.spec().order_fits_u128()) {
    fail(ErrorCode::CapabilityExceeded, "irreducibility test needs the field order as an exponent");
  }
  u128 q = f.spec().order_u128();
  Poly work = make_monic(f);
  u64 n = static_cast<u64>(work.degree());
  std::set<u64> checkpoints;
  for (u64 r : prime_factors(n)) checkpoints.insert(n / r);
  Poly xp = Poly::x(f.spec());
  Poly h = xp;
  for (u64 j = 1; j <= n; ++j) {
    h = powmod(h, q, work);
    if (checkpoints.count(j) && gcd(h - xp, work).degree() != 0) return false;
  }
  return h == xp;
}

// ---------------------------------------------------------------------------
// Minimal polynomials via a shared splitting-extension context.

namespace {

struct ExtensionContext {
  FieldSpec sup;
  std::vector<FieldElement> alpha_pow;               // alpha^0 .. alpha^{n-1}
  std::map<std::vector<u64>, FieldElement> pullback;  // image coeffs -> base element
};

constexpr u64 kMaxPullbackOrder = 1u << 20;

std::shared_ptr<const ExtensionContext> extension_context(const FieldSpec& spec, u64 n) {
  static std::mutex mutex;
  static std::map<std::tuple<u64, u32, u64>, std::shared_ptr<const ExtensionContext>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(spec.p(), spec.m(), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  u64 qmod = static_cast<u64>(pow_mod(spec.p() % n, spec.m(), n));
  u64 t = mult_order_mod(n, qmod);
  u64 ext_degree = static_cast<u64>(spec.m()) * t;
  if (ext_degree > kMaxExtensionDegree) {
    fail(ErrorCode::CapabilityExceeded,
         "splitting field degree " + std::to_string(ext_degree) + " exceeds limit");
  }

  auto ctx = std::make_shared<ExtensionContext>();
  ctx->sup = make_field(spec.p(), static_cast<u32>(ext_degree));
  FieldElement alpha = nth_root_of_unity(ctx->sup, n);
  ctx->alpha_pow.reserve(n);
  ctx->alpha_pow.push_back(one(ctx->sup));
  for (u64 j = 1; j < n; ++j) ctx->alpha_pow.push_back(ctx->alpha_pow.back() * alpha);

  if (spec.order_log2() > 20.0) {
    fail(ErrorCode::CapabilityExceeded, "base field too large for projection table");
  }
  u64 base_order = 1;
  for (u32 k = 0; k < spec.m(); ++k) base_order *= spec.p();
  if (base_order > kMaxPullbackOrder) {
    fail(ErrorCode::CapabilityExceeded, "base field too large for projection table");
  }
  for (u64 idx = 0; idx < base_order; ++idx) {
    FieldElement e = element_of_index(spec, idx);
    FieldElement image = embed(spec, ctx->sup, e);
    ctx->pullback.emplace(image.coeffs(), e);
  }

  cache.emplace(key, ctx);
  return ctx;
}

}  // namespace

Poly minimal_polynomial(const FieldSpec& spec, u64 n, const Coset& orbit) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  if (orbit.n != n || orbit.elements.empty()) {
    fail(ErrorCode::InvalidArgument, "orbit does not match the requested modulus");
  }
  u64 qmod = static_cast<u64>(pow_mod(spec.p() % n, spec.m(), n));
  if (orbit.q % n != qmod) {
    fail(ErrorCode::InvalidArgument, "orbit multiplier disagrees with the field order");
  }
  if (std::gcd(qmod == 0 ? n : qmod, n) != 1 && n != 1) {
    fail(ErrorCode::NotCoprime, "field order shares a factor with n");
  }

  auto ctx = extension_context(spec, n);
  std::vector<FieldElement> cur{one(ctx->sup)};
  for (u64 j : orbit.elements) {
    const FieldElement& root = ctx->alpha_pow[j % n];
    std::vector<FieldElement> next(cur.size() + 1, zero(ctx->sup));
    for (std::size_t k = 0; k < cur.size(); ++k) {
      next[k + 1] = next[k + 1] + cur[k];
      next[k] = next[k] - root * cur[k];
    }
    cur = std::move(next);
  }

  std::vector<FieldElement> projected;
  projected.reserve(cur.size());
  for (const auto& c : cur) {
    auto it = ctx->pullback.find(c.coeffs());
    if (it == ctx->pullback.end()) {
      fail(ErrorCode::SubfieldProjectionFailure,
           "orbit product has a coefficient outside the base field");
    }
    projected.push_back(it->second);
  }
  Poly result = poly_from_trimmed(spec, std::move(projected));
  if (!result.is_monic() || result.degree() != static_cast<int>(orbit.elements.size())) {
    fail(ErrorCode::InternalVerificationFailure, "orbit product degree drifted");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Generic factorization oracle.

namespace {

Poly pth_root(const Poly& f) {
  const FieldSpec& spec = f.spec();
  u64 p = spec.p();
  u128 frob_inverse = 1;
  for (u32 k = 1; k < spec.m(); ++k) frob_inverse *= p;
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(f.degree()) / p + 1);
  for (std::size_t k = 0; k * p <= static_cast<std::size_t>(f.degree()); ++k) {
    out.push_back(pow(f.coeff(k * p), frob_inverse));
  }
  return poly_from_trimmed(spec, std::move(out));
}

// Squarefree decomposition in characteristic p: peel multiplicities not
// divisible by p, then recurse into the p-th power part.
void squarefree_parts(const Poly& f, u64 e, std::vector<std::pair<Poly, u64>>& out) {
  Poly d = derivative(f);
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), e * f.spec().p(), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = divmod(f, c).quot;
  u64 i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly part = divmod(w, y).quot;
    if (part.degree() > 0) out.emplace_back(part, e * i);
    c = divmod(c, y).quot;
    w = std::move(y);
    ++i;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c), e * f.spec().p(), out);
}

std::vector<std::pair<Poly, u64>> distinct_degree_blocks(const Poly& g) {
  std::vector<std::pair<Poly, u64>> blocks;
  u128 q = g.spec().order_u128();
  Poly xp = Poly::x(g.spec());
  Poly work = g;
  Poly h = xp;
  u64 d = 0;
  while (work.degree() > 0) {
    ++d;
    if (2 * d > static_cast<u64>(work.degree())) {
      blocks.emplace_back(work, static_cast<u64>(work.degree()));
      break;
    }
    h = powmod(h, q, work);
    Poly u = gcd(h - xp, work);
    if (u.degree() > 0) {
      blocks.emplace_back(u, d);
      work = divmod(work, u).quot;
      if (work.degree() > 0) h = divmod(h, work).rem;
    }
  }
  return blocks;
}

FieldElement random_element(const FieldSpec& spec, std::mt19937_64& rng) {
  std::vector<u64> coeffs(spec.m());
  for (auto& c : coeffs) c = rng() % spec.p();
  return make_element(spec, std::move(coeffs));
}

void equal_degree_split(const Poly& u, u64 d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<u64>(u.degree()) == d) {
    out.push_back(u);
    return;
  }
  const FieldSpec& spec = u.spec();
  BigUInt exp = BigUInt::power(spec.p(), static_cast<u64>(spec.m()) * d);
  exp.sub_u64(1);
  exp.divmod_u64(2);
  for (u64 attempt = 0; attempt < 10000; ++attempt) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(static_cast<std::size_t>(u.degree()));
    for (int k = 0; k < u.degree(); ++k) coeffs.push_back(random_element(spec, rng));
    Poly r = Poly::from_coeffs(spec, std::move(coeffs));
    if (r.degree() < 1) continue;
    Poly w = powmod(r, exp, u) - Poly::one(spec);
    Poly g = gcd(w, u);
    if (g.degree() > 0 && g.degree() < u.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(u, g).quot, d, rng, out);
      return;
    }
  }
  fail(ErrorCode::InternalVerificationFailure, "equal-degree splitting stalled");
}

}  // namespace

void canonical_sort(std::vector<std::pair<Poly, u64>>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return Poly::cmp(a.first, b.first) < 0; });
}

bool operator==(const FactorMultiset& a, const FactorMultiset& b) {
  return a.unit == b.unit && a.factors == b.factors;
}

FactorMultiset factor_generic(const Poly& f, u64 seed) {
  if (!f.valid() || f.is_zero()) {
    fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  }
  if (!f.spec().order_fits_u128()) {
    fail(ErrorCode::CapabilityExceeded, "oracle factorization needs the field order as an exponent");
  }
  FactorMultiset result;
  result.unit = f.lead();
  if (f.degree() == 0) return result;

  Poly work = make_monic(f);
  std::mt19937_64 rng(seed);

  std::vector<std::pair<Poly, u64>> squarefree;
  squarefree_parts(work, 1, squarefree);
  for (const auto& [part, mult] : squarefree) {
    for (const auto& [block, d] : distinct_degree_blocks(part)) {
      std::vector<Poly> irreducibles;
      equal_degree_split(block, d, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.emplace_back(std::move(g), mult);
    }
  }
  canonical_sort(result.factors);
  return result;
}

Poly reassemble(const FactorMultiset& parts) {
  if (!parts.unit.valid()) fail(ErrorCode::InvalidArgument, "multiset lacks a unit");
  const FieldSpec& spec = parts.unit.spec();
  Poly acc = Poly::from_coeffs(spec, {parts.unit});
  for (const auto& [factor, mult] : parts.factors) {
    Poly base = factor;
    u64 e = mult;
    while (e != 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
  }
  return acc;
}

}  // namespace negafactor
