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

#include "negafactor/biguint.hpp"

#include <algorithm>

#include "negafactor/errors.hpp"

namespace negafactor {

BigUInt::BigUInt(u64 value) {
  if (value != 0) limbs_.push_back(value);
}

BigUInt BigUInt::from_u128(u128 value) {
  BigUInt r;
  if (value != 0) {
    r.limbs_.push_back(static_cast<u64>(value));
    u64 high = static_cast<u64>(value >> 64);
    if (high != 0) r.limbs_.push_back(high);
  }
  return r;
}

BigUInt BigUInt::power(u64 base, u64 exp) {
  BigUInt r(1);
  for (u64 k = 0; k < exp; ++k) r.mul_u64(base);
  return r;
}

void BigUInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUInt::bit_length() const {
  if (limbs_.empty()) return 0;
  u64 top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 64;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigUInt::bit(std::size_t index) const {
  std::size_t limb = index / 64;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (index % 64)) & 1u;
}

void BigUInt::mul_u64(u64 factor) {
  if (factor == 0) {
    limbs_.clear();
    return;
  }
  u64 carry = 0;
  for (auto& limb : limbs_) {
    u128 prod = static_cast<u128>(limb) * factor + carry;
    limb = static_cast<u64>(prod);
    carry = static_cast<u64>(prod >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
}

void BigUInt::add_u64(u64 addend) {
  u64 carry = addend;
  for (std::size_t k = 0; carry != 0 && k < limbs_.size(); ++k) {
    u128 sum = static_cast<u128>(limbs_[k]) + carry;
    limbs_[k] = static_cast<u64>(sum);
    carry = static_cast<u64>(sum >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
}

void BigUInt::sub_u64(u64 subtrahend) {
  if (subtrahend == 0) return;
  if (limbs_.empty()) fail(ErrorCode::InvalidArgument, "subtraction below zero");
  if (limbs_[0] >= subtrahend) {
    limbs_[0] -= subtrahend;
  } else {
    limbs_[0] = static_cast<u64>((static_cast<u128>(1) << 64) + limbs_[0] - subtrahend);
    std::size_t k = 1;
    while (true) {
      if (k >= limbs_.size()) fail(ErrorCode::InvalidArgument, "subtraction below zero");
      if (limbs_[k] != 0) {
        limbs_[k] -= 1;
        break;
      }
      limbs_[k] = ~static_cast<u64>(0);
      ++k;
    }
  }
  trim();
}

u64 BigUInt::divmod_u64(u64 divisor) {
  if (divisor == 0) fail(ErrorCode::DivisionByZero, "divmod by zero");
  u128 rem = 0;
  for (std::size_t k = limbs_.size(); k-- > 0;) {
    u128 cur = (rem << 64) | limbs_[k];
    limbs_[k] = static_cast<u64>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<u64>(rem);
}

u64 BigUInt::mod_u64(u64 divisor) const {
  if (divisor == 0) fail(ErrorCode::DivisionByZero, "mod by zero");
  u128 rem = 0;
  for (std::size_t k = limbs_.size(); k-- > 0;) {
    rem = ((rem << 64) | limbs_[k]) % divisor;
  }
  return static_cast<u64>(rem);
}

int BigUInt::compare(const BigUInt& other) const {
  if (limbs_.size() != other.limbs_.size()) {
    return limbs_.size() < other.limbs_.size() ? -1 : 1;
  }
  for (std::size_t k = limbs_.size(); k-- > 0;) {
    if (limbs_[k] != other.limbs_[k]) return limbs_[k] < other.limbs_[k] ? -1 : 1;
  }
  return 0;
}

u64 BigUInt::to_u64() const {
  if (!fits_u64()) fail(ErrorCode::CapabilityExceeded, "value exceeds 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

u128 BigUInt::to_u128() const {
  if (!fits_u128()) fail(ErrorCode::CapabilityExceeded, "value exceeds 128 bits");
  u128 value = 0;
  if (limbs_.size() > 1) value = static_cast<u128>(limbs_[1]) << 64;
  if (!limbs_.empty()) value |= limbs_[0];
  return value;
}

std::string BigUInt::to_string() const {
  if (limbs_.empty()) return "0";
  BigUInt work = *this;
  std::string digits;
  constexpr u64 kChunk = 10000000000000000000ull;  // 10^19
  while (!work.is_zero()) {
    u64 rem = work.divmod_u64(kChunk);
    std::string part = std::to_string(rem);
    if (work.is_zero()) {
      digits.insert(0, part);
    } else {
      digits.insert(0, std::string(19 - part.size(), '0') + part);
    }
  }
  return digits;
}

}  // namespace negafactor
