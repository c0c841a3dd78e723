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

#ifndef NEGAFACTOR_BIGUINT_HPP
#define NEGAFACTOR_BIGUINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace negafactor {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Unsigned integer of arbitrary width, little-endian 64-bit limbs with no
/// trailing zero limb.  Supports exactly the operations the library needs:
/// group orders p^m - 1, square-and-multiply exponent scans, counts
/// (p^s + 1)^N, and decimal rendering.  Subtraction requires a >= b.
class BigUInt {
 public:
  BigUInt() = default;
  explicit BigUInt(u64 value);
  static BigUInt from_u128(u128 value);

  /// base^exp by repeated limb multiplication.
  static BigUInt power(u64 base, u64 exp);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;
  bool bit(std::size_t index) const;

  void mul_u64(u64 factor);
  void add_u64(u64 addend);
  void sub_u64(u64 subtrahend);
  /// Divides in place, returns the remainder.
  u64 divmod_u64(u64 divisor);
  u64 mod_u64(u64 divisor) const;

  int compare(const BigUInt& other) const;
  bool operator==(const BigUInt& other) const { return compare(other) == 0; }
  bool operator<(const BigUInt& other) const { return compare(other) < 0; }

  bool fits_u64() const { return limbs_.size() <= 1; }
  bool fits_u128() const { return limbs_.size() <= 2; }
  u64 to_u64() const;
  u128 to_u128() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<u64> limbs_;
};

}  // namespace negafactor

#endif  // NEGAFACTOR_BIGUINT_HPP
