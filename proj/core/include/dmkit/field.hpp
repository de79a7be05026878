// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Arithmetic in the binary extension fields GF(2^l), l in {8, 16, 32, 64}.
//
// Elements are l-bit polynomials over GF(2) reduced modulo a fixed
// irreducible polynomial x^l + r(x) per field size. Only the low part r(x)
// is stored; the leading term is implicit. Every modulus in the table is
// checked for irreducibility (Rabin's test) the first time a context for
// that size is created.

#ifndef DMKIT_FIELD_HPP_
#define DMKIT_FIELD_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dmkit {

using Rng = std::mt19937_64;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

__extension__ using u128 = unsigned __int128;

// Carry-less product of two 64-bit polynomials.
inline u128 clmul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  u128 table[16];
  table[0] = 0;
  table[1] = a;
  for (int i = 2; i < 16; ++i) {
    table[i] = (i & 1) ? (table[i - 1] ^ a) : (table[i / 2] << 1);
  }
  int shift = 60;
  while (((b >> shift) & 0xF) == 0) shift -= 4;
  u128 r = 0;
  for (; shift >= 0; shift -= 4) {
    r = (r << 4) ^ table[(b >> shift) & 0xF];
  }
  return r;
}

}  // namespace detail

class FieldElement;

// A field size together with its reduction polynomial. Cheap to copy.
class FieldCtx {
 public:
  // Throws FieldError unless bits is one of 8, 16, 32, 64.
  static FieldCtx make(unsigned bits);

  unsigned bits() const { return bits_; }
  // Low part r(x) of the modulus x^bits + r(x).
  std::uint64_t modulus_low() const { return low_; }
  std::uint64_t mask() const { return mask_; }

  FieldElement zero() const;
  FieldElement one() const;
  // Throws FieldError if value does not fit in bits().
  FieldElement element(std::uint64_t value) const;
  FieldElement from_hex(std::string_view hex) const;

  // Uniform over all field elements, respectively over nonzero ones.
  FieldElement random(Rng& rng) const;
  FieldElement random_nonzero(Rng& rng) const;

  std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const {
    detail::u128 r = detail::clmul(a, b);
    while ((r >> bits_) != 0) {
      const std::uint64_t hi = static_cast<std::uint64_t>(r >> bits_);
      r = (r & mask_) ^ detail::clmul(hi, low_);
    }
    return static_cast<std::uint64_t>(r);
  }
  std::uint64_t square_raw(std::uint64_t a) const { return mul_raw(a, a); }
  // Throws FieldError on zero.
  std::uint64_t inv_raw(std::uint64_t a) const;
  std::uint64_t pow_raw(std::uint64_t a, std::uint64_t e) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.bits_ == b.bits_ && a.low_ == b.low_;
  }
  friend bool operator!=(const FieldCtx& a, const FieldCtx& b) { return !(a == b); }

 private:
  FieldCtx(unsigned bits, std::uint64_t low)
      : bits_(bits),
        low_(low),
        mask_(bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1)) {}

  unsigned bits_;
  std::uint64_t low_;
  std::uint64_t mask_;
};

// The reduction polynomial shipped for a field size (low part only).
// Throws FieldError for unsupported sizes.
std::uint64_t default_modulus_low(unsigned bits);

// Rabin irreducibility test for x^bits + low over GF(2); bits must be a
// power of two no larger than 64.
bool is_irreducible(unsigned bits, std::uint64_t low);

// An element of GF(2^l). Carries its field size so that mixing elements of
// different fields is detected. The default-constructed element belongs to
// no field and mismatches everything.
class FieldElement {
 public:
  FieldElement() = default;

  std::uint64_t value() const { return value_; }
  unsigned bits() const { return bits_; }
  bool is_zero() const { return value_ == 0; }
  FieldCtx ctx() const { return FieldCtx::make(bits_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.bits_ == b.bits_ && a.value_ == b.value_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  friend class FieldCtx;
  FieldElement(std::uint64_t value, unsigned bits)
      : value_(value), bits_(static_cast<std::uint8_t>(bits)) {}

  std::uint64_t value_ = 0;
  std::uint8_t bits_ = 0;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement div(const FieldElement& a, const FieldElement& b);
FieldElement pow(const FieldElement& a, std::uint64_t e);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return div(a, b); }

// Lowercase hex without prefix; zero is "0".
std::string to_hex(const FieldElement& a);

}  // namespace dmkit

#endif  // DMKIT_FIELD_HPP_
