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

#include "dmkit/field.hpp"

#include <array>
#include <charconv>

namespace dmkit {
namespace {

using detail::u128;

int slot_of(unsigned bits) {
  switch (bits) {
    case 8: return 0;
    case 16: return 1;
    case 32: return 2;
    case 64: return 3;
    default: return -1;
  }
}

int degree(u128 p) {
  int d = -1;
  while (p != 0) {
    ++d;
    p >>= 1;
  }
  return d;
}

u128 poly_mod(u128 a, u128 m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) {
    a ^= m << (da - dm);
  }
  return a;
}

u128 poly_gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// x^(2^k) mod (x^bits + low), computed by k repeated squarings.
std::uint64_t frobenius_power_of_x(unsigned bits, std::uint64_t low, unsigned k) {
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  std::uint64_t h = 2;  // the polynomial x
  for (unsigned i = 0; i < k; ++i) {
    u128 r = detail::clmul(h, h);
    while ((r >> bits) != 0) {
      const std::uint64_t hi = static_cast<std::uint64_t>(r >> bits);
      r = (r & mask) ^ detail::clmul(hi, low);
    }
    h = static_cast<std::uint64_t>(r);
  }
  return h;
}

void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.bits() != b.bits() || a.bits() == 0) {
    throw FieldError("field context mismatch: GF(2^" + std::to_string(a.bits()) + ") vs GF(2^" +
                     std::to_string(b.bits()) + ")");
  }
}

}  // namespace

std::uint64_t default_modulus_low(unsigned bits) {
  switch (bits) {
    case 8: return 0x1B;   // x^8 + x^4 + x^3 + x + 1
    case 16: return 0x2B;  // x^16 + x^5 + x^3 + x + 1
    case 32: return 0x8D;  // x^32 + x^7 + x^3 + x^2 + 1
    case 64: return 0x1B;  // x^64 + x^4 + x^3 + x + 1
    default: throw FieldError("unsupported field size: " + std::to_string(bits));
  }
}

bool is_irreducible(unsigned bits, std::uint64_t low) {
  if (bits < 2 || bits > 64 || (bits & (bits - 1)) != 0) {
    throw FieldError("irreducibility test needs a power-of-two degree in [2, 64]");
  }
  // Irreducible iff x^(2^n) = x mod f and gcd(x^(2^(n/2)) - x, f) = 1;
  // 2 is the only prime dividing n.
  if (frobenius_power_of_x(bits, low, bits) != 2) return false;
  const u128 f = (u128{1} << bits) | low;
  const u128 g = u128{frobenius_power_of_x(bits, low, bits / 2)} ^ 2;
  return degree(poly_gcd(f, g)) == 0;
}

FieldCtx FieldCtx::make(unsigned bits) {
  static const std::array<bool, 4> verified = [] {
    std::array<bool, 4> ok{};
    const unsigned sizes[4] = {8, 16, 32, 64};
    for (int i = 0; i < 4; ++i) ok[i] = is_irreducible(sizes[i], default_modulus_low(sizes[i]));
    return ok;
  }();
  const int slot = slot_of(bits);
  if (slot < 0) throw FieldError("unsupported field size: " + std::to_string(bits));
  if (!verified[slot]) {
    throw FieldError("modulus for GF(2^" + std::to_string(bits) + ") failed the irreducibility self-test");
  }
  return FieldCtx(bits, default_modulus_low(bits));
}

FieldElement FieldCtx::zero() const { return FieldElement(0, bits_); }
FieldElement FieldCtx::one() const { return FieldElement(1, bits_); }

FieldElement FieldCtx::element(std::uint64_t value) const {
  if ((value & ~mask_) != 0) {
    throw FieldError("value does not fit in GF(2^" + std::to_string(bits_) + ")");
  }
  return FieldElement(value, bits_);
}

FieldElement FieldCtx::from_hex(std::string_view hex) const {
  if (hex.size() > 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
  if (hex.empty()) throw FieldError("empty hex string");
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
  if (ec != std::errc() || ptr != hex.data() + hex.size()) {
    throw FieldError("malformed hex field element: " + std::string(hex));
  }
  return element(v);
}

FieldElement FieldCtx::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, mask_);
  return FieldElement(dist(rng), bits_);
}

FieldElement FieldCtx::random_nonzero(Rng& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(1, mask_);
  return FieldElement(dist(rng), bits_);
}

std::uint64_t FieldCtx::pow_raw(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  std::uint64_t base = a;
  while (e != 0) {
    if (e & 1) result = mul_raw(result, base);
    base = mul_raw(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t FieldCtx::inv_raw(std::uint64_t a) const {
  if (a == 0) throw FieldError("inversion of zero");
  // a^(2^l - 2); the multiplicative group has order 2^l - 1.
  return pow_raw(a, mask_ - 1);
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a.ctx().element(a.value() ^ b.value());
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const FieldCtx ctx = a.ctx();
  return ctx.element(ctx.mul_raw(a.value(), b.value()));
}

FieldElement inv(const FieldElement& a) {
  const FieldCtx ctx = a.ctx();
  return ctx.element(ctx.inv_raw(a.value()));
}

FieldElement div(const FieldElement& a, const FieldElement& b) { return mul(a, inv(b)); }

FieldElement pow(const FieldElement& a, std::uint64_t e) {
  const FieldCtx ctx = a.ctx();
  return ctx.element(ctx.pow_raw(a.value(), e));
}

std::string to_hex(const FieldElement& a) {
  char buf[17];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), a.value(), 16);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace dmkit
