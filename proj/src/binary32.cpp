#include "corrfn/binary32.hpp"

#include <bit>
#include <utility>

namespace corrfn {

namespace {

constexpr std::uint32_t kSignMask = 0x80000000u;
constexpr std::uint32_t kExpMask = 0x7f800000u;
constexpr std::uint32_t kFracMask = 0x007fffffu;
constexpr std::uint32_t kHidden = 0x00800000u;
constexpr std::uint32_t kQuiet = 0x00400000u;
constexpr std::uint32_t kDefaultNaN = 0x7fc00000u;
constexpr int kMinExp = -149; // exponent of the least subnormal, value = m * 2^e
constexpr int kBias = 150;    // biased field = e + 150 for a 24-bit significand
constexpr int kShift = 38;    // headroom: 24 + 38 = 62 bits, carry fits in 63

struct Unpacked {
  bool negative;
  int exponent;           // value = significand * 2^exponent
  std::uint64_t significand;
};

Unpacked unpack(std::uint32_t bits) {
  const std::uint32_t field = (bits & kExpMask) >> 23;
  const std::uint32_t frac = bits & kFracMask;
  if (field == 0) return {(bits & kSignMask) != 0, kMinExp, frac};
  return {(bits & kSignMask) != 0, static_cast<int>(field) - kBias, frac | kHidden};
}

int highest_bit(std::uint64_t v) { return 63 - std::countl_zero(v); }

} // namespace

std::uint32_t f32_add_bits(std::uint32_t a_bits, std::uint32_t b_bits) {
  const bool a_special = (a_bits & kExpMask) == kExpMask;
  const bool b_special = (b_bits & kExpMask) == kExpMask;
  if (a_special || b_special) {
    // NaNs propagate quieted; opposite infinities are invalid.
    if (a_special && (a_bits & kFracMask)) return a_bits | kQuiet;
    if (b_special && (b_bits & kFracMask)) return b_bits | kQuiet;
    if (a_special && b_special && a_bits != b_bits) return kDefaultNaN;
    return a_special ? a_bits : b_bits;
  }

  Unpacked a = unpack(a_bits);
  Unpacked b = unpack(b_bits);

  if (a.significand == 0 && b.significand == 0) {
    // Signed zeros: the sum is -0 only when both are -0.
    return (a.negative && b.negative) ? kSignMask : 0u;
  }
  if (a.significand == 0) return b_bits;
  if (b.significand == 0) return a_bits;

  // Order so that |a| >= |b|.
  if (a.exponent < b.exponent ||
      (a.exponent == b.exponent && a.significand < b.significand))
    std::swap(a, b);

  std::uint64_t ma = a.significand << kShift;
  std::uint64_t mb = b.significand << kShift;
  const int diff = a.exponent - b.exponent;
  if (diff >= 63) {
    mb = 1; // sticky only
  } else if (diff > 0) {
    const std::uint64_t lost = mb & ((std::uint64_t{1} << diff) - 1);
    mb = (mb >> diff) | (lost != 0 ? 1u : 0u);
  }

  std::uint64_t sum = a.negative == b.negative ? ma + mb : ma - mb;
  if (sum == 0) return 0u; // exact cancellation rounds to +0

  const int base_exp = a.exponent - kShift;
  int exp = base_exp + (highest_bit(sum) - 23);
  if (exp < kMinExp) exp = kMinExp;
  const int shift = exp - base_exp;

  std::uint64_t m;
  if (shift <= 0) {
    m = sum << -shift;
  } else {
    m = sum >> shift;
    const std::uint64_t rem = sum & ((std::uint64_t{1} << shift) - 1);
    const std::uint64_t half = std::uint64_t{1} << (shift - 1);
    if (rem > half || (rem == half && (m & 1u))) ++m;
    if (m == (std::uint64_t{1} << 24)) {
      m >>= 1;
      ++exp;
    }
  }

  const std::uint32_t sign = a.negative ? kSignMask : 0u;
  if (m < kHidden) return sign | static_cast<std::uint32_t>(m); // subnormal
  const int field = exp + kBias;
  if (field >= 255) return sign | kExpMask;
  return sign | (static_cast<std::uint32_t>(field) << 23) |
         (static_cast<std::uint32_t>(m) & kFracMask);
}

float f32_add(float a, float b) {
  return std::bit_cast<float>(
      f32_add_bits(std::bit_cast<std::uint32_t>(a), std::bit_cast<std::uint32_t>(b)));
}

} // namespace corrfn
