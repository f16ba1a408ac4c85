#pragma once

#include <cstdint>

namespace corrfn {

/// 2^24: the largest integer up to which every integer is a binary32 value.
inline constexpr std::uint64_t kF32ConsecutiveLimit = 16777216ULL;
/// 2^53: the binary64 counterpart.
inline constexpr std::uint64_t kF64ConsecutiveLimit = 9007199254740992ULL;

/*
 * IEEE-754 binary32 addition, round-to-nearest-even, computed in integer
 * arithmetic so the result is bit-identical on every platform regardless
 * of FPU mode or compiler flags. Overflow yields +/-infinity, subnormals
 * are exact, and NaN operands propagate quieted.
 */
float f32_add(float a, float b);

/// Bit-level variant of f32_add.
std::uint32_t f32_add_bits(std::uint32_t a, std::uint32_t b);

/*
 * A per-bin counter held in emulated binary32.
 *
 * Unit increments are exact below 2^24. At 2^24 the sum 2^24 + 1 is a tie
 * that rounds to the even neighbour 2^24, so the counter stops growing.
 */
class SaturatingF32Accumulator {
public:
  SaturatingF32Accumulator() = default;
  explicit SaturatingF32Accumulator(float v) : value_(v) {}

  void add(float x) { value_ = f32_add(value_, x); }
  void increment() { add(1.0f); }
  void reset() { value_ = 0.0f; }
  float value() const { return value_; }

private:
  float value_ = 0.0f;
};

} // namespace corrfn
