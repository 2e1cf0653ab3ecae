#pragma once

#include <cstdint>

namespace bcmm {

/// Result of a scalar Boolean operation. Kept distinct from plain integers
/// so inner-product-style contracts stay explicit in signatures.
enum class Bit : std::uint8_t { zero = 0, one = 1 };

constexpr Bit make_bit(bool value) { return value ? Bit::one : Bit::zero; }
constexpr bool to_bool(Bit b) { return b == Bit::one; }
constexpr char to_char(Bit b) { return to_bool(b) ? '1' : '0'; }

}  // namespace bcmm
