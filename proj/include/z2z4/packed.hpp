// SPDX-License-Identifier: Apache-2.0

#ifndef Z2Z4_PACKED_HPP
#define Z2Z4_PACKED_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "z2z4/alphabet.hpp"

namespace z2z4 {

// Single-word encoding of Z2^gamma x Z4^delta for gamma + 2*delta <= 64.
//
// Bits [0, gamma) hold the binary symbols, [gamma, gamma+delta) the low bits
// and [gamma+delta, gamma+2*delta) the high bits of the quaternary symbols.
// Every integer below 2^(gamma+2*delta) is a valid vector, so the ambient
// space is the index range [0, size()).
class PackedSpace {
 public:
  static constexpr std::size_t max_bits = 64;

  explicit PackedSpace(Shape s);

  Shape shape() const { return shape_; }
  unsigned bits() const { return bits_; }
  // 2^bits; only meaningful for bits < 64.
  std::uint64_t size() const { return std::uint64_t{1} << bits_; }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    const std::uint64_t carry = (x & y & lo_mask_) << delta_;
    return x ^ y ^ carry;
  }
  std::uint64_t neg(std::uint64_t x) const { return x ^ ((x & lo_mask_) << delta_); }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return add(x, neg(y)); }
  std::uint64_t twice(std::uint64_t x) const { return (x & lo_mask_) << delta_; }

  unsigned weight(std::uint64_t x, Metric m) const {
    const std::uint64_t b = x & bin_mask_;
    const std::uint64_t lo = (x >> gamma_) & dmask_;
    const std::uint64_t hi = (x >> (gamma_ + delta_)) & dmask_;
    unsigned w = static_cast<unsigned>(std::popcount(b));
    switch (m) {
      case Metric::hamming:
        return w + static_cast<unsigned>(std::popcount(lo | hi));
      case Metric::lee:
        return w + static_cast<unsigned>(std::popcount(hi) + std::popcount(hi ^ lo));
      case Metric::euclidean:
        return w + static_cast<unsigned>(std::popcount(lo) + 4 * std::popcount(hi & ~lo));
    }
    return w;
  }

  int inner(std::uint64_t x, std::uint64_t y) const {
    const std::uint64_t xl = (x >> gamma_) & dmask_, xh = (x >> (gamma_ + delta_)) & dmask_;
    const std::uint64_t yl = (y >> gamma_) & dmask_, yh = (y >> (gamma_ + delta_)) & dmask_;
    const int acc = 2 * std::popcount(x & y & bin_mask_) + std::popcount(xl & yl) +
                    2 * (std::popcount(xl & yh) + std::popcount(xh & yl));
    return acc & 3;
  }

  // True when 2x = 0.
  bool order_two(std::uint64_t x) const { return (x & lo_mask_) == 0; }

  // Key whose integer order is the lexicographic order of the digit sequence.
  std::uint64_t lex_key(std::uint64_t x) const;

  std::uint64_t pack(const MixedVector& v) const;
  MixedVector unpack(std::uint64_t x) const;

 private:
  Shape shape_;
  unsigned gamma_;
  unsigned delta_;
  unsigned bits_;
  std::uint64_t bin_mask_;
  std::uint64_t lo_mask_;
  std::uint64_t dmask_;
};

// Subgroup generated by `gens`, by incremental growth. Sorted ascending by packed value.
// Throws ResourceError if the group would exceed 2^max_log2 elements.
std::vector<std::uint64_t> packed_span(const PackedSpace& space, std::span<const std::uint64_t> gens,
                                       unsigned max_log2);

}  // namespace z2z4

#endif  // Z2Z4_PACKED_HPP
