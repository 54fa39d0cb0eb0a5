// SPDX-License-Identifier: Apache-2.0

#include "z2z4/packed.hpp"

#include <algorithm>
#include <unordered_set>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

std::uint64_t low_bits(unsigned n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

PackedSpace::PackedSpace(Shape s)
    : shape_(s),
      gamma_(static_cast<unsigned>(s.gamma)),
      delta_(static_cast<unsigned>(s.delta)),
      bits_(static_cast<unsigned>(s.gamma + 2 * s.delta)) {
  if (s.gamma + 2 * s.delta > max_bits)
    throw ResourceError("packed encoding needs gamma + 2*delta <= 64, got " + std::to_string(s.gamma + 2 * s.delta));
  bin_mask_ = low_bits(gamma_);
  dmask_ = low_bits(delta_);
  lo_mask_ = dmask_ << gamma_;
}

std::uint64_t PackedSpace::lex_key(std::uint64_t x) const {
  std::uint64_t key = 0;
  for (unsigned i = 0; i < gamma_; ++i) key = (key << 1) | ((x >> i) & 1U);
  for (unsigned j = 0; j < delta_; ++j) {
    const std::uint64_t lo = (x >> (gamma_ + j)) & 1U;
    const std::uint64_t hi = (x >> (gamma_ + delta_ + j)) & 1U;
    key = (key << 2) | (hi << 1) | lo;
  }
  return key;
}

std::uint64_t PackedSpace::pack(const MixedVector& v) const {
  if (v.shape() != shape_) throw DimensionError("pack: shape mismatch");
  std::uint64_t x = 0;
  for (unsigned i = 0; i < gamma_; ++i) x |= static_cast<std::uint64_t>(v.binary(i)) << i;
  for (unsigned j = 0; j < delta_; ++j) {
    const auto q = static_cast<std::uint64_t>(v.quaternary(j));
    x |= (q & 1U) << (gamma_ + j);
    x |= (q >> 1) << (gamma_ + delta_ + j);
  }
  return x;
}

MixedVector PackedSpace::unpack(std::uint64_t x) const {
  MixedVector v(shape_);
  for (unsigned i = 0; i < gamma_; ++i) v.set_binary(i, static_cast<int>((x >> i) & 1U));
  for (unsigned j = 0; j < delta_; ++j) {
    const int lo = static_cast<int>((x >> (gamma_ + j)) & 1U);
    const int hi = static_cast<int>((x >> (gamma_ + delta_ + j)) & 1U);
    v.set_quaternary(j, lo | (hi << 1));
  }
  return v;
}

std::vector<std::uint64_t> packed_span(const PackedSpace& space, std::span<const std::uint64_t> gens,
                                       unsigned max_log2) {
  const std::uint64_t limit = std::uint64_t{1} << max_log2;
  std::vector<std::uint64_t> group{0};

  // Membership via a bitmap when the ambient space is small, a hash set otherwise.
  const bool use_bitmap = space.bits() <= 28;
  std::vector<std::uint64_t> bitmap;
  std::unordered_set<std::uint64_t> hashed;
  if (use_bitmap)
    bitmap.assign((space.size() + 63) / 64, 0);
  auto contains = [&](std::uint64_t x) {
    return use_bitmap ? ((bitmap[x >> 6] >> (x & 63)) & 1U) != 0 : hashed.count(x) != 0;
  };
  auto insert = [&](std::uint64_t x) {
    if (use_bitmap)
      bitmap[x >> 6] |= std::uint64_t{1} << (x & 63);
    else
      hashed.insert(x);
  };
  insert(0);

  for (std::uint64_t g : gens) {
    if (contains(g)) continue;
    const std::size_t base = group.size();
    std::uint64_t m = g;
    while (!contains(m)) {
      if (group.size() + base > limit)
        throw ResourceError("subgroup exceeds 2^" + std::to_string(max_log2) + " elements");
      for (std::size_t i = 0; i < base; ++i) {
        const std::uint64_t y = space.add(group[i], m);
        group.push_back(y);
        insert(y);
      }
      m = space.add(m, g);
    }
  }
  std::sort(group.begin(), group.end());
  return group;
}

}  // namespace z2z4
