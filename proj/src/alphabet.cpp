// SPDX-License-Identifier: Apache-2.0

#include "z2z4/alphabet.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

std::size_t popcount(std::span<const std::uint64_t> w) {
  std::size_t n = 0;
  for (auto x : w) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

void set_bit(std::vector<std::uint64_t>& w, std::size_t i, bool on) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (on)
    w[i >> 6] |= mask;
  else
    w[i >> 6] &= ~mask;
}

}  // namespace

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::hamming:
      return "hamming";
    case Metric::lee:
      return "lee";
    case Metric::euclidean:
      return "euclidean";
  }
  return "?";
}

Metric parse_metric(std::string_view s) {
  if (s == "hamming") return Metric::hamming;
  if (s == "lee") return Metric::lee;
  if (s == "euclidean") return Metric::euclidean;
  throw ParseError("unknown metric '" + std::string(s) + "'");
}

std::string to_string(Shape s) {
  return "gamma=" + std::to_string(s.gamma) + " delta=" + std::to_string(s.delta);
}

// ---------------------------------------------------------------- BinaryVector

BinaryVector::BinaryVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

void BinaryVector::set(std::size_t i, int bit) { set_bit(words_, i, bit & 1); }

std::size_t BinaryVector::weight() const { return popcount(words_); }

std::string BinaryVector::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(static_cast<char>('0' + (*this)[i]));
  return s;
}

std::size_t hamming_distance(const BinaryVector& a, const BinaryVector& b) {
  if (a.size() != b.size()) throw DimensionError("binary vectors of different length");
  std::size_t n = 0;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) n += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return n;
}

// ---------------------------------------------------------------- MixedVector

MixedVector::MixedVector(std::size_t gamma, std::size_t delta)
    : gamma_(gamma),
      delta_(delta),
      bin_(words_for(gamma), 0),
      lo_(words_for(delta), 0),
      hi_(words_for(delta), 0) {}

MixedVector MixedVector::from_digits(std::span<const int> binary, std::span<const int> quaternary) {
  MixedVector v(binary.size(), quaternary.size());
  for (std::size_t i = 0; i < binary.size(); ++i) {
    if (binary[i] != 0 && binary[i] != 1) throw DomainError("binary digit out of range: " + std::to_string(binary[i]));
    v.set_binary(i, binary[i]);
  }
  for (std::size_t j = 0; j < quaternary.size(); ++j) {
    if (quaternary[j] < 0 || quaternary[j] > 3)
      throw DomainError("quaternary digit out of range: " + std::to_string(quaternary[j]));
    v.set_quaternary(j, quaternary[j]);
  }
  return v;
}

MixedVector MixedVector::from_digits(std::initializer_list<int> binary, std::initializer_list<int> quaternary) {
  return from_digits(std::span<const int>(binary.begin(), binary.size()),
                     std::span<const int>(quaternary.begin(), quaternary.size()));
}

MixedVector MixedVector::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("missing '|' separator in \"" + std::string(text) + "\"");
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("more than one '|' in \"" + std::string(text) + "\"");

  auto digits = [&](std::string_view part, int limit) {
    std::vector<int> out;
    for (char c : part) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c < '0' || c > '9' || c - '0' > limit)
        throw ParseError("invalid digit '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
      out.push_back(c - '0');
    }
    return out;
  };
  const auto b = digits(text.substr(0, bar), 1);
  const auto q = digits(text.substr(bar + 1), 3);
  return from_digits(b, q);
}

void MixedVector::set_binary(std::size_t i, int v) { set_bit(bin_, i, v & 1); }

void MixedVector::set_quaternary(std::size_t j, int v) {
  set_bit(lo_, j, v & 1);
  set_bit(hi_, j, (v >> 1) & 1);
}

bool MixedVector::is_zero() const {
  auto zero = [](const std::vector<std::uint64_t>& w) {
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
  };
  return zero(bin_) && zero(lo_) && zero(hi_);
}

int MixedVector::order() const {
  if (is_zero()) return 1;
  // 2v kills the binary part and maps q to 2q, which is zero iff q is even.
  const bool odd = std::any_of(lo_.begin(), lo_.end(), [](std::uint64_t x) { return x != 0; });
  return odd ? 4 : 2;
}

void MixedVector::require_same_shape(const MixedVector& o) const {
  if (gamma_ != o.gamma_ || delta_ != o.delta_)
    throw DimensionError("shape mismatch: (" + std::to_string(gamma_) + "," + std::to_string(delta_) + ") vs (" +
                         std::to_string(o.gamma_) + "," + std::to_string(o.delta_) + ")");
}

MixedVector& MixedVector::operator+=(const MixedVector& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < bin_.size(); ++i) bin_[i] ^= o.bin_[i];
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    const std::uint64_t carry = lo_[i] & o.lo_[i];
    lo_[i] ^= o.lo_[i];
    hi_[i] ^= o.hi_[i] ^ carry;
  }
  return *this;
}

MixedVector MixedVector::operator-() const {
  MixedVector r = *this;
  // -q mod 4 keeps the low bit and flips the high bit where the low bit is set.
  for (std::size_t i = 0; i < r.lo_.size(); ++i) r.hi_[i] ^= r.lo_[i];
  return r;
}

MixedVector& MixedVector::operator-=(const MixedVector& o) { return *this += -o; }

std::strong_ordering operator<=>(const MixedVector& a, const MixedVector& b) {
  a.require_same_shape(b);
  for (std::size_t i = 0; i < a.gamma_; ++i) {
    if (auto c = a.binary(i) <=> b.binary(i); c != 0) return c;
  }
  for (std::size_t j = 0; j < a.delta_; ++j) {
    if (auto c = a.quaternary(j) <=> b.quaternary(j); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string MixedVector::to_string() const {
  std::string s;
  s.reserve(gamma_ + delta_ + 3);
  for (std::size_t i = 0; i < gamma_; ++i) s.push_back(static_cast<char>('0' + binary(i)));
  s += " | ";
  for (std::size_t j = 0; j < delta_; ++j) s.push_back(static_cast<char>('0' + quaternary(j)));
  return s;
}

std::size_t MixedVector::hash() const {
  std::size_t h = std::hash<std::size_t>{}(gamma_ * 1000003U + delta_);
  auto mix = [&h](std::uint64_t x) { h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto x : bin_) mix(x);
  for (auto x : lo_) mix(x);
  for (auto x : hi_) mix(x);
  return h;
}

// ---------------------------------------------------------------- free functions

std::pair<int, int> gray_symbol(int q) {
  static constexpr std::pair<int, int> table[4] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  if (q < 0 || q > 3) throw DomainError("gray_symbol: not a Z4 residue: " + std::to_string(q));
  return table[q];
}

BinaryVector gray_map(const MixedVector& v) {
  BinaryVector out(v.gamma() + 2 * v.delta());
  for (std::size_t i = 0; i < v.gamma(); ++i) out.set(i, v.binary(i));
  for (std::size_t j = 0; j < v.delta(); ++j) {
    const auto [a, b] = gray_symbol(v.quaternary(j));
    out.set(v.gamma() + 2 * j, a);
    out.set(v.gamma() + 2 * j + 1, b);
  }
  return out;
}

std::size_t weight(const MixedVector& v, Metric m) {
  std::size_t w = popcount(v.binary_plane());
  auto lo = v.low_plane();
  auto hi = v.high_plane();
  for (std::size_t i = 0; i < lo.size(); ++i) {
    switch (m) {
      case Metric::hamming:
        w += static_cast<std::size_t>(std::popcount(lo[i] | hi[i]));
        break;
      case Metric::lee:
        w += static_cast<std::size_t>(std::popcount(hi[i]) + std::popcount(hi[i] ^ lo[i]));
        break;
      case Metric::euclidean:
        w += static_cast<std::size_t>(std::popcount(lo[i]) + 4 * std::popcount(hi[i] & ~lo[i]));
        break;
    }
  }
  return w;
}

std::size_t distance(const MixedVector& u, const MixedVector& v, Metric m) { return weight(u - v, m); }

int inner_product(const MixedVector& u, const MixedVector& v) {
  if (u.shape() != v.shape()) throw DimensionError("inner_product: shape mismatch");
  std::size_t acc = 0;
  auto ub = u.binary_plane();
  auto vb = v.binary_plane();
  for (std::size_t i = 0; i < ub.size(); ++i) acc += 2 * static_cast<std::size_t>(std::popcount(ub[i] & vb[i]));
  auto ul = u.low_plane();
  auto uh = u.high_plane();
  auto vl = v.low_plane();
  auto vh = v.high_plane();
  for (std::size_t i = 0; i < ul.size(); ++i) {
    // (l1 + 2h1)(l2 + 2h2) = l1 l2 + 2(l1 h2 + h1 l2) mod 4
    acc += static_cast<std::size_t>(std::popcount(ul[i] & vl[i]));
    acc += 2 * static_cast<std::size_t>(std::popcount(ul[i] & vh[i]) + std::popcount(uh[i] & vl[i]));
  }
  return static_cast<int>(acc & 3U);
}

MixedVector add(const MixedVector& u, const MixedVector& v) { return u + v; }

MixedVector scalar_mul(int a, const MixedVector& v) {
  a = ((a % 4) + 4) % 4;
  switch (a) {
    case 0:
      return MixedVector(v.shape());
    case 1:
      return v;
    case 2:
      return v + v;
    default:
      return -v;
  }
}

}  // namespace z2z4
