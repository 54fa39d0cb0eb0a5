// SPDX-License-Identifier: Apache-2.0

#ifndef Z2Z4_ALPHABET_HPP
#define Z2Z4_ALPHABET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z2z4 {

enum class Metric { hamming, lee, euclidean };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view s);

// Per-symbol weights. Binary symbols weigh 0/1 under every metric.
constexpr int quaternary_weight(int q, Metric m) {
  constexpr int hamming[4] = {0, 1, 1, 1};
  constexpr int lee[4] = {0, 1, 2, 1};
  constexpr int euclidean[4] = {0, 1, 4, 1};
  switch (m) {
    case Metric::hamming:
      return hamming[q & 3];
    case Metric::lee:
      return lee[q & 3];
    case Metric::euclidean:
      return euclidean[q & 3];
  }
  return 0;
}

// Largest weight a single quaternary symbol can carry.
constexpr int max_quaternary_weight(Metric m) { return m == Metric::euclidean ? 4 : (m == Metric::lee ? 2 : 1); }

// Coordinate counts of the ambient space Z2^gamma x Z4^delta.
struct Shape {
  std::size_t gamma = 0;
  std::size_t delta = 0;

  std::size_t coordinates() const { return gamma + delta; }
  std::size_t binary_length() const { return gamma + 2 * delta; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

std::string to_string(Shape s);

// Gray image bits, packed 64 per word.
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t size);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1U); }
  void set(std::size_t i, int bit);
  std::size_t weight() const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::string to_string() const;

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BinaryVector& a, const BinaryVector& b);

// An element of Z2^gamma x Z4^delta.
//
// Stored as three bit planes: one bit per binary symbol, and the low and high
// bit of every quaternary symbol in separate planes. Unused tail bits are zero.
class MixedVector {
 public:
  MixedVector() = default;
  MixedVector(std::size_t gamma, std::size_t delta);
  explicit MixedVector(Shape s) : MixedVector(s.gamma, s.delta) {}

  // Throws DomainError on digits outside {0,1} / {0,1,2,3}.
  static MixedVector from_digits(std::span<const int> binary, std::span<const int> quaternary);
  static MixedVector from_digits(std::initializer_list<int> binary, std::initializer_list<int> quaternary);

  // Accepts "01 | 0123"; whitespace between digits is optional.
  static MixedVector parse(std::string_view text);

  std::size_t gamma() const { return gamma_; }
  std::size_t delta() const { return delta_; }
  Shape shape() const { return {gamma_, delta_}; }

  int binary(std::size_t i) const { return static_cast<int>((bin_[i >> 6] >> (i & 63)) & 1U); }
  int quaternary(std::size_t j) const {
    return static_cast<int>(((lo_[j >> 6] >> (j & 63)) & 1U) | (((hi_[j >> 6] >> (j & 63)) & 1U) << 1));
  }
  // Digit at coordinate c, binary coordinates first.
  int digit(std::size_t c) const { return c < gamma_ ? binary(c) : quaternary(c - gamma_); }

  void set_binary(std::size_t i, int v);
  void set_quaternary(std::size_t j, int v);
  void set_digit(std::size_t c, int v) { c < gamma_ ? set_binary(c, v) : set_quaternary(c - gamma_, v); }

  std::span<const std::uint64_t> binary_plane() const { return bin_; }
  std::span<const std::uint64_t> low_plane() const { return lo_; }
  std::span<const std::uint64_t> high_plane() const { return hi_; }

  bool is_zero() const;
  // 1 for the zero vector, 2 if 2v = 0, otherwise 4.
  int order() const;

  MixedVector& operator+=(const MixedVector& o);
  MixedVector& operator-=(const MixedVector& o);
  MixedVector operator-() const;
  friend MixedVector operator+(MixedVector a, const MixedVector& b) { return a += b; }
  friend MixedVector operator-(MixedVector a, const MixedVector& b) { return a -= b; }

  friend bool operator==(const MixedVector&, const MixedVector&) = default;
  // Lexicographic on the digit sequence (binary digits first). Shapes must match.
  friend std::strong_ordering operator<=>(const MixedVector& a, const MixedVector& b);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void require_same_shape(const MixedVector& o) const;

  std::size_t gamma_ = 0;
  std::size_t delta_ = 0;
  std::vector<std::uint64_t> bin_;
  std::vector<std::uint64_t> lo_;
  std::vector<std::uint64_t> hi_;
};

std::pair<int, int> gray_symbol(int q);
BinaryVector gray_map(const MixedVector& v);

std::size_t weight(const MixedVector& v, Metric m);
std::size_t distance(const MixedVector& u, const MixedVector& v, Metric m);

// 2 * sum(binary products) + sum(quaternary products), mod 4.
int inner_product(const MixedVector& u, const MixedVector& v);

MixedVector add(const MixedVector& u, const MixedVector& v);
MixedVector scalar_mul(int a, const MixedVector& v);

}  // namespace z2z4

template <>
struct std::hash<z2z4::MixedVector> {
  std::size_t operator()(const z2z4::MixedVector& v) const noexcept { return v.hash(); }
};

#endif  // Z2Z4_ALPHABET_HPP
