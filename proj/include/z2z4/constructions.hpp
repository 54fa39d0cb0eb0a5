// SPDX-License-Identifier: Apache-2.0

#ifndef Z2Z4_CONSTRUCTIONS_HPP
#define Z2Z4_CONSTRUCTIONS_HPP

#include <array>
#include <cstddef>
#include <string_view>

#include "z2z4/budget.hpp"
#include "z2z4/codes.hpp"

namespace z2z4 {

enum class Variant { alpha, beta };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

// Columns are listed in lexicographic order with row 0 as the most significant digit.
// alpha: every column of Z2^k; beta: every nonzero column.
IntMatrix binary_simplex(std::size_t k, Variant v, const Budget& budget = {});
// alpha: every column of Z4^k. beta: the recursion from G_1 = [1],
//   G_k = [ 1...1 (4^(k-1)) | 0...0        | 2...2        ]
//         [ G_(k-1)^alpha   | G_(k-1)^beta | G_(k-1)^beta ]
// of length 2^(k-1)(2^k - 1).
IntMatrix quaternary_simplex(std::size_t k, Variant v, const Budget& budget = {});

struct SimplexParams {
  std::size_t k = 1;
  Variant variant = Variant::alpha;
  bool force = false;  // allow beta with k < 3
};

// Row r is row r of the binary simplex tiled, then row r of the quaternary simplex tiled.
// alpha tiles 2^(2k) and 2^k times, beta 2^k and 2^(k-1) times.
GeneratorMatrix mixed_simplex(const SimplexParams& p, const Budget& budget = {});

// Tiles a binary and a quaternary component into mixed rows. Both must have the same row count.
GeneratorMatrix tile(const IntMatrix& binary, std::size_t binary_tiles, const IntMatrix& quaternary,
                     std::size_t quaternary_tiles);

// Removes one occurrence of each column of `remove` from `host`.
// Throws ConstructionError if a column is missing.
IntMatrix delete_columns(const IntMatrix& host, const IntMatrix& remove);

struct MacDonaldParams {
  std::size_t k = 2;
  std::size_t u = 1;
  Variant variant = Variant::alpha;
};

// Simplex components with the columns of [0_(k-u) ; simplex_u] deleted, tiled like mixed_simplex.
GeneratorMatrix macdonald_matrix(const MacDonaldParams& p, const Budget& budget = {});

// The untiled binary and quaternary components of the above. Here 1 <= u <= k;
// u = k leaves no columns.
struct MacDonaldComponents {
  IntMatrix binary;
  IntMatrix quaternary;
};
MacDonaldComponents macdonald_components(const MacDonaldParams& p, const Budget& budget = {});

// Generators for the seven listed repetition codes over n symbol pairs.
//   1: <(0|1)>  2: <(0|2)>  3: <(0|3)>  4: <(1|0)>
//   5: <(1|1),(1|0)>  6: <(1|2),(0|2)>  7: <(1|3),(1|0)>
GeneratorMatrix repetition_code(int i, std::size_t n);
// The single constant row i (binary digit i/4, quaternary digit i%4) over n pairs.
GeneratorMatrix repetition_generator_row(int i, std::size_t n);

struct BlockRepetitionSpec {
  std::array<std::size_t, 7> n{};  // pairs per block, blocks carry symbols 01 02 03 10 11 12 13

  std::size_t total() const;
};

enum class BlockSpan {
  generator,     // the single printed row
  paper_listed,  // additive closure of the eight listed vectors
};

std::string_view to_string(BlockSpan s);
BlockSpan parse_block_span(std::string_view s);

GeneratorMatrix block_repetition(const BlockRepetitionSpec& spec, BlockSpan span = BlockSpan::generator);

// First-order matrix over 2^(m-1) pairs: rows i = 2..m-1 alternate quaternary
// blocks of 0 and 2 of size 2^(m-1-i), then the constant row (1|1).
GeneratorMatrix arm_first_order(std::size_t m);

// Plotkin doubling G(r,m) = [G(r,m-1) G(r,m-1); 0 G(r-1,m-1)] on shape
// (2^(m-1), 2^(m-2)), m >= 2. Bases: G(0,m) = <(1..1|2..2)>, G(m,m) = the
// ambient space, G(1,2) = <(11|2),(01|1)>.
GeneratorMatrix arm_recursive(std::size_t r, std::size_t m);

// Generators of all of Z2^gamma x Z4^delta (unit vectors).
GeneratorMatrix ambient_generators(Shape s);

}  // namespace z2z4

#endif  // Z2Z4_CONSTRUCTIONS_HPP
