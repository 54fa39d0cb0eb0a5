// SPDX-License-Identifier: Apache-2.0

#ifndef Z2Z4_CODES_HPP
#define Z2Z4_CODES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "z2z4/alphabet.hpp"
#include "z2z4/budget.hpp"
#include "z2z4/packed.hpp"

namespace z2z4 {

// Dense matrix of small residues (mod 2 or mod 4 depending on use).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::vector<int> column(std::size_t c) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

enum class RowOrder { two, four };

// Ordered generating rows of a Z2Z4-additive code. Row orders are derived from
// the rows themselves, so the order invariants always hold. Zero rows are kept
// (they generate nothing) and reported with order `two`.
class GeneratorMatrix {
 public:
  GeneratorMatrix() = default;
  explicit GeneratorMatrix(Shape s) : shape_(s) {}
  GeneratorMatrix(Shape s, std::vector<MixedVector> rows);

  Shape shape() const { return shape_; }
  std::size_t gamma() const { return shape_.gamma; }
  std::size_t delta() const { return shape_.delta; }
  const std::vector<MixedVector>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  RowOrder row_order(std::size_t i) const { return rows_[i].order() == 4 ? RowOrder::four : RowOrder::two; }

  void add_row(MixedVector row);

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  Shape shape_;
  std::vector<MixedVector> rows_;
};

// Concatenates coordinates: binary parts side by side, then quaternary parts.
MixedVector concat(const MixedVector& a, const MixedVector& b);

struct CodeType {
  std::size_t gamma = 0;
  std::size_t delta = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;
  std::size_t kappa = 0;

  std::size_t log2_size() const { return lambda + 2 * mu; }
  friend bool operator==(const CodeType&, const CodeType&) = default;
};

// Visits sum(l_i u_i) + sum(m_j v_j) for every coefficient choice (l_i in Z2 on
// order-two rows, m_j in Z4 on order-four rows). Repeats codewords when the
// rows are dependent; `span` is the deduplicating variant.
// Throws ResourceError if 2^(#two + 2*#four) exceeds 2^budget.code_log2.
std::uint64_t enumerate(const GeneratorMatrix& g, const std::function<void(const MixedVector&)>& visit,
                        const Budget& budget = {});

// The generated subgroup, deduplicated and sorted, with its effective (lambda, mu).
struct CodewordSet {
  Shape shape;
  std::vector<MixedVector> words;
  std::size_t lambda = 0;
  std::size_t mu = 0;
};

CodewordSet span(const GeneratorMatrix& g, const Budget& budget = {});

// Packed codewords; requires gamma + 2*delta <= 64.
std::vector<std::uint64_t> packed_codewords(const GeneratorMatrix& g, const Budget& budget = {});

CodeType classify_type(const GeneratorMatrix& g, const Budget& budget = {});

// Standard generator matrix, obtained by row operations and a column
// permutation that stays within the binary and within the quaternary coordinates.
//
//   [ I_k  T' | 2T1  0        0   ]   kappa rows
//   [ 0    0  | 2T2  2I_(l-k) 0   ]   lambda - kappa rows
//   [ 0    S' | S    R        I_mu ]  mu rows
struct StandardForm {
  GeneratorMatrix matrix;  // in permuted coordinates
  // column_permutation[i] = original coordinate placed at position i
  // (coordinates 0..gamma-1 are binary, gamma..gamma+delta-1 quaternary).
  std::vector<std::size_t> column_permutation;
  CodeType type;
  IntMatrix t_prime, t1, t2, r, s_prime, s;
  // The same rows in the original coordinates: an independent generating set
  // whose group is the direct sum of the cyclic groups of its rows.
  std::vector<MixedVector> basis;
};

StandardForm standard_form(const GeneratorMatrix& g);

// Moves coordinates: result position i takes coordinate perm[i] of v.
MixedVector permute(const MixedVector& v, const std::vector<std::size_t>& perm);
MixedVector unpermute(const MixedVector& v, const std::vector<std::size_t>& perm);

enum class ParityVariant {
  printed,    // middle block row [0 0 | 0 I 2R^t] exactly as typeset
  corrected,  // same with 2I in place of I
};

// Builds H_S from the blocks of `sf`, in the permuted coordinates of `sf.matrix`.
GeneratorMatrix parity_check(const StandardForm& sf, ParityVariant variant = ParityVariant::corrected);

// All vectors orthogonal to every generator, found by sweeping the ambient space.
struct KernelDual {
  PackedSpace space;
  std::vector<std::uint64_t> elements;  // sorted
  GeneratorMatrix generators;           // derived by incremental growth
};

KernelDual kernel_dual(const GeneratorMatrix& g, const Budget& budget = {});

// A generating set for the dual code, with how it was obtained. Tries the
// parity-check construction (printed, then corrected); both are accepted only
// if every row is orthogonal to the code and the generated group has
// 2^(gamma+2delta)/|C| elements. Falls back to kernel_dual otherwise.
struct DualDerivation {
  GeneratorMatrix generators;  // original coordinates
  std::string source;          // "printed", "corrected" or "kernel"
  bool printed_orthogonal = false;
  bool printed_size_ok = false;
  std::string note;
};

DualDerivation derive_dual(const GeneratorMatrix& g, const Budget& budget = {});

struct WeightDistribution {
  Metric metric = Metric::lee;
  std::map<std::size_t, std::uint64_t> counts;

  std::uint64_t total() const;
  // Number of distinct nonzero weights.
  std::size_t nonzero_weights() const;
};

WeightDistribution weight_distribution(const GeneratorMatrix& g, Metric m, const Budget& budget = {});
WeightDistribution weight_distribution(const PackedSpace& space, std::span<const std::uint64_t> words, Metric m);

// Throws DomainError for the zero code.
std::size_t minimum_distance(const GeneratorMatrix& g, Metric m, const Budget& budget = {});

// ---------------------------------------------------------------- text / JSON

// "gamma=<g> delta=<d>" header, one row per line, '#' comments.
GeneratorMatrix read_matrix(std::istream& in);
GeneratorMatrix parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const GeneratorMatrix& g);
std::string format_matrix(const GeneratorMatrix& g);

nlohmann::ordered_json to_json(const CodeType& t);
nlohmann::ordered_json to_json(const WeightDistribution& w);
CodeType code_type_from_json(const nlohmann::json& j);
WeightDistribution weight_distribution_from_json(const nlohmann::json& j);

}  // namespace z2z4

#endif  // Z2Z4_CODES_HPP
