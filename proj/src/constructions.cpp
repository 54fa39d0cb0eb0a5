// SPDX-License-Identifier: Apache-2.0

#include "z2z4/constructions.hpp"

#include <deque>
#include <map>
#include <string>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

void check_columns(std::size_t log2_cols, const Budget& budget, const char* what) {
  if (log2_cols > budget.columns_log2)
    throw ResourceError(std::string(what) + ": 2^" + std::to_string(log2_cols) + " columns exceed 2^" +
                        std::to_string(budget.columns_log2));
}

void require_k(std::size_t k, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + ": k must be at least 1");
}

// [0_(pad) ; m]
IntMatrix pad_top(const IntMatrix& m, std::size_t pad) {
  IntMatrix out(m.rows() + pad, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(pad + r, c) = static_cast<std::uint8_t>(m(r, c));
  return out;
}

MixedVector constant_pairs(int b, int q, std::size_t n) {
  MixedVector v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    v.set_binary(i, b);
    v.set_quaternary(i, q);
  }
  return v;
}

// Block-constant vector: block i repeats the pair symbol s[i] (binary s/4, quaternary s%4).
MixedVector block_vector(const BlockRepetitionSpec& spec, const std::array<int, 7>& s) {
  const std::size_t n = spec.total();
  MixedVector v(n, n);
  std::size_t pos = 0;
  for (std::size_t b = 0; b < 7; ++b)
    for (std::size_t i = 0; i < spec.n[b]; ++i, ++pos) {
      v.set_binary(pos, s[b] >> 2);
      v.set_quaternary(pos, s[b] & 3);
    }
  return v;
}

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::alpha ? "alpha" : "beta"; }

Variant parse_variant(std::string_view s) {
  if (s == "alpha") return Variant::alpha;
  if (s == "beta") return Variant::beta;
  throw ParseError("unknown variant '" + std::string(s) + "'");
}

std::string_view to_string(BlockSpan s) { return s == BlockSpan::generator ? "generator" : "paper-listed"; }

BlockSpan parse_block_span(std::string_view s) {
  if (s == "generator") return BlockSpan::generator;
  if (s == "paper-listed" || s == "paper_listed") return BlockSpan::paper_listed;
  throw ParseError("unknown span mode '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- simplex components

IntMatrix binary_simplex(std::size_t k, Variant v, const Budget& budget) {
  require_k(k, "binary_simplex");
  check_columns(k, budget, "binary_simplex");
  const std::size_t first = v == Variant::alpha ? 0 : 1;
  const std::size_t cols = pow2(k) - first;
  IntMatrix m(k, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t r = 0; r < k; ++r) m(r, j) = static_cast<std::uint8_t>(((j + first) >> (k - 1 - r)) & 1U);
  return m;
}

IntMatrix quaternary_simplex(std::size_t k, Variant v, const Budget& budget) {
  require_k(k, "quaternary_simplex");
  check_columns(2 * k, budget, "quaternary_simplex");
  if (v == Variant::alpha) {
    const std::size_t cols = pow2(2 * k);
    IntMatrix m(k, cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t r = 0; r < k; ++r) m(r, j) = static_cast<std::uint8_t>((j >> (2 * (k - 1 - r))) & 3U);
    return m;
  }
  if (k == 1) {
    IntMatrix m(1, 1);
    m(0, 0) = 1;
    return m;
  }
  const IntMatrix a = quaternary_simplex(k - 1, Variant::alpha, budget);
  const IntMatrix b = quaternary_simplex(k - 1, Variant::beta, budget);
  IntMatrix m(k, a.cols() + 2 * b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    m(0, j) = 1;
    for (std::size_t r = 0; r + 1 < k; ++r) m(r + 1, j) = static_cast<std::uint8_t>(a(r, j));
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    const std::size_t z = a.cols() + j;
    const std::size_t t = a.cols() + b.cols() + j;
    m(0, z) = 0;
    m(0, t) = 2;
    for (std::size_t r = 0; r + 1 < k; ++r) {
      m(r + 1, z) = static_cast<std::uint8_t>(b(r, j));
      m(r + 1, t) = static_cast<std::uint8_t>(b(r, j));
    }
  }
  return m;
}

GeneratorMatrix tile(const IntMatrix& binary, std::size_t binary_tiles, const IntMatrix& quaternary,
                     std::size_t quaternary_tiles) {
  if (binary.rows() != quaternary.rows()) throw DimensionError("tile: components have different row counts");
  const Shape s{binary.cols() * binary_tiles, quaternary.cols() * quaternary_tiles};
  GeneratorMatrix g(s);
  for (std::size_t r = 0; r < binary.rows(); ++r) {
    MixedVector v(s);
    for (std::size_t i = 0; i < s.gamma; ++i) v.set_binary(i, binary(r, i % binary.cols()));
    for (std::size_t j = 0; j < s.delta; ++j) v.set_quaternary(j, quaternary(r, j % quaternary.cols()));
    g.add_row(std::move(v));
  }
  return g;
}

GeneratorMatrix mixed_simplex(const SimplexParams& p, const Budget& budget) {
  require_k(p.k, "mixed_simplex");
  if (p.variant == Variant::beta && p.k < 3 && !p.force)
    throw DomainError("mixed simplex of type beta needs k >= 3 (use force for smaller k)");
  const std::size_t k = p.k;
  if (p.variant == Variant::alpha) {
    check_columns(3 * k + 1, budget, "mixed_simplex");
    return tile(binary_simplex(k, Variant::alpha, budget), pow2(2 * k), quaternary_simplex(k, Variant::alpha, budget),
                pow2(k));
  }
  check_columns(3 * k, budget, "mixed_simplex");
  return tile(binary_simplex(k, Variant::beta, budget), pow2(k), quaternary_simplex(k, Variant::beta, budget),
              pow2(k - 1));
}

IntMatrix delete_columns(const IntMatrix& host, const IntMatrix& remove) {
  if (host.rows() != remove.rows()) throw DimensionError("delete_columns: row counts differ");
  std::map<std::vector<int>, std::deque<std::size_t>> where;
  for (std::size_t c = 0; c < host.cols(); ++c) where[host.column(c)].push_back(c);
  std::vector<bool> gone(host.cols(), false);
  for (std::size_t c = 0; c < remove.cols(); ++c) {
    auto it = where.find(remove.column(c));
    if (it == where.end() || it->second.empty()) {
      std::string col;
      for (int x : remove.column(c)) col += static_cast<char>('0' + x);
      throw ConstructionError("column " + col + " to delete is not present in the host matrix");
    }
    gone[it->second.front()] = true;
    it->second.pop_front();
  }
  IntMatrix out(host.rows(), host.cols() - remove.cols());
  std::size_t j = 0;
  for (std::size_t c = 0; c < host.cols(); ++c) {
    if (gone[c]) continue;
    for (std::size_t r = 0; r < host.rows(); ++r) out(r, j) = static_cast<std::uint8_t>(host(r, c));
    ++j;
  }
  return out;
}

MacDonaldComponents macdonald_components(const MacDonaldParams& p, const Budget& budget) {
  if (p.u < 1 || p.u > p.k) throw DomainError("macdonald components: need 1 <= u <= k");
  const std::size_t k = p.k, u = p.u;
  check_columns(3 * k, budget, "macdonald_components");
  return {delete_columns(binary_simplex(k, p.variant, budget), pad_top(binary_simplex(u, p.variant, budget), k - u)),
          delete_columns(quaternary_simplex(k, p.variant, budget),
                         pad_top(quaternary_simplex(u, p.variant, budget), k - u))};
}

GeneratorMatrix macdonald_matrix(const MacDonaldParams& p, const Budget& budget) {
  if (p.u < 1 || p.u + 1 > p.k) throw DomainError("macdonald: need 1 <= u <= k-1");
  const std::size_t k = p.k;
  check_columns(3 * k + 1, budget, "macdonald_matrix");
  const auto [bin, quat] = macdonald_components(p, budget);
  if (p.variant == Variant::alpha) return tile(bin, pow2(2 * k), quat, pow2(k));
  return tile(bin, pow2(k), quat, pow2(k - 1));
}

// ---------------------------------------------------------------- repetition

GeneratorMatrix repetition_code(int i, std::size_t n) {
  if (i < 1 || i > 7) throw DomainError("repetition code index must be in 1..7, got " + std::to_string(i));
  if (n < 1) throw DomainError("repetition code needs at least one pair");
  GeneratorMatrix g(Shape{n, n});
  switch (i) {
    case 1:
      g.add_row(constant_pairs(0, 1, n));
      break;
    case 2:
      g.add_row(constant_pairs(0, 2, n));
      break;
    case 3:
      g.add_row(constant_pairs(0, 3, n));
      break;
    case 4:
      g.add_row(constant_pairs(1, 0, n));
      break;
    case 5:
      g.add_row(constant_pairs(1, 1, n));
      g.add_row(constant_pairs(1, 0, n));
      break;
    case 6:
      g.add_row(constant_pairs(1, 2, n));
      g.add_row(constant_pairs(0, 2, n));
      break;
    case 7:
      g.add_row(constant_pairs(1, 3, n));
      g.add_row(constant_pairs(1, 0, n));
      break;
  }
  return g;
}

GeneratorMatrix repetition_generator_row(int i, std::size_t n) {
  if (i < 1 || i > 7) throw DomainError("repetition code index must be in 1..7, got " + std::to_string(i));
  if (n < 1) throw DomainError("repetition code needs at least one pair");
  GeneratorMatrix g(Shape{n, n});
  g.add_row(constant_pairs(i >> 2, i & 3, n));
  return g;
}

std::size_t BlockRepetitionSpec::total() const {
  std::size_t t = 0;
  for (auto x : n) t += x;
  return t;
}

GeneratorMatrix block_repetition(const BlockRepetitionSpec& spec, BlockSpan span) {
  const std::size_t n = spec.total();
  if (n == 0) throw DomainError("block repetition needs at least one nonempty block");
  GeneratorMatrix g(Shape{n, n});
  if (span == BlockSpan::generator) {
    g.add_row(block_vector(spec, {1, 2, 3, 4, 5, 6, 7}));
    return g;
  }
  // The eight listed vectors (the zero vector omitted). In the eighth, the first
  // two blocks are printed as "03..02" and "302..02"; their leading symbols are used.
  static constexpr std::array<std::array<int, 7>, 7> listed = {{
      {1, 2, 3, 4, 5, 6, 7},
      {1, 2, 3, 0, 1, 2, 3},
      {2, 1, 2, 0, 2, 1, 2},
      {3, 2, 1, 0, 3, 4, 1},
      {0, 0, 0, 4, 4, 4, 4},
      {2, 0, 2, 4, 6, 4, 6},
      {3, 2, 1, 4, 7, 6, 5},
  }};
  for (const auto& s : listed) g.add_row(block_vector(spec, s));
  return g;
}

// ---------------------------------------------------------------- additive Reed-Muller

GeneratorMatrix arm_first_order(std::size_t m) {
  if (m < 3) throw DomainError("arm_first_order needs m >= 3");
  if (m > 21) throw ResourceError("arm_first_order: m too large");
  const std::size_t n = pow2(m - 1);
  GeneratorMatrix g(Shape{n, n});
  for (std::size_t i = 2; i + 1 <= m; ++i) {
    const std::size_t block = pow2(m - 1 - i);
    MixedVector v(n, n);
    for (std::size_t j = 0; j < n; ++j) v.set_quaternary(j, ((j / block) & 1U) ? 2 : 0);
    g.add_row(std::move(v));
  }
  g.add_row(constant_pairs(1, 1, n));
  return g;
}

GeneratorMatrix ambient_generators(Shape s) {
  GeneratorMatrix g(s);
  for (std::size_t c = 0; c < s.gamma + s.delta; ++c) {
    MixedVector v(s);
    v.set_digit(c, 1);
    g.add_row(std::move(v));
  }
  return g;
}

GeneratorMatrix arm_recursive(std::size_t r, std::size_t m) {
  if (m < 2 || r > m) throw DomainError("arm_recursive needs m >= 2 and 0 <= r <= m");
  if (m > 21) throw ResourceError("arm_recursive: m too large");
  const Shape s{pow2(m - 1), pow2(m - 2)};
  if (r == m) return ambient_generators(s);
  if (r == 0) {
    MixedVector v(s);
    for (std::size_t i = 0; i < s.gamma; ++i) v.set_binary(i, 1);
    for (std::size_t j = 0; j < s.delta; ++j) v.set_quaternary(j, 2);
    return GeneratorMatrix(s, {v});
  }
  if (m == 2) return GeneratorMatrix(s, {MixedVector::parse("11|2"), MixedVector::parse("01|1")});

  const GeneratorMatrix top = arm_recursive(r, m - 1);
  const GeneratorMatrix bottom = arm_recursive(r - 1, m - 1);
  GeneratorMatrix g(s);
  for (const auto& row : top.rows()) g.add_row(concat(row, row));
  const MixedVector zero(top.shape());
  for (const auto& row : bottom.rows()) g.add_row(concat(zero, row));
  return g;
}

}  // namespace z2z4
