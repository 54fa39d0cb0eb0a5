#include <bit>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "z2z4/codes.hpp"
#include "z2z4/constructions.hpp"
#include "z2z4/errors.hpp"

using namespace z2z4;
using V = MixedVector;

namespace {

std::vector<std::vector<int>> as_rows(const IntMatrix& m) {
  std::vector<std::vector<int>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
  return out;
}

std::set<oracle::Word> constants(std::initializer_list<std::pair<int, int>> syms, std::size_t n) {
  std::set<oracle::Word> out;
  for (auto [b, q] : syms) out.insert({std::vector<int>(n, b), std::vector<int>(n, q)});
  return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("component simplex matrices") {
  CHECK(as_rows(binary_simplex(1, Variant::alpha)) == std::vector<std::vector<int>>{{0, 1}});
  CHECK(as_rows(quaternary_simplex(1, Variant::alpha)) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(as_rows(quaternary_simplex(2, Variant::beta)) ==
        std::vector<std::vector<int>>{{1, 1, 1, 1, 0, 2}, {0, 1, 2, 3, 1, 1}});
  CHECK(as_rows(binary_simplex(2, Variant::beta)) == std::vector<std::vector<int>>{{0, 1, 1}, {1, 0, 1}});
  CHECK(as_rows(quaternary_simplex(1, Variant::beta)) == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(binary_simplex(0, Variant::alpha), DomainError);
  Budget b;
  b.columns_log2 = 10;
  CHECK_THROWS_AS(quaternary_simplex(6, Variant::alpha, b), ResourceError);
}

TEST_CASE("property: beta quaternary simplex length and size") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const IntMatrix q = quaternary_simplex(k, Variant::beta);
    CHECK(q.cols() == (std::size_t{1} << (k - 1)) * ((std::size_t{1} << k) - 1));
    const auto g = tile(IntMatrix(k, 0), 1, q, 1);
    CHECK(span(g).words.size() == std::size_t{1} << (2 * k));
    // no column is a unit multiple of another, and none is zero
    std::set<std::vector<int>> seen;
    for (std::size_t c = 0; c < q.cols(); ++c) {
      std::vector<int> col = q.column(c), neg = col;
      for (auto& x : neg) x = (4 - x) % 4;
      CHECK(std::any_of(col.begin(), col.end(), [](int x) { return x != 0; }));
      CHECK(seen.count(col) == 0);
      CHECK(seen.count(neg) == 0);
      seen.insert(col);
    }
  }
}

TEST_CASE("mixed simplex shapes") {
  const auto a1 = mixed_simplex({1, Variant::alpha});
  CHECK(a1.shape() == Shape{8, 8});
  CHECK(a1.gamma() + a1.delta() == 16);
  CHECK(a1.size() == 1);
  CHECK(span(a1).words.size() == 4);

  const auto a2 = mixed_simplex({2, Variant::alpha});
  CHECK(a2.shape() == Shape{64, 64});
  CHECK(span(a2).words.size() == 16);

  const auto b3 = mixed_simplex({3, Variant::beta});
  CHECK(b3.shape() == Shape{56, 112});
  CHECK_THROWS_AS(mixed_simplex({2, Variant::beta}), DomainError);
  const auto b2 = mixed_simplex({2, Variant::beta, true});
  CHECK(b2.shape() == Shape{12, 12});
}

TEST_CASE("property: tiling identity") {
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto g = mixed_simplex({k, Variant::alpha});
    const std::size_t bw = std::size_t{1} << k, qw = std::size_t{1} << (2 * k);
    std::mt19937_64 rng(k);
    std::size_t checked = 0;
    enumerate(g, [&](const V& c) {
      if (k == 2 && rng() % 3 != 0) return;
      ++checked;
      for (std::size_t i = 0; i < g.gamma(); ++i) REQUIRE(c.binary(i) == c.binary(i % bw));
      for (std::size_t j = 0; j < g.delta(); ++j) REQUIRE(c.quaternary(j) == c.quaternary(j % qw));
    });
    CHECK(checked > 0);
  }
}

TEST_CASE("MacDonald shapes") {
  const auto m21 = macdonald_matrix({2, 1, Variant::alpha});
  CHECK(m21.shape() == Shape{32, 48});
  for (std::size_t k = 2; k <= 3; ++k)
    for (std::size_t u = 1; u < k; ++u) {
      const auto g = macdonald_matrix({k, u, Variant::alpha});
      const std::size_t tk = std::size_t{1} << k, tu = std::size_t{1} << u;
      CHECK(g.gamma() == tk * tk * (tk - tu));
      CHECK(g.delta() == tk * (tk * tk - tu * tu));
    }
  CHECK_THROWS_AS(macdonald_matrix({2, 2, Variant::alpha}), DomainError);
  CHECK_THROWS_AS(macdonald_matrix({2, 0, Variant::alpha}), DomainError);

  // per copy, 2^k - 2^u binary columns remain: k=3, u=2 leaves 4
  const IntMatrix host = binary_simplex(3, Variant::alpha);
  IntMatrix pad(3, 4);
  const IntMatrix s2 = binary_simplex(2, Variant::alpha);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 4; ++c) pad(r + 1, c) = s2(r, c);
  const IntMatrix rem = delete_columns(host, pad);
  CHECK(rem.cols() == 4);
}

TEST_CASE("MacDonald deletes exactly the zero-topped columns") {
  const std::size_t k = 2;
  const IntMatrix b = binary_simplex(k, Variant::alpha);
  IntMatrix pad(k, 2);
  pad(1, 1) = 1;
  const IntMatrix kept = delete_columns(b, pad);
  CHECK(kept.cols() == 2);
  for (std::size_t c = 0; c < kept.cols(); ++c) CHECK(kept(0, c) != 0);  // top k-u entries nonzero
  CHECK_THROWS_AS(delete_columns(kept, pad), ConstructionError);

  // the builder drops all columns whose top entry is zero from every binary tile
  const auto g = macdonald_matrix({2, 1, Variant::alpha});
  for (std::size_t i = 0; i < g.gamma(); ++i) CHECK(g.rows()[0].binary(i) == 1);
}

TEST_CASE("repetition codes") {
  CHECK(oracle::closure(repetition_code(1, 1)) == constants({{0, 0}, {0, 1}, {0, 2}, {0, 3}}, 1));
  CHECK(oracle::closure(repetition_code(3, 2)) == constants({{0, 0}, {0, 1}, {0, 2}, {0, 3}}, 2));
  CHECK(oracle::closure(repetition_code(2, 3)) == constants({{0, 0}, {0, 2}}, 3));
  CHECK(oracle::closure(repetition_code(4, 2)) == constants({{0, 0}, {1, 0}}, 2));
  const auto all8 = constants({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3}}, 1);
  CHECK(oracle::closure(repetition_code(5, 1)) == all8);
  CHECK(oracle::closure(repetition_code(7, 1)) == all8);
  CHECK(oracle::closure(repetition_code(6, 2)) == constants({{0, 0}, {0, 2}, {1, 0}, {1, 2}}, 2));
  CHECK_THROWS_AS(repetition_code(0, 1), DomainError);
  CHECK_THROWS_AS(repetition_code(8, 1), DomainError);
  CHECK_THROWS_AS(repetition_code(1, 0), DomainError);

  // the one-row generators of 5 and 7 only reach 4 constants
  CHECK(oracle::closure(repetition_generator_row(5, 1)).size() == 4);
  CHECK(oracle::closure(repetition_generator_row(7, 1)).size() == 4);
  CHECK(oracle::closure(repetition_generator_row(6, 1)).size() == 2);
}

TEST_CASE("block repetition") {
  CHECK(oracle::closure(block_repetition({{1, 0, 0, 0, 0, 0, 0}})) ==
        constants({{0, 0}, {0, 1}, {0, 2}, {0, 3}}, 1));
  CHECK(oracle::closure(block_repetition({{0, 0, 0, 1, 0, 0, 0}})) == constants({{0, 0}, {1, 0}}, 1));
  const auto all = block_repetition({{1, 1, 1, 1, 1, 1, 1}});
  CHECK(all.shape() == Shape{7, 7});
  CHECK(oracle::closure(all).size() == 4);
  CHECK(all.rows().front() == V::parse("0001111|1230123"));
  CHECK_THROWS_AS(block_repetition({{0, 0, 0, 0, 0, 0, 0}}), DomainError);

  const auto listed = block_repetition({{1, 1, 1, 1, 1, 1, 1}}, BlockSpan::paper_listed);
  CHECK(listed.shape() == Shape{7, 7});
  const auto lc = oracle::closure(listed);
  CHECK(std::has_single_bit(lc.size()));
  CHECK(lc.size() > 4);
  // the generated group is inside the listed span
  for (const auto& w : oracle::closure(all)) CHECK(lc.count(w) == 1);
  CHECK(parse_block_span("paper-listed") == BlockSpan::paper_listed);
  CHECK(to_string(BlockSpan::generator) == "generator");
}

TEST_CASE("first-order ARM matrix") {
  const auto g3 = arm_first_order(3);
  CHECK(g3.size() == 2);
  CHECK(g3.rows()[0] == V::parse("0000|0202"));
  CHECK(g3.rows()[1] == V::parse("1111|1111"));
  CHECK(oracle::closure(g3).size() == 8);

  const auto g4 = arm_first_order(4);
  CHECK(g4.size() == 3);
  CHECK(g4.shape() == Shape{8, 8});
  CHECK(g4.rows()[0] == V::parse("00000000|00220022"));
  CHECK_THROWS_AS(arm_first_order(2), DomainError);

  for (std::size_t m = 3; m <= 5; ++m) {
    const auto c = oracle::closure(arm_first_order(m));
    CHECK(c.size() == std::size_t{1} << m);
    std::size_t two = 0;
    for (const auto& w : c) two += std::all_of(w.q.begin(), w.q.end(), [](int q) { return q % 2 == 0; });
    CHECK(two == std::size_t{1} << (m - 1));
  }
}

TEST_CASE("recursive ARM") {
  CHECK(oracle::closure(arm_recursive(1, 3)).size() == 16);
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t r = 0; r <= m; ++r) {
      const auto g = arm_recursive(r, m);
      CHECK(g.shape() == Shape{std::size_t{1} << (m - 1), std::size_t{1} << (m - 2)});
      std::size_t k = 0;
      for (std::size_t i = 0; i <= r; ++i) k += binom(m, i);
      CHECK(classify_type(g).log2_size() == k);
    }
  for (auto [r, m] : {std::pair<std::size_t, std::size_t>{1, 3}, {1, 4}, {2, 4}}) {
    const auto c = oracle::closure(arm_recursive(r, m));
    int d = 1 << 30;
    for (const auto& w : c)
      if (oracle::weight(w, Metric::lee) > 0) d = std::min(d, oracle::weight(w, Metric::lee));
    CHECK(d == (1 << (m - r)));
  }
  const auto full = arm_recursive(3, 3);
  CHECK(oracle::closure(full).size() == (std::size_t{1} << 8));
  CHECK_THROWS_AS(arm_recursive(4, 3), DomainError);
  CHECK_THROWS_AS(arm_recursive(0, 1), DomainError);
}

TEST_CASE("property: builders are deterministic") {
  CHECK(mixed_simplex({2, Variant::alpha}) == mixed_simplex({2, Variant::alpha}));
  CHECK(mixed_simplex({3, Variant::beta}) == mixed_simplex({3, Variant::beta}));
  CHECK(macdonald_matrix({3, 2, Variant::beta}) == macdonald_matrix({3, 2, Variant::beta}));
  CHECK(arm_recursive(2, 4) == arm_recursive(2, 4));
  CHECK(block_repetition({{2, 0, 1, 0, 3, 0, 1}}, BlockSpan::paper_listed) ==
        block_repetition({{2, 0, 1, 0, 3, 0, 1}}, BlockSpan::paper_listed));
  CHECK(format_matrix(arm_first_order(5)) == format_matrix(arm_first_order(5)));
}

TEST_CASE("ambient generators span everything") {
  CHECK(oracle::closure(ambient_generators({2, 1})).size() == 16);
  CHECK(classify_type(ambient_generators({3, 2})) == CodeType{3, 2, 3, 2, 3});
}

TEST_CASE("MacDonald components") {
  const auto c = macdonald_components({3, 1, Variant::alpha});
  CHECK(c.binary.cols() == 6);
  CHECK(c.quaternary.cols() == 60);
  const auto full = macdonald_components({2, 2, Variant::beta});
  CHECK(full.binary.cols() == 0);
  CHECK(full.quaternary.cols() == 0);
  CHECK(full.binary.rows() == 2);
  const auto g = macdonald_matrix({3, 1, Variant::alpha});
  CHECK(g == tile(c.binary, 64, c.quaternary, 8));
  CHECK_THROWS_AS(macdonald_components({2, 3, Variant::alpha}), DomainError);
  CHECK_THROWS_AS(macdonald_components({2, 0, Variant::alpha}), DomainError);
}
