#include <random>
#include <sstream>
#include <unordered_set>
#include <bit>

#include "doctest.h"
#include "oracle.hpp"
#include "z2z4/codes.hpp"
#include "z2z4/constructions.hpp"
#include "z2z4/errors.hpp"

using namespace z2z4;
using V = MixedVector;

namespace {

GeneratorMatrix rows(Shape s, std::initializer_list<const char*> text) {
  GeneratorMatrix g(s);
  for (auto t : text) g.add_row(V::parse(t));
  return g;
}

std::set<oracle::Word> as_set(const std::vector<V>& words) {
  std::set<oracle::Word> out;
  for (const auto& w : words) out.insert(oracle::from(w));
  return out;
}

// Type from the naive closure: mu = log|C| - log|C[2]|, kappa = rank of binary parts of C[2].
CodeType naive_type(const GeneratorMatrix& g) {
  const auto code = oracle::closure(g);
  std::size_t two = 0;
  std::vector<std::vector<int>> bins;
  for (const auto& w : code) {
    bool ord2 = std::all_of(w.q.begin(), w.q.end(), [](int q) { return q % 2 == 0; });
    if (!ord2) continue;
    ++two;
    bins.push_back(w.b);
  }
  // Gaussian elimination over Z2.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < g.gamma(); ++c) {
    std::size_t p = rank;
    while (p < bins.size() && bins[p][c] == 0) ++p;
    if (p == bins.size()) continue;
    std::swap(bins[p], bins[rank]);
    for (std::size_t r = 0; r < bins.size(); ++r)
      if (r != rank && bins[r][c])
        for (std::size_t k = 0; k < g.gamma(); ++k) bins[r][k] ^= bins[rank][k];
    ++rank;
  }
  auto lg = [](std::size_t n) { return static_cast<std::size_t>(std::countr_zero(n)); };
  CodeType t;
  t.gamma = g.gamma();
  t.delta = g.delta();
  t.mu = lg(code.size()) - lg(two);
  t.lambda = lg(two) - t.mu;
  t.kappa = rank;
  return t;
}

}  // namespace

TEST_CASE("enumerate examples") {
  std::vector<V> got;
  enumerate(repetition_code(1, 1), [&](const V& v) { got.push_back(v); });
  CHECK(as_set(got) == as_set({V::parse("0|0"), V::parse("0|1"), V::parse("0|2"), V::parse("0|3")}));
  CHECK(got.size() == 4);

  got.clear();
  CHECK(enumerate(GeneratorMatrix(Shape{2, 1}), [&](const V& v) { got.push_back(v); }) == 1);
  CHECK(got == std::vector<V>{V(2, 1)});

  const auto two = rows({0, 1}, {"|2"});
  CHECK(span(two).words == std::vector<V>{V::parse("|0"), V::parse("|2")});

  Budget tiny;
  tiny.code_log2 = 3;
  CHECK_THROWS_AS(enumerate(rows({0, 2}, {"|10", "|01"}), [](const V&) {}, tiny), ResourceError);
}

TEST_CASE("dependent rows are deduplicated") {
  const auto g = rows({1, 2}, {"1|12", "1|12", "0|02", "0|00"});
  const auto s = span(g);
  CHECK(s.words.size() == 8);
  CHECK(s.lambda == 1);
  CHECK(s.mu == 1);
  std::uint64_t visits = 0;
  enumerate(g, [&](const V&) { ++visits; });
  CHECK(visits == 32);  // 4 * 4 * 2, the zero row is skipped
}

TEST_CASE("classify_type examples") {
  const CodeType c5 = classify_type(repetition_code(5, 1));
  CHECK(c5 == CodeType{1, 1, 1, 1, 1});
  CHECK(classify_type(GeneratorMatrix(Shape{3, 2})) == CodeType{3, 2, 0, 0, 0});
  const CodeType th = classify_type(mixed_simplex({1, Variant::alpha}));
  CHECK(th.lambda == 0);
  CHECK(th.mu == 1);
  CHECK(th.log2_size() == 2);
}

TEST_CASE("property: type, size and closure on random codes") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t g = rng() % 4, d = 1 + rng() % 4;
    const auto code = oracle::random_code(rng, g, d, rng() % 4);
    const auto naive = oracle::closure(code);
    const auto s = span(code);
    REQUIRE(as_set(s.words) == naive);
    const CodeType ct = classify_type(code);
    REQUIRE(ct == naive_type(code));
    REQUIRE(naive.size() == (std::size_t{1} << ct.log2_size()));
    REQUIRE(ct.kappa <= std::min(ct.lambda + ct.mu, ct.gamma));
    REQUIRE(standard_form(code).type == ct);
  }
}

TEST_CASE("standard form examples") {
  const auto single = rows({1, 1}, {"1|1"});
  const auto sf1 = standard_form(single);
  CHECK(sf1.type == CodeType{1, 1, 0, 1, 0});
  CHECK(sf1.matrix.rows().front() == V::parse("1|1"));

  const auto g = rows({2, 1}, {"11|0", "00|1"});
  const auto sf = standard_form(g);
  CHECK(sf.type == CodeType{2, 1, 1, 1, 1});
  CHECK(sf.t_prime.rows() == 1);
  CHECK(sf.t_prime.cols() == 1);
  CHECK(sf.t_prime(0, 0) == 1);
  CHECK(sf.matrix.rows()[0] == V::parse("11|0"));
  CHECK(sf.matrix.rows()[1] == V::parse("00|1"));
}

namespace {

// Checks the block template of the standard form in permuted coordinates.
void check_template(const StandardForm& sf) {
  const auto& t = sf.type;
  const std::size_t k = t.kappa, lk = t.lambda - t.kappa, mu = t.mu;
  const std::size_t rq = t.delta - lk - mu;
  REQUIRE(sf.matrix.size() == k + lk + mu);
  for (std::size_t r = 0; r < sf.matrix.size(); ++r) {
    const V& v = sf.matrix.rows()[r];
    for (std::size_t i = 0; i < k; ++i) REQUIRE(v.binary(i) == (r < k && r == i ? 1 : 0));
    if (r >= k) {
      for (std::size_t i = k; i < t.gamma; ++i)
        if (r < k + lk) REQUIRE(v.binary(i) == 0);
    }
    for (std::size_t j = 0; j < lk; ++j) {
      const int e = v.quaternary(rq + j);
      if (r < k) REQUIRE(e == 0);
      else if (r < k + lk) REQUIRE(e == (r - k == j ? 2 : 0));
      else REQUIRE(e <= 1);
    }
    for (std::size_t j = 0; j < mu; ++j) REQUIRE(v.quaternary(rq + lk + j) == (r == k + lk + j ? 1 : 0));
    if (r < k + lk)
      for (std::size_t j = 0; j < rq; ++j) REQUIRE(v.quaternary(j) % 2 == 0);
  }
}

}  // namespace

TEST_CASE("property: standard form preserves the code up to its permutation") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 80; ++t) {
    const std::size_t g = rng() % 5, d = rng() % 5;
    const auto code = oracle::random_code(rng, g, d, rng() % 5);
    const auto sf = standard_form(code);
    check_template(sf);
    std::set<oracle::Word> permuted;
    for (const auto& w : oracle::closure(code)) permuted.insert(oracle::from(permute(oracle::to_vec(w), sf.column_permutation)));
    REQUIRE(oracle::closure(sf.matrix) == permuted);
    // basis generates the code as a direct sum
    std::size_t log = 0;
    for (const auto& b : sf.basis) log += b.order() == 4 ? 2 : 1;
    REQUIRE(log == sf.type.log2_size());
    REQUIRE(oracle::closure(GeneratorMatrix(code.shape(), sf.basis)) == oracle::closure(code));
    for (const auto& w : oracle::closure(code)) {
      const V v = oracle::to_vec(w);
      REQUIRE(unpermute(permute(v, sf.column_permutation), sf.column_permutation) == v);
    }
  }
}

TEST_CASE("parity-check examples") {
  const auto g = rows({1, 1}, {"1|0"});
  const auto sf = standard_form(g);
  const auto h = parity_check(sf);
  const auto dual = oracle::closure(h);
  CHECK(dual.count(oracle::from(permute(V::parse("0|1"), sf.column_permutation))) == 1);

  const auto full = ambient_generators({2, 2});
  const auto hf = parity_check(standard_form(full));
  CHECK(oracle::closure(hf).size() == 1);
}

TEST_CASE("property: corrected parity check is the dual; printed form fails when lambda > kappa") {
  std::mt19937_64 rng(12);
  int printed_failures = 0, lk_cases = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t g = rng() % 4, d = 1 + rng() % 4;
    const auto code = oracle::random_code(rng, g, d, 1 + rng() % 4);
    const auto sf = standard_form(code);
    const auto h = parity_check(sf, ParityVariant::corrected);
    for (const auto& a : h.rows())
      for (const auto& b : sf.matrix.rows()) REQUIRE(inner_product(a, b) == 0);
    std::set<oracle::Word> d_perm;
    for (const auto& w : oracle::dual(code)) d_perm.insert(oracle::from(permute(oracle::to_vec(w), sf.column_permutation)));
    REQUIRE(oracle::closure(h) == d_perm);

    const auto p = parity_check(sf, ParityVariant::printed);
    bool orth = true;
    for (const auto& a : p.rows())
      for (const auto& b : sf.matrix.rows()) orth = orth && inner_product(a, b) == 0;
    if (sf.type.lambda > sf.type.kappa) {
      ++lk_cases;
      if (!orth) ++printed_failures;
    } else {
      REQUIRE(orth);
    }
  }
  CHECK(lk_cases > 0);
  CHECK(printed_failures == lk_cases);
}

TEST_CASE("derive_dual falls back in order") {
  const auto g = rows({0, 2}, {"|20"});  // lambda = 1 > kappa = 0
  const auto d = derive_dual(g);
  CHECK(d.source == "corrected");
  CHECK_FALSE(d.printed_orthogonal);
  CHECK(oracle::closure(d.generators) == oracle::dual(g));

  const auto h = rows({1, 1}, {"1|1"});
  CHECK(derive_dual(h).source == "printed");
}

TEST_CASE("kernel dual examples") {
  const auto g = rows({0, 1}, {"|2"});
  const auto k = kernel_dual(g);
  CHECK(k.elements.size() == 2);
  CHECK(oracle::closure(k.generators) == std::set<oracle::Word>{oracle::from(V::parse("|0")), oracle::from(V::parse("|2"))});

  const auto zero = GeneratorMatrix(Shape{1, 2});
  CHECK(kernel_dual(zero).elements.size() == 32);

  Budget small;
  small.ambient_log2 = 4;
  CHECK_THROWS_AS(kernel_dual(GeneratorMatrix(Shape{1, 2}), small), ResourceError);
}

TEST_CASE("property: |C| |C^perp| = 2^(gamma+2delta) and duality is an involution") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const std::size_t g = rng() % 4, d = 1 + rng() % 4;
    const auto code = oracle::random_code(rng, g, d, 1 + rng() % 3);
    const auto k = kernel_dual(code);
    CHECK(span(code).words.size() * k.elements.size() == (std::size_t{1} << (g + 2 * d)));
    CHECK(as_set(span(kernel_dual(k.generators).generators).words) == oracle::closure(code));
    std::set<oracle::Word> ks;
    for (auto x : k.elements) ks.insert(oracle::from(k.space.unpack(x)));
    CHECK(ks == oracle::dual(code));
  }
}

TEST_CASE("weight distributions") {
  const auto a1 = weight_distribution(repetition_code(1, 1), Metric::lee);
  CHECK(a1.counts == std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 2}, {2, 1}});
  CHECK(minimum_distance(repetition_code(1, 1), Metric::lee) == 1);
  const auto a2 = weight_distribution(repetition_code(2, 1), Metric::euclidean);
  CHECK(a2.counts == std::map<std::size_t, std::uint64_t>{{0, 1}, {4, 1}});
  CHECK(minimum_distance(repetition_code(2, 1), Metric::euclidean) == 4);
  CHECK_THROWS_AS(minimum_distance(GeneratorMatrix(Shape{1, 1}), Metric::lee), DomainError);

  for (int i = 1; i <= 7; ++i)
    for (std::size_t n = 1; n <= 4; ++n)
      for (auto m : {Metric::lee, Metric::euclidean}) {
        const auto one = weight_distribution(repetition_code(i, 1), m);
        const auto many = weight_distribution(repetition_code(i, n), m);
        std::map<std::size_t, std::uint64_t> dilated;
        for (const auto& [w, c] : one.counts) dilated[w * n] += c;
        CHECK(many.counts == dilated);
        CHECK(many.total() == span(repetition_code(i, n)).words.size());
      }
}

TEST_CASE("weight distribution of wide codes uses the generic path") {
  const auto g = mixed_simplex({2, Variant::alpha});
  const auto w = weight_distribution(g, Metric::lee);
  CHECK(w.total() == 16);
  CHECK(w.counts.at(0) == 1);
  std::uint64_t count = 0;
  enumerate(g, [&](const V& v) { count += weight(v, Metric::lee) == 0; });
  CHECK(count == 1);
}

TEST_CASE("property: constructed codes are closed groups") {
  std::vector<GeneratorMatrix> family;
  for (int i = 1; i <= 7; ++i) family.push_back(repetition_code(i, 3));
  family.push_back(mixed_simplex({1, Variant::alpha}));
  family.push_back(arm_first_order(3));
  family.push_back(arm_first_order(4));
  family.push_back(arm_recursive(1, 3));
  family.push_back(block_repetition({{1, 1, 0, 1, 0, 1, 0}}, BlockSpan::paper_listed));
  for (const auto& g : family) {
    const auto s = span(g);
    REQUIRE(s.words.size() <= (1U << 16));
    std::unordered_set<V> set(s.words.begin(), s.words.end());
    for (const auto& a : s.words) {
      for (int k = 0; k < 4; ++k) REQUIRE(set.count(scalar_mul(k, a)));
      for (const auto& b : s.words) REQUIRE(set.count(a + b));
    }
  }
}

TEST_CASE("matrix text format") {
  const auto g = rows({2, 3}, {"10|123", "01|002"});
  const std::string text = format_matrix(g);
  CHECK(text == "gamma=2 delta=3\n10 | 123\n01 | 002\n");
  CHECK(parse_matrix(text) == g);
  CHECK(parse_matrix("# comment\n\ngamma=2 delta=3   # shape\n10|123\n 01 | 002 # row\n") == g);
  CHECK(parse_matrix("gamma=0 delta=0\n").size() == 0);
  CHECK_THROWS_AS(parse_matrix("10|123\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("gamma=2 delta=3\n10|12\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("gamma=2 delta=x\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("gamma=1 delta=1\n1|4\n"), ParseError);
}

TEST_CASE("JSON keys are stable") {
  const auto j = to_json(CodeType{1, 2, 3, 4, 5});
  CHECK(j.dump() == R"({"gamma":1,"delta":2,"lambda":3,"mu":4,"kappa":5})");
  CHECK(code_type_from_json(nlohmann::json::parse(j.dump())) == CodeType{1, 2, 3, 4, 5});
  const auto w = weight_distribution(repetition_code(1, 1), Metric::lee);
  const auto jw = to_json(w);
  CHECK(jw.dump() == R"({"metric":"lee","counts":{"0":1,"1":2,"2":1}})");
  CHECK(weight_distribution_from_json(nlohmann::json::parse(jw.dump())).counts == w.counts);
  CHECK_THROWS_AS(code_type_from_json(nlohmann::json::parse("{}")), ParseError);
}
