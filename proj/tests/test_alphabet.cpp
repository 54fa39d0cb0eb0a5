#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "z2z4/alphabet.hpp"
#include "z2z4/errors.hpp"

using namespace z2z4;
using V = MixedVector;

TEST_CASE("gray symbol table") {
  CHECK(gray_symbol(0) == std::pair{0, 0});
  CHECK(gray_symbol(1) == std::pair{0, 1});
  CHECK(gray_symbol(2) == std::pair{1, 1});
  CHECK(gray_symbol(3) == std::pair{1, 0});
  CHECK_THROWS_AS(gray_symbol(4), DomainError);
}

TEST_CASE("gray map examples") {
  CHECK(gray_map(V::parse("1|2")).to_string() == "111");
  CHECK(gray_map(V(2, 2)).to_string() == "000000");
  CHECK(gray_map(V::parse("|13")).to_string() == "0110");
  CHECK(gray_map(V::parse("101|")).to_string() == "101");
}

TEST_CASE("weights and distances") {
  CHECK(weight(V::parse("1|3"), Metric::lee) == 2);
  CHECK(weight(V::parse("0|2"), Metric::euclidean) == 4);
  CHECK(weight(V::parse("0|2"), Metric::hamming) == 1);
  for (auto m : {Metric::hamming, Metric::lee, Metric::euclidean}) CHECK(weight(V(3, 4), m) == 0);

  CHECK(distance(V::parse("1|1"), V::parse("0|3"), Metric::lee) == 3);
  CHECK(distance(V::parse("0|0"), V::parse("1|2"), Metric::euclidean) == 5);
  const V v = V::parse("10|231");
  CHECK(distance(v, v, Metric::lee) == 0);
  CHECK_THROWS_AS(distance(V(1, 1), V(1, 2), Metric::lee), DimensionError);
}

TEST_CASE("inner product examples") {
  CHECK(inner_product(V::parse("1|2"), V::parse("1|3")) == 0);
  CHECK(inner_product(V::parse("1|1"), V::parse("1|1")) == 3);
  CHECK(inner_product(V(1, 1), V::parse("1|3")) == 0);
  CHECK_THROWS_AS(inner_product(V(1, 1), V(2, 1)), DimensionError);
}

TEST_CASE("module operations") {
  CHECK(scalar_mul(2, V::parse("1|1")) == V::parse("0|2"));
  CHECK(scalar_mul(3, V::parse("1|2")) == V::parse("1|2"));
  CHECK(scalar_mul(-1, V::parse("1|13")) == V::parse("1|31"));
  CHECK(scalar_mul(0, V::parse("1|13")) == V::parse("0|00"));
  CHECK(add(V::parse("1|3"), V::parse("1|3")) == V::parse("0|2"));
  CHECK_THROWS_AS(add(V(1, 1), V(0, 1)), DimensionError);
  CHECK(V::parse("1|1").order() == 4);
  CHECK(V::parse("1|2").order() == 2);
  CHECK(V::parse("0|0").order() == 1);
}

TEST_CASE("text form") {
  CHECK(V::parse("01 | 0123").to_string() == "01 | 0123");
  CHECK(V::parse("0 1|0 1 2 3") == V::parse("01 | 0123"));
  CHECK(V::parse("|").to_string() == " | ");
  CHECK_THROWS_AS(V::parse("0123"), ParseError);
  CHECK_THROWS_AS(V::parse("0|1|2"), ParseError);
  CHECK_THROWS_AS(V::parse("2|0"), ParseError);
  CHECK_THROWS_AS(V::parse("0|4"), ParseError);
  CHECK_THROWS_AS(V::parse("x|0"), ParseError);
  const int bad[] = {5};
  CHECK_THROWS_AS(V::from_digits(std::span<const int>(), std::span<const int>(bad)), DomainError);
}

TEST_CASE("wide vectors cross word boundaries") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const V a = oracle::random_vector(rng, 70, 130);
    const V b = oracle::random_vector(rng, 70, 130);
    CHECK(oracle::from(a + b) == oracle::plus(oracle::from(a), oracle::from(b)));
    CHECK(oracle::from(a - b) == oracle::minus(oracle::from(a), oracle::from(b)));
    CHECK(inner_product(a, b) == oracle::inner(oracle::from(a), oracle::from(b)));
    for (auto m : {Metric::hamming, Metric::lee, Metric::euclidean})
      CHECK(weight(a, m) == static_cast<std::size_t>(oracle::weight(oracle::from(a), m)));
  }
}

TEST_CASE("property: Gray isometry on 10^4 random pairs") {
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t g = rng() % 13, d = rng() % 13;
    const V u = oracle::random_vector(rng, g, d);
    const V v = oracle::random_vector(rng, g, d);
    const auto gu = oracle::gray(oracle::from(u)), gv = oracle::gray(oracle::from(v));
    std::size_t h = 0;
    for (std::size_t i = 0; i < gu.size(); ++i) h += gu[i] != gv[i];
    REQUIRE(distance(u, v, Metric::lee) == h);
    REQUIRE(hamming_distance(gray_map(u), gray_map(v)) == h);
    REQUIRE(weight(u, Metric::lee) == gray_map(u).weight());
  }
}

TEST_CASE("property: metric ordering and biadditivity") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t g = rng() % 9, d = rng() % 9;
    const V u = oracle::random_vector(rng, g, d), v = oracle::random_vector(rng, g, d),
            w = oracle::random_vector(rng, g, d);
    REQUIRE(weight(u, Metric::hamming) <= weight(u, Metric::lee));
    REQUIRE(weight(u, Metric::lee) <= weight(u, Metric::euclidean));
    REQUIRE(inner_product(u + w, v) == (inner_product(u, v) + inner_product(w, v)) % 4);
    REQUIRE(inner_product(u, v) == inner_product(v, u));
    for (int a = 0; a < 4; ++a) {
      oracle::Word expect = oracle::from(u);
      for (auto& x : expect.b) x = (a * x) % 2;
      for (auto& x : expect.q) x = (a * x) % 4;
      REQUIRE(oracle::from(scalar_mul(a, u)) == expect);
    }
  }
}

TEST_CASE("per-symbol weight enumerators over the 8 mixed symbols") {
  std::vector<int> euclid(6, 0), lee(4, 0);
  for (int b = 0; b < 2; ++b)
    for (int q = 0; q < 4; ++q) {
      const V v = V::from_digits({b}, {q});
      ++euclid[weight(v, Metric::euclidean)];
      ++lee[weight(v, Metric::lee)];
    }
  CHECK(euclid == std::vector<int>{1, 3, 2, 0, 1, 1});
  CHECK(lee == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("ordering and hashing") {
  CHECK(V::parse("0|3") < V::parse("1|0"));
  CHECK(V::parse("1|02") < V::parse("1|10"));
  CHECK(std::hash<V>{}(V::parse("1|2")) == std::hash<V>{}(V::parse("1|2")));
  CHECK(to_string(Shape{3, 4}) == "gamma=3 delta=4");
  CHECK(parse_metric("lee") == Metric::lee);
  CHECK_THROWS_AS(parse_metric("taxicab"), ParseError);
}
