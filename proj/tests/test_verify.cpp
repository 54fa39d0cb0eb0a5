#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/verify.hpp"

using namespace z2z4;

namespace {

Grid small_grid() {
  Grid g;
  g.n = {1, 2};
  g.mixed_k = {};
  g.beta_k = {};
  g.component_k = {1};
  g.macdonald = {{2, 1}};
  g.arm_m = {3};
  g.mattson_trials = 3;
  return g;
}

std::optional<Quantity> claimed(const AuditEntry& e, const std::string& convention) {
  for (const auto& [name, value] : e.conventions)
    if (name == convention) return value;
  FAIL("no convention " << convention);
  return std::nullopt;
}

Rational number(const std::optional<Quantity>& q) {
  REQUIRE(q);
  REQUIRE(q->number);
  return *q->number;
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& claims = register_claims();
  CHECK(claims.size() >= 16);
  std::set<std::string> ids;
  for (const auto& c : claims) {
    CHECK_MESSAGE(ids.insert(c.id).second, c.id);
    CHECK_MESSAGE(std::count(c.source.begin(), c.source.end(), '"') >= 2, c.id);
    CHECK_MESSAGE(!c.conventions.empty(), c.id);
    CHECK(c.points);
    CHECK(c.claimed);
    CHECK(c.ground);
    const bool decisive = std::any_of(c.conventions.begin(), c.conventions.end(), [](auto& v) { return v.decisive; });
    CHECK_MESSAGE(decisive, c.id);
  }
  for (const char* id : {"thm1-lee-Ca1", "thm2-euclid-Ca5", "thm3-euclid-Ca6", "thm4-euclid-7n", "thm5-lee-eq",
                         "thm6-lee-bound", "thm14-lee-alpha-dual", "macdonald-dual-lee-alpha", "arm-radius-lee",
                         "thm7-gray-image", "arm-image-distance", "prop1-gray-transfer", "gray-zero-code"})
    CHECK_MESSAGE(ids.count(id) == 1, id);
  CHECK_THROWS_AS(find_claim("no-such-claim"), DomainError);
}

TEST_CASE("repetition claims are evaluated under both conventions") {
  AuditContext ctx;
  const auto& c = find_claim("thm1-lee-Ca1");
  CHECK(number(c.claimed(Params{{"family", "repetition"}, {"i", 1}, {"n", 2}}, "pair", ctx)) == Rational(3));
  CHECK(number(c.claimed(Params{{"family", "repetition"}, {"i", 1}, {"n", 2}}, "digit", ctx)) == Rational(6));

  const auto e = audit(find_claim("thm3-euclid-Ca2"), {{"family", "repetition"}, {"i", 2}, {"n", 1}}, ctx);
  CHECK(number(claimed(e, "pair")) == Rational(1));
  CHECK(number(claimed(e, "digit")) == Rational(2));
  CHECK(number(e.computed) == Rational(oracle::radius(repetition_code(2, 1), Metric::euclidean)));
  CHECK(number(e.computed) == Rational(2));
  CHECK(e.verdict == Verdict::match);

  const auto f = audit(find_claim("thm1-euclid-Ca1"), {{"family", "repetition"}, {"i", 1}, {"n", 1}}, ctx);
  CHECK(to_json(*claimed(f, "pair")) == "3/4");
}

TEST_CASE("repetition ground truth agrees with the brute-force oracle") {
  AuditContext ctx;
  for (const auto& claim : register_claims()) {
    if (claim.family != "repetition" || !claim.metric) continue;
    for (std::size_t n = 1; n <= 2; ++n) {
      const int i = claim.id.back() - '0';
      const auto e = audit(claim, {{"family", "repetition"}, {"i", i}, {"n", n}}, ctx);
      CHECK_MESSAGE(number(e.computed) == Rational(oracle::radius(repetition_code(i, n), *claim.metric)), claim.id);
      CHECK(e.verdict != Verdict::not_computable);
    }
  }
}

TEST_CASE("gray transfer on C_a4") {
  AuditContext ctx;
  const Params p{{"family", "repetition"}, {"i", 4}, {"n", 2}};
  const auto e = audit(find_claim("prop1-gray-transfer"), p, ctx);
  CHECK(e.verdict == Verdict::match);
  CHECK(number(e.computed) == Rational(oracle::radius(repetition_code(4, 2), Metric::lee)));
}

TEST_CASE("structural claims") {
  AuditContext ctx;
  const auto t7 = audit(find_claim("thm7-gray-image"), {{"family", "simplex"}, {"ring", "mixed"}, {"variant", "alpha"}, {"k", 1}}, ctx);
  CHECK(t7.verdict == Verdict::match);
  REQUIRE(t7.computed);
  CHECK(t7.computed->text == "24 columns {0:12, 1:12}");

  const auto zero = audit(find_claim("gray-zero-code"), {{"family", "zero"}, {"gamma", 2}, {"delta", 2}}, ctx);
  CHECK(zero.verdict == Verdict::match);
  CHECK(zero.computed->text == "{000000}");

  const auto len = audit(find_claim("arm-image-length"), {{"family", "arm"}, {"form", "displayed"}, {"m", 3}}, ctx);
  CHECK(len.verdict == Verdict::match);
  CHECK(number(len.computed) == Rational(12));
}

TEST_CASE("Euclidean symbol enumerator against an independent count") {
  std::vector<int> c(6, 0);
  for (int b = 0; b < 2; ++b)
    for (int q = 0; q < 4; ++q) ++c[static_cast<std::size_t>(oracle::weight(oracle::Word{{b}, {q}}, Metric::euclidean))];
  CHECK(c == std::vector<int>{1, 3, 2, 0, 1, 1});

  AuditContext ctx;
  const auto e = audit(find_claim("euclid-weight-enumerator"), Params::object(), ctx);
  CHECK(e.computed->text == "1+3x+2x^2+x^4+x^5");
  CHECK(e.verdict == Verdict::match);
  CHECK(claimed(e, "printed-formula")->text != e.computed->text);
}

TEST_CASE("bounds and budget verdicts") {
  AuditContext ctx;
  const Params rep3{{"family", "repetition"}, {"i", 3}, {"n", 2}};
  const auto d = audit(find_claim("thm13-delsarte-lee"), rep3, ctx);
  CHECK(d.verdict == Verdict::bound_holds);
  const auto s = audit(find_claim("lem1-sandwich"), rep3, ctx);
  CHECK(s.verdict == Verdict::match);

  Budget tiny;
  tiny.ambient_log2 = 1;
  tiny.coset_log2 = 0;
  AuditContext small(tiny);
  const auto nc = audit(find_claim("thm1-lee-Ca1"), {{"family", "repetition"}, {"i", 1}, {"n", 3}}, small);
  CHECK(nc.verdict == Verdict::not_computable);
  CHECK(nc.notes.find("not computable") != std::string::npos);
  CHECK(!nc.computed);
}

TEST_CASE("suite: one entry per claim and point, sorted and byte-stable") {
  const Grid grid = small_grid();
  const auto a = run_suite(grid);
  const auto b = run_suite(grid);
  CHECK(a.disagreements.empty());
  CHECK(to_json(a).dump(2) == to_json(b).dump(2));

  std::size_t expected = 0;
  for (const auto& c : register_claims()) {
    const auto points = c.points(grid);
    expected += points.size();
    for (const auto& p : points) {
      const auto n = std::count_if(a.entries.begin(), a.entries.end(),
                                   [&](const AuditEntry& e) { return e.claim_id == c.id && e.params == p; });
      CHECK_MESSAGE(n == 1, c.id << " " << p.dump());
    }
  }
  CHECK(a.entries.size() == expected);
  for (std::size_t i = 1; i < a.entries.size(); ++i) CHECK(a.entries[i - 1].claim_id <= a.entries[i].claim_id);

  const auto j = to_json(a);
  REQUIRE(j.is_array());
  for (const auto& e : j) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : e.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"claim_id", "source", "params", "conventions", "computed", "verdict",
                                           "engine", "elapsed_ms", "notes"});
    CHECK(e["elapsed_ms"] == 0.0);
  }
  const auto table = format_table(a);
  CHECK(table.rfind("claim", 0) == 0);
  CHECK(table.find(std::to_string(a.entries.size()) + " entries:") != std::string::npos);

  SuiteOptions only;
  only.only = {"thm7-gray-image"};
  CHECK(run_suite(grid, only).entries.empty());  // no mixed_k in the small grid
  only.only = {"bogus"};
  CHECK_THROWS_AS(run_suite(grid, only), DomainError);
}

TEST_CASE("parse_grid") {
  const auto g = parse_grid(nlohmann::json::parse(R"({"n":[1,3],"macdonald":[[3,2]],"blocks":[[1,0,0,0,0,0,2]],"seed":9})"));
  CHECK(g.n == std::vector<std::size_t>{1, 3});
  CHECK(g.macdonald == std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}});
  REQUIRE(g.blocks.size() == 1);
  CHECK(g.blocks[0].n[6] == 2);
  CHECK(g.seed == 9);
  CHECK(g.arm_m == Grid{}.arm_m);
  CHECK_THROWS_AS(parse_grid(nlohmann::json::parse(R"({"bogus":1})")), ParseError);
  CHECK_THROWS_AS(parse_grid(nlohmann::json::parse(R"({"n":[-1]})")), ParseError);
  CHECK_THROWS_AS(parse_grid(nlohmann::json::parse(R"({"blocks":[[1,2]]})")), ParseError);
  CHECK_THROWS_AS(parse_grid(nlohmann::json::parse("[1]")), ParseError);
  CHECK_THROWS_AS(read_grid("/nonexistent/grid.json"), ParseError);
}

TEST_CASE("default grid report matches the golden file") {
  std::ifstream in(Z2Z4_GOLDEN_REPORT);
  REQUIRE(in);
  std::ostringstream golden;
  golden << in.rdbuf();
  const auto report = run_suite(Grid{});
  CHECK(report.disagreements.empty());
  CHECK(to_json(report).dump(2) + "\n" == golden.str());
}
