// SPDX-License-Identifier: Apache-2.0

#include "z2z4/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "z2z4/errors.hpp"

namespace z2z4 {

std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::equality:
      return "equality";
    case ClaimKind::upper_bound:
      return "upper_bound";
    case ClaimKind::lower_bound:
      return "lower_bound";
    case ClaimKind::structural:
      return "structural";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::match:
      return "match";
    case Verdict::bound_holds:
      return "bound_holds";
    case Verdict::mismatch:
      return "mismatch";
    case Verdict::not_computable:
      return "not_computable";
  }
  return "?";
}

std::string to_string(const Quantity& q) {
  if (!q.number) return q.text;
  const Rational& r = *q.number;
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::ordered_json to_json(const Quantity& q) {
  if (q.number && q.number->denominator() == 1) return q.number->numerator();
  return to_string(q);
}

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::int64_t p2(std::int64_t e) { return std::int64_t{1} << e; }
Rational R(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

std::size_t num(const Params& p, const char* key) { return p.at(key).get<std::size_t>(); }
std::int64_t inum(const Params& p, const char* key) { return p.at(key).get<std::int64_t>(); }
std::string str(const Params& p, const char* key) { return p.at(key).get<std::string>(); }

std::size_t scale(const std::string& convention) { return convention == "digit" ? 2 : 1; }

std::string yes(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- grid points

std::string blocks_text(const BlockRepetitionSpec& s) {
  std::string out;
  for (std::size_t i = 0; i < 7; ++i) out += (i ? "," : "") + std::to_string(s.n[i]);
  return out;
}

BlockRepetitionSpec parse_blocks(const std::string& text) {
  BlockRepetitionSpec s;
  std::stringstream in(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(in, item, ',')) {
    if (i == 7) throw ParseError("block counts: expected 7 values in '" + text + "'");
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw ParseError("");
      s.n[i++] = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError("block counts: bad value '" + item + "'");
    }
  }
  if (i != 7) throw ParseError("block counts: expected 7 values in '" + text + "'");
  return s;
}

std::vector<BlockRepetitionSpec> block_specs(const Grid& g) {
  if (!g.blocks.empty()) return g.blocks;
  std::vector<BlockRepetitionSpec> out;
  for (std::size_t i = 0; i < 7; ++i) {
    BlockRepetitionSpec s;
    s.n[i] = 1;
    out.push_back(s);
  }
  BlockRepetitionSpec ones;
  ones.n.fill(1);
  out.push_back(ones);
  return out;
}

Params rep(int i, std::size_t n) { return {{"family", "repetition"}, {"i", i}, {"n", n}}; }
Params brep(const BlockRepetitionSpec& s, BlockSpan span) {
  return {{"family", "block-rep"}, {"blocks", blocks_text(s)}, {"span", std::string(to_string(span))}};
}
Params simplex(const char* ring, Variant v, std::size_t k) {
  return {{"family", "simplex"}, {"ring", ring}, {"variant", std::string(to_string(v))}, {"k", k}};
}
Params macdonald(Variant v, std::size_t k, std::size_t u) {
  return {{"family", "macdonald"}, {"variant", std::string(to_string(v))}, {"k", k}, {"u", u}};
}
Params arm_displayed(std::size_t m) { return {{"family", "arm"}, {"form", "displayed"}, {"m", m}}; }
Params arm_rec(std::size_t r, std::size_t m) { return {{"family", "arm"}, {"form", "recursive"}, {"r", r}, {"m", m}}; }

const BlockSpan spans[] = {BlockSpan::generator, BlockSpan::paper_listed};

// Every construction the general claims run over.
std::vector<Params> instances(const Grid& g) {
  std::vector<Params> out;
  for (int i = 1; i <= 7; ++i)
    for (auto n : g.n) out.push_back(rep(i, n));
  for (const auto& s : block_specs(g))
    for (auto span : spans) out.push_back(brep(s, span));
  for (auto k : g.mixed_k) out.push_back(simplex("mixed", Variant::alpha, k));
  for (auto k : g.beta_k) out.push_back(simplex("mixed", Variant::beta, k));
  for (auto k : g.component_k)
    for (const char* ring : {"z2", "z4"})
      for (auto v : {Variant::alpha, Variant::beta}) out.push_back(simplex(ring, v, k));
  for (auto m : g.arm_m) {
    out.push_back(arm_displayed(m));
    out.push_back(arm_rec(1, m));
  }
  return out;
}

std::vector<Params> with_gamma_equal_delta(const Grid& g) {
  std::vector<Params> out;
  for (auto& p : instances(g)) {
    try {
      const auto c = build_instance(p);
      if (c.gamma() == c.delta()) out.push_back(p);
    } catch (const Error&) {
    }
  }
  return out;
}

std::vector<Params> block_points(const Grid& g) {
  std::vector<Params> out;
  for (const auto& s : block_specs(g))
    for (auto span : spans) out.push_back(brep(s, span));
  return out;
}

// BRep with n pairs in every block.
std::vector<Params> block_7n_points(const Grid& g) {
  std::vector<Params> out;
  for (auto n : g.n)
    for (auto span : spans) {
      BlockRepetitionSpec s;
      s.n.fill(n);
      Params p = brep(s, span);
      p["n"] = n;
      out.push_back(p);
    }
  return out;
}

std::vector<Params> ks(const std::vector<std::size_t>& values, Variant v) {
  std::vector<Params> out;
  for (auto k : values) out.push_back(simplex("mixed", v, k));
  return out;
}

std::vector<Params> macdonald_points(const Grid& g, Variant v) {
  std::vector<Params> out;
  for (auto [k, u] : g.macdonald)
    if (v == Variant::alpha || k >= 3) out.push_back(macdonald(v, k, u));
  return out;
}

std::vector<Params> macdonald_r_points(const Grid& g, Variant v) {
  std::vector<Params> out;
  for (auto p : macdonald_points(g, v)) {
    for (std::size_t r = num(p, "u"); r <= num(p, "k"); ++r) {
      Params q = p;
      q["r"] = r;
      out.push_back(q);
    }
  }
  return out;
}

std::vector<Params> arm_points(const Grid& g) {
  std::vector<Params> out;
  for (auto m : g.arm_m) out.push_back(arm_displayed(m));
  return out;
}

std::vector<Params> mattson_points(const Grid& g) {
  std::vector<Params> out;
  for (std::size_t t = 0; t < g.mattson_trials; ++t) out.push_back({{"seed", g.seed}, {"trial", t}});
  return out;
}

// ---------------------------------------------------------------- ground truth helpers

std::string witness_note(const CoveringResult& r) {
  if (r.witness.shape().coordinates() > 64) return {};
  return "witness " + r.witness.to_string();
}

Ground radius_ground(AuditContext& ctx, const GeneratorMatrix& g, Metric m) {
  const auto& r = ctx.radius(g, m);
  return {Quantity::of(R(static_cast<std::int64_t>(r.radius))), r.engine, witness_note(r), {}};
}

Ground dual_ground(AuditContext& ctx, const GeneratorMatrix& g, Metric m) {
  const auto& r = ctx.dual_radius(g, m);
  return {Quantity::of(R(static_cast<std::int64_t>(r.radius))), r.engine, witness_note(r), {}};
}

std::int64_t radius_of(AuditContext& ctx, const GeneratorMatrix& g, Metric m) {
  return static_cast<std::int64_t>(ctx.radius(g, m).radius);
}

std::size_t log2_size(const GeneratorMatrix& g) { return standard_form(g).type.log2_size(); }

GeneratorMatrix binary_only(const IntMatrix& m) { return tile(m, 1, IntMatrix(m.rows(), 0), 0); }
GeneratorMatrix quaternary_only(const IntMatrix& m) { return tile(IntMatrix(m.rows(), 0), 0, m, 1); }

using ColumnCounts = std::map<std::string, std::uint64_t>;

ColumnCounts gray_columns(const GeneratorMatrix& g) {
  std::vector<BinaryVector> rows;
  for (const auto& r : g.rows()) rows.push_back(gray_map(r));
  ColumnCounts out;
  const std::size_t len = g.shape().binary_length();
  for (std::size_t j = 0; j < len; ++j) {
    std::string col;
    for (const auto& r : rows) col += static_cast<char>('0' + r[j]);
    ++out[col];
  }
  return out;
}

ColumnCounts repeated_columns(const IntMatrix& m, std::uint64_t copies) {
  ColumnCounts out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::string col;
    for (int x : m.column(c)) col += static_cast<char>('0' + x);
    out[col] += copies;
  }
  return out;
}

std::string render(const ColumnCounts& c) {
  std::uint64_t total = 0;
  std::string body;
  for (const auto& [col, count] : c) {
    total += count;
    body += (body.empty() ? "" : ", ") + col + ":" + std::to_string(count);
  }
  return std::to_string(total) + " columns {" + body + "}";
}

// Column multiset of the Gray image of the construction against `copies` copies of `unit`.
Ground gray_image_ground(const GeneratorMatrix& g, const IntMatrix& unit, std::uint64_t copies) {
  const auto actual = gray_columns(g);
  const auto target = repeated_columns(unit, copies);
  return {Quantity::of(render(actual)), "construction", {}, actual == target};
}

std::string params_text(std::size_t a, std::size_t b) {
  return "[" + std::to_string(a) + ", " + std::to_string(b) + "]";
}

std::string polynomial(const std::vector<std::uint64_t>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    if (!out.empty()) out += "+";
    if (c[i] != 1 || i == 0) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

struct MattsonTrial {
  GeneratorMatrix g0, g1, a;
};

MattsonTrial mattson_trial(std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng(seed * 7919 + trial);
  auto shape = [&] {
    Shape s{static_cast<std::size_t>(rng() % 3), static_cast<std::size_t>(rng() % 3)};
    if (s.coordinates() == 0) s.delta = 1;
    return s;
  };
  auto random_rows = [&](Shape s, std::size_t rows) {
    GeneratorMatrix g(s);
    for (std::size_t r = 0; r < rows; ++r) {
      MixedVector v(s);
      for (std::size_t i = 0; i < s.gamma; ++i) v.set_binary(i, static_cast<int>(rng() & 1));
      for (std::size_t j = 0; j < s.delta; ++j) v.set_quaternary(j, static_cast<int>(rng() & 3));
      g.add_row(std::move(v));
    }
    return g;
  };
  MattsonTrial t;
  const Shape s0 = shape(), s1 = shape();
  t.g0 = random_rows(s0, 1 + rng() % 2);
  t.g1 = random_rows(s1, 1 + rng() % 2);
  t.a = random_rows(s1, t.g0.size());
  return t;
}

// ---------------------------------------------------------------- catalog

const std::vector<Convention> printed{{"printed", true}};
const std::vector<Convention> pair_digit{{"pair", true}, {"digit", true}};

Claim make(std::string id, std::string source, std::string family, std::string formula, ClaimKind kind,
           std::optional<Metric> metric, std::vector<Convention> conventions = printed) {
  Claim c;
  c.id = std::move(id);
  c.source = std::move(source);
  c.family = std::move(family);
  c.formula = std::move(formula);
  c.kind = kind;
  c.metric = metric;
  c.conventions = std::move(conventions);
  return c;
}

const char* metric_tag(Metric m) { return m == Metric::euclidean ? "euclid" : "lee"; }

void add_repetition(std::vector<Claim>& out) {
  struct Row {
    int thm;
    Metric m;
    int i;
    Rational coef;
    const char* formula;
  };
  const char* quotes[] = {
      "",
      "Theorem 1: \"r_E(C_a1) = r_E(C_a3) = 3n/4 and r_L(C_a1) = r_L(C_a3) = 3n/2.\"",
      "Theorem 2: \"r_E(C_a5) = r_E(C_a7) = n and r_L(C_a5) = r_L(C_a7) = 3n/2.\"",
      "Theorem 3: \"r_E(C_a2) = n, r_E(C_a4) = n/4, r_E(C_a6) = 5n/4 and r_L(C_a2) = r_L(C_a4) = r_L(C_a6) = "
      "3n/2.\"",
  };
  const Row rows[] = {
      {1, Metric::euclidean, 1, R(3, 4), "3n/4"}, {1, Metric::euclidean, 3, R(3, 4), "3n/4"},
      {1, Metric::lee, 1, R(3, 2), "3n/2"},       {1, Metric::lee, 3, R(3, 2), "3n/2"},
      {2, Metric::euclidean, 5, R(1), "n"},       {2, Metric::euclidean, 7, R(1), "n"},
      {2, Metric::lee, 5, R(3, 2), "3n/2"},       {2, Metric::lee, 7, R(3, 2), "3n/2"},
      {3, Metric::euclidean, 2, R(1), "n"},       {3, Metric::euclidean, 4, R(1, 4), "n/4"},
      {3, Metric::euclidean, 6, R(5, 4), "5n/4"}, {3, Metric::lee, 2, R(3, 2), "3n/2"},
      {3, Metric::lee, 4, R(3, 2), "3n/2"},       {3, Metric::lee, 6, R(3, 2), "3n/2"},
  };
  for (const auto& row : rows) {
    Claim c = make("thm" + std::to_string(row.thm) + "-" + metric_tag(row.m) + "-Ca" + std::to_string(row.i),
                   quotes[row.thm], "repetition", row.formula, ClaimKind::equality, row.m, pair_digit);
    const int i = row.i;
    const Metric m = row.m;
    const Rational coef = row.coef;
    c.points = [i](const Grid& g) {
      std::vector<Params> out;
      for (auto n : g.n) out.push_back(rep(i, n));
      return out;
    };
    c.claimed = [coef](const Params& p, const std::string& conv, AuditContext&) {
      return Quantity::of(coef * static_cast<std::int64_t>(num(p, "n") * scale(conv)));
    };
    c.ground = [i, m](const Params& p, AuditContext& ctx) { return radius_ground(ctx, repetition_code(i, num(p, "n")), m); };
    out.push_back(std::move(c));
  }

  Claim listing = make("repetition-listing",
                       "Repetition codes: \"C_a5 = C_a7 = {(00...00), (01...01), (02...02), (03...03), (10...10), "
                       "(11...11), (12...12), (13...13)}\" with generators \"G_a5 = [1111...11]\"",
                       "repetition", "|listed set|", ClaimKind::structural, std::nullopt);
  listing.points = [](const Grid&) {
    std::vector<Params> out;
    for (int i = 1; i <= 7; ++i) out.push_back(rep(i, 1));
    return out;
  };
  listing.claimed = [](const Params& p, const std::string&, AuditContext&) {
    return Quantity::of("|C| = " + std::to_string(std::size_t{1} << log2_size(repetition_code(p.at("i"), 1))));
  };
  listing.ground = [](const Params& p, AuditContext&) {
    const int i = p.at("i");
    const std::size_t listed = std::size_t{1} << log2_size(repetition_code(i, 1));
    const std::size_t generated = std::size_t{1} << log2_size(repetition_generator_row(i, 1));
    return Ground{Quantity::of("|<G>| = " + std::to_string(generated)), "standard form", {}, listed == generated};
  };
  out.push_back(std::move(listing));
}

void add_block_repetition(std::vector<Claim>& out) {
  const std::string quote =
      "Theorem 4: \"r_E(BRep^{n1+...+n7}) = (1/4)[3(n1+n3) + n4 + 5n6] + (n2+n5+n7) and r_E(BRep_a^{7n}) = 6n\"";
  auto spec_of = [](const Params& p) { return parse_blocks(str(p, "blocks")); };
  auto code_of = [spec_of](const Params& p) { return block_repetition(spec_of(p), parse_block_span(str(p, "span"))); };

  Claim general = make("thm4-euclid-general", quote, "block-rep", "(3(n1+n3) + n4 + 5n6)/4 + n2 + n5 + n7",
                       ClaimKind::equality, Metric::euclidean, pair_digit);
  general.points = block_points;
  general.claimed = [spec_of](const Params& p, const std::string& conv, AuditContext&) {
    const auto s = spec_of(p);
    auto n = [&](int i) { return static_cast<std::int64_t>(s.n[i - 1] * scale(conv)); };
    return Quantity::of(R(3 * (n(1) + n(3)) + n(4) + 5 * n(6), 4) + (n(2) + n(5) + n(7)));
  };
  general.ground = [code_of](const Params& p, AuditContext& ctx) { return radius_ground(ctx, code_of(p), Metric::euclidean); };
  out.push_back(std::move(general));

  Claim seven = make("thm4-euclid-7n", quote, "block-rep", "6n", ClaimKind::equality, Metric::euclidean, pair_digit);
  seven.points = block_7n_points;
  seven.claimed = [](const Params& p, const std::string& conv, AuditContext&) {
    return Quantity::of(R(static_cast<std::int64_t>(6 * num(p, "n") * scale(conv))));
  };
  seven.ground = [code_of](const Params& p, AuditContext& ctx) { return radius_ground(ctx, code_of(p), Metric::euclidean); };
  out.push_back(std::move(seven));

  const std::string header =
      "Block repetition code: \"BRep^n : (n = n1+n2+n3+n4+n5+n6+n7, 2^3, d_L = 6n, d_E = min{(n1+4n2+n3+n4+2n5+5n6+2n7), "
      "(n1+4n2+n3+n5+4n6+n7), (4n1+n2+4n3+4n5+n6+4n7), (n4+n5+n6+n7), (4n1+4n3+n4+5n5+n6+5n7)}\"";

  Claim size = make("thm4-size", header, "block-rep", "2^3", ClaimKind::equality, std::nullopt);
  size.points = block_points;
  size.claimed = [](const Params&, const std::string&, AuditContext&) { return Quantity::of(R(8)); };
  size.ground = [code_of](const Params& p, AuditContext&) {
    return Ground{Quantity::of(R(p2(static_cast<std::int64_t>(log2_size(code_of(p)))))), "standard form", {}, {}};
  };
  out.push_back(std::move(size));

  Claim dl = make("thm4-dl", header, "block-rep", "6n, n = n1+...+n7", ClaimKind::equality, Metric::lee, pair_digit);
  dl.points = block_points;
  dl.claimed = [spec_of](const Params& p, const std::string& conv, AuditContext&) {
    return Quantity::of(R(static_cast<std::int64_t>(6 * spec_of(p).total() * scale(conv))));
  };
  dl.ground = [code_of](const Params& p, AuditContext& ctx) {
    const auto d = minimum_distance(code_of(p), Metric::lee, ctx.budget());
    return Ground{Quantity::of(R(static_cast<std::int64_t>(d))), "enumeration", {}, {}};
  };
  out.push_back(std::move(dl));

  Claim de = make("thm4-de", header, "block-rep",
                  "min{n1+4n2+n3+n4+2n5+5n6+2n7, n1+4n2+n3+n5+4n6+n7, 4n1+n2+4n3+4n5+n6+4n7, n4+n5+n6+n7, "
                  "4n1+4n3+n4+5n5+n6+5n7}",
                  ClaimKind::equality, Metric::euclidean, pair_digit);
  de.points = block_points;
  de.claimed = [spec_of](const Params& p, const std::string& conv, AuditContext&) {
    const auto s = spec_of(p);
    auto n = [&](int i) { return static_cast<std::int64_t>(s.n[i - 1] * scale(conv)); };
    const std::int64_t v = std::min({n(1) + 4 * n(2) + n(3) + n(4) + 2 * n(5) + 5 * n(6) + 2 * n(7),
                                     n(1) + 4 * n(2) + n(3) + n(5) + 4 * n(6) + n(7),
                                     4 * n(1) + n(2) + 4 * n(3) + 4 * n(5) + n(6) + 4 * n(7),
                                     n(4) + n(5) + n(6) + n(7), 4 * n(1) + 4 * n(3) + n(4) + 5 * n(5) + n(6) + 5 * n(7)});
    return Quantity::of(R(v));
  };
  de.ground = [code_of](const Params& p, AuditContext& ctx) {
    const auto d = minimum_distance(code_of(p), Metric::euclidean, ctx.budget());
    return Ground{Quantity::of(R(static_cast<std::int64_t>(d))), "enumeration", {}, {}};
  };
  out.push_back(std::move(de));
}

GeneratorMatrix mixed(const Params& p, const Budget& b) {
  return mixed_simplex({num(p, "k"), parse_variant(str(p, "variant")), false}, b);
}

void add_simplex(std::vector<Claim>& out) {
  Claim pa = make("simplex-alpha-params",
                  "Simplex codes: \"Type alpha simplex code S_k^alpha is linear code over Z2Z4 with parameters "
                  "[2^{3k+1}, 2k, d_L, d_E]\"",
                  "simplex", "[2^(3k+1), 2k]", ClaimKind::equality, std::nullopt);
  pa.points = [](const Grid& g) { return ks(g.mixed_k, Variant::alpha); };
  pa.claimed = [](const Params& p, const std::string&, AuditContext&) {
    const auto k = num(p, "k");
    return Quantity::of(params_text(std::size_t{1} << (3 * k + 1), 2 * k));
  };
  pa.ground = [](const Params& p, AuditContext& ctx) {
    const auto g = mixed(p, ctx.budget());
    return Ground{Quantity::of(params_text(g.shape().coordinates(), log2_size(g))), "construction", {}, {}};
  };
  out.push_back(pa);

  Claim pb = make("simplex-beta-params",
                  "Simplex codes: \"Type beta simplex code S_k^beta is a punctured version of S_k^alpha with the "
                  "parameters [2^{3(k-1)}(2^k-1), 2k, d_L, d_E]\"",
                  "simplex", "[2^(3(k-1))(2^k-1), 2k]", ClaimKind::equality, std::nullopt);
  pb.points = [](const Grid& g) { return ks(g.beta_k, Variant::beta); };
  pb.claimed = [](const Params& p, const std::string&, AuditContext&) {
    const auto k = num(p, "k");
    return Quantity::of(params_text((std::size_t{1} << (3 * (k - 1))) * ((std::size_t{1} << k) - 1), 2 * k));
  };
  pb.ground = pa.ground;
  out.push_back(std::move(pb));

  const std::string t5 =
      "Theorem 5: \"r_L(S_k^alpha) = 2^{3k+1} and r_E(S_k^alpha) <= 2^k * ((17 * 2^{2k} - 2)/6).\"";
  auto alpha_points = [](const Grid& g) { return ks(g.mixed_k, Variant::alpha); };
  auto beta_points = [](const Grid& g) { return ks(g.beta_k, Variant::beta); };

  Claim eq = make("thm5-lee-eq", t5, "simplex", "2^(3k+1)", ClaimKind::equality, Metric::lee);
  eq.points = alpha_points;
  eq.claimed = [](const Params& p, const std::string&, AuditContext&) {
    return Quantity::of(R(p2(3 * inum(p, "k") + 1)));
  };
  eq.ground = [](const Params& p, AuditContext& ctx) { return radius_ground(ctx, mixed(p, ctx.budget()), Metric::lee); };
  out.push_back(eq);

  Claim lb = eq;
  lb.id = "thm5-lee-bound";
  lb.kind = ClaimKind::upper_bound;
  out.push_back(std::move(lb));

  Claim eb = make("thm5-euclid-bound", t5, "simplex", "2^k (17 * 4^k - 2)/6", ClaimKind::upper_bound, Metric::euclidean);
  eb.points = alpha_points;
  eb.claimed = [](const Params& p, const std::string&, AuditContext&) {
    const auto k = inum(p, "k");
    return Quantity::of(R(p2(k)) * R(17 * p2(2 * k) - 2, 6));
  };
  eb.ground = [](const Params& p, AuditContext& ctx) {
    return radius_ground(ctx, mixed(p, ctx.budget()), Metric::euclidean);
  };
  out.push_back(std::move(eb));

  const std::string t6 =
      "Theorem 6: \"r_L(S_k^beta) <= 2^{2k}(2^k - 1) + 2^k(2^{k-1} - 2)\" and \"r_E(S_k^beta) <= 2^k((17/6) * 2^{2k} - "
      "2 * 2^k - 443/6)\"";
  Claim l6 = make("thm6-lee-bound", t6, "simplex", "4^k (2^k - 1) + 2^k (2^(k-1) - 2)", ClaimKind::upper_bound,
                  Metric::lee);
  l6.points = beta_points;
  l6.claimed = [](const Params& p, const std::string&, AuditContext&) {
    const auto k = inum(p, "k");
    return Quantity::of(R(p2(2 * k) * (p2(k) - 1) + p2(k) * (p2(k - 1) - 2)));
  };
  l6.ground = [](const Params& p, AuditContext& ctx) { return radius_ground(ctx, mixed(p, ctx.budget()), Metric::lee); };
  out.push_back(std::move(l6));

  Claim e6 = make("thm6-euclid-bound", t6, "simplex", "2^k ((17/6) 4^k - 2 * 2^k - 443/6)", ClaimKind::upper_bound,
                  Metric::euclidean);
  e6.points = beta_points;
  e6.claimed = [](const Params& p, const std::string&, AuditContext&) {
    const auto k = inum(p, "k");
    return Quantity::of(R(p2(k)) * (R(17, 6) * p2(2 * k) - 2 * p2(k) - R(443, 6)));
  };
  e6.ground = [](const Params& p, AuditContext& ctx) {
    return radius_ground(ctx, mixed(p, ctx.budget()), Metric::euclidean);
  };
  out.push_back(std::move(e6));

  const std::string t14 =
      "Theorem 14: \"r_L(S_k^{alpha-perp}) = r_L(S_k^{beta-perp}) = 1, r_E(S_k^{alpha-perp}) <= 3 and "
      "r_L(S_k^{beta-perp}) <= 3\"";
  struct Dual {
    const char* id;
    Variant v;
    Metric m;
    ClaimKind kind;
    std::int64_t value;
  };
  const Dual duals[] = {
      {"thm14-lee-alpha-dual", Variant::alpha, Metric::lee, ClaimKind::equality, 1},
      {"thm14-lee-beta-dual", Variant::beta, Metric::lee, ClaimKind::equality, 1},
      {"thm14-euclid-alpha-dual", Variant::alpha, Metric::euclidean, ClaimKind::upper_bound, 3},
      {"thm14-beta-dual-bound", Variant::beta, Metric::lee, ClaimKind::upper_bound, 3},
  };
  for (const auto& d : duals) {
    Claim c = make(d.id, t14, "simplex", std::to_string(d.value), d.kind, d.m);
    const Variant v = d.v;
    const Metric m = d.m;
    const std::int64_t value = d.value;
    c.points = [v](const Grid& g) { return ks(v == Variant::alpha ? g.mixed_k : g.beta_k, v); };
    c.claimed = [value](const Params&, const std::string&, AuditContext&) { return Quantity::of(R(value)); };
    const bool printed_lee = std::string(d.id) == "thm14-beta-dual-bound";
    c.ground = [m, printed_lee](const Params& p, AuditContext& ctx) {
      const auto g = mixed(p, ctx.budget());
      Ground out = dual_ground(ctx, g, m);
      if (printed_lee) {
        out.notes = "bound printed for r_L; r_E of the dual is " +
                    std::to_string(ctx.dual_radius(g, Metric::euclidean).radius);
      }
      return out;
    };
    out.push_back(std::move(c));
  }

  Claim t7 = make("thm7-gray-image",
                  "Theorem 7: \"Phi_L(S_k^alpha) is a concatenation of 2^{2k}(2^k+1) binary simplex code with "
                  "parameters [2^{3k}(2^k+1); k; d_H]\"",
                  "simplex", "2^(2k)(2^k+1) copies of m_k^alpha", ClaimKind::structural, std::nullopt);
  t7.points = alpha_points;
  t7.claimed = [](const Params& p, const std::string&, AuditContext& ctx) {
    const auto k = num(p, "k");
    return Quantity::of(render(repeated_columns(binary_simplex(k, Variant::alpha, ctx.budget()),
                                                p2(2 * k) * (p2(k) + 1))));
  };
  t7.ground = [](const Params& p, AuditContext& ctx) {
    const auto k = num(p, "k");
    return gray_image_ground(mixed(p, ctx.budget()), binary_simplex(k, Variant::alpha, ctx.budget()),
                             p2(2 * k) * (p2(k) + 1));
  };
  out.push_back(std::move(t7));

  Claim t8 = make("thm8-gray-image",
                  "Theorem 8: \"Phi_L(S_k^beta) is a concatenation of 2^k(2^{k-1}+1) binary simplex code with "
                  "parameters [2^k(2^{k-1}+1)(2^k-1); k; d_H]\"",
                  "simplex", "2^k(2^(k-1)+1) copies of m_k^beta", ClaimKind::structural, std::nullopt);
  t8.points = beta_points;
  t8.claimed = [](const Params& p, const std::string&, AuditContext& ctx) {
    const auto k = num(p, "k");
    return Quantity::of(
        render(repeated_columns(binary_simplex(k, Variant::beta, ctx.budget()), p2(k) * (p2(k - 1) + 1))));
  };
  t8.ground = [](const Params& p, AuditContext& ctx) {
    const auto k = num(p, "k");
    return gray_image_ground(mixed(p, ctx.budget()), binary_simplex(k, Variant::beta, ctx.budget()),
                             p2(k) * (p2(k - 1) + 1));
  };
  out.push_back(std::move(t8));
}

GeneratorMatrix macdonald_code(const Params& p, const Budget& b) {
  return macdonald_matrix({num(p, "k"), num(p, "u"), parse_variant(str(p, "variant"))}, b);
}

// r_H of the binary component and r_d of the quaternary component of M_{r,u}.
std::pair<std::int64_t, std::int64_t> component_radii(AuditContext& ctx, std::size_t r, std::size_t u, Variant v,
                                                      Metric m) {
  const auto c = macdonald_components({r, u, v}, ctx.budget());
  return {radius_of(ctx, binary_only(c.binary), Metric::lee), radius_of(ctx, quaternary_only(c.quaternary), m)};
}

void add_macdonald(std::vector<Claim>& out) {
  Claim la = make("macdonald-alpha-length",
                  "MacDonald codes: \"M_{k,u}^alpha ... with parametrs [2^{3k+1} - 2^{k+u}(2^k - 2^u)]\"",
                  "macdonald", "2^(3k+1) - 2^(k+u)(2^k - 2^u)", ClaimKind::equality, std::nullopt);
  la.points = [](const Grid& g) { return macdonald_points(g, Variant::alpha); };
  la.claimed = [](const Params& p, const std::string&, AuditContext&) {
    const auto k = inum(p, "k"), u = inum(p, "u");
    return Quantity::of(R(p2(3 * k + 1) - p2(k + u) * (p2(k) - p2(u))));
  };
  la.ground = [](const Params& p, AuditContext& ctx) {
    const auto g = macdonald_code(p, ctx.budget());
    return Ground{Quantity::of(R(static_cast<std::int64_t>(g.shape().coordinates()))), "construction",
                  "(gamma, delta) = " + to_string(g.shape()), {}};
  };
  out.push_back(la);

  Claim lb = make("macdonald-beta-length",
                  "MacDonald codes: \"(resp., [2^{2k-1}(2^{2k-1}+1)(2^k-1) - 2^{k+u-1}(2^{2u-3}+1)(2^u-1)])\"",
                  "macdonald", "2^(2k-1)(2^(2k-1)+1)(2^k-1) - 2^(k+u-1)(2^(2u-3)+1)(2^u-1)", ClaimKind::equality,
                  std::nullopt);
  lb.points = [](const Grid& g) { return macdonald_points(g, Variant::beta); };
  lb.claimed = [](const Params& p, const std::string&, AuditContext&) {
    const auto k = inum(p, "k"), u = inum(p, "u");
    const Rational half_power = 2 * u - 3 >= 0 ? R(p2(2 * u - 3)) : R(1, p2(3 - 2 * u));
    return Quantity::of(R(p2(2 * k - 1) * (p2(2 * k - 1) + 1) * (p2(k) - 1)) -
                        R(p2(k + u - 1)) * (half_power + 1) * (p2(u) - 1));
  };
  lb.ground = la.ground;
  out.push_back(std::move(lb));

  const std::string ta =
      "MacDonald bound, type alpha: \"for u <= r <= k: r_L(M_{k,u}^alpha) <= [2^{3k+1} - 2^{k+r}(2^r + 2^k)] + "
      "[2^{2k} r_H(M_{r,u}^{alpha,2}) + 2^k r_L(M_{r,u}^{alpha,4})]\" and \"r_E(M_{k,u}^alpha) <= (11/6)[2^{3k+2} - "
      "2^{k+r}(2^r + 3 * 2^k)] + [2^{2k} r_H(M_{r,u}^{alpha,2}) + 2^k r_E(M_{r,u}^{alpha,4})]\"";
  const std::string tb =
      "MacDonald bound, type beta: \"r_L(M_{k,u}^beta) <= 2^{2k-1}(3 * 2^k - 1) - 2^{k+r-1}(2^{k-1} + 2^r - 1) + "
      "[2^{2k} r_H(M_{r,u}^{beta,2}) + 2^k r_L(M_{r,u}^{beta,4})]\" and \"r_E(M_{k,u}^alpha) <= (11/6)[2^{3k+2} - "
      "2^{k+r}(2^r + 3 * 2^k)] + [2^{2k} r_H(M_{r,u}^{alpha,2}) + 2^k r_E(M_{r,u}^{alpha,4})]\"";

  auto lee_alpha_head = [](std::int64_t k, std::int64_t r) { return R(p2(3 * k + 1) - p2(k + r) * (p2(r) + p2(k))); };
  auto euclid_head = [](std::int64_t k, std::int64_t r) {
    return R(11, 6) * (p2(3 * k + 2) - p2(k + r) * (p2(r) + 3 * p2(k)));
  };
  auto lee_beta_head = [](std::int64_t k, std::int64_t r) {
    return R(p2(2 * k - 1) * (3 * p2(k) - 1) - p2(k + r - 1) * (p2(k - 1) + p2(r) - 1));
  };

  struct Bound {
    const char* id;
    Variant v;
    Metric m;
    const std::string* quote;
    const char* formula;
  };
  const Bound bounds[] = {
      {"macdonald-alpha-lee-bound", Variant::alpha, Metric::lee, &ta,
       "2^(3k+1) - 2^(k+r)(2^r + 2^k) + 4^k r_H(M2_{r,u}) + 2^k r_L(M4_{r,u})"},
      {"macdonald-alpha-euclid-bound", Variant::alpha, Metric::euclidean, &ta,
       "(11/6)(2^(3k+2) - 2^(k+r)(2^r + 3 2^k)) + 4^k r_H(M2_{r,u}) + 2^k r_E(M4_{r,u})"},
      {"macdonald-beta-lee-bound", Variant::beta, Metric::lee, &tb,
       "2^(2k-1)(3 2^k - 1) - 2^(k+r-1)(2^(k-1) + 2^r - 1) + 4^k r_H(M2_{r,u}) + 2^k r_L(M4_{r,u})"},
      {"macdonald-beta-euclid-bound", Variant::beta, Metric::euclidean, &tb,
       "(11/6)(2^(3k+2) - 2^(k+r)(2^r + 3 2^k)) + 4^k r_H(M2_{r,u}) + 2^k r_E(M4_{r,u})"},
  };
  for (const auto& b : bounds) {
    const bool beta_euclid = b.v == Variant::beta && b.m == Metric::euclidean;
    std::vector<Convention> conv = printed;
    // The type-beta Euclidean item is typeset with alpha symbols throughout.
    if (beta_euclid) conv = {{"as-printed", true}, {"beta-reading", true}};
    Claim c = make(b.id, *b.quote, "macdonald", b.formula, ClaimKind::upper_bound, b.m, conv);
    const Variant v = b.v;
    const Metric m = b.m;
    c.points = [v](const Grid& g) { return macdonald_r_points(g, v); };
    c.claimed = [=](const Params& p, const std::string& cv, AuditContext& ctx) -> std::optional<Quantity> {
      const auto k = inum(p, "k"), r = inum(p, "r");
      const auto u = num(p, "u");
      const Variant sub = cv == "as-printed" ? Variant::alpha : v;
      const auto [rh, rq] = component_radii(ctx, static_cast<std::size_t>(r), u, sub, m);
      Rational head = m == Metric::euclidean ? euclid_head(k, r)
                                             : (v == Variant::alpha ? lee_alpha_head(k, r) : lee_beta_head(k, r));
      return Quantity::of(head + R(p2(2 * k) * rh + p2(k) * rq));
    };
    c.ground = [m](const Params& p, AuditContext& ctx) { return radius_ground(ctx, macdonald_code(p, ctx.budget()), m); };
    out.push_back(std::move(c));
  }

  const std::string td =
      "MacDonald duals: \"r_L(M_{k,u}^{alpha-perp}) = r_L(M_{k,u}^{beta-perp}) = 2, r_E(M_{k,u}^{alpha-perp}) <= 6 and "
      "r_E(M_{k,u}^{beta-perp}) <= 6\"";
  struct Dual {
    const char* id;
    Variant v;
    Metric m;
    ClaimKind kind;
    std::int64_t value;
  };
  const Dual duals[] = {
      {"macdonald-dual-lee-alpha", Variant::alpha, Metric::lee, ClaimKind::equality, 2},
      {"macdonald-dual-lee-beta", Variant::beta, Metric::lee, ClaimKind::equality, 2},
      {"macdonald-dual-euclid-alpha", Variant::alpha, Metric::euclidean, ClaimKind::upper_bound, 6},
      {"macdonald-dual-euclid-beta", Variant::beta, Metric::euclidean, ClaimKind::upper_bound, 6},
  };
  for (const auto& d : duals) {
    Claim c = make(d.id, td, "macdonald", std::to_string(d.value), d.kind, d.m);
    const Variant v = d.v;
    const Metric m = d.m;
    const std::int64_t value = d.value;
    c.points = [v](const Grid& g) { return macdonald_points(g, v); };
    c.claimed = [value](const Params&, const std::string&, AuditContext&) { return Quantity::of(R(value)); };
    c.ground = [m](const Params& p, AuditContext& ctx) { return dual_ground(ctx, macdonald_code(p, ctx.budget()), m); };
    out.push_back(std::move(c));
  }

  Claim img = make("macdonald-gray-image",
                   "MacDonald images: \"Phi_L(M_{k,u}^alpha) (resp., Phi_L(M_{k,u}^beta)) is a concatenation of "
                   "2^{2(k-1)}(2^{k-1}+1) (resp., 2^{2(k-1)}(2^k-1)) binary simplex code with parameters "
                   "[2^{2(k-1)}(2^{k-1}+1)(2^k-2^u); k; d_H] (resp., [2^{2(k-1)}(2^k-1)(2^k-2^u); k; d_H])\"",
                   "macdonald", "alpha: 4^(k-1)(2^(k-1)+1) copies of m_{k,u}^alpha; beta: 4^(k-1)(2^k-1) copies of m_{k,u}^beta",
                   ClaimKind::structural, std::nullopt);
  img.points = [](const Grid& g) {
    auto out = macdonald_points(g, Variant::alpha);
    for (auto& p : macdonald_points(g, Variant::beta)) out.push_back(p);
    return out;
  };
  auto copies = [](const Params& p) {
    const auto k = inum(p, "k");
    return static_cast<std::uint64_t>(str(p, "variant") == "alpha" ? p2(2 * (k - 1)) * (p2(k - 1) + 1)
                                                                    : p2(2 * (k - 1)) * (p2(k) - 1));
  };
  auto unit = [](const Params& p, const Budget& b) {
    return macdonald_components({num(p, "k"), num(p, "u"), parse_variant(str(p, "variant"))}, b).binary;
  };
  img.claimed = [=](const Params& p, const std::string&, AuditContext& ctx) {
    return Quantity::of(render(repeated_columns(unit(p, ctx.budget()), copies(p))));
  };
  img.ground = [=](const Params& p, AuditContext& ctx) {
    return gray_image_ground(macdonald_code(p, ctx.budget()), unit(p, ctx.budget()), copies(p));
  };
  out.push_back(std::move(img));
}

void add_arm(std::vector<Claim>& out) {
  const std::string radius_quote =
      "First-order additive Reed-Muller: \"If C is the code generated by G then r_L(C) = r_E(C) = 2^{m-1}.\"";
  for (Metric m : {Metric::lee, Metric::euclidean}) {
    Claim c = make(std::string("arm-radius-") + metric_tag(m), radius_quote, "arm", "2^(m-1)", ClaimKind::equality, m);
    c.points = arm_points;
    c.claimed = [](const Params& p, const std::string&, AuditContext&) { return Quantity::of(R(p2(inum(p, "m") - 1))); };
    c.ground = [m](const Params& p, AuditContext& ctx) { return radius_ground(ctx, arm_first_order(num(p, "m")), m); };
    out.push_back(std::move(c));
  }

  const std::string image_quote =
      "Reed-Muller image: \"Phi_L(ARM(1, m-1)) is a code with parameters [3 * 2^{m-1}; m-1; d_H = 2^{m-2}]\"";
  Claim len = make("arm-image-length", image_quote, "arm", "3 * 2^(m-1)", ClaimKind::equality, std::nullopt);
  len.points = arm_points;
  len.claimed = [](const Params& p, const std::string&, AuditContext&) {
    return Quantity::of(R(3 * p2(inum(p, "m") - 1)));
  };
  len.ground = [](const Params& p, AuditContext&) {
    const auto g = arm_first_order(num(p, "m"));
    return Ground{Quantity::of(R(static_cast<std::int64_t>(g.shape().binary_length()))), "construction",
                  "(gamma, delta) = " + to_string(g.shape()), {}};
  };
  out.push_back(std::move(len));

  Claim dim = make("arm-image-dimension", image_quote, "arm", "m - 1", ClaimKind::equality, std::nullopt);
  dim.points = arm_points;
  dim.claimed = [](const Params& p, const std::string&, AuditContext&) { return Quantity::of(R(inum(p, "m") - 1)); };
  dim.ground = [](const Params& p, AuditContext&) {
    const auto t = standard_form(arm_first_order(num(p, "m"))).type;
    return Ground{Quantity::of(R(static_cast<std::int64_t>(t.lambda + t.mu))), "standard form",
                  "lambda + mu generators; |C| = 2^" + std::to_string(t.log2_size()), {}};
  };
  out.push_back(std::move(dim));

  Claim dist = make("arm-image-distance", image_quote, "arm", "2^(m-2)", ClaimKind::equality, Metric::lee);
  dist.points = arm_points;
  dist.claimed = [](const Params& p, const std::string&, AuditContext&) { return Quantity::of(R(p2(inum(p, "m") - 2))); };
  dist.ground = [](const Params& p, AuditContext& ctx) {
    const auto m = num(p, "m");
    const auto d = minimum_distance(arm_first_order(m), Metric::lee, ctx.budget());
    const auto rec = minimum_distance(arm_recursive(1, m - 1), Metric::lee, ctx.budget());
    return Ground{Quantity::of(R(static_cast<std::int64_t>(d))), "enumeration",
                  "displayed matrix; the recursive G(1, m-1) has d_L = " + std::to_string(rec), {}};
  };
  out.push_back(std::move(dist));
}

void add_general(std::vector<Claim>& out) {
  Claim w = make("euclid-weight-enumerator",
                 "Weights: \"the Euclidean weight w_E(u) of a vector u is sum_i min{u_i, (4-u_i)^2}\" against the ball "
                 "volumes \"(1+3x+2x^2+x^4+x^5)^n\"",
                 "alphabet", "1+3x+2x^2+x^4+x^5", ClaimKind::equality, Metric::euclidean,
                 {{"printed-polynomial", true}, {"printed-formula", false}});
  w.points = [](const Grid&) { return std::vector<Params>{Params::object()}; };
  w.claimed = [](const Params&, const std::string& conv, AuditContext&) {
    if (conv == "printed-polynomial") return Quantity::of(std::string("1+3x+2x^2+x^4+x^5"));
    std::vector<std::uint64_t> c(6, 0);
    for (int b = 0; b < 2; ++b)
      for (int q = 0; q < 4; ++q) ++c[static_cast<std::size_t>(b + std::min(q, (4 - q) * (4 - q)))];
    return Quantity::of(polynomial(c));
  };
  w.ground = [](const Params&, AuditContext&) {
    std::vector<std::uint64_t> c(6, 0);
    for (int b = 0; b < 2; ++b)
      for (int q = 0; q < 4; ++q) ++c[weight(MixedVector::from_digits({b}, {q}), Metric::euclidean)];
    return Ground{Quantity::of(polynomial(c)), "enumeration", "all 8 symbols (b | q)", {}};
  };
  out.push_back(std::move(w));

  Claim zero = make("gray-zero-code", "Gray map: \"Phi(C) the Gray map images of C\" applied to the zero code",
                    "general", "Phi(0) = 0", ClaimKind::structural, std::nullopt);
  zero.points = [](const Grid&) {
    return std::vector<Params>{{{"family", "zero"}, {"gamma", 2}, {"delta", 2}}};
  };
  zero.claimed = [](const Params& p, const std::string&, AuditContext&) {
    return Quantity::of("{" + std::string(num(p, "gamma") + 2 * num(p, "delta"), '0') + "}");
  };
  zero.ground = [](const Params& p, AuditContext& ctx) {
    std::set<std::string> image;
    enumerate(build_instance(p), [&](const MixedVector& v) { image.insert(gray_map(v).to_string()); }, ctx.budget());
    std::string text;
    for (const auto& s : image) text += (text.empty() ? "" : ", ") + s;
    const std::string want = "{" + std::string(num(p, "gamma") + 2 * num(p, "delta"), '0') + "}";
    return Ground{Quantity::of("{" + text + "}"), "enumeration", {}, "{" + text + "}" == want};
  };
  out.push_back(std::move(zero));

  Claim gt = make("prop1-gray-transfer",
                  "Proposition 1: \"Let C be a code over (Z2 x Z4)^n and Phi(C) the Gray map images of C. Then r_L(C) = "
                  "r(Phi(C)).\"",
                  "general", "r_L(C)", ClaimKind::equality, Metric::lee);
  gt.points = instances;
  gt.claimed = [](const Params& p, const std::string&, AuditContext& ctx) {
    return Quantity::of(R(radius_of(ctx, build_instance(p, ctx.budget()), Metric::lee)));
  };
  gt.ground = [](const Params& p, AuditContext& ctx) {
    return Ground{Quantity::of(R(static_cast<std::int64_t>(ctx.gray_radius(build_instance(p, ctx.budget()))))),
                  "binary", "Hamming radius of the Gray image", {}};
  };
  out.push_back(std::move(gt));

  for (Metric m : {Metric::lee, Metric::euclidean}) {
    Claim c = make(std::string("prop2-coset-leaders-") + metric_tag(m),
                   "Proposition 2: \"The covering radius of the linear code C is equal to the maximum weight of a coset "
                   "leader.\"",
                   "general", "max coset leader weight", ClaimKind::equality, m);
    c.points = instances;
    c.claimed = [m](const Params& p, const std::string&, AuditContext& ctx) -> std::optional<Quantity> {
      const auto& r = ctx.radius(build_instance(p, ctx.budget()), m);
      if (r.leader_weights.empty()) return std::nullopt;
      return Quantity::of(R(static_cast<std::int64_t>(r.leader_weights.rbegin()->first)));
    };
    c.ground = [m](const Params& p, AuditContext& ctx) {
      const auto& r = ctx.radius(build_instance(p, ctx.budget()), m);
      if (r.engine != "both") throw ResourceError("needs both engines; only " + r.engine + " fits");
      return Ground{Quantity::of(R(static_cast<std::int64_t>(r.radius))), "exhaustive", "max-min over the ambient", {}};
    };
    out.push_back(std::move(c));
  }

  Claim sw = make("lem1-sandwich",
                  "Lemma 1: \"For a code C over Z2Z4, r_L(C) <= r_E(C) <= 3 r_L(C).\"", "general",
                  "r_L <= r_E <= 3 r_L", ClaimKind::structural, std::nullopt);
  sw.points = instances;
  sw.claimed = [](const Params&, const std::string&, AuditContext&) {
    return Quantity::of(std::string("r_L <= r_E <= 3 r_L"));
  };
  sw.ground = [](const Params& p, AuditContext& ctx) {
    const auto g = build_instance(p, ctx.budget());
    const auto& l = ctx.radius(g, Metric::lee);
    const auto& e = ctx.radius(g, Metric::euclidean);
    return Ground{Quantity::of("r_L = " + std::to_string(l.radius) + ", r_E = " + std::to_string(e.radius)), l.engine,
                  {}, sandwich_check(l.radius, e.radius)};
  };
  out.push_back(std::move(sw));

  for (Metric m : {Metric::lee, Metric::euclidean}) {
    const bool lee = m == Metric::lee;
    Claim c = make(std::string("thm13-delsarte-") + metric_tag(m),
                   "Theorem 13: \"Let C be a code over Z2Z4 then r_L(C) <= s(C^perp) and r_E(C) <= 3s(C^perp).\"",
                   "general", lee ? "s(C^perp)" : "3 s(C^perp)", ClaimKind::upper_bound, m);
    c.points = instances;
    c.claimed = [lee](const Params& p, const std::string&, AuditContext& ctx) {
      const auto d = delsarte_bound(build_instance(p, ctx.budget()), ctx.budget());
      return Quantity::of(R(static_cast<std::int64_t>(lee ? d.s : 3 * d.s)));
    };
    c.ground = [m](const Params& p, AuditContext& ctx) { return radius_ground(ctx, build_instance(p, ctx.budget()), m); };
    out.push_back(std::move(c));
  }

  for (Metric m : {Metric::lee, Metric::euclidean}) {
    Claim c = make(std::string("sphere-covering-") + metric_tag(m),
                   "Sphere covering: \"2^{2n}/|C| <= sum_{i=0}^{r_L(C)} C(2n, i)\" and \"2^{2n}/|C| <= "
                   "sum_{i=0}^{r_E(C)} V_i, where sum V_i x^i = (1+3x+2x^2+x^4+x^5)^n\"",
                   "general", "least r with 2^(2n)/|C| <= sum_{i<=r} V_i", ClaimKind::lower_bound, m,
                   {{"printed", true}, {"corrected", false}});
    c.points = with_gamma_equal_delta;
    c.claimed = [m](const Params& p, const std::string& conv, AuditContext& ctx) {
      const auto g = build_instance(p, ctx.budget());
      const BigInt size = BigInt(1) << log2_size(g);
      const std::size_t r = conv == "printed" ? printed_sphere_covering_bound(g.gamma(), size, m)
                                              : sphere_covering_bound(g.shape(), size, m);
      return Quantity::of(R(static_cast<std::int64_t>(r)));
    };
    c.ground = [m](const Params& p, AuditContext& ctx) { return radius_ground(ctx, build_instance(p, ctx.budget()), m); };
    out.push_back(std::move(c));
  }

  Claim pc = make("parity-check-form",
                  "Parity check: \"to get a parity-check matrix H_S = [T' I_{gamma-k} | 0 0 2S'^t ; 0 0 | 0 I_{lambda-k} "
                  "2R^t ; T_1^t 0 | I_{delta+k-lambda-mu} T_2^t -(S+RT_2)^t]\"",
                  "general", "H_S G^T = 0 and |C| |<H_S>| = 2^(gamma+2delta)", ClaimKind::structural, std::nullopt);
  pc.points = instances;
  pc.claimed = [](const Params&, const std::string&, AuditContext&) {
    return Quantity::of(std::string("orthogonal: yes, size: yes"));
  };
  pc.ground = [](const Params& p, AuditContext& ctx) {
    const auto d = derive_dual(build_instance(p, ctx.budget()), ctx.budget());
    Ground out{Quantity::of("orthogonal: " + yes(d.printed_orthogonal) + ", size: " + yes(d.printed_size_ok)),
               "standard form", "dual taken from the " + d.source + " form", d.printed_orthogonal && d.printed_size_ok};
    if (!d.note.empty()) out.notes += "; " + d.note;
    return out;
  };
  out.push_back(std::move(pc));

  const std::string mq =
      "Proposition 3: \"then r_d(C) <= r_d(C_0) + r_d(C_1) and the covering radius of D (concatenation of C_0 and C_1) "
      "satisfy the following r_d(D) >= r_d(C_0) + r_d(C_1)\"";
  for (Metric m : {Metric::lee, Metric::euclidean}) {
    for (bool concat : {false, true}) {
      Claim c = make(std::string(concat ? "prop3-concat-" : "prop3-mattson-") + metric_tag(m), mq, "general",
                     "r_d(C_0) + r_d(C_1)", concat ? ClaimKind::lower_bound : ClaimKind::upper_bound, m);
      c.points = mattson_points;
      c.claimed = [m](const Params& p, const std::string&, AuditContext& ctx) {
        const auto t = mattson_trial(p.at("seed").get<std::uint64_t>(), num(p, "trial"));
        return Quantity::of(R(radius_of(ctx, t.g0, m) + radius_of(ctx, t.g1, m)));
      };
      c.ground = [m, concat](const Params& p, AuditContext& ctx) {
        auto t = mattson_trial(p.at("seed").get<std::uint64_t>(), num(p, "trial"));
        if (concat) {
          GeneratorMatrix zero(t.g1.shape());
          for (std::size_t i = 0; i < t.g0.size(); ++i) zero.add_row(MixedVector(t.g1.shape()));
          t.a = zero;
        }
        Ground out = radius_ground(ctx, mattson_combine(t.g0, t.g1, t.a), m);
        out.notes = "C_0 on " + to_string(t.g0.shape()) + ", C_1 on " + to_string(t.g1.shape());
        return out;
      };
      out.push_back(std::move(c));
    }
  }
}

std::vector<Claim> build_catalog() {
  std::vector<Claim> out;
  add_general(out);
  add_repetition(out);
  add_block_repetition(out);
  add_simplex(out);
  add_macdonald(out);
  add_arm(out);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- grid parsing

Grid parse_grid(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("grid: expected a JSON object");
  Grid g;
  auto sizes = [](const nlohmann::json& v, const std::string& key) {
    if (!v.is_array()) throw ParseError("grid: '" + key + "' must be an array");
    std::vector<std::size_t> out;
    for (const auto& x : v) {
      if (!x.is_number_unsigned()) throw ParseError("grid: '" + key + "' must hold non-negative integers");
      out.push_back(x.get<std::size_t>());
    }
    return out;
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "n") {
      g.n = sizes(v, key);
    } else if (key == "mixed_k") {
      g.mixed_k = sizes(v, key);
    } else if (key == "beta_k") {
      g.beta_k = sizes(v, key);
    } else if (key == "component_k") {
      g.component_k = sizes(v, key);
    } else if (key == "arm_m") {
      g.arm_m = sizes(v, key);
    } else if (key == "macdonald") {
      if (!v.is_array()) throw ParseError("grid: 'macdonald' must be an array of [k, u]");
      g.macdonald.clear();
      for (const auto& pair : v) {
        const auto ku = sizes(pair, key);
        if (ku.size() != 2) throw ParseError("grid: 'macdonald' entries are [k, u]");
        g.macdonald.emplace_back(ku[0], ku[1]);
      }
    } else if (key == "blocks") {
      if (!v.is_array()) throw ParseError("grid: 'blocks' must be an array");
      g.blocks.clear();
      for (const auto& b : v) {
        const auto counts = sizes(b, key);
        if (counts.size() != 7) throw ParseError("grid: 'blocks' entries need 7 counts");
        BlockRepetitionSpec s;
        std::copy(counts.begin(), counts.end(), s.n.begin());
        g.blocks.push_back(s);
      }
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw ParseError("grid: 'seed' must be a non-negative integer");
      g.seed = v.get<std::uint64_t>();
    } else if (key == "mattson_trials") {
      if (!v.is_number_unsigned()) throw ParseError("grid: 'mattson_trials' must be a non-negative integer");
      g.mattson_trials = v.get<std::size_t>();
    } else {
      throw ParseError("grid: unknown key '" + key + "'");
    }
  }
  return g;
}

Grid read_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read grid file '" + path + "'");
  try {
    return parse_grid(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("grid file '" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------- context

template <class T, class F>
const T& AuditContext::cached(std::map<std::string, std::variant<T, std::string>>& cache, const std::string& key,
                              F&& compute) {
  auto it = cache.find(key);
  if (it == cache.end()) {
    try {
      it = cache.emplace(key, compute()).first;
    } catch (const ResourceError& e) {
      it = cache.emplace(key, std::string(e.what())).first;
    }
  }
  if (const auto* why = std::get_if<std::string>(&it->second)) throw ResourceError(*why);
  return std::get<T>(it->second);
}

const CoveringResult& AuditContext::radius(const GeneratorMatrix& g, Metric m) {
  return cached(radii_, std::string(to_string(m)) + "\n" + format_matrix(g),
                [&] { return covering_radius(g, m, Engine::automatic, budget_); });
}

const CoveringResult& AuditContext::dual_radius(const GeneratorMatrix& g, Metric m) {
  return cached(dual_radii_, std::string(to_string(m)) + "\n" + format_matrix(g), [&] {
    CoveringResult d = dual_covering_radius(g, m, budget_);
    const Shape s = g.shape();
    if (s.binary_length() <= budget_.ambient_log2 && s.binary_length() <= 64) {
      const auto kd = kernel_dual(g, budget_);
      if (coset_feasible(kd.generators, budget_)) {
        CosetOptions o;
        o.check = g;
        const auto c = covering_radius_coset(kd.generators, m, budget_, o);
        if (c.radius != d.radius)
          throw EngineDisagreement("dual radius (" + std::string(to_string(m)) + "): dual engine " +
                                   std::to_string(d.radius) + ", coset engine " + std::to_string(c.radius));
        d.engine = "dual+coset";
      }
    }
    return d;
  });
}

std::size_t AuditContext::gray_radius(const GeneratorMatrix& g) {
  return cached(gray_, format_matrix(g), [&] { return gray_image_covering_radius(g, budget_).radius; });
}

// ---------------------------------------------------------------- audit

GeneratorMatrix build_instance(const Params& p, const Budget& budget) {
  const std::string family = str(p, "family");
  if (family == "repetition") return repetition_code(p.at("i").get<int>(), num(p, "n"));
  if (family == "block-rep") return block_repetition(parse_blocks(str(p, "blocks")), parse_block_span(str(p, "span")));
  if (family == "simplex") {
    const std::string ring = str(p, "ring");
    const Variant v = parse_variant(str(p, "variant"));
    const std::size_t k = num(p, "k");
    if (ring == "mixed") return mixed_simplex({k, v, false}, budget);
    if (ring == "z2") return binary_only(binary_simplex(k, v, budget));
    if (ring == "z4") return quaternary_only(quaternary_simplex(k, v, budget));
    throw DomainError("unknown ring '" + ring + "'");
  }
  if (family == "macdonald") return macdonald_code(p, budget);
  if (family == "arm") {
    if (str(p, "form") == "displayed") return arm_first_order(num(p, "m"));
    return arm_recursive(num(p, "r"), num(p, "m"));
  }
  if (family == "zero") return GeneratorMatrix(Shape{num(p, "gamma"), num(p, "delta")});
  throw DomainError("unknown family '" + family + "'");
}

const std::vector<Claim>& register_claims() {
  static const std::vector<Claim> catalog = build_catalog();
  return catalog;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : register_claims())
    if (c.id == id) return c;
  throw DomainError("unknown claim '" + std::string(id) + "'");
}

AuditEntry audit(const Claim& claim, const Params& params, AuditContext& ctx, bool timings) {
  const auto t0 = Clock::now();
  AuditEntry e;
  e.claim_id = claim.id;
  e.source = claim.source;
  e.params = params;
  std::vector<std::string> notes;

  std::optional<Ground> ground;
  try {
    ground = claim.ground(params, ctx);
    e.computed = ground->value;
    e.engine = ground->engine;
    if (!ground->notes.empty()) notes.push_back(ground->notes);
  } catch (const ResourceError& err) {
    notes.push_back(std::string("not computable: ") + err.what());
  } catch (const DomainError& err) {
    notes.push_back(std::string("not computable: ") + err.what());
  }

  bool any_decisive = false, decided = false;
  for (const auto& conv : claim.conventions) {
    std::optional<Quantity> value;
    try {
      value = claim.claimed(params, conv.name, ctx);
    } catch (const ResourceError& err) {
      notes.push_back(conv.name + ": formula needs " + err.what());
    } catch (const DomainError& err) {
      notes.push_back(conv.name + ": " + err.what());
    }
    e.conventions.emplace_back(conv.name, value);
    if (!conv.decisive || !value || !e.computed) continue;
    any_decisive = true;
    const Quantity& got = *e.computed;
    switch (claim.kind) {
      case ClaimKind::equality:
        decided |= got == *value;
        break;
      case ClaimKind::upper_bound:
        decided |= got.number && value->number && *got.number <= *value->number;
        break;
      case ClaimKind::lower_bound:
        decided |= got.number && value->number && *got.number >= *value->number;
        break;
      case ClaimKind::structural:
        break;
    }
  }

  if (!e.computed) {
    e.verdict = Verdict::not_computable;
  } else if (claim.kind == ClaimKind::structural) {
    e.verdict = ground->holds.value_or(false) ? Verdict::match : Verdict::mismatch;
  } else if (!any_decisive) {
    e.verdict = Verdict::not_computable;
  } else if (claim.kind == ClaimKind::equality) {
    e.verdict = decided ? Verdict::match : Verdict::mismatch;
  } else {
    e.verdict = decided ? Verdict::bound_holds : Verdict::mismatch;
  }

  for (const auto& n : notes) e.notes += (e.notes.empty() ? "" : "; ") + n;
  if (timings)
    e.elapsed_ms = std::round(std::chrono::duration<double, std::milli>(Clock::now() - t0).count() * 1000) / 1000;
  return e;
}

AuditReport run_suite(const Grid& grid, const SuiteOptions& options) {
  AuditContext ctx(options.budget);
  AuditReport report;
  for (const auto& id : options.only) find_claim(id);
  for (const auto& claim : register_claims()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), claim.id) == options.only.end())
      continue;
    for (const auto& p : claim.points(grid)) {
      try {
        report.entries.push_back(audit(claim, p, ctx, options.timings));
      } catch (const EngineDisagreement& err) {
        AuditEntry e;
        e.claim_id = claim.id;
        e.source = claim.source;
        e.params = p;
        e.notes = std::string("engine disagreement: ") + err.what();
        report.entries.push_back(e);
        report.disagreements.push_back(claim.id + " " + p.dump() + ": " + err.what());
      }
    }
  }
  std::stable_sort(report.entries.begin(), report.entries.end(), [](const AuditEntry& a, const AuditEntry& b) {
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    return a.params < b.params;
  });
  return report;
}

// ---------------------------------------------------------------- output

nlohmann::ordered_json to_json(const AuditEntry& e) {
  json j;
  j["claim_id"] = e.claim_id;
  j["source"] = e.source;
  j["params"] = e.params;
  json conv = json::object();
  for (const auto& [name, value] : e.conventions) conv[name] = value ? to_json(*value) : json(nullptr);
  j["conventions"] = conv;
  j["computed"] = e.computed ? to_json(*e.computed) : json(nullptr);
  j["verdict"] = std::string(to_string(e.verdict));
  j["engine"] = e.engine;
  j["elapsed_ms"] = e.elapsed_ms;
  j["notes"] = e.notes;
  return j;
}

nlohmann::ordered_json to_json(const AuditReport& r) {
  json out = json::array();
  for (const auto& e : r.entries) out.push_back(to_json(e));
  return out;
}

std::string format_table(const AuditReport& r) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"claim", "params", "claimed", "computed", "verdict", "engine"});
  for (const auto& e : r.entries) {
    std::string params, claimed;
    for (const auto& [k, v] : e.params.items())
      params += (params.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& [name, value] : e.conventions)
      claimed += (claimed.empty() ? "" : " ") + name + "=" + (value ? to_string(*value) : "n/a");
    rows.push_back({e.claim_id, params, claimed, e.computed ? to_string(*e.computed) : "-",
                    std::string(to_string(e.verdict)), e.engine.empty() ? "-" : e.engine});
  }
  // Long structural values would swamp the table; the JSON report carries them in full.
  constexpr std::size_t cap = 48;
  std::array<std::size_t, 6> width{};
  for (auto& row : rows)
    for (std::size_t i = 0; i < 6; ++i) {
      if (row[i].size() > cap) row[i] = row[i].substr(0, cap - 3) + "...";
      width[i] = std::max(width[i], row[i].size());
    }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < 6; ++i) {
      line += row[i];
      if (i + 1 < 6) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  std::map<std::string, std::size_t> tally;
  for (const auto& e : r.entries) ++tally[std::string(to_string(e.verdict))];
  out << '\n' << r.entries.size() << " entries:";
  for (const auto& [v, n] : tally) out << ' ' << v << '=' << n;
  out << '\n';
  return out.str();
}

}  // namespace z2z4
