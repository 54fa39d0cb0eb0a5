// SPDX-License-Identifier: Apache-2.0

#include "z2z4/codes.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

unsigned log2_exact(std::uint64_t n) { return static_cast<unsigned>(std::countr_zero(n)); }

// Binary parts of order-two codewords, reduced to an echelon basis.
class Z2Basis {
 public:
  // Returns true if v was independent of the current basis.
  bool insert(std::vector<std::uint64_t> v) {
    for (const auto& b : basis_) {
      const std::size_t p = lead(b);
      if ((v[p >> 6] >> (p & 63)) & 1U)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= b[i];
    }
    if (std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; })) return false;
    basis_.push_back(std::move(v));
    return true;
  }
  std::size_t rank() const { return basis_.size(); }

 private:
  static std::size_t lead(const std::vector<std::uint64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(v[i]));
    return 0;
  }
  std::vector<std::vector<std::uint64_t>> basis_;
};

std::vector<std::uint64_t> pack_rows(const PackedSpace& space, const GeneratorMatrix& g) {
  std::vector<std::uint64_t> out;
  out.reserve(g.size());
  for (const auto& r : g.rows()) out.push_back(space.pack(r));
  return out;
}

bool fits_packed(Shape s) { return s.gamma + 2 * s.delta <= PackedSpace::max_bits; }

// Subgroup by incremental growth on unpacked vectors (for shapes too wide to pack).
std::vector<MixedVector> generic_span(const GeneratorMatrix& g, unsigned max_log2) {
  const std::uint64_t limit = std::uint64_t{1} << max_log2;
  std::vector<MixedVector> group{MixedVector(g.shape())};
  std::unordered_set<MixedVector> seen{group.front()};
  for (const auto& gen : g.rows()) {
    if (seen.count(gen)) continue;
    const std::size_t base = group.size();
    MixedVector m = gen;
    while (!seen.count(m)) {
      if (group.size() + base > limit)
        throw ResourceError("code exceeds 2^" + std::to_string(max_log2) + " codewords");
      for (std::size_t i = 0; i < base; ++i) {
        MixedVector y = group[i] + m;
        seen.insert(y);
        group.push_back(std::move(y));
      }
      m += gen;
    }
  }
  std::sort(group.begin(), group.end());
  return group;
}

// Working row for reductions: one digit per coordinate.
using Digits = std::vector<int>;

Digits to_digits(const MixedVector& v) {
  Digits d(v.gamma() + v.delta());
  for (std::size_t c = 0; c < d.size(); ++c) d[c] = v.digit(c);
  return d;
}

MixedVector from_digits(Shape s, const Digits& d) {
  MixedVector v(s);
  for (std::size_t c = 0; c < d.size(); ++c) v.set_digit(c, d[c]);
  return v;
}

// dst += e * src
void axpy(Digits& dst, const Digits& src, int e, std::size_t gamma) {
  e &= 3;
  if (e == 0) return;
  for (std::size_t c = 0; c < dst.size(); ++c) {
    if (c < gamma)
      dst[c] ^= (e & 1) & src[c];
    else
      dst[c] = (dst[c] + e * src[c]) & 3;
  }
}

}  // namespace

std::vector<int> IntMatrix::column(std::size_t c) const {
  std::vector<int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

// ---------------------------------------------------------------- GeneratorMatrix

GeneratorMatrix::GeneratorMatrix(Shape s, std::vector<MixedVector> rows) : shape_(s) {
  rows_.reserve(rows.size());
  for (auto& r : rows) add_row(std::move(r));
}

void GeneratorMatrix::add_row(MixedVector row) {
  if (row.shape() != shape_)
    throw DimensionError("row shape " + to_string(row.shape()) + " does not match matrix shape " + to_string(shape_));
  rows_.push_back(std::move(row));
}

MixedVector concat(const MixedVector& a, const MixedVector& b) {
  MixedVector v(a.gamma() + b.gamma(), a.delta() + b.delta());
  for (std::size_t i = 0; i < a.gamma(); ++i) v.set_binary(i, a.binary(i));
  for (std::size_t i = 0; i < b.gamma(); ++i) v.set_binary(a.gamma() + i, b.binary(i));
  for (std::size_t j = 0; j < a.delta(); ++j) v.set_quaternary(j, a.quaternary(j));
  for (std::size_t j = 0; j < b.delta(); ++j) v.set_quaternary(a.delta() + j, b.quaternary(j));
  return v;
}

// ---------------------------------------------------------------- enumeration

std::uint64_t enumerate(const GeneratorMatrix& g, const std::function<void(const MixedVector&)>& visit,
                        const Budget& budget) {
  std::vector<const MixedVector*> rows;
  std::vector<int> orders;
  unsigned log_count = 0;
  for (const auto& r : g.rows()) {
    const int o = r.order();
    if (o == 1) continue;
    rows.push_back(&r);
    orders.push_back(o);
    log_count += o == 4 ? 2 : 1;
  }
  if (log_count > budget.code_log2)
    throw ResourceError("enumeration of 2^" + std::to_string(log_count) + " combinations exceeds 2^" +
                        std::to_string(budget.code_log2));

  // Odometer over coefficient vectors; `cur` always equals sum(d_i * row_i),
  // since wrapping a digit adds the row once more and o * row = 0.
  MixedVector cur(g.shape());
  std::vector<int> digit(rows.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    visit(cur);
    ++count;
    std::size_t i = 0;
    for (; i < rows.size(); ++i) {
      cur += *rows[i];
      if (++digit[i] < orders[i]) break;
      digit[i] = 0;
    }
    if (i == rows.size()) break;
  }
  return count;
}

std::vector<std::uint64_t> packed_codewords(const GeneratorMatrix& g, const Budget& budget) {
  PackedSpace space(g.shape());
  const auto gens = pack_rows(space, g);
  return packed_span(space, gens, budget.code_log2);
}

CodewordSet span(const GeneratorMatrix& g, const Budget& budget) {
  CodewordSet out;
  out.shape = g.shape();
  std::size_t order_two = 0;
  if (fits_packed(g.shape())) {
    PackedSpace space(g.shape());
    const auto words = packed_codewords(g, budget);
    out.words.reserve(words.size());
    for (auto x : words) {
      out.words.push_back(space.unpack(x));
      if (space.order_two(x)) ++order_two;
    }
    std::sort(out.words.begin(), out.words.end());
  } else {
    out.words = generic_span(g, budget.code_log2);
    for (const auto& w : out.words)
      if (w.order() <= 2) ++order_two;
  }
  // |C| = 2^(lambda + 2mu) and the order-two subgroup has 2^(lambda + mu) elements.
  const unsigned total = log2_exact(out.words.size());
  const unsigned two = log2_exact(order_two);
  out.mu = total - two;
  out.lambda = two - out.mu;
  return out;
}

CodeType classify_type(const GeneratorMatrix& g, const Budget& budget) {
  CodeType t;
  t.gamma = g.gamma();
  t.delta = g.delta();
  std::uint64_t total = 0;
  std::uint64_t order_two = 0;
  Z2Basis basis;
  if (fits_packed(g.shape())) {
    PackedSpace space(g.shape());
    const std::uint64_t bin_mask = g.gamma() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.gamma()) - 1;
    for (auto x : packed_codewords(g, budget)) {
      ++total;
      if (!space.order_two(x)) continue;
      ++order_two;
      if (basis.rank() < g.gamma() && (x & bin_mask)) basis.insert({x & bin_mask});
    }
  } else {
    for (const auto& w : generic_span(g, budget.code_log2)) {
      ++total;
      if (w.order() > 2) continue;
      ++order_two;
      const auto b = w.binary_plane();
      if (basis.rank() < g.gamma()) basis.insert(std::vector<std::uint64_t>(b.begin(), b.end()));
    }
  }
  const unsigned lt = log2_exact(total);
  const unsigned l2 = log2_exact(order_two);
  t.mu = lt - l2;
  t.lambda = l2 - t.mu;
  t.kappa = basis.rank();
  return t;
}

// ---------------------------------------------------------------- standard form

StandardForm standard_form(const GeneratorMatrix& g) {
  const std::size_t gamma = g.gamma();
  const std::size_t delta = g.delta();
  const std::size_t ncols = gamma + delta;

  std::vector<Digits> rows;
  for (const auto& r : g.rows()) rows.push_back(to_digits(r));

  enum class Role { none, four, two_binary, two_quaternary };
  std::vector<Role> role(rows.size(), Role::none);
  std::vector<std::size_t> pivot_col(rows.size(), 0);

  auto eliminate = [&](std::size_t p, std::size_t col, auto&& want) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == p || !want(r)) continue;
      const int e = rows[r][col];
      if (e) axpy(rows[r], rows[p], (col < gamma ? 1 : 4 - e), gamma);
    }
  };

  // Order-four pivots: a unit entry in the lowest quaternary column, lowest row first.
  while (true) {
    bool found = false;
    for (std::size_t c = gamma; c < ncols && !found; ++c) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (role[r] != Role::none || (rows[r][c] & 1) == 0) continue;
        if (rows[r][c] == 3) axpy(rows[r], Digits(rows[r]), 2, gamma);  // scale by 3: x + 2x
        role[r] = Role::four;
        pivot_col[r] = c;
        eliminate(r, c, [](std::size_t) { return true; });
        found = true;
        break;
      }
    }
    if (!found) break;
  }

  // What is left has order at most two. Binary pivots next.
  while (true) {
    bool found = false;
    for (std::size_t c = 0; c < gamma && !found; ++c) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (role[r] != Role::none || rows[r][c] == 0) continue;
        role[r] = Role::two_binary;
        pivot_col[r] = c;
        eliminate(r, c, [](std::size_t) { return true; });
        found = true;
        break;
      }
    }
    if (!found) break;
  }

  // Remaining rows have zero binary part and entries in {0, 2}.
  while (true) {
    bool found = false;
    for (std::size_t c = gamma; c < ncols && !found; ++c) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (role[r] != Role::none || rows[r][c] == 0) continue;
        role[r] = Role::two_quaternary;
        pivot_col[r] = c;
        for (std::size_t o = 0; o < rows.size(); ++o) {
          if (o == r) continue;
          // Order-four rows keep the residue mod 2 in this column.
          if (rows[o][c] >= 2) axpy(rows[o], rows[r], 1, gamma);
        }
        found = true;
        break;
      }
    }
    if (!found) break;
  }

  std::vector<std::size_t> kappa_rows, lk_rows, mu_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    switch (role[r]) {
      case Role::two_binary:
        kappa_rows.push_back(r);
        break;
      case Role::two_quaternary:
        lk_rows.push_back(r);
        break;
      case Role::four:
        mu_rows.push_back(r);
        break;
      case Role::none:
        break;  // reduced to zero
    }
  }
  // Pivot columns in ascending order keep the identity blocks diagonal.
  auto by_pivot = [&](std::size_t a, std::size_t b) { return pivot_col[a] < pivot_col[b]; };
  std::sort(kappa_rows.begin(), kappa_rows.end(), by_pivot);
  std::sort(lk_rows.begin(), lk_rows.end(), by_pivot);
  std::sort(mu_rows.begin(), mu_rows.end(), by_pivot);

  StandardForm sf;
  sf.type = {gamma, delta, kappa_rows.size() + lk_rows.size(), mu_rows.size(), kappa_rows.size()};
  const std::size_t kappa = sf.type.kappa;
  const std::size_t lk = lk_rows.size();
  const std::size_t mu = mu_rows.size();

  std::vector<bool> used(ncols, false);
  for (auto r : kappa_rows) used[pivot_col[r]] = true;
  for (auto r : lk_rows) used[pivot_col[r]] = true;
  for (auto r : mu_rows) used[pivot_col[r]] = true;

  std::vector<std::size_t> bin_rest, quat_rest;
  for (std::size_t c = 0; c < gamma; ++c)
    if (!used[c]) bin_rest.push_back(c);
  for (std::size_t c = gamma; c < ncols; ++c)
    if (!used[c]) quat_rest.push_back(c);

  auto& perm = sf.column_permutation;
  for (auto r : kappa_rows) perm.push_back(pivot_col[r]);
  perm.insert(perm.end(), bin_rest.begin(), bin_rest.end());
  perm.insert(perm.end(), quat_rest.begin(), quat_rest.end());
  for (auto r : lk_rows) perm.push_back(pivot_col[r]);
  for (auto r : mu_rows) perm.push_back(pivot_col[r]);

  std::vector<std::size_t> order;
  order.insert(order.end(), kappa_rows.begin(), kappa_rows.end());
  order.insert(order.end(), lk_rows.begin(), lk_rows.end());
  order.insert(order.end(), mu_rows.begin(), mu_rows.end());

  sf.matrix = GeneratorMatrix(g.shape());
  for (auto r : order) {
    MixedVector v = from_digits(g.shape(), rows[r]);
    sf.basis.push_back(v);
    sf.matrix.add_row(permute(v, perm));
  }

  const std::size_t rq = quat_rest.size();
  sf.t_prime = IntMatrix(kappa, bin_rest.size());
  sf.t1 = IntMatrix(kappa, rq);
  sf.t2 = IntMatrix(lk, rq);
  sf.r = IntMatrix(mu, lk);
  sf.s_prime = IntMatrix(mu, bin_rest.size());
  sf.s = IntMatrix(mu, rq);
  for (std::size_t i = 0; i < kappa; ++i) {
    const auto& d = rows[kappa_rows[i]];
    for (std::size_t j = 0; j < bin_rest.size(); ++j) sf.t_prime(i, j) = static_cast<std::uint8_t>(d[bin_rest[j]]);
    for (std::size_t j = 0; j < rq; ++j) sf.t1(i, j) = static_cast<std::uint8_t>(d[quat_rest[j]] / 2);
  }
  for (std::size_t i = 0; i < lk; ++i) {
    const auto& d = rows[lk_rows[i]];
    for (std::size_t j = 0; j < rq; ++j) sf.t2(i, j) = static_cast<std::uint8_t>(d[quat_rest[j]] / 2);
  }
  for (std::size_t i = 0; i < mu; ++i) {
    const auto& d = rows[mu_rows[i]];
    for (std::size_t j = 0; j < lk; ++j) sf.r(i, j) = static_cast<std::uint8_t>(d[pivot_col[lk_rows[j]]]);
    for (std::size_t j = 0; j < bin_rest.size(); ++j) sf.s_prime(i, j) = static_cast<std::uint8_t>(d[bin_rest[j]]);
    for (std::size_t j = 0; j < rq; ++j) sf.s(i, j) = static_cast<std::uint8_t>(d[quat_rest[j]]);
  }
  return sf;
}

MixedVector permute(const MixedVector& v, const std::vector<std::size_t>& perm) {
  if (perm.size() != v.gamma() + v.delta()) throw DimensionError("permutation length does not match vector");
  MixedVector out(v.shape());
  for (std::size_t i = 0; i < perm.size(); ++i) out.set_digit(i, v.digit(perm[i]));
  return out;
}

MixedVector unpermute(const MixedVector& v, const std::vector<std::size_t>& perm) {
  if (perm.size() != v.gamma() + v.delta()) throw DimensionError("permutation length does not match vector");
  MixedVector out(v.shape());
  for (std::size_t i = 0; i < perm.size(); ++i) out.set_digit(perm[i], v.digit(i));
  return out;
}

// ---------------------------------------------------------------- duals

GeneratorMatrix parity_check(const StandardForm& sf, ParityVariant variant) {
  const Shape shape = sf.matrix.shape();
  const std::size_t kappa = sf.type.kappa;
  const std::size_t lk = sf.type.lambda - sf.type.kappa;
  const std::size_t mu = sf.type.mu;
  const std::size_t brest = shape.gamma - kappa;
  const std::size_t rq = shape.delta - lk - mu;
  const int x = variant == ParityVariant::printed ? 1 : 2;

  auto q = [&](std::size_t j) { return shape.gamma + j; };  // quaternary position j
  GeneratorMatrix h(shape);

  // [T'^t  I | 0  0  2S'^t]
  for (std::size_t j = 0; j < brest; ++j) {
    MixedVector v(shape);
    for (std::size_t i = 0; i < kappa; ++i) v.set_binary(i, sf.t_prime(i, j));
    v.set_binary(kappa + j, 1);
    for (std::size_t i = 0; i < mu; ++i) v.set_digit(q(rq + lk + i), 2 * sf.s_prime(i, j));
    h.add_row(std::move(v));
  }
  // [0  0 | 0  xI  2R^t]
  for (std::size_t t = 0; t < lk; ++t) {
    MixedVector v(shape);
    v.set_digit(q(rq + t), x);
    for (std::size_t i = 0; i < mu; ++i) v.set_digit(q(rq + lk + i), (2 * sf.r(i, t)) & 3);
    h.add_row(std::move(v));
  }
  // [T1^t  0 | I  T2^t  -(S + R T2)^t]
  for (std::size_t j = 0; j < rq; ++j) {
    MixedVector v(shape);
    for (std::size_t i = 0; i < kappa; ++i) v.set_binary(i, sf.t1(i, j));
    v.set_digit(q(j), 1);
    for (std::size_t t = 0; t < lk; ++t) v.set_digit(q(rq + t), sf.t2(t, j));
    for (std::size_t i = 0; i < mu; ++i) {
      int e = sf.s(i, j);
      for (std::size_t t = 0; t < lk; ++t) e += sf.r(i, t) * sf.t2(t, j);
      v.set_digit(q(rq + lk + i), (4 - (e & 3)) & 3);
    }
    h.add_row(std::move(v));
  }
  return h;
}

KernelDual kernel_dual(const GeneratorMatrix& g, const Budget& budget) {
  const Shape s = g.shape();
  if (s.gamma + 2 * s.delta > budget.ambient_log2)
    throw ResourceError("kernel_dual: ambient 2^" + std::to_string(s.gamma + 2 * s.delta) + " exceeds 2^" +
                        std::to_string(budget.ambient_log2));
  KernelDual out{PackedSpace(s), {}, GeneratorMatrix(s)};
  const PackedSpace& space = out.space;
  const auto gens = pack_rows(space, g);
  const std::int64_t n = static_cast<std::int64_t>(space.size());

  std::vector<std::vector<std::uint64_t>> parts;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto x = static_cast<std::uint64_t>(i);
      bool ok = true;
      for (auto y : gens)
        if (space.inner(x, y) != 0) {
          ok = false;
          break;
        }
      if (ok) local.push_back(x);
    }
#pragma omp critical
    parts.push_back(std::move(local));
  }
  for (auto& p : parts) out.elements.insert(out.elements.end(), p.begin(), p.end());
  std::sort(out.elements.begin(), out.elements.end());

  // Generating set by incremental growth over the elements in ascending order.
  std::vector<std::uint64_t> bitmap((space.size() + 63) / 64, 0);
  auto contains = [&](std::uint64_t x) { return ((bitmap[x >> 6] >> (x & 63)) & 1U) != 0; };
  std::vector<std::uint64_t> group{0};
  bitmap[0] |= 1;
  for (auto e : out.elements) {
    if (contains(e)) continue;
    out.generators.add_row(space.unpack(e));
    const std::size_t base = group.size();
    std::uint64_t m = e;
    while (!contains(m)) {
      for (std::size_t i = 0; i < base; ++i) {
        const auto y = space.add(group[i], m);
        group.push_back(y);
        bitmap[y >> 6] |= std::uint64_t{1} << (y & 63);
      }
      m = space.add(m, e);
    }
  }
  return out;
}

namespace {

bool orthogonal_to(const GeneratorMatrix& h, const GeneratorMatrix& g) {
  for (const auto& a : h.rows())
    for (const auto& b : g.rows())
      if (inner_product(a, b) != 0) return false;
  return true;
}

GeneratorMatrix to_original(const GeneratorMatrix& h, const std::vector<std::size_t>& perm) {
  GeneratorMatrix out(h.shape());
  for (const auto& r : h.rows()) out.add_row(unpermute(r, perm));
  return out;
}

}  // namespace

DualDerivation derive_dual(const GeneratorMatrix& g, const Budget& budget) {
  const StandardForm sf = standard_form(g);
  const std::size_t want = g.gamma() + 2 * g.delta() - sf.type.log2_size();
  DualDerivation d;

  auto check = [&](ParityVariant v, bool& orth, bool& size_ok) {
    GeneratorMatrix h = to_original(parity_check(sf, v), sf.column_permutation);
    orth = orthogonal_to(h, g);
    size_ok = standard_form(h).type.log2_size() == want;
    return h;
  };

  GeneratorMatrix printed = check(ParityVariant::printed, d.printed_orthogonal, d.printed_size_ok);
  if (d.printed_orthogonal && d.printed_size_ok) {
    d.generators = std::move(printed);
    d.source = "printed";
    return d;
  }
  bool orth = false, size_ok = false;
  GeneratorMatrix corrected = check(ParityVariant::corrected, orth, size_ok);
  d.note = std::string("printed parity-check block ") + (d.printed_orthogonal ? "" : "not orthogonal") +
           (!d.printed_orthogonal && !d.printed_size_ok ? ", " : "") + (d.printed_size_ok ? "" : "wrong size");
  if (orth && size_ok) {
    d.generators = std::move(corrected);
    d.source = "corrected";
    return d;
  }
  d.note += "; corrected block failed too, using kernel sweep";
  d.generators = kernel_dual(g, budget).generators;
  d.source = "kernel";
  return d;
}

// ---------------------------------------------------------------- weights

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

std::size_t WeightDistribution::nonzero_weights() const {
  std::size_t n = 0;
  for (const auto& [w, c] : counts)
    if (w != 0 && c != 0) ++n;
  return n;
}

WeightDistribution weight_distribution(const PackedSpace& space, std::span<const std::uint64_t> words, Metric m) {
  WeightDistribution d;
  d.metric = m;
  for (auto x : words) ++d.counts[space.weight(x, m)];
  return d;
}

WeightDistribution weight_distribution(const GeneratorMatrix& g, Metric m, const Budget& budget) {
  if (fits_packed(g.shape())) {
    PackedSpace space(g.shape());
    const auto words = packed_codewords(g, budget);
    return weight_distribution(space, words, m);
  }
  WeightDistribution d;
  d.metric = m;
  for (const auto& w : generic_span(g, budget.code_log2)) ++d.counts[weight(w, m)];
  return d;
}

std::size_t minimum_distance(const GeneratorMatrix& g, Metric m, const Budget& budget) {
  const auto d = weight_distribution(g, m, budget);
  for (const auto& [w, c] : d.counts)
    if (w != 0) return w;
  throw DomainError("minimum distance of the zero code is undefined");
}

// ---------------------------------------------------------------- text / JSON

GeneratorMatrix read_matrix(std::istream& in) {
  std::string line;
  std::optional<Shape> shape;
  GeneratorMatrix g;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!shape) {
      std::istringstream ss(line);
      std::string a, b;
      ss >> a >> b;
      std::string rest;
      if (a.rfind("gamma=", 0) != 0 || b.rfind("delta=", 0) != 0 || (ss >> rest))
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'gamma=<g> delta=<d>'");
      try {
        std::size_t pa = 0, pb = 0;
        const auto gv = std::stoul(a.substr(6), &pa);
        const auto dv = std::stoul(b.substr(6), &pb);
        if (pa != a.size() - 6 || pb != b.size() - 6) throw std::invalid_argument("trailing");
        shape = Shape{gv, dv};
      } catch (const std::logic_error&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad header '" + line + "'");
      }
      g = GeneratorMatrix(*shape);
      continue;
    }
    MixedVector v;
    try {
      v = MixedVector::parse(line);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (v.shape() != *shape)
      throw ParseError("line " + std::to_string(lineno) + ": row has shape " + to_string(v.shape()) + ", header says " +
                       to_string(*shape));
    g.add_row(std::move(v));
  }
  if (!shape) throw ParseError("matrix file has no 'gamma=<g> delta=<d>' header");
  return g;
}

GeneratorMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const GeneratorMatrix& g) {
  out << to_string(g.shape()) << '\n';
  for (const auto& r : g.rows()) out << r.to_string() << '\n';
}

std::string format_matrix(const GeneratorMatrix& g) {
  std::ostringstream out;
  write_matrix(out, g);
  return out.str();
}

nlohmann::ordered_json to_json(const CodeType& t) {
  return {{"gamma", t.gamma}, {"delta", t.delta}, {"lambda", t.lambda}, {"mu", t.mu}, {"kappa", t.kappa}};
}

nlohmann::ordered_json to_json(const WeightDistribution& w) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, c] : w.counts) counts[std::to_string(k)] = c;
  return {{"metric", std::string(to_string(w.metric))}, {"counts", counts}};
}

CodeType code_type_from_json(const nlohmann::json& j) {
  try {
    return {j.at("gamma").get<std::size_t>(), j.at("delta").get<std::size_t>(), j.at("lambda").get<std::size_t>(),
            j.at("mu").get<std::size_t>(), j.at("kappa").get<std::size_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("code type JSON: ") + e.what());
  }
}

WeightDistribution weight_distribution_from_json(const nlohmann::json& j) {
  try {
    WeightDistribution w;
    w.metric = parse_metric(j.at("metric").get<std::string>());
    for (const auto& [k, v] : j.at("counts").items()) w.counts[std::stoul(k)] = v.get<std::uint64_t>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("weight distribution JSON: ") + e.what());
  }
}

}  // namespace z2z4
