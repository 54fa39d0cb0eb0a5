// SPDX-License-Identifier: Apache-2.0

#include "z2z4/covering.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <limits>
#include <unordered_map>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool fits_packed(Shape s) { return s.gamma + 2 * s.delta <= PackedSpace::max_bits; }

unsigned code_log2(const GeneratorMatrix& g) { return static_cast<unsigned>(standard_form(g).type.log2_size()); }

std::string limit_text(unsigned log2) { return "2^" + std::to_string(log2); }

}  // namespace

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::exhaustive:
      return "exhaustive";
    case Engine::coset:
      return "coset";
    case Engine::both:
      return "both";
    case Engine::automatic:
      return "auto";
  }
  return "?";
}

Engine parse_engine(std::string_view s) {
  if (s == "exhaustive") return Engine::exhaustive;
  if (s == "coset") return Engine::coset;
  if (s == "both") return Engine::both;
  if (s == "auto") return Engine::automatic;
  throw ParseError("unknown engine '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- exhaustive engine

bool exhaustive_feasible(const GeneratorMatrix& g, const Budget& budget) {
  const Shape s = g.shape();
  if (!fits_packed(s)) return false;
  const std::size_t bits = s.gamma + 2 * s.delta;
  if (bits > budget.ambient_log2) return false;
  const unsigned lc = code_log2(g);
  return lc <= budget.code_log2 && bits + lc <= budget.ambient_log2 + budget.work_slack_log2;
}

CoveringResult covering_radius_exhaustive(const GeneratorMatrix& g, Metric m, const Budget& budget) {
  const auto t0 = Clock::now();
  const Shape s = g.shape();
  const std::size_t bits = s.gamma + 2 * s.delta;
  if (!fits_packed(s) || bits > budget.ambient_log2)
    throw ResourceError("exhaustive engine: ambient 2^" + std::to_string(bits) + " exceeds " +
                        limit_text(budget.ambient_log2));
  const PackedSpace space(s);
  const auto words = packed_codewords(g, budget);
  if (bits + std::bit_width(words.size()) - 1 > budget.ambient_log2 + budget.work_slack_log2)
    throw ResourceError("exhaustive engine: ambient x |C| exceeds " +
                        limit_text(budget.ambient_log2 + budget.work_slack_log2) + " distance evaluations");

  auto sorted = words;
  std::sort(sorted.begin(), sorted.end());

  const auto n = static_cast<std::int64_t>(space.size());
  int best_r = -1;
  std::uint64_t best_key = 0, best_x = 0;

#pragma omp parallel
  {
    int local_r = -1;
    std::uint64_t local_key = std::numeric_limits<std::uint64_t>::max(), local_x = 0;
    // The codeword nearest the previous point is usually near this one too;
    // trying it first lets the cutoff below fire early.
    std::size_t hint = 0;
#pragma omp for schedule(dynamic, 4096) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto x = static_cast<std::uint64_t>(i);
      const std::uint64_t key = space.lex_key(x);
      // x matters only with a larger minimum, or an equal one and a smaller key.
      const int floor = key < local_key ? local_r : local_r + 1;
      int mn = std::binary_search(sorted.begin(), sorted.end(), x)
                   ? 0
                   : static_cast<int>(space.weight(space.sub(x, words[hint]), m));
      if (mn >= floor && mn > 0) {
        for (std::size_t j = 0; j < words.size(); ++j) {
          const int w = static_cast<int>(space.weight(space.sub(x, words[j]), m));
          if (w < mn) {
            mn = w;
            hint = j;
            if (mn < floor) break;
          }
        }
      }
      if (mn < floor) continue;
      local_r = mn;
      local_key = key;
      local_x = x;
    }
#pragma omp critical
    {
      if (local_r > best_r || (local_r == best_r && local_key < best_key)) {
        best_r = local_r;
        best_key = local_key;
        best_x = local_x;
      }
    }
  }

  CoveringResult r;
  r.metric = m;
  r.radius = static_cast<std::size_t>(best_r);
  r.witness = space.unpack(best_x);
  r.engine = "exhaustive";
  r.elapsed_ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------- coset engine

namespace {

std::uint64_t count_cosets_log2(const GeneratorMatrix& g) {
  const Shape s = g.shape();
  return s.gamma + 2 * s.delta - code_log2(g);
}

bool is_dual_of(const GeneratorMatrix& h, const GeneratorMatrix& g) {
  for (const auto& a : h.rows())
    for (const auto& b : g.rows())
      if (inner_product(a, b) != 0) return false;
  const Shape s = g.shape();
  return code_log2(h) + code_log2(g) == s.gamma + 2 * s.delta;
}

// Per-coordinate nonzero symbols with their weights and packed bit patterns.
struct Option {
  std::uint64_t bits;
  std::uint64_t syndrome;
  unsigned weight;
};

struct LevelScan {
  const std::vector<std::vector<Option>>* options;
  const std::vector<unsigned>* suffix_max;
  const PackedSpace* space;
  const PackedSpace* syn;
  std::atomic<std::uint8_t>* leader;
  std::uint8_t level;
  std::uint64_t found = 0;
  std::uint64_t best_key = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best_x = 0;
  std::uint64_t visited = 0;

  void leaf(std::uint64_t x, std::uint64_t label) {
    ++visited;
    std::uint8_t expect = 0xFF;
    if (leader[label].load(std::memory_order_relaxed) == 0xFF &&
        leader[label].compare_exchange_strong(expect, level, std::memory_order_relaxed))
      ++found;
    if (leader[label].load(std::memory_order_relaxed) == level) {
      const auto key = space->lex_key(x);
      if (key < best_key) {
        best_key = key;
        best_x = x;
      }
    }
  }

  // Vectors whose support starts at coordinate >= c with weight exactly `left`.
  void descend(std::size_t c, unsigned left, std::uint64_t x, std::uint64_t s) {
    if (left == 0) {
      leaf(x, s);
      return;
    }
    const std::size_t nc = options->size();
    for (std::size_t p = c; p < nc; ++p) {
      if ((*suffix_max)[p] < left) return;
      for (const auto& o : (*options)[p]) {
        if (o.weight > left) continue;
        descend(p + 1, left - o.weight, x | o.bits, syn->add(s, o.syndrome));
      }
    }
  }
};

}  // namespace

bool coset_feasible(const GeneratorMatrix& g, const Budget& budget) {
  if (!fits_packed(g.shape())) return false;
  return count_cosets_log2(g) <= budget.coset_log2;
}

CheckSource coset_check_source(const GeneratorMatrix& g, const Budget& budget, const CosetOptions& options) {
  if (options.check) return CheckSource::given;
  if (options.hashed) return CheckSource::hashed;
  const Shape s = g.shape();
  if (s.gamma + 2 * s.delta <= budget.ambient_log2) return CheckSource::kernel;
  return CheckSource::hashed;
}

CoveringResult covering_radius_coset(const GeneratorMatrix& g, Metric m, const Budget& budget,
                                     const CosetOptions& options) {
  const auto t0 = Clock::now();
  const Shape s = g.shape();
  if (!fits_packed(s))
    throw ResourceError("coset engine: gamma + 2*delta = " + std::to_string(s.binary_length()) + " exceeds 64");
  const unsigned bits = static_cast<unsigned>(s.gamma + 2 * s.delta);
  const unsigned lc = code_log2(g);
  const unsigned lcos = bits - lc;
  if (lcos > budget.coset_log2)
    throw ResourceError("coset engine: 2^" + std::to_string(lcos) + " cosets exceed " + limit_text(budget.coset_log2));
  const std::uint64_t ncosets = std::uint64_t{1} << lcos;
  const PackedSpace space(s);

  // Syndromes against a direct-sum basis of the dual: order-two checks give
  // one bit, order-four checks a Z4 digit, so labels fill [0, #cosets).
  const CheckSource source = coset_check_source(g, budget, options);
  std::vector<MixedVector> checks;
  if (source == CheckSource::given) {
    if (!is_dual_of(*options.check, g)) throw DomainError("coset engine: supplied check matrix is not the dual");
    checks = standard_form(*options.check).basis;
  } else if (source == CheckSource::kernel) {
    checks = standard_form(kernel_dual(g, budget).generators).basis;
  }

  std::vector<std::uint64_t> words;
  std::unordered_map<std::uint64_t, std::uint64_t> hashed_labels;
  if (source == CheckSource::hashed) {
    if (lc > budget.work_slack_log2)
      throw ResourceError("coset engine: hashed labelling needs |C| <= " + limit_text(budget.work_slack_log2));
    words = packed_codewords(g, budget);
  }

  std::vector<std::size_t> two, four;
  for (std::size_t i = 0; i < checks.size(); ++i) (checks[i].order() == 4 ? four : two).push_back(i);
  const PackedSpace syn(Shape{two.size(), four.size()});

  auto syndrome_of = [&](std::size_t coord, int a) {
    MixedVector e(s);
    e.set_digit(coord, a);
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < two.size(); ++i)
      out |= static_cast<std::uint64_t>(inner_product(e, checks[two[i]]) >> 1) << i;
    for (std::size_t j = 0; j < four.size(); ++j) {
      const auto v = static_cast<std::uint64_t>(inner_product(e, checks[four[j]]));
      out |= (v & 1U) << (two.size() + j);
      out |= (v >> 1) << (two.size() + four.size() + j);
    }
    return out;
  };

  const std::size_t ncoord = s.gamma + s.delta;
  std::vector<std::vector<Option>> options_by_coord(ncoord);
  std::vector<unsigned> suffix_max(ncoord + 1, 0);
  for (std::size_t c = 0; c < ncoord; ++c) {
    if (c < s.gamma) {
      options_by_coord[c].push_back({std::uint64_t{1} << c, source == CheckSource::hashed ? 0 : syndrome_of(c, 1), 1});
      continue;
    }
    const std::size_t j = c - s.gamma;
    for (int a : {1, 2, 3}) {
      const std::uint64_t b = (static_cast<std::uint64_t>(a & 1) << (s.gamma + j)) |
                              (static_cast<std::uint64_t>(a >> 1) << (s.gamma + s.delta + j));
      options_by_coord[c].push_back(
          {b, source == CheckSource::hashed ? 0 : syndrome_of(c, a), static_cast<unsigned>(quaternary_weight(a, m))});
    }
  }
  for (std::size_t c = ncoord; c-- > 0;) {
    unsigned mx = 0;
    for (const auto& o : options_by_coord[c]) mx = std::max(mx, o.weight);
    suffix_max[c] = suffix_max[c + 1] + mx;
  }
  const unsigned max_weight = suffix_max[0];
  const std::vector<BigInt> volumes = ball_volumes(s, m);
  const BigInt vector_limit = BigInt(1) << budget.ambient_log2;

  std::vector<std::atomic<std::uint8_t>> leader(source == CheckSource::hashed ? 0 : ncosets);
  for (auto& a : leader) a.store(0xFF, std::memory_order_relaxed);

  std::uint64_t found = 0;
  BigInt visited = 0;
  unsigned radius = 0;
  std::uint64_t witness = 0;
  std::map<std::size_t, std::uint64_t> histogram;

  for (unsigned w = 0; w <= max_weight && found < ncosets; ++w) {
    visited += w < volumes.size() ? volumes[w] : BigInt(0);
    if (visited > vector_limit)
      throw ResourceError("coset engine: more than " + limit_text(budget.ambient_log2) +
                          " vectors before all cosets were reached");
    std::uint64_t level_found = 0;
    std::uint64_t level_key = std::numeric_limits<std::uint64_t>::max(), level_x = 0;

    if (source == CheckSource::hashed) {
      // Sequential: label = least packed element of the coset.
      std::vector<std::uint64_t> xs;
      struct Collect {
        const std::vector<std::vector<Option>>& opts;
        const std::vector<unsigned>& smax;
        std::vector<std::uint64_t>& out;
        void go(std::size_t c, unsigned left, std::uint64_t x) {
          if (left == 0) {
            out.push_back(x);
            return;
          }
          for (std::size_t p = c; p < opts.size(); ++p) {
            if (smax[p] < left) return;
            for (const auto& o : opts[p])
              if (o.weight <= left) go(p + 1, left - o.weight, x | o.bits);
          }
        }
      } collect{options_by_coord, suffix_max, xs};
      collect.go(0, w, 0);
      for (auto x : xs) {
        std::uint64_t canon = std::numeric_limits<std::uint64_t>::max();
        for (auto c : words) canon = std::min(canon, space.sub(x, c));
        auto [it, inserted] = hashed_labels.emplace(canon, w);
        if (inserted) ++level_found;
        if (it->second == w) {
          const auto key = space.lex_key(x);
          if (key < level_key) {
            level_key = key;
            level_x = x;
          }
        }
      }
    } else if (w == 0) {
      LevelScan scan{&options_by_coord, &suffix_max, &space, &syn, leader.data(), 0};
      scan.leaf(0, 0);
      level_found = scan.found;
      level_key = scan.best_key;
      level_x = scan.best_x;
    } else {
      // Tasks: the first nonzero coordinate and its symbol.
      std::vector<std::pair<std::size_t, std::size_t>> tasks;
      for (std::size_t c = 0; c < ncoord; ++c)
        for (std::size_t k = 0; k < options_by_coord[c].size(); ++k)
          if (options_by_coord[c][k].weight <= w && options_by_coord[c][k].weight + suffix_max[c + 1] >= w)
            tasks.emplace_back(c, k);
      const auto ntasks = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel
      {
        LevelScan scan{&options_by_coord, &suffix_max, &space, &syn, leader.data(), static_cast<std::uint8_t>(w)};
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t t = 0; t < ntasks; ++t) {
          const auto [c, k] = tasks[static_cast<std::size_t>(t)];
          const Option& o = options_by_coord[c][k];
          scan.descend(c + 1, w - o.weight, o.bits, o.syndrome);
        }
#pragma omp critical
        {
          level_found += scan.found;
          if (scan.best_key < level_key) {
            level_key = scan.best_key;
            level_x = scan.best_x;
          }
        }
      }
    }
    if (level_found) {
      histogram[w] = level_found;
      found += level_found;
      radius = w;
      witness = level_x;
    }
  }
  if (found != ncosets) throw Error("coset engine: only " + std::to_string(found) + " of " + std::to_string(ncosets) +
                                    " cosets reached");

  CoveringResult r;
  r.metric = m;
  r.radius = radius;
  r.witness = space.unpack(witness);
  r.engine = "coset";
  r.leader_weights = std::move(histogram);
  r.elapsed_ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------- dual engine

CoveringResult dual_covering_radius(const GeneratorMatrix& g, Metric m, const Budget& budget) {
  const auto t0 = Clock::now();
  const Shape s = g.shape();
  const StandardForm sf = standard_form(g);
  const unsigned lc = static_cast<unsigned>(sf.type.log2_size());
  if (lc > budget.coset_log2 || lc > 63)
    throw ResourceError("dual engine: 2^" + std::to_string(lc) + " cosets exceed " + limit_text(budget.coset_log2));
  const std::size_t ncoord = s.coordinates();
  const std::uint64_t ncosets = std::uint64_t{1} << lc;
  if (BigInt(ncoord + 1) * ncosets > BigInt(1) << budget.ambient_log2)
    throw ResourceError("dual engine: table of " + std::to_string(ncoord + 1) + " x 2^" + std::to_string(lc) +
                        " entries exceeds " + limit_text(budget.ambient_log2));

  std::vector<const MixedVector*> two, four;
  for (const auto& b : sf.basis) (b.order() == 4 ? four : two).push_back(&b);
  const PackedSpace syn(Shape{two.size(), four.size()});

  // label(c, a): syndrome of the vector with the single symbol a at coordinate c.
  auto label = [&](std::size_t c, int a) {
    std::uint64_t out = 0;
    const bool bin = c < s.gamma;
    auto ip = [&](const MixedVector& b) { return bin ? (2 * a * b.binary(c)) & 3 : (a * b.quaternary(c - s.gamma)) & 3; };
    for (std::size_t i = 0; i < two.size(); ++i) out |= static_cast<std::uint64_t>(ip(*two[i]) >> 1) << i;
    for (std::size_t j = 0; j < four.size(); ++j) {
      const auto v = static_cast<std::uint64_t>(ip(*four[j]));
      out |= (v & 1U) << (two.size() + j);
      out |= (v >> 1) << (two.size() + four.size() + j);
    }
    return out;
  };
  struct Sym {
    int digit;
    std::uint64_t label;
    std::uint32_t weight;
  };
  std::vector<std::vector<Sym>> syms(ncoord);
  for (std::size_t c = 0; c < ncoord; ++c) {
    if (c < s.gamma) {
      syms[c].push_back({1, label(c, 1), 1});
    } else {
      for (int a : {1, 2, 3}) syms[c].push_back({a, label(c, a), static_cast<std::uint32_t>(quaternary_weight(a, m))});
    }
  }

  // best[c][t]: least weight of a vector supported on coordinates >= c with syndrome t.
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 2;
  std::vector<std::vector<std::uint32_t>> best(ncoord + 1, std::vector<std::uint32_t>(ncosets, inf));
  best[ncoord][0] = 0;
  for (std::size_t c = ncoord; c-- > 0;) {
    const auto& next = best[c + 1];
    auto& cur = best[c];
    cur = next;
    for (const auto& sy : syms[c])
      for (std::uint64_t t = 0; t < ncosets; ++t) {
        const std::uint32_t w = next[syn.sub(t, sy.label)];
        if (w + sy.weight < cur[t]) cur[t] = w + sy.weight;
      }
  }

  CoveringResult r;
  r.metric = m;
  std::uint32_t radius = 0;
  for (std::uint64_t t = 0; t < ncosets; ++t) {
    if (best[0][t] >= inf) throw Error("dual engine: unreachable syndrome");
    ++r.leader_weights[best[0][t]];
    radius = std::max(radius, best[0][t]);
  }

  // Lex-least leader over all maximal cosets: at each coordinate take the least
  // digit that keeps at least one target on an optimal path.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> targets;  // (remaining syndrome, remaining weight)
  for (std::uint64_t t = 0; t < ncosets; ++t)
    if (best[0][t] == radius) targets.emplace_back(t, radius);
  MixedVector witness(s);
  for (std::size_t c = 0; c < ncoord; ++c) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> keep;
    for (const auto& [t, left] : targets)
      if (best[c + 1][t] == left) keep.emplace_back(t, left);
    if (keep.empty()) {
      for (const auto& sy : syms[c]) {
        for (const auto& [t, left] : targets) {
          const auto rest = syn.sub(t, sy.label);
          if (sy.weight <= left && best[c + 1][rest] == left - sy.weight) keep.emplace_back(rest, left - sy.weight);
        }
        if (!keep.empty()) {
          witness.set_digit(c, sy.digit);
          break;
        }
      }
    }
    targets = std::move(keep);
  }

  r.radius = radius;
  r.witness = std::move(witness);
  r.engine = "dual";
  r.elapsed_ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------- dispatcher

CoveringResult covering_radius(const GeneratorMatrix& g, Metric m, Engine e, const Budget& budget,
                               const CosetOptions& options) {
  switch (e) {
    case Engine::exhaustive:
      return covering_radius_exhaustive(g, m, budget);
    case Engine::coset:
      return covering_radius_coset(g, m, budget, options);
    case Engine::both:
    case Engine::automatic:
      break;
  }
  const auto t0 = Clock::now();
  std::optional<CoveringResult> ex, co;
  std::string why;
  if (e == Engine::both || exhaustive_feasible(g, budget)) {
    try {
      ex = covering_radius_exhaustive(g, m, budget);
    } catch (const ResourceError& err) {
      if (e == Engine::both) throw;
      why = err.what();
    }
  }
  if (e == Engine::both || coset_feasible(g, budget)) {
    try {
      co = covering_radius_coset(g, m, budget, options);
    } catch (const ResourceError& err) {
      if (e == Engine::both) throw;
      why += (why.empty() ? "" : "; ") + std::string(err.what());
    }
  }
  if (ex && co) {
    if (ex->radius != co->radius)
      throw EngineDisagreement("covering radius engines disagree (" + std::string(to_string(m)) +
                               "): exhaustive " + std::to_string(ex->radius) + ", coset " +
                               std::to_string(co->radius));
    CoveringResult r = *ex;
    r.engine = "both";
    r.leader_weights = co->leader_weights;
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  if (ex) return *ex;
  if (co) return *co;
  throw ResourceError("no covering-radius engine fits the budget" + (why.empty() ? std::string() : ": " + why));
}

// ---------------------------------------------------------------- binary engine

BinaryCoveringResult binary_covering_radius(const std::vector<BinaryVector>& code, std::size_t length,
                                            const Budget& budget) {
  if (length > budget.ambient_log2 || length > 32)
    throw ResourceError("binary engine: 2^" + std::to_string(length) + " points exceed " +
                        limit_text(std::min<unsigned>(budget.ambient_log2, 32)));
  if (code.empty()) throw DomainError("binary engine: empty code");
  const std::uint64_t size = std::uint64_t{1} << length;
  std::vector<std::uint8_t> dist(size, 0xFF);
  std::vector<std::uint32_t> frontier;
  for (const auto& c : code) {
    if (c.size() != length) throw DimensionError("binary engine: codeword length mismatch");
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < length; ++i) x |= static_cast<std::uint32_t>(c[i]) << i;
    if (dist[x] == 0xFF) {
      dist[x] = 0;
      frontier.push_back(x);
    }
  }
  std::size_t level = 0;
  std::vector<std::uint32_t> next;
  while (true) {
    next.clear();
    for (auto x : frontier)
      for (std::size_t i = 0; i < length; ++i) {
        const std::uint32_t y = x ^ (std::uint32_t{1} << i);
        if (dist[y] == 0xFF) {
          dist[y] = static_cast<std::uint8_t>(level + 1);
          next.push_back(y);
        }
      }
    if (next.empty()) break;
    frontier.swap(next);
    ++level;
  }
  // Lexicographically least word at the last level (bit 0 is the first symbol).
  auto key = [&](std::uint32_t x) {
    std::uint32_t k = 0;
    for (std::size_t i = 0; i < length; ++i) k = (k << 1) | ((x >> i) & 1U);
    return k;
  };
  std::uint32_t best = frontier.front();
  for (auto x : frontier)
    if (key(x) < key(best)) best = x;
  BinaryCoveringResult r;
  r.radius = level;
  r.witness = BinaryVector(length);
  for (std::size_t i = 0; i < length; ++i) r.witness.set(i, static_cast<int>((best >> i) & 1U));
  return r;
}

BinaryCoveringResult gray_image_covering_radius(const GeneratorMatrix& g, const Budget& budget) {
  std::vector<BinaryVector> image;
  enumerate(g, [&](const MixedVector& v) { image.push_back(gray_map(v)); }, budget);
  return binary_covering_radius(image, g.shape().binary_length(), budget);
}

// ---------------------------------------------------------------- bounds

namespace {

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<BigInt> poly_pow(const std::vector<BigInt>& p, std::size_t e) {
  std::vector<BigInt> out{1};
  for (std::size_t i = 0; i < e; ++i) out = poly_mul(out, p);
  return out;
}

std::size_t least_radius(const std::vector<BigInt>& v, const BigInt& code_size, const BigInt& target) {
  BigInt acc = 0;
  for (std::size_t r = 0; r < v.size(); ++r) {
    acc += v[r];
    if (code_size * acc >= target) return r;
  }
  return v.empty() ? 0 : v.size() - 1;
}

}  // namespace

std::vector<BigInt> ball_volumes(Shape s, Metric m) {
  std::vector<BigInt> q;
  switch (m) {
    case Metric::hamming:
      q = {1, 3};
      break;
    case Metric::lee:
      q = {1, 2, 1};
      break;
    case Metric::euclidean:
      q = {1, 2, 0, 0, 1};
      break;
  }
  return poly_mul(poly_pow({1, 1}, s.gamma), poly_pow(q, s.delta));
}

std::size_t sphere_covering_bound(Shape s, const BigInt& code_size, Metric m) {
  return least_radius(ball_volumes(s, m), code_size, BigInt(1) << (s.gamma + 2 * s.delta));
}

std::size_t printed_sphere_covering_bound(std::size_t n, const BigInt& code_size, Metric m) {
  std::vector<BigInt> v;
  if (m == Metric::euclidean) {
    v = poly_pow({1, 3, 2, 0, 1, 1}, n);
  } else {
    v = poly_pow({1, 1}, 2 * n);
  }
  return least_radius(v, code_size, BigInt(1) << (2 * n));
}

DelsarteReport delsarte_bound(const GeneratorMatrix& g, const Budget& budget) {
  const Shape s = g.shape();
  const std::size_t bits = s.gamma + 2 * s.delta;
  const std::size_t dual_log2 = bits - code_log2(g);
  if (dual_log2 > budget.coset_log2)
    throw ResourceError("delsarte: dual has 2^" + std::to_string(dual_log2) + " codewords, limit " +
                        limit_text(budget.coset_log2));
  DelsarteReport r;
  WeightDistribution d;
  if (fits_packed(s) && bits <= budget.ambient_log2) {
    const KernelDual k = kernel_dual(g, budget);
    d = weight_distribution(k.space, k.elements, Metric::lee);
    r.dual_source = "kernel";
  } else {
    const DualDerivation dd = derive_dual(g, budget);
    Budget b = budget;
    b.code_log2 = budget.coset_log2;
    d = weight_distribution(dd.generators, Metric::lee, b);
    r.dual_source = dd.source;
  }
  r.s = d.nonzero_weights();
  r.dual_size = d.total();
  return r;
}

BoundReport bound_report(const GeneratorMatrix& g, const Budget& budget) {
  const Shape s = g.shape();
  const BigInt size = BigInt(1) << code_log2(g);
  BoundReport b;
  b.sphere_lee = sphere_covering_bound(s, size, Metric::lee);
  b.sphere_euclidean = sphere_covering_bound(s, size, Metric::euclidean);
  if (s.gamma == s.delta) {
    b.printed_sphere_lee = printed_sphere_covering_bound(s.gamma, size, Metric::lee);
    b.printed_sphere_euclidean = printed_sphere_covering_bound(s.gamma, size, Metric::euclidean);
  }
  try {
    b.delsarte = delsarte_bound(g, budget);
  } catch (const ResourceError& e) {
    b.delsarte_note = e.what();
  }
  return b;
}

bool sandwich_check(std::size_t r_lee, std::size_t r_euclidean) {
  return r_lee <= r_euclidean && r_euclidean <= 3 * r_lee;
}

GeneratorMatrix mattson_combine(const GeneratorMatrix& g0, const GeneratorMatrix& g1, const GeneratorMatrix& a) {
  if (a.size() != g0.size()) throw DimensionError("mattson: A needs one row per row of G0");
  if (a.shape() != g1.shape()) throw DimensionError("mattson: A must have the shape of G1");
  const Shape s{g0.gamma() + g1.gamma(), g0.delta() + g1.delta()};
  GeneratorMatrix g(s);
  const MixedVector zero0(g0.shape());
  for (const auto& r : g1.rows()) g.add_row(concat(zero0, r));
  for (std::size_t i = 0; i < g0.size(); ++i) g.add_row(concat(g0.rows()[i], a.rows()[i]));
  return g;
}

MattsonReport mattson_bound(const GeneratorMatrix& g0, const GeneratorMatrix& g1, const GeneratorMatrix& combined,
                            Metric m, const Budget& budget) {
  MattsonReport r;
  r.r0 = covering_radius(g0, m, Engine::automatic, budget).radius;
  r.r1 = covering_radius(g1, m, Engine::automatic, budget).radius;
  r.combined = covering_radius(combined, m, Engine::automatic, budget).radius;
  r.holds = r.combined <= r.r0 + r.r1;
  return r;
}

// ---------------------------------------------------------------- JSON

nlohmann::ordered_json to_json(const CoveringResult& r) {
  nlohmann::ordered_json j;
  j["metric"] = std::string(to_string(r.metric));
  j["radius"] = r.radius;
  j["witness"] = r.witness.to_string();
  j["engine"] = r.engine;
  if (!r.leader_weights.empty()) {
    nlohmann::ordered_json lw = nlohmann::ordered_json::object();
    for (const auto& [w, c] : r.leader_weights) lw[std::to_string(w)] = c;
    j["leader_weights"] = lw;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::ordered_json to_json(const BoundReport& b) {
  nlohmann::ordered_json j;
  j["sphere_lower"] = {{"lee", b.sphere_lee}, {"euclidean", b.sphere_euclidean}};
  if (b.printed_sphere_lee)
    j["sphere_lower_printed"] = {{"lee", *b.printed_sphere_lee}, {"euclidean", *b.printed_sphere_euclidean}};
  if (b.delsarte) {
    j["delsarte_s"] = b.delsarte->s;
    j["delsarte_upper"] = {{"lee", b.delsarte->s}, {"euclidean", 3 * b.delsarte->s}};
    j["dual_size"] = b.delsarte->dual_size;
    j["dual_source"] = b.delsarte->dual_source;
  } else {
    j["delsarte_s"] = nullptr;
    j["delsarte_note"] = b.delsarte_note;
  }
  return j;
}

}  // namespace z2z4
