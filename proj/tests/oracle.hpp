// Naive reference implementations on plain digit tuples. Nothing here uses the
// packed planes, the weight tables or the engines of the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "z2z4/alphabet.hpp"
#include "z2z4/codes.hpp"

namespace oracle {

struct Word {
  std::vector<int> b, q;
  auto operator<=>(const Word&) const = default;
};

inline Word from(const z2z4::MixedVector& v) {
  Word w;
  for (std::size_t i = 0; i < v.gamma(); ++i) w.b.push_back(v.binary(i));
  for (std::size_t j = 0; j < v.delta(); ++j) w.q.push_back(v.quaternary(j));
  return w;
}

inline z2z4::MixedVector to_vec(const Word& w) { return z2z4::MixedVector::from_digits(w.b, w.q); }

inline Word plus(const Word& x, const Word& y) {
  Word r = x;
  for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] = (x.b[i] + y.b[i]) % 2;
  for (std::size_t j = 0; j < r.q.size(); ++j) r.q[j] = (x.q[j] + y.q[j]) % 4;
  return r;
}

inline Word minus(const Word& x, const Word& y) {
  Word r = x;
  for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] = (x.b[i] + 2 - y.b[i]) % 2;
  for (std::size_t j = 0; j < r.q.size(); ++j) r.q[j] = (x.q[j] + 4 - y.q[j]) % 4;
  return r;
}

// Weights from the defining formulas: min(q, 4-q), min(q^2, (4-q)^2), [q != 0].
inline int weight(const Word& w, z2z4::Metric m) {
  int s = 0;
  for (int x : w.b) s += x;
  for (int q : w.q) {
    switch (m) {
      case z2z4::Metric::hamming:
        s += q != 0;
        break;
      case z2z4::Metric::lee:
        s += std::min(q, 4 - q);
        break;
      case z2z4::Metric::euclidean:
        s += std::min(q * q, (4 - q) * (4 - q));
        break;
    }
  }
  return s;
}

inline int inner(const Word& x, const Word& y) {
  int s = 0;
  for (std::size_t i = 0; i < x.b.size(); ++i) s += 2 * x.b[i] * y.b[i];
  for (std::size_t j = 0; j < x.q.size(); ++j) s += x.q[j] * y.q[j];
  return ((s % 4) + 4) % 4;
}

// Gray image from the table 0->00, 1->01, 2->11, 3->10.
inline std::vector<int> gray(const Word& w) {
  static const int t[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  std::vector<int> out = w.b;
  for (int q : w.q) {
    out.push_back(t[q][0]);
    out.push_back(t[q][1]);
  }
  return out;
}

inline std::vector<Word> ambient(std::size_t gamma, std::size_t delta) {
  std::vector<Word> out;
  Word w{std::vector<int>(gamma, 0), std::vector<int>(delta, 0)};
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    for (; i < gamma + delta; ++i) {
      int& d = i < gamma ? w.b[i] : w.q[i - gamma];
      const int base = i < gamma ? 2 : 4;
      if (++d < base) break;
      d = 0;
    }
    if (i == gamma + delta) break;
  }
  return out;
}

// Additive closure of the rows (breadth-first).
inline std::set<Word> closure(const z2z4::GeneratorMatrix& g) {
  std::vector<Word> gens;
  for (const auto& r : g.rows()) gens.push_back(from(r));
  Word zero{std::vector<int>(g.gamma(), 0), std::vector<int>(g.delta(), 0)};
  std::set<Word> seen{zero};
  std::vector<Word> todo{zero};
  while (!todo.empty()) {
    Word x = todo.back();
    todo.pop_back();
    for (const auto& y : gens) {
      Word z = plus(x, y);
      if (seen.insert(z).second) todo.push_back(z);
    }
  }
  return seen;
}

inline std::set<Word> dual(const z2z4::GeneratorMatrix& g) {
  std::vector<Word> gens;
  for (const auto& r : g.rows()) gens.push_back(from(r));
  std::set<Word> out;
  for (const auto& x : ambient(g.gamma(), g.delta())) {
    bool ok = true;
    for (const auto& y : gens) ok = ok && inner(x, y) == 0;
    if (ok) out.insert(x);
  }
  return out;
}

inline int distance_to(const Word& x, const std::set<Word>& code, z2z4::Metric m) {
  int best = 1 << 30;
  for (const auto& c : code) best = std::min(best, weight(minus(x, c), m));
  return best;
}

inline int radius(const z2z4::GeneratorMatrix& g, z2z4::Metric m) {
  const auto code = closure(g);
  int r = 0;
  for (const auto& x : ambient(g.gamma(), g.delta())) r = std::max(r, distance_to(x, code, m));
  return r;
}

inline z2z4::GeneratorMatrix matrix(z2z4::Shape s, const std::set<Word>& words) {
  z2z4::GeneratorMatrix g(s);
  for (const auto& w : words) g.add_row(to_vec(w));
  return g;
}

inline z2z4::MixedVector random_vector(std::mt19937_64& rng, std::size_t gamma, std::size_t delta) {
  Word w;
  for (std::size_t i = 0; i < gamma; ++i) w.b.push_back(static_cast<int>(rng() % 2));
  for (std::size_t j = 0; j < delta; ++j) w.q.push_back(static_cast<int>(rng() % 4));
  return to_vec(w);
}

inline z2z4::GeneratorMatrix random_code(std::mt19937_64& rng, std::size_t gamma, std::size_t delta,
                                         std::size_t rows) {
  z2z4::GeneratorMatrix g(z2z4::Shape{gamma, delta});
  for (std::size_t i = 0; i < rows; ++i) g.add_row(random_vector(rng, gamma, delta));
  return g;
}

}  // namespace oracle
