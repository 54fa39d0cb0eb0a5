// SPDX-License-Identifier: Apache-2.0

#ifndef Z2Z4_COVERING_HPP
#define Z2Z4_COVERING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "z2z4/codes.hpp"

namespace z2z4 {

using BigInt = boost::multiprecision::cpp_int;

enum class Engine { exhaustive, coset, both, automatic };

std::string_view to_string(Engine e);
Engine parse_engine(std::string_view s);

struct CoveringResult {
  Metric metric = Metric::lee;
  std::size_t radius = 0;
  MixedVector witness;  // a deep hole: its distance to the code equals `radius`
  std::string engine;   // "exhaustive", "coset" or "both"
  // Coset engine only: number of cosets per leader weight.
  std::map<std::size_t, std::uint64_t> leader_weights;
  double elapsed_ms = 0;
};

// Literal max over the ambient space of the min distance to a codeword.
// Needs gamma + 2*delta <= budget.ambient_log2 and ambient * |C| within the work slack.
// The witness is the lexicographically least maximizer.
CoveringResult covering_radius_exhaustive(const GeneratorMatrix& g, Metric m, const Budget& budget = {});

// Where the syndrome labels came from.
enum class CheckSource { given, kernel, hashed };

struct CosetOptions {
  // Generators of the dual, if already known (e.g. when the code was built as a dual).
  std::optional<GeneratorMatrix> check;
  // Label cosets by their least packed element even when a dual is available.
  bool hashed = false;
};

// Minimum-weight coset leaders, found breadth-first by weight and bucketed by
// syndrome. Needs at most 2^budget.coset_log2 cosets and at most
// 2^budget.ambient_log2 vectors up to the last level. The witness is the
// lexicographically least vector of the last level lying in a coset whose
// leader has maximal weight.
CoveringResult covering_radius_coset(const GeneratorMatrix& g, Metric m, const Budget& budget = {},
                                     const CosetOptions& options = {});

// Which labelling the coset engine would use (for reporting).
CheckSource coset_check_source(const GeneratorMatrix& g, const Budget& budget, const CosetOptions& options = {});

// Covering radius of the dual of the code generated by g, at any length.
// Cosets of the dual are labelled by inner products with a direct-sum basis of
// the code, and the least weight per label is found by a dynamic program over
// coordinates (one symbol per coordinate, so any weight table is exact).
// Needs |C| <= 2^budget.coset_log2 and (coordinates + 1) * |C| <= 2^budget.ambient_log2.
// The witness is the lexicographically least leader among maximal-weight cosets.
CoveringResult dual_covering_radius(const GeneratorMatrix& g, Metric m, const Budget& budget = {});

// Whether each engine fits the budget, without running it.
bool exhaustive_feasible(const GeneratorMatrix& g, const Budget& budget);
bool coset_feasible(const GeneratorMatrix& g, const Budget& budget);

// `both` runs both engines and throws EngineDisagreement on differing radii.
// `automatic` runs every engine that fits (both if possible); ResourceError if none does.
CoveringResult covering_radius(const GeneratorMatrix& g, Metric m, Engine e = Engine::automatic,
                               const Budget& budget = {}, const CosetOptions& options = {});

// Hamming covering radius of an arbitrary binary code of length <= budget.ambient_log2,
// by multi-source breadth-first search over the hypercube.
struct BinaryCoveringResult {
  std::size_t radius = 0;
  BinaryVector witness;
};
BinaryCoveringResult binary_covering_radius(const std::vector<BinaryVector>& code, std::size_t length,
                                            const Budget& budget = {});

// r(Phi(C)), with Phi(C) built codeword by codeword through gray_map.
BinaryCoveringResult gray_image_covering_radius(const GeneratorMatrix& g, const Budget& budget = {});

// ---------------------------------------------------------------- bounds

// Coefficients V_i of the per-coordinate weight enumerator product:
// (1+x)^gamma times (1+3x)^delta, (1+2x+x^2)^delta or (1+2x+x^4)^delta.
std::vector<BigInt> ball_volumes(Shape s, Metric m);

// Least r with |C| * sum_{i<=r} V_i >= 2^(gamma+2delta).
std::size_t sphere_covering_bound(Shape s, const BigInt& code_size, Metric m);

// The printed form for n pairs: least r with 2^(2n) <= |C| * sum_{i<=r} C(2n,i) (Lee)
// or sum_{i<=r} V_i of (1+3x+2x^2+x^4+x^5)^n (Euclidean).
std::size_t printed_sphere_covering_bound(std::size_t n, const BigInt& code_size, Metric m);

struct DelsarteReport {
  std::size_t s = 0;  // distinct nonzero Lee weights of the dual
  std::uint64_t dual_size = 0;
  std::string dual_source;
};

// Dual by kernel sweep when the ambient fits, otherwise by the parity-check
// construction; the dual must have at most 2^budget.coset_log2 codewords.
DelsarteReport delsarte_bound(const GeneratorMatrix& g, const Budget& budget = {});

struct BoundReport {
  std::size_t sphere_lee = 0;
  std::size_t sphere_euclidean = 0;
  std::optional<std::size_t> printed_sphere_lee;  // only when gamma = delta
  std::optional<std::size_t> printed_sphere_euclidean;
  std::optional<DelsarteReport> delsarte;
  std::string delsarte_note;
};

BoundReport bound_report(const GeneratorMatrix& g, const Budget& budget = {});

// r_L <= r_E <= 3 r_L
bool sandwich_check(std::size_t r_lee, std::size_t r_euclidean);

// Generator of [0 G1 ; G0 A]: block 0 carries G0, block 1 carries G1 and A.
// A needs one row per row of G0, in the shape of G1.
GeneratorMatrix mattson_combine(const GeneratorMatrix& g0, const GeneratorMatrix& g1, const GeneratorMatrix& a);

struct MattsonReport {
  std::size_t r0 = 0, r1 = 0, combined = 0;
  bool holds = false;
};

MattsonReport mattson_bound(const GeneratorMatrix& g0, const GeneratorMatrix& g1, const GeneratorMatrix& combined,
                            Metric m, const Budget& budget = {});

nlohmann::ordered_json to_json(const CoveringResult& r);
nlohmann::ordered_json to_json(const BoundReport& b);

}  // namespace z2z4

#endif  // Z2Z4_COVERING_HPP
