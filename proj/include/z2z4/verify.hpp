// SPDX-License-Identifier: Apache-2.0

#ifndef Z2Z4_VERIFY_HPP
#define Z2Z4_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"
#include "z2z4/budget.hpp"
#include "z2z4/constructions.hpp"
#include "z2z4/covering.hpp"

namespace z2z4 {

using Rational = boost::rational<std::int64_t>;
using Params = nlohmann::ordered_json;

enum class ClaimKind { equality, upper_bound, lower_bound, structural };
enum class Verdict { match, bound_holds, mismatch, not_computable };

std::string_view to_string(ClaimKind k);
std::string_view to_string(Verdict v);

// A claimed or computed value: a rational number, or text for parameter
// tuples, polynomials and column multisets.
struct Quantity {
  std::optional<Rational> number;
  std::string text;

  static Quantity of(Rational r) { return {r, {}}; }
  static Quantity of(std::string s) { return {std::nullopt, std::move(s)}; }
  friend bool operator==(const Quantity&, const Quantity&) = default;
};

std::string to_string(const Quantity& q);
nlohmann::ordered_json to_json(const Quantity& q);

struct Convention {
  std::string name;
  bool decisive = true;  // informational conventions are reported but never decide the verdict
};

// Parameter grid for run_suite.
struct Grid {
  std::vector<std::size_t> n{1, 2, 3, 4};          // repetition pairs
  std::vector<std::size_t> mixed_k{1, 2};          // mixed simplex, alpha
  std::vector<std::size_t> beta_k{3};              // mixed simplex, beta (needs k >= 3)
  std::vector<std::size_t> component_k{1, 2, 3};   // binary / quaternary simplex components
  std::vector<std::pair<std::size_t, std::size_t>> macdonald{{2, 1}, {3, 1}, {3, 2}};
  std::vector<std::size_t> arm_m{3, 4};
  std::vector<BlockRepetitionSpec> blocks;  // empty: the seven unit specs and all ones
  std::uint64_t seed = 1;
  std::size_t mattson_trials = 6;
};

// Keys as in Grid; "macdonald" is a list of [k, u], "blocks" a list of seven counts.
// Missing keys keep their defaults. Throws ParseError on unknown keys or bad values.
Grid parse_grid(const nlohmann::json& j);
Grid read_grid(const std::string& path);

// Radius cache and budget shared by the audits of one run.
class AuditContext {
 public:
  explicit AuditContext(Budget budget = {}) : budget_(budget) {}

  const Budget& budget() const { return budget_; }

  // Every engine that fits (see covering_radius with Engine::automatic).
  const CoveringResult& radius(const GeneratorMatrix& g, Metric m);
  // Radius of the dual of <g>: the dual engine, cross-checked by the coset
  // engine on the kernel dual when that fits.
  const CoveringResult& dual_radius(const GeneratorMatrix& g, Metric m);
  std::size_t gray_radius(const GeneratorMatrix& g);

 private:
  template <class T, class F>
  const T& cached(std::map<std::string, std::variant<T, std::string>>& cache, const std::string& key, F&& compute);

  Budget budget_;
  std::map<std::string, std::variant<CoveringResult, std::string>> radii_, dual_radii_;
  std::map<std::string, std::variant<std::size_t, std::string>> gray_;
};

// What an engine produced for one grid point.
struct Ground {
  Quantity value;
  std::string engine;
  std::string notes;
  std::optional<bool> holds;  // structural claims decide here
};

struct Claim {
  std::string id;
  std::string source;   // citation with a verbatim quote
  std::string family;
  std::string formula;  // the printed expression, in plain text
  ClaimKind kind = ClaimKind::equality;
  std::optional<Metric> metric;
  std::vector<Convention> conventions;

  std::function<std::vector<Params>(const Grid&)> points;
  // nullopt when the formula is undefined at this point.
  std::function<std::optional<Quantity>(const Params&, const std::string& convention, AuditContext&)> claimed;
  std::function<Ground(const Params&, AuditContext&)> ground;
};

struct AuditEntry {
  std::string claim_id;
  std::string source;
  Params params;
  std::vector<std::pair<std::string, std::optional<Quantity>>> conventions;
  std::optional<Quantity> computed;
  Verdict verdict = Verdict::not_computable;
  std::string engine;
  double elapsed_ms = 0;
  std::string notes;
};

// The full catalog, in a fixed order.
const std::vector<Claim>& register_claims();
// Throws DomainError for unknown ids.
const Claim& find_claim(std::string_view id);

// Never throws on mismatch or budget overrun (those are verdicts). Engine
// disagreements propagate as EngineDisagreement.
AuditEntry audit(const Claim& claim, const Params& params, AuditContext& ctx, bool timings = false);

struct AuditReport {
  std::vector<AuditEntry> entries;  // sorted by claim id, then parameters
  std::vector<std::string> disagreements;
};

struct SuiteOptions {
  Budget budget;
  bool timings = false;  // elapsed_ms stays 0 otherwise, so reports are byte-stable
  std::vector<std::string> only;  // claim ids; empty runs all
};

// Engine disagreements are recorded (entry verdict not_computable, listed in
// `disagreements`) rather than thrown.
AuditReport run_suite(const Grid& grid, const SuiteOptions& options = {});

// Builds the code a grid point names (keys "family" and its parameters).
GeneratorMatrix build_instance(const Params& p, const Budget& budget = {});

nlohmann::ordered_json to_json(const AuditEntry& e);
nlohmann::ordered_json to_json(const AuditReport& r);  // a JSON array
std::string format_table(const AuditReport& r);

}  // namespace z2z4

#endif  // Z2Z4_VERIFY_HPP
