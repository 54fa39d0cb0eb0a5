// SPDX-License-Identifier: Apache-2.0
//
// z2z4: constructions, covering radii, bounds and the claim audit from the command line.
// Exit status: 0 ok, 1 usage or input error, 2 budget exceeded, 3 engine disagreement.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/export.hpp"
#include "z2z4/verify.hpp"

using namespace z2z4;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  int threads = 0;
  unsigned budget = 0;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::string out = "-";
  bool timings = false;
};

void emit(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << data;
  if (!f.flush()) throw Error("cannot write '" + path + "'");
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

GeneratorMatrix load_matrix(const std::string& path) { return parse_matrix(slurp(path)); }

json load_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "' is not JSON: " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z2Z4-additive codes: constructions, covering radii, bounds and claim audits"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (default: all cores)")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Ambient and enumeration limit as log2 (default 24; refused above 28)");
  app.add_option_function<std::uint64_t>(
      "--seed",
      [&](const std::uint64_t& s) {
        g.seed = s;
        g.seed_given = true;
      },
      "Seed for randomized audit trials");
  app.add_option("--out", g.out, "Output path, - for stdout")->capture_default_str();
  app.add_flag("--timings", g.timings, "Record elapsed times (output is no longer byte-stable)");

  // constructions
  std::string ring = "mixed", variant = "alpha", blocks, span = "generator", part = "full";
  std::size_t k = 1, u = 1, n = 1, m = 3;
  std::optional<std::size_t> r;
  int index = 1;
  bool force = false;

  auto* simplex = app.add_subcommand("simplex", "Simplex generator matrix");
  simplex->add_option("--ring", ring, "mixed, z2 or z4")->check(CLI::IsMember({"mixed", "z2", "z4"}))->capture_default_str();
  simplex->add_option("--variant", variant, "alpha or beta")->check(CLI::IsMember({"alpha", "beta"}))->capture_default_str();
  simplex->add_option("-k", k, "Dimension parameter")->required()->check(CLI::PositiveNumber);
  simplex->add_flag("--force", force, "Allow the mixed beta code below k = 3");

  auto* macdonald = app.add_subcommand("macdonald", "MacDonald generator matrix");
  macdonald->add_option("--variant", variant, "alpha or beta")->check(CLI::IsMember({"alpha", "beta"}))->capture_default_str();
  macdonald->add_option("-k", k, "Dimension parameter")->required()->check(CLI::PositiveNumber);
  macdonald->add_option("-u", u, "Deleted simplex dimension, 1 <= u < k")->required()->check(CLI::PositiveNumber);
  macdonald->add_option("--part", part, "full, binary or quaternary")
      ->check(CLI::IsMember({"full", "binary", "quaternary"}))
      ->capture_default_str();

  auto* repetition = app.add_subcommand("repetition", "Repetition code C_ai");
  repetition->add_option("-i", index, "Which of the seven codes")->required()->check(CLI::Range(1, 7));
  repetition->add_option("-n", n, "Number of coordinate pairs")->required()->check(CLI::PositiveNumber);

  auto* block_rep = app.add_subcommand("block-rep", "Block repetition code");
  block_rep->add_option("--blocks", blocks, "Seven comma-separated block sizes n1,...,n7")->required();
  block_rep->add_option("--span", span, "generator or paper-listed")
      ->check(CLI::IsMember({"generator", "paper-listed"}))
      ->capture_default_str();

  auto* arm = app.add_subcommand("arm", "Additive Reed-Muller generator matrix");
  arm->add_option("-m", m, "Length parameter")->required()->check(CLI::PositiveNumber);
  arm->add_option("-r", r, "Order; omitted gives the displayed first-order matrix");

  // analysis
  std::string matrix = "-", metric = "lee", engine = "both", weights;
  bool of_dual = false;

  auto* info = app.add_subcommand("info", "Type, size and standard form of a code");
  info->add_option("--matrix", matrix, "Matrix file, - for stdin")->required();
  info->add_option("--weights", weights, "Also give the weight distribution under this metric")
      ->check(CLI::IsMember({"hamming", "lee", "euclidean"}));

  auto* gray = app.add_subcommand("gray", "Gray image of the generator rows, as a binary matrix");
  gray->add_option("--matrix", matrix, "Matrix file, - for stdin")->required();

  auto* covering = app.add_subcommand("covering-radius", "Exact covering radius");
  covering->add_option("--matrix", matrix, "Matrix file, - for stdin")->required();
  covering->add_option("--metric", metric, "hamming, lee or euclidean")
      ->check(CLI::IsMember({"hamming", "lee", "euclidean"}))
      ->capture_default_str();
  covering->add_option("--engine", engine, "exhaustive, coset, both or auto")
      ->check(CLI::IsMember({"exhaustive", "coset", "both", "auto"}))
      ->capture_default_str();
  covering->add_flag("--dual", of_dual, "Radius of the dual code, by the dual engine");

  auto* bounds = app.add_subcommand("bounds", "Sphere-covering and Delsarte bounds");
  bounds->add_option("--matrix", matrix, "Matrix file, - for stdin")->required();

  // audit and export
  std::string grid = "default", table;
  std::vector<std::string> claims;
  bool list = false;
  auto* audit_cmd = app.add_subcommand("audit", "Audit the printed claims against computed values");
  audit_cmd->add_option("--grid", grid, "default or a JSON grid file")->capture_default_str();
  audit_cmd->add_option("--table", table, "Also write a readable table here, - for stdout");
  audit_cmd->add_option("--claim", claims, "Only these claim ids (repeatable)");
  audit_cmd->add_flag("--list", list, "List the claim catalog instead of auditing");

  std::string input = "-", format = "json", field;
  auto* export_cmd = app.add_subcommand("export", "Re-serialize a JSON result as JSON or CSV");
  export_cmd->add_option("--input", input, "JSON result file, - for stdin")->capture_default_str();
  export_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  export_cmd->add_option("--field", field, "Export only this member of the document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Budget budget;
    if (app.count("--budget")) budget = Budget::with_limit(g.budget);
    if (g.threads > 0) omp_set_num_threads(g.threads);

    auto construct = [&](const Params& p) { emit(g.out, format_matrix(build_instance(p, budget))); };

    if (*simplex) {
      if (ring == "mixed" && force) {
        emit(g.out, format_matrix(mixed_simplex({k, parse_variant(variant), true}, budget)));
      } else {
        construct({{"family", "simplex"}, {"ring", ring}, {"variant", variant}, {"k", k}});
      }
    } else if (*macdonald) {
      const MacDonaldParams p{k, u, parse_variant(variant)};
      if (part == "full") {
        emit(g.out, format_matrix(macdonald_matrix(p, budget)));
      } else {
        const auto c = macdonald_components(p, budget);
        const auto& half = part == "binary" ? c.binary : c.quaternary;
        const IntMatrix none(half.rows(), 0);
        emit(g.out, format_matrix(part == "binary" ? tile(half, 1, none, 0) : tile(none, 0, half, 1)));
      }
    } else if (*repetition) {
      construct({{"family", "repetition"}, {"i", index}, {"n", n}});
    } else if (*block_rep) {
      construct({{"family", "block-rep"}, {"blocks", blocks}, {"span", span}});
    } else if (*arm) {
      if (r) {
        construct({{"family", "arm"}, {"form", "recursive"}, {"r", *r}, {"m", m}});
      } else {
        construct({{"family", "arm"}, {"form", "displayed"}, {"m", m}});
      }
    } else if (*info) {
      const auto code = load_matrix(matrix);
      const auto sf = standard_form(code);
      json j;
      j["shape"] = {{"gamma", code.gamma()}, {"delta", code.delta()}};
      j["type"] = to_json(sf.type);
      j["log2_size"] = sf.type.log2_size();
      j["generators"] = code.size();
      j["column_permutation"] = sf.column_permutation;
      if (!weights.empty()) j["weight_distribution"] = to_json(weight_distribution(code, parse_metric(weights), budget));
      emit(g.out, dump(j));
    } else if (*gray) {
      const auto code = load_matrix(matrix);
      const Shape image{code.shape().binary_length(), 0};
      GeneratorMatrix out(image);
      for (const auto& row : code.rows()) {
        const auto bits = gray_map(row);
        std::vector<int> digits(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) digits[i] = bits[i];
        out.add_row(MixedVector::from_digits(digits, {}));
      }
      emit(g.out, format_matrix(out));
    } else if (*covering) {
      const auto code = load_matrix(matrix);
      const Metric mt = parse_metric(metric);
      auto res = of_dual ? dual_covering_radius(code, mt, budget) : covering_radius(code, mt, parse_engine(engine), budget);
      if (!g.timings) res.elapsed_ms = 0;
      emit(g.out, dump(to_json(res)));
    } else if (*bounds) {
      emit(g.out, dump(to_json(bound_report(load_matrix(matrix), budget))));
    } else if (*audit_cmd) {
      if (list) {
        json j = json::array();
        for (const auto& c : register_claims()) {
          j.push_back({{"id", c.id},
                       {"family", c.family},
                       {"kind", std::string(to_string(c.kind))},
                       {"metric", c.metric ? json(std::string(to_string(*c.metric))) : json(nullptr)},
                       {"formula", c.formula},
                       {"source", c.source}});
        }
        emit(g.out, dump(j));
        return 0;
      }
      Grid gr = grid == "default" ? Grid{} : read_grid(grid);
      if (g.seed_given) gr.seed = g.seed;
      SuiteOptions opt;
      opt.budget = budget;
      opt.timings = g.timings;
      opt.only = claims;
      const auto report = run_suite(gr, opt);
      emit(g.out, dump(to_json(report)));
      if (!table.empty()) emit(table, format_table(report));
      for (const auto& d : report.disagreements) std::cerr << "engine disagreement: " << d << "\n";
      if (!report.disagreements.empty()) return 3;
    } else if (*export_cmd) {
      json doc = load_json(input);
      if (!field.empty()) {
        if (!doc.is_object() || !doc.contains(field)) throw ParseError("no member '" + field + "' in '" + input + "'");
        json sub = doc[field];
        doc = std::move(sub);
      }
      emit(g.out, export_document(doc, parse_export_format(format)));
    }
  } catch (const EngineDisagreement& e) {
    std::cerr << "z2z4: engine disagreement: " << e.what() << "\n";
    return 3;
  } catch (const ResourceError& e) {
    std::cerr << "z2z4: budget: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "z2z4: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
