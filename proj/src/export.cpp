// SPDX-License-Identifier: Apache-2.0

#include "z2z4/export.hpp"

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

using json = nlohmann::ordered_json;

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return {};
  return v.dump();
}

std::string row(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) out += (out.empty() ? "" : ",") + csv_field(f);
  return out + "\n";
}

}  // namespace

ExportFormat parse_export_format(std::string_view s) {
  if (s == "json") return ExportFormat::json;
  if (s == "csv") return ExportFormat::csv;
  throw ParseError("unknown export format '" + std::string(s) + "' (json or csv)");
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string export_document(const nlohmann::ordered_json& doc, ExportFormat f) {
  if (f == ExportFormat::json) return doc.dump(2) + "\n";

  std::string out;
  if (doc.is_object() && doc.size() == 2 && doc.contains("metric") && doc.contains("counts")) {
    out += row({"metric", "weight", "count"});
    for (const auto& [w, c] : doc["counts"].items()) out += row({scalar(doc["metric"]), w, scalar(c)});
  } else if (doc.is_array()) {
    if (doc.empty()) return out;
    if (!doc.front().is_object()) throw ParseError("CSV export: array elements must be objects");
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.front().items()) keys.push_back(k);
    std::string header;
    for (const auto& k : keys) header += (header.empty() ? "" : ",") + csv_field(k);
    out += header + "\n";
    for (const auto& e : doc) {
      if (!e.is_object()) throw ParseError("CSV export: array elements must be objects");
      std::string line;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto it = e.find(keys[i]);
        line += (i ? "," : "") + csv_field(it == e.end() ? std::string() : scalar(*it));
      }
      out += line + "\n";
    }
  } else if (doc.is_object()) {
    out += row({"key", "value"});
    for (const auto& [k, v] : doc.items()) out += row({k, scalar(v)});
  } else {
    throw ParseError("CSV export: expected a JSON object or array");
  }
  return out;
}

}  // namespace z2z4
