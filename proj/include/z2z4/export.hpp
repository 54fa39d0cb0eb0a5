// SPDX-License-Identifier: Apache-2.0

#ifndef Z2Z4_EXPORT_HPP
#define Z2Z4_EXPORT_HPP

#include <string>
#include <string_view>

#include "json.hpp"

namespace z2z4 {

enum class ExportFormat { json, csv };

// Throws ParseError for anything but "json" or "csv".
ExportFormat parse_export_format(std::string_view s);

// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_field(std::string_view s);

// Serializes a result document (code type, weight distribution, covering
// result, bound report or audit report). CSV layouts:
//   {metric, counts}        metric,weight,count per weight
//   array of objects        header from the first object, one row per element
//   any other object        key,value per member
// Nested values become compact JSON inside one field, so nothing is lost.
// An empty array is "[]" as JSON and an empty file as CSV.
std::string export_document(const nlohmann::ordered_json& doc, ExportFormat f);

}  // namespace z2z4

#endif  // Z2Z4_EXPORT_HPP
