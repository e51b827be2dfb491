#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "resint/identities.hpp"
#include "resint/integer.hpp"
#include "resint/limits.hpp"
#include "resint/residual.hpp"

namespace resint::cli {

enum class Format { table, json, csv };

/// "table", "json" or "csv"; throws ValidationError otherwise.
Format parse_format(const std::string& text);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal
/// strings. Both forms are accepted on input.
nlohmann::ordered_json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::ordered_json& value);
nlohmann::ordered_json degree_to_json(const std::optional<Integer>& value);
std::optional<Integer> degree_from_json(const nlohmann::ordered_json& value);

/// Degree for tables: thousands separators, "-" when absent.
std::string degree_cell(const std::optional<Integer>& value);

nlohmann::ordered_json report_to_json(const LimitReport& report);
/// Inverse of report_to_json; throws ParseError on malformed input.
LimitReport report_from_json(const nlohmann::ordered_json& json);

/// Human-readable report. Classes are listed when `show_classes` is set or
/// when some degree is unavailable.
std::string report_table(const LimitReport& report, bool show_classes);
std::string report_csv_header();
std::string report_csv_rows(const LimitReport& report);

nlohmann::ordered_json fano_to_json(const GrassContext& ctx, int d, const GradedPoly& cls,
                            const std::optional<Integer>& degree);

/// Quotes a CSV field when it contains a comma, quote or space.
std::string csv_field(const std::string& text);

}  // namespace resint::cli
