#pragma once

// JSON and CSV forms of the reports. Rationals are written as "N/D" strings,
// ratios as 12-significant-digit decimal strings.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gpseq/asymptotics.hpp"
#include "gpseq/exact_core.hpp"
#include "gpseq/poly_certificates.hpp"
#include "gpseq/property_checks.hpp"
#include "gpseq/sweep.hpp"

namespace gpseq {

nlohmann::json to_json(const SeqParams& params);
nlohmann::json to_json(const ExactSequence& seq);
nlohmann::json to_json(const PropertyReport& report);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const SandwichBounds& bounds);
nlohmann::json to_json(const RatioResult& ratio);
nlohmann::json to_json(const CellResult& cell);
nlohmann::json to_json(const SweepReport& report);

CellResult cell_from_json(const nlohmann::json& j);
SweepReport report_from_json(const nlohmann::json& j);

/// 12 significant digits.
std::string format_ratio(double value);

/// Header "l\a,<a_lo>,...,<a_hi>", then one row per l with absent cells as 0.
/// A report without cells yields the header only.
std::string table_csv(const SweepReport& report);

/// Inverse of table_csv: (l, a) -> value, with the 0 sentinel kept as 0.
std::map<CellKey, std::uint64_t> parse_table_csv(std::string_view text);

enum class ExportFormat { csv, json };

/// Throws std::invalid_argument for anything but "csv" or "json".
ExportFormat parse_export_format(std::string_view name);

/// Throws std::runtime_error naming the path on I/O failure.
void export_report(const SweepReport& report, ExportFormat format, const std::filesystem::path& path);
SweepReport import_report_json(const std::filesystem::path& path);
std::map<CellKey, std::uint64_t> import_table_csv(const std::filesystem::path& path);

}  // namespace gpseq
