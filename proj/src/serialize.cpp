#include "gpseq/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gpseq/rational.hpp"

namespace gpseq {

using nlohmann::json;

namespace {

json optional_index(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json to_json(const WindowFinding& f) {
  return {{"l", f.l}, {"a", f.a}, {"m", f.m}, {"peak_set", f.peak_set},
          {"window_lo", f.window_lo}, {"window_hi", f.window_hi}, {"known_exception", f.known_exception}};
}

WindowFinding finding_from_json(const json& j) {
  WindowFinding f;
  f.l = j.at("l").get<std::uint32_t>();
  f.a = j.at("a").get<std::uint32_t>();
  f.m = j.at("m").get<std::uint64_t>();
  f.peak_set = j.at("peak_set").get<std::vector<std::uint64_t>>();
  f.window_lo = j.at("window_lo").get<std::int64_t>();
  f.window_hi = j.at("window_hi").get<std::int64_t>();
  f.known_exception = j.at("known_exception").get<bool>();
  return f;
}

std::vector<WindowFinding> findings_from_json(const json& j) {
  std::vector<WindowFinding> out;
  for (const auto& f : j) out.push_back(finding_from_json(f));
  return out;
}

json findings_to_json(const std::vector<WindowFinding>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(to_json(f));
  return out;
}

}  // namespace

json to_json(const SeqParams& params) {
  return {{"m", params.m()}, {"l", params.l()}, {"a", to_fraction_string(params.a())}};
}

json to_json(const ExactSequence& seq) {
  json entries = json::array();
  for (const auto& e : seq.entries) entries.push_back(to_fraction_string(e));
  return {{"params", to_json(seq.params)}, {"entries", entries}};
}

json to_json(const PropertyReport& r) {
  return {{"m", r.params.m()},
          {"l", r.params.l()},
          {"a", to_fraction_string(r.params.a())},
          {"unimodal", r.unimodal},
          {"plateau_lo", r.plateau_lo},
          {"plateau_hi", r.plateau_hi},
          {"log_concave", r.log_concave},
          {"strictly_log_concave", r.strictly_log_concave},
          {"first_lc_violation", optional_index(r.first_lc_violation)},
          {"peak_set", r.peak_set},
          {"unique_max", r.unique_max},
          {"conjectured_center", r.conjectured_center},
          {"window_lo", r.window_lo},
          {"window_hi", r.window_hi},
          {"window_hit", r.window_hit},
          {"known_exception", r.known_exception}};
}

json to_json(const Verdict& v) {
  json out{{"name", v.name}, {"passed", v.passed}, {"checked", v.checked}, {"first_failure", nullptr}};
  if (v.first_failure) {
    const auto& f = *v.first_failure;
    out["first_failure"] = {{"n", f.n}, {"j", f.j}, {"expected", f.expected}, {"actual", f.actual}};
  }
  return out;
}

json to_json(const SandwichBounds& b) {
  return {{"m", b.m},
          {"r_m", b.r_m},
          {"lower", to_fraction_string(b.lower)},
          {"g_value", to_fraction_string(b.g_value)},
          {"upper", to_fraction_string(b.upper)}};
}

std::string format_ratio(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

json to_json(const RatioResult& r) {
  return {{"m", r.m}, {"peak", r.peak}, {"ratio", format_ratio(r.ratio)}, {"error_bound", r.error},
          {"log_g", r.log_g}, {"log_g_error", r.log_g_error}};
}

json to_json(const CellResult& c) {
  return {{"l", c.key.l},
          {"a", c.key.a},
          {"m_max", c.m_max},
          {"largest_non_log_concave", c.largest_non_log_concave ? json(*c.largest_non_log_concave) : json(nullptr)},
          {"failing_m", c.failing_m},
          {"non_unimodal_m", c.non_unimodal_m},
          {"window_misses", findings_to_json(c.window_misses)}};
}

CellResult cell_from_json(const json& j) {
  CellResult c;
  c.key = CellKey{j.at("l").get<std::uint32_t>(), j.at("a").get<std::uint32_t>()};
  c.m_max = j.at("m_max").get<std::uint64_t>();
  if (const auto& v = j.at("largest_non_log_concave"); !v.is_null()) c.largest_non_log_concave = v.get<std::uint64_t>();
  c.failing_m = j.at("failing_m").get<std::vector<std::uint64_t>>();
  c.non_unimodal_m = j.at("non_unimodal_m").get<std::vector<std::uint64_t>>();
  c.window_misses = findings_from_json(j.at("window_misses"));
  return c;
}

json to_json(const SweepReport& r) {
  json cells = json::array();
  for (const auto& [key, cell] : r.cells) cells.push_back(to_json(cell));
  json columns = json::array();
  for (const auto& c : r.columns) columns.push_back({{"a", c.a}, {"monotone", c.monotone}, {"violations", c.violations}});
  json thresholds = json::array();
  for (const auto& t : r.thresholds) {
    thresholds.push_back({{"a", t.a}, {"m", t.m}, {"threshold", t.threshold}, {"persistent", t.persistent}, {"gaps", t.gaps}});
  }
  return {{"grid",
           {{"l_min", r.grid.l_range.lo},
            {"l_max", r.grid.l_range.hi},
            {"a_min", r.grid.a_range.lo},
            {"a_max", r.grid.a_range.hi},
            {"m_max", r.grid.m_max}}},
          {"cells", cells},
          {"column_monotone", columns},
          {"l_threshold_persistent", thresholds},
          {"unimodality_all", r.unimodality_all},
          {"window_violations", findings_to_json(r.window_violations)},
          {"exception_misses", findings_to_json(r.exception_misses)}};
}

SweepReport report_from_json(const json& j) {
  SweepReport r;
  const auto& g = j.at("grid");
  r.grid.l_range = {g.at("l_min").get<std::uint32_t>(), g.at("l_max").get<std::uint32_t>()};
  r.grid.a_range = {g.at("a_min").get<std::uint32_t>(), g.at("a_max").get<std::uint32_t>()};
  r.grid.m_max = g.at("m_max").get<std::uint64_t>();
  for (const auto& c : j.at("cells")) {
    CellResult cell = cell_from_json(c);
    r.cells.emplace(cell.key, std::move(cell));
  }
  for (const auto& c : j.at("column_monotone")) {
    r.columns.push_back({c.at("a").get<std::uint32_t>(), c.at("monotone").get<bool>(),
                         c.at("violations").get<std::vector<std::uint32_t>>()});
  }
  for (const auto& t : j.at("l_threshold_persistent")) {
    r.thresholds.push_back({t.at("a").get<std::uint32_t>(), t.at("m").get<std::uint64_t>(),
                            t.at("threshold").get<std::uint32_t>(), t.at("persistent").get<bool>(),
                            t.at("gaps").get<std::vector<std::uint32_t>>()});
  }
  r.unimodality_all = j.at("unimodality_all").get<bool>();
  r.window_violations = findings_from_json(j.at("window_violations"));
  r.exception_misses = findings_from_json(j.at("exception_misses"));
  return r;
}

std::string table_csv(const SweepReport& report) {
  const auto& g = report.grid;
  std::ostringstream out;
  out << "l\\a";
  for (std::uint32_t a = g.a_range.lo; a <= g.a_range.hi; ++a) out << ',' << a;
  out << '\n';
  if (report.cells.empty()) return out.str();
  for (std::uint32_t l = g.l_range.lo; l <= g.l_range.hi; ++l) {
    out << l;
    for (std::uint32_t a = g.a_range.lo; a <= g.a_range.hi; ++a) out << ',' << report.cell_value(l, a);
    out << '\n';
  }
  return out.str();
}

std::map<CellKey, std::uint64_t> parse_table_csv(std::string_view text) {
  auto split = [](const std::string& line) {
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
  };
  auto number = [](const std::string& cell) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || end != cell.data() + cell.size()) throw std::invalid_argument("bad CSV number \"" + cell + "\"");
    return v;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  auto header = split(line);
  if (header.empty() || header[0] != "l\\a") throw std::invalid_argument("CSV header must start with l\\a");
  std::vector<std::uint32_t> as;
  for (std::size_t i = 1; i < header.size(); ++i) as.push_back(static_cast<std::uint32_t>(number(header[i])));

  std::map<CellKey, std::uint64_t> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto row = split(line);
    if (row.size() != as.size() + 1) throw std::invalid_argument("CSV row has wrong width: " + line);
    const auto l = static_cast<std::uint32_t>(number(row[0]));
    for (std::size_t i = 0; i < as.size(); ++i) out[CellKey{l, as[i]}] = number(row[i + 1]);
  }
  return out;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "csv") return ExportFormat::csv;
  if (name == "json") return ExportFormat::json;
  throw std::invalid_argument("unknown format \"" + std::string(name) + "\" (expected csv or json)");
}

void export_report(const SweepReport& report, ExportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  if (format == ExportFormat::csv) {
    out << table_csv(report);
  } else {
    out << to_json(report).dump(2) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

SweepReport import_report_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return report_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

std::map<CellKey, std::uint64_t> import_table_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table_csv(buf.str());
}

}  // namespace gpseq
