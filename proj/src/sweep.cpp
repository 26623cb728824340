#include "gpseq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "gpseq/exact_core.hpp"
#include "gpseq/property_checks.hpp"
#include "gpseq/serialize.hpp"

namespace gpseq {

void SweepGrid::validate() const {
  if (l_range.lo < 1 || l_range.hi < l_range.lo) throw std::invalid_argument("l range must be nonempty with l >= 1");
  if (a_range.lo < 1 || a_range.hi < a_range.lo) throw std::invalid_argument("a range must be nonempty with a >= 1");
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
}

std::uint64_t SweepReport::cell_value(std::uint32_t l, std::uint32_t a) const {
  auto it = cells.find(CellKey{l, a});
  if (it == cells.end() || !it->second.largest_non_log_concave) return 0;
  return *it->second.largest_non_log_concave;
}

bool SweepReport::columns_monotone() const {
  return std::all_of(columns.begin(), columns.end(), [](const ColumnVerdict& c) { return c.monotone; });
}

bool SweepReport::thresholds_persistent() const {
  return std::all_of(thresholds.begin(), thresholds.end(), [](const ThresholdVerdict& t) { return t.persistent; });
}

CellResult compute_cell(std::uint32_t l, std::uint32_t a, std::uint64_t m_max) {
  CellResult cell;
  cell.key = CellKey{l, a};
  cell.m_max = m_max;
  const mpq_class weight(a);
  const DenominatorTable denominators(l, weight, m_max);
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    const SeqParams params(m, l, weight);
    const ExactSequence seq = full_sequence(params, denominators);
    const PropertyReport rep = conjecture_report(seq);
    if (!rep.log_concave) {
      cell.failing_m.push_back(m);
      cell.largest_non_log_concave = m;
    }
    if (!rep.unimodal) cell.non_unimodal_m.push_back(m);
    if (m >= 2 && !(rep.window_hit && rep.unique_max)) {
      WindowFinding f{l, a, m, {}, rep.window_lo, rep.window_hi, rep.known_exception};
      f.peak_set.assign(rep.peak_set.begin(), rep.peak_set.end());
      cell.window_misses.push_back(std::move(f));
    }
  }
  return cell;
}

std::vector<std::uint32_t> column_violations(std::span<const std::uint64_t> column, std::uint32_t first_l) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 1; i < column.size(); ++i) {
    if (column[i] < column[i - 1]) out.push_back(first_l + static_cast<std::uint32_t>(i));
  }
  return out;
}

std::vector<ColumnVerdict> check_column_monotonicity(const SweepReport& report) {
  std::vector<ColumnVerdict> out;
  const auto& g = report.grid;
  for (std::uint32_t a = g.a_range.lo; a <= g.a_range.hi; ++a) {
    std::vector<std::uint64_t> column;
    for (std::uint32_t l = g.l_range.lo; l <= g.l_range.hi; ++l) column.push_back(report.cell_value(l, a));
    ColumnVerdict v{a, true, column_violations(column, g.l_range.lo)};
    v.monotone = v.violations.empty();
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ThresholdVerdict> check_l_thresholds(const SweepReport& report) {
  std::vector<ThresholdVerdict> out;
  const auto& g = report.grid;
  auto fails = [&](std::uint32_t l, std::uint32_t a, std::uint64_t m) {
    auto it = report.cells.find(CellKey{l, a});
    if (it == report.cells.end()) return false;
    const auto& f = it->second.failing_m;
    return std::binary_search(f.begin(), f.end(), m);
  };
  for (std::uint32_t a = g.a_range.lo; a <= g.a_range.hi; ++a) {
    for (std::uint64_t m = 1; m <= g.m_max; ++m) {
      std::optional<std::uint32_t> threshold;
      for (std::uint32_t l = g.l_range.lo; l <= g.l_range.hi && !threshold; ++l) {
        if (fails(l, a, m)) threshold = l;
      }
      if (!threshold) continue;
      ThresholdVerdict v{a, m, *threshold, true, {}};
      for (std::uint32_t l = *threshold; l <= g.l_range.hi; ++l) {
        if (!fails(l, a, m)) v.gaps.push_back(l);
      }
      v.persistent = v.gaps.empty();
      out.push_back(std::move(v));
    }
  }
  return out;
}

void finalize_report(SweepReport& report) {
  report.columns = check_column_monotonicity(report);
  report.thresholds = check_l_thresholds(report);
  report.unimodality_all = true;
  report.window_violations.clear();
  report.exception_misses.clear();
  for (const auto& [key, cell] : report.cells) {
    if (!cell.non_unimodal_m.empty()) report.unimodality_all = false;
    for (const auto& f : cell.window_misses) {
      (f.known_exception ? report.exception_misses : report.window_violations).push_back(f);
    }
  }
}

namespace {

std::filesystem::path shard_path(const std::filesystem::path& dir, CellKey key, std::uint64_t m_max) {
  return dir / ("cell_l" + std::to_string(key.l) + "_a" + std::to_string(key.a) + "_m" + std::to_string(m_max) + ".json");
}

std::optional<CellResult> load_shard(const std::filesystem::path& path, CellKey key, std::uint64_t m_max) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    CellResult cell = cell_from_json(nlohmann::json::parse(in));
    if (cell.key == key && cell.m_max == m_max) return cell;
  } catch (const std::exception&) {
    // Unreadable shard: recompute it.
  }
  return std::nullopt;
}

void store_shard(const std::filesystem::path& path, const CellResult& cell) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write shard " + tmp.string());
    out << to_json(cell).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

SweepReport run_table2(const SweepGrid& grid, const SweepOptions& options) {
  grid.validate();
  std::vector<CellKey> keys;
  for (std::uint32_t l = grid.l_range.lo; l <= grid.l_range.hi; ++l) {
    for (std::uint32_t a = grid.a_range.lo; a <= grid.a_range.hi; ++a) keys.push_back(CellKey{l, a});
  }
  if (options.shard_dir) std::filesystem::create_directories(*options.shard_dir);

  std::vector<std::optional<CellResult>> results(keys.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      const CellKey key = keys[i];
      if (options.shard_dir) {
        const auto path = shard_path(*options.shard_dir, key, grid.m_max);
        if (auto cached = load_shard(path, key, grid.m_max)) {
          results[i] = std::move(*cached);
          continue;
        }
        results[i] = compute_cell(key.l, key.a, grid.m_max);
        store_shard(path, *results[i]);
      } else {
        results[i] = compute_cell(key.l, key.a, grid.m_max);
      }
    }
  };
  auto worker = [&] {
    try {
      work();
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = keys.size();
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.grid = grid;
  for (auto& r : results) report.cells.emplace(r->key, std::move(*r));
  finalize_report(report);
  return report;
}

ThresholdResult check_l_threshold(std::uint32_t a, std::uint64_t m, std::uint32_t l_max) {
  if (a < 1 || m < 1 || l_max < 1) throw std::invalid_argument("a, m and l_max must be at least 1");
  ThresholdResult out;
  const mpq_class weight(a);
  for (std::uint32_t l = 1; l <= l_max; ++l) {
    const bool lc = check_log_concave(full_sequence(SeqParams(m, l, weight))).log_concave;
    if (!out.threshold) {
      if (!lc) out.threshold = l;
    } else if (lc) {
      out.gaps.push_back(l);
    }
  }
  out.persistent = out.gaps.empty();
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("GPSEQ_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace gpseq
