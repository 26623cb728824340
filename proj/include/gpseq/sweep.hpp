#pragma once

// Grid sweeps over (l, a, m): the largest non-log-concave m per (l, a) cell,
// unimodality and peak-window findings for every sequence visited, and the
// two column/threshold observations derived from the grid.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace gpseq {

struct IntRange {
  std::uint32_t lo = 1;
  std::uint32_t hi = 1;
  bool operator==(const IntRange&) const = default;
};

struct SweepGrid {
  IntRange l_range{1, 20};
  IntRange a_range{1, 10};
  std::uint64_t m_max = 100;

  /// Throws std::invalid_argument for empty ranges, l < 1, a < 1 or m_max < 1.
  void validate() const;
  bool operator==(const SweepGrid&) const = default;
};

struct CellKey {
  std::uint32_t l = 0;
  std::uint32_t a = 0;
  auto operator<=>(const CellKey&) const = default;
};

/// One sequence whose peak is not unique or leaves the conjectured window.
struct WindowFinding {
  std::uint32_t l = 0;
  std::uint32_t a = 0;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> peak_set;
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  bool known_exception = false;
  bool operator==(const WindowFinding&) const = default;
};

struct CellResult {
  CellKey key;
  std::uint64_t m_max = 0;
  std::optional<std::uint64_t> largest_non_log_concave;
  std::vector<std::uint64_t> failing_m;      // ascending
  std::vector<std::uint64_t> non_unimodal_m; // ascending; empty when the conjecture holds
  std::vector<WindowFinding> window_misses;
  bool operator==(const CellResult&) const = default;
};

struct ColumnVerdict {
  std::uint32_t a = 0;
  bool monotone = true;
  std::vector<std::uint32_t> violations;  // l values whose entry is below the previous row
  bool operator==(const ColumnVerdict&) const = default;
};

struct ThresholdVerdict {
  std::uint32_t a = 0;
  std::uint64_t m = 0;
  std::uint32_t threshold = 0;  // smallest failing l
  bool persistent = true;
  std::vector<std::uint32_t> gaps;  // l >= threshold that are log-concave after all
  bool operator==(const ThresholdVerdict&) const = default;
};

struct SweepReport {
  SweepGrid grid;
  std::map<CellKey, CellResult> cells;
  std::vector<ColumnVerdict> columns;
  std::vector<ThresholdVerdict> thresholds;  // one per (a, m) that has a threshold
  bool unimodality_all = true;
  std::vector<WindowFinding> window_violations;  // excludes known l = 1 exceptions
  std::vector<WindowFinding> exception_misses;   // known l = 1 exceptions that miss

  /// Cell value with absent mapped to the 0 sentinel.
  std::uint64_t cell_value(std::uint32_t l, std::uint32_t a) const;
  bool columns_monotone() const;
  bool thresholds_persistent() const;
  bool operator==(const SweepReport&) const = default;
};

struct SweepOptions {
  unsigned threads = 1;
  /// When set, each finished cell is written there and reused on later runs.
  std::optional<std::filesystem::path> shard_dir;
};

/// Evaluates one (l, a) cell for m = 1..m_max.
CellResult compute_cell(std::uint32_t l, std::uint32_t a, std::uint64_t m_max);

/// Runs every cell, then derives the observation verdicts. The result does
/// not depend on thread count or evaluation order.
SweepReport run_table2(const SweepGrid& grid, const SweepOptions& options = {});

/// Rebuilds the derived fields (columns, thresholds, findings) from cells.
void finalize_report(SweepReport& report);

/// Positions l = first_l, first_l + 1, ... whose value is below the previous one.
std::vector<std::uint32_t> column_violations(std::span<const std::uint64_t> column, std::uint32_t first_l);

std::vector<ColumnVerdict> check_column_monotonicity(const SweepReport& report);

/// Thresholds computed from the cells already in the report.
std::vector<ThresholdVerdict> check_l_thresholds(const SweepReport& report);

struct ThresholdResult {
  std::optional<std::uint32_t> threshold;
  bool persistent = true;
  std::vector<std::uint32_t> gaps;
};

/// Standalone: smallest L <= l_max with a non-log-concave sequence for (m, l, a),
/// and whether every l in [L, l_max] is non-log-concave too.
ThresholdResult check_l_threshold(std::uint32_t a, std::uint64_t m, std::uint32_t l_max);

/// Default worker count: GPSEQ_THREADS if set, else 1.
unsigned default_thread_count();

}  // namespace gpseq
