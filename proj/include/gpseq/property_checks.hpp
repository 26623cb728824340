#pragma once

// Exact decisions about the shape of a positive rational sequence:
// unimodality, log-concavity, the argmax set, and membership of the peak in
// the three-index window around floor((am + a + 2) / (2a + 1)).
//
// Every comparison is done by integer cross-multiplication on the unreduced
// numerator/denominator pairs, never by rational division.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gpseq/exact_core.hpp"

namespace gpseq {

/// Sign of n1/d1 - n2/d2 for positive denominators.
int compare_ratios(const mpz_class& n1, const mpz_class& d1, const mpz_class& n2, const mpz_class& d2);

struct UnimodalResult {
  bool unimodal = false;
  // Smallest and largest index attaining the maximum.
  std::size_t plateau_lo = 0;
  std::size_t plateau_hi = 0;
};

struct LogConcavityResult {
  bool log_concave = false;
  std::optional<std::size_t> first_violation;  // smallest i with y_i^2 < y_{i-1} y_{i+1}
  bool strict = false;                         // y_i^2 > y_{i-1} y_{i+1} at every interior i
};

struct PeakResult {
  std::vector<std::size_t> indices;
  bool unique = false;
};

// Views over an arbitrary sequence of positive ratios nums[i] / dens[i].
// Both spans must have the same nonzero length; std::invalid_argument otherwise.
UnimodalResult check_unimodal(std::span<const mpz_class> nums, std::span<const mpz_class> dens);
LogConcavityResult check_log_concave(std::span<const mpz_class> nums, std::span<const mpz_class> dens);
PeakResult peak_indices(std::span<const mpz_class> nums, std::span<const mpz_class> dens);

UnimodalResult check_unimodal(const ExactSequence& seq);
LogConcavityResult check_log_concave(const ExactSequence& seq);
PeakResult peak_indices(const ExactSequence& seq);

/// floor((a m + a + 2) / (2a + 1)), exact.
std::int64_t conjectured_center(std::uint64_t m, const mpq_class& a);

/// For l = 1 the peak is known to leave the center for m in {3, 2a+4, 4a+5},
/// and additionally m = 12 when a = 1.
bool is_known_exception(const SeqParams& params);

struct PropertyReport {
  explicit PropertyReport(SeqParams p) : params(std::move(p)) {}

  SeqParams params;
  bool unimodal = false;
  std::size_t plateau_lo = 0;
  std::size_t plateau_hi = 0;
  bool log_concave = false;
  bool strictly_log_concave = false;
  std::optional<std::size_t> first_lc_violation;
  std::vector<std::size_t> peak_set;
  bool unique_max = false;
  std::int64_t conjectured_center = 0;
  // Window {r*-1, r*, r*+1} clamped to [0, m].
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  bool window_hit = false;
  bool known_exception = false;
};

PropertyReport conjecture_report(const ExactSequence& seq);
PropertyReport conjecture_report(const SeqParams& params);

}  // namespace gpseq
