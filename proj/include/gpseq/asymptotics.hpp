#pragma once

// Two-sided exact bounds on the l = 2, a = 1 peak value and log-space ratios
// of exact peak values to their asymptotic normalizers.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

#include "gpseq/exact_core.hpp"

namespace gpseq {

/// Natural log with an absolute error bound.
struct LogValue {
  double value = 0.0;
  double error = 0.0;
};

/// ln(x) for x > 0 via binary exponent + unit-interval mantissa, so the result
/// is finite for any representable x. Values within [1/2, 2] go through
/// log1p of the exact difference x - 1. Relative error stays below 1e-12.
/// Throws std::invalid_argument for x <= 0.
LogValue log_of_rational(const mpq_class& x);
LogValue log_of_integer(const mpz_class& x);

/// Raised when a proven inequality fails on exact values.
class TheoryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// floor((m + 2) / 3).
std::uint64_t peak_index_l2(std::uint64_t m);

struct SandwichBounds {
  std::uint64_t m = 0;
  std::uint64_t r_m = 0;
  mpq_class lower;
  mpq_class g_value;
  mpq_class upper;
};

/// (r+1)/(3r+1) * ((m-r)/(r+1))^2 with r = floor((m+2)/3).
mpq_class lower_prefactor(std::uint64_t m);
/// (4r-2)/(3r-2) with r = floor((m+2)/3).
mpq_class upper_prefactor(std::uint64_t m);

/// Throws TheoryViolation unless lower < g_m(r_m) < upper. Requires m >= 2.
SandwichBounds sandwich_bounds(std::uint64_t m);

struct RatioResult {
  std::uint64_t m = 0;
  std::uint64_t peak = 0;
  double ratio = 0.0;
  double log_g = 0.0;
  double log_g_error = 0.0;
  // Relative error bound on ratio.
  double error = 0.0;
};

/// g_m(r_m) * 2^(2m) sqrt(pi m) / 3^(2m + 1/2). Requires m >= 2.
RatioResult theorem_ratio(std::uint64_t m);

/// Log of the conjectured asymptotic peak value for (m, l, a).
LogValue conjectured_log_peak(const SeqParams& params);

/// Exact sequence maximum (at the measured argmax) divided by the conjectured
/// asymptotic expression. Requires m >= 2.
RatioResult conjectured_ratio(const SeqParams& params);

}  // namespace gpseq
