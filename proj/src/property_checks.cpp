#include "gpseq/property_checks.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpseq {
namespace {

void require_view(std::span<const mpz_class> nums, std::span<const mpz_class> dens) {
  if (nums.empty()) throw std::invalid_argument("sequence must be nonempty");
  if (nums.size() != dens.size()) throw std::invalid_argument("numerator and denominator lengths differ");
}

std::span<const mpz_class> nums_of(const ExactSequence& seq) { return seq.numerators; }
std::span<const mpz_class> dens_of(const ExactSequence& seq) { return seq.denominators; }

}  // namespace

int compare_ratios(const mpz_class& n1, const mpz_class& d1, const mpz_class& n2, const mpz_class& d2) {
  mpz_class lhs = n1 * d2;
  mpz_class rhs = n2 * d1;
  return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
}

PeakResult peak_indices(std::span<const mpz_class> nums, std::span<const mpz_class> dens) {
  require_view(nums, dens);
  PeakResult out;
  out.indices.push_back(0);
  for (std::size_t i = 1; i < nums.size(); ++i) {
    const std::size_t best = out.indices.front();
    int c = compare_ratios(nums[i], dens[i], nums[best], dens[best]);
    if (c > 0) {
      out.indices.assign(1, i);
    } else if (c == 0) {
      out.indices.push_back(i);
    }
  }
  out.unique = out.indices.size() == 1;
  return out;
}

UnimodalResult check_unimodal(std::span<const mpz_class> nums, std::span<const mpz_class> dens) {
  require_view(nums, dens);
  UnimodalResult out;
  bool descending = false;
  bool ok = true;
  for (std::size_t i = 0; i + 1 < nums.size(); ++i) {
    int c = compare_ratios(nums[i + 1], dens[i + 1], nums[i], dens[i]);
    if (c < 0) {
      descending = true;
    } else if (c > 0 && descending) {
      ok = false;
      break;
    }
  }
  auto peaks = peak_indices(nums, dens);
  out.unimodal = ok;
  out.plateau_lo = peaks.indices.front();
  out.plateau_hi = peaks.indices.back();
  return out;
}

LogConcavityResult check_log_concave(std::span<const mpz_class> nums, std::span<const mpz_class> dens) {
  require_view(nums, dens);
  LogConcavityResult out;
  out.log_concave = true;
  out.strict = true;
  mpz_class lhs, rhs;
  for (std::size_t i = 1; i + 1 < nums.size(); ++i) {
    // N_i^2 D_{i-1} D_{i+1}  vs  N_{i-1} N_{i+1} D_i^2
    lhs = nums[i] * nums[i];
    lhs *= dens[i - 1];
    lhs *= dens[i + 1];
    rhs = dens[i] * dens[i];
    rhs *= nums[i - 1];
    rhs *= nums[i + 1];
    int c = cmp(lhs, rhs);
    if (c <= 0) out.strict = false;
    if (c < 0) {
      out.log_concave = false;
      out.first_violation = i;
      break;
    }
  }
  // Strictness is only meaningful over the whole range.
  if (!out.log_concave) out.strict = false;
  return out;
}

UnimodalResult check_unimodal(const ExactSequence& seq) { return check_unimodal(nums_of(seq), dens_of(seq)); }
LogConcavityResult check_log_concave(const ExactSequence& seq) { return check_log_concave(nums_of(seq), dens_of(seq)); }
PeakResult peak_indices(const ExactSequence& seq) { return peak_indices(nums_of(seq), dens_of(seq)); }

std::int64_t conjectured_center(std::uint64_t m, const mpq_class& a) {
  mpq_class x = (a * m + a + 2) / (2 * a + 1);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return fl.get_si();
}

bool is_known_exception(const SeqParams& params) {
  if (params.l() != 1) return false;
  const mpq_class m(mpz_class(params.m()));
  const mpq_class& a = params.a();
  if (m == 3 || m == 2 * a + 4 || m == 4 * a + 5) return true;
  return a == 1 && params.m() == 12;
}

PropertyReport conjecture_report(const ExactSequence& seq) {
  PropertyReport rep(seq.params);
  auto uni = check_unimodal(seq);
  auto lc = check_log_concave(seq);
  auto peaks = peak_indices(seq);

  rep.unimodal = uni.unimodal;
  rep.plateau_lo = uni.plateau_lo;
  rep.plateau_hi = uni.plateau_hi;
  rep.log_concave = lc.log_concave;
  rep.strictly_log_concave = lc.strict;
  rep.first_lc_violation = lc.first_violation;
  rep.peak_set = peaks.indices;
  rep.unique_max = peaks.unique;

  const auto m = static_cast<std::int64_t>(seq.params.m());
  rep.conjectured_center = conjectured_center(seq.params.m(), seq.params.a());
  rep.window_lo = std::clamp<std::int64_t>(rep.conjectured_center - 1, 0, m);
  rep.window_hi = std::min<std::int64_t>(rep.conjectured_center + 1, m);
  rep.window_hit = std::all_of(rep.peak_set.begin(), rep.peak_set.end(), [&](std::size_t i) {
    auto k = static_cast<std::int64_t>(i);
    return k >= rep.window_lo && k <= rep.window_hi;
  });
  rep.known_exception = is_known_exception(seq.params);
  return rep;
}

PropertyReport conjecture_report(const SeqParams& params) {
  if (params.l() == 2 && params.a() == 1) {
    // Same values, cheaper denominators.
    return conjecture_report(central_binomial_sequence(params.m()));
  }
  return conjecture_report(full_sequence(params));
}

}  // namespace gpseq
