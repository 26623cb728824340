#include "gpseq/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gpseq/property_checks.hpp"
#include "gpseq/rational.hpp"

namespace gpseq {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// log|v| = log(mantissa) + exponent * ln 2, mantissa in [0.5, 1).
struct Split {
  double mantissa;
  long exponent;
};

Split split(const mpz_class& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return {std::fabs(mant), exp};
}

}  // namespace

LogValue log_of_rational(const mpq_class& x) {
  if (sgn(x) <= 0) throw std::invalid_argument("log_of_rational: argument must be positive, got " + to_string(x));

  if (x >= mpq_class(1, 2) && x <= 2) {
    mpq_class delta = x - 1;
    double d = mpq_get_d(delta.get_mpq_t());
    double v = std::log1p(d);
    // mpq_get_d truncates (relative 2^-52), log1p adds a few ulps.
    return {v, 4 * kEps * std::fabs(v)};
  }

  Split num = split(x.get_num());
  Split den = split(x.get_den());
  const double k = static_cast<double>(num.exponent - den.exponent);
  const double mant = std::log(num.mantissa / den.mantissa);  // |mant| < ln 2
  const double v = k * std::numbers::ln2 + mant;
  // |k ln2| <= |v| + ln2 < 2|v| because |v| > ln2 outside [1/2, 2].
  const double err = 4 * kEps * (std::fabs(k) * std::numbers::ln2 + std::fabs(mant)) + 2 * kEps;
  return {v, err};
}

LogValue log_of_integer(const mpz_class& x) { return log_of_rational(mpq_class(x)); }

std::uint64_t peak_index_l2(std::uint64_t m) { return (m + 2) / 3; }

mpq_class lower_prefactor(std::uint64_t m) {
  const mpz_class r = peak_index_l2(m);
  mpq_class ratio(mpz_class(m) - r, r + 1);
  mpq_class out(r + 1, 3 * r + 1);
  ratio.canonicalize();
  out.canonicalize();
  return out * ratio * ratio;
}

mpq_class upper_prefactor(std::uint64_t m) {
  const mpz_class r = peak_index_l2(m);
  mpq_class out(4 * r - 2, 3 * r - 2);
  out.canonicalize();
  return out;
}

SandwichBounds sandwich_bounds(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("sandwich bounds need m >= 2");
  SandwichBounds s;
  s.m = m;
  s.r_m = peak_index_l2(m);

  mpz_class prefix = 0;
  mpz_class c = 1;
  for (std::uint64_t i = 0;; ++i) {
    prefix += c * c;
    if (i == s.r_m) break;
    c *= m - i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i + 1);
  }
  // c = C(m, r_m)
  const mpz_class central = binomial(2 * s.r_m, static_cast<std::int64_t>(s.r_m));
  mpq_class base(c * c, central);
  base.canonicalize();
  s.g_value = mpq_class(prefix, central);
  s.g_value.canonicalize();
  s.lower = lower_prefactor(m) * base;
  s.upper = upper_prefactor(m) * base;
  if (!(s.lower < s.g_value && s.g_value < s.upper)) {
    throw TheoryViolation("sandwich containment fails at m = " + std::to_string(m));
  }
  return s;
}

RatioResult theorem_ratio(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("theorem_ratio needs m >= 2");
  RatioResult out;
  out.m = m;
  out.peak = peak_index_l2(m);

  const mpz_class central = binomial(2 * out.peak, static_cast<std::int64_t>(out.peak));
  mpz_class prefix = 0;
  mpz_class c = 1;
  for (std::uint64_t i = 0;; ++i) {
    prefix += c * c;
    if (i == out.peak) break;
    c *= m - i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i + 1);
  }
  mpq_class g(prefix, central);
  g.canonicalize();
  LogValue lg = log_of_rational(g);
  out.log_g = lg.value;
  out.log_g_error = lg.error;

  const double dm = static_cast<double>(m);
  const double two_m_ln2 = 2 * dm * std::numbers::ln2;
  const double half_log_pi_m = 0.5 * std::log(std::numbers::pi * dm);
  const double ln3 = std::log(3.0);
  const double three_term = (2 * dm + 0.5) * ln3;
  const double log_ratio = lg.value + two_m_ln2 + half_log_pi_m - three_term;
  out.ratio = std::exp(log_ratio);
  const double abs_err = lg.error + 4 * kEps * (two_m_ln2 + std::fabs(half_log_pi_m) + three_term + std::fabs(log_ratio));
  out.error = std::expm1(abs_err);
  return out;
}

LogValue conjectured_log_peak(const SeqParams& params) {
  const double l = params.l();
  const double dm = static_cast<double>(params.m());
  const mpq_class& a = params.a();
  const mpq_class one_plus_a = a + 1;
  const mpq_class one_plus_2a = 2 * a + 1;
  mpz_class pow_num, pow_den;
  mpz_pow_ui(pow_num.get_mpz_t(), one_plus_a.get_num_mpz_t(), params.l());
  mpz_pow_ui(pow_den.get_mpz_t(), one_plus_a.get_den_mpz_t(), params.l());
  mpq_class pow_minus_one(pow_num - pow_den, pow_den);
  pow_minus_one.canonicalize();

  const LogValue ln_l = log_of_rational(mpq_class(params.l()));
  const LogValue ln_1p2a = log_of_rational(one_plus_2a);
  const LogValue ln_1pa = log_of_rational(one_plus_a);
  const LogValue ln_a = log_of_rational(a);
  const LogValue ln_pm1 = log_of_rational(pow_minus_one);
  const LogValue ln_growth = log_of_rational(one_plus_2a / one_plus_a);
  const double ln_2pim = std::log(2 * std::numbers::pi * dm);
  const double exponent = (dm + 0.5) * l;

  LogValue out;
  out.value = 0.5 * ln_l.value - 0.5 * ln_2pim + 0.5 * ln_1p2a.value + ln_1pa.value + 0.5 * (l - 2) * ln_a.value -
              ln_pm1.value + exponent * ln_growth.value;
  out.error = 0.5 * ln_l.error + 4 * kEps * std::fabs(ln_2pim) + 0.5 * ln_1p2a.error + ln_1pa.error +
              0.5 * std::fabs(l - 2) * ln_a.error + ln_pm1.error + exponent * ln_growth.error +
              4 * kEps * (std::fabs(exponent * ln_growth.value) + std::fabs(out.value));
  return out;
}

RatioResult conjectured_ratio(const SeqParams& params) {
  if (params.m() < 2) throw std::invalid_argument("conjectured_ratio needs m >= 2");
  const ExactSequence seq = (params.l() == 2 && params.a() == 1) ? central_binomial_sequence(params.m())
                                                                  : full_sequence(params);
  const PeakResult peak = peak_indices(seq);
  RatioResult out;
  out.m = params.m();
  out.peak = peak.indices.front();
  const LogValue lg = log_of_rational(seq.entries[out.peak]);
  const LogValue formula = conjectured_log_peak(params);
  out.log_g = lg.value;
  out.log_g_error = lg.error;
  const double log_ratio = lg.value - formula.value;
  out.ratio = std::exp(log_ratio);
  out.error = std::expm1(lg.error + formula.error + 2 * kEps * std::fabs(log_ratio));
  return out;
}

}  // namespace gpseq
