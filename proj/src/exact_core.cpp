#include "gpseq/exact_core.hpp"

#include <stdexcept>
#include <string>

namespace gpseq {

SeqParams::SeqParams(std::uint64_t m, std::uint32_t l, mpq_class a) : m_(m), l_(l), a_(std::move(a)) {
  a_.canonicalize();
  if (l_ < 1) throw std::invalid_argument("l must be at least 1");
  if (sgn(a_) <= 0) throw std::invalid_argument("a must be positive");
}

mpz_class binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

PowerSumAccumulator::PowerSumAccumulator(std::uint64_t m, std::uint32_t l, const mpq_class& a)
    : m_(m), l_(l), p_(a.get_num()), q_(a.get_den()), binom_(1), p_pow_(1), sum_(1) {
  if (l_ < 1) throw std::invalid_argument("l must be at least 1");
  if (sgn(a) <= 0) throw std::invalid_argument("a must be positive");
  mpz_pow_ui(q_pow_l_.get_mpz_t(), q_.get_mpz_t(), l_);
}

void PowerSumAccumulator::extend() {
  if (r_ >= m_) throw std::out_of_range("power sum index " + std::to_string(r_ + 1) + " exceeds m = " + std::to_string(m_));
  binom_ *= m_ - r_;
  ++r_;
  mpz_divexact_ui(binom_.get_mpz_t(), binom_.get_mpz_t(), r_);
  p_pow_ *= p_;
  mpz_class term = binom_ * p_pow_;
  mpz_pow_ui(term.get_mpz_t(), term.get_mpz_t(), l_);
  sum_ *= q_pow_l_;
  sum_ += term;
}

mpq_class PowerSumAccumulator::value() const {
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), q_.get_mpz_t(), static_cast<unsigned long>(l_ * r_));
  mpq_class out(sum_, scale);
  out.canonicalize();
  return out;
}

mpq_class weighted_power_sum(std::uint64_t m, std::uint32_t l, const mpq_class& a, std::uint64_t r) {
  if (r > m) throw std::out_of_range("index r = " + std::to_string(r) + " outside [0, " + std::to_string(m) + "]");
  PowerSumAccumulator acc(m, l, a);
  while (acc.r() < r) acc.extend();
  return acc.value();
}

DenominatorTable::DenominatorTable(std::uint32_t l, const mpq_class& a, std::uint64_t r_max) : l_(l), a_(a) {
  a_.canonicalize();
  if (l_ < 1) throw std::invalid_argument("l must be at least 1");
  if (sgn(a_) <= 0) throw std::invalid_argument("a must be positive");
  rows_.reserve(r_max + 1);
  if (l_ == 1) {
    // Binomial theorem: sum_i C(r,i) p^i q^(r-i) = (p + q)^r.
    mpz_class base = a_.get_num() + a_.get_den();
    mpz_class row = 1;
    for (std::uint64_t r = 0; r <= r_max; ++r) {
      rows_.push_back(row);
      row *= base;
    }
    return;
  }
  for (std::uint64_t r = 0; r <= r_max; ++r) {
    PowerSumAccumulator acc(r, l_, a_);
    while (acc.r() < r) acc.extend();
    rows_.push_back(acc.scaled());
  }
}

mpq_class sequence_entry(const SeqParams& params, std::uint64_t r) {
  if (r > params.m()) {
    throw std::out_of_range("index r = " + std::to_string(r) + " outside [0, " + std::to_string(params.m()) + "]");
  }
  return weighted_power_sum(params.m(), params.l(), params.a(), r) /
         weighted_power_sum(r, params.l(), params.a(), r);
}

ExactSequence full_sequence(const SeqParams& params, const DenominatorTable& denominators) {
  if (denominators.l() != params.l() || denominators.a() != params.a()) {
    throw std::invalid_argument("denominator table does not match (l, a)");
  }
  if (denominators.r_max() < params.m()) throw std::invalid_argument("denominator table too short for m");

  const std::uint64_t m = params.m();
  ExactSequence seq{params, {}, {}, {}};
  seq.entries.reserve(m + 1);
  seq.numerators.reserve(m + 1);
  seq.denominators.reserve(m + 1);

  PowerSumAccumulator acc(m, params.l(), params.a());
  for (std::uint64_t r = 0;; ++r) {
    seq.numerators.push_back(acc.scaled());
    seq.denominators.push_back(denominators[r]);
    mpq_class entry(acc.scaled(), denominators[r]);
    entry.canonicalize();
    seq.entries.push_back(std::move(entry));
    if (r == m) break;
    acc.extend();
  }
  return seq;
}

ExactSequence full_sequence(const SeqParams& params) {
  return full_sequence(params, DenominatorTable(params.l(), params.a(), params.m()));
}

ExactSequence central_binomial_sequence(std::uint64_t m) {
  ExactSequence seq{SeqParams(m, 2, 1), {}, {}, {}};
  seq.entries.reserve(m + 1);
  seq.numerators.reserve(m + 1);
  seq.denominators.reserve(m + 1);

  mpz_class binom_m = 1;   // C(m, r)
  mpz_class central = 1;   // C(2r, r)
  mpz_class prefix = 1;    // sum_{i<=r} C(m, i)^2
  for (std::uint64_t r = 0;; ++r) {
    seq.numerators.push_back(prefix);
    seq.denominators.push_back(central);
    mpq_class entry(prefix, central);
    entry.canonicalize();
    seq.entries.push_back(std::move(entry));
    if (r == m) break;

    binom_m *= m - r;
    mpz_divexact_ui(binom_m.get_mpz_t(), binom_m.get_mpz_t(), r + 1);
    prefix += binom_m * binom_m;
    // C(2r+2, r+1) = C(2r, r) * 2(2r+1) / (r+1)
    central *= 2 * (2 * r + 1);
    mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), r + 1);
  }
  return seq;
}

}  // namespace gpseq
