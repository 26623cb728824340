#pragma once

// Exact construction of the generalized sequence
//
//   s_m(r) = sum_{i<=r} (C(m,i) a^i)^l / sum_{i<=r} (C(r,i) a^i)^l,  0 <= r <= m,
//
// for integers m >= 0, l >= 1 and a positive rational a = p/q.
//
// All heavy arithmetic is on integers: the i-th term of a length-r prefix is
// scaled by q^(l*r), which turns it into (C(m,i) p^i q^(r-i))^l. Numerator and
// denominator of an entry carry the same scale, so their ratio is unchanged.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace gpseq {

/// The triple (m, l, a) identifying one sequence instance.
class SeqParams {
 public:
  /// Throws std::invalid_argument unless l >= 1 and a > 0.
  SeqParams(std::uint64_t m, std::uint32_t l, mpq_class a);

  std::uint64_t m() const { return m_; }
  std::uint32_t l() const { return l_; }
  const mpq_class& a() const { return a_; }

  bool operator==(const SeqParams& other) const {
    return m_ == other.m_ && l_ == other.l_ && a_ == other.a_;
  }

 private:
  std::uint64_t m_;
  std::uint32_t l_;
  mpq_class a_;
};

/// C(n, k); zero when k < 0 or k > n.
mpz_class binomial(std::uint64_t n, std::int64_t k);

/// Running prefix sum of (C(m,i) p^i q^(r-i))^l over i = 0..r, scaled to an
/// integer. Extending r by one costs a single new term.
class PowerSumAccumulator {
 public:
  PowerSumAccumulator(std::uint64_t m, std::uint32_t l, const mpq_class& a);

  std::uint64_t r() const { return r_; }
  std::uint64_t m() const { return m_; }

  /// Advances r to r + 1. Throws std::out_of_range past r = m.
  void extend();

  /// Integer sum, equal to the rational power sum times q^(l*r).
  const mpz_class& scaled() const { return sum_; }

  /// Exact rational power sum sum_{i<=r} (C(m,i) a^i)^l.
  mpq_class value() const;

 private:
  std::uint64_t m_;
  std::uint32_t l_;
  mpz_class p_, q_;
  mpz_class q_pow_l_;
  std::uint64_t r_ = 0;
  mpz_class binom_;  // C(m, r)
  mpz_class p_pow_;  // p^r
  mpz_class sum_;
};

/// sum_{i=0}^{r} (C(m,i) a^i)^l. Throws std::out_of_range when r > m.
mpq_class weighted_power_sum(std::uint64_t m, std::uint32_t l, const mpq_class& a, std::uint64_t r);

/// Scaled denominators D_r = sum_i (C(r,i) p^i q^(r-i))^l for r = 0..r_max.
/// They do not depend on m, so one table serves every m <= r_max for a fixed
/// (l, a). Immutable after construction.
class DenominatorTable {
 public:
  DenominatorTable(std::uint32_t l, const mpq_class& a, std::uint64_t r_max);

  std::uint32_t l() const { return l_; }
  const mpq_class& a() const { return a_; }
  std::uint64_t r_max() const { return rows_.size() - 1; }
  const mpz_class& operator[](std::uint64_t r) const { return rows_.at(r); }

 private:
  std::uint32_t l_;
  mpq_class a_;
  std::vector<mpz_class> rows_;
};

/// The m+1 entries of one sequence. numerators[r] / denominators[r] equals
/// entries[r]; the integer pair is unreduced (it carries the q^(l*r) scale),
/// entries are in lowest terms.
struct ExactSequence {
  SeqParams params;
  std::vector<mpq_class> entries;
  std::vector<mpz_class> numerators;
  std::vector<mpz_class> denominators;

  std::size_t size() const { return entries.size(); }
};

/// Single entry. Throws std::out_of_range when r > m.
mpq_class sequence_entry(const SeqParams& params, std::uint64_t r);

ExactSequence full_sequence(const SeqParams& params);

/// Same values, with denominators taken from a precomputed table. The table
/// must match (l, a) and cover r_max >= m.
ExactSequence full_sequence(const SeqParams& params, const DenominatorTable& denominators);

/// l = 2, a = 1 via sum_i C(r,i)^2 = C(2r, r); denominators are exactly C(2r, r).
ExactSequence central_binomial_sequence(std::uint64_t m);

}  // namespace gpseq
