#pragma once

// Random inputs for property tests.

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <vector>

namespace gpseq::testing {

/// Positive log-concave sequence as integers: x_0 times a product of
/// non-increasing ratios, with all denominators cleared at the end (a common
/// positive scale keeps log-concavity).
inline std::vector<mpz_class> random_log_concave(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 40), start(1, 1000);
  std::vector<mpq_class> ratios;
  for (std::size_t i = 0; i + 1 < length; ++i) {
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    ratios.push_back(r);
  }
  std::sort(ratios.begin(), ratios.end(), [](const mpq_class& x, const mpq_class& y) { return x > y; });

  std::vector<mpq_class> xs{mpq_class(start(rng))};
  for (const auto& r : ratios) xs.push_back(xs.back() * r);

  mpz_class scale = 1;
  for (const auto& x : xs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& x : xs) {
    mpq_class v = x * scale;
    out.push_back(v.get_num());
  }
  return out;
}

/// Random positive rational as (numerator, denominator).
inline std::pair<mpz_class, mpz_class> random_ratio(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(1, 1'000'000);
  mpz_class n = d(rng);
  n *= d(rng);
  mpz_class q = d(rng);
  return {n, q};
}

}  // namespace gpseq::testing
