#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "generators.hpp"
#include "gpseq/asymptotics.hpp"
#include "gpseq/serialize.hpp"

using namespace gpseq;

namespace {

bool rel_close(double x, double y, double tol) { return std::fabs(x - y) <= tol * std::fabs(y); }

}  // namespace

TEST_CASE("log_of_rational") {
  CHECK(log_of_rational(1).value == 0.0);
  mpz_class two64;
  mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
  CHECK(rel_close(log_of_integer(two64).value, 64 * std::numbers::ln2, 1e-15));
  // Reference values from 40-digit evaluation.
  CHECK(rel_close(log_of_rational(mpq_class(5, 2)).value, 0.9162907318741550651835, 1e-14));
  CHECK_THROWS_AS(log_of_rational(0), std::invalid_argument);
  CHECK_THROWS_AS(log_of_rational(mpq_class(-1, 3)), std::invalid_argument);
}

TEST_CASE("log_of_rational keeps relative accuracy near 1 and for huge values") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 100);
  mpq_class near_one(big + 1, big);
  near_one.canonicalize();
  auto v = log_of_rational(near_one);
  CHECK(rel_close(v.value, std::ldexp(1.0, -100), 1e-12));

  // 3^5000 is far outside double range.
  mpz_class huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 3, 5000);
  auto h = log_of_integer(huge);
  CHECK(std::isfinite(h.value));
  CHECK(rel_close(h.value, 5000 * std::log(3.0), 1e-12));
  CHECK(h.error <= 1e-12 * h.value);
  auto inv = log_of_rational(mpq_class(1) / mpq_class(huge));
  CHECK(rel_close(inv.value, -5000 * std::log(3.0), 1e-12));
}

TEST_CASE("log_of_rational is additive") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    auto [n1, d1] = testing::random_ratio(rng);
    auto [n2, d2] = testing::random_ratio(rng);
    mpq_class x(n1, d1), y(n2, d2);
    x.canonicalize();
    y.canonicalize();
    double lhs = log_of_rational(x * y).value;
    double rhs = log_of_rational(x).value + log_of_rational(y).value;
    double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    CHECK(std::fabs(lhs - rhs) <= 1e-11 * scale);
  }
}

TEST_CASE("sandwich bounds") {
  auto s = sandwich_bounds(6);
  CHECK(s.r_m == 2);
  CHECK(s.lower == mpq_class(200, 7));  // 10800/378
  CHECK(s.g_value == mpq_class(131, 3));  // 262/6
  CHECK(s.upper == mpq_class(225, 4));

  auto two = sandwich_bounds(2);
  CHECK(two.r_m == 1);
  CHECK(two.lower < two.g_value);
  CHECK(two.g_value < two.upper);

  for (std::uint64_t m = 2; m <= 400; ++m) CHECK_NOTHROW(sandwich_bounds(m));
  CHECK_THROWS_AS(sandwich_bounds(1), std::invalid_argument);
}

TEST_CASE("prefactors approach 4/3") {
  double prev_lo = 1.0, prev_hi = 1.0;
  for (std::uint64_t m : {30ULL, 300ULL, 3000ULL, 30000ULL, 300000ULL}) {
    double lo = std::fabs(lower_prefactor(m).get_d() - 4.0 / 3.0);
    double hi = std::fabs(upper_prefactor(m).get_d() - 4.0 / 3.0);
    CHECK(lo < prev_lo);
    CHECK(hi < prev_hi);
    prev_lo = lo;
    prev_hi = hi;
  }
  CHECK(prev_lo < 1e-4);
  CHECK(prev_hi < 1e-4);
}

TEST_CASE("theorem ratio") {
  // 40-digit reference values.
  CHECK(rel_close(theorem_ratio(2).ratio, 0.71466790573656065122, 1e-10));
  CHECK(rel_close(theorem_ratio(10).ratio, 0.84284944083659489087, 1e-10));
  CHECK(rel_close(theorem_ratio(100).ratio, 0.97908658875921600512, 1e-10));
  CHECK(rel_close(theorem_ratio(1000).ratio, 0.99780503375304165169, 1e-10));

  double prev = 1.0;
  for (std::uint64_t m : {10ULL, 100ULL, 1000ULL}) {
    double dev = std::fabs(theorem_ratio(m).ratio - 1.0);
    CHECK(dev < prev);
    prev = dev;
  }
  auto r = theorem_ratio(500);
  CHECK(r.log_g_error <= 1e-9 * std::fabs(r.log_g));
  CHECK(r.error < 1e-9);
}

TEST_CASE("theorem ratio stays finite far beyond double range") {
  for (std::uint64_t m : {50000ULL, 99999ULL, 100000ULL}) {
    auto r = theorem_ratio(m);
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio > 0.0);
    CHECK(r.log_g > 700.0);
  }
}

TEST_CASE("conjectured ratio") {
  for (std::uint64_t m : {2ULL, 10ULL, 57ULL, 100ULL, 1000ULL}) {
    auto c = conjectured_ratio(SeqParams(m, 2, 1));
    auto t = theorem_ratio(m);
    CHECK(rel_close(c.ratio, t.ratio, 1e-9));
    CHECK(c.peak == t.peak);
  }
  auto l1 = conjectured_ratio(SeqParams(10000, 1, 1));
  CHECK(std::fabs(l1.ratio - 1.0) < 0.05);

  for (std::uint32_t l : {1u, 3u, 8u}) {
    for (const mpq_class& a : {mpq_class(1, 3), mpq_class(1), mpq_class(7, 2)}) {
      auto f = conjectured_log_peak(SeqParams(40, l, a));
      CHECK(std::isfinite(f.value));
      auto c = conjectured_ratio(SeqParams(40, l, a));
      CHECK(c.ratio > 0.0);
    }
  }
  CHECK_THROWS_AS(conjectured_ratio(SeqParams(1, 2, 1)), std::invalid_argument);
}

TEST_CASE("RatioResult JSON") {
  auto j = to_json(theorem_ratio(2));
  CHECK(j.at("ratio") == "0.714667905737");
  CHECK(j.at("m") == 2);
  CHECK(format_ratio(1.0) == "1");
}
