#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "generators.hpp"
#include "gpseq/property_checks.hpp"
#include "gpseq/serialize.hpp"

using namespace gpseq;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<mpz_class> ones(std::size_t n) { return std::vector<mpz_class>(n, mpz_class(1)); }

}  // namespace

TEST_CASE("compare_ratios") {
  CHECK(compare_ratios(1, 2, 2, 4) == 0);
  CHECK(compare_ratios(2, 3, 3, 5) == 1);
  CHECK(compare_ratios(3, 5, 2, 3) == -1);
}

TEST_CASE("division-free comparison matches rational arithmetic") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    auto [n1, d1] = testing::random_ratio(rng);
    auto [n2, d2] = testing::random_ratio(rng);
    if (i % 5 == 0) {
      n2 = n1 * 3;
      d2 = d1 * 3;
    }
    mpq_class x(n1, d1), y(n2, d2);
    x.canonicalize();
    y.canonicalize();
    mpq_class diff = x - y;
    CHECK(compare_ratios(n1, d1, n2, d2) == sgn(diff));
  }
}

TEST_CASE("check_unimodal") {
  // (1, 5/2, 1)
  auto nums = ints({1, 5, 1});
  auto dens = ints({1, 2, 1});
  auto r = check_unimodal(nums, dens);
  CHECK(r.unimodal);
  CHECK(r.plateau_lo == 1);
  CHECK(r.plateau_hi == 1);

  auto flat = check_unimodal(ints({1, 1}), ones(2));
  CHECK(flat.unimodal);
  CHECK(flat.plateau_lo == 0);
  CHECK(flat.plateau_hi == 1);

  CHECK_FALSE(check_unimodal(ints({2, 1, 2}), ones(3)).unimodal);
  CHECK(check_unimodal(ints({1, 3, 3, 2, 2, 1}), ones(6)).unimodal);
  CHECK_THROWS_AS(check_unimodal(std::vector<mpz_class>{}, std::vector<mpz_class>{}), std::invalid_argument);
  CHECK_THROWS_AS(check_unimodal(ints({1, 2}), ones(3)), std::invalid_argument);
}

TEST_CASE("check_log_concave") {
  auto seq = full_sequence(SeqParams(3, 2, 1));
  auto lc = check_log_concave(seq);
  CHECK(lc.log_concave);
  CHECK_FALSE(lc.first_violation.has_value());

  auto bad = check_log_concave(ints({1, 1, 2}), ones(3));
  CHECK_FALSE(bad.log_concave);
  REQUIRE(bad.first_violation.has_value());
  CHECK(*bad.first_violation == 1);

  // Equality is allowed; strictness is reported separately.
  auto geometric = check_log_concave(ints({1, 2, 4, 8}), ones(4));
  CHECK(geometric.log_concave);
  CHECK_FALSE(geometric.strict);

  auto table_cell = check_log_concave(full_sequence(SeqParams(5, 6, 1)));
  CHECK_FALSE(table_cell.log_concave);
  CHECK(table_cell.first_violation.has_value());
}

TEST_CASE("peak_indices") {
  auto p = peak_indices(ints({1, 5, 1}), ints({1, 2, 1}));
  CHECK(p.indices == std::vector<std::size_t>{1});
  CHECK(p.unique);

  auto tie = peak_indices(ints({1, 1}), ones(2));
  CHECK(tie.indices == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(tie.unique);

  auto twenty = peak_indices(full_sequence(SeqParams(20, 2, 1)));
  CHECK(twenty.indices == std::vector<std::size_t>{7});
  CHECK(twenty.unique);
}

TEST_CASE("conjectured_center") {
  CHECK(conjectured_center(12, 1) == 5);
  CHECK(conjectured_center(2, 1) == 1);
  CHECK(conjectured_center(10, 2) == 4);
  // (1/2 * 5 + 1/2 + 2) / 2 = 2.5
  CHECK(conjectured_center(5, mpq_class(1, 2)) == 2);
}

TEST_CASE("known l = 1 exceptions") {
  CHECK(is_known_exception(SeqParams(3, 1, 1)));
  CHECK(is_known_exception(SeqParams(6, 1, 1)));   // 2a + 4
  CHECK(is_known_exception(SeqParams(9, 1, 1)));   // 4a + 5
  CHECK(is_known_exception(SeqParams(12, 1, 1)));  // a = 1 only
  CHECK_FALSE(is_known_exception(SeqParams(12, 1, 2)));
  CHECK(is_known_exception(SeqParams(13, 1, 2)));
  CHECK_FALSE(is_known_exception(SeqParams(3, 2, 1)));
}

TEST_CASE("conjecture_report") {
  auto rep = conjecture_report(SeqParams(20, 2, 1));
  CHECK(rep.unimodal);
  CHECK(rep.log_concave);
  CHECK(rep.peak_set == std::vector<std::size_t>{7});
  CHECK(rep.unique_max);
  CHECK(rep.conjectured_center == 7);
  CHECK(rep.window_lo == 6);
  CHECK(rep.window_hi == 8);
  CHECK(rep.window_hit);
  CHECK_FALSE(rep.known_exception);

  auto bad = conjecture_report(SeqParams(5, 6, 1));
  CHECK_FALSE(bad.log_concave);
  CHECK(bad.first_lc_violation.has_value());

  CHECK(conjecture_report(SeqParams(3, 1, 1)).known_exception);

  auto trivial = conjecture_report(SeqParams(1, 4, 3));
  CHECK(trivial.unimodal);
  CHECK_FALSE(trivial.unique_max);

  auto zero = conjecture_report(SeqParams(0, 2, 1));
  CHECK(zero.window_lo == 0);
  CHECK(zero.window_hi == 0);
  CHECK(zero.window_hit);
}

TEST_CASE("report invariants hold on a batch of sequences") {
  for (std::uint32_t l = 1; l <= 12; ++l) {
    for (std::uint32_t a : {1u, 2u, 5u}) {
      for (std::uint64_t m = 0; m <= 30; ++m) {
        auto rep = conjecture_report(SeqParams(m, l, a));
        CAPTURE(l);
        CAPTURE(a);
        CAPTURE(m);
        if (rep.log_concave) CHECK(rep.unimodal);
        CHECK(rep.unique_max == (rep.peak_set.size() == 1));
        CHECK(rep.first_lc_violation.has_value() == !rep.log_concave);
      }
    }
  }
}

TEST_CASE("l = 2, a = 1: log-concave with unique peak at floor((m+2)/3)") {
  for (std::uint64_t m = 2; m <= 300; ++m) {
    auto rep = conjecture_report(central_binomial_sequence(m));
    CAPTURE(m);
    CHECK(rep.log_concave);
    CHECK(rep.unique_max);
    CHECK(rep.peak_set == std::vector<std::size_t>{static_cast<std::size_t>((m + 2) / 3)});
  }
}

TEST_CASE("prefix sums of products of log-concave sequences are log-concave") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> len(3, 25);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = len(rng);
    auto x = testing::random_log_concave(rng, n);
    auto y = testing::random_log_concave(rng, n);
    REQUIRE(check_log_concave(x, ones(n)).log_concave);
    REQUIRE(check_log_concave(y, ones(n)).log_concave);
    std::vector<mpz_class> z;
    mpz_class acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += x[i] * y[i];
      z.push_back(acc);
    }
    CHECK(check_log_concave(z, ones(n)).log_concave);
  }
}

TEST_CASE("PropertyReport JSON") {
  auto j = to_json(conjecture_report(SeqParams(5, 6, 1)));
  CHECK(j.at("a") == "1/1");
  CHECK(j.at("log_concave") == false);
  CHECK(j.at("first_lc_violation").is_number());
  auto k = to_json(conjecture_report(SeqParams(20, 2, mpq_class(3, 2))));
  CHECK(k.at("a") == "3/2");
  CHECK(k.at("first_lc_violation").is_null());
}

TEST_CASE("l = 1 exact-center misses are exactly the known exceptions") {
  for (std::uint32_t a = 1; a <= 10; ++a) {
    for (std::uint64_t m = 2; m <= 80; ++m) {
      CAPTURE(a);
      CAPTURE(m);
      auto rep = conjecture_report(SeqParams(m, 1, a));
      bool at_center = rep.unique_max && static_cast<std::int64_t>(rep.peak_set.front()) == rep.conjectured_center;
      CHECK(at_center != rep.known_exception);
      CHECK(rep.window_hit);
    }
  }
}
