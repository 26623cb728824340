#include "gpseq/poly_certificates.hpp"

#include <algorithm>
#include <sstream>

#include "gpseq/exact_core.hpp"
#include "gpseq/rational.hpp"

namespace gpseq {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::int64_t i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return IntPoly();
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return IntPoly(std::move(out));
}

std::string IntPoly::dump() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += it->get_str();
  }
  return out;
}

const mpz_class& CertTable::a(std::uint64_t n, std::int64_t j) const {
  const auto& row = a_rows.at(n);
  if (j < 0 || j >= static_cast<std::int64_t>(row.size())) throw std::out_of_range("a_{n,j} index out of range");
  return row[static_cast<std::size_t>(j)];
}

const mpz_class& CertTable::b(std::uint64_t n, std::int64_t j) const {
  const auto& row = b_rows.at(n);
  if (j < -2 || j + 2 >= static_cast<std::int64_t>(row.size())) throw std::out_of_range("b_{n,j} index out of range");
  return row[static_cast<std::size_t>(j + 2)];
}

namespace {

std::string z(const mpz_class& v) { return v.get_str(); }

IntPoly linear(long c1, long c0) { return IntPoly({mpz_class(c0), mpz_class(c1)}); }

// One step of the scalar b-recurrences: row n -> row n+1.
std::vector<mpz_class> next_b_row(const CertTable& t, std::int64_t n) {
  const std::int64_t top = 2 * n + 2;
  std::vector<mpz_class> row(static_cast<std::size_t>(top + 3));
  auto set = [&](std::int64_t j, mpz_class v) { row[static_cast<std::size_t>(j + 2)] = std::move(v); };
  const mpz_class shift = 2 * n - 2;
  const mpz_class sq = (n - 1) * (n - 1);
  const auto u = static_cast<std::uint64_t>(n);

  set(top, 1);
  set(2 * n + 1, t.b(u, 2 * n - 1) - shift);
  for (std::int64_t j = 2; j <= 2 * n; ++j) {
    set(j, t.b(u, j - 2) - shift * t.b(u, j - 1) + sq * t.b(u, j));
  }
  if (n >= 1) set(1, -shift * t.b(u, 0) + sq * t.b(u, 1));
  set(0, sq * t.b(u, 0));
  return row;
}

// One step of the scalar a-recurrences; needs b-row n+1 already in the table.
std::vector<mpz_class> next_a_row(const CertTable& t, std::int64_t n) {
  const std::int64_t top = 2 * n + 2;
  std::vector<mpz_class> row(static_cast<std::size_t>(top + 1));
  const auto u = static_cast<std::uint64_t>(n);
  const auto v = u + 1;
  auto a_or_zero = [&](std::int64_t j) { return j < 0 ? mpz_class(0) : t.a(u, j); };
  const mpz_class nn = n * n;

  row[static_cast<std::size_t>(top)] = -4 * n + 4 * t.a(u, 2 * n) + 1 + 3 * t.b(v, 2 * n + 1);
  row[static_cast<std::size_t>(2 * n + 1)] =
      -nn + 4 * n * t.a(u, 2 * n) + 4 * a_or_zero(2 * n - 1) + t.b(v, 2 * n + 1) + 3 * t.b(v, 2 * n);
  for (std::int64_t j = 2; j <= 2 * n; ++j) {
    row[static_cast<std::size_t>(j)] =
        nn * t.a(u, j) + 4 * n * t.a(u, j - 1) + 4 * t.a(u, j - 2) + t.b(v, j) + 3 * t.b(v, j - 1);
  }
  if (n >= 1) row[1] = nn * t.a(u, 1) + 4 * n * t.a(u, 0) + t.b(v, 1) + 3 * t.b(v, 0);
  row[0] = nn * t.a(u, 0) + t.b(v, 0);
  return row;
}

void cross_check(const CertTable& t, std::uint64_t n) {
  const auto deg_x = static_cast<std::int64_t>(2 * n + 1);
  const auto deg_y = static_cast<std::int64_t>(2 * n);
  const IntPoly& x = t.X[n];
  const IntPoly& y = t.Y[n];
  auto fail = [&](const std::string& what) {
    throw CertificateError("certificate table corrupt at n = " + std::to_string(n) + ": " + what);
  };
  if (x.degree() != deg_x || !x.is_monic()) fail("X_n is not monic of degree 2n+1");
  if (y.degree() != deg_y || !y.is_monic()) fail("Y_n is not monic of degree 2n");
  for (std::int64_t j = 0; j <= deg_y; ++j) {
    if (t.a(n, j) != -x.coeff(j)) fail("a_{n," + std::to_string(j) + "} recurrence disagrees with X_n");
    if (t.b(n, j) != y.coeff(j)) fail("b_{n," + std::to_string(j) + "} recurrence disagrees with Y_n");
  }
  if (t.b(n, -1) != 0 || t.b(n, -2) != 0) fail("b_{n,-1}, b_{n,-2} conventions violated");
}

mpq_class frac(const mpz_class& num, const mpz_class& den) {
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpz_class factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class pow_ui(unsigned long base, unsigned long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace

CertTable build_xy(std::uint64_t n_max) {
  CertTable t;
  t.n_max = n_max;
  t.X.reserve(n_max + 1);
  t.Y.reserve(n_max + 1);

  // Route 1: polynomial algebra.
  t.X.push_back(linear(1, 1));
  t.Y.push_back(IntPoly({mpz_class(1)}));
  for (std::uint64_t n = 0; n < n_max; ++n) {
    const auto sn = static_cast<long>(n);
    IntPoly shift = linear(1, 1 - sn);
    IntPoly mult = linear(2, sn);
    IntPoly y_next = shift * shift * t.Y[n];
    IntPoly x_next = mult * mult * t.X[n] - linear(3, 1) * y_next;
    t.Y.push_back(std::move(y_next));
    t.X.push_back(std::move(x_next));
  }

  // Route 2: scalar recurrences from X_0 = t - (-1), Y_0 = 1.
  t.a_rows.push_back({mpz_class(-1)});
  t.b_rows.push_back({mpz_class(0), mpz_class(0), mpz_class(1)});
  for (std::uint64_t n = 0; n < n_max; ++n) {
    const auto sn = static_cast<std::int64_t>(n);
    t.b_rows.push_back(next_b_row(t, sn));
    t.a_rows.push_back(next_a_row(t, sn));
  }

  for (std::uint64_t n = 0; n <= n_max; ++n) cross_check(t, n);
  return t;
}

std::string dump_polynomials(const CertTable& table) {
  std::ostringstream out;
  for (std::uint64_t n = 0; n <= table.n_max; ++n) {
    out << "X_" << n << ": " << table.X[n].dump() << '\n';
    out << "Y_" << n << ": " << table.Y[n].dump() << '\n';
  }
  return out.str();
}

void Verdict::record(bool ok, std::int64_t n, std::int64_t j, const std::string& expected, const std::string& actual) {
  ++checked;
  if (ok) return;
  if (passed) first_failure = CheckFailure{n, j, expected, actual};
  passed = false;
}

void Verdict::merge(const Verdict& other) {
  checked += other.checked;
  if (!other.passed && passed) first_failure = other.first_failure;
  passed = passed && other.passed;
}

std::vector<Verdict> verify_closed_forms(const CertTable& table) {
  if (table.n_max < 2) throw std::invalid_argument("closed-form checks need n_max >= 2");

  auto check = [&](const std::string& name, std::uint64_t n_lo, auto index, auto formula, bool is_a) {
    Verdict v{name};
    for (std::uint64_t n = n_lo; n <= table.n_max; ++n) {
      const auto sn = static_cast<std::int64_t>(n);
      const std::int64_t j = index(sn);
      const mpq_class expected = formula(sn);
      const mpz_class& actual = is_a ? table.a(n, j) : table.b(n, j);
      v.record(expected == mpq_class(actual), sn, j, to_string(expected), z(actual));
    }
    return v;
  };
  constexpr bool kA = true;
  constexpr bool kB = false;

  std::vector<Verdict> out;
  // b coefficients.
  out.push_back(check("b_{n,2n-1} = 3n - n^2", 1, [](auto n) { return 2 * n - 1; },
                      [](auto n) -> mpq_class { return mpq_class(3 * n - n * n); }, kB));
  out.push_back(check("b_{n,2n-2} = n(3n^3 - 20n^2 + 36n - 13)/6", 1, [](auto n) { return 2 * n - 2; },
                      [](auto n) -> mpq_class {
                        mpz_class N = n;
                        return frac(N * (3 * N * N * N - 20 * N * N + 36 * N - 13), 6);
                      }, kB));
  out.push_back(check("b_{n,2n-3} = -n(n-1)(n-2)(n-3)(n^2 - 5n + 2)/6", 2, [](auto n) { return 2 * n - 3; },
                      [](auto n) -> mpq_class {
                        mpz_class N = n;
                        return frac(-N * (N - 1) * (N - 2) * (N - 3) * (N * N - 5 * N + 2), 6);
                      }, kB));
  out.push_back(check("b_{n,2} = ((n-2)!)^2", 2, [](auto) { return std::int64_t{2}; },
                      [](auto n) -> mpq_class {
                        mpz_class f = factorial(static_cast<std::uint64_t>(n - 2));
                        return mpq_class(f * f);
                      }, kB));
  out.push_back(check("b_{n,1} = 0", 2, [](auto) { return std::int64_t{1}; }, [](auto) -> mpq_class { return mpq_class(0); }, kB));
  out.push_back(check("b_{n,0} = 0", 2, [](auto) { return std::int64_t{0}; }, [](auto) -> mpq_class { return mpq_class(0); }, kB));

  // a coefficients.
  out.push_back(check("a_{n,2n} = n^2 + n + (2^(2n+1) - 5)/3", 1, [](auto n) { return 2 * n; },
                      [](auto n) -> mpq_class {
                        mpz_class N = n;
                        return mpq_class(N * N + N) + frac(pow_ui(2, 2 * n + 1) - 5, 3);
                      }, kA));
  out.push_back(check("a_{n,2n-1} = (3n^2 - 3n + 29) 4^n / 9 - (9n^4 + 12n^3 + 24n^2 + 39n + 58)/18", 1,
                      [](auto n) { return 2 * n - 1; },
                      [](auto n) -> mpq_class {
                        mpz_class N = n;
                        mpq_class lead = frac((3 * N * N - 3 * N + 29) * pow_ui(4, n), 9);
                        mpq_class tail = frac(9 * N * N * N * N + 12 * N * N * N + 24 * N * N + 39 * N + 58, 18);
                        return mpq_class(lead - tail);
                      }, kA));
  out.push_back(check("a_{n,1} = (4 H_{n-1} + 5) ((n-1)!)^2", 1, [](auto) { return std::int64_t{1}; },
                      [](auto n) -> mpq_class {
                        mpq_class harmonic = 0;
                        for (std::int64_t i = 1; i <= n - 1; ++i) harmonic += mpq_class(1, i);
                        mpz_class f = factorial(static_cast<std::uint64_t>(n - 1));
                        return mpq_class((4 * harmonic + 5) * mpq_class(f * f));
                      }, kA));
  out.push_back(check("a_{n,0} = ((n-1)!)^2", 1, [](auto) { return std::int64_t{0}; },
                      [](auto n) -> mpq_class {
                        mpz_class f = factorial(static_cast<std::uint64_t>(n - 1));
                        return mpq_class(f * f);
                      }, kA));
  return out;
}

Verdict verify_lemma37(const CertTable& table) {
  Verdict v{"a_{n,j} >= |b_{n,j-2}| + 2n|b_{n,j-1}| + n^2|b_{n,j}|"};
  mpz_class bound;
  for (std::uint64_t n = 2; n <= table.n_max; ++n) {
    const auto sn = static_cast<std::int64_t>(n);
    for (std::int64_t j = 0; j <= 2 * sn; ++j) {
      bound = abs(table.b(n, j - 2)) + 2 * sn * abs(table.b(n, j - 1)) + sn * sn * abs(table.b(n, j));
      const mpz_class& a = table.a(n, j);
      bool ok = a >= bound && sgn(a) >= 0;
      v.record(ok, sn, j, ">= " + z(bound), z(a));
    }
  }
  return v;
}

Verdict verify_sign_certificate(const CertTable& table, std::uint64_t q_max) {
  if (q_max < 1) throw std::invalid_argument("q_max must be at least 1");
  if (table.n_max < q_max + 1) throw std::invalid_argument("certificate table must reach n = q_max + 1");
  Verdict v{"X_{q+1}(q) < 0 < Y_{q+1}(q)"};
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const mpz_class t = q;
    const auto sq = static_cast<std::int64_t>(q);
    const mpz_class x = table.X[q + 1].evaluate(t);
    const mpz_class y = table.Y[q + 1].evaluate(t);
    mpz_class product = 1;
    for (std::uint64_t i = 1; i <= q + 1; ++i) {
      mpz_class f = t + 2 - i;
      product *= f * f;
    }
    v.record(sgn(x) < 0, sq, 0, "X_{q+1}(q) < 0", z(x));
    v.record(sgn(y) > 0, sq, 1, "Y_{q+1}(q) > 0", z(y));
    v.record(y == product, sq, 2, z(product), z(y));
    // X_{q+1}(q) <= q^(2q+2) (q - a_{q+1,2q+2}) < 0.
    mpz_class tail = pow_ui(static_cast<unsigned long>(q), 2 * q + 2) * (t - table.a(q + 1, 2 * sq + 2));
    v.record(x <= tail && sgn(tail) < 0, sq, 3, ">= " + z(x), z(tail));
  }
  return v;
}

Verdict verify_sign_certificate(std::uint64_t q_max) { return verify_sign_certificate(build_xy(q_max + 1), q_max); }

Verdict verify_lemma34_chain(std::uint64_t q, const CertTable* table) {
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  Verdict v{"lemma 3.4 equivalence chain"};
  const auto sq = static_cast<std::int64_t>(q);
  const std::uint64_t big = 3 * q;

  // prefix[j + 1] = sum_{i<=j} C(3q, i)^2, prefix[0] = 0 (empty sum).
  std::vector<mpz_class> binom(q + 2);
  std::vector<mpz_class> prefix(q + 2);
  for (std::uint64_t i = 0; i <= q + 1; ++i) binom[i] = binomial(big, static_cast<std::int64_t>(i));
  prefix[0] = 0;
  for (std::uint64_t i = 0; i <= q; ++i) prefix[i + 1] = prefix[i] + binom[i] * binom[i];

  const mpz_class t = q;
  const mpz_class weight = 3 * t + 1;
  const bool goal = weight * prefix[q + 1] > (t + 1) * binom[q + 1] * binom[q + 1];
  v.record(goal, sq, -1, "final goal holds", goal ? "true" : "false");

  mpz_class x = t + 1;
  mpz_class y = 1;
  for (std::uint64_t k = 0; k <= q + 1; ++k) {
    const auto sk = static_cast<std::int64_t>(k);
    if (table != nullptr && k <= table->n_max) {
      mpz_class tx = table->X[k].evaluate(t);
      mpz_class ty = table->Y[k].evaluate(t);
      v.record(tx == x && ty == y, sq, sk, z(tx) + "/" + z(ty), z(x) + "/" + z(y));
    }
    // (3q+1) sum_{i<=q-k} C^2 > X_k(q)/Y_k(q) C(3q, q+1-k)^2, with Y_k(q) > 0.
    v.record(sgn(y) > 0, sq, sk, "Y_k(q) > 0", z(y));
    const mpz_class& c = binom[q + 1 - k];
    const bool link = weight * prefix[q + 1 - k] * y > x * c * c;
    v.record(link == goal, sq, sk, goal ? "true" : "false", link ? "true" : "false");
    if (k == q + 1) {
      v.record(prefix[0] == 0 && c == 1, sq, sk, "empty sum and C(3q,0) = 1 at k = q+1", z(c));
      v.record((sgn(x) < 0) == link, sq, sk, "0 > X_{q+1}(q)/Y_{q+1}(q)", z(x));
    }
    // Advance to k + 1.
    mpz_class shift = t + 1 - k;
    y *= shift * shift;
    mpz_class mult = 2 * t + k;
    x = mult * mult * x - weight * y;
  }
  return v;
}

Verdict verify_lemma34_chain_upto(std::uint64_t q_max, const CertTable* table) {
  Verdict v{"lemma 3.4 equivalence chain"};
  for (std::uint64_t q = 1; q <= q_max; ++q) v.merge(verify_lemma34_chain(q, table));
  return v;
}

Verdict verify_lemma32(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  Verdict v{"(3r-2) sum_{i<j} C(m,i)^2 < r C(m,j)^2"};
  const std::uint64_t r = (m + 2) / 3;
  const auto sm = static_cast<std::int64_t>(m);
  const mpz_class coef = 3 * mpz_class(r) - 2;

  mpz_class binom = 1;  // C(m, j)
  mpz_class prefix = 0; // sum_{i<j} C(m, i)^2
  mpz_class prefix_before_r;
  for (std::uint64_t j = 1; j <= r; ++j) {
    prefix += binom * binom;  // adds C(m, j-1)^2
    binom *= m - (j - 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j);
    mpz_class lhs = coef * prefix;
    mpz_class rhs = r * binom * binom;
    v.record(lhs < rhs, sm, static_cast<std::int64_t>(j), "< " + z(rhs), z(lhs));
  }

  // At j = r the inequality is equivalent to g_m(r-1) < g_m(r).
  const mpz_class& num_prev = prefix;             // sum_{i<=r-1}
  const mpz_class num_peak = prefix + binom * binom;  // sum_{i<=r}
  const mpz_class den_prev = binomial(2 * (r - 1), static_cast<std::int64_t>(r - 1));
  const mpz_class den_peak = binomial(2 * r, static_cast<std::int64_t>(r));
  const bool rises = num_prev * den_peak < num_peak * den_prev;
  const bool lemma_at_r = coef * prefix < r * binom * binom;
  v.record(rises && rises == lemma_at_r, sm, static_cast<std::int64_t>(r), "g_m(r-1) < g_m(r)",
           rises ? "true" : "false");
  return v;
}

Verdict verify_lemma32_upto(std::uint64_t m_max) {
  Verdict v{"(3r-2) sum_{i<j} C(m,i)^2 < r C(m,j)^2"};
  for (std::uint64_t m = 2; m <= m_max; ++m) v.merge(verify_lemma32(m));
  return v;
}

Verdict verify_final_goal(std::uint64_t q) {
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  Verdict v{"(3q+1) sum_{i<=q} C(m,i)^2 > (q+1) C(m,q+1)^2"};
  const auto sq = static_cast<std::int64_t>(q);
  const mpz_class weight = 3 * mpz_class(q) + 1;
  const mpz_class den_peak = binomial(2 * q, sq);
  const mpz_class den_next = binomial(2 * q + 2, sq + 1);

  // m = 3q is the goal itself; 3q-1 and 3q-2 are the descent variants.
  for (std::uint64_t m : {3 * q, 3 * q - 1, 3 * q - 2}) {
    const auto sm = static_cast<std::int64_t>(m);
    mpz_class sum = 0;
    for (std::uint64_t i = 0; i <= q; ++i) {
      mpz_class c = binomial(m, static_cast<std::int64_t>(i));
      sum += c * c;
    }
    const mpz_class next = binomial(m, sq + 1);
    const mpz_class lhs = weight * sum;
    const mpz_class rhs = (q + 1) * next * next;
    const bool holds = lhs > rhs;
    v.record(holds, sq, sm, "> " + z(rhs), z(lhs));

    if (m >= q + 1 && m >= 2) {
      // g_m(q) > g_m(q+1), decided directly.
      const mpz_class sum_next = sum + next * next;
      const bool falls = sum * den_next > sum_next * den_peak;
      v.record(falls && falls == holds, sq, sm, "g_m(q) > g_m(q+1)", falls ? "true" : "false");
    }
  }
  return v;
}

Verdict verify_final_goal_upto(std::uint64_t q_max) {
  Verdict v{"(3q+1) sum_{i<=q} C(m,i)^2 > (q+1) C(m,q+1)^2"};
  for (std::uint64_t q = 1; q <= q_max; ++q) v.merge(verify_final_goal(q));
  return v;
}

}  // namespace gpseq
