#pragma once

// Certificate polynomials for the right-hand peak inequality of the l = 2,
// a = 1 sequence, and exact checkers for every identity and inequality the
// argument rests on.
//
//   X_0 = t + 1,  Y_0 = 1,
//   Y_{n+1} = (t + 1 - n)^2 Y_n,
//   X_{n+1} = (2t + n)^2 X_n - (3t + 1) Y_{n+1},
//
// with X_n = t^(2n+1) - sum_j a_{n,j} t^j and Y_n = sum_j b_{n,j} t^j.
// The coefficient tables are built twice, once by polynomial algebra and once
// by the scalar a/b recurrences, and the two must agree.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpseq {

/// Dense integer polynomial, coeffs[i] is the coefficient of t^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Zero outside [0, degree].
  mpz_class coeff(std::int64_t i) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  mpz_class evaluate(const mpz_class& t) const;

  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  /// Coefficients from the leading one down to the constant term, space separated.
  std::string dump() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Raised when the two construction routes disagree.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CertTable {
  std::uint64_t n_max = 0;
  std::vector<IntPoly> X;
  std::vector<IntPoly> Y;
  // a_rows[n][j] = a_{n,j}, 0 <= j <= 2n.
  std::vector<std::vector<mpz_class>> a_rows;
  // b_rows[n][j + 2] = b_{n,j}, -2 <= j <= 2n; the two leading slots are the
  // zero conventions b_{n,-2} = b_{n,-1} = 0.
  std::vector<std::vector<mpz_class>> b_rows;

  const mpz_class& a(std::uint64_t n, std::int64_t j) const;
  const mpz_class& b(std::uint64_t n, std::int64_t j) const;
};

/// Throws CertificateError when polynomial extraction and the coefficient
/// recurrences disagree anywhere.
CertTable build_xy(std::uint64_t n_max);

/// "X_n: c_{2n+1} ... c_0" and "Y_n: c_{2n} ... c_0", one line each, n ascending.
std::string dump_polynomials(const CertTable& table);

struct CheckFailure {
  std::int64_t n = 0;
  std::int64_t j = 0;
  std::string expected;
  std::string actual;
};

struct Verdict {
  explicit Verdict(std::string name_ = {}) : name(std::move(name_)) {}

  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::optional<CheckFailure> first_failure;

  void record(bool ok, std::int64_t n, std::int64_t j, const std::string& expected, const std::string& actual);
  void merge(const Verdict& other);
};

/// The six closed forms for b_{n,*} and the four for a_{n,*}, one verdict each.
/// Requires table.n_max >= 2.
std::vector<Verdict> verify_closed_forms(const CertTable& table);

/// a_{n,j} >= |b_{n,j-2}| + 2n |b_{n,j-1}| + n^2 |b_{n,j}| and a_{n,j} >= 0 for
/// 2 <= n <= n_max, 0 <= j <= 2n.
Verdict verify_lemma37(const CertTable& table);

/// X_{q+1}(q) < 0 < Y_{q+1}(q) for q = 1..q_max, with Y in product form as a
/// cross-check. Requires table.n_max >= q_max + 1.
Verdict verify_sign_certificate(const CertTable& table, std::uint64_t q_max);
Verdict verify_sign_certificate(std::uint64_t q_max);

/// The k-indexed equivalence chain for k = 0..q+1. When a table is supplied,
/// X_k(q), Y_k(q) from the pointwise recurrence are also compared with the
/// table polynomials for k <= table->n_max.
Verdict verify_lemma34_chain(std::uint64_t q, const CertTable* table = nullptr);
Verdict verify_lemma34_chain_upto(std::uint64_t q_max, const CertTable* table = nullptr);

/// (3r-2) sum_{i<j} C(m,i)^2 < r C(m,j)^2 for 1 <= j <= r = floor((m+2)/3),
/// plus the left-peak inequality g_m(r-1) < g_m(r).
Verdict verify_lemma32(std::uint64_t m);
Verdict verify_lemma32_upto(std::uint64_t m_max);

/// (3q+1) sum_{i<=q} C(m,i)^2 > (q+1) C(m,q+1)^2 for m = 3q, 3q-1, 3q-2, and
/// the matching right-peak inequality g_m(q) > g_m(q+1).
Verdict verify_final_goal(std::uint64_t q);
Verdict verify_final_goal_upto(std::uint64_t q_max);

}  // namespace gpseq
