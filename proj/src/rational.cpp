#include "gpseq/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gpseq {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_digits(std::string_view s) {
  return mpz_class(std::string(s), 10);
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    mpz_class d = parse_digits(den);
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    result = mpq_class(parse_digits(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    // "1." and ".5" are accepted, "." is not.
    if (whole.empty() && frac.empty()) malformed(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) malformed(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = whole.empty() ? mpz_class(0) : parse_digits(whole);
    mpz_class f = frac.empty() ? mpz_class(0) : parse_digits(frac);
    result = mpq_class(w * scale + f, scale);
  } else {
    if (!all_digits(body)) malformed(text);
    result = mpq_class(parse_digits(body));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const mpq_class& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_fraction_string(const mpq_class& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const mpz_class& value) { return value.get_str(); }

}  // namespace gpseq
