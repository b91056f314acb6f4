#include "dioph/rational.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!valid_integer_text(s)) {
    throw ParseError("not a rational: '" + std::string(whole) + "'");
  }
  std::string text(s[0] == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, text));
  Integer num = parse_integer(std::string_view(s).substr(0, slash), text);
  Integer den = parse_integer(std::string_view(s).substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_exact(const Rational& value) {
  return to_string(value) + " (" + format_decimal(value.get_d()) + ")";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer binomial(unsigned long top, unsigned long bottom) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), top, bottom);
  return r;
}

unsigned long p_adic_order(const Integer& value, const Integer& prime) {
  if (value == 0) throw InvalidArgument("p-adic order of zero");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t());
}

long p_adic_order(const Rational& value, const Integer& prime) {
  if (value == 0) throw InvalidArgument("p-adic order of zero");
  return static_cast<long>(p_adic_order(value.get_num(), prime)) -
         static_cast<long>(p_adic_order(value.get_den(), prime));
}

std::vector<Integer> prime_factors(Integer value) {
  value = abs(value);
  if (value == 0) throw InvalidArgument("prime factors of zero");
  std::vector<Integer> out;
  Integer rest;
  for (Integer d = 2; d * d <= value; ++d) {
    if (mpz_divisible_p(value.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      mpz_remove(value.get_mpz_t(), value.get_mpz_t(), d.get_mpz_t());
    }
  }
  if (value > 1) out.push_back(value);
  return out;
}

bool is_prime(const Integer& value) {
  return value >= 2 && mpz_probab_prime_p(value.get_mpz_t(), 40) > 0;
}

}  // namespace dioph
