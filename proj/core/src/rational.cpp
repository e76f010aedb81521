#include "sn/rational.hpp"

#include <cctype>

#include "sn/errors.hpp"

namespace sn {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw DomainError("bad-rational", "malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw DomainError("bad-rational", "zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str(10);
  return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (is_zero(r)) throw DomainError("division-by-zero", "negative power of zero");
    Rational inv = 1 / r;
    return pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace sn
