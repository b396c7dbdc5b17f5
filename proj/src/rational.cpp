#include "simulgame/rational.hpp"

#include <cctype>
#include <string>

#include "simulgame/error.hpp"

namespace simulgame {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw Error(ErrorCode::BadLiteral, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::BadLiteral, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  mpz_class whole = scaled.get_num() / scaled.get_den();
  Rational frac = scaled - Rational(whole);
  int cmp = ::cmp(frac, Rational(1, 2));
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(whole.get_mpz_t()))) whole += 1;

  std::string s = whole.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sgn(q) < 0 && whole != 0) s.insert(0, "-");
  return s;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace simulgame
