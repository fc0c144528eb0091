#include "cutlab/rational.hpp"

#include <cctype>
#include <sstream>

#include "cutlab/errors.hpp"

namespace cutlab {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool is_plain_integer(std::string_view s) {
  size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error("empty rational literal");

  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_plain_integer(num) || !is_plain_integer(den))
      throw Error("malformed rational literal '" + s + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw Error("rational literal with zero denominator '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }

  // decimal / scientific: mantissa [.fraction] [eE exponent]
  long exp10 = 0;
  std::string mant = s;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string es = s.substr(e + 1);
    if (!is_plain_integer(es)) throw Error("malformed exponent in '" + s + "'");
    exp10 = std::stol(es);
    mant = s.substr(0, e);
  }
  std::string digits = mant;
  if (auto dot = mant.find('.'); dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty() || digits == "+" || digits == "-") throw Error("malformed number '" + s + "'");
  if (!is_plain_integer(digits)) throw Error("malformed number '" + s + "'");
  mpz_class n(digits, 10);
  mpq_class q(n);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    q *= mpq_class(pow10);
  else
    q /= mpq_class(pow10);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal_str(int significant_digits) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  out.precision(significant_digits);
  out << to_double();
  return out.str();
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational acc;
  const size_t n = a.size() < b.size() ? a.size() : b.size();
  for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace cutlab
