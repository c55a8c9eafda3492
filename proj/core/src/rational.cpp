#include "cachelab/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace cachelab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(body)) bad(text);
    value = Rational(Integer(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  const Integer& num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer floor_integer(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil_integer(const Rational& value) {
  return -floor_integer(Rational(-value));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

Rational harmonic(std::int64_t n) {
  Rational sum = 0;
  for (std::int64_t i = 1; i <= n; ++i) sum += Rational(1, i);
  return sum;
}

const Rational& euler_e() {
  static const Rational e = [] {
    Rational sum = 0;
    Integer fact = 1;
    for (int i = 0; i <= 20; ++i) {
      if (i > 0) fact *= i;
      sum += Rational(Integer(1), fact);
    }
    return sum;
  }();
  return e;
}

const Rational& e_over_e_minus_one() {
  static const Rational r = euler_e() / (euler_e() - 1);
  return r;
}

}  // namespace cachelab
