#include "plength/rational.hpp"

#include <stdexcept>

namespace plength {

BigInt rational_floor(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);  // always > 0
  BigInt quo = n / d;                                // truncates toward zero
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

BigInt rational_ceil(const Rational& q) { return -rational_floor(-q); }

BigInt isqrt_ceil(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt_ceil: negative argument");
  BigInt r = boost::multiprecision::sqrt(n);  // floor square root
  if (r * r < n) ++r;
  return r;
}

Rational sqrt_upper_bound(const Rational& q) {
  if (q < 0) throw std::invalid_argument("sqrt_upper_bound: negative argument");
  BigInt p = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  return Rational(isqrt_ceil(p * d), d);
}

Rational rational_pow(const Rational& q, long long e) {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long long k = invert ? -static_cast<unsigned long long>(e) : e;
  if (invert && q == 0) throw std::invalid_argument("rational_pow: 0 to negative power");
  Rational base = q;
  Rational acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return invert ? Rational(1) / acc : acc;
}

std::string fraction_string(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::string decimal_string(const Rational& q, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("decimal_string: digits < 1");
  if (q == 0) return "0";
  bool negative = q < 0;
  BigInt p = boost::multiprecision::abs(boost::multiprecision::numerator(q));
  BigInt d = boost::multiprecision::denominator(q);

  // Decimal exponent e with 10^e <= p/d < 10^(e+1).
  long long e = static_cast<long long>(p.str().size()) - static_cast<long long>(d.str().size());
  auto pow10 = [](long long k) {
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) r *= 10;
    return r;
  };
  auto cmp_pow = [&](long long k) {
    // sign of p/d - 10^k
    BigInt lhs = p, rhs = d;
    if (k >= 0) rhs *= pow10(k); else lhs *= pow10(-k);
    return lhs.compare(rhs);
  };
  while (cmp_pow(e) < 0) --e;
  while (cmp_pow(e + 1) >= 0) ++e;

  // Round p/d * 10^(digits-1-e) to the nearest integer, half away from zero.
  long long shift = significant_digits - 1 - e;
  BigInt num = p, den = d;
  if (shift >= 0) num *= pow10(shift); else den *= pow10(-shift);
  BigInt m = (2 * num + den) / (2 * den);
  BigInt bound = pow10(significant_digits);
  if (m >= bound) {  // rounding carried into one more digit
    m /= 10;
    ++e;
  }

  std::string digits = m.str();
  std::string out;
  if (e >= significant_digits - 1) {
    out = digits + std::string(static_cast<size_t>(e - significant_digits + 1), '0');
  } else if (e >= 0) {
    out = digits.substr(0, static_cast<size_t>(e + 1)) + "." + digits.substr(static_cast<size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
  }
  return negative ? "-" + out : out;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  }
}

}  // namespace plength
