#include "zpdisc/rational.hpp"

#include <cstdio>

#include "zpdisc/errors.hpp"

namespace zpdisc {

BigInt big_pow(std::uint64_t base, unsigned exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Rational inverse_pow(std::uint64_t base, unsigned exponent) {
  return Rational(BigInt(1), big_pow(base, exponent));
}

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_decimal_string(const Rational& r, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, to_double(r));
  return buf;
}

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParameterError("zero denominator in '" + text + "'");
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParameterError*>(&e) != nullptr) throw;
    throw ParameterError("not a fraction: '" + text + "'");
  }
}

}  // namespace zpdisc
