#include "zpdisc/fourier.hpp"

#include <vector>

#include "zpdisc/errors.hpp"

namespace zpdisc {

Complex PhasedRational::value() const {
  if (is_zero()) return {0.0, 0.0};
  return to_double(scale) * root_of_unity(phase_numerator, phase_denominator);
}

PhasedRational disc_fourier_coeff(const Disc& disc, const Character& zeta) {
  if (disc.p != zeta.prime()) {
    throw ParameterError("disc and character use different primes");
  }
  if (zeta.exponent() > disc.depth) return {Rational(0), 0, 1};
  const std::uint64_t q = zeta.order();
  const auto phase = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(zeta.numerator()) * (disc.center % q) % q);
  return {disc.measure(), phase == 0 ? 0 : q - phase, q};
}

namespace {

Complex pairwise_sum(const std::function<Complex(std::uint64_t)>& g,
                     std::uint64_t lo, std::uint64_t hi) {
  if (hi - lo <= 16) {
    Complex s{0.0, 0.0};
    for (auto r = lo; r < hi; ++r) s += g(r);
    return s;
  }
  const auto mid = lo + (hi - lo) / 2;
  return pairwise_sum(g, lo, mid) + pairwise_sum(g, mid, hi);
}

}  // namespace

Complex haar_integrate(const std::function<Complex(std::uint64_t)>& g, Prime p,
                       unsigned depth) {
  if (depth == 0) throw ParameterError("depth must be at least 1");
  const auto cells = checked_pow(p.value(), depth, std::uint64_t{1} << 32);
  if (!cells) throw SizeError("p^d exceeds 2^32 residues");
  return pairwise_sum(g, 0, *cells) / static_cast<double>(*cells);
}

Rational radial_integral(unsigned k, const Character& omega) {
  if (k == 0) throw DomainError("radius must satisfy R < 1");
  const std::uint64_t p = omega.prime().value();
  if (omega.exponent() <= k) {
    const Rational r = inverse_pow(p, k);
    return Rational(p, p + 1) * r * r;
  }
  const Rational inv = inverse_pow(p, omega.exponent());
  return -Rational(p * p, p + 1) * inv * inv;
}

Rational radial_integral_bound(unsigned k, const Character& omega) {
  const std::uint64_t p = omega.prime().value();
  const unsigned e = std::max(k, omega.exponent());
  const Rational inv = inverse_pow(p, e);
  return Rational(p) * inv * inv;
}

RadialSquareSum radial_sq_sum(unsigned k, Prime prime) {
  if (k == 0) throw DomainError("radius must satisfy R < 1");
  const std::uint64_t p = prime.value();
  const Rational r3 = inverse_pow(p, 3 * k);
  const Rational inner = Rational(p * p, (p + 1) * (p + 1));
  // p^k characters of order <= p^k, each contributing (p R^2/(p+1))^2.
  const Rational low = inner * r3;
  // Orders p^l, l > k: (p^l - p^{l-1}) characters, each p^4 / ((p+1)^2 p^{4l}).
  //   sum = p^4/(p+1)^2 * (1 - 1/p) * p^{-3(k+1)} / (1 - p^{-3})
  const Rational high = inner * Rational(p * p) * (1 - Rational(1, p)) *
                        inverse_pow(p, 3 * (k + 1)) /
                        (1 - Rational(1, p * p * p));
  return {low + high, 2 * Rational(p * p) * r3};
}

}  // namespace zpdisc
