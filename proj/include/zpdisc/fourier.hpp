#pragma once

// Closed-form Fourier quantities on Z_p and the Haar-measure oracle that
// certifies them.

#include <complex>
#include <cstdint>
#include <functional>

#include "zpdisc/characters.hpp"
#include "zpdisc/discrepancy.hpp"
#include "zpdisc/rational.hpp"

namespace zpdisc {

/// scale * e^{2 pi i phase_numerator / phase_denominator}, exact up to the
/// final conversion. A zero scale is an exact zero.
struct PhasedRational {
  Rational scale;
  std::uint64_t phase_numerator = 0;
  std::uint64_t phase_denominator = 1;

  bool is_zero() const { return scale == 0; }
  Complex value() const;
};

/// Fourier coefficient of the indicator of `disc` at zeta:
/// zeta^{-a} p^{-k} when ||zeta|| <= p^k, exactly 0 otherwise.
PhasedRational disc_fourier_coeff(const Disc& disc, const Character& zeta);

/// Integral against normalized Haar measure of a function constant on discs
/// of depth d: p^{-d} * sum over residues r mod p^d of g(r).
/// Summation is pairwise in residue order, so results are reproducible.
Complex haar_integrate(const std::function<Complex(std::uint64_t)>& g, Prime p,
                       unsigned depth);

/// Integral over |y| <= p^{-k} of |y| omega^{-y}. Requires k >= 1.
///   p R^2 / (p+1)             if ||omega|| <= 1/R
///   -p^2 / ((p+1) ||omega||^2) otherwise
Rational radial_integral(unsigned k, const Character& omega);

/// |radial_integral(k, omega)| <= p / max(1/R, ||omega||)^2.
Rational radial_integral_bound(unsigned k, const Character& omega);

struct RadialSquareSum {
  Rational value;  // sum over all omega of radial_integral(k, omega)^2
  Rational bound;  // 2 p^2 R^3
};

/// Requires k >= 1. The sum runs over the whole Pruefer group: the p^k
/// characters with ||omega|| <= p^k, plus a geometric series over higher
/// orders.
RadialSquareSum radial_sq_sum(unsigned k, Prime p);

}  // namespace zpdisc
