#include "zpdisc/characters.hpp"

#include <cmath>
#include <numbers>

#include "zpdisc/errors.hpp"

namespace zpdisc {

Complex root_of_unity(std::uint64_t numerator, std::uint64_t denominator) {
  const std::uint64_t r = numerator % denominator;
  if (r == 0) return {1.0, 0.0};
  // Fold into [0, 1/2] turns so the sine/cosine arguments stay small.
  const std::uint64_t folded = (2 * r > denominator) ? denominator - r : r;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(folded) /
                       static_cast<double>(denominator);
  const double s = std::sin(angle);
  return {std::cos(angle), folded == r ? s : -s};
}

Character::Character(Prime p, unsigned n, std::uint64_t m)
    : p_(p), n_(n), m_(m), order_(1) {
  if (n == 0) {
    if (m != 0) throw ParameterError("trivial character must have m = 0");
    return;
  }
  order_ = modulus(p, n);
  if (m == 0 || m >= order_ || m % p.value() == 0) {
    throw ParameterError("numerator " + std::to_string(m) +
                         " is not a unit below " + std::to_string(order_));
  }
}

Character Character::conjugate() const {
  if (is_trivial()) return *this;
  return Character(p_, n_, order_ - m_);
}

Complex Character::at_residue(std::uint64_t r) const {
  if (is_trivial()) return {1.0, 0.0};
  const auto phase =
      static_cast<unsigned __int128>(m_) * (r % order_) % order_;
  return root_of_unity(static_cast<std::uint64_t>(phase), order_);
}

Complex Character::at_residue_inverse(std::uint64_t r) const {
  return std::conj(at_residue(r));
}

std::string Character::to_string() const {
  return std::to_string(p_.value()) + "^" + std::to_string(n_) + ":" +
         std::to_string(m_);
}

Complex eval(const Character& zeta, const PadicApprox& x) {
  if (zeta.prime() != x.prime()) {
    throw ParameterError("character and element use different primes");
  }
  if (x.precision() < zeta.exponent()) {
    throw PrecisionError("character of order " + std::to_string(zeta.order()) +
                         " needs " + std::to_string(zeta.exponent()) +
                         " digits, value has " + std::to_string(x.precision()));
  }
  return zeta.at_residue(x.truncate(zeta.exponent()));
}

std::vector<Character> enumerate_nontrivial(Prime p, unsigned max_exponent) {
  if (max_exponent == 0) throw ParameterError("K must be at least 1");
  const auto total = checked_pow(p.value(), max_exponent, std::uint64_t{1} << 31);
  if (!total) {
    throw SizeError("p^K exceeds 2^31 characters");
  }
  std::vector<Character> out;
  out.reserve(*total - 1);
  std::uint64_t q = 1;
  for (unsigned n = 1; n <= max_exponent; ++n) {
    q *= p.value();
    for (std::uint64_t m = 1; m < q; ++m) {
      if (m % p.value() != 0) out.emplace_back(p, n, m);
    }
  }
  return out;
}

}  // namespace zpdisc
