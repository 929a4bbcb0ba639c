#pragma once

// Characters of Z_p, identified with the Pruefer group Z(p^inf).
//
// The character of order p^n with numerator m sends x to
// exp(2 pi i m (x mod p^n) / p^n). It is stored as the exact pair (n, m);
// complex values only appear on evaluation.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zpdisc/padic.hpp"

namespace zpdisc {

using Complex = std::complex<double>;

/// e^{2 pi i numerator / denominator}, with the phase reduced exactly first.
Complex root_of_unity(std::uint64_t numerator, std::uint64_t denominator);

class Character {
 public:
  /// Requires n = 0, m = 0 (trivial) or n >= 1, 1 <= m < p^n, gcd(m, p) = 1.
  Character(Prime p, unsigned n, std::uint64_t m);

  static Character trivial(Prime p) { return Character(p, 0, 0); }

  Prime prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return n_; }
  std::uint64_t numerator() const noexcept { return m_; }
  /// ||zeta|| = p^n.
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return n_ == 0; }

  Character conjugate() const;

  /// zeta^r for an ordinary integer r (only r mod p^n matters).
  Complex at_residue(std::uint64_t r) const;
  /// zeta^{-r}.
  Complex at_residue_inverse(std::uint64_t r) const;

  /// "p^n:m", e.g. "2^3:5".
  std::string to_string() const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  Prime p_;
  unsigned n_;
  std::uint64_t m_;
  std::uint64_t order_;
};

/// zeta^x; throws PrecisionError when x carries fewer than n digits.
Complex eval(const Character& zeta, const PadicApprox& x);

inline std::uint64_t order(const Character& zeta) noexcept {
  return zeta.order();
}

/// Every character with 1 < ||zeta|| <= p^K, ascending in n then m.
/// Throws SizeError when p^K > 2^31.
std::vector<Character> enumerate_nontrivial(Prime p, unsigned max_exponent);

}  // namespace zpdisc
