#pragma once

// Finite-precision p-adic integers.
//
// A PadicApprox holds the first K base-p digits of an element of Z_p, i.e. its
// residue mod p^K. Precision is fixed per value and mixed-precision
// arithmetic is rejected. p is capped at 2^16 and p^K at 2^62 so residues and
// digit products stay inside 64-bit (128-bit for products) arithmetic.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zpdisc/rational.hpp"

namespace zpdisc {

inline constexpr std::uint32_t kMaxPrime = 1U << 16;
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

class Prime {
 public:
  /// Throws ParameterError unless 2 <= p <= 2^16 and p is prime.
  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }
  operator std::uint32_t() const noexcept { return p_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

/// p^k, or nullopt when it exceeds `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned k,
                                         std::uint64_t limit = kMaxModulus);

/// p^k; throws PrecisionError when it exceeds 2^62.
std::uint64_t modulus(Prime p, unsigned k);

/// Largest k with p^k <= 2^62.
unsigned max_precision(Prime p);

/// p-adic absolute value at finite precision: p^{-exponent}, or "<= p^{-K}"
/// when all K digits are zero.
struct PadicAbs {
  Prime p;
  unsigned exponent = 0;
  bool below_resolution = false;

  /// Exact value; nullopt for the below-resolution marker.
  std::optional<Rational> value() const;
  std::string to_string() const;

  friend bool operator==(const PadicAbs&, const PadicAbs&) = default;
};

class PadicApprox {
 public:
  /// Digits are little-endian; every digit must lie in [0, p).
  PadicApprox(Prime p, std::vector<std::uint32_t> digits);

  /// v mod p^K (negative v reduced into [0, p^K)).
  static PadicApprox from_integer(std::int64_t v, Prime p, unsigned precision);
  /// `residue` must already lie in [0, p^K).
  static PadicApprox from_residue(std::uint64_t residue, Prime p,
                                  unsigned precision);

  Prime prime() const noexcept { return p_; }
  unsigned precision() const noexcept {
    return static_cast<unsigned>(digits_.size());
  }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }

  /// a_0 + a_1 p + ... + a_{n-1} p^{n-1}. Throws PrecisionError if n > K.
  std::uint64_t truncate(unsigned n) const;
  std::uint64_t residue() const { return truncate(precision()); }

  bool is_unit() const noexcept { return digits_.front() != 0; }
  /// Index of the first nonzero digit; nullopt if all digits are zero.
  std::optional<unsigned> valuation() const noexcept;
  PadicAbs abs() const;

  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;

 private:
  Prime p_;
  std::vector<std::uint32_t> digits_;
};

PadicApprox add(const PadicApprox& x, const PadicApprox& y);
PadicApprox negate(const PadicApprox& x);
PadicApprox mul(const PadicApprox& x, const PadicApprox& y);

inline PadicApprox operator+(const PadicApprox& x, const PadicApprox& y) {
  return add(x, y);
}
inline PadicApprox operator*(const PadicApprox& x, const PadicApprox& y) {
  return mul(x, y);
}

inline bool is_unit(const PadicApprox& x) noexcept { return x.is_unit(); }
inline PadicAbs padic_abs(const PadicApprox& x) { return x.abs(); }
inline std::uint64_t truncate(const PadicApprox& x, unsigned n) {
  return x.truncate(n);
}

/// Throws ParameterError unless x and y share p and precision.
void require_compatible(const PadicApprox& x, const PadicApprox& y);

/// Throws ParameterError if `points` is empty or mixes p / precision.
void require_uniform(std::span<const PadicApprox> points);

}  // namespace zpdisc
