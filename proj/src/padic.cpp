#include "zpdisc/padic.hpp"

#include "zpdisc/errors.hpp"

namespace zpdisc {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime) {
    throw ParameterError("p = " + std::to_string(p) + " exceeds 2^16");
  }
  if (!is_prime(p)) {
    throw ParameterError("p = " + std::to_string(p) + " is not prime");
  }
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned k,
                                         std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > limit / p) return std::nullopt;
    r *= p;
  }
  return r;
}

std::uint64_t modulus(Prime p, unsigned k) {
  auto m = checked_pow(p.value(), k);
  if (!m) {
    throw PrecisionError(std::to_string(p.value()) + "^" + std::to_string(k) +
                         " exceeds the 2^62 residue range");
  }
  return *m;
}

unsigned max_precision(Prime p) {
  unsigned k = 0;
  while (checked_pow(p.value(), k + 1)) ++k;
  return k;
}

std::optional<Rational> PadicAbs::value() const {
  if (below_resolution) return std::nullopt;
  return inverse_pow(p.value(), exponent);
}

std::string PadicAbs::to_string() const {
  const std::string base =
      std::to_string(p.value()) + "^-" + std::to_string(exponent);
  return below_resolution ? "<= " + base : base;
}

PadicApprox::PadicApprox(Prime p, std::vector<std::uint32_t> digits)
    : p_(p), digits_(std::move(digits)) {
  if (digits_.empty()) throw ParameterError("precision must be at least 1");
  modulus(p_, precision());
  for (auto d : digits_) {
    if (d >= p_.value()) {
      throw ParameterError("digit " + std::to_string(d) + " out of range for p = " +
                           std::to_string(p_.value()));
    }
  }
}

PadicApprox PadicApprox::from_residue(std::uint64_t residue, Prime p,
                                      unsigned precision) {
  if (precision == 0) throw ParameterError("precision must be at least 1");
  if (residue >= modulus(p, precision)) {
    throw ParameterError("residue " + std::to_string(residue) +
                         " is not below p^K");
  }
  std::vector<std::uint32_t> digits(precision);
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(residue % p.value());
    residue /= p.value();
  }
  return PadicApprox(p, std::move(digits));
}

PadicApprox PadicApprox::from_integer(std::int64_t v, Prime p,
                                      unsigned precision) {
  if (precision == 0) throw ParameterError("precision must be at least 1");
  const auto m = static_cast<__int128>(modulus(p, precision));
  auto r = static_cast<__int128>(v) % m;
  if (r < 0) r += m;
  return from_residue(static_cast<std::uint64_t>(r), p, precision);
}

std::uint64_t PadicApprox::truncate(unsigned n) const {
  if (n > precision()) {
    throw PrecisionError("truncation to " + std::to_string(n) +
                         " digits exceeds precision " +
                         std::to_string(precision()));
  }
  std::uint64_t r = 0;
  for (unsigned i = n; i-- > 0;) r = r * p_.value() + digits_[i];
  return r;
}

std::optional<unsigned> PadicApprox::valuation() const noexcept {
  for (unsigned i = 0; i < precision(); ++i) {
    if (digits_[i] != 0) return i;
  }
  return std::nullopt;
}

PadicAbs PadicApprox::abs() const {
  if (auto v = valuation()) return PadicAbs{p_, *v, false};
  return PadicAbs{p_, precision(), true};
}

void require_compatible(const PadicApprox& x, const PadicApprox& y) {
  if (x.prime() != y.prime()) {
    throw ParameterError("mismatched primes " + std::to_string(x.prime().value()) +
                         " and " + std::to_string(y.prime().value()));
  }
  if (x.precision() != y.precision()) {
    throw ParameterError("mismatched precisions " +
                         std::to_string(x.precision()) + " and " +
                         std::to_string(y.precision()));
  }
}

void require_uniform(std::span<const PadicApprox> points) {
  if (points.empty()) throw ParameterError("sequence is empty");
  for (const auto& x : points.subspan(1)) require_compatible(points.front(), x);
}

PadicApprox add(const PadicApprox& x, const PadicApprox& y) {
  require_compatible(x, y);
  const std::uint32_t p = x.prime().value();
  std::vector<std::uint32_t> digits(x.precision());
  std::uint32_t carry = 0;
  for (unsigned i = 0; i < x.precision(); ++i) {
    const std::uint32_t s = x.digits()[i] + y.digits()[i] + carry;
    digits[i] = s % p;
    carry = s / p;
  }
  return PadicApprox(x.prime(), std::move(digits));
}

PadicApprox negate(const PadicApprox& x) {
  const auto m = modulus(x.prime(), x.precision());
  const auto r = x.residue();
  return PadicApprox::from_residue(r == 0 ? 0 : m - r, x.prime(), x.precision());
}

PadicApprox mul(const PadicApprox& x, const PadicApprox& y) {
  require_compatible(x, y);
  const auto m = modulus(x.prime(), x.precision());
  const auto prod = static_cast<unsigned __int128>(x.residue()) * y.residue();
  return PadicApprox::from_residue(static_cast<std::uint64_t>(prod % m),
                                   x.prime(), x.precision());
}

}  // namespace zpdisc
