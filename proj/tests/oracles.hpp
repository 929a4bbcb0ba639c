#pragma once

// Brute-force references used only by the tests. Nothing here calls the
// optimized paths it is compared against.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "zpdisc/padic.hpp"
#include "zpdisc/rational.hpp"

namespace zpdisc::oracle {

inline std::uint64_t ipow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= p;
  return r;
}

inline std::vector<std::uint64_t> residues(const std::vector<PadicApprox>& seq) {
  std::vector<std::uint64_t> out;
  for (const auto& x : seq) out.push_back(x.residue());
  return out;
}

/// sup over every disc of depth 0..K (all centers enumerated) together with
/// the depth-limit term (max multiplicity)/N.
inline Rational brute_discrepancy(const std::vector<std::uint64_t>& values,
                                  std::uint64_t p, unsigned precision) {
  const auto n = static_cast<long long>(values.size());
  Rational best = 0;
  for (unsigned k = 0; k <= precision; ++k) {
    const std::uint64_t q = ipow(p, k);
    for (std::uint64_t a = 0; a < q; ++a) {
      long long hits = 0;
      for (auto v : values) hits += (v % q == a);
      const Rational dev = abs(Rational(hits, n) - Rational(1, q));
      if (dev > best) best = dev;
    }
  }
  long long mult = 0;
  for (auto v : values) {
    long long c = 0;
    for (auto w : values) c += (v == w);
    mult = std::max(mult, c);
  }
  const Rational limit(mult, n);
  return limit > best ? limit : best;
}

/// ||f||^2 as a double Riemann sum: for |y| = p^-j the x-integral is an
/// average over every residue mod p^j (depth <= full_depth), and deeper
/// levels (to depth `levels`) sum over distinct points plus empty discs.
inline double brute_l2(const std::vector<std::uint64_t>& values, std::uint64_t p,
                       unsigned precision, unsigned full_depth, unsigned levels) {
  const double n = static_cast<double>(values.size());
  const double pd = static_cast<double>(p);
  double total = 0.0;
  for (unsigned j = 0; j <= levels; ++j) {
    const double measure = std::pow(pd, -static_cast<double>(j));
    const double shell = (1.0 - 1.0 / pd) * measure;
    double x_integral = 0.0;
    if (j <= full_depth) {
      const std::uint64_t q = ipow(p, j);
      for (std::uint64_t x = 0; x < q; ++x) {
        double hits = 0;
        for (auto v : values) hits += (v % q == x);
        const double f = hits / n - measure;
        x_integral += f * f * measure;
      }
    } else {
      // Discs of depth j >= K contain exactly the copies of one value.
      const unsigned depth = std::min(j, precision);
      const std::uint64_t q = ipow(p, depth);
      std::vector<std::uint64_t> seen;
      for (auto v : values) {
        const auto c = v % q;
        bool dup = false;
        for (auto s : seen) dup = dup || s == c;
        if (dup) continue;
        seen.push_back(c);
        double hits = 0;
        for (auto w : values) hits += (w % q == c);
        const double f = hits / n - measure;
        x_integral += f * f * measure;
      }
      const double empty = std::pow(pd, j) - static_cast<double>(seen.size());
      x_integral += empty * measure * measure * measure;
    }
    total += shell * x_integral;
  }
  return total;
}

/// (1/N) sum exp(2 pi i m v / p^n) straight from residues.
inline std::complex<double> brute_weyl(const std::vector<std::uint64_t>& values,
                                       std::uint64_t p, unsigned n,
                                       std::uint64_t m) {
  const std::uint64_t q = ipow(p, n);
  std::complex<double> s{0.0, 0.0};
  for (auto v : values) {
    const double t = 2.0 * std::numbers::pi *
                     static_cast<double>((m * (v % q)) % q) /
                     static_cast<double>(q);
    s += std::complex<double>(std::cos(t), std::sin(t));
  }
  return s / static_cast<double>(values.size());
}

}  // namespace zpdisc::oracle
