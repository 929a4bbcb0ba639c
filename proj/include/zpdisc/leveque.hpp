#pragma once

// Weyl sums and the LeVeque-type discrepancy bound on Z_p:
//
//   D_N <= C(p) * ( sum_{zeta != 1} ||zeta||^{-3} |W(zeta)|^2 )^{1/4},
//   W(zeta) = (1/N) sum_{n=1}^{N} zeta^{alpha_n},
//
// with C(p) = (C1 * C2)^{1/4}, C1 = p^9/(p-1)^3 (L^2 lower bound) and
// C2 = 2p^2 (Parseval upper bound). The character sum is truncated at
// ||zeta|| <= p^K and the rest is covered by the worst case |W| = 1.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zpdisc/characters.hpp"
#include "zpdisc/discrepancy.hpp"
#include "zpdisc/padic.hpp"
#include "zpdisc/rational.hpp"

namespace zpdisc {

/// (1/N) sum_n zeta^{alpha_n}.
Complex weyl_sum(std::span<const PadicApprox> seq, const Character& zeta);

struct WeylEntry {
  Character zeta;
  Complex value;
};

class WeylTable {
 public:
  WeylTable(Prime p, unsigned max_exponent, std::vector<WeylEntry> entries)
      : p_(p), max_exponent_(max_exponent), entries_(std::move(entries)) {}

  Prime prime() const noexcept { return p_; }
  unsigned max_exponent() const noexcept { return max_exponent_; }
  /// Canonical order: ascending exponent, then numerator.
  const std::vector<WeylEntry>& entries() const noexcept { return entries_; }

  /// Throws ParameterError for characters outside the table.
  Complex at(const Character& zeta) const;

 private:
  Prime p_;
  unsigned max_exponent_;
  std::vector<WeylEntry> entries_;
};

enum class WeylMethod {
  automatic,
  direct,     // per-level sparse histograms, one exponential per (zeta, disc)
  transform,  // one radix-p DFT of the depth-K histogram
};

inline constexpr std::uint64_t kMaxWeylTableSize = std::uint64_t{1} << 26;

/// Weyl sums for every nontrivial character with ||zeta|| <= p^k_trunc.
/// Throws SizeError if p^k_trunc > 2^26, PrecisionError if k_trunc > K.
WeylTable weyl_table(std::span<const PadicApprox> seq, unsigned k_trunc,
                     WeylMethod method = WeylMethod::automatic);

/// In-place DFT X[m] = sum_r x[r] e^{+2 pi i m r / p^k} of length p^k.
void radix_p_dft(std::vector<Complex>& data, Prime p, unsigned k);

/// (2 p^11 / (p-1)^3)^{1/4}.
double leveque_constant(Prime p);

/// sum_{k > k_trunc} (p^k - p^{k-1}) p^{-3k} = p^{-2 k_trunc} / (p (p+1)).
Rational tail_bound(Prime p, unsigned k_trunc);

struct BoundReport {
  Prime p;
  std::size_t count = 0;
  unsigned k_trunc = 0;
  double s_trunc = 0.0;
  Rational tail;
  double c_p = 0.0;
  double bound = 0.0;
};

/// sum_{zeta in table} ||zeta||^{-3} |W(zeta)|^2, accumulated in table order.
double truncated_leveque_sum(const WeylTable& table);

BoundReport discrepancy_bound(std::span<const PadicApprox> seq,
                              unsigned k_trunc);

struct LinearWeylSum {
  Complex value;      // (1/N) sum_{n=1}^N zeta^{n a + b}, geometric-sum form
  double sine_bound;  // 1 / (N |sin(pi m a_k / p^k)|)
};

/// Throws DegenerateRatioError when zeta^a = 1 (then the sum is zeta^b).
LinearWeylSum linear_weyl_closed_form(const PadicApprox& a,
                                      const PadicApprox& b,
                                      const Character& zeta, std::size_t count);

/// For non-unit a, a character of order p^v with p^v | a (v >= 1), on which
/// every Weyl sum of n a + b has modulus 1. nullopt when a is a unit.
std::optional<Character> weyl_obstruction(const PadicApprox& a);

/// sum over 1 <= m < p^k, p not dividing m, of sin^{-2}(pi m a_k / p^k).
double linear_sine_sum(Prime p, unsigned k, std::uint64_t a_k);

/// sum over 1 <= l <= p^k / 2 of sin^{-2}(pi l / p^k).
double half_range_sine_sum(Prime p, unsigned k);

/// c^4 = sum_{k=1}^{k_trunc} p^{-3k} * 2 * half_range_sine_sum(p, k), so that
/// for a unit a the truncated sum satisfies S_trunc <= c^4 / N^2.
double linear_sequence_constant(Prime p, unsigned k_trunc);

struct SandwichRecord {
  Rational discrepancy;
  Rational l2_norm_sq;
  double s_trunc = 0.0;
  Rational tail;
  Rational lower_rhs;   // p^9/(p-1)^3 * ||f||^2
  double upper_rhs = 0; // 2 p^2 (S_trunc + tail)
  bool lower_holds = false;  // D^4 <= lower_rhs, exact
  bool upper_holds = false;  // ||f||^2 <= upper_rhs + 1e-9

  bool holds() const noexcept { return lower_holds && upper_holds; }
};

inline constexpr double kSandwichSlack = 1e-9;

/// Evaluates both halves of the L^2 sandwich at k_trunc = K.
SandwichRecord check_sandwich(std::span<const PadicApprox> seq);

}  // namespace zpdisc
