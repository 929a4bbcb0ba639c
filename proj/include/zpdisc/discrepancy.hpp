#pragma once

// Exact discrepancy of a finite sequence in Z_p.
//
// Exactness convention: every point is the integer spelled by its K digits.
// Beyond depth K the disc around a point holds exactly the points equal to it,
// so the supremum over all depths is the maximum over depths 0..K together
// with the limit term (max multiplicity)/N, which is approached but never
// attained. Everything here is exact rational arithmetic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zpdisc/padic.hpp"
#include "zpdisc/rational.hpp"

namespace zpdisc {

/// D(center, p^{-depth}) = center + p^depth Z_p.
struct Disc {
  Prime p;
  unsigned depth = 0;
  std::uint64_t center = 0;

  /// Validates 0 <= center < p^depth.
  static Disc make(Prime p, unsigned depth, std::uint64_t center);

  Rational measure() const { return inverse_pow(p.value(), depth); }
  bool contains(const PadicApprox& x) const;
  std::string to_string() const;

  friend bool operator==(const Disc&, const Disc&) = default;
};

struct DiscrepancyReport {
  Rational value;
  /// nullopt when the supremum is the depth limit.
  std::optional<Disc> witness;
  Rational limit_term;
  Rational finite_max;
  std::size_t count = 0;
  unsigned precision = 0;
};

/// |{alpha_n in disc}|/N - p^{-k}. Throws PrecisionError if depth > K.
Rational local_discrepancy(std::span<const PadicApprox> seq, const Disc& disc);

DiscrepancyReport exact_discrepancy(std::span<const PadicApprox> seq);

/// Exact ||f||_2^2 over Z_p x Z_p, with the levels beyond K summed in closed
/// form.
Rational l2_norm_sq(std::span<const PadicApprox> seq);

/// Per-depth occupancy of a sequence, built from one sort of the digit
/// strings. Depth j runs over 0..K.
class DiscOccupancy {
 public:
  explicit DiscOccupancy(std::span<const PadicApprox> seq);

  Prime prime() const noexcept { return p_; }
  unsigned precision() const noexcept { return precision_; }
  std::size_t count() const noexcept { return count_; }

  /// Points per nonempty disc at depth j, ordered by the first j digits.
  std::vector<std::size_t> run_lengths(unsigned depth) const;
  /// Sum over discs of depth j of (points in disc)^2.
  std::uint64_t sum_squares(unsigned depth) const;
  /// Truncation to `depth` digits of the first point of every nonempty disc.
  std::vector<std::uint64_t> centers(unsigned depth) const;

 private:
  Prime p_;
  unsigned precision_;
  std::size_t count_;
  std::vector<std::size_t> order_;
  // lcp_[i] = digits shared by sorted points i-1 and i (lcp_[0] = 0).
  std::vector<unsigned> lcp_;
  std::vector<PadicApprox> sorted_;
};

}  // namespace zpdisc
