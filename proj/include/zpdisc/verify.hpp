#pragma once

// Brute-force verification suites. Each check compares a closed form or fast
// path against an independent evaluation (Haar sums over residues, direct
// character sums, numeric series) and reports pass/fail with enough context
// to reproduce a failure.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zpdisc/padic.hpp"

namespace zpdisc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Disc coefficients vs a depth-`oracle_depth` Haar sum, for every disc of
/// depth <= max_depth and every character of order <= p^max_depth.
CheckResult verify_charfun(Prime p, unsigned max_depth, unsigned oracle_depth,
                           double tol = 1e-12);

/// Change of variables on random depth-d step functions, k <= d <= max_depth.
CheckResult verify_subformula(Prime p, unsigned max_depth, std::uint64_t seed,
                              double tol = 1e-14);

/// radial_integral vs a level-by-level sum of disc integrals (to depth 40)
/// for R = p^-1..p^-max_radius and ||omega|| <= p^max_order, plus the
/// p / max(1/R, ||omega||)^2 estimate.
CheckResult verify_radial_integral(Prime p, unsigned max_radius,
                                   unsigned max_order, double tol = 1e-12);

/// radial_sq_sum vs term-by-term summation over ||omega|| <= p^numeric_order
/// plus a numeric tail, and value < 2 p^2 R^3.
CheckResult verify_radial_square_sum(Prime p, unsigned max_radius,
                                     unsigned numeric_order,
                                     double tol = 1e-12);

/// Random sequences (N uniform in [1, max_n]) at precision K = k_trunc:
/// 1/N <= D <= 1, both sandwich inequalities, and bound >= D.
CheckResult verify_sandwich(Prime p, std::size_t sequences, std::size_t max_n,
                            unsigned precision, std::uint64_t seed);

/// Linear unit sequences with N = p^j: D = 1/N and the sandwich holds.
CheckResult verify_linear_sandwich(Prime p, unsigned max_j, unsigned precision);

/// Both table paths vs direct weyl_sum on a random sequence.
CheckResult verify_weyl_table(Prime p, unsigned k_trunc, std::size_t n,
                              std::uint64_t seed, double tol = 1e-9);

/// Geometric-sum Weyl sums vs running direct sums for n = 1..max_n, units
/// a in {1, p+1, 2p+1}, b in {0, 1}, every character of order <= p^max_order.
CheckResult verify_linear_closed_form(Prime p, unsigned max_order,
                                      std::size_t max_n, double tol = 1e-10);

/// Non-unit a: the obstruction character has |W| = 1 for every N <= max_n.
CheckResult verify_weyl_obstruction(Prime p, unsigned precision,
                                    std::size_t max_n);

/// Truncated LeVeque sums of n a + b against the sine-sum chain.
CheckResult verify_linear_chain(Prime p, unsigned k_trunc,
                                std::size_t max_n);

/// D_N = 1/N exactly for n a + b, units a in {1, p+1, 2p+1}, b in {0, 1}.
CheckResult verify_beer(Prime p, unsigned precision, std::size_t max_n);

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all") with defaults scaled to p.
/// Throws ParameterError for unknown suites or p > 13.
std::vector<CheckResult> run_suite(std::string_view suite, Prime p,
                                   std::uint64_t seed);

}  // namespace zpdisc
