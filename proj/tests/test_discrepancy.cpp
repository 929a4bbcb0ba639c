#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zpdisc/discrepancy.hpp"
#include "zpdisc/errors.hpp"
#include "zpdisc/sequences.hpp"

using namespace zpdisc;

namespace {

std::vector<PadicApprox> from_values(std::initializer_list<std::int64_t> values,
                                     Prime p, unsigned k) {
  std::vector<PadicApprox> out;
  for (auto v : values) out.push_back(PadicApprox::from_integer(v, p, k));
  return out;
}

}  // namespace

TEST_CASE("local discrepancy examples") {
  const Prime p(2);
  const auto seq = from_values({1, 2, 3, 4}, p, 4);
  CHECK(local_discrepancy(seq, Disc::make(p, 1, 0)) == 0);
  // Only 1 is congruent to 1 mod 8: 1/4 - 1/8.
  CHECK(local_discrepancy(seq, Disc::make(p, 3, 1)) == Rational(1, 8));
  CHECK(local_discrepancy(seq, Disc::make(p, 3, 7)) == Rational(-1, 8));
  CHECK(local_discrepancy(seq, Disc::make(p, 0, 0)) == 0);
  CHECK_THROWS_AS(local_discrepancy(seq, Disc::make(p, 5, 0)), PrecisionError);
  CHECK_THROWS_AS(Disc::make(p, 2, 4), ParameterError);
}

TEST_CASE("local discrepancies sum to zero at every depth") {
  const auto seq = generate(SequenceSpec::random(Prime(3), 4, 37, 5));
  for (unsigned k = 0; k <= 4; ++k) {
    Rational sum = 0;
    for (std::uint64_t a = 0; a < modulus(Prime(3), k); ++a) {
      sum += local_discrepancy(seq, Disc::make(Prime(3), k, a));
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("exact discrepancy examples") {
  const Prime p(2);
  {
    const auto seq = from_values({5}, p, 6);
    const auto r = exact_discrepancy(seq);
    CHECK(r.value == 1);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.finite_max == 1 - Rational(1, 64));
  }
  {
    const auto seq = generate(SequenceSpec::linear(
        PadicApprox::from_integer(1, p, 8), PadicApprox::from_integer(0, p, 8), 4));
    const auto r = exact_discrepancy(seq);
    CHECK(r.value == oracle::brute_discrepancy(oracle::residues(seq), 2, 8));
    CHECK(r.value == Rational(1, 4));
    CHECK(r.limit_term == Rational(1, 4));
    CHECK_FALSE(r.witness.has_value());
  }
  {
    const auto seq = from_values({0, 0}, p, 5);
    const auto r = exact_discrepancy(seq);
    CHECK(r.value == 1);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("finite witnesses realize the reported value") {
  const Prime p(3);
  // Three points crowding one disc of depth 1.
  const auto seq = from_values({0, 3, 6, 1}, p, 4);
  const auto r = exact_discrepancy(seq);
  REQUIRE(r.witness.has_value());
  CHECK(abs(local_discrepancy(seq, *r.witness)) == r.value);
  CHECK(r.value == oracle::brute_discrepancy(oracle::residues(seq), 3, 4));
  CHECK(r.value == Rational(3, 4) - Rational(1, 3));
}

TEST_CASE("empty-disc witnesses are genuinely empty") {
  const Prime p(5);
  // Points cover only residue 0 mod 5 at depth 1; the empty disc deviation
  // is 1/5 and the full disc deviation is 1 - 1/5.
  const auto seq = from_values({0, 5, 10, 15, 20, 1, 2, 3, 4, 6}, p, 2);
  const auto r = exact_discrepancy(seq);
  CHECK(r.value == oracle::brute_discrepancy(oracle::residues(seq), 5, 2));
  if (r.witness) CHECK(abs(local_discrepancy(seq, *r.witness)) == r.value);
}

TEST_CASE("exact discrepancy matches the all-disc oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t pv = trial % 3 == 0 ? 3 : (trial % 3 == 1 ? 2 : 5);
    const Prime p(pv);
    const unsigned k = 1 + rng() % (pv == 5 ? 3 : 5);
    const std::size_t n = 1 + rng() % 24;
    const auto seq = generate(SequenceSpec::random(p, k, n, rng()));
    const auto r = exact_discrepancy(seq);
    REQUIRE(r.value == oracle::brute_discrepancy(oracle::residues(seq), pv, k));
    REQUIRE(r.value >= Rational(1, static_cast<long long>(n)));
    REQUIRE(r.value <= 1);
    REQUIRE(r.value == std::max(r.finite_max, r.limit_term));
    if (r.witness) {
      REQUIRE(abs(local_discrepancy(seq, *r.witness)) == r.value);
    }
  }
}

TEST_CASE("exact discrepancy is permutation and translation invariant") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const Prime p(trial % 2 == 0 ? 2 : 3);
    auto seq = generate(SequenceSpec::random(p, 6, 1 + rng() % 40, rng()));
    const auto ref = exact_discrepancy(seq).value;
    std::shuffle(seq.begin(), seq.end(), rng);
    REQUIRE(exact_discrepancy(seq).value == ref);
    const auto c = PadicApprox::from_residue(rng() % modulus(p, 6), p, 6);
    for (auto& x : seq) x = add(x, c);
    REQUIRE(exact_discrepancy(seq).value == ref);
  }
}

TEST_CASE("l2 norm of a single point") {
  const auto seq = from_values({0}, Prime(2), 8);
  CHECK(l2_norm_sq(seq) == Rational(2, 21));
  // Level-by-level numeric series.
  double s = 0;
  for (int j = 0; j <= 40; ++j) s += 0.5 * (std::pow(4.0, -j) - std::pow(8.0, -j));
  CHECK(std::abs(to_double(l2_norm_sq(seq)) - s) < 1e-15);
  // Precision does not matter for a single point.
  CHECK(l2_norm_sq(from_values({3}, Prime(2), 2)) == Rational(2, 21));
}

TEST_CASE("l2 norm of two points") {
  const auto seq = from_values({0, 1}, Prime(2), 6);
  const double oracle = oracle::brute_l2(oracle::residues(seq), 2, 6, 6, 60);
  CHECK(std::abs(to_double(l2_norm_sq(seq)) - oracle) < 1e-12);
}

TEST_CASE("l2 norm matches the Riemann-sum oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t pv = trial % 2 == 0 ? 2 : 3;
    const unsigned k = 1 + rng() % 6;
    const auto seq =
        generate(SequenceSpec::random(Prime(pv), k, 1 + rng() % 30, rng()));
    const double oracle = oracle::brute_l2(oracle::residues(seq), pv, k, 6, 60);
    REQUIRE(std::abs(to_double(l2_norm_sq(seq)) - oracle) < 1e-10);
  }
}

TEST_CASE("discrepancy and L2 norm satisfy the fourth-power inequality") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t pv = trial % 2 == 0 ? 2 : 3;
    const auto seq =
        generate(SequenceSpec::random(Prime(pv), 8, 1 + rng() % 64, rng()));
    const Rational d = exact_discrepancy(seq).value;
    const Rational c1 = Rational(BigInt(pv) * pv * pv * pv * pv * pv * pv * pv * pv,
                                 BigInt(pv - 1) * (pv - 1) * (pv - 1));
    REQUIRE(d * d * d * d <= c1 * l2_norm_sq(seq));
  }
}

TEST_CASE("occupancy runs") {
  const auto seq = from_values({4, 0, 2, 6, 1}, Prime(2), 3);
  const DiscOccupancy occ(seq);
  CHECK(occ.run_lengths(0) == std::vector<std::size_t>{5});
  CHECK(occ.run_lengths(1) == std::vector<std::size_t>{4, 1});
  CHECK(occ.run_lengths(2) == std::vector<std::size_t>{2, 2, 1});
  CHECK(occ.centers(2) == std::vector<std::uint64_t>{0, 2, 1});
  CHECK(occ.sum_squares(3) == 5);
}
