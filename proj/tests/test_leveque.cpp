#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zpdisc/errors.hpp"
#include "zpdisc/fourier.hpp"
#include "zpdisc/leveque.hpp"
#include "zpdisc/sequences.hpp"
#include "zpdisc/verify.hpp"

using namespace zpdisc;

namespace {

std::vector<PadicApprox> linear(std::int64_t a, std::int64_t b, Prime p,
                                unsigned k, std::size_t n) {
  return generate(SequenceSpec::linear(PadicApprox::from_integer(a, p, k),
                                       PadicApprox::from_integer(b, p, k), n));
}

}  // namespace

TEST_CASE("weyl sum examples") {
  const Prime p2(2), p3(3);
  const auto seq = linear(1, 0, p2, 4, 4);
  CHECK(weyl_sum(seq, Character::trivial(p2)) == Complex(1.0, 0.0));
  CHECK(std::abs(weyl_sum(seq, Character(p2, 1, 1))) < 1e-15);

  const auto seq3 = linear(1, 0, p3, 3, 4);
  const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const auto w = weyl_sum(seq3, Character(p3, 1, 1));
  CHECK(std::abs(w - zeta / 4.0) < 1e-15);
  CHECK(std::abs(w - oracle::brute_weyl(oracle::residues(seq3), 3, 1, 1)) < 1e-15);

  CHECK_THROWS_AS(weyl_sum(seq3, Character(p3, 4, 1)), PrecisionError);
}

TEST_CASE("radix-p DFT matches the naive transform") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::uint32_t pv : {2U, 3U, 5U, 7U}) {
    const Prime p(pv);
    for (unsigned k = 0; k <= (pv < 5 ? 5U : 3U); ++k) {
      const std::uint64_t len = modulus(p, k);
      std::vector<Complex> x(len);
      for (auto& v : x) v = {u(rng), u(rng)};
      auto fast = x;
      radix_p_dft(fast, p, k);
      for (std::uint64_t m = 0; m < len; ++m) {
        Complex ref{0.0, 0.0};
        for (std::uint64_t r = 0; r < len; ++r) {
          ref += x[r] * std::polar(1.0, 2.0 * std::numbers::pi *
                                            static_cast<double>((m * r) % len) /
                                            static_cast<double>(len));
        }
        REQUIRE(std::abs(fast[m] - ref) < 1e-10);
      }
    }
  }
}

TEST_CASE("weyl table agrees with direct sums") {
  for (auto method : {WeylMethod::direct, WeylMethod::transform, WeylMethod::automatic}) {
    const auto seq = generate(SequenceSpec::random(Prime(3), 4, 50, 1));
    const auto t1 = weyl_table(seq, 1, method);
    REQUIRE(t1.entries().size() == 2);
    for (const auto& e : t1.entries()) {
      CHECK(std::abs(e.value - weyl_sum(seq, e.zeta)) < 1e-12);
    }

    const auto rnd = generate(SequenceSpec::random(Prime(2), 8, 64, 42));
    const auto t8 = weyl_table(rnd, 8, method);
    REQUIRE(t8.entries().size() == 255);
    double dev = 0;
    for (const auto& e : t8.entries()) {
      dev = std::max(dev, std::abs(e.value - weyl_sum(rnd, e.zeta)));
      const auto ref = oracle::brute_weyl(oracle::residues(rnd), 2, e.zeta.exponent(),
                                          e.zeta.numerator());
      dev = std::max(dev, std::abs(e.value - ref));
      REQUIRE(std::abs(e.value) <= 1 + 1e-12);
      REQUIRE(std::abs(t8.at(e.zeta.conjugate()) - std::conj(e.value)) < 1e-12);
      REQUIRE(t8.at(e.zeta) == e.value);
    }
    CHECK(dev < 1e-9);

    const auto zeros = linear(0, 0, Prime(5), 3, 17);
    for (const auto& e : weyl_table(zeros, 3, method).entries()) {
      REQUIRE(std::abs(e.value - Complex(1.0, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("weyl table errors") {
  const auto seq = linear(1, 0, Prime(2), 28, 3);
  CHECK_THROWS_AS(weyl_table(seq, 27), SizeError);
  CHECK_THROWS_AS(weyl_table(seq, 29), PrecisionError);
  CHECK_THROWS_AS(weyl_table(seq, 0), ParameterError);
  const auto t = weyl_table(seq, 3);
  CHECK_THROWS_AS(t.at(Character(Prime(2), 4, 1)), ParameterError);
  CHECK_THROWS_AS(t.at(Character::trivial(Prime(2))), ParameterError);
}

TEST_CASE("leveque constant") {
  CHECK(leveque_constant(Prime(2)) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(std::abs(leveque_constant(Prime(3)) - 14.507) < 1e-3);
  double prev = 0;
  for (std::uint32_t pv = 2; pv <= 100; ++pv) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= pv; ++d) prime = prime && pv % d != 0;
    if (!prime) continue;
    const double c = leveque_constant(Prime(pv));
    const double direct = std::pow(2.0 * std::pow(pv, 11.0) / std::pow(pv - 1.0, 3.0), 0.25);
    CHECK(c == doctest::Approx(direct).epsilon(1e-14));
    CHECK(c > prev);
    prev = c;
  }
}

TEST_CASE("tail bound") {
  CHECK(tail_bound(Prime(2), 3) == Rational(1, 384));
  CHECK(tail_bound(Prime(3), 1) == Rational(1, 108));
  for (std::uint32_t pv : {2U, 3U, 7U}) {
    for (unsigned k = 1; k <= 6; ++k) {
      double partial = 0;
      for (unsigned j = k + 1; j <= 60; ++j) {
        partial += (std::pow(pv, j) - std::pow(pv, j - 1.0)) * std::pow(pv, -3.0 * j);
      }
      REQUIRE(std::abs(partial - to_double(tail_bound(Prime(pv), k))) <
              1e-15 * to_double(tail_bound(Prime(pv), k)) + 1e-300);
    }
  }
  // The omitted part of a real sequence's sum stays below the bound.
  const auto seq = generate(SequenceSpec::random(Prime(2), 12, 40, 8));
  const double full = truncated_leveque_sum(weyl_table(seq, 12));
  for (unsigned k = 1; k < 12; ++k) {
    const double head = truncated_leveque_sum(weyl_table(seq, k));
    CHECK(full - head <= to_double(tail_bound(Prime(2), k)) + 1e-15);
  }
}

TEST_CASE("discrepancy bound examples") {
  {
    const auto zeros = linear(0, 0, Prime(2), 6, 9);
    const auto r = discrepancy_bound(zeros, 4);
    double s = 0;
    for (int k = 1; k <= 4; ++k) s += std::pow(2.0, -2 * k - 1);
    CHECK(r.s_trunc == doctest::Approx(s).epsilon(1e-14));
    CHECK(r.tail == Rational(1, 1536));
    CHECK(r.c_p == doctest::Approx(8.0));
    CHECK(r.bound == doctest::Approx(8.0 * std::pow(s + 1.0 / 1536, 0.25)).epsilon(1e-14));
  }
  {
    const auto seq = linear(1, 0, Prime(2), 12, 1024);
    const auto r = discrepancy_bound(seq, 12);
    CHECK(r.bound >= 1.0 / 1024);
    CHECK(exact_discrepancy(seq).value == Rational(1, 1024));
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const Prime p(i % 2 ? 3 : 5);
    const auto seq = generate(SequenceSpec::random(p, 5, 1 + rng() % 50, rng()));
    const auto r = discrepancy_bound(seq, 5);
    CHECK(r.bound >= r.c_p * std::pow(to_double(r.tail), 0.25));
    CHECK(r.bound >= to_double(exact_discrepancy(seq).value));
  }
}

TEST_CASE("Parseval expansion reproduces the exact L2 norm") {
  // ||f||^2 = sum_{zeta != 1} (sum_omega |radial integral|^2) |W(zeta)|^2.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t pv = trial % 2 ? 2 : 3;
    const Prime p(pv);
    const unsigned k = pv == 2 ? 8 : 5;
    const auto seq = generate(SequenceSpec::random(p, k, 1 + rng() % 40, rng()));
    const auto table = weyl_table(seq, k);
    double sum = 0;
    for (const auto& e : table.entries()) {
      sum += to_double(radial_sq_sum(e.zeta.exponent(), p).value) * std::norm(e.value);
    }
    // Beyond depth K every level repeats the depth-K multiplicities:
    // sum over orders p^j (j > K) of |W|^2 = (p^j - p^{j-1}) S / N^2.
    const auto values = oracle::residues(seq);
    double s2 = 0;
    for (auto v : values) {
      for (auto w : values) s2 += (v == w);
    }
    const double n = static_cast<double>(values.size());
    for (unsigned j = k + 1; j <= 60; ++j) {
      const double count = std::pow(pv, j) - std::pow(pv, j - 1.0);
      sum += to_double(radial_sq_sum(j, p).value) * count * s2 / (n * n);
    }
    const double exact = to_double(l2_norm_sq(seq));
    REQUIRE(std::abs(sum - exact) <= 1e-12 * exact);
  }
}

TEST_CASE("linear closed form") {
  const Prime p(3);
  const auto a = PadicApprox::from_integer(4, p, 5);
  const auto b = PadicApprox::from_integer(1, p, 5);
  const auto seq = generate(SequenceSpec::linear(a, b, 300));
  for (const auto& zeta : enumerate_nontrivial(p, 3)) {
    for (std::size_t n : {1UL, 2UL, 26UL, 27UL, 81UL, 300UL}) {
      const auto r = linear_weyl_closed_form(a, b, zeta, n);
      const auto direct = weyl_sum(std::span(seq).first(n), zeta);
      REQUIRE(std::abs(r.value - direct) < 1e-12);
      REQUIRE(std::abs(r.value) <= r.sine_bound + 1e-12);
      if (n % zeta.order() == 0) REQUIRE(std::abs(direct) < 1e-12);
    }
  }

  const auto non_unit = PadicApprox::from_integer(3, p, 5);
  CHECK_THROWS_AS(linear_weyl_closed_form(non_unit, b, Character(p, 1, 1), 10),
                  DegenerateRatioError);
  CHECK_THROWS_AS(linear_weyl_closed_form(a, b, Character::trivial(p), 10),
                  DegenerateRatioError);
  // With zeta^a = 1 the direct sum is zeta^b.
  const auto flat = generate(SequenceSpec::linear(non_unit, b, 50));
  const Character zeta(p, 1, 1);
  CHECK(std::abs(weyl_sum(flat, zeta) - eval(zeta, b)) < 1e-14);

  const auto r = verify_linear_closed_form(Prime(5), 2, 200);
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("weyl obstruction") {
  const Prime p(2);
  CHECK_FALSE(weyl_obstruction(PadicApprox::from_integer(3, p, 6)));
  CHECK(*weyl_obstruction(PadicApprox::from_integer(2, p, 6)) == Character(p, 1, 1));
  CHECK(*weyl_obstruction(PadicApprox::from_integer(12, p, 6)) == Character(p, 2, 1));
  CHECK(*weyl_obstruction(PadicApprox::from_integer(0, p, 6)) == Character(p, 6, 1));
  const auto r = verify_weyl_obstruction(Prime(3), 6, 300);
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("unit linear sequences decay on every character") {
  const Prime p(3);
  double prev = 2.0;
  for (unsigned j = 1; j <= 6; ++j) {
    const auto seq = linear(2, 1, p, 8, modulus(p, j));
    double worst = 0;
    for (const auto& e : weyl_table(seq, 4).entries()) {
      worst = std::max(worst, std::abs(e.value));
    }
    CHECK(worst <= prev + 1e-12);
    prev = worst;
  }
  CHECK(prev < 1e-12);
}

TEST_CASE("sandwich on a single point") {
  const auto seq = linear(0, 0, Prime(2), 8, 1);
  const auto r = check_sandwich(seq);
  CHECK(r.discrepancy == 1);
  CHECK(r.l2_norm_sq == Rational(2, 21));
  CHECK(r.lower_rhs == Rational(512) * Rational(2, 21));
  CHECK(r.holds());
}

TEST_CASE("sine-sum chain") {
  for (std::uint32_t pv : {2U, 3U, 5U}) {
    const auto r = verify_linear_chain(Prime(pv), pv == 2 ? 8 : 4, 200);
    INFO(r.detail);
    CHECK(r.passed);
  }
  // Full-range cosecant sum: sum_{l=1}^{q-1} csc^2(pi l / q) = (q^2 - 1) / 3.
  for (unsigned k = 1; k <= 6; ++k) {
    const double q = std::pow(3.0, k);
    double all = 0;
    for (int l = 1; l < q; ++l) all += 1.0 / std::pow(std::sin(std::numbers::pi * l / q), 2);
    CHECK(all == doctest::Approx((q * q - 1) / 3));
    CHECK(2 * half_range_sine_sum(Prime(3), k) == doctest::Approx(all));
    // Units only: drop multiples of 3, whose terms form the level below.
    const double below = k == 1 ? 0.0 : ((q / 3) * (q / 3) - 1) / 3;
    CHECK(linear_sine_sum(Prime(3), k, 1) == doctest::Approx(all - below));
  }
}
