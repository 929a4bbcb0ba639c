#include "zpdisc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zpdisc/characters.hpp"
#include "zpdisc/discrepancy.hpp"
#include "zpdisc/errors.hpp"
#include "zpdisc/fourier.hpp"
#include "zpdisc/leveque.hpp"
#include "zpdisc/sequences.hpp"

namespace zpdisc {

namespace {

std::vector<Character> characters_up_to(Prime p, unsigned max_exponent) {
  std::vector<Character> out{Character::trivial(p)};
  if (max_exponent == 0) return out;
  auto rest = enumerate_nontrivial(p, max_exponent);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

unsigned largest_exponent(Prime p, unsigned cap, std::uint64_t limit) {
  unsigned k = 1;
  while (k < cap && checked_pow(p.value(), k + 1, limit)) ++k;
  return k;
}

std::vector<std::int64_t> unit_multipliers(Prime p) {
  const std::int64_t q = p.value();
  return {1, q + 1, 2 * q + 1};
}

CheckResult finish(std::string name, std::size_t cases, std::size_t failures,
                   double max_dev, const std::string& first_failure) {
  CheckResult r{std::move(name), failures == 0, {}};
  std::ostringstream os;
  os << cases << " cases";
  if (max_dev >= 0) os << ", max deviation " << sci(max_dev);
  if (failures != 0) os << "; " << failures << " failed, first: " << first_failure;
  r.detail = os.str();
  return r;
}

}  // namespace

CheckResult verify_charfun(Prime p, unsigned max_depth, unsigned oracle_depth,
                           double tol) {
  const std::string name = "charfun p=" + std::to_string(p.value());
  if (oracle_depth < max_depth) {
    throw ParameterError("oracle depth must cover the disc depth");
  }
  const auto chars = characters_up_to(p, max_depth);
  std::size_t cases = 0, failures = 0;
  double max_dev = 0;
  std::string first;
  for (unsigned k = 0; k <= max_depth; ++k) {
    const std::uint64_t q = modulus(p, k);
    for (std::uint64_t a = 0; a < q; ++a) {
      const auto disc = Disc::make(p, k, a);
      for (const auto& zeta : chars) {
        const auto closed = disc_fourier_coeff(disc, zeta).value();
        const auto oracle = haar_integrate(
            [&](std::uint64_t r) {
              return r % q == a ? zeta.at_residue_inverse(r) : Complex{0.0, 0.0};
            },
            p, oracle_depth);
        const double dev = std::abs(closed - oracle);
        max_dev = std::max(max_dev, dev);
        ++cases;
        if (!(dev <= tol)) {
          if (failures++ == 0) {
            first = disc.to_string() + " zeta=" + zeta.to_string() +
                    " deviation " + sci(dev);
          }
        }
      }
    }
  }
  return finish(name, cases, failures, max_dev, first);
}

CheckResult verify_subformula(Prime p, unsigned max_depth, std::uint64_t seed,
                              double tol) {
  const std::string name = "subformula p=" + std::to_string(p.value());
  SplitMix64 rng(seed);
  const auto uniform = [&] {
    return static_cast<double>(rng.next() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  std::size_t cases = 0, failures = 0;
  double max_dev = 0;
  std::string first;
  for (unsigned d = 1; d <= max_depth; ++d) {
    const std::uint64_t cells = modulus(p, d);
    std::vector<Complex> g(cells);
    for (auto& v : g) v = {uniform(), uniform()};
    const auto step = [&](std::uint64_t r) { return g[r % cells]; };
    for (unsigned k = 0; k <= d; ++k) {
      const std::uint64_t q = modulus(p, k);
      const std::uint64_t samples = std::min<std::uint64_t>(q, 8);
      for (std::uint64_t s = 0; s < samples; ++s) {
        const std::uint64_t a = q <= 8 ? s : rng.below(q);
        const Complex lhs = haar_integrate(
            [&](std::uint64_t r) {
              return r % q == a ? step(r) : Complex{0.0, 0.0};
            },
            p, d);
        const double scale = 1.0 / static_cast<double>(q);
        const Complex rhs =
            k == d ? scale * step(a)
                   : scale * haar_integrate(
                                 [&](std::uint64_t r) { return step(a + q * r); },
                                 p, d - k);
        const double dev = std::abs(lhs - rhs);
        max_dev = std::max(max_dev, dev);
        ++cases;
        if (!(dev <= tol) && failures++ == 0) {
          first = "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                  " a=" + std::to_string(a) + " seed=" + std::to_string(seed);
        }
      }
    }
  }
  return finish(name, cases, failures, max_dev, first);
}

CheckResult verify_radial_integral(Prime p, unsigned max_radius,
                                   unsigned max_order, double tol) {
  const std::string name = "integral-est1 p=" + std::to_string(p.value());
  const double pd = p.value();
  constexpr unsigned kLevels = 40;
  const auto chars = characters_up_to(p, max_order);
  std::size_t cases = 0, failures = 0;
  double max_dev = 0;
  std::string first;
  for (const auto& omega : chars) {
    const unsigned n = omega.exponent();
    // disc_integral[j] = integral of 1_{|y| <= p^-j} omega^{-y}.
    std::vector<double> disc_integral(kLevels + 2);
    for (unsigned j = 0; j < disc_integral.size(); ++j) {
      if (j >= n) {
        // omega is identically 1 on p^j Z_p.
        disc_integral[j] = std::pow(pd, -static_cast<double>(j));
      } else {
        const std::uint64_t q = modulus(p, j);
        disc_integral[j] = haar_integrate(
                               [&](std::uint64_t r) {
                                 return r % q == 0 ? omega.at_residue_inverse(r)
                                                   : Complex{0.0, 0.0};
                               },
                               p, n)
                               .real();
      }
    }
    for (unsigned k = 1; k <= max_radius; ++k) {
      double oracle = 0.0;
      for (unsigned j = k; j <= kLevels; ++j) {
        oracle += std::pow(pd, -static_cast<double>(j)) *
                  (disc_integral[j] - disc_integral[j + 1]);
      }
      const Rational closed = radial_integral(k, omega);
      const double dev = std::abs(to_double(closed) - oracle);
      const bool estimate_ok = abs(closed) <= radial_integral_bound(k, omega);
      max_dev = std::max(max_dev, dev);
      ++cases;
      if (!(dev <= tol && estimate_ok) && failures++ == 0) {
        first = "R=" + std::to_string(p.value()) + "^-" + std::to_string(k) +
                " omega=" + omega.to_string() + " closed " +
                to_fraction_string(closed) + " oracle " + sci(oracle) +
                (estimate_ok ? "" : " (estimate violated)");
      }
    }
  }
  return finish(name, cases, failures, max_dev, first);
}

CheckResult verify_radial_square_sum(Prime p, unsigned max_radius,
                                     unsigned numeric_order, double tol) {
  const std::string name = "integral-est2 p=" + std::to_string(p.value());
  const double pd = p.value();
  std::size_t cases = 0, failures = 0;
  double max_dev = 0;
  std::string first;
  for (unsigned k = 1; k <= max_radius; ++k) {
    const auto exact = radial_sq_sum(k, p);
    double numeric = 0.0;
    for (unsigned n = 0; n <= numeric_order; ++n) {
      const double v = n == 0 ? to_double(radial_integral(k, Character::trivial(p)))
                              : to_double(radial_integral(k, Character(p, n, 1)));
      const std::uint64_t q = modulus(p, n);
      double level = 0.0;
      for (std::uint64_t m = (n == 0 ? 0 : 1); m < std::max<std::uint64_t>(q, 1); ++m) {
        if (n != 0 && m % p.value() == 0) continue;
        level += v * v;
      }
      numeric += level;
    }
    for (unsigned n = numeric_order + 1; n <= 80; ++n) {
      const double count = std::pow(pd, n) - std::pow(pd, n - 1.0);
      const double v = pd * pd / ((pd + 1) * std::pow(pd, 2.0 * n));
      numeric += count * v * v;
    }
    const double dev = std::abs(numeric - to_double(exact.value));
    const bool below = exact.value < exact.bound;
    max_dev = std::max(max_dev, dev);
    ++cases;
    if (!(dev <= tol && below) && failures++ == 0) {
      first = "R=" + std::to_string(p.value()) + "^-" + std::to_string(k) +
              " exact " + to_fraction_string(exact.value) + " bound " +
              to_fraction_string(exact.bound);
    }
  }
  return finish(name, cases, failures, max_dev, first);
}

CheckResult verify_sandwich(Prime p, std::size_t sequences, std::size_t max_n,
                            unsigned precision, std::uint64_t seed) {
  const std::string name = "sandwich p=" + std::to_string(p.value());
  SplitMix64 rng(seed);
  std::size_t failures = 0;
  std::string first;
  for (std::size_t i = 0; i < sequences; ++i) {
    const std::size_t n = 1 + rng.below(max_n);
    const std::uint64_t s = rng.next();
    const auto seq = generate(SequenceSpec::random(p, precision, n, s));
    const auto rec = check_sandwich(seq);
    const auto bound = discrepancy_bound(seq, precision);
    const bool elementary =
        rec.discrepancy >= Rational(1, static_cast<long long>(n)) &&
        rec.discrepancy <= 1;
    const bool dominance = bound.bound >= to_double(rec.discrepancy);
    if (!(rec.holds() && elementary && dominance) && failures++ == 0) {
      first = "random p=" + std::to_string(p.value()) +
              " K=" + std::to_string(precision) + " N=" + std::to_string(n) +
              " seed=" + std::to_string(s) +
              (rec.lower_holds ? "" : " [lower]") +
              (rec.upper_holds ? "" : " [upper]") +
              (elementary ? "" : " [1/N<=D<=1]") +
              (dominance ? "" : " [dominance]");
    }
  }
  return finish(name, sequences, failures, -1, first);
}

CheckResult verify_linear_sandwich(Prime p, unsigned max_j, unsigned precision) {
  const std::string name = "linear-sandwich p=" + std::to_string(p.value());
  std::size_t cases = 0, failures = 0;
  std::string first;
  const auto a = PadicApprox::from_integer(1, p, precision);
  const auto b = PadicApprox::from_integer(0, p, precision);
  for (unsigned j = 0; j <= max_j; ++j) {
    const std::uint64_t n = modulus(p, j);
    const auto seq = generate(SequenceSpec::linear(a, b, n));
    const auto rec = check_sandwich(seq);
    const auto bound = discrepancy_bound(seq, precision);
    const bool exact = rec.discrepancy == Rational(1, static_cast<long long>(n));
    ++cases;
    if (!(rec.holds() && exact && bound.bound >= to_double(rec.discrepancy)) &&
        failures++ == 0) {
      first = "N=" + std::to_string(n) + " D=" + to_fraction_string(rec.discrepancy);
    }
  }
  return finish(name, cases, failures, -1, first);
}

CheckResult verify_weyl_table(Prime p, unsigned k_trunc, std::size_t n,
                              std::uint64_t seed, double tol) {
  const std::string name = "weyl-table p=" + std::to_string(p.value());
  const auto seq = generate(SequenceSpec::random(p, k_trunc, n, seed));
  const auto fast = weyl_table(seq, k_trunc, WeylMethod::transform);
  const auto sparse = weyl_table(seq, k_trunc, WeylMethod::direct);
  std::size_t failures = 0;
  double max_dev = 0;
  std::string first;
  for (std::size_t i = 0; i < fast.entries().size(); ++i) {
    const auto& zeta = fast.entries()[i].zeta;
    const Complex ref = weyl_sum(seq, zeta);
    const double dev = std::max(std::abs(fast.entries()[i].value - ref),
                                std::abs(sparse.entries()[i].value - ref));
    max_dev = std::max(max_dev, dev);
    if (!(dev <= tol) && failures++ == 0) {
      first = zeta.to_string() + " seed=" + std::to_string(seed);
    }
  }
  return finish(name, fast.entries().size(), failures, max_dev, first);
}

CheckResult verify_linear_closed_form(Prime p, unsigned max_order,
                                      std::size_t max_n, double tol) {
  const std::string name = "linear-closed-form p=" + std::to_string(p.value());
  const auto chars = enumerate_nontrivial(p, max_order);
  std::size_t cases = 0, failures = 0;
  double max_dev = 0;
  std::string first;
  for (const auto av : unit_multipliers(p)) {
    for (const std::int64_t bv : {0, 1}) {
      const auto a = PadicApprox::from_integer(av, p, max_order);
      const auto b = PadicApprox::from_integer(bv, p, max_order);
      const auto seq = generate(SequenceSpec::linear(a, b, max_n));
      for (const auto& zeta : chars) {
        Complex running{0.0, 0.0};
        for (std::size_t n = 1; n <= max_n; ++n) {
          running += eval(zeta, seq[n - 1]);
          const Complex direct = running / static_cast<double>(n);
          const auto closed = linear_weyl_closed_form(a, b, zeta, n);
          double dev = std::abs(closed.value - direct);
          bool ok = dev <= tol && std::abs(closed.value) <= closed.sine_bound + 1e-12;
          // Every residue mod ||zeta|| is hit equally often.
          if (n % zeta.order() == 0) ok = ok && std::abs(direct) <= tol;
          max_dev = std::max(max_dev, dev);
          ++cases;
          if (!ok && failures++ == 0) {
            first = "a=" + std::to_string(av) + " b=" + std::to_string(bv) +
                    " zeta=" + zeta.to_string() + " N=" + std::to_string(n);
          }
        }
      }
    }
  }
  return finish(name, cases, failures, max_dev, first);
}

CheckResult verify_weyl_obstruction(Prime p, unsigned precision,
                                    std::size_t max_n) {
  const std::string name = "weyl-obstruction p=" + std::to_string(p.value());
  const std::int64_t q = p.value();
  std::size_t cases = 0, failures = 0;
  double max_dev = 0;
  std::string first;
  for (const std::int64_t av : {q, 2 * q, q * q, std::int64_t{0}}) {
    for (const std::int64_t bv : {0, 1}) {
      const auto a = PadicApprox::from_integer(av, p, precision);
      const auto b = PadicApprox::from_integer(bv, p, precision);
      const auto zeta = weyl_obstruction(a);
      const auto seq = generate(SequenceSpec::linear(a, b, max_n));
      Complex running{0.0, 0.0};
      for (std::size_t n = 1; n <= max_n; ++n) {
        double dev = 1.0;
        if (zeta) {
          running += eval(*zeta, seq[n - 1]);
          dev = std::abs(std::abs(running / static_cast<double>(n)) - 1.0);
        }
        max_dev = std::max(max_dev, dev);
        ++cases;
        if (!(dev <= 1e-12) && failures++ == 0) {
          first = "a=" + std::to_string(av) + " b=" + std::to_string(bv) +
                  " N=" + std::to_string(n);
        }
      }
    }
  }
  for (const auto av : unit_multipliers(p)) {
    ++cases;
    if (weyl_obstruction(PadicApprox::from_integer(av, p, precision)) &&
        failures++ == 0) {
      first = "unit a=" + std::to_string(av) + " reported an obstruction";
    }
  }
  return finish(name, cases, failures, max_dev, first);
}

CheckResult verify_linear_chain(Prime p, unsigned k_trunc, std::size_t max_n) {
  const std::string name = "linear-chain p=" + std::to_string(p.value());
  const double pd = p.value();
  std::size_t cases = 0, failures = 0;
  std::string first;
  for (unsigned k = 1; k <= k_trunc; ++k) {
    const double half = half_range_sine_sum(p, k);
    const double cap = std::pow(pd, 2.0 * k) * std::numbers::pi *
                       std::numbers::pi / 24.0;
    ++cases;
    if (!(half <= cap) && failures++ == 0) {
      first = "half-range sum exceeds p^{2k} pi^2/24 at k=" + std::to_string(k);
    }
  }
  std::vector<std::size_t> sizes;
  for (std::size_t n = 1; n <= max_n; n = n * 3 / 2 + 1) sizes.push_back(n);
  for (const auto av : unit_multipliers(p)) {
    const auto a = PadicApprox::from_integer(av, p, k_trunc);
    const auto b = PadicApprox::from_integer(0, p, k_trunc);
    std::vector<double> level(k_trunc + 1);
    for (unsigned k = 1; k <= k_trunc; ++k) {
      level[k] = linear_sine_sum(p, k, a.truncate(k));
      ++cases;
      if (!(level[k] <= 2.0 * half_range_sine_sum(p, k) * (1 + 1e-12)) &&
          failures++ == 0) {
        first = "a=" + std::to_string(av) + " sine sum exceeds doubled half range";
      }
    }
    for (const auto n : sizes) {
      const auto seq = generate(SequenceSpec::linear(a, b, n));
      const double s = truncated_leveque_sum(weyl_table(seq, k_trunc));
      double chain = 0.0;
      for (unsigned k = 1; k <= k_trunc; ++k) {
        chain += level[k] / std::pow(pd, 3.0 * k);
      }
      chain /= static_cast<double>(n) * static_cast<double>(n);
      ++cases;
      if (!(s <= chain * (1 + 1e-9)) && failures++ == 0) {
        first = "a=" + std::to_string(av) + " N=" + std::to_string(n) +
                " S_trunc " + sci(s) + " > chain " + sci(chain);
      }
    }
  }
  return finish(name, cases, failures, -1, first);
}

CheckResult verify_beer(Prime p, unsigned precision, std::size_t max_n) {
  const std::string name = "beer p=" + std::to_string(p.value());
  std::size_t cases = 0, failures = 0;
  std::string first;
  for (const auto av : unit_multipliers(p)) {
    for (const std::int64_t bv : {0, 1}) {
      const auto a = PadicApprox::from_integer(av, p, precision);
      const auto b = PadicApprox::from_integer(bv, p, precision);
      const auto all = generate(SequenceSpec::linear(a, b, max_n));
      for (std::size_t n = 1; n <= max_n; ++n) {
        const auto d = exact_discrepancy(std::span(all).first(n)).value;
        ++cases;
        if (d != Rational(1, static_cast<long long>(n)) && failures++ == 0) {
          first = "a=" + std::to_string(av) + " b=" + std::to_string(bv) +
                  " N=" + std::to_string(n) + " D=" + to_fraction_string(d);
        }
      }
    }
  }
  return finish(name, cases, failures, -1, first);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "charfun", "subformula", "integralest", "sandwich",
      "weyl-table", "linear", "beer"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, Prime p,
                                   std::uint64_t seed) {
  if (p.value() > 13) throw ParameterError("verify supports p <= 13");
  const bool small = p.value() <= 3;
  std::vector<CheckResult> out;
  const auto want = [&](std::string_view s) { return suite == "all" || suite == s; };
  if (suite != "all" &&
      std::find(suite_names().begin(), suite_names().end(), suite) ==
          suite_names().end()) {
    throw ParameterError("unknown suite '" + std::string(suite) + "'");
  }
  if (want("charfun")) {
    const unsigned depth = small ? 3 : (p.value() <= 7 ? 2 : 1);
    out.push_back(verify_charfun(p, depth, small ? 6 : depth + 1));
  }
  if (want("subformula")) {
    out.push_back(verify_subformula(p, largest_exponent(p, 5, 4096), seed));
  }
  if (want("integralest")) {
    out.push_back(verify_radial_integral(p, 4, small ? 6 : 3));
    out.push_back(verify_radial_square_sum(p, 4, small ? 10 : 5));
  }
  if (want("sandwich")) {
    const unsigned k = small ? 10 : largest_exponent(p, 10, 1U << 16);
    out.push_back(verify_sandwich(p, 100, 64, k, seed));
    out.push_back(verify_linear_sandwich(p, largest_exponent(p, k, 1U << 10), k));
  }
  if (want("weyl-table")) {
    out.push_back(verify_weyl_table(p, largest_exponent(p, 10, 1024), 4096, seed));
  }
  if (want("linear")) {
    out.push_back(verify_linear_closed_form(p, largest_exponent(p, 5, 4096), 1000));
    out.push_back(verify_weyl_obstruction(p, 8, 1000));
    out.push_back(verify_linear_chain(p, largest_exponent(p, 12, 1U << 12), 1000));
  }
  if (want("beer")) {
    out.push_back(verify_beer(p, std::min(20U, max_precision(p)), 200));
  }
  return out;
}

}  // namespace zpdisc
