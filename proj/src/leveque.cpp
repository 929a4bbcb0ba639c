#include "zpdisc/leveque.hpp"

#include <cmath>
#include <numbers>

#include "zpdisc/errors.hpp"

namespace zpdisc {

Complex weyl_sum(std::span<const PadicApprox> seq, const Character& zeta) {
  require_uniform(seq);
  Complex s{0.0, 0.0};
  for (const auto& x : seq) s += eval(zeta, x);
  return s / static_cast<double>(seq.size());
}

Complex WeylTable::at(const Character& zeta) const {
  if (zeta.prime() != p_ || zeta.is_trivial() ||
      zeta.exponent() > max_exponent_) {
    throw ParameterError("character " + zeta.to_string() + " not in table");
  }
  // Entries of exponent n start after the p^{n-1} - 1 of lower order and are
  // listed by numerator with multiples of p skipped.
  const std::uint64_t p = p_.value();
  const std::uint64_t before = zeta.order() / p - 1;
  const std::uint64_t m = zeta.numerator();
  return entries_[before + m - m / p - 1].value;
}

void radix_p_dft(std::vector<Complex>& data, Prime prime, unsigned k) {
  const std::uint64_t p = prime.value();
  const std::uint64_t len_total = modulus(prime, k);
  if (data.size() != len_total) throw ParameterError("DFT length is not p^k");
  if (k == 0) return;

  // Base-p digit reversal.
  std::vector<std::uint64_t> rev(len_total);
  for (std::uint64_t i = 0; i < len_total; ++i) {
    std::uint64_t x = i, r = 0;
    for (unsigned d = 0; d < k; ++d) {
      r = r * p + x % p;
      x /= p;
    }
    rev[i] = r;
  }
  for (std::uint64_t i = 0; i < len_total; ++i) {
    if (rev[i] > i) std::swap(data[i], data[rev[i]]);
  }

  std::vector<Complex> twiddle(len_total);
  for (std::uint64_t t = 0; t < len_total; ++t) {
    twiddle[t] = root_of_unity(t, len_total);
  }

  std::vector<Complex> in(p), out(p);
  std::uint64_t sub = 1;
  for (unsigned s = 1; s <= k; ++s) {
    const std::uint64_t len = sub * p;
    const std::uint64_t stride = len_total / len;
    for (std::uint64_t base = 0; base < len_total; base += len) {
      for (std::uint64_t j = 0; j < sub; ++j) {
        for (std::uint64_t q = 0; q < p; ++q) in[q] = data[base + q * sub + j];
        for (std::uint64_t t = 0; t < p; ++t) {
          const std::uint64_t freq = j + t * sub;
          Complex acc = in[0];
          for (std::uint64_t q = 1; q < p; ++q) {
            acc += in[q] * twiddle[(q * freq % len) * stride];
          }
          out[t] = acc;
        }
        for (std::uint64_t t = 0; t < p; ++t) data[base + t * sub + j] = out[t];
      }
    }
    sub = len;
  }
}

namespace {

WeylTable direct_table(const DiscOccupancy& occ, unsigned k_trunc) {
  const Prime p = occ.prime();
  const double inv_n = 1.0 / static_cast<double>(occ.count());
  std::vector<WeylEntry> entries;
  for (unsigned j = 1; j <= k_trunc; ++j) {
    const auto counts = occ.run_lengths(j);
    const auto centers = occ.centers(j);
    const std::uint64_t q = modulus(p, j);
    for (std::uint64_t m = 1; m < q; ++m) {
      if (m % p.value() == 0) continue;
      const Character zeta(p, j, m);
      Complex s{0.0, 0.0};
      for (std::size_t i = 0; i < counts.size(); ++i) {
        s += static_cast<double>(counts[i]) * zeta.at_residue(centers[i]);
      }
      entries.push_back({zeta, s * inv_n});
    }
  }
  return WeylTable(p, k_trunc, std::move(entries));
}

WeylTable transform_table(std::span<const PadicApprox> seq, Prime p,
                          unsigned k_trunc) {
  const std::uint64_t len = modulus(p, k_trunc);
  std::vector<Complex> hist(len, Complex{0.0, 0.0});
  for (const auto& x : seq) hist[x.truncate(k_trunc)] += 1.0;
  radix_p_dft(hist, p, k_trunc);

  // The character (j, m) equals (k_trunc, m p^{k_trunc - j}) on residues mod
  // p^k_trunc, so one transform serves every level.
  const double inv_n = 1.0 / static_cast<double>(seq.size());
  std::vector<WeylEntry> entries;
  entries.reserve(len - 1);
  std::uint64_t q = 1;
  for (unsigned j = 1; j <= k_trunc; ++j) {
    q *= p.value();
    const std::uint64_t lift = len / q;
    for (std::uint64_t m = 1; m < q; ++m) {
      if (m % p.value() == 0) continue;
      entries.push_back({Character(p, j, m), hist[m * lift] * inv_n});
    }
  }
  return WeylTable(p, k_trunc, std::move(entries));
}

}  // namespace

WeylTable weyl_table(std::span<const PadicApprox> seq, unsigned k_trunc,
                     WeylMethod method) {
  require_uniform(seq);
  const Prime p = seq.front().prime();
  if (k_trunc == 0) throw ParameterError("truncation exponent must be >= 1");
  if (k_trunc > seq.front().precision()) {
    throw PrecisionError("truncation exponent exceeds sequence precision");
  }
  const auto size = checked_pow(p.value(), k_trunc, kMaxWeylTableSize);
  if (!size) throw SizeError("p^K_trunc exceeds 2^26");

  if (method == WeylMethod::automatic) {
    const DiscOccupancy occ(seq);
    const auto distinct = occ.run_lengths(k_trunc).size();
    method = distinct <= static_cast<std::size_t>(k_trunc) * p.value()
                 ? WeylMethod::direct
                 : WeylMethod::transform;
    if (method == WeylMethod::direct) return direct_table(occ, k_trunc);
  }
  if (method == WeylMethod::direct) return direct_table(DiscOccupancy(seq), k_trunc);
  return transform_table(seq, p, k_trunc);
}

double leveque_constant(Prime prime) {
  const double p = prime.value();
  const double c1 = std::pow(p, 9) / std::pow(p - 1.0, 3);
  const double c2 = 2.0 * p * p;
  return std::pow(c1 * c2, 0.25);
}

Rational tail_bound(Prime prime, unsigned k_trunc) {
  if (k_trunc == 0) throw ParameterError("truncation exponent must be >= 1");
  const std::uint64_t p = prime.value();
  return inverse_pow(p, 2 * k_trunc) / Rational(p * (p + 1));
}

double truncated_leveque_sum(const WeylTable& table) {
  double s = 0.0;
  for (const auto& e : table.entries()) {
    const double w = 1.0 / static_cast<double>(e.zeta.order());
    s += w * w * w * std::norm(e.value);
  }
  return s;
}

BoundReport discrepancy_bound(std::span<const PadicApprox> seq,
                              unsigned k_trunc) {
  const auto table = weyl_table(seq, k_trunc);
  BoundReport r{.p = table.prime(),
                .count = seq.size(),
                .k_trunc = k_trunc,
                .s_trunc = truncated_leveque_sum(table),
                .tail = tail_bound(table.prime(), k_trunc),
                .c_p = leveque_constant(table.prime())};
  r.bound = r.c_p * std::pow(r.s_trunc + to_double(r.tail), 0.25);
  return r;
}

LinearWeylSum linear_weyl_closed_form(const PadicApprox& a,
                                      const PadicApprox& b,
                                      const Character& zeta,
                                      std::size_t count) {
  require_compatible(a, b);
  if (count == 0) throw ParameterError("N must be at least 1");
  if (zeta.prime() != a.prime()) {
    throw ParameterError("character and sequence use different primes");
  }
  if (zeta.is_trivial()) {
    throw DegenerateRatioError("trivial character: ratio is 1");
  }
  const unsigned k = zeta.exponent();
  if (a.precision() < k) throw PrecisionError("precision below character order");
  const std::uint64_t q = zeta.order();
  const auto mulmod = [q](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % q);
  };
  const std::uint64_t ratio = mulmod(zeta.numerator(), a.truncate(k));
  if (ratio == 0) {
    throw DegenerateRatioError("zeta^a = 1 for " + zeta.to_string());
  }
  const std::uint64_t offset = mulmod(zeta.numerator(), b.truncate(k));
  const std::uint64_t last = mulmod(ratio, count % q);

  // sum_{n=1}^N r^n = r (1 - r^N) / (1 - r), r = zeta^{a_k}.
  const Complex r = root_of_unity(ratio, q);
  const Complex numer = 1.0 - root_of_unity(last, q);
  const Complex value = root_of_unity(offset, q) * r * numer / (1.0 - r) /
                        static_cast<double>(count);
  const double angle = std::numbers::pi * static_cast<double>(ratio) /
                       static_cast<double>(q);
  return {value, 1.0 / (static_cast<double>(count) * std::abs(std::sin(angle)))};
}

std::optional<Character> weyl_obstruction(const PadicApprox& a) {
  if (a.is_unit()) return std::nullopt;
  const unsigned v = a.valuation().value_or(a.precision());
  return Character(a.prime(), v, 1);
}

double linear_sine_sum(Prime prime, unsigned k, std::uint64_t a_k) {
  const std::uint64_t q = modulus(prime, k);
  double s = 0.0;
  for (std::uint64_t m = 1; m < q; ++m) {
    if (m % prime.value() == 0) continue;
    const auto r = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(m) * (a_k % q) % q);
    const double sn = std::sin(std::numbers::pi * static_cast<double>(r) /
                               static_cast<double>(q));
    s += 1.0 / (sn * sn);
  }
  return s;
}

double half_range_sine_sum(Prime prime, unsigned k) {
  const std::uint64_t q = modulus(prime, k);
  double s = 0.0;
  for (std::uint64_t l = 1; 2 * l <= q; ++l) {
    const double sn = std::sin(std::numbers::pi * static_cast<double>(l) /
                               static_cast<double>(q));
    s += 1.0 / (sn * sn);
  }
  return s;
}

double linear_sequence_constant(Prime prime, unsigned k_trunc) {
  double c4 = 0.0;
  for (unsigned k = 1; k <= k_trunc; ++k) {
    c4 += 2.0 * half_range_sine_sum(prime, k) /
          std::pow(static_cast<double>(prime.value()), 3.0 * k);
  }
  return std::pow(c4, 0.25);
}

SandwichRecord check_sandwich(std::span<const PadicApprox> seq) {
  require_uniform(seq);
  const Prime prime = seq.front().prime();
  const std::uint64_t p = prime.value();
  const unsigned k = seq.front().precision();

  SandwichRecord r;
  r.discrepancy = exact_discrepancy(seq).value;
  r.l2_norm_sq = l2_norm_sq(seq);
  r.s_trunc = truncated_leveque_sum(weyl_table(seq, k));
  r.tail = tail_bound(prime, k);

  const Rational c1 = Rational(BigInt(p) * p * p * p * p * p * p * p * p,
                               BigInt(p - 1) * (p - 1) * (p - 1));
  const Rational d2 = r.discrepancy * r.discrepancy;
  r.lower_rhs = c1 * r.l2_norm_sq;
  r.lower_holds = d2 * d2 <= r.lower_rhs;
  r.upper_rhs = 2.0 * static_cast<double>(p * p) * (r.s_trunc + to_double(r.tail));
  r.upper_holds = to_double(r.l2_norm_sq) <= r.upper_rhs + kSandwichSlack;
  return r;
}

}  // namespace zpdisc
