#include "zpdisc/discrepancy.hpp"

#include <algorithm>
#include <numeric>

#include "zpdisc/errors.hpp"

namespace zpdisc {

Disc Disc::make(Prime p, unsigned depth, std::uint64_t center) {
  if (center >= modulus(p, depth)) {
    throw ParameterError("disc center " + std::to_string(center) +
                         " is not below p^" + std::to_string(depth));
  }
  return Disc{p, depth, center};
}

bool Disc::contains(const PadicApprox& x) const {
  return x.truncate(depth) == center;
}

std::string Disc::to_string() const {
  return "D(" + std::to_string(center) + ", " + std::to_string(p.value()) +
         "^-" + std::to_string(depth) + ")";
}

Rational local_discrepancy(std::span<const PadicApprox> seq, const Disc& disc) {
  require_uniform(seq);
  if (seq.front().prime() != disc.p) {
    throw ParameterError("disc and sequence use different primes");
  }
  if (disc.depth > seq.front().precision()) {
    throw PrecisionError("disc depth " + std::to_string(disc.depth) +
                         " exceeds precision " +
                         std::to_string(seq.front().precision()));
  }
  const auto hits = std::count_if(seq.begin(), seq.end(), [&](const auto& x) {
    return disc.contains(x);
  });
  return Rational(hits, static_cast<long long>(seq.size())) - disc.measure();
}

DiscOccupancy::DiscOccupancy(std::span<const PadicApprox> seq)
    : p_(seq.empty() ? Prime(2) : seq.front().prime()),
      precision_(0),
      count_(seq.size()) {
  require_uniform(seq);
  precision_ = seq.front().precision();
  order_.resize(count_);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  // Little-endian digit strings sort so that every disc is a contiguous run.
  std::sort(order_.begin(), order_.end(), [&](std::size_t i, std::size_t j) {
    const auto a = seq[i].digits();
    const auto b = seq[j].digits();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  sorted_.reserve(count_);
  for (auto i : order_) sorted_.push_back(seq[i]);
  lcp_.assign(count_, 0);
  for (std::size_t i = 1; i < count_; ++i) {
    const auto a = sorted_[i - 1].digits();
    const auto b = sorted_[i].digits();
    unsigned l = 0;
    while (l < precision_ && a[l] == b[l]) ++l;
    lcp_[i] = l;
  }
}

std::vector<std::size_t> DiscOccupancy::run_lengths(unsigned depth) const {
  if (depth > precision_) throw PrecisionError("depth exceeds precision");
  std::vector<std::size_t> runs;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= count_; ++i) {
    if (i == count_ || lcp_[i] < depth) {
      runs.push_back(i - start);
      start = i;
    }
  }
  return runs;
}

std::uint64_t DiscOccupancy::sum_squares(unsigned depth) const {
  std::uint64_t s = 0;
  for (auto c : run_lengths(depth)) s += static_cast<std::uint64_t>(c) * c;
  return s;
}

std::vector<std::uint64_t> DiscOccupancy::centers(unsigned depth) const {
  if (depth > precision_) throw PrecisionError("depth exceeds precision");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < count_; ++i) {
    if (i == 0 || lcp_[i] < depth) out.push_back(sorted_[i].truncate(depth));
  }
  return out;
}

namespace {

// Smallest residue mod p^depth missing from `present`.
std::uint64_t first_empty_center(std::vector<std::uint64_t> present) {
  std::sort(present.begin(), present.end());
  std::uint64_t want = 0;
  for (auto c : present) {
    if (c != want) break;
    ++want;
  }
  return want;
}

}  // namespace

DiscrepancyReport exact_discrepancy(std::span<const PadicApprox> seq) {
  const DiscOccupancy occ(seq);
  const Prime p = occ.prime();
  const auto n = static_cast<long long>(occ.count());

  DiscrepancyReport report;
  report.count = occ.count();
  report.precision = occ.precision();
  // Depth 0: the whole ring holds every point, f = 0.
  report.finite_max = 0;
  report.witness = Disc{p, 0, 0};

  auto consider = [&](const Rational& dev, unsigned depth,
                      auto&& center_of) {
    if (dev > report.finite_max) {
      report.finite_max = dev;
      report.witness = Disc{p, depth, center_of()};
    }
  };

  std::size_t max_run = 0;
  for (unsigned k = 1; k <= occ.precision(); ++k) {
    const auto runs = occ.run_lengths(k);
    const Rational measure = inverse_pow(p.value(), k);
    const auto [lo, hi] = std::minmax_element(runs.begin(), runs.end());
    const auto index_of = [&](auto it) {
      return static_cast<std::size_t>(it - runs.begin());
    };
    // |c/N - p^{-k}| over nonempty discs peaks at the largest or smallest c.
    consider(abs(Rational(static_cast<long long>(*hi), n) - measure), k,
             [&] { return occ.centers(k)[index_of(hi)]; });
    consider(abs(Rational(static_cast<long long>(*lo), n) - measure), k,
             [&] { return occ.centers(k)[index_of(lo)]; });
    const auto discs = checked_pow(p.value(), k);
    if (!discs || runs.size() < *discs) {
      consider(measure, k, [&] { return first_empty_center(occ.centers(k)); });
    }
    if (k == occ.precision()) max_run = *hi;
  }

  report.limit_term = Rational(static_cast<long long>(max_run), n);
  if (report.limit_term > report.finite_max) {
    report.value = report.limit_term;
    report.witness.reset();
  } else {
    report.value = report.finite_max;
  }
  return report;
}

Rational l2_norm_sq(std::span<const PadicApprox> seq) {
  const DiscOccupancy occ(seq);
  const std::uint64_t p = occ.prime().value();
  const unsigned top = occ.precision();
  const Rational n_sq = Rational(BigInt(occ.count()) * occ.count());
  const Rational shell = 1 - Rational(1, p);  // mu{|y| = p^{-j}} / p^{-j}

  // Level j contributes shell * p^{-2j} * (S2_j / N^2 - p^{-j}), where S2_j is
  // the sum of squared disc counts at depth j.
  Rational total = 0;
  for (unsigned j = 0; j <= top; ++j) {
    const Rational pj = inverse_pow(p, j);
    total += shell * pj * pj * (Rational(BigInt(occ.sum_squares(j))) / n_sq - pj);
  }
  // For j > K the counts are frozen at depth K: two geometric series.
  const Rational s2 = Rational(BigInt(occ.sum_squares(top))) / n_sq;
  const Rational q2 = Rational(1, p * p);
  const Rational q3 = Rational(1, p * p * p);
  const Rational first2 = inverse_pow(p, 2 * (top + 1));
  const Rational first3 = inverse_pow(p, 3 * (top + 1));
  total += shell * (s2 * first2 / (1 - q2) - first3 / (1 - q3));
  return total;
}

}  // namespace zpdisc
