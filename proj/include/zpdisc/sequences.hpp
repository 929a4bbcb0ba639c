#pragma once

// Finite sequences {alpha_1, ..., alpha_N} in Z_p.
//
// Sequence file format (LF-terminated):
//
//   p=<int> K=<int>
//   <decimal integer in [0, p^K)>      one per line
//
// Lines starting with '#' are comments. Blank lines are ignored.
//
// Random sequences draw each base-p digit uniformly from splitmix64
// (Steele, Lea & Flood constants) seeded with the given 64-bit seed, using
// rejection sampling so each digit is exactly uniform. The stream is:
// for n = 1..N, for i = 0..K-1: digit_i(alpha_n). This generator is
// versioned as "splitmix64-v1"; changing it changes every random run.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zpdisc/padic.hpp"

namespace zpdisc {

inline constexpr std::string_view kRandomGeneratorVersion = "splitmix64-v1";

struct LinearSequence {
  PadicApprox a;
  PadicApprox b;
  friend bool operator==(const LinearSequence&, const LinearSequence&) = default;
};

struct ExplicitSequence {
  std::vector<PadicApprox> values;
  friend bool operator==(const ExplicitSequence&,
                         const ExplicitSequence&) = default;
};

struct RandomSequence {
  std::uint64_t seed = 0;
  friend bool operator==(const RandomSequence&, const RandomSequence&) = default;
};

struct SequenceSpec {
  Prime p;
  unsigned precision;
  std::size_t count;
  std::variant<LinearSequence, ExplicitSequence, RandomSequence> variant;

  static SequenceSpec linear(const PadicApprox& a, const PadicApprox& b,
                             std::size_t count);
  static SequenceSpec explicit_values(std::vector<PadicApprox> values);
  static SequenceSpec random(Prime p, unsigned precision, std::size_t count,
                             std::uint64_t seed);

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Linear: alpha_n = n a + b for n = 1..N. Explicit: echoes the list.
/// Random: see the header comment.
std::vector<PadicApprox> generate(const SequenceSpec& spec);

/// Throws ParseError (with 1-based line number) on malformed input.
SequenceSpec parse_sequence_file(std::string_view text);

/// Canonical text for any SequenceSpec (the generated values are written out).
std::string emit_sequence_file(const SequenceSpec& spec);

}  // namespace zpdisc
