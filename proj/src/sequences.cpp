#include "zpdisc/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "zpdisc/errors.hpp"

namespace zpdisc {

SequenceSpec SequenceSpec::linear(const PadicApprox& a, const PadicApprox& b,
                                  std::size_t count) {
  require_compatible(a, b);
  if (count == 0) throw ParameterError("N must be at least 1");
  return {a.prime(), a.precision(), count, LinearSequence{a, b}};
}

SequenceSpec SequenceSpec::explicit_values(std::vector<PadicApprox> values) {
  require_uniform(values);
  const Prime p = values.front().prime();
  const unsigned k = values.front().precision();
  const std::size_t n = values.size();
  return {p, k, n, ExplicitSequence{std::move(values)}};
}

SequenceSpec SequenceSpec::random(Prime p, unsigned precision,
                                  std::size_t count, std::uint64_t seed) {
  if (count == 0) throw ParameterError("N must be at least 1");
  if (precision == 0) throw ParameterError("precision must be at least 1");
  modulus(p, precision);
  return {p, precision, count, RandomSequence{seed}};
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::vector<PadicApprox> generate(const SequenceSpec& spec) {
  std::vector<PadicApprox> out;
  out.reserve(spec.count);
  if (const auto* lin = std::get_if<LinearSequence>(&spec.variant)) {
    if (lin->a.prime() != spec.p || lin->a.precision() != spec.precision) {
      throw ParameterError("linear coefficients do not match the sequence precision");
    }
    require_compatible(lin->a, lin->b);
    PadicApprox term = lin->b;
    for (std::size_t n = 1; n <= spec.count; ++n) {
      term = add(term, lin->a);
      out.push_back(term);
    }
  } else if (const auto* ex = std::get_if<ExplicitSequence>(&spec.variant)) {
    for (const auto& v : ex->values) {
      if (v.prime() != spec.p || v.precision() != spec.precision) {
        throw ParameterError("explicit value does not match the sequence precision");
      }
    }
    out = ex->values;
  } else {
    SplitMix64 rng(std::get<RandomSequence>(spec.variant).seed);
    for (std::size_t n = 0; n < spec.count; ++n) {
      std::vector<std::uint32_t> digits(spec.precision);
      for (auto& d : digits) d = static_cast<std::uint32_t>(rng.below(spec.p));
      out.emplace_back(spec.p, std::move(digits));
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_key(std::string_view token, std::string_view key, unsigned& out) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    return false;
  }
  return parse_number(token.substr(key.size() + 1), out);
}

}  // namespace

SequenceSpec parse_sequence_file(std::string_view text) {
  std::optional<Prime> p;
  unsigned precision = 0;
  std::uint64_t mod = 0;
  std::vector<PadicApprox> values;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!p) {
      const auto space = line.find_first_of(" \t");
      if (space == std::string_view::npos) {
        throw ParseError(line_no, "expected header 'p=<int> K=<int>'");
      }
      unsigned pv = 0;
      if (!parse_key(line.substr(0, space), "p", pv) ||
          !parse_key(trim(line.substr(space)), "K", precision)) {
        throw ParseError(line_no, "expected header 'p=<int> K=<int>'");
      }
      try {
        p.emplace(pv);
        if (precision == 0) throw ParameterError("K must be at least 1");
        mod = modulus(*p, precision);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    std::uint64_t v = 0;
    if (!parse_number(line, v)) {
      throw ParseError(line_no, "not a non-negative integer: '" +
                                    std::string(line) + "'");
    }
    if (v >= mod) {
      throw ParseError(line_no, std::to_string(v) + " is not below p^K = " +
                                    std::to_string(mod));
    }
    values.push_back(PadicApprox::from_residue(v, *p, precision));
  }
  // End-of-input errors point at the last line (line 1 for an empty file).
  line_no = std::max<std::size_t>(line_no, 1);
  if (!p) throw ParseError(line_no, "missing header");
  if (values.empty()) throw ParseError(line_no, "no values");
  return SequenceSpec::explicit_values(std::move(values));
}

std::string emit_sequence_file(const SequenceSpec& spec) {
  std::ostringstream os;
  os << "p=" << spec.p.value() << " K=" << spec.precision << '\n';
  for (const auto& v : generate(spec)) os << v.residue() << '\n';
  return os.str();
}

}  // namespace zpdisc
