#include "zpdisc/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zpdisc/discrepancy.hpp"
#include "zpdisc/errors.hpp"
#include "zpdisc/leveque.hpp"
#include "zpdisc/report.hpp"
#include "zpdisc/sequences.hpp"
#include "zpdisc/verify.hpp"

namespace zpdisc {

namespace {

struct Options {
  std::optional<std::uint32_t> p;
  std::optional<unsigned> precision;
  std::optional<std::string> linear;
  std::optional<std::string> explicit_values;
  std::optional<std::uint64_t> random_seed;
  std::optional<std::string> input;
  std::optional<std::size_t> n;
  std::size_t n_start = 16;
  std::size_t n_end = 16384;
  double ratio = 2.0;
  std::optional<unsigned> trunc;
  std::string format;
  std::optional<std::string> out;
  bool no_timing = false;
  std::string suite = "all";
  std::uint64_t seed = 7;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void add_output_options(CLI::App* cmd, Options& o, const std::string& fallback) {
  cmd->add_option("--format", o.format, "Output format (default " + fallback + ")")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Write output to FILE instead of stdout");
}

void add_sequence_options(CLI::App* cmd, Options& o, bool with_n) {
  cmd->add_option("--p", o.p, "Prime p");
  cmd->add_option("--precision", o.precision, "Digits K per element");
  cmd->add_option("--linear", o.linear, "Linear sequence n*a+b: a=INT,b=INT");
  cmd->add_option("--explicit", o.explicit_values, "Explicit values v1,v2,...");
  cmd->add_option("--random-seed", o.random_seed, "Uniform random digits");
  cmd->add_option("--input", o.input, "Sequence file")->check(CLI::ExistingFile);
  if (with_n) cmd->add_option("--n", o.n, "Number of terms N");
}

Prime require_prime(const Options& o) {
  if (!o.p) throw UsageError("--p is required for this sequence source");
  return Prime(*o.p);
}

unsigned resolve_precision(const Options& o, Prime p) {
  if (o.precision) {
    if (*o.precision == 0) throw UsageError("--precision must be at least 1");
    return *o.precision;
  }
  return std::min(16U, max_precision(p));
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw UsageError("bad integer '" + s + "' in " + what);
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

struct LinearArgs {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

LinearArgs parse_linear(const std::string& text) {
  LinearArgs out;
  bool have_a = false, have_b = false;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--linear expects a=INT,b=INT");
    const auto key = part.substr(0, eq);
    const auto value = parse_int(part.substr(eq + 1), "--linear");
    if (key == "a") {
      out.a = value;
      have_a = true;
    } else if (key == "b") {
      out.b = value;
      have_b = true;
    } else {
      throw UsageError("--linear: unknown key '" + key + "'");
    }
  }
  if (!have_a || !have_b) throw UsageError("--linear expects a=INT,b=INT");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_sources(const Options& o) {
  return static_cast<int>(o.linear.has_value()) +
         static_cast<int>(o.explicit_values.has_value()) +
         static_cast<int>(o.random_seed.has_value()) +
         static_cast<int>(o.input.has_value());
}

/// Builds the sequence spec; `n_override` replaces --n (used by scan).
SequenceSpec resolve_spec(const Options& o,
                          std::optional<std::size_t> n_override = {}) {
  if (count_sources(o) != 1) {
    throw UsageError(
        "give exactly one of --linear, --explicit, --random-seed, --input");
  }
  const auto n = n_override ? n_override : o.n;
  if (o.input) {
    auto spec = parse_sequence_file(read_file(*o.input));
    if (o.p && Prime(*o.p) != spec.p) throw UsageError("--p disagrees with the file header");
    if (o.precision && *o.precision != spec.precision) {
      throw UsageError("--precision disagrees with the file header");
    }
    if (n && *n != spec.count) throw UsageError("--n disagrees with the file length");
    return spec;
  }
  const Prime p = require_prime(o);
  const unsigned k = resolve_precision(o, p);
  if (o.explicit_values) {
    std::vector<PadicApprox> values;
    for (const auto& part : split(*o.explicit_values, ',')) {
      values.push_back(PadicApprox::from_integer(parse_int(part, "--explicit"), p, k));
    }
    if (values.empty()) throw UsageError("--explicit needs at least one value");
    if (n && *n != values.size()) throw UsageError("--n disagrees with --explicit");
    return SequenceSpec::explicit_values(std::move(values));
  }
  if (!n) throw UsageError("--n is required for this sequence source");
  if (*n == 0) throw UsageError("--n must be at least 1");
  if (o.linear) {
    const auto args = parse_linear(*o.linear);
    return SequenceSpec::linear(PadicApprox::from_integer(args.a, p, k),
                                PadicApprox::from_integer(args.b, p, k), *n);
  }
  return SequenceSpec::random(p, k, *n, *o.random_seed);
}

unsigned resolve_trunc(const Options& o, const SequenceSpec& spec) {
  if (o.trunc) {
    if (*o.trunc == 0) throw UsageError("--trunc must be at least 1");
    return *o.trunc;
  }
  unsigned k = 1;
  while (k < spec.precision && checked_pow(spec.p.value(), k + 1, 1U << 20)) ++k;
  return k;
}

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void emit_discrepancy(const Options& o, std::ostream& os) {
  const auto spec = resolve_spec(o);
  const auto report = exact_discrepancy(generate(spec));
  if (o.format == "json") {
    os << to_json(report).dump(2) << '\n';
    return;
  }
  os << "value,witness_depth,witness_center,limit_term,finite_max,N,K\n"
     << to_decimal_string(report.value) << ',';
  if (report.witness) {
    os << report.witness->depth << ',' << report.witness->center;
  } else {
    os << "limit,";
  }
  os << ',' << to_decimal_string(report.limit_term) << ','
     << to_decimal_string(report.finite_max) << ',' << report.count << ','
     << report.precision << '\n';
}

void emit_bound(const Options& o, std::ostream& os) {
  const auto spec = resolve_spec(o);
  const auto report = discrepancy_bound(generate(spec), resolve_trunc(o, spec));
  if (o.format == "json") {
    os << to_json(report).dump(2) << '\n';
    return;
  }
  os << "p,N,k_trunc,s_trunc,tail,c_p,bound\n"
     << report.p.value() << ',' << report.count << ',' << report.k_trunc << ','
     << decimal(report.s_trunc) << ',' << to_decimal_string(report.tail) << ','
     << decimal(report.c_p) << ',' << decimal(report.bound) << '\n';
}

void emit_weyl(const Options& o, std::ostream& os) {
  const auto spec = resolve_spec(o);
  const auto table = weyl_table(generate(spec), resolve_trunc(o, spec));
  if (o.format == "json") {
    os << to_json(table).dump(2) << '\n';
    return;
  }
  os << "character,re,im,abs\n";
  for (const auto& e : table.entries()) {
    os << e.zeta.to_string() << ',' << decimal(e.value.real()) << ','
       << decimal(e.value.imag()) << ',' << decimal(std::abs(e.value)) << '\n';
  }
}

void emit_l2norm(const Options& o, std::ostream& os) {
  const auto spec = resolve_spec(o);
  const auto value = l2_norm_sq(generate(spec));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["l2_norm_sq"] = to_fraction_string(value);
    j["N"] = spec.count;
    j["K"] = spec.precision;
    os << j.dump(2) << '\n';
    return;
  }
  os << "l2_norm_sq,N,K\n"
     << to_decimal_string(value) << ',' << spec.count << ',' << spec.precision
     << '\n';
}

struct ScanRow {
  std::size_t n;
  Rational discrepancy;
  double bound;
  double ratio;
  double runtime_ms;
};

void emit_scan(const Options& o, std::ostream& os) {
  if (o.input || o.explicit_values) {
    throw UsageError("scan needs --linear or --random-seed");
  }
  if (!(o.ratio > 1.0)) throw UsageError("--ratio must exceed 1");
  if (o.n_start == 0 || o.n_end < o.n_start) {
    throw UsageError("need 1 <= --n-start <= --n-end");
  }
  std::vector<std::size_t> sizes;
  for (unsigned j = 0;; ++j) {
    const auto n = static_cast<std::size_t>(
        std::llround(static_cast<double>(o.n_start) * std::pow(o.ratio, j)));
    if (n > o.n_end) break;
    if (sizes.empty() || n != sizes.back()) sizes.push_back(n);
  }

  std::vector<ScanRow> rows;
  for (const auto n : sizes) {
    const auto spec = resolve_spec(o, n);
    const auto start = std::chrono::steady_clock::now();
    const auto seq = generate(spec);
    const auto d = exact_discrepancy(seq).value;
    const auto b = discrepancy_bound(seq, resolve_trunc(o, spec));
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        o.no_timing
            ? 0.0
            : std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back({n, d, b.bound, b.bound / to_double(d), ms});
  }

  // Ordinary least squares of log(bound) on log(N).
  double slope = 0.0, stderr_slope = 0.0, rms = 0.0;
  if (rows.size() >= 2) {
    const double m = static_cast<double>(rows.size());
    double sx = 0, sy = 0;
    for (const auto& r : rows) {
      sx += std::log(static_cast<double>(r.n));
      sy += std::log(r.bound);
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (const auto& r : rows) {
      const double dx = std::log(static_cast<double>(r.n)) - mx;
      sxx += dx * dx;
      sxy += dx * (std::log(r.bound) - my);
    }
    slope = sxy / sxx;
    double ssr = 0;
    for (const auto& r : rows) {
      const double e = std::log(r.bound) - my -
                       slope * (std::log(static_cast<double>(r.n)) - mx);
      ssr += e * e;
    }
    rms = std::sqrt(ssr / m);
    if (rows.size() > 2) stderr_slope = std::sqrt(ssr / (m - 2) / sxx);
  }

  if (o.format == "json") {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"N", r.n},
                     {"discrepancy", to_fraction_string(r.discrepancy)},
                     {"bound", r.bound},
                     {"ratio", r.ratio},
                     {"runtime_ms", r.runtime_ms}});
    }
    j["rows"] = std::move(arr);
    j["slope"] = slope;
    j["slope_stderr"] = stderr_slope;
    j["rms_residual"] = rms;
    os << j.dump(2) << '\n';
    return;
  }
  os << "N,discrepancy,bound,ratio,runtime_ms\n";
  for (const auto& r : rows) {
    os << r.n << ',' << to_decimal_string(r.discrepancy) << ','
       << decimal(r.bound) << ',' << decimal(r.ratio) << ','
       << decimal(r.runtime_ms) << '\n';
  }
  os << "# slope=" << decimal(slope) << " slope_stderr=" << decimal(stderr_slope)
     << " rms_residual=" << decimal(rms) << '\n';
}

int emit_verify(const Options& o, std::ostream& os) {
  const Prime p(o.p.value_or(2));
  const auto results = run_suite(o.suite, p, o.seed);
  bool all = true;
  for (const auto& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
       << '\n';
    all = all && r.passed;
  }
  os << (all ? "all checks passed" : "verification FAILED") << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact discrepancy and LeVeque-type bounds for sequences in Z_p"};
  app.require_subcommand(1);
  Options o;

  auto* disc = app.add_subcommand("discrepancy", "Exact discrepancy D_N");
  add_sequence_options(disc, o, true);
  add_output_options(disc, o, "json");

  auto* bound = app.add_subcommand("bound", "Fourier-analytic upper bound");
  add_sequence_options(bound, o, true);
  bound->add_option("--trunc", o.trunc, "Truncation exponent K_trunc");
  add_output_options(bound, o, "json");

  auto* weyl = app.add_subcommand("weyl", "Weyl sums for ||zeta|| <= p^trunc");
  add_sequence_options(weyl, o, true);
  weyl->add_option("--trunc", o.trunc, "Truncation exponent K_trunc");
  add_output_options(weyl, o, "json");

  auto* l2 = app.add_subcommand("l2norm", "Exact L2 norm of the local discrepancy");
  add_sequence_options(l2, o, true);
  add_output_options(l2, o, "json");

  auto* scan = app.add_subcommand("scan", "Discrepancy and bound over a sweep of N");
  add_sequence_options(scan, o, false);
  scan->add_option("--n-start", o.n_start, "First N");
  scan->add_option("--n-end", o.n_end, "Last N (inclusive bound)");
  scan->add_option("--ratio", o.ratio, "Geometric ratio between sweep points");
  scan->add_option("--trunc", o.trunc, "Truncation exponent K_trunc");
  scan->add_flag("--no-timing", o.no_timing, "Write runtime_ms as 0");
  add_output_options(scan, o, "csv");

  auto* verify = app.add_subcommand("verify", "Run the oracle verification suites");
  verify->add_option("--suite", o.suite, "Suite name or 'all'")
      ->check(CLI::IsMember([] {
        auto names = suite_names();
        names.push_back("all");
        return names;
      }()));
  verify->add_option("--p", o.p, "Prime p (<= 13)");
  verify->add_option("--seed", o.seed, "Seed for randomized checks");
  verify->add_option("--out", o.out, "Write output to FILE instead of stdout");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  // Subcommands share one Options, so the per-command default is applied here.
  if (o.format.empty()) o.format = *scan ? "csv" : "json";

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*disc) {
      emit_discrepancy(o, buffer);
    } else if (*bound) {
      emit_bound(o, buffer);
    } else if (*weyl) {
      emit_weyl(o, buffer);
    } else if (*l2) {
      emit_l2norm(o, buffer);
    } else if (*scan) {
      emit_scan(o, buffer);
    } else {
      code = emit_verify(o, buffer);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out) {
    std::ofstream file(*o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *o.out << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace zpdisc
