#include "sg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sg/attack.hpp"
#include "sg/error.hpp"
#include "sg/interleaved.hpp"
#include "sg/shrinking.hpp"

namespace sg::cli {

namespace {

struct Options {
  std::string pa, ps, sra, srs, known_file, keystream_file;
  std::size_t n = 0;
  unsigned s = 0;
  std::optional<std::uint64_t> max_rows;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SgSpec spec_from(const Options& o) {
  return SgSpec(BinaryPolynomial::parse(o.pa), BinaryPolynomial::parse(o.ps));
}

ShrinkingKey key_from(const Options& o) {
  return {LfsrState::parse(o.sra), LfsrState::parse(o.srs)};
}

// Intercepted bits from either a sparse position file or a contiguous prefix.
KnownBits intercepted_from(const Options& o, const SgSpec& spec) {
  if (!o.known_file.empty()) return parse_known_bits(read_file(o.known_file));
  const Bits prefix = parse_bits(read_file(o.keystream_file));
  submatrix_from_prefix(prefix, spec.A(), spec.S());  // length check
  return KnownBits::from_keystream(prefix);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InconsistentData:
    case ErrorKind::InsufficientInput:
    case ErrorKind::InvalidData:
      return kExitBadData;
    default:
      return kExitMalformed;
  }
}

void add_spec_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--pa", o.pa, "data register polynomial")->required();
  cmd->add_option("--ps", o.ps, "selector register polynomial")->required();
}

void add_key_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--sra", o.sra, "data register state, index 0 first")->required();
  cmd->add_option("--srs", o.srs, "selector register state, index 0 first")->required();
}

void add_intercept_flags(CLI::App* cmd, Options& o) {
  auto* known = cmd->add_option("--known", o.known_file, "known-bits file");
  auto* stream = cmd->add_option("--keystream", o.keystream_file, "contiguous keystream prefix file");
  known->excludes(stream);
  stream->excludes(known);
  cmd->callback([cmd] {
    if (cmd->count("--known") + cmd->count("--keystream") != 1) {
      throw CLI::RequiredError("one of --known or --keystream");
    }
  });
}

void do_gen(const Options& o, std::ostream& out) {
  const SgSpec spec = spec_from(o);
  out << format_bits(shrink(spec, key_from(o), o.n).bits()) << '\n';
}

void do_attack(const Options& o, std::ostream& out) {
  const SgSpec spec = spec_from(o);
  AttackInput input{spec, intercepted_from(o, spec)};
  out << format_attack_result(attack(input));
}

void do_brute(const Options& o, std::ostream& out) {
  const SgSpec spec = spec_from(o);
  AttackInput input{spec, intercepted_from(o, spec)};
  const auto keys = brute_force(input);
  out << "keys=" << keys.size() << '\n';
  for (const auto& k : keys) {
    out << "sra_state=" << format_bits(k.sra_state) << " srs_state=" << format_bits(k.srs_state) << '\n';
  }
}

void do_analyze(const Options& o, std::ostream& out) {
  const SgSpec spec = spec_from(o);
  const ShrinkingKey key = key_from(o);
  validate_key(spec, key);
  const MeasuredPeriod period = measure_period(spec, key);
  const LcBounds bounds = lc_bounds(spec.A(), spec.S());
  const ShrunkenCharpoly cp = verify_shrunken_charpoly(spec, key);
  out << "A=" << spec.A() << '\n'
      << "S=" << spec.S() << '\n'
      << "period=" << shrunken_period(spec.A(), spec.S()) << '\n'
      << "measured_period=" << period.minimal_period << '\n'
      << "lc=" << cp.lc << '\n'
      << "lc_bounds=(" << bounds.low_exclusive << "," << bounds.high_inclusive << "]\n";
  if (bounds.degenerate) out << "lc_bounds_note=S=1 lower bound A/2 taken as floor\n";
  out << "lc_in_bounds=" << (bounds.contains(cp.lc) ? "true" : "false") << '\n'
      << "pd=" << to_string(cp.base) << '\n'
      << "p=" << cp.exponent << '\n'
      << "interleaved=" << (shrunken_interleaved_check(spec, key) ? "true" : "false") << '\n';
}

void do_coset(const Options& o, std::ostream& out) {
  const BinaryPolynomial pa = BinaryPolynomial::parse(o.pa);
  if (!poly_is_primitive(pa)) throw Error(ErrorKind::InvalidArgument, to_string(pa) + " is not primitive");
  if (o.s < 1 || o.s >= *pa.degree()) {
    throw Error(ErrorKind::InvalidArgument, "--s must lie in [1, deg pa - 1]");
  }
  out << to_string(coset_min_poly((std::uint64_t{1} << o.s) - 1, pa)) << '\n';
}

void do_ic(const Options& o, std::ostream& out) {
  const SgSpec spec = spec_from(o);
  out << build_ic(intercepted_from(o, spec), spec.A(), spec.S()).dump(o.max_rows);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shrinking generator analysis and state recovery", "sgtool"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "print n shrunken bits");
  add_spec_flags(gen, o);
  add_key_flags(gen, o);
  gen->add_option("--n", o.n, "number of bits")->required();

  auto* atk = app.add_subcommand("attack", "recover both register states");
  add_spec_flags(atk, o);
  add_intercept_flags(atk, o);

  auto* brute = app.add_subcommand("brute", "exhaustive key search over canonical keys");
  add_spec_flags(brute, o);
  add_intercept_flags(brute, o);

  auto* analyze = app.add_subcommand("analyze", "period, linear complexity, interleaving");
  add_spec_flags(analyze, o);
  add_key_flags(analyze, o);

  auto* coset = app.add_subcommand("coset", "IC column polynomial for selector length s");
  coset->add_option("--pa", o.pa, "data register polynomial")->required();
  coset->add_option("--s", o.s, "selector length")->required();

  auto* ic = app.add_subcommand("ic", "dump the interleaved configuration");
  add_spec_flags(ic, o);
  add_intercept_flags(ic, o);
  ic->add_option("--max-rows", o.max_rows, "print at most this many rows");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  }

  try {
    if (gen->parsed()) do_gen(o, out);
    else if (atk->parsed()) do_attack(o, out);
    else if (brute->parsed()) do_brute(o, out);
    else if (analyze->parsed()) do_analyze(o, out);
    else if (coset->parsed()) do_coset(o, out);
    else if (ic->parsed()) do_ic(o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

}  // namespace sg::cli
