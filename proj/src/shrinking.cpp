#include "sg/shrinking.hpp"

#include <numeric>
#include <string>

#include "sg/error.hpp"

namespace sg {

SgSpec::SgSpec(BinaryPolynomial pa, BinaryPolynomial ps) : sra_(std::move(pa)), srs_(std::move(ps)) {
  if (S() >= A()) {
    throw Error(ErrorKind::InvalidArgument, "selector length S=" + std::to_string(S()) +
                                                " must be smaller than data length A=" +
                                                std::to_string(A()));
  }
  if (std::gcd(S(), A()) != 1) {
    throw Error(ErrorKind::InvalidArgument, "register lengths must be coprime, got A=" +
                                                std::to_string(A()) + " S=" + std::to_string(S()));
  }
}

void validate_key(const SgSpec& spec, const ShrinkingKey& key) {
  if (key.sra_state.length() != spec.A() || key.srs_state.length() != spec.S()) {
    throw Error(ErrorKind::InvalidArgument, "key lengths do not match the generator");
  }
}

ShrinkingGenerator::ShrinkingGenerator(const SgSpec& spec, const ShrinkingKey& key)
    : sra_(spec.sra(), key.sra_state), srs_(spec.srs(), key.srs_state) {
  validate_key(spec, key);
}

bool ShrinkingGenerator::clock(std::uint8_t* out) {
  const bool keep = srs_.output() != 0;
  if (keep) *out = sra_.output();
  sra_.step();
  srs_.step();
  return keep;
}

std::uint8_t ShrinkingGenerator::next_bit() {
  std::uint8_t bit = 0;
  while (!clock(&bit)) {
  }
  return bit;
}

BitSequence shrink(const SgSpec& spec, const ShrinkingKey& key, std::size_t n) {
  ShrinkingGenerator gen(spec, key);
  Bits out(n);
  for (auto& b : out) b = gen.next_bit();
  return BitSequence(std::move(out));
}

namespace {

Bits unpack(std::uint64_t fill, unsigned len) {
  Bits b(len);
  for (unsigned i = 0; i < len; ++i) b[i] = static_cast<std::uint8_t>((fill >> i) & 1U);
  return b;
}

}  // namespace

ShrinkingKey canonicalize(const SgSpec& spec, const ShrinkingKey& key) {
  validate_key(spec, key);
  LfsrRegister a(spec.sra(), key.sra_state);
  LfsrRegister s(spec.srs(), key.srs_state);
  while (s.output() == 0) {
    a.step();
    s.step();
  }
  return {LfsrState(unpack(a.fill(), spec.A())), LfsrState(unpack(s.fill(), spec.S()))};
}

std::uint64_t shrunken_period(unsigned A, unsigned S) {
  return ((std::uint64_t{1} << A) - 1) << (S - 1);
}

BitSequence shrunken_period_sequence(const SgSpec& spec, const ShrinkingKey& key) {
  ShrinkingGenerator gen(spec, key);
  const std::uint64_t a0 = gen.sra().fill();
  const std::uint64_t s0 = gen.srs().fill();
  Bits out;
  std::uint8_t bit = 0;
  do {
    if (gen.clock(&bit)) out.push_back(bit);
  } while (gen.sra().fill() != a0 || gen.srs().fill() != s0);
  const std::size_t t = out.size();
  return BitSequence(std::move(out), t);
}

MeasuredPeriod measure_period(const SgSpec& spec, const ShrinkingKey& key) {
  const BitSequence z = shrunken_period_sequence(spec, key);
  const std::uint64_t t = z.size();
  MeasuredPeriod m{t, t};
  // the minimal period divides the state-cycle output count
  for (std::uint64_t d = 1; d < t; ++d) {
    if (t % d != 0) continue;
    bool periodic = true;
    for (std::uint64_t i = 0; i + d < t && periodic; ++i) periodic = z[i] == z[i + d];
    if (periodic) {
      m.minimal_period = d;
      break;
    }
  }
  return m;
}

LcBounds lc_bounds(unsigned A, unsigned S) {
  if (S == 1) return {A / 2, A, true};
  return {std::uint64_t{A} << (S - 2), std::uint64_t{A} << (S - 1), false};
}

ShrunkenCharpoly verify_shrunken_charpoly(const SgSpec& spec, const ShrinkingKey& key) {
  // two periods, so that 2 * LC bits are available even for tiny registers
  const Bits one = shrunken_period_sequence(spec, key).bits();
  Bits two = one;
  two.insert(two.end(), one.begin(), one.end());
  const LinearComplexity bm = berlekamp_massey(two);
  const BinaryPolynomial pd =
      coset_min_poly((std::uint64_t{1} << spec.S()) - 1, spec.sra().charpoly());
  const std::size_t base_deg = *pd.degree();
  if (bm.lc % base_deg != 0) {
    throw Error(ErrorKind::ConventionMismatch,
                "linear complexity " + std::to_string(bm.lc) + " is not a multiple of deg P_D");
  }
  const std::uint64_t p = bm.lc / base_deg;
  if (pow(pd, p) != bm.charpoly) {
    throw Error(ErrorKind::ConventionMismatch,
                "characteristic polynomial " + to_string(bm.charpoly) + " is not a power of " +
                    to_string(pd));
  }
  // 2^(S-2) < p <= 2^(S-1), written without the fractional S = 1 bound
  const std::uint64_t half = std::uint64_t{1} << (spec.S() - 1);
  if (!(2 * p > half && p <= half)) {
    throw Error(ErrorKind::ConventionMismatch,
                "exponent " + std::to_string(p) + " outside (2^(S-2), 2^(S-1)]");
  }
  return {pd, p, bm.lc};
}

}  // namespace sg
