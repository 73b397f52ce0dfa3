#pragma once

#include <cstdint>

#include "sg/gf2.hpp"
#include "sg/lfsr.hpp"

namespace sg {

// Public parameters: data register SRA (degree A) decimated by selector
// register SRS (degree S), both primitive, gcd(S, A) = 1 and S < A.
class SgSpec {
 public:
  SgSpec(BinaryPolynomial pa, BinaryPolynomial ps);

  const LfsrSpec& sra() const noexcept { return sra_; }
  const LfsrSpec& srs() const noexcept { return srs_; }
  unsigned A() const noexcept { return sra_.length(); }
  unsigned S() const noexcept { return srs_.length(); }

  std::uint64_t rows() const noexcept { return sra_.period(); }               // 2^A - 1
  std::uint64_t cols() const noexcept { return std::uint64_t{1} << (S() - 1); }  // 2^(S-1)

 private:
  LfsrSpec sra_;
  LfsrSpec srs_;
};

struct ShrinkingKey {
  LfsrState sra_state;
  LfsrState srs_state;

  friend bool operator==(const ShrinkingKey&, const ShrinkingKey&) = default;
  friend auto operator<=>(const ShrinkingKey&, const ShrinkingKey&) = default;
};

void validate_key(const SgSpec& spec, const ShrinkingKey& key);

// Streaming generator; holds cursor state, so one instance per thread.
class ShrinkingGenerator {
 public:
  ShrinkingGenerator(const SgSpec& spec, const ShrinkingKey& key);

  std::uint8_t next_bit();
  // advances both registers once; returns true when a bit was emitted into *out
  bool clock(std::uint8_t* out);

  const LfsrRegister& sra() const noexcept { return sra_; }
  const LfsrRegister& srs() const noexcept { return srs_; }

 private:
  LfsrRegister sra_;
  LfsrRegister srs_;
};

BitSequence shrink(const SgSpec& spec, const ShrinkingKey& key, std::size_t n);

// The shift-equivalent key whose selector state starts with 1; it produces
// the same keystream from position 0.
ShrinkingKey canonicalize(const SgSpec& spec, const ShrinkingKey& key);

std::uint64_t shrunken_period(unsigned A, unsigned S);

struct MeasuredPeriod {
  std::uint64_t state_cycle_outputs = 0;  // outputs emitted until the register pair first recurs
  std::uint64_t minimal_period = 0;       // smallest p with z_{i+p} = z_i for all i
};

MeasuredPeriod measure_period(const SgSpec& spec, const ShrinkingKey& key);

// Full-period keystream, length measure_period(...).state_cycle_outputs.
BitSequence shrunken_period_sequence(const SgSpec& spec, const ShrinkingKey& key);

struct LcBounds {
  std::uint64_t low_exclusive = 0;
  std::uint64_t high_inclusive = 0;
  // S = 1: the lower bound A/2 is fractional and reported as floor(A/2)
  bool degenerate = false;

  bool contains(std::uint64_t lc) const noexcept { return lc > low_exclusive && lc <= high_inclusive; }
};

LcBounds lc_bounds(unsigned A, unsigned S);

struct ShrunkenCharpoly {
  BinaryPolynomial base;  // P_D
  std::uint64_t exponent = 0;
  std::size_t lc = 0;
};

// Berlekamp-Massey over one full period, then checks the result is
// P_D^p with 2^(S-2) < p <= 2^(S-1).
ShrunkenCharpoly verify_shrunken_charpoly(const SgSpec& spec, const ShrinkingKey& key);

}  // namespace sg
