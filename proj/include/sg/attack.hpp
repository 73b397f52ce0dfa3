#pragma once

// Deterministic state recovery for the shrinking generator from the top-left
// A x S corner of the interleaved configuration.
//
// Phase 1 extends IC column 0 (the data sequence decimated by 2^S - 1) to a
// full period with the recurrence of P_D and reads a_i at row
// n_i = i * (2^S - 1)^-1 mod (2^A - 1). Phase 2 slides each further known
// column against that period to find the selector offsets o_j, which are the
// positions of the ones in the selector state.

#include <cstdint>
#include <string>
#include <vector>

#include "sg/gf2.hpp"
#include "sg/interleaved.hpp"
#include "sg/lfsr.hpp"
#include "sg/shrinking.hpp"

namespace sg {

struct AttackInput {
  SgSpec spec;
  KnownBits known;

  // all cells (n, j), n < A, j < S present
  bool covers_submatrix() const;
};

struct AttackWork {
  std::uint64_t comparisons = 0;    // A-bit window comparisons in the offset search
  std::uint64_t expanded_bits = 0;  // column-0 bits produced by the recurrence
  std::uint64_t consumed_bits = 0;  // distinct known bits read
};

struct AttackResult {
  LfsrState sra_state;
  LfsrState srs_state;
  OffsetVector offsets;
  std::vector<std::uint64_t> row_positions;
  BinaryPolynomial column_poly;
  AttackWork work;
};

BinaryPolynomial column_poly(const SgSpec& spec);
std::vector<std::uint64_t> row_positions(unsigned A, unsigned S);

// Extends A consecutive column bits to one period of the column sequence.
BitSequence extend_column(std::span<const std::uint8_t> column_bits, const BinaryPolynomial& pd);

struct SraRecovery {
  LfsrState state;
  BitSequence column0;
  std::vector<std::uint64_t> row_positions;
  BinaryPolynomial column_poly;
  std::uint64_t consumed_bits = 0;
};

SraRecovery recover_sra_detailed(const AttackInput& input);
LfsrState recover_sra(const AttackInput& input);

struct SrsRecovery {
  LfsrState state;
  OffsetVector offsets;
  std::uint64_t comparisons = 0;
  std::uint64_t consumed_bits = 0;
};

SrsRecovery recover_srs(const AttackInput& input, const BitSequence& column0, const LfsrState& sra);

// Every candidate offset in [1, 2^S - 2] whose A-bit window in column0 equals
// column_bits. The attack relies on this having at most one element.
std::vector<std::uint64_t> matching_offsets(std::span<const std::uint8_t> column_bits,
                                            const BitSequence& column0, unsigned A, unsigned S);

AttackResult attack(const AttackInput& input);

// Largest A + S the exhaustive search accepts.
inline constexpr unsigned kBruteForceBudget = 24;

// Every canonical key (selector state starting with 1) consistent with all
// known bits, ascending. threads = 0 picks the hardware concurrency.
std::vector<ShrinkingKey> brute_force(const AttackInput& input, unsigned threads = 0);

// key=value lines; bit strings index 0 first.
std::string format_attack_result(const AttackResult& r);

}  // namespace sg
