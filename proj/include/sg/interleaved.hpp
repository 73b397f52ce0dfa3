#pragma once

// Interleaved configuration (IC) of a shrunken sequence: one period laid out
// row-major as a (2^A - 1) x 2^(S-1) matrix. Column j of the IC is the data
// sequence decimated by 2^S - 1 and started at o_j, where o_j is the index of
// the (j+1)-th one in the selector sequence.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sg/gf2.hpp"
#include "sg/lfsr.hpp"
#include "sg/shrinking.hpp"

namespace sg {

// Intercepted keystream bits by absolute position.
class KnownBits {
 public:
  KnownBits() = default;

  void insert(std::uint64_t position, std::uint8_t bit);
  std::optional<std::uint8_t> at(std::uint64_t position) const;
  bool contains(std::uint64_t position) const { return entries_.count(position) != 0; }
  void erase(std::uint64_t position) { entries_.erase(position); }

  const std::map<std::uint64_t, std::uint8_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::optional<std::uint64_t> max_position() const;

  // Every bit of a contiguous keystream prefix starting at position 0.
  static KnownBits from_keystream(std::span<const std::uint8_t> bits);

 private:
  std::map<std::uint64_t, std::uint8_t> entries_;
};

// Lines "<position> <bit>", '#' to end of line is a comment, positions
// strictly ascending.
KnownBits parse_known_bits(std::string_view text);
std::string format_known_bits(const KnownBits& known);

// Positions n * 2^(S-1) + j of the top-left A x S corner of the IC.
std::vector<std::uint64_t> submatrix_positions(unsigned A, unsigned S);

// Extracts the A x S corner from a contiguous prefix, which must hold at
// least (A-1) * 2^(S-1) + S bits.
KnownBits submatrix_from_prefix(std::span<const std::uint8_t> prefix, unsigned A, unsigned S);

class InterleavedConfig {
 public:
  InterleavedConfig(std::uint64_t rows, std::uint64_t cols) : rows_(rows), cols_(cols) {}

  std::uint64_t rows() const noexcept { return rows_; }
  std::uint64_t cols() const noexcept { return cols_; }
  std::size_t known_cells() const noexcept { return cells_.size(); }

  std::optional<std::uint8_t> cell(std::uint64_t row, std::uint64_t col) const;
  void set(std::uint64_t row, std::uint64_t col, std::uint8_t bit);

  // Row-major readback; nullopt when any cell is unknown.
  std::optional<Bits> row_major() const;
  // nullopt when any cell of the column is unknown.
  std::optional<Bits> column(std::uint64_t col) const;

  // One row per line, '.' for unknown cells.
  std::string dump(std::optional<std::uint64_t> max_rows = std::nullopt) const;

 private:
  std::uint64_t rows_;
  std::uint64_t cols_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint8_t> cells_;
};

InterleavedConfig build_ic(const KnownBits& known, unsigned A, unsigned S);

// o_0 .. o_k: o_0 = 0, strictly increasing, each below 2^S - 1.
class OffsetVector {
 public:
  OffsetVector(std::vector<std::uint64_t> offsets, unsigned S);

  const std::vector<std::uint64_t>& values() const noexcept { return offsets_; }
  std::size_t size() const noexcept { return offsets_.size(); }
  std::uint64_t operator[](std::size_t j) const { return offsets_.at(j); }

  friend bool operator==(const OffsetVector&, const OffsetVector&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
};

// The offsets of every selector one within a period, from a known selector state.
OffsetVector selector_offsets(const SgSpec& spec, const LfsrState& srs_state);

// (n (2^S - 1) + o_j) mod (2^A - 1): the data sequence index feeding cell (n, j).
std::uint64_t ic_source_index(std::uint64_t n, std::uint64_t j, const OffsetVector& offsets,
                              unsigned A, unsigned S);

// true iff each stride-m subsequence obeys the recurrence of f. Subsequences
// shorter than deg f + 1 constrain nothing.
bool is_interleaved(std::span<const std::uint8_t> seq, std::size_t m, const BinaryPolynomial& f);

bool shrunken_interleaved_check(const SgSpec& spec, const ShrinkingKey& key);

}  // namespace sg
