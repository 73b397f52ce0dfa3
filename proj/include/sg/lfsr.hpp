#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sg/gf2.hpp"

namespace sg {

using Bits = std::vector<std::uint8_t>;

// '0'/'1' text, index 0 first; whitespace is ignored on parse.
Bits parse_bits(std::string_view text);
std::string format_bits(std::span<const std::uint8_t> bits);

// Register with a primitive characteristic polynomial.
class LfsrSpec {
 public:
  explicit LfsrSpec(BinaryPolynomial charpoly);

  const BinaryPolynomial& charpoly() const noexcept { return charpoly_; }
  unsigned length() const noexcept { return length_; }
  std::uint64_t period() const noexcept { return (std::uint64_t{1} << length_) - 1; }
  // c_0 .. c_{L-1} packed, bit i = c_i
  std::uint64_t taps() const noexcept { return taps_; }

 private:
  BinaryPolynomial charpoly_;
  unsigned length_ = 0;
  std::uint64_t taps_ = 0;
};

// The first L terms of the register's output sequence.
class LfsrState {
 public:
  explicit LfsrState(Bits bits);
  static LfsrState parse(std::string_view text) { return LfsrState(parse_bits(text)); }

  const Bits& bits() const noexcept { return bits_; }
  std::size_t length() const noexcept { return bits_.size(); }
  std::uint64_t packed() const;  // bit i = bits[i]

  friend bool operator==(const LfsrState&, const LfsrState&) = default;
  friend auto operator<=>(const LfsrState&, const LfsrState&) = default;

 private:
  Bits bits_;
};

std::string format_bits(const LfsrState& state);

class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(Bits bits, std::optional<std::size_t> period = std::nullopt);

  const Bits& bits() const noexcept { return bits_; }
  std::optional<std::size_t> period() const noexcept { return period_; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  Bits bits_;
  std::optional<std::size_t> period_;
};

// Fibonacci stepping: the output is the state followed by
// a_{k+L} = sum c_i a_{k+i}.
class LfsrRegister {
 public:
  LfsrRegister(const LfsrSpec& spec, const LfsrState& state);

  std::uint8_t output() const noexcept { return static_cast<std::uint8_t>(fill_ & 1U); }
  void step() noexcept;
  std::uint64_t fill() const noexcept { return fill_; }

 private:
  std::uint64_t fill_;
  std::uint64_t taps_;
  unsigned top_;
};

// One period when n equals spec.period(); no period is declared otherwise.
BitSequence lfsr_generate(const LfsrSpec& spec, const LfsrState& state, std::size_t n);

// seq[(offset + k * ratio) mod T] for k < T.
BitSequence decimate(const BitSequence& seq, std::uint64_t ratio, std::uint64_t offset);

// Cyclic position of window inside one period of pn.
std::optional<std::size_t> window_find(const BitSequence& pn, std::span<const std::uint8_t> window);

}  // namespace sg
