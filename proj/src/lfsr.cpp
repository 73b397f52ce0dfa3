#include "sg/lfsr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "sg/error.hpp"

namespace sg {

Bits parse_bits(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::InvalidArgument, std::string("bad character '") + c + "' in bit string");
    }
  }
  return out;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) s[i] = '1';
  }
  return s;
}

std::string format_bits(const LfsrState& state) { return format_bits(state.bits()); }

LfsrSpec::LfsrSpec(BinaryPolynomial charpoly) : charpoly_(std::move(charpoly)) {
  const auto d = charpoly_.degree();
  if (!d || *d < 1) throw Error(ErrorKind::InvalidArgument, "register length must be >= 1");
  if (!poly_is_primitive(charpoly_)) {
    throw Error(ErrorKind::InvalidArgument, to_string(charpoly_) + " is not primitive");
  }
  length_ = static_cast<unsigned>(*d);
  taps_ = charpoly_.mask() & ~(std::uint64_t{1} << length_);
}

LfsrState::LfsrState(Bits bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw Error(ErrorKind::InvalidArgument, "state bits must be 0 or 1");
  }
  if (std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; })) {
    throw Error(ErrorKind::InvalidState, "register state is all-zero");
  }
}

std::uint64_t LfsrState::packed() const {
  if (bits_.size() > 64) throw Error(ErrorKind::UnsupportedSize, "state longer than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) v |= std::uint64_t{bits_[i]} << i;
  return v;
}

BitSequence::BitSequence(Bits bits, std::optional<std::size_t> period)
    : bits_(std::move(bits)), period_(period) {
  if (!period_) return;
  const std::size_t t = *period_;
  if (t == 0 || bits_.size() % t != 0) {
    throw Error(ErrorKind::InvalidArgument, "sequence length is not a multiple of its period");
  }
  for (std::size_t i = t; i < bits_.size(); ++i) {
    if (bits_[i] != bits_[i - t]) {
      throw Error(ErrorKind::InvalidArgument, "sequence does not repeat with its declared period");
    }
  }
}

LfsrRegister::LfsrRegister(const LfsrSpec& spec, const LfsrState& state)
    : fill_(0), taps_(spec.taps()), top_(spec.length() - 1) {
  if (state.length() != spec.length()) {
    throw Error(ErrorKind::InvalidArgument,
                "state length " + std::to_string(state.length()) + " does not match register length " +
                    std::to_string(spec.length()));
  }
  fill_ = state.packed();
}

void LfsrRegister::step() noexcept {
  const std::uint64_t next = static_cast<std::uint64_t>(std::popcount(fill_ & taps_) & 1);
  fill_ = (fill_ >> 1) | (next << top_);
}

BitSequence lfsr_generate(const LfsrSpec& spec, const LfsrState& state, std::size_t n) {
  LfsrRegister reg(spec, state);
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = reg.output();
    reg.step();
  }
  std::optional<std::size_t> period;
  if (n != 0 && n % spec.period() == 0) period = spec.period();
  return BitSequence(std::move(out), period);
}

BitSequence decimate(const BitSequence& seq, std::uint64_t ratio, std::uint64_t offset) {
  if (!seq.period()) throw Error(ErrorKind::InvalidArgument, "decimation needs a periodic sequence");
  const std::uint64_t t = *seq.period();
  Bits out(t);
  std::uint64_t idx = offset % t;
  const std::uint64_t step = ratio % t;
  for (std::uint64_t k = 0; k < t; ++k) {
    out[k] = seq[idx];
    idx += step;
    if (idx >= t) idx -= t;
  }
  const std::uint64_t g = std::gcd(ratio, t);
  return BitSequence(std::move(out), t / (g == 0 ? t : g));
}

std::optional<std::size_t> window_find(const BitSequence& pn, std::span<const std::uint8_t> window) {
  if (!pn.period()) throw Error(ErrorKind::InvalidArgument, "window search needs a periodic sequence");
  if (std::all_of(window.begin(), window.end(), [](std::uint8_t b) { return b == 0; })) {
    return std::nullopt;
  }
  const std::size_t t = *pn.period();
  for (std::size_t p = 0; p < t; ++p) {
    bool match = true;
    for (std::size_t i = 0; i < window.size() && match; ++i) match = pn[(p + i) % t] == window[i];
    if (match) return p;
  }
  return std::nullopt;
}

}  // namespace sg
