#include "sg/interleaved.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sg/error.hpp"

namespace sg {

void KnownBits::insert(std::uint64_t position, std::uint8_t bit) {
  if (bit > 1) throw Error(ErrorKind::InvalidArgument, "known bit must be 0 or 1");
  if (!entries_.emplace(position, bit).second) {
    throw Error(ErrorKind::InvalidArgument, "duplicate known position " + std::to_string(position));
  }
}

std::optional<std::uint8_t> KnownBits::at(std::uint64_t position) const {
  const auto it = entries_.find(position);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint64_t> KnownBits::max_position() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first;
}

KnownBits KnownBits::from_keystream(std::span<const std::uint8_t> bits) {
  KnownBits k;
  for (std::size_t i = 0; i < bits.size(); ++i) k.insert(i, bits[i]);
  return k;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

KnownBits parse_known_bits(std::string_view text) {
  KnownBits known;
  std::optional<std::uint64_t> last;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto bad = [&](const std::string& why) {
      return Error(ErrorKind::InvalidArgument,
                   "known-bits line " + std::to_string(line_no) + ": " + why);
    };
    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) throw bad("expected '<position> <bit>'");
    const std::string_view pos_text = line.substr(0, sep);
    const std::string_view bit_text = trim(line.substr(sep));
    std::uint64_t pos = 0;
    auto [ptr, ec] = std::from_chars(pos_text.data(), pos_text.data() + pos_text.size(), pos);
    if (ec != std::errc{} || ptr != pos_text.data() + pos_text.size()) throw bad("bad position");
    if (bit_text != "0" && bit_text != "1") throw bad("bit must be 0 or 1");
    if (last && pos <= *last) throw bad("positions must be strictly ascending");
    known.insert(pos, static_cast<std::uint8_t>(bit_text[0] - '0'));
    last = pos;
  }
  return known;
}

std::string format_known_bits(const KnownBits& known) {
  std::string out;
  for (const auto& [pos, bit] : known.entries()) {
    out += std::to_string(pos) + ' ' + static_cast<char>('0' + bit) + '\n';
  }
  return out;
}

std::vector<std::uint64_t> submatrix_positions(unsigned A, unsigned S) {
  const std::uint64_t cols = std::uint64_t{1} << (S - 1);
  std::vector<std::uint64_t> pos;
  pos.reserve(std::size_t{A} * S);
  for (std::uint64_t n = 0; n < A; ++n) {
    for (std::uint64_t j = 0; j < S; ++j) pos.push_back(n * cols + j);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

KnownBits submatrix_from_prefix(std::span<const std::uint8_t> prefix, unsigned A, unsigned S) {
  const std::uint64_t need = (std::uint64_t{A} - 1) * (std::uint64_t{1} << (S - 1)) + S;
  if (prefix.size() < need) {
    throw Error(ErrorKind::InsufficientInput,
                "keystream prefix has " + std::to_string(prefix.size()) + " bits, need " +
                    std::to_string(need));
  }
  KnownBits k;
  for (std::uint64_t p : submatrix_positions(A, S)) k.insert(p, prefix[p]);
  return k;
}

std::optional<std::uint8_t> InterleavedConfig::cell(std::uint64_t row, std::uint64_t col) const {
  const auto it = cells_.find({row, col});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

void InterleavedConfig::set(std::uint64_t row, std::uint64_t col, std::uint8_t bit) {
  if (row >= rows_ || col >= cols_) throw Error(ErrorKind::InvalidArgument, "cell outside the IC");
  cells_[{row, col}] = bit;
}

std::optional<Bits> InterleavedConfig::row_major() const {
  if (cells_.size() != rows_ * cols_) return std::nullopt;
  Bits out;
  out.reserve(cells_.size());
  for (const auto& [rc, bit] : cells_) out.push_back(bit);  // map order is row-major
  return out;
}

std::optional<Bits> InterleavedConfig::column(std::uint64_t col) const {
  Bits out(rows_);
  for (std::uint64_t r = 0; r < rows_; ++r) {
    const auto c = cell(r, col);
    if (!c) return std::nullopt;
    out[r] = *c;
  }
  return out;
}

std::string InterleavedConfig::dump(std::optional<std::uint64_t> max_rows) const {
  const std::uint64_t shown = max_rows ? std::min(*max_rows, rows_) : rows_;
  std::string out;
  out.reserve(shown * (cols_ + 1));
  for (std::uint64_t r = 0; r < shown; ++r) {
    for (std::uint64_t c = 0; c < cols_; ++c) {
      const auto v = cell(r, c);
      out += v ? static_cast<char>('0' + *v) : '.';
    }
    out += '\n';
  }
  return out;
}

InterleavedConfig build_ic(const KnownBits& known, unsigned A, unsigned S) {
  const std::uint64_t rows = (std::uint64_t{1} << A) - 1;
  const std::uint64_t cols = std::uint64_t{1} << (S - 1);
  InterleavedConfig ic(rows, cols);
  for (const auto& [pos, bit] : known.entries()) {
    if (pos >= rows * cols) {
      throw Error(ErrorKind::InvalidArgument,
                  "position " + std::to_string(pos) + " beyond one keystream period");
    }
    ic.set(pos / cols, pos % cols, bit);
  }
  return ic;
}

OffsetVector::OffsetVector(std::vector<std::uint64_t> offsets, unsigned S) : offsets_(std::move(offsets)) {
  const std::uint64_t bound = (std::uint64_t{1} << S) - 1;
  if (offsets_.empty() || offsets_[0] != 0) {
    throw Error(ErrorKind::InvalidArgument, "offset vector must start with o_0 = 0");
  }
  for (std::size_t j = 1; j < offsets_.size(); ++j) {
    if (offsets_[j] <= offsets_[j - 1] || offsets_[j] >= bound) {
      throw Error(ErrorKind::InvalidArgument, "offsets must increase strictly within [0, 2^S - 2]");
    }
  }
}

OffsetVector selector_offsets(const SgSpec& spec, const LfsrState& srs_state) {
  const BitSequence s = lfsr_generate(spec.srs(), srs_state, spec.srs().period());
  std::vector<std::uint64_t> ones;
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0) ones.push_back(i);
  }
  return OffsetVector(std::move(ones), spec.S());
}

std::uint64_t ic_source_index(std::uint64_t n, std::uint64_t j, const OffsetVector& offsets,
                              unsigned A, unsigned S) {
  if (j >= offsets.size()) {
    throw Error(ErrorKind::UnknownOffset, "offset o_" + std::to_string(j) + " not recovered");
  }
  const std::uint64_t t = (std::uint64_t{1} << A) - 1;
  const std::uint64_t ratio = ((std::uint64_t{1} << S) - 1) % t;
  return (mulmod_u64(n % t, ratio, t) + offsets[j]) % t;
}

bool is_interleaved(std::span<const std::uint8_t> seq, std::size_t m, const BinaryPolynomial& f) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "interleave size must be >= 1");
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial defines no recurrence");
  const std::size_t deg = *f.degree();
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0;; ++i) {
      const std::size_t top = j + (i + deg) * m;
      if (top >= seq.size()) break;
      unsigned acc = 0;
      for (std::size_t c = 0; c < deg; ++c) {
        if (f.coeff(c)) acc ^= seq[j + (i + c) * m];
      }
      if ((acc & 1U) != seq[top]) return false;
    }
  }
  return true;
}

bool shrunken_interleaved_check(const SgSpec& spec, const ShrinkingKey& key) {
  const BitSequence z = shrunken_period_sequence(spec, key);
  const BinaryPolynomial pd =
      coset_min_poly((std::uint64_t{1} << spec.S()) - 1, spec.sra().charpoly());
  return is_interleaved(z.bits(), spec.cols(), pd);
}

}  // namespace sg
