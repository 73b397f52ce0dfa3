#include "sg/attack.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "sg/error.hpp"

namespace sg {

namespace {

std::uint64_t data_period(unsigned A) { return (std::uint64_t{1} << A) - 1; }
std::uint64_t selector_period(unsigned S) { return (std::uint64_t{1} << S) - 1; }

// Bits of IC column j at rows 0..A-1.
Bits known_column(const AttackInput& input, std::uint64_t j) {
  const unsigned a = input.spec.A();
  const std::uint64_t cols = input.spec.cols();
  Bits out(a);
  for (std::uint64_t n = 0; n < a; ++n) {
    const auto bit = input.known.at(n * cols + j);
    if (!bit) {
      throw Error(ErrorKind::InsufficientInput,
                  "IC cell (" + std::to_string(n) + ", " + std::to_string(j) + ") at keystream position " +
                      std::to_string(n * cols + j) + " is not known");
    }
    out[n] = *bit;
  }
  return out;
}

template <typename F>
auto in_phase(const char* phase, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(phase) + ": " + e.what());
  }
}

}  // namespace

bool AttackInput::covers_submatrix() const {
  for (std::uint64_t p : submatrix_positions(spec.A(), spec.S())) {
    if (!known.contains(p)) return false;
  }
  return true;
}

BinaryPolynomial column_poly(const SgSpec& spec) {
  return coset_min_poly(selector_period(spec.S()), spec.sra().charpoly());
}

std::vector<std::uint64_t> row_positions(unsigned A, unsigned S) {
  const std::uint64_t t = data_period(A);
  const std::uint64_t inv = mod_inverse(selector_period(S) % t, t);
  std::vector<std::uint64_t> n(A);
  for (unsigned i = 0; i < A; ++i) n[i] = mulmod_u64(i, inv, t);
  return n;
}

BitSequence extend_column(std::span<const std::uint8_t> column_bits, const BinaryPolynomial& pd) {
  const auto deg = pd.degree();
  if (!deg || *deg != column_bits.size()) {
    throw Error(ErrorKind::InvalidArgument, "column window length must equal deg P_D");
  }
  if (std::all_of(column_bits.begin(), column_bits.end(), [](std::uint8_t b) { return b == 0; })) {
    throw Error(ErrorKind::InvalidData, "all-zero column window cannot belong to a PN-sequence");
  }
  const LfsrSpec column_register(pd);
  return lfsr_generate(column_register, LfsrState(Bits(column_bits.begin(), column_bits.end())),
                       column_register.period());
}

SraRecovery recover_sra_detailed(const AttackInput& input) {
  const unsigned a = input.spec.A();
  const Bits first = known_column(input, 0);
  BinaryPolynomial pd = column_poly(input.spec);
  BitSequence d0 = extend_column(first, pd);
  std::vector<std::uint64_t> rows = row_positions(a, input.spec.S());
  Bits state(a);
  for (unsigned i = 0; i < a; ++i) state[i] = d0[rows[i]];
  return {LfsrState(std::move(state)), std::move(d0), std::move(rows), std::move(pd), a};
}

LfsrState recover_sra(const AttackInput& input) { return recover_sra_detailed(input).state; }

std::vector<std::uint64_t> matching_offsets(std::span<const std::uint8_t> column_bits,
                                            const BitSequence& column0, unsigned A, unsigned S) {
  const std::uint64_t t = data_period(A);
  const std::uint64_t inv = mod_inverse(selector_period(S) % t, t);
  std::vector<std::uint64_t> hits;
  for (std::uint64_t o = 1; o < selector_period(S); ++o) {
    const std::uint64_t start = mulmod_u64(o, inv, t);
    bool match = true;
    for (std::size_t n = 0; n < column_bits.size() && match; ++n) {
      match = column0[(start + n) % t] == column_bits[n];
    }
    if (match) hits.push_back(o);
  }
  return hits;
}

SrsRecovery recover_srs(const AttackInput& input, const BitSequence& column0, const LfsrState& sra) {
  const unsigned a = input.spec.A();
  const unsigned s = input.spec.S();
  const std::uint64_t t = data_period(a);
  if (column0.size() != t) throw Error(ErrorKind::InvalidArgument, "column 0 must span one period");
  if (sra.length() != a || sra.bits()[0] != column0[0]) {
    throw Error(ErrorKind::InconsistentData, "data state does not start column 0");
  }
  const std::uint64_t inv = mod_inverse(selector_period(s) % t, t);
  const std::uint64_t last_candidate = selector_period(s) - 1;

  std::vector<std::uint64_t> offsets{0};
  SrsRecovery out{LfsrState(Bits{1}), OffsetVector({0}, s), 0, 0};
  // o_0 = 0 already satisfies o >= S - 1 when S = 1
  for (std::uint64_t j = 1; offsets.back() + 1 < s; ++j) {
    if (j >= s) throw Error(ErrorKind::InconsistentData, "offset search ran past column S-1");
    const Bits col = known_column(input, j);
    out.consumed_bits += a;
    std::optional<std::uint64_t> found;
    for (std::uint64_t o = offsets.back() + 1; o <= last_candidate && !found; ++o) {
      ++out.comparisons;
      const std::uint64_t start = mulmod_u64(o, inv, t);
      bool match = true;
      for (unsigned n = 0; n < a && match; ++n) match = column0[(start + n) % t] == col[n];
      if (match) found = o;
    }
    if (!found) {
      throw Error(ErrorKind::InconsistentData,
                  "no selector offset matches IC column " + std::to_string(j));
    }
    offsets.push_back(*found);
  }

  Bits state(s, 0);
  for (std::uint64_t o : offsets) {
    if (o < s) state[o] = 1;
  }
  out.state = LfsrState(std::move(state));
  out.offsets = OffsetVector(std::move(offsets), s);
  return out;
}

AttackResult attack(const AttackInput& input) {
  if (!input.covers_submatrix()) {
    throw Error(ErrorKind::InsufficientInput,
                "attack needs every cell of the top-left " + std::to_string(input.spec.A()) + "x" +
                    std::to_string(input.spec.S()) + " IC corner");
  }
  SraRecovery sra = in_phase("sra", [&] { return recover_sra_detailed(input); });
  SrsRecovery srs = in_phase("srs", [&] { return recover_srs(input, sra.column0, sra.state); });

  AttackResult r{sra.state, srs.state, srs.offsets, sra.row_positions, sra.column_poly, {}};
  r.work.comparisons = srs.comparisons;
  r.work.expanded_bits = sra.column0.size() - input.spec.A();
  r.work.consumed_bits = sra.consumed_bits + srs.consumed_bits;

  in_phase("verify", [&] {
    const ShrinkingKey key{r.sra_state, r.srs_state};
    const BitSequence z = shrink(input.spec, key, *input.known.max_position() + 1);
    for (const auto& [pos, bit] : input.known.entries()) {
      if (z[pos] != bit) {
        throw Error(ErrorKind::InconsistentData,
                    "recovered key disagrees with known bit at position " + std::to_string(pos));
      }
    }
    return 0;
  });
  return r;
}

namespace {

Bits unpack_bits(std::uint64_t v, unsigned len) {
  Bits b(len);
  for (unsigned i = 0; i < len; ++i) b[i] = static_cast<std::uint8_t>((v >> i) & 1U);
  return b;
}

struct Candidate {
  std::uint64_t sra;
  std::uint64_t srs;
};

void search_shard(const SgSpec& spec, std::span<const std::pair<std::uint64_t, std::uint8_t>> known,
                  std::uint64_t sra_begin, std::uint64_t sra_end, std::vector<Candidate>& hits) {
  const std::uint64_t ta = spec.sra().taps();
  const std::uint64_t ts = spec.srs().taps();
  const unsigned top_a = spec.A() - 1;
  const unsigned top_s = spec.S() - 1;
  const std::uint64_t selector_tails = std::uint64_t{1} << (spec.S() - 1);
  for (std::uint64_t a0 = sra_begin; a0 < sra_end; ++a0) {
    for (std::uint64_t tail = 0; tail < selector_tails; ++tail) {
      const std::uint64_t s0 = 1 | (tail << 1);
      std::uint64_t a = a0, s = s0, emitted = 0;
      bool ok = true;
      for (const auto& [pos, bit] : known) {
        for (;;) {
          const bool keep = (s & 1U) != 0;
          const std::uint8_t out = static_cast<std::uint8_t>(a & 1U);
          a = (a >> 1) | (static_cast<std::uint64_t>(std::popcount(a & ta) & 1) << top_a);
          s = (s >> 1) | (static_cast<std::uint64_t>(std::popcount(s & ts) & 1) << top_s);
          if (!keep) continue;
          if (emitted++ == pos) {
            ok = out == bit;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) hits.push_back({a0, s0});
    }
  }
}

}  // namespace

std::vector<ShrinkingKey> brute_force(const AttackInput& input, unsigned threads) {
  const SgSpec& spec = input.spec;
  if (spec.A() + spec.S() > kBruteForceBudget) {
    throw Error(ErrorKind::UnsupportedSize, "exhaustive search limited to A + S <= " +
                                                std::to_string(kBruteForceBudget));
  }
  const std::vector<std::pair<std::uint64_t, std::uint8_t>> known(input.known.entries().begin(),
                                                                  input.known.entries().end());
  const std::uint64_t states = data_period(spec.A());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, states));

  std::vector<std::vector<Candidate>> shard_hits(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = 1 + states * t / threads;
      const std::uint64_t end = 1 + states * (t + 1) / threads;
      pool.emplace_back([&, t, begin, end] { search_shard(spec, known, begin, end, shard_hits[t]); });
    }
  }

  std::vector<ShrinkingKey> keys;
  for (const auto& shard : shard_hits) {
    for (const Candidate& c : shard) {
      keys.push_back({LfsrState(unpack_bits(c.sra, spec.A())), LfsrState(unpack_bits(c.srs, spec.S()))});
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::string format_attack_result(const AttackResult& r) {
  const auto join = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  std::string out;
  out += "sra_state=" + format_bits(r.sra_state) + '\n';
  out += "srs_state=" + format_bits(r.srs_state) + '\n';
  out += "offsets=" + join(r.offsets.values()) + '\n';
  out += "rows=" + join(r.row_positions) + '\n';
  out += "pd=" + to_string(r.column_poly) + '\n';
  out += "comparisons=" + std::to_string(r.work.comparisons) + '\n';
  out += "expanded_bits=" + std::to_string(r.work.expanded_bits) + '\n';
  out += "consumed_bits=" + std::to_string(r.work.consumed_bits) + '\n';
  return out;
}

}  // namespace sg
