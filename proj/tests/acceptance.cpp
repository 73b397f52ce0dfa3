// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sg/attack.hpp"
#include "sg/error.hpp"
#include "sg/interleaved.hpp"
#include "sg/shrinking.hpp"

using namespace sg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<std::uint64_t> primitive_masks(unsigned degree) {
  std::vector<std::uint64_t> out;
  const std::uint64_t top = std::uint64_t{1} << degree;
  for (std::uint64_t low = 1; low < top; low += 2) {
    if (poly_is_primitive(BinaryPolynomial::from_mask(top | low))) out.push_back(top | low);
  }
  return out;
}

const std::vector<std::uint64_t>& primitives(unsigned degree) {
  static std::vector<std::vector<std::uint64_t>> cache(41);
  if (cache[degree].empty()) cache[degree] = primitive_masks(degree);
  return cache[degree];
}

Bits random_state(std::mt19937_64& rng, unsigned n) {
  for (;;) {
    Bits b(n);
    bool any = false;
    for (auto& x : b) {
      x = rng() & 1U;
      any = any || x;
    }
    if (any) return b;
  }
}

SgSpec random_spec(std::mt19937_64& rng, unsigned a, unsigned s) {
  const auto& pa = primitives(a);
  const auto& ps = primitives(s);
  return SgSpec(BinaryPolynomial::from_mask(pa[rng() % pa.size()]),
                BinaryPolynomial::from_mask(ps[rng() % ps.size()]));
}

KnownBits corner(const SgSpec& spec, const ShrinkingKey& key) {
  const std::size_t need = (spec.A() - 1) * spec.cols() + spec.S();
  return submatrix_from_prefix(shrink(spec, key, need).bits(), spec.A(), spec.S());
}

SgSpec worked_spec() {
  return SgSpec(BinaryPolynomial::parse("x^5+x^4+x^3+x^2+1"), BinaryPolynomial::parse("x^4+x^3+1"));
}

constexpr std::pair<unsigned, unsigned> kSweepPairs[] = {{5, 2}, {5, 4}, {7, 3}, {7, 5}, {8, 3}};

// Trials of criterion 5, reused by 7 and 8.
struct SweepTrial {
  SgSpec spec;
  ShrinkingKey key;
  AttackResult result;
  std::size_t input_bits;
};

std::vector<SweepTrial>& sweep_trials() {
  static std::vector<SweepTrial> trials;
  return trials;
}

Outcome criterion_worked_example() {
  Outcome o;
  const SgSpec spec = worked_spec();
  const char* rows[] = {"1011", "1001", "0101", "0111", "0001"};
  KnownBits known;
  for (std::uint64_t n = 0; n < 5; ++n) {
    for (std::uint64_t j = 0; j < 4; ++j) known.insert(8 * n + j, static_cast<std::uint8_t>(rows[n][j] - '0'));
  }
  const auto r = attack({spec, known});
  o.require(format_bits(r.sra_state) == "10011", "sra_state " + format_bits(r.sra_state));
  o.require(format_bits(r.srs_state) == "1101", "srs_state " + format_bits(r.srs_state));
  o.require(r.offsets.values() == std::vector<std::uint64_t>{0, 1, 3}, "offsets");
  o.require(r.row_positions == std::vector<std::uint64_t>{0, 29, 27, 25, 23}, "row positions");
  o.require(to_string(r.column_poly) == "x^5+x^3+x^2+x+1", "P_D " + to_string(r.column_poly));
  return o;
}

Outcome criterion_table1() {
  Outcome o;
  const SgSpec spec = worked_spec();
  const ShrinkingKey key{LfsrState::parse("10011"), LfsrState::parse("1101")};
  const auto z = shrink(spec, key, shrunken_period(5, 4));
  const auto ic = build_ic(KnownBits::from_keystream(z.bits()), 5, 4);
  const auto d0 = ic.column(0);
  o.require(d0.has_value(), "column 0 incomplete");
  if (!d0) return o;
  const std::pair<int, int> expect[] = {{0, 1},  {1, 1},  {2, 0},  {3, 0},  {4, 0},  {23, 1},
                                        {25, 1}, {26, 0}, {27, 0}, {28, 1}, {29, 0}, {30, 0}};
  for (auto [row, bit] : expect) {
    o.require((*d0)[row] == bit, "d_0 row " + std::to_string(row));
  }
  return o;
}

Outcome criterion_period() {
  Outcome o;
  std::mt19937_64 rng(1001);
  std::size_t checked = 0;
  for (unsigned a = 2; a <= 8; ++a) {
    for (unsigned s = 1; s < a; ++s) {
      if (std::gcd(a, s) != 1) continue;
      for (std::uint64_t pa : primitives(a)) {
        for (std::uint64_t ps : primitives(s)) {
          const SgSpec spec(BinaryPolynomial::from_mask(pa), BinaryPolynomial::from_mask(ps));
          const ShrinkingKey key{LfsrState(random_state(rng, a)), LfsrState(random_state(rng, s))};
          const auto m = measure_period(spec, key);
          o.require(m.minimal_period == shrunken_period(a, s),
                    "A=" + std::to_string(a) + " S=" + std::to_string(s) + " measured " +
                        std::to_string(m.minimal_period));
          ++checked;
        }
      }
    }
  }
  o.detail = o.pass ? std::to_string(checked) + " polynomial pairs" : o.detail;
  return o;
}

Outcome criterion_linear_complexity() {
  Outcome o;
  const SgSpec spec = worked_spec();
  const ShrinkingKey key{LfsrState::parse("10011"), LfsrState::parse("1101")};
  const auto bm = berlekamp_massey(shrink(spec, key, 248).bits());
  o.require(bm.lc == 40, "worked LC " + std::to_string(bm.lc));
  o.require(bm.charpoly == pow(BinaryPolynomial::parse("x^5+x^3+x^2+x+1"), 8), "worked charpoly");

  std::mt19937_64 rng(1002);
  for (auto [a, s] : {std::pair{3u, 2u}, {5u, 2u}, {5u, 4u}, {7u, 3u}, {7u, 5u}}) {
    for (int trial = 0; trial < 20; ++trial) {
      const SgSpec sp = random_spec(rng, a, s);
      const ShrinkingKey k{LfsrState(random_state(rng, a)), LfsrState(random_state(rng, s))};
      const Bits one = shrunken_period_sequence(sp, k).bits();
      Bits z = one;
      z.insert(z.end(), one.begin(), one.end());
      const auto r = berlekamp_massey(z);
      const std::string tag = " A=" + std::to_string(a) + " S=" + std::to_string(s);
      o.require(lc_bounds(a, s).contains(r.lc), "LC out of bounds" + tag);
      const auto pd = coset_min_poly((1u << s) - 1, sp.sra().charpoly());
      const std::uint64_t p = r.lc / *pd.degree();
      o.require(r.lc % *pd.degree() == 0 && pow(pd, p) == r.charpoly, "charpoly not a power of P_D" + tag);
      o.require(2 * p > (1u << (s - 1)) && p <= (1u << (s - 1)), "exponent out of range" + tag);
    }
  }
  return o;
}

Outcome criterion_soundness() {
  Outcome o;
  std::mt19937_64 rng(1003);
  auto& trials = sweep_trials();
  for (auto [a, s] : kSweepPairs) {
    for (int trial = 0; trial < 100; ++trial) {
      const SgSpec spec = random_spec(rng, a, s);
      Bits sel = random_state(rng, s);
      sel[0] = 1;
      const ShrinkingKey key{LfsrState(random_state(rng, a)), LfsrState(sel)};
      const KnownBits known = corner(spec, key);
      const auto r = attack({spec, known});
      o.require(r.sra_state == key.sra_state && r.srs_state == key.srs_state,
                "wrong key A=" + std::to_string(a) + " S=" + std::to_string(s));
      trials.push_back({spec, key, r, known.size()});
    }
    // selector states starting with 0
    for (int trial = 0; trial < 100; ++trial) {
      const SgSpec spec = random_spec(rng, a, s);
      Bits sel;
      do {
        sel = random_state(rng, s);
        sel[0] = 0;
      } while (std::accumulate(sel.begin(), sel.end(), 0) == 0);
      const ShrinkingKey key{LfsrState(random_state(rng, a)), LfsrState(sel)};
      const auto r = attack({spec, corner(spec, key)});
      const std::size_t span = 4 * shrunken_period(a, s);
      o.require(shrink(spec, {r.sra_state, r.srs_state}, span) == shrink(spec, key, span),
                "non-canonical key not reproduced A=" + std::to_string(a) + " S=" + std::to_string(s));
    }
  }
  return o;
}

Outcome criterion_oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(1004);
  for (auto [a, s] : {std::pair{5u, 3u}, {5u, 4u}, {7u, 2u}}) {
    for (int trial = 0; trial < 20; ++trial) {
      const SgSpec spec = random_spec(rng, a, s);
      const ShrinkingKey key{LfsrState(random_state(rng, a)), LfsrState(random_state(rng, s))};
      const AttackInput input{spec, corner(spec, key)};
      const auto r = attack(input);
      const auto keys = brute_force(input);
      o.require(keys.size() == 1, "brute force found " + std::to_string(keys.size()) + " keys");
      o.require(!keys.empty() && keys[0] == ShrinkingKey{r.sra_state, r.srs_state}, "brute force disagrees");
    }
  }
  return o;
}

Outcome criterion_work_bound() {
  Outcome o;
  std::uint64_t worst = 0;
  for (const auto& t : sweep_trials()) {
    const unsigned a = t.spec.A(), s = t.spec.S();
    o.require(t.input_bits == std::size_t{a} * s, "input is not exactly the A x S corner");
    o.require(t.result.work.comparisons <= 2 * s - 1,
              "comparisons " + std::to_string(t.result.work.comparisons) + " > 2S-1");
    o.require(t.result.work.consumed_bits <= std::uint64_t{a} * s, "consumed more than A*S bits");
    worst = std::max<std::uint64_t>(worst, t.result.work.comparisons);
  }
  o.require(!sweep_trials().empty(), "criterion 5 produced no trials");
  if (o.pass) o.detail = std::to_string(sweep_trials().size()) + " trials, max comparisons " + std::to_string(worst);
  return o;
}

Outcome criterion_interleaved() {
  Outcome o;
  const Bits table2 = parse_bits("1111 1010 0011 0101 1001 0110 1100");
  o.require(is_interleaved(table2, 4, BinaryPolynomial::parse("x^3+x+1")), "size-4 example rejected");
  for (const auto& t : sweep_trials()) {
    const auto z = shrunken_period_sequence(t.spec, t.key);
    o.require(is_interleaved(z.bits(), t.spec.cols(), t.result.column_poly), "shrunken sequence rejected");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "worked example end-to-end", 1.0, criterion_worked_example},
      {2, "IC column 0 of the worked example", 0.0, criterion_table1},
      {3, "exact period for every valid (A,S), A <= 8", 10.0, criterion_period},
      {4, "linear complexity and P_D^p shape", 30.0, criterion_linear_complexity},
      {5, "attack soundness sweep", 60.0, criterion_soundness},
      {6, "brute-force oracle equivalence", 60.0, criterion_oracle_equivalence},
      {7, "work bound and data economy", 0.0, criterion_work_bound},
      {8, "interleaved-sequence checks", 0.0, criterion_interleaved},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, std::string(to_string(e.kind())) + ": " + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.pass = false;
      o.detail = "over time budget of " + std::to_string(c.budget_seconds) + " s";
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
