#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sg/error.hpp"
#include "sg/interleaved.hpp"

using sg::BinaryPolynomial;
using sg::Bits;
using sg::KnownBits;
using sg::LfsrState;
using sg::SgSpec;
using sg::ShrinkingKey;

namespace {

SgSpec worked_spec() {
  return SgSpec(BinaryPolynomial::parse("x^5+x^4+x^3+x^2+1"), BinaryPolynomial::parse("x^4+x^3+1"));
}
ShrinkingKey worked_key() { return {LfsrState::parse("10011"), LfsrState::parse("1101")}; }

// rows of the interleaved sequence of size 4 for f = x^3 + x + 1
const Bits kTable2 = sg::parse_bits("1111 1010 0011 0101 1001 0110 1100");

KnownBits worked_known() {
  const auto z = shrink(worked_spec(), worked_key(), 40);
  return sg::submatrix_from_prefix(z.bits(), 5, 4);
}

ShrinkingKey random_key(std::mt19937_64& rng, unsigned a, unsigned s) {
  return {LfsrState(oracle::random_nonzero_state(rng, a)), LfsrState(oracle::random_nonzero_state(rng, s))};
}

SgSpec random_spec(std::mt19937_64& rng, unsigned a, unsigned s) {
  const auto pas = oracle::primitive_polys(a);
  const auto pss = oracle::primitive_polys(s);
  return SgSpec(BinaryPolynomial::from_mask(pas[rng() % pas.size()]),
                BinaryPolynomial::from_mask(pss[rng() % pss.size()]));
}

}  // namespace

TEST_CASE("known-bits file format") {
  const auto k = sg::parse_known_bits("# header\n0 1\n  3 0   # trailing\n\n17 1\n");
  CHECK(k.size() == 3);
  CHECK(k.at(3) == 0);
  CHECK(k.at(17) == 1);
  CHECK_FALSE(k.at(1).has_value());
  CHECK(sg::parse_known_bits(sg::format_known_bits(k)).entries() == k.entries());
  CHECK_THROWS_AS(sg::parse_known_bits("3 1\n2 0\n"), sg::Error);
  CHECK_THROWS_AS(sg::parse_known_bits("3 1\n3 0\n"), sg::Error);
  CHECK_THROWS_AS(sg::parse_known_bits("3 2\n"), sg::Error);
  CHECK_THROWS_AS(sg::parse_known_bits("x 1\n"), sg::Error);
  CHECK_THROWS_AS(sg::parse_known_bits("31\n"), sg::Error);
}

TEST_CASE("sub-matrix extraction from a contiguous prefix") {
  const auto z = shrink(worked_spec(), worked_key(), 40);
  CHECK(sg::submatrix_positions(5, 4).size() == 20);
  CHECK(sg::submatrix_positions(5, 4).back() == 35);
  CHECK_THROWS_AS(sg::submatrix_from_prefix(Bits(z.bits().begin(), z.bits().begin() + 35), 5, 4), sg::Error);
  CHECK(sg::submatrix_from_prefix(Bits(z.bits().begin(), z.bits().begin() + 36), 5, 4).size() == 20);
}

TEST_CASE("build_ic") {
  const auto ic = build_ic(worked_known(), 5, 4);
  CHECK(ic.rows() == 31);
  CHECK(ic.cols() == 8);
  CHECK(ic.known_cells() == 20);
  CHECK(ic.dump(6) == "1011....\n1001....\n0101....\n0111....\n0001....\n........\n");
  CHECK_FALSE(ic.cell(5, 0).has_value());
  CHECK_FALSE(ic.cell(0, 4).has_value());

  const auto full = shrink(worked_spec(), worked_key(), 248);
  const auto fic = build_ic(KnownBits::from_keystream(full.bits()), 5, 4);
  CHECK(fic.known_cells() == 248);
  CHECK(fic.row_major() == full.bits());
  CHECK(fic.dump().find('.') == std::string::npos);

  const auto empty = build_ic(KnownBits{}, 5, 4);
  CHECK(empty.known_cells() == 0);
  CHECK_FALSE(empty.row_major().has_value());

  KnownBits out_of_range;
  out_of_range.insert(248, 1);
  CHECK_THROWS_AS(build_ic(out_of_range, 5, 4), sg::Error);
}

TEST_CASE("ic_source_index") {
  const auto offsets = selector_offsets(worked_spec(), LfsrState::parse("1101"));
  CHECK(offsets.values() == std::vector<std::uint64_t>{0, 1, 3, 5, 6, 9, 13, 14});
  CHECK(sg::ic_source_index(0, 0, offsets, 5, 4) == 0);
  CHECK(sg::ic_source_index(23, 0, offsets, 5, 4) == 4);
  CHECK(sg::ic_source_index(29, 0, offsets, 5, 4) == 1);
  const sg::OffsetVector prefix({0, 1}, 4);
  try {
    sg::ic_source_index(0, 2, prefix, 5, 4);
    FAIL("expected unknown offset");
  } catch (const sg::Error& e) {
    CHECK(e.kind() == sg::ErrorKind::UnknownOffset);
  }
  CHECK_THROWS_AS(sg::OffsetVector({1, 2}, 4), sg::Error);
  CHECK_THROWS_AS(sg::OffsetVector({0, 2, 2}, 4), sg::Error);
  CHECK_THROWS_AS(sg::OffsetVector({0, 15}, 4), sg::Error);
}

TEST_CASE("IC cells are data bits at the mapped index, columns obey P_D") {
  std::mt19937_64 rng(41);
  for (auto [a, s] : {std::pair{5u, 2u}, {5u, 4u}, {7u, 3u}, {8u, 5u}}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto spec = random_spec(rng, a, s);
      const auto key = canonicalize(spec, random_key(rng, a, s));
      const auto z = shrunken_period_sequence(spec, key);
      const auto ic = build_ic(KnownBits::from_keystream(z.bits()), a, s);
      const auto data = lfsr_generate(spec.sra(), key.sra_state, spec.sra().period());
      const auto offsets = selector_offsets(spec, key.srs_state);
      REQUIRE(offsets.size() == spec.cols());

      // o_j is the position of the (j+1)-th selector one
      const auto sel = lfsr_generate(spec.srs(), key.srs_state, spec.srs().period());
      std::size_t j = 0;
      for (std::size_t i = 0; i < sel.size(); ++i) {
        if (sel[i]) CHECK(offsets[j++] == i);
      }

      for (std::uint64_t n = 0; n < ic.rows(); ++n) {
        for (std::uint64_t c = 0; c < ic.cols(); ++c) {
          REQUIRE(*ic.cell(n, c) == data[sg::ic_source_index(n, c, offsets, a, s)]);
        }
      }
      const auto pd = coset_min_poly((1u << s) - 1, spec.sra().charpoly());
      for (std::uint64_t c = 0; c < ic.cols(); ++c) {
        const auto bm = sg::berlekamp_massey(*ic.column(c));
        CHECK(bm.charpoly == pd);
      }
    }
  }
}

TEST_CASE("is_interleaved on the size-4 example") {
  const auto f = BinaryPolynomial::parse("x^3+x+1");
  CHECK(kTable2.size() == 28);
  CHECK(sg::is_interleaved(kTable2, 4, f));
  // each stride-4 column is a shift of the x^3+x+1 PN-sequence
  for (std::size_t j = 0; j < 4; ++j) {
    Bits col;
    for (std::size_t i = 0; i < 7; ++i) col.push_back(kTable2[i * 4 + j]);
    CHECK(col == oracle::lfsr(0xB, Bits(col.begin(), col.begin() + 3), 7));
  }
  for (std::size_t flip = 0; flip < kTable2.size(); ++flip) {
    Bits bad = kTable2;
    bad[flip] ^= 1;
    CHECK_FALSE(sg::is_interleaved(bad, 4, f));
  }
  CHECK_FALSE(sg::is_interleaved(kTable2, 1, f));
  const auto pn = oracle::lfsr(0xB, {0, 1, 1}, 30);
  CHECK(sg::is_interleaved(pn, 1, f));
  CHECK(sg::is_interleaved(Bits{1, 0}, 4, f));  // too short to constrain
}

TEST_CASE("shrunken sequences are interleaved of size 2^(S-1) over P_D") {
  CHECK(shrunken_interleaved_check(worked_spec(), worked_key()));
  std::mt19937_64 rng(42);
  for (auto [a, s] : {std::pair{5u, 2u}, {5u, 4u}, {7u, 3u}}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto spec = random_spec(rng, a, s);
      const auto key = random_key(rng, a, s);
      CHECK(shrunken_interleaved_check(spec, key));
      const auto z = shrunken_period_sequence(spec, key);
      CHECK_FALSE(sg::is_interleaved(z.bits(), spec.cols(), spec.sra().charpoly()));
    }
  }
}
