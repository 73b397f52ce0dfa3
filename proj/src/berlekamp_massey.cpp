#include <vector>

#include "sg/bitkernels.hpp"
#include "sg/gf2.hpp"

namespace sg {

// Bit-packed Berlekamp-Massey over GF(2). The connection polynomial
// C(D) = 1 + C_1 D + ... + C_L D^L tracks s_n = sum C_i s_{n-i}; the window W
// holds s_n, s_{n-1}, ... s_0 at bits 0..n so the discrepancy is
// parity(C & W).
LinearComplexity berlekamp_massey(std::span<const std::uint8_t> bits) {
  using kernels::Word;
  const std::size_t n_bits = bits.size();
  const std::size_t words = n_bits / kernels::kWordBits + 1;

  std::vector<Word> conn(words + 1, 0), prev(words + 1, 0), scratch(words + 1, 0);
  std::vector<Word> window(words + 1, 0);
  conn[0] = 1;
  prev[0] = 1;
  std::size_t lc = 0;
  std::size_t shift = 1;
  std::size_t prev_deg = 0;  // degree bound of prev

  for (std::size_t n = 0; n < n_bits; ++n) {
    // W <<= 1, W |= s_n
    Word carry = bits[n] & 1U;
    for (std::size_t w = 0; w <= n / kernels::kWordBits; ++w) {
      const Word next_carry = window[w] >> (kernels::kWordBits - 1);
      window[w] = (window[w] << 1) | carry;
      carry = next_carry;
    }

    const std::size_t active_words = lc / kernels::kWordBits + 1;
    const bool discrepancy =
        kernels::and_parity(std::span<const Word>(conn.data(), active_words),
                            std::span<const Word>(window.data(), active_words));
    if (!discrepancy) {
      ++shift;
      continue;
    }
    const std::span<const Word> prev_used(prev.data(), prev_deg / kernels::kWordBits + 1);
    if (2 * lc <= n) {
      scratch = conn;
      kernels::xor_shifted_into(conn, prev_used, shift);
      const std::size_t old_lc = lc;
      lc = n + 1 - lc;
      prev.swap(scratch);
      prev_deg = old_lc;
      shift = 1;
    } else {
      kernels::xor_shifted_into(conn, prev_used, shift);
      ++shift;
    }
  }

  // charpoly coefficient of x^(L-i) is C_i
  std::vector<std::uint8_t> coeffs(lc + 1, 0);
  for (std::size_t i = 0; i <= lc; ++i) {
    coeffs[lc - i] = (conn[i / kernels::kWordBits] >> (i % kernels::kWordBits)) & 1U;
  }
  return {lc, BinaryPolynomial::from_coefficients(coeffs)};
}

}  // namespace sg
