// Compiled with -mavx2. Nothing here may run before the dispatcher has
// confirmed AVX2 support.

#include "sg/bitkernels.hpp"

#include <immintrin.h>

#include <bit>

namespace sg::kernels {
namespace {

void xor_into_avx2(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

Word shifted_word(const Word* src, std::size_t src_words, std::size_t i, unsigned bs) {
  Word w = i < src_words ? src[i] << bs : 0;
  if (bs != 0 && i > 0) w |= src[i - 1] >> (kWordBits - bs);
  return w;
}

void xor_shifted_into_avx2(Word* dst, std::size_t dst_words, const Word* src,
                           std::size_t src_words, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  if (ws >= dst_words) return;
  // source indices i in [0, last] contribute; i = src_words carries the spill
  std::size_t last = src_words;
  if (last + ws >= dst_words) last = dst_words - ws - 1;

  if (bs == 0) {
    const std::size_t n = last < src_words ? last + 1 : src_words;
    xor_into_avx2(dst + ws, src, n);
    return;
  }

  const __m128i lo_count = _mm_cvtsi32_si128(static_cast<int>(bs));
  const __m128i hi_count = _mm_cvtsi32_si128(static_cast<int>(kWordBits - bs));
  std::size_t i = 0;
  dst[ws] ^= shifted_word(src, src_words, 0, bs);
  i = 1;
  // vector body needs src[i-1 .. i+3] in range
  for (; i + 4 <= src_words && i + 3 <= last; i += 4) {
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
    const __m256i w = _mm256_or_si256(_mm256_sll_epi64(cur, lo_count),
                                      _mm256_srl_epi64(prev, hi_count));
    __m256i* out = reinterpret_cast<__m256i*>(dst + ws + i);
    _mm256_storeu_si256(out, _mm256_xor_si256(_mm256_loadu_si256(out), w));
  }
  for (; i <= last; ++i) dst[ws + i] ^= shifted_word(src, src_words, i, bs);
}

bool and_parity_avx2(const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  Word folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; i < n; ++i) folded ^= a[i] & b[i];
  return (std::popcount(folded) & 1) != 0;
}

}  // namespace

const KernelTable* avx2_table_unchecked() {
  static const KernelTable table{"avx2", xor_into_avx2, xor_shifted_into_avx2, and_parity_avx2};
  return &table;
}

}  // namespace sg::kernels
