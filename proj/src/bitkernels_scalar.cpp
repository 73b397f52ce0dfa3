#include "sg/bitkernels.hpp"

#include <bit>

namespace sg::kernels {
namespace {

void xor_into_scalar(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void xor_shifted_into_scalar(Word* dst, std::size_t dst_words, const Word* src,
                             std::size_t src_words, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  // output word t takes src[t-ws] << bs combined with the spill of src[t-ws-1]
  for (std::size_t i = 0; i <= src_words; ++i) {
    const std::size_t t = i + ws;
    if (t >= dst_words) break;
    Word w = i < src_words ? src[i] << bs : 0;
    if (bs != 0 && i > 0) w |= src[i - 1] >> (kWordBits - bs);
    dst[t] ^= w;
  }
}

bool and_parity_scalar(const Word* a, const Word* b, std::size_t n) {
  Word acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc ^= a[i] & b[i];
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", xor_into_scalar, xor_shifted_into_scalar,
                                 and_parity_scalar};
  return table;
}

}  // namespace sg::kernels
