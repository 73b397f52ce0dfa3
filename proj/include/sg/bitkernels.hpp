#pragma once

// Word-parallel GF(2) kernels shared by the polynomial arithmetic and
// Berlekamp-Massey. Every kernel has a portable scalar reference; an AVX2
// variant is compiled on x86-64 and picked at runtime when the CPU has it.
// Setting SG_KERNELS=scalar in the environment pins the scalar path.

#include <cstddef>
#include <cstdint>
#include <span>

namespace sg::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

struct KernelTable {
  const char* name;
  // dst[i] ^= src[i] for i < n
  void (*xor_into)(Word* dst, const Word* src, std::size_t n);
  // dst ^= src << shift (bit shift across the whole vector); bits landing at
  // or beyond dst_words * 64 are dropped.
  void (*xor_shifted_into)(Word* dst, std::size_t dst_words, const Word* src,
                           std::size_t src_words, std::size_t shift);
  // parity of popcount(a & b) over n words
  bool (*and_parity)(const Word* a, const Word* b, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table();

// The table used by the library; selected once on first use.
const KernelTable& active();

inline void xor_into(std::span<Word> dst, std::span<const Word> src) {
  active().xor_into(dst.data(), src.data(), src.size() < dst.size() ? src.size() : dst.size());
}

inline void xor_shifted_into(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  active().xor_shifted_into(dst.data(), dst.size(), src.data(), src.size(), shift);
}

inline bool and_parity(std::span<const Word> a, std::span<const Word> b) {
  return active().and_parity(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

}  // namespace sg::kernels
