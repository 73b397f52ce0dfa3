#include <cstdlib>
#include <string_view>

#include "sg/bitkernels.hpp"

namespace sg::kernels {

#if defined(SG_HAVE_AVX2)
const KernelTable* avx2_table_unchecked();
#endif

const KernelTable* avx2_table() {
#if defined(SG_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") != 0;
  return supported ? avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* forced = std::getenv("SG_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace sg::kernels
