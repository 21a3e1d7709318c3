#include <cstdlib>
#include <string>

#include "passplan/kernels/kernel.hpp"

namespace passplan::kernels {

// Defined in kernel_avx2.cpp; null when that TU was built without AVX2.
const KernelBackend* avx2_kernel_compiled();

const KernelBackend* avx2_kernel() {
  static const KernelBackend* const backend = []() -> const KernelBackend* {
    const KernelBackend* compiled = avx2_kernel_compiled();
    if (compiled == nullptr) return nullptr;
#if defined(__x86_64__) || defined(__i386__)
    if (!__builtin_cpu_supports("avx2")) return nullptr;
#endif
    return compiled;
  }();
  return backend;
}

const KernelBackend& active_kernel() {
  static const KernelBackend& backend = []() -> const KernelBackend& {
    if (const char* env = std::getenv("PASSPLAN_KERNEL")) {
      const std::string v(env);
      if (v == "scalar") return scalar_kernel();
      if (v == "avx2" && avx2_kernel() != nullptr) return *avx2_kernel();
    }
    if (avx2_kernel() != nullptr) return *avx2_kernel();
    return scalar_kernel();
  }();
  return backend;
}

std::vector<const KernelBackend*> available_kernels() {
  std::vector<const KernelBackend*> out{&scalar_kernel()};
  if (avx2_kernel() != nullptr) out.push_back(avx2_kernel());
  return out;
}

}  // namespace passplan::kernels
