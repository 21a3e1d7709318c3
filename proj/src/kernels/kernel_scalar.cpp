#include "passplan/kernels/kernel.hpp"

namespace passplan::kernels {

namespace {

int scan_first_scalar(const ScanBatch& b, const RobotKin& r) {
  for (int k = b.k_begin; k < b.k_end; ++k) {
    if (sample_feasible(b, r, k)) return k;
  }
  return -1;
}

}  // namespace

const KernelBackend& scalar_kernel() {
  static const KernelBackend backend{"scalar", &scan_first_scalar};
  return backend;
}

}  // namespace passplan::kernels
