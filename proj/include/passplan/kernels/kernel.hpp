#pragma once

#include <vector>

#include "passplan/detail/arrival_math.hpp"

namespace passplan::kernels {

/// Per-robot constants consumed by the interception scan.
struct RobotKin {
  double px = 0.0, py = 0.0;  ///< position
  double vx = 0.0, vy = 0.0;  ///< velocity
  double accel = 0.0, decel = 0.0, vmax = 0.0;
  double radius = 0.0;  ///< shortens the effective travel distance
  double vbound = 0.0;  ///< max(vmax, |v|); sound speed bound for pruning
};

/// A contiguous run of trajectory samples: ts[k] = k*dt, ss[k] = distance
/// travelled at ts[k], positions ray origin + unit * ss[k].
struct ScanBatch {
  const double* ts = nullptr;
  const double* ss = nullptr;
  int k_begin = 0;
  int k_end = 0;  ///< exclusive
  double ox = 0.0, oy = 0.0;
  double ux = 0.0, uy = 0.0;
};

/// Exact quick reject: the robot cannot cover more than vbound*t + radius
/// toward the sample within t, so d^2 beyond that square cannot be feasible.
/// Both backends apply this identical test, which keeps them bit-identical
/// even at razor-thin margins.
inline bool sample_feasible(const ScanBatch& b, const RobotKin& r, int k) {
  const double t = b.ts[k];
  const double s = b.ss[k];
  const double px = b.ox + b.ux * s;
  const double py = b.oy + b.uy * s;
  const double qx = px - r.px;
  const double qy = py - r.py;
  const double d2 = qx * qx + qy * qy;
  const double reach = r.radius + r.vbound * t;
  if (d2 > reach * reach) return false;
  return detail::arrival_given(qx, qy, d2, r.vx, r.vy, r.accel, r.decel, r.vmax, r.radius) <= t;
}

/// Smallest k in [k_begin, k_end) whose sample the robot can intercept,
/// or -1 when none exists.
using ScanFn = int (*)(const ScanBatch&, const RobotKin&);

struct KernelBackend {
  const char* name;
  ScanFn scan_first;
};

const KernelBackend& scalar_kernel();

/// AVX2 backend, or nullptr when the binary or CPU lacks AVX2.
const KernelBackend* avx2_kernel();

/// Backend used by the planner: AVX2 when available, overridable with
/// PASSPLAN_KERNEL=scalar|avx2 in the environment.
const KernelBackend& active_kernel();

/// Every backend usable on this machine (for equivalence tests).
std::vector<const KernelBackend*> available_kernels();

}  // namespace passplan::kernels
