// AVX2 interception-scan kernel. Lane math mirrors the scalar expressions in
// passplan/detail/arrival_math.hpp term for term (same literals, same
// association, max_pd where the scalar uses (a > b ? a : b)), so results are
// bit-identical to the scalar backend. Discarded lanes may compute sqrt of a
// negative gap; the NaN is blended away and FP traps are never enabled.

#include "passplan/kernels/kernel.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace passplan::kernels {

namespace {

inline __m256d blend(__m256d mask, __m256d a, __m256d b) {
  return _mm256_blendv_pd(b, a, mask);  // mask ? a : b
}

int scan_first_avx2(const ScanBatch& batch, const RobotKin& r) {
  const double a = r.accel;
  const double b = r.decel;
  const double vm = r.vmax;

  const __m256d ox = _mm256_set1_pd(batch.ox);
  const __m256d oy = _mm256_set1_pd(batch.oy);
  const __m256d ux = _mm256_set1_pd(batch.ux);
  const __m256d uy = _mm256_set1_pd(batch.uy);
  const __m256d rpx = _mm256_set1_pd(r.px);
  const __m256d rpy = _mm256_set1_pd(r.py);
  const __m256d rvx = _mm256_set1_pd(r.vx);
  const __m256d rvy = _mm256_set1_pd(r.vy);
  const __m256d radius = _mm256_set1_pd(r.radius);
  const __m256d vbound = _mm256_set1_pd(r.vbound);

  const __m256d va_ = _mm256_set1_pd(a);
  const __m256d vb_ = _mm256_set1_pd(b);
  const __m256d vvm = _mm256_set1_pd(vm);
  const __m256d two_a = _mm256_set1_pd(2.0 * a);
  const __m256d two_b = _mm256_set1_pd(2.0 * b);
  const __m256d c2ab = _mm256_set1_pd((2.0 * a) * b);
  const __m256d apb = _mm256_set1_pd(a + b);
  const __m256d vm2 = _mm256_set1_pd(vm * vm);
  const __m256d vm2_2b = _mm256_set1_pd((vm * vm) / (2.0 * b));
  const __m256d d_used_rr = _mm256_set1_pd((vm * vm) / (2.0 * a) + (vm * vm) / (2.0 * b));
  const __m256d t_vab = _mm256_set1_pd(vm / a + vm / b);
  const __m256d vm_over_b = _mm256_set1_pd(vm / b);

  const __m256d zero = _mm256_setzero_pd();
  const __m256d tiny = _mm256_set1_pd(1e-30);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);

  int k = batch.k_begin;
  for (; k + 4 <= batch.k_end; k += 4) {
    const __m256d t = _mm256_loadu_pd(batch.ts + k);
    const __m256d s = _mm256_loadu_pd(batch.ss + k);
    const __m256d px = _mm256_add_pd(ox, _mm256_mul_pd(ux, s));
    const __m256d py = _mm256_add_pd(oy, _mm256_mul_pd(uy, s));
    const __m256d qx = _mm256_sub_pd(px, rpx);
    const __m256d qy = _mm256_sub_pd(py, rpy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(qx, qx), _mm256_mul_pd(qy, qy));
    const __m256d reach = _mm256_add_pd(radius, _mm256_mul_pd(vbound, t));
    const __m256d keep = _mm256_cmp_pd(d2, _mm256_mul_pd(reach, reach), _CMP_LE_OQ);
    if (_mm256_movemask_pd(keep) == 0) continue;

    // arrival_given, lane-wise.
    const __m256d d = _mm256_sqrt_pd(d2);
    const __m256d deff = _mm256_max_pd(_mm256_sub_pd(d, radius), zero);
    const __m256d denom = _mm256_max_pd(d, tiny);
    const __m256d ex = _mm256_div_pd(qx, denom);
    const __m256d ey = _mm256_div_pd(qy, denom);
    const __m256d v0 = _mm256_add_pd(_mm256_mul_pd(rvx, ex), _mm256_mul_pd(rvy, ey));
    const __m256d vc = _mm256_sub_pd(_mm256_mul_pd(rvx, ey), _mm256_mul_pd(rvy, ex));

    // one_d_time_to_rest(v0, deff).
    const __m256d v0v0 = _mm256_mul_pd(v0, v0);
    const __m256d brake = _mm256_div_pd(v0v0, two_b);
    const __m256d over = _mm256_or_pd(_mm256_cmp_pd(v0, zero, _CMP_LT_OQ),
                                      _mm256_cmp_pd(brake, deff, _CMP_GT_OQ));

    const __m256d signed_dist = _mm256_or_pd(deff, _mm256_and_pd(v0, sign_mask));
    const __m256d gap = _mm256_sub_pd(brake, signed_dist);
    const __m256d rr_peak =
        _mm256_sqrt_pd(_mm256_div_pd(_mm256_mul_pd(c2ab, gap), apb));
    const __m256d rr_tri =
        _mm256_add_pd(_mm256_div_pd(rr_peak, va_), _mm256_div_pd(rr_peak, vb_));
    const __m256d rr_cap =
        _mm256_add_pd(t_vab, _mm256_div_pd(_mm256_sub_pd(gap, d_used_rr), vvm));
    const __m256d rr = blend(_mm256_cmp_pd(rr_peak, vvm, _CMP_LE_OQ), rr_tri, rr_cap);
    const __m256d t_over =
        _mm256_add_pd(_mm256_div_pd(_mm256_andnot_pd(sign_mask, v0), vb_), rr);

    const __m256d peak2 = _mm256_div_pd(
        _mm256_add_pd(_mm256_mul_pd(c2ab, deff), _mm256_mul_pd(vb_, v0v0)), apb);
    const __m256d peak = _mm256_sqrt_pd(peak2);
    const __m256d t_tri = _mm256_add_pd(_mm256_div_pd(_mm256_sub_pd(peak, v0), va_),
                                        _mm256_div_pd(peak, vb_));
    const __m256d d_used_cr =
        _mm256_add_pd(_mm256_div_pd(_mm256_sub_pd(vm2, v0v0), two_a), vm2_2b);
    const __m256d t_cr = _mm256_add_pd(
        _mm256_add_pd(_mm256_div_pd(_mm256_sub_pd(vvm, v0), va_), vm_over_b),
        _mm256_div_pd(_mm256_sub_pd(deff, d_used_cr), vvm));
    const __m256d d_used_f =
        _mm256_add_pd(_mm256_div_pd(_mm256_sub_pd(v0v0, vm2), two_b), vm2_2b);
    const __m256d t_f = _mm256_add_pd(
        _mm256_add_pd(_mm256_div_pd(_mm256_sub_pd(v0, vvm), vb_), vm_over_b),
        _mm256_div_pd(_mm256_sub_pd(deff, d_used_f), vvm));
    const __m256d fwd = blend(_mm256_cmp_pd(peak, vvm, _CMP_LE_OQ), t_tri,
                              blend(_mm256_cmp_pd(v0, vvm, _CMP_LE_OQ), t_cr, t_f));
    const __m256d t_along = blend(over, t_over, fwd);

    const __m256d t_cross = _mm256_div_pd(_mm256_andnot_pd(sign_mask, vc), vb_);
    const __m256d arrival = _mm256_max_pd(t_along, t_cross);

    const __m256d feas = _mm256_and_pd(keep, _mm256_cmp_pd(arrival, t, _CMP_LE_OQ));
    const int m = _mm256_movemask_pd(feas);
    if (m != 0) return k + __builtin_ctz(static_cast<unsigned>(m));
  }
  for (; k < batch.k_end; ++k) {
    if (sample_feasible(batch, r, k)) return k;
  }
  return -1;
}

const KernelBackend avx2_backend{"avx2", &scan_first_avx2};

}  // namespace

const KernelBackend* avx2_kernel_compiled() { return &avx2_backend; }

}  // namespace passplan::kernels

#else

namespace passplan::kernels {
const KernelBackend* avx2_kernel_compiled() { return nullptr; }
}  // namespace passplan::kernels

#endif
