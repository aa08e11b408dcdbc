#include <arm_neon.h>

#include "srk/kernels.hpp"

namespace srk::kernels {

namespace {

// Same reduction as the AVX2 path; the high half of the 16x16 product comes
// from the widening multiplies.
inline uint16x8_t reduce(uint16x8_t x, uint16x8_t p, uint16x4_t magic) {
    const uint32x4_t lo = vmull_u16(vget_low_u16(x), magic);
    const uint32x4_t hi = vmull_u16(vget_high_u16(x), magic);
    const uint16x8_t q = vcombine_u16(vshrn_n_u32(lo, 16), vshrn_n_u32(hi, 16));
    const uint16x8_t r = vmlsq_u16(x, q, p);
    return vminq_u16(r, vsubq_u16(r, p));
}

}  // namespace

void axpy_neon(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t s, std::size_t n, Modulus mod) {
    const uint16x8_t vp = vdupq_n_u16(mod.p);
    const uint16x4_t vm = vdup_n_u16(mod.magic);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const uint16x8_t x = vmlaq_n_u16(vld1q_u16(dst + i), vld1q_u16(src + i), s);
        vst1q_u16(dst + i, reduce(x, vp, vm));
    }
    axpy_scalar(dst + i, src + i, s, n - i, mod);
}

void scale_neon(std::uint16_t* x, std::uint16_t s, std::size_t n, Modulus mod) {
    const uint16x8_t vp = vdupq_n_u16(mod.p);
    const uint16x4_t vm = vdup_n_u16(mod.magic);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) vst1q_u16(x + i, reduce(vmulq_n_u16(vld1q_u16(x + i), s), vp, vm));
    scale_scalar(x + i, s, n - i, mod);
}

}  // namespace srk::kernels
