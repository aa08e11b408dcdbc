// Compiled with -mavx2; only reached when cpuid reports AVX2.
#include <immintrin.h>

#include "srk/kernels.hpp"

namespace srk::kernels {

namespace {

// x < 2^16. q = mulhi(x, floor(2^16/p)) undershoots floor(x/p) by at most one,
// so x - q*p lies in [0, 2p) and one conditional subtraction finishes.
inline __m256i reduce(__m256i x, __m256i p, __m256i magic) {
    const __m256i q = _mm256_mulhi_epu16(x, magic);
    const __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, p));
    return _mm256_min_epu16(r, _mm256_sub_epi16(r, p));
}

}  // namespace

void axpy_avx2(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t s, std::size_t n, Modulus mod) {
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(mod.p));
    const __m256i vm = _mm256_set1_epi16(static_cast<short>(mod.magic));
    const __m256i vs = _mm256_set1_epi16(static_cast<short>(s));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i x = _mm256_add_epi16(a, _mm256_mullo_epi16(b, vs));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(x, vp, vm));
    }
    axpy_scalar(dst + i, src + i, s, n - i, mod);
}

void scale_avx2(std::uint16_t* x, std::uint16_t s, std::size_t n, Modulus mod) {
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(mod.p));
    const __m256i vm = _mm256_set1_epi16(static_cast<short>(mod.magic));
    const __m256i vs = _mm256_set1_epi16(static_cast<short>(s));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), reduce(_mm256_mullo_epi16(a, vs), vp, vm));
    }
    scale_scalar(x + i, s, n - i, mod);
}

}  // namespace srk::kernels
