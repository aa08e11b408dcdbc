// Mod-p vector kernels used by exact elimination over GF(p^m).
//
// Every variant computes exactly the same result; the scalar functions are the
// reference the SIMD paths are tested against. Values are uint16 residues in
// [0, p) with p < 256, so p * (p - 1) + (p - 1) fits a 16-bit lane.
#ifndef SRK_KERNELS_HPP
#define SRK_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace srk::kernels {

struct Modulus {
    std::uint16_t p = 0;
    std::uint16_t magic = 0;  // floor(2^16 / p)

    static Modulus of(std::uint32_t p) {
        return {static_cast<std::uint16_t>(p), static_cast<std::uint16_t>(65536u / p)};
    }
};

/// dst[i] = (dst[i] + s * src[i]) mod p
using AxpyFn = void (*)(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t s, std::size_t n,
                        Modulus mod);
/// x[i] = (s * x[i]) mod p
using ScaleFn = void (*)(std::uint16_t* x, std::uint16_t s, std::size_t n, Modulus mod);

enum class Isa { Scalar, Avx2, Neon };

struct KernelSet {
    Isa isa;
    AxpyFn axpy;
    ScaleFn scale;
};

void axpy_scalar(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t s, std::size_t n, Modulus mod);
void scale_scalar(std::uint16_t* x, std::uint16_t s, std::size_t n, Modulus mod);

#if defined(SRK_HAVE_AVX2)
void axpy_avx2(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t s, std::size_t n, Modulus mod);
void scale_avx2(std::uint16_t* x, std::uint16_t s, std::size_t n, Modulus mod);
#endif

#if defined(SRK_HAVE_NEON)
void axpy_neon(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t s, std::size_t n, Modulus mod);
void scale_neon(std::uint16_t* x, std::uint16_t s, std::size_t n, Modulus mod);
#endif

bool isa_supported(Isa isa);
KernelSet kernels_for(Isa isa);

/// Best supported set, chosen once. SRK_ISA=scalar|avx2|neon overrides.
const KernelSet& active();

std::string_view isa_name(Isa isa);

}  // namespace srk::kernels

#endif
