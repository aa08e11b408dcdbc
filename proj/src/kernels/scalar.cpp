#include "srk/kernels.hpp"

namespace srk::kernels {

void axpy_scalar(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t s, std::size_t n, Modulus mod) {
    const std::uint32_t p = mod.p;
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint16_t>((dst[i] + static_cast<std::uint32_t>(s) * src[i]) % p);
}

void scale_scalar(std::uint16_t* x, std::uint16_t s, std::size_t n, Modulus mod) {
    const std::uint32_t p = mod.p;
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint16_t>((static_cast<std::uint32_t>(s) * x[i]) % p);
}

}  // namespace srk::kernels
