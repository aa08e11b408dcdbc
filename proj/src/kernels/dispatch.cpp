#include <cstdlib>
#include <string>

#include "srk/kernels.hpp"

namespace srk::kernels {

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(SRK_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(SRK_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

KernelSet kernels_for(Isa isa) {
    switch (isa) {
#if defined(SRK_HAVE_AVX2)
        case Isa::Avx2:
            return {Isa::Avx2, axpy_avx2, scale_avx2};
#endif
#if defined(SRK_HAVE_NEON)
        case Isa::Neon:
            return {Isa::Neon, axpy_neon, scale_neon};
#endif
        default:
            return {Isa::Scalar, axpy_scalar, scale_scalar};
    }
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "unknown";
}

namespace {

KernelSet select() {
    if (const char* forced = std::getenv("SRK_ISA")) {
        const std::string name(forced);
        for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
            if (name == isa_name(isa) && isa_supported(isa)) return kernels_for(isa);
    }
    for (Isa isa : {Isa::Avx2, Isa::Neon})
        if (isa_supported(isa)) return kernels_for(isa);
    return kernels_for(Isa::Scalar);
}

}  // namespace

const KernelSet& active() {
    static const KernelSet set = select();
    return set;
}

}  // namespace srk::kernels
