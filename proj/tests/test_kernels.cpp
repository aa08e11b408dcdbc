#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "srk/gf.hpp"
#include "srk/kernels.hpp"
#include "srk/matrix.hpp"

using namespace srk;
using kernels::Isa;

namespace {

std::vector<Isa> available() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Avx2, Isa::Neon})
        if (kernels::isa_supported(isa)) out.push_back(isa);
    return out;
}

std::vector<std::uint32_t> primes_below_256() {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p < 256; ++p)
        if (gf::is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("scalar reference matches plain modular arithmetic") {
    for (std::uint32_t p : {3u, 5u, 251u}) {
        const auto mod = kernels::Modulus::of(p);
        for (std::uint16_t s = 0; s < p; s = static_cast<std::uint16_t>(s + (p > 10 ? 17 : 1))) {
            std::vector<std::uint16_t> dst(p), src(p);
            for (std::uint32_t i = 0; i < p; ++i) {
                dst[i] = static_cast<std::uint16_t>(i);
                src[i] = static_cast<std::uint16_t>((i * 7) % p);
            }
            auto expect = dst;
            for (std::uint32_t i = 0; i < p; ++i) expect[i] = static_cast<std::uint16_t>((dst[i] + s * src[i]) % p);
            kernels::axpy_scalar(dst.data(), src.data(), s, p, mod);
            CHECK(dst == expect);
        }
    }
}

TEST_CASE("SIMD kernels agree with scalar on every residue triple") {
    const auto isas = available();
    if (isas.empty()) {
        MESSAGE("no SIMD kernels on this machine; scalar only");
        return;
    }
    for (Isa isa : isas) {
        const auto ks = kernels::kernels_for(isa);
        CAPTURE(kernels::isa_name(isa));
        for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 31u}) {
            const auto mod = kernels::Modulus::of(p);
            // all (dst, src) pairs laid out as one long vector per scalar
            std::vector<std::uint16_t> dst, src;
            for (std::uint32_t a = 0; a < p; ++a)
                for (std::uint32_t b = 0; b < p; ++b) {
                    dst.push_back(static_cast<std::uint16_t>(a));
                    src.push_back(static_cast<std::uint16_t>(b));
                }
            for (std::uint16_t s = 0; s < p; ++s) {
                auto ref = dst, got = dst;
                kernels::axpy_scalar(ref.data(), src.data(), s, ref.size(), mod);
                ks.axpy(got.data(), src.data(), s, got.size(), mod);
                REQUIRE(got == ref);
                auto sref = src, sgot = src;
                kernels::scale_scalar(sref.data(), s, sref.size(), mod);
                ks.scale(sgot.data(), s, sgot.size(), mod);
                REQUIRE(sgot == sref);
            }
        }
    }
}

TEST_CASE("SIMD kernels agree with scalar for all primes and ragged lengths") {
    std::mt19937_64 rng(20261016);
    for (Isa isa : available()) {
        const auto ks = kernels::kernels_for(isa);
        for (std::uint32_t p : primes_below_256()) {
            const auto mod = kernels::Modulus::of(p);
            std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
            for (std::size_t n : {0, 1, 7, 15, 16, 17, 31, 33, 64, 100}) {
                std::vector<std::uint16_t> dst(n), src(n);
                for (auto& v : dst) v = static_cast<std::uint16_t>(digit(rng));
                for (auto& v : src) v = static_cast<std::uint16_t>(digit(rng));
                // extreme scalars plus a random one
                for (std::uint16_t s : {std::uint16_t(0), std::uint16_t(1), static_cast<std::uint16_t>(p - 1),
                                        static_cast<std::uint16_t>(digit(rng))}) {
                    auto ref = dst, got = dst;
                    kernels::axpy_scalar(ref.data(), src.data(), s, n, mod);
                    ks.axpy(got.data(), src.data(), s, n, mod);
                    REQUIRE(got == ref);
                    auto sref = src, sgot = src;
                    kernels::scale_scalar(sref.data(), s, n, mod);
                    ks.scale(sgot.data(), s, n, mod);
                    REQUIRE(sgot == sref);
                }
                // worst case lanes: everything p-1
                std::vector<std::uint16_t> top(n, static_cast<std::uint16_t>(p - 1));
                auto ref = top, got = top;
                kernels::axpy_scalar(ref.data(), top.data(), static_cast<std::uint16_t>(p - 1), n, mod);
                ks.axpy(got.data(), top.data(), static_cast<std::uint16_t>(p - 1), n, mod);
                REQUIRE(got == ref);
            }
        }
    }
}

TEST_CASE("dispatch selects a supported set") {
    const auto& k = kernels::active();
    CHECK(kernels::isa_supported(k.isa));
    CHECK(kernels::isa_supported(Isa::Scalar));
    CHECK(kernels::kernels_for(Isa::Scalar).isa == Isa::Scalar);
}

TEST_CASE("rank is independent of the kernel set") {
    // Elimination uses the active kernels; compare with a scalar-only elimination.
    std::mt19937_64 rng(7);
    const auto f = gf::Field::build(3, 2);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = 3 + trial % 9, c = 5 + trial % 7;
        std::vector<gf::Code> codes(r * c);
        for (auto& v : codes) v = static_cast<gf::Code>(rng() % (trial % 3 == 0 ? 2 : 9));
        const auto m = linalg::Matrix::from_codes(f, r, c, codes);
        // independent: rank by naive elimination over codes
        auto a = codes;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < c && rank < r; ++col) {
            std::size_t piv = rank;
            while (piv < r && a[piv * c + col] == 0) ++piv;
            if (piv == r) continue;
            for (std::size_t j = 0; j < c; ++j) std::swap(a[piv * c + j], a[rank * c + j]);
            const auto inv = f.inv(a[rank * c + col]);
            for (std::size_t i = 0; i < r; ++i) {
                if (i == rank || a[i * c + col] == 0) continue;
                const auto factor = f.mul(a[i * c + col], inv);
                for (std::size_t j = 0; j < c; ++j) a[i * c + j] = f.sub(a[i * c + j], f.mul(factor, a[rank * c + j]));
            }
            ++rank;
        }
        CHECK(linalg::rank(m) == rank);
    }
}
