#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "srk/poly.hpp"
#include "srk/ring.hpp"

using namespace srk;
using gf::Code;
using poly::MultiPoly;
using poly::PolyMatrix;

namespace {

MultiPoly Y(std::size_t i, std::size_t nvars = 2, std::uint32_t p = 3) { return MultiPoly::variable(p, nvars, i); }

MultiPoly random_poly(std::uint32_t p, std::size_t nvars, std::mt19937_64& rng, int terms = 4, int maxdeg = 3) {
    MultiPoly f(p, nvars);
    for (int t = 0; t < terms; ++t) {
        poly::Exponent e(nvars);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (maxdeg + 1));
        f.add_term(e, static_cast<std::uint32_t>(rng() % p));
    }
    return f;
}

// W_n(F_p) is Z/p^n: a vector (a_0, ..., a_{n-1}) corresponds to sum tau(a_i) p^i with
// tau the Teichmuller lift. Witt addition is then integer addition.
std::uint64_t teich(std::uint64_t a, std::uint64_t p, std::uint64_t mod) {
    std::uint64_t r = a % mod;
    for (std::uint64_t k = 1; k < mod; k *= p) {
        std::uint64_t acc = 1;
        for (std::uint64_t i = 0; i < p; ++i) acc = acc * r % mod;
        r = acc;
    }
    return r;
}

std::vector<std::uint32_t> witt_digits(std::uint64_t z, std::uint64_t p, std::size_t n) {
    std::uint64_t mod = 1;
    for (std::size_t i = 0; i < n; ++i) mod *= p;
    std::vector<std::uint32_t> out;
    z %= mod;
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<std::uint32_t>(z % p);
        out.push_back(c);
        z = (z + mod - teich(c, p, mod)) % mod / p;
        mod /= p;
    }
    return out;
}

std::uint64_t witt_value(const std::vector<std::uint32_t>& digits, std::uint64_t p) {
    std::uint64_t mod = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) mod *= p;
    std::uint64_t z = 0, scale = 1;
    for (auto d : digits) {
        z = (z + scale * teich(d, p, mod)) % mod;
        scale *= p;
    }
    return z;
}

}  // namespace

TEST_CASE("arithmetic examples over GF(3)") {
    const auto a = Y(0) + Y(1), b = Y(0) - Y(1);
    CHECK(a * b == Y(0).pow(2) - Y(1).pow(2));
    CHECK((a * MultiPoly(3, 2)).is_zero());
    CHECK(a.pow(3) == Y(0).pow(3) + Y(1).pow(3));
    CHECK_THROWS_AS(Y(0) + Y(0, 3), Error);
}

TEST_CASE("freshman's dream by expansion") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto x = Y(0, 3, p), y = Y(1, 3, p), z = Y(2, 3, p);
        CHECK((x + y + z).pow(p) == x.pow(p) + y.pow(p) + z.pow(p));
        CHECK((x + y).pow(p * p) == x.pow(p * p) + y.pow(p * p));
        // (x+y)^(p-1) is not additive
        CHECK_FALSE((x + y).pow(p - 1) == x.pow(p - 1) + y.pow(p - 1));
    }
}

TEST_CASE("evaluation examples") {
    const auto f3 = gf::Field::build(3);
    const auto f = Y(0).pow(2) * Y(1);
    const std::vector<Code> pt{2, 1};
    CHECK(f.evaluate(f3, pt) == 1);
    const std::vector<Code> bad{1};
    CHECK_THROWS_AS(f.evaluate(f3, bad), Error);
}

TEST_CASE("evaluation is a ring homomorphism over GF(9)") {
    std::mt19937_64 rng(99);
    const auto f9 = gf::Field::build(3, 2);
    for (int t = 0; t < 100; ++t) {
        const auto f = random_poly(3, 3, rng), g = random_poly(3, 3, rng);
        std::vector<Code> pt(3);
        for (auto& c : pt) c = static_cast<Code>(rng() % 9);
        CHECK((f + g).evaluate(f9, pt) == f9.add(f.evaluate(f9, pt), g.evaluate(f9, pt)));
        CHECK((f * g).evaluate(f9, pt) == f9.mul(f.evaluate(f9, pt), g.evaluate(f9, pt)));
    }
}

TEST_CASE("homogeneous scaling") {
    const auto f9 = gf::Field::build(3, 2);
    const auto f = Y(0).pow(2) * Y(1) + Y(1).pow(3).scaled(2);
    CHECK(f.is_homogeneous());
    CHECK_FALSE((f + Y(0)).is_homogeneous());
    const std::vector<std::uint32_t> w{2, 1};
    CHECK((Y(0) + Y(1).pow(2)).is_homogeneous(w));
    for (Code c = 1; c < 9; ++c) {
        const std::vector<Code> pt{4, 7}, scaled{f9.mul(c, 4), f9.mul(c, 7)};
        CHECK(f.evaluate(f9, scaled) == f9.mul(f9.pow(c, 3), f.evaluate(f9, pt)));
    }
}

TEST_CASE("canonical printing") {
    const std::vector<std::string> names{"a", "b"};
    const auto f = Y(1) + Y(0) + Y(0).pow(2) * Y(1).scaled(2);
    CHECK(f.to_string(names) == "a+b+2*a^2*b");
    CHECK(MultiPoly(3, 2).to_string() == "0");
    CHECK(MultiPoly::constant(3, 2, -1).to_string() == "2");
}

TEST_CASE("minors of the identity") {
    const auto f3 = gf::Field::build(3);
    const auto id = PolyMatrix::from_matrix(linalg::Matrix::identity(f3, 2), 1);
    const auto m1 = poly::minors(id, 1);
    REQUIRE(m1.size() == 4);
    CHECK(m1[0] == MultiPoly::constant(3, 1, 1));
    CHECK(m1[1].is_zero());
    CHECK(m1[2].is_zero());
    CHECK(m1[3] == MultiPoly::constant(3, 1, 1));
    const auto m2 = poly::minors(id, 2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == MultiPoly::constant(3, 1, 1));
    CHECK_THROWS_AS(poly::minors(id, 3), Error);
    const auto big = PolyMatrix::from_matrix(linalg::Matrix::identity(f3, 12), 1);
    CHECK_THROWS_AS(poly::minors(big, 6), Error);
}

TEST_CASE("minors commute with evaluation") {
    std::mt19937_64 rng(5);
    const auto f9 = gf::Field::build(3, 2);
    for (int t = 0; t < 12; ++t) {
        const std::size_t r = 2 + t % 3, c = 2 + (t / 3) % 3;
        PolyMatrix m(3, 2, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_poly(3, 2, rng, 2, 2);
        std::vector<Code> pt{static_cast<Code>(rng() % 9), static_cast<Code>(rng() % 9)};
        const auto ev = m.evaluate(f9, pt);
        const std::size_t k = std::min(r, c);
        const auto sym = poly::minors(m, k);
        // concrete minors by determinant of submatrices, same order
        std::vector<Code> concrete;
        std::vector<std::size_t> rows(k), cols(k);
        std::vector<bool> rsel(r, false), csel(c, false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + k, true);
            do {
                linalg::Matrix sub(f9, k, k);
                std::size_t a = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!rsel[i]) continue;
                    std::size_t b = 0;
                    for (std::size_t j = 0; j < c; ++j)
                        if (csel[j]) sub.set(a, b++, ev.at(i, j));
                    ++a;
                }
                concrete.push_back(linalg::determinant(sub));
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
        REQUIRE(sym.size() == concrete.size());
        for (std::size_t i = 0; i < sym.size(); ++i) CHECK(sym[i].evaluate(f9, pt) == concrete[i]);
    }
}

TEST_CASE("Witt sums: hand ghost computations") {
    const auto names1 = poly::witt_variable_names(2);
    const auto s2 = poly::witt_sums(2, 2);
    CHECK(s2[0].to_string(names1) == "x0+y0");
    // w1 = z0^2 + 2 z1: S1 = x1 + y1 + ((x0^2 + y0^2) - (x0+y0)^2)/2 = x1 + y1 - x0 y0
    CHECK(s2[1].to_string(names1) == "x1+y1+x0*y0");
    const auto s3 = poly::witt_sums(3, 2);
    CHECK(s3[0].to_string(names1) == "x0+y0");
    // w1 = z0^3 + 3 z1: S1 = x1 + y1 - (3 x0^2 y0 + 3 x0 y0^2)/3
    CHECK(s3[1].to_string(names1) == "x1+y1+2*x0^2*y0+2*x0*y0^2");
    CHECK(poly::witt_sums(3, 1).size() == 1);
}

TEST_CASE("Witt sums realize addition in Z/p^n") {
    for (std::uint32_t p : {3u, 5u}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto s = poly::witt_sums(p, n);
            const auto fp = gf::Field::build(p);
            std::uint64_t mod = 1;
            for (std::size_t i = 0; i < n; ++i) mod *= p;
            const std::uint64_t step = mod > 30 ? 7 : 1;
            for (std::uint64_t a = 0; a < mod; a += step)
                for (std::uint64_t b = 0; b < mod; b += step) {
                    const auto da = witt_digits(a, p, n), db = witt_digits(b, p, n);
                    REQUIRE(witt_value(da, p) == a);
                    std::vector<Code> pt;
                    for (auto d : da) pt.push_back(d);
                    for (auto d : db) pt.push_back(d);
                    const auto expect = witt_digits(a + b, p, n);
                    for (std::size_t i = 0; i < n; ++i) REQUIRE(s[i].evaluate(fp, pt) == expect[i]);
                }
        }
    }
}

TEST_CASE("Witt associativity by substitution") {
    for (std::uint32_t p : {3u, 5u}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            if (p == 5 && n == 3) continue;  // degree 25 * 5 substitution is slow and covered numerically above
            const auto s = poly::witt_sums(p, n);
            const PolyRing ring{p, 3 * n};
            std::vector<MultiPoly> x, y, z;
            for (std::size_t i = 0; i < n; ++i) {
                x.push_back(ring.var(i));
                y.push_back(ring.var(n + i));
                z.push_back(ring.var(2 * n + i));
            }
            auto apply = [&](const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
                std::vector<MultiPoly> images = a;
                images.insert(images.end(), b.begin(), b.end());
                std::vector<MultiPoly> out;
                for (const auto& si : s) out.push_back(substitute(si, ring, std::span<const MultiPoly>(images)));
                return out;
            };
            CHECK(apply(apply(x, y), z) == apply(x, apply(y, z)));
            CHECK(apply(x, y) == apply(y, x));
        }
    }
}
