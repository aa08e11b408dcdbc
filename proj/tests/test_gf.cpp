#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "srk/gf.hpp"

using namespace srk;
using gf::Code;
using gf::Field;

namespace {

// Dense polynomials over GF(p), low degree first, used as an independent model.
using P = std::vector<int>;

void trim(P& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

P poly_mod(P a, const P& b, int p) {
    trim(a);
    const int inv_lead = [&] {
        for (int x = 1; x < p; ++x)
            if (x * b.back() % p == 1) return x;
        return 0;
    }();
    while (a.size() >= b.size()) {
        const int q = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - q * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

P poly_mul(const P& a, const P& b, int p) {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

P poly_sub(P a, const P& b, int p) {
    a.resize(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

// Inverse of a modulo f by the extended Euclidean algorithm.
P ext_gcd_inverse(P a, P f, int p) {
    trim(a);
    P r0 = f, r1 = a, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        P q;
        P rem = r0;
        const int inv_lead = [&] {
            for (int x = 1; x < p; ++x)
                if (x * r1.back() % p == 1) return x;
            return 0;
        }();
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            const int c = rem.back() * inv_lead % p;
            const std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = ((rem[shift + i] - c * r1[i]) % p + p) % p;
            trim(rem);
        }
        trim(q);
        P t2 = poly_sub(t0, poly_mul(q, t1, p), p);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    // r0 is a nonzero constant
    int inv_c = 0;
    for (int x = 1; x < p; ++x)
        if (x * r0[0] % p == 1) inv_c = x;
    for (auto& c : t0) c = c * inv_c % p;
    return poly_mod(t0, f, p);
}

P to_poly(const Field& f, Code c) {
    P out;
    for (auto d : f.coefficients(c)) out.push_back(static_cast<int>(d));
    trim(out);
    return out;
}

bool brute_irreducible(const P& f, int p) {
    // no monic factor of degree 1..deg-1
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d < deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            P g(d + 1, 0);
            int r = code;
            for (int i = 0; i < d; ++i) {
                g[i] = r % p;
                r /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("prime field construction") {
    const auto f = Field::build(3);
    CHECK(f.size() == 3);
    CHECK(f.is_prime_field());
    CHECK(f.modulus().empty());
    CHECK_THROWS_AS(Field::build(4), Error);
    CHECK_THROWS_AS(Field::build(3, 0), Error);
    CHECK_THROWS_AS(Field::build(1), Error);
}

TEST_CASE("GF(9) modulus is the first irreducible quadratic") {
    // Oracle: scan monic quadratics in lexicographic order of (c0, c1).
    P first;
    for (int c0 = 0; c0 < 3 && first.empty(); ++c0)
        for (int c1 = 0; c1 < 3 && first.empty(); ++c1) {
            P f{c0, c1, 1};
            bool root = false;
            for (int x = 0; x < 3; ++x) root |= (c0 + c1 * x + x * x) % 3 == 0;
            if (!root) first = f;
        }
    CHECK(first == P{1, 0, 1});
    const auto f9 = Field::build(3, 2);
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("moduli agree with brute-force irreducibility") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {2, 3}}) {
        const auto f = Field::build(p, m);
        P mod(f.modulus().begin(), f.modulus().end());
        CHECK(brute_irreducible(mod, p));
        // every lexicographically earlier monic polynomial is reducible
        int count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            P g(m + 1, 0);
            int r = code;
            for (int i = 0; i < m; ++i) {
                g[i] = r % p;
                r /= p;
            }
            g[m] = 1;
            // lexicographic with c0 most significant
            bool earlier = false;
            for (int i = 0; i < m; ++i) {
                if (g[i] != mod[i]) {
                    earlier = g[i] < mod[i];
                    break;
                }
            }
            if (earlier) CHECK_FALSE(brute_irreducible(g, p));
        }
        std::vector<std::uint32_t> mono(mod.begin(), mod.end());
        CHECK(gf::is_irreducible(p, mono));
    }
}

TEST_CASE("small arithmetic examples") {
    const auto f3 = Field::build(3);
    CHECK(f3.add(2, 2) == 1);
    const auto f9 = Field::build(3, 2);
    const Code y = 3, two_y = 6;
    CHECK(f9.mul(y, two_y) == 1);
    CHECK(f9.inv(y) == two_y);
    CHECK_THROWS_AS(f9.inv(0), Error);
    auto a = f9.element(y);
    CHECK_THROWS_AS(a / f9.zero(), Error);
    CHECK_THROWS_AS(a + Field::build(3).one(), Error);
}

TEST_CASE("inverse matches extended gcd") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}, {3, 4}}) {
        const auto f = Field::build(p, m);
        P mod(f.modulus().begin(), f.modulus().end());
        for (Code c = 1; c < f.size(); ++c) {
            const P expect = ext_gcd_inverse(to_poly(f, c), mod, p);
            CHECK(to_poly(f, f.inv(c)) == expect);
        }
    }
}

TEST_CASE("multiplication matches polynomial model") {
    const auto f = Field::build(3, 3);
    P mod(f.modulus().begin(), f.modulus().end());
    for (Code a = 0; a < f.size(); ++a)
        for (Code b = 0; b < f.size(); ++b)
            REQUIRE(to_poly(f, f.mul(a, b)) == poly_mod(poly_mul(to_poly(f, a), to_poly(f, b), 3), mod, 3));
}

TEST_CASE("enumeration order and Frobenius") {
    const auto f3 = Field::build(3);
    auto e3 = f3.enumerate();
    REQUIRE(e3.size() == 3);
    CHECK(e3[0].code() == 0);
    CHECK(e3[1].code() == 1);
    CHECK(e3[2].code() == 2);

    const auto f9 = Field::build(3, 2);
    auto e9 = f9.enumerate();
    CHECK(e9.size() == 9);
    CHECK(e9[0].is_zero());
    CHECK(e9[1] == f9.one());
    std::set<Code> distinct;
    for (const auto& x : e9) {
        distinct.insert(x.code());
        CHECK(x.pow(9) == x);
    }
    CHECK(distinct.size() == 9);

    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}}) {
        const auto f = Field::build(p, m);
        std::set<Code> images;
        std::size_t fixed = 0;
        for (Code c = 0; c < f.size(); ++c) {
            const Code fr = f.pow(c, p);
            images.insert(fr);
            if (fr == c) ++fixed;
            if (fr == c) CHECK(c < static_cast<Code>(p));
        }
        CHECK(images.size() == f.size());
        CHECK(fixed == static_cast<std::size_t>(p));
        // additive and multiplicative
        for (Code a = 0; a < f.size(); a += 5)
            for (Code b = 0; b < f.size(); b += 3) {
                CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
                CHECK(f.pow(f.mul(a, b), p) == f.mul(f.pow(a, p), f.pow(b, p)));
            }
    }
}

TEST_CASE("field axioms over full enumeration") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}, {7, 2}, {3, 3}, {3, 4}}) {
        const auto f = Field::build(p, m);
        const Code q = f.size();
        const Code step = q > 27 ? 7 : 1;
        for (Code a = 0; a < q; a += 1)
            for (Code b = 0; b < q; b += step) {
                REQUIRE(f.add(a, b) == f.add(b, a));
                REQUIRE(f.mul(a, b) == f.mul(b, a));
                REQUIRE(f.sub(f.add(a, b), b) == a);
                for (Code c = 0; c < q; c += step) {
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        for (Code a = 1; a < q; ++a) REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("mul_matrix realizes multiplication on coefficients") {
    const auto f = Field::build(3, 3);
    for (Code c = 0; c < f.size(); ++c) {
        const auto& mm = f.mul_matrix(c);
        for (Code x = 0; x < f.size(); x += 4) {
            const auto xc = f.coefficients(x);
            std::vector<std::uint32_t> out(3, 0);
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) out[k] = (out[k] + mm[k * 3 + l] * xc[l]) % 3;
            CHECK(f.from_coefficients(out) == f.mul(c, x));
        }
    }
}
