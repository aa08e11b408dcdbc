#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "srk/matrix.hpp"

using namespace srk;
using gf::Code;
using linalg::Matrix;

namespace {

Matrix random_matrix(const gf::Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::vector<Code> codes(r * c);
    for (auto& v : codes) v = static_cast<Code>(rng() % f.size());
    return Matrix::from_codes(f, r, c, codes);
}

// Leibniz formula.
Code leibniz(const Matrix& m) {
    const auto& f = m.field();
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Code total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        Code term = 1;
        for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, m.at(i, perm[i]));
        total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Matrix naive_product(const Matrix& a, const Matrix& b) {
    const auto& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Code s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
            out.set(i, j, s);
        }
    return out;
}

}  // namespace

TEST_CASE("product matches the naive triple loop") {
    std::mt19937_64 rng(1);
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {5, 2}, {251, 1}}) {
        const auto f = gf::Field::build(p, m);
        for (int t = 0; t < 10; ++t) {
            const auto a = random_matrix(f, 1 + t % 5, 2 + t % 7, rng);
            const auto b = random_matrix(f, a.cols(), 1 + t % 6, rng);
            CHECK(a * b == naive_product(a, b));
        }
    }
}

TEST_CASE("determinant matches Leibniz") {
    std::mt19937_64 rng(2);
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}, {3, 3}}) {
        const auto f = gf::Field::build(p, m);
        for (std::size_t n = 1; n <= 5; ++n)
            for (int t = 0; t < 6; ++t) {
                const auto a = random_matrix(f, n, n, rng);
                CHECK(linalg::determinant(a) == leibniz(a));
            }
    }
}

TEST_CASE("rank, rref and nullspace are consistent") {
    std::mt19937_64 rng(3);
    const auto f = gf::Field::build(3, 2);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = 1 + t % 6, c = 1 + (t * 5) % 8;
        // low rank by construction
        const std::size_t k = 1 + t % 3;
        const auto a = random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
        const auto rk = linalg::rank(a);
        CHECK(rk <= std::min({r, c, k}));
        const auto ech = linalg::rref(a);
        CHECK(ech.pivots.size() == rk);
        const auto ns = linalg::nullspace(a);
        CHECK(ns.basis.cols() == c - rk);
        if (ns.basis.cols()) CHECK((a * ns.basis).is_zero());
        CHECK(linalg::rank(ns.basis) == c - rk);
    }
}

TEST_CASE("identity, transpose, kron, embedding") {
    const auto f3 = gf::Field::build(3);
    const auto f9 = gf::Field::build(3, 2);
    const auto i2 = Matrix::identity(f3, 2);
    CHECK(linalg::rank(i2) == 2);
    const auto j = Matrix::from_codes(f3, 2, 2, {0, 1, 0, 0});
    CHECK((j * j).is_zero());
    CHECK(j.transpose().at(1, 0) == 1);
    const auto k = linalg::kron(i2, j);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 1) == 1);
    CHECK(k.at(2, 3) == 1);
    CHECK(k.at(0, 3) == 0);
    const auto e = j.embedded(f9);
    CHECK(e.field() == f9);
    CHECK(e.at(0, 1) == 1);
    CHECK_THROWS_AS(j + e, Error);
    CHECK(linalg::block2x2(j, i2, -i2, j).rows() == 4);
    CHECK(j.pow(0) == i2);
}

TEST_CASE("scaled rows over extension fields") {
    const auto f = gf::Field::build(3, 3);
    std::mt19937_64 rng(4);
    auto a = random_matrix(f, 3, 9, rng);
    const auto orig = a;
    const Code c = 17;
    a.scale_row(1, c);
    for (std::size_t j = 0; j < 9; ++j) CHECK(a.at(1, j) == f.mul(c, orig.at(1, j)));
    a.add_scaled_row(0, orig, 2, 5);
    for (std::size_t j = 0; j < 9; ++j) CHECK(a.at(0, j) == f.add(orig.at(0, j), f.mul(5, orig.at(2, j))));
}
