// Sparse multivariate polynomials over GF(p), polynomial matrices and their
// minors, and the Witt vector addition polynomials.
#ifndef SRK_POLY_HPP
#define SRK_POLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "srk/gf.hpp"
#include "srk/matrix.hpp"

namespace srk::poly {

using Exponent = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponent& e);

/// Canonical term order: increasing total degree, and within one degree
/// lexicographically decreasing (earlier variables dominate). Printing walks
/// the terms in this order.
struct TermOrder {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
public:
    using Terms = std::map<Exponent, std::uint32_t, TermOrder>;

    MultiPoly(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

    static MultiPoly constant(std::uint32_t p, std::size_t nvars, std::int64_t c);
    static MultiPoly variable(std::uint32_t p, std::size_t nvars, std::size_t index);
    static MultiPoly monomial(std::uint32_t p, std::size_t nvars, Exponent exps, std::int64_t c = 1);

    std::uint32_t p() const { return p_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Nonzero constant; returns false for zero.
    bool is_nonzero_constant() const;
    std::uint64_t degree() const;

    /// Adds c * x^e, dropping the term if the coefficient cancels.
    void add_term(const Exponent& e, std::uint32_t c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const { return scaled(p_ - 1); }
    MultiPoly scaled(std::uint32_t c) const;
    MultiPoly pow(std::uint64_t e) const;

    /// Every term has the same weighted degree (weights default to 1).
    bool is_homogeneous(std::span<const std::uint32_t> weights = {}) const;

    /// Evaluation at a point of K^v for a field K of characteristic p.
    gf::Code evaluate(const gf::Field& field, std::span<const gf::Code> point) const;
    gf::FieldElement evaluate(std::span<const gf::FieldElement> point) const;

    /// Canonical text: terms in TermOrder joined by '+', coefficients 1..p-1,
    /// e.g. "x1+y1+2*x0^2*y0". Names default to Y1..Yv.
    std::string to_string(const std::vector<std::string>& names = {}) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void require_compatible(const MultiPoly& o) const;

    std::uint32_t p_;
    std::size_t nvars_;
    Terms terms_;
};

std::vector<std::string> default_names(std::size_t nvars, const std::string& stem = "Y", std::size_t first = 1);

class PolyMatrix {
public:
    PolyMatrix(std::uint32_t p, std::size_t nvars, std::size_t rows, std::size_t cols);

    /// Constant matrix from a prime-field matrix.
    static PolyMatrix from_matrix(const linalg::Matrix& m, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }
    std::uint32_t p() const { return p_; }

    MultiPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    PolyMatrix scaled(const MultiPoly& c) const;
    PolyMatrix pow(std::uint64_t e) const;
    bool is_zero() const;

    linalg::Matrix evaluate(const gf::Field& field, std::span<const gf::Code> point) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::uint32_t p_;
    std::size_t nvars_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<MultiPoly> entries_;
};

PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

inline constexpr std::size_t kDefaultMinorCap = 10'000;

/// All k x k minors by cofactor expansion, row subsets outer and column
/// subsets inner, each in lexicographic order. Throws if the count exceeds cap.
std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t k, std::size_t cap = kDefaultMinorCap);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Witt addition polynomials S_0..S_{n-1} reduced mod p, all in the 2n
/// variables x0..x_{n-1}, y0..y_{n-1} (x's first).
std::vector<MultiPoly> witt_sums(std::uint32_t p, std::size_t n);
std::vector<std::string> witt_variable_names(std::size_t n);

}  // namespace srk::poly

#endif
