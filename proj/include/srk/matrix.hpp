// Dense matrices over GF(p^m) and exact elimination.
//
// Storage is planar: coefficient k of every entry lives in its own uint16
// plane, so a row operation by a field scalar c is the m x m GF(p) matrix of
// "multiply by c" applied plane-wise through the mod-p axpy kernel.
#ifndef SRK_MATRIX_HPP
#define SRK_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "srk/gf.hpp"

namespace srk::linalg {

using gf::Code;

class Matrix {
public:
    Matrix(gf::Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(const gf::Field& field, std::size_t n);
    /// Entries given as codes, row-major.
    static Matrix from_codes(const gf::Field& field, std::size_t rows, std::size_t cols,
                             const std::vector<Code>& codes);

    const gf::Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Code at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Code c);
    bool entry_nonzero(std::size_t i, std::size_t j) const;

    std::uint16_t* plane_row(std::uint32_t k, std::size_t i) { return data_.data() + (k * rows_ + i) * cols_; }
    const std::uint16_t* plane_row(std::uint32_t k, std::size_t i) const {
        return data_.data() + (k * rows_ + i) * cols_;
    }

    bool is_zero() const;

    /// Row dst (from column col0 on) += c * row src_row of src.
    void add_scaled_row(std::size_t dst, const Matrix& src, std::size_t src_row, Code c, std::size_t col0 = 0);
    void scale_row(std::size_t i, Code c, std::size_t col0 = 0);
    void swap_rows(std::size_t a, std::size_t b);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const { return scaled(field_.neg(1)); }
    Matrix scaled(Code c) const;
    Matrix pow(std::uint64_t e) const;
    Matrix transpose() const;
    /// Column j as a rows x 1 matrix.
    Matrix column(std::size_t j) const;

    /// Reinterprets prime-field entries in an extension of the same characteristic.
    Matrix embedded(const gf::Field& target) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    void require_compatible(const Matrix& o) const;

    gf::Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint16_t> data_;
};

/// [[a, b], [c, d]] for equally sized square blocks.
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts);
Matrix kron(const Matrix& a, const Matrix& b);

std::size_t rank(Matrix m);

struct Echelon {
    Matrix reduced;  // reduced row echelon form, zero rows at the bottom
    std::vector<std::size_t> pivots;
};
Echelon rref(Matrix m);

/// Basis of {x : m x = 0} as the columns of the result; the basis vector for
/// free column f has a 1 at f and 0 at every other free column.
struct Nullspace {
    Matrix basis;
    std::vector<std::size_t> free_columns;
};
Nullspace nullspace(const Matrix& m);

Code determinant(Matrix m);

}  // namespace srk::linalg

#endif
