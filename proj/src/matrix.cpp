#include "srk/matrix.hpp"

#include <algorithm>

#include "srk/kernels.hpp"

namespace srk::linalg {

Matrix::Matrix(gf::Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(field_.degree() * rows * cols, 0) {}

Matrix Matrix::identity(const gf::Field& field, std::size_t n) {
    Matrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
    return out;
}

Matrix Matrix::from_codes(const gf::Field& field, std::size_t rows, std::size_t cols,
                          const std::vector<Code>& codes) {
    if (codes.size() != rows * cols) throw Error("matrix data has wrong length");
    Matrix out(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.set(i, j, codes[i * cols + j]);
    return out;
}

Code Matrix::at(std::size_t i, std::size_t j) const {
    const std::uint32_t m = field_.degree();
    if (m == 1) return data_[i * cols_ + j];
    Code out = 0;
    for (std::uint32_t k = m; k-- > 0;) out = out * field_.p() + plane_row(k, i)[j];
    return out;
}

void Matrix::set(std::size_t i, std::size_t j, Code c) {
    const std::uint32_t m = field_.degree();
    for (std::uint32_t k = 0; k < m; ++k) {
        plane_row(k, i)[j] = static_cast<std::uint16_t>(c % field_.p());
        c /= field_.p();
    }
}

bool Matrix::entry_nonzero(std::size_t i, std::size_t j) const {
    for (std::uint32_t k = 0; k < field_.degree(); ++k)
        if (plane_row(k, i)[j] != 0) return true;
    return false;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint16_t v) { return v == 0; });
}

void Matrix::add_scaled_row(std::size_t dst, const Matrix& src, std::size_t src_row, Code c, std::size_t col0) {
    if (c == 0 || col0 >= cols_) return;
    const auto& ks = kernels::active();
    const auto mod = kernels::Modulus::of(field_.p());
    const std::size_t len = cols_ - col0;
    const std::uint32_t m = field_.degree();
    if (m == 1) {
        ks.axpy(plane_row(0, dst) + col0, src.plane_row(0, src_row) + col0, static_cast<std::uint16_t>(c), len, mod);
        return;
    }
    const auto& mat = field_.mul_matrix(c);
    for (std::uint32_t k = 0; k < m; ++k)
        for (std::uint32_t l = 0; l < m; ++l)
            if (const std::uint16_t s = mat[k * m + l])
                ks.axpy(plane_row(k, dst) + col0, src.plane_row(l, src_row) + col0, s, len, mod);
}

void Matrix::scale_row(std::size_t i, Code c, std::size_t col0) {
    if (col0 >= cols_) return;
    const std::uint32_t m = field_.degree();
    const std::size_t len = cols_ - col0;
    const auto mod = kernels::Modulus::of(field_.p());
    if (m == 1) {
        kernels::active().scale(plane_row(0, i) + col0, static_cast<std::uint16_t>(c), len, mod);
        return;
    }
    Matrix tmp(field_, 1, cols_);
    for (std::uint32_t k = 0; k < m; ++k) {
        std::copy_n(plane_row(k, i) + col0, len, tmp.plane_row(k, 0) + col0);
        std::fill_n(plane_row(k, i) + col0, len, 0);
    }
    add_scaled_row(i, tmp, 0, c, col0);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::uint32_t k = 0; k < field_.degree(); ++k) std::swap_ranges(plane_row(k, a), plane_row(k, a) + cols_, plane_row(k, b));
}

void Matrix::require_compatible(const Matrix& o) const {
    if (!(field_ == o.field_)) throw Error("matrix field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_compatible(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in addition");
    Matrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i) out.add_scaled_row(i, o, i, 1);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_compatible(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in subtraction");
    Matrix out = *this;
    const Code minus_one = field_.neg(1);
    for (std::size_t i = 0; i < rows_; ++i) out.add_scaled_row(i, o, i, minus_one);
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_compatible(o);
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (entry_nonzero(i, k)) out.add_scaled_row(i, o, k, at(i, k));
    return out;
}

Matrix Matrix::scaled(Code c) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i) out.scale_row(i, c);
    return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (!square()) throw Error("power of a non-square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::uint32_t k = 0; k < field_.degree(); ++k)
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.plane_row(k, j)[i] = plane_row(k, i)[j];
    return out;
}

Matrix Matrix::column(std::size_t j) const {
    Matrix out(field_, rows_, 1);
    for (std::uint32_t k = 0; k < field_.degree(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) out.plane_row(k, i)[0] = plane_row(k, i)[j];
    return out;
}

Matrix Matrix::embedded(const gf::Field& target) const {
    if (target == field_) return *this;
    if (!field_.is_prime_field() || target.p() != field_.p())
        throw Error("cannot embed " + field_.name() + " into " + target.name());
    Matrix out(target, rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += " ";
            out += field_.to_string(at(i, j));
        }
        out += "]\n";
    }
    return out;
}

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    const std::size_t n = a.rows();
    for (const Matrix* x : {&a, &b, &c, &d})
        if (x->rows() != n || x->cols() != n || !(x->field() == a.field()))
            throw Error("block2x2 needs equally sized square blocks over one field");
    Matrix out(a.field(), 2 * n, 2 * n);
    const std::uint32_t m = a.field().degree();
    for (std::uint32_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            std::copy_n(a.plane_row(k, i), n, out.plane_row(k, i));
            std::copy_n(b.plane_row(k, i), n, out.plane_row(k, i) + n);
            std::copy_n(c.plane_row(k, i), n, out.plane_row(k, n + i));
            std::copy_n(d.plane_row(k, i), n, out.plane_row(k, n + i) + n);
        }
    return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::uint32_t k = 0; k < a.field().degree(); ++k) {
        for (std::size_t i = 0; i < a.rows(); ++i) std::copy_n(a.plane_row(k, i), a.cols(), out.plane_row(k, i));
        for (std::size_t i = 0; i < b.rows(); ++i)
            std::copy_n(b.plane_row(k, i), b.cols(), out.plane_row(k, a.rows() + i) + a.cols());
    }
    return out;
}

Matrix hstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw Error("hstack of nothing");
    std::size_t cols = 0;
    for (const auto& part : parts) {
        if (part.rows() != parts[0].rows()) throw Error("hstack row mismatch");
        cols += part.cols();
    }
    Matrix out(parts[0].field(), parts[0].rows(), cols);
    std::size_t offset = 0;
    for (const auto& part : parts) {
        for (std::uint32_t k = 0; k < out.field().degree(); ++k)
            for (std::size_t i = 0; i < part.rows(); ++i)
                std::copy_n(part.plane_row(k, i), part.cols(), out.plane_row(k, i) + offset);
        offset += part.cols();
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.entry_nonzero(i, j)) continue;
            const Code c = a.at(i, j);
            for (std::size_t r = 0; r < b.rows(); ++r) {
                // Row i*br + r, columns j*bc .. j*bc+bc-1 get c * b[r, :].
                Matrix piece(a.field(), 1, b.cols());
                piece.add_scaled_row(0, b, r, c);
                for (std::uint32_t k = 0; k < a.field().degree(); ++k)
                    std::copy_n(piece.plane_row(k, 0), b.cols(), out.plane_row(k, i * b.rows() + r) + j * b.cols());
            }
        }
    return out;
}

namespace {

// Forward elimination; with `full` the result is reduced row echelon form.
std::vector<std::size_t> eliminate(Matrix& m, bool full) {
    const gf::Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && !m.entry_nonzero(piv, col)) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        m.scale_row(row, f.inv(m.at(row, col)), col);
        for (std::size_t r = full ? 0 : row + 1; r < m.rows(); ++r) {
            if (r == row || !m.entry_nonzero(r, col)) continue;
            m.add_scaled_row(r, m, row, f.neg(m.at(r, col)), col);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return eliminate(m, false).size(); }

Echelon rref(Matrix m) {
    auto pivots = eliminate(m, true);
    return {std::move(m), std::move(pivots)};
}

Nullspace nullspace(const Matrix& m) {
    const auto e = rref(m);
    std::vector<std::size_t> free_cols;
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : e.pivots) is_pivot[c] = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(m.field(), m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        basis.set(free_cols[j], j, 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis.set(e.pivots[r], j, m.field().neg(e.reduced.at(r, free_cols[j])));
    }
    return {std::move(basis), std::move(free_cols)};
}

Code determinant(Matrix m) {
    if (!m.square()) throw Error("determinant of a non-square matrix");
    const gf::Field& f = m.field();
    Code det = 1;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t piv = col;
        while (piv < m.rows() && !m.entry_nonzero(piv, col)) ++piv;
        if (piv == m.rows()) return 0;
        if (piv != col) {
            m.swap_rows(col, piv);
            det = f.neg(det);
        }
        const Code d = m.at(col, col);
        det = f.mul(det, d);
        const Code dinv = f.inv(d);
        for (std::size_t r = col + 1; r < m.rows(); ++r)
            if (m.entry_nonzero(r, col)) m.add_scaled_row(r, m, col, f.neg(f.mul(m.at(r, col), dinv)), col);
    }
    return det;
}

}  // namespace srk::linalg
