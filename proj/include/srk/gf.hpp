// Exact arithmetic in GF(p) and GF(p^m).
//
// Elements are stored as integer codes: the coefficient vector
// (c_0, ..., c_{m-1}) of the residue class modulo the field modulus encodes
// as c_0 + c_1 p + ... + c_{m-1} p^{m-1}. Codes below p are exactly the prime
// subfield, so GF(p) embeds into every GF(p^m) by the identity on codes.
#ifndef SRK_GF_HPP
#define SRK_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace srk {

/// Raised for violated preconditions on user input (bad primes, mismatched
/// fields, malformed files). The CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace gf {

using Code = std::uint32_t;

bool is_prime(std::uint32_t n);

class FieldElement;

class Field {
public:
    /// Builds GF(p^m). For m > 1 the modulus is the lexicographically first
    /// monic irreducible polynomial, comparing coefficient vectors from the
    /// constant term upwards.
    static Field build(std::uint32_t p, std::uint32_t m = 1);

    std::uint32_t p() const { return impl_->p; }
    std::uint32_t degree() const { return impl_->m; }
    std::uint32_t size() const { return impl_->q; }
    bool is_prime_field() const { return impl_->m == 1; }

    /// Monic modulus, coefficients low degree first (length m+1). Empty for m = 1.
    const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    Code pow(Code a, std::uint64_t e) const;
    Code from_int(std::int64_t v) const;

    /// Coefficient c_k of the element.
    std::uint32_t digit(Code a, std::uint32_t k) const;
    std::vector<std::uint32_t> coefficients(Code a) const;
    Code from_coefficients(std::span<const std::uint32_t> coeffs) const;

    FieldElement element(Code c) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// All p^m elements in increasing code order: 0, 1, ..., p-1, Y, 1+Y, ...
    std::vector<FieldElement> enumerate() const;

    /// Multiplication-by-c as an m x m matrix over GF(p), row-major:
    /// entry [k * m + l] is digit k of c * Y^l.
    const std::vector<std::uint16_t>& mul_matrix(Code c) const;

    std::string to_string(Code a) const;
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.impl_ == b.impl_ || (a.p() == b.p() && a.degree() == b.degree());
    }

private:
    struct Impl {
        std::uint32_t p = 0;
        std::uint32_t m = 1;
        std::uint32_t q = 0;
        std::vector<std::uint32_t> modulus;
        std::vector<Code> exp;  // exp[i] = g^i, i < q-1
        std::vector<std::uint32_t> log;
        std::vector<std::vector<std::uint16_t>> mul_matrices;
    };
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Irreducibility by trial division over all monic polynomials of degree
/// 1..deg/2. Coefficients low degree first; the polynomial must be monic.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

class FieldElement {
public:
    FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {}

    const Field& field() const { return field_; }
    Code code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    std::vector<std::uint32_t> coefficients() const { return field_.coefficients(code_); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {field_, field_.neg(code_)}; }
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }

    std::string to_string() const { return field_.to_string(code_); }

private:
    void require_same(const FieldElement& o) const;
    Field field_;
    Code code_;
};

}  // namespace gf
}  // namespace srk

#endif
