#include "srk/gf.hpp"

#include <algorithm>

namespace srk::gf {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b, over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        trim(a);
    }
    return a;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
    const std::size_t deg = monic.size() - 1;
    if (deg < 1 || monic.back() != 1) return false;
    if (deg == 1) return true;
    const Poly f(monic.begin(), monic.end());
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1);
            std::uint64_t r = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(r % p);
                r /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field Field::build(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    if (p > 255) throw Error("field characteristic must be below 256");
    if (m == 0) throw Error("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1u << 20)) throw Error("field GF(" + std::to_string(p) + "^" + std::to_string(m) + ") too large");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = static_cast<std::uint32_t>(q);

    if (m > 1) {
        // Lexicographic over (c_0, ..., c_{m-1}) with c_0 most significant.
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            Poly f(m + 1);
            std::uint64_t r = idx;
            for (std::uint32_t i = m; i-- > 0;) {
                f[i] = static_cast<std::uint32_t>(r % p);
                r /= p;
            }
            f[m] = 1;
            if (is_irreducible(p, f)) {
                impl->modulus = f;
                break;
            }
        }
    }

    // Log/exp tables from a primitive element found by brute force.
    auto slow_mul = [&](Code a, Code b) {
        Poly x(m), y(m);
        for (std::uint32_t i = 0; i < m; ++i) {
            x[i] = a % p;
            a /= p;
            y[i] = b % p;
            b /= p;
        }
        Poly prod(2 * m, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        if (m > 1) prod = poly_mod(prod, impl->modulus, p);
        Code c = 0;
        for (std::size_t i = prod.size(); i-- > 0;) c = c * p + prod[i];
        return c;
    };

    const std::uint32_t order = impl->q - 1;
    impl->exp.assign(order, 0);
    impl->log.assign(impl->q, 0);
    for (Code g = 1; g < impl->q; ++g) {
        Code x = 1;
        std::uint32_t k = 0;
        std::vector<char> seen(impl->q, 0);
        bool primitive = true;
        for (; k < order; ++k) {
            if (seen[x]) {
                primitive = false;
                break;
            }
            seen[x] = 1;
            impl->exp[k] = x;
            impl->log[x] = k;
            x = slow_mul(x, g);
        }
        if (primitive && x == 1) break;
    }

    impl->mul_matrices.resize(impl->q);
    Field f(impl);
    for (Code c = 0; c < impl->q; ++c) {
        std::vector<std::uint16_t> mat(static_cast<std::size_t>(m) * m);
        Code ypow = 1;
        for (std::uint32_t l = 0; l < m; ++l) {
            const Code prod = f.mul(c, ypow);
            for (std::uint32_t k = 0; k < m; ++k)
                mat[k * m + l] = static_cast<std::uint16_t>(f.digit(prod, k));
            ypow *= p;
        }
        impl->mul_matrices[c] = std::move(mat);
    }
    return f;
}

Code Field::add(Code a, Code b) const {
    const std::uint32_t p = impl_->p;
    if (impl_->m == 1) return (a + b) % p;
    Code out = 0, scale = 1;
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

Code Field::neg(Code a) const {
    const std::uint32_t p = impl_->p;
    if (impl_->m == 1) return (p - a) % p;
    Code out = 0, scale = 1;
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
        out += ((p - a % p) % p) * scale;
        a /= p;
        scale *= p;
    }
    return out;
}

Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Code Field::mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    if (impl_->m == 1) return (a * b) % impl_->p;
    const std::uint32_t order = impl_->q - 1;
    return impl_->exp[(impl_->log[a] + impl_->log[b]) % order];
}

Code Field::inv(Code a) const {
    if (a == 0) throw Error("division by zero in " + name());
    const std::uint32_t order = impl_->q - 1;
    return impl_->exp[(order - impl_->log[a]) % order];
}

Code Field::pow(Code a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = impl_->q - 1;
    return impl_->exp[(static_cast<std::uint64_t>(impl_->log[a]) * (e % order)) % order];
}

Code Field::from_int(std::int64_t v) const {
    const std::int64_t p = impl_->p;
    return static_cast<Code>(((v % p) + p) % p);
}

std::uint32_t Field::digit(Code a, std::uint32_t k) const {
    for (std::uint32_t i = 0; i < k; ++i) a /= impl_->p;
    return a % impl_->p;
}

std::vector<std::uint32_t> Field::coefficients(Code a) const {
    std::vector<std::uint32_t> out(impl_->m);
    for (auto& c : out) {
        c = a % impl_->p;
        a /= impl_->p;
    }
    return out;
}

Code Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != impl_->m)
        throw Error("expected " + std::to_string(impl_->m) + " coefficients for an element of " + name());
    Code out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= impl_->p) throw Error("coefficient out of range for " + name());
        out = out * impl_->p + coeffs[i];
    }
    return out;
}

FieldElement Field::element(Code c) const {
    if (c >= impl_->q) throw Error("element code out of range for " + name());
    return {*this, c};
}
FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(impl_->q);
    for (Code c = 0; c < impl_->q; ++c) out.emplace_back(*this, c);
    return out;
}

const std::vector<std::uint16_t>& Field::mul_matrix(Code c) const { return impl_->mul_matrices[c]; }

std::string Field::to_string(Code a) const {
    if (impl_->m == 1) return std::to_string(a);
    const auto c = coefficients(a);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += i == 1 ? "Y" : "Y^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string Field::name() const {
    if (impl_->m == 1) return "GF(" + std::to_string(impl_->p) + ")";
    return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->m) + ")";
}

void FieldElement::require_same(const FieldElement& o) const {
    if (!(field_ == o.field_)) throw Error("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    return {field_, field_.add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    return {field_, field_.sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    return {field_, field_.mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same(o);
    return {field_, field_.div(code_, o.code_)};
}
FieldElement FieldElement::inverse() const { return {field_, field_.inv(code_)}; }

}  // namespace srk::gf
