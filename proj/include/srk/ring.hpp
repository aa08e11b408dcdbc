// Coefficient rings for algebra elements: GF(p), GF(p^m) and GF(p)[Y].
//
// A ring supplies value_type, zero(), one(), from_int(), add(), mul(),
// is_zero(). Algebra elements with coefficients in any of these share one
// implementation, which is how symbolic and concrete pi-points are the same
// code path.
#ifndef SRK_RING_HPP
#define SRK_RING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "srk/gf.hpp"
#include "srk/poly.hpp"

namespace srk {

struct PrimeRing {
    using value_type = std::uint32_t;
    std::uint32_t p;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const {
        const std::int64_t q = p;
        return static_cast<value_type>(((v % q) + q) % q);
    }
    value_type add(value_type a, value_type b) const { return (a + b) % p; }
    value_type mul(value_type a, value_type b) const { return (a * b) % p; }
    bool is_zero(value_type a) const { return a == 0; }
};

struct FieldRing {
    using value_type = gf::Code;
    gf::Field field;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const { return field.from_int(v); }
    value_type add(value_type a, value_type b) const { return field.add(a, b); }
    value_type mul(value_type a, value_type b) const { return field.mul(a, b); }
    bool is_zero(value_type a) const { return a == 0; }
};

struct PolyRing {
    using value_type = poly::MultiPoly;
    std::uint32_t p;
    std::size_t nvars;

    value_type zero() const { return {p, nvars}; }
    value_type one() const { return value_type::constant(p, nvars, 1); }
    value_type from_int(std::int64_t v) const { return value_type::constant(p, nvars, v); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    value_type var(std::size_t i) const { return value_type::variable(p, nvars, i); }
};

template <class Ring>
typename Ring::value_type ring_pow(const Ring& ring, typename Ring::value_type base, std::uint64_t e) {
    auto result = ring.one();
    while (e) {
        if (e & 1) result = ring.mul(result, base);
        e >>= 1;
        if (e) base = ring.mul(base, base);
    }
    return result;
}

/// Evaluates f at images[i] for variable i, in any commutative ring.
template <class Ring>
typename Ring::value_type substitute(const poly::MultiPoly& f, const Ring& ring,
                                     std::span<const typename Ring::value_type> images) {
    if (images.size() != f.nvars()) throw Error("substitution needs one image per variable");
    // powers[i][e] cached lazily
    std::vector<std::vector<typename Ring::value_type>> powers(f.nvars());
    auto power = [&](std::size_t i, std::uint32_t e) -> const typename Ring::value_type& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(ring.one());
        while (cache.size() <= e) cache.push_back(ring.mul(cache.back(), images[i]));
        return cache[e];
    };
    auto acc = ring.zero();
    for (const auto& [exps, c] : f.terms()) {
        auto term = ring.from_int(c);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i]) term = ring.mul(term, power(i, exps[i]));
        acc = ring.add(acc, term);
    }
    return acc;
}

}  // namespace srk

#endif
