// pi-points alpha_lambda : K[t, tau]/(t^p - tau^2) -> A_K, restriction of
// supermodules along them, and the square-zero rank matrix
//     [[ tau,        t   ],
//      [ -t^{p-1},  -tau ]]
// whose rank equals d exactly when the restriction has finite flat dimension.
//
// Coordinates of lambda: one per even generator (s1..sn, then x1..xs), then
// one for sigma when the algebra has it. The x_j enter t linearly.
#ifndef SRK_PIP_HPP
#define SRK_PIP_HPP

#include <vector>

#include "srk/halg.hpp"
#include "srk/poly.hpp"
#include "srk/smod.hpp"

namespace srk::pip {

using halg::AlgebraPtr;
using halg::BasicElement;
using linalg::Matrix;
using poly::PolyMatrix;
using smod::SuperModule;

enum class Case { I, II, III };

/// Throws for algebras outside the three families.
Case case_of(const halg::Algebra& a);
std::size_t lambda_length(const halg::Algebra& a);

template <class R>
struct AlphaImage {
    BasicElement<R> t;
    BasicElement<R> tau;
};

/// alpha_lambda with lambda entries in any coefficient ring over GF(p).
template <class R>
AlphaImage<R> alpha(const AlgebraPtr& a, const R& ring, const std::vector<typename R::value_type>& lambda) {
    const Case c = case_of(*a);
    if (lambda.size() != lambda_length(*a))
        throw Error("lambda needs " + std::to_string(lambda_length(*a)) + " coordinates, got " +
                    std::to_string(lambda.size()));
    const auto& spec = a->spec();
    AlphaImage<R> out{BasicElement<R>(a, ring), BasicElement<R>(a, ring)};
    std::size_t pos = 0;
    for (std::uint32_t i = 1; i <= spec.n; ++i, ++pos) {
        const std::size_t g = a->chain_generator(i);
        if (c == Case::III && i == spec.n) {
            poly::Exponent e(a->generators().size(), 0);
            std::uint64_t power = 1;
            for (std::uint32_t k = 1; k < spec.m; ++k) power *= spec.p;
            e[g] = static_cast<std::uint32_t>(power);
            out.t.add_term(*a->index_of(e), lambda[pos]);
        } else {
            out.t.add_term(a->generator_basis_index(g), lambda[pos]);
        }
    }
    for (std::uint32_t j = 1; j <= spec.s_zp; ++j, ++pos)
        out.t.add_term(a->generator_basis_index(a->zp_generator(j)), lambda[pos]);
    if (c != Case::I) {
        const auto& last = lambda[pos];
        const std::size_t sigma = a->generator_basis_index(*a->odd_generator());
        if (c == Case::II) {
            out.tau.add_term(sigma, last);
        } else {
            out.t.add_term(a->generator_basis_index(a->chain_generator(spec.n)), ring.mul(last, last));
            out.tau.add_term(sigma, ring_pow(ring, last, spec.p));
        }
    }
    return out;
}

/// Concrete lambda over one field; rejects lambda = 0.
AlphaImage<FieldRing> alpha(const AlgebraPtr& a, const std::vector<gf::FieldElement>& lambda);
/// Generic lambda = (Y1, ..., Yr).
AlphaImage<PolyRing> alpha_symbolic(const AlgebraPtr& a);

struct AModule {
    gf::Field field;
    std::vector<int> parity;
    Matrix t;
    Matrix tau;
    std::size_t dim() const { return parity.size(); }
};

struct SymbolicAModule {
    std::vector<int> parity;
    PolyMatrix t;
    PolyMatrix tau;
    std::size_t dim() const { return parity.size(); }
};

/// Restricts one module along many lambdas over a fixed field; the basis
/// actions of M_K are computed once.
class Restrictor {
public:
    Restrictor(const SuperModule& m, const gf::Field& field);
    AModule restrict(std::span<const gf::Code> lambda) const;
    const SuperModule& module() const { return module_; }

private:
    SuperModule module_;
    std::vector<Matrix> basis_;
};

AModule restrict(const SuperModule& m, const std::vector<gf::FieldElement>& lambda);
/// M must be defined over GF(p); entries are polynomials in Y1..Yr.
SymbolicAModule restrict_symbolic(const SuperModule& m);

/// Throws when t^p != tau^2 or t, tau fail to commute (the square would not vanish).
Matrix rank_matrix(const AModule& r);
PolyMatrix rank_matrix(const SymbolicAModule& r);

bool finite_flat_dim(const AModule& r);

}  // namespace srk::pip

#endif
