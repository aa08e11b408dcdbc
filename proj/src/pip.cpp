#include "srk/pip.hpp"

namespace srk::pip {

Case case_of(const halg::Algebra& a) {
    switch (a.kind()) {
        case halg::Kind::TypeI:
            return Case::I;
        case halg::Kind::TypeII:
            return Case::II;
        case halg::Kind::TypeIII:
            return Case::III;
        case halg::Kind::MnFMu:
            break;
    }
    throw Error("no pi-point family for " + halg::kind_name(a.kind()) + " algebras");
}

std::size_t lambda_length(const halg::Algebra& a) {
    const std::size_t even = a.spec().n + a.spec().s_zp;
    return case_of(a) == Case::I ? even : even + 1;
}

AlphaImage<FieldRing> alpha(const AlgebraPtr& a, const std::vector<gf::FieldElement>& lambda) {
    if (lambda.empty()) throw Error("lambda is empty");
    const gf::Field& field = lambda.front().field();
    if (field.p() != a->p()) throw Error("lambda field characteristic differs from the algebra");
    std::vector<gf::Code> codes;
    bool nonzero = false;
    for (const auto& x : lambda) {
        if (!(x.field() == field)) throw Error("lambda coordinates lie in different fields");
        codes.push_back(x.code());
        nonzero |= !x.is_zero();
    }
    if (!nonzero) throw Error("lambda must be nonzero");
    return alpha(a, FieldRing{field}, codes);
}

AlphaImage<PolyRing> alpha_symbolic(const AlgebraPtr& a) {
    const std::size_t r = lambda_length(*a);
    const PolyRing ring{a->p(), r};
    std::vector<poly::MultiPoly> ys;
    for (std::size_t i = 0; i < r; ++i) ys.push_back(ring.var(i));
    return alpha(a, ring, ys);
}

Restrictor::Restrictor(const SuperModule& m, const gf::Field& field)
    : module_(smod::base_change(m, field)), basis_(smod::basis_actions(module_)) {
    case_of(*m.algebra());
}

AModule Restrictor::restrict(std::span<const gf::Code> lambda) const {
    const auto& field = module_.field();
    const auto img = alpha(module_.algebra(), FieldRing{field}, std::vector<gf::Code>(lambda.begin(), lambda.end()));
    const std::size_t d = module_.dim();
    Matrix t(field, d, d), tau(field, d, d);
    for (const auto& [idx, c] : img.t.terms()) t = t + basis_[idx].scaled(c);
    for (const auto& [idx, c] : img.tau.terms()) tau = tau + basis_[idx].scaled(c);
    return {field, module_.parity(), std::move(t), std::move(tau)};
}

AModule restrict(const SuperModule& m, const std::vector<gf::FieldElement>& lambda) {
    alpha(m.algebra(), lambda);  // validates lambda
    const gf::Field& field = lambda.front().field();
    if (!(m.field() == field) && !m.field().is_prime_field())
        throw Error("cannot restrict a module over " + m.field().name() + " along a point over " + field.name());
    std::vector<gf::Code> codes;
    for (const auto& x : lambda) codes.push_back(x.code());
    return Restrictor(m, field).restrict(codes);
}

SymbolicAModule restrict_symbolic(const SuperModule& m) {
    if (!m.field().is_prime_field()) throw Error("symbolic restriction needs a module over GF(p)");
    const auto img = alpha_symbolic(m.algebra());
    const auto rho = smod::basis_actions(m);
    const std::size_t d = m.dim(), r = lambda_length(*m.algebra());
    PolyMatrix t(m.algebra()->p(), r, d, d), tau(m.algebra()->p(), r, d, d);
    for (const auto& [idx, c] : img.t.terms()) t = t + PolyMatrix::from_matrix(rho[idx], r).scaled(c);
    for (const auto& [idx, c] : img.tau.terms()) tau = tau + PolyMatrix::from_matrix(rho[idx], r).scaled(c);
    return {m.parity(), std::move(t), std::move(tau)};
}

Matrix rank_matrix(const AModule& r) {
    const std::uint32_t p = r.field.p();
    const Matrix tp1 = r.t.pow(p - 1);
    if (!(tp1 * r.t == r.tau * r.tau)) throw Error("restricted module violates t^p = tau^2");
    if (!(r.t * r.tau == r.tau * r.t)) throw Error("restricted module: t and tau do not commute");
    return linalg::block2x2(r.tau, r.t, -tp1, -r.tau);
}

PolyMatrix rank_matrix(const SymbolicAModule& r) {
    const PolyMatrix tp1 = r.t.pow(r.t.p() - 1);
    if (!(tp1 * r.t == r.tau * r.tau)) throw Error("symbolic restriction violates t^p = tau^2");
    return poly::block2x2(r.tau, r.t, -tp1, -r.tau);
}

bool finite_flat_dim(const AModule& r) { return linalg::rank(rank_matrix(r)) == r.dim(); }

}  // namespace srk::pip
