#include "srk/smod.hpp"

#include <algorithm>

#include "srk/ring.hpp"

namespace srk::smod {

namespace {

struct MatrixRing {
    using value_type = Matrix;
    gf::Field field;
    std::size_t n;

    value_type zero() const { return {field, n, n}; }
    value_type one() const { return Matrix::identity(field, n); }
    value_type from_int(std::int64_t v) const { return one().scaled(field.from_int(v)); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
};

Matrix diag_sign(const gf::Field& field, const std::vector<int>& parity) {
    Matrix out(field, parity.size(), parity.size());
    for (std::size_t i = 0; i < parity.size(); ++i) out.set(i, i, parity[i] ? field.neg(1) : 1);
    return out;
}

void require_compatible(const SuperModule& m, const SuperModule& n, const char* what) {
    if (!(*m.algebra() == *n.algebra())) throw Error(std::string(what) + ": modules over different algebras");
    if (!(m.field() == n.field())) throw Error(std::string(what) + ": modules over different fields");
}

/// Left regular representation of the algebra over `field`, one matrix per generator.
std::vector<Matrix> regular_actions(const halg::Algebra& a, const gf::Field& field) {
    std::vector<Matrix> out;
    const std::size_t d = a.dim();
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
        Matrix m(field, d, d);
        const std::size_t gi = a.generator_basis_index(g);
        for (std::size_t b = 0; b < d; ++b)
            for (const auto& [k, c] : a.product(gi, b)) m.set(k, b, c);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<int> basis_parity(const halg::Algebra& a) {
    std::vector<int> out(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) out[b] = a.parity(b);
    return out;
}

/// Vectors v_k completing rad M to M, chosen greedily among standard basis vectors.
std::vector<std::size_t> top_generators(const SuperModule& m) {
    const std::size_t d = m.dim();
    std::vector<Matrix> parts;
    for (const auto& a : m.actions()) parts.push_back(a);
    Matrix span = parts.empty() ? Matrix(m.field(), d, 0) : linalg::hstack(parts);
    std::size_t current = linalg::rank(span);
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < d && current < d; ++i) {
        Matrix e(m.field(), d, 1);
        e.set(i, 0, 1);
        Matrix trial = linalg::hstack({span, e});
        const std::size_t r = linalg::rank(trial);
        if (r > current) {
            span = std::move(trial);
            current = r;
            picked.push_back(i);
        }
    }
    return picked;
}

/// Columns of the cover map A^r -> M, plus the parity of each column.
struct Cover {
    Matrix map;
    std::vector<int> parity;
    std::size_t rank;
};

Cover cover_map(const SuperModule& m) {
    const auto& a = *m.algebra();
    const auto picks = top_generators(m);
    const auto rho = basis_actions(m);
    const std::size_t d = m.dim(), da = a.dim();
    Matrix map(m.field(), d, picks.size() * da);
    std::vector<int> parity;
    for (std::size_t k = 0; k < picks.size(); ++k)
        for (std::size_t b = 0; b < da; ++b) {
            const auto col = rho[b].column(picks[k]);
            for (std::size_t i = 0; i < d; ++i) map.set(i, k * da + b, col.at(i, 0));
            parity.push_back(a.parity(b) ^ m.parity()[picks[k]]);
        }
    return {std::move(map), std::move(parity), picks.size()};
}

void require_local(const SuperModule& m, const char* what) {
    if (!m.algebra()->is_unipotent())
        throw Error(std::string(what) + " needs a local algebra; " + halg::kind_name(m.algebra()->kind()) +
                    " quotients are not handled");
}

}  // namespace

SuperModule::SuperModule(AlgebraPtr algebra, gf::Field field, std::vector<int> parity, std::vector<Matrix> actions)
    : algebra_(std::move(algebra)), field_(std::move(field)), parity_(std::move(parity)), actions_(std::move(actions)) {
    if (actions_.size() != algebra_->generators().size())
        throw Error("module needs one action matrix per generator (" + std::to_string(algebra_->generators().size()) +
                    "), got " + std::to_string(actions_.size()));
    for (const auto& a : actions_)
        if (a.rows() != dim() || a.cols() != dim() || !(a.field() == field_))
            throw Error("action matrices must be " + std::to_string(dim()) + "x" + std::to_string(dim()) + " over " +
                        field_.name());
    if (field_.p() != algebra_->p()) throw Error("module field characteristic differs from the algebra");
}

const Matrix& SuperModule::action(const std::string& generator) const {
    return actions_.at(algebra_->generator_index(generator));
}

bool operator==(const SuperModule& a, const SuperModule& b) {
    return *a.algebra_ == *b.algebra_ && a.field_ == b.field_ && a.parity_ == b.parity_ && a.actions_ == b.actions_;
}

ValidationReport validate(const SuperModule& m) {
    ValidationReport report;
    const auto& alg = *m.algebra();
    const auto names = alg.generator_names();
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (m.parity()[i] != 0 && m.parity()[i] != 1) {
            report.violations.push_back("parity entry " + std::to_string(i) + " is not 0 or 1");
            return report;
        }

    const MatrixRing ring{m.field(), m.dim()};
    for (const auto& rel : alg.relations()) {
        if (!substitute(rel, ring, std::span<const Matrix>(m.actions())).is_zero())
            report.violations.push_back(rel.to_string(names) + " != 0");
    }

    for (std::size_t g = 0; g < names.size(); ++g) {
        const int gp = alg.generators()[g].parity;
        const auto& a = m.action(g);
        bool bad = false;
        for (std::size_t i = 0; i < m.dim() && !bad; ++i)
            for (std::size_t j = 0; j < m.dim() && !bad; ++j)
                if (a.entry_nonzero(i, j) && (m.parity()[i] ^ m.parity()[j]) != gp) {
                    const std::string from = m.parity()[j] ? "odd" : "even";
                    const std::string to = m.parity()[i] ? "odd" : "even";
                    report.violations.push_back(names[g] + " maps " + from + " basis vector " + std::to_string(j) +
                                                " to " + to + " basis vector " + std::to_string(i) + " (parity)");
                    bad = true;
                }
    }

    for (std::size_t g = 0; g < names.size(); ++g)
        for (std::size_t h = g + 1; h < names.size(); ++h)
            if (!(m.action(g) * m.action(h) == m.action(h) * m.action(g)))
                report.violations.push_back(names[g] + " and " + names[h] + " do not commute");
    return report;
}

std::vector<Matrix> basis_actions(const SuperModule& m) {
    const auto& a = *m.algebra();
    std::vector<Matrix> out;
    out.reserve(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const auto& e = a.basis()[b];
        auto it = std::find_if(e.begin(), e.end(), [](std::uint32_t x) { return x != 0; });
        if (it == e.end()) {
            out.push_back(Matrix::identity(m.field(), m.dim()));
            continue;
        }
        const auto g = static_cast<std::size_t>(it - e.begin());
        auto lower = e;
        --lower[g];
        // basis is sorted by total degree, so the lower monomial is already built
        out.push_back(m.action(g) * out[*a.index_of(lower)]);
    }
    return out;
}

Matrix act(const SuperModule& m, const AlgElement& x) {
    const auto rho = basis_actions(m);
    Matrix out(m.field(), m.dim(), m.dim());
    for (const auto& [idx, c] : x.terms()) out = out + rho[idx].scaled(c);
    return out;
}

SuperModule zero_module(const AlgebraPtr& algebra, const gf::Field& field) {
    std::vector<Matrix> actions(algebra->generators().size(), Matrix(field, 0, 0));
    return {algebra, field, {}, std::move(actions)};
}

SuperModule trivial_module(const AlgebraPtr& algebra, const gf::Field& field, int parity) {
    std::vector<Matrix> actions(algebra->generators().size(), Matrix(field, 1, 1));
    return {algebra, field, {parity}, std::move(actions)};
}

SuperModule free_module(const AlgebraPtr& algebra, std::size_t rank, const gf::Field& field) {
    if (rank == 0) throw Error("free module rank must be at least 1");
    const auto reg = regular_actions(*algebra, field);
    const auto par = basis_parity(*algebra);
    std::vector<Matrix> actions;
    for (const auto& g : reg) {
        Matrix acc = g;
        for (std::size_t k = 1; k < rank; ++k) acc = linalg::block_diag(acc, g);
        actions.push_back(std::move(acc));
    }
    std::vector<int> parity;
    for (std::size_t k = 0; k < rank; ++k) parity.insert(parity.end(), par.begin(), par.end());
    return {algebra, field, std::move(parity), std::move(actions)};
}

SuperModule cyclic_module(const AlgebraPtr& algebra, const std::vector<AlgElement>& ideal_generators,
                          const gf::Field& field) {
    const auto& a = *algebra;
    const std::size_t d = a.dim();
    const gf::Field fp = gf::Field::build(a.p());
    for (const auto& g : ideal_generators) {
        if (!(*g.algebra() == a)) throw Error("ideal generator lives in a different algebra");
        if (!g.parity()) throw Error("ideal generator " + to_string(g) + " is not parity-homogeneous");
    }
    // Rows span I; column j holds basis index d-1-j so pivots are leading monomials.
    std::vector<halg::SparseVec> rows;
    for (const auto& g : ideal_generators)
        for (std::size_t b = 0; b < d; ++b) {
            halg::SparseVec v;
            std::map<std::size_t, std::uint32_t> acc;
            for (const auto& [i, c] : g.terms())
                for (const auto& [k, e] : a.product(b, i)) acc[k] = (acc[k] + c * e) % a.p();
            for (const auto& [k, c] : acc)
                if (c) v.emplace_back(k, c);
            if (!v.empty()) rows.push_back(std::move(v));
        }
    Matrix span(fp, rows.size(), d);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [k, c] : rows[r]) span.set(r, d - 1 - k, c);
    const auto ech = linalg::rref(span);
    std::vector<char> leading(d, 0);
    std::vector<std::size_t> pivot_row(d, 0);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        const std::size_t idx = d - 1 - ech.pivots[r];
        leading[idx] = 1;
        pivot_row[idx] = r;
    }
    std::vector<std::size_t> quotient;
    std::vector<std::size_t> position(d, 0);
    for (std::size_t b = 0; b < d; ++b)
        if (!leading[b]) {
            position[b] = quotient.size();
            quotient.push_back(b);
        }
    if (quotient.empty()) throw Error("ideal is the whole algebra; the quotient is zero");

    const std::size_t q = quotient.size();
    std::vector<Matrix> actions;
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
        Matrix m(fp, q, q);
        const std::size_t gi = a.generator_basis_index(g);
        for (std::size_t col = 0; col < q; ++col) {
            std::vector<std::uint32_t> v(d, 0);
            for (const auto& [k, c] : a.product(gi, quotient[col])) v[k] = c;
            // reduce modulo I: rows are fully reduced, so pivot order is irrelevant
            for (std::size_t b = d; b-- > 0;) {
                if (!leading[b] || v[b] == 0) continue;
                const std::size_t r = pivot_row[b];
                const std::uint32_t c = v[b];
                for (std::size_t j = 0; j < d; ++j) {
                    const auto e = ech.reduced.at(r, j);
                    if (e) {
                        auto& slot = v[d - 1 - j];
                        slot = (slot + (a.p() - c) * e) % a.p();
                    }
                }
            }
            for (std::size_t b = 0; b < d; ++b)
                if (v[b]) m.set(position[b], col, v[b]);
        }
        actions.push_back(m.embedded(field));
    }
    std::vector<int> parity;
    for (auto b : quotient) parity.push_back(a.parity(b));
    return {algebra, field, std::move(parity), std::move(actions)};
}

SuperModule tensor(const SuperModule& m, const SuperModule& n) {
    require_compatible(m, n, "tensor");
    const auto& a = *m.algebra();
    if (!a.has_coproduct()) throw Error("tensor needs a coproduct; it is disabled for " + halg::kind_name(a.kind()));
    const auto rm = basis_actions(m), rn = basis_actions(n);
    const Matrix sign_m = diag_sign(m.field(), m.parity());
    std::vector<Matrix> actions;
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
        Matrix acc(m.field(), m.dim() * n.dim(), m.dim() * n.dim());
        for (const auto& [ij, c] : a.coproduct_of_generator(g)) {
            const Matrix left = a.parity(ij.second) ? rm[ij.first] * sign_m : rm[ij.first];
            acc = acc + linalg::kron(left, rn[ij.second]).scaled(c);
        }
        actions.push_back(std::move(acc));
    }
    std::vector<int> parity;
    for (int pm : m.parity())
        for (int pn : n.parity()) parity.push_back(pm ^ pn);
    return {m.algebra(), m.field(), std::move(parity), std::move(actions)};
}

SuperModule parity_shift(const SuperModule& m) {
    std::vector<int> parity = m.parity();
    for (auto& x : parity) x ^= 1;
    std::vector<Matrix> actions = m.actions();
    for (std::size_t g = 0; g < actions.size(); ++g)
        if (m.algebra()->generators()[g].parity) actions[g] = -actions[g];
    return {m.algebra(), m.field(), std::move(parity), std::move(actions)};
}

SuperModule direct_sum(const SuperModule& m, const SuperModule& n) {
    require_compatible(m, n, "direct sum");
    std::vector<Matrix> actions;
    for (std::size_t g = 0; g < m.actions().size(); ++g) actions.push_back(linalg::block_diag(m.action(g), n.action(g)));
    std::vector<int> parity = m.parity();
    parity.insert(parity.end(), n.parity().begin(), n.parity().end());
    return {m.algebra(), m.field(), std::move(parity), std::move(actions)};
}

SuperModule base_change(const SuperModule& m, const gf::Field& field) {
    if (field == m.field()) return m;
    std::vector<Matrix> actions;
    for (const auto& a : m.actions()) actions.push_back(a.embedded(field));
    return {m.algebra(), field, m.parity(), std::move(actions)};
}

SuperModule syzygy(const SuperModule& m) {
    if (m.dim() == 0) throw Error("syzygy of the zero module");
    require_local(m, "syzygy");
    const auto& a = *m.algebra();
    const auto cover = cover_map(m);
    const std::size_t total = cover.map.cols();

    // Kernel per parity, so its basis is homogeneous.
    std::vector<std::size_t> cols[2];
    for (std::size_t c = 0; c < total; ++c) cols[cover.parity[c]].push_back(c);
    std::vector<int> parity;
    std::vector<std::size_t> free_global;  // free column (global index) identifying each kernel vector
    std::vector<Matrix> pieces;
    for (int par = 0; par < 2; ++par) {
        if (cols[par].empty()) continue;
        Matrix sub(m.field(), m.dim(), cols[par].size());
        for (std::size_t j = 0; j < cols[par].size(); ++j)
            for (std::size_t i = 0; i < m.dim(); ++i) sub.set(i, j, cover.map.at(i, cols[par][j]));
        const auto ns = linalg::nullspace(sub);
        Matrix lifted(m.field(), total, ns.basis.cols());
        for (std::size_t k = 0; k < ns.basis.cols(); ++k) {
            for (std::size_t j = 0; j < cols[par].size(); ++j) lifted.set(cols[par][j], k, ns.basis.at(j, k));
            parity.push_back(par);
            free_global.push_back(cols[par][ns.free_columns[k]]);
        }
        pieces.push_back(std::move(lifted));
    }
    const std::size_t kd = parity.size();
    if (kd == 0) return zero_module(m.algebra(), m.field());
    const Matrix kernel = linalg::hstack(pieces);

    // Free module A^r with the regular action on every copy.
    const auto reg = regular_actions(a, m.field());
    std::vector<Matrix> actions;
    for (const auto& g : reg) {
        Matrix big = g;
        for (std::size_t k = 1; k < cover.rank; ++k) big = linalg::block_diag(big, g);
        const Matrix image = big * kernel;
        // coordinates of each image column in the kernel basis: read at the free columns
        Matrix coords(m.field(), kd, kd);
        for (std::size_t col = 0; col < kd; ++col)
            for (std::size_t k = 0; k < kd; ++k) coords.set(k, col, image.at(free_global[k], col));
        actions.push_back(std::move(coords));
    }
    return {m.algebra(), m.field(), std::move(parity), std::move(actions)};
}

FreeResult is_free(const SuperModule& m) {
    require_local(m, "is_free");
    if (m.dim() == 0) return {true, 0};
    const auto cover = cover_map(m);
    const bool free = m.dim() == cover.rank * m.algebra()->dim() && linalg::rank(cover.map) == m.dim();
    return {free, cover.rank};
}

}  // namespace srk::smod
