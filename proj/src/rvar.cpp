#include "srk/rvar.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace srk::rvar {

std::uint64_t projective_count(std::uint64_t q, std::size_t len) {
    std::uint64_t total = 0, power = 1;
    for (std::size_t i = 0; i < len; ++i) {
        total += power;
        if (power > (std::uint64_t{1} << 40)) return UINT64_MAX;
        power *= q;
    }
    return total;
}

std::vector<Point> projective_points(const gf::Field& field, std::size_t len) {
    std::vector<Point> out;
    const std::uint64_t q = field.size();
    for (std::size_t lead = 0; lead < len; ++lead) {
        const std::size_t tail = len - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < tail; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Point p(len, 0);
            p[lead] = 1;
            std::uint64_t r = idx;
            for (std::size_t k = len; k-- > lead + 1;) {
                p[k] = static_cast<gf::Code>(r % q);
                r /= q;
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

Point canonical(const gf::Field& field, Point p) {
    auto it = std::find_if(p.begin(), p.end(), [](gf::Code c) { return c != 0; });
    if (it == p.end()) throw Error("zero vector has no projective point");
    const gf::Code inv = field.inv(*it);
    for (auto& c : p) c = field.mul(c, inv);
    return p;
}

namespace {

void check_point_cap(const gf::Field& field, std::size_t len, const Caps& caps) {
    const auto count = projective_count(field.size(), len);
    if (count > caps.points)
        throw Error("projective space over " + field.name() + " has " + std::to_string(count) +
                    " points, above --cap-points " + std::to_string(caps.points));
}

// Rank of the rank matrix at every point, computed in parallel.
std::vector<std::size_t> ranks(const pip::Restrictor& res, const std::vector<Point>& pts, unsigned jobs) {
    std::vector<std::size_t> out(pts.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = linalg::rank(pip::rank_matrix(res.restrict(pts[i])));
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(pts.size() ? pts.size() : 1)));
    if (jobs == 1) {
        work(0, pts.size());
        return out;
    }
    std::vector<std::thread> threads;
    const std::size_t chunk = (pts.size() + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::size_t b = j * chunk, e = std::min(pts.size(), b + chunk);
        if (b < e) threads.emplace_back(work, b, e);
    }
    for (auto& t : threads) t.join();
    return out;
}

}  // namespace

VarietyPoints variety_points(const SuperModule& m, const gf::Field& field, const Options& opts) {
    const std::size_t len = pip::lambda_length(*m.algebra());
    check_point_cap(field, len, opts.caps);
    const pip::Restrictor res(m, field);
    const auto pts = projective_points(field, len);
    const auto rk = ranks(res, pts, opts.jobs);
    VarietyPoints out{field, len, m.dim(), {}, {}};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (rk[i] < m.dim()) out.points.push_back(pts[i]);
        if (opts.diagnostics) out.rank_at.emplace_back(pts[i], rk[i]);
    }
    return out;
}

std::vector<std::uint32_t> lambda_weights(const halg::Algebra& a) {
    const std::size_t len = pip::lambda_length(a);
    if (pip::case_of(a) != pip::Case::III) return std::vector<std::uint32_t>(len, 1);
    std::vector<std::uint32_t> w(len, 2);
    w.back() = 1;
    return w;
}

MinorIdeal minor_ideal(const SuperModule& m, const Caps& caps) {
    if (m.dim() > caps.minor_d)
        throw Error("module dimension " + std::to_string(m.dim()) + " exceeds --cap-minors " +
                    std::to_string(caps.minor_d) + "; use point evaluation");
    if (m.dim() == 0) throw Error("minor ideal of the zero module");
    const auto sym = pip::rank_matrix(pip::restrict_symbolic(m));
    MinorIdeal out;
    out.d = m.dim();
    out.nvars = sym.nvars();
    out.weights = lambda_weights(*m.algebra());
    for (auto& f : poly::minors(sym, m.dim()))
        if (!f.is_zero()) out.generators.push_back(std::move(f));
    out.homogeneous = std::all_of(out.generators.begin(), out.generators.end(),
                                  [](const poly::MultiPoly& f) { return f.is_homogeneous(); });
    out.weighted_homogeneous = std::all_of(out.generators.begin(), out.generators.end(), [&](const poly::MultiPoly& f) {
        return f.is_homogeneous(out.weights);
    });
    return out;
}

bool vanishes_at(const MinorIdeal& ideal, const gf::Field& field, std::span<const gf::Code> point) {
    return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                       [&](const poly::MultiPoly& f) { return f.evaluate(field, point) == 0; });
}

Verdict projectivity_verdict(const SuperModule& m, std::size_t depth, const Options& opts) {
    if (depth == 0) throw Error("search depth must be at least 1");
    if (!m.field().is_prime_field()) throw Error("projectivity search expects a module over GF(p)");
    Verdict v;
    v.depth = depth;
    const auto oracle = smod::is_free(m);
    v.oracle_free = oracle.free;
    v.oracle_rank = oracle.rank;
    const std::size_t len = pip::lambda_length(*m.algebra());
    for (std::uint32_t e = 1; e <= depth && !v.witness; ++e) {
        const auto field = gf::Field::build(m.algebra()->p(), e);
        check_point_cap(field, len, opts.caps);
        const pip::Restrictor res(m, field);
        for (const auto& p : projective_points(field, len)) {
            if (!pip::finite_flat_dim(res.restrict(p))) {
                v.witness = p;
                v.witness_degree = e;
                break;
            }
        }
    }
    v.projective = !v.witness.has_value();
    v.discrepancy = v.projective != v.oracle_free;
    return v;
}

TensorCheck tensor_formula_check(const SuperModule& m, const SuperModule& n, const gf::Field& field,
                                 const Options& opts) {
    if (m.dim() * n.dim() > opts.caps.tensor_dim)
        throw Error("tensor dimension " + std::to_string(m.dim() * n.dim()) + " exceeds --cap-tensor " +
                    std::to_string(opts.caps.tensor_dim));
    const auto t = smod::tensor(m, n);
    TensorCheck out{false, variety_points(t, field, opts), {}, {}, {}, false};
    out.left = variety_points(m, field, opts).points;
    out.right = variety_points(n, field, opts).points;
    const std::set<Point> right(out.right.begin(), out.right.end());
    for (const auto& p : out.left)
        if (right.count(p)) out.rhs.push_back(p);
    out.pass = out.lhs.points == out.rhs;
    out.tensor_free = smod::is_free(t).free;
    return out;
}

}  // namespace srk::rvar
