#include "srk/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace srk::catalog {

using halg::AlgElement;
using halg::Kind;

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* s = std::getenv("SRK_SEED");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    return (end && *end == 0) ? v : fallback;
}

std::string algebra_name(const halg::AlgebraSpec& spec) {
    std::string out = halg::kind_name(spec.kind);
    if (spec.kind == Kind::TypeIII) out += "_m" + std::to_string(spec.m);
    out += "_n" + std::to_string(spec.n);
    if (spec.s_zp) out += "_s" + std::to_string(spec.s_zp);
    return out;
}

std::vector<halg::AlgebraSpec> hopf_grid() {
    std::vector<halg::AlgebraSpec> out;
    for (std::uint32_t s = 0; s <= 1; ++s) {
        for (std::uint32_t n = 0; n <= 2; ++n) {
            if (n + s > 0) out.push_back({3, Kind::TypeI, n, 1, s, {}, 0});
            out.push_back({3, Kind::TypeII, n, 1, s, {}, 0});
        }
        for (std::uint32_t n = 1; n <= 2; ++n)
            for (std::uint32_t m = 1; m <= 2; ++m) out.push_back({3, Kind::TypeIII, n, m, s, {}, 0});
    }
    return out;
}

std::vector<NamedAlgebra> module_algebras() {
    const std::vector<halg::AlgebraSpec> specs{
        {3, Kind::TypeI, 1, 1, 0, {}, 0},   {3, Kind::TypeI, 2, 1, 0, {}, 0},   {3, Kind::TypeI, 0, 1, 1, {}, 0},
        {3, Kind::TypeI, 1, 1, 1, {}, 0},   {3, Kind::TypeII, 0, 1, 0, {}, 0},  {3, Kind::TypeII, 1, 1, 0, {}, 0},
        {3, Kind::TypeII, 0, 1, 1, {}, 0},  {3, Kind::TypeIII, 1, 1, 0, {}, 0}, {3, Kind::TypeIII, 1, 2, 0, {}, 0},
        {3, Kind::TypeIII, 2, 1, 0, {}, 0}, {3, Kind::TypeIII, 2, 2, 0, {}, 0},
    };
    std::vector<NamedAlgebra> out;
    for (const auto& s : specs) out.push_back({algebra_name(s), halg::Algebra::build(s)});
    return out;
}

NamedAlgebra find_algebra(const std::string& name) {
    for (auto& a : module_algebras())
        if (a.name == name) return a;
    throw Error("no catalog algebra named '" + name + "'");
}

namespace {

const gf::Field& prime_field() {
    static const gf::Field f = gf::Field::build(3);
    return f;
}

// Random parity-homogeneous element supported on non-unit monomials.
AlgElement random_homogeneous(const halg::AlgebraPtr& a, std::mt19937_64& rng) {
    const PrimeRing ring{a->p()};
    std::vector<std::size_t> pool[2];
    for (std::size_t b = 1; b < a->dim(); ++b) pool[a->parity(b)].push_back(b);
    int par = static_cast<int>(rng() % 2);
    if (pool[par].empty()) par ^= 1;
    AlgElement out(a, ring);
    const std::size_t terms = 1 + rng() % 2;
    for (std::size_t t = 0; t < terms; ++t) {
        const auto& p = pool[par];
        out.add_term(p[rng() % p.size()], static_cast<std::uint32_t>(1 + rng() % (a->p() - 1)));
    }
    if (out.is_zero()) out.add_term(pool[par].front(), 1);
    return out;
}

}  // namespace

std::vector<Entry> modules(const NamedAlgebra& na, std::uint64_t seed, std::size_t max_dim) {
    const auto& a = na.algebra;
    const auto& f = prime_field();
    std::vector<Entry> all;
    const auto k = smod::trivial_module(a, f);
    all.push_back({"k", k});
    all.push_back({"free1", smod::free_module(a, 1, f)});
    std::vector<AlgElement> gens;
    for (const auto& g : a->generator_names()) {
        gens.push_back(halg::generator_element(a, g));
        all.push_back({"A/(" + g + ")", smod::cyclic_module(a, {gens.back()}, f)});
    }
    std::vector<AlgElement> squares;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            const auto prod = gens[i] * gens[j];
            if (!prod.is_zero()) squares.push_back(prod);
        }
    if (!squares.empty()) all.push_back({"A/J^2", smod::cyclic_module(a, squares, f)});
    all.push_back({"Omega(k)", smod::syzygy(k)});

    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(na.name));
    for (int r = 0; r < 3; ++r) {
        std::vector<AlgElement> ideal;
        auto m = smod::free_module(a, 1, f);
        for (int tries = 0; tries < 64 && (ideal.empty() || m.dim() > max_dim); ++tries) {
            ideal.push_back(random_homogeneous(a, rng));
            m = smod::cyclic_module(a, ideal, f);
        }
        if (m.dim() <= max_dim) all.push_back({"rand" + std::to_string(r), m});
    }

    const auto first = smod::cyclic_module(a, {gens.front()}, f);
    all.push_back({"Pi A/(" + a->generator_names().front() + ")", smod::parity_shift(first)});
    all.push_back({"Pi k", smod::parity_shift(k)});
    all.push_back({"k+A/(" + a->generator_names().front() + ")", smod::direct_sum(k, first)});
    all.push_back({"Omega(A/(" + a->generator_names().front() + "))", smod::syzygy(first)});
    if (gens.size() > 1 && a->has_coproduct())
        all.push_back({"A/(" + a->generator_names().front() + ")(x)A/(" + a->generator_names().back() + ")",
                       smod::tensor(first, smod::cyclic_module(a, {gens.back()}, f))});

    std::vector<Entry> out;
    for (auto& e : all)
        if (e.module.dim() > 0 && (e.module.dim() <= max_dim || e.name == "free1")) out.push_back(std::move(e));
    return out;
}

std::vector<Pair> tensor_pairs(const NamedAlgebra& na, std::uint64_t seed, std::size_t count, std::size_t tensor_cap) {
    const auto& a = na.algebra;
    std::vector<Pair> out;
    const auto names = a->generator_names();
    const auto& f = prime_field();
    if (std::count(names.begin(), names.end(), "s1") && std::count(names.begin(), names.end(), "s2"))
        out.push_back({"A/(s1) (x) A/(s2)", smod::cyclic_module(a, {halg::generator_element(a, "s1")}, f),
                       smod::cyclic_module(a, {halg::generator_element(a, "s2")}, f)});
    auto mods = modules(na, seed);
    std::erase_if(mods, [](const Entry& e) { return e.name == "free1"; });
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = i; j < mods.size(); ++j)
            if (mods[i].module.dim() * mods[j].module.dim() <= tensor_cap) candidates.emplace_back(i, j);
    std::mt19937_64 rng(seed + 1);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (std::size_t c = 0; c < candidates.size() && out.size() < count + (out.empty() ? 0 : 1); ++c) {
        const auto [i, j] = candidates[c];
        out.push_back({mods[i].name + " (x) " + mods[j].name, mods[i].module, mods[j].module});
    }
    return out;
}

}  // namespace srk::catalog
