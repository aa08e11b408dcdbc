#include "srk/halg.hpp"

#include <algorithm>
#include <numeric>

namespace srk::halg {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::TypeI:
            return "TypeI";
        case Kind::TypeII:
            return "TypeII";
        case Kind::TypeIII:
            return "TypeIII";
        case Kind::MnFMu:
            return "MnFMu";
    }
    return "?";
}

Kind parse_kind(const std::string& s) {
    for (Kind k : {Kind::TypeI, Kind::TypeII, Kind::TypeIII, Kind::MnFMu})
        if (kind_name(k) == s) return k;
    throw Error("unknown algebra kind '" + s + "'");
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void add_to(SparseVec& v, std::size_t idx, std::uint32_t c, std::uint32_t p) {
    auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& t, std::size_t i) { return t.first < i; });
    if (it != v.end() && it->first == idx) {
        it->second = (it->second + c) % p;
        if (it->second == 0) v.erase(it);
    } else if (c % p) {
        v.insert(it, {idx, c % p});
    }
}

template <class Map, class Key>
void add_to_map(Map& m, const Key& k, std::uint32_t c, std::uint32_t p) {
    c %= p;
    if (!c) return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (inserted) return;
    it->second = (it->second + c) % p;
    if (!it->second) m.erase(it);
}

std::uint32_t top_index(const AlgebraSpec& spec) {
    std::uint32_t top = 0;
    for (const auto& [i, a] : spec.f) top = std::max(top, i);
    return top;
}

AlgebraSpec normalized(AlgebraSpec spec) {
    if (!gf::is_prime(spec.p)) throw Error("algebra characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.p < 3) throw Error("algebra characteristic must be at least 3 (got " + std::to_string(spec.p) + ")");
    if (spec.p > 255) throw Error("algebra characteristic must be below 256");
    switch (spec.kind) {
        case Kind::TypeI:
            if (spec.n + spec.s_zp == 0) throw Error("TypeI algebra needs n + s_zp >= 1");
            spec.m = 1;
            spec.f.clear();
            spec.mu = 0;
            break;
        case Kind::TypeII:
            spec.m = 1;
            spec.f.clear();
            spec.mu = 0;
            break;
        case Kind::TypeIII:
            if (spec.m < 1) throw Error("TypeIII algebra needs m >= 1");
            if (spec.n < 1) throw Error("TypeIII algebra needs n >= 1");
            spec.f.clear();
            spec.mu = 0;
            break;
        case Kind::MnFMu: {
            if (spec.n < 1) throw Error("MnFMu algebra needs n >= 1");
            if (spec.f.empty()) throw Error("MnFMu algebra needs a nonzero p-polynomial f");
            std::map<std::uint32_t, std::uint32_t> terms;
            for (const auto& [i, a] : spec.f) {
                if (a >= spec.p) throw Error("coefficient of f out of range");
                terms[i] = (terms[i] + a) % spec.p;
            }
            std::erase_if(terms, [](const auto& t) { return t.second == 0; });
            if (terms.empty()) throw Error("MnFMu algebra needs a nonzero p-polynomial f");
            if (terms.rbegin()->second != 1) throw Error("f must have leading coefficient 1");
            if (terms.rbegin()->first < 1) throw Error("f must have degree at least p");
            if (spec.mu >= spec.p) throw Error("mu must lie in GF(p)");
            spec.f.assign(terms.begin(), terms.end());
            spec.m = terms.rbegin()->first;
            break;
        }
    }
    return spec;
}

}  // namespace

AlgebraPtr Algebra::build(const AlgebraSpec& spec, BuildOptions options) {
    std::shared_ptr<Algebra> a(new Algebra());
    a->spec_ = normalized(spec);
    a->install_generators();
    a->enumerate_basis();
    a->install_relations();
    a->build_table();
    if (a->spec_.kind != Kind::MnFMu || options.force_mnfmu_coproduct) a->build_coproduct();
    return a;
}

void Algebra::install_generators() {
    const auto p = spec_.p;
    for (std::uint32_t i = 1; i <= spec_.n; ++i) {
        std::uint64_t bound = p;
        if (i == spec_.n && spec_.kind == Kind::TypeIII) bound = ipow(p, spec_.m);
        if (i == spec_.n && spec_.kind == Kind::MnFMu) bound = ipow(p, top_index(spec_));
        generators_.push_back({"s" + std::to_string(i), 0, CoproductTag::WittChain, i, bound});
    }
    for (std::uint32_t j = 1; j <= spec_.s_zp; ++j)
        generators_.push_back({"x" + std::to_string(j), 0, CoproductTag::ShiftedGrouplike, 0, p});
    if (spec_.kind != Kind::TypeI) {
        odd_ = generators_.size();
        generators_.push_back({"sigma", 1, CoproductTag::PrimitiveOdd, 0, 2});
    }
    radix_.assign(generators_.size(), 1);
    for (std::size_t g = 1; g < generators_.size(); ++g) radix_[g] = radix_[g - 1] * generators_[g - 1].bound;
}

std::uint64_t Algebra::expected_dim() const {
    const auto p = spec_.p;
    const std::uint64_t zp = ipow(p, spec_.s_zp);
    switch (spec_.kind) {
        case Kind::TypeI:
            return ipow(p, spec_.n) * zp;
        case Kind::TypeII:
            return 2 * ipow(p, spec_.n) * zp;
        case Kind::TypeIII:
            return 2 * ipow(p, spec_.m + spec_.n - 1) * zp;
        case Kind::MnFMu:
            return 2 * ipow(p, top_index(spec_) + spec_.n - 1) * zp;
    }
    return 0;
}

void Algebra::enumerate_basis() {
    std::uint64_t total = 1;
    for (const auto& g : generators_) {
        total *= g.bound;
        if (total > 4096) throw Error("algebra dimension exceeds 4096");
    }
    std::vector<Exponent> all;
    all.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        Exponent e(generators_.size());
        std::uint64_t r = code;
        for (std::size_t g = 0; g < generators_.size(); ++g) {
            e[g] = static_cast<std::uint32_t>(r % generators_[g].bound);
            r /= generators_[g].bound;
        }
        all.push_back(std::move(e));
    }
    std::sort(all.begin(), all.end(), poly::TermOrder{});
    basis_ = std::move(all);
    code_to_index_.assign(total, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::uint64_t code = 0;
        for (std::size_t g = 0; g < generators_.size(); ++g) code += basis_[i][g] * radix_[g];
        code_to_index_[code] = i;
    }
}

void Algebra::install_relations() {
    const auto p = spec_.p;
    const std::size_t ng = generators_.size();
    auto mono = [&](std::size_t g, std::uint64_t e, std::int64_t c = 1) {
        Exponent ex(ng, 0);
        ex[g] = static_cast<std::uint32_t>(e);
        return poly::MultiPoly::monomial(p, ng, ex, c);
    };
    for (std::size_t g = 0; g < ng; ++g) {
        const auto& gen = generators_[g];
        if (gen.parity == 1) continue;
        const bool special = gen.chain_index == spec_.n && gen.tag == CoproductTag::WittChain &&
                             (spec_.kind == Kind::TypeIII || spec_.kind == Kind::MnFMu);
        if (!special) {
            relations_.push_back(mono(g, p));
        } else if (spec_.kind == Kind::TypeIII) {
            relations_.push_back(mono(g, gen.bound));
        } else {
            poly::MultiPoly f(p, ng);
            for (const auto& [i, a] : spec_.f) f = f + mono(g, ipow(p, i), a);
            if (spec_.mu) f = f + mono(chain_generator(1), 1, spec_.mu);
            relations_.push_back(f);
        }
    }
    if (odd_) {
        if (spec_.kind == Kind::TypeII)
            relations_.push_back(mono(*odd_, 2));
        else
            relations_.push_back(mono(*odd_, 2) - mono(chain_generator(spec_.n), p));
    }
}

std::size_t Algebra::generator_index(const std::string& name) const {
    for (std::size_t g = 0; g < generators_.size(); ++g)
        if (generators_[g].name == name) return g;
    throw Error("algebra has no generator named '" + name + "'");
}

std::size_t Algebra::chain_generator(std::uint32_t i) const {
    if (i < 1 || i > spec_.n) throw Error("chain generator index out of range");
    return i - 1;
}

std::size_t Algebra::zp_generator(std::uint32_t j) const {
    if (j < 1 || j > spec_.s_zp) throw Error("Z/p generator index out of range");
    return spec_.n + j - 1;
}

std::vector<std::string> Algebra::generator_names() const {
    std::vector<std::string> out;
    for (const auto& g : generators_) out.push_back(g.name);
    return out;
}

std::optional<std::size_t> Algebra::index_of(const Exponent& e) const {
    if (e.size() != generators_.size()) return std::nullopt;
    std::uint64_t code = 0;
    for (std::size_t g = 0; g < e.size(); ++g) {
        if (e[g] >= generators_[g].bound) return std::nullopt;
        code += e[g] * radix_[g];
    }
    return code_to_index_[code];
}

std::size_t Algebra::generator_basis_index(std::size_t g) const {
    Exponent e(generators_.size(), 0);
    e[g] = 1;
    return *index_of(e);
}

int Algebra::parity(std::size_t basis_index) const { return odd_ ? static_cast<int>(basis_[basis_index][*odd_] % 2) : 0; }

std::string Algebra::monomial_name(std::size_t basis_index) const {
    std::string out;
    const auto& e = basis_[basis_index];
    for (std::size_t g = 0; g < e.size(); ++g) {
        if (!e[g]) continue;
        if (!out.empty()) out += "*";
        out += generators_[g].name;
        if (e[g] > 1) out += "^" + std::to_string(e[g]);
    }
    return out.empty() ? "1" : out;
}

SparseVec Algebra::normal_form(const Exponent& e, std::uint32_t c) const {
    if (e.size() != generators_.size()) throw Error("exponent vector does not match generator count");
    const auto p = spec_.p;
    SparseVec out;
    std::vector<std::pair<Exponent, std::uint32_t>> work{{e, c % p}};
    while (!work.empty()) {
        auto [ex, coeff] = std::move(work.back());
        work.pop_back();
        if (coeff == 0) continue;
        if (odd_ && ex[*odd_] >= 2) {
            if (spec_.kind == Kind::TypeII) continue;
            ex[*odd_] -= 2;
            ex[chain_generator(spec_.n)] += p;
            work.emplace_back(std::move(ex), coeff);
            continue;
        }
        bool vanished = false;
        bool rewritten = false;
        for (std::size_t g = 0; g < ex.size() && !vanished && !rewritten; ++g) {
            const auto& gen = generators_[g];
            if (gen.parity == 1 || ex[g] < gen.bound) continue;
            if (spec_.kind == Kind::MnFMu && gen.chain_index == spec_.n && gen.tag == CoproductTag::WittChain) {
                // s_n^P = -(lower terms of f)(s_n) - mu s_1
                Exponent base = ex;
                base[g] -= static_cast<std::uint32_t>(gen.bound);
                for (const auto& [i, a] : spec_.f) {
                    const std::uint64_t power = ipow(p, i);
                    if (power == gen.bound) continue;
                    Exponent t = base;
                    t[g] += static_cast<std::uint32_t>(power);
                    work.emplace_back(std::move(t), (coeff * (p - a)) % p);
                }
                if (spec_.mu) {
                    Exponent t = base;
                    t[chain_generator(1)] += 1;
                    work.emplace_back(std::move(t), (coeff * (p - spec_.mu)) % p);
                }
                rewritten = true;
            } else {
                vanished = true;
            }
        }
        if (vanished || rewritten) continue;
        add_to(out, *index_of(ex), coeff, p);
    }
    return out;
}

void Algebra::build_table() {
    const std::size_t d = dim();
    table_.assign(d * d, {});
    Exponent e(generators_.size());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            for (std::size_t g = 0; g < e.size(); ++g) e[g] = basis_[i][g] + basis_[j][g];
            table_[i * d + j] = normal_form(e);
            table_[j * d + i] = table_[i * d + j];
        }
}

TensorSquareRing::value_type TensorSquareRing::from_int(std::int64_t v) const {
    const std::int64_t p = algebra->p();
    const auto c = static_cast<std::uint32_t>(((v % p) + p) % p);
    if (!c) return {};
    return {{{0, 0}, c}};
}

TensorSquareRing::value_type TensorSquareRing::add(const value_type& a, const value_type& b) const {
    value_type out = a;
    for (const auto& [k, c] : b) add_to_map(out, k, c, algebra->p());
    return out;
}

TensorElement Algebra::tensor_multiply(const TensorElement& a, const TensorElement& b) const {
    const auto p = spec_.p;
    TensorElement out;
    for (const auto& [ij, c] : a)
        for (const auto& [kl, d] : b) {
            const bool negate = parity(ij.second) && parity(kl.first);
            const std::uint32_t cd = (c * d) % p;
            const std::uint32_t scale = negate ? (p - cd) % p : cd;
            for (const auto& [u, e1] : product(ij.first, kl.first))
                for (const auto& [v, e2] : product(ij.second, kl.second))
                    add_to_map(out, std::pair{u, v}, (scale * ((e1 * e2) % p)) % p, p);
        }
    return out;
}

void Algebra::build_coproduct() {
    const auto p = spec_.p;
    const TensorSquareRing ring{this};
    std::vector<poly::MultiPoly> witt;
    if (spec_.n > 0) witt = poly::witt_sums(p, spec_.n);
    delta_generators_.clear();
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        const auto& gen = generators_[g];
        const std::size_t idx = generator_basis_index(g);
        TensorElement delta;
        switch (gen.tag) {
            case CoproductTag::PrimitiveOdd:
                delta = {{{idx, 0}, 1}, {{0, idx}, 1}};
                break;
            case CoproductTag::ShiftedGrouplike:
                delta = {{{idx, 0}, 1}, {{0, idx}, 1}, {{idx, idx}, 1}};
                break;
            case CoproductTag::WittChain: {
                std::vector<TensorElement> images(2 * spec_.n);
                for (std::uint32_t j = 0; j < spec_.n; ++j) {
                    const std::size_t sj = generator_basis_index(chain_generator(j + 1));
                    images[j] = {{{sj, 0}, 1}};
                    images[spec_.n + j] = {{{0, sj}, 1}};
                }
                delta = substitute(witt[gen.chain_index - 1], ring, std::span<const TensorElement>(images));
                break;
            }
        }
        delta_generators_.push_back(std::move(delta));
    }
    delta_basis_.clear();
    for (const auto& e : basis_) {
        TensorElement acc = ring.one();
        for (std::size_t g = 0; g < e.size(); ++g)
            if (e[g]) acc = tensor_multiply(acc, ring_pow(ring, delta_generators_[g], e[g]));
        delta_basis_.push_back(std::move(acc));
    }
}

const TensorElement& Algebra::coproduct_of(std::size_t basis_index) const {
    if (!has_coproduct()) throw Error("coproduct is disabled for " + kind_name(spec_.kind) + " algebras");
    return delta_basis_.at(basis_index);
}

const TensorElement& Algebra::coproduct_of_generator(std::size_t g) const {
    if (!has_coproduct()) throw Error("coproduct is disabled for " + kind_name(spec_.kind) + " algebras");
    return delta_generators_.at(g);
}

AlgElement make_element(const AlgebraPtr& algebra, const SparseVec& v) {
    AlgElement out(algebra, PrimeRing{algebra->p()});
    for (const auto& [idx, c] : v) out.add_term(idx, c);
    return out;
}

AlgElement generator_element(const AlgebraPtr& algebra, const std::string& name) {
    return AlgElement::generator(algebra, PrimeRing{algebra->p()}, algebra->generator_index(name));
}

std::string to_string(const AlgElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [idx, c] : a.terms()) {
        if (!out.empty()) out += "+";
        const auto name = a.algebra()->monomial_name(idx);
        if (name == "1")
            out += std::to_string(c);
        else
            out += (c == 1 ? "" : std::to_string(c) + "*") + name;
    }
    return out;
}

TensorElement coproduct(const AlgElement& a) {
    const Algebra& alg = *a.algebra();
    TensorElement out;
    for (const auto& [idx, c] : a.terms())
        for (const auto& [k, d] : alg.coproduct_of(idx)) add_to_map(out, k, c * d, alg.p());
    return out;
}

namespace {

AlgElement antipode_of_generator(const AlgebraPtr& alg, std::size_t g) {
    const PrimeRing ring{alg->p()};
    const auto gen = AlgElement::generator(alg, ring, g);
    switch (alg->generators()[g].tag) {
        case CoproductTag::PrimitiveOdd:
        case CoproductTag::WittChain:
            return gen.scaled(alg->p() - 1);
        case CoproductTag::ShiftedGrouplike: {
            const auto one = AlgElement::one(alg, ring);
            return (one + gen).pow(alg->p() - 1) - one;
        }
    }
    return gen;
}

AlgElement antipode_of_basis(const AlgebraPtr& alg, std::size_t b) {
    const PrimeRing ring{alg->p()};
    AlgElement acc = AlgElement::one(alg, ring);
    const auto& e = alg->basis()[b];
    for (std::size_t g = 0; g < e.size(); ++g)
        if (e[g]) acc = acc * antipode_of_generator(alg, g).pow(e[g]);
    return acc;
}

}  // namespace

AlgElement antipode(const AlgElement& a) {
    const auto& alg = a.algebra();
    if (!alg->has_coproduct()) throw Error("antipode needs coproduct tags; disabled for " + kind_name(alg->kind()));
    AlgElement out(alg, a.ring());
    for (const auto& [idx, c] : a.terms()) out = out + antipode_of_basis(alg, idx).scaled(c);
    return out;
}

std::string to_string(const Algebra& algebra, const TensorElement& t) {
    if (t.empty()) return "0";
    std::string out;
    for (const auto& [ij, c] : t) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += algebra.monomial_name(ij.first) + "(x)" + algebra.monomial_name(ij.second);
    }
    return out;
}

HopfReport check_hopf(const Algebra& algebra, std::size_t spanning_cap) {
    HopfReport report;
    if (!algebra.has_coproduct()) {
        report.failures.push_back("coproduct is disabled for this algebra");
        return report;
    }
    const auto p = algebra.p();
    const auto names = algebra.generator_names();
    const TensorSquareRing ring{&algebra};
    std::vector<TensorElement> dgens;
    for (std::size_t g = 0; g < algebra.generators().size(); ++g) dgens.push_back(algebra.coproduct_of_generator(g));

    for (const auto& rel : algebra.relations()) {
        const auto image = substitute(rel, ring, std::span<const TensorElement>(dgens));
        ++report.relations_checked;
        if (!image.empty()) report.failures.push_back("Delta(" + rel.to_string(names) + ") != 0");
    }

    auto delta_of = [&](const SparseVec& v) {
        TensorElement out;
        for (const auto& [idx, c] : v)
            for (const auto& [k, d] : algebra.coproduct_of(idx)) add_to_map(out, k, c * d, p);
        return out;
    };

    for (std::size_t g = 0; g < dgens.size(); ++g) {
        const std::size_t gi = algebra.generator_basis_index(g);
        for (std::size_t b = 0; b < algebra.dim(); ++b) {
            ++report.multiplicativity_checked;
            if (delta_of(algebra.product(gi, b)) != algebra.tensor_multiply(dgens[g], algebra.coproduct_of(b)))
                report.failures.push_back("Delta(" + names[g] + "*" + algebra.monomial_name(b) + ") != Delta(" +
                                          names[g] + ")Delta(" + algebra.monomial_name(b) + ")");
        }
    }

    std::vector<std::size_t> span;
    if (algebra.dim() <= spanning_cap) {
        span.resize(algebra.dim());
        std::iota(span.begin(), span.end(), 0);
    } else {
        for (std::size_t g = 0; g < dgens.size(); ++g) span.push_back(algebra.generator_basis_index(g));
    }

    const auto self = algebra.shared_from_this();
    const PrimeRing pr{p};
    for (const std::size_t b : span) {
        const auto& db = algebra.coproduct_of(b);
        const auto label = algebra.monomial_name(b);

        TripleTensor left, right;
        for (const auto& [ij, c] : db) {
            for (const auto& [uv, d] : algebra.coproduct_of(ij.first))
                add_to_map(left, std::array{uv.first, uv.second, ij.second}, c * d, p);
            for (const auto& [uv, d] : algebra.coproduct_of(ij.second))
                add_to_map(right, std::array{ij.first, uv.first, uv.second}, c * d, p);
        }
        ++report.coassociativity_checked;
        if (left != right) report.failures.push_back("coassociativity fails on " + label);

        SparseVec via_left, via_right;
        for (const auto& [ij, c] : db) {
            if (algebra.counit(ij.first)) add_to(via_left, ij.second, c, p);
            if (algebra.counit(ij.second)) add_to(via_right, ij.first, c, p);
        }
        const SparseVec expect{{b, 1}};
        ++report.counit_checked;
        if (via_left != expect || via_right != expect) report.failures.push_back("counit law fails on " + label);

        AlgElement s_left(self, pr), s_right(self, pr);
        for (const auto& [ij, c] : db) {
            s_left = s_left + (antipode_of_basis(self, ij.first) * AlgElement::monomial(self, pr, ij.second)).scaled(c);
            s_right = s_right + (AlgElement::monomial(self, pr, ij.first) * antipode_of_basis(self, ij.second)).scaled(c);
        }
        AlgElement unit_part(self, pr);
        if (algebra.counit(b)) unit_part = AlgElement::one(self, pr);
        ++report.antipode_checked;
        if (!(s_left == unit_part) || !(s_right == unit_part)) report.failures.push_back("antipode law fails on " + label);
    }
    return report;
}

}  // namespace srk::halg
