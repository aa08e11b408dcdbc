// Group algebras of elementary supergroup schemes: presentation, normal-form
// basis, multiplication, and the Hopf superalgebra structure.
//
// Generators are ordered s1..sn, x1..x_s, sigma. The algebra is commutative in
// the ungraded sense, so elements are linear combinations of normal-form
// monomials s^a x^b sigma^e with exponents below per-generator bounds.
#ifndef SRK_HALG_HPP
#define SRK_HALG_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srk/poly.hpp"
#include "srk/ring.hpp"

namespace srk::halg {

using poly::Exponent;

enum class Kind { TypeI, TypeII, TypeIII, MnFMu };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

struct AlgebraSpec {
    std::uint32_t p = 3;
    Kind kind = Kind::TypeI;
    std::uint32_t n = 0;     // even chain generators s1..sn
    std::uint32_t m = 1;     // truncation s_n^{p^m} (TypeIII)
    std::uint32_t s_zp = 0;  // extra Z/p factors x1..x_s
    /// MnFMu only: terms (i, a_i) of f(t) = sum a_i t^{p^i}; the highest i
    /// carries coefficient 1 and must be at least 1.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> f;
    std::uint32_t mu = 0;  // MnFMu only, in GF(p)

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

enum class CoproductTag { WittChain, ShiftedGrouplike, PrimitiveOdd };

struct Generator {
    std::string name;
    int parity = 0;
    CoproductTag tag = CoproductTag::WittChain;
    std::uint32_t chain_index = 0;  // i for s_i
    std::uint64_t bound = 0;        // exponents in normal form are below this
};

/// Sparse GF(p) vector over the basis, sorted by basis index.
using SparseVec = std::vector<std::pair<std::size_t, std::uint32_t>>;

/// Elements of A (x) A, keyed by basis index pairs.
using TensorElement = std::map<std::pair<std::size_t, std::size_t>, std::uint32_t>;
using TripleTensor = std::map<std::array<std::size_t, 3>, std::uint32_t>;

struct BuildOptions {
    /// MnFMu algebras get no coproduct unless this is set (the chain tags are
    /// then installed as for E_{m,n}, and check_hopf reports what breaks).
    bool force_mnfmu_coproduct = false;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static AlgebraPtr build(const AlgebraSpec& spec, BuildOptions options = {});

    const AlgebraSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    Kind kind() const { return spec_.kind; }
    std::size_t dim() const { return basis_.size(); }
    /// Closed-form dimension from the exponent bounds.
    std::uint64_t expected_dim() const;

    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t generator_index(const std::string& name) const;
    std::optional<std::size_t> odd_generator() const { return odd_; }
    /// Generator index of s_i (1-based chain position).
    std::size_t chain_generator(std::uint32_t i) const;
    std::size_t zp_generator(std::uint32_t j) const;
    std::vector<std::string> generator_names() const;

    const std::vector<Exponent>& basis() const { return basis_; }
    std::optional<std::size_t> index_of(const Exponent& e) const;
    /// Basis index of a single generator.
    std::size_t generator_basis_index(std::size_t g) const;
    int parity(std::size_t basis_index) const;
    bool is_unipotent() const { return spec_.kind != Kind::MnFMu; }
    std::string monomial_name(std::size_t basis_index) const;

    /// Defining relations as polynomials in the generators.
    const std::vector<poly::MultiPoly>& relations() const { return relations_; }

    /// Normal form of c * x^e for an arbitrary exponent vector.
    SparseVec normal_form(const Exponent& e, std::uint32_t c = 1) const;
    /// Structure constants: basis[i] * basis[j].
    const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    bool has_coproduct() const { return !delta_basis_.empty(); }
    /// Coproduct of a basis monomial; throws when the coproduct is disabled.
    const TensorElement& coproduct_of(std::size_t basis_index) const;
    const TensorElement& coproduct_of_generator(std::size_t g) const;
    /// Multiplication in A (x) A with the Koszul sign (a(x)b)(c(x)d) = (-1)^{|b||c|} ac (x) bd.
    TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) const;
    std::uint32_t counit(std::size_t basis_index) const { return basis_index == 0 ? 1 : 0; }

    friend bool operator==(const Algebra& a, const Algebra& b) { return a.spec_ == b.spec_; }

private:
    Algebra() = default;
    void install_generators();
    void install_relations();
    void enumerate_basis();
    void build_table();
    void build_coproduct();

    AlgebraSpec spec_;
    std::vector<Generator> generators_;
    std::optional<std::size_t> odd_;
    std::vector<std::uint64_t> radix_;
    std::vector<std::size_t> code_to_index_;
    std::vector<Exponent> basis_;
    std::vector<poly::MultiPoly> relations_;
    std::vector<SparseVec> table_;
    std::vector<TensorElement> delta_generators_;
    std::vector<TensorElement> delta_basis_;
};

/// Ring structure on A (x) A used to push polynomials through the coproduct.
struct TensorSquareRing {
    using value_type = TensorElement;
    const Algebra* algebra;

    value_type zero() const { return {}; }
    value_type one() const { return {{{0, 0}, 1}}; }
    value_type from_int(std::int64_t v) const;
    value_type add(const value_type& a, const value_type& b) const;
    value_type mul(const value_type& a, const value_type& b) const { return algebra->tensor_multiply(a, b); }
    bool is_zero(const value_type& a) const { return a.empty(); }
};

/// Element of A with coefficients in a ring R over GF(p) (GF(p) itself, an
/// extension field, or a polynomial ring for symbolic parameters).
template <class R>
class BasicElement {
public:
    using value_type = typename R::value_type;
    using Terms = std::map<std::size_t, value_type>;

    BasicElement(AlgebraPtr algebra, R ring) : algebra_(std::move(algebra)), ring_(std::move(ring)) {}

    static BasicElement one(AlgebraPtr algebra, R ring) { return monomial(std::move(algebra), std::move(ring), 0); }
    static BasicElement monomial(AlgebraPtr algebra, R ring, std::size_t basis_index) {
        BasicElement out(std::move(algebra), std::move(ring));
        out.add_term(basis_index, out.ring_.one());
        return out;
    }
    static BasicElement generator(AlgebraPtr algebra, R ring, std::size_t g) {
        const auto idx = algebra->generator_basis_index(g);
        return monomial(std::move(algebra), std::move(ring), idx);
    }
    /// Normal form of x^e with coefficient 1.
    static BasicElement from_exponent(AlgebraPtr algebra, R ring, const Exponent& e) {
        BasicElement out(algebra, std::move(ring));
        for (const auto& [idx, c] : algebra->normal_form(e)) out.add_term(idx, out.ring_.from_int(c));
        return out;
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    const R& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    value_type coefficient(std::size_t basis_index) const {
        auto it = terms_.find(basis_index);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    void add_term(std::size_t idx, const value_type& c) {
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(idx, c);
        if (inserted) return;
        it->second = ring_.add(it->second, c);
        if (ring_.is_zero(it->second)) terms_.erase(it);
    }

    /// Parity if every term has the same parity; nullopt otherwise (0 is even).
    std::optional<int> parity() const {
        std::optional<int> out;
        for (const auto& [idx, c] : terms_) {
            const int par = algebra_->parity(idx);
            if (out && *out != par) return std::nullopt;
            out = par;
        }
        return out ? out : std::optional<int>(0);
    }

    BasicElement operator+(const BasicElement& o) const {
        require_same(o);
        BasicElement out = *this;
        for (const auto& [idx, c] : o.terms_) out.add_term(idx, c);
        return out;
    }
    BasicElement operator-(const BasicElement& o) const { return *this + o.scaled(ring_.from_int(-1)); }

    BasicElement operator*(const BasicElement& o) const {
        require_same(o);
        BasicElement out(algebra_, ring_);
        for (const auto& [i, a] : terms_)
            for (const auto& [j, b] : o.terms_) {
                const auto ab = ring_.mul(a, b);
                for (const auto& [k, c] : algebra_->product(i, j)) out.add_term(k, ring_.mul(ring_.from_int(c), ab));
            }
        return out;
    }

    BasicElement scaled(const value_type& c) const {
        BasicElement out(algebra_, ring_);
        for (const auto& [idx, v] : terms_) out.add_term(idx, ring_.mul(c, v));
        return out;
    }

    BasicElement pow(std::uint64_t e) const {
        BasicElement result = one(algebra_, ring_);
        BasicElement base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    friend bool operator==(const BasicElement& a, const BasicElement& b) {
        return *a.algebra_ == *b.algebra_ && a.terms_ == b.terms_;
    }

    template <class Printer>
    std::string to_string(Printer&& coeff) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [idx, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + coeff(c) + ")*" + algebra_->monomial_name(idx);
        }
        return out;
    }

private:
    void require_same(const BasicElement& o) const {
        if (!(*algebra_ == *o.algebra_)) throw Error("algebra mismatch between elements");
    }

    AlgebraPtr algebra_;
    R ring_;
    Terms terms_;
};

using AlgElement = BasicElement<PrimeRing>;

AlgElement make_element(const AlgebraPtr& algebra, const SparseVec& v);
AlgElement generator_element(const AlgebraPtr& algebra, const std::string& name);
std::string to_string(const AlgElement& a);

/// Delta(a), extended linearly from the basis.
TensorElement coproduct(const AlgElement& a);

/// Antipode: S(sigma) = -sigma, S(s_i) = -s_i, S(x) = (1+x)^{p-1} - 1, extended
/// to normal-form monomials (which contain sigma at most once) as a product.
AlgElement antipode(const AlgElement& a);

struct HopfReport {
    std::vector<std::string> failures;
    std::size_t relations_checked = 0;
    std::size_t multiplicativity_checked = 0;
    std::size_t coassociativity_checked = 0;
    std::size_t counit_checked = 0;
    std::size_t antipode_checked = 0;
    bool ok() const { return failures.empty(); }
};

/// Delta kills every relation, is multiplicative on generator x basis products,
/// is coassociative, satisfies the counit laws, and the antipode law holds.
/// Coassociativity, counit and antipode run on every basis monomial when
/// dim <= spanning_cap, otherwise on the generators.
HopfReport check_hopf(const Algebra& algebra, std::size_t spanning_cap = 64);

std::string to_string(const Algebra& algebra, const TensorElement& t);

}  // namespace srk::halg

#endif
