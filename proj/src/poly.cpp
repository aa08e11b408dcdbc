#include "srk/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace srk::poly {

std::uint64_t total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

bool TermOrder::operator()(const Exponent& a, const Exponent& b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
}

MultiPoly MultiPoly::constant(std::uint32_t p, std::size_t nvars, std::int64_t c) {
    return monomial(p, nvars, Exponent(nvars, 0), c);
}

MultiPoly MultiPoly::variable(std::uint32_t p, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw Error("variable index out of range");
    Exponent e(nvars, 0);
    e[index] = 1;
    return monomial(p, nvars, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(std::uint32_t p, std::size_t nvars, Exponent exps, std::int64_t c) {
    if (exps.size() != nvars) throw Error("exponent vector length does not match variable count");
    MultiPoly out(p, nvars);
    const std::int64_t q = p;
    out.add_term(exps, static_cast<std::uint32_t>(((c % q) + q) % q));
    return out;
}

bool MultiPoly::is_nonzero_constant() const {
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

std::uint64_t MultiPoly::degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

void MultiPoly::add_term(const Exponent& e, std::uint32_t c) {
    c %= p_;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
}

void MultiPoly::require_compatible(const MultiPoly& o) const {
    if (p_ != o.p_) throw Error("polynomial characteristic mismatch");
    if (nvars_ != o.nvars_)
        throw Error("polynomial variable count mismatch: " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_compatible(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_compatible(o);
    MultiPoly out(p_, nvars_);
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, (ca * cb) % p_);
        }
    return out;
}

MultiPoly MultiPoly::scaled(std::uint32_t c) const {
    MultiPoly out(p_, nvars_);
    c %= p_;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, (v * c) % p_);
    return out;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    MultiPoly result = constant(p_, nvars_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool MultiPoly::is_homogeneous(std::span<const std::uint32_t> weights) const {
    bool first = true;
    std::uint64_t deg = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < nvars_; ++i) d += std::uint64_t{e[i]} * (weights.empty() ? 1 : weights[i]);
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return false;
        }
    }
    return true;
}

gf::Code MultiPoly::evaluate(const gf::Field& field, std::span<const gf::Code> point) const {
    if (point.size() != nvars_)
        throw Error("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                    std::to_string(nvars_));
    if (field.p() != p_) throw Error("evaluation field has the wrong characteristic");
    gf::Code acc = 0;
    for (const auto& [e, c] : terms_) {
        gf::Code term = c;
        for (std::size_t i = 0; i < nvars_ && term; ++i)
            if (e[i]) term = field.mul(term, field.pow(point[i], e[i]));
        acc = field.add(acc, term);
    }
    return acc;
}

gf::FieldElement MultiPoly::evaluate(std::span<const gf::FieldElement> point) const {
    if (point.empty()) {
        if (nvars_ != 0) throw Error("evaluation point has 0 coordinates");
        return gf::Field::build(p_).element(terms_.empty() ? 0 : terms_.begin()->second);
    }
    std::vector<gf::Code> codes;
    for (const auto& x : point) {
        if (!(x.field() == point[0].field())) throw Error("evaluation point mixes fields");
        codes.push_back(x.code());
    }
    return point[0].field().element(evaluate(point[0].field(), codes));
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    const auto labels = names.empty() ? default_names(nvars_) : names;
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += "+";
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += labels[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += std::to_string(c) + "*" + mono;
    }
    return out;
}

std::vector<std::string> default_names(std::size_t nvars, const std::string& stem, std::size_t first) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nvars; ++i) out.push_back(stem + std::to_string(first + i));
    return out;
}

PolyMatrix::PolyMatrix(std::uint32_t p, std::size_t nvars, std::size_t rows, std::size_t cols)
    : p_(p), nvars_(nvars), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(p, nvars)) {}

PolyMatrix PolyMatrix::from_matrix(const linalg::Matrix& m, std::size_t nvars) {
    if (!m.field().is_prime_field()) throw Error("symbolic matrices need prime-field entries");
    PolyMatrix out(m.field().p(), nvars, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (const auto c = m.at(i, j)) out.at(i, j) = MultiPoly::constant(out.p_, nvars, c);
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("polynomial matrix shape mismatch");
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + o.entries_[i];
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw Error("polynomial matrix shape mismatch in product");
    PolyMatrix out(p_, nvars_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) out.at(i, j) = out.at(i, j) + a * o.at(k, j);
        }
    return out;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& c) const {
    PolyMatrix out = *this;
    for (auto& e : out.entries_) e = e * c;
    return out;
}

PolyMatrix PolyMatrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw Error("power of a non-square polynomial matrix");
    PolyMatrix result(p_, nvars_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) result.at(i, i) = MultiPoly::constant(p_, nvars_, 1);
    PolyMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const MultiPoly& e) { return e.is_zero(); });
}

linalg::Matrix PolyMatrix::evaluate(const gf::Field& field, std::span<const gf::Code> point) const {
    linalg::Matrix out(field, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j).evaluate(field, point));
    return out;
}

PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
    const std::size_t n = a.rows();
    PolyMatrix out(a.p(), a.nvars(), 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.at(i, j) = a.at(i, j);
            out.at(i, n + j) = b.at(i, j);
            out.at(n + i, j) = c.at(i, j);
            out.at(n + i, n + j) = d.at(i, j);
        }
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t mask_of(const std::vector<std::size_t>& idx) {
    std::uint64_t m = 0;
    for (auto i : idx) m |= std::uint64_t{1} << i;
    return m;
}

struct MinorExpander {
    const PolyMatrix& m;
    std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, MultiPoly>> memo;

    // Expansion along the lowest row of the subset.
    const MultiPoly& minor(std::uint64_t rows, std::uint64_t cols) {
        auto& slot = memo[rows];
        if (auto it = slot.find(cols); it != slot.end()) return it->second;
        MultiPoly acc(m.p(), m.nvars());
        const std::size_t r0 = static_cast<std::size_t>(__builtin_ctzll(rows));
        const std::uint64_t rest = rows & (rows - 1);
        if (rest == 0) {
            acc = m.at(r0, static_cast<std::size_t>(__builtin_ctzll(cols)));
        } else {
            std::size_t position = 0;
            for (std::uint64_t c = cols; c; c &= c - 1, ++position) {
                const std::size_t col = static_cast<std::size_t>(__builtin_ctzll(c));
                const auto& entry = m.at(r0, col);
                if (entry.is_zero()) continue;
                const auto& sub = minor(rest, cols & ~(std::uint64_t{1} << col));
                if (sub.is_zero()) continue;
                const MultiPoly term = entry * sub;
                acc = position % 2 == 0 ? acc + term : acc - term;
            }
        }
        return memo[rows].emplace(cols, std::move(acc)).first->second;
    }
};

}  // namespace

std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t k, std::size_t cap) {
    if (k == 0 || k > std::min(m.rows(), m.cols()))
        throw Error("minor size " + std::to_string(k) + " out of range for a " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
    if (m.rows() > 64 || m.cols() > 64) throw Error("symbolic minors limited to 64 rows and columns");
    const std::uint64_t count = binomial(m.rows(), k) * binomial(m.cols(), k);
    if (count > cap)
        throw Error("minor count " + std::to_string(count) + " exceeds cap " + std::to_string(cap) +
                    " (use point evaluation instead)");
    MinorExpander expander{m, {}};
    std::vector<MultiPoly> out;
    out.reserve(count);
    combinations(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        const auto rmask = mask_of(rows);
        combinations(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
            out.push_back(expander.minor(rmask, mask_of(cols)));
        });
    });
    return out;
}

namespace {

using boost::multiprecision::cpp_int;
using IntPoly = std::map<Exponent, cpp_int, TermOrder>;

void int_add_term(IntPoly& f, const Exponent& e, const cpp_int& c) {
    if (c == 0) return;
    auto [it, inserted] = f.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) f.erase(it);
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponent e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            int_add_term(out, e, ca * cb);
        }
    return out;
}

IntPoly int_pow(IntPoly base, std::uint64_t e, std::size_t nvars) {
    IntPoly result;
    result.emplace(Exponent(nvars, 0), 1);
    while (e) {
        if (e & 1) result = int_mul(result, base);
        e >>= 1;
        if (e) base = int_mul(base, base);
    }
    return result;
}

}  // namespace

std::vector<MultiPoly> witt_sums(std::uint32_t p, std::size_t n) {
    if (!gf::is_prime(p)) throw Error("Witt polynomials need a prime");
    if (n == 0) throw Error("Witt polynomial count must be at least 1");
    const std::size_t nvars = 2 * n;
    std::vector<IntPoly> sums;  // integral S_j
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < n; ++i) {
        // p^i S_i = w_i(x) + w_i(y) - sum_{j<i} p^j S_j^{p^{i-j}}
        IntPoly rhs;
        cpp_int pj = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            std::uint64_t e = 1;
            for (std::size_t r = j; r < i; ++r) e *= p;
            Exponent ex(nvars, 0), ey(nvars, 0);
            ex[j] = static_cast<std::uint32_t>(e);
            ey[n + j] = static_cast<std::uint32_t>(e);
            int_add_term(rhs, ex, pj);
            int_add_term(rhs, ey, pj);
            if (j < i)
                for (const auto& [mono, c] : int_pow(sums[j], e, nvars)) int_add_term(rhs, mono, -pj * c);
            pj *= p;
        }
        const cpp_int denom = pj / p;  // p^i
        IntPoly s;
        MultiPoly reduced(p, nvars);
        for (const auto& [mono, c] : rhs) {
            if (c % denom != 0) throw std::logic_error("Witt polynomial coefficient is not p-integral");
            const cpp_int q = c / denom;
            s.emplace(mono, q);
            const cpp_int r = ((q % p) + p) % p;
            reduced.add_term(mono, static_cast<std::uint32_t>(r));
        }
        sums.push_back(std::move(s));
        out.push_back(std::move(reduced));
    }
    return out;
}

std::vector<std::string> witt_variable_names(std::size_t n) {
    auto names = default_names(n, "x", 0);
    auto ys = default_names(n, "y", 0);
    names.insert(names.end(), ys.begin(), ys.end());
    return names;
}

}  // namespace srk::poly
