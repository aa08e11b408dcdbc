// Rank varieties as finite point sets: projective points over GF(p^e) where
// the restricted module fails to have finite flat dimension, the symbolic
// minor ideal for small modules, the projectivity search, and the
// tensor-product check.
#ifndef SRK_RVAR_HPP
#define SRK_RVAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "srk/pip.hpp"

namespace srk::rvar {

using smod::SuperModule;
using Point = std::vector<gf::Code>;

struct Caps {
    std::uint64_t points = 1'000'000;  // projective points enumerated per field
    std::size_t tensor_dim = 64;
    std::size_t minor_d = 4;
};

struct Options {
    Caps caps;
    unsigned jobs = 1;
    bool diagnostics = false;  // record the rank at every point
};

/// |P^{len-1}(GF(q))|.
std::uint64_t projective_count(std::uint64_t q, std::size_t len);

/// Canonical representatives (first nonzero coordinate 1), ordered by the
/// position of the leading 1, then by the remaining codes lexicographically.
std::vector<Point> projective_points(const gf::Field& field, std::size_t len);

/// Rescales a nonzero vector so its first nonzero coordinate is 1.
Point canonical(const gf::Field& field, Point p);

struct VarietyPoints {
    gf::Field field;
    std::size_t ambient = 0;  // number of lambda coordinates
    std::size_t d = 0;
    std::vector<Point> points;  // rank < d, enumeration order
    std::vector<std::pair<Point, std::size_t>> rank_at;  // filled with Options::diagnostics
};

VarietyPoints variety_points(const SuperModule& m, const gf::Field& field, const Options& opts = {});

struct MinorIdeal {
    std::size_t d = 0;
    std::size_t nvars = 0;
    std::vector<poly::MultiPoly> generators;  // nonzero d x d minors, canonical order
    std::vector<std::uint32_t> weights;       // grading under which alpha scales uniformly
    bool homogeneous = false;                 // standard grading
    bool weighted_homogeneous = false;
};

/// Throws when d exceeds caps.minor_d.
MinorIdeal minor_ideal(const SuperModule& m, const Caps& caps = {});
bool vanishes_at(const MinorIdeal& ideal, const gf::Field& field, std::span<const gf::Code> point);

/// Weights per lambda coordinate: all 1, except case III where sigma's
/// coordinate has weight 1 and every other coordinate weight 2.
std::vector<std::uint32_t> lambda_weights(const halg::Algebra& a);

struct Verdict {
    bool projective = true;  // no witness found up to depth
    std::optional<Point> witness;
    std::uint32_t witness_degree = 0;  // extension degree of the witness field
    std::size_t depth = 0;
    bool oracle_free = false;
    std::size_t oracle_rank = 0;
    bool discrepancy = false;  // search and oracle disagree
};

Verdict projectivity_verdict(const SuperModule& m, std::size_t depth, const Options& opts = {});

struct TensorCheck {
    bool pass = false;
    VarietyPoints lhs;
    std::vector<Point> rhs;
    std::vector<Point> left, right;  // varieties of the factors
    bool tensor_free = false;
};

TensorCheck tensor_formula_check(const SuperModule& m, const SuperModule& n, const gf::Field& field,
                                 const Options& opts = {});

}  // namespace srk::rvar

#endif
