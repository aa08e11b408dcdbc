// Finite-dimensional Z/2-graded modules over the algebras of halg.
//
// A module is a parity vector plus one action matrix per algebra generator,
// acting on column coordinate vectors over a field K of characteristic p.
#ifndef SRK_SMOD_HPP
#define SRK_SMOD_HPP

#include <string>
#include <vector>

#include "srk/halg.hpp"
#include "srk/matrix.hpp"

namespace srk::smod {

using halg::AlgebraPtr;
using halg::AlgElement;
using linalg::Matrix;

class SuperModule {
public:
    /// Stores the data as given; call validate() to check it.
    SuperModule(AlgebraPtr algebra, gf::Field field, std::vector<int> parity, std::vector<Matrix> actions);

    const AlgebraPtr& algebra() const { return algebra_; }
    const gf::Field& field() const { return field_; }
    std::size_t dim() const { return parity_.size(); }
    const std::vector<int>& parity() const { return parity_; }
    const std::vector<Matrix>& actions() const { return actions_; }
    const Matrix& action(std::size_t generator) const { return actions_.at(generator); }
    const Matrix& action(const std::string& generator) const;

    friend bool operator==(const SuperModule& a, const SuperModule& b);

private:
    AlgebraPtr algebra_;
    gf::Field field_;
    std::vector<int> parity_;
    std::vector<Matrix> actions_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Relations, parity behaviour of each generator, pairwise commutation.
ValidationReport validate(const SuperModule& m);

/// Action matrix of every basis monomial of the algebra, indexed like basis().
std::vector<Matrix> basis_actions(const SuperModule& m);

/// Action of an algebra element with GF(p) coefficients.
Matrix act(const SuperModule& m, const AlgElement& a);

SuperModule zero_module(const AlgebraPtr& algebra, const gf::Field& field);
SuperModule trivial_module(const AlgebraPtr& algebra, const gf::Field& field, int parity = 0);
SuperModule free_module(const AlgebraPtr& algebra, std::size_t rank, const gf::Field& field);

/// A / I for the ideal generated by parity-homogeneous elements. The basis is
/// the set of normal-form monomials that are not leading monomials of I.
SuperModule cyclic_module(const AlgebraPtr& algebra, const std::vector<AlgElement>& ideal_generators,
                          const gf::Field& field);

/// Koszul-signed tensor product; basis m_i (x) n_j sits at i * dim(N) + j.
SuperModule tensor(const SuperModule& m, const SuperModule& n);
SuperModule parity_shift(const SuperModule& m);
SuperModule direct_sum(const SuperModule& m, const SuperModule& n);
/// Extension of scalars from a prime field to GF(p^e).
SuperModule base_change(const SuperModule& m, const gf::Field& field);

/// Kernel of the projective cover A^r -> M.
SuperModule syzygy(const SuperModule& m);

struct FreeResult {
    bool free = false;
    std::size_t rank = 0;  // minimal number of generators of M
};
/// Freeness via the cover map: free iff dim M = r dim A and the cover is onto.
FreeResult is_free(const SuperModule& m);

}  // namespace srk::smod

#endif
