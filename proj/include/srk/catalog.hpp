// Seeded regression corpus: algebras at p = 3 and small modules built from
// structured factories (quotients, syzygies, shifts, sums, tensors).
#ifndef SRK_CATALOG_HPP
#define SRK_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "srk/smod.hpp"

namespace srk::catalog {

inline constexpr std::uint64_t kDefaultSeed = 20261016;

/// SRK_SEED when set and numeric, otherwise the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

std::string algebra_name(const halg::AlgebraSpec& spec);

/// TypeI/II/III at p = 3 with n <= 2, m <= 2, s_zp <= 1.
std::vector<halg::AlgebraSpec> hopf_grid();

struct NamedAlgebra {
    std::string name;
    halg::AlgebraPtr algebra;
};

/// Algebras that carry module catalogs.
std::vector<NamedAlgebra> module_algebras();
NamedAlgebra find_algebra(const std::string& name);

struct Entry {
    std::string name;
    smod::SuperModule module;
};

/// Modules of dimension <= max_dim (the free module of rank 1 is always kept).
std::vector<Entry> modules(const NamedAlgebra& a, std::uint64_t seed, std::size_t max_dim = 8);

struct Pair {
    std::string name;
    smod::SuperModule m;
    smod::SuperModule n;
};

/// `count` seeded pairs with dim M * dim N <= tensor_cap, preceded by any
/// fixed pairs (A/(s1), A/(s2)) when both generators exist.
std::vector<Pair> tensor_pairs(const NamedAlgebra& a, std::uint64_t seed, std::size_t count,
                               std::size_t tensor_cap = 64);

}  // namespace srk::catalog

#endif
