#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <set>

#include "srk/catalog.hpp"

using namespace srk;

TEST_CASE("hopf grid") {
    const auto grid = catalog::hopf_grid();
    std::set<std::string> names;
    for (const auto& spec : grid) {
        CHECK(spec.p == 3);
        CHECK(spec.n <= 2);
        CHECK(spec.m <= 2);
        CHECK(spec.kind != halg::Kind::MnFMu);
        names.insert(catalog::algebra_name(spec));
    }
    CHECK(names.size() == grid.size());
    CHECK(names.count("TypeIII_m2_n1"));
    CHECK(names.count("TypeI_n2"));
}

TEST_CASE("module algebras") {
    const auto all = catalog::module_algebras();
    CHECK(all.size() == 11);
    for (const auto& a : all) {
        CHECK(catalog::find_algebra(a.name).algebra->spec() == a.algebra->spec());
        CHECK(catalog::algebra_name(a.algebra->spec()) == a.name);
    }
    CHECK_THROWS_AS(catalog::find_algebra("TypeIV"), Error);
}

TEST_CASE("modules are valid, small and deterministic") {
    for (const auto& a : catalog::module_algebras()) {
        CAPTURE(a.name);
        const auto first = catalog::modules(a, catalog::kDefaultSeed);
        const auto again = catalog::modules(a, catalog::kDefaultSeed);
        REQUIRE(first.size() == again.size());
        CHECK(first.size() >= 6);
        std::set<std::string> names;
        bool has_free = false;
        for (std::size_t i = 0; i < first.size(); ++i) {
            const auto& e = first[i];
            CAPTURE(e.name);
            CHECK(e.name == again[i].name);
            CHECK(e.module == again[i].module);
            CHECK(smod::validate(e.module).ok());
            CHECK(*e.module.algebra() == *a.algebra);
            CHECK(e.module.dim() > 0);
            if (e.name == "free1") {
                has_free = true;
                CHECK(e.module.dim() == a.algebra->dim());
            } else {
                CHECK(e.module.dim() <= 8);
            }
            names.insert(e.name);
        }
        CHECK(has_free);
        CHECK(names.size() == first.size());
    }
}

TEST_CASE("seed changes the random modules only") {
    const auto a = catalog::find_algebra("TypeI_n2");
    const auto x = catalog::modules(a, 1), y = catalog::modules(a, 2);
    CHECK(x.front().module == y.front().module);
    bool differs = x.size() != y.size();
    for (std::size_t i = 0; !differs && i < x.size(); ++i) differs = !(x[i].module == y[i].module);
    CHECK(differs);
}

TEST_CASE("seed from environment") {
    ::unsetenv("SRK_SEED");
    CHECK(catalog::seed_from_env() == catalog::kDefaultSeed);
    CHECK(catalog::seed_from_env(7) == 7);
    ::setenv("SRK_SEED", "12345", 1);
    CHECK(catalog::seed_from_env() == 12345);
    ::setenv("SRK_SEED", "abc", 1);
    CHECK(catalog::seed_from_env() == catalog::kDefaultSeed);
    ::unsetenv("SRK_SEED");
}

TEST_CASE("tensor pairs") {
    for (const char* name : {"TypeI_n2", "TypeIII_m2_n1"}) {
        CAPTURE(name);
        const auto a = catalog::find_algebra(name);
        const auto pairs = catalog::tensor_pairs(a, catalog::kDefaultSeed, 6);
        CHECK(pairs.size() >= 6);
        for (const auto& pr : pairs) {
            CHECK(pr.m.dim() * pr.n.dim() <= 64);
            CHECK(*pr.m.algebra() == *a.algebra);
        }
        const auto again = catalog::tensor_pairs(a, catalog::kDefaultSeed, 6);
        REQUIRE(again.size() == pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) CHECK(pairs[i].name == again[i].name);
    }
    const auto t = catalog::tensor_pairs(catalog::find_algebra("TypeI_n2"), catalog::kDefaultSeed, 6);
    CHECK(t.front().name == "A/(s1) (x) A/(s2)");
}
