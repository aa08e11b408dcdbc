#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "srk/catalog.hpp"
#include "srk/io.hpp"

using namespace srk;
using io::Json;

namespace {

const gf::Field F3 = gf::Field::build(3);
const gf::Field F9 = gf::Field::build(3, 2);

halg::AlgebraPtr typeI2() { return halg::Algebra::build({3, halg::Kind::TypeI, 2, 1, 0, {}, 0}); }

}  // namespace

TEST_CASE("algebra specs round-trip") {
    for (const auto& spec : catalog::hopf_grid()) CHECK(io::spec_from_json(io::to_json(spec)) == spec);
    halg::AlgebraSpec mnf{3, halg::Kind::MnFMu, 2, 1, 0, {{0, 2}, {2, 1}}, 1};
    CHECK(io::spec_from_json(io::to_json(mnf)) == mnf);

    const auto j = Json::parse(R"({"p":3,"kind":"TypeIII","n":1,"m":2,"s_zp":0})");
    const auto spec = io::spec_from_json(j);
    CHECK(spec.kind == halg::Kind::TypeIII);
    CHECK(spec.m == 2);
    CHECK(halg::Algebra::build(spec)->dim() == 18);
}

TEST_CASE("algebra spec errors") {
    CHECK_THROWS_AS(io::spec_from_json(Json::parse(R"({"p":3})")), Error);
    CHECK_THROWS_AS(io::spec_from_json(Json::parse(R"({"kind":"TypeIV"})")), Error);
    CHECK_THROWS_AS(io::spec_from_json(Json::parse(R"({"kind":"TypeI","n":-1})")), Error);
    CHECK_THROWS_AS(io::spec_from_json(Json::parse(R"({"kind":"MnFMu","f":[[1]]})")), Error);
    CHECK_THROWS_AS(io::spec_from_json(Json::parse(R"([1,2])")), Error);
}

TEST_CASE("field elements") {
    CHECK(io::element_to_json(F3, 2) == Json(2));
    // code 5 = 2 + 1*3 has coefficients [2, 1]
    CHECK(io::element_to_json(F9, 5) == Json::parse("[2,1]"));
    for (gf::Code c = 0; c < 9; ++c) CHECK(io::element_from_json(F9, io::element_to_json(F9, c)) == c);
    CHECK(io::element_from_json(F9, Json(2)) == 2);
    CHECK(io::element_from_json(F9, Json::parse("[1]")) == 1);
    CHECK_THROWS_AS(io::element_from_json(F3, Json(3)), Error);
    CHECK_THROWS_AS(io::element_from_json(F9, Json::parse("[1,1,1]")), Error);
    CHECK_THROWS_AS(io::element_from_json(F9, Json::parse("[1,5]")), Error);
    CHECK_THROWS_AS(io::element_from_json(F9, Json("x")), Error);
    CHECK(io::field_from_json(io::to_json(F9)) == F9);
    CHECK_THROWS_AS(io::field_from_json(Json::parse(R"({"p":4})")), Error);
}

TEST_CASE("modules round-trip over every catalog algebra") {
    for (const auto& a : catalog::module_algebras())
        for (const auto& e : catalog::modules(a, catalog::kDefaultSeed)) {
            CAPTURE(a.name);
            CAPTURE(e.name);
            const auto j = io::to_json(e.module);
            CHECK(io::module_from_json(j) == e.module);
            CHECK(io::module_from_json(Json::parse(j.dump())) == e.module);
        }
    const auto m9 = smod::base_change(smod::cyclic_module(typeI2(), {halg::generator_element(typeI2(), "s1")}, F3), F9);
    CHECK(io::module_from_json(io::to_json(m9)) == m9);
}

TEST_CASE("module file layout") {
    const auto a = typeI2();
    const auto m = smod::cyclic_module(a, {halg::generator_element(a, "s1")}, F3);
    const auto j = io::to_json(m);
    CHECK(j.at("dim") == 3);
    CHECK(j.at("parity") == Json::parse("[0,0,0]"));
    CHECK(j.at("field") == Json::parse(R"({"p":3,"m":1})"));
    CHECK(j.at("action").contains("s1"));
    CHECK(j.at("action").contains("s2"));
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"algebra", "field", "dim", "parity", "action"});
}

TEST_CASE("module parse errors") {
    const auto a = typeI2();
    const auto good = io::to_json(smod::cyclic_module(a, {halg::generator_element(a, "s1")}, F3));
    for (const char* key : {"algebra", "field", "dim", "parity", "action"}) {
        auto j = good;
        j.erase(key);
        CHECK_THROWS_AS(io::module_from_json(j), Error);
    }
    auto extra = good;
    extra["action"]["sigma"] = good["action"]["s1"];
    CHECK_THROWS_AS(io::module_from_json(extra), Error);
    auto short_rows = good;
    short_rows["action"]["s1"].erase(0);
    CHECK_THROWS_AS(io::module_from_json(short_rows), Error);
    auto bad_parity = good;
    bad_parity["parity"] = Json::parse("[0,0]");
    CHECK_THROWS_AS(io::module_from_json(bad_parity), Error);
    auto bad_type = good;
    bad_type["dim"] = "three";
    CHECK_THROWS_AS(io::module_from_json(bad_type), Error);
}

TEST_CASE("pi-points and varieties") {
    const std::vector<gf::Code> lambda{1, 5};
    const auto j = io::pipoint_to_json(F9, lambda);
    CHECK(j.dump() == R"({"lambda":[[1,0],[2,1]],"symbolic":false})");
    const auto back = io::pipoint_from_json(j, F9);
    REQUIRE(back.size() == 2);
    CHECK(back[1].code() == 5);
    CHECK_THROWS_AS(io::pipoint_from_json(Json::parse(R"({"lambda":[1],"symbolic":true})"), F3), Error);
    CHECK_THROWS_AS(io::pipoint_from_json(Json::parse(R"({"mu":[1]})"), F3), Error);

    const auto a = typeI2();
    const auto m = smod::cyclic_module(a, {halg::generator_element(a, "s1")}, F3);
    const auto v = io::to_json(rvar::variety_points(m, F3));
    CHECK(v.at("points") == Json::parse("[[1,0]]"));
    CHECK(v.at("d") == 3);
    CHECK_FALSE(v.contains("rank_at"));
    rvar::Options diag;
    diag.diagnostics = true;
    const auto vd = io::to_json(rvar::variety_points(m, F3, diag));
    CHECK(vd.at("rank_at").size() == 4);
}

TEST_CASE("files") {
    const auto path = std::filesystem::temp_directory_path() / "srk_test_io.json";
    const auto a = typeI2();
    const auto m = smod::free_module(a, 1, F3);
    io::save(path, io::to_json(m));
    CHECK(io::module_from_json(io::load(path)) == m);
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(io::load(path), Error);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::load(path), Error);
}
