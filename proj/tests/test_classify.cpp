#include "doctest.h"

#include "vltau/classify.hpp"
#include "vltau/config.hpp"

using namespace vltau;

static Catalog& cat() {
    static Catalog c;
    return c;
}
static ZhuReducer& red() {
    static ZhuReducer r(cat());
    return r;
}
static const ScalarSystem& sys() {
    static ScalarSystem s = derive_scalar_system(
        red(), parse_appendix_file(default_config_dir() + "/appendix_b.txt"));
    return s;
}
static Classifier& cls() {
    static Classifier c(cat(), default_config_dir());
    return c;
}

TEST_CASE("cards and roster load") {
    CHECK(cls().cards().size() == 30);
    CHECK(cls().m0_simples().size() == 20);
    CHECK(cls().mt0_simples().size() == 6);
    CHECK(cls().enumerate_quadruplets().size() == 60);
}

TEST_CASE("roster derived entries recomputed") {
    Report r = cls().verify_roster_derived();
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("untwisted cards recomputed from vertex action") {
    Report r = cls().verify_cards_untwisted(&red().jkp_nc());
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("solver on the vacuum quadruplet") {
    Quadruplet q;
    q.m1 = "M(0)";
    q.m2 = "Mt0";
    q.a1 = FieldElem(0);
    q.a2 = FieldElem(0);
    q.b1 = FieldElem(0);
    q.b2 = FieldElem(0);
    auto r = cls().solve_system(q, sys());
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].x1 == FieldElem(0));
    CHECK(r.solutions[0].x2 == FieldElem(0));
    CHECK(r.solutions[0].x3 == FieldElem(0));
}

TEST_CASE("solver on the V_L(1) quadruplet") {
    Quadruplet q;
    q.m1 = "W(1)";
    q.m2 = "Wt0";
    q.a1 = FieldElem(rat(3, 5));
    q.a2 = FieldElem(rat(2, 5));
    q.b1 = sqrt_m3() * FieldElem(2);
    q.b2 = FieldElem(0);
    auto r = cls().solve_system(q, sys());
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].x1 == FieldElem(0));
    CHECK(r.solutions[0].x2 == FieldElem(0));
    CHECK(r.solutions[0].x3 == sqrt_m3() * FieldElem(-12));
}

TEST_CASE("classification of all 60 quadruplets") {
    Report r = cls().classify_all(sys());
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("zhu algebra structure") {
    Report r = cls().zhu_algebra_structure();
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("sigma permutation table") {
    Report r = cls().sigma_permutation_check();
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("contragredient table") {
    Report r = cls().contragredient_check();
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("o-homomorphism on all 30 cards") {
    Report r = cls().o_homomorphism_all(sys());
    INFO(r.to_text());
    CHECK(r.all_pass());
}
