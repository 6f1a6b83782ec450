#include "doctest.h"

#include <cstdlib>

#include "vltau/catalog.hpp"
#include "vltau/config.hpp"

using namespace vltau;

static const Catalog& cat() {
    static Catalog c;
    return c;
}

TEST_CASE("named vector weights") {
    CHECK(weight(cat().omega()) == 2);
    CHECK(weight(cat().w1()) == 2);
    CHECK(weight(cat().w2()) == 2);
    CHECK(weight(cat().J()) == 3);
    CHECK(weight(cat().K()) == 3);
    CHECK(weight(cat().P()) == 2);
    CHECK(weight(cat().J1P()) == 3);
    CHECK(weight(cat().K1P()) == 3);
    CHECK_THROWS(cat().build("nonsense"));
}

TEST_CASE("w1 is a Virasoro vector of central charge 6/5") {
    CHECK(mode_apply(cat().w1(), 3, cat().w1()) == vacuum() * FieldElem(rat(3, 5)));
    CHECK(mode_apply(cat().w1(), 1, cat().P()) == cat().P() * FieldElem(rat(8, 5)));
}

TEST_CASE("structure constants suite") {
    Report r = cat().verify_structure_constants();
    INFO(r.to_text());
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 24);  // 16 displayed lines + 8 annihilation checks
}

TEST_CASE("singular vectors suite") {
    Report r = cat().verify_singular_vectors();
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("conformal orthogonality suite") {
    Report r = cat().verify_conformal_orthogonality();
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("automorphism action suite") {
    Report r = cat().verify_automorphism_actions();
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("section 4 untwisted tables") {
    Report r = cat().verify_section4_untwisted();
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("appendix expansions") {
    Report r = cat().verify_appendix_b(default_config_dir() + "/appendix_b.txt");
    INFO(r.to_text());
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 32);
}
