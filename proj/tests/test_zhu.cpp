#include "doctest.h"

#include "vltau/config.hpp"
#include "vltau/zhu.hpp"

using namespace vltau;

static Catalog& cat() {
    static Catalog c;
    return c;
}
static ZhuReducer& red() {
    static ZhuReducer r(cat());
    return r;
}

TEST_CASE("star and circ basics") {
    // vacuum * v = v
    CHECK(star(vacuum(), cat().P()) == cat().P());
    // [omega * u] = [(L(-2) + L(-1)) u] in the Zhu algebra
    FockState lhs = star(cat().omega(), cat().P());
    FockState rhs = mode_apply(cat().omega(), -1, cat().P()) +
                    mode_apply(cat().omega(), 0, cat().P());
    CHECK(red().reduce_to_scalar(lhs) == red().reduce_to_scalar(rhs));
    // vacuum o v reduces into O(V)
    CHECK(red().reduce_to_scalar(circ(vacuum(), cat().P())).is_zero());
}

TEST_CASE("word basis spans the invariant graded pieces") {
    for (long wt = 0; wt <= 5; ++wt) {
        auto& words = red().word_basis(wt);
        CHECK(words.size() == graded_basis({Klein::O, 0}, rat(wt), 0).size());
    }
}

TEST_CASE("generator words reduce to their symbols") {
    // [L1(-2) 1] -> a1
    CHECK(red().reduce_to_scalar(cat().w1()) == sp_term(FieldElem(1), {{0, 1}}));
    CHECK(red().reduce_to_scalar(cat().w2()) == sp_term(FieldElem(1), {{1, 1}}));
    CHECK(red().reduce_to_scalar(cat().J()) == sp_term(FieldElem(1), {{2, 1}}));
    CHECK(red().reduce_to_scalar(cat().K()) == sp_term(FieldElem(1), {{3, 1}}));
    CHECK(red().reduce_to_scalar(cat().P()) == sp_term(FieldElem(1), {{4, 1}}));
    CHECK(red().reduce_to_scalar(cat().J1P()) == sp_term(FieldElem(1), {{5, 1}}));
    CHECK(red().reduce_to_scalar(cat().K1P()) == sp_term(FieldElem(1), {{6, 1}}));
}

TEST_CASE("omega circ omega lies in O(V)") {
    CHECK(red().reduce_to_scalar(circ(cat().omega(), cat().omega())).is_zero());
    CHECK(red().reduce_to_scalar(circ(cat().w1(), cat().w1())).is_zero());
}

TEST_CASE("derived system matches the printed coefficients") {
    Report rep;
    auto lines = parse_appendix_file(default_config_dir() + "/appendix_b.txt");
    ScalarSystem sys = derive_scalar_system(red(), lines, &rep);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
    CHECK(!sys.jpjp.is_zero());
}
