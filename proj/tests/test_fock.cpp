#include "doctest.h"

#include <random>

#include "vltau/fock.hpp"

using namespace vltau;

TEST_CASE("heisenberg commutator on generators") {
    // b1(1) b1(-1) e^0 = 4 e^0
    FockState w = heis_apply(vec_beta1(), -1, vacuum());
    CHECK(heis_apply(vec_beta1(), 1, w) == vacuum() * FieldElem(4));
    // b1(0) e^{b2} = -2 e^{b2}
    FockState e2 = exp_state(beta2());
    CHECK(heis_apply(vec_beta1(), 0, e2) == e2 * FieldElem(-2));
    // b2(3) e^{b1} = 0
    CHECK(heis_apply(vec_beta2(), 3, exp_state(beta1())).is_zero());
}

TEST_CASE("weights") {
    CHECK(weight(exp_state(beta1())) == 2);
    CHECK(weight(exp_state({2, -2})) == rat(2, 3));
    FockState w = heis_apply(vec_beta1(), -2, heis_apply(vec_beta2(), -1, vacuum()));
    CHECK(weight(w) == 3);
    FockState mixed = w + vacuum();
    CHECK_THROWS(weight(mixed));
}

TEST_CASE("graded basis dimensions of V_L") {
    CHECK(graded_basis({Klein::O, 0}, rat(0)).size() == 1);
    CHECK(graded_basis({Klein::O, 0}, rat(1)).size() == 2);
    CHECK(graded_basis({Klein::O, 0}, rat(2)).size() == 11);
    CHECK(graded_basis({Klein::O, 0}, rat(3)).size() == 22);
    // fractional weight in the wrong sector is empty
    CHECK(graded_basis({Klein::O, 0}, rat(1, 2)).empty());
}

TEST_CASE("tau eigenspace dimensions split the graded piece") {
    for (long wt = 0; wt <= 4; ++wt) {
        size_t full = graded_basis({Klein::O, 0}, rat(wt)).size();
        size_t split = 0;
        for (int eps = 0; eps < 3; ++eps)
            split += graded_basis({Klein::O, 0}, rat(wt), eps).size();
        CHECK(full == split);
    }
}

TEST_CASE("express_in_span") {
    FockState two = vacuum() * FieldElem(2);
    auto c = express_in_span(two, {vacuum()});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == FieldElem(2));

    FockState b1 = heis_apply(vec_beta1(), -1, vacuum());
    FockState b2 = heis_apply(vec_beta2(), -1, vacuum());
    auto c2 = express_in_span(b1 + b2 * FieldElem(rat(1, 2)), {b1, b2});
    REQUIRE(c2.has_value());
    CHECK((*c2)[0] == FieldElem(1));
    CHECK((*c2)[1] == FieldElem(rat(1, 2)));

    CHECK(!express_in_span(exp_state(beta1()), {b1, b2}).has_value());
}

TEST_CASE("heisenberg commutator property on random states") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-3, 3);
    auto basis2 = graded_basis({Klein::O, 0}, rat(2));
    auto basis3 = graded_basis({Klein::O, 0}, rat(3));
    std::vector<FockState> pool = basis2;
    pool.insert(pool.end(), basis3.begin(), basis3.end());
    for (int i = 0; i < 200; ++i) {
        const FockState& w = pool[rng() % pool.size()];
        VecH v{FieldElem(d(rng)), FieldElem(d(rng))};
        VecH u{FieldElem(d(rng)), FieldElem(d(rng))};
        int m = static_cast<int>(d(rng));
        if (m == 0) m = 1;
        // [v(m), u(-m)] = m <v,u>
        FockState lhs = heis_apply(v, m, heis_apply(u, -m, w)) -
                        heis_apply(u, -m, heis_apply(v, m, w));
        CHECK(lhs == w * (pairing(u, v) * FieldElem(m)));
        // weight shift
        if (!heis_apply(v, m, w).is_zero())
            CHECK(weight(heis_apply(v, m, w)) == weight(w) - m);
    }
}

TEST_CASE("automorphism lift") {
    Isometry tau = iso_tau();
    CHECK(apply_automorphism_state(tau, exp_state(beta1())) == exp_state(beta2()));
    // tau(b2(-1) e^0) = b0(-1) e^0 = -(b1+b2)(-1) e^0
    FockState lhs = apply_automorphism_state(tau, heis_apply(vec_beta2(), -1, vacuum()));
    FockState rhs = heis_apply(vec_beta0(), -1, vacuum());
    CHECK(lhs == rhs);
}
