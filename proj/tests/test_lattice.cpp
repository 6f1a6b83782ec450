#include "doctest.h"

#include <random>
#include <set>

#include "vltau/lattice.hpp"

using namespace vltau;

TEST_CASE("gram matrix") {
    CHECK(pairing(beta1(), beta1()) == 4);
    CHECK(pairing(beta2(), beta2()) == 4);
    CHECK(pairing(beta1(), beta2()) == -2);
    CHECK(pairing(beta0(), beta0()) == 4);
    // <(b1-b2)/3, (b1-b2)/3> = 4/3
    LatticeVec v{2, -2};
    CHECK(norm(v) == rat(4, 3));
}

TEST_CASE("coset labels of the 12 representatives") {
    CHECK(coset_of({-2, 2}) == CosetLabel{Klein::O, 1});
    CHECK(coset_of({0, 3}) == CosetLabel{Klein::A, 0});
    CHECK(coset_of({0, 0}) == CosetLabel{Klein::O, 0});
    CHECK(coset_of({3, 0}) == CosetLabel{Klein::C, 0});
    CHECK(coset_of({-3, -3}) == CosetLabel{Klein::B, 0});
    CHECK_THROWS(coset_of({1, 0}));

    std::set<std::string> labels;
    for (auto& c : all_cosets()) {
        LatticeVec r = coset_representative(c);
        CHECK(coset_of(r) == c);
        labels.insert(to_string(c));
    }
    CHECK(labels.size() == 12);
}

TEST_CASE("isometries") {
    Isometry tau = iso_tau(), sigma = iso_sigma(), theta = iso_theta();
    CHECK(tau.apply(beta1()) == beta2());
    CHECK(tau.apply(beta2()) == beta0());
    CHECK(tau.apply(beta0()) == beta1());
    CHECK(sigma.apply(beta1()) == beta2());
    CHECK(theta.apply(beta1()) == -beta1());
    CHECK(tau.preserves_gram());
    CHECK(sigma.preserves_gram());
    CHECK(theta.preserves_gram());

    // group relations: tau^3 = sigma^2 = theta^2 = 1, sigma tau sigma = tau^2
    CHECK(tau.compose(tau).compose(tau).same_matrix(iso_identity()));
    CHECK(sigma.compose(sigma).same_matrix(iso_identity()));
    CHECK(theta.compose(theta).same_matrix(iso_identity()));
    CHECK(sigma.compose(tau).compose(sigma).same_matrix(tau.compose(tau)));
    CHECK(tau.compose(theta).same_matrix(theta.compose(tau)));
}

TEST_CASE("isometries preserve pairing and cosets are translation invariant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-12, 12);
    auto rand_dual = [&]() {
        while (true) {
            LatticeVec v{d(rng), d(rng)};
            if (in_dual(v)) return v;
        }
    };
    for (int i = 0; i < 100; ++i) {
        LatticeVec a = rand_dual(), b = rand_dual();
        for (auto g : {iso_tau(), iso_sigma(), iso_theta()})
            CHECK(pairing(g.apply(a), g.apply(b)) == pairing(a, b));
        LatticeVec t{6 * (d(rng) % 3), 6 * (d(rng) % 3)};
        CHECK(coset_of(a + t) == coset_of(a));
    }
}

TEST_CASE("lattice point enumeration") {
    // no vectors of norm 2 in L, six of norm 4
    auto pts = lattice_points({Klein::O, 0}, rat(4));
    int n4 = 0, n2 = 0;
    for (auto& p : pts) {
        if (norm(p) == 4) ++n4;
        if (norm(p) == 2) ++n2;
    }
    CHECK(n4 == 6);
    CHECK(n2 == 0);
}
