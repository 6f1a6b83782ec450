#include "vltau/suites.hpp"

#include <random>

namespace vltau {

Report suite_commutators(const Catalog& cat, const Rational& max_wt, int mode_bound) {
    Report rep;
    rep.suite = "commutators";
    OpCache cache;
    W3Gens gens = cat.gens();
    const std::pair<Family, Family> pairs[] = {
        {Family::L1, Family::L1}, {Family::L1, Family::J},
        {Family::L2, Family::L2}, {Family::L2, Family::K},
        {Family::J, Family::J},   {Family::K, Family::K},
        {Family::L1, Family::L2}, {Family::L1, Family::K},
        {Family::L2, Family::J},  {Family::J, Family::K}};
    auto fam_name = [](Family f) {
        switch (f) {
            case Family::L1: return "L1";
            case Family::L2: return "L2";
            case Family::J: return "J";
            default: return "K";
        }
    };
    for (auto& [a, b] : pairs) {
        bool ok = true;
        std::string diag;
        for (int m = -mode_bound; m <= mode_bound && ok; ++m)
            for (int n = -mode_bound; n <= mode_bound && ok; ++n)
                ok = commutator_check(gens, a, b, m, n, max_wt, &cache, &diag);
        rep.add(std::string("[") + fam_name(a) + "(m), " + fam_name(b) +
                    "(n)] on weight <= " + to_string(max_wt),
                ok, "", "", diag);
    }
    return rep;
}

namespace {

// random 2-term homogeneous combination from a graded basis
FockState random_state(const std::vector<FockState>& basis, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    FockState s = basis[rng() % basis.size()];
    long c = coeff(rng);
    s = s * FieldElem(c == 0 ? 1 : c);
    const FockState& other = basis[rng() % basis.size()];
    long c2 = coeff(rng);
    if (c2 != 0) s += other * FieldElem(c2);
    if (s.is_zero()) s = basis[0];
    return s;
}

}  // namespace

Report suite_borcherds(const Catalog& cat, int checks, uint64_t seed) {
    (void)cat;
    Report rep;
    rep.suite = "borcherds";
    std::mt19937_64 rng(seed);

    std::vector<std::vector<FockState>> upool;
    for (long wt = 1; wt <= 4; ++wt)
        upool.push_back(graded_basis({Klein::O, 0}, rat(wt)));
    std::vector<std::vector<FockState>> wpool = upool;
    for (auto& [coset, wt] : std::vector<std::pair<CosetLabel, Rational>>{
             {{Klein::O, 1}, rat(2, 3)},
             {{Klein::O, 1}, rat(5, 3)},
             {{Klein::A, 0}, rat(1, 2)},
             {{Klein::A, 0}, rat(3, 2)},
             {{Klein::C, 1}, rat(1, 6)},
             {{Klein::C, 1}, rat(7, 6)}}) {
        auto b = graded_basis(coset, wt);
        if (!b.empty()) wpool.push_back(std::move(b));
    }

    std::uniform_int_distribution<int> dmode(-3, 3);
    int failures = 0;
    for (int i = 0; i < checks; ++i) {
        FockState u = random_state(upool[rng() % upool.size()], rng);
        FockState v = random_state(upool[rng() % upool.size()], rng);
        FockState w = random_state(wpool[rng() % wpool.size()], rng);
        if (!borcherds_check(u, v, w, dmode(rng), dmode(rng), dmode(rng))) ++failures;
    }
    rep.add(std::to_string(checks) + " seeded Borcherds instances", failures == 0,
            "0 failures", std::to_string(failures) + " failures");
    return rep;
}

Report suite_equivariance(const Catalog& cat, int checks, uint64_t seed) {
    (void)cat;
    Report rep;
    rep.suite = "equivariance";
    std::mt19937_64 rng(seed);
    std::vector<std::vector<FockState>> pool;
    for (long wt = 1; wt <= 4; ++wt)
        pool.push_back(graded_basis({Klein::O, 0}, rat(wt)));
    Isometry gs[3] = {iso_tau(), iso_sigma(), iso_theta()};
    std::uniform_int_distribution<int> dmode(-2, 3);
    int failures = 0;
    for (int i = 0; i < checks; ++i) {
        FockState u = random_state(pool[rng() % pool.size()], rng);
        FockState w = random_state(pool[rng() % pool.size()], rng);
        const Isometry& g = gs[rng() % 3];
        int n = dmode(rng);
        FockState lhs = apply_automorphism_state(g, mode_apply(u, n, w));
        FockState rhs = mode_apply(apply_automorphism_state(g, u), n,
                                   apply_automorphism_state(g, w));
        if (!(lhs == rhs)) ++failures;
    }
    rep.add(std::to_string(checks) + " automorphism equivariance instances",
            failures == 0, "0 failures", std::to_string(failures) + " failures");
    return rep;
}

Report suite_ov_annihilation(const Catalog& cat, ZhuReducer& red,
                             const Classifier& cls, int checks, uint64_t seed) {
    Report rep;
    rep.suite = "ov-annihilation";
    std::mt19937_64 rng(seed);
    (void)cat;

    // tau-invariant graded pieces; pairs capped at total weight 6 to keep
    // the reduction inside the tested range
    std::vector<std::vector<FockState>> pool;
    for (long wt = 0; wt <= 4; ++wt)
        pool.push_back(graded_basis({Klein::O, 0}, rat(wt), 0));

    std::vector<const ModuleCard*> one_dim;
    for (auto& m : cls.cards())
        if (m.card.dim == 1) one_dim.push_back(&m.card);

    int failures = 0;
    for (int i = 0; i < checks; ++i) {
        long wu = 1 + rng() % 4;
        long wv = 1 + rng() % std::min<long>(4, 6 - wu);
        FockState u = random_state(pool[wu], rng);
        FockState v = random_state(pool[wv], rng);
        FockState ov = circ(u, v);
        if (ov.is_zero()) continue;
        ScalarPoly p = red.reduce_to_scalar(ov);
        for (auto* card : one_dim) {
            std::array<FieldElem, 7> vals;
            for (int k = 0; k < 7; ++k) vals[k] = card->mats[k][0];
            if (!eval_scalar(p, vals).is_zero()) ++failures;
        }
    }
    rep.add(std::to_string(checks) + " random [u o v] against " +
                std::to_string(one_dim.size()) + " one-dimensional tops",
            failures == 0, "0 failures", std::to_string(failures) + " failures");
    return rep;
}

Report suite_star_commutativity(const Catalog& cat, ZhuReducer& red,
                                const Classifier& cls) {
    Report rep;
    rep.suite = "star-commutativity";
    std::vector<const ModuleCard*> one_dim;
    for (auto& m : cls.cards())
        if (m.card.dim == 1) one_dim.push_back(&m.card);
    const FockState* gens[5] = {&cat.w1(), &cat.w2(), &cat.J(), &cat.K(), &cat.P()};
    static const char* names[5] = {"w1", "w2", "J", "K", "P"};
    const int ids[5] = {0, 1, 2, 3, 4};
    for (int i = 0; i < 5; ++i) {
        for (int j = i; j < 5; ++j) {
            ScalarPoly comm =
                red.reduce_to_scalar(star(*gens[i], *gens[j]) - star(*gens[j], *gens[i]));
            ScalarPoly prod =
                red.reduce_to_scalar(star(*gens[i], *gens[j])) -
                sp_term(FieldElem(1), {{ids[i], 1}}) * sp_term(FieldElem(1), {{ids[j], 1}});
            bool ok = true;
            for (auto* card : one_dim) {
                std::array<FieldElem, 7> vals;
                for (int k = 0; k < 7; ++k) vals[k] = card->mats[k][0];
                ok = ok && eval_scalar(comm, vals).is_zero() &&
                     eval_scalar(prod, vals).is_zero();
            }
            rep.add(std::string("[") + names[i] + "*" + names[j] +
                        "] commutes and multiplies on scalars",
                    ok);
        }
    }
    return rep;
}

}  // namespace vltau
