#include "doctest.h"

#include "vltau/charq.hpp"

using namespace vltau;

static Catalog& cat() {
    static Catalog c;
    return c;
}

TEST_CASE("coset characters") {
    QSeries vl = coset_character({Klein::O, 0}, rat(4));
    CHECK(vl.at(rat(0)) == 1);
    CHECK(vl.at(rat(1)) == 2);
    CHECK(vl.at(rat(2)) == 11);
    CHECK(vl.at(rat(3)) == 22);
    // matches the enumerated graded bases
    for (long n = 0; n <= 4; ++n)
        CHECK(vl.at(rat(n)) == (long)graded_basis({Klein::O, 0}, rat(n)).size());
    // V_{L^{(0,1)}} leads with 3 q^{2/3}
    QSeries v01 = coset_character({Klein::O, 1}, rat(2));
    CHECK(v01.leading_exponent() == rat(2, 3));
    CHECK(v01.at(rat(2, 3)) == 3);
    // V_{L^{(c,1)}} leads at q^{1/6}
    CHECK(coset_character({Klein::C, 1}, rat(2)).leading_exponent() == rat(1, 6));
}

TEST_CASE("minimal model characters") {
    QSeries i0 = minimal_model_character(rat(1, 2), rat(0), rat(6));
    CHECK(i0.at(rat(0)) == 1);
    CHECK(i0.at(rat(1)) == 0);
    CHECK(i0.at(rat(2)) == 1);
    CHECK(i0.at(rat(3)) == 1);
    CHECK(i0.at(rat(4)) == 2);
    CHECK(minimal_model_character(rat(4, 5), rat(2, 3), rat(2)).leading_exponent() ==
          rat(2, 3));
    CHECK_THROWS(minimal_model_character(rat(1, 3), rat(0), rat(2)));
    CHECK_THROWS(minimal_model_character(rat(1, 2), rat(1, 3), rat(2)));
}

TEST_CASE("eigenspace characters of the commutant pieces") {
    // ch M_t^0 begins 1 + q^2 + q^3 + 2 q^4
    QSeries mt0 = eigenspace_character(cat(), {Klein::O, 0}, EigenSel::MtPart, rat(4));
    CHECK(mt0.at(rat(0)) == 1);
    CHECK(mt0.at(rat(1)) == 0);
    CHECK(mt0.at(rat(2)) == 1);
    CHECK(mt0.at(rat(3)) == 2);  // L(4/5,0) at grade 3 plus the L(4/5,3) head
    QSeries wt0 = eigenspace_character(cat(), {Klein::O, 0}, EigenSel::WtPart, rat(2));
    CHECK(wt0.leading_exponent() == rat(2, 5));
    QSeries wka = eigenspace_character(cat(), {Klein::A, 0}, EigenSel::WkPart, rat(2));
    CHECK(wka.leading_exponent() == rat(1, 10));
    // cross-check against the alternating-sum formula
    QSeries mm = minimal_model_character(rat(4, 5), rat(0), rat(4)) +
                 minimal_model_character(rat(4, 5), rat(3), rat(4));
    CHECK(mt0.agree(mm));
}

TEST_CASE("twisted sector characters") {
    Report r = verify_twisted_characters(rat(4));
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("decomposition identities at low grade") {
    Report r = verify_decompositions(cat(), rat(3));
    INFO(r.to_text());
    CHECK(r.all_pass());
}
