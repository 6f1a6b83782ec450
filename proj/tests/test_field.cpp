#include "doctest.h"

#include <random>

#include "vltau/field.hpp"

using namespace vltau;

TEST_CASE("cube root of unity") {
    FieldElem x = xi();
    CHECK(x * x * x == FieldElem(1));
    CHECK(x * x + x + FieldElem(1) == FieldElem(0));
    CHECK(sqrt_m3() * sqrt_m3() == FieldElem(-3));
}

TEST_CASE("inverse") {
    FieldElem a{rat(1), rat(1)};  // 1 + sqrt(-3)
    FieldElem inv = a.inverse();
    CHECK(inv == FieldElem(rat(1, 4), rat(-1, 4)));
    CHECK(a * inv == FieldElem(1));
    CHECK_THROWS(FieldElem(0).inverse());
}

TEST_CASE("sqrt_in_field basics") {
    CHECK(sqrt_in_field(FieldElem(4)) == FieldElem(2));
    CHECK(sqrt_in_field(FieldElem(rat(-2), rat(2))) == FieldElem(rat(1), rat(1)));
    CHECK(!sqrt_in_field(FieldElem(-1)).has_value());
    CHECK(sqrt_in_field(FieldElem(-3)) == sqrt_m3());
    CHECK(sqrt_in_field(FieldElem(0)) == FieldElem(0));
}

TEST_CASE("sqrt recovers random squares") {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<long> d(-30, 30);
    int found = 0;
    for (int i = 0; i < 1000; ++i) {
        long dn = d(rng) % 7 + 8;
        FieldElem x{rat(d(rng), dn), rat(d(rng), dn)};
        auto r = sqrt_in_field(x * x);
        REQUIRE(r.has_value());
        CHECK((*r == x || *r == -x));
        if (!x.is_zero()) ++found;
    }
    CHECK(found > 900);
}

TEST_CASE("field arithmetic laws on random elements") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int i = 0; i < 200; ++i) {
        FieldElem a{rat(d(rng), 7), rat(d(rng), 5)};
        FieldElem b{rat(d(rng), 3), rat(d(rng), 11)};
        FieldElem c{rat(d(rng), 2), rat(d(rng), 13)};
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("render and parse round trip") {
    FieldElem a{rat(-3, 7), rat(5, 2)};
    CHECK(parse_field_elem(to_string(a)) == a);
    CHECK(to_string(a) == "-3/7+5/2*sqrt(-3)");
    CHECK(parse_field_elem("2") == FieldElem(2));
    CHECK(parse_field_elem("sqrt(-3)") == sqrt_m3());
    CHECK(parse_field_elem("-sqrt(-3)") == -sqrt_m3());
    CHECK(parse_field_elem("1/2 - 3/4*sqrt(-3)") == FieldElem(rat(1, 2), rat(-3, 4)));
    CHECK(to_string(FieldElem(0)) == "0");
}

TEST_CASE("rational sqrt") {
    CHECK(sqrt_rational(rat(49, 64)) == rat(7, 8));
    CHECK(!sqrt_rational(rat(2)).has_value());
    CHECK(!sqrt_rational(rat(-4)).has_value());
}
