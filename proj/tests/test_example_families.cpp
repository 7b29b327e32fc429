#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "s2t/example_families.hpp"
#include "s2t/galois_field.hpp"

using namespace s2t;

TEST_CASE("GF(5), scaling a=2: 1 (+) 1 = 3") {
    NearDomain d = make_example({5, Family::scaling, 2});
    // -1 * 2^-1 + 1 = -3 + 1 = 3 mod 5
    CHECK(d.add(1, 1) == 3);
}

TEST_CASE("GF(5), inverse family: 1 (+) 2 = 1") {
    NearDomain d = make_example({5, Family::inverse});
    CHECK(d.add(1, 2) == 1);  // 1*4 + 2 = 6 = 1 mod 5
}

TEST_CASE("GF(3), scaling a=1 degenerates to x(+)y = -x+y") {
    NearDomain d = make_example({3, Family::scaling, 1});
    GaloisField f = GaloisField::make(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 1; y < 3; ++y) CHECK(d.add(x, y) == f.add(f.neg(x), y));
    for (int x = 1; x < 3; ++x) CHECK(d.sub(x, x) == 0);
}

TEST_CASE("every example instance validates") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        for (int a = 1; a < q; ++a) {
            NearDomain d = make_example({q, Family::scaling, a});
            INFO("scaling q=" << q << " a=" << a);
            CHECK(validate_near_domain(d).report.ok());
        }
        NearDomain d = make_example({q, Family::inverse});
        INFO("inverse q=" << q);
        CHECK(validate_near_domain(d).report.ok());
    }
}

TEST_CASE("scaling family formulas: r = -a^-1 and v = a^-2") {
    for (int q : {5, 7}) {
        for (int a = 1; a < q; ++a) {
            ExampleSpec spec{q, Family::scaling, a};
            NearDomain d = make_example(spec);
            NdValidation v = validate_near_domain(d);
            REQUIRE(v.report.ok());
            Report rep = verify_example_formulas(spec, d, *v.witnesses);
            INFO("q=" << q << " a=" << a << "\n" << rep.to_text());
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("GF(7), scaling a=3: v(z) = a^-2 = 4 for every z") {
    // oracle: a^-2 mod 7 via extended Euclid, inv(3) = 5, 5^2 = 25 = 4
    const int expected = oracle::modpow(oracle::egcd_inverse(3, 7), 2, 7);
    REQUIRE(expected == 4);
    NdValidation v = validate_near_domain(make_example({7, Family::scaling, 3}));
    REQUIRE(v.report.ok());
    for (int z = 1; z < 7; ++z) CHECK(v.witnesses->v_at(z) == expected);
}

TEST_CASE("inverse family formulas: h = z^-1 everywhere, r matches the closed form") {
    for (int q : {5, 7}) {
        ExampleSpec spec{q, Family::inverse};
        NearDomain d = make_example(spec);
        NdValidation v = validate_near_domain(d);
        REQUIRE(v.report.ok());
        Report rep = verify_example_formulas(spec, d, *v.witnesses);
        INFO("q=" << q << "\n" << rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("inverse family over GF(5): frozen r witnesses") {
    // direct A6 arithmetic mod 5: (x(+)2)(+)1 = 4x+3 and x r (+) 3 = 4xr+3
    // force r(2,1) = 1; (x(+)1)(+)1 = x+2 against 4xr+2 forces r(1,1) = 4.
    NdValidation v = validate_near_domain(make_example({5, Family::inverse}));
    REQUIRE(v.report.ok());
    CHECK(v.witnesses->r_at(2, 1) == 1);
    CHECK(v.witnesses->r_at(1, 1) == 4);
    // closed form y^2 (1+yz)^-2 agrees: 4*(3)^-2 = 4*4 = 16 = 1 and 1*(2)^-2 = 4
    CHECK(oracle::modpow(oracle::egcd_inverse(3, 5), 2, 5) * 4 % 5 == 1);
    CHECK(oracle::modpow(oracle::egcd_inverse(2, 5), 2, 5) == 4);
}

TEST_CASE("h cells of the inverse family count (q-1)^2") {
    NdValidation v = validate_near_domain(make_example({5, Family::inverse}));
    REQUIRE(v.report.ok());
    GaloisField f = GaloisField::make(5);
    int cells = 0;
    for (int y = 1; y < 5; ++y)
        for (int z = 1; z < 5; ++z) {
            CHECK(v.witnesses->h_at(y, z) == f.inv(z));
            ++cells;
        }
    CHECK(cells == 16);
}

TEST_CASE("scaling family needs a nonzero a") {
    CHECK_THROWS_AS(make_example({5, Family::scaling, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_example({5, Family::scaling, 5}), std::invalid_argument);
    CHECK_THROWS_AS(make_example({6, Family::inverse}), std::invalid_argument);
}

TEST_CASE("field_near_domain equals the scaling family at a = -1") {
    GaloisField f = GaloisField::make(7);
    NearDomain d = field_near_domain(f);
    NearDomain e = make_example({7, Family::scaling, f.neg(1)});
    CHECK(d == e);
    for (int x = 0; x < 7; ++x)
        for (int y = 1; y < 7; ++y) CHECK(d.add(x, y) == f.add(x, y));
}
