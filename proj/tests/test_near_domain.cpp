#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "s2t/example_families.hpp"
#include "s2t/galois_field.hpp"
#include "s2t/near_domain.hpp"

using namespace s2t;

TEST_CASE("GF(3) with field addition and L(x) = -x validates with trivial witnesses") {
    NearDomain d = field_near_domain(GaloisField::make(3));
    NdValidation v = validate_near_domain(d);
    INFO(v.report.to_text());
    REQUIRE(v.report.ok());
    const WitnessTables& w = *v.witnesses;
    for (int y = 1; y < 3; ++y)
        for (int z = 1; z < 3; ++z) {
            CHECK(w.h_at(y, z) == z);
            if (d.add(y, z) != 0) CHECK(w.r_at(y, z) == 1);
        }
    for (int z = 1; z < 3; ++z) CHECK(w.v_at(z) == 1);
}

TEST_CASE("GF(5) inverse family validates with h(y,z) = z^-1") {
    GaloisField f = GaloisField::make(5);
    NearDomain d = make_example({5, Family::inverse});
    NdValidation v = validate_near_domain(d);
    REQUIRE(v.report.ok());
    for (int y = 1; y < 5; ++y)
        for (int z = 1; z < 5; ++z) CHECK(v.witnesses->h_at(y, z) == f.inv(z));
}

TEST_CASE("a corrupted addition cell is caught with the cell reported") {
    GaloisField f = GaloisField::make(3);
    std::vector<std::vector<int>> add(3, std::vector<int>(2)), sub(3, std::vector<int>(2));
    for (int x = 0; x < 3; ++x)
        for (int y = 1; y < 3; ++y) {
            add[x][y - 1] = f.add(x, y);
            sub[x][y - 1] = f.sub(x, y);
        }
    add[0][0] = 0;  // 0+1 corrupted (correct value 1)
    NearDomain d(mul_group_of_field(f), add, sub, {2, 1});
    NdValidation v = validate_near_domain(d);
    REQUIRE_FALSE(v.report.ok());
    const CheckResult& f1 = v.report.first_failure();
    CHECK((f1.name.rfind("A1", 0) == 0 || f1.name.rfind("A2", 0) == 0));
    CHECK_FALSE(f1.detail.empty());
    CHECK_FALSE(v.witnesses.has_value());
}

TEST_CASE("structural errors are distinguished from axiom failures") {
    GaloisField f = GaloisField::make(3);
    NearDomain good = field_near_domain(f);
    std::vector<std::vector<int>> add(3, std::vector<int>(2)), sub(3, std::vector<int>(2));
    for (int x = 0; x < 3; ++x)
        for (int y = 1; y < 3; ++y) {
            add[x][y - 1] = f.add(x, y);
            sub[x][y - 1] = f.sub(x, y);
        }
    add[1][1] = 9;  // out of range
    NearDomain d(good.group(), add, sub, {2, 1});
    NdValidation v = validate_near_domain(d);
    CHECK(v.report.structural_failure());

    add[1][1] = f.add(1, 2);
    NearDomain bad_l(good.group(), add, sub, {2, 2});  // L repeats a value
    CHECK(validate_near_domain(bad_l).report.structural_failure());
}

TEST_CASE("lemma closed forms on field structures") {
    for (int q : {3, 5, 7}) {
        GaloisField f = GaloisField::make(q);
        NearDomain d = field_near_domain(f);
        NdValidation v = validate_near_domain(d);
        REQUIRE(v.report.ok());
        // L^2(z) = z for L(x) = -x, so v(z) = E(z)z = e; and x-z = x*e + (-z)
        for (int z = 1; z < q; ++z) CHECK(v.witnesses->v_at(z) == 1);
        Report lem = lemma_closed_forms(d, *v.witnesses);
        INFO("q=" << q << "\n" << lem.to_text());
        CHECK(lem.ok());
    }
}

TEST_CASE("lemma closed forms on the example families") {
    for (int q : {5, 7}) {
        NearDomain d = make_example({q, Family::inverse});
        NdValidation v = validate_near_domain(d);
        REQUIRE(v.report.ok());
        // L^2(z) = z for L(x) = -x^-1, so v(z) = e
        for (int z = 1; z < q; ++z) CHECK(v.witnesses->v_at(z) == 1);
        CHECK(lemma_closed_forms(d, *v.witnesses).ok());
    }
    // GF(7), L(x) = 3x: v(z) = E(L^2(z)) z = (9z)^-1 z = 2^-1 = 4
    NearDomain d = make_example({7, Family::scaling, 3});
    NdValidation v = validate_near_domain(d);
    REQUIRE(v.report.ok());
    for (int z = 1; z < 7; ++z) CHECK(v.witnesses->v_at(z) == 4);
    CHECK(lemma_closed_forms(d, *v.witnesses).ok());
}

TEST_CASE("classification flags") {
    SECTION("plain field: everything true, near-field candidate") {
        NearDomain d = field_near_domain(GaloisField::make(3));
        REQUIRE(validate_near_domain(d).report.ok());
        Classification c = classify(d);
        CHECK(c.additive_associative);
        CHECK(c.right_distributive);
        CHECK(c.left_distributive);
        CHECK(c.symmetric_zero);
        CHECK(c.l_additive);
        CHECK(c.zero_extension_loop);
        CHECK(c.near_field_candidate);
    }
    SECTION("GF(5) scaling a=2: bilaterally distributive and L-additive") {
        NearDomain d = make_example({5, Family::scaling, 2});
        REQUIRE(validate_near_domain(d).report.ok());
        Classification c = classify(d);
        CHECK(c.right_distributive);
        CHECK(c.left_distributive);
        CHECK(c.l_additive);
        CHECK_FALSE(c.additive_associative);
        CHECK_FALSE(c.near_field_candidate);
    }
    SECTION("GF(5) inverse family: L-additivity fails, symmetric zero holds") {
        NearDomain d = make_example({5, Family::inverse});
        REQUIRE(validate_near_domain(d).report.ok());
        Classification c = classify(d);
        CHECK_FALSE(c.l_additive);
        CHECK(c.symmetric_zero);
        for (int x = 1; x < 5; ++x) {
            CHECK(d.add(x, d.L(x)) == 0);
            CHECK(d.add(d.L(x), x) == 0);
        }
    }
}

TEST_CASE("classification agrees with the direct associativity oracle") {
    auto rows = [](const NearDomain& d) {
        std::vector<std::vector<int>> add(d.n(), std::vector<int>(d.n() - 1));
        for (int x = 0; x < d.n(); ++x)
            for (int y = 1; y < d.n(); ++y) add[x][y - 1] = d.add(x, y);
        return add;
    };
    for (int q : {3, 5, 7}) {
        NearDomain field = field_near_domain(GaloisField::make(q));
        CHECK(classify(field).additive_associative == oracle::add_associative(rows(field)));
        NearDomain inv = make_example({q, Family::inverse});
        CHECK(classify(inv).additive_associative == oracle::add_associative(rows(inv)));
        for (int a = 1; a < q; ++a) {
            NearDomain sc = make_example({q, Family::scaling, a});
            CHECK(classify(sc).additive_associative == oracle::add_associative(rows(sc)));
        }
    }
}

TEST_CASE("x -> x+y and x -> x-y are bijections of B for every fixed y") {
    for (const auto& d : {field_near_domain(GaloisField::make(5)),
                          make_example({5, Family::inverse}),
                          make_example({7, Family::scaling, 3})}) {
        REQUIRE(validate_near_domain(d).report.ok());
        const int n = d.n();
        for (int y = 1; y < n; ++y) {
            std::vector<bool> seen_add(n, false), seen_sub(n, false);
            for (int x = 0; x < n; ++x) {
                CHECK_FALSE(seen_add[d.add(x, y)]);
                seen_add[d.add(x, y)] = true;
                CHECK_FALSE(seen_sub[d.sub(x, y)]);
                seen_sub[d.sub(x, y)] = true;
            }
        }
    }
}

TEST_CASE("fixing x does not make y -> x+y injective in general") {
    // the right-loop axioms control the first argument only; the inverse
    // family gives a concrete collision
    NearDomain d = make_example({5, Family::inverse});
    REQUIRE(validate_near_domain(d).report.ok());
    CHECK(d.add(1, 1) == 2);
    CHECK(d.add(1, 3) == 2);
}

TEST_CASE("0x = 0 holds for every validated near-domain in the corpus") {
    for (const auto& d : {field_near_domain(GaloisField::make(7)),
                          make_example({5, Family::inverse}),
                          make_example({5, Family::scaling, 3})}) {
        REQUIRE(validate_near_domain(d).report.ok());
        for (int x = 1; x < d.n(); ++x) CHECK(d.mul(0, x) == 0);
    }
}
