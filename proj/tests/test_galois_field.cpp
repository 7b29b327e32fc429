#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "s2t/galois_field.hpp"
#include "s2t/group_table.hpp"

using namespace s2t;

TEST_CASE("GF(3): 1 + 2 = 0") {
    GaloisField f = GaloisField::make(3);
    CHECK(f.add(1, 2) == 0);
    CHECK(f.neg(1) == 2);
}

TEST_CASE("GF(4): x * x = x + 1 under the pinned modulus") {
    GaloisField f = GaloisField::make(2, 2);
    // value 2 encodes the polynomial x, value 3 encodes x + 1
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.add(2, 1) == 3);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.mul(3, 3) == 2);
}

TEST_CASE("GF(5): inverses match extended Euclid") {
    GaloisField f = GaloisField::make(5);
    CHECK(f.inv(2) == 3);
    for (int a = 1; a < 5; ++a) CHECK(f.inv(a) == oracle::egcd_inverse(a, 5));
}

TEST_CASE("prime fields match modular arithmetic") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        GaloisField f = GaloisField::make(p);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == (a + b) % p);
                CHECK(f.mul(a, b) == (a * b) % p);
            }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1},
                        {2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        GaloisField f = GaloisField::make(p, k);
        const int q = f.q();
        INFO("q = " << q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("every configured extension field has a valid multiplicative group") {
    for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                        {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        GaloisField f = GaloisField::make(p, k);
        INFO("q = " << f.q());
        CHECK(validate_group(mul_group_of_field(f)).ok());
    }
}

TEST_CASE("mul group of GF(3) is the two-element group") {
    GroupTable g = mul_group_of_field(GaloisField::make(3));
    CHECK(g.n() == 3);
    CHECK(g.mul(2, 2) == 1);
}

TEST_CASE("mul group of GF(4) is cyclic of order three") {
    GroupTable g = mul_group_of_field(GaloisField::make(2, 2));
    CHECK(g.mul(2, 2) == 3);
    CHECK(g.mul(2, 3) == 1);
    CHECK(g.mul(3, 3) == 2);
    CHECK(validate_group(g).ok());
}

TEST_CASE("bad parameters are rejected") {
    CHECK_THROWS_AS(GaloisField::make(4), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(GaloisField::make(6), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField::make(11, 2), std::invalid_argument);  // 121 > 64
    CHECK_THROWS_AS(GaloisField::make(3, 0), std::invalid_argument);
    GaloisField f = GaloisField::make(5);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("prime power factorization") {
    CHECK(GaloisField::factor_prime_power(8) == std::pair{2, 3});
    CHECK(GaloisField::factor_prime_power(9) == std::pair{3, 2});
    CHECK(GaloisField::factor_prime_power(7) == std::pair{7, 1});
    CHECK_FALSE(GaloisField::factor_prime_power(6).has_value());
    CHECK_FALSE(GaloisField::factor_prime_power(1).has_value());
}

TEST_CASE("pow handles negative exponents") {
    GaloisField f = GaloisField::make(7);
    CHECK(f.pow(3, -2) == oracle::modpow(oracle::egcd_inverse(3, 7), 2, 7));
    CHECK(f.pow(3, 0) == 1);
    CHECK(f.pow(3, 3) == 6);
}
