#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "octic/finite_field.hpp"

using namespace octic;

TEST_CASE("tower construction picks deterministic non-residues") {
    CHECK(field_tower(5).d() == 2);   // squares mod 5 are {1,4}
    CHECK(field_tower(7).d() == 3);   // squares mod 7 are {1,2,4}
    CHECK(field_tower(11).d() == 2);
    CHECK_THROWS_AS(field_tower(4), std::invalid_argument);
    CHECK_THROWS_AS(field_tower(9), std::invalid_argument);
    CHECK_THROWS_AS(field_tower(2), std::invalid_argument);
}

TEST_CASE("quadratic character basics") {
    PrimeField f5(5), f7(7);
    CHECK(f5.chi(4) == 1);
    CHECK(f5.chi(0) == 0);
    CHECK(f7.chi(3) == -1);
}

TEST_CASE("character table agrees with Euler criterion for p <= 97") {
    for (auto p : primes_up_to(97)) {
        PrimeField f(p);
        for (std::uint32_t a = 0; a < p; ++a) CHECK(f.chi(a) == f.chi_euler(a));
    }
}

TEST_CASE("character is multiplicative and sums to zero") {
    for (auto p : {5u, 13u, 41u, 97u}) {
        PrimeField f(p);
        long long sum = 0;
        for (std::uint32_t a = 0; a < p; ++a) sum += f.chi(a);
        CHECK(sum == 0);
        std::mt19937 rng(p);
        for (int i = 0; i < 50; ++i) {
            std::uint32_t a = std::uint32_t(rng() % p), b = std::uint32_t(rng() % p);
            CHECK(f.chi(f.mul(a, b)) == f.chi(a) * f.chi(b));
        }
    }
}

TEST_CASE("square roots in F_p") {
    PrimeField f7(7);
    CHECK(f7.sqrt(2).value() == 3);  // 3^2 = 2 mod 7; canonical root is the smaller one
    CHECK(!f7.sqrt(3).has_value());
    CHECK(f7.sqrt(0).value() == 0);
    for (auto p : {5u, 29u, 97u}) {
        PrimeField f(p);
        int squares = 0;
        for (std::uint32_t a = 1; a < p; ++a) {
            if (auto r = f.sqrt(a)) {
                ++squares;
                CHECK(f.mul(*r, *r) == a);
                CHECK(*r <= p - *r);
            }
        }
        CHECK(squares == int((p - 1) / 2));
    }
}

TEST_CASE("frobenius on F_25 with alpha^2=2 sends alpha to 4*alpha") {
    FieldTower T(5);
    REQUIRE(T.d() == 2);
    Fp2 alpha{0, 1};
    Fp2 im = T.frob2(alpha);
    CHECK(im == Fp2{0, 4});
}

TEST_CASE("frobenius fixes F_p and squares to the identity on F_p2") {
    for (auto p : {5u, 7u, 13u}) {
        FieldTower T(p);
        for (std::uint32_t a = 0; a < p; ++a) CHECK(T.frob2(T.embed2(a)) == T.embed2(a));
        std::mt19937 rng(p);
        for (int i = 0; i < 40; ++i) {
            Fp2 x{std::uint32_t(rng() % p), std::uint32_t(rng() % p)};
            CHECK(T.frob2(T.frob2(x)) == x);
            CHECK(T.pow2(x, p) == T.frob2(x));  // frobenius really is x^p
        }
    }
}

TEST_CASE("frobenius is a field automorphism on samples") {
    for (auto p : {7u, 11u, 23u}) {
        FieldTower T(p);
        std::mt19937 rng(2 * p + 1);
        for (int i = 0; i < 60; ++i) {
            Fp2 x{std::uint32_t(rng() % p), std::uint32_t(rng() % p)}, y{std::uint32_t(rng() % p), std::uint32_t(rng() % p)};
            CHECK(T.frob2(T.add2(x, y)) == T.add2(T.frob2(x), T.frob2(y)));
            CHECK(T.frob2(T.mul2(x, y)) == T.mul2(T.frob2(x), T.frob2(y)));
            Fp4 u{x, y}, v{y, x};
            CHECK(T.frob4(T.mul4(u, v)) == T.mul4(T.frob4(u), T.frob4(v)));
        }
    }
}

TEST_CASE("frobenius order four on F_p4, order two fixing F_p2") {
    for (auto p : {5u, 13u}) {
        FieldTower T(p);
        std::mt19937 rng(p + 99);
        for (int i = 0; i < 25; ++i) {
            Fp4 u{{std::uint32_t(rng() % p), std::uint32_t(rng() % p)}, {std::uint32_t(rng() % p), std::uint32_t(rng() % p)}};
            Fp4 f2 = T.frob4(T.frob4(u));
            Fp4 f4 = T.frob4(T.frob4(f2));
            CHECK(f4 == u);
            Fp4 emb = T.embed4(Fp2{std::uint32_t(rng() % p), std::uint32_t(rng() % p)});
            CHECK(T.frob4(T.frob4(emb)) == emb);
        }
    }
}

TEST_CASE("square roots in F_p2 and lifts to F_p4") {
    for (auto p : {5u, 7u, 11u, 97u}) {
        FieldTower T(p);
        std::mt19937 rng(p * 3 + 1);
        int squares_checked = 0, nonsquares_checked = 0;
        for (int i = 0; i < 200; ++i) {
            Fp2 x{std::uint32_t(rng() % p), std::uint32_t(rng() % p)};
            if (T.is_zero(x)) continue;
            auto r = T.sqrt2(x);
            if (T.chi2(x) == 1) {
                REQUIRE(r.has_value());
                CHECK(T.mul2(*r, *r) == x);
                CHECK(FieldTower::lex_less(*r, T.neg2(*r)));
                ++squares_checked;
            } else {
                CHECK(!r.has_value());
                // every non-square of F_p2 still has a root one level up
                Fp4 u = T.sqrt4_of_quad(x);
                CHECK(T.mul4(u, u) == T.embed4(x));
                ++nonsquares_checked;
            }
        }
        CHECK(squares_checked > 0);
        CHECK(nonsquares_checked > 0);
    }
}

TEST_CASE("exactly (q-1)/2 nonzero squares in F_p2") {
    FieldTower T(7);
    int count = 0;
    for (std::uint32_t a = 0; a < 7; ++a)
        for (std::uint32_t b = 0; b < 7; ++b) {
            Fp2 x{a, b};
            if (!T.is_zero(x) && T.chi2(x) == 1) ++count;
        }
    CHECK(count == (49 - 1) / 2);
}
