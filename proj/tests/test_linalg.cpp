#include <catch2/catch_amalgamated.hpp>

#include "octic/finite_field.hpp"
#include "octic/linalg.hpp"
#include "octic/rational.hpp"

using namespace octic;

TEST_CASE("rank and kernel over Q") {
    Matrix<Rat> m = {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, -1, 1}};
    CHECK(rank(m) == 3);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    // kernel vector is the common point (0,0,1,1) of the four planes
    auto& v = ker[0];
    CHECK(v[0] == 0);
    CHECK(v[1] == 0);
    CHECK(v[2] == v[3]);
    CHECK(v[2] != 0);
}

TEST_CASE("determinant and inverse over Q") {
    Matrix<Rat> m = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}};
    CHECK(det(m) == 1);  // the arr-53 involution matrix
    auto inv = mat_inverse(m);
    auto prod = mat_mul(m, inv);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(prod[i][j] == Rat(i == j ? 1 : 0));
}

TEST_CASE("kernel over F_p via the Zp wrapper") {
    PrimeField f(7);
    auto z = [&](int v) { return Zp(f, f.from_int(v)); };
    Matrix<Zp> m = {{z(1), z(2), z(3)}, {z(2), z(4), z(6)}, {z(1), z(0), z(1)}};
    CHECK(rank(m) == 2);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    for (auto& row : std::vector<std::vector<Zp>>{{z(1), z(2), z(3)}, {z(1), z(0), z(1)}}) {
        Zp acc = z(0);
        for (int j = 0; j < 3; ++j) acc = acc + row[j] * ker[0][j];
        CHECK(acc == z(0));
    }
}

TEST_CASE("moebius transport") {
    Moebius m = Moebius::through(ProjQ(0), ProjQ(1), ProjQ::infinity(),
                                 ProjQ(Rat(-1)), ProjQ(0), ProjQ(1));
    CHECK(m.apply(ProjQ(0)) == ProjQ(Rat(-1)));
    CHECK(m.apply(ProjQ(1)) == ProjQ(0));
    CHECK(m.apply(ProjQ::infinity()) == ProjQ(1));
}
