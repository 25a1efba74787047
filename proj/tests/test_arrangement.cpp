#include <catch2/catch_amalgamated.hpp>

#include "octic/catalog.hpp"

using namespace octic;

static PlaneArrangement generic_planes() {
    PlaneArrangement arr;
    const int coeffs[8][4] = {{1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
                              {1, 1, 2, 3},  {1, 4, 9, 16}, {1, 2, 4, 8},  {3, 1, 4, 1}};
    for (auto& c : coeffs)
        arr.forms.push_back(
            LinearForm::from_rationals({Rat(c[0]), Rat(c[1]), Rat(c[2]), Rat(c[3])}));
    arr.validate();
    return arr;
}

TEST_CASE("catalog lookup and parsing") {
    const auto& a53 = parse_arrangement("X_53");
    CHECK(a53.h11 == 53);
    CHECK(a53.h12 == 1);
    CHECK(a53.wt4_label == "32k4B1");
    std::vector<std::string> want{"x", "y", "z", "t", "x+y", "z+t", "x-y-z-t", "x+y-z+t"};
    REQUIRE(a53.forms.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(a53.forms[i].str() == want[i]);

    const auto& first4 = parse_arrangement("X_4");  // first row of the group
    CHECK(first4.id == "4a");
    CHECK(first4.h11 == 61);
    CHECK(first4.wt4_label == "32k4A1");
    CHECK(first4.wt2_label == "32A1");

    CHECK(builtin_catalog().group("4").size() == 3);
    CHECK(builtin_catalog().group("13").size() == 3);
    CHECK(builtin_catalog().group("267").size() == 3);
    CHECK(builtin_catalog().entries.size() == 23);

    CHECK_THROWS_AS(parse_octic_equation("xyzt(x+y)(y+z)(x-z-t)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_arrangement("X_999"), std::invalid_argument);

    auto arr3 = parse_arrangement("xyzt(x+y)(y+z)(z+t)(t+x)");
    CHECK(arr3.forms.size() == 8);
    auto a4c = parse_arrangement("4c");
    CHECK(a4c.constant == 2);
}

TEST_CASE("inventory of generic planes") {
    auto inv = singularity_inventory(generic_planes());
    CHECK(inv.n_double() == 28);
    CHECK(inv.n_triple() == 0);
    CHECK(inv.fourfold_points.empty());
    CHECK(inv.fivefold_points.empty());
    CHECK(cy_admissible(inv));
}

TEST_CASE("inventory of arrangement 53") {
    auto inv = singularity_inventory(parse_arrangement("53"));
    CHECK(cy_admissible(inv));
    // the catalog fourfold points (0:0:0:1) and (1:0:0:0)
    auto has_point = [&](std::array<Rat, 4> p) {
        for (const auto& sp : inv.fourfold_points)
            if (sp.coords == p) return true;
        return false;
    };
    CHECK(has_point({Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(has_point({Rat(1), Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("all catalog arrangements are admissible") {
    for (const auto& arr : builtin_catalog().entries) {
        auto inv = singularity_inventory(arr);
        INFO("arrangement " << arr.id);
        CHECK(cy_admissible(inv));
    }
}

TEST_CASE("admissibility rejections") {
    PlaneArrangement six;  // six planes through (0,0,0,1), two generic
    for (auto c : std::vector<std::array<int, 4>>{{1, 0, 0, 0},
                                                  {0, 1, 0, 0},
                                                  {0, 0, 1, 0},
                                                  {1, 1, 0, 0},
                                                  {0, 1, 1, 0},
                                                  {1, 0, 1, 0},
                                                  {0, 0, 0, 1},
                                                  {1, 2, 3, 4}})
        six.forms.push_back(LinearForm::from_rationals({Rat(c[0]), Rat(c[1]), Rat(c[2]), Rat(c[3])}));
    six.validate();
    CHECK_FALSE(cy_admissible(singularity_inventory(six)));

    PlaneArrangement fourline;  // four planes through the line x=y=0
    for (auto c : std::vector<std::array<int, 4>>{{1, 0, 0, 0},
                                                  {0, 1, 0, 0},
                                                  {1, 1, 0, 0},
                                                  {1, 2, 0, 0},
                                                  {0, 0, 1, 0},
                                                  {0, 0, 0, 1},
                                                  {1, 1, 2, 3},
                                                  {3, 1, 4, 1}})
        fourline.forms.push_back(
            LinearForm::from_rationals({Rat(c[0]), Rat(c[1]), Rat(c[2]), Rat(c[3])}));
    fourline.validate();
    CHECK_FALSE(cy_admissible(singularity_inventory(fourline)));
}

TEST_CASE("good primes") {
    auto ps = good_primes(parse_arrangement("53"), 97);
    CHECK(ps == primes_up_to(97));
    CHECK(good_primes(parse_arrangement("53"), 4).empty());
}

TEST_CASE("inventory is reduction-stable on good primes") {
    for (const char* id : {"53", "8", "275", "3"}) {
        auto arr = parse_arrangement(id);
        auto sig = singularity_inventory(arr).signature();
        for (auto p : good_primes(arr, 31)) {
            PrimeField f(p);
            auto forms = forms_mod_p(arr, f);
            CHECK(singularity_inventory_over<Zp>(forms).signature() == sig);
        }
    }
}

TEST_CASE("cross ratio") {
    CHECK(cross_ratio(ProjQ(Rat(-1)), ProjQ(0), ProjQ(1), ProjQ::infinity()) == Rat(-1));
    CHECK_THROWS_AS(cross_ratio(ProjQ(0), ProjQ(1), ProjQ(2), ProjQ(2)), std::invalid_argument);

    // invariance under random fractional-linear maps
    std::vector<Moebius> maps = {{Rat(2), Rat(1), Rat(1), Rat(1)},
                                 {Rat(0), Rat(1), Rat(1), Rat(0)},
                                 {Rat(3), Rat(-2), Rat(5), Rat(7)}};
    std::vector<ProjQ> q{ProjQ(Rat(2)), ProjQ(Rat(-3)), ProjQ(Rat(1, 2)), ProjQ::infinity()};
    Rat base = cross_ratio(q[0], q[1], q[2], q[3]);
    for (const auto& m : maps) {
        m.validate();
        CHECK(cross_ratio(m.apply(q[0]), m.apply(q[1]), m.apply(q[2]), m.apply(q[3])) == base);
    }
}

TEST_CASE("cross ratios of the birationality quadruples agree as functions") {
    // (0, y−1, y−1/2, y/2−z) versus (0, y/2, z/2, y/3+z/3)
    LinearFunc2 z0{0, 0, 0};
    auto r1 = cross_ratio_functions(z0, LinearFunc2{-1, 1, 0}, LinearFunc2{Rat(-1, 2), 1, 0},
                                    LinearFunc2{0, Rat(1, 2), -1});
    auto r2 = cross_ratio_functions(z0, LinearFunc2{0, Rat(1, 2), 0}, LinearFunc2{0, 0, Rat(1, 2)},
                                    LinearFunc2{0, Rat(1, 3), Rat(1, 3)});
    CHECK(cross_ratios_equal(r1, r2));
    auto r3 = cross_ratio_functions(z0, LinearFunc2{0, Rat(1, 2), 0}, LinearFunc2{0, 0, Rat(1, 2)},
                                    LinearFunc2{0, Rat(1, 3), Rat(1, 4)});
    CHECK_FALSE(cross_ratios_equal(r1, r3));
}

TEST_CASE("ruled planes") {
    auto check_contains = [](const std::string& id, const std::string& plane) {
        auto arr = parse_arrangement(id);
        auto planes = find_ruled_planes(arr, singularity_inventory(arr));
        for (const auto& f : planes)
            if (f.str() == plane) return true;
        return false;
    };
    CHECK(check_contains("4a", "x-z"));
    CHECK(check_contains("4b", "y+2z-t"));
    CHECK(check_contains("4c", "2x+y-2t"));
    CHECK(check_contains("244", "x+y+z-t"));
    CHECK(check_contains("269", "x+2y-z"));
    CHECK(check_contains("269", "y-2z+t"));

    auto gen = generic_planes();
    CHECK(find_ruled_planes(gen, singularity_inventory(gen)).empty());
}

TEST_CASE("kummer splits") {
    CHECK(find_kummer_splits(parse_arrangement("13a")).size() >= 2);
    CHECK(find_kummer_splits(parse_arrangement("154")).empty());
    CHECK(find_kummer_splits(generic_planes()).empty());
    for (const auto& ks : find_kummer_splits(parse_arrangement("53"))) {
        // each quadruple satisfies the rank-3 common point condition exactly
        auto arr = parse_arrangement("53");
        auto forms = rational_forms(arr);
        for (auto quad : {ks.first, ks.second}) {
            Matrix<Rat> m;
            for (int i : quad)
                m.push_back({forms[i][0], forms[i][1], forms[i][2], forms[i][3]});
            CHECK(rank(m) == 3);
        }
    }
}

TEST_CASE("involutions") {
    auto arr53 = parse_arrangement("53");
    REQUIRE(arr53.involutions.size() == 1);
    auto chk = check_involution(arr53, arr53.involutions[0]);
    CHECK(chk.msquared_scalar == 1);
    CHECK(chk.octic_scalar == -1);  // the scalar picked up by the octic of arr 53

    auto arr267 = parse_arrangement("267a");
    REQUIRE(arr267.involutions.size() == 1);
    auto chk267 = check_involution(arr267, arr267.involutions[0]);
    CHECK(chk267.msquared_scalar == 1);
    CHECK(chk267.octic_scalar == 1);

    auto arr274 = parse_arrangement("274");
    auto chk274 = check_involution(arr274, arr274.involutions[0]);
    CHECK(chk274.msquared_scalar == 1);
    CHECK(chk274.octic_scalar == 1);

    // identity is a valid involution with trivial permutation
    InvolutionMatrix id(4, std::vector<Rat>(4, Rat(0)));
    for (int i = 0; i < 4; ++i) id[i][i] = 1;
    auto trivial = check_involution(arr53, id);
    CHECK(trivial.octic_scalar == 1);
    for (int i = 0; i < 8; ++i) CHECK(trivial.permutation[i] == i);

    // applying a catalog involution twice returns every form to itself
    for (const auto& arr : builtin_catalog().entries)
        for (const auto& M : arr.involutions) {
            auto c = check_involution(arr, M);
            for (int i = 0; i < 8; ++i) CHECK(c.permutation[c.permutation[i]] == i);
        }

    // a matrix that does not preserve the arrangement
    InvolutionMatrix bad(4, std::vector<Rat>(4, Rat(0)));
    bad[0][0] = 1;
    bad[1][1] = 2;
    bad[2][2] = 3;
    bad[3][3] = 4;
    CHECK_THROWS_AS(check_involution(arr53, bad), std::invalid_argument);
}

TEST_CASE("kummer family splits") {
    KummerFamily fam{Rat(8), Rat(1, 9)};
    fam.validate();
    auto arr = fam.rational_split();
    REQUIRE(arr.has_value());
    CHECK(arr->forms.size() == 8);
    CHECK(arr->h11 == 56);
    CHECK(arr->h12 == 2);

    KummerFamily sing{Rat(-1), Rat(1, 9)};
    auto arr13 = sing.rational_split();
    REQUIRE(arr13.has_value());
    CHECK(arr13->h11 == 61);
    CHECK(arr13->h12 == 1);

    KummerFamily irr{Rat(8), Rat(2)};
    CHECK(!irr.rational_split().has_value());
    CHECK(irr.split_forms().size() == 8);

    CHECK_THROWS_AS((KummerFamily{Rat(0), Rat(1, 9)}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((KummerFamily{Rat(8), Rat(1)}.validate()), std::invalid_argument);
}

TEST_CASE("newform label normalization") {
    auto r = normalize_form_label("32k4B1");
    CHECK(r.level == 32);
    CHECK(r.weight == 4);
    CHECK(r.label == "B1");
    CHECK(normalize_form_label("32A1") == normalize_form_label("32k2A"));
    CHECK(normalize_form_label("8k3A[1,1]").weight == 3);
    CHECK(normalize_form_label("256k2D").label == "D1");
}
