#include "doctest.h"

#include "dpz/dp2.hpp"

using namespace dpz;
using namespace dpz::dp2;

TEST_CASE("family constructors and smoothness") {
    const Fq& F5 = make_field(5, 1);
    CHECK_NOTHROW(make_family(Family::Klein, {}, F5));
    const Fq& F7 = make_field(7, 1);
    CHECK_THROWS_AS(make_family(Family::Klein, {}, F7), Error);  // singular at p = 7

    const Fq& F3 = make_field(3, 1);
    CHECK_NOTHROW(make_family(Family::Fermat, {}, F3));
    CHECK_NOTHROW(make_family(Family::Heisenberg, {F3.from_int(1)}, F3));
    CHECK_NOTHROW(make_family(Family::Heisenberg, {F3.from_int(0)}, F3));

    const Fq& F9 = make_field(3, 2);
    // s4 needs a outside F_3 when p = 3
    CHECK_THROWS_AS(make_family(Family::S4, {F9.from_int(1)}, F9), Error);
    CHECK_NOTHROW(make_family(Family::S4, {F9.gen()}, F9));
}

TEST_CASE("fermat detector: inflection criterion in char 3") {
    const Fq& F3 = make_field(3, 1);
    CHECK(is_fermat_equivalent(make_family(Family::Fermat, {}, F3).f));
    CHECK(is_fermat_equivalent(make_family(Family::Klein, {}, F3).f));
    CHECK(is_fermat_equivalent(make_family(Family::Heisenberg, {0}, F3).f));
    CHECK_FALSE(is_fermat_equivalent(make_family(Family::Heisenberg, {1}, F3).f));
    const Fq& F9 = make_field(3, 2);
    CHECK_FALSE(is_fermat_equivalent(make_family(Family::S4, {F9.gen()}, F9).f));
}

TEST_CASE("classify_element matches the dictionary rows") {
    const Fq& F3 = make_field(3, 1);
    auto idp = classify_element(pt_identity(F3, 3));
    CHECK(idp.g.name == "id");
    CHECK(idp.gbar.name == "7A_1");

    ProjTransform invol{SqMat::from_rows(F3, 3, {1, 0, 0, 0, 1, 0, 0, 0, -1})};
    auto ip = classify_element(pt_canon(invol.m));
    CHECK(ip.g.name == "4A_1");
    CHECK(ip.gbar.name == "3A_1");

    // p = 3 full Jordan block: (2A_2, D_6(a_2)+A_1)
    ProjTransform j3{SqMat::from_rows(F3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1})};
    auto jp = classify_element(j3);
    CHECK(jp.g.name == "2A_2");
    CHECK(jp.gbar.name == "D_6(a_2)+A_1");

    ProjTransform j21{SqMat::from_rows(F3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1})};
    auto jp21 = classify_element(j21);
    CHECK(jp21.g.name == "3A_2");
    CHECK(jp21.gbar.name == "E_7(a_4)");

    // order 7 diagonal: A_6 / E_7(a_1)
    const Fq& F729 = make_field(3, 6);
    Fq::Elem z = 0;
    for (auto r : nth_roots_of_unity(F729, 7))
        if (r != 1) {
            z = r;
            break;
        }
    SqMat d{&F729, 3, {}};
    d.at(0, 0) = 1;
    d.at(1, 1) = z;
    d.at(2, 2) = F729.pow(z, 4);
    auto sp = classify_element(pt_canon(d));
    CHECK(sp.g.name == "A_6");
    CHECK(sp.gbar.name == "E_7(a_1)");

    // tame 3-cycle (eigenvalues 1, z3, z3^2): class 2A_2
    const Fq& F7 = make_field(7, 1);
    SqMat cyc{&F7, 3, {}};
    cyc.at(0, 1) = 1;
    cyc.at(1, 2) = 1;
    cyc.at(2, 0) = 1;
    auto cp = classify_element(pt_canon(cyc));
    CHECK(cp.g.name == "2A_2");

    // tame (1, 1, z3): class 3A_2
    const Fq& F13 = make_field(13, 1);
    Fq::Elem z3 = 0;
    for (auto r : nth_roots_of_unity(F13, 3))
        if (r != 1) {
            z3 = r;
            break;
        }
    SqMat d31{&F13, 3, {}};
    d31.at(0, 0) = 1;
    d31.at(1, 1) = 1;
    d31.at(2, 2) = z3;
    auto tp = classify_element(pt_canon(d31));
    CHECK(tp.g.name == "3A_2");
}

TEST_CASE("classify_element is constant on conjugacy classes") {
    Rng rng(31415);
    const Fq& F3 = make_field(3, 1);
    PlaneQuartic fermat = make_family(Family::Fermat, {}, F3);
    auto rep = aut_curve(fermat, Strategy::Hybrid);
    const FiniteGroup& G = rep.curve_group;
    for (int it = 0; it < 60; ++it) {
        const ProjTransform& g = G.elements[rng_below(rng, G.order())];
        const ProjTransform& h = G.elements[rng_below(rng, G.order())];
        ProjTransform conj = pt_compose(pt_compose(h, g), pt_inverse(h));
        auto a = classify_element(g);
        auto b = classify_element(conj);
        CHECK(a.g.name == b.g.name);
        CHECK(a.gbar.name == b.gbar.name);
    }
}

TEST_CASE("fermat char 3: PSU_3(9), order 6048, full class data") {
    const Fq& F3 = make_field(3, 1);
    PlaneQuartic C = make_family(Family::Fermat, {}, F3);
    auto rep = aut_curve(C, Strategy::Hybrid);
    CHECK(rep.curve_order == 6048);
    CHECK(rep.surface_order == 12096);
    CHECK(rep.complete);
    CHECK(rep.fermat_equivalent);
    // Table 5 row I, characteristic 3
    std::map<std::string, long> expect = {
        {"id", 1},          {"3A_1", 63},         {"4A_1", 63},
        {"7A_1", 1},        {"2A_2", 672},        {"3A_2", 56},
        {"2A_3", 378},      {"2A_3+A_1", 126},    {"A_5+A_2", 504},
        {"A_6", 1728},      {"D_4(a_1)", 126},    {"D_4(a_1)+A_1", 378},
        {"D_5", 1512},      {"D_5+A_1", 1512},    {"D_6(a_2)+A_1", 672},
        {"E_6", 1008},      {"E_6(a_2)", 504},    {"E_7(a_1)", 1728},
        {"E_7(a_2)", 1008}, {"E_7(a_4)", 56}};
    CHECK(rep.class_counts == expect);
    long total = 0;
    for (auto& [name, cnt] : rep.class_counts) total += cnt;
    CHECK(total == 12096);
}

TEST_CASE("s4 family: S_4 of order 24 in characteristic 3") {
    const Fq& F9 = make_field(3, 2);
    PlaneQuartic C = make_family(Family::S4, {F9.gen()}, F9);
    auto rep = aut_curve(C, Strategy::Hybrid);
    CHECK(rep.curve_order == 24);
    CHECK(rep.surface_order == 48);
    CHECK_FALSE(rep.fermat_equivalent);
    // Table 5 row IV
    std::map<std::string, long> expect = {{"id", 1},   {"3A_1", 9},           {"4A_1", 9},
                                          {"7A_1", 1}, {"2A_2", 8},           {"2A_3", 6},
                                          {"D_4(a_1)+A_1", 6}, {"D_6(a_2)+A_1", 8}};
    CHECK(rep.class_counts == expect);
}

TEST_CASE("heisenberg family: H_3(3):2 of order 54 for c != 0") {
    const Fq& F3 = make_field(3, 1);
    PlaneQuartic C = make_family(Family::Heisenberg, {F3.from_int(1)}, F3);
    auto rep = aut_curve(C, Strategy::Hybrid);
    CHECK(rep.curve_order == 54);
    CHECK(rep.surface_order == 108);
    CHECK_FALSE(rep.fermat_equivalent);
    // Table 5 row VIII, characteristic 3
    std::map<std::string, long> expect = {
        {"id", 1},      {"3A_1", 9},    {"4A_1", 9},           {"7A_1", 1},
        {"2A_2", 24},   {"3A_2", 2},    {"A_5+A_2", 18},       {"D_6(a_2)+A_1", 24},
        {"E_6(a_2)", 18}, {"E_7(a_4)", 2}};
    CHECK(rep.class_counts == expect);
}

TEST_CASE("klein quartic: order 168 at p = 5 with char-0 class data") {
    const Fq& F5 = make_field(5, 1);
    PlaneQuartic C = make_family(Family::Klein, {}, F5);
    auto rep = aut_curve(C, Strategy::Hybrid);
    CHECK(rep.curve_order == 168);
    CHECK(rep.surface_order == 336);
    CHECK(rep.complete);
    auto hist = order_histogram(rep.curve_group);
    std::map<int, long> expect_hist = {{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}};
    CHECK(hist == expect_hist);
    // Table 5 row I, characteristic != 3, 7
    std::map<std::string, long> expect = {
        {"id", 1},     {"3A_1", 21},       {"4A_1", 21},          {"7A_1", 1},
        {"2A_2", 56},  {"2A_3", 42},       {"A_6", 48},           {"D_4(a_1)+A_1", 42},
        {"D_6(a_2)+A_1", 56}, {"E_7(a_1)", 48}};
    CHECK(rep.class_counts == expect);
}

TEST_CASE("fermat at p = 5: 4^2:S_3 of order 96") {
    const Fq& F5 = make_field(5, 1);
    PlaneQuartic C = make_family(Family::Fermat, {}, F5);
    auto rep = aut_curve(C, Strategy::Hybrid);
    CHECK(rep.curve_order == 96);
    // Table 5 row II, characteristic != 3
    std::map<std::string, long> expect = {
        {"id", 1},         {"3A_1", 15},      {"4A_1", 15}, {"7A_1", 1},  {"2A_2", 32},
        {"2A_3", 18},      {"2A_3+A_1", 6},   {"D_4(a_1)", 6}, {"D_4(a_1)+A_1", 18},
        {"D_5", 24},       {"D_5+A_1", 24},   {"D_6(a_2)+A_1", 32}};
    CHECK(rep.class_counts == expect);
}

TEST_CASE("klein quartic at p = 3 carries the full PSU_3(9) via the witness") {
    const Fq& F3 = make_field(3, 1);
    PlaneQuartic C = make_family(Family::Klein, {}, F3);
    auto rep = aut_curve(C, Strategy::Hybrid);
    CHECK(rep.curve_order == 6048);
    CHECK(rep.complete);
    CHECK(rep.fermat_equivalent);
    // class data agrees with the Fermat model's
    CHECK(rep.class_counts.at("A_6") == 1728);
    CHECK(rep.class_counts.at("2A_2") == 672);
}

TEST_CASE("klein-fermat witness exists at p = 3 and not at p = 5") {
    const Fq& K = make_field(3, 6);
    ProjTransform T = klein_fermat_witness(K);
    MultiPoly kle = parse_poly(K, 3, "x0^3*x1 + x1^3*x2 + x2^3*x0");
    MultiPoly fer = parse_poly(K, 3, "x0^4 + x1^4 + x2^4");
    CHECK(proportional(substitute_linear(kle, T.m), fer).has_value());
    // and the inverse maps fermat back to klein
    CHECK(proportional(substitute_linear(fer, pt_inverse(T).m), kle).has_value());

    const Fq& K5 = make_field(5, 6);
    CHECK_THROWS_AS(klein_fermat_witness(K5), Error);
}

TEST_CASE("wild nonexistence certificates for p = 5 and p = 7") {
    for (uint32_t p : {5u, 7u}) {
        auto cert = wild_nonexistence(p);
        CHECK(cert.all_singular);
        REQUIRE(cert.cases.size() == 2);
        for (auto& c : cert.cases) {
            CHECK(c.dim <= 5);
            CHECK(c.members == c.singular);
            CHECK(c.members > 0);
        }
        // case 1 is the 5-dimensional x0-free space
        CHECK(cert.cases[0].dim == 5);
        uint64_t expect = 1;
        for (int i = 0; i < 5; ++i) expect *= p;
        CHECK(cert.cases[0].members == (expect - 1) / (p - 1));
    }
}

TEST_CASE("c3 family has the order-3 generator and no more (generic draw)") {
    const Fq& F3 = make_field(3, 1);
    // f1 = x1 + x2, f4 = x1 x2^3 (a smooth member)
    PlaneQuartic C = make_family(
        Family::C3, {1, 1, 0, 0, 0, 1, 0}, F3);
    auto rep = aut_curve(C, Strategy::Hybrid);
    CHECK(rep.curve_order == 3);
    CHECK(rep.surface_order == 6);
    // Table 5 row XI: id 1, 7A_1 1, 3A_2 2, E_7(a_4) 2
    std::map<std::string, long> expect = {
        {"id", 1}, {"7A_1", 1}, {"3A_2", 2}, {"E_7(a_4)", 2}};
    CHECK(rep.class_counts == expect);
}
