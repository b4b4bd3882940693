#include "doctest.h"

#include "dpz/pgl.hpp"

using namespace dpz;

namespace {

ProjTransform perm3(const Fq& F, int a, int b, int c) {
    // rows are images of the variables: x0 -> x_a, x1 -> x_b, x2 -> x_c
    SqMat m{&F, 3, {}};
    m.at(0, a) = 1;
    m.at(1, b) = 1;
    m.at(2, c) = 1;
    return pt_canon(m);
}

SqMat random_invertible(const Fq& F, int n, Rng& rng) {
    while (true) {
        SqMat m{&F, n, {}};
        for (int i = 0; i < n * n; ++i) m.a[i] = static_cast<Fq::Elem>(rng_below(rng, F.q()));
        if (mat_det(m) != 0) return m;
    }
}

}  // namespace

TEST_CASE("canonical form is idempotent and composition is associative") {
    Rng rng(1);
    const Fq& F9 = make_field(3, 2);
    for (int it = 0; it < 100; ++it) {
        ProjTransform a = pt_canon(random_invertible(F9, 3, rng));
        ProjTransform b = pt_canon(random_invertible(F9, 3, rng));
        ProjTransform c = pt_canon(random_invertible(F9, 3, rng));
        CHECK(pt_canon(a.m) == a);
        CHECK(pt_compose(pt_compose(a, b), c) == pt_compose(a, pt_compose(b, c)));
        CHECK(pt_compose(a, pt_inverse(a)) == pt_identity(F9, 3));
    }
}

TEST_CASE("closure of S3 and element orders") {
    const Fq& F3 = make_field(3, 1);
    auto G = closure({perm3(F3, 1, 2, 0), perm3(F3, 1, 0, 2)}, 100);
    CHECK(G.order() == 6);
    auto hist = order_histogram(G);
    CHECK(hist[1] == 1);
    CHECK(hist[2] == 3);
    CHECK(hist[3] == 2);
    CHECK(is_closed(G));
}

TEST_CASE("element orders: unipotent in char 3 and a 7th-root diagonal") {
    const Fq& F3 = make_field(3, 1);
    ProjTransform g{SqMat::from_rows(F3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1})};
    CHECK(element_order(g) == 3);

    const Fq& F729 = make_field(3, 6);
    auto sevenths = nth_roots_of_unity(F729, 7);
    Fq::Elem z = 0;
    for (auto r : sevenths)
        if (r != 1) {
            z = r;
            break;
        }
    SqMat d{&F729, 3, {}};
    d.at(0, 0) = 1;
    d.at(1, 1) = z;
    d.at(2, 2) = F729.pow(z, 4);
    CHECK(element_order(pt_canon(d)) == 7);
    CHECK(element_order(pt_identity(F729, 3)) == 1);
}

TEST_CASE("heisenberg closure over GF(3^4) has order 27 and exponent 3") {
    // substitutions (x0,x1,x2) -> (x0 + l x1 + m x2, x1 - l^3 x2, x2) with
    // l^9 + l = 0 and m^3 - m + l^12 = 0 (the c = 0 case; l is a 16th root of
    // unity or zero, so GF(81) is the right home field, not GF(3^6))
    const Fq& F = make_field(3, 4);
    std::vector<ProjTransform> gens;
    for (uint32_t l = 0; l < F.q(); ++l) {
        if (F.add(F.pow(l, 9), l) != 0) continue;
        for (uint32_t m = 0; m < F.q(); ++m) {
            if (F.add(F.sub(F.pow(m, 3), m), F.pow(l, 12)) != 0) continue;
            SqMat s{&F, 3, {}};
            s.at(0, 0) = 1;
            s.at(0, 1) = l;
            s.at(0, 2) = m;
            s.at(1, 1) = 1;
            s.at(1, 2) = F.neg(F.pow(l, 3));
            s.at(2, 2) = 1;
            gens.push_back(pt_canon(s));
        }
    }
    CHECK(gens.size() == 27);
    auto G = closure(gens, 100);
    CHECK(G.order() == 27);
    auto hist = order_histogram(G);
    CHECK(hist[1] == 1);
    CHECK(hist[3] == 26);
}

TEST_CASE("order histogram: identity count and Cauchy elements") {
    const Fq& F3 = make_field(3, 1);
    auto G = closure({perm3(F3, 1, 2, 0), perm3(F3, 1, 0, 2)}, 100);
    auto hist = order_histogram(G);
    CHECK(hist[1] == 1);
    long total = 0;
    for (auto& [o, c] : hist) total += c;
    CHECK(total == static_cast<long>(G.order()));
    // Cauchy: every prime dividing |G| shows up as an element order
    for (long p : {2L, 3L}) {
        bool found = false;
        for (auto& [o, c] : hist)
            if (o == p && c > 0) found = true;
        CHECK(found);
    }
}

TEST_CASE("closure cap errors out rather than truncating") {
    const Fq& F5 = make_field(5, 1);
    Rng rng(3);
    ProjTransform g = pt_canon(random_invertible(F5, 3, rng));
    ProjTransform h = pt_canon(random_invertible(F5, 3, rng));
    CHECK_THROWS_AS(closure({g, h}, 10), Error);
}

TEST_CASE("stabilizer of the Fermat quartic inside PGL_3(3)") {
    const Fq& F3 = make_field(3, 1);
    MultiPoly f = parse_poly(F3, 3, "x0^4 + x1^4 + x2^4");
    auto G = stabilizer_of_form(f, SearchStrategy::Plain);
    // the orthogonal group of x0^2+x1^2+x2^2 modulo scalars
    CHECK(G.order() == 24);
    CHECK(G.contains(perm3(F3, 1, 2, 0)));
    CHECK(G.contains(perm3(F3, 1, 0, 2)));
    SqMat d{&F3, 3, {}};
    d.at(0, 0) = 1;
    d.at(1, 1) = F3.neg(1);
    d.at(2, 2) = F3.neg(1);
    CHECK(G.contains(pt_canon(d)));
    // pruned search agrees with the plain one
    auto P = stabilizer_of_form(f, SearchStrategy::Pruned);
    CHECK(P.elements == G.elements);
}

TEST_CASE("stabilizer conjugation consistency") {
    Rng rng(2024);
    const Fq& F3 = make_field(3, 1);
    MultiPoly f = parse_poly(F3, 3, "x0^4 + x1^4 + x2^4 + x0^2*x1^2");
    auto G = stabilizer_of_form(f, SearchStrategy::Plain);
    CHECK(G.contains(pt_identity(F3, 3)));
    for (int it = 0; it < 3; ++it) {
        ProjTransform M = pt_canon(random_invertible(F3, 3, rng));
        auto GM = stabilizer_of_form(substitute_linear(f, M.m), SearchStrategy::Plain);
        // stab(f o M) = M^-1 stab(f) M
        CHECK(GM.order() == G.order());
        ProjTransform Mi = pt_inverse(M);
        for (auto& g : G.elements) CHECK(GM.contains(pt_compose(pt_compose(Mi, g), M)));
    }
}

TEST_CASE("point set stabilizer: P^1(F_5) inside PGL_2(25) has order 120") {
    const Fq& F25 = make_field(5, 2);
    const Embedding& e = get_embedding(make_field(5, 1), F25);
    std::vector<P1Point> pts;
    for (uint32_t v = 0; v < 5; ++v) pts.push_back({1, e.map(v)});
    pts.push_back({0, 1});
    auto G = point_set_stabilizer(F25, pts);
    CHECK(G.order() == 120);
    CHECK_THROWS_AS(point_set_stabilizer(F25, std::vector<P1Point>{{1, 0}, {0, 1}}), Error);
}

TEST_CASE("closure order divides the ambient PGL order") {
    Rng rng(77);
    const Fq& F3 = make_field(3, 1);
    for (int it = 0; it < 10; ++it) {
        ProjTransform g = pt_canon(random_invertible(F3, 3, rng));
        ProjTransform h = pt_canon(random_invertible(F3, 3, rng));
        auto G = closure({g, h}, 10000);
        CHECK(pgl_order(3, 3) % G.order() == 0);
    }
    const Fq& F5 = make_field(5, 1);
    for (int it = 0; it < 10; ++it) {
        ProjTransform g = pt_canon(random_invertible(F5, 2, rng));
        ProjTransform h = pt_canon(random_invertible(F5, 2, rng));
        auto G = closure({g, h}, 1000);
        CHECK(pgl_order(2, 5) % G.order() == 0);
    }
}

TEST_CASE("jordan types") {
    const Fq& F5 = make_field(5, 1);
    ProjTransform d = pt_canon(SqMat::from_rows(F5, 3, {1, 0, 0, 0, 1, 0, 0, 0, -1}));
    auto jt = jordan_type(d, true);
    CHECK_FALSE(jt.wild);
    CHECK(jt.order == 2);
    CHECK(jt.ss_pattern == "21");
    CHECK(jt.blocks == std::vector<int>{1, 1, 1});
    long total = 0;
    for (auto& [lvl, val, mult] : jt.eigenvalues) {
        CHECK(lvl == 1);
        total += mult;
    }
    CHECK(total == 3);

    const Fq& F3 = make_field(3, 1);
    ProjTransform j3{SqMat::from_rows(F3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1})};
    auto jt3 = jordan_type(j3);
    CHECK(jt3.wild);
    CHECK(jt3.order == 3);
    CHECK(jt3.blocks == std::vector<int>{3});

    ProjTransform j21{SqMat::from_rows(F3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1})};
    auto jt21 = jordan_type(j21);
    CHECK(jt21.blocks == std::vector<int>{2, 1});

    auto jtid = jordan_type(pt_identity(F3, 3));
    CHECK(jtid.scalar);
    CHECK(jtid.ss_pattern == "3");

    // jordan data is conjugation invariant
    Rng rng(5);
    for (int it = 0; it < 50; ++it) {
        ProjTransform M = pt_canon(random_invertible(F3, 3, rng));
        ProjTransform conj = pt_compose(pt_compose(M, j3), pt_inverse(M));
        auto jtc = jordan_type(conj);
        CHECK(jtc.blocks == jt3.blocks);
        CHECK(jtc.order == jt3.order);
    }
}
