#include "doctest.h"

#include "dpz/mpoly.hpp"

using namespace dpz;

namespace {

MultiPoly klein(const Fq& F) { return parse_poly(F, 3, "x0^3*x1 + x1^3*x2 + x2^3*x0"); }
MultiPoly fermat(const Fq& F) { return parse_poly(F, 3, "x0^4 + x1^4 + x2^4"); }

SqMat random_invertible(const Fq& F, int n, Rng& rng) {
    while (true) {
        SqMat m{&F, n, {}};
        for (int i = 0; i < n * n; ++i) m.a[i] = static_cast<Fq::Elem>(rng_below(rng, F.q()));
        if (mat_det(m) != 0) return m;
    }
}

MultiPoly random_form(const Fq& F, int nvars, int d, Rng& rng) {
    MultiPoly f(F, nvars);
    for (uint32_t key : monomials_of_degree(nvars, d))
        f.set_coeff(key, static_cast<Fq::Elem>(rng_below(rng, F.q())));
    return f;
}

}  // namespace

TEST_CASE("parser and printer round trip") {
    const Fq& F3 = make_field(3, 1);
    MultiPoly f = klein(F3);
    CHECK(f.terms.size() == 3);
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == 4);
    MultiPoly g = parse_poly(F3, 3, f.to_string());
    CHECK(f == g);

    const Fq& F9 = make_field(3, 2);
    MultiPoly h = parse_poly(F9, 2, "[1,2]*t0^2*t1 - t1^3");
    CHECK(h.degree() == 3);
    CHECK(h.coeff(pack_exp(2, 1)) == F9.from_coeffs({1, 2}));
    CHECK(h.coeff(pack_exp(0, 3)) == F9.neg(1));
}

TEST_CASE("substitution: cyclic permutation fixes the Klein quartic") {
    const Fq& F5 = make_field(5, 1);
    MultiPoly f = klein(F5);
    // (x0,x1,x2) -> (x1,x2,x0)
    SqMat M = SqMat::from_rows(F5, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
    CHECK(substitute_linear(f, M) == f);
}

TEST_CASE("substitution: diagonal on the Fermat quartic") {
    const Fq& F7 = make_field(7, 1);
    MultiPoly f = fermat(F7);
    SqMat D = SqMat::from_rows(F7, 3, {2, 0, 0, 0, 3, 0, 0, 0, 1});
    MultiPoly g = substitute_linear(f, D);
    CHECK(g.coeff(pack_exp(4, 0, 0)) == F7.pow(2, 4));
    CHECK(g.coeff(pack_exp(0, 4, 0)) == F7.pow(3, 4));
    CHECK(g.coeff(pack_exp(0, 0, 4)) == 1);
}

TEST_CASE("substitution respects composition and identity") {
    Rng rng(99);
    const Fq& F9 = make_field(3, 2);
    for (int it = 0; it < 40; ++it) {
        MultiPoly f = random_form(F9, 3, 4, rng);
        SqMat M = random_invertible(F9, 3, rng);
        SqMat N = random_invertible(F9, 3, rng);
        CHECK(substitute_linear(substitute_linear(f, N), M) == substitute_linear(f, mat_mul(N, M)));
        CHECK(substitute_linear(f, SqMat::identity(F9, 3)) == f);
    }
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    Rng rng(4242);
    const Fq& F5 = make_field(5, 1);
    for (int it = 0; it < 40; ++it) {
        MultiPoly f = random_form(F5, 3, 2, rng);
        MultiPoly g = random_form(F5, 3, 2, rng);
        for (int v = 0; v < 3; ++v) {
            CHECK(mp_derivative(f + g, v) == mp_derivative(f, v) + mp_derivative(g, v));
            CHECK(mp_derivative(f * g, v) == mp_derivative(f, v) * g + f * mp_derivative(g, v));
        }
    }
}

TEST_CASE("euler relation holds literally in char p") {
    Rng rng(7);
    const Fq& F3 = make_field(3, 1);
    for (int it = 0; it < 40; ++it) {
        MultiPoly f = random_form(F3, 3, 4, rng);
        MultiPoly x0(F3, 3), x1(F3, 3), x2(F3, 3);
        x0.set_coeff(pack_exp(1, 0, 0), 1);
        x1.set_coeff(pack_exp(0, 1, 0), 1);
        x2.set_coeff(pack_exp(0, 0, 1), 1);
        MultiPoly lhs = x0 * mp_derivative(f, 0) + x1 * mp_derivative(f, 1) + x2 * mp_derivative(f, 2);
        CHECK(lhs == mp_scale(f, F3.from_int(4)));
    }
}

TEST_CASE("binary roots: full P^1(F_5) for t0*t1*(t1^4 - t0^4)") {
    const Fq& F5 = make_field(5, 1);
    MultiPoly f = parse_poly(F5, 2, "t0*t1^5 - t0^5*t1");
    auto r = binary_roots(f);
    CHECK(r.splitting_degree == 1);
    CHECK(r.roots.size() == 6);
    for (auto& root : r.roots) CHECK(root.mult == 1);
}

TEST_CASE("binary roots: multiplicities and splitting degrees") {
    const Fq& F3 = make_field(3, 1);
    MultiPoly f = parse_poly(F3, 2, "t0^4");
    auto r = binary_roots(f);
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0].mult == 4);

    MultiPoly g = parse_poly(F3, 2, "t0*t1^3 - t0^3*t1");
    auto rg = binary_roots(g);
    CHECK(rg.roots.size() == 4);

    // t0^2 + t1^2 has its roots in GF(9), not GF(3)
    MultiPoly h = parse_poly(F3, 2, "t0^2 + t1^2");
    auto rh = binary_roots(h);
    CHECK(rh.splitting_degree == 2);
    CHECK(rh.roots.size() == 2);

    // product over roots of linear forms reproduces the form up to scalar
    MultiPoly prod(F3, 2);
    prod.set_coeff(pack_exp(0, 0), 1);
    for (auto& root : rg.roots) {
        REQUIRE(root.level == 1);
        // root [u:v]: linear form v*t0 - u*t1
        MultiPoly lin(F3, 2);
        lin.set_coeff(pack_exp(1, 0), root.v);
        lin.set_coeff(pack_exp(0, 1), F3.neg(root.u));
        for (int i = 0; i < root.mult; ++i) prod = prod * lin;
    }
    CHECK(proportional(prod, g).has_value());

    // same reconstruction with roots across extension levels
    MultiPoly mixed = parse_poly(F3, 2, "t0^3 + t0*t1^2");  // t0 (t0^2 + t1^2)
    auto rm = binary_roots(mixed);
    CHECK(rm.splitting_degree == 2);
    const Fq& K2 = make_field(3, 2);
    const Embedding& e = get_embedding(F3, K2);
    MultiPoly prod2(K2, 2);
    prod2.set_coeff(pack_exp(0, 0), 1);
    for (auto& root : rm.roots) {
        Fq::Elem u = root.level == 1 ? e.map(root.u) : root.u;
        Fq::Elem v = root.level == 1 ? e.map(root.v) : root.v;
        MultiPoly lin(K2, 2);
        lin.set_coeff(pack_exp(1, 0), v);
        lin.set_coeff(pack_exp(0, 1), K2.neg(u));
        for (int i = 0; i < root.mult; ++i) prod2 = prod2 * lin;
    }
    CHECK(proportional(prod2, mp_embed(mixed, e)).has_value());
}

TEST_CASE("is_square_binary matches root parity") {
    const Fq& F3 = make_field(3, 1);
    CHECK(is_square_binary(parse_poly(F3, 2, "-t0^2*t1^2")));
    CHECK(is_square_binary(parse_poly(F3, 2, "-t0^4")));
    CHECK_FALSE(is_square_binary(parse_poly(F3, 2, "t0*t1^3 - t0^3*t1")));
}

TEST_CASE("jacobian_singular: Fermat smooth, Klein singular exactly at p = 7") {
    const Fq& F3 = make_field(3, 1);
    CHECK_FALSE(jacobian_singular(fermat(F3), 4).has_value());
    // the s4 shape with a = 1 in char 3 is singular
    MultiPoly s4_bad =
        parse_poly(F3, 3, "x0^2*x1^2 + x1^2*x2^2 + x0^2*x2^2 + x0^4 + x1^4 + x2^4");
    CHECK(jacobian_singular(s4_bad, 2).has_value());
    const Fq& F5 = make_field(5, 1);
    CHECK_FALSE(jacobian_singular(klein(F5), 4).has_value());
    const Fq& F7 = make_field(7, 1);
    auto sing = jacobian_singular(klein(F7), 2);
    REQUIRE(sing.has_value());
    // the witness really is a common zero
    const Fq& K = *sing->F;
    MultiPoly fk = parse_poly(K, 3, "x0^3*x1 + x1^3*x2 + x2^3*x0");
    CHECK(fk.eval(sing->x) == 0);
    for (int v = 0; v < 3; ++v) CHECK(mp_derivative(fk, v).eval(sing->x) == 0);
}

TEST_CASE("hessian determinant degenerates for quartics in char 3") {
    const Fq& F3 = make_field(3, 1);
    CHECK(hessian_det(fermat(F3)).is_zero());
    // H x = (d-1) grad f = 3 grad f = 0, so det H vanishes for every quartic
    // in characteristic 3; the Fermat detection lives in the inflection test.
    Rng rng(11);
    for (int it = 0; it < 10; ++it) {
        MultiPoly f = random_form(F3, 3, 4, rng);
        if (f.is_zero()) continue;
        CHECK(hessian_det(f).is_zero());
    }
    const Fq& F5 = make_field(5, 1);
    CHECK(hessian_det(parse_poly(F5, 3, "x0^4")).is_zero());
    // in char 5 a generic quartic has a nonzero hessian
    MultiPoly g = parse_poly(F5, 3, "x0^4 + x1^4 + x2^4 + x0^2*x1^2");
    CHECK_FALSE(hessian_det(g).is_zero());
}

TEST_CASE("fixed subspace dimensions") {
    const Fq& F5 = make_field(5, 1);
    // identity: the whole 15-dimensional quartic space
    CHECK(fixed_subspace(F5, 3, 4, {SqMat::identity(F5, 3)}).size() == 15);
    // x0 -> x0 + x1 in char 5: quartics in x1, x2 only (dimension 5)
    SqMat g = SqMat::from_rows(F5, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
    auto basis = fixed_subspace(F5, 3, 4, {g});
    CHECK(basis.size() == 5);
    for (auto& b : basis)
        for (auto& [k, c] : b.terms) CHECK(exp_of(k, 0) == 0);

    // char 3: shape f1(x1,x2)(x0^3 - x0 x1^2) + f4(x1,x2), so dimension 2 + 5
    const Fq& F3 = make_field(3, 1);
    SqMat g3 = SqMat::from_rows(F3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
    auto basis3 = fixed_subspace(F3, 3, 4, {g3});
    CHECK(basis3.size() == 7);
    for (auto& b : basis3) CHECK(substitute_linear(b, g3) == b);
    MultiPoly shape = parse_poly(F3, 3, "x1*x0^3 - x0*x1^3 + x1^4 + x2^4");
    CHECK(substitute_linear(shape, g3) == shape);
}
