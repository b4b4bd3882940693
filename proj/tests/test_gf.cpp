#include "doctest.h"

#include <numeric>

#include "dpz/gf.hpp"

using namespace dpz;

TEST_CASE("make_field is deterministic and validates input") {
    const Fq& F3 = make_field(3, 1);
    CHECK(F3.q() == 3);
    CHECK(F3.modulus() == std::vector<uint32_t>{0, 1});  // modulus x for prime fields

    // GF(9): smallest irreducible quadratic over GF(3), low-degree-first order.
    // Enumeration: constant term 0 is reducible, x^2+1 has no roots mod 3.
    const Fq& F9 = make_field(3, 2);
    CHECK(F9.modulus() == std::vector<uint32_t>{1, 0, 1});

    const Fq& F9b = make_field(3, 2);
    CHECK(&F9 == &F9b);  // interned

    CHECK_THROWS_AS(make_field(2, 1), Error);
    CHECK_THROWS_AS(make_field(4, 1), Error);
    CHECK_THROWS_AS(make_field(3, 13), Error);
}

TEST_CASE("prime field arithmetic") {
    const Fq& F3 = make_field(3, 1);
    CHECK(F3.add(2, 2) == 1);
    const Fq& F5 = make_field(5, 1);
    CHECK(F5.inv(2) == 3);
}

TEST_CASE("field axioms on random elements") {
    Rng rng(12345);
    for (auto [p, k] : {std::pair{3u, 2u}, {3u, 6u}, {5u, 2u}, {7u, 1u}, {3u, 7u}, {5u, 6u}}) {
        const Fq& F = make_field(p, k);
        for (int it = 0; it < 250; ++it) {
            Fq::Elem a = static_cast<Fq::Elem>(rng_below(rng, F.q()));
            Fq::Elem b = static_cast<Fq::Elem>(rng_below(rng, F.q()));
            Fq::Elem c = static_cast<Fq::Elem>(rng_below(rng, F.q()));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b)));
            CHECK(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("roots of unity counts match gcd(n, q-1)") {
    const Fq& F9 = make_field(3, 2);
    CHECK(nth_roots_of_unity(F9, 4).size() == 4);
    const Fq& F3 = make_field(3, 1);
    CHECK(nth_roots_of_unity(F3, 7).size() == 1);
    const Fq& F729 = make_field(3, 6);
    CHECK(nth_roots_of_unity(F729, 7).size() == 7);
    CHECK_THROWS_AS(nth_roots_of_unity(F9, 6), Error);  // wild order

    for (uint64_t n = 1; n <= 30; ++n) {
        if (n % 3 == 0) continue;
        CHECK(nth_roots_of_unity(F9, n).size() == std::gcd(n, static_cast<uint64_t>(8)));
    }
}

TEST_CASE("univariate roots with multiplicity") {
    const Fq& F9 = make_field(3, 2);
    // x^9 - x has all of GF(9) as simple roots
    Unipoly f(F9, {});
    f.c.assign(10, 0);
    f.c[9] = 1;
    f.c[1] = F9.neg(1);
    f.trim();
    auto roots = univariate_roots(f);
    CHECK(roots.size() == 9);
    for (auto& [r, m] : roots) CHECK(m == 1);

    // x^2 + 1 has no roots over GF(3)
    const Fq& F3 = make_field(3, 1);
    Unipoly g(F3, {1, 0, 1});
    CHECK(univariate_roots(g).empty());

    CHECK_THROWS_AS(univariate_roots(Unipoly::zero(F3)), Error);
}

TEST_CASE("heisenberg linearized equation has 9 roots in its splitting field") {
    // l^9 - l^3 c + l with c = 1 splits over GF(3^6)
    const Fq& F = make_field(3, 6);
    Unipoly f(F, {});
    f.c.assign(10, 0);
    f.c[9] = 1;
    f.c[3] = F.neg(1);
    f.c[1] = 1;
    f.trim();
    auto roots = univariate_roots(f);
    size_t total = 0;
    for (auto& [r, m] : roots) total += m;
    CHECK(total == 9);
}

TEST_CASE("univariate division and gcd") {
    const Fq& F9 = make_field(3, 2);
    Rng rng(55);
    for (int it = 0; it < 100; ++it) {
        auto rand_poly = [&](int deg) {
            std::vector<Fq::Elem> c(deg + 1);
            for (auto& v : c) v = static_cast<Fq::Elem>(rng_below(rng, 9));
            return Unipoly(F9, std::move(c));
        };
        Unipoly a = rand_poly(6), b = rand_poly(3);
        if (b.is_zero()) continue;
        Unipoly q, r;
        uni_divrem(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.deg() < b.deg()));
        // gcd divides both
        Unipoly g = uni_gcd(a, b);
        if (!a.is_zero()) {
            Unipoly q2, r2;
            uni_divrem(a, g, q2, r2);
            CHECK(r2.is_zero());
            uni_divrem(b, g, q2, r2);
            CHECK(r2.is_zero());
        }
    }
}

TEST_CASE("subfield embedding is a ring homomorphism") {
    const Fq& F9 = make_field(3, 2);
    const Fq& F729 = make_field(3, 6);
    const Embedding& e = get_embedding(F9, F729);
    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        Fq::Elem a = static_cast<Fq::Elem>(rng_below(rng, 9));
        Fq::Elem b = static_cast<Fq::Elem>(rng_below(rng, 9));
        CHECK(e.map(F9.add(a, b)) == F729.add(e.map(a), e.map(b)));
        CHECK(e.map(F9.mul(a, b)) == F729.mul(e.map(a), e.map(b)));
    }
    CHECK(e.map(F9.one()) == F729.one());
}
