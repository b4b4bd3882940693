#include "doctest.h"

#include <set>

#include "dpz/weyl.hpp"

using namespace dpz;
using namespace dpz::weyl;

TEST_CASE("root basis geometry") {
    for (int N : {6, 7, 8}) {
        GeomLattice L{N};
        auto k = L.kvec();
        CHECK(L.inner(k, k) == 9 - N);
        for (auto& a : L.root_basis()) {
            CHECK(L.inner(a, a) == -2);
            CHECK(L.inner(a, k) == 0);
        }
    }
}

TEST_CASE("simple reflections square to the identity and fix k") {
    for (int N : {6, 7, 8}) {
        for (int i = 0; i < N; ++i) {
            auto r = simple_reflection(N, i);
            CHECK(iso_valid(r));
            CHECK(iso_compose(r, r) == iso_identity(N));
        }
        // reflection in a_1 = e1 - e2 swaps e1 and e2
        auto r1 = simple_reflection(N, 1);
        CHECK(r1.at(1, 2) == 1);
        CHECK(r1.at(2, 1) == 1);
        CHECK(r1.at(1, 1) == 0);
        CHECK(r1.at(0, 0) == 1);
    }
}

TEST_CASE("coxeter element orders are 12, 18, 30") {
    int expected[3] = {12, 18, 30};
    int idx = 0;
    for (int N : {6, 7, 8}) {
        auto w = iso_identity(N);
        for (int i = 0; i < N; ++i) w = iso_compose(w, simple_reflection(N, i));
        CHECK(iso_order(w) == expected[idx]);
        // and the charpoly of the E8 coxeter element matches the table
        if (N == 8) {
            auto cp = charpoly_EN(w);
            CHECK(cp == IntVec{1, 1, 0, -1, -1, -1, 0, 1, 1});
            auto m = carter_lookup(cp, 30, 8);
            REQUIRE(m.size() == 1);
            CHECK(m[0].name == "E_8");
        }
        ++idx;
    }
}

TEST_CASE("identity and -id charpolys") {
    auto id7 = iso_identity(7);
    auto cp = charpoly_EN(id7);
    IntVec expect = {-1, 7, -21, 35, -35, 21, -7, 1};  // (t-1)^7
    CHECK(cp == expect);

    // -id on E7 comes from the isometry -id padded to fix k... realized as the
    // longest element; check via the class table instead: (t+1)^7 at order 2
    IntVec cpw0 = {1, 7, 21, 35, 35, 21, 7, 1};
    auto m = carter_lookup(cpw0, 2, 7);
    REQUIRE(m.size() == 1);
    CHECK(m[0].name == "7A_1");
}

TEST_CASE("carter table entries") {
    auto& d4a1 = class_by_name("D_4(a_1)", 7);
    CHECK(d4a1.order == 4);
    // (t^2+1)^2 padded by (t-1)^3
    IntVec want = {1, 0, 2, 0, 1};  // (t^2+1)^2
    IntVec pad = {-1, 1};
    IntVec cp = want;
    for (int i = 0; i < 3; ++i) {
        IntVec nxt(cp.size() + 1, 0);
        for (size_t j = 0; j < cp.size(); ++j) {
            nxt[j] += cp[j] * pad[0];
            nxt[j + 1] += cp[j] * pad[1];
        }
        cp = nxt;
    }
    CHECK(d4a1.cp == cp);

    CHECK(class_by_name("E_7(a_1)", 7).order == 14);
    CHECK(class_by_name("E_8(a_6)", 8).order == 10);
    CHECK(class_by_name("A_6", 7).trace() == 0);
    CHECK(class_by_name("2A_2", 7).trace() == 1);
    CHECK(class_by_name("3A_2", 7).trace() == -2);
    CHECK(class_by_name("E_7(a_4)", 7).trace() == 2);
    CHECK(class_by_name("D_8(a_3)", 8).order == 8);
}

TEST_CASE("carter lookup: example triples") {
    // ((t+1)^7, 2, 7) -> 7A_1
    IntVec cp = {1};
    for (int i = 0; i < 7; ++i) {
        IntVec nxt(cp.size() + 1, 0);
        for (size_t j = 0; j < cp.size(); ++j) {
            nxt[j] += cp[j];
            nxt[j + 1] += cp[j];
        }
        cp = nxt;
    }
    auto m = carter_lookup(cp, 2, 7);
    REQUIRE(m.size() == 1);
    CHECK(m[0].name == "7A_1");

    // ((t^2+1)^2 (t-1)^3, 4, 7) -> D_4(a_1)
    auto& d4a1 = class_by_name("D_4(a_1)", 7);
    auto m2 = carter_lookup(d4a1.cp, 4, 7);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].name == "D_4(a_1)");

    // unknown charpoly
    IntVec junk(8, 0);
    junk[7] = 1;
    junk[0] = 5;
    CHECK(carter_lookup(junk, 2, 7).empty());
}

TEST_CASE("longest element: -id on the root lattice fixing k") {
    // w0(x) = -x + (x.k) k has k^2 = 2, fixes k, and restricts to -id on E_7
    int N = 7;
    GeomLattice L{N};
    auto k = L.kvec();
    LatticeIsometry w{N, IntMat(static_cast<size_t>(N + 1) * (N + 1), 0)};
    for (int j = 0; j <= N; ++j) {
        IntVec ej(N + 1, 0);
        ej[j] = 1;
        int64_t c = L.inner(ej, k);
        for (int i = 0; i <= N; ++i) w.at(i, j) = (i == j ? -1 : 0) + c * k[i];
    }
    CHECK(iso_valid(w));
    auto cp = charpoly_EN(w);
    IntVec expect = {1, 7, 21, 35, 35, 21, 7, 1};  // (t+1)^7
    CHECK(cp == expect);
    auto m = carter_lookup(cp, iso_order(w), 7);
    REQUIRE(m.size() == 1);
    CHECK(m[0].name == "7A_1");
}

TEST_CASE("minus pairs match the dictionary") {
    CHECK(minus_pair_unique(class_by_name("id", 7), 7).name == "7A_1");
    CHECK(minus_pair_unique(class_by_name("4A_1", 7), 7).name == "3A_1");
    CHECK(minus_pair_unique(class_by_name("A_6", 7), 7).name == "E_7(a_1)");
    CHECK(minus_pair_unique(class_by_name("2A_2", 7), 7).name == "D_6(a_2)+A_1");
    CHECK(minus_pair_unique(class_by_name("3A_2", 7), 7).name == "E_7(a_4)");
}

TEST_CASE("lefschetz bookkeeping") {
    CHECK(lefschetz_trace(10).tr_h2 == 8);
    CHECK(lefschetz_trace(10).tr_en == 7);
    CHECK(lefschetz_trace(3).tr_en == 0);
    CHECK(lefschetz_trace(2).tr_h2 == 0);
}

TEST_CASE("charpoly evaluations at +-1 agree with determinants") {
    // cp(t) = det(tI - w), checked at t = 1 and t = -1 against a fraction-free
    // integer determinant
    int N = 7;
    auto refl = reflection_root_matrices(N);
    Rng rng(7777);
    auto int_det = [&](IntMat a) {
        // Bareiss elimination
        int64_t prev = 1;
        int sign = 1;
        for (int c = 0; c < N; ++c) {
            int pr = -1;
            for (int r = c; r < N; ++r)
                if (a[static_cast<size_t>(r) * N + c]) {
                    pr = r;
                    break;
                }
            if (pr < 0) return static_cast<int64_t>(0);
            if (pr != c) {
                for (int t = 0; t < N; ++t)
                    std::swap(a[static_cast<size_t>(pr) * N + t], a[static_cast<size_t>(c) * N + t]);
                sign = -sign;
            }
            for (int r = c + 1; r < N; ++r) {
                for (int t = c + 1; t < N; ++t)
                    a[static_cast<size_t>(r) * N + t] =
                        (a[static_cast<size_t>(r) * N + t] * a[static_cast<size_t>(c) * N + c] -
                         a[static_cast<size_t>(r) * N + c] * a[static_cast<size_t>(c) * N + t]) /
                        prev;
                a[static_cast<size_t>(r) * N + c] = 0;
            }
            prev = a[static_cast<size_t>(c) * N + c];
        }
        return sign * a[static_cast<size_t>(N - 1) * N + (N - 1)];
    };
    for (int it = 0; it < 100; ++it) {
        IntMat w(static_cast<size_t>(N) * N, 0);
        for (int i = 0; i < N; ++i) w[static_cast<size_t>(i) * N + i] = 1;
        int len = 1 + static_cast<int>(rng_below(rng, 15));
        for (int s = 0; s < len; ++s) w = root_mat_mul(N, w, refl[rng_below(rng, N)]);
        auto cp = charpoly_int(N, w);
        for (int64_t t : {1, -1}) {
            int64_t val = 0, pw = 1;
            for (size_t i = 0; i < cp.size(); ++i) {
                val += cp[i] * pw;
                pw *= t;
            }
            IntMat a = w;
            for (int i = 0; i < N; ++i)
                a[static_cast<size_t>(i) * N + i] = t - a[static_cast<size_t>(i) * N + i];
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    if (i != j) a[static_cast<size_t>(i) * N + j] = -w[static_cast<size_t>(i) * N + j];
            CHECK(val == int_det(a));
        }
    }
}

TEST_CASE("random reflection words land in the class table") {
    // determinant consistency and (charpoly, order) bucket membership
    int N = 7;
    auto refl = reflection_root_matrices(N);
    Rng rng(20240817);
    std::set<std::pair<IntVec, int>> seen;
    const int kWords = 100000;
    for (int it = 0; it < kWords; ++it) {
        IntMat w(static_cast<size_t>(N) * N, 0);
        for (int i = 0; i < N; ++i) w[static_cast<size_t>(i) * N + i] = 1;
        int len = 1 + static_cast<int>(rng_below(rng, 18));
        for (int s = 0; s < len; ++s) w = root_mat_mul(N, w, refl[rng_below(rng, N)]);
        auto cp = charpoly_int(N, w);
        // order by iterating
        IntMat acc = w;
        int order = 1;
        auto is_id = [&](const IntMat& m) {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    if (m[static_cast<size_t>(i) * N + j] != (i == j ? 1 : 0)) return false;
            return true;
        };
        while (!is_id(acc) && order < 40) {
            acc = root_mat_mul(N, acc, w);
            ++order;
        }
        REQUIRE(order < 40);
        seen.insert({cp, order});
    }
    for (auto& [cp, order] : seen) {
        auto m = carter_lookup(cp, order, N);
        CHECK(!m.empty());
        // det on E_N = constant-term sign consistency: cp(0) = (-1)^N det
        int64_t c0 = cp[0];
        CHECK((c0 == 1 || c0 == -1));
    }
    // the sampling must reach a reasonable spread of classes
    CHECK(seen.size() >= 25);
}
