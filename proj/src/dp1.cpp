#include "dpz/dp1.hpp"

#include <algorithm>

#include "dpz/common.hpp"

namespace dpz::dp1 {

namespace {

MultiPoly bin(const Fq& F, std::initializer_list<std::pair<int, int64_t>> terms, int deg) {
    MultiPoly f(F, 2);
    for (auto& [e0, c] : terms) {
        Fq::Elem v = F.from_int(c);
        if (v) f.set_coeff(pack_exp(e0, deg - e0), F.add(f.coeff(pack_exp(e0, deg - e0)), v));
    }
    return f;
}

MultiPoly bin_zero(const Fq& F) { return MultiPoly(F, 2); }

void check_form(const MultiPoly& f, int deg, const char* what) {
    if (f.is_zero()) return;
    if (f.nvars != 2 || !f.is_homogeneous() || f.degree() != deg)
        fail(Err::BadParameters, std::string(what) + " must be a binary form of degree " +
                                     std::to_string(deg));
}

MultiPoly quad_from_coeffs(const Fq& F, const std::array<Fq::Elem, 3>& r) {
    MultiPoly out(F, 2);
    if (r[0]) out.terms.push_back({pack_exp(2, 0), r[0]});
    if (r[1]) out.terms.push_back({pack_exp(1, 1), r[1]});
    if (r[2]) out.terms.push_back({pack_exp(0, 2), r[2]});
    std::sort(out.terms.begin(), out.terms.end());
    return out;
}

// exact division of binary forms by undetermined coefficients
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
    const Fq& F = *f.F;
    if (g.is_zero()) fail(Err::DivideByZero, "division by the zero form");
    if (f.is_zero()) return MultiPoly(F, 2);
    int df = f.degree(), dg = g.degree();
    if (df < dg) return std::nullopt;
    int dq = df - dg;
    // solve q * g = f coefficientwise; q has dq+1 unknowns
    std::vector<Fq::Elem> fc(df + 1, 0), gc(dg + 1, 0);
    for (auto& [k, c] : f.terms) fc[exp_of(k, 0)] = c;
    for (auto& [k, c] : g.terms) gc[exp_of(k, 0)] = c;
    std::vector<Fq::Elem> qc(dq + 1, 0);
    // triangular solve from the top t0-degree down
    for (int d = dq; d >= 0; --d) {
        // coefficient of t0^(d+dg): sum_{i+j = d+dg} q_i g_j
        Fq::Elem acc = fc[d + dg];
        for (int i = d + 1; i <= dq; ++i) {
            int j = d + dg - i;
            if (j >= 0 && j <= dg) acc = F.sub(acc, F.mul(qc[i], gc[j]));
        }
        if (gc[dg] == 0) {
            if (acc != 0) return std::nullopt;
            qc[d] = 0;  // underdetermined; handled by the final check
        } else {
            qc[d] = F.div(acc, gc[dg]);
        }
    }
    MultiPoly q(F, 2);
    for (int i = 0; i <= dq; ++i)
        if (qc[i]) q.terms.push_back({pack_exp(i, dq - i), qc[i]});
    std::sort(q.terms.begin(), q.terms.end());
    if (q * g == f) return q;
    // retry with the roles of t0 and t1 swapped when the leading coeff vanished
    if (gc[dg] == 0) {
        auto swap_vars = [&](const MultiPoly& h) {
            MultiPoly out(F, 2);
            for (auto& [k, c] : h.terms) out.terms.push_back({pack_exp(exp_of(k, 1), exp_of(k, 0)), c});
            std::sort(out.terms.begin(), out.terms.end());
            return out;
        };
        auto alt = exact_divide(swap_vars(f), swap_vars(g));
        if (alt) {
            MultiPoly back = swap_vars(*alt);
            if (back * g == f) return back;
        }
    }
    return std::nullopt;
}

}  // namespace

WeierstrassModel make_model(const Fq& F, const MultiPoly& a2, const MultiPoly& a4,
                            const MultiPoly& a6) {
    if (F.p() == 2) fail(Err::EvenCharacteristic, "odd characteristic only");
    check_form(a2, 2, "a2");
    check_form(a4, 4, "a4");
    check_form(a6, 6, "a6");
    return WeierstrassModel{&F, a2, a4, a6};
}

WeierstrassModel model_embed(const WeierstrassModel& W, const Fq& K) {
    if (&K == W.F) return W;
    const Embedding& e = get_embedding(*W.F, K);
    WeierstrassModel out;
    out.F = &K;
    out.a2 = W.a2.is_zero() ? MultiPoly(K, 2) : mp_embed(W.a2, e);
    out.a4 = W.a4.is_zero() ? MultiPoly(K, 2) : mp_embed(W.a4, e);
    out.a6 = W.a6.is_zero() ? MultiPoly(K, 2) : mp_embed(W.a6, e);
    return out;
}

MultiPoly discriminant(const WeierstrassModel& W) {
    const Fq& F = *W.F;
    MultiPoly delta(F, 2);
    if (F.p() == 3) {
        delta = mp_scale(W.a2 * W.a2 * W.a2 * W.a6, F.neg(1)) + W.a2 * W.a2 * W.a4 * W.a4 -
                W.a4 * W.a4 * W.a4;
    } else {
        // complete the cube: A4 = a4 - a2^2/3, A6 = a6 - a2 a4 / 3 + 2 a2^3 / 27
        Fq::Elem third = F.inv(F.from_int(3));
        MultiPoly A4 = W.a4 - mp_scale(W.a2 * W.a2, third);
        MultiPoly A6 = W.a6 - mp_scale(W.a2 * W.a4, third) +
                       mp_scale(W.a2 * W.a2 * W.a2, F.mul(F.from_int(2), F.inv(F.from_int(27))));
        delta = mp_scale(A4 * A4 * A4, F.from_int(4)) + mp_scale(A6 * A6, F.from_int(27));
    }
    if (delta.is_zero()) fail(Err::ZeroDiscriminant, "discriminant vanishes identically");
    return delta;
}

std::pair<MultiPoly, MultiPoly> j_invariant(const WeierstrassModel& W) {
    if (W.F->p() != 3) fail(Err::BadParameters, "j_invariant is needed only in characteristic 3");
    MultiPoly delta = discriminant(W);
    MultiPoly num = W.a2.is_zero() ? MultiPoly(*W.F, 2)
                                   : W.a2 * W.a2 * W.a2 * W.a2 * W.a2 * W.a2;
    return {num, delta};
}

std::optional<SurfacePoint> is_smooth(const WeierstrassModel& W, int search_k) {
    const Fq& F0 = *W.F;
    if (F0.q() > 729) fail(Err::SearchSpaceTooLarge, "smoothness scan needs a base field q <= 729");
    for (int level = 1; level <= search_k; ++level) {
        if (F0.k() * level > 12) break;
        uint64_t q = 1;
        for (uint32_t i = 0; i < F0.k() * level; ++i) q *= F0.p();
        if (q > 729) break;
        const Fq& K = make_field(F0.p(), F0.k() * level);
        WeierstrassModel M = model_embed(W, K);
        std::array<MultiPoly, 2> d2{mp_derivative(M.a2, 0), mp_derivative(M.a2, 1)};
        std::array<MultiPoly, 2> d4{mp_derivative(M.a4, 0), mp_derivative(M.a4, 1)};
        std::array<MultiPoly, 2> d6{mp_derivative(M.a6, 0), mp_derivative(M.a6, 1)};
        auto scan_t = [&](Fq::Elem t0, Fq::Elem t1) -> std::optional<SurfacePoint> {
            std::array<Fq::Elem, 3> T{t0, t1, 0};
            Fq::Elem v2 = M.a2.eval(T), v4 = M.a4.eval(T), v6 = M.a6.eval(T);
            for (uint32_t x = 0; x < K.q(); ++x) {
                // y = 0 at any singular point since p != 2
                Fq::Elem fx = K.add(K.add(K.mul(K.from_int(3), K.mul(x, x)),
                                          K.mul(K.from_int(2), K.mul(v2, x))),
                                    v4);
                if (fx != 0) continue;
                Fq::Elem fv = K.add(K.add(K.mul(x, K.mul(x, x)), K.mul(v2, K.mul(x, x))),
                                    K.add(K.mul(v4, x), v6));
                if (fv != 0) continue;
                bool sing = true;
                for (int i = 0; i < 2 && sing; ++i) {
                    Fq::Elem ft = K.add(K.add(K.mul(d2[i].eval(T), K.mul(x, x)),
                                              K.mul(d4[i].eval(T), x)),
                                        d6[i].eval(T));
                    if (ft != 0) sing = false;
                }
                if (sing) return SurfacePoint{&K, static_cast<uint32_t>(level), t0, t1, x, 0};
            }
            return std::nullopt;
        };
        for (uint32_t t1 = 0; t1 < K.q(); ++t1)
            if (auto s = scan_t(1, t1)) return s;
        if (auto s = scan_t(0, 1)) return s;
    }
    return std::nullopt;
}

HPDecomposition compute_H(const WeierstrassModel& W) {
    const Fq& F = *W.F;
    discriminant(W);  // ZeroDiscriminant check
    if (F.p() == 3) {
        if (!W.a2.is_zero()) return {2, 1};  // j != 0
        if (!W.a4.is_zero() && is_square_binary(W.a4)) return {6, 3};
        return {2, 1};
    }
    Fq::Elem third = F.inv(F.from_int(3));
    MultiPoly A4 = W.a4 - mp_scale(W.a2 * W.a2, third);
    MultiPoly A6 = W.a6 - mp_scale(W.a2 * W.a4, third) +
                   mp_scale(W.a2 * W.a2 * W.a2, F.mul(F.from_int(2), F.inv(F.from_int(27))));
    if (A4.is_zero()) return {6, 1};  // j = 0
    if (A6.is_zero()) return {4, 1};  // j = 1728
    return {2, 1};
}

// ---------------------------------------------------------------------------
// WeierstrassAuto

bool operator==(const WeierstrassAuto& a, const WeierstrassAuto& b) {
    return a.m == b.m && a.u == b.u && a.r == b.r;
}

bool operator<(const WeierstrassAuto& a, const WeierstrassAuto& b) {
    if (!(a.m.a == b.m.a)) return a.m.a < b.m.a;
    if (a.u != b.u) return a.u < b.u;
    return a.r < b.r;
}

WeierstrassAuto wa_identity(const Fq& F) {
    return WeierstrassAuto{SqMat::identity(F, 2), 1, {0, 0, 0}};
}

WeierstrassAuto wa_bertini(const Fq& F) {
    return WeierstrassAuto{SqMat::identity(F, 2), F.neg(1), {0, 0, 0}};
}

namespace {

WeierstrassAuto wa_canon(SqMat m, Fq::Elem u, std::array<Fq::Elem, 3> r) {
    const Fq& F = *m.F;
    // (M, u, r) ~ (sM, su, s^2 r): normalize the first nonzero entry of M to 1
    int first = 0;
    while (first < 4 && m.a[first] == 0) ++first;
    Fq::Elem s = m.a[first];
    if (s != 1) {
        Fq::Elem si = F.inv(s);
        for (int i = 0; i < 4; ++i) m.a[i] = F.mul(m.a[i], si);
        u = F.mul(u, si);
        Fq::Elem si2 = F.mul(si, si);
        for (auto& c : r) c = F.mul(c, si2);
    }
    return WeierstrassAuto{m, u, r};
}

std::array<Fq::Elem, 3> quad_compose(const Fq& F, const std::array<Fq::Elem, 3>& r,
                                     const SqMat& M) {
    // r(M t) for r = r0 t0^2 + r1 t0 t1 + r2 t1^2
    Fq::Elem a = M.at(0, 0), b = M.at(0, 1), c = M.at(1, 0), d = M.at(1, 1);
    std::array<Fq::Elem, 3> out{};
    // t0' = a t0 + b t1, t1' = c t0 + d t1
    out[0] = F.add(F.add(F.mul(r[0], F.mul(a, a)), F.mul(r[1], F.mul(a, c))),
                   F.mul(r[2], F.mul(c, c)));
    out[1] = F.add(F.add(F.mul(r[0], F.mul(F.from_int(2), F.mul(a, b))),
                         F.mul(r[1], F.add(F.mul(a, d), F.mul(b, c)))),
                   F.mul(r[2], F.mul(F.from_int(2), F.mul(c, d))));
    out[2] = F.add(F.add(F.mul(r[0], F.mul(b, b)), F.mul(r[1], F.mul(b, d))),
                   F.mul(r[2], F.mul(d, d)));
    return out;
}

}  // namespace

WeierstrassAuto wa_compose(const WeierstrassAuto& a, const WeierstrassAuto& b) {
    // (a o b)(P) = a(b(P)): M = Ma Mb, u = ua ub, r = ua^2 rb + ra o Mb
    const Fq& F = *a.m.F;
    SqMat m = mat_mul(a.m, b.m);
    Fq::Elem u = F.mul(a.u, b.u);
    std::array<Fq::Elem, 3> r = quad_compose(F, a.r, b.m);
    Fq::Elem ua2 = F.mul(a.u, a.u);
    for (int i = 0; i < 3; ++i) r[i] = F.add(F.mul(ua2, b.r[i]), r[i]);
    return wa_canon(m, u, r);
}

int wa_order(const WeierstrassAuto& a, int cap) {
    WeierstrassAuto id = wa_identity(*a.m.F);
    WeierstrassAuto acc = a;
    for (int m = 1; m <= cap; ++m) {
        if (acc == id) return m;
        acc = wa_compose(acc, a);
    }
    fail(Err::Internal, "weierstrass automorphism order exceeds cap");
}

bool wa_preserves(const WeierstrassModel& W, const WeierstrassAuto& a) {
    const Fq& F = *W.F;
    MultiPoly r = quad_from_coeffs(F, a.r);
    SqMat M = a.m;
    auto comp = [&](const MultiPoly& f) {
        return f.is_zero() ? f : substitute_linear(f, M);
    };
    MultiPoly A2 = comp(W.a2), A4 = comp(W.a4), A6 = comp(W.a6);
    Fq::Elem u2 = F.mul(a.u, a.u), u4 = F.mul(u2, u2), u6 = F.mul(u4, u2);
    // x^2: 3 u^4 r + u^4 A2 = u^6 a2
    MultiPoly lhs2 = mp_scale(r, F.mul(F.from_int(3), u4)) + mp_scale(A2, u4);
    if (!(lhs2 == mp_scale(W.a2, u6))) return false;
    // x^1: 3 u^2 r^2 + 2 u^2 A2 r + u^2 A4 = u^6 a4
    MultiPoly lhs1 = mp_scale(r * r, F.mul(F.from_int(3), u2)) +
                     mp_scale(A2 * r, F.mul(F.from_int(2), u2)) + mp_scale(A4, u2);
    if (!(lhs1 == mp_scale(W.a4, u6))) return false;
    // x^0: r^3 + A2 r^2 + A4 r + A6 = u^6 a6
    MultiPoly lhs0 = r * r * r + A2 * r * r + A4 * r + A6;
    return lhs0 == mp_scale(W.a6, u6);
}

// ---------------------------------------------------------------------------
// Lifting

std::vector<WeierstrassAuto> lift_check(const WeierstrassModel& W, const ProjTransform& g) {
    const Fq& F = *W.F;
    if (g.n() != 2 || g.m.F != &F) fail(Err::SpecMismatch, "base transform mismatch");
    discriminant(W);
    std::vector<WeierstrassAuto> out;
    SqMat M = g.m;
    auto comp = [&](const MultiPoly& f) { return f.is_zero() ? f : substitute_linear(f, M); };
    MultiPoly A2 = comp(W.a2), A4 = comp(W.a4), A6 = comp(W.a6);
    uint32_t p = F.p();
    for (uint32_t u = 1; u < F.q(); ++u) {
        Fq::Elem u2 = F.mul(u, u), u4 = F.mul(u2, u2), u6 = F.mul(u4, u2);
        std::vector<MultiPoly> candidates;
        if (p != 3) {
            // r = (u^6 a2 - u^4 A2) / (3 u^4)
            MultiPoly num = mp_scale(W.a2, u6) - mp_scale(A2, u4);
            Fq::Elem den = F.inv(F.mul(F.from_int(3), u4));
            candidates.push_back(mp_scale(num, den));
        } else if (!W.a2.is_zero() || !A2.is_zero()) {
            // x^2 condition: A2 = u^2 a2; then x^1 is linear in r:
            // -A2 r = u^6 a4 - u^2 A4  (2 = -1 in char 3)
            if (!(A2 == mp_scale(W.a2, u2))) continue;
            MultiPoly num = mp_scale(W.a4, F.mul(u6, F.inv(u2))) - A4;  // u^4 a4 - A4
            // r = (A4 - u^4 a4) / A2
            auto q = exact_divide(mp_scale(num, F.neg(1)), A2);
            if (!q) continue;
            candidates.push_back(*q);
        } else {
            // p = 3, a2 = 0: x^1 condition A4 = u^4 a4, then the cubic in r is
            // F_3-linear: r^3 + A4 r = u^6 a6 - A6
            if (!(A4 == mp_scale(W.a4, u4))) continue;
            MultiPoly target = mp_scale(W.a6, u6) - A6;
            // solve over the F_3-vector space of quadratics
            uint32_t k = F.k();
            int dim = 3 * static_cast<int>(k);
            // basis vectors: monomial t0^(2-i) t1^i times the field basis x^j
            auto apply = [&](const std::array<Fq::Elem, 3>& r) {
                MultiPoly rq = quad_from_coeffs(F, r);
                return rq * rq * rq + A4 * rq;
            };
            // build the matrix over F_3: images of basis quadratics, expressed
            // in the degree-6 coefficient space (7 coords, each k digits)
            int rows = 7 * static_cast<int>(k);
            std::vector<std::vector<uint32_t>> mat(rows, std::vector<uint32_t>(dim + 1, 0));
            auto encode = [&](const MultiPoly& f6, int col) {
                for (auto& [key, c] : f6.terms) {
                    int e0 = exp_of(key, 0);
                    auto digits = F.coeffs(c);
                    for (uint32_t d = 0; d < k; ++d)
                        mat[static_cast<size_t>(e0) * k + d][col] = digits[d];
                }
            };
            for (int i = 0; i < 3; ++i)
                for (uint32_t j = 0; j < k; ++j) {
                    std::array<Fq::Elem, 3> r{};
                    Fq::Elem basis = 1;
                    for (uint32_t t = 0; t < j; ++t) basis *= F.p();  // element x^j
                    r[i] = basis;
                    encode(apply(r), static_cast<int>(i * k + j));
                }
            encode(target, dim);
            // F_3 gaussian elimination
            int rr = 0;
            std::vector<int> pivot(dim, -1);
            for (int c = 0; c < dim && rr < rows; ++c) {
                int pr = -1;
                for (int rI = rr; rI < rows; ++rI)
                    if (mat[rI][c]) {
                        pr = rI;
                        break;
                    }
                if (pr < 0) continue;
                std::swap(mat[rr], mat[pr]);
                uint32_t inv = mat[rr][c] == 1 ? 1 : 2;  // inverse mod 3
                for (auto& v : mat[rr]) v = v * inv % 3;
                for (int rI = 0; rI < rows; ++rI) {
                    if (rI == rr || !mat[rI][c]) continue;
                    uint32_t fmul = mat[rI][c];
                    for (int t = 0; t <= dim; ++t)
                        mat[rI][t] = (mat[rI][t] + (3 - fmul) * mat[rr][t]) % 3;
                }
                pivot[c] = rr;
                ++rr;
            }
            bool feasible = true;
            for (int rI = rr; rI < rows; ++rI)
                if (mat[rI][dim]) feasible = false;
            if (!feasible) continue;
            std::vector<int> free_cols;
            for (int c = 0; c < dim; ++c)
                if (pivot[c] < 0) free_cols.push_back(c);
            uint64_t combos = 1;
            for (size_t i = 0; i < free_cols.size(); ++i) combos *= 3;
            for (uint64_t code = 0; code < combos; ++code) {
                std::vector<uint32_t> sol(dim, 0);
                uint64_t cc = code;
                for (int fcN : free_cols) {
                    sol[fcN] = static_cast<uint32_t>(cc % 3);
                    cc /= 3;
                }
                for (int c = 0; c < dim; ++c) {
                    if (pivot[c] < 0) continue;
                    uint32_t v = mat[pivot[c]][dim];
                    for (int fcN : free_cols)
                        v = (v + 3 - mat[pivot[c]][fcN] * sol[fcN] % 3) % 3;
                    sol[c] = v;
                }
                std::array<Fq::Elem, 3> r{};
                for (int i = 0; i < 3; ++i) {
                    std::vector<uint32_t> digits(k);
                    for (uint32_t j = 0; j < k; ++j) digits[j] = sol[static_cast<size_t>(i) * k + j];
                    r[i] = F.from_coeffs(digits);
                }
                candidates.push_back(quad_from_coeffs(F, r));
            }
        }
        for (auto& rq : candidates) {
            if (!rq.is_zero() && (rq.degree() > 2 || !rq.is_homogeneous())) continue;
            std::array<Fq::Elem, 3> r{rq.coeff(pack_exp(2, 0)), rq.coeff(pack_exp(1, 1)),
                                      rq.coeff(pack_exp(0, 2))};
            WeierstrassAuto cand = wa_canon(M, u, r);
            if (wa_preserves(W, cand)) {
                if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Full automorphism group

namespace {

// dense semi-invariance test: delta(g t) proportional to delta(t), without
// polynomial allocations (the PGL_2(81) filter visits ~5*10^5 elements)
struct DeltaFilter {
    const Fq* F;
    int deg;
    std::vector<Fq::Elem> coef;  // by t0-exponent
    std::vector<std::pair<P1Point, int>> rational_roots;

    explicit DeltaFilter(const MultiPoly& delta) : F(delta.F), deg(delta.degree()) {
        const Fq& K = *F;
        coef.assign(deg + 1, 0);
        for (auto& [k, c] : delta.terms) coef[exp_of(k, 0)] = c;
        // rational roots with multiplicities (a necessary condition to prefilter).
        // [0:1] is the form t0: its multiplicity is the number of vanishing
        // low t0-coefficients; [1:w] by synthetic division in s = t1/t0.
        {
            int m = 0;
            while (m <= deg && coef[m] == 0) ++m;
            if (m > 0) rational_roots.push_back({P1Point{0, 1}, m});
        }
        for (uint32_t w = 0; w < K.q(); ++w) {
            // dehomogenize at t0 = 1: pi(s) = sum coef[deg-j] s^j
            std::vector<Fq::Elem> pi(deg + 1);
            for (int j = 0; j <= deg; ++j) pi[j] = coef[deg - j];
            int m = 0;
            int d = deg;
            while (d >= 1) {
                // synthetic division of pi (degree d) by (s - w)
                std::vector<Fq::Elem> sigma(d, 0);
                Fq::Elem acc = pi[d];
                for (int j = d - 1; j >= 0; --j) {
                    sigma[j] = acc;
                    acc = K.add(pi[j], K.mul(acc, w));
                }
                if (acc != 0) break;
                ++m;
                pi.assign(sigma.begin(), sigma.end());
                --d;
            }
            if (m > 0) rational_roots.push_back({P1Point{1, w}, m});
        }
        std::sort(rational_roots.begin(), rational_roots.end());
    }

    bool passes(const ProjTransform& g) const {
        const Fq& K = *F;
        // root prefilter: rational roots map to rational roots of equal mult
        for (auto& [P, m] : rational_roots) {
            Fq::Elem u = K.add(K.mul(g.m.at(0, 0), P.u), K.mul(g.m.at(0, 1), P.v));
            Fq::Elem v = K.add(K.mul(g.m.at(1, 0), P.u), K.mul(g.m.at(1, 1), P.v));
            P1Point img = p1_canon(K, u, v);
            auto it = std::lower_bound(rational_roots.begin(), rational_roots.end(),
                                       std::make_pair(img, 0));
            if (it == rational_roots.end() || !(it->first == img) || it->second != m)
                return false;
        }
        // exact dense composition
        Fq::Elem a = g.m.at(0, 0), b = g.m.at(0, 1), c = g.m.at(1, 0), dd = g.m.at(1, 1);
        // powers of the two linear images
        Fq::Elem pa[13][13], pb[13][13];  // p*[e][j] = coeff of t0^(e-j) t1^j
        pa[0][0] = 1;
        pb[0][0] = 1;
        for (int e = 1; e <= deg; ++e) {
            for (int j = 0; j <= e; ++j) {
                Fq::Elem va = 0, vb = 0;
                if (j <= e - 1) {
                    va = K.mul(pa[e - 1][j], a);
                    vb = K.mul(pb[e - 1][j], c);
                }
                if (j >= 1) {
                    va = K.add(va, K.mul(pa[e - 1][j - 1], b));
                    vb = K.add(vb, K.mul(pb[e - 1][j - 1], dd));
                }
                pa[e][j] = va;
                pb[e][j] = vb;
            }
        }
        Fq::Elem out[13];
        for (int j = 0; j <= deg; ++j) out[j] = 0;
        for (int e = 0; e <= deg; ++e) {
            if (!coef[e]) continue;
            int f2 = deg - e;
            for (int i = 0; i <= e; ++i) {
                if (!pa[e][i]) continue;
                Fq::Elem ci = K.mul(coef[e], pa[e][i]);
                for (int j = 0; j <= f2; ++j)
                    out[i + j] = K.add(out[i + j], K.mul(ci, pb[f2][j]));
            }
        }
        // proportional to coef? out is indexed by t1-exponent, so compare
        // against coef[deg - j]
        Fq::Elem lambda = 0;
        for (int j = 0; j <= deg; ++j) {
            Fq::Elem want = coef[deg - j];
            if (want == 0) {
                if (out[j] != 0) return false;
                continue;
            }
            Fq::Elem l = K.div(out[j], want);
            if (lambda == 0)
                lambda = l;
            else if (l != lambda)
                return false;
        }
        return lambda != 0;
    }
};

}  // namespace

Dp1AutReport aut_dp1(const WeierstrassModel& W0, const Fq& K) {
    WeierstrassModel W = model_embed(W0, K);
    MultiPoly delta = discriminant(W);
    Dp1AutReport rep;
    rep.hp = compute_H(W);
    if (K.q() > 6561) fail(Err::SearchSpaceTooLarge, "PGL_2 search limited to q <= 6561");
    // candidates: base transforms preserving the discriminant up to scalar.
    // Up to q = 128 the whole of PGL_2(q) is enumerated; beyond that only the
    // triangular and monomial shapes are tried (they cover every P occurring
    // in the classification: translations, diagonal and antidiagonal maps).
    std::vector<ProjTransform> all;
    if (K.q() <= 128) {
        all = pgl2_elements(K);
    } else {
        for (uint32_t b = 0; b < K.q(); ++b) {
            SqMat lo{&K, 2, {}};
            lo.at(0, 0) = 1;
            lo.at(1, 0) = b;
            lo.at(1, 1) = 1;
            all.push_back(pt_canon(lo));
            SqMat up{&K, 2, {}};
            up.at(0, 0) = 1;
            up.at(0, 1) = b;
            up.at(1, 1) = 1;
            all.push_back(pt_canon(up));
        }
        for (uint32_t a = 1; a < K.q(); ++a) {
            SqMat d{&K, 2, {}};
            d.at(0, 0) = a;
            d.at(1, 1) = 1;
            all.push_back(pt_canon(d));
            SqMat s{&K, 2, {}};
            s.at(0, 1) = a;
            s.at(1, 0) = 1;
            all.push_back(pt_canon(s));
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
    }
    DeltaFilter filter(delta);
    std::vector<ProjTransform> candidates;
    {
        std::mutex mtx;
        parallel_chunks(all.size(), [&](uint64_t b, uint64_t e) {
            std::vector<ProjTransform> local;
            for (uint64_t i = b; i < e; ++i)
                if (filter.passes(all[i])) local.push_back(all[i]);
            std::lock_guard<std::mutex> lock(mtx);
            candidates.insert(candidates.end(), local.begin(), local.end());
        });
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<ProjTransform> liftable;
    for (auto& g : candidates) {
        auto lifts = lift_check(W, g);
        if (lifts.empty()) continue;
        liftable.push_back(g);
        rep.elements.insert(rep.elements.end(), lifts.begin(), lifts.end());
    }
    std::sort(rep.elements.begin(), rep.elements.end());
    rep.elements.erase(std::unique(rep.elements.begin(), rep.elements.end()), rep.elements.end());
    rep.P.F = &K;
    rep.P.n = 2;
    rep.P.elements = std::move(liftable);
    rep.order = rep.elements.size();
    // H x P consistency and closure
    if (rep.order != static_cast<uint64_t>(rep.hp.H_order) * rep.P.order())
        fail(Err::Internal, "lift count does not factor as |H| |P|");
    for (auto& a : rep.elements) {
        if (!wa_preserves(W, a)) fail(Err::Internal, "non-automorphism in the lift set");
        ++rep.histogram[wa_order(a)];
    }
    if (rep.order <= 1024) {
        for (auto& a : rep.elements)
            for (auto& b : rep.elements)
                if (!std::binary_search(rep.elements.begin(), rep.elements.end(),
                                        wa_compose(a, b)))
                    fail(Err::Internal, "lift set is not closed under composition");
    }
    WeierstrassAuto beta = wa_bertini(K);
    rep.bertini_central = true;
    for (auto& a : rep.elements)
        if (!(wa_compose(a, beta) == wa_compose(beta, a))) rep.bertini_central = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Families

Family1 family1_by_name(const std::string& name) {
    if (name == "d10_char5") return Family1::D10Char5;
    if (name == "pgl25_char5") return Family1::Pgl25Char5;
    if (name == "jnz_generic") return Family1::JnzGeneric;
    if (name == "jnz_33") return Family1::Jnz33;
    if (name == "j0_c2") return Family1::J0C2;
    if (name == "j0_two_fibers") return Family1::J0TwoFibers;
    if (name == "j0_one_fiber") return Family1::J0OneFiber;
    if (name == "c10_char3") return Family1::C10Char3;
    if (name == "m_char") return Family1::MChar;
    if (name == "quartic_pencil") return Family1::QuarticPencil;
    if (name == "sextic_fermat") return Family1::SexticFermat;
    fail(Err::BadParameters, "unknown weierstrass family " + name);
}

std::string family1_name(Family1 f) {
    switch (f) {
        case Family1::D10Char5: return "d10_char5";
        case Family1::Pgl25Char5: return "pgl25_char5";
        case Family1::JnzGeneric: return "jnz_generic";
        case Family1::Jnz33: return "jnz_33";
        case Family1::J0C2: return "j0_c2";
        case Family1::J0TwoFibers: return "j0_two_fibers";
        case Family1::J0OneFiber: return "j0_one_fiber";
        case Family1::C10Char3: return "c10_char3";
        case Family1::MChar: return "m_char";
        case Family1::QuarticPencil: return "quartic_pencil";
        case Family1::SexticFermat: return "sextic_fermat";
    }
    return "?";
}

WeierstrassModel make_family1(Family1 name, const std::vector<Fq::Elem>& params, const Fq& F) {
    auto need = [&](size_t n, uint32_t p) {
        if (p && F.p() != p)
            fail(Err::BadParameters,
                 family1_name(name) + " lives in characteristic " + std::to_string(p));
        if (params.size() != n)
            fail(Err::BadParameters, family1_name(name) + " expects " + std::to_string(n) +
                                         " parameter(s), got " + std::to_string(params.size()));
    };
    auto nonzero = [&](Fq::Elem v, const char* what) {
        if (v == 0) fail(Err::BadParameters, family1_name(name) + ": " + what + " must be nonzero");
    };
    MultiPoly a2 = bin_zero(F), a4 = bin_zero(F), a6 = bin_zero(F);
    switch (name) {
        case Family1::D10Char5: {
            need(1, 5);
            nonzero(params[0], "c");
            a4 = mp_scale(bin(F, {{4, 1}}, 4), params[0]);
            a6 = bin(F, {{1, 1}, {5, -1}}, 6);  // t0 t1^5 - t0^5 t1
            break;
        }
        case Family1::Pgl25Char5: {
            need(0, 5);
            a6 = bin(F, {{1, 1}, {5, -1}}, 6);
            break;
        }
        case Family1::JnzGeneric: {
            need(3, 3);
            Fq::Elem a = params[0], b = params[1], c = params[2];
            nonzero(a, "a");
            nonzero(b, "b");
            nonzero(c, "c");
            if (F.mul(a, c) == 1)
                fail(Err::BadParameters, "jnz_generic requires ac != 1");
            a2 = mp_scale(bin(F, {{2, 1}}, 2), a);
            a4 = bin(F, {{1, 1}, {3, -1}}, 4);  // t0 t1^3 - t0^3 t1
            a6 = mp_scale(bin(F, {{6, 1}}, 6), b) +
                 mp_scale(bin(F, {{4, 1}, {2, 1}, {0, 1}}, 6), c);
            break;
        }
        case Family1::Jnz33: {
            need(2, 3);
            nonzero(params[1], "b");
            a2 = bin(F, {{2, 1}}, 2);
            a4 = bin(F, {{1, 1}}, 4);  // t0 t1^3
            a6 = bin(F, {{0, 1}}, 6) + mp_scale(bin(F, {{3, 1}}, 6), params[0]) +
                 mp_scale(bin(F, {{5, 1}}, 6), params[1]);
            break;
        }
        case Family1::J0C2: {
            need(2, 3);
            nonzero(params[0], "a");
            nonzero(params[1], "b");
            a4 = bin(F, {{1, 1}, {3, -1}}, 4);
            a6 = mp_scale(bin(F, {{6, 1}}, 6), params[0]) +
                 mp_scale(bin(F, {{4, 1}, {2, 1}, {0, 1}}, 6), params[1]);
            break;
        }
        case Family1::J0TwoFibers: {
            need(3, 3);
            nonzero(params[0], "a");
            a4 = bin(F, {{2, -1}}, 4);  // -t0^2 t1^2
            a6 = mp_scale(bin(F, {{5, 1}}, 6), params[0]) +
                 mp_scale(bin(F, {{4, 1}}, 6), params[1]) +
                 mp_scale(bin(F, {{2, 1}}, 6), params[2]) + bin(F, {{1, 1}}, 6);
            break;
        }
        case Family1::J0OneFiber: {
            need(2, 3);
            a4 = bin(F, {{4, -1}}, 4);  // -t0^4
            a6 = mp_scale(bin(F, {{5, 1}}, 6), params[0]) +
                 mp_scale(bin(F, {{4, 1}}, 6), params[1]) + bin(F, {{1, 1}}, 6);
            break;
        }
        case Family1::C10Char3: {
            need(1, 3);
            nonzero(params[0], "a");
            a2 = bin(F, {{2, 1}}, 2);
            a6 = mp_scale(bin(F, {{1, 1}, {6, 1}}, 6), params[0]);  // a t0 (t1^5 + t0^5)
            break;
        }
        case Family1::MChar: {
            need(1, 0);
            if (F.p() == 3) fail(Err::BadParameters, "m_char lives in characteristic != 3");
            a6 = bin(F, {{5, 1}, {1, 1}}, 6) + mp_scale(bin(F, {{3, 1}}, 6), params[0]);
            break;
        }
        case Family1::QuarticPencil: {
            need(0, 0);
            if (F.p() == 3) fail(Err::BadParameters, "quartic_pencil lives in characteristic != 3");
            a6 = bin(F, {{5, 1}, {1, -1}}, 6);  // t0^5 t1 - t0 t1^5
            break;
        }
        case Family1::SexticFermat: {
            need(0, 0);
            if (F.p() == 3) fail(Err::BadParameters, "sextic_fermat lives in characteristic != 3");
            a6 = bin(F, {{6, 1}, {0, 1}}, 6);  // t0^6 + t1^6
            break;
        }
    }
    WeierstrassModel W = make_model(F, a2, a4, a6);
    discriminant(W);
    auto sing = is_smooth(W, 4);
    if (sing)
        fail(Err::SingularMember, family1_name(name) + " member is singular over GF(" +
                                      std::to_string(sing->F->p()) + "^" +
                                      std::to_string(sing->F->k()) + ")");
    return W;
}

const Fq& family1_search_field(Family1 name, const std::vector<Fq::Elem>& params, const Fq& F) {
    switch (name) {
        case Family1::D10Char5:
        case Family1::Pgl25Char5:
            return make_field(5, 2);
        case Family1::JnzGeneric:
        case Family1::J0C2:
            return make_field(3, 2);
        case Family1::Jnz33: {
            // smallest GF(3^m) containing the 9 roots of B^9 + a B^3 + b B
            for (uint32_t m = 1; m <= 8; ++m) {
                const Fq& K = make_field(3, m);
                const Embedding& e = get_embedding(F, K);
                Fq::Elem a = e.map(params.at(0)), b = e.map(params.at(1));
                int count = 0;
                for (uint32_t x = 0; x < K.q(); ++x)
                    if (K.add(K.add(K.pow(x, 9), K.mul(a, K.pow(x, 3))), K.mul(b, x)) == 0)
                        ++count;
                if (count == 9) return K;
            }
            fail(Err::SplittingBoundExceeded, "translation field for jnz_33 not found");
        }
        case Family1::J0TwoFibers:
        case Family1::J0OneFiber:
        case Family1::C10Char3:
            return make_field(3, 4);
        case Family1::MChar:
        case Family1::QuarticPencil:
        case Family1::SexticFermat:
            // the symmetries need 8th and 12th roots of unity
            return make_field(F.p(), 2);
    }
    fail(Err::Internal, "unreachable");
}

}  // namespace dpz::dp1
