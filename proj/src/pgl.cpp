#include "dpz/pgl.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_set>

#include "dpz/common.hpp"

namespace dpz {

bool operator==(const ProjTransform& a, const ProjTransform& b) { return a.m == b.m; }

bool operator<(const ProjTransform& a, const ProjTransform& b) {
    return a.m.a < b.m.a;
}

namespace {

struct PTHash {
    size_t operator()(const ProjTransform& g) const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < 9; ++i) {
            h ^= g.m.a[i];
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace

ProjTransform pt_canon(const SqMat& m) {
    const Fq& F = *m.F;
    if (mat_det(m) == 0) fail(Err::SingularMatrix, "projective transform must be invertible");
    int nn = m.n * m.n;
    int first = 0;
    while (first < nn && m.a[first] == 0) ++first;
    Fq::Elem s = F.inv(m.a[first]);
    ProjTransform out{m};
    for (int i = 0; i < nn; ++i) out.m.a[i] = F.mul(m.a[i], s);
    return out;
}

ProjTransform pt_identity(const Fq& F, int n) { return ProjTransform{SqMat::identity(F, n)}; }

ProjTransform pt_compose(const ProjTransform& a, const ProjTransform& b) {
    return pt_canon(mat_mul(a.m, b.m));
}

ProjTransform pt_inverse(const ProjTransform& a) { return pt_canon(mat_inv(a.m)); }

bool pt_is_identity(const ProjTransform& a) {
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (a.m.at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

int element_order(const ProjTransform& g, int cap) {
    ProjTransform acc = g;
    for (int m = 1; m <= cap; ++m) {
        if (pt_is_identity(acc)) return m;
        acc = pt_compose(acc, g);
    }
    fail(Err::Internal, "element order exceeds cap");
}

uint64_t pgl_order(int n, uint64_t q) {
    if (n == 2) return q * q * q - q;
    return q * q * q * (q * q * q - 1) * (q * q - 1);
}

bool FiniteGroup::contains(const ProjTransform& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

FiniteGroup closure(const std::vector<ProjTransform>& generators, size_t cap) {
    if (generators.empty()) fail(Err::BadParameters, "closure needs at least one generator");
    const Fq* F = generators[0].m.F;
    int n = generators[0].m.n;
    for (auto& g : generators)
        if (g.m.F != F || g.m.n != n) fail(Err::SpecMismatch, "generators live in different groups");
    std::unordered_set<ProjTransform, PTHash> seen;
    std::vector<ProjTransform> work;
    ProjTransform id = pt_identity(*F, n);
    seen.insert(id);
    work.push_back(id);
    for (auto& g : generators)
        if (seen.insert(g).second) work.push_back(g);
    for (size_t i = 0; i < work.size(); ++i) {
        for (auto& g : generators) {
            ProjTransform h = pt_compose(work[i], g);
            if (seen.insert(h).second) {
                if (seen.size() > cap) fail(Err::CapExceeded, "closure exceeded the cap");
                work.push_back(h);
            }
        }
    }
    FiniteGroup G;
    G.F = F;
    G.n = n;
    G.generators = generators;
    G.elements = std::move(work);
    std::sort(G.elements.begin(), G.elements.end());
    return G;
}

std::map<int, long> order_histogram(const FiniteGroup& G) {
    std::map<int, long> hist;
    for (auto& g : G.elements) ++hist[element_order(g)];
    return hist;
}

bool is_closed(const FiniteGroup& G) {
    for (auto& a : G.elements)
        for (auto& b : G.elements)
            if (!G.contains(pt_compose(a, b))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Dense homogeneous forms in 3 variables (for the stabilizer hot paths)

namespace {

// Monomials of degree d in 3 variables, same order as monomials_of_degree.
struct DenseIndex {
    std::vector<uint32_t> mons[5];  // degree 0..4
    std::map<uint32_t, int> pos[5];
    // index products: for (da, db): list of (ia, ib, iout)
    std::vector<std::array<int, 3>> prod[5][5];

    DenseIndex() {
        for (int d = 0; d <= 4; ++d) {
            mons[d] = monomials_of_degree(3, d);
            for (size_t i = 0; i < mons[d].size(); ++i) pos[d][mons[d][i]] = static_cast<int>(i);
        }
        for (int da = 0; da <= 4; ++da)
            for (int db = 0; da + db <= 4; ++db)
                for (size_t i = 0; i < mons[da].size(); ++i)
                    for (size_t j = 0; j < mons[db].size(); ++j) {
                        uint32_t k = mons[da][i] + mons[db][j];
                        prod[da][db].push_back(
                            {static_cast<int>(i), static_cast<int>(j), pos[da + db].at(k)});
                    }
    }
};

const DenseIndex& dense_index() {
    static DenseIndex di;
    return di;
}

using Dense = std::vector<Fq::Elem>;

Dense dense_from_sparse(const MultiPoly& f, int d) {
    const DenseIndex& di = dense_index();
    Dense out(di.mons[d].size(), 0);
    for (auto& [k, c] : f.terms) out[di.pos[d].at(k)] = c;
    return out;
}

void dense_mul_acc(const Fq& F, const Dense& a, int da, const Dense& b, int db, Fq::Elem scale,
                   Dense& out) {
    for (auto& [ia, ib, io] : dense_index().prod[da][db]) {
        Fq::Elem v = F.mul(a[ia], b[ib]);
        if (scale != 1) v = F.mul(v, scale);
        out[io] = F.add(out[io], v);
    }
}

// Transformed dense quartic f(M x) for sparse homogeneous quartic f.
Dense transform_quartic(const MultiPoly& f, const SqMat& M) {
    const Fq& F = *f.F;
    // row i of M is the image of x_i as a linear form
    Dense lin[3];
    for (int i = 0; i < 3; ++i) lin[i] = {M.at(i, 0), M.at(i, 1), M.at(i, 2)};
    // powers of each linear image
    Dense pw[3][5];
    for (int i = 0; i < 3; ++i) {
        pw[i][0] = {1};
        pw[i][1] = lin[i];
        for (int e = 2; e <= 4; ++e) {
            pw[i][e].assign(dense_index().mons[e].size(), 0);
            dense_mul_acc(F, pw[i][e - 1], e - 1, lin[i], 1, 1, pw[i][e]);
        }
    }
    Dense out(15, 0);
    Dense tmp;
    for (auto& [k, c] : f.terms) {
        int e0 = exp_of(k, 0), e1 = exp_of(k, 1), e2 = exp_of(k, 2);
        // multiply the three powers together
        const Dense* cur = &pw[0][e0];
        int curd = e0;
        if (e1) {
            tmp.assign(dense_index().mons[curd + e1].size(), 0);
            dense_mul_acc(F, *cur, curd, pw[1][e1], e1, 1, tmp);
            cur = &tmp;
            curd += e1;
        }
        if (e2) {
            if (curd + e2 == 4) {
                dense_mul_acc(F, *cur, curd, pw[2][e2], e2, c, out);
                continue;
            }
            Dense t2(dense_index().mons[curd + e2].size(), 0);
            dense_mul_acc(F, *cur, curd, pw[2][e2], e2, 1, t2);
            tmp = std::move(t2);
            cur = &tmp;
            curd += e2;
        }
        if (curd == 4) {
            for (size_t i = 0; i < out.size(); ++i) out[i] = F.add(out[i], F.mul(c, (*cur)[i]));
        } else {
            fail(Err::Internal, "transform_quartic expects degree 4");
        }
    }
    return out;
}

std::optional<Fq::Elem> dense_proportional(const Fq& F, const Dense& g, const Dense& f) {
    Fq::Elem lambda = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) {
            if (g[i] != 0) return std::nullopt;
            continue;
        }
        Fq::Elem l = F.div(g[i], f[i]);
        if (lambda == 0)
            lambda = l;
        else if (l != lambda)
            return std::nullopt;
    }
    if (lambda == 0) return std::nullopt;
    return lambda;
}

// Enumerate canonical matrices of PGL_3(q): entries before the first nonzero
// are zero, the first nonzero is 1. Calls fn for every invertible candidate.
template <class Fn>
void enumerate_pgl3(const Fq& F, Fn&& fn) {
    uint32_t q = F.q();
    // the first nonzero entry sits in the first row, else the matrix is singular
    for (int lead = 0; lead < 3; ++lead) {
        int free_cnt = 8 - lead;
        uint64_t total = 1;
        for (int i = 0; i < free_cnt; ++i) total *= q;
        SqMat m{&F, 3, {}};
        m.a[lead] = 1;
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t c = code;
            for (int i = 0; i < free_cnt; ++i) {
                m.a[lead + 1 + i] = static_cast<Fq::Elem>(c % q);
                c /= q;
            }
            if (mat_det(m) == 0) continue;
            fn(m);
        }
    }
}

FiniteGroup stabilizer_plain3(const MultiPoly& f) {
    const Fq& F = *f.F;
    Dense fd = dense_from_sparse(f, 4);
    // fixed probe points for the pointwise prefilter
    std::vector<std::array<Fq::Elem, 3>> probes = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, F.from_int(2), F.from_int(3)}};
    std::vector<Fq::Elem> fvals;
    for (auto& P : probes) fvals.push_back(f.eval(P));
    std::vector<ProjTransform> found;
    enumerate_pgl3(F, [&](const SqMat& m) {
        // zero patterns must match and cross products must agree:
        // f(M p_i) f(p_j) = f(M p_j) f(p_i)
        Fq::Elem v0 = 0, w0 = 0;
        bool ok = true, have = false;
        for (size_t i = 0; i < probes.size() && ok; ++i) {
            Fq::Elem vi = f.eval(mat_apply(m, probes[i]));
            if ((vi == 0) != (fvals[i] == 0)) {
                ok = false;
                break;
            }
            if (vi == 0) continue;
            if (!have) {
                v0 = vi;
                w0 = fvals[i];
                have = true;
            } else if (F.mul(vi, w0) != F.mul(v0, fvals[i])) {
                ok = false;
            }
        }
        if (!ok) return;
        Dense g = transform_quartic(f, m);
        if (dense_proportional(F, g, fd)) found.push_back(pt_canon(m));
    });
    FiniteGroup G;
    G.F = &F;
    G.n = 3;
    G.elements = std::move(found);
    std::sort(G.elements.begin(), G.elements.end());
    G.elements.erase(std::unique(G.elements.begin(), G.elements.end()), G.elements.end());
    return G;
}

// Pruned column-by-column stabilizer (n = 3). Enumerates the image of the
// first two coordinate points, keeps pairs whose restriction to the x2 = 0
// line is proportional to f's restriction, then solves the x2-linear layer
// for the last column.
FiniteGroup stabilizer_pruned3(const MultiPoly& f) {
    const Fq& F = *f.F;
    uint32_t q = F.q();
    // restriction of f to x2 = 0 as a dense binary quartic
    Fq::Elem frest[5] = {0, 0, 0, 0, 0};
    bool rest_zero = true;
    for (auto& [k, c] : f.terms)
        if (exp_of(k, 2) == 0) {
            frest[exp_of(k, 1)] = c;
            rest_zero = false;
        }
    if (rest_zero) {
        // f divisible by x2 (never smooth); the pruning anchor is gone
        if (F.q() > 5) fail(Err::SearchSpaceTooLarge, "pruned search needs f not divisible by x2");
        return stabilizer_plain3(f);
    }
    Dense fd = dense_from_sparse(f, 4);
    std::array<MultiPoly, 3> partials;
    for (int i = 0; i < 3; ++i) partials[i] = mp_derivative(f, i);
    // x2-linear layer of f: coefficients of x0^(3-r) x1^r x2
    Fq::Elem fx2[4] = {0, 0, 0, 0};
    for (auto& [k, c] : f.terms)
        if (exp_of(k, 2) == 1) fx2[exp_of(k, 1)] = c;

    // all projective points of P^2 with first nonzero = 1 (candidate first columns)
    std::vector<std::array<Fq::Elem, 3>> c0s;
    for (uint32_t y = 0; y < q; ++y)
        for (uint32_t z = 0; z < q; ++z) c0s.push_back({1, y, z});
    for (uint32_t z = 0; z < q; ++z) c0s.push_back({0, 1, z});
    c0s.push_back({0, 0, 1});

    std::vector<ProjTransform> found;
    std::mutex mtx;
    parallel_chunks(c0s.size(), [&](uint64_t b, uint64_t e) {
        std::vector<ProjTransform> local;
        Dense tmp;
        for (uint64_t ci = b; ci < e; ++ci) {
            const auto& c0 = c0s[ci];
            // powers of (c0[i] x0 + c1[i] x1) are rebuilt per c1; restriction test
            for (uint64_t code = 0; code < static_cast<uint64_t>(q) * q * q; ++code) {
                uint64_t cc = code;
                std::array<Fq::Elem, 3> c1;
                for (int i = 0; i < 3; ++i) {
                    c1[i] = static_cast<Fq::Elem>(cc % q);
                    cc /= q;
                }
                // need c0, c1 independent
                bool indep = false;
                for (int i = 0; i < 3 && !indep; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        if (F.sub(F.mul(c0[i], c1[j]), F.mul(c0[j], c1[i])) != 0) {
                            indep = true;
                            break;
                        }
                if (!indep) continue;
                // binary restriction g(x0,x1) = f(x0 c0 + x1 c1)
                Fq::Elem bp[3][5][5];  // bp[i][e][j]: coeff of x0^(e-j) x1^j in (c0_i x0 + c1_i x1)^e
                for (int i = 0; i < 3; ++i) {
                    bp[i][0][0] = 1;
                    for (int e2 = 1; e2 <= 4; ++e2) {
                        for (int j = 0; j <= e2; ++j) {
                            Fq::Elem v = 0;
                            if (j <= e2 - 1) v = F.mul(bp[i][e2 - 1][j], c0[i]);
                            if (j >= 1) v = F.add(v, F.mul(bp[i][e2 - 1][j - 1], c1[i]));
                            bp[i][e2][j] = v;
                        }
                    }
                }
                Fq::Elem rest[5] = {0, 0, 0, 0, 0};
                for (auto& [k, co] : f.terms) {
                    int e0 = exp_of(k, 0), e1 = exp_of(k, 1), e2v = exp_of(k, 2);
                    // product of three binary forms of degrees e0, e1, e2
                    Fq::Elem acc[5] = {0, 0, 0, 0, 0};
                    acc[0] = co;
                    int d = 0;
                    for (int i = 0; i < 3; ++i) {
                        int ei = i == 0 ? e0 : (i == 1 ? e1 : e2v);
                        if (!ei) continue;
                        Fq::Elem nxt[5] = {0, 0, 0, 0, 0};
                        for (int a2 = 0; a2 <= d; ++a2) {
                            if (!acc[a2]) continue;
                            for (int j = 0; j <= ei; ++j)
                                nxt[a2 + j] = F.add(nxt[a2 + j], F.mul(acc[a2], bp[i][ei][j]));
                        }
                        d += ei;
                        for (int t = 0; t <= d; ++t) acc[t] = nxt[t];
                    }
                    for (int t = 0; t <= 4; ++t) rest[t] = F.add(rest[t], acc[t]);
                }
                // proportional to frest?
                Fq::Elem lambda = 0;
                bool ok = true;
                for (int t = 0; t <= 4 && ok; ++t) {
                    if (frest[t] == 0) {
                        if (rest[t] != 0) ok = false;
                        continue;
                    }
                    Fq::Elem l = F.div(rest[t], frest[t]);
                    if (lambda == 0)
                        lambda = l;
                    else if (l != lambda)
                        ok = false;
                }
                if (!ok || lambda == 0) continue;
                // x2-linear layer: solve sum_i c2[i] (d_i f)(x0 c0 + x1 c1) = lambda * fx2
                // rows: coefficients of x0^(3-r) x1^r, unknowns c2[0..2]
                Fq::Elem A[4][3];
                for (int i = 0; i < 3; ++i) {
                    Fq::Elem col[4] = {0, 0, 0, 0};
                    for (auto& [k, co] : partials[i].terms) {
                        int e0 = exp_of(k, 0), e1 = exp_of(k, 1), e2v = exp_of(k, 2);
                        Fq::Elem acc[4] = {0, 0, 0, 0};
                        acc[0] = co;
                        int d = 0;
                        for (int vi = 0; vi < 3; ++vi) {
                            int ei = vi == 0 ? e0 : (vi == 1 ? e1 : e2v);
                            if (!ei) continue;
                            Fq::Elem nxt[4] = {0, 0, 0, 0};
                            for (int a2 = 0; a2 <= d; ++a2) {
                                if (!acc[a2]) continue;
                                for (int j = 0; j <= ei && a2 + j <= 3; ++j)
                                    nxt[a2 + j] = F.add(nxt[a2 + j], F.mul(acc[a2], bp[vi][ei][j]));
                            }
                            d += ei;
                            if (d > 3) d = 3;
                            for (int t = 0; t <= d; ++t) acc[t] = nxt[t];
                        }
                        for (int t = 0; t <= 3; ++t) col[t] = F.add(col[t], acc[t]);
                    }
                    for (int r = 0; r < 4; ++r) A[r][i] = col[r];
                }
                Fq::Elem rhs[4];
                for (int r = 0; r < 4; ++r) rhs[r] = F.mul(lambda, fx2[r]);
                // gaussian elimination on the 4x3 system
                int prow[3] = {-1, -1, -1};
                int rank = 0;
                Fq::Elem M[4][4];
                for (int r = 0; r < 4; ++r) {
                    for (int cc2 = 0; cc2 < 3; ++cc2) M[r][cc2] = A[r][cc2];
                    M[r][3] = rhs[r];
                }
                int rr = 0;
                for (int cc2 = 0; cc2 < 3 && rr < 4; ++cc2) {
                    int pr = -1;
                    for (int r = rr; r < 4; ++r)
                        if (M[r][cc2]) {
                            pr = r;
                            break;
                        }
                    if (pr < 0) continue;
                    for (int t = 0; t < 4; ++t) std::swap(M[rr][t], M[pr][t]);
                    Fq::Elem inv = F.inv(M[rr][cc2]);
                    for (int t = 0; t < 4; ++t) M[rr][t] = F.mul(M[rr][t], inv);
                    for (int r = 0; r < 4; ++r) {
                        if (r == rr || !M[r][cc2]) continue;
                        Fq::Elem fmul = M[r][cc2];
                        for (int t = 0; t < 4; ++t) M[r][t] = F.sub(M[r][t], F.mul(fmul, M[rr][t]));
                    }
                    prow[cc2] = rr;
                    ++rank;
                    ++rr;
                }
                bool feasible = true;
                for (int r = rr; r < 4; ++r)
                    if (M[r][3]) feasible = false;
                if (!feasible) continue;
                // free columns
                int nfree = 3 - rank;
                uint64_t combos = 1;
                for (int i = 0; i < nfree; ++i) combos *= q;
                for (uint64_t fc = 0; fc < combos; ++fc) {
                    Fq::Elem c2[3];
                    uint64_t code2 = fc;
                    for (int cc2 = 0; cc2 < 3; ++cc2) {
                        if (prow[cc2] < 0) {
                            c2[cc2] = static_cast<Fq::Elem>(code2 % q);
                            code2 /= q;
                        } else {
                            c2[cc2] = 0;
                        }
                    }
                    for (int cc2 = 0; cc2 < 3; ++cc2) {
                        if (prow[cc2] < 0) continue;
                        Fq::Elem v = M[prow[cc2]][3];
                        for (int oc = 0; oc < 3; ++oc)
                            if (prow[oc] < 0 && M[prow[cc2]][oc])
                                v = F.sub(v, F.mul(M[prow[cc2]][oc], c2[oc]));
                        c2[cc2] = v;
                    }
                    SqMat m{&F, 3, {}};
                    for (int i = 0; i < 3; ++i) {
                        m.at(i, 0) = c0[i];
                        m.at(i, 1) = c1[i];
                        m.at(i, 2) = c2[i];
                    }
                    if (mat_det(m) == 0) continue;
                    Dense g = transform_quartic(f, m);
                    auto lam = dense_proportional(F, g, fd);
                    if (lam && *lam == lambda) local.push_back(pt_canon(m));
                }
            }
        }
        std::lock_guard<std::mutex> lock(mtx);
        found.insert(found.end(), local.begin(), local.end());
    });
    FiniteGroup G;
    G.F = &F;
    G.n = 3;
    G.elements = std::move(found);
    std::sort(G.elements.begin(), G.elements.end());
    G.elements.erase(std::unique(G.elements.begin(), G.elements.end()), G.elements.end());
    return G;
}

FiniteGroup stabilizer2(const MultiPoly& f) {
    const Fq& F = *f.F;
    std::vector<ProjTransform> found;
    for (auto& g : pgl2_elements(F)) {
        MultiPoly tf = substitute_linear(f, g.m);
        if (proportional(tf, f)) found.push_back(g);
    }
    FiniteGroup G;
    G.F = &F;
    G.n = 2;
    G.elements = std::move(found);
    std::sort(G.elements.begin(), G.elements.end());
    return G;
}

}  // namespace

FiniteGroup stabilizer_of_form(const MultiPoly& f, SearchStrategy strategy) {
    if (f.is_zero()) fail(Err::ZeroPolynomial, "stabilizer of the zero form");
    if (!f.is_homogeneous()) fail(Err::DimensionMismatch, "form must be homogeneous");
    const Fq& F = *f.F;
    if (f.nvars == 2) {
        if (F.q() > 128) fail(Err::SearchSpaceTooLarge, "PGL_2 enumeration limited to q <= 128");
        return stabilizer2(f);
    }
    if (f.degree() != 4) fail(Err::DimensionMismatch, "ternary stabilizer expects a quartic");
    if (strategy == SearchStrategy::Plain) {
        if (F.q() > 5) fail(Err::SearchSpaceTooLarge, "plain PGL_3 enumeration limited to q <= 5");
        return stabilizer_plain3(f);
    }
    if (F.q() > 9) fail(Err::SearchSpaceTooLarge, "pruned PGL_3 search limited to q <= 9");
    return stabilizer_pruned3(f);
}

FiniteGroup stabilizer_in_group(const MultiPoly& f, const FiniteGroup& G) {
    if (G.F != f.F || G.n != f.nvars) fail(Err::SpecMismatch, "group/form mismatch");
    FiniteGroup out;
    out.F = G.F;
    out.n = G.n;
    for (auto& g : G.elements) {
        MultiPoly tf = substitute_linear(f, g.m);
        if (proportional(tf, f)) out.elements.push_back(g);
    }
    return out;
}

P1Point p1_canon(const Fq& F, Fq::Elem u, Fq::Elem v) {
    if (u == 0 && v == 0) fail(Err::BadParameters, "zero vector is not a projective point");
    if (u != 0) {
        Fq::Elem s = F.inv(u);
        return {1, F.mul(v, s)};
    }
    return {0, 1};
}

std::vector<P1Point> p1_all(const Fq& F) {
    std::vector<P1Point> out;
    for (uint32_t v = 0; v < F.q(); ++v) out.push_back({1, v});
    out.push_back({0, 1});
    return out;
}

std::vector<ProjTransform> pgl2_elements(const Fq& F) {
    std::vector<ProjTransform> out;
    uint32_t q = F.q();
    out.reserve(q * q * q - q);
    // a = 1
    for (uint32_t b = 0; b < q; ++b)
        for (uint32_t c = 0; c < q; ++c)
            for (uint32_t d = 0; d < q; ++d) {
                if (F.sub(d, F.mul(b, c)) == 0) continue;
                SqMat m{&F, 2, {}};
                m.at(0, 0) = 1;
                m.at(0, 1) = b;
                m.at(1, 0) = c;
                m.at(1, 1) = d;
                out.push_back(ProjTransform{m});
            }
    // a = 0, b = 1
    for (uint32_t c = 1; c < q; ++c)
        for (uint32_t d = 0; d < q; ++d) {
            SqMat m{&F, 2, {}};
            m.at(0, 1) = 1;
            m.at(1, 0) = c;
            m.at(1, 1) = d;
            out.push_back(ProjTransform{m});
        }
    return out;
}

FiniteGroup point_set_stabilizer(const Fq& F, const std::vector<P1Point>& points) {
    {
        std::vector<P1Point> distinct = points;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 3)
            fail(Err::TooFewPoints, "point-set stabilizer needs >= 3 distinct points");
    }
    std::vector<P1Point> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    std::vector<ProjTransform> all = pgl2_elements(F);
    std::vector<ProjTransform> found;
    std::mutex mtx;
    parallel_chunks(all.size(), [&](uint64_t b, uint64_t e) {
        std::vector<ProjTransform> local;
        std::vector<P1Point> img(points.size());
        for (uint64_t i = b; i < e; ++i) {
            const auto& g = all[i];
            for (size_t j = 0; j < sorted.size(); ++j) {
                Fq::Elem u = F.add(F.mul(g.m.at(0, 0), sorted[j].u), F.mul(g.m.at(0, 1), sorted[j].v));
                Fq::Elem v = F.add(F.mul(g.m.at(1, 0), sorted[j].u), F.mul(g.m.at(1, 1), sorted[j].v));
                img[j] = p1_canon(F, u, v);
            }
            std::sort(img.begin(), img.end());
            if (img == sorted) local.push_back(g);
        }
        std::lock_guard<std::mutex> lock(mtx);
        found.insert(found.end(), local.begin(), local.end());
    });
    FiniteGroup G;
    G.F = &F;
    G.n = 2;
    G.elements = std::move(found);
    std::sort(G.elements.begin(), G.elements.end());
    return G;
}

// ---------------------------------------------------------------------------
// Jordan data

Unipoly pt_charpoly(const ProjTransform& g) {
    const Fq& F = g.field();
    const SqMat& m = g.m;
    if (g.n() == 2) {
        Fq::Elem tr = F.add(m.at(0, 0), m.at(1, 1));
        return Unipoly(F, {mat_det(m), F.neg(tr), 1});
    }
    Fq::Elem tr = F.add(F.add(m.at(0, 0), m.at(1, 1)), m.at(2, 2));
    auto minor2 = [&](int i, int j) {
        return F.sub(F.mul(m.at(i, i), m.at(j, j)), F.mul(m.at(i, j), m.at(j, i)));
    };
    Fq::Elem c1 = F.add(F.add(minor2(0, 1), minor2(0, 2)), minor2(1, 2));
    Fq::Elem det = mat_det(m);
    return Unipoly(F, {F.neg(det), c1, F.neg(tr), 1});
}

namespace {

int matrix_rank3(const Fq& F, std::array<Fq::Elem, 9> a) {
    int rank = 0;
    for (int c = 0; c < 3 && rank < 3; ++c) {
        int pr = -1;
        for (int r = rank; r < 3; ++r)
            if (a[r * 3 + c]) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        for (int t = 0; t < 3; ++t) std::swap(a[rank * 3 + t], a[pr * 3 + t]);
        Fq::Elem inv = F.inv(a[rank * 3 + c]);
        for (int t = 0; t < 3; ++t) a[rank * 3 + t] = F.mul(a[rank * 3 + t], inv);
        for (int r = 0; r < 3; ++r) {
            if (r == rank || !a[r * 3 + c]) continue;
            Fq::Elem f = a[r * 3 + c];
            for (int t = 0; t < 3; ++t) a[r * 3 + t] = F.sub(a[r * 3 + t], F.mul(f, a[rank * 3 + t]));
        }
        ++rank;
    }
    return rank;
}

// discriminant of a monic cubic t^3 + a t^2 + b t + c
Fq::Elem cubic_disc(const Fq& F, Fq::Elem a, Fq::Elem b, Fq::Elem c) {
    // 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2
    Fq::Elem t18 = F.from_int(18), t4 = F.from_int(4), t27 = F.from_int(27);
    Fq::Elem d = F.mul(F.mul(F.mul(t18, a), b), c);
    d = F.sub(d, F.mul(F.mul(t4, F.mul(a, F.mul(a, a))), c));
    d = F.add(d, F.mul(F.mul(a, a), F.mul(b, b)));
    d = F.sub(d, F.mul(t4, F.mul(b, F.mul(b, b))));
    d = F.sub(d, F.mul(t27, F.mul(c, c)));
    return d;
}

// eigenvalue multiplicity pattern of a semisimple 3x3 projective element
std::string ss_pattern3(const ProjTransform& g) {
    if (pt_is_identity(g)) return "3";
    const Fq& F = g.field();
    Unipoly cp = pt_charpoly(g);
    Fq::Elem disc = cubic_disc(F, cp.c[2], cp.c[1], cp.c[0]);
    return disc != 0 ? "111" : "21";
}

}  // namespace

JordanType jordan_type(const ProjTransform& g, bool want_eigenvalues) {
    const Fq& F = g.field();
    JordanType jt;
    jt.order = element_order(g);
    jt.wild = jt.order % F.p() == 0;
    jt.scalar = jt.order == 1;
    if (g.n() != 3) fail(Err::DimensionMismatch, "jordan_type expects 3x3 transforms");

    int p = static_cast<int>(F.p());
    if (!jt.wild) {
        jt.ss_pattern = ss_pattern3(g);
        jt.blocks = {1, 1, 1};
    } else {
        if (jt.order % (p * p) == 0) fail(Err::Internal, "unexpected order divisible by p^2");
        int mprime = jt.order / p;
        // u = g^beta with beta = 0 mod m', 1 mod p; s = g^gamma complementary
        int beta = 0;
        for (int t = 0; t < p; ++t)
            if ((t * mprime) % p == 1) {
                beta = t * mprime;
                break;
            }
        int gamma = (jt.order + 1 - beta % jt.order) % jt.order;
        ProjTransform u = g, s = g;
        {
            ProjTransform acc = pt_identity(F, 3);
            for (int i = 0; i < beta; ++i) acc = pt_compose(acc, g);
            u = acc;
            acc = pt_identity(F, 3);
            for (int i = 0; i < gamma; ++i) acc = pt_compose(acc, g);
            s = acc;
        }
        // unipotent block structure from rank(U - lambda I)
        Fq::Elem lambda;
        if (p == 3) {
            // charpoly is t^3 - det; the triple root is the cube root of det
            Fq::Elem det = mat_det(u.m);
            lambda = det;
            for (uint32_t i = 0; i + 1 < F.k(); ++i) lambda = F.mul(F.mul(lambda, lambda), lambda);
            // lambda = det^(3^(k-1))
        } else {
            Fq::Elem tr = F.add(F.add(u.m.at(0, 0), u.m.at(1, 1)), u.m.at(2, 2));
            lambda = F.div(tr, F.from_int(3));
        }
        std::array<Fq::Elem, 9> diff = u.m.a;
        for (int i = 0; i < 3; ++i) diff[i * 4] = F.sub(diff[i * 4], lambda);
        int rank = matrix_rank3(F, diff);
        if (rank == 2)
            jt.blocks = {3};
        else if (rank == 1)
            jt.blocks = {2, 1};
        else
            jt.blocks = {1, 1, 1};
        jt.ss_pattern = (mprime == 1) ? std::string("3") : ss_pattern3(s);
    }

    if (want_eigenvalues) {
        // factor the charpoly by scanning extensions
        Unipoly cp = pt_charpoly(g);
        uint64_t cap = 531441;
        int found = 0;
        for (uint32_t level = 1; found < 3; ++level) {
            uint64_t qk = 1;
            for (uint32_t i = 0; i < F.k() * level; ++i) qk *= F.p();
            if (F.k() * level > 12 || qk > cap)
                fail(Err::SplittingBoundExceeded, "eigenvalues out of reach of the field cap");
            const Fq& K = make_field(F.p(), F.k() * level);
            const Embedding& emb = get_embedding(F, K);
            Unipoly cpk(K, {});
            cpk.c.resize(cp.c.size());
            for (size_t i = 0; i < cp.c.size(); ++i) cpk.c[i] = emb.map(cp.c[i]);
            for (uint32_t x = 0; x < K.q(); ++x) {
                if (cpk.eval(x) != 0) continue;
                bool minimal = true;
                for (uint32_t dl = 1; dl < level && minimal; ++dl) {
                    if (level % dl) continue;
                    uint64_t sq = 1;
                    for (uint32_t i = 0; i < F.k() * dl; ++i) sq *= F.p();
                    if (K.pow(x, sq) == x) minimal = false;
                }
                if (!minimal) continue;
                Unipoly lin(K, {K.neg(x), 1});
                Unipoly cur = cpk, quo, rem;
                int mlt = 0;
                while (!cur.is_zero()) {
                    uni_divrem(cur, lin, quo, rem);
                    if (!rem.is_zero()) break;
                    ++mlt;
                    cur = quo;
                }
                jt.eigenvalues.emplace_back(level, x, mlt);
                found += mlt;
                jt.split_level = std::max(jt.split_level, level);
            }
        }
    }
    return jt;
}

}  // namespace dpz
