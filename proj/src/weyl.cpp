#include "dpz/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dpz::weyl {

IntVec GeomLattice::kvec() const {
    IntVec k(dim(), -1);
    k[0] = 3;
    return k;
}

int64_t GeomLattice::inner(const IntVec& x, const IntVec& y) const {
    int64_t s = x[0] * y[0];
    for (int i = 1; i < dim(); ++i) s -= x[i] * y[i];
    return s;
}

std::vector<IntVec> GeomLattice::root_basis() const {
    std::vector<IntVec> roots;
    IntVec a0(dim(), 0);
    a0[0] = 1;
    a0[1] = a0[2] = a0[3] = -1;
    roots.push_back(a0);
    for (int i = 1; i < N; ++i) {
        IntVec a(dim(), 0);
        a[i] = 1;
        a[i + 1] = -1;
        roots.push_back(a);
    }
    return roots;
}

bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) {
    return a.N == b.N && a.m == b.m;
}

LatticeIsometry iso_identity(int N) {
    LatticeIsometry w{N, IntMat(static_cast<size_t>(N + 1) * (N + 1), 0)};
    for (int i = 0; i <= N; ++i) w.at(i, i) = 1;
    return w;
}

LatticeIsometry iso_compose(const LatticeIsometry& a, const LatticeIsometry& b) {
    if (a.N != b.N) fail(Err::DimensionMismatch, "isometry rank mismatch");
    int d = a.N + 1;
    LatticeIsometry out{a.N, IntMat(static_cast<size_t>(d) * d, 0)};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int64_t s = 0;
            for (int l = 0; l < d; ++l) s += a.at(i, l) * b.at(l, j);
            out.at(i, j) = s;
        }
    return out;
}

bool iso_valid(const LatticeIsometry& w) {
    GeomLattice L{w.N};
    int d = w.N + 1;
    // M^T G M = G with G = diag(1,-1,...,-1)
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            int64_t s = w.at(0, i) * w.at(0, j);
            for (int l = 1; l < d; ++l) s -= w.at(l, i) * w.at(l, j);
            int64_t want = (i != j) ? 0 : (i == 0 ? 1 : -1);
            if (s != want) return false;
        }
    IntVec k = L.kvec(), img(d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) img[i] += w.at(i, j) * k[j];
    return img == k;
}

int iso_order(const LatticeIsometry& w, int cap) {
    LatticeIsometry acc = w, id = iso_identity(w.N);
    for (int m = 1; m <= cap; ++m) {
        if (acc == id) return m;
        acc = iso_compose(acc, w);
    }
    fail(Err::Internal, "isometry order exceeds cap");
}

LatticeIsometry simple_reflection(int N, int i) {
    if (i < 0 || i >= N) fail(Err::IndexOutOfRange, "simple root index out of range");
    GeomLattice L{N};
    IntVec a = L.root_basis()[i];
    int d = N + 1;
    LatticeIsometry w = iso_identity(N);
    // r(e_j) = e_j + (e_j . a) a
    for (int j = 0; j < d; ++j) {
        IntVec ej(d, 0);
        ej[j] = 1;
        int64_t c = L.inner(ej, a);
        for (int r = 0; r < d; ++r) w.at(r, j) += c * a[r];
    }
    return w;
}

std::vector<IntMat> reflection_root_matrices(int N) {
    GeomLattice L{N};
    auto roots = L.root_basis();
    std::vector<IntMat> out;
    for (int i = 0; i < N; ++i) {
        IntMat m(static_cast<size_t>(N) * N, 0);
        for (int j = 0; j < N; ++j) {
            m[static_cast<size_t>(j) * N + j] = 1;
            m[static_cast<size_t>(i) * N + j] += L.inner(roots[j], roots[i]);
        }
        out.push_back(std::move(m));
    }
    return out;
}

IntMat root_mat_mul(int N, const IntMat& a, const IntMat& b) {
    IntMat out(static_cast<size_t>(N) * N, 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int64_t s = 0;
            for (int l = 0; l < N; ++l) s += a[static_cast<size_t>(i) * N + l] * b[static_cast<size_t>(l) * N + j];
            out[static_cast<size_t>(i) * N + j] = s;
        }
    return out;
}

IntVec charpoly_int(int N, const IntMat& m) {
    // Faddeev-LeVerrier; divisions are exact over the integers
    IntVec coef(N + 1, 0);
    coef[N] = 1;
    IntMat Mk(m);
    for (int k = 1; k <= N; ++k) {
        int64_t tr = 0;
        for (int i = 0; i < N; ++i) tr += Mk[static_cast<size_t>(i) * N + i];
        int64_t c = -tr / k;
        coef[N - k] = c;
        if (k == N) break;
        for (int i = 0; i < N; ++i) Mk[static_cast<size_t>(i) * N + i] += c;
        Mk = root_mat_mul(N, m, Mk);
    }
    return coef;
}

IntVec charpoly_EN(const LatticeIsometry& w) {
    if (!iso_valid(w)) fail(Err::NotAnIsometry, "matrix is not a k-stabilizing isometry");
    int N = w.N, d = N + 1;
    GeomLattice L{N};
    auto roots = L.root_basis();
    // Gram matrix of the roots and its adjugate
    IntMat G(static_cast<size_t>(N) * N, 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) G[static_cast<size_t>(i) * N + j] = L.inner(roots[i], roots[j]);
    // w action on the roots, coordinates solved with exact rationals
    // (numerator/denominator int64). Build b_j = w(a_j), then solve G c = s
    // where s_i = (b_j . a_i).
    auto images = std::vector<IntVec>(N);
    for (int j = 0; j < N; ++j) {
        IntVec b(d, 0);
        for (int r = 0; r < d; ++r)
            for (int l = 0; l < d; ++l) b[r] += w.at(r, l) * roots[j][l];
        images[j] = std::move(b);
    }
    IntMat C(static_cast<size_t>(N) * N, 0);
    for (int j = 0; j < N; ++j) {
        // rational Gaussian elimination on [G | s]
        std::vector<std::pair<int64_t, int64_t>> s(N);  // value as num/den
        IntMat A = G;
        for (int i = 0; i < N; ++i) s[i] = {L.inner(images[j], roots[i]), 1};
        std::vector<std::vector<std::pair<int64_t, int64_t>>> R(
            N, std::vector<std::pair<int64_t, int64_t>>(N));
        for (int i = 0; i < N; ++i)
            for (int l = 0; l < N; ++l) R[i][l] = {A[static_cast<size_t>(i) * N + l], 1};
        auto fsub = [](std::pair<int64_t, int64_t> x, std::pair<int64_t, int64_t> y) {
            std::pair<int64_t, int64_t> r{x.first * y.second - y.first * x.second,
                                          x.second * y.second};
            int64_t g = std::gcd(std::abs(r.first), std::abs(r.second));
            if (g > 1) {
                r.first /= g;
                r.second /= g;
            }
            if (r.second < 0) {
                r.first = -r.first;
                r.second = -r.second;
            }
            return r;
        };
        auto fmul = [](std::pair<int64_t, int64_t> x, std::pair<int64_t, int64_t> y) {
            std::pair<int64_t, int64_t> r{x.first * y.first, x.second * y.second};
            int64_t g = std::gcd(std::abs(r.first), std::abs(r.second));
            if (g > 1) {
                r.first /= g;
                r.second /= g;
            }
            if (r.second < 0) {
                r.first = -r.first;
                r.second = -r.second;
            }
            return r;
        };
        auto fdiv = [&](std::pair<int64_t, int64_t> x, std::pair<int64_t, int64_t> y) {
            return fmul(x, {y.second, y.first});
        };
        for (int c = 0; c < N; ++c) {
            int pr = -1;
            for (int r = c; r < N; ++r)
                if (R[r][c].first) {
                    pr = r;
                    break;
                }
            if (pr < 0) fail(Err::Internal, "singular Gram matrix");
            std::swap(R[c], R[pr]);
            std::swap(s[c], s[pr]);
            auto piv = R[c][c];
            for (int t = 0; t < N; ++t) R[c][t] = fdiv(R[c][t], piv);
            s[c] = fdiv(s[c], piv);
            for (int r = 0; r < N; ++r) {
                if (r == c || !R[r][c].first) continue;
                auto f = R[r][c];
                for (int t = 0; t < N; ++t) R[r][t] = fsub(R[r][t], fmul(f, R[c][t]));
                s[r] = fsub(s[r], fmul(f, s[c]));
            }
        }
        for (int i = 0; i < N; ++i) {
            if (s[i].second != 1)
                fail(Err::NotAnIsometry, "restriction to the root lattice is not integral");
            C[static_cast<size_t>(i) * N + j] = s[i].first;
        }
    }
    return charpoly_int(N, C);
}

// ---------------------------------------------------------------------------
// Carter table

namespace {

struct Component {
    std::string name;
    int rank;
    int order;
    IntVec cp;  // ascending, monic, degree = rank
    int sort_family;  // 0 = E, 1 = D, 2 = A (for display order at equal rank)
};

IntVec poly_mul(const IntVec& a, const IntVec& b) {
    IntVec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

IntVec poly_from_string_pairs(std::initializer_list<std::pair<int, int64_t>> terms, int deg) {
    IntVec c(deg + 1, 0);
    for (auto& [e, v] : terms) c[e] = v;
    return c;
}

std::vector<Component> component_list() {
    std::vector<Component> out;
    // A_k: order k+1, t^k + ... + 1
    for (int k = 1; k <= 8; ++k) {
        Component c;
        c.name = "A_" + std::to_string(k);
        c.rank = k;
        c.order = k + 1;
        c.cp = IntVec(k + 1, 1);
        c.sort_family = 2;
        out.push_back(c);
    }
    // D_k: order 2k-2, (t^(k-1)+1)(t+1)
    for (int k = 4; k <= 8; ++k) {
        Component c;
        c.name = "D_" + std::to_string(k);
        c.rank = k;
        c.order = 2 * k - 2;
        IntVec f1(k, 0);
        f1[0] = 1;
        f1[k - 1] = 1;
        c.cp = poly_mul(f1, IntVec{1, 1});
        c.sort_family = 1;
        out.push_back(c);
    }
    // D_k(a_j): order lcm(2(k-j-1), 2(j+1)), (t^(k-j-1)+1)(t^(j+1)+1)
    for (int k = 4; k <= 8; ++k)
        for (int j = 1; 2 * j <= k - 2; ++j) {
            Component c;
            c.name = "D_" + std::to_string(k) + "(a_" + std::to_string(j) + ")";
            c.rank = k;
            c.order = std::lcm(2 * (k - j - 1), 2 * (j + 1));
            IntVec f1(k - j, 0), f2(j + 2, 0);
            f1[0] = 1;
            f1[k - j - 1] = 1;
            f2[0] = 1;
            f2[j + 1] = 1;
            c.cp = poly_mul(f1, f2);
            c.sort_family = 1;
            out.push_back(c);
        }
    auto add_e = [&](const std::string& name, int rank, int order, IntVec cp) {
        out.push_back(Component{name, rank, order, std::move(cp), 0});
    };
    IntVec t2p = {1, 1, 1};    // t^2+t+1
    IntVec t2m = {1, -1, 1};   // t^2-t+1
    IntVec t4 = {1, 0, -1, 0, 1};  // t^4-t^2+1
    IntVec t3p = {1, 0, 0, 1};     // t^3+1
    add_e("E_6", 6, 12, poly_mul(t4, t2p));
    add_e("E_6(a_1)", 6, 9, poly_from_string_pairs({{0, 1}, {3, 1}, {6, 1}}, 6));
    add_e("E_6(a_2)", 6, 6, poly_mul(poly_mul(t2m, t2m), t2p));
    add_e("E_7", 7, 18, poly_mul(poly_from_string_pairs({{0, 1}, {3, -1}, {6, 1}}, 6), IntVec{1, 1}));
    add_e("E_7(a_1)", 7, 14, poly_from_string_pairs({{0, 1}, {7, 1}}, 7));
    add_e("E_7(a_2)", 7, 12, poly_mul(t4, t3p));
    add_e("E_7(a_3)", 7, 30, poly_mul(poly_from_string_pairs({{0, 1}, {5, 1}}, 5), t2m));
    add_e("E_7(a_4)", 7, 6, poly_mul(poly_mul(t2m, t2m), t3p));
    add_e("E_8", 8, 30,
          poly_from_string_pairs({{0, 1}, {1, 1}, {3, -1}, {4, -1}, {5, -1}, {7, 1}, {8, 1}}, 8));
    add_e("E_8(a_1)", 8, 24, poly_from_string_pairs({{0, 1}, {4, -1}, {8, 1}}, 8));
    add_e("E_8(a_2)", 8, 20,
          poly_from_string_pairs({{0, 1}, {2, -1}, {4, 1}, {6, -1}, {8, 1}}, 8));
    add_e("E_8(a_3)", 8, 12, poly_mul(t4, t4));
    add_e("E_8(a_4)", 8, 18, poly_mul(poly_from_string_pairs({{0, 1}, {3, -1}, {6, 1}}, 6), t2m));
    add_e("E_8(a_5)", 8, 15,
          poly_from_string_pairs({{0, 1}, {1, -1}, {3, 1}, {4, -1}, {5, 1}, {7, -1}, {8, 1}}, 8));
    add_e("E_8(a_6)", 8, 10,
          poly_mul(IntVec{1, -1, 1, -1, 1}, IntVec{1, -1, 1, -1, 1}));
    add_e("E_8(a_7)", 8, 12, poly_mul(t4, poly_mul(t2m, t2m)));
    add_e("E_8(a_8)", 8, 6, poly_mul(poly_mul(t2m, t2m), poly_mul(t2m, t2m)));
    return out;
}

std::string class_name(const std::vector<const Component*>& comps) {
    if (comps.empty()) return "id";
    // group identical component names
    std::vector<std::pair<std::string, int>> groups;
    for (auto* c : comps) {
        if (!groups.empty() && groups.back().first == c->name)
            ++groups.back().second;
        else
            groups.emplace_back(c->name, 1);
    }
    std::ostringstream os;
    bool first = true;
    for (auto& [n, cnt] : groups) {
        if (!first) os << '+';
        if (cnt > 1) os << cnt;
        os << n;
        first = false;
    }
    return os.str();
}

std::vector<CarterClass> build_table(int N) {
    auto comps = component_list();
    // canonical component order: rank desc, family (E < D < A), name
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        if (a.sort_family != b.sort_family) return a.sort_family < b.sort_family;
        return a.name < b.name;
    });
    std::vector<CarterClass> table;
    std::vector<const Component*> stack;
    // depth-first over non-increasing component indices
    std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
        {
            CarterClass cc;
            cc.name = class_name(stack);
            cc.rank = N - remaining;
            int ord = 1;
            IntVec cp = {1};
            for (auto* c : stack) {
                ord = std::lcm(ord, c->order);
                cp = poly_mul(cp, c->cp);
            }
            for (int i = 0; i < remaining; ++i) cp = poly_mul(cp, IntVec{-1, 1});
            cc.order = ord;
            cc.cp = std::move(cp);
            table.push_back(std::move(cc));
        }
        for (size_t i = start; i < comps.size(); ++i) {
            if (comps[i].rank > remaining) continue;
            stack.push_back(&comps[i]);
            rec(i, remaining - comps[i].rank);
            stack.pop_back();
        }
    };
    rec(0, N);
    std::sort(table.begin(), table.end(),
              [](const CarterClass& a, const CarterClass& b) { return a.name < b.name; });
    return table;
}

}  // namespace

const std::vector<CarterClass>& carter_table(int N) {
    if (N < 2 || N > 8) fail(Err::DimensionMismatch, "carter table available for N <= 8");
    static std::mutex mtx;
    static std::map<int, std::vector<CarterClass>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, build_table(N)).first;
    return it->second;
}

const CarterClass& class_by_name(const std::string& name, int N) {
    for (auto& c : carter_table(N))
        if (c.name == name) return c;
    fail(Err::NoMatch, "no Carter class named " + name + " in E_" + std::to_string(N));
}

std::vector<CarterClass> carter_lookup(const IntVec& cp, int order, int N) {
    if (static_cast<int>(cp.size()) != N + 1)
        fail(Err::DimensionMismatch, "charpoly degree must equal N");
    std::vector<CarterClass> out;
    for (auto& c : carter_table(N))
        if (c.order == order && c.cp == cp) out.push_back(c);
    return out;
}

LefschetzTraces lefschetz_trace(int64_t euler_fixed) {
    return {euler_fixed - 2, euler_fixed - 3};
}

std::vector<CarterClass> minus_pair(const CarterClass& c, int N) {
    if (N != 7 && N != 8) fail(Err::DimensionMismatch, "minus_pair needs N in {7,8}");
    // cp_{-w}(t) = (-1)^N cp_w(-t)
    IntVec cp(c.cp.size());
    for (size_t i = 0; i < cp.size(); ++i) {
        int64_t v = c.cp[i];
        if ((i + N) % 2) v = -v;
        cp[i] = v;
    }
    std::vector<CarterClass> out;
    for (auto& cand : carter_table(N)) {
        if (cand.cp != cp) continue;
        // order constraints: n | lcm(2,m) and m | lcm(2,n)
        int m = c.order, n = cand.order;
        if (std::lcm(2, m) % n == 0 && std::lcm(2, n) % m == 0) out.push_back(cand);
    }
    if (out.empty()) fail(Err::NoMatch, "no class matches the negated charpoly");
    return out;
}

const CarterClass& minus_pair_unique(const CarterClass& c, int N) {
    static std::mutex mtx;
    static std::vector<std::unique_ptr<CarterClass>> keep;
    auto v = minus_pair(c, N);
    if (v.size() != 1)
        fail(Err::AmbiguousPairing, "minus_pair is ambiguous for " + c.name);
    std::lock_guard<std::mutex> lock(mtx);
    keep.push_back(std::make_unique<CarterClass>(v[0]));
    return *keep.back();
}

}  // namespace dpz::weyl
