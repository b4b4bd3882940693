#include "dpz/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace dpz {

// ---------------------------------------------------------------------------
// SqMat

SqMat mat_mul(const SqMat& x, const SqMat& y) {
    if (x.F != y.F || x.n != y.n) fail(Err::SpecMismatch, "matrix mismatch");
    const Fq& F = *x.F;
    SqMat out{x.F, x.n, {}};
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            Fq::Elem s = 0;
            for (int l = 0; l < x.n; ++l) s = F.add(s, F.mul(x.at(i, l), y.at(l, j)));
            out.at(i, j) = s;
        }
    return out;
}

Fq::Elem mat_det(const SqMat& x) {
    const Fq& F = *x.F;
    if (x.n == 2) return F.sub(F.mul(x.at(0, 0), x.at(1, 1)), F.mul(x.at(0, 1), x.at(1, 0)));
    Fq::Elem d = 0;
    d = F.add(d, F.mul(x.at(0, 0), F.sub(F.mul(x.at(1, 1), x.at(2, 2)), F.mul(x.at(1, 2), x.at(2, 1)))));
    d = F.sub(d, F.mul(x.at(0, 1), F.sub(F.mul(x.at(1, 0), x.at(2, 2)), F.mul(x.at(1, 2), x.at(2, 0)))));
    d = F.add(d, F.mul(x.at(0, 2), F.sub(F.mul(x.at(1, 0), x.at(2, 1)), F.mul(x.at(1, 1), x.at(2, 0)))));
    return d;
}

SqMat mat_scale(const SqMat& x, Fq::Elem s) {
    SqMat out = x;
    for (int i = 0; i < x.n * x.n; ++i) out.a[i] = x.F->mul(x.a[i], s);
    return out;
}

SqMat mat_inv(const SqMat& x) {
    const Fq& F = *x.F;
    Fq::Elem d = mat_det(x);
    if (d == 0) fail(Err::SingularMatrix, "matrix is singular");
    Fq::Elem di = F.inv(d);
    SqMat out{x.F, x.n, {}};
    if (x.n == 2) {
        out.at(0, 0) = F.mul(x.at(1, 1), di);
        out.at(0, 1) = F.mul(F.neg(x.at(0, 1)), di);
        out.at(1, 0) = F.mul(F.neg(x.at(1, 0)), di);
        out.at(1, 1) = F.mul(x.at(0, 0), di);
        return out;
    }
    auto cof = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return F.sub(F.mul(x.at(r0, c0), x.at(r1, c1)), F.mul(x.at(r0, c1), x.at(r1, c0)));
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.at(j, i) = F.mul(cof(i, j), di);
    return out;
}

std::array<Fq::Elem, 3> mat_apply(const SqMat& x, const std::array<Fq::Elem, 3>& v) {
    const Fq& F = *x.F;
    std::array<Fq::Elem, 3> out{};
    for (int i = 0; i < x.n; ++i) {
        Fq::Elem s = 0;
        for (int j = 0; j < x.n; ++j) s = F.add(s, F.mul(x.at(i, j), v[j]));
        out[i] = s;
    }
    return out;
}

SqMat mat_embed(const SqMat& x, const Embedding& e) {
    if (&e.src() != x.F) fail(Err::SpecMismatch, "embedding source mismatch");
    SqMat out{&e.dst(), x.n, {}};
    for (int i = 0; i < x.n * x.n; ++i) out.a[i] = e.map(x.a[i]);
    return out;
}

// ---------------------------------------------------------------------------
// MultiPoly basics

int MultiPoly::degree() const {
    int d = -1;
    for (auto& [key, c] : terms)
        d = std::max(d, exp_of(key, 0) + exp_of(key, 1) + exp_of(key, 2));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms.empty()) return true;
    int d = -1;
    for (auto& [key, c] : terms) {
        int s = exp_of(key, 0) + exp_of(key, 1) + exp_of(key, 2);
        if (d < 0) d = s;
        if (s != d) return false;
    }
    return true;
}

Fq::Elem MultiPoly::coeff(uint32_t key) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), key,
                               [](const auto& t, uint32_t k) { return t.first < k; });
    return (it != terms.end() && it->first == key) ? it->second : 0;
}

void MultiPoly::set_coeff(uint32_t key, Fq::Elem c) {
    auto it = std::lower_bound(terms.begin(), terms.end(), key,
                               [](const auto& t, uint32_t k) { return t.first < k; });
    if (it != terms.end() && it->first == key) {
        if (c)
            it->second = c;
        else
            terms.erase(it);
    } else if (c) {
        terms.insert(it, {key, c});
    }
}

Fq::Elem MultiPoly::eval(const std::array<Fq::Elem, 3>& x) const {
    const Fq& f = *F;
    // power tables up to the maximal exponent per variable
    Fq::Elem pw[3][13];
    for (int i = 0; i < nvars; ++i) {
        pw[i][0] = 1;
        for (int e = 1; e <= 12; ++e) pw[i][e] = f.mul(pw[i][e - 1], x[i]);
    }
    Fq::Elem acc = 0;
    for (auto& [key, c] : terms) {
        Fq::Elem t = c;
        for (int i = 0; i < nvars; ++i) t = f.mul(t, pw[i][exp_of(key, i)]);
        acc = f.add(acc, t);
    }
    return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.F == b.F && a.nvars == b.nvars && a.terms == b.terms;
}

static void mp_check(const MultiPoly& a, const MultiPoly& b) {
    if (a.F != b.F || a.nvars != b.nvars) fail(Err::SpecMismatch, "polynomial mismatch");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    mp_check(a, b);
    MultiPoly out(*a.F, a.nvars);
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j >= b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i >= a.terms.size() || b.terms[j].first < a.terms[i].first) {
            out.terms.push_back(b.terms[j++]);
        } else {
            Fq::Elem c = a.F->add(a.terms[i].second, b.terms[j].second);
            if (c) out.terms.push_back({a.terms[i].first, c});
            ++i;
            ++j;
        }
    }
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    mp_check(a, b);
    return a + mp_scale(b, a.F->neg(1));
}

MultiPoly mp_scale(const MultiPoly& a, Fq::Elem s) {
    MultiPoly out(*a.F, a.nvars);
    if (!s) return out;
    out.terms = a.terms;
    for (auto& [k, c] : out.terms) c = a.F->mul(c, s);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    mp_check(a, b);
    const Fq& F = *a.F;
    std::map<uint32_t, Fq::Elem> acc;
    for (auto& [ka, ca] : a.terms)
        for (auto& [kb, cb] : b.terms) {
            uint32_t k = ka + kb;  // per-byte addition is carry-free for our degrees
            Fq::Elem c = F.mul(ca, cb);
            auto [it, fresh] = acc.emplace(k, c);
            if (!fresh) it->second = F.add(it->second, c);
        }
    MultiPoly out(F, a.nvars);
    for (auto& [k, c] : acc)
        if (c) out.terms.push_back({k, c});
    return out;
}

MultiPoly mp_derivative(const MultiPoly& a, int var) {
    const Fq& F = *a.F;
    MultiPoly out(F, a.nvars);
    for (auto& [k, c] : a.terms) {
        int e = exp_of(k, var);
        if (!e) continue;
        Fq::Elem nc = F.mul(c, F.from_int(e));
        if (!nc) continue;
        out.terms.push_back({k - (1u << (8 * var)), nc});
    }
    std::sort(out.terms.begin(), out.terms.end());
    return out;
}

MultiPoly substitute_linear(const MultiPoly& f, const SqMat& M) {
    if (M.F != f.F || M.n != f.nvars) fail(Err::DimensionMismatch, "matrix/polynomial mismatch");
    if (mat_det(M) == 0) fail(Err::SingularMatrix, "substitution matrix is singular");
    const Fq& F = *f.F;
    // images of the variables as linear polynomials
    std::vector<MultiPoly> lin(f.nvars, MultiPoly(F, f.nvars));
    for (int i = 0; i < f.nvars; ++i)
        for (int j = 0; j < f.nvars; ++j)
            if (M.at(i, j)) lin[i].terms.push_back({pack_exp(j == 0, j == 1, j == 2), M.at(i, j)});
    // powers of each image, up to the needed exponent
    int maxe[3] = {0, 0, 0};
    for (auto& [k, c] : f.terms)
        for (int i = 0; i < f.nvars; ++i) maxe[i] = std::max(maxe[i], exp_of(k, i));
    std::vector<std::vector<MultiPoly>> pw(f.nvars);
    for (int i = 0; i < f.nvars; ++i) {
        pw[i].resize(maxe[i] + 1);
        MultiPoly one(F, f.nvars);
        one.terms.push_back({0, 1});
        pw[i][0] = one;
        for (int e = 1; e <= maxe[i]; ++e) pw[i][e] = pw[i][e - 1] * lin[i];
    }
    MultiPoly out(F, f.nvars);
    for (auto& [k, c] : f.terms) {
        MultiPoly t = pw[0][exp_of(k, 0)];
        for (int i = 1; i < f.nvars; ++i) t = t * pw[i][exp_of(k, i)];
        out = out + mp_scale(t, c);
    }
    return out;
}

MultiPoly mp_embed(const MultiPoly& f, const Embedding& e) {
    if (&e.src() != f.F) fail(Err::SpecMismatch, "embedding source mismatch");
    MultiPoly out(e.dst(), f.nvars);
    out.terms.reserve(f.terms.size());
    for (auto& [k, c] : f.terms) out.terms.push_back({k, e.map(c)});
    return out;
}

std::optional<Fq::Elem> proportional(const MultiPoly& g, const MultiPoly& f) {
    mp_check(g, f);
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero() ? std::optional<Fq::Elem>(1) : std::nullopt;
    if (f.terms.size() != g.terms.size()) return std::nullopt;
    const Fq& F = *f.F;
    Fq::Elem lambda = 0;
    for (size_t i = 0; i < f.terms.size(); ++i) {
        if (f.terms[i].first != g.terms[i].first) return std::nullopt;
        Fq::Elem l = F.div(g.terms[i].second, f.terms[i].second);
        if (i == 0)
            lambda = l;
        else if (l != lambda)
            return std::nullopt;
    }
    return lambda;
}

std::vector<uint32_t> monomials_of_degree(int nvars, int d) {
    std::vector<uint32_t> out;
    if (nvars == 2) {
        for (int e0 = d; e0 >= 0; --e0) out.push_back(pack_exp(e0, d - e0));
    } else {
        for (int e0 = d; e0 >= 0; --e0)
            for (int e1 = d - e0; e1 >= 0; --e1) out.push_back(pack_exp(e0, e1, d - e0 - e1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Parser / printer

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char next() {
        skip();
        return s[i++];
    }
};

int64_t parse_int(Cursor& c) {
    c.skip();
    bool neg = false;
    if (c.peek() == '-') {
        c.next();
        neg = true;
    }
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) fail(Err::ParseError, "expected integer");
    int64_t v = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) v = v * 10 + (c.s[c.i++] - '0');
    return neg ? -v : v;
}

}  // namespace

MultiPoly parse_poly(const Fq& F, int nvars, const std::string& text) {
    Cursor c{text};
    MultiPoly out(F, nvars);
    bool first = true;
    while (!c.eof()) {
        Fq::Elem sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.next();
            if (ch == '-') sign = F.neg(1);
        } else if (!first) {
            fail(Err::ParseError, "expected '+' or '-' between terms");
        }
        first = false;
        // term: product of factors
        Fq::Elem coef = sign;
        int exps[3] = {0, 0, 0};
        bool any_factor = false;
        while (true) {
            c.skip();
            char f0 = c.peek();
            if (f0 == '[') {
                c.next();
                std::vector<uint32_t> digits;
                while (true) {
                    int64_t v = parse_int(c);
                    int64_t r = v % F.p();
                    if (r < 0) r += F.p();
                    digits.push_back(static_cast<uint32_t>(r));
                    char d = c.next();
                    if (d == ']') break;
                    if (d != ',') fail(Err::ParseError, "bad field element literal");
                }
                coef = F.mul(coef, F.from_coeffs(digits));
                any_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(f0))) {
                coef = F.mul(coef, F.from_int(parse_int(c)));
                any_factor = true;
            } else if (f0 == 'x' || f0 == 't') {
                c.next();
                char idx = c.next();
                if (!std::isdigit(static_cast<unsigned char>(idx))) fail(Err::ParseError, "bad variable");
                int vi = idx - '0';
                if (vi >= nvars) fail(Err::ParseError, "variable index out of range");
                int e = 1;
                if (c.peek() == '^') {
                    c.next();
                    int64_t ev = parse_int(c);
                    if (ev < 0 || ev > 12) fail(Err::ParseError, "exponent out of range");
                    e = static_cast<int>(ev);
                }
                exps[vi] += e;
                any_factor = true;
            } else {
                fail(Err::ParseError, std::string("unexpected character '") + f0 + "'");
            }
            if (c.peek() == '*') {
                c.next();
                continue;
            }
            break;
        }
        if (!any_factor) fail(Err::ParseError, "empty term");
        uint32_t key = pack_exp(exps[0], exps[1], exps[2]);
        out.set_coeff(key, F.add(out.coeff(key), coef));
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms.empty()) return "0";
    const char* names3[3] = {"x0", "x1", "x2"};
    const char* names2[3] = {"t0", "t1", ""};
    const char** names = nvars == 2 ? names2 : names3;
    std::ostringstream os;
    // print highest key first so x0-leading terms come first
    for (size_t idx = terms.size(); idx-- > 0;) {
        auto& [k, c] = terms[idx];
        if (idx + 1 != terms.size()) os << " + ";
        bool printed_coef = false;
        if (c != 1 || k == 0) {
            os << F->to_string(c);
            printed_coef = true;
        }
        bool first_var = true;
        for (int i = 0; i < nvars; ++i) {
            int e = exp_of(k, i);
            if (!e) continue;
            if (printed_coef || !first_var) os << '*';
            os << names[i];
            if (e > 1) os << '^' << e;
            first_var = false;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Binary form roots

namespace {

constexpr uint64_t kScanCap = 531441;

// f as a univariate in s = t0/t1 plus the multiplicity of the root [1:0].
void dehomogenize(const MultiPoly& f, Unipoly& out, int& inf_mult) {
    const Fq& F = *f.F;
    int d = f.degree();
    std::vector<Fq::Elem> c(static_cast<size_t>(d) + 1, 0);
    for (auto& [k, co] : f.terms) c[exp_of(k, 0)] = co;  // exponent of t0
    out = Unipoly(F, std::move(c));
    inf_mult = d - out.deg();
}

}  // namespace

BinaryFormRoots binary_roots(const MultiPoly& f) {
    if (f.is_zero()) fail(Err::ZeroPolynomial, "binary_roots of zero");
    if (f.nvars != 2 || !f.is_homogeneous()) fail(Err::DimensionMismatch, "expected a binary form");
    const Fq& F0 = *f.F;
    int d = f.degree();
    BinaryFormRoots out;
    Unipoly base;
    int inf_mult;
    dehomogenize(f, base, inf_mult);
    int found = 0;
    if (inf_mult > 0) {
        out.roots.push_back({1, F0.one(), F0.zero(), inf_mult});
        found += inf_mult;
    }
    for (uint32_t level = 1; found < d; ++level) {
        uint64_t qk = 1;
        for (uint32_t i = 0; i < F0.k() * level; ++i) qk *= F0.p();
        if (F0.k() * level > 12 || qk > kScanCap)
            fail(Err::SplittingBoundExceeded, "binary form does not split within the field cap");
        const Fq& K = make_field(F0.p(), F0.k() * level);
        const Embedding& emb = get_embedding(F0, K);
        Unipoly g(K, {});
        g.c.resize(base.c.size());
        for (size_t i = 0; i < base.c.size(); ++i) g.c[i] = emb.map(base.c[i]);
        g.trim();
        for (uint32_t x = 0; x < K.q(); ++x) {
            if (g.eval(x) != 0) continue;
            // keep only roots new at this level
            bool minimal = true;
            for (uint32_t dl = 1; dl < level && minimal; ++dl) {
                if (level % dl) continue;
                uint64_t sub_q = 1;
                for (uint32_t i = 0; i < F0.k() * dl; ++i) sub_q *= F0.p();
                if (K.pow(x, sub_q) == x) minimal = false;
            }
            if (!minimal) continue;
            // multiplicity via repeated division by (X - x)
            Unipoly lin(K, {K.neg(x), 1});
            Unipoly cur = g, q, r;
            int m = 0;
            while (!cur.is_zero()) {
                uni_divrem(cur, lin, q, r);
                if (!r.is_zero()) break;
                ++m;
                cur = q;
            }
            out.roots.push_back({level, x, K.one(), m});
            found += m;
        }
        if (found >= d) break;
    }
    uint32_t l = 1;
    for (auto& r : out.roots) l = std::lcm(l, r.level);
    out.splitting_degree = l;
    return out;
}

bool is_square_binary(const MultiPoly& f) {
    if (f.is_zero()) fail(Err::ZeroPolynomial, "is_square_binary of zero");
    if (f.degree() % 2) return false;
    auto rts = binary_roots(f);
    for (auto& r : rts.roots)
        if (r.mult % 2) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Jacobian singular scan

std::optional<ProjPoint> jacobian_singular(const MultiPoly& f, int search_k) {
    if (f.is_zero()) fail(Err::ZeroPolynomial, "jacobian_singular of zero");
    const Fq& F0 = *f.F;
    std::array<MultiPoly, 3> partials;
    for (int i = 0; i < 3; ++i) partials[i] = mp_derivative(f, i);
    for (int level = 1; level <= search_k; ++level) {
        uint64_t qk = 1;
        for (uint32_t i = 0; i < F0.k() * level; ++i) qk *= F0.p();
        if (F0.k() * static_cast<uint32_t>(level) > 12 || qk * qk > kScanCap * 2) break;
        const Fq& K = make_field(F0.p(), F0.k() * level);
        const Embedding& emb = get_embedding(F0, K);
        auto lift = [&](const MultiPoly& g) {
            MultiPoly out(K, 3);
            out.terms.reserve(g.terms.size());
            for (auto& [k, c] : g.terms) out.terms.push_back({k, emb.map(c)});
            return out;
        };
        MultiPoly fK = lift(f);
        std::array<MultiPoly, 3> pK = {lift(partials[0]), lift(partials[1]), lift(partials[2])};
        auto test = [&](std::array<Fq::Elem, 3> pt) -> bool {
            return fK.eval(pt) == 0 && pK[0].eval(pt) == 0 && pK[1].eval(pt) == 0 &&
                   pK[2].eval(pt) == 0;
        };
        // affine charts [1,y,z], [0,1,z], [0,0,1]
        for (uint32_t y = 0; y < K.q(); ++y)
            for (uint32_t z = 0; z < K.q(); ++z)
                if (test({1, y, z}))
                    return ProjPoint{&K, static_cast<uint32_t>(level), {1, y, z}};
        for (uint32_t z = 0; z < K.q(); ++z)
            if (test({0, 1, z})) return ProjPoint{&K, static_cast<uint32_t>(level), {0, 1, z}};
        if (test({0, 0, 1})) return ProjPoint{&K, static_cast<uint32_t>(level), {0, 0, 1}};
    }
    return std::nullopt;
}

MultiPoly hessian_det(const MultiPoly& f) {
    if (f.nvars != 3) fail(Err::DimensionMismatch, "hessian needs 3 variables");
    MultiPoly h[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = mp_derivative(mp_derivative(f, i), j);
    MultiPoly det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                    h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                    h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    return det;
}

// ---------------------------------------------------------------------------
// Fixed subspace

std::vector<MultiPoly> fixed_subspace(const Fq& F, int nvars, int d,
                                      const std::vector<SqMat>& generators) {
    for (auto& g : generators)
        if (g.F != &F || g.n != nvars) fail(Err::DimensionMismatch, "generator mismatch");
    auto mons = monomials_of_degree(nvars, d);
    size_t dim = mons.size();
    std::map<uint32_t, size_t> index;
    for (size_t i = 0; i < dim; ++i) index[mons[i]] = i;
    // rows of the stacked system (g* - id) v = 0
    std::vector<std::vector<Fq::Elem>> rows;
    for (auto& g : generators) {
        std::vector<std::vector<Fq::Elem>> cols(dim, std::vector<Fq::Elem>(dim, 0));
        for (size_t j = 0; j < dim; ++j) {
            MultiPoly mono(F, nvars);
            mono.terms.push_back({mons[j], 1});
            MultiPoly img = substitute_linear(mono, g);
            for (auto& [k, c] : img.terms) cols[j][index.at(k)] = c;
        }
        for (size_t i = 0; i < dim; ++i) {
            std::vector<Fq::Elem> row(dim, 0);
            for (size_t j = 0; j < dim; ++j) row[j] = cols[j][i];
            row[i] = F.sub(row[i], 1);
            rows.push_back(std::move(row));
        }
    }
    // kernel by Gaussian elimination
    size_t nr = rows.size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < dim && r < nr; ++c) {
        size_t pr = nr;
        for (size_t i = r; i < nr; ++i)
            if (rows[i][c]) {
                pr = i;
                break;
            }
        if (pr == nr) continue;
        std::swap(rows[r], rows[pr]);
        Fq::Elem inv = F.inv(rows[r][c]);
        for (size_t j = c; j < dim; ++j) rows[r][j] = F.mul(rows[r][j], inv);
        for (size_t i = 0; i < nr; ++i) {
            if (i == r || !rows[i][c]) continue;
            Fq::Elem f = rows[i][c];
            for (size_t j = c; j < dim; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<MultiPoly> basis;
    for (size_t fc = 0; fc < dim; ++fc) {
        if (is_pivot[fc]) continue;
        MultiPoly b(F, nvars);
        std::vector<Fq::Elem> v(dim, 0);
        v[fc] = 1;
        for (size_t pi = 0; pi < pivot_col.size(); ++pi)
            v[pivot_col[pi]] = F.neg(rows[pi][fc]);
        for (size_t i = 0; i < dim; ++i)
            if (v[i]) b.terms.push_back({mons[i], v[i]});
        std::sort(b.terms.begin(), b.terms.end());
        basis.push_back(std::move(b));
    }
    return basis;
}

}  // namespace dpz
