#include "dpz/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dpz {

namespace {

constexpr uint64_t kMaxQ = 531441;  // 3^12, keeps exhaustive scans sub-second
constexpr uint32_t kMaxK = 12;
constexpr uint64_t kTableQ = 1300;  // build q x q lookup tables below this

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// GF(p) coefficient vectors, low degree first. Enough machinery to test
// irreducibility of the modulus candidates.
using Fp = std::vector<uint32_t>;

void fp_trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& mod, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Fp prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    // mod is monic
    size_t k = mod.size() - 1;
    for (size_t d = prod.size(); d-- > k;) {
        uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (size_t j = 0; j < k; ++j) {
            uint64_t sub = static_cast<uint64_t>(c) * mod[j] % p;
            prod[d - k + j] = static_cast<uint32_t>((prod[d - k + j] + p - sub) % p);
        }
    }
    prod.resize(k);
    fp_trim(prod);
    return prod;
}

Fp fp_powmod_xq(uint64_t e, const Fp& mod, uint32_t p) {
    // x^(p^e') style exponents get large; compute x^n for n = p^e via repeated
    // exponentiation by p using binary powering on the exponent.
    Fp base = {0, 1};
    fp_trim(base);
    Fp result = {1};
    // binary powering with exponent e given directly
    while (e) {
        if (e & 1) result = fp_mulmod(result, base, mod, p);
        base = fp_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Fp fp_gcd(Fp a, Fp b, uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // a mod b
        Fp r = a;
        uint32_t lead_inv = 1;
        {
            uint32_t acc = 1, base = b.back(), e = p - 2;
            while (e) {
                if (e & 1) acc = static_cast<uint64_t>(acc) * base % p;
                base = static_cast<uint64_t>(base) * base % p;
                e >>= 1;
            }
            lead_inv = acc;
        }
        while (r.size() >= b.size() && !r.empty()) {
            uint32_t f = static_cast<uint64_t>(r.back()) * lead_inv % p;
            size_t shift = r.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t sub = static_cast<uint64_t>(f) * b[j] % p;
                r[shift + j] = static_cast<uint32_t>((r[shift + j] + p - sub) % p);
            }
            fp_trim(r);
        }
        a = b;
        b = r;
    }
    return a;
}

uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

bool fp_irreducible(const Fp& f, uint32_t p) {
    uint32_t k = static_cast<uint32_t>(f.size()) - 1;
    if (k == 1) return true;
    // x^(p^k) == x mod f, and gcd(x^(p^(k/d)) - x, f) = 1 for prime d | k.
    Fp xq = fp_powmod_xq(ipow(p, k), f, p);
    Fp x = {0, 1};
    if (xq != x) return false;
    for (uint32_t d = 2; d <= k; ++d) {
        if (k % d || !is_prime(d)) continue;
        Fp xe = fp_powmod_xq(ipow(p, k / d), f, p);
        // xe - x
        Fp diff = xe;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        Fp g = fp_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Lexicographically smallest (compared low degree first) monic irreducible of
// degree k over GF(p).
Fp smallest_irreducible(uint32_t p, uint32_t k) {
    Fp f(k + 1, 0);
    f[k] = 1;
    if (k == 1) return f;  // x
    std::vector<uint32_t> digits(k, 0);
    while (true) {
        for (uint32_t i = 0; i < k; ++i) f[i] = digits[i];
        if (f[0] != 0 && fp_irreducible(f, p)) return f;
        // advance lexicographically: last digit fastest
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
        if (pos < 0) fail(Err::Internal, "no irreducible polynomial found");
        ++digits[pos];
    }
}

}  // namespace

Fq::Fq(uint32_t p, uint32_t k) : p_(p), k_(k) {
    uint64_t q = ipow(p, k);
    q_ = static_cast<uint32_t>(q);
    modulus_ = smallest_irreducible(p, k);
    if (k_ > 1) {
        // x^(k+j) mod modulus
        red_.assign(static_cast<size_t>(k_ - 1) * k_, 0);
        Fp cur(modulus_.begin(), modulus_.end() - 1);
        for (auto& v : cur) v = v ? p_ - v : 0;  // x^k = -low part
        for (uint32_t j = 0; j < k_ - 1; ++j) {
            for (uint32_t i = 0; i < k_; ++i) red_[static_cast<size_t>(j) * k_ + i] = cur[i];
            // multiply by x
            uint32_t top = cur[k_ - 1];
            for (uint32_t i = k_; i-- > 1;) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top) {
                for (uint32_t i = 0; i < k_; ++i) {
                    uint64_t sub = static_cast<uint64_t>(top) * modulus_[i] % p_;
                    cur[i] = static_cast<uint32_t>((cur[i] + p_ - sub) % p_);
                }
            }
        }
    }
    if (q <= kTableQ) {
        mul_.resize(static_cast<size_t>(q_) * q_);
        add_.resize(static_cast<size_t>(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b <= a; ++b) {
                Elem s = add_slow(a, b), m = mul_slow(a, b);
                add_[static_cast<size_t>(a) * q_ + b] = s;
                add_[static_cast<size_t>(b) * q_ + a] = s;
                mul_[static_cast<size_t>(a) * q_ + b] = m;
                mul_[static_cast<size_t>(b) * q_ + a] = m;
            }
        neg_.resize(q_);
        inv_.resize(q_);
        for (uint32_t a = 0; a < q_; ++a) neg_[a] = neg_slow(a);
        inv_[0] = 0;
        for (uint32_t a = 1; a < q_; ++a) {
            Elem x = a, acc = 1;
            uint64_t e = q_ - 2;
            while (e) {
                if (e & 1) acc = mul_[static_cast<size_t>(acc) * q_ + x];
                x = mul_[static_cast<size_t>(x) * q_ + x];
                e >>= 1;
            }
            inv_[a] = acc;
        }
    }
}

Fq::Elem Fq::add_slow(Elem a, Elem b) const {
    Elem out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return out;
}

Fq::Elem Fq::neg_slow(Elem a) const {
    Elem out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t d = a % p_;
        a /= p_;
        out += (d ? p_ - d : 0) * mult;
        mult *= p_;
    }
    return out;
}

Fq::Elem Fq::mul_slow(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>(static_cast<uint64_t>(a) * b % p_);
    uint32_t da[kMaxK], db[kMaxK];
    uint64_t prod[2 * kMaxK - 1] = {0};
    for (uint32_t i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (uint32_t i = 0; i < k_; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < k_; ++j) prod[i + j] += static_cast<uint64_t>(da[i]) * db[j];
    }
    uint32_t res[kMaxK];
    for (uint32_t i = 0; i < k_; ++i) res[i] = static_cast<uint32_t>(prod[i] % p_);
    for (uint32_t d = k_; d < 2 * k_ - 1; ++d) {
        uint32_t c = static_cast<uint32_t>(prod[d] % p_);
        if (!c) continue;
        const uint32_t* row = &red_[static_cast<size_t>(d - k_) * k_];
        for (uint32_t i = 0; i < k_; ++i)
            res[i] = static_cast<uint32_t>((res[i] + static_cast<uint64_t>(c) * row[i]) % p_);
    }
    Elem out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        out += res[i] * mult;
        mult *= p_;
    }
    return out;
}

Fq::Elem Fq::pow(Elem a, uint64_t e) const {
    Elem acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

uint32_t Fq::elem_order(Elem a) const {
    if (a == 0) fail(Err::DivideByZero, "order of zero");
    uint32_t ord = q_ - 1;
    uint32_t n = ord;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
        if (n % d) continue;
        while (n % d == 0) n /= d;
        while (ord % d == 0 && pow(a, ord / d) == 1) ord /= d;
    }
    if (n > 1)
        while (ord % n == 0 && pow(a, ord / n) == 1) ord /= n;
    return ord;
}

std::vector<uint32_t> Fq::coeffs(Elem a) const {
    std::vector<uint32_t> c(k_);
    for (uint32_t i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Fq::Elem Fq::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > k_) fail(Err::DimensionMismatch, "too many coefficients for field element");
    Elem out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t d = i < c.size() ? c[i] % p_ : 0;
        out += d * mult;
        mult *= p_;
    }
    return out;
}

std::string Fq::to_string(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    std::ostringstream os;
    os << '[';
    auto c = coeffs(a);
    for (uint32_t i = 0; i < k_; ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

const Fq& make_field(uint32_t p, uint32_t k) {
    if (!is_prime(p)) fail(Err::NonPrime, "characteristic " + std::to_string(p) + " is not prime");
    if (p == 2) fail(Err::EvenCharacteristic, "characteristic 2 is not supported");
    if (k < 1 || k > kMaxK || ipow(p, k) > kMaxQ)
        fail(Err::DegreeTooLarge, "field size exceeds the 3^12 cap");
    static std::mutex mtx;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Fq>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Fq>(new Fq(p, k))).first;
    return *it->second;
}

// ---------------------------------------------------------------------------
// Unipoly

Fq::Elem Unipoly::eval(Fq::Elem x) const {
    Fq::Elem acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = F->add(F->mul(acc, x), c[i]);
    return acc;
}

bool operator==(const Unipoly& a, const Unipoly& b) { return a.F == b.F && a.c == b.c; }

Unipoly operator+(const Unipoly& a, const Unipoly& b) {
    if (a.F != b.F) fail(Err::SpecMismatch, "polynomial field mismatch");
    std::vector<Fq::Elem> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        Fq::Elem x = i < a.c.size() ? a.c[i] : 0;
        Fq::Elem y = i < b.c.size() ? b.c[i] : 0;
        c[i] = a.F->add(x, y);
    }
    return Unipoly(*a.F, std::move(c));
}

Unipoly operator-(const Unipoly& a, const Unipoly& b) {
    if (a.F != b.F) fail(Err::SpecMismatch, "polynomial field mismatch");
    std::vector<Fq::Elem> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        Fq::Elem x = i < a.c.size() ? a.c[i] : 0;
        Fq::Elem y = i < b.c.size() ? b.c[i] : 0;
        c[i] = a.F->sub(x, y);
    }
    return Unipoly(*a.F, std::move(c));
}

Unipoly operator*(const Unipoly& a, const Unipoly& b) {
    if (a.F != b.F) fail(Err::SpecMismatch, "polynomial field mismatch");
    if (a.is_zero() || b.is_zero()) return Unipoly::zero(*a.F);
    std::vector<Fq::Elem> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = a.F->add(c[i + j], a.F->mul(a.c[i], b.c[j]));
    }
    return Unipoly(*a.F, std::move(c));
}

Unipoly uni_scale(const Unipoly& a, Fq::Elem s) {
    std::vector<Fq::Elem> c(a.c);
    for (auto& x : c) x = a.F->mul(x, s);
    return Unipoly(*a.F, std::move(c));
}

void uni_divrem(const Unipoly& a, const Unipoly& b, Unipoly& quo, Unipoly& rem) {
    if (b.is_zero()) fail(Err::DivideByZero, "polynomial division by zero");
    const Fq& F = *a.F;
    std::vector<Fq::Elem> r = a.c;
    std::vector<Fq::Elem> q;
    Fq::Elem linv = F.inv(b.lead());
    if (r.size() >= b.c.size()) q.assign(r.size() - b.c.size() + 1, 0);
    while (r.size() >= b.c.size() && !r.empty()) {
        Fq::Elem f = F.mul(r.back(), linv);
        size_t shift = r.size() - b.c.size();
        q[shift] = f;
        for (size_t j = 0; j < b.c.size(); ++j)
            r[shift + j] = F.sub(r[shift + j], F.mul(f, b.c[j]));
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    quo = Unipoly(F, std::move(q));
    rem = Unipoly(F, std::move(r));
}

Unipoly uni_monic(const Unipoly& a) {
    if (a.is_zero()) return a;
    return uni_scale(a, a.F->inv(a.lead()));
}

Unipoly uni_gcd(Unipoly a, Unipoly b) {
    while (!b.is_zero()) {
        Unipoly q, r;
        uni_divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return uni_monic(a);
}

Unipoly uni_derivative(const Unipoly& a) {
    if (a.c.size() <= 1) return Unipoly::zero(*a.F);
    std::vector<Fq::Elem> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        c[i - 1] = a.F->mul(a.c[i], a.F->from_int(static_cast<int64_t>(i)));
    return Unipoly(*a.F, std::move(c));
}

std::vector<std::pair<Fq::Elem, int>> univariate_roots(const Unipoly& f) {
    if (f.is_zero()) fail(Err::ZeroPolynomial, "root-finding on the zero polynomial");
    const Fq& F = *f.F;
    std::vector<std::pair<Fq::Elem, int>> out;
    for (uint32_t x = 0; x < F.q(); ++x) {
        if (f.eval(x) != 0) continue;
        // multiplicity by repeated division by (X - x)
        Unipoly lin(F, {F.neg(x), 1});
        Unipoly cur = f, q, r;
        int m = 0;
        while (true) {
            uni_divrem(cur, lin, q, r);
            if (!r.is_zero()) break;
            ++m;
            cur = q;
            if (cur.is_zero()) break;
        }
        out.emplace_back(x, m);
    }
    return out;
}

std::vector<Fq::Elem> nth_roots_of_unity(const Fq& F, uint64_t n) {
    if (n == 0 || n % F.p() == 0) fail(Err::WildOrder, "n must be coprime to the characteristic");
    std::vector<Fq::Elem> out;
    for (uint32_t x = 1; x < F.q(); ++x)
        if (F.pow(x, n) == 1) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------------------
// Embeddings

Embedding::Embedding(const Fq& src, const Fq& dst) : src_(&src), dst_(&dst) {
    if (src.p() != dst.p() || dst.k() % src.k() != 0)
        fail(Err::SpecMismatch, "no subfield embedding between these fields");
    // smallest root of the source modulus in the target field
    Unipoly mod(dst, {});
    mod.c.resize(src.modulus().size());
    for (size_t i = 0; i < src.modulus().size(); ++i) mod.c[i] = dst.from_int(src.modulus()[i]);
    mod.trim();
    Fq::Elem root = 0;
    bool found = false;
    for (uint32_t x = 0; x < dst.q(); ++x) {
        if (mod.eval(x) == 0) {
            root = x;
            found = true;
            break;
        }
    }
    if (!found) fail(Err::Internal, "modulus has no root in extension field");
    gen_pow_.resize(src.k());
    Fq::Elem acc = 1;
    for (uint32_t i = 0; i < src.k(); ++i) {
        gen_pow_[i] = acc;
        acc = dst.mul(acc, root);
    }
}

Fq::Elem Embedding::map(Fq::Elem a) const {
    if (src_ == dst_) return a;
    Fq::Elem out = 0;
    auto c = src_->coeffs(a);
    for (uint32_t i = 0; i < src_->k(); ++i)
        if (c[i]) out = dst_->add(out, dst_->mul(dst_->from_int(c[i]), gen_pow_[i]));
    return out;
}

const Embedding& get_embedding(const Fq& src, const Fq& dst) {
    static std::mutex mtx;
    static std::map<std::pair<const Fq*, const Fq*>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(&src, &dst);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Embedding>(src, dst)).first;
    return *it->second;
}

}  // namespace dpz
