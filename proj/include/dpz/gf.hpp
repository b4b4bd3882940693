// gf.hpp
// Exact arithmetic in GF(p^k), p odd, p^k <= 3^12. Elements are encoded as
// integers in [0, q): the base-p digits are the coefficients of the residue
// polynomial, lowest degree first. Fields are interned, so a FieldSpec is just
// a pointer and two specs are compatible iff the pointers are equal.

#ifndef DPZ_GF_HPP
#define DPZ_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dpz/common.hpp"

namespace dpz {

class Fq;

// make_field(p, k): deterministic field construction. The modulus is the
// lexicographically smallest monic irreducible of degree k over GF(p),
// coefficients compared lowest degree first.
const Fq& make_field(uint32_t p, uint32_t k);

class Fq {
  public:
    using Elem = uint32_t;

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t q() const { return q_; }
    // Monic modulus, length k+1, entries in [0, p).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem from_int(int64_t n) const {
        int64_t r = n % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    // Element whose residue polynomial is x (the class of the generator).
    Elem gen() const { return k_ == 1 ? from_int(0) : p_; }

    bool tables() const { return !mul_.empty(); }

    Elem add(Elem a, Elem b) const {
        if (!add_.empty()) return add_[static_cast<size_t>(a) * q_ + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const {
        if (!neg_.empty()) return neg_[a];
        return neg_slow(a);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (!mul_.empty()) return mul_[static_cast<size_t>(a) * q_ + b];
        return mul_slow(a, b);
    }
    Elem inv(Elem a) const {
        if (a == 0) fail(Err::DivideByZero, "inverse of zero");
        if (!inv_.empty()) return inv_[a];
        return pow(a, q_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, uint64_t e) const;
    // Frobenius x -> x^p.
    Elem frob(Elem a) const { return pow(a, p_); }

    // Multiplicative order of a nonzero element.
    uint32_t elem_order(Elem a) const;

    std::vector<uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<uint32_t>& c) const;

    // "[c0,c1,...]"; plain integer for prime fields.
    std::string to_string(Elem a) const;

    // Direct, table-backed pointers for hot loops (valid only when tables()).
    const Elem* mul_table() const { return mul_.data(); }
    const Elem* add_table() const { return add_.data(); }

  private:
    friend const Fq& make_field(uint32_t, uint32_t);
    Fq(uint32_t p, uint32_t k);

    Elem add_slow(Elem a, Elem b) const;
    Elem neg_slow(Elem a) const;
    Elem mul_slow(Elem a, Elem b) const;

    uint32_t p_, k_, q_;
    std::vector<uint32_t> modulus_;
    // x^(k+j) mod modulus, j = 0..k-2, as coefficient rows of length k.
    std::vector<uint32_t> red_;
    std::vector<Elem> mul_, add_, inv_, neg_;
};

// Dense univariate polynomial over an interned field; coefficients low
// degree first, no trailing zeros.
struct Unipoly {
    const Fq* F = nullptr;
    std::vector<Fq::Elem> c;

    Unipoly() = default;
    Unipoly(const Fq& f, std::vector<Fq::Elem> cc) : F(&f), c(std::move(cc)) { trim(); }

    static Unipoly zero(const Fq& f) { return Unipoly(f, {}); }
    static Unipoly constant(const Fq& f, Fq::Elem a) { return Unipoly(f, {a}); }
    static Unipoly x(const Fq& f) { return Unipoly(f, {0, 1}); }

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    Fq::Elem lead() const { return c.empty() ? 0 : c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    Fq::Elem eval(Fq::Elem x) const;
};

bool operator==(const Unipoly& a, const Unipoly& b);
Unipoly operator+(const Unipoly& a, const Unipoly& b);
Unipoly operator-(const Unipoly& a, const Unipoly& b);
Unipoly operator*(const Unipoly& a, const Unipoly& b);
Unipoly uni_scale(const Unipoly& a, Fq::Elem s);
// Quotient/remainder by a nonzero divisor.
void uni_divrem(const Unipoly& a, const Unipoly& b, Unipoly& quo, Unipoly& rem);
Unipoly uni_gcd(Unipoly a, Unipoly b);  // monic gcd
Unipoly uni_derivative(const Unipoly& a);
Unipoly uni_monic(const Unipoly& a);

// All roots in the polynomial's own field, with multiplicities, by exhaustive
// scan. Errors with ZeroPolynomial on the zero polynomial.
std::vector<std::pair<Fq::Elem, int>> univariate_roots(const Unipoly& f);

// All x with x^n = 1; requires gcd(n, p) = 1 (WildOrder otherwise).
std::vector<Fq::Elem> nth_roots_of_unity(const Fq& F, uint64_t n);

// Subfield embedding GF(p^k) -> GF(p^m), k | m, determined by sending the
// source generator to the smallest root of the source modulus in the target.
class Embedding {
  public:
    Embedding(const Fq& src, const Fq& dst);
    const Fq& src() const { return *src_; }
    const Fq& dst() const { return *dst_; }
    Fq::Elem map(Fq::Elem a) const;

  private:
    const Fq* src_;
    const Fq* dst_;
    std::vector<Fq::Elem> gen_pow_;  // images of x^0 .. x^(k-1)
};

const Embedding& get_embedding(const Fq& src, const Fq& dst);

}  // namespace dpz

#endif
