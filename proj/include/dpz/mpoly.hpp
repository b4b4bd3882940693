// mpoly.hpp
// Sparse homogeneous polynomials over GF(p^k) in 2 variables (t0, t1) or
// 3 variables (x0, x1, x2). Exponent vectors are packed into a uint32:
// e0 | e1<<8 | e2<<16, so term order is deterministic.

#ifndef DPZ_MPOLY_HPP
#define DPZ_MPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpz/gf.hpp"
#include "dpz/mat.hpp"

namespace dpz {

inline uint32_t pack_exp(int e0, int e1, int e2 = 0) {
    return static_cast<uint32_t>(e0) | (static_cast<uint32_t>(e1) << 8) |
           (static_cast<uint32_t>(e2) << 16);
}
inline int exp_of(uint32_t key, int i) { return static_cast<int>((key >> (8 * i)) & 0xff); }

struct MultiPoly {
    const Fq* F = nullptr;
    int nvars = 0;
    std::vector<std::pair<uint32_t, Fq::Elem>> terms;  // sorted by key, nonzero coeffs

    MultiPoly() = default;
    MultiPoly(const Fq& f, int nv) : F(&f), nvars(nv) {}

    bool is_zero() const { return terms.empty(); }
    int degree() const;  // total degree, -1 for zero
    bool is_homogeneous() const;
    Fq::Elem coeff(uint32_t key) const;
    void set_coeff(uint32_t key, Fq::Elem c);  // keeps sorted/nonzero invariants

    Fq::Elem eval(const std::array<Fq::Elem, 3>& x) const;

    std::string to_string() const;
};

bool operator==(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_scale(const MultiPoly& a, Fq::Elem s);
MultiPoly mp_derivative(const MultiPoly& a, int var);

// f(M.x), M invertible and of size nvars.
MultiPoly substitute_linear(const MultiPoly& f, const SqMat& M);

// Is g = lambda * f for some nonzero lambda? Returns lambda.
std::optional<Fq::Elem> proportional(const MultiPoly& g, const MultiPoly& f);

// Parser / printer for the CLI text format, e.g. "x0^3*x1 + x1^3*x2 + x2^3*x0"
// with integer or "[c0,c1,...]" coefficients. Variables x0..x2 (nvars 3) or
// t0,t1 (nvars 2); either letter is accepted.
MultiPoly parse_poly(const Fq& F, int nvars, const std::string& text);

// Coefficientwise image under a subfield embedding.
MultiPoly mp_embed(const MultiPoly& f, const Embedding& e);

// Monomial basis of degree d, in packed-key order.
std::vector<uint32_t> monomials_of_degree(int nvars, int d);

// --- binary forms -----------------------------------------------------------

struct BinaryRoot {
    uint32_t level;  // extension degree over the form's field
    Fq::Elem u, v;   // canonical representative in GF(p^(k*level)), first nonzero = 1
    int mult;
};

struct BinaryFormRoots {
    std::vector<BinaryRoot> roots;
    uint32_t splitting_degree = 1;  // lcm of root levels
};

// Full root multiset of a nonzero binary form over the smallest extensions
// that contain each root. Scans GF(p^(k*j)) for j = 1.. while the field cap
// permits; raises SplittingBoundExceeded if roots remain out of reach.
BinaryFormRoots binary_roots(const MultiPoly& f);

// True iff every root multiplicity is even (f is a square over the closure).
bool is_square_binary(const MultiPoly& f);

// --- ternary forms ----------------------------------------------------------

struct ProjPoint {
    const Fq* F = nullptr;
    uint32_t level = 1;  // extension degree over the form's base field
    std::array<Fq::Elem, 3> x{};
};

// A common projective zero of f and its partials over GF(p^(k*j)), j <=
// search_k (subject to the scan cap), or nullopt if none was found up to the
// bound. search_k = 6 is sufficient for every family in scope.
std::optional<ProjPoint> jacobian_singular(const MultiPoly& f, int search_k);

// Determinant of the matrix of second partials (3 variables).
MultiPoly hessian_det(const MultiPoly& f);

// Basis of the subspace of degree-d forms fixed (exactly, scalar 1) by every
// generator. Row-reduced for determinism.
std::vector<MultiPoly> fixed_subspace(const Fq& F, int nvars, int d,
                                      const std::vector<SqMat>& generators);

}  // namespace dpz

#endif
