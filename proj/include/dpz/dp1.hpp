// dp1.hpp
// Degree-1 del Pezzo surfaces as Weierstrass models y^2 + x^3 + a2 x^2 +
// a4 x + a6 = 0 over P^1 (weights 1,1,2,3): discriminant, j-invariant,
// quasi-smoothness, the H/P decomposition, automorphism lifting, concrete
// automorphism groups, and the wild family constructors.

#ifndef DPZ_DP1_HPP
#define DPZ_DP1_HPP

#include <map>
#include <optional>

#include "dpz/pgl.hpp"

namespace dpz::dp1 {

struct WeierstrassModel {
    const Fq* F = nullptr;
    MultiPoly a2, a4, a6;  // binary forms of degrees 2, 4, 6; may be zero
};

// Validates degrees/homogeneity; smoothness is a separate check.
WeierstrassModel make_model(const Fq& F, const MultiPoly& a2, const MultiPoly& a4,
                            const MultiPoly& a6);
WeierstrassModel model_embed(const WeierstrassModel& W, const Fq& K);

// Characteristic-appropriate discriminant, a binary form of degree 12:
// p = 3: -a2^3 a6 + a2^2 a4^2 - a4^3; p >= 5: 4 A4^3 + 27 A6^2 after
// completing the cube. ZeroDiscriminant when identically zero.
MultiPoly discriminant(const WeierstrassModel& W);

// (numerator, denominator) = (a2^6, Delta); p = 3 only.
std::pair<MultiPoly, MultiPoly> j_invariant(const WeierstrassModel& W);

struct SurfacePoint {
    const Fq* F = nullptr;
    uint32_t level = 1;
    Fq::Elem t0, t1, x, y;
};
// Scans the charts of P(1,1,2,3) over extensions up to search_k (subject to
// the field cap) for a point where all partials vanish.
std::optional<SurfacePoint> is_smooth(const WeierstrassModel& W, int search_k);

// Kernel analysis of the action on the base: H = ker(Aut -> PGL_2),
// H0 = ker of the tangent representation.
struct HPDecomposition {
    int H_order = 2;   // 2, 4 or 6
    int H0_order = 1;  // 1 or 3 (p = 3 with a4 a square)
};
HPDecomposition compute_H(const WeierstrassModel& W);

// (x, y, t) -> (u^2 x + r(t), u^3 y, M t); matrix part canonical, so the
// representative is unique.
struct WeierstrassAuto {
    SqMat m;              // canonical 2x2
    Fq::Elem u = 1;
    std::array<Fq::Elem, 3> r{};  // r = r0 t0^2 + r1 t0 t1 + r2 t1^2
};

bool operator==(const WeierstrassAuto& a, const WeierstrassAuto& b);
bool operator<(const WeierstrassAuto& a, const WeierstrassAuto& b);

WeierstrassAuto wa_identity(const Fq& F);
WeierstrassAuto wa_bertini(const Fq& F);  // (x, y) -> (x, -y)
WeierstrassAuto wa_compose(const WeierstrassAuto& a, const WeierstrassAuto& b);
int wa_order(const WeierstrassAuto& a, int cap = 64);
// Exact check that the substitution maps the equation to u^6 times itself.
bool wa_preserves(const WeierstrassModel& W, const WeierstrassAuto& a);

// All lifts of the base transform g (possibly empty).
std::vector<WeierstrassAuto> lift_check(const WeierstrassModel& W, const ProjTransform& g);

struct Dp1AutReport {
    HPDecomposition hp;
    FiniteGroup P;                        // liftable base transforms
    std::vector<WeierstrassAuto> elements;  // the full concrete group
    uint64_t order = 0;
    std::map<int, long> histogram;
    bool bertini_central = false;
};

// Enumerates PGL_2 over the search field, filters by discriminant
// semi-invariance, lifts every candidate and closes up. The search field must
// contain the model's field.
Dp1AutReport aut_dp1(const WeierstrassModel& W, const Fq& searchField);

enum class Family1 {
    D10Char5,      // y^2 + x^3 + c t0^4 x + t0 t1 (t1^4 - t0^4), c != 0 (p = 5)
    Pgl25Char5,    // y^2 + x^3 + t0 t1 (t1^4 - t0^4)             (p = 5)
    JnzGeneric,    // eq 3.1-1 (p = 3), params a, b, c
    Jnz33,         // eq 3.1-1b (p = 3), params a, b (b != 0)
    J0C2,          // eq 3.2-1 (p = 3), params a, b (a, b != 0)
    J0TwoFibers,   // eq 3.2-2 (p = 3), params a, b, c (a != 0)
    J0OneFiber,    // eq 3.2-3 (p = 3), params a, b
    C10Char3,      // y^2 + x^3 + t0^2 x^2 + a t0 (t1^5 + t0^5), a != 0 (p = 3)
    MChar,         // y^2 + x^3 + t0 t1 (t0^4 + a t0^2 t1^2 + t1^4)  (p != 3)
    QuarticPencil, // y^2 + x^3 + t0 t1 (t0^4 - t1^4)              (p != 3)
    SexticFermat,  // y^2 + x^3 + t0^6 + t1^6                      (p != 3)
};

Family1 family1_by_name(const std::string& name);
std::string family1_name(Family1 f);

// Builds the printed equation, enforces the printed side conditions, and
// verifies quasi-smoothness.
WeierstrassModel make_family1(Family1 name, const std::vector<Fq::Elem>& params, const Fq& F);

// Search field the family's full automorphism group is rational over. For
// jnz_33 this depends on the parameters: the translation part t1 -> t1 + B t0
// has B ranging over the 9 roots of B^9 + a B^3 + b B, a 2-dimensional
// F_3-space whose rationality field GF(3^m) has m <= 8.
const Fq& family1_search_field(Family1 name, const std::vector<Fq::Elem>& params, const Fq& F);

}  // namespace dpz::dp1

#endif
