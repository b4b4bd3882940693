// dp2.hpp
// Degree-2 del Pezzo surfaces as smooth plane quartics: the wild families in
// characteristic 3, automorphism groups, the Fermat/inflection detector, the
// Klein-Fermat coordinate change, conjugacy classes via the W(E_7) dictionary,
// and the order-p nonexistence certificates for p = 5, 7.

#ifndef DPZ_DP2_HPP
#define DPZ_DP2_HPP

#include <map>
#include <optional>

#include "dpz/pgl.hpp"
#include "dpz/weyl.hpp"

namespace dpz::dp2 {

enum class Family { Klein, Fermat, S3, S4, Heisenberg, C3, Cyclic3 };

Family family_by_name(const std::string& name);
std::string family_name(Family f);

struct PlaneQuartic {
    MultiPoly f;
    std::optional<Family> family;
    std::vector<Fq::Elem> params;
};

// Builds the printed equation and verifies smoothness (SingularMember with a
// witness point otherwise). Parameter counts: klein/fermat 0, s4 1 (a),
// heisenberg 1 (c), s3 4 (a,b,c,d), cyclic3 5 (a..e), c3 7 (f1 then f4
// coefficients).
PlaneQuartic make_family(Family name, const std::vector<Fq::Elem>& params, const Fq& F);
// Validates smoothness of a custom quartic.
PlaneQuartic make_quartic(const MultiPoly& f);

// Characteristic 3 only: true iff every point of C is an inflection point,
// i.e. C is projectively equivalent to the Fermat quartic. Certified by
// scanning C over GF(3^k) with q ~ 729 (Bezout bound 32 < #C).
bool is_fermat_equivalent(const MultiPoly& f);

// The ordered pair (class of g~, class of gamma g~) from the Jordan-form
// dictionary for W(E_7). RowNotFound if the element matches no row.
struct ClassPair {
    weyl::CarterClass g;
    weyl::CarterClass gbar;
};
ClassPair classify_element(const ProjTransform& g);

enum class Strategy { ClosureFromKnownGenerators, Exhaustive, Hybrid };

struct Dp2AutReport {
    FiniteGroup curve_group;        // concrete stabilizer elements found
    uint64_t curve_order = 0;       // |Aut(C)|
    uint64_t surface_order = 0;     // 2 |Aut(C)| (Geiser factor)
    bool complete = false;          // curve_group is certified to be all of Aut(C)
    bool fermat_equivalent = false; // char-3 inflection flag
    // counted over Aut(X) = 2 x Aut(C): each curve element contributes the
    // classes of both of its lifts
    std::map<std::string, long> class_counts;
    std::map<int, long> histogram;  // element orders in Aut(X)
};

// Exhaustive needs q <= 5 (plain PGL_3 enumeration over the curve's field);
// Hybrid takes the family's printed generators and certifies the closure
// order against the classification, falling back to the pruned search for
// custom curves (q <= 9).
Dp2AutReport aut_curve(const PlaneQuartic& C, Strategy strategy);

// Generators of Aut(C) as printed / derived for the family, over a suitable
// extension field; pair of (generators, expected full order).
std::pair<std::vector<ProjTransform>, uint64_t> known_generators(Family name,
                                                                 const PlaneQuartic& C);

// A transform T with klein(T x) proportional to fermat(x), over GF(p^6).
// NoWitnessFound when no isomorphism exists (p = 5: orders 168 vs 96).
ProjTransform klein_fermat_witness(const Fq& F);

// Order-p nonexistence certificate for p in {5, 7}: both Jordan forms of an
// order-p plane transformation, every invariant quartic checked singular.
struct WildCase {
    std::string jordan_label;
    int dim = 0;
    uint64_t members = 0;
    uint64_t singular = 0;
};
struct WildCertificate {
    uint32_t p = 0;
    bool all_singular = false;
    std::vector<WildCase> cases;
};
WildCertificate wild_nonexistence(uint32_t p);

}  // namespace dpz::dp2

#endif
