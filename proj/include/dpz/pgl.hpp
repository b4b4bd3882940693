// pgl.hpp
// Elements and finite subgroups of PGL_2(q) and PGL_3(q): canonical matrix
// representatives, generator closure, brute-force and pruned stabilizers,
// element orders and Jordan data.

#ifndef DPZ_PGL_HPP
#define DPZ_PGL_HPP

#include <map>
#include <optional>
#include <vector>

#include "dpz/mat.hpp"
#include "dpz/mpoly.hpp"

namespace dpz {

// Canonical representative of a PGL element: the first nonzero entry in
// row-major order is scaled to 1.
struct ProjTransform {
    SqMat m;

    const Fq& field() const { return *m.F; }
    int n() const { return m.n; }
};

bool operator==(const ProjTransform& a, const ProjTransform& b);
bool operator<(const ProjTransform& a, const ProjTransform& b);

ProjTransform pt_canon(const SqMat& m);  // scales; SingularMatrix if det = 0
ProjTransform pt_identity(const Fq& F, int n);
ProjTransform pt_compose(const ProjTransform& a, const ProjTransform& b);
ProjTransform pt_inverse(const ProjTransform& a);
bool pt_is_identity(const ProjTransform& a);

// Least m >= 1 with g^m = id in PGL; Internal error if cap exceeded.
int element_order(const ProjTransform& g, int cap = 4000);

uint64_t pgl_order(int n, uint64_t q);

struct FiniteGroup {
    const Fq* F = nullptr;
    int n = 0;
    std::vector<ProjTransform> elements;  // sorted, unique
    std::vector<ProjTransform> generators;

    size_t order() const { return elements.size(); }
    bool contains(const ProjTransform& g) const;
};

// Full multiplication closure of the generators; CapExceeded rather than a
// truncated result.
FiniteGroup closure(const std::vector<ProjTransform>& generators, size_t cap);

std::map<int, long> order_histogram(const FiniteGroup& G);

// True if every product of two elements stays inside (exact check).
bool is_closed(const FiniteGroup& G);

// --- stabilizers -------------------------------------------------------------

enum class SearchStrategy {
    Plain,   // enumerate every canonical matrix, exact test (oracle path)
    Pruned,  // column-by-column with early rejection (n = 3 only)
};

// All g in PGL_n(q) with f(g.x) = lambda f(x); f's field is the search field.
// Bounds: q <= 128 for n = 2; q <= 5 plain and q <= 9 pruned for n = 3;
// SearchSpaceTooLarge otherwise.
FiniteGroup stabilizer_of_form(const MultiPoly& f, SearchStrategy strategy);

// Subset of a candidate group stabilizing f up to scalar.
FiniteGroup stabilizer_in_group(const MultiPoly& f, const FiniteGroup& G);

// P^1 point in canonical form (first nonzero coordinate = 1).
struct P1Point {
    Fq::Elem u = 0, v = 0;
    auto operator<=>(const P1Point&) const = default;
};
P1Point p1_canon(const Fq& F, Fq::Elem u, Fq::Elem v);
std::vector<P1Point> p1_all(const Fq& F);

// Subgroup of PGL_2 over the points' field permuting the multiset; needs at
// least 3 distinct points (TooFewPoints otherwise).
FiniteGroup point_set_stabilizer(const Fq& F, const std::vector<P1Point>& points);

// All elements of PGL_2(q), canonical representatives.
std::vector<ProjTransform> pgl2_elements(const Fq& F);

// --- Jordan data ---------------------------------------------------------------

struct JordanType {
    int order = 1;
    bool wild = false;
    bool scalar = false;
    // Eigenvalue multiplicity pattern of the semisimple part: "111", "21", "3".
    std::string ss_pattern;
    // Unipotent block partition; {1,1,1} when the element is semisimple.
    std::vector<int> blocks;
    // Eigenvalues (level over the base field, value, multiplicity); filled only
    // when requested.
    std::vector<std::tuple<uint32_t, Fq::Elem, int>> eigenvalues;
    uint32_t split_level = 0;
};

// Charpoly of the canonical representative, degree n, monic.
Unipoly pt_charpoly(const ProjTransform& g);

JordanType jordan_type(const ProjTransform& g, bool want_eigenvalues = false);

}  // namespace dpz

#endif
