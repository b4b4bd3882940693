// weyl.hpp
// The lattices I^{1,N} (N = 6,7,8), Weyl reflections, characteristic
// polynomials on the orthogonal complement of the canonical class, and the
// Carter conjugacy-class table keyed by (characteristic polynomial, order).
// All arithmetic is 64-bit integer arithmetic; entries stay tiny.

#ifndef DPZ_WEYL_HPP
#define DPZ_WEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dpz/common.hpp"

namespace dpz::weyl {

using IntVec = std::vector<int64_t>;
// row-major square matrices
using IntMat = std::vector<int64_t>;

// Lattice I^{1,N}: gram diag(1,-1,...,-1), canonical vector k = (3,-1,...,-1)
// (the anti-canonical class in the geometric basis). k.k = 9 - N.
struct GeomLattice {
    int N;
    int dim() const { return N + 1; }
    IntVec kvec() const;
    int64_t inner(const IntVec& x, const IntVec& y) const;
    // simple roots a_0 = e0-e1-e2-e3, a_i = e_i - e_{i+1}
    std::vector<IntVec> root_basis() const;
};

struct LatticeIsometry {
    int N = 0;
    IntMat m;  // (N+1) x (N+1)

    int64_t at(int i, int j) const { return m[static_cast<size_t>(i) * (N + 1) + j]; }
    int64_t& at(int i, int j) { return m[static_cast<size_t>(i) * (N + 1) + j]; }
};

bool operator==(const LatticeIsometry& a, const LatticeIsometry& b);

LatticeIsometry iso_identity(int N);
LatticeIsometry iso_compose(const LatticeIsometry& a, const LatticeIsometry& b);
// Preserves the form and fixes the canonical vector.
bool iso_valid(const LatticeIsometry& w);
int iso_order(const LatticeIsometry& w, int cap = 64);

// Reflection x -> x + (x.a_i) a_i; IndexOutOfRange unless 0 <= i < N.
LatticeIsometry simple_reflection(int N, int i);

// N x N matrices of the simple reflections in the root basis (for sampling
// random words without rational projections).
std::vector<IntMat> reflection_root_matrices(int N);
IntMat root_mat_mul(int N, const IntMat& a, const IntMat& b);
// Monic charpoly of an N x N integer matrix, ascending coefficients.
IntVec charpoly_int(int N, const IntMat& m);

// Charpoly of w restricted to the orthogonal complement of k, computed on the
// root basis. Degree N, monic, ascending. NotAnIsometry if w is invalid.
IntVec charpoly_EN(const LatticeIsometry& w);

// --- Carter classes ----------------------------------------------------------

struct CarterClass {
    std::string name;  // e.g. "4A_1", "E_7(a_4)", "id"
    int rank = 0;      // total rank of the components (padding = N - rank)
    int order = 1;
    IntVec cp;  // padded charpoly, degree N, ascending, monic

    int64_t trace() const { return -cp[cp.size() - 2]; }
};

// All formal sums of irreducible Carter graphs of total rank <= N, padded by
// (t-1)^(N-rank). Every genuine class of W(E_N) appears in this list.
const std::vector<CarterClass>& carter_table(int N);

const CarterClass& class_by_name(const std::string& name, int N);  // NoMatch if absent

// Every class whose (padded charpoly, order) matches. Empty = NoMatch;
// more than one = ambiguous, returned explicitly.
std::vector<CarterClass> carter_lookup(const IntVec& cp, int order, int N);

// Lefschetz bookkeeping: traces on H^2 and on E_N from e(X^g).
struct LefschetzTraces {
    int64_t tr_h2;
    int64_t tr_en;
};
LefschetzTraces lefschetz_trace(int64_t euler_fixed);

// Class of -w given the class of w (N = 7 or 8, where w0 = -id). Result can be
// ambiguous; AmbiguousPairing if so and `require_unique`.
std::vector<CarterClass> minus_pair(const CarterClass& c, int N);
const CarterClass& minus_pair_unique(const CarterClass& c, int N);

}  // namespace dpz::weyl

#endif
