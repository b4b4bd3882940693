// dp4.hpp
// Quartic del Pezzo surfaces via the diagonal pencil-of-quadrics model:
// Aut(X) = 2^4 . G with G the PGL_2-stabilizer of the five roots of
// Delta = uv(u-v)(u-av)(bu-v).

#ifndef DPZ_DP4_HPP
#define DPZ_DP4_HPP

#include "dpz/pgl.hpp"

namespace dpz::dp4 {

struct Dp4Model {
    const Fq* F = nullptr;
    Fq::Elem a = 0, b = 0;
};

// Validates that the five roots are distinct (MultipleRoots otherwise).
Dp4Model make_dp4(const Fq& F, Fq::Elem a, Fq::Elem b);

// The five roots [0:1], [1:0], [1:1], [a:1], [1:b] in canonical form.
std::vector<P1Point> dp4_roots(const Dp4Model& M);

struct Dp4Report {
    uint64_t order = 0;  // 16 |G|
    FiniteGroup G;
    std::vector<P1Point> roots;
};

// The stabilizer search runs over the model's own field; since at least three
// of the five roots are rational, every stabilizing projectivity is too, so
// the search is complete.
Dp4Report aut_dp4(const Dp4Model& M);

}  // namespace dpz::dp4

#endif
