#include "dpz/dp4.hpp"

namespace dpz::dp4 {

Dp4Model make_dp4(const Fq& F, Fq::Elem a, Fq::Elem b) {
    if (F.p() == 2) fail(Err::EvenCharacteristic, "odd characteristic only");
    Dp4Model M{&F, a, b};
    auto roots = dp4_roots(M);
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                fail(Err::MultipleRoots, "uv(u-v)(u-av)(bu-v) has a repeated root");
    return M;
}

std::vector<P1Point> dp4_roots(const Dp4Model& M) {
    const Fq& F = *M.F;
    std::vector<P1Point> roots = {p1_canon(F, 0, 1), p1_canon(F, 1, 0), p1_canon(F, 1, 1)};
    roots.push_back(p1_canon(F, M.a, 1));
    roots.push_back(p1_canon(F, 1, M.b));
    return roots;
}

Dp4Report aut_dp4(const Dp4Model& M) {
    const Fq& F = *M.F;
    if (F.q() > 128) fail(Err::SearchSpaceTooLarge, "PGL_2 enumeration limited to q <= 128");
    Dp4Report rep;
    rep.roots = dp4_roots(M);
    rep.G = point_set_stabilizer(F, rep.roots);
    rep.order = 16 * rep.G.order();
    return rep;
}

}  // namespace dpz::dp4
