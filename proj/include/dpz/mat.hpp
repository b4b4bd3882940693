// mat.hpp
// Tiny fixed-capacity square matrices (n = 2 or 3) over an interned field.

#ifndef DPZ_MAT_HPP
#define DPZ_MAT_HPP

#include <array>

#include "dpz/gf.hpp"

namespace dpz {

struct SqMat {
    const Fq* F = nullptr;
    int n = 0;
    std::array<Fq::Elem, 9> a{};  // row-major, entries beyond n*n unused (zero)

    Fq::Elem at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    Fq::Elem& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }

    static SqMat identity(const Fq& F, int n) {
        SqMat m{&F, n, {}};
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static SqMat from_rows(const Fq& F, int n, std::initializer_list<int64_t> rows) {
        SqMat m{&F, n, {}};
        int i = 0;
        for (int64_t v : rows) m.a[i++] = F.from_int(v);
        return m;
    }
};

inline bool operator==(const SqMat& x, const SqMat& y) {
    return x.F == y.F && x.n == y.n && x.a == y.a;
}

SqMat mat_mul(const SqMat& x, const SqMat& y);
Fq::Elem mat_det(const SqMat& x);
SqMat mat_scale(const SqMat& x, Fq::Elem s);
// Inverse; SingularMatrix if det = 0.
SqMat mat_inv(const SqMat& x);
// Apply to a column vector.
std::array<Fq::Elem, 3> mat_apply(const SqMat& x, const std::array<Fq::Elem, 3>& v);
// Entrywise image under a subfield embedding.
SqMat mat_embed(const SqMat& x, const Embedding& e);

}  // namespace dpz

#endif
