#pragma once
// Example data shared by the unit suites and the acceptance binary.

#include <string>
#include <utility>
#include <vector>

#include "lgmf/bicat.hpp"
#include "lgmf/mf.hpp"
#include "support.hpp"

namespace lgmf::testing {

inline MFObject obj(std::vector<std::string> v) { return MFObject{std::move(v), {}}; }

inline MFTwoMorphism koszul_two(const MFOneMorphism& s, const MFOneMorphism& t, const std::string& p,
                                const std::string& q)
{
    MFTwoMorphism M{s, t, {}};
    auto T = merge_tables({s.potential.table(), t.potential.table()});
    M.rep = koszul_mf({{parse_polynomial(p, T), parse_polynomial(q, T)}});
    return M;
}

/// (b-a, b+a): (a,a^2) => (b,b^2); (a, -a^2): (a,a^3) => (0,0); (x, b-a):
/// (a,xa) => (b,xb).
inline std::vector<std::pair<std::string, MFTwoMorphism>> koszul_corpus()
{
    auto e = obj({}), x = obj({"x"});
    return {{"(b-a,b+a)", koszul_two(make_one_morphism(e, e, {"a"}, "a^2"), make_one_morphism(e, e, {"b"}, "b^2"),
                                     "b-a", "b+a")},
            {"(a,-a^2)", koszul_two(make_one_morphism(e, e, {"a"}, "a^3"), make_one_morphism(e, e, {}, "0"), "a",
                                    "-a^2")},
            {"(x,b-a)", koszul_two(make_one_morphism(x, e, {"a"}, "x*a"), make_one_morphism(x, e, {"b"}, "x*b"), "x",
                                   "b-a")}};
}

/// a^2, a^3, xa, a^2+b^2 and the identity 1-morphism a(x_t - x).
inline std::vector<MFOneMorphism> zigzag_corpus()
{
    auto e = obj({}), x = obj({"x"});
    return {make_one_morphism(e, e, {"a"}, "a^2"), make_one_morphism(e, e, {"a"}, "a^3"),
            make_one_morphism(x, e, {"a"}, "x*a"), make_one_morphism(e, e, {"a", "b"}, "a^2+b^2"), identity_1(x)};
}

/// P = I + N with N strictly upper triangular inside each parity block.
inline PolyMatrix random_unitriangular(const MatrixFactorization& M, Rng& rng, int max_deg)
{
    size_t n = M.rank();
    auto P = PolyMatrix::identity(M.table, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (M.parity(i) == M.parity(j)) P(i, j) = random_poly(M.table, max_deg, 2, rng);
    return P;
}

/// Inverse of a unitriangular matrix by the finite geometric series.
inline PolyMatrix unitriangular_inverse(const PolyMatrix& P)
{
    size_t n = P.rows();
    auto I = PolyMatrix::identity(P.table(), n);
    auto N = P - I;
    auto out = I, term = I;
    for (size_t k = 1; k < n; ++k) {
        term = term * (-N);
        out = out + term;
    }
    return out;
}

}  // namespace lgmf::testing
