#include <gtest/gtest.h>

#include "lgmf/groebner.hpp"
#include "lgmf/linalg.hpp"
#include "support.hpp"

using namespace lgmf;
namespace lt = lgmf::testing;

namespace {

std::vector<std::vector<Rational>> random_dense(lt::Rng& rng, size_t r, size_t c)
{
    std::uniform_int_distribution<int> v(-2, 2), zero(0, 2);
    std::vector<std::vector<Rational>> m(r, std::vector<Rational>(c));
    for (auto& row : m)
        for (auto& x : row) x = zero(rng) ? Rational(0) : Rational(v(rng));
    return m;
}

SparseVec to_sparse(const std::vector<Rational>& row)
{
    SparseVec v;
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) v.emplace_back(i, row[i]);
    return v;
}

}  // namespace

TEST(Linalg, RankMatchesDenseElimination)
{
    lt::Rng rng(21);
    for (int k = 0; k < 50; ++k) {
        auto m = random_dense(rng, 6, 5);
        std::vector<SparseVec> rows;
        for (const auto& r : m) rows.push_back(to_sparse(r));
        EXPECT_EQ(sparse_rank(rows), lt::dense_rank(m));
    }
}

TEST(Linalg, LeftKernelAnnihilatesAndHasFullDimension)
{
    lt::Rng rng(22);
    for (int k = 0; k < 30; ++k) {
        auto m = random_dense(rng, 6, 4);
        std::vector<SparseVec> rows;
        for (const auto& r : m) rows.push_back(to_sparse(r));
        auto ker = left_kernel(rows);
        EXPECT_EQ(ker.size(), m.size() - lt::dense_rank(m));
        for (const auto& c : ker) {
            std::vector<Rational> sum(4);
            for (const auto& [i, x] : c)
                for (size_t j = 0; j < 4; ++j) sum[j] += x * m[i][j];
            for (const auto& s : sum) EXPECT_EQ(s, 0);
        }
    }
}

TEST(Linalg, ExpressRecoversCombination)
{
    SparseEchelon E(true);
    E.add({{0, 1}, {1, 2}});
    E.add({{1, 1}, {2, 1}});
    auto c = E.express({{0, 2}, {1, 3}, {2, -1}});
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, (SparseVec{{0, 2}, {1, -1}}));
    EXPECT_FALSE(E.in_span({{2, 1}}));
}

TEST(Groebner, ReducedBasisOfLinearIdeal)
{
    auto T = make_table({"x", "y", "z"});
    auto gb = groebner_basis({parse_polynomial("y-x", T), parse_polynomial("x+z", T)});
    ASSERT_EQ(gb.generators.size(), 2u);
    for (const auto& g : gb.generators) EXPECT_EQ(g.leading_term(gb.order).second, 1);
    EXPECT_TRUE(normal_form(parse_polynomial("y+z", T), gb).is_zero());
}

TEST(Groebner, UnitIdeal)
{
    auto T = make_table({"x"});
    EXPECT_TRUE(groebner_basis({parse_polynomial("x", T), parse_polynomial("x+1", T)}).is_unit_ideal());
}

TEST(Groebner, NormalFormIsStable)
{
    lt::Rng rng(23);
    auto T = make_table({"x", "y"});
    for (int k = 0; k < 15; ++k) {
        std::vector<Polynomial> gens{lt::random_poly(T, 3, 3, rng), lt::random_poly(T, 2, 3, rng)};
        auto gb = groebner_basis(gens);
        auto p = lt::random_poly(T, 4, 5, rng);
        auto nf = normal_form(p, gb);
        EXPECT_EQ(normal_form(nf, gb), nf);
        EXPECT_TRUE(ideal_contains(gb, p - nf));
        for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
    }
}

TEST(Groebner, MembershipAgreesWithLinearAlgebra)
{
    lt::Rng rng(24);
    auto T = make_table({"x", "y", "z"});
    for (int k = 0; k < 8; ++k) {
        std::vector<Polynomial> gens;
        for (int d : {2, 3}) gens.push_back(lt::random_poly(T, d, 3, rng, d));
        auto gb = groebner_basis(gens);
        for (int w = 0; w <= 5; ++w)
            for (const auto& m : lt::exps_of_weight(*T, w)) {
                auto p = Polynomial::monomial(T, m);
                EXPECT_EQ(ideal_contains(gb, p), lt::brute_member(gens, p)) << p;
            }
    }
}

TEST(Groebner, QuotientHilbertMatchesSliceRanks)
{
    lt::Rng rng(25);
    auto T = make_table({"x", "y", "z"});
    std::vector<Polynomial> gens{lt::random_poly(T, 2, 3, rng, 2), lt::random_poly(T, 2, 3, rng, 2)};
    auto h = quotient_hilbert(groebner_basis(gens), 6);
    for (int w = 0; w <= 6; ++w) {
        auto monos = lt::exps_of_weight(*T, w);
        long expect = static_cast<long>(monos.size() - lt::dense_rank(lt::ideal_slice(gens, w, monos)));
        EXPECT_EQ(h.at(w, Parity::Even), expect) << "weight " << w;
    }
}

TEST(Groebner, LexOrderEliminates)
{
    auto T = make_table({"x", "y"});
    auto gens = std::vector<Polynomial>{parse_polynomial("x-y^2", T), parse_polynomial("y^3-1", T)};
    auto out = eliminate(gens, {"x"});
    ASSERT_FALSE(out.empty());
    for (const auto& p : out) EXPECT_EQ(p.degree_in(0), 0);
}
