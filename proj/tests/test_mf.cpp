#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lgmf/cohomology.hpp"
#include "lgmf/mf.hpp"

using namespace lgmf;
namespace lt = lgmf::testing;

TEST(MF, KoszulCorpusSquaresToPotential)
{
    for (const auto& [name, M] : lt::koszul_corpus()) {
        EXPECT_TRUE(verify_mf(M.rep).ok) << name;
        auto D = M.rep.full();
        EXPECT_EQ(D * D, PolyMatrix::identity(M.rep.table, M.rep.rank()) * M.rep.potential) << name;
    }
}

TEST(MF, UnitFactorizationsSquareToDifference)
{
    for (const auto& f : lt::zigzag_corpus()) {
        auto I = identity_2(f).rep;
        EXPECT_TRUE(verify_mf(I).ok) << f.potential;
        EXPECT_EQ(I.rank(), size_t{1} << f.extras.size());
        EXPECT_EQ(I.r0, I.r1);
    }
}

TEST(MF, VerifyLocatesTheBadEntry)
{
    auto T = make_table({"x", "y"});
    auto bad = rank_one_mf(parse_polynomial("x", T), parse_polynomial("x", T));
    bad.potential = parse_polynomial("x*y", T);
    auto v = verify_mf(bad);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.row, 1u);
    EXPECT_EQ(v.col, 1u);
}

TEST(MF, TensorAddsPotentials)
{
    auto T = make_table({"x", "y", "z", "w"});
    auto P = [&](const char* s) { return parse_polynomial(s, T); };
    auto K = koszul_mf({{P("x"), P("y")}, {P("z"), P("w")}});
    EXPECT_TRUE(verify_mf(K).ok);
    EXPECT_EQ(K.potential, P("x*y + z*w"));
    EXPECT_EQ(K.r0, 2u);
    EXPECT_EQ(K.r1, 2u);
}

TEST(MF, DeltaOfLambdaIsMultiplicationByDerivative)
{
    for (const auto& f : lt::zigzag_corpus()) {
        auto I = identity_2(f).rep;
        for (const auto& t : I.table->names()) {
            auto l = lambda(I, t);
            EXPECT_EQ(hom_delta(I, I, l, Parity::Odd),
                      PolyMatrix::identity(I.table, I.rank()) * partial_derivative(I.potential, t))
                << f.potential << " d/d" << t;
        }
    }
}

TEST(MF, ConjugationWitnessForUnitriangularChanges)
{
    lt::Rng rng(41);
    for (const auto& [name, M] : lt::koszul_corpus()) {
        for (int k = 0; k < 3; ++k) {
            auto P = lt::random_unitriangular(M.rep, rng, 2);
            auto d1 = M.rep.full();
            auto d2 = P * d1 * lt::unitriangular_inverse(P);
            ASSERT_EQ(P * d1, d2 * P);
            for (const auto& t : M.rep.table->names()) EXPECT_TRUE(conjugation_witness(P, d1, d2, t).ok) << name;
        }
    }
}

TEST(MF, EndOfUnitForSquareIsTheJacobianRing)
{
    // End(I_{a^2}) ~ K[a]/(2a) = K.
    auto e = lt::obj({});
    auto E = end_complex(identity_2(make_one_morphism(e, e, {"a"}, "a^2")).rep);
    auto h = cohomology_hilbert(E.module, 6);
    EXPECT_EQ(h.total(Parity::Even), 1);
    EXPECT_EQ(h.total(Parity::Odd), 0);
}

TEST(MF, EndAsTensorIsAChainIsomorphism)
{
    auto T = make_table({"a", "b"});
    auto I = unit_mf(parse_polynomial("a^2+b^2", T), {"a", "b"});
    auto r = end_as_tensor(I);
    EXPECT_TRUE(r.chain_map);
    EXPECT_TRUE(r.evaluation_chain_map);
}

TEST(MF, GradingInference)
{
    auto T = make_table({"a"});
    auto I = unit_mf(parse_polynomial("a^3", T), {"a"});
    auto g = infer_grading(I);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(g->homogeneous);
    EXPECT_EQ(g->scale, 2);
    EXPECT_EQ(g->step, 3);
}
