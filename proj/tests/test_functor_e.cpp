#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lgmf/cohomology.hpp"
#include "lgmf/functor_e.hpp"

using namespace lgmf;
namespace lt = lgmf::testing;

TEST(FunctorE, ObjectsAreCotangentAlgebras)
{
    auto X = e_object(lt::obj({"x", "y"}));
    EXPECT_EQ(X.algebra.signature()->size(), 4u);
    EXPECT_EQ(X.effective_form().size(), 2u);
}

TEST(FunctorE, OneMorphismLegs)
{
    auto S = e_one(make_one_morphism(lt::obj({"x"}), lt::obj({"y"}), {}, "x*y"));
    EXPECT_FALSE(S.left_leg.chain_map_failure().has_value());
    EXPECT_FALSE(S.right_leg.chain_map_failure().has_value());
    EXPECT_EQ(S.left_leg.image("p_x"), -S.apex.gen("y"));
    EXPECT_EQ(S.right_leg.image("p_y"), S.apex.gen("x"));
}

TEST(FunctorE, RAlgebraOfSquare)
{
    auto T = make_table({"a"});
    auto R = r_algebra(parse_polynomial("a^2", T), {"a"});
    EXPECT_EQ(R.d_of(alpha_name("a")), parse_graded("2*a", R.signature()));
    auto h = cohomology_hilbert(R, 5);
    EXPECT_EQ(h.total(Parity::Even), 1);
    EXPECT_EQ(h.total(Parity::Odd), 0);
}

TEST(FunctorE, ZigzagFactsThatHold)
{
    // End(I) ~ R and the H^0 comparison hold on the whole corpus.
    for (const auto& f : lt::zigzag_corpus()) {
        auto z = verify_zigzag(f, 6);
        EXPECT_TRUE(z.inclusion_chain_map) << f.potential;
        EXPECT_TRUE(z.end_vs_r) << f.potential;
        EXPECT_TRUE(z.h0_match) << f.potential;
    }
}

TEST(FunctorE, HomotopyActionWitnesses)
{
    auto e = lt::obj({});
    for (const auto& [name, M] : lt::koszul_corpus()) EXPECT_TRUE(e_two(M).witness.ok) << name;
    auto W = e_two(identity_2(make_one_morphism(e, e, {"a", "b"}, "a^2*b+b^3")));
    EXPECT_TRUE(W.witness.ok) << W.witness.detail;
    EXPECT_FALSE(W.witness.second_order.empty());
}

TEST(FunctorE, FunctorialityOnComposites)
{
    auto x = lt::obj({"x"}), y = lt::obj({"y"}), z = lt::obj({"z"});
    auto v = check_functoriality_1(make_one_morphism(x, y, {}, "x*y"), make_one_morphism(y, z, {}, "y*z"), 5);
    EXPECT_TRUE(v.ok) << v.detail;
    EXPECT_TRUE(e_identity_is_diagonal(x, 5));
    EXPECT_TRUE(e_identity_is_diagonal(lt::obj({}), 5));
}

TEST(FunctorE, UnitAndVerticalClauses)
{
    auto e = lt::obj({});
    EXPECT_TRUE(check_functoriality_2_unit(make_one_morphism(e, e, {"a"}, "a^2"), 5).ok);
    EXPECT_TRUE(check_functoriality_2_unit(make_one_morphism(e, e, {}, "0"), 5).ok);
    auto A = make_one_morphism(e, e, {"a"}, "a^2"), B = make_one_morphism(e, e, {"b"}, "b^2"),
         C = make_one_morphism(e, e, {"c"}, "c^2");
    auto v = check_functoriality_2_vertical(lt::koszul_two(A, B, "b-a", "b+a"), lt::koszul_two(B, C, "c-b", "c+b"), 4);
    EXPECT_TRUE(v.ok) << v.detail;
}
