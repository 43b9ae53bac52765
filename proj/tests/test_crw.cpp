#include <gtest/gtest.h>

#include "lgmf/cohomology.hpp"
#include "lgmf/crw.hpp"
#include "support.hpp"

using namespace lgmf;
namespace lt = lgmf::testing;

namespace {

std::vector<AffineSymplecticStack> stacks()
{
    return {point_stack(), make_stack(SemifreeCDGA::polynomial({"x"}), {}), cotangent_stack({"x"})};
}

}  // namespace

TEST(Stacks, FormsAndDuals)
{
    auto X = cotangent_stack({"x"});
    EXPECT_EQ(X.form_str(), "dx^dp_x");
    auto D = dual_stack(X);
    EXPECT_EQ(D.sign, -X.sign);
    EXPECT_THROW(make_stack(SemifreeCDGA::polynomial({"x"}), {{"x", "x", Rational(1)}}), std::invalid_argument);
}

TEST(Stacks, ProductFreshensNames)
{
    auto X = cotangent_stack({"x"});
    auto P = product_stack(X, X);
    EXPECT_EQ(P.stack.algebra.signature()->size(), 4u);
    EXPECT_EQ(P.right_renames.size(), 2u);
    EXPECT_EQ(P.stack.effective_form().size(), 2u);
}

TEST(Spans, IdentityIsAUnitForComposition)
{
    for (const auto& X : stacks()) {
        auto id = identity_span(X);
        auto c = compose_span(id, id, 5);
        EXPECT_TRUE(lt::same_window(cohomology_hilbert(c.apex, 5), cohomology_hilbert(X.algebra, 5), 5));
        EXPECT_TRUE(legs_coincide(c));
    }
}

TEST(Spans, SerreCompositeIsTheIdentity)
{
    for (const auto& X : stacks()) {
        auto r = serre_composite(X, 5);
        EXPECT_TRUE(r.ok) << X.algebra.str() << " " << r.detail;
        EXPECT_TRUE(legs_coincide(r.span));
    }
}

TEST(Spans, CircleOfTheLineIsFreeOnAnOddClass)
{
    auto X = make_stack(SemifreeCDGA::polynomial({"x"}), {});
    auto c = compose_span(diagonal_span(X, true), diagonal_span(X, false), 6);
    auto expect = lt::free_algebra_hilbert({{"x", Parity::Even, 1}, {"e", Parity::Odd, 1}}, 6);
    EXPECT_TRUE(lt::same_window(cohomology_hilbert(c.apex, 6), expect, 6));
}

TEST(Spans, TransposeSwapsLegs)
{
    auto X = cotangent_stack({"x"});
    auto S = diagonal_span(X, true);
    auto T = transpose_span(S);
    EXPECT_EQ(T.left.algebra.signature()->size(), S.right.algebra.signature()->size());
    EXPECT_FALSE(T.left_leg.chain_map_failure().has_value());
}

TEST(TwoMorphisms, UnitLawsAndChainMaps)
{
    auto S = identity_span(make_stack(SemifreeCDGA::polynomial({"x"}), {}));
    auto U = unit_two_morphism(S, 4);
    auto F = free_two_morphism(S, S, {{"e", Parity::Even, 0}}, {"0"}, 4);
    auto hF = cohomology_hilbert(F.module, 4);
    for (const auto& C : {v_compose_2mor(F, U, 4), v_compose_2mor(U, F, 4)}) {
        EXPECT_TRUE(lt::same_window(cohomology_hilbert(C.module, 4), hF, 4));
        EXPECT_FALSE(C.action.chain_map_failure().has_value());
        EXPECT_FALSE(C.module.check().has_value());
    }
    auto H = h_compose_2mor(F, F, 4);
    EXPECT_FALSE(H.action.chain_map_failure().has_value());
}
