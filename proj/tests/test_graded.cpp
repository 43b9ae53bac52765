#include <gtest/gtest.h>

#include "lgmf/cohomology.hpp"
#include "lgmf/groebner.hpp"
#include "lgmf/resolve.hpp"
#include "support.hpp"

using namespace lgmf;
namespace lt = lgmf::testing;

namespace {

// K[u, v; t1, t2] with d t1 = u, d t2 = v.
SemifreeCDGA koszul_uv()
{
    return SemifreeCDGA::polynomial({"u", "v"})
        .adjoin({{"t1", Parity::Odd, 1}, {"t2", Parity::Odd, 1}}, std::vector<std::string>{"u", "v"});
}

GradedElement random_element(const SemifreeCDGA& A, lt::Rng& rng, int terms)
{
    const auto& sig = A.signature();
    std::uniform_int_distribution<size_t> gen(0, sig->size() - 1);
    std::uniform_int_distribution<int> len(0, 3);
    GradedElement e(sig);
    for (int k = 0; k < terms; ++k) {
        GradedElement m(sig, lt::small_rational(rng));
        for (int j = len(rng); j > 0; --j) m = m * GradedElement::generator(sig, gen(rng));
        e += m;
    }
    return e;
}

}  // namespace

TEST(Graded, OddGeneratorsAnticommute)
{
    auto A = koszul_uv();
    auto t1 = A.gen("t1"), t2 = A.gen("t2");
    EXPECT_EQ(t1 * t2, -(t2 * t1));
    EXPECT_TRUE((t1 * t1).is_zero());
    EXPECT_EQ(A.gen("u") * t1, t1 * A.gen("u"));
}

TEST(Graded, KoszulSignInDifferential)
{
    auto A = koszul_uv();
    auto d = A.differential(parse_graded("t1*t2", A.signature()));
    EXPECT_EQ(d, parse_graded("u*t2 - v*t1", A.signature()));
}

TEST(Graded, DifferentialSquaresToZeroAndIsADerivation)
{
    lt::Rng rng(31);
    auto A = koszul_uv().adjoin({{"s", Parity::Even, 2}}, std::vector<std::string>{"u*t2 - v*t1"});
    ASSERT_FALSE(A.check().has_value());
    for (int k = 0; k < 40; ++k) {
        auto x = random_element(A, rng, 3), y = random_element(A, rng, 3);
        EXPECT_TRUE(A.differential(A.differential(x)).is_zero());
        // split x by parity to apply the sign
        for (const auto& [m, c] : x.terms()) {
            auto xm = GradedElement::monomial(A.signature(), m, c);
            int sign = parity_of(m) == Parity::Odd ? -1 : 1;
            EXPECT_EQ(A.differential(xm * y), A.differential(xm) * y + Rational(sign) * (xm * A.differential(y)));
        }
    }
}

TEST(Graded, TensorRenamesClashes)
{
    auto A = SemifreeCDGA::polynomial({"x"});
    NameSupply names;
    auto T = tensor_cdga(A, A, &names);
    EXPECT_EQ(T.algebra.signature()->size(), 2u);
    ASSERT_EQ(T.right_renames.count("x"), 1u);
    EXPECT_NE(T.right_renames.at("x"), "x");
}

TEST(Graded, CheckRejectsBadDifferentials)
{
    auto A = SemifreeCDGA::polynomial({"x"});
    auto bad = A.adjoin({{"t", Parity::Odd, 1}, {"s", Parity::Even, 1}}, std::vector<std::string>{"x", "t*x + 1"});
    EXPECT_TRUE(bad.check().has_value());
}

TEST(Cohomology, FreeAlgebraMatchesGeneratingFunction)
{
    std::vector<GradedVar> vars{{"x", Parity::Even, 1}, {"y", Parity::Even, 2}, {"e", Parity::Odd, 1},
                                {"f", Parity::Odd, 3}};
    SemifreeCDGA A(make_signature(vars), {});
    EXPECT_TRUE(lt::same_window(cohomology_hilbert(A, 8), lt::free_algebra_hilbert(vars, 8), 8));
}

TEST(Cohomology, KoszulComplexOfRegularSequenceIsTheQuotient)
{
    // d t_i = f_i with f a regular sequence: H = K[x,y,z]/(f), all even.
    auto A = SemifreeCDGA::polynomial({"x", "y", "z"})
                 .adjoin({{"t1", Parity::Odd, 2}, {"t2", Parity::Odd, 2}},
                         std::vector<std::string>{"x^2 - y*z", "y^2 - x*z"});
    auto h = cohomology_hilbert(A, 7);
    auto T = make_table({"x", "y", "z"});
    auto q = quotient_hilbert(groebner_basis({parse_polynomial("x^2 - y*z", T), parse_polynomial("y^2 - x*z", T)}), 7);
    for (int w = 0; w <= 7; ++w) {
        EXPECT_EQ(h.at(w, Parity::Even), q.at(w, Parity::Even)) << w;
        EXPECT_EQ(h.at(w, Parity::Odd), 0) << w;
    }
}

TEST(Cohomology, NonRegularSequenceHasOddClasses)
{
    // d t1 = x, d t2 = x: t1 - t2 survives.
    auto A = SemifreeCDGA::polynomial({"x"}).adjoin({{"t1", Parity::Odd, 1}, {"t2", Parity::Odd, 1}},
                                                    std::vector<std::string>{"x", "x"});
    auto h = cohomology_hilbert(A, 4);
    EXPECT_EQ(h.at(1, Parity::Odd), 1);
    EXPECT_EQ(h.at(0, Parity::Even), 1);
}

TEST(Cohomology, FilteredPathForInhomogeneousDifferential)
{
    auto R = SemifreeCDGA::polynomial({"a"}).adjoin({{"alpha", Parity::Odd, 1}}, std::vector<std::string>{"a + a^2"});
    // K[a]/(a + a^2) is two points; the weight filtration puts 1 in weight 0
    // and a in weight 1.
    auto h = cohomology_hilbert(R, 8);
    EXPECT_GE(h.trusted_upto, 2);
    EXPECT_EQ(h.at(0, Parity::Even), 1);
    EXPECT_EQ(h.at(1, Parity::Even), 1);
    EXPECT_EQ(h.total(Parity::Even), 2);
    EXPECT_EQ(h.total(Parity::Odd), 0);
}

TEST(Cohomology, QuasiIsoCheck)
{
    auto R = SemifreeCDGA::polynomial({"a"}).adjoin({{"alpha", Parity::Odd, 1}}, std::vector<std::string>{"2*a"});
    EXPECT_TRUE(quasi_iso_check(CDGAMap::by_strings(R, SemifreeCDGA::ground(), {{"a", "0"}, {"alpha", "0"}}), 5).iso);
    auto P = SemifreeCDGA::polynomial({"a"});
    EXPECT_FALSE(quasi_iso_check(CDGAMap::by_strings(P, SemifreeCDGA::ground(), {{"a", "0"}}), 5).iso);
}

TEST(Resolve, ReductionPreservesCohomology)
{
    auto A = SemifreeCDGA::polynomial({"x", "y"}).adjoin({{"t", Parity::Odd, 1}, {"s", Parity::Odd, 2}},
                                                         std::vector<std::string>{"y", "x*y"});
    auto r = reduce_linear_pairs(A);
    EXPECT_LT(r.model.signature()->size(), A.signature()->size());
    EXPECT_TRUE(lt::same_window(cohomology_hilbert(r.model, 6), cohomology_hilbert(A, 6), 6));
    EXPECT_FALSE(r.projection.chain_map_failure().has_value());
}

TEST(Resolve, TateResolutionIsAQuasiIso)
{
    auto B = SemifreeCDGA::polynomial({"y", "p_y"});
    auto C = SemifreeCDGA::polynomial({"y"});
    auto r = koszul_tate_resolve(CDGAMap::by_strings(B, C, {{"p_y", "0"}}), 4);
    EXPECT_TRUE(quasi_iso_check(r.to_target, 4).iso);
    // K[x] -> K[x]/(x^2) needs generators in every weight
    auto D = SemifreeCDGA::polynomial({"x"});
    auto Q = D.adjoin({{"e", Parity::Odd, 2}}, std::vector<std::string>{"x^2"});
    auto r2 = koszul_tate_resolve(CDGAMap(D, Q, {Q.gen("x")}), 6);
    EXPECT_TRUE(quasi_iso_check(r2.to_target, 6).iso);
}

TEST(Resolve, DerivedTensorOfPointOverLine)
{
    auto Ka = SemifreeCDGA::polynomial({"a"});
    auto z = CDGAMap::by_strings(Ka, SemifreeCDGA::ground(), {{"a", "0"}});
    auto g = derived_tensor(z, z, 5);
    TensorOptions o;
    o.method = TensorMethod::Tate;
    auto t = derived_tensor(z, z, 5, o);
    auto expect = lt::free_algebra_hilbert({{"xi", Parity::Odd, 1}}, 5);
    EXPECT_TRUE(lt::same_window(g.hilbert, expect, 5));
    EXPECT_TRUE(lt::same_window(t.hilbert, expect, 5));
}

TEST(Resolve, GraphAndTateAgreeOnTheDiagonal)
{
    auto B = SemifreeCDGA::polynomial({"x", "x'"});
    auto C = SemifreeCDGA::polynomial({"x"});
    auto mult = CDGAMap::by_strings(B, C, {{"x'", "x"}});
    TensorOptions o;
    o.method = TensorMethod::Tate;
    auto g = derived_tensor(mult, mult, 5);
    auto t = derived_tensor(mult, mult, 5, o);
    o.side = TensorSide::Right;
    auto r = derived_tensor(mult, mult, 5, o);
    EXPECT_TRUE(lt::same_window(g.hilbert, t.hilbert, 5));
    EXPECT_TRUE(lt::same_window(g.hilbert, r.hilbert, 5));
    EXPECT_FALSE(g.from_left.chain_map_failure().has_value());
}
