#include <gtest/gtest.h>

#include "lgmf/cohomology.hpp"
#include "lgmf/crw.hpp"
#include "lgmf/tft.hpp"
#include "support.hpp"

using namespace lgmf;
namespace lt = lgmf::testing;

TEST(Hochschild, HkrAndTensorPathsAgree)
{
    for (int t = 0; t <= 2; ++t) {
        auto A = polynomial_algebra(t);
        auto h = hochschild(A, 5, HochschildPath::HKR);
        auto g = hochschild(A, 5, HochschildPath::Tensor);
        EXPECT_EQ(h.provenance, "hkr");
        EXPECT_EQ(g.provenance, "tensor");
        EXPECT_TRUE(lt::same_window(h.hilbert, g.hilbert, 5));
        EXPECT_FALSE(h.fold.chain_map_failure().has_value());
        EXPECT_FALSE(g.fold.chain_map_failure().has_value());
    }
}

TEST(Hochschild, HkrModelOfPolynomialRing)
{
    auto H = hochschild(polynomial_algebra(2), 5);
    EXPECT_EQ(H.model.signature()->size(), 4u);
    EXPECT_TRUE(lt::same_window(H.hilbert,
                                lt::free_algebra_hilbert({{"x1", Parity::Even, 1}, {"x2", Parity::Even, 1},
                                                          {"s1", Parity::Odd, 1}, {"s2", Parity::Odd, 1}},
                                                         5),
                                5));
    EXPECT_THROW(hochschild(SemifreeCDGA::polynomial({"x"}).adjoin({{"e", Parity::Odd, 2}},
                                                                   std::vector<std::string>{"x^2"}),
                            4, HochschildPath::HKR),
                 std::invalid_argument);
}

TEST(TFT, CircleTwoPaths)
{
    for (const auto& A : {SemifreeCDGA::ground(), polynomial_algebra(1), cotangent_stack({"x"}).algebra})
        EXPECT_TRUE(z_circle(A, 5).agree);
}

TEST(TFT, SphereModelOfPolynomialRing)
{
    // A (x)_{A[s]} A for odd s: the odd partners become even divided powers.
    for (int t = 0; t <= 2; ++t) {
        auto s = z_sphere(polynomial_algebra(t), 5);
        EXPECT_EQ(s.even_generators, 2 * t);
        EXPECT_EQ(s.odd_generators, 0);
        EXPECT_TRUE(s.zero_differential);
        EXPECT_EQ(s.positive_even, 2 * t);
    }
}

TEST(TFT, GenusValuesOverTheGroundField)
{
    for (int g = 0; g <= 2; ++g) {
        auto v = z_genus(SemifreeCDGA::ground(), g, 5);
        EXPECT_EQ(v.hilbert.at(0, Parity::Even), 1);
        EXPECT_EQ(v.hilbert.total(Parity::Even) + v.hilbert.total(Parity::Odd), 1);
    }
}

TEST(TFT, GenusZeroIsTheSphere)
{
    auto A = polynomial_algebra(1);
    EXPECT_TRUE(lt::same_window(z_genus(A, 0, 5).hilbert, z_sphere(A, 5).value.hilbert, 5));
}

TEST(TFT, GenusAssemblyOrder)
{
    auto A = polynomial_algebra(1);
    for (int g : {1, 2}) {
        auto l = z_genus(A, g, 3, Assembly::LeftToRight);
        auto r = z_genus(A, g, 3, Assembly::RightToLeft);
        EXPECT_TRUE(lt::same_window(l.hilbert, r.hilbert, 3)) << g;
    }
}

TEST(TFT, ThreeDualVerdicts)
{
    for (int t = 0; t <= 3; ++t) {
        auto v = three_dual_check(polynomial_algebra(t), 4);
        EXPECT_EQ(v.extendable, t == 0);
        EXPECT_EQ(v.verdict, t == 0 ? "extendable" : "not extendable");
    }
}
