#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lgmf/bicat.hpp"
#include "lgmf/cohomology.hpp"

using namespace lgmf;
namespace lt = lgmf::testing;

TEST(Bicat, HorizontalCompositionAddsPotentials)
{
    auto x = lt::obj({"x"}), y = lt::obj({"y"}), z = lt::obj({"z"});
    auto h = h_compose_1(make_one_morphism(x, y, {}, "x*y"), make_one_morphism(y, z, {}, "y*z"));
    EXPECT_EQ(h.potential.str(), "y*z + x*y");
    ASSERT_EQ(h.extras.size(), 1u);
    EXPECT_EQ(h.extras[0], "y");
}

TEST(Bicat, CompositionFreshensClashingExtras)
{
    auto e = lt::obj({});
    auto f = make_one_morphism(e, e, {"a"}, "a^2");
    auto h = h_compose_1(f, f);
    ASSERT_EQ(h.extras.size(), 2u);
    EXPECT_NE(h.extras[0], h.extras[1]);
    EXPECT_EQ(h.potential.size(), 2u);
}

TEST(Bicat, IdentityOneMorphism)
{
    auto id = identity_1(lt::obj({"x"}));
    EXPECT_EQ(id.potential.str(), "x_t*a_x - x*a_x");
    EXPECT_EQ(id.target.vars, std::vector<std::string>{"x_t"});
}

TEST(Bicat, MonoidalProduct)
{
    auto e = lt::obj({});
    auto t = tensor_1(make_one_morphism(e, e, {"a"}, "a^2"), make_one_morphism(e, e, {"a"}, "a^3"));
    EXPECT_EQ(t.extras.size(), 2u);
    EXPECT_EQ(t.potential.size(), 2u);
}

TEST(Bicat, VerticalCompositeIsAFactorization)
{
    auto e = lt::obj({});
    auto A = make_one_morphism(e, e, {"a"}, "a^2"), B = make_one_morphism(e, e, {"b"}, "b^2"),
         C = make_one_morphism(e, e, {"c"}, "c^2");
    auto M = lt::koszul_two(A, B, "b-a", "b+a");
    auto N = lt::koszul_two(B, C, "c-b", "c+b");
    auto NM = v_compose_2(M, N);
    EXPECT_TRUE(verify_mf(NM.rep).ok);
    EXPECT_TRUE(same_one_morphism(NM.source, A));
    EXPECT_TRUE(same_one_morphism(NM.target, C));
}

TEST(Bicat, UnitLawsOnKoszulCorpusAtLowWeight)
{
    for (const auto& [name, M] : lt::koszul_corpus())
        for (bool after : {true, false}) {
            auto r = check_unit_law(M, after, 4);
            EXPECT_TRUE(r.ok) << name << " " << r.side << " " << r.detail;
        }
}
