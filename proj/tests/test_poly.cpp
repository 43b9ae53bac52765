#include <gtest/gtest.h>

#include "lgmf/expr.hpp"
#include "lgmf/poly.hpp"
#include "support.hpp"

using namespace lgmf;
using lgmf::testing::random_poly;
using lgmf::testing::Rng;

TEST(Rational, FractionStrings)
{
    EXPECT_EQ(to_string(Rational(3, 6)), "1/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_EQ(to_fraction_string(Rational(4)), "4/1");
    EXPECT_EQ(to_fraction_string(Rational(-2, 6)), "-1/3");
    EXPECT_EQ(parse_rational("-3/9"), Rational(-1, 3));
}

TEST(Parse, GrammarAndPrinting)
{
    auto T = make_table({"x", "y", "z"});
    auto p = parse_polynomial("(x+y)^2 - 2*x*y + 1/2", T);
    EXPECT_EQ(p, parse_polynomial("x^2 + y^2 + 1/2", T));
    // later variables rank higher under grevlex
    EXPECT_EQ(parse_polynomial("x+y+z", T).str(), "z + y + x");
    EXPECT_EQ(parse_polynomial("x^2*y + x*y^2", T).str(), "x*y^2 + x^2*y");
    EXPECT_EQ(parse_polynomial("x^2 + y", T).str(MonomialOrder::lex()).substr(0, 3), "y +");
}

TEST(Parse, PrimedIdentifiers)
{
    auto T = make_table({"a", "a'"});
    EXPECT_EQ(parse_polynomial("a'^2-a^2", T).size(), 2u);
}

TEST(Parse, ErrorsCarryColumns)
{
    auto T = make_table({"x"});
    try {
        parse_polynomial("x + * x", T);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_polynomial("2x", T), ParseError);
    EXPECT_THROW(parse_polynomial("w", T), UnknownVariable);
}

TEST(Poly, RingAxiomsOnRandomInputs)
{
    Rng rng(11);
    auto T = make_table({"x", "y", "z"});
    for (int k = 0; k < 40; ++k) {
        auto a = random_poly(T, 3, 4, rng), b = random_poly(T, 3, 4, rng), c = random_poly(T, 2, 3, rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(parse_polynomial(a.str(), T), a);
    }
}

TEST(Poly, LeibnizRule)
{
    Rng rng(12);
    auto T = make_table({"x", "y"});
    for (int k = 0; k < 30; ++k) {
        auto a = random_poly(T, 3, 3, rng), b = random_poly(T, 3, 3, rng);
        EXPECT_EQ(partial_derivative(a * b, "x"), partial_derivative(a, "x") * b + a * partial_derivative(b, "x"));
    }
}

TEST(Poly, DifferenceQuotientsTelescope)
{
    Rng rng(13);
    auto T = make_table({"x", "a", "b", "a'", "b'"});
    std::vector<std::string> a{"a", "b"}, ap{"a'", "b'"};
    auto Tsmall = make_table({"x", "a", "b"});
    for (int k = 0; k < 25; ++k) {
        auto V = random_poly(Tsmall, 4, 5, rng).rebase(T);
        Polynomial sum(T);
        for (size_t i = 0; i < a.size(); ++i) {
            auto diff = Polynomial::variable(T, ap[i]) - Polynomial::variable(T, a[i]);
            sum += difference_quotient(V, a, ap, i) * diff;
        }
        EXPECT_EQ(sum, prime_from(V, a, ap, 0) - V);
    }
}

TEST(Poly, DivideByDifferenceRejectsRemainders)
{
    auto T = make_table({"a", "a'"});
    auto n = parse_polynomial("a'^3 - a^3", T);
    EXPECT_EQ(divide_by_difference(n, 1, 0), parse_polynomial("a'^2 + a*a' + a^2", T));
    EXPECT_THROW(divide_by_difference(parse_polynomial("a'^2", T), 1, 0), std::logic_error);
}

TEST(Poly, WeightedDegrees)
{
    auto T = make_table({"x", "y"}, {2, 3});
    auto p = parse_polynomial("x^3 + y^2", T);
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_EQ(p.weighted_degree(), 6);
    EXPECT_FALSE(parse_polynomial("x + y", T).is_homogeneous());
}

TEST(Matrix, ProductAndTranspose)
{
    auto T = make_table({"x"});
    PolyMatrix A(T, 2, 2);
    A(0, 0) = parse_polynomial("x", T);
    A(0, 1) = parse_polynomial("1", T);
    A(1, 0) = parse_polynomial("0", T);
    A(1, 1) = parse_polynomial("x", T);
    auto B = A * A;
    EXPECT_EQ(B(0, 1), parse_polynomial("2*x", T));
    EXPECT_EQ((A * A).transpose(), A.transpose() * A.transpose());
}
