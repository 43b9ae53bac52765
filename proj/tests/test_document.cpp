#include <gtest/gtest.h>

#include "document.hpp"

using namespace lgmf;
using lgmf::doc::DocumentError;
using lgmf::doc::parse_document_text;

namespace {

std::string first_error(std::string_view text)
{
    try {
        parse_document_text(text);
    } catch (const DocumentError& e) {
        return e.errors().front().str();
    }
    return "";
}

}  // namespace

TEST(Document, MinimalDocumentLoads)
{
    auto d = parse_document_text(R"({"rings": {"R": {"vars": ["a"]}},
                                     "polynomials": {"V": {"ring": "R", "expr": "a^2"}}})");
    ASSERT_EQ(d.polynomials.count("V"), 1u);
    EXPECT_EQ(d.polynomials.at("V").str(), "a^2");
}

TEST(Document, UndefinedRingIsNamed)
{
    auto msg = first_error(R"({"polynomials": {"V": {"ring": "S", "expr": "a^2"}}})");
    EXPECT_NE(msg.find("undefined ring 'S'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("/polynomials/V/ring"), std::string::npos) << msg;
}

TEST(Document, FailingSquareCitesTheEntry)
{
    auto msg = first_error(R"({"mfs": {"M": {"vars": ["a"], "potential": "a^2",
                                              "d0": [["a"]], "d1": [["a+1"]]}}})");
    EXPECT_NE(msg.find("/mfs/M"), std::string::npos) << msg;
    EXPECT_NE(msg.find("(1,1)"), std::string::npos) << msg;
}

TEST(Document, SyntaxErrorsHaveLineAndColumn)
{
    try {
        parse_document_text("{\n  \"rings\": {\"R\": {\"vars\": [\"a\"],}}\n}\n");
        FAIL();
    } catch (const DocumentError& e) {
        EXPECT_EQ(e.errors().front().line, 2u);
        EXPECT_GT(e.errors().front().column, 1u);
    }
}

TEST(Document, ExpressionErrorsAreLocated)
{
    auto msg = first_error(R"({"rings": {"R": {"vars": ["a"]}},
                               "polynomials": {"V": {"ring": "R", "expr": "a^^2"}}})");
    EXPECT_NE(msg.find("/polynomials/V/expr"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Document, CdgaRoundTrip)
{
    auto A = SemifreeCDGA::polynomial({"x", "y"}).adjoin({{"t", Parity::Odd, 2}}, std::vector<std::string>{"x*y"});
    auto j = doc::cdga_json(A);
    auto B = doc::cdga_from_json(j);
    EXPECT_EQ(B.str(), A.str());
    EXPECT_EQ(j["d"]["t"], "x*y");
}

TEST(Document, MFRoundTripAndFractions)
{
    auto T = make_table({"a", "b"});
    auto M = koszul_mf({{parse_polynomial("b-a", T), parse_polynomial("1/2*b+1/2*a", T)}});
    auto j = doc::mf_json(M);
    auto N = doc::mf_from_json(j);
    EXPECT_EQ(N.potential, M.potential.rebase(N.table));
    EXPECT_EQ(doc::rational_json(Rational(3)), "3/1");
}

TEST(Document, SpansAndTwoMorphisms)
{
    auto d = parse_document_text(R"({
      "mfs": {"K": {"vars": ["a", "b"], "potential": "b^2-a^2", "d0": [["b-a"]], "d1": [["b+a"]]}},
      "morphisms": {
        "A": {"source": [], "target": [], "extras": ["a"], "potential": "a^2"},
        "B": {"source": [], "target": [], "extras": ["b"], "potential": "b^2"}},
      "two_morphisms": {"M": {"source": "A", "target": "B", "mf": "K"}},
      "cdgas": {"L": {"even": [{"name": "x", "weight": 1}]}},
      "stacks": {"X": {"cdga": "L"}},
      "spans": {"S": {"left": "X", "right": "X", "apex": "L", "left_leg": {"x": "x"}, "right_leg": {"x": "x"}}}
    })");
    EXPECT_EQ(d.two_morphisms.count("M"), 1u);
    EXPECT_EQ(d.spans.count("S"), 1u);
}
