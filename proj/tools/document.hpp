#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lgmf/bicat.hpp"
#include "lgmf/crw.hpp"
#include "lgmf/hilbert.hpp"
#include "lgmf/mf.hpp"

namespace lgmf::doc {

using Json = nlohmann::ordered_json;

struct Located {
    std::string where;  // JSON pointer, or empty for syntax errors
    size_t line = 0;    // 1-based, 0 when unknown
    size_t column = 0;
    std::string message;

    std::string str() const;
};

class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(std::vector<Located> errors);
    const std::vector<Located>& errors() const noexcept { return errors_; }

private:
    std::vector<Located> errors_;
};

/// Named rings, polynomials, cdgas, factorizations, morphisms, stacks and
/// spans. Sections are read in that order; a name may only refer to entries
/// of earlier sections.
struct WorkDocument {
    std::map<std::string, VarTablePtr> rings;
    std::map<std::string, Polynomial> polynomials;
    std::map<std::string, SemifreeCDGA> cdgas;
    std::map<std::string, MatrixFactorization> mfs;
    std::map<std::string, MFOneMorphism> morphisms;
    std::map<std::string, MFTwoMorphism> two_morphisms;
    std::map<std::string, AffineSymplecticStack> stacks;
    std::map<std::string, LagSpan> spans;
};

WorkDocument parse_document_text(std::string_view text);
WorkDocument parse_document(const std::string& path);

/// Line and column (1-based) of a byte offset.
std::pair<size_t, size_t> line_column(std::string_view text, size_t offset);

// Serialization; rationals are "num/den" strings.
Json rational_json(const Rational& q);
Json hilbert_json(const HilbertFunction& h);
Json cdga_json(const SemifreeCDGA& A);
SemifreeCDGA cdga_from_json(const Json& j, const std::string& where = "");
Json mf_json(const MatrixFactorization& M, const MonomialOrder& order = {});
MatrixFactorization mf_from_json(const Json& j, const std::string& where = "");

/// Text table of a Hilbert function, one row per weight.
std::string hilbert_table(const HilbertFunction& h, const std::string& title = "");

}  // namespace lgmf::doc
