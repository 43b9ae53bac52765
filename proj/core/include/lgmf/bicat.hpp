#pragma once

#include <string>
#include <vector>

#include "lgmf/graded.hpp"
#include "lgmf/hilbert.hpp"
#include "lgmf/mf.hpp"

namespace lgmf {

struct MFObject {
    std::vector<std::string> vars;
    std::vector<int> weights;  // empty means all 1

    int weight(size_t i) const { return weights.empty() ? 1 : weights.at(i); }
};

/// (a, V): x -> y with V in K[x y a].
struct MFOneMorphism {
    MFObject source;
    MFObject target;
    std::vector<std::string> extras;
    Polynomial potential;
};

/// A representative factorization of V' - V over K[x y a a'].
struct MFTwoMorphism {
    MFOneMorphism source;
    MFOneMorphism target;
    MatrixFactorization rep;
};

/// Union by name; a name listed twice must carry the same weight.
VarTablePtr merge_tables(const std::vector<VarTablePtr>& tables);

/// Builds the table x, y, a (weights 1 unless given) and parses V on it.
MFOneMorphism make_one_morphism(const MFObject& source, const MFObject& target, const std::vector<std::string>& extras,
                                const std::string& potential, const std::vector<int>& extra_weights = {});

/// Renames variables of a 1-morphism (objects, extras and potential).
MFOneMorphism rename_one(const MFOneMorphism& f, const std::map<std::string, std::string>& rename);

/// (a y b, V + W). g's source variables are matched to f's target by
/// position; g's remaining names are freshened against f.
MFOneMorphism h_compose_1(const MFOneMorphism& f, const MFOneMorphism& g, NameSupply* names = nullptr);

/// Monoidal product (x x', y y') with extras (a a') and V + V'; names of g
/// clashing with f are freshened.
MFOneMorphism tensor_1(const MFOneMorphism& f, const MFOneMorphism& g, NameSupply* names = nullptr);

/// (a, sum a_i (x_t_i - x_i)) : x -> x_t with extras a_<x>.
MFOneMorphism identity_1(const MFObject& x);

/// I_{(a,V)} : (a, V) => (a', V).
MFTwoMorphism identity_2(const MFOneMorphism& f);

/// N o M = M (x)_{K[x y b]} N. N's source extras are matched to M's target
/// extras by position. The renamed copy of N's representative can be returned.
MFTwoMorphism v_compose_2(const MFTwoMorphism& M, const MFTwoMorphism& N, NameSupply* names = nullptr,
                          MatrixFactorization* renamed_second = nullptr);

/// Tensor over the shared middle object's ring.
MFTwoMorphism h_compose_2(const MFTwoMorphism& M, const MFTwoMorphism& N, NameSupply* names = nullptr);

/// True when the 1-morphisms agree after matching extras by position.
bool same_one_morphism(const MFOneMorphism& f, const MFOneMorphism& g);

struct UnitLawReport {
    bool ok = false;
    std::string side;             // "left" (M then I) or "right" (I then M)
    HilbertFunction composite;    // End of the composite over the full ring
    HilbertFunction expected;     // End(M) times Lambda of the integrated extras
    HilbertFunction plain;        // End(M)
    std::string detail;
};

/// Compares End-cohomology of M composed with a unit against End(M). The
/// composite lives over a ring that still contains the integrated middle
/// extras c; over that ring End(M o I) ~ End(M) (x) Lambda(eps_c), eps_c odd
/// of weight s - w(c), and that is what is compared.
UnitLawReport check_unit_law(const MFTwoMorphism& M, bool unit_after, int bound);

}  // namespace lgmf
