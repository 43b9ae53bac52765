#pragma once

#include <string>
#include <vector>

#include "lgmf/bicat.hpp"
#include "lgmf/crw.hpp"
#include "lgmf/mf.hpp"

namespace lgmf {

/// K[x, p_x] with sum dx ^ dp_x.
AffineSymplecticStack e_object(const MFObject& x);

/// Name of the odd partner of a: alpha_<a>.
std::string alpha_name(const std::string& a);

/// R_{(a,V)} = K[x y a; alpha] with d alpha_i = d_{a_i} V. Weights of the
/// even generators are multiplied by scale; alpha_i gets weight
/// w(d_{a_i} V) - step.
SemifreeCDGA r_algebra(const Polynomial& V, const std::vector<std::string>& a, int scale = 1, int step = 0);

/// Apex R_{(a,V)} with legs p_x -> -d_x V and p_y -> d_y V.
LagSpan e_one(const MFOneMorphism& f);

/// Odd partner of each ring variable of U: chi_ for source variables, ups_
/// for target variables, alpha_ and beta_ for source and target extras.
struct DerivedCritAlgebra {
    SemifreeCDGA algebra;
    std::vector<std::pair<std::string, std::string>> partners;  // (roman, greek)
};

/// A_{W-V} for a 2-morphism (a,V) => (b,W), d tau = d_t (W - V).
DerivedCritAlgebra build_A(const MFOneMorphism& source, const MFOneMorphism& target, int scale = 1, int step = 0);

struct HomotopyActionWitness {
    bool ok = true;
    /// Per greek generator: delta rho + rho delta == d_t U on every matrix unit.
    std::vector<std::pair<std::string, bool>> first_order;
    /// Per pair (s, t): rho_s rho_t + rho_t rho_s + [d, mu_st] == d_s d_t U.
    std::vector<std::pair<std::string, bool>> second_order;
    std::string detail;
};

struct ETwo {
    HomComplex end;
    DerivedCritAlgebra A;
    HomotopyActionWitness witness;
};

/// End(M) with t acting by multiplication and tau by lambda_t composition.
ETwo e_two(const MFTwoMorphism& M);

struct ZigzagVerdict {
    bool ok = false;
    bool inclusion_chain_map = false;
    std::vector<std::string> t_failures;  // generators where d t != t d
    HilbertFunction end_h;
    HilbertFunction end_beta_h;
    HilbertFunction r_h;
    HilbertFunction quotient_h;  // K[xya] / <d_a V>
    bool end_vs_r = false;
    bool end_beta_vs_end = false;
    bool end_beta_vs_r = false;
    bool h0_match = false;
    bool odd_vanishes = false;
    std::string detail;
};

/// R_{(a,V)} -t-> End(I)[beta] <-incl- End(I) with a -> (a + a')/2, alpha ->
/// beta, d beta = d_a V.
ZigzagVerdict verify_zigzag(const MFOneMorphism& f, int bound);

struct Functoriality1Verdict {
    bool ok = false;
    bool composite_match = false;
    bool h0_match = false;
    bool product_match = false;
    bool unit_match = false;
    HilbertFunction composite_h;
    HilbertFunction direct_h;
    HilbertFunction quotient_h;
    std::string detail;
};

/// e(g) o e(f) against e(g o f), e(f) x e(g) against e(f x g), and
/// e(id_x) against the identity span of e(x).
Functoriality1Verdict check_functoriality_1(const MFOneMorphism& f, const MFOneMorphism& g, int bound);

/// Unit clause only: e(id_x) reduces to a span with coinciding legs and the
/// apex cohomology of K[x, p_x].
bool e_identity_is_diagonal(const MFObject& x, int bound, std::string* detail = nullptr);

struct Functoriality2Verdict {
    bool ok = false;
    HilbertFunction lhs;
    HilbertFunction rhs;
    std::string detail;
};

/// e_two(I_{(a,V)}) against R_{(a,V)}.
Functoriality2Verdict check_functoriality_2_unit(const MFOneMorphism& f, int bound);

/// End(M) (x)_{K[xyb]} End(N) against End(M (x) N), both over the ring that
/// keeps the middle extras.
Functoriality2Verdict check_functoriality_2_vertical(const MFTwoMorphism& M, const MFTwoMorphism& N, int bound);

}  // namespace lgmf
