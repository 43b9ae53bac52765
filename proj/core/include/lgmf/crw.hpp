#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lgmf/graded.hpp"
#include "lgmf/hilbert.hpp"
#include "lgmf/resolve.hpp"

namespace lgmf {

/// Formal 2-form sum c_ij dv_i ^ dv_j stored with i < j (generator order); the
/// orientation sign multiplies the whole form.
struct AffineSymplecticStack {
    SemifreeCDGA algebra;
    std::map<std::pair<std::string, std::string>, Rational> form;
    int sign = 1;

    /// sign * form with the sign folded into the coefficients.
    std::map<std::pair<std::string, std::string>, Rational> effective_form() const;
    std::string form_str() const;
};

AffineSymplecticStack point_stack();

/// Antisymmetrizes the listed terms; dv ^ dv is rejected.
AffineSymplecticStack make_stack(SemifreeCDGA A, const std::vector<std::tuple<std::string, std::string, Rational>>& form,
                                 int sign = 1);

/// K[x, p_x] with sum dx ^ dp_x, all weights 1 unless given.
AffineSymplecticStack cotangent_stack(const std::vector<std::string>& x, const std::vector<int>& x_weights = {},
                                      const std::vector<int>& p_weights = {});

AffineSymplecticStack dual_stack(const AffineSymplecticStack& X);

/// Copy of an algebra with generators renamed.
SemifreeCDGA rename_cdga(const SemifreeCDGA& A, const std::map<std::string, std::string>& rename);
AffineSymplecticStack rename_stack(const AffineSymplecticStack& X, const std::map<std::string, std::string>& rename);

struct StackProduct {
    AffineSymplecticStack stack;
    std::map<std::string, std::string> right_renames;
};

/// X x Y; forms add. Clashing names of Y are freshened.
StackProduct product_stack(const AffineSymplecticStack& X, const AffineSymplecticStack& Y, NameSupply* names = nullptr);

/// left <- apex -> right, read on algebras as two maps into the apex.
struct LagSpan {
    AffineSymplecticStack left;
    AffineSymplecticStack right;
    SemifreeCDGA apex;
    CDGAMap left_leg;
    CDGAMap right_leg;
    std::string resolved = "none";
    int trusted_upto = 0;
};

/// X <- X -> X with identity legs.
LagSpan identity_span(const AffineSymplecticStack& X);

/// The diagonal of X read as * -> X x X^dual (or backwards).
LagSpan diagonal_span(const AffineSymplecticStack& X, bool from_point = true);

LagSpan transpose_span(const LagSpan& S);

/// Monoidal product of spans; clashing names on the second factor are
/// freshened.
LagSpan product_span(const LagSpan& S, const LagSpan& T, NameSupply* names = nullptr);

/// Weight step shared by the nonzero differentials (0 if none or if they
/// disagree).
int common_step(const std::vector<const SemifreeCDGA*>& algebras);

/// Apex R (x)^L_B R'. Uses the graph model when B has zero differential,
/// otherwise resolves the right apex over B (x) C by Tate's process.
LagSpan compose_span(const LagSpan& S1, const LagSpan& S2, int bound, NameSupply* names = nullptr,
                     bool reduce = true);

/// Apex (x) over the product of the boundary algebras. The tensor's from_left
/// and from_right start at the two apexes.
DerivedTensor intersect_spans(const LagSpan& S, const LagSpan& T, int bound, bool reduce = true,
                              bool compute_hilbert = true);

/// Module over an algebra receiving a map from the intersection base.
struct SpanTwoMorphism {
    LagSpan source;
    LagSpan target;
    DerivedTensor base;  // unreduced graph model of source (x)_{AB} target
    SemifreeCDGA algebra;
    CDGAMap action;      // base.model -> algebra
    SemifreeModule module;
};

/// Free module over the intersection base with the given generators and
/// differential matrix entries (strings over the base, row-major).
SpanTwoMorphism free_two_morphism(const LagSpan& source, const LagSpan& target, const std::vector<ModuleGen>& gens,
                                  const std::vector<std::string>& D, int bound);

/// S as a module over S (x)_{AB} S through multiplication.
SpanTwoMorphism unit_two_morphism(const LagSpan& S, int bound);

/// X (x)_S Y for X: R => S, Y: S => T. One of the two must be free over its
/// base.
SpanTwoMorphism v_compose_2mor(const SpanTwoMorphism& X, const SpanTwoMorphism& Y, int bound);

/// X (x)_B X' for X over spans A -> B and X' over spans B -> C.
SpanTwoMorphism h_compose_2mor(const SpanTwoMorphism& X, const SpanTwoMorphism& Y, int bound);

struct SerreResult {
    LagSpan span;
    HilbertFunction hilbert;
    HilbertFunction expected;
    bool ok = false;
    std::string detail;
};

/// (id x e) o (b x id) o (id x e^dagger) as three composed spans
/// X <- XxX -> XxXxX <- XxXxX -> XxXxX <- XxX -> X.
SerreResult serre_composite(const AffineSymplecticStack& X, int bound);

/// Legs agree generator by generator after matching the two boundary copies
/// by position; used to recognize identity-like spans.
bool legs_coincide(const LagSpan& S);

}  // namespace lgmf
