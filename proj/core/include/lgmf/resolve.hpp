#pragma once

#include <functional>
#include <set>
#include <string>

#include "lgmf/cohomology.hpp"
#include "lgmf/graded.hpp"

namespace lgmf {

struct Reduction {
    SemifreeCDGA model;
    CDGAMap projection;  // original -> model
    std::vector<std::pair<std::string, std::string>> cancelled;  // (g, v) with dg = c v + ...
};

/// Repeatedly removes pairs (g, v) with dg = c v + f, c a nonzero constant,
/// f free of g and v, g absent from every other differential, neither
/// protected. v is replaced by -f/c. The projection is a quasi-isomorphism.
/// `allow` can veto individual pairs.
Reduction reduce_linear_pairs(const SemifreeCDGA& A, const std::set<std::string>& protect = {},
                              const std::function<bool(const std::string&, const std::string&)>& allow = {});

struct TateResolution {
    SemifreeCDGA model;          // semifree over B, contains B's generators
    CDGAMap to_target;           // model -> C, quasi-isomorphism up to bound
    std::vector<std::string> adjoined;
    int trusted_upto = 0;
};

/// Tate's process for f: B -> C. Starts from B (x) C, kills the kernel of
/// H(model) -> H(C) weight by weight with generators named t{w}_{k}, then
/// cancels linear pairs away from B's generators. Needs weight-preserving
/// data with step-zero or vanishing differentials.
TateResolution koszul_tate_resolve(const CDGAMap& f, int bound, NameSupply* names = nullptr);

enum class TensorSide { Auto, Left, Right };
enum class TensorMethod { Auto, Graph, Tate };

struct TensorOptions {
    TensorSide side = TensorSide::Auto;
    TensorMethod method = TensorMethod::Auto;
    bool reduce = true;
    bool compute_hilbert = true;
    /// Weight step of the differentials, used to weight the adjoined generators.
    int step = 0;
};

struct DerivedTensor {
    SemifreeCDGA model;
    /// Maps from the two factors (or from the resolution of the resolved side)
    /// into the model.
    CDGAMap from_left;
    CDGAMap from_right;
    TensorSide resolved = TensorSide::Left;
    TensorMethod method = TensorMethod::Graph;
    HilbertFunction hilbert;
    std::map<std::string, std::string> right_renames;
};

/// R (x)^L_B S for f: B -> R and g: B -> S. When B has zero differential the
/// graph model R (x) S [xi_b], d xi_b = f(b) - g(b), is used; otherwise the
/// chosen side is resolved by Tate's process and tensored underived.
DerivedTensor derived_tensor(const CDGAMap& left, const CDGAMap& right, int bound, const TensorOptions& opt = {},
                             NameSupply* names = nullptr);

}  // namespace lgmf
