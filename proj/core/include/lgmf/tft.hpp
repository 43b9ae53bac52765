#pragma once

#include <optional>
#include <string>

#include "lgmf/crw.hpp"
#include "lgmf/graded.hpp"
#include "lgmf/hilbert.hpp"

namespace lgmf {

enum class HochschildPath { Auto, HKR, Tensor };

/// A (x)_{A (x) A} A with its unit A -> HC(A) and fold HC(A) -> A.
struct HochschildModel {
    SemifreeCDGA model;
    std::string provenance;  // "hkr" or "tensor"
    CDGAMap unit;
    CDGAMap fold;
    HilbertFunction hilbert;
};

/// HKR adjoins s_<v> of opposite parity and equal weight for every generator
/// (zero differential only); the tensor path uses derived_tensor.
HochschildModel hochschild(const SemifreeCDGA& A, int bound, HochschildPath path = HochschildPath::Auto,
                           NameSupply* names = nullptr);

struct TFTValue {
    std::string kind;  // "span" or "module"
    std::optional<LagSpan> span;
    SemifreeCDGA model;
    HilbertFunction hilbert;
};

struct CircleResult {
    TFTValue value;
    HilbertFunction via_spans;
    HilbertFunction via_hochschild;
    bool agree = false;
    std::string detail;
};

/// ev o coev computed by span composition and by hochschild(A).
CircleResult z_circle(const SemifreeCDGA& A, int bound);

struct SphereResult {
    TFTValue value;
    int even_generators = 0;
    int odd_generators = 0;
    bool zero_differential = false;
    int positive_even = 0;  // even generators of positive weight
};

/// A (x)_{HC(A)} A through the fold map on both sides.
SphereResult z_sphere(const SemifreeCDGA& A, int bound);

enum class Assembly { LeftToRight, RightToLeft };

/// A (x)_H (A (x)_{A^e} H^2 (x)_{A^e} A)^{(x)_H g} (x)_H A.
TFTValue z_genus(const SemifreeCDGA& A, int g, int bound, Assembly order = Assembly::LeftToRight);

struct ThreeDualVerdict {
    bool extendable = false;
    SphereResult sphere;
    std::string verdict;
};

/// Finite-dimensional iff no even generator of positive weight survives in
/// the sphere model.
ThreeDualVerdict three_dual_check(const SemifreeCDGA& A, int bound);

/// K[x_1..x_t] with weights 1.
SemifreeCDGA polynomial_algebra(int t);

}  // namespace lgmf
