#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lgmf {

enum class Parity { Even = 0, Odd = 1 };

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return (a == b) ? Parity::Even : Parity::Odd; }
inline int sign_of(Parity p) { return p == Parity::Even ? 1 : -1; }

/// Dimensions per (weight, parity) for weights min_weight .. min_weight+size-1.
/// Only entries with weight <= trusted_upto are meaningful. When the
/// variables had to be rescaled to make a grading integral, weight_scale
/// records the factor.
struct HilbertFunction {
    int min_weight = 0;
    std::vector<long> even;
    std::vector<long> odd;
    int trusted_upto = 0;
    int weight_scale = 1;

    static HilbertFunction zeros(int min_weight, int max_weight);

    int max_weight() const { return min_weight + static_cast<int>(even.size()) - 1; }
    long at(int w, Parity p) const;
    long& ref(int w, Parity p);

    /// Truncated to [lo, hi] and to the trusted window, padding with zeros.
    HilbertFunction window(int lo, int hi) const;

    long total(Parity p) const;

    bool operator==(const HilbertFunction& o) const;

    std::string str() const;
};

/// First (weight, parity) where two functions disagree inside both trusted
/// windows, if any.
struct HilbertMismatch {
    int weight;
    Parity parity;
    long left;
    long right;
};

std::optional<HilbertMismatch> compare_hilbert(const HilbertFunction& a, const HilbertFunction& b);

/// Product of two Hilbert functions (graded tensor product), truncated.
HilbertFunction tensor_hilbert(const HilbertFunction& a, const HilbertFunction& b);

}  // namespace lgmf
