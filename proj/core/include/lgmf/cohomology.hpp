#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgmf/graded.hpp"
#include "lgmf/linalg.hpp"

namespace lgmf {

struct BasisElem {
    GMonomial mono;
    size_t gen = 0;
    auto operator<=>(const BasisElem&) const = default;
};

/// Monomial basis of a semifree module, sliced by (weight, parity).
class SlabSpace {
public:
    explicit SlabSpace(const SemifreeModule& M);

    const SemifreeModule& module() const noexcept { return M_; }
    /// Lowest weight carrying any basis element.
    int min_weight() const noexcept { return min_weight_; }

    const std::vector<BasisElem>& basis(int w, Parity p);
    std::optional<size_t> index(int w, Parity p, const BasisElem& b);

    int weight(const BasisElem& b) const;
    Parity parity(const BasisElem& b) const;

    SemifreeModule::Vector vector(const BasisElem& b) const;
    SemifreeModule::Vector vector(int w, Parity p, const SparseVec& coords);

    /// Coordinates of v in slab (w, p); throws if v has terms elsewhere.
    SparseVec coords(const SemifreeModule::Vector& v, int w, Parity p);

    /// Terms of v grouped by (weight, parity).
    std::map<std::pair<int, Parity>, SparseVec> split(const SemifreeModule::Vector& v);

    /// Images d(b) for every b in slab (w, p), as coordinates of slab (w+s, 1-p).
    std::vector<SparseVec> d_rows(int w, Parity p, int s);

private:
    void grow_odd(int cap);
    const std::vector<Exponents>& even_monos(int w);

    SemifreeModule M_;
    int min_weight_ = 0;
    int odd_cap_ = -1000000;
    int min_odd_ = 0;
    int max_odd_ = 0;
    std::map<int, std::vector<std::uint64_t>> odd_by_weight_;
    std::map<int, std::vector<Exponents>> even_cache_;
    std::map<std::pair<int, Parity>, std::vector<BasisElem>> basis_;
    std::map<std::pair<int, Parity>, std::map<BasisElem, size_t>> index_;
};

/// dim H per (weight, parity) up to bound. Homogeneous differentials are
/// computed slab by slab; otherwise the weight filtration is used and only
/// weights <= bound - max(|s_min|, |s_max|) are marked trusted.
HilbertFunction cohomology_hilbert(const SemifreeModule& M, int bound);
HilbertFunction cohomology_hilbert(const SemifreeCDGA& A, int bound);

/// Closed vectors in slab (w, p) forming a basis of H there.
bool is_cohomology_basis(const SemifreeModule& M, int w, Parity p, const std::vector<SemifreeModule::Vector>& cands);

/// Representatives of a basis of H_{w,p} for a homogeneous differential.
std::vector<SemifreeModule::Vector> cohomology_basis(SlabSpace& S, int w, Parity p, int step);

struct QuasiIsoVerdict {
    bool iso = false;
    bool trusted = true;
    int weight = 0;
    Parity parity = Parity::Even;
    std::string detail;
};

/// Induced map on cohomology is bijective in every (weight, parity) slot up
/// to bound. Needs a weight-preserving chain map between homogeneous cdgas.
QuasiIsoVerdict quasi_iso_check(const CDGAMap& f, int bound);

}  // namespace lgmf
