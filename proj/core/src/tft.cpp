#include "lgmf/tft.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "lgmf/cohomology.hpp"

namespace lgmf {

namespace {

int algebra_step(const SemifreeCDGA& A)
{
    auto s = A.step();
    return s.zero ? 0 : s.step();
}

// Model with a left and a right action of H.
struct HModule {
    SemifreeCDGA model;
    CDGAMap left;
    CDGAMap right;
};

HModule tensor_over(const HModule& M, const HModule& N, int bound, int step, NameSupply& names)
{
    TensorOptions opt;
    opt.step = step;
    opt.compute_hilbert = false;
    auto T = derived_tensor(M.right, N.left, bound, opt, &names);
    return {T.model, M.left.then(T.from_left), N.right.then(T.from_right)};
}

std::pair<int, int> census(const SemifreeCDGA& A, int* positive_even = nullptr)
{
    int e = 0, o = 0, pe = 0;
    for (const auto& v : A.signature()->vars()) {
        if (v.parity == Parity::Even) {
            ++e;
            if (v.weight > 0) ++pe;
        } else {
            ++o;
        }
    }
    if (positive_even) *positive_even = pe;
    return {e, o};
}

// A (x) A -> A, both factors to the same generators.
CDGAMap multiplication(const TensorResult& Ae, const SemifreeCDGA& A)
{
    std::vector<GradedElement> im;
    for (const auto& v : A.signature()->vars()) im.push_back(A.gen(v.name));
    for (const auto& v : A.signature()->vars()) im.push_back(A.gen(v.name));
    return CDGAMap(Ae.algebra, A, std::move(im));
}

}  // namespace

SemifreeCDGA polynomial_algebra(int t)
{
    std::vector<std::string> names;
    for (int i = 1; i <= t; ++i) names.push_back("x" + std::to_string(i));
    return SemifreeCDGA::polynomial(names);
}

HochschildModel hochschild(const SemifreeCDGA& A, int bound, HochschildPath path, NameSupply* names)
{
    NameSupply local;
    NameSupply& supply = names ? *names : local;
    supply.reserve(*A.signature());
    bool zero_d = A.step().zero;
    if (path == HochschildPath::Auto) path = zero_d ? HochschildPath::HKR : HochschildPath::Tensor;
    if (path == HochschildPath::HKR && !zero_d) throw std::invalid_argument("hochschild: HKR needs zero differential");

    HochschildModel H;
    if (path == HochschildPath::HKR) {
        std::vector<GradedVar> extra;
        for (const auto& v : A.signature()->vars())
            extra.push_back({supply.fresh("s_" + v.name), flip(v.parity), v.weight});
        H.model = A.adjoin(extra, std::vector<std::string>(extra.size(), "0"));
        H.provenance = "hkr";
        H.unit = CDGAMap::by_name(A, H.model, {});
        std::map<std::string, GradedElement> f;
        for (const auto& v : extra) f.emplace(v.name, A.zero());
        H.fold = CDGAMap::by_name(H.model, A, f);
    } else {
        auto Ae = tensor_cdga(A, A, &supply);
        auto m = multiplication(Ae, A);
        TensorOptions opt;
        opt.step = algebra_step(A);
        opt.compute_hilbert = false;
        auto T = derived_tensor(m, m, bound, opt, &supply);
        H.model = T.model;
        H.provenance = "tensor";
        H.unit = T.from_left;
        // Generators hit by the unit go back to themselves, the rest to zero.
        std::map<std::string, GradedElement> f;
        for (const auto& g : T.model.signature()->vars()) f.emplace(g.name, A.zero());
        for (const auto& v : A.signature()->vars()) {
            const auto& img = T.from_left.image(v.name);
            for (const auto& g : T.model.signature()->vars())
                if (img == T.model.gen(g.name)) f[g.name] = A.gen(v.name);
        }
        H.fold = CDGAMap::by_name(T.model, A, f);
        if (auto bad = H.fold.chain_map_failure())
            throw std::runtime_error("hochschild: fold is not a chain map at " + *bad);
    }
    H.hilbert = cohomology_hilbert(H.model, bound);
    return H;
}

CircleResult z_circle(const SemifreeCDGA& A, int bound)
{
    AffineSymplecticStack X{A, {}, 1};
    auto S = compose_span(diagonal_span(X, true), diagonal_span(X, false), bound);
    auto H = hochschild(A, bound);
    CircleResult r;
    r.via_spans = cohomology_hilbert(S.apex, bound);
    r.via_hochschild = H.hilbert;
    auto mm = compare_hilbert(r.via_spans, r.via_hochschild);
    r.agree = !mm;
    if (mm) {
        std::ostringstream os;
        os << "circle: spans and Hochschild differ at weight " << mm->weight
           << (mm->parity == Parity::Even ? " even " : " odd ") << mm->left << " vs " << mm->right;
        r.detail = os.str();
        throw std::runtime_error(r.detail);
    }
    r.value.kind = "span";
    r.value.span = S;
    r.value.model = S.apex;
    r.value.hilbert = r.via_spans;
    return r;
}

SphereResult z_sphere(const SemifreeCDGA& A, int bound)
{
    NameSupply names;
    auto H = hochschild(A, bound, HochschildPath::Auto, &names);
    TensorOptions opt;
    opt.step = algebra_step(A);
    auto T = derived_tensor(H.fold, H.fold, bound, opt, &names);
    SphereResult r;
    r.value.kind = "module";
    r.value.model = T.model;
    r.value.hilbert = T.hilbert;
    auto [e, o] = census(T.model, &r.positive_even);
    r.even_generators = e;
    r.odd_generators = o;
    r.zero_differential = T.model.step().zero;
    return r;
}

TFTValue z_genus(const SemifreeCDGA& A, int g, int bound, Assembly order)
{
    if (g < 0) throw std::invalid_argument("z_genus: negative genus");
    NameSupply names;
    names.reserve(*A.signature());
    int step = algebra_step(A);
    auto H = hochschild(A, bound, HochschildPath::Auto, &names);
    HModule cap{A, H.fold, H.fold};

    HModule piece;
    if (g > 0) {
        auto H2 = hochschild(H.model, bound, HochschildPath::Auto, &names);
        auto Ae = tensor_cdga(A, A, &names);
        auto m = multiplication(Ae, A);
        auto into_h2 = H.unit.then(H2.unit);
        std::vector<GradedElement> im;
        for (const auto& v : A.signature()->vars()) im.push_back(into_h2.image(v.name));
        for (const auto& v : A.signature()->vars()) im.push_back(into_h2.image(v.name));
        CDGAMap j(Ae.algebra, H2.model, std::move(im));

        TensorOptions opt;
        opt.step = step;
        opt.compute_hilbert = false;
        auto T1 = derived_tensor(m, j, bound, opt, &names);
        auto T2 = derived_tensor(j.then(T1.from_right), m, bound, opt, &names);
        auto act = H2.unit.then(T1.from_right).then(T2.from_left);
        piece = {T2.model, act, act};
    }

    HModule acc;
    if (order == Assembly::LeftToRight) {
        acc = cap;
        for (int i = 0; i < g; ++i) acc = tensor_over(acc, piece, bound, step, names);
        acc = tensor_over(acc, cap, bound, step, names);
    } else {
        acc = cap;
        for (int i = 0; i < g; ++i) acc = tensor_over(piece, acc, bound, step, names);
        acc = tensor_over(cap, acc, bound, step, names);
    }
    TFTValue v;
    v.kind = "module";
    v.model = acc.model;
    v.hilbert = cohomology_hilbert(acc.model, bound);
    return v;
}

ThreeDualVerdict three_dual_check(const SemifreeCDGA& A, int bound)
{
    ThreeDualVerdict v;
    v.sphere = z_sphere(A, bound);
    v.extendable = v.sphere.positive_even == 0;
    v.verdict = v.extendable ? "extendable" : "not extendable";
    return v;
}

}  // namespace lgmf
