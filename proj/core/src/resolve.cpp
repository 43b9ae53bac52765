#include "lgmf/resolve.hpp"

#include <bit>
#include <numeric>

namespace lgmf {

namespace {

bool mentions(const GradedElement& e, const Signature& sig, size_t var)
{
    size_t slot = sig.slot(var);
    bool odd = sig.var(var).parity == Parity::Odd;
    for (const auto& [m, c] : e.terms()) {
        if (odd ? (m.odd >> slot) & 1u : m.even[slot] > 0) return true;
    }
    return false;
}

/// Index of the generator if m is a single generator to the first power.
std::optional<size_t> linear_generator(const GMonomial& m, const Signature& sig)
{
    int deg = std::accumulate(m.even.begin(), m.even.end(), 0) + std::popcount(m.odd);
    if (deg != 1) return std::nullopt;
    if (m.odd) return sig.odd_var(static_cast<size_t>(std::countr_zero(m.odd)));
    for (size_t k = 0; k < m.even.size(); ++k)
        if (m.even[k]) return sig.even_var(k);
    return std::nullopt;
}

SemifreeCDGA with_zero_d(const SignaturePtr& sig) { return SemifreeCDGA(sig, {}); }

/// Applies generator images given on a new signature and rebuilds the target
/// differential as the image of the old one restricted to surviving generators.
CDGAMap rebuild(const SemifreeCDGA& A, const SignaturePtr& sig, const std::vector<GradedElement>& images,
                const std::vector<size_t>& kept)
{
    CDGAMap tmp(A, with_zero_d(sig), images);
    std::vector<GradedElement> d;
    for (size_t i : kept) d.push_back(tmp.apply(A.d_of(i)));
    return CDGAMap(A, SemifreeCDGA(sig, std::move(d)), images);
}

}  // namespace

Reduction reduce_linear_pairs(const SemifreeCDGA& A, const std::set<std::string>& protect,
                              const std::function<bool(const std::string&, const std::string&)>& allow)
{
    Reduction r;
    r.model = A;
    r.projection = CDGAMap::identity(A);
    for (;;) {
        const auto& cur = r.model;
        const auto& sig = *cur.signature();
        size_t n = sig.size();
        std::optional<std::tuple<size_t, size_t, Rational>> best;
        for (size_t g = 0; g < n; ++g) {
            const auto& gname = sig.var(g).name;
            if (protect.count(gname)) continue;
            const auto& dg = cur.d_of(g);
            if (dg.is_zero()) continue;
            bool elsewhere = false;
            for (size_t h = 0; h < n && !elsewhere; ++h)
                if (h != g && mentions(cur.d_of(h), sig, g)) elsewhere = true;
            if (elsewhere || mentions(dg, sig, g)) continue;
            for (const auto& [m, c] : dg.terms()) {
                auto v = linear_generator(m, sig);
                if (!v || *v == g || protect.count(sig.var(*v).name)) continue;
                GradedElement f = dg - GradedElement::monomial(cur.signature(), m, c);
                if (mentions(f, sig, *v)) continue;
                if (allow && !allow(gname, sig.var(*v).name)) continue;
                if (!best || *v > std::get<1>(*best)) best = std::make_tuple(g, *v, c);
            }
        }
        if (!best) break;
        auto [g, v, c] = *best;
        std::vector<GradedVar> vars;
        std::vector<size_t> kept;
        for (size_t i = 0; i < n; ++i)
            if (i != g && i != v) {
                vars.push_back(sig.var(i));
                kept.push_back(i);
            }
        auto nsig = make_signature(std::move(vars));
        const auto& dg = cur.d_of(g);
        GMonomial vm = GradedElement::generator(cur.signature(), v).terms().begin()->first;
        GradedElement f = dg - GradedElement::monomial(cur.signature(), vm, c);
        std::vector<GradedElement> images(n, GradedElement(nsig));
        for (size_t i = 0; i < n; ++i)
            if (i != g && i != v) images[i] = GradedElement::generator(nsig, sig.var(i).name);
        images[v] = f.rebase(nsig) * (Rational(-1) / c);
        CDGAMap step = rebuild(cur, nsig, images, kept);
        r.cancelled.emplace_back(sig.var(g).name, sig.var(v).name);
        r.projection = r.projection.then(step);
        r.model = step.target();
    }
    return r;
}

namespace {

int effective_step(const SemifreeCDGA& A)
{
    StepInfo s = A.step();
    if (s.zero) return 0;
    if (!s.homogeneous) throw std::invalid_argument("Tate process needs a weight-homogeneous differential");
    return s.s_min;
}

}  // namespace

TateResolution koszul_tate_resolve(const CDGAMap& f, int bound, NameSupply* names)
{
    const auto& B = f.source();
    const auto& C = f.target();
    if (effective_step(B) != 0 || effective_step(C) != 0)
        throw std::invalid_argument("Tate process implemented for step-zero differentials");
    if (auto s = f.weight_shift(); !s || *s != 0) throw std::invalid_argument("Tate process needs a weight-preserving map");
    if (auto bad = f.chain_map_failure()) throw std::invalid_argument("not a chain map at generator '" + *bad + "'");

    NameSupply local;
    NameSupply& supply = names ? *names : local;
    supply.reserve(*B.signature());
    auto T = tensor_cdga(B, C, &supply);
    SemifreeCDGA M = T.algebra;

    // phi: M -> C, b -> f(b), c -> c.
    std::vector<GradedElement> phi;
    for (size_t i = 0; i < B.signature()->size(); ++i) phi.push_back(f.images()[i]);
    for (size_t i = 0; i < C.signature()->size(); ++i) phi.push_back(GradedElement::generator(C.signature(), i));

    TateResolution out;
    SlabSpace SC(SemifreeModule::regular(C));
    int lo = std::min(0, SlabSpace(SemifreeModule::regular(M)).min_weight());
    if (lo < 0) throw std::invalid_argument("Tate process needs non-negative weights");
    for (int w = 0; w <= bound; ++w) {
        int counter = 0;
        for (;;) {
            SlabSpace SM(SemifreeModule::regular(M));
            CDGAMap phimap(M, C, phi);
            std::vector<GradedVar> vars;
            std::vector<GradedElement> dz;
            std::vector<GradedElement> ys;
            for (Parity p : {Parity::Even, Parity::Odd}) {
                auto reps = cohomology_basis(SM, w, p, 0);
                if (reps.empty()) continue;
                const auto& pre = SC.basis(w, flip(p));
                auto bd = SC.d_rows(w, flip(p), 0);
                SparseEchelon e(true);
                for (auto& row : bd) e.add(std::move(row));
                size_t nb = pre.size();
                for (const auto& z : reps) {
                    SemifreeModule::Vector img{phimap.apply(z[0])};
                    if (e.add(SC.coords(img, w, p))) continue;
                    GradedElement zc(M.signature());
                    GradedElement y(C.signature());
                    bool has_rep = false;
                    for (const auto& [id, c] : e.last_relation()) {
                        if (id >= nb) {
                            zc += reps[id - nb][0] * c;
                            has_rep = true;
                        } else {
                            y -= GradedElement::monomial(C.signature(), pre[id].mono, c);
                        }
                    }
                    if (!has_rep) continue;
                    std::string name = supply.fresh("t" + std::to_string(w) + "_" + std::to_string(++counter));
                    vars.push_back({name, flip(p), w});
                    dz.push_back(zc);
                    ys.push_back(y);
                }
            }
            if (vars.empty()) break;
            M = M.adjoin(vars, dz);
            for (auto& y : ys) phi.push_back(y);
            for (const auto& v : vars) out.adjoined.push_back(v.name);
        }
    }

    std::set<std::string> protect;
    for (const auto& v : B.signature()->vars()) protect.insert(v.name);
    CDGAMap phimap(M, C, phi);
    auto allow = [&](const std::string& g, const std::string&) { return phimap.image(g).is_zero(); };
    auto red = reduce_linear_pairs(M, protect, allow);
    std::vector<GradedElement> to;
    for (const auto& v : red.model.signature()->vars()) to.push_back(phimap.image(v.name));
    out.model = red.model;
    out.to_target = CDGAMap(red.model, C, std::move(to));
    out.trusted_upto = bound;
    std::vector<std::string> kept;
    for (const auto& n : out.adjoined)
        if (red.model.signature()->contains(n)) kept.push_back(n);
    out.adjoined = kept;
    return out;
}

namespace {

bool zero_differential(const SemifreeCDGA& A) { return A.step().zero; }

DerivedTensor graph_tensor(const CDGAMap& left, const CDGAMap& right, const TensorOptions& opt, NameSupply& supply)
{
    const auto& B = left.source();
    const auto& R = left.target();
    const auto& S = right.target();
    supply.reserve(*R.signature());
    auto T = tensor_cdga(R, S, &supply);
    std::vector<GradedVar> xi;
    std::vector<GradedElement> dxi;
    for (size_t i = 0; i < B.signature()->size(); ++i) {
        const auto& b = B.signature()->var(i);
        xi.push_back({supply.fresh("xi_" + b.name), flip(b.parity), b.weight - opt.step});
        GradedElement l = left.images()[i].rebase(T.algebra.signature());
        GradedElement r = right.images()[i].rebase(T.algebra.signature(), T.right_renames);
        dxi.push_back(l - r);
    }
    DerivedTensor out;
    out.model = T.algebra.adjoin(xi, dxi);
    out.right_renames = T.right_renames;
    auto msig = out.model.signature();
    std::vector<GradedElement> li, ri;
    for (const auto& v : R.signature()->vars()) li.push_back(GradedElement::generator(msig, v.name));
    for (const auto& v : S.signature()->vars()) {
        auto it = T.right_renames.find(v.name);
        ri.push_back(GradedElement::generator(msig, it == T.right_renames.end() ? v.name : it->second));
    }
    out.from_left = CDGAMap(R, out.model, std::move(li));
    out.from_right = CDGAMap(S, out.model, std::move(ri));
    out.method = TensorMethod::Graph;
    out.resolved = TensorSide::Left;
    return out;
}

DerivedTensor tate_tensor(const CDGAMap& left, const CDGAMap& right, int bound, bool resolve_left, NameSupply& supply)
{
    const CDGAMap& res_side = resolve_left ? left : right;
    const CDGAMap& other = resolve_left ? right : left;
    const auto& B = res_side.source();
    const auto& O = other.target();
    supply.reserve(*O.signature());
    auto tr = koszul_tate_resolve(res_side, bound, &supply);
    // Model: O with the non-B generators of the resolution; b -> other(b).
    std::vector<GradedVar> vars = O.signature()->vars();
    std::vector<std::string> extra;
    std::map<std::string, std::string> rename;
    for (const auto& v : tr.model.signature()->vars()) {
        if (B.signature()->contains(v.name)) continue;
        GradedVar nv = v;
        if (O.signature()->contains(v.name)) {
            nv.name = supply.fresh(v.name);
            rename[v.name] = nv.name;
        }
        extra.push_back(v.name);
        vars.push_back(nv);
    }
    auto sig = make_signature(vars);
    // M -> model on generators.
    std::vector<GradedElement> images;
    auto zero_target = SemifreeCDGA(sig, {});
    for (const auto& v : tr.model.signature()->vars()) {
        if (auto bi = B.signature()->find(v.name)) images.push_back(other.images()[*bi].rebase(sig));
        else images.push_back(GradedElement::generator(sig, rename.count(v.name) ? rename[v.name] : v.name));
    }
    CDGAMap tmp(tr.model, zero_target, images);
    std::vector<GradedElement> d;
    for (const auto& v : O.signature()->vars()) d.push_back(O.d_of(v.name).rebase(sig));
    for (const auto& n : extra) d.push_back(tmp.apply(tr.model.d_of(n)));
    DerivedTensor out;
    out.model = SemifreeCDGA(sig, std::move(d));
    CDGAMap from_res(tr.model, out.model, images);
    std::vector<GradedElement> oi;
    for (const auto& v : O.signature()->vars()) oi.push_back(GradedElement::generator(sig, v.name));
    CDGAMap from_other(O, out.model, std::move(oi));
    out.from_left = resolve_left ? from_res : from_other;
    out.from_right = resolve_left ? from_other : from_res;
    out.method = TensorMethod::Tate;
    out.resolved = resolve_left ? TensorSide::Left : TensorSide::Right;
    return out;
}

}  // namespace

DerivedTensor derived_tensor(const CDGAMap& left, const CDGAMap& right, int bound, const TensorOptions& opt,
                             NameSupply* names)
{
    if (!same_signature(left.source().signature(), right.source().signature()))
        throw std::invalid_argument("derived tensor: the two maps start from different algebras");
    NameSupply local;
    NameSupply& supply = names ? *names : local;
    TensorMethod method = opt.method;
    if (method == TensorMethod::Auto) method = zero_differential(left.source()) ? TensorMethod::Graph : TensorMethod::Tate;
    if (method == TensorMethod::Graph && !zero_differential(left.source()))
        throw std::invalid_argument("graph model needs a base with zero differential");
    DerivedTensor out = method == TensorMethod::Graph
                            ? graph_tensor(left, right, opt, supply)
                            : tate_tensor(left, right, bound, opt.side != TensorSide::Right, supply);
    if (opt.reduce) {
        auto red = reduce_linear_pairs(out.model);
        out.from_left = out.from_left.then(red.projection);
        out.from_right = out.from_right.then(red.projection);
        out.model = red.model;
    }
    if (opt.compute_hilbert) out.hilbert = cohomology_hilbert(out.model, bound);
    return out;
}

}  // namespace lgmf
