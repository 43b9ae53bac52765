#include "lgmf/crw.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "lgmf/cohomology.hpp"

namespace lgmf {

std::map<std::pair<std::string, std::string>, Rational> AffineSymplecticStack::effective_form() const
{
    auto out = form;
    if (sign < 0)
        for (auto& [k, c] : out) c = -c;
    return out;
}

std::string AffineSymplecticStack::form_str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c0] : effective_form()) {
        Rational c = c0;
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (abs(c) != 1) os << to_string(Rational(abs(c))) << "*";
        os << "d" << k.first << "^d" << k.second;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AffineSymplecticStack point_stack() { return {SemifreeCDGA::ground(), {}, 1}; }

AffineSymplecticStack make_stack(SemifreeCDGA A, const std::vector<std::tuple<std::string, std::string, Rational>>& form,
                                 int sign)
{
    AffineSymplecticStack X;
    X.algebra = std::move(A);
    X.sign = sign < 0 ? -1 : 1;
    for (const auto& [u, v, c] : form) {
        if (u == v) throw std::invalid_argument("form term d" + u + "^d" + v + " is not antisymmetric");
        size_t iu = X.algebra.signature()->index_of(u), iv = X.algebra.signature()->index_of(v);
        if (iu < iv) X.form[{u, v}] += c;
        else X.form[{v, u}] -= c;
    }
    for (auto it = X.form.begin(); it != X.form.end();) it = it->second == 0 ? X.form.erase(it) : std::next(it);
    return X;
}

AffineSymplecticStack cotangent_stack(const std::vector<std::string>& x, const std::vector<int>& x_weights,
                                      const std::vector<int>& p_weights)
{
    std::vector<GradedVar> vars;
    for (size_t i = 0; i < x.size(); ++i) vars.push_back({x[i], Parity::Even, x_weights.empty() ? 1 : x_weights[i]});
    for (size_t i = 0; i < x.size(); ++i)
        vars.push_back({"p_" + x[i], Parity::Even, p_weights.empty() ? 1 : p_weights[i]});
    std::vector<std::tuple<std::string, std::string, Rational>> form;
    for (const auto& n : x) form.emplace_back(n, "p_" + n, Rational(1));
    return make_stack(SemifreeCDGA(make_signature(vars), {}), form);
}

AffineSymplecticStack dual_stack(const AffineSymplecticStack& X)
{
    AffineSymplecticStack D = X;
    D.sign = -X.sign;
    return D;
}

SemifreeCDGA rename_cdga(const SemifreeCDGA& A, const std::map<std::string, std::string>& rename)
{
    std::vector<GradedVar> vars = A.signature()->vars();
    for (auto& v : vars)
        if (auto it = rename.find(v.name); it != rename.end()) v.name = it->second;
    auto sig = make_signature(vars);
    std::vector<GradedElement> d;
    for (const auto& e : A.generator_differentials()) d.push_back(e.rebase(sig, rename));
    return SemifreeCDGA(sig, std::move(d));
}

AffineSymplecticStack rename_stack(const AffineSymplecticStack& X, const std::map<std::string, std::string>& rename)
{
    auto nm = [&](const std::string& n) {
        auto it = rename.find(n);
        return it == rename.end() ? n : it->second;
    };
    std::vector<std::tuple<std::string, std::string, Rational>> form;
    for (const auto& [k, c] : X.form) form.emplace_back(nm(k.first), nm(k.second), c);
    return make_stack(rename_cdga(X.algebra, rename), form, X.sign);
}

StackProduct product_stack(const AffineSymplecticStack& X, const AffineSymplecticStack& Y, NameSupply* names)
{
    auto T = tensor_cdga(X.algebra, Y.algebra, names);
    auto nm = [&](const std::string& n) {
        auto it = T.right_renames.find(n);
        return it == T.right_renames.end() ? n : it->second;
    };
    std::vector<std::tuple<std::string, std::string, Rational>> form;
    for (const auto& [k, c] : X.effective_form()) form.emplace_back(k.first, k.second, c);
    for (const auto& [k, c] : Y.effective_form()) form.emplace_back(nm(k.first), nm(k.second), c);
    return {make_stack(T.algebra, form), T.right_renames};
}

LagSpan identity_span(const AffineSymplecticStack& X)
{
    LagSpan S;
    S.left = X;
    S.right = X;
    S.apex = X.algebra;
    S.left_leg = CDGAMap::identity(X.algebra);
    S.right_leg = CDGAMap::identity(X.algebra);
    S.trusted_upto = std::numeric_limits<int>::max() / 4;
    return S;
}

LagSpan diagonal_span(const AffineSymplecticStack& X, bool from_point)
{
    auto P = product_stack(X, dual_stack(X));
    LagSpan S;
    S.apex = X.algebra;
    std::vector<GradedElement> images;
    for (const auto& v : X.algebra.signature()->vars()) images.push_back(X.algebra.gen(v.name));
    for (const auto& v : X.algebra.signature()->vars()) images.push_back(X.algebra.gen(v.name));
    CDGAMap mult(P.stack.algebra, X.algebra, images);
    auto pt = point_stack();
    CDGAMap unit(pt.algebra, X.algebra, {});
    S.left = from_point ? pt : P.stack;
    S.right = from_point ? P.stack : pt;
    S.left_leg = from_point ? unit : mult;
    S.right_leg = from_point ? mult : unit;
    S.trusted_upto = std::numeric_limits<int>::max() / 4;
    return S;
}

LagSpan transpose_span(const LagSpan& S)
{
    LagSpan T = S;
    std::swap(T.left, T.right);
    std::swap(T.left_leg, T.right_leg);
    return T;
}

LagSpan product_span(const LagSpan& S, const LagSpan& T, NameSupply* names)
{
    NameSupply local;
    NameSupply& supply = names ? *names : local;
    auto L = product_stack(S.left, T.left, &supply);
    auto R = product_stack(S.right, T.right, &supply);
    auto A = tensor_cdga(S.apex, T.apex, &supply);
    LagSpan P;
    P.left = L.stack;
    P.right = R.stack;
    P.apex = A.algebra;
    auto leg = [&](const CDGAMap& s, const CDGAMap& t, const StackProduct& obj) {
        std::vector<GradedElement> im;
        for (const auto& e : s.images()) im.push_back(e.rebase(A.algebra.signature()));
        for (const auto& e : t.images()) im.push_back(e.rebase(A.algebra.signature(), A.right_renames));
        return CDGAMap(obj.stack.algebra, A.algebra, std::move(im));
    };
    P.left_leg = leg(S.left_leg, T.left_leg, L);
    P.right_leg = leg(S.right_leg, T.right_leg, R);
    P.resolved = "product";
    P.trusted_upto = std::min(S.trusted_upto, T.trusted_upto);
    return P;
}

int common_step(const std::vector<const SemifreeCDGA*>& algebras)
{
    std::optional<int> s;
    for (const auto* A : algebras) {
        auto st = A->step();
        if (st.zero) continue;
        if (!st.homogeneous) return 0;
        if (s && *s != st.s_min) return 0;
        s = st.s_min;
    }
    return s.value_or(0);
}

namespace {

bool zero_d(const SemifreeCDGA& A) { return A.step().zero; }

struct Pushout {
    SemifreeCDGA algebra;
    CDGAMap into1;
    CDGAMap into2;
};

// C1 (x)_S C2 where iota sends the generators of S to distinct generators of
// C2 spanning a sub-dga.
Pushout pushout_semifree(const CDGAMap& phi, const CDGAMap& iota, NameSupply& supply)
{
    const auto& C1 = phi.target();
    const auto& C2 = iota.target();
    std::map<std::string, size_t> from_s;
    for (size_t i = 0; i < iota.images().size(); ++i) {
        const auto& img = iota.images()[i];
        if (img.size() != 1 || img.terms().begin()->second != 1)
            throw std::invalid_argument("pushout: the inclusion does not send generators to generators");
        int hits = 0;
        size_t which = 0;
        for (size_t k = 0; k < C2.signature()->size(); ++k)
            if (GradedElement::generator(C2.signature(), k) == img) {
                ++hits;
                which = k;
            }
        if (hits != 1) throw std::invalid_argument("pushout: the inclusion does not send generators to generators");
        from_s[C2.signature()->var(which).name] = i;
    }
    supply.reserve(*C1.signature());
    supply.reserve(*C2.signature());
    std::vector<GradedVar> vars = C1.signature()->vars();
    std::map<std::string, std::string> rename;
    for (const auto& v : C2.signature()->vars()) {
        if (from_s.count(v.name)) continue;
        GradedVar nv = v;
        if (C1.signature()->contains(v.name)) nv.name = supply.fresh(v.name);
        rename[v.name] = nv.name;
        vars.push_back(nv);
    }
    auto sig = make_signature(vars);
    std::vector<GradedElement> i2;
    for (const auto& v : C2.signature()->vars()) {
        if (auto it = from_s.find(v.name); it != from_s.end()) i2.push_back(phi.images()[it->second].rebase(sig));
        else i2.push_back(GradedElement::generator(sig, rename[v.name]));
    }
    SemifreeCDGA tmp(sig, {});
    CDGAMap into2_tmp(C2, tmp, i2);
    std::vector<GradedElement> d;
    for (const auto& v : C1.signature()->vars()) d.push_back(C1.d_of(v.name).rebase(sig));
    for (const auto& v : C2.signature()->vars())
        if (!from_s.count(v.name)) d.push_back(into2_tmp.apply(C2.d_of(v.name)));
    Pushout P;
    P.algebra = SemifreeCDGA(sig, std::move(d));
    std::vector<GradedElement> i1;
    for (const auto& v : C1.signature()->vars()) i1.push_back(GradedElement::generator(sig, v.name));
    P.into1 = CDGAMap(C1, P.algebra, std::move(i1));
    std::vector<GradedElement> i2b;
    for (const auto& e : i2) i2b.push_back(e.rebase(P.algebra.signature()));
    P.into2 = CDGAMap(C2, P.algebra, std::move(i2b));
    return P;
}

// A x B as an algebra together with the map into the apex given by the legs.
CDGAMap boundary_map(const LagSpan& S, const SemifreeCDGA& AB, const std::map<std::string, std::string>& rr)
{
    std::map<std::string, GradedElement> images;
    for (const auto& v : S.left.algebra.signature()->vars()) images[v.name] = S.left_leg.image(v.name);
    for (const auto& v : S.right.algebra.signature()->vars()) {
        auto it = rr.find(v.name);
        images[it == rr.end() ? v.name : it->second] = S.right_leg.image(v.name);
    }
    std::vector<GradedElement> imgs;
    for (const auto& v : AB.signature()->vars()) imgs.push_back(images.at(v.name));
    return CDGAMap(AB, S.apex, std::move(imgs));
}

GradedElement signed_by_parity(const GradedElement& c, int base_parity)
{
    // (-1)^{base} * (-1)^{base * |term|} per term
    GradedElement out(c.signature());
    for (const auto& [m, k] : c.terms()) {
        int p = parity_of(m) == Parity::Odd ? 1 : 0;
        int s = (base_parity + base_parity * p) % 2;
        out.add_term(m, s ? Rational(-k) : k);
    }
    return out;
}

// Tensor of free modules whose coefficients are pushed into one algebra.
SemifreeModule tensor_modules(const SemifreeModule& X, const CDGAMap& ix, const SemifreeModule& Y, const CDGAMap& iy,
                              const SemifreeCDGA& C)
{
    size_t nx = X.rank(), ny = Y.rank(), n = nx * ny;
    std::vector<ModuleGen> gens;
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j)
            gens.push_back({X.gens()[i].name + "." + Y.gens()[j].name, X.gens()[i].parity + Y.gens()[j].parity,
                            X.gens()[i].weight + Y.gens()[j].weight});
    std::vector<GradedElement> D(n * n, GradedElement(C.signature()));
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j) {
            size_t col = i * ny + j;
            for (size_t k = 0; k < nx; ++k)
                if (!X.D(k, i).is_zero()) D[(k * ny + j) * n + col] += ix.apply(X.D(k, i));
            int pe = X.gens()[i].parity == Parity::Odd ? 1 : 0;
            for (size_t l = 0; l < ny; ++l)
                if (!Y.D(l, j).is_zero()) D[(i * ny + l) * n + col] += signed_by_parity(iy.apply(Y.D(l, j)), pe);
        }
    return SemifreeModule(C, std::move(gens), std::move(D));
}

// The last k generators of a graph model are the xi's, in base order.
std::vector<GradedElement> xi_images(const DerivedTensor& t, const CDGAMap& action, size_t k)
{
    const auto& vars = t.model.signature()->vars();
    std::vector<GradedElement> out;
    for (size_t i = vars.size() - k; i < vars.size(); ++i) out.push_back(action.image(vars[i].name));
    return out;
}

}  // namespace

LagSpan compose_span(const LagSpan& S1, const LagSpan& S2, int bound, NameSupply* names, bool reduce)
{
    if (!same_signature(S1.right.algebra.signature(), S2.left.algebra.signature()))
        throw std::invalid_argument("spans do not share the middle object");
    NameSupply local;
    NameSupply& supply = names ? *names : local;
    LagSpan out;
    out.left = S1.left;
    out.right = S2.right;
    const auto& B = S1.right.algebra;
    if (zero_d(B)) {
        TensorOptions opt;
        opt.method = TensorMethod::Graph;
        opt.reduce = reduce;
        opt.step = common_step({&S1.apex, &S2.apex});
        auto dt = derived_tensor(S1.right_leg, S2.left_leg, bound, opt, &supply);
        out.apex = dt.model;
        out.left_leg = S1.left_leg.then(dt.from_left);
        out.right_leg = S2.right_leg.then(dt.from_right);
        out.resolved = "graph";
        out.trusted_upto = std::min({dt.hilbert.trusted_upto, S1.trusted_upto, S2.trusted_upto});
        return out;
    }
    // Resolve B (x) C -> R' and push out along B -> R.
    const auto& C = S2.right.algebra;
    auto BC = tensor_cdga(B, C, &supply);
    std::vector<GradedElement> imgs;
    for (const auto& v : B.signature()->vars()) imgs.push_back(S2.left_leg.image(v.name));
    for (const auto& v : C.signature()->vars()) imgs.push_back(S2.right_leg.image(v.name));
    CDGAMap g(BC.algebra, S2.apex, imgs);
    auto tr = koszul_tate_resolve(g, bound, &supply);
    std::vector<GradedElement> inc;
    for (const auto& v : B.signature()->vars()) inc.push_back(tr.model.gen(v.name));
    CDGAMap iota(B, tr.model, inc);
    auto P = pushout_semifree(S1.right_leg, iota, supply);
    SemifreeCDGA model = P.algebra;
    CDGAMap into1 = P.into1, into2 = P.into2;
    if (reduce) {
        auto red = reduce_linear_pairs(model);
        model = red.model;
        into1 = into1.then(red.projection);
        into2 = into2.then(red.projection);
    }
    std::vector<GradedElement> cimg;
    for (const auto& v : C.signature()->vars()) {
        auto it = BC.right_renames.find(v.name);
        cimg.push_back(into2.image(it == BC.right_renames.end() ? v.name : it->second));
    }
    out.apex = model;
    out.left_leg = S1.left_leg.then(into1);
    out.right_leg = CDGAMap(C, model, cimg);
    out.resolved = "tate";
    out.trusted_upto = std::min({tr.trusted_upto, S1.trusted_upto, S2.trusted_upto});
    return out;
}

DerivedTensor intersect_spans(const LagSpan& S, const LagSpan& T, int bound, bool reduce, bool compute_hilbert)
{
    if (!same_signature(S.left.algebra.signature(), T.left.algebra.signature()) ||
        !same_signature(S.right.algebra.signature(), T.right.algebra.signature()))
        throw std::invalid_argument("spans have different boundary objects");
    auto AB = tensor_cdga(S.left.algebra, S.right.algebra);
    auto fs = boundary_map(S, AB.algebra, AB.right_renames);
    auto ft = boundary_map(T, AB.algebra, AB.right_renames);
    TensorOptions opt;
    opt.reduce = reduce;
    opt.compute_hilbert = compute_hilbert;
    opt.step = common_step({&S.apex, &T.apex});
    return derived_tensor(fs, ft, bound, opt);
}

SpanTwoMorphism free_two_morphism(const LagSpan& source, const LagSpan& target, const std::vector<ModuleGen>& gens,
                                  const std::vector<std::string>& D, int bound)
{
    SpanTwoMorphism X;
    X.source = source;
    X.target = target;
    X.base = intersect_spans(source, target, bound, false, false);
    if (X.base.method != TensorMethod::Graph) throw std::invalid_argument("2-morphisms need boundary algebras with zero differential");
    X.algebra = X.base.model;
    X.action = CDGAMap::identity(X.algebra);
    if (D.size() != gens.size() * gens.size()) throw std::invalid_argument("module matrix has the wrong size");
    std::vector<GradedElement> Dm;
    for (const auto& s : D) Dm.push_back(parse_graded(s, X.algebra.signature()));
    X.module = SemifreeModule(X.algebra, gens, std::move(Dm));
    return X;
}

SpanTwoMorphism unit_two_morphism(const LagSpan& S, int bound)
{
    SpanTwoMorphism X;
    X.source = S;
    X.target = S;
    X.base = intersect_spans(S, S, bound, false, false);
    if (X.base.method != TensorMethod::Graph) throw std::invalid_argument("2-morphisms need boundary algebras with zero differential");
    X.algebra = S.apex;
    std::map<std::string, GradedElement> img;
    for (const auto& v : S.apex.signature()->vars()) {
        img[X.base.from_left.image(v.name).str()] = S.apex.gen(v.name);
        img[X.base.from_right.image(v.name).str()] = S.apex.gen(v.name);
    }
    std::vector<GradedElement> images;
    for (const auto& v : X.base.model.signature()->vars()) {
        auto g = X.base.model.gen(v.name).str();
        auto it = img.find(g);
        images.push_back(it == img.end() ? S.apex.zero() : it->second);
    }
    X.action = CDGAMap(X.base.model, S.apex, std::move(images));
    X.module = SemifreeModule::regular(S.apex);
    return X;
}

SpanTwoMorphism v_compose_2mor(const SpanTwoMorphism& X, const SpanTwoMorphism& Y, int bound)
{
    if (!same_signature(X.target.apex.signature(), Y.source.apex.signature()))
        throw std::invalid_argument("2-morphisms do not share the middle span");
    NameSupply supply;
    // S -> C1 through X, S -> C2 through Y.
    CDGAMap s_in_x = X.base.from_right.then(X.action);
    CDGAMap s_in_y = Y.base.from_left.then(Y.action);
    bool y_free = Y.algebra.signature() == Y.base.model.signature() || same_signature(Y.algebra.signature(), Y.base.model.signature());
    bool x_free = same_signature(X.algebra.signature(), X.base.model.signature());
    Pushout P;
    CDGAMap intoX, intoY;
    if (y_free) {
        P = pushout_semifree(s_in_x, Y.base.from_left, supply);
        intoX = P.into1;
        intoY = P.into2;
    } else if (x_free) {
        P = pushout_semifree(s_in_y, X.base.from_right, supply);
        intoX = P.into2;
        intoY = P.into1;
    } else {
        throw std::invalid_argument("vertical composite needs one factor free over its base");
    }
    SpanTwoMorphism Z;
    Z.source = X.source;
    Z.target = Y.target;
    Z.base = intersect_spans(X.source, Y.target, bound, false, false);
    Z.algebra = P.algebra;
    Z.module = tensor_modules(X.module, intoX, Y.module, intoY, Z.algebra);
    // R and T generators through the factors; xi_b to the sum of the two xi's.
    CDGAMap r_in = X.base.from_left.then(X.action).then(intoX);
    CDGAMap t_in = Y.base.from_right.then(Y.action).then(intoY);
    size_t k = X.source.left.algebra.signature()->size() + X.source.right.algebra.signature()->size();
    auto xx = xi_images(X.base, X.action, k);
    auto xy = xi_images(Y.base, Y.action, k);
    std::map<std::string, GradedElement> img;
    for (const auto& v : X.source.apex.signature()->vars())
        img[Z.base.from_left.image(v.name).str()] = r_in.image(v.name);
    for (const auto& v : Y.target.apex.signature()->vars())
        img[Z.base.from_right.image(v.name).str()] = t_in.image(v.name);
    const auto& zv = Z.base.model.signature()->vars();
    std::vector<GradedElement> images;
    for (size_t i = 0; i < zv.size(); ++i) {
        if (i + k >= zv.size()) {
            size_t b = i + k - zv.size();
            images.push_back(intoX.apply(xx[b]) + intoY.apply(xy[b]));
            continue;
        }
        images.push_back(img.at(Z.base.model.gen(zv[i].name).str()));
    }
    Z.action = CDGAMap(Z.base.model, Z.algebra, std::move(images));
    return Z;
}

SpanTwoMorphism h_compose_2mor(const SpanTwoMorphism& X, const SpanTwoMorphism& Y, int bound)
{
    const auto& B = X.source.right.algebra;
    if (!same_signature(B.signature(), Y.source.left.algebra.signature()))
        throw std::invalid_argument("2-morphisms do not share the middle object");
    if (!zero_d(B)) throw std::invalid_argument("horizontal composite needs a middle object with zero differential");
    NameSupply supply;
    supply.reserve(*X.algebra.signature());
    auto T = tensor_cdga(X.algebra, Y.algebra, &supply);
    auto rn = [&](const std::string& n) {
        auto it = T.right_renames.find(n);
        return it == T.right_renames.end() ? n : it->second;
    };
    std::vector<GradedElement> ix, iy;
    for (const auto& v : X.algebra.signature()->vars()) ix.push_back(T.algebra.gen(v.name));
    for (const auto& v : Y.algebra.signature()->vars()) iy.push_back(T.algebra.gen(rn(v.name)));
    CDGAMap tx(X.algebra, T.algebra, ix), ty(Y.algebra, T.algebra, iy);
    // B through the source spans of the two factors.
    CDGAMap psi1 = X.source.right_leg.then(X.base.from_left).then(X.action).then(tx);
    CDGAMap psi2 = Y.source.left_leg.then(Y.base.from_left).then(Y.action).then(ty);
    std::vector<GradedVar> zeta;
    std::vector<GradedElement> dz;
    int step = common_step({&X.algebra, &Y.algebra});
    for (const auto& v : B.signature()->vars()) {
        zeta.push_back({supply.fresh("zeta_" + v.name), flip(v.parity), v.weight - step});
        dz.push_back(psi1.image(v.name) - psi2.image(v.name));
    }
    auto C = T.algebra.adjoin(zeta, dz);
    auto lift = [&](const CDGAMap& f) {
        std::vector<GradedElement> im;
        for (const auto& e : f.images()) im.push_back(e.rebase(C.signature()));
        return CDGAMap(f.source(), C, std::move(im));
    };
    CDGAMap cx = lift(tx), cy = lift(ty);
    SpanTwoMorphism Z;
    Z.source = compose_span(X.source, Y.source, bound, nullptr, false);
    Z.target = compose_span(X.target, Y.target, bound, nullptr, false);
    Z.base = intersect_spans(Z.source, Z.target, bound, false, false);
    Z.algebra = C;
    Z.module = tensor_modules(X.module, cx, Y.module, cy, C);

    // Base generators: apex pieces of the composite spans, their eta's, and
    // the outer xi's.
    size_t nb = B.signature()->size();
    size_t ka = X.source.left.algebra.signature()->size(), kb = nb, kc = Y.source.right.algebra.signature()->size();
    auto xX = xi_images(X.base, X.action, ka + kb);
    auto xY = xi_images(Y.base, Y.action, kb + kc);
    std::vector<GradedElement> zimg;
    for (size_t i = 0; i < nb; ++i) zimg.push_back(C.gen(zeta[i].name));

    auto apex_images = [&](const LagSpan& comp, const DerivedTensor& from, bool source_side) {
        // comp.apex = first (x) second [eta]; its generators map through the
        // factor actions, eta_b to zeta_b corrected by the xi's.
        std::map<std::string, GradedElement> m;
        const auto& xa = source_side ? X.base.from_left : X.base.from_right;
        const auto& ya = source_side ? Y.base.from_left : Y.base.from_right;
        const auto& first = source_side ? X.source.apex : X.target.apex;
        const auto& second = source_side ? Y.source.apex : Y.target.apex;
        (void)from;
        CDGAMap f1 = xa.then(X.action).then(cx), f2 = ya.then(Y.action).then(cy);
        const auto& cv = comp.apex.signature()->vars();
        std::vector<GradedElement> out;
        size_t n1 = first.signature()->size(), n2 = second.signature()->size();
        for (size_t i = 0; i < cv.size(); ++i) {
            if (i < n1) out.push_back(f1.images()[i]);
            else if (i < n1 + n2) out.push_back(f2.images()[i - n1]);
            else {
                size_t b = i - n1 - n2;
                GradedElement e = zimg[b];
                if (!source_side) e = e - cx.apply(xX[ka + b]) + cy.apply(xY[b]);
                out.push_back(e);
            }
        }
        return out;
    };
    auto src_imgs = apex_images(Z.source, Z.base, true);
    auto tgt_imgs = apex_images(Z.target, Z.base, false);
    std::map<std::string, GradedElement> img;
    for (size_t i = 0; i < Z.source.apex.signature()->size(); ++i)
        img[Z.base.from_left.images()[i].str()] = src_imgs[i];
    for (size_t i = 0; i < Z.target.apex.signature()->size(); ++i)
        img[Z.base.from_right.images()[i].str()] = tgt_imgs[i];
    const auto& zv = Z.base.model.signature()->vars();
    size_t k = ka + kc;
    std::vector<GradedElement> images;
    for (size_t i = 0; i < zv.size(); ++i) {
        if (i + k >= zv.size()) {
            size_t j = i + k - zv.size();
            images.push_back(j < ka ? cx.apply(xX[j]) : cy.apply(xY[kb + (j - ka)]));
            continue;
        }
        images.push_back(img.at(Z.base.model.gen(zv[i].name).str()));
    }
    Z.action = CDGAMap(Z.base.model, C, std::move(images));
    return Z;
}

bool legs_coincide(const LagSpan& S)
{
    const auto& l = S.left_leg.images();
    const auto& r = S.right_leg.images();
    if (l.size() != r.size()) return false;
    for (size_t i = 0; i < l.size(); ++i)
        if (!(l[i] == r[i])) return false;
    return true;
}

SerreResult serre_composite(const AffineSymplecticStack& X, int bound)
{
    const auto& A = X.algebra;
    auto copy = [&](const std::string& suffix) {
        std::map<std::string, std::string> m;
        for (const auto& v : A.signature()->vars()) m[v.name] = v.name + suffix;
        return rename_stack(X, m);
    };
    auto X3 = product_stack(product_stack(copy("_1"), copy("_2")).stack, copy("_3")).stack;
    auto X2 = product_stack(copy("_u"), copy("_v")).stack;
    auto gen = [](const SemifreeCDGA& C, const std::string& n) { return C.gen(n); };
    const auto& vars = A.signature()->vars();

    // X <- XxX -> XxXxX, legs pi_1 and id x diagonal.
    auto end_span = [&]() {
        LagSpan S;
        S.left = X;
        S.right = X3;
        S.apex = X2.algebra;
        std::vector<GradedElement> l, r;
        for (const auto& v : vars) l.push_back(gen(S.apex, v.name + "_u"));
        for (const auto& v : vars) r.push_back(gen(S.apex, v.name + "_u"));
        for (const auto& v : vars) r.push_back(gen(S.apex, v.name + "_v"));
        for (const auto& v : vars) r.push_back(gen(S.apex, v.name + "_v"));
        S.left_leg = CDGAMap(X.algebra, S.apex, l);
        S.right_leg = CDGAMap(X3.algebra, S.apex, r);
        S.trusted_upto = std::numeric_limits<int>::max() / 4;
        return S;
    };
    LagSpan S1 = end_span();
    LagSpan S2;
    S2.left = X3;
    S2.right = X3;
    S2.apex = X3.algebra;
    S2.left_leg = CDGAMap::identity(X3.algebra);
    {
        std::vector<GradedElement> r;
        for (const auto& v : vars) r.push_back(gen(S2.apex, v.name + "_2"));
        for (const auto& v : vars) r.push_back(gen(S2.apex, v.name + "_1"));
        for (const auto& v : vars) r.push_back(gen(S2.apex, v.name + "_3"));
        S2.right_leg = CDGAMap(X3.algebra, S2.apex, r);
    }
    S2.trusted_upto = std::numeric_limits<int>::max() / 4;
    LagSpan S3 = transpose_span(end_span());

    NameSupply supply;
    SerreResult res;
    auto S12 = compose_span(S1, S2, bound, &supply);
    res.span = compose_span(S12, S3, bound, &supply);
    res.hilbert = cohomology_hilbert(res.span.apex, bound);
    res.expected = cohomology_hilbert(A, bound);
    auto mm = compare_hilbert(res.hilbert, res.expected);
    res.ok = !mm.has_value();
    if (mm)
        res.detail = "weight " + std::to_string(mm->weight) + ": " + std::to_string(mm->left) + " vs " +
                     std::to_string(mm->right);
    return res;
}

}  // namespace lgmf
