#include "lgmf/bicat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lgmf/cohomology.hpp"

namespace lgmf {

VarTablePtr merge_tables(const std::vector<VarTablePtr>& tables)
{
    std::vector<std::string> names;
    std::vector<int> weights;
    std::map<std::string, int> seen;
    for (const auto& t : tables) {
        if (!t) continue;
        for (size_t i = 0; i < t->size(); ++i) {
            auto [it, fresh] = seen.emplace(t->name(i), t->weight(i));
            if (!fresh) {
                if (it->second != t->weight(i))
                    throw std::invalid_argument("variable '" + t->name(i) + "' with two weights");
                continue;
            }
            names.push_back(t->name(i));
            weights.push_back(t->weight(i));
        }
    }
    return make_table(names, weights);
}

namespace {

std::vector<std::string> used_names(const MFOneMorphism& f)
{
    std::vector<std::string> out = f.source.vars;
    out.insert(out.end(), f.target.vars.begin(), f.target.vars.end());
    out.insert(out.end(), f.extras.begin(), f.extras.end());
    if (f.potential.table())
        for (const auto& n : f.potential.table()->names()) out.push_back(n);
    return out;
}

std::string renamed(const std::map<std::string, std::string>& m, const std::string& n)
{
    auto it = m.find(n);
    return it == m.end() ? n : it->second;
}

MFObject rename_object(const MFObject& x, const std::map<std::string, std::string>& m)
{
    MFObject y = x;
    for (auto& v : y.vars) v = renamed(m, v);
    return y;
}

VarTablePtr table_of(const MFOneMorphism& f)
{
    std::vector<std::string> names;
    std::vector<int> weights;
    for (size_t i = 0; i < f.source.vars.size(); ++i) {
        names.push_back(f.source.vars[i]);
        weights.push_back(f.source.weight(i));
    }
    for (size_t i = 0; i < f.target.vars.size(); ++i) {
        names.push_back(f.target.vars[i]);
        weights.push_back(f.target.weight(i));
    }
    auto own = make_table(names, weights);
    return merge_tables({own, f.potential.table()});
}

// Renaming that sends g's extras onto f's extras by position.
std::map<std::string, std::string> match_extras(const MFOneMorphism& from, const MFOneMorphism& onto)
{
    if (from.extras.size() != onto.extras.size())
        throw std::invalid_argument("middle 1-morphisms have different numbers of extra variables");
    std::map<std::string, std::string> m;
    for (size_t i = 0; i < from.extras.size(); ++i) m[from.extras[i]] = onto.extras[i];
    return m;
}

}  // namespace

MFOneMorphism make_one_morphism(const MFObject& source, const MFObject& target, const std::vector<std::string>& extras,
                                const std::string& potential, const std::vector<int>& extra_weights)
{
    MFOneMorphism f;
    f.source = source;
    f.target = target;
    f.extras = extras;
    std::vector<std::string> names;
    std::vector<int> weights;
    for (size_t i = 0; i < source.vars.size(); ++i) {
        names.push_back(source.vars[i]);
        weights.push_back(source.weight(i));
    }
    for (size_t i = 0; i < target.vars.size(); ++i) {
        names.push_back(target.vars[i]);
        weights.push_back(target.weight(i));
    }
    for (size_t i = 0; i < extras.size(); ++i) {
        names.push_back(extras[i]);
        weights.push_back(extra_weights.empty() ? 1 : extra_weights.at(i));
    }
    f.potential = parse_polynomial(potential, make_table(names, weights));
    return f;
}

MFOneMorphism rename_one(const MFOneMorphism& f, const std::map<std::string, std::string>& m)
{
    MFOneMorphism g;
    g.source = rename_object(f.source, m);
    g.target = rename_object(f.target, m);
    for (const auto& e : f.extras) g.extras.push_back(renamed(m, e));
    const auto& t = f.potential.table();
    if (!t) {
        g.potential = f.potential;
        return g;
    }
    std::vector<std::string> names;
    for (const auto& n : t->names()) names.push_back(renamed(m, n));
    g.potential = f.potential.rebase(make_table(names, t->weights()), m);
    return g;
}

MFOneMorphism h_compose_1(const MFOneMorphism& f, const MFOneMorphism& g, NameSupply* names)
{
    if (f.target.vars.size() != g.source.vars.size())
        throw std::invalid_argument("1-morphisms are not composable: middle objects differ in length");
    NameSupply local;
    NameSupply& ns = names ? *names : local;
    auto fnames = used_names(f);
    std::set<std::string> fset(fnames.begin(), fnames.end());
    for (const auto& n : fnames) ns.reserve(n);
    for (const auto& n : used_names(g)) ns.reserve(n);

    std::map<std::string, std::string> m;
    for (size_t i = 0; i < g.source.vars.size(); ++i) {
        if (g.source.weight(i) != f.target.weight(i))
            throw std::invalid_argument("middle objects carry different weights");
        m[g.source.vars[i]] = f.target.vars[i];
    }
    for (const auto& n : used_names(g)) {
        if (m.count(n)) continue;
        m[n] = fset.count(n) ? ns.fresh(n) : n;
    }
    MFOneMorphism g2 = rename_one(g, m);

    MFOneMorphism h;
    h.source = f.source;
    h.target = g2.target;
    h.extras = f.extras;
    h.extras.insert(h.extras.end(), f.target.vars.begin(), f.target.vars.end());
    h.extras.insert(h.extras.end(), g2.extras.begin(), g2.extras.end());
    auto table = merge_tables({table_of(f), table_of(g2)});
    h.potential = f.potential.rebase(table) + g2.potential.rebase(table);
    return h;
}

MFOneMorphism tensor_1(const MFOneMorphism& f, const MFOneMorphism& g, NameSupply* names)
{
    NameSupply local;
    NameSupply& ns = names ? *names : local;
    auto fnames = used_names(f);
    std::set<std::string> fset(fnames.begin(), fnames.end());
    for (const auto& n : fnames) ns.reserve(n);
    for (const auto& n : used_names(g)) ns.reserve(n);
    std::map<std::string, std::string> m;
    for (const auto& n : used_names(g))
        if (!m.count(n)) m[n] = fset.count(n) ? ns.fresh(n) : n;
    MFOneMorphism g2 = rename_one(g, m);
    auto cat = [](MFObject a, const MFObject& b) {
        if (!a.weights.empty() || !b.weights.empty()) {
            std::vector<int> w;
            for (size_t i = 0; i < a.vars.size(); ++i) w.push_back(a.weight(i));
            for (size_t i = 0; i < b.vars.size(); ++i) w.push_back(b.weight(i));
            a.weights = w;
        }
        a.vars.insert(a.vars.end(), b.vars.begin(), b.vars.end());
        return a;
    };
    MFOneMorphism h;
    h.source = cat(f.source, g2.source);
    h.target = cat(f.target, g2.target);
    h.extras = f.extras;
    h.extras.insert(h.extras.end(), g2.extras.begin(), g2.extras.end());
    auto table = merge_tables({table_of(f), table_of(g2)});
    h.potential = f.potential.rebase(table) + g2.potential.rebase(table);
    return h;
}

MFOneMorphism identity_1(const MFObject& x)
{
    MFObject xt;
    std::vector<std::string> extras;
    for (size_t i = 0; i < x.vars.size(); ++i) {
        xt.vars.push_back(x.vars[i] + "_t");
        extras.push_back("a_" + x.vars[i]);
    }
    xt.weights = x.weights;
    std::string V;
    for (size_t i = 0; i < x.vars.size(); ++i) {
        if (i) V += " + ";
        V += extras[i] + "*(" + xt.vars[i] + " - " + x.vars[i] + ")";
    }
    if (V.empty()) V = "0";
    return make_one_morphism(x, xt, extras, V);
}

MFTwoMorphism identity_2(const MFOneMorphism& f)
{
    MFTwoMorphism I;
    I.source = f;
    std::map<std::string, std::string> m;
    for (const auto& e : f.extras) m[e] = primed(e);
    I.target = rename_one(f, m);
    I.rep = unit_mf(f.potential.rebase(table_of(f)), f.extras);
    return I;
}

bool same_one_morphism(const MFOneMorphism& f, const MFOneMorphism& g)
{
    if (f.source.vars != g.source.vars || f.target.vars != g.target.vars) return false;
    if (f.extras.size() != g.extras.size()) return false;
    auto g2 = rename_one(g, match_extras(g, f));
    auto table = merge_tables({table_of(f), table_of(g2)});
    return f.potential.rebase(table) == g2.potential.rebase(table);
}

MFTwoMorphism v_compose_2(const MFTwoMorphism& M, const MFTwoMorphism& N, NameSupply* names,
                          MatrixFactorization* renamed_second)
{
    if (!same_one_morphism(M.target, N.source)) throw std::invalid_argument("middle 1-morphisms do not match");
    NameSupply local;
    NameSupply& ns = names ? *names : local;
    std::set<std::string> mset;
    for (const auto& n : M.rep.table->names()) {
        mset.insert(n);
        ns.reserve(n);
    }
    for (const auto& n : N.rep.table->names()) ns.reserve(n);
    auto m = match_extras(N.source, M.target);
    for (const auto& n : N.rep.table->names()) {
        if (m.count(n)) continue;
        bool object_var = std::count(N.source.source.vars.begin(), N.source.source.vars.end(), n) ||
                          std::count(N.source.target.vars.begin(), N.source.target.vars.end(), n);
        m[n] = (!object_var && mset.count(n)) ? ns.fresh(n) : n;
    }
    std::vector<std::string> nnames;
    for (const auto& n : N.rep.table->names()) nnames.push_back(m[n]);
    auto ntable = make_table(nnames, N.rep.table->weights());
    auto table = merge_tables({M.rep.table, ntable});
    MFTwoMorphism R;
    R.source = M.source;
    R.target = rename_one(N.target, m);
    auto N2 = rebase_mf(N.rep, table, m);
    R.rep = tensor_mf(rebase_mf(M.rep, table), N2);
    if (renamed_second) *renamed_second = N2;
    return R;
}

MFTwoMorphism h_compose_2(const MFTwoMorphism& M, const MFTwoMorphism& N, NameSupply* names)
{
    if (M.source.target.vars.size() != N.source.source.vars.size())
        throw std::invalid_argument("2-morphisms are not horizontally composable");
    NameSupply local;
    NameSupply& ns = names ? *names : local;
    std::set<std::string> mset;
    for (const auto& n : M.rep.table->names()) {
        mset.insert(n);
        ns.reserve(n);
    }
    for (const auto& n : N.rep.table->names()) ns.reserve(n);
    std::map<std::string, std::string> m;
    for (size_t i = 0; i < N.source.source.vars.size(); ++i) m[N.source.source.vars[i]] = M.source.target.vars[i];
    for (const auto& n : N.rep.table->names()) {
        if (m.count(n)) continue;
        m[n] = mset.count(n) ? ns.fresh(n) : n;
    }
    // Source and target extras of N must be renamed consistently.
    std::vector<std::string> nnames;
    for (const auto& n : N.rep.table->names()) nnames.push_back(m[n]);
    auto ntable = make_table(nnames, N.rep.table->weights());
    auto table = merge_tables({M.rep.table, ntable});
    MFTwoMorphism R;
    R.source = h_compose_1(M.source, rename_one(N.source, m), &ns);
    R.target = h_compose_1(M.target, rename_one(N.target, m), &ns);
    R.rep = tensor_mf(rebase_mf(M.rep, table), rebase_mf(N.rep, table, m));
    return R;
}

UnitLawReport check_unit_law(const MFTwoMorphism& M, bool unit_after, int bound)
{
    UnitLawReport r;
    r.side = unit_after ? "left" : "right";
    MFTwoMorphism C;
    std::vector<std::string> middle;
    if (unit_after) {
        auto I = identity_2(M.target);
        C = v_compose_2(M, I);
        middle = M.target.extras;
    } else {
        auto I = identity_2(M.source);
        C = v_compose_2(I, M);
        for (const auto& e : M.source.extras) middle.push_back(primed(e));
    }
    auto EM = end_complex(M.rep);
    auto EC = end_complex(C.rep, EM.scale);
    r.plain = cohomology_hilbert(EM.module, bound);
    r.composite = cohomology_hilbert(EC.module, bound);
    if (EC.step != EM.step) {
        r.detail = "composite and M have different steps";
        return r;
    }
    std::vector<GradedVar> eps;
    for (size_t i = 0; i < middle.size(); ++i) {
        int w = C.rep.table->weight(C.rep.table->index_of(middle[i]));
        eps.push_back({"eps" + std::to_string(i), Parity::Odd, EM.step - EM.scale * w});
    }
    auto lam = cohomology_hilbert(SemifreeCDGA(make_signature(eps), {}), bound + 4 * static_cast<int>(eps.size()) * EM.scale + 8);
    r.expected = tensor_hilbert(r.plain, lam);
    auto mm = compare_hilbert(r.composite, r.expected);
    r.ok = !mm.has_value();
    if (mm)
        r.detail = "weight " + std::to_string(mm->weight) + (mm->parity == Parity::Even ? " even: " : " odd: ") +
                   std::to_string(mm->left) + " vs " + std::to_string(mm->right);
    return r;
}

}  // namespace lgmf
