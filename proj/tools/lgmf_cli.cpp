// lgmf: command-line front end for the engine.
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "document.hpp"
#include "lgmf/bicat.hpp"
#include "lgmf/cohomology.hpp"
#include "lgmf/crw.hpp"
#include "lgmf/expr.hpp"
#include "lgmf/functor_e.hpp"
#include "lgmf/groebner.hpp"
#include "lgmf/mf.hpp"
#include "lgmf/tft.hpp"

using namespace lgmf;
using doc::Json;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    Json json = Json::object();
    std::ostringstream text;
    bool ok = true;
};

struct Globals {
    int bound = 8;
    std::string order = "grevlex";
    std::string json_out;
    int threads = 1;
    std::string doc_path;
};

Globals G;

MonomialOrder order() { return parse_order(G.order); }

doc::WorkDocument load_doc()
{
    if (G.doc_path.empty()) throw InputError("this verb needs --doc <file>");
    return doc::parse_document(G.doc_path);
}

template <class Map>
const typename Map::mapped_type& pick(const Map& m, const std::string& name, const char* kind)
{
    auto it = m.find(name);
    if (it == m.end()) throw InputError(std::string("undefined ") + kind + " '" + name + "'");
    return it->second;
}

// Runs fn(i) for i < n on up to G.threads workers; results keep their index.
template <class T>
std::vector<T> parallel_map(size_t n, const std::function<T(size_t)>& fn)
{
    std::vector<T> out(n);
    size_t workers = std::min<size_t>(std::max(1, G.threads), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i; (i = next++) < n;) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void collect_symbols(const Expr& e, std::vector<std::string>& out)
{
    if (e.kind == Expr::Kind::Symbol && std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
    for (const auto& a : e.args) collect_symbols(*a, out);
}

std::vector<std::string> symbols_of(const std::vector<std::string>& exprs)
{
    std::vector<std::string> out;
    for (const auto& s : exprs) collect_symbols(*parse_expr(s), out);
    return out;
}

std::string pstr(const Polynomial& p) { return p.str(order()); }

Json hilbert_pair(const HilbertFunction& h) { return doc::hilbert_json(h); }

bool same_h(const HilbertFunction& a, const HilbertFunction& b) { return !compare_hilbert(a, b); }

// Splits the identifiers of V into source, target and extras.
MFOneMorphism morphism_from_flags(const std::string& V, const std::string& x, const std::string& y,
                                  const std::string& a)
{
    auto xs = split(x, ','), ys = split(y, ','), as = split(a, ',');
    if (as.empty()) {
        for (const auto& s : symbols_of({V}))
            if (std::find(xs.begin(), xs.end(), s) == xs.end() && std::find(ys.begin(), ys.end(), s) == ys.end())
                as.push_back(s);
    }
    return make_one_morphism(MFObject{xs, {}}, MFObject{ys, {}}, as, V);
}

// ---- built-in corpora -------------------------------------------------------

struct NamedMF {
    std::string name;
    MatrixFactorization mf;
};

MFTwoMorphism two_morphism(const MFOneMorphism& s, const MFOneMorphism& t, const std::string& p, const std::string& q)
{
    MFTwoMorphism M{s, t, {}};
    auto T = merge_tables({s.potential.table(), t.potential.table()});
    M.rep = koszul_mf({{parse_polynomial(p, T), parse_polynomial(q, T)}});
    return M;
}

std::vector<std::pair<std::string, MFTwoMorphism>> koszul_two_morphisms()
{
    MFObject x{{"x"}, {}}, e{};
    auto A = make_one_morphism(e, e, {"a"}, "a^2");
    auto B = make_one_morphism(e, e, {"b"}, "b^2");
    auto A3 = make_one_morphism(e, e, {"a"}, "a^3");
    auto Z = make_one_morphism(e, e, {}, "0");
    auto Xa = make_one_morphism(x, e, {"a"}, "x*a");
    auto Xb = make_one_morphism(x, e, {"b"}, "x*b");
    return {{"(b-a, b+a)", two_morphism(A, B, "b-a", "b+a")},
            {"(a, -a^2)", two_morphism(A3, Z, "a", "-a^2")},
            {"(x, b-a)", two_morphism(Xa, Xb, "x", "b-a")}};
}

std::vector<NamedMF> builtin_mfs()
{
    std::vector<NamedMF> out;
    for (auto& [n, M] : koszul_two_morphisms()) out.push_back({"koszul " + n, M.rep});
    auto T = make_table({"x", "y", "z"});
    auto P = [&](const char* s) { return parse_polynomial(s, T); };
    out.push_back({"koszul (x,y)(y,z)", koszul_mf({{P("x"), P("y")}, {P("y"), P("z")}})});
    for (const char* V : {"a^2", "a^3", "a^2+b^2"}) {
        auto syms = symbols_of({V});
        auto TV = make_table(syms);
        out.push_back({std::string("unit ") + V, unit_mf(parse_polynomial(V, TV), syms)});
    }
    return out;
}

SemifreeCDGA builtin_algebra(const std::string& name)
{
    if (name == "K") return SemifreeCDGA::ground();
    if (name == "Kx") return SemifreeCDGA::polynomial({"x"});
    if (name == "Kxp") return cotangent_stack({"x"}).algebra;
    throw InputError("unknown built-in algebra '" + name + "' (K, Kx, Kxp)");
}

// --algebra accepts a built-in name or a cdga JSON file.
SemifreeCDGA algebra_arg(const std::string& spec, const std::string& name, int t)
{
    if (!name.empty()) return pick(load_doc().cdgas, name, "cdga");
    if (t >= 0) return polynomial_algebra(t);
    if (spec.empty()) throw InputError("give --algebra, --name with --doc, or --t");
    if (spec == "K" || spec == "Kx" || spec == "Kxp") return builtin_algebra(spec);
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    Json j;
    try {
        j = Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        auto text = ss.str();
        auto [l, c] = doc::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw doc::DocumentError({doc::Located{"", l, c, "syntax error"}});
    }
    return doc::cdga_from_json(j, "");
}

// ---- poly -------------------------------------------------------------------

struct PolyArgs {
    std::string vars, weights, gens, p;
};

GroebnerBasis basis_from(const PolyArgs& a, VarTablePtr& T)
{
    auto gens = split(a.gens, ';');
    auto vars = split(a.vars, ',');
    if (vars.empty()) {
        auto all = gens;
        if (!a.p.empty()) all.push_back(a.p);
        vars = symbols_of(all);
    }
    std::vector<int> w;
    for (const auto& s : split(a.weights, ',')) w.push_back(std::stoi(s));
    T = make_table(vars, w);
    std::vector<Polynomial> P;
    for (const auto& g : gens) P.push_back(parse_polynomial(g, T));
    return groebner_basis(P, order(), T);
}

void poly_groebner(const PolyArgs& a, Report& r)
{
    VarTablePtr T;
    auto gb = basis_from(a, T);
    r.json["order"] = G.order;
    r.json["basis"] = Json::array();
    r.text << "Groebner basis (" << G.order << "):\n";
    for (const auto& g : gb.generators) {
        r.json["basis"].push_back(pstr(g));
        r.text << "  " << pstr(g) << "\n";
    }
}

void poly_nf(const PolyArgs& a, Report& r)
{
    if (a.p.empty()) throw InputError("poly nf needs --p");
    VarTablePtr T;
    auto gb = basis_from(a, T);
    auto nf = normal_form(parse_polynomial(a.p, T), gb);
    r.json["normal_form"] = pstr(nf);
    r.json["member"] = nf.is_zero();
    r.text << "normal form: " << pstr(nf) << "\nmember: " << (nf.is_zero() ? "yes" : "no") << "\n";
}

void poly_hilbert(const PolyArgs& a, Report& r)
{
    VarTablePtr T;
    auto gb = basis_from(a, T);
    auto h = quotient_hilbert(gb, G.bound);
    r.json["hilbert"] = hilbert_pair(h);
    r.text << doc::hilbert_table(h, "K[vars]/I");
}

// ---- mf ---------------------------------------------------------------------

Json mf_verdict_json(const std::string& name, const MatrixFactorization& M, const MFVerdict& v)
{
    Json j;
    j["name"] = name;
    j["potential"] = pstr(M.potential);
    j["rank"] = {M.r0, M.r1};
    j["ok"] = v.ok;
    if (!v.ok) {
        j["block"] = v.block;
        j["row"] = v.row;
        j["col"] = v.col;
    }
    return j;
}

void mf_verify(const std::string& name, Report& r)
{
    std::vector<NamedMF> items;
    if (!G.doc_path.empty()) {
        auto d = load_doc();
        if (!name.empty()) items.push_back({name, pick(d.mfs, name, "mf")});
        else
            for (const auto& [n, M] : d.mfs) items.push_back({n, M});
    } else {
        items = builtin_mfs();
    }
    auto verdicts = parallel_map<MFVerdict>(items.size(), [&](size_t i) { return verify_mf(items[i].mf); });
    r.json["factorizations"] = Json::array();
    for (size_t i = 0; i < items.size(); ++i) {
        r.json["factorizations"].push_back(mf_verdict_json(items[i].name, items[i].mf, verdicts[i]));
        r.text << (verdicts[i].ok ? "ok    " : "FAIL  ") << items[i].name << "   d^2 = (" << pstr(items[i].mf.potential)
               << ") id\n";
        r.ok = r.ok && verdicts[i].ok;
    }
}

void mf_end(const std::string& name, Report& r)
{
    auto M = pick(load_doc().mfs, name, "mf");
    auto E = end_complex(M);
    auto h = cohomology_hilbert(E.module, G.bound);
    r.json["name"] = name;
    r.json["end"] = hilbert_pair(h);
    r.text << doc::hilbert_table(h, "H(End(" + name + "))");
}

void mf_unit(const std::string& V, const std::string& a, Report& r)
{
    auto syms = symbols_of({V});
    auto as = split(a, ',');
    if (as.empty()) as = syms;
    auto T = make_table(syms);
    auto I = unit_mf(parse_polynomial(V, T), as);
    auto v = verify_mf(I);
    r.json["unit"] = mf_verdict_json("I(" + V + ")", I, v);
    r.json["unit"]["mf"] = doc::mf_json(I, order());
    r.text << (v.ok ? "ok    " : "FAIL  ") << "I_(a,V) for V = " << V << ", rank " << I.r0 << "|" << I.r1 << "\n";
    r.ok = v.ok;
}

// ---- bicat ------------------------------------------------------------------

void bicat_compose(const std::string& f, const std::string& g, Report& r)
{
    auto d = load_doc();
    auto h = h_compose_1(pick(d.morphisms, f, "morphism"), pick(d.morphisms, g, "morphism"));
    r.json["potential"] = pstr(h.potential);
    r.json["extras"] = h.extras;
    r.text << g << " o " << f << " = (";
    for (size_t i = 0; i < h.extras.size(); ++i) r.text << (i ? "," : "") << h.extras[i];
    r.text << "; " << pstr(h.potential) << ")\n";
}

void bicat_unit_law(const std::string& name, Report& r)
{
    std::vector<std::pair<std::string, MFTwoMorphism>> items;
    if (!G.doc_path.empty()) {
        auto d = load_doc();
        if (!name.empty()) items.push_back({name, pick(d.two_morphisms, name, "two-morphism")});
        else
            for (const auto& it : d.two_morphisms) items.push_back(it);
    } else {
        items = koszul_two_morphisms();
    }
    auto reports = parallel_map<UnitLawReport>(2 * items.size(), [&](size_t i) {
        return check_unit_law(items[i / 2].second, i % 2 == 0, G.bound);
    });
    r.json["checks"] = Json::array();
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& u = reports[i];
        Json j{{"name", items[i / 2].first}, {"side", u.side}, {"ok", u.ok}, {"composite", hilbert_pair(u.composite)},
               {"expected", hilbert_pair(u.expected)}, {"end", hilbert_pair(u.plain)}};
        if (!u.detail.empty()) j["detail"] = u.detail;
        r.json["checks"].push_back(j);
        r.text << (u.ok ? "ok    " : "FAIL  ") << items[i / 2].first << " " << u.side << "\n";
        r.ok = r.ok && u.ok;
    }
}

// ---- crw --------------------------------------------------------------------

void crw_serre(const std::string& algebra, const std::string& stack, Report& r)
{
    AffineSymplecticStack X;
    if (!stack.empty()) X = pick(load_doc().stacks, stack, "stack");
    else if (algebra == "Kxp") X = cotangent_stack({"x"});
    else X = AffineSymplecticStack{builtin_algebra(algebra.empty() ? "K" : algebra), {}, 1};
    auto s = serre_composite(X, G.bound);
    r.json["apex"] = hilbert_pair(s.hilbert);
    r.json["expected"] = hilbert_pair(s.expected);
    r.json["ok"] = s.ok;
    r.text << doc::hilbert_table(s.hilbert, "Serre composite apex") << doc::hilbert_table(s.expected, "A")
           << (s.ok ? "agree\n" : "DIFFER " + s.detail + "\n");
    r.ok = s.ok;
}

void crw_compose(const std::string& first, const std::string& second, Report& r)
{
    auto d = load_doc();
    auto S = compose_span(pick(d.spans, first, "span"), pick(d.spans, second, "span"), G.bound);
    auto h = cohomology_hilbert(S.apex, G.bound);
    r.json["apex"] = doc::cdga_json(S.apex);
    r.json["hilbert"] = hilbert_pair(h);
    r.text << "apex " << S.apex.str() << "\n" << doc::hilbert_table(h);
}

// ---- e ----------------------------------------------------------------------

struct EArgs {
    std::string V = "", W = "", x, y, z, a, name, first, second;
};

void e_object_verb(const EArgs& a, Report& r)
{
    auto X = e_object(MFObject{split(a.x, ','), {}});
    r.json["algebra"] = doc::cdga_json(X.algebra);
    r.json["form"] = X.form_str();
    r.text << X.algebra.str() << "  omega = " << X.form_str() << "\n";
}

void e_one_verb(const EArgs& a, Report& r)
{
    auto S = e_one(morphism_from_flags(a.V, a.x, a.y, a.a));
    auto h = cohomology_hilbert(S.apex, G.bound);
    r.json["apex"] = doc::cdga_json(S.apex);
    r.json["hilbert"] = hilbert_pair(h);
    r.text << "apex " << S.apex.str() << "\n" << doc::hilbert_table(h);
}

void e_two_verb(const EArgs& a, Report& r)
{
    MFTwoMorphism M;
    if (!a.name.empty()) M = pick(load_doc().two_morphisms, a.name, "two-morphism");
    else M = identity_2(morphism_from_flags(a.V, a.x, a.y, a.a));
    auto E = e_two(M);
    auto h = cohomology_hilbert(E.end.module, G.bound);
    r.json["A"] = doc::cdga_json(E.A.algebra);
    r.json["end"] = hilbert_pair(h);
    r.json["witness"] = {{"ok", E.witness.ok}, {"first_order", E.witness.first_order.size()},
                         {"second_order", E.witness.second_order.size()}};
    r.text << "A = " << E.A.algebra.str() << "\n"
           << doc::hilbert_table(h, "H(End)") << "homotopy action witnesses: " << (E.witness.ok ? "ok" : "FAIL")
           << "\n";
    r.ok = E.witness.ok;
}

void e_zigzag_verb(const EArgs& a, Report& r)
{
    auto f = morphism_from_flags(a.V, a.x, a.y, a.a);
    auto z = verify_zigzag(f, G.bound);
    r.json["V"] = pstr(f.potential);
    r.json["ok"] = z.ok;
    r.json["inclusion_chain_map"] = z.inclusion_chain_map;
    r.json["t_failures"] = z.t_failures;
    r.json["end"] = hilbert_pair(z.end_h);
    r.json["end_beta"] = hilbert_pair(z.end_beta_h);
    r.json["R"] = hilbert_pair(z.r_h);
    r.json["quotient"] = hilbert_pair(z.quotient_h);
    r.json["checks"] = {{"end_vs_R", z.end_vs_r},         {"end_beta_vs_end", z.end_beta_vs_end},
                        {"end_beta_vs_R", z.end_beta_vs_r}, {"h0_match", z.h0_match},
                        {"odd_vanishes", z.odd_vanishes}};
    r.text << "V = " << pstr(f.potential) << "\n"
           << doc::hilbert_table(z.end_h, "H(End(I))") << doc::hilbert_table(z.end_beta_h, "H(End(I)[beta])")
           << doc::hilbert_table(z.r_h, "H(R)") << doc::hilbert_table(z.quotient_h, "K[xya]/<d_a V>");
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    r.text << "inclusion chain map: " << yn(z.inclusion_chain_map) << "\nt chain map: " << yn(z.t_failures.empty())
           << "\nEnd(I) ~ R: " << yn(z.end_vs_r) << "\nEnd(I)[beta] ~ End(I): " << yn(z.end_beta_vs_end)
           << "\nEnd(I)[beta] ~ R: " << yn(z.end_beta_vs_r) << "\nH^0 match: " << yn(z.h0_match)
           << "\nodd part vanishes: " << yn(z.odd_vanishes) << "\n";
    if (!z.detail.empty()) r.text << z.detail << "\n";
    r.ok = z.ok;
}

void e_funct1_verb(const EArgs& a, Report& r)
{
    auto x = a.x.empty() ? "x" : a.x, y = a.y.empty() ? "y" : a.y, z = a.z.empty() ? "z" : a.z;
    auto f = morphism_from_flags(a.V.empty() ? "x*y" : a.V, x, y, "");
    auto g = morphism_from_flags(a.W.empty() ? "y*z" : a.W, y, z, "");
    auto v = check_functoriality_1(f, g, G.bound);
    std::string dd;
    bool diag = e_identity_is_diagonal(f.source, G.bound, &dd);
    r.json["composite_match"] = v.composite_match;
    r.json["h0_match"] = v.h0_match;
    r.json["product_match"] = v.product_match;
    r.json["unit_match"] = v.unit_match;
    r.json["identity_diagonal"] = diag;
    r.json["composite"] = hilbert_pair(v.composite_h);
    r.json["direct"] = hilbert_pair(v.direct_h);
    r.text << doc::hilbert_table(v.composite_h, "e(g) o e(f)") << doc::hilbert_table(v.direct_h, "e(g o f)")
           << "composite: " << v.composite_match << "  H^0: " << v.h0_match << "  product: " << v.product_match
           << "  unit: " << v.unit_match << "  e(id) diagonal: " << diag << "\n";
    if (!v.detail.empty()) r.text << v.detail << "\n";
    r.ok = v.ok && diag;
}

void e_funct2_verb(const EArgs& a, Report& r)
{
    Functoriality2Verdict v;
    if (!a.first.empty()) {
        auto d = load_doc();
        v = check_functoriality_2_vertical(pick(d.two_morphisms, a.first, "two-morphism"),
                                           pick(d.two_morphisms, a.second, "two-morphism"), G.bound);
    } else {
        v = check_functoriality_2_unit(morphism_from_flags(a.V.empty() ? "a^2" : a.V, a.x, a.y, a.a), G.bound);
    }
    r.json["ok"] = v.ok;
    r.json["lhs"] = hilbert_pair(v.lhs);
    r.json["rhs"] = hilbert_pair(v.rhs);
    r.text << doc::hilbert_table(v.lhs, "lhs") << doc::hilbert_table(v.rhs, "rhs") << (v.ok ? "agree\n" : "DIFFER\n");
    if (!v.detail.empty()) r.text << v.detail << "\n";
    r.ok = v.ok;
}

// ---- tft --------------------------------------------------------------------

struct TftArgs {
    std::string algebra, name;
    int t = -1;
    int g = 1;
};

bool is_polynomial(const SemifreeCDGA& A)
{
    return A.step().zero && A.signature()->odd_count() == 0;
}

void tft_circle(const TftArgs& a, Report& r)
{
    auto A = algebra_arg(a.algebra, a.name, a.t);
    try {
        auto c = z_circle(A, G.bound);
        r.json["agree"] = true;
        r.json["hilbert"] = hilbert_pair(c.via_spans);
        r.text << doc::hilbert_table(c.via_spans, "Z(S^1), spans") << doc::hilbert_table(c.via_hochschild, "HH(A)")
               << "agree\n";
    } catch (const std::runtime_error& e) {
        r.json["agree"] = false;
        r.json["detail"] = e.what();
        r.text << e.what() << "\n";
        r.ok = false;
    }
}

void tft_sphere(const TftArgs& a, Report& r, bool verdict_only)
{
    auto A = algebra_arg(a.algebra, a.name, a.t);
    auto v = three_dual_check(A, G.bound);
    const auto& s = v.sphere;
    r.json["census"] = {{"even", s.even_generators}, {"odd", s.odd_generators}};
    r.json["zero_differential"] = s.zero_differential;
    r.json["model"] = doc::cdga_json(s.value.model);
    r.json["hilbert"] = hilbert_pair(s.value.hilbert);
    r.json["verdict"] = v.verdict;
    r.text << "A (x)_HH(A) A = " << s.value.model.str() << "\ncensus: " << s.even_generators << " even, "
           << s.odd_generators << " odd, differential " << (s.zero_differential ? "zero" : "nonzero") << "\n"
           << doc::hilbert_table(s.value.hilbert) << "verdict: " << v.verdict << "\n";
    if (is_polynomial(A)) {
        int t = static_cast<int>(A.signature()->even_count());
        bool verdict_claim = v.extendable == (t == 0);
        bool census_claim = s.even_generators == 2 * t && s.odd_generators == 2 * t && s.zero_differential;
        r.json["claims"] = {{"census_2t_2t", census_claim}, {"extendable_iff_t_zero", verdict_claim}};
        r.text << "claim census (" << 2 * t << "," << 2 * t << "): " << (census_claim ? "holds" : "FAILS")
               << "\nclaim extendable iff t = 0: " << (verdict_claim ? "holds" : "FAILS") << "\n";
        r.ok = verdict_claim && (verdict_only || census_claim);
    }
}

void tft_genus(const TftArgs& a, Report& r)
{
    auto A = algebra_arg(a.algebra, a.name, a.t);
    auto ltr = z_genus(A, a.g, G.bound, Assembly::LeftToRight);
    auto rtl = z_genus(A, a.g, G.bound, Assembly::RightToLeft);
    bool same = same_h(ltr.hilbert, rtl.hilbert);
    r.json["g"] = a.g;
    r.json["hilbert"] = hilbert_pair(ltr.hilbert);
    r.json["order_invariant"] = same;
    r.text << doc::hilbert_table(ltr.hilbert, "Z(Sigma_" + std::to_string(a.g) + ")")
           << "assembly order invariant: " << (same ? "yes" : "NO") << "\n";
    r.ok = same;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"lgmf: exact computations with matrix factorizations and shifted symplectic spans"};
    app.require_subcommand(1);
    app.add_option("--bound", G.bound, "Largest weight computed")->check(CLI::NonNegativeNumber);
    app.add_option("--order", G.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
    app.add_option("--json", G.json_out, "Write the JSON report here ('-' for stdout)");
    app.add_option("--threads", G.threads, "Worker threads for batch verbs")->check(CLI::PositiveNumber);
    app.add_option("--doc", G.doc_path, "Work document (JSON)");

    Report rep;
    std::function<void()> action;
    std::string verb;

    auto* poly = app.add_subcommand("poly", "Groebner bases and normal forms");
    poly->require_subcommand(1);
    static PolyArgs pa;
    for (auto [name, help] : {std::pair{"groebner", "Reduced Groebner basis"}, std::pair{"nf", "Normal form of --p"},
                              std::pair{"hilbert", "Hilbert function of the quotient"}}) {
        auto* s = poly->add_subcommand(name, help);
        s->add_option("--vars", pa.vars, "Comma separated variables (default: as they appear)");
        s->add_option("--weights", pa.weights, "Comma separated weights");
        s->add_option("--gens", pa.gens, "Ideal generators separated by ';'")->required();
        if (std::string(name) == "nf") s->add_option("--p", pa.p, "Polynomial to reduce")->required();
        std::string n = name;
        s->callback([&, n] {
            verb = "poly " + n;
            if (n == "groebner") action = [&] { poly_groebner(pa, rep); };
            if (n == "nf") action = [&] { poly_nf(pa, rep); };
            if (n == "hilbert") action = [&] { poly_hilbert(pa, rep); };
        });
    }

    auto* mf = app.add_subcommand("mf", "Matrix factorizations");
    mf->require_subcommand(1);
    static std::string mf_name, mf_V, mf_a;
    auto* mfv = mf->add_subcommand("verify", "Check d^2 = V id (built-in corpus without --doc)");
    mfv->add_option("--name", mf_name);
    mfv->callback([&] { verb = "mf verify"; action = [&] { mf_verify(mf_name, rep); }; });
    auto* mfe = mf->add_subcommand("end", "End cohomology of a document factorization");
    mfe->add_option("--name", mf_name)->required();
    mfe->callback([&] { verb = "mf end"; action = [&] { mf_end(mf_name, rep); }; });
    auto* mfu = mf->add_subcommand("unit", "The unit factorization I_(a,V)");
    mfu->add_option("--V", mf_V)->required();
    mfu->add_option("--a", mf_a, "Extras (default: all variables of V)");
    mfu->callback([&] { verb = "mf unit"; action = [&] { mf_unit(mf_V, mf_a, rep); }; });

    auto* bicat = app.add_subcommand("bicat", "The bicategory of Landau-Ginzburg models");
    bicat->require_subcommand(1);
    static std::string bf, bg, bname;
    auto* bc = bicat->add_subcommand("compose", "Horizontal composite of two document morphisms");
    bc->add_option("--f", bf)->required();
    bc->add_option("--g", bg)->required();
    bc->callback([&] { verb = "bicat compose"; action = [&] { bicat_compose(bf, bg, rep); }; });
    auto* bu = bicat->add_subcommand("unit-law", "Unit laws at cohomology level (Koszul corpus without --doc)");
    bu->add_option("--name", bname);
    bu->callback([&] { verb = "bicat unit-law"; action = [&] { bicat_unit_law(bname, rep); }; });

    auto* crw = app.add_subcommand("crw", "Lagrangian spans of affine symplectic stacks");
    crw->require_subcommand(1);
    static std::string calg, cstack, cfirst, csecond;
    auto* cs = crw->add_subcommand("serre", "Serre composite against the identity");
    cs->add_option("--algebra", calg, "K, Kx or Kxp");
    cs->add_option("--stack", cstack, "Stack from --doc");
    cs->callback([&] { verb = "crw serre"; action = [&] { crw_serre(calg, cstack, rep); }; });
    auto* cc = crw->add_subcommand("compose", "Compose two document spans");
    cc->add_option("--first", cfirst)->required();
    cc->add_option("--second", csecond)->required();
    cc->callback([&] { verb = "crw compose"; action = [&] { crw_compose(cfirst, csecond, rep); }; });

    auto* e = app.add_subcommand("e", "The functor from LG models to spans");
    e->require_subcommand(1);
    static EArgs ea;
    auto eflags = [&](CLI::App* s, bool need_V) {
        auto* o = s->add_option("--V", ea.V, "Potential");
        if (need_V) o->required();
        s->add_option("--x", ea.x, "Source variables");
        s->add_option("--y", ea.y, "Target variables");
        s->add_option("--a", ea.a, "Extras (default: the remaining variables of V)");
    };
    auto* eo = e->add_subcommand("object", "e(x) = K[x, p_x]");
    eo->add_option("--x", ea.x)->required();
    eo->callback([&] { verb = "e object"; action = [&] { e_object_verb(ea, rep); }; });
    auto* e1 = e->add_subcommand("one", "e(a, V) as a span");
    eflags(e1, true);
    e1->callback([&] { verb = "e one"; action = [&] { e_one_verb(ea, rep); }; });
    auto* e2 = e->add_subcommand("two", "e on a 2-morphism (--name from --doc, else the unit of --V)");
    eflags(e2, false);
    e2->add_option("--name", ea.name);
    e2->callback([&] { verb = "e two"; action = [&] { e_two_verb(ea, rep); }; });
    auto* ez = e->add_subcommand("zigzag", "R_(a,V) -> End(I)[beta] <- End(I)");
    eflags(ez, true);
    ez->callback([&] { verb = "e zigzag"; action = [&] { e_zigzag_verb(ea, rep); }; });
    auto* ef1 = e->add_subcommand("funct1", "e on composites, products and identities");
    ef1->add_option("--V", ea.V, "First potential (default x*y)");
    ef1->add_option("--W", ea.W, "Second potential (default y*z)");
    ef1->add_option("--x", ea.x);
    ef1->add_option("--y", ea.y);
    ef1->add_option("--z", ea.z);
    ef1->callback([&] { verb = "e funct1"; action = [&] { e_funct1_verb(ea, rep); }; });
    auto* ef2 = e->add_subcommand("funct2", "Unit clause for --V, vertical clause for --first/--second");
    eflags(ef2, false);
    ef2->add_option("--first", ea.first);
    ef2->add_option("--second", ea.second);
    ef2->callback([&] { verb = "e funct2"; action = [&] { e_funct2_verb(ea, rep); }; });

    auto* tft = app.add_subcommand("tft", "Values of the 2d theory");
    tft->require_subcommand(1);
    static TftArgs ta;
    for (auto [name, help] : {std::pair{"circle", "Z(S^1) two ways"}, std::pair{"sphere", "Z(S^2) and its census"},
                              std::pair{"genus", "Z(Sigma_g) in both assembly orders"},
                              std::pair{"three", "Extension to three dimensions"}}) {
        auto* s = tft->add_subcommand(name, help);
        s->add_option("--algebra", ta.algebra, "K, Kx, Kxp or a cdga JSON file");
        s->add_option("--name", ta.name, "cdga from --doc");
        s->add_option("--t", ta.t, "Use K[x1..xt]")->check(CLI::NonNegativeNumber);
        if (std::string(name) == "genus") s->add_option("--g", ta.g, "Genus")->check(CLI::NonNegativeNumber);
        std::string n = name;
        s->callback([&, n] {
            verb = "tft " + n;
            if (n == "circle") action = [&] { tft_circle(ta, rep); };
            if (n == "sphere") action = [&] { tft_sphere(ta, rep, false); };
            if (n == "genus") action = [&] { tft_genus(ta, rep); };
            if (n == "three") action = [&] { tft_sphere(ta, rep, true); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        action();
    } catch (const doc::DocumentError& err) {
        for (const auto& l : err.errors()) std::cerr << "error: " << l.str() << "\n";
        return 2;
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }

    Json out;
    out["command"] = verb;
    out["bound"] = G.bound;
    out["ok"] = rep.ok;
    out["report"] = rep.json;
    std::cout << rep.text.str();
    if (G.json_out == "-") {
        std::cout << out.dump(2) << "\n";
    } else if (!G.json_out.empty()) {
        std::ofstream f(G.json_out);
        if (!f) {
            std::cerr << "error: cannot write " << G.json_out << "\n";
            return 2;
        }
        f << out.dump(2) << "\n";
    }
    return rep.ok ? 0 : 1;
}
