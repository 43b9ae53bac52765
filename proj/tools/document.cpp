#include "document.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "lgmf/expr.hpp"

namespace lgmf::doc {

std::string Located::str() const
{
    std::ostringstream os;
    if (line) os << "line " << line << ", column " << column << ": ";
    if (!where.empty()) os << where << ": ";
    os << message;
    return os.str();
}

namespace {

std::string join_messages(const std::vector<Located>& errors)
{
    std::string out;
    for (const auto& e : errors) out += (out.empty() ? "" : "\n") + e.str();
    return out;
}

[[noreturn]] void fail(const std::string& where, const std::string& message)
{
    throw DocumentError({Located{where, 0, 0, message}});
}

std::string escape(const std::string& key)
{
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string text_of(const Json& j, const std::string& where)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    fail(where, "expected an expression string");
}

std::vector<std::string> names_of(const Json& j, const std::string& where)
{
    if (!j.is_array()) fail(where, "expected an array of names");
    std::vector<std::string> out;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) fail(where + "/" + std::to_string(i), "expected a name");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

std::vector<int> weights_of(const Json& j, const std::string& where)
{
    if (!j.is_array()) fail(where, "expected an array of weights");
    std::vector<int> out;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) fail(where + "/" + std::to_string(i), "expected an integer weight");
        out.push_back(j[i].get<int>());
    }
    return out;
}

Polynomial poly_at(const Json& j, const VarTablePtr& T, const std::string& where)
{
    auto text = text_of(j, where);
    try {
        return parse_polynomial(text, T);
    } catch (const std::exception& e) {
        fail(where, std::string(e.what()) + " in \"" + text + "\"");
    }
}

GradedElement graded_at(const Json& j, const SignaturePtr& sig, const std::string& where)
{
    auto text = text_of(j, where);
    try {
        return parse_graded(text, sig);
    } catch (const std::exception& e) {
        fail(where, std::string(e.what()) + " in \"" + text + "\"");
    }
}

PolyMatrix matrix_at(const Json& j, const VarTablePtr& T, size_t rows, size_t cols, const std::string& where)
{
    if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
    PolyMatrix M(T, rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        auto rw = where + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols) fail(rw, "expected " + std::to_string(cols) + " entries");
        for (size_t c = 0; c < cols; ++c) M(r, c) = poly_at(j[r][c], T, rw + "/" + std::to_string(c));
    }
    return M;
}

MFObject object_at(const Json& j, const std::string& where)
{
    MFObject x;
    if (j.is_array()) {
        x.vars = names_of(j, where);
    } else {
        x.vars = names_of(field(j, "vars", where), where + "/vars");
        if (j.contains("weights")) x.weights = weights_of(j["weights"], where + "/weights");
        if (!x.weights.empty() && x.weights.size() != x.vars.size()) fail(where, "weights and vars differ in length");
    }
    return x;
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const Json& j, const char* kind, const std::string& where)
{
    if (!j.is_string()) fail(where, std::string("expected the name of a ") + kind);
    auto it = m.find(j.get<std::string>());
    if (it == m.end()) fail(where, std::string("undefined ") + kind + " '" + j.get<std::string>() + "'");
    return it->second;
}

void check_mf(const MatrixFactorization& M, const std::string& where)
{
    auto v = verify_mf(M);
    if (!v.ok) {
        std::ostringstream os;
        os << "d^2 != V: ";
        if (!v.detail.empty()) os << v.detail;
        else os << (v.block == 0 ? "d1*d0" : "d0*d1") << " entry (" << v.row << "," << v.col << ")";
        fail(where, os.str());
    }
}

MatrixFactorization mf_on(const Json& j, const VarTablePtr& T, const std::string& where)
{
    MatrixFactorization M;
    M.table = T;
    M.potential = poly_at(field(j, "potential", where), T, where + "/potential");
    const auto& d0 = field(j, "d0", where);
    const auto& d1 = field(j, "d1", where);
    if (!d0.is_array() || !d1.is_array()) fail(where, "d0 and d1 must be matrices");
    M.r1 = d0.size();
    M.r0 = d1.size();
    M.d0 = matrix_at(d0, T, M.r1, M.r0, where + "/d0");
    M.d1 = matrix_at(d1, T, M.r0, M.r1, where + "/d1");
    return M;
}

}  // namespace

DocumentError::DocumentError(std::vector<Located> errors)
    : std::runtime_error(join_messages(errors)), errors_(std::move(errors))
{
}

std::pair<size_t, size_t> line_column(std::string_view text, size_t offset)
{
    size_t line = 1, col = 1;
    for (size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Json rational_json(const Rational& q) { return to_fraction_string(q); }

Json hilbert_json(const HilbertFunction& h)
{
    Json j;
    j["min_weight"] = h.min_weight;
    j["even"] = h.even;
    j["odd"] = h.odd;
    j["trusted_upto"] = h.trusted_upto;
    if (h.weight_scale != 1) j["weight_scale"] = h.weight_scale;
    return j;
}

Json cdga_json(const SemifreeCDGA& A)
{
    Json j;
    j["even"] = Json::array();
    j["odd"] = Json::array();
    j["d"] = Json::object();
    const auto& sig = *A.signature();
    for (size_t i = 0; i < sig.size(); ++i) {
        const auto& v = sig.var(i);
        j[v.parity == Parity::Even ? "even" : "odd"].push_back({{"name", v.name}, {"weight", v.weight}});
        if (!A.d_of(i).is_zero()) j["d"][v.name] = A.d_of(i).str();
    }
    return j;
}

SemifreeCDGA cdga_from_json(const Json& j, const std::string& where)
{
    if (!j.is_object()) fail(where, "expected a cdga object");
    std::vector<GradedVar> vars;
    for (auto [key, parity] : {std::pair{"even", Parity::Even}, std::pair{"odd", Parity::Odd}}) {
        if (!j.contains(key)) continue;
        const auto& list = j[key];
        auto lw = where + "/" + key;
        if (!list.is_array()) fail(lw, "expected an array");
        for (size_t i = 0; i < list.size(); ++i) {
            auto iw = lw + "/" + std::to_string(i);
            const auto& g = list[i];
            GradedVar v;
            v.parity = parity;
            if (g.is_string()) {
                v.name = g.get<std::string>();
            } else {
                const auto& n = field(g, "name", iw);
                if (!n.is_string()) fail(iw + "/name", "expected a name");
                v.name = n.get<std::string>();
                if (g.contains("weight")) {
                    if (!g["weight"].is_number_integer()) fail(iw + "/weight", "expected an integer weight");
                    v.weight = g["weight"].get<int>();
                }
            }
            vars.push_back(v);
        }
    }
    SignaturePtr sig;
    try {
        sig = make_signature(vars);
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
    std::vector<GradedElement> d(sig->size(), GradedElement(sig));
    if (j.contains("d")) {
        const auto& dj = j["d"];
        if (!dj.is_object()) fail(where + "/d", "expected an object of differentials");
        for (const auto& [gname, expr] : dj.items()) {
            auto dw = where + "/d/" + escape(gname);
            auto idx = sig->find(gname);
            if (!idx) fail(dw, "undefined generator '" + gname + "'");
            d[*idx] = graded_at(expr, sig, dw);
        }
    }
    SemifreeCDGA A(sig, d);
    if (auto bad = A.check()) fail(where, "d^2 != 0 or wrong parity at generator '" + *bad + "'");
    return A;
}

Json mf_json(const MatrixFactorization& M, const MonomialOrder& order)
{
    Json j;
    j["vars"] = M.table->names();
    j["weights"] = M.table->weights();
    j["potential"] = M.potential.str(order);
    auto mat = [&](const PolyMatrix& P) {
        Json rows = Json::array();
        for (size_t r = 0; r < P.rows(); ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < P.cols(); ++c) row.push_back(P(r, c).str(order));
            rows.push_back(row);
        }
        return rows;
    };
    j["d0"] = mat(M.d0);
    j["d1"] = mat(M.d1);
    return j;
}

MatrixFactorization mf_from_json(const Json& j, const std::string& where)
{
    auto vars = names_of(field(j, "vars", where), where + "/vars");
    std::vector<int> weights;
    if (j.contains("weights")) weights = weights_of(j["weights"], where + "/weights");
    VarTablePtr T;
    try {
        T = make_table(vars, weights);
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
    auto M = mf_on(j, T, where);
    check_mf(M, where);
    return M;
}

WorkDocument parse_document_text(std::string_view text)
{
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw DocumentError({Located{"", line, col, pos == std::string::npos ? msg : msg.substr(pos)}});
    }
    if (!root.is_object()) fail("", "document must be a JSON object");

    static const std::vector<std::string> sections = {"rings",     "polynomials",   "cdgas",  "mfs",
                                                      "morphisms", "two_morphisms", "stacks", "spans"};
    for (const auto& [key, _] : root.items())
        if (std::find(sections.begin(), sections.end(), key) == sections.end())
            fail("/" + escape(key), "unknown section");

    WorkDocument d;
    auto each = [&](const char* section, auto&& fn) {
        if (!root.contains(section)) return;
        const auto& s = root[section];
        auto sw = std::string("/") + section;
        if (!s.is_object()) fail(sw, "expected an object of named entries");
        for (const auto& [name, val] : s.items()) fn(name, val, sw + "/" + escape(name));
    };

    each("rings", [&](const std::string& name, const Json& j, const std::string& w) {
        auto x = object_at(j, w);
        try {
            d.rings[name] = make_table(x.vars, x.weights);
        } catch (const std::exception& e) {
            fail(w, e.what());
        }
    });
    each("polynomials", [&](const std::string& name, const Json& j, const std::string& w) {
        const auto& T = lookup(d.rings, field(j, "ring", w), "ring", w + "/ring");
        d.polynomials.emplace(name, poly_at(field(j, "expr", w), T, w + "/expr"));
    });
    each("cdgas", [&](const std::string& name, const Json& j, const std::string& w) {
        d.cdgas.emplace(name, cdga_from_json(j, w));
    });
    each("mfs", [&](const std::string& name, const Json& j, const std::string& w) {
        if (j.contains("ring")) {
            const auto& T = lookup(d.rings, j["ring"], "ring", w + "/ring");
            auto M = mf_on(j, T, w);
            check_mf(M, w);
            d.mfs.emplace(name, M);
        } else {
            d.mfs.emplace(name, mf_from_json(j, w));
        }
    });
    each("morphisms", [&](const std::string& name, const Json& j, const std::string& w) {
        auto src = object_at(field(j, "source", w), w + "/source");
        auto tgt = object_at(field(j, "target", w), w + "/target");
        std::vector<std::string> extras;
        std::vector<int> ew;
        if (j.contains("extras")) extras = names_of(j["extras"], w + "/extras");
        if (j.contains("extra_weights")) ew = weights_of(j["extra_weights"], w + "/extra_weights");
        auto V = text_of(field(j, "potential", w), w + "/potential");
        try {
            d.morphisms.emplace(name, make_one_morphism(src, tgt, extras, V, ew));
        } catch (const std::exception& e) {
            fail(w, e.what());
        }
    });
    each("two_morphisms", [&](const std::string& name, const Json& j, const std::string& w) {
        MFTwoMorphism M;
        M.source = lookup(d.morphisms, field(j, "source", w), "morphism", w + "/source");
        M.target = lookup(d.morphisms, field(j, "target", w), "morphism", w + "/target");
        const auto& mj = field(j, "mf", w);
        MatrixFactorization rep = mj.is_string() ? lookup(d.mfs, mj, "mf", w + "/mf") : mf_from_json(mj, w + "/mf");
        VarTablePtr T;
        try {
            T = merge_tables({M.source.potential.table(), M.target.potential.table(), rep.table});
        } catch (const std::exception& e) {
            fail(w, e.what());
        }
        M.rep = rebase_mf(rep, T);
        auto want = M.target.potential.rebase(T) - M.source.potential.rebase(T);
        if (!(M.rep.potential == want))
            fail(w + "/mf", "potential " + M.rep.potential.str() + " is not W - V = " + want.str());
        d.two_morphisms.emplace(name, M);
    });
    each("stacks", [&](const std::string& name, const Json& j, const std::string& w) {
        if (j.contains("cotangent")) {
            d.stacks.emplace(name, cotangent_stack(names_of(j["cotangent"], w + "/cotangent")));
            return;
        }
        const auto& A = lookup(d.cdgas, field(j, "cdga", w), "cdga", w + "/cdga");
        std::vector<std::tuple<std::string, std::string, Rational>> form;
        if (j.contains("form")) {
            const auto& fj = j["form"];
            if (!fj.is_array()) fail(w + "/form", "expected [u, v, coefficient] triples");
            for (size_t i = 0; i < fj.size(); ++i) {
                auto iw = w + "/form/" + std::to_string(i);
                const auto& t = fj[i];
                if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string())
                    fail(iw, "expected [u, v, coefficient]");
                Rational c;
                try {
                    c = parse_rational(text_of(t[2], iw + "/2"));
                } catch (const std::exception& e) {
                    fail(iw + "/2", e.what());
                }
                form.emplace_back(t[0].get<std::string>(), t[1].get<std::string>(), c);
            }
        }
        int sign = j.value("sign", 1);
        try {
            d.stacks.emplace(name, make_stack(A, form, sign));
        } catch (const std::exception& e) {
            fail(w, e.what());
        }
    });
    each("spans", [&](const std::string& name, const Json& j, const std::string& w) {
        LagSpan S;
        S.left = lookup(d.stacks, field(j, "left", w), "stack", w + "/left");
        S.right = lookup(d.stacks, field(j, "right", w), "stack", w + "/right");
        S.apex = lookup(d.cdgas, field(j, "apex", w), "cdga", w + "/apex");
        auto leg = [&](const char* key, const SemifreeCDGA& from) {
            auto lw = w + "/" + key;
            const auto& lj = field(j, key, w);
            if (!lj.is_object()) fail(lw, "expected generator images");
            std::map<std::string, GradedElement> images;
            for (const auto& [g, e] : lj.items()) {
                if (!from.signature()->contains(g)) fail(lw + "/" + escape(g), "undefined generator '" + g + "'");
                images.emplace(g, graded_at(e, S.apex.signature(), lw + "/" + escape(g)));
            }
            auto f = CDGAMap::by_name(from, S.apex, images);
            if (auto bad = f.chain_map_failure()) fail(lw, "not a chain map at '" + *bad + "'");
            return f;
        };
        S.left_leg = leg("left_leg", S.left.algebra);
        S.right_leg = leg("right_leg", S.right.algebra);
        S.trusted_upto = std::numeric_limits<int>::max() / 4;
        d.spans.emplace(name, S);
    });
    return d;
}

WorkDocument parse_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document_text(ss.str());
}

std::string hilbert_table(const HilbertFunction& h, const std::string& title)
{
    std::ostringstream os;
    if (!title.empty()) os << title << "\n";
    os << std::setw(8) << "weight" << std::setw(10) << "even" << std::setw(10) << "odd" << "\n";
    for (int w = h.min_weight; w <= std::min(h.max_weight(), h.trusted_upto); ++w)
        os << std::setw(8) << w << std::setw(10) << h.at(w, Parity::Even) << std::setw(10) << h.at(w, Parity::Odd)
           << "\n";
    return os.str();
}

}  // namespace lgmf::doc
