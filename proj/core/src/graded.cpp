#include "lgmf/graded.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "lgmf/expr.hpp"

namespace lgmf {

Signature::Signature(std::vector<GradedVar> vars) : vars_(std::move(vars))
{
    std::vector<std::string> names;
    std::vector<int> weights;
    for (size_t i = 0; i < vars_.size(); ++i) {
        const auto& v = vars_[i];
        if (!index_.emplace(v.name, i).second) throw std::invalid_argument("duplicate generator '" + v.name + "'");
        if (v.parity == Parity::Even) {
            if (v.weight <= 0)
                throw std::invalid_argument("even generator '" + v.name + "' needs a positive weight");
            slot_.push_back(even_.size());
            even_.push_back(i);
            names.push_back(v.name);
            weights.push_back(v.weight);
        } else {
            slot_.push_back(odd_.size());
            odd_.push_back(i);
        }
    }
    if (odd_.size() > 64) throw std::invalid_argument("more than 64 odd generators");
    even_table_ = make_table(std::move(names), std::move(weights));
}

std::optional<size_t> Signature::find(std::string_view name) const
{
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

size_t Signature::index_of(std::string_view name) const
{
    auto i = find(name);
    if (!i) throw UnknownVariable(std::string(name));
    return *i;
}

bool Signature::operator==(const Signature& o) const
{
    if (vars_.size() != o.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i) {
        const auto& a = vars_[i];
        const auto& b = o.vars_[i];
        if (a.name != b.name || a.parity != b.parity || a.weight != b.weight) return false;
    }
    return true;
}

SignaturePtr make_signature(std::vector<GradedVar> vars)
{
    return std::make_shared<const Signature>(std::move(vars));
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Parity parity_of(const GMonomial& m) { return std::popcount(m.odd) % 2 ? Parity::Odd : Parity::Even; }

int weight_of(const GMonomial& m, const Signature& sig)
{
    int w = 0;
    for (size_t k = 0; k < m.even.size(); ++k) w += m.even[k] * sig.var(sig.even_var(k)).weight;
    for (std::uint64_t bits = m.odd; bits; bits &= bits - 1)
        w += sig.var(sig.odd_var(static_cast<size_t>(std::countr_zero(bits)))).weight;
    return w;
}

int odd_product_sign(std::uint64_t a, std::uint64_t b)
{
    int inversions = 0;
    for (std::uint64_t bits = b; bits; bits &= bits - 1) {
        int j = std::countr_zero(bits);
        std::uint64_t above = j == 63 ? 0 : (a >> (j + 1));
        inversions += std::popcount(above);
    }
    return inversions % 2 ? -1 : 1;
}

GradedElement::GradedElement(SignaturePtr sig) : sig_(std::move(sig)) {}

GradedElement::GradedElement(SignaturePtr sig, const Rational& c) : sig_(std::move(sig))
{
    if (c != 0) terms_.emplace(GMonomial{Exponents(sig_ ? sig_->even_count() : 0, 0), 0}, c);
}

GradedElement GradedElement::generator(SignaturePtr sig, std::string_view name)
{
    size_t i = sig->index_of(name);
    return generator(std::move(sig), i);
}

GradedElement GradedElement::generator(SignaturePtr sig, size_t i)
{
    GMonomial m{Exponents(sig->even_count(), 0), 0};
    if (sig->var(i).parity == Parity::Even) m.even[sig->slot(i)] = 1;
    else m.odd = std::uint64_t{1} << sig->slot(i);
    return monomial(std::move(sig), std::move(m));
}

GradedElement GradedElement::monomial(SignaturePtr sig, GMonomial m, const Rational& c)
{
    GradedElement e(std::move(sig));
    if (c != 0) e.terms_.emplace(std::move(m), c);
    return e;
}

GradedElement GradedElement::from_polynomial(SignaturePtr sig, const Polynomial& p)
{
    GradedElement out(sig);
    if (p.is_zero()) return out;
    const auto& t = *p.table();
    std::vector<size_t> slot(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        size_t v = sig->index_of(t.name(i));
        if (sig->var(v).parity != Parity::Even)
            throw std::invalid_argument("polynomial variable '" + t.name(i) + "' is odd in the target");
        slot[i] = sig->slot(v);
    }
    GMonomial m{Exponents(sig->even_count(), 0), 0};
    for (const auto& [e, c] : p.terms()) {
        std::fill(m.even.begin(), m.even.end(), 0);
        for (size_t i = 0; i < e.size(); ++i) m.even[slot[i]] += e[i];
        out.add_term(m, c);
    }
    return out;
}

bool GradedElement::is_constant() const
{
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& m = terms_.begin()->first;
    return m.odd == 0 && std::all_of(m.even.begin(), m.even.end(), [](int x) { return x == 0; });
}

Rational GradedElement::constant_term() const
{
    if (terms_.empty()) return 0;
    return coefficient(GMonomial{Exponents(sig_->even_count(), 0), 0});
}

Rational GradedElement::coefficient(const GMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Parity> GradedElement::parity() const
{
    std::optional<Parity> p;
    for (const auto& [m, c] : terms_) {
        Parity q = parity_of(m);
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    return p;
}

bool GradedElement::is_even_polynomial() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.odd == 0; });
}

Polynomial GradedElement::to_polynomial() const
{
    if (!is_even_polynomial()) throw std::invalid_argument("element has odd generators: " + str());
    Polynomial p(sig_ ? sig_->even_table() : VarTablePtr());
    for (const auto& [m, c] : terms_) p.add_term(m.even, c);
    return p;
}

bool GradedElement::weight_range(int& lo, int& hi) const
{
    lo = hi = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int w = weight_of(m, *sig_);
        if (first) lo = hi = w;
        lo = std::min(lo, w);
        hi = std::max(hi, w);
        first = false;
    }
    return !first;
}

void GradedElement::add_term(const GMonomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void GradedElement::adopt(const GradedElement& o)
{
    if (!o.sig_) return;
    if (!sig_) {
        sig_ = o.sig_;
        if (!terms_.empty()) {
            Rational c = terms_.begin()->second;
            terms_.clear();
            terms_.emplace(GMonomial{Exponents(sig_->even_count(), 0), 0}, c);
        }
        return;
    }
    if (!same_signature(sig_, o.sig_)) throw TableMismatch("graded elements over different algebras");
}

GradedElement& GradedElement::operator+=(const GradedElement& o)
{
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o)
{
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedElement& GradedElement::operator*=(const Rational& c)
{
    if (c == 0) terms_.clear();
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b)
{
    if (a.is_zero() || b.is_zero()) return GradedElement(a.sig_ ? a.sig_ : b.sig_);
    if (!a.sig_ || !b.sig_) {
        GradedElement x = a, y = b;
        x.adopt(y);
        y.adopt(x);
        return x * y;
    }
    if (!same_signature(a.sig_, b.sig_)) throw TableMismatch("graded elements over different algebras");
    GradedElement out(a.sig_);
    GMonomial m;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.odd & mb.odd) continue;
            m.even = ma.even;
            for (size_t i = 0; i < m.even.size(); ++i) m.even[i] += mb.even[i];
            m.odd = ma.odd | mb.odd;
            Rational c = ca * cb;
            if (odd_product_sign(ma.odd, mb.odd) < 0) c = -c;
            out.add_term(m, c);
        }
    }
    return out;
}

GradedElement GradedElement::operator-() const
{
    GradedElement out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

bool GradedElement::operator==(const GradedElement& o) const
{
    if (terms_.empty() && o.terms_.empty()) return true;
    if (sig_ && o.sig_ && !same_signature(sig_, o.sig_)) return false;
    return terms_ == o.terms_;
}

GradedElement GradedElement::truncate_above(int w) const
{
    GradedElement out(sig_);
    for (const auto& [m, c] : terms_)
        if (weight_of(m, *sig_) <= w) out.terms_.emplace(m, c);
    return out;
}

GradedElement GradedElement::rebase(const SignaturePtr& target, const std::map<std::string, std::string>& rename) const
{
    GradedElement out(target);
    if (terms_.empty()) return out;
    const auto& sig = *sig_;
    std::vector<GradedElement> images(sig.size());
    for (size_t i = 0; i < sig.size(); ++i) {
        std::string n = sig.var(i).name;
        if (auto it = rename.find(n); it != rename.end()) n = it->second;
        if (auto j = target->find(n)) images[i] = generator(target, *j);
    }
    for (const auto& [m, c] : terms_) {
        GradedElement t(target, c);
        for (size_t k = 0; k < m.even.size(); ++k) {
            if (!m.even[k]) continue;
            const auto& img = images[sig.even_var(k)];
            if (img.is_zero()) throw UnknownVariable(sig.var(sig.even_var(k)).name);
            for (int r = 0; r < m.even[k]; ++r) t = t * img;
        }
        for (std::uint64_t bits = m.odd; bits; bits &= bits - 1) {
            size_t v = sig.odd_var(static_cast<size_t>(std::countr_zero(bits)));
            if (images[v].is_zero()) throw UnknownVariable(sig.var(v).name);
            t = t * images[v];
        }
        out += t;
    }
    return out;
}

std::string GradedElement::str() const
{
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> items;
    for (const auto& t : terms_) items.push_back(&t);
    std::stable_sort(items.begin(), items.end(), [&](auto* a, auto* b) {
        int wa = weight_of(a->first, *sig_), wb = weight_of(b->first, *sig_);
        if (wa != wb) return wa > wb;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : items) {
        Rational c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::vector<std::string> f;
        const auto& m = t->first;
        for (size_t k = 0; k < m.even.size(); ++k) {
            if (!m.even[k]) continue;
            const auto& n = sig_->var(sig_->even_var(k)).name;
            f.push_back(m.even[k] == 1 ? n : n + "^" + std::to_string(m.even[k]));
        }
        for (std::uint64_t bits = m.odd; bits; bits &= bits - 1)
            f.push_back(sig_->var(sig_->odd_var(static_cast<size_t>(std::countr_zero(bits)))).name);
        if (f.empty()) {
            os << to_string(c);
            continue;
        }
        if (c != 1) os << to_string(c) << "*";
        for (size_t i = 0; i < f.size(); ++i) os << (i ? "*" : "") << f[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedElement& e) { return os << e.str(); }

GradedElement parse_graded(std::string_view text, const SignaturePtr& sig)
{
    auto tree = parse_expr(text);
    return eval_expr<GradedElement>(*tree, [&](const Expr& leaf) {
        if (leaf.kind == Expr::Kind::Number) return GradedElement(sig, leaf.value);
        if (!sig->contains(leaf.name)) throw UnknownVariable(leaf.name);
        return GradedElement::generator(sig, leaf.name);
    });
}

NameSupply::NameSupply(const std::vector<std::string>& taken) : used_(taken.begin(), taken.end()) {}

void NameSupply::reserve(const Signature& sig)
{
    for (const auto& v : sig.vars()) used_.insert(v.name);
}

std::string NameSupply::fresh(const std::string& base)
{
    if (used_.insert(base).second) return base;
    for (;;) {
        std::string n = base + "_g" + std::to_string(++counter_);
        if (used_.insert(n).second) return n;
    }
}

SemifreeCDGA::SemifreeCDGA(SignaturePtr sig, std::vector<GradedElement> d) : sig_(std::move(sig)), d_(std::move(d))
{
    if (d_.size() > sig_->size()) throw std::invalid_argument("more differentials than generators");
    d_.resize(sig_->size(), GradedElement(sig_));
    for (auto& e : d_) {
        if (e.signature() && !same_signature(e.signature(), sig_)) e = e.rebase(sig_);
        if (!e.signature()) e = GradedElement(sig_) + e;
    }
}

SemifreeCDGA SemifreeCDGA::polynomial(const std::vector<std::string>& names, const std::vector<int>& weights)
{
    std::vector<GradedVar> vars;
    for (size_t i = 0; i < names.size(); ++i) vars.push_back({names[i], Parity::Even, weights.empty() ? 1 : weights[i]});
    return SemifreeCDGA(make_signature(std::move(vars)), {});
}

SemifreeCDGA SemifreeCDGA::ground() { return SemifreeCDGA(make_signature({}), {}); }

GradedElement SemifreeCDGA::differential(const GMonomial& m) const
{
    GradedElement out(sig_);
    const auto& sig = *sig_;
    for (size_t k = 0; k < m.even.size(); ++k) {
        if (!m.even[k]) continue;
        const auto& dv = d_[sig.even_var(k)];
        if (dv.is_zero()) continue;
        GMonomial rest = m;
        --rest.even[k];
        out += dv * GradedElement::monomial(sig_, std::move(rest), m.even[k]);
    }
    int pos = 0;
    for (std::uint64_t bits = m.odd; bits; bits &= bits - 1, ++pos) {
        int k = std::countr_zero(bits);
        const auto& dv = d_[sig.odd_var(static_cast<size_t>(k))];
        if (dv.is_zero()) continue;
        GMonomial rest = m;
        rest.odd &= ~(std::uint64_t{1} << k);
        out += dv * GradedElement::monomial(sig_, std::move(rest), pos % 2 ? -1 : 1);
    }
    return out;
}

GradedElement SemifreeCDGA::differential(const GradedElement& e) const
{
    GradedElement out(sig_);
    for (const auto& [m, c] : e.terms()) out += differential(m) * c;
    return out;
}

GradedElement extend_leibniz(const SemifreeCDGA& A, const GradedElement& e) { return A.differential(e); }

std::optional<std::string> SemifreeCDGA::check() const
{
    for (size_t i = 0; i < sig_->size(); ++i) {
        const auto& dv = d_[i];
        if (dv.is_zero()) continue;
        auto p = dv.parity();
        if (!p || *p == sig_->var(i).parity) return sig_->var(i).name;
        if (!differential(dv).is_zero()) return sig_->var(i).name;
    }
    return std::nullopt;
}

StepInfo SemifreeCDGA::step() const
{
    StepInfo s;
    for (size_t i = 0; i < sig_->size(); ++i) {
        for (const auto& [m, c] : d_[i].terms()) {
            int st = weight_of(m, *sig_) - sig_->var(i).weight;
            if (s.zero) s.s_min = s.s_max = st;
            s.s_min = std::min(s.s_min, st);
            s.s_max = std::max(s.s_max, st);
            s.zero = false;
        }
    }
    s.homogeneous = s.s_min == s.s_max;
    return s;
}

SemifreeCDGA SemifreeCDGA::adjoin(const std::vector<GradedVar>& vars, const std::vector<GradedElement>& d) const
{
    auto all = sig_->vars();
    all.insert(all.end(), vars.begin(), vars.end());
    auto sig = make_signature(std::move(all));
    std::vector<GradedElement> nd;
    for (const auto& e : d_) nd.push_back(e.rebase(sig));
    for (size_t i = 0; i < vars.size(); ++i)
        nd.push_back(i < d.size() && d[i].signature() ? d[i].rebase(sig) : GradedElement(sig));
    return SemifreeCDGA(sig, std::move(nd));
}

SemifreeCDGA SemifreeCDGA::adjoin(const std::vector<GradedVar>& vars, const std::vector<std::string>& d) const
{
    auto all = sig_->vars();
    all.insert(all.end(), vars.begin(), vars.end());
    auto sig = make_signature(std::move(all));
    std::vector<GradedElement> nd;
    for (const auto& e : d_) nd.push_back(e.rebase(sig));
    for (size_t i = 0; i < vars.size(); ++i)
        nd.push_back(i < d.size() && !d[i].empty() ? parse_graded(d[i], sig) : GradedElement(sig));
    return SemifreeCDGA(sig, std::move(nd));
}

std::string SemifreeCDGA::str() const
{
    std::ostringstream os;
    os << "K[";
    bool first = true;
    for (const auto& v : sig_->vars()) {
        if (v.parity != Parity::Even) continue;
        os << (first ? "" : ",") << v.name;
        first = false;
    }
    os << ";";
    first = true;
    for (const auto& v : sig_->vars()) {
        if (v.parity != Parity::Odd) continue;
        os << (first ? "" : ",") << v.name;
        first = false;
    }
    os << "]";
    for (size_t i = 0; i < sig_->size(); ++i)
        if (!d_[i].is_zero()) os << " d" << sig_->var(i).name << "=" << d_[i].str();
    return os.str();
}

TensorResult tensor_cdga(const SemifreeCDGA& A, const SemifreeCDGA& B, NameSupply* names)
{
    NameSupply local;
    NameSupply& supply = names ? *names : local;
    supply.reserve(*A.signature());
    TensorResult r;
    auto vars = A.signature()->vars();
    for (const auto& v : B.signature()->vars()) {
        GradedVar nv = v;
        bool clash = A.signature()->contains(v.name);
        if (clash) {
            nv.name = supply.fresh(v.name);
            r.right_renames[v.name] = nv.name;
        } else {
            supply.reserve(v.name);
        }
        vars.push_back(nv);
    }
    auto sig = make_signature(std::move(vars));
    std::vector<GradedElement> d;
    for (const auto& e : A.generator_differentials()) d.push_back(e.rebase(sig));
    for (const auto& e : B.generator_differentials()) d.push_back(e.rebase(sig, r.right_renames));
    r.algebra = SemifreeCDGA(sig, std::move(d));
    return r;
}

CDGAMap::CDGAMap(SemifreeCDGA source, SemifreeCDGA target, std::vector<GradedElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (images_.size() != source_.signature()->size())
        throw std::invalid_argument("map needs one image per source generator");
    for (auto& e : images_) {
        if (!e.signature()) e = GradedElement(target_.signature()) + e;
        else if (!same_signature(e.signature(), target_.signature())) e = e.rebase(target_.signature());
    }
}

CDGAMap CDGAMap::by_name(SemifreeCDGA source, SemifreeCDGA target, const std::map<std::string, GradedElement>& images)
{
    const auto& ss = *source.signature();
    std::vector<GradedElement> im;
    for (const auto& [n, e] : images) ss.index_of(n);
    for (size_t i = 0; i < ss.size(); ++i) {
        const auto& n = ss.var(i).name;
        if (auto it = images.find(n); it != images.end()) im.push_back(it->second);
        else if (target.signature()->contains(n)) im.push_back(GradedElement::generator(target.signature(), n));
        else im.push_back(GradedElement(target.signature()));
    }
    return CDGAMap(std::move(source), std::move(target), std::move(im));
}

CDGAMap CDGAMap::by_strings(SemifreeCDGA source, SemifreeCDGA target, const std::map<std::string, std::string>& images)
{
    std::map<std::string, GradedElement> im;
    for (const auto& [n, s] : images) im[n] = parse_graded(s, target.signature());
    return by_name(std::move(source), std::move(target), im);
}

CDGAMap CDGAMap::identity(const SemifreeCDGA& A)
{
    std::vector<GradedElement> im;
    for (size_t i = 0; i < A.signature()->size(); ++i) im.push_back(GradedElement::generator(A.signature(), i));
    return CDGAMap(A, A, std::move(im));
}

GradedElement CDGAMap::apply(const GradedElement& e) const
{
    const auto& tsig = target_.signature();
    GradedElement out(tsig);
    if (e.is_zero()) return out;
    const auto& sig = *source_.signature();
    std::vector<std::vector<GradedElement>> powers(sig.even_count());
    for (const auto& [m, c] : e.terms()) {
        GradedElement t(tsig, c);
        for (size_t k = 0; k < m.even.size(); ++k) {
            if (!m.even[k]) continue;
            auto& pw = powers[k];
            if (pw.empty()) pw.push_back(GradedElement(tsig, 1));
            while (static_cast<int>(pw.size()) <= m.even[k]) pw.push_back(pw.back() * images_[sig.even_var(k)]);
            t = t * pw[m.even[k]];
        }
        for (std::uint64_t bits = m.odd; bits; bits &= bits - 1)
            t = t * images_[sig.odd_var(static_cast<size_t>(std::countr_zero(bits)))];
        out += t;
    }
    return out;
}

std::optional<std::string> CDGAMap::chain_map_failure() const
{
    const auto& sig = *source_.signature();
    for (size_t i = 0; i < sig.size(); ++i) {
        const auto& img = images_[i];
        auto p = img.parity();
        if (!img.is_zero() && (!p || *p != sig.var(i).parity)) return sig.var(i).name;
        if (!(apply(source_.d_of(i)) == target_.differential(img))) return sig.var(i).name;
    }
    return std::nullopt;
}

std::optional<int> CDGAMap::weight_shift() const
{
    const auto& sig = *source_.signature();
    std::optional<int> shift;
    for (size_t i = 0; i < sig.size(); ++i) {
        for (const auto& [m, c] : images_[i].terms()) {
            int s = weight_of(m, *target_.signature()) - sig.var(i).weight;
            if (shift && *shift != s) return std::nullopt;
            shift = s;
        }
    }
    return shift.value_or(0);
}

CDGAMap CDGAMap::then(const CDGAMap& g) const
{
    std::vector<GradedElement> im;
    for (const auto& e : images_) im.push_back(g.apply(e));
    return CDGAMap(source_, g.target_, std::move(im));
}

SemifreeModule::SemifreeModule(SemifreeCDGA base, std::vector<ModuleGen> gens, std::vector<GradedElement> D)
    : base_(std::move(base)), gens_(std::move(gens)), D_(std::move(D))
{
    size_t n = gens_.size();
    if (D_.empty()) D_.assign(n * n, GradedElement(base_.signature()));
    if (D_.size() != n * n) throw std::invalid_argument("module differential must be square");
    for (auto& e : D_) {
        if (!e.signature()) e = GradedElement(base_.signature()) + e;
        else if (!same_signature(e.signature(), base_.signature())) e = e.rebase(base_.signature());
    }
}

SemifreeModule SemifreeModule::regular(const SemifreeCDGA& A)
{
    return SemifreeModule(A, {{"1", Parity::Even, 0}}, {});
}

SemifreeModule::Vector SemifreeModule::zero_vector() const
{
    return Vector(gens_.size(), GradedElement(base_.signature()));
}

SemifreeModule::Vector SemifreeModule::basis_vector(size_t j) const
{
    auto v = zero_vector();
    v.at(j) = base_.one();
    return v;
}

SemifreeModule::Vector SemifreeModule::differential(const GMonomial& m, size_t j) const
{
    auto out = zero_vector();
    out[j] = base_.differential(m);
    Rational sign = parity_of(m) == Parity::Odd ? -1 : 1;
    auto mono = GradedElement::monomial(base_.signature(), m, sign);
    for (size_t i = 0; i < gens_.size(); ++i) {
        const auto& d = D(i, j);
        if (!d.is_zero()) out[i] += mono * d;
    }
    return out;
}

SemifreeModule::Vector SemifreeModule::differential(const Vector& v) const
{
    auto out = zero_vector();
    for (size_t j = 0; j < v.size(); ++j)
        for (const auto& [m, c] : v[j].terms()) {
            auto part = differential(m, j);
            for (size_t i = 0; i < out.size(); ++i)
                if (!part[i].is_zero()) out[i] += part[i] * c;
        }
    return out;
}

std::optional<std::string> SemifreeModule::check(const GradedElement* curvature) const
{
    for (size_t j = 0; j < gens_.size(); ++j) {
        auto dd = differential(differential(basis_vector(j)));
        if (curvature) dd[j] -= *curvature;
        for (const auto& e : dd)
            if (!e.is_zero()) return gens_[j].name;
    }
    return std::nullopt;
}

StepInfo SemifreeModule::step() const
{
    StepInfo s = base_.step();
    size_t n = gens_.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (const auto& [m, c] : D(i, j).terms()) {
                int st = weight_of(m, *base_.signature()) + gens_[i].weight - gens_[j].weight;
                if (s.zero) s.s_min = s.s_max = st;
                s.s_min = std::min(s.s_min, st);
                s.s_max = std::max(s.s_max, st);
                s.zero = false;
            }
    s.homogeneous = s.s_min == s.s_max;
    return s;
}

}  // namespace lgmf
