#include "lgmf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace lgmf {

VarTable::VarTable(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights))
{
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size())
        throw std::invalid_argument("variable table: weight count does not match name count");
    for (size_t i = 0; i < names_.size(); ++i) {
        if (weights_[i] <= 0)
            throw std::invalid_argument("variable '" + names_[i] + "' needs a positive weight");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
    }
}

std::optional<size_t> VarTable::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

size_t VarTable::index_of(std::string_view name) const
{
    auto i = find(name);
    if (!i) throw UnknownVariable(std::string(name));
    return *i;
}

VarTablePtr make_table(std::vector<std::string> names, std::vector<int> weights)
{
    return std::make_shared<const VarTable>(std::move(names), std::move(weights));
}

VarTablePtr concat_tables(const VarTable& a, const VarTable& b)
{
    auto names = a.names();
    auto weights = a.weights();
    names.insert(names.end(), b.names().begin(), b.names().end());
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
    return make_table(std::move(names), std::move(weights));
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

int weighted_degree(const Exponents& e, const VarTable& table)
{
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * table.weight(i);
    return d;
}

namespace {

int grevlex_block(const Exponents& a, const Exponents& b, const VarTable& t,
                  const std::vector<bool>* mask, bool want)
{
    int da = 0, db = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (mask && (*mask)[i] != want) continue;
        da += a[i] * t.weight(i);
        db += b[i] * t.weight(i);
    }
    if (da != db) return da < db ? -1 : 1;
    // Later table entries rank higher, so the reverse tiebreak starts at the front.
    for (size_t k = 0; k < a.size(); ++k) {
        if (mask && (*mask)[k] != want) continue;
        if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b, const VarTable& table) const
{
    if (kind == OrderKind::Lex) {
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    if (eliminate.empty()) return grevlex_block(a, b, table, nullptr, true);
    if (int c = grevlex_block(a, b, table, &eliminate, true)) return c;
    return grevlex_block(a, b, table, &eliminate, false);
}

std::string MonomialOrder::tag() const
{
    return kind == OrderKind::Lex ? "lex" : "grevlex";
}

MonomialOrder parse_order(std::string_view tag)
{
    if (tag == "grevlex") return MonomialOrder::grevlex();
    if (tag == "lex") return MonomialOrder::lex();
    throw std::invalid_argument("unknown monomial order '" + std::string(tag) + "'");
}

Polynomial::Polynomial(VarTablePtr table) : table_(std::move(table)) {}

Polynomial::Polynomial(VarTablePtr table, const Rational& c) : table_(std::move(table))
{
    if (c != 0) terms_.emplace(Exponents(table_ ? table_->size() : 0, 0), c);
}

Polynomial Polynomial::variable(VarTablePtr table, std::string_view name)
{
    Exponents e(table->size(), 0);
    e[table->index_of(name)] = 1;
    return monomial(std::move(table), std::move(e));
}

Polynomial Polynomial::monomial(VarTablePtr table, Exponents e, const Rational& c)
{
    if (e.size() != table->size()) throw std::invalid_argument("monomial length mismatch");
    Polynomial p(std::move(table));
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

bool Polynomial::is_constant() const
{
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Polynomial::constant_term() const
{
    if (terms_.empty()) return 0;
    return coefficient(Exponents(table_->size(), 0));
}

Rational Polynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::weighted_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, lgmf::weighted_degree(e, *table_));
    return d;
}

int Polynomial::min_weighted_degree() const
{
    if (terms_.empty()) return -1;
    int d = lgmf::weighted_degree(terms_.begin()->first, *table_);
    for (const auto& [e, c] : terms_) d = std::min(d, lgmf::weighted_degree(e, *table_));
    return d;
}

bool Polynomial::is_homogeneous() const
{
    return weighted_degree() == min_weighted_degree();
}

int Polynomial::degree_in(size_t var) const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (fresh) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::require_table(const Polynomial& o)
{
    if (!o.table_) return;
    if (!table_) {
        table_ = o.table_;
        for (auto& [e, c] : terms_) {
            (void)c;
            if (!e.empty()) throw TableMismatch("polynomial without table has terms");
        }
        if (!terms_.empty()) {
            Rational c = terms_.begin()->second;
            terms_.clear();
            terms_.emplace(Exponents(table_->size(), 0), c);
        }
        return;
    }
    if (!same_table(table_, o.table_)) throw TableMismatch("polynomials live on different variable tables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_table(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_table(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out(a.table_ ? a.table_ : b.table_);
    if (a.is_zero() || b.is_zero()) return out;
    if (!a.table_ && b.table_) {
        Polynomial lifted = a;
        lifted.require_table(b);
        return lifted * b;
    }
    if (a.table_ && !b.table_) return b * a;
    if (a.table_ && b.table_ && !same_table(a.table_, b.table_))
        throw TableMismatch("polynomials live on different variable tables");
    Exponents e;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (terms_.empty() && o.terms_.empty()) return true;
    if (table_ && o.table_ && !same_table(table_, o.table_)) return false;
    return terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned n) const
{
    Polynomial result(table_, 1);
    Polynomial base = *this;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

std::pair<Exponents, Rational> Polynomial::leading_term(const MonomialOrder& order) const
{
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (order.compare(it->first, best->first, *table_) > 0) best = it;
    return *best;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, const VarTablePtr& target) const
{
    if (images.size() != (table_ ? table_->size() : 0))
        throw std::invalid_argument("substitution needs one image per variable");
    Polynomial out(target);
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& [e, c] : terms_) {
        Polynomial term(target, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Polynomial(target, 1));
            while ((int)pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
            term *= pw[e[i]];
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::rebase(const VarTablePtr& target, const std::map<std::string, std::string>& rename) const
{
    Polynomial out(target);
    if (terms_.empty()) return out;
    std::vector<size_t> where(table_->size());
    std::vector<bool> used(table_->size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) used[i] = true;
    for (size_t i = 0; i < table_->size(); ++i) {
        if (!used[i]) continue;
        std::string n = table_->name(i);
        if (auto it = rename.find(n); it != rename.end()) n = it->second;
        where[i] = target->index_of(n);
    }
    Exponents f(target->size());
    for (const auto& [e, c] : terms_) {
        std::fill(f.begin(), f.end(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) f[where[i]] += e[i];
        out.add_term(f, c);
    }
    return out;
}

std::string Polynomial::str(const MonomialOrder& order) const
{
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> items;
    for (const auto& t : terms_) items.push_back(&t);
    std::sort(items.begin(), items.end(), [&](auto* a, auto* b) {
        return order.compare(a->first, b->first, *table_) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : items) {
        Rational c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (size_t i = 0; i < t->first.size(); ++i) {
            int k = t->first[i];
            if (!k) continue;
            factors.push_back(k == 1 ? table_->name(i) : table_->name(i) + "^" + std::to_string(k));
        }
        if (factors.empty()) {
            os << to_string(c);
            continue;
        }
        if (c != 1) os << to_string(c) << "*";
        for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial partial_derivative(const Polynomial& p, std::string_view var)
{
    Polynomial out(p.table());
    if (!p.table()) return out;
    size_t v = p.table()->index_of(var);
    for (const auto& [e, c] : p.terms()) {
        if (!e[v]) continue;
        Exponents f = e;
        --f[v];
        out.add_term(f, c * e[v]);
    }
    return out;
}

Polynomial divide_by_difference(const Polynomial& n, size_t var_primed, size_t var)
{
    // Work in var_primed over the coefficient ring of the remaining variables:
    // n = sum_k c_k * u^k with u = var_primed; divide by (u - var) via Horner.
    Polynomial quotient(n.table());
    if (n.is_zero()) return quotient;
    const auto& table = n.table();
    int top = n.degree_in(var_primed);
    std::vector<Polynomial> coeff(top + 1, Polynomial(table));
    for (const auto& [e, c] : n.terms()) {
        Exponents f = e;
        f[var_primed] = 0;
        coeff[e[var_primed]].add_term(f, c);
    }
    Polynomial x = Polynomial::monomial(table, [&] {
        Exponents e(table->size(), 0);
        e[var] = 1;
        return e;
    }());
    Polynomial carry(table);
    for (int k = top; k >= 1; --k) {
        carry = coeff[k] + carry * x;
        Exponents shift(table->size(), 0);
        shift[var_primed] = k - 1;
        quotient += carry * Polynomial::monomial(table, shift);
    }
    Polynomial remainder = coeff[0] + carry * x;
    if (!remainder.is_zero())
        throw std::logic_error("difference quotient has nonzero remainder " + remainder.str());
    return quotient;
}

Polynomial prime_from(const Polynomial& V, const std::vector<std::string>& a,
                      const std::vector<std::string>& a_primed, size_t from)
{
    const auto& table = V.table();
    std::vector<Polynomial> images;
    images.reserve(table->size());
    for (size_t i = 0; i < table->size(); ++i) images.push_back(Polynomial::variable(table, table->name(i)));
    for (size_t j = from; j < a.size(); ++j)
        images[table->index_of(a[j])] = Polynomial::variable(table, a_primed[j]);
    return V.substitute(images, table);
}

Polynomial difference_quotient(const Polynomial& V, const std::vector<std::string>& a,
                               const std::vector<std::string>& a_primed, size_t i)
{
    if (a.size() != a_primed.size()) throw std::invalid_argument("primed tuple length mismatch");
    if (i >= a.size()) throw std::out_of_range("difference quotient index out of range");
    const auto& table = V.table();
    Polynomial numerator = prime_from(V, a, a_primed, i) - prime_from(V, a, a_primed, i + 1);
    return divide_by_difference(numerator, table->index_of(a_primed[i]), table->index_of(a[i]));
}

PolyMatrix::PolyMatrix(VarTablePtr table, size_t rows, size_t cols)
    : table_(std::move(table)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(table_))
{
}

PolyMatrix PolyMatrix::identity(VarTablePtr table, size_t n)
{
    PolyMatrix m(table, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Polynomial(table, 1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    PolyMatrix out(table_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const auto& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const auto& b = o(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
    PolyMatrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator*(const Polynomial& p) const
{
    PolyMatrix out = *this;
    for (auto& e : out.entries_) e *= p;
    return out;
}

PolyMatrix PolyMatrix::operator-() const
{
    PolyMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix out(table_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool PolyMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix partial_derivative(const PolyMatrix& m, std::string_view var)
{
    return m.map([&](const Polynomial& p) { return partial_derivative(p, var); });
}

}  // namespace lgmf
