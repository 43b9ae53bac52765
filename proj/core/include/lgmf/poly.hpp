#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgmf/rational.hpp"

namespace lgmf {

class UnknownVariable : public std::invalid_argument {
public:
    explicit UnknownVariable(const std::string& name)
        : std::invalid_argument("unknown variable '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class TableMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered, weighted variable names. Shared immutably between polynomials.
class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names, std::vector<int> weights = {});

    size_t size() const noexcept { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    int weight(size_t i) const { return weights_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<int>& weights() const noexcept { return weights_; }

    std::optional<size_t> find(std::string_view name) const;
    size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    bool operator==(const VarTable& other) const
    {
        return names_ == other.names_ && weights_ == other.weights_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::unordered_map<std::string, size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(std::vector<std::string> names, std::vector<int> weights = {});

/// Concatenation; names must stay distinct.
VarTablePtr concat_tables(const VarTable& a, const VarTable& b);

bool same_table(const VarTablePtr& a, const VarTablePtr& b);

using Exponents = std::vector<int>;

int weighted_degree(const Exponents& e, const VarTable& table);

enum class OrderKind { GrevLex, Lex };

/// Weighted graded reverse lexicographic by default, with variables later in
/// the table ranking higher (x < y < z for the table x, y, z). A non-empty
/// `eliminate` mask turns it into a block order where the flagged variables
/// dominate.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<bool> eliminate;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder elimination(std::vector<bool> mask) { return {OrderKind::GrevLex, std::move(mask)}; }

    /// Negative, zero or positive as a is smaller, equal or larger than b.
    int compare(const Exponents& a, const Exponents& b, const VarTable& table) const;

    std::string tag() const;
};

MonomialOrder parse_order(std::string_view tag);

class Polynomial {
public:
    using Terms = std::map<Exponents, Rational>;

    Polynomial() = default;
    explicit Polynomial(VarTablePtr table);
    Polynomial(VarTablePtr table, const Rational& c);

    static Polynomial variable(VarTablePtr table, std::string_view name);
    static Polynomial monomial(VarTablePtr table, Exponents e, const Rational& c = 1);

    const VarTablePtr& table() const noexcept { return table_; }
    const Terms& terms() const noexcept { return terms_; }
    size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Exponents& e) const;

    /// Largest weighted degree of a term; -1 for zero.
    int weighted_degree() const;
    int min_weighted_degree() const;
    bool is_homogeneous() const;
    int degree_in(size_t var) const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    bool operator==(const Polynomial& o) const;

    Polynomial pow(unsigned n) const;

    std::pair<Exponents, Rational> leading_term(const MonomialOrder& order) const;

    /// Replaces variable i by images[i]; all images live on `target`.
    Polynomial substitute(const std::vector<Polynomial>& images, const VarTablePtr& target) const;

    /// Moves to another table by variable name, optionally renaming first.
    Polynomial rebase(const VarTablePtr& target,
                      const std::map<std::string, std::string>& rename = {}) const;

    std::string str(const MonomialOrder& order = {}) const;

private:
    void require_table(const Polynomial& o);

    VarTablePtr table_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, std::string_view var);

/// Exact quotient n / (var_primed - var), computed by synthetic division in
/// var_primed. Throws std::logic_error on a nonzero remainder.
Polynomial divide_by_difference(const Polynomial& n, size_t var_primed, size_t var);

/// p_{i,V} = (V(.., a_{i-1}, a_i', ..) - V(.., a_i, a_{i+1}', ..)) / (a_i' - a_i).
/// V's table must already contain the primed names; i is 0-based.
Polynomial difference_quotient(const Polynomial& V, const std::vector<std::string>& a,
                               const std::vector<std::string>& a_primed, size_t i);

/// V with a_j replaced by a_j' for every j >= from (0-based).
Polynomial prime_from(const Polynomial& V, const std::vector<std::string>& a,
                      const std::vector<std::string>& a_primed, size_t from);

Polynomial parse_polynomial(std::string_view text, const VarTablePtr& table);

/// Dense matrix of polynomials over one table.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(VarTablePtr table, size_t rows, size_t cols);

    static PolyMatrix identity(VarTablePtr table, size_t n);

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    const VarTablePtr& table() const noexcept { return table_; }

    Polynomial& operator()(size_t r, size_t c) { return entries_.at(r * cols_ + c); }
    const Polynomial& operator()(size_t r, size_t c) const { return entries_.at(r * cols_ + c); }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const Polynomial& p) const;
    PolyMatrix operator-() const;
    bool operator==(const PolyMatrix& o) const;

    PolyMatrix transpose() const;
    bool is_zero() const;
    PolyMatrix map(const auto& f) const
    {
        PolyMatrix out(table_, rows_, cols_);
        for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = f(entries_[i]);
        if (!entries_.empty()) out.table_ = out.entries_.front().table();
        return out;
    }

private:
    VarTablePtr table_;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Polynomial> entries_;
};

PolyMatrix partial_derivative(const PolyMatrix& m, std::string_view var);

}  // namespace lgmf
