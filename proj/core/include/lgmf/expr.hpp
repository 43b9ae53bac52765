#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgmf/rational.hpp"

namespace lgmf {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::invalid_argument(msg + " at column " + std::to_string(pos + 1)), pos_(pos) {}
    size_t position() const noexcept { return pos_; }

private:
    size_t pos_;
};

struct Expr {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Neg, Pow };
    Kind kind;
    Rational value;
    std::string name;
    unsigned exponent = 0;
    size_t pos = 0;
    std::vector<std::unique_ptr<Expr>> args;
};

using ExprPtr = std::unique_ptr<Expr>;

/// Grammar: sums of products of powers of atoms; atoms are rational
/// literals, identifiers or parenthesised expressions. No implicit products.
ExprPtr parse_expr(std::string_view text);

/// Folds an expression tree into any ring-like type T.
template <class T, class Leaf>
T eval_expr(const Expr& e, const Leaf& leaf)
{
    switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Symbol:
        return leaf(e);
    case Expr::Kind::Add:
        return eval_expr<T>(*e.args[0], leaf) + eval_expr<T>(*e.args[1], leaf);
    case Expr::Kind::Sub:
        return eval_expr<T>(*e.args[0], leaf) - eval_expr<T>(*e.args[1], leaf);
    case Expr::Kind::Mul:
        return eval_expr<T>(*e.args[0], leaf) * eval_expr<T>(*e.args[1], leaf);
    case Expr::Kind::Neg:
        return -eval_expr<T>(*e.args[0], leaf);
    case Expr::Kind::Pow: {
        T base = eval_expr<T>(*e.args[0], leaf);
        T out = leaf(Expr{Expr::Kind::Number, Rational(1), {}, 0, e.pos, {}});
        for (unsigned i = 0; i < e.exponent; ++i) out = out * base;
        return out;
    }
    }
    throw std::logic_error("bad expression node");
}

}  // namespace lgmf
