#include "lgmf/expr.hpp"

#include <cctype>

#include "lgmf/poly.hpp"

namespace lgmf {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr run()
    {
        auto e = sum();
        skip();
        if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
        return e;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    static ExprPtr node(Expr::Kind k, size_t pos, ExprPtr a, ExprPtr b = nullptr)
    {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->pos = pos;
        e->args.push_back(std::move(a));
        if (b) e->args.push_back(std::move(b));
        return e;
    }

    ExprPtr sum()
    {
        skip();
        size_t p = i_;
        ExprPtr left;
        if (eat('-')) left = node(Expr::Kind::Neg, p, product());
        else {
            eat('+');
            left = product();
        }
        for (;;) {
            skip();
            p = i_;
            if (eat('+')) left = node(Expr::Kind::Add, p, std::move(left), product());
            else if (eat('-')) left = node(Expr::Kind::Sub, p, std::move(left), product());
            else return left;
        }
    }

    ExprPtr product()
    {
        auto left = power();
        for (;;) {
            skip();
            size_t p = i_;
            if (!eat('*')) return left;
            left = node(Expr::Kind::Mul, p, std::move(left), power());
        }
    }

    ExprPtr power()
    {
        auto base = atom();
        skip();
        size_t p = i_;
        if (!eat('^')) return base;
        skip();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError("expected non-negative integer exponent", start);
        auto e = node(Expr::Kind::Pow, p, std::move(base));
        e->exponent = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start))));
        skip();
        if (i_ < s_.size() && s_[i_] == '^') throw ParseError("chained exponent needs parentheses", i_);
        return e;
    }

    ExprPtr atom()
    {
        skip();
        if (i_ >= s_.size()) throw ParseError("unexpected end of expression", i_);
        size_t p = i_;
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            auto e = sum();
            if (!eat(')')) throw ParseError("expected ')'", i_);
            return e;
        }
        if (c == '-') {
            ++i_;
            return node(Expr::Kind::Neg, p, power());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                size_t d = i_;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
                if (d == i_) throw ParseError("expected denominator", d);
            }
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Number;
            e->pos = p;
            try {
                e->value = parse_rational(s_.substr(p, i_ - p));
            } catch (const std::invalid_argument& err) {
                throw ParseError(err.what(), p);
            }
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\''))
                ++i_;
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Symbol;
            e->pos = p;
            e->name = std::string(s_.substr(p, i_ - p));
            skip();
            if (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '('))
                throw ParseError("implicit multiplication is not allowed", i_);
            return e;
        }
        throw ParseError(std::string("unexpected '") + c + "'", i_);
    }

    std::string_view s_;
    size_t i_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

Polynomial parse_polynomial(std::string_view text, const VarTablePtr& table)
{
    auto tree = parse_expr(text);
    return eval_expr<Polynomial>(*tree, [&](const Expr& leaf) {
        if (leaf.kind == Expr::Kind::Number) return Polynomial(table, leaf.value);
        if (!table->contains(leaf.name)) throw UnknownVariable(leaf.name);
        return Polynomial::variable(table, leaf.name);
    });
}

}  // namespace lgmf
