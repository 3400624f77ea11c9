#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "turaev/error.hpp"
#include "turaev/field.hpp"

namespace turaev {

/// Rational expression in named parameters: constants, +, -, *, / and unary -.
/// Immutable; cheap to copy (shared nodes).
class Expr {
  public:
    enum class Kind { Const, Param, Add, Sub, Mul, Div, Neg };

    Expr() : node_(constant(Rat(0)).node_) {}

    static Expr constant(const Rat& c);
    static Expr param(const std::string& name);

    Expr operator+(const Expr& o) const { return binary(Kind::Add, *this, o); }
    Expr operator-(const Expr& o) const { return binary(Kind::Sub, *this, o); }
    Expr operator*(const Expr& o) const { return binary(Kind::Mul, *this, o); }
    Expr operator/(const Expr& o) const { return binary(Kind::Div, *this, o); }
    Expr operator-() const;

    Kind kind() const { return node_->kind; }
    const Rat& const_value() const { return node_->value; }
    const std::string& param_name() const { return node_->name; }

    bool is_constant() const { return node_->kind == Kind::Const; }
    bool is_constant_zero() const { return is_constant() && node_->value == 0; }

    /// Names of all parameters appearing in the expression, sorted, deduplicated.
    std::vector<std::string> params() const;

    /// Canonical string form; parse(str(e)) rebuilds an identical tree.
    std::string str() const;

    /// Exact value in field F at the given assignment. Throws ArithmeticError
    /// on an unassigned parameter or a vanishing denominator (the message
    /// names the vanishing subexpression).
    template <class F>
    typename F::Elem eval(const F& f, const std::map<std::string, typename F::Elem>& a) const {
        switch (node_->kind) {
        case Kind::Const: return f.from_rat(node_->value);
        case Kind::Param: {
            auto it = a.find(node_->name);
            if (it == a.end()) throw ArithmeticError("unassigned parameter: " + node_->name);
            return it->second;
        }
        case Kind::Add: return f.add(lhs().eval(f, a), rhs().eval(f, a));
        case Kind::Sub: return f.sub(lhs().eval(f, a), rhs().eval(f, a));
        case Kind::Mul: return f.mul(lhs().eval(f, a), rhs().eval(f, a));
        case Kind::Div: {
            auto den = rhs().eval(f, a);
            if (f.is_zero(den)) throw ArithmeticError("division by zero: " + rhs().str());
            return f.div(lhs().eval(f, a), den);
        }
        case Kind::Neg: return f.neg(lhs().eval(f, a));
        }
        throw Error("corrupt expression node");
    }

    Expr lhs() const { return Expr(node_->a); }
    Expr rhs() const { return Expr(node_->b); }

    /// Structural equality (same tree shape and leaves).
    bool same(const Expr& o) const;

  private:
    struct Node {
        Kind kind;
        Rat value;        // Const
        std::string name; // Param
        std::shared_ptr<const Node> a, b;
    };

    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Expr binary(Kind k, const Expr& a, const Expr& b);

    std::shared_ptr<const Node> node_;
};

/// Parses "+, -, *, /, parentheses, integer literals, identifiers".
/// Throws DataError with a position on malformed input.
Expr parse_expr(const std::string& text);

inline Expr operator*(long n, const Expr& e) { return Expr::constant(Rat(n)) * e; }

/// Formal field of expressions: arithmetic builds trees. Lets the generic
/// constructions run on symbolic bundles; zero/equality tests are only
/// structural, so law checking happens after specialization, never here.
class ExprField {
  public:
    using Elem = Expr;

    Elem zero() const { return Expr::constant(Rat(0)); }
    Elem one() const { return Expr::constant(Rat(1)); }
    Elem from_int(long n) const { return Expr::constant(Rat(n)); }
    Elem from_rat(const Rat& r) const { return Expr::constant(r); }

    Elem add(const Elem& a, const Elem& b) const {
        if (a.is_constant_zero()) return b;
        if (b.is_constant_zero()) return a;
        return a + b;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        if (b.is_constant_zero()) return a;
        if (a.is_constant_zero()) return -b;
        return a - b;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.is_constant_zero() || b.is_constant_zero()) return zero();
        if (a.is_constant() && a.const_value() == 1) return b;
        if (b.is_constant() && b.const_value() == 1) return a;
        return a * b;
    }
    Elem neg(const Elem& a) const { return a.is_constant_zero() ? a : -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b.is_constant_zero()) throw ArithmeticError("division by zero: " + b.str());
        return a / b;
    }

    bool eq(const Elem& a, const Elem& b) const { return a.same(b); }
    bool is_zero(const Elem& a) const { return a.is_constant_zero(); }

    std::string str(const Elem& a) const { return a.str(); }
    std::string name() const { return "symbolic"; }
    std::uint64_t size() const { return 0; }
};

} // namespace turaev
