#include "turaev/expr.hpp"

#include <algorithm>
#include <cctype>

namespace turaev {

Expr Expr::constant(const Rat& c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = c;
    n->value.canonicalize();
    return Expr(n);
}

Expr Expr::param(const std::string& name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Param;
    n->name = name;
    return Expr(n);
}

Expr Expr::binary(Kind k, const Expr& a, const Expr& b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = a.node_;
    n->b = b.node_;
    return Expr(n);
}

Expr Expr::operator-() const {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->a = node_;
    return Expr(n);
}

namespace {

void collect_params(const Expr& e, std::vector<std::string>& out) {
    switch (e.kind()) {
    case Expr::Kind::Const: return;
    case Expr::Kind::Param: out.push_back(e.param_name()); return;
    case Expr::Kind::Neg: collect_params(e.lhs(), out); return;
    default:
        collect_params(e.lhs(), out);
        collect_params(e.rhs(), out);
    }
}

// Printing classes: how a node behaves for parenthesization. A printed
// string must re-parse to a tree that prints to the same string again,
// so negative and fractional constants take the class of the -, / trees
// they read back as.
enum class PClass { Atom, NegLike, MulLevel, AddLevel };

PClass pclass(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Const: {
        const Rat& v = e.const_value();
        if (v < 0) return PClass::NegLike;
        if (v.get_den() != 1) return PClass::MulLevel;
        return PClass::Atom;
    }
    case Expr::Kind::Param: return PClass::Atom;
    case Expr::Kind::Neg: return PClass::NegLike;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return PClass::MulLevel;
    default: return PClass::AddLevel;
    }
}

bool needs_parens(PClass c, int min_level, bool right_operand) {
    switch (c) {
    case PClass::Atom: return false;
    case PClass::NegLike: return min_level > 0 || right_operand;
    case PClass::MulLevel: return min_level > 1 || (right_operand && min_level == 1);
    case PClass::AddLevel: return min_level > 0 || (right_operand && min_level == 0);
    }
    return true;
}

void print(const Expr& e, std::string& out, int min_level, bool right_operand) {
    bool parens = needs_parens(pclass(e), min_level, right_operand);
    if (parens) out += '(';
    switch (e.kind()) {
    case Expr::Kind::Const: {
        const Rat& v = e.const_value();
        if (v < 0) {
            out += '-';
            print(Expr::constant(-v), out, 1, true);
        } else {
            out += rat_str(v);
        }
        break;
    }
    case Expr::Kind::Param: out += e.param_name(); break;
    case Expr::Kind::Neg:
        out += '-';
        print(e.lhs(), out, 1, true);
        break;
    case Expr::Kind::Add:
        print(e.lhs(), out, 0, false);
        out += '+';
        print(e.rhs(), out, 0, true);
        break;
    case Expr::Kind::Sub:
        print(e.lhs(), out, 0, false);
        out += '-';
        print(e.rhs(), out, 0, true);
        break;
    case Expr::Kind::Mul:
        print(e.lhs(), out, 1, false);
        out += '*';
        print(e.rhs(), out, 1, true);
        break;
    case Expr::Kind::Div:
        print(e.lhs(), out, 1, false);
        out += '/';
        print(e.rhs(), out, 1, true);
        break;
    }
    if (parens) out += ')';
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw DataError("expression parse error at position " + std::to_string(pos) + ": " + what +
                        " in \"" + s + "\"");
    }

    Expr expr() {
        Expr e = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                e = e + term();
            } else if (c == '-') {
                ++pos;
                e = e - term();
            } else {
                return e;
            }
        }
    }

    Expr term() {
        Expr e = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                e = e * factor();
            } else if (c == '/') {
                ++pos;
                e = e / factor();
            } else {
                return e;
            }
        }
    }

    Expr factor() {
        char c = peek();
        if (c == '-') {
            ++pos;
            return -factor();
        }
        return primary();
    }

    Expr primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Expr e = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Expr::constant(Rat(mpz_class(s.substr(start, pos - start)), 1));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return Expr::param(s.substr(start, pos - start));
        }
        fail("expected number, identifier or '('");
    }
};

} // namespace

std::vector<std::string> Expr::params() const {
    std::vector<std::string> out;
    collect_params(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Expr::str() const {
    std::string out;
    print(*this, out, 0, false);
    return out;
}

bool Expr::same(const Expr& o) const {
    if (kind() != o.kind()) return false;
    switch (kind()) {
    case Kind::Const: return const_value() == o.const_value();
    case Kind::Param: return param_name() == o.param_name();
    case Kind::Neg: return lhs().same(o.lhs());
    default: return lhs().same(o.lhs()) && rhs().same(o.rhs());
    }
}

Expr parse_expr(const std::string& text) {
    Parser p(text);
    Expr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

} // namespace turaev
