#include "turaev/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace turaev {
namespace corpus {

namespace {

const ExprField EF;

// "L" is shorthand for the weight parameter in the transcription strings.
std::string expand_shorthand(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == 'L') out += "lambda";
        else out += c;
    }
    return out;
}

std::vector<std::string> with_lambda(std::vector<std::string> extra) {
    std::vector<std::string> p = {"lambda"};
    for (auto& e : extra) p.push_back(std::move(e));
    return p;
}

} // namespace

std::vector<Expr> linear_combo(const std::string& text, int dim) {
    std::vector<Expr> out(static_cast<size_t>(dim), Expr::constant(Rat(0)));
    std::string s = expand_shorthand(text);
    // split into signed terms at depth-0 +/-
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == '+' || c == '-') && depth == 0 && i > 0) {
            terms.push_back(cur);
            cur.clear();
            if (c == '-') cur += '-';
            continue;
        }
        cur += c;
    }
    if (!cur.empty()) terms.push_back(cur);
    for (auto& term : terms) {
        if (term == "0" || term.empty()) continue;
        // locate the trailing basis factor uK
        size_t upos = term.rfind('u');
        if (upos == std::string::npos)
            throw DataError("linear combination term without basis factor: " + term);
        int idx = std::stoi(term.substr(upos + 1)) - 1;
        if (idx < 0 || idx >= dim)
            throw DataError("basis index out of range in term: " + term);
        std::string coeff = term.substr(0, upos);
        if (coeff.empty()) coeff = "1";
        else if (coeff == "-") coeff = "-1";
        else if (coeff.back() == '*') coeff.pop_back();
        out[static_cast<size_t>(idx)] =
            EF.add(out[static_cast<size_t>(idx)], parse_expr(coeff));
    }
    return out;
}

UngradedAlgebra<Expr> algebra(const std::string& name) {
    auto build = [](int dim, const std::vector<std::string>& products,
                    bool unital) {
        UngradedAlgebra<Expr> a;
        a.dim = dim;
        a.mul = Tensor3<Expr>(dim, dim, dim, Expr::constant(Rat(0)));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                auto v = linear_combo(products[static_cast<size_t>(i * dim + j)], dim);
                for (int k = 0; k < dim; ++k) a.mul.at(i, j, k) = v[static_cast<size_t>(k)];
            }
        if (unital) {
            std::vector<Expr> u(static_cast<size_t>(dim), Expr::constant(Rat(0)));
            u[0] = Expr::constant(Rat(1));
            a.unit = std::move(u);
        }
        return a;
    };
    if (name == "dim2")
        return build(2, {"u1", "u2", "u2", "u2"}, true);
    if (name == "dim3")
        return build(3, {"u1", "u2", "u3", "u2", "u2", "u3", "u3", "u3", "0"}, true);
    if (name == "taft")
        return build(4,
                     {"u1", "u2", "u3", "u4",    //
                      "u2", "u1", "u4", "u3",    //
                      "u3", "-u4", "0", "0",     //
                      "u4", "-u3", "0", "0"},
                     true);
    throw DataError("unknown algebra: " + name);
}

const std::vector<OperatorEntry>& operator_entries() {
    static const std::vector<OperatorEntry> entries = [] {
        std::vector<OperatorEntry> v;
        auto add = [&](const std::string& id, const std::string& alg, char letter,
                       std::vector<std::string> images, std::vector<std::string> params = {},
                       std::vector<std::string> forbidden = {}) {
            v.push_back({id, alg, letter, std::move(images), with_lambda(std::move(params)),
                         std::move(forbidden)});
        };
        // dimension 2
        add("15.15(a)", "dim2", 'a', {"-L*u1", "0"});
        add("15.15(b)", "dim2", 'b', {"0", "-L*u2"});
        add("15.15(c)", "dim2", 'c', {"-L*u1", "-L*u2"});
        add("15.15(d)", "dim2", 'd', {"-L*u2", "-L*u2"});
        add("15.15(e)", "dim2", 'e', {"-L*u1", "-L*u1"});
        add("15.15(f)", "dim2", 'f', {"L*u2", "0"});
        add("15.15(g)", "dim2", 'g', {"0", "L*u1-L*u2"});
        add("15.15(h)", "dim2", 'h', {"-2*L*u1+L*u2", "-L*u1"});
        add("15.15(i)", "dim2", 'i', {"-L*u1-L*u2", "-L*u2"});
        add("15.15(j)", "dim2", 'j', {"-L*u1+L*u2", "0"});
        add("15.15(k)", "dim2", 'k', {"L*u1-L*u2", "L*u1-L*u2"});
        // dimension 3
        add("15.16(a)", "dim3", 'a', {"-L*u1", "0", "0"});
        add("15.16(b)", "dim3", 'b', {"0", "-L*u2", "0"});
        add("15.16(c)", "dim3", 'c', {"0", "0", "-L*u3"});
        add("15.16(d)", "dim3", 'd', {"-L*u1", "-L*u2", "0"});
        add("15.16(e)", "dim3", 'e', {"0", "-L*u2", "-L*u3"});
        add("15.16(f)", "dim3", 'f', {"-L*u1", "0", "-L*u3"});
        add("15.16(g)", "dim3", 'g', {"-L*u1", "-L*u2", "-L*u3"});
        add("15.16(h)", "dim3", 'h', {"-L*u2", "-L*u2", "0"});
        add("15.16(i)", "dim3", 'i', {"-L*u2", "-L*u2", "-L*u3"});
        add("15.16(j)", "dim3", 'j', {"L*u2", "0", "0"});
        add("15.16(k)", "dim3", 'k', {"L*u2", "0", "-L*u3"});
        add("15.16(l)", "dim3", 'l', {"0", "L*u1-L*u2", "0"});
        add("15.16(m)", "dim3", 'm', {"0", "L*u1-L*u2", "-L*u3"});
        add("15.16(n)", "dim3", 'n', {"-2*L*u1+L*u2", "-L*u1", "0"});
        add("15.16(o)", "dim3", 'o', {"-2*L*u1+L*u2", "-L*u1", "-L*u3"});
        add("15.16(p)", "dim3", 'p', {"-L*u1-L*u2", "-L*u2", "0"});
        add("15.16(q)", "dim3", 'q', {"-L*u1-L*u2", "-L*u2", "-L*u3"});
        add("15.16(r)", "dim3", 'r', {"-L*u1+L*u2", "0", "0"});
        add("15.16(s)", "dim3", 's', {"-L*u1+L*u2", "0", "-L*u3"});
        add("15.16(t)", "dim3", 't', {"-L*u1", "-L*u1", "0"});
        add("15.16(u)", "dim3", 'u', {"-L*u1", "-L*u1", "-L*u3"});
        add("15.16(v)", "dim3", 'v', {"L*u1-L*u2", "L*u1-L*u2", "0"});
        add("15.16(w)", "dim3", 'w', {"L*u1-L*u2", "L*u1-L*u2", "-L*u3"});
        // dimension 4
        add("15.17(a)", "taft", 'a', {"0", "0", "-L*u3", "-L*u4"});
        add("15.17(b)", "taft", 'b', {"-L*u1", "-L*u2", "0", "0"});
        add("15.17(c)", "taft", 'c', {"-L*u1", "-L*u2", "-L*u3", "-L*u4"});
        add("15.17(d)", "taft", 'd',
            {"0",
             "-p1*u1+p1*u2-(L+p1)*(L+p1+p2)/p3*u3+(L+p1)*(L+p2)/p3*u4",
             "-p3*u1+p3*u2-(2*L+p1+p2)*u3+(L+p2)*u4",
             "-p3*u1+p3*u2-(L+p1+p2)*u3+p2*u4"},
            {"p1", "p2", "p3"}, {"p3"});
        add("15.17(e)", "taft", 'e',
            {"-L*u1",
             "(L+p1)*u1+p1*u2-(L+p1)*(L+p1+p2)/p3*u3+(L+p1)*(L+p2)/p3*u4",
             "p3*u1+p3*u2-(2*L+p1+p2)*u3+(L+p2)*u4",
             "p3*u1+p3*u2-(L+p1+p2)*u3+p2*u4"},
            {"p1", "p2", "p3"}, {"p3"});
        add("15.17(f)", "taft", 'f',
            {"-L*u1", "L*u1+p1*u3+p1*p2/(L+p2)*u4", "-(L+p2)*u3-p2*u4", "(L+p2)*u3+p2*u4"},
            {"p1", "p2"}, {"L+p2"});
        add("15.17(g)", "taft", 'g',
            {"-L*u1", "L*u1+L*(L+p1)/p2*u3+L*(L+p1)/p2*u4",
             "-p2*u1-p2*u2-(2*L+p1)*u3-(L+p1)*u4", "p2*u1+p2*u2+(L+p1)*u3+p1*u4"},
            {"p1", "p2"}, {"p2"});
        add("15.17(h)", "taft", 'h',
            {"1/2*L*u1-1/2*L*u2+p1*u3+p2*u4", "1/2*L*u1-1/2*L*u2-p2*u3+p1*u4",
             "-1/2*L*u3-1/2*L*u4", "-1/2*L*u3-1/2*L*u4"},
            {"p1", "p2"});
        return v;
    }();
    return entries;
}

const OperatorEntry& find_operator(const std::string& algebra_name, char letter) {
    for (const auto& e : operator_entries())
        if (e.algebra == algebra_name && e.letter == letter) return e;
    throw DataError("no operator (" + std::string(1, letter) + ") on " + algebra_name);
}

Mat<Expr> op_matrix(const std::string& algebra_name, char letter) {
    const auto& e = find_operator(algebra_name, letter);
    int dim = algebra(algebra_name).dim;
    Mat<Expr> m(dim, dim, Expr::constant(Rat(0)));
    for (int j = 0; j < dim; ++j) {
        auto col = linear_combo(e.images[static_cast<size_t>(j)], dim);
        for (int i = 0; i < dim; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
    }
    return m;
}

const std::vector<PairList>& pair_lists() {
    static const std::vector<PairList> lists = [] {
        auto parse = [](const std::string& id, const std::string& alg, const std::string& text) {
            PairList pl;
            pl.id = id;
            pl.algebra = alg;
            std::istringstream is(text);
            std::string tok;
            while (is >> tok) {
                if (tok.size() != 2) throw DataError("bad pair token: " + tok);
                pl.pairs.emplace_back(tok[0], tok[1]);
            }
            return pl;
        };
        std::vector<PairList> v;
        v.push_back(parse("15.5", "dim2",
                          "ac ad ae aj bc bd bj cd cg cj "
                          "di dj dk ej fh fj gj hj ij ik "
                          "cb dc ea eb ec ed fc fd gb gc "
                          "gd hc hd hf ic id jc jd jf jh "
                          "kc kd ki"));
        v.push_back(parse("15.6", "dim3",
                          "ad ag ah ai ar at au bd bg bh bi "
                          "bl br cf cg ci cr cs cu dg dh di "
                          "dl dr eg ei el em er es eu fg fi "
                          "fr fs fu gi gl gm gr gs gv gw hi "
                          "hr hv iq ir is iv iw jn jo jr ko "
                          "kr ks lr mr ms no nr or os pr pv "
                          "qr qs qv qw tu db ec fc gc ge hd "
                          "hg ic ig jg jh ji kc kg ki lb ld "
                          "le lg lh li mc me mg mi ml nd ng "
                          "nh ni nj oc og oi ok pd pg ph pi "
                          "qc qg qi rd rg rh ri rj rn ro sc "
                          "sg si sk so sr ta td tg th ti tr "
                          "uc uf ug ui ur us vd vg vh vi vp "
                          "vr wc wg wi wq wr ws wv"));
        v.push_back(parse("15.7", "taft", "ac bc ca dc ec fc gc hc"));
        return v;
    }();
    return lists;
}

const std::vector<LiftEntry>& lift_entries() {
    static const std::vector<LiftEntry> v = {
        {"15.8(1)", "dim2", {'a', 'c'}},
        {"15.8(2)", "dim3", {'a', 'd'}},
        {"15.8(3)", "taft", {'a', 'c'}},
    };
    return v;
}

const std::vector<SemiHopfEntry>& semi_hopf_entries() {
    static const std::vector<SemiHopfEntry> v = [] {
        std::vector<SemiHopfEntry> out;
        auto add = [&](const std::string& id, const std::string& alg, char x, char y,
                       bool comult = true, const std::string& note = "") {
            out.push_back({id, alg, {x, y}, comult, note});
        };
        add("15.11(1.1)", "dim2", 'a', 'c');
        add("15.11(1.2)", "dim2", 'b', 'c');
        add("15.11(1.3)", "dim2", 'c', 'b');
        add("15.11(2.1)", "dim3", 'a', 'd');
        add("15.11(2.2)", "dim3", 'a', 'g');
        add("15.11(2.3)", "dim3", 'b', 'd');
        add("15.11(2.4)", "dim3", 'b', 'g');
        add("15.11(2.5)", "dim3", 'c', 'f');
        add("15.11(2.6)", "dim3", 'c', 'g');
        add("15.11(2.7)", "dim3", 'd', 'g');
        add("15.11(2.8)", "dim3", 'e', 'g');
        add("15.11(2.9)", "dim3", 'f', 'g');
        add("15.11(2.10)", "dim3", 'd', 'b');
        add("15.11(2.11)", "dim3", 'e', 'c');
        add("15.11(2.12)", "dim3", 'f', 'c');
        add("15.11(2.13)", "dim3", 'g', 'c');
        add("15.11(2.14)", "dim3", 'g', 'e');
        const std::string note =
            "listed as semi-Hopf, but the grouplike coproduct is not multiplicative on this "
            "algebra (u3.u2 = -u4 makes the set-like coproduct incompatible); the cooperator, "
            "coalgebra and Rota-Baxter laws do hold";
        add("15.11(3.1)", "taft", 'a', 'c', false, note);
        add("15.11(3.2)", "taft", 'b', 'c', false, note);
        add("15.11(3.3)", "taft", 'c', 'a', false, note);
        return out;
    }();
    return v;
}

SymBundle operator_bundle(const OperatorEntry& e) {
    SymBundle sb;
    auto alg = algebra(e.algebra);
    auto R = op_matrix(e.algebra, e.letter);
    sb.data = lift_group_algebra(EF, alg, R, Expr::param("lambda"), GradeTable::trivial(),
                                 /*assert_post=*/false);
    sb.params = e.params;
    for (const auto& s : e.forbidden) sb.forbidden.push_back(parse_expr(expand_shorthand(s)));
    sb.provenance = "example " + e.id;
    return sb;
}

PairParams pair_params(const std::string& algebra_name, std::pair<char, char> pair) {
    PairParams out;
    const auto& e1 = find_operator(algebra_name, pair.first);
    const auto& e2 = find_operator(algebra_name, pair.second);
    out.params = e1.params;
    for (const auto& p : e2.params)
        if (std::find(out.params.begin(), out.params.end(), p) == out.params.end())
            out.params.push_back(p);
    std::vector<std::string> fstr;
    for (const auto& s : e1.forbidden) fstr.push_back(s);
    for (const auto& s : e2.forbidden)
        if (std::find(fstr.begin(), fstr.end(), s) == fstr.end()) fstr.push_back(s);
    for (const auto& s : fstr) out.forbidden.push_back(parse_expr(expand_shorthand(s)));
    return out;
}

SymBundle pair_bundle(const std::string& algebra_name, std::pair<char, char> pair) {
    SymBundle sb;
    auto alg = algebra(algebra_name);
    RBPair<Expr> p;
    p.first = op_matrix(algebra_name, pair.first);
    p.second = op_matrix(algebra_name, pair.second);
    p.weight = Expr::param("lambda");
    sb.data = lift_rb_pair(EF, alg, p, /*assert_post=*/false);
    auto pp = pair_params(algebra_name, pair);
    sb.params = std::move(pp.params);
    sb.forbidden = std::move(pp.forbidden);
    sb.provenance = std::string("pair (") + pair.first + "," + pair.second + ") on " +
                    algebra_name;
    return sb;
}

SymBundle lift_bundle(const std::string& algebra_name, char letter, const GradeTable& g) {
    SymBundle sb;
    const auto& e = find_operator(algebra_name, letter);
    sb.data = lift_group_algebra(EF, algebra(algebra_name), op_matrix(algebra_name, letter),
                                 Expr::param("lambda"), g, /*assert_post=*/false);
    sb.params = e.params;
    for (const auto& s : e.forbidden) sb.forbidden.push_back(parse_expr(expand_shorthand(s)));
    sb.provenance = "lift of example " + e.id;
    return sb;
}

SymBundle semi_hopf_bundle(const SemiHopfEntry& e) {
    SymBundle sb;
    auto alg = algebra(e.algebra);
    std::vector<Mat<Expr>> ops = {op_matrix(e.algebra, e.pair.first),
                                  op_matrix(e.algebra, e.pair.second)};
    sb.data = grouplike_lift(EF, alg, ops, Expr::param("lambda"), GradeTable::monoid_1q(),
                             /*assert_post=*/false);
    auto pp = pair_params(e.algebra, e.pair);
    sb.params = std::move(pp.params);
    sb.forbidden = std::move(pp.forbidden);
    sb.provenance = "example " + e.id;
    return sb;
}

std::string normalize_id(const std::string& id) {
    // accept 15.15a, 15.15(a), 15.12.1, 15.11(2.10), 15.11.2.10 ...
    std::string head, tail;
    size_t i = 0;
    int dots = 0;
    for (; i < id.size(); ++i) {
        char c = id[i];
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && dots == 0)) {
            if (c == '.') ++dots;
            head += c;
        } else {
            break;
        }
    }
    for (; i < id.size(); ++i) {
        char c = id[i];
        if (c == '(' || c == ')' || c == '.') continue;
        tail += c;
    }
    // "15.19a" style: a trailing letter that is part of the example number
    if (head == "15.19" || head == "15.20" || head == "15.21") {
        if (!tail.empty() && tail[0] == 'a') {
            head += 'a';
            tail = tail.substr(1);
        }
    }
    if (tail.empty()) return head;
    // re-insert the dot for the two-level semi-Hopf ids
    if (head == "15.11" && tail.size() > 1)
        return head + "(" + tail.substr(0, 1) + "." + tail.substr(1) + ")";
    return head + "(" + tail + ")";
}

std::vector<std::string> all_ids() {
    std::vector<std::string> v;
    for (const auto& e : operator_entries()) v.push_back(e.id);
    for (const auto& e : pair_lists()) v.push_back(e.id);
    for (const auto& e : lift_entries()) v.push_back(e.id);
    for (const auto& e : semi_hopf_entries()) v.push_back(e.id);
    for (const auto& e : table_entries()) v.push_back(e.id);
    return v;
}

const TableEntry& find_table(const std::string& id) {
    auto n = normalize_id(id);
    for (const auto& e : table_entries())
        if (e.id == n) return e;
    throw DataError("no table entry with id " + id);
}

std::optional<SymBundle> bundle_for_id(const std::string& id) {
    auto n = normalize_id(id);
    for (const auto& e : operator_entries())
        if (e.id == n) return operator_bundle(e);
    for (const auto& e : lift_entries())
        if (e.id == n) return pair_bundle(e.algebra, e.pair);
    for (const auto& e : semi_hopf_entries())
        if (e.id == n) return semi_hopf_bundle(e);
    for (const auto& e : table_entries())
        if (e.id == n) return pair_bundle(e.algebra, e.pair);
    return std::nullopt;
}

} // namespace corpus
} // namespace turaev
