#include "turaev/io.hpp"

#include <fstream>
#include <sstream>

namespace turaev {

namespace {

const ExprField kExprField;

std::string esc_note(const std::string& s) {
    std::string out;
    for (char c : s) out += (c == '\n' ? ' ' : c);
    return out;
}

void write_sparse3(std::ostream& os, const GradeTable& tb,
                   const std::vector<std::vector<Tensor3<Expr>>>& tensors) {
    // entries sorted by (p, q, i, j, k); zero entries omitted
    long count = 0;
    std::ostringstream body;
    for (int p = 0; p < tb.size(); ++p)
        for (int q = 0; q < static_cast<int>(tensors[static_cast<size_t>(p)].size()); ++q) {
            const auto& t = tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
            for (int i = 0; i < t.d0; ++i)
                for (int j = 0; j < t.d1; ++j)
                    for (int k = 0; k < t.d2; ++k) {
                        if (t.at(i, j, k).is_constant_zero()) continue;
                        body << tb.name(p) << ' ' << tb.name(q) << ' ' << i << ' ' << j << ' '
                             << k << ' ' << t.at(i, j, k).str() << '\n';
                        ++count;
                    }
        }
    os << count << '\n' << body.str();
}

void write_vec(std::ostream& os, const std::vector<Expr>& v) {
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].str();
    os << '\n';
}

void write_mat(std::ostream& os, const Mat<Expr>& m) {
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j).str();
        os << '\n';
    }
}

struct Reader {
    std::vector<std::string> lines;
    size_t pos = 0;

    explicit Reader(const std::string& text) {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw DataError("bundle line " + std::to_string(pos) + ": " + what);
    }
    bool done() const { return pos >= lines.size(); }
    const std::string& peek() const {
        if (done()) throw DataError("bundle: unexpected end of document");
        return lines[pos];
    }
    std::string next() {
        auto s = peek();
        ++pos;
        return s;
    }
    std::vector<std::string> next_tokens() {
        std::istringstream is(next());
        std::vector<std::string> toks;
        std::string t;
        while (is >> t) toks.push_back(t);
        return toks;
    }
};

int parse_index(Reader& r, const std::string& tok, int limit, const std::string& what) {
    int v;
    try {
        v = std::stoi(tok);
    } catch (...) {
        r.fail("bad " + what + ": " + tok);
    }
    if (v < 0 || v >= limit) r.fail(what + " out of range: " + tok);
    return v;
}

} // namespace

std::string save_bundle(const SymBundle& sb) {
    const auto& b = sb.data;
    const auto& tb = b.table;
    std::ostringstream os;
    os << "turaev-bundle 1\n";
    if (!b.kind.empty()) os << "kind " << b.kind << '\n';
    if (!sb.provenance.empty()) os << "note " << esc_note(sb.provenance) << '\n';
    os << "scalars rational\n";
    if (!sb.params.empty()) {
        os << "params";
        for (const auto& p : sb.params) os << ' ' << p;
        os << '\n';
    }
    for (const auto& e : sb.forbidden) os << "forbidden " << e.str() << '\n';
    os << "grades " << tb.size() << '\n';
    os << "names";
    for (int i = 0; i < tb.size(); ++i) os << ' ' << tb.name(i);
    os << '\n';
    os << "cayley\n";
    for (int i = 0; i < tb.size(); ++i) {
        for (int j = 0; j < tb.size(); ++j) os << (j ? " " : "") << tb.product(i, j);
        os << '\n';
    }
    os << "dims";
    for (int d : b.dims) os << ' ' << d;
    os << '\n';
    if (b.unit) {
        os << "unit ";
        write_vec(os, *b.unit);
    }
    if (b.counit) {
        os << "counit ";
        write_vec(os, *b.counit);
    }
    for (const auto& [name, fam] : b.bilinear) {
        os << "bilinear " << name << ' ';
        write_sparse3(os, tb, fam.tensors);
    }
    for (const auto& [name, fam] : b.coproducts) {
        os << "coproduct " << name << ' ';
        write_sparse3(os, tb, fam.tensors);
    }
    for (const auto& [name, op] : b.operators) {
        os << "operator " << name << ' ' << op.weight.str() << '\n';
        for (int p = 0; p < tb.size(); ++p) {
            os << "grade " << tb.name(p) << '\n';
            write_mat(os, op.mats[static_cast<size_t>(p)]);
        }
    }
    for (const auto& [name, gc] : b.gradewise_coalgebras) {
        os << "gradewise-coalgebra " << name << (gc.has_counit() ? " counital" : "") << '\n';
        for (int p = 0; p < tb.size(); ++p) {
            const auto& t = gc.delta[static_cast<size_t>(p)];
            long count = 0;
            std::ostringstream body;
            for (int i = 0; i < t.d0; ++i)
                for (int j = 0; j < t.d1; ++j)
                    for (int k = 0; k < t.d2; ++k) {
                        if (t.at(i, j, k).is_constant_zero()) continue;
                        body << i << ' ' << j << ' ' << k << ' ' << t.at(i, j, k).str() << '\n';
                        ++count;
                    }
            os << "grade " << tb.name(p) << ' ' << count << '\n' << body.str();
            if (gc.has_counit()) {
                os << "eps ";
                write_vec(os, gc.counit[static_cast<size_t>(p)]);
            }
        }
    }
    for (const auto& [name, ga] : b.gradewise_algebras) {
        os << "gradewise-algebra " << name << (ga.has_unit() ? " unital" : "") << '\n';
        for (int p = 0; p < tb.size(); ++p) {
            const auto& t = ga.mul[static_cast<size_t>(p)];
            long count = 0;
            std::ostringstream body;
            for (int i = 0; i < t.d0; ++i)
                for (int j = 0; j < t.d1; ++j)
                    for (int k = 0; k < t.d2; ++k) {
                        if (t.at(i, j, k).is_constant_zero()) continue;
                        body << i << ' ' << j << ' ' << k << ' ' << t.at(i, j, k).str() << '\n';
                        ++count;
                    }
            os << "grade " << tb.name(p) << ' ' << count << '\n' << body.str();
            if (ga.has_unit()) {
                os << "eta ";
                write_vec(os, ga.unit[static_cast<size_t>(p)]);
            }
        }
    }
    if (b.antipode) {
        os << "antipode\n";
        for (int p = 0; p < tb.size(); ++p) {
            os << "grade " << tb.name(p) << '\n';
            write_mat(os, b.antipode->mats[static_cast<size_t>(p)]);
        }
    }
    os << "end\n";
    return os.str();
}

SymBundle load_bundle(const std::string& text) {
    Reader r(text);
    {
        auto toks = r.next_tokens();
        if (toks.size() != 2 || toks[0] != "turaev-bundle" || toks[1] != "1")
            r.fail("expected header \"turaev-bundle 1\"");
    }
    SymBundle sb;
    auto& b = sb.data;
    std::optional<GradeTable> table;
    std::vector<std::string> names;
    int ngrades = -1;
    bool have_dims = false;
    std::vector<std::string> pending_unit, pending_counit;

    auto grade_index = [&](Reader& rd, const std::string& tok) -> int {
        if (!table) rd.fail("grade data before cayley block");
        auto ix = table->index_of(tok);
        if (!ix) rd.fail("unknown grade name: " + tok);
        return *ix;
    };
    auto parse_entry_expr = [&](Reader& rd, const std::string& tok) -> Expr {
        try {
            return parse_expr(tok);
        } catch (const DataError& e) {
            rd.fail(e.what());
        }
    };

    while (!r.done()) {
        auto toks = r.next_tokens();
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        if (key == "end") break;
        if (key == "kind") {
            if (toks.size() != 2) r.fail("kind takes one tag");
            b.kind = toks[1];
        } else if (key == "note") {
            auto line = r.lines[r.pos - 1];
            sb.provenance = line.size() > 5 ? line.substr(5) : "";
        } else if (key == "scalars") {
            if (toks.size() < 2 || (toks[1] != "rational" && toks[1] != "prime"))
                r.fail("scalars must be rational or prime <p>");
        } else if (key == "params") {
            sb.params.assign(toks.begin() + 1, toks.end());
        } else if (key == "forbidden") {
            if (toks.size() != 2) r.fail("forbidden takes one expression");
            sb.forbidden.push_back(parse_entry_expr(r, toks[1]));
        } else if (key == "grades") {
            if (toks.size() != 2) r.fail("grades takes a count");
            ngrades = parse_index(r, toks[1], 1 << 16, "grade count");
        } else if (key == "names") {
            names.assign(toks.begin() + 1, toks.end());
        } else if (key == "cayley") {
            if (ngrades <= 0) r.fail("cayley before grades count");
            std::vector<std::vector<int>> rows;
            for (int i = 0; i < ngrades; ++i) {
                auto row = r.next_tokens();
                if (static_cast<int>(row.size()) != ngrades) r.fail("cayley row has wrong length");
                std::vector<int> out;
                for (const auto& t : row) out.push_back(parse_index(r, t, ngrades, "cayley entry"));
                rows.push_back(std::move(out));
            }
            table = GradeTable::validate(rows, names);
            b.table = *table;
        } else if (key == "dims") {
            if (!table) r.fail("dims before cayley block");
            if (static_cast<int>(toks.size()) - 1 != ngrades) r.fail("need one dim per grade");
            b.dims.clear();
            for (size_t i = 1; i < toks.size(); ++i)
                b.dims.push_back(parse_index(r, toks[i], 1 << 16, "dimension"));
            have_dims = true;
        } else if (key == "unit" || key == "counit") {
            if (!have_dims) r.fail(key + " before dims");
            std::vector<Expr> v;
            for (size_t i = 1; i < toks.size(); ++i) v.push_back(parse_entry_expr(r, toks[i]));
            if (!b.table.has_unit()) r.fail(key + " requires a monoid grading");
            if (static_cast<int>(v.size()) != b.dim(b.table.unit()))
                r.fail(key + " vector has wrong length");
            if (key == "unit") b.unit = std::move(v);
            else b.counit = std::move(v);
        } else if (key == "bilinear" || key == "coproduct") {
            if (!have_dims) r.fail(key + " before dims");
            if (toks.size() != 3) r.fail(key + " takes a name and an entry count");
            long count = std::stol(toks[2]);
            bool is_cop = key == "coproduct";
            auto& tensors = is_cop ? b.add_coproduct(toks[1]).tensors
                                   : b.add_bilinear(toks[1]).tensors;
            for (long e = 0; e < count; ++e) {
                auto row = r.next_tokens();
                if (row.size() != 6) r.fail("sparse entry needs 6 fields");
                int p = grade_index(r, row[0]);
                int q = grade_index(r, row[1]);
                auto& t = tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                int i = parse_index(r, row[2], t.d0, "tensor index i");
                int j = parse_index(r, row[3], t.d1, "tensor index j");
                int k = parse_index(r, row[4], t.d2, "tensor index k");
                t.at(i, j, k) = parse_entry_expr(r, row[5]);
            }
        } else if (key == "operator") {
            if (!have_dims) r.fail("operator before dims");
            if (toks.size() != 3) r.fail("operator takes a name and a weight expression");
            auto& op = b.add_operator(toks[1], parse_entry_expr(r, toks[2]));
            for (int p = 0; p < b.grades(); ++p) {
                auto head = r.next_tokens();
                if (head.size() != 2 || head[0] != "grade") r.fail("expected grade header");
                int g = grade_index(r, head[1]);
                auto& m = op.mats[static_cast<size_t>(g)];
                for (int i = 0; i < m.rows; ++i) {
                    auto row = r.next_tokens();
                    if (static_cast<int>(row.size()) != m.cols) r.fail("matrix row length");
                    for (int j = 0; j < m.cols; ++j) m.at(i, j) = parse_entry_expr(r, row[j]);
                }
            }
        } else if (key == "gradewise-coalgebra" || key == "gradewise-algebra") {
            if (!have_dims) r.fail(key + " before dims");
            bool is_co = key == "gradewise-coalgebra";
            bool flagged = toks.size() == 3 && (toks[2] == "counital" || toks[2] == "unital");
            if (toks.size() != 2 && !flagged) r.fail(key + " takes a name");
            GradewiseCoalgebra<Expr> gc;
            GradewiseAlgebra<Expr> ga;
            for (int p = 0; p < b.grades(); ++p) {
                auto head = r.next_tokens();
                if (head.size() != 3 || head[0] != "grade") r.fail("expected grade header");
                int g = grade_index(r, head[1]);
                if (g != p) r.fail("grade blocks must appear in table order");
                long count = std::stol(head[2]);
                Tensor3<Expr> t(b.dim(p), b.dim(p), b.dim(p));
                for (long e = 0; e < count; ++e) {
                    auto row = r.next_tokens();
                    if (row.size() != 4) r.fail("gradewise entry needs 4 fields");
                    int i = parse_index(r, row[0], b.dim(p), "index i");
                    int j = parse_index(r, row[1], b.dim(p), "index j");
                    int k = parse_index(r, row[2], b.dim(p), "index k");
                    t.at(i, j, k) = parse_entry_expr(r, row[3]);
                }
                if (is_co) gc.delta.push_back(std::move(t));
                else ga.mul.push_back(std::move(t));
                if (flagged) {
                    auto vrow = r.next_tokens();
                    if (vrow.size() != static_cast<size_t>(b.dim(p)) + 1 ||
                        (vrow[0] != "eps" && vrow[0] != "eta"))
                        r.fail("expected eps/eta vector");
                    std::vector<Expr> v;
                    for (size_t i = 1; i < vrow.size(); ++i)
                        v.push_back(parse_entry_expr(r, vrow[i]));
                    if (is_co) gc.counit.push_back(std::move(v));
                    else ga.unit.push_back(std::move(v));
                }
            }
            if (is_co) b.gradewise_coalgebras[toks[1]] = std::move(gc);
            else b.gradewise_algebras[toks[1]] = std::move(ga);
        } else if (key == "antipode") {
            if (!have_dims) r.fail("antipode before dims");
            if (b.table.kind() != GradeKind::Group) r.fail("antipode requires a group grading");
            AntipodeFamily<Expr> ant;
            ant.mats.resize(static_cast<size_t>(b.grades()));
            for (int p = 0; p < b.grades(); ++p) {
                auto head = r.next_tokens();
                if (head.size() != 2 || head[0] != "grade") r.fail("expected grade header");
                int g = grade_index(r, head[1]);
                int rows = b.dim(b.table.inverse(g));
                Mat<Expr> m(rows, b.dim(g));
                for (int i = 0; i < rows; ++i) {
                    auto row = r.next_tokens();
                    if (static_cast<int>(row.size()) != m.cols) r.fail("antipode row length");
                    for (int j = 0; j < m.cols; ++j) m.at(i, j) = parse_entry_expr(r, row[j]);
                }
                ant.mats[static_cast<size_t>(g)] = std::move(m);
            }
            b.antipode = std::move(ant);
        } else {
            r.fail("unknown block: " + key);
        }
    }
    if (!table) throw DataError("bundle: missing cayley block");
    if (!have_dims) throw DataError("bundle: missing dims");
    return sb;
}

SymBundle load_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open bundle file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_bundle(ss.str());
}

void save_bundle_file(const SymBundle& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write bundle file: " + path);
    out << save_bundle(b);
}

bool bundles_equal(const SymBundle& a, const SymBundle& b) {
    return save_bundle(a) == save_bundle(b);
}

} // namespace turaev
