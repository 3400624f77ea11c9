#include "turaev/grading.hpp"

namespace turaev {

std::string to_string(GradeKind k) {
    switch (k) {
    case GradeKind::Semigroup: return "semigroup";
    case GradeKind::Monoid: return "monoid";
    case GradeKind::Group: return "group";
    }
    return "?";
}

GradeTable GradeTable::validate(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw DataError("grade table: empty");
    GradeTable g;
    g.n_ = n;
    g.table_.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw DataError("grade table: row " + std::to_string(i) + " is not length " +
                            std::to_string(n));
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n)
                throw DataError("grade table: entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") out of range");
            g.table_[static_cast<size_t>(i) * n + j] = v;
        }
    }
    if (names.empty()) {
        for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    }
    if (static_cast<int>(names.size()) != n)
        throw DataError("grade table: need one name per element");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (names[i] == names[j]) throw DataError("grade table: duplicate name " + names[i]);
    g.names_ = std::move(names);

    // associativity, all n^3 triples
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int t = 0; t < n; ++t)
                if (g.product(g.product(p, q), t) != g.product(p, g.product(q, t)))
                    throw DataError("grade table: not associative at triple (" + g.names_[p] +
                                    "," + g.names_[q] + "," + g.names_[t] + ")");

    g.commutative_ = true;
    for (int p = 0; p < n && g.commutative_; ++p)
        for (int q = 0; q < n; ++q)
            if (g.product(p, q) != g.product(q, p)) {
                g.commutative_ = false;
                break;
            }

    for (int e = 0; e < n; ++e) {
        bool unit = true;
        for (int x = 0; x < n; ++x)
            if (g.product(e, x) != x || g.product(x, e) != x) {
                unit = false;
                break;
            }
        if (unit) {
            g.unit_ = e;
            break;
        }
    }

    g.kind_ = GradeKind::Semigroup;
    if (g.unit_) {
        g.kind_ = GradeKind::Monoid;
        g.inverses_.assign(static_cast<size_t>(n), -1);
        bool all = true;
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y)
                if (g.product(x, y) == *g.unit_ && g.product(y, x) == *g.unit_) {
                    g.inverses_[static_cast<size_t>(x)] = y;
                    break;
                }
            if (g.inverses_[static_cast<size_t>(x)] < 0) {
                all = false;
                break;
            }
        }
        if (all) g.kind_ = GradeKind::Group;
        else g.inverses_.clear();
    }
    return g;
}

int GradeTable::unit() const {
    if (!unit_) throw PreconditionError("grade table has no unit");
    return *unit_;
}

int GradeTable::inverse(int p) const {
    if (kind_ != GradeKind::Group) throw PreconditionError("grade table is not a group");
    return inverses_[static_cast<size_t>(p)];
}

std::optional<int> GradeTable::index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[static_cast<size_t>(i)] == name) return i;
    return std::nullopt;
}

std::string GradeTable::classify() const {
    std::string s = commutative_ ? "commutative " : "non-commutative ";
    return s + to_string(kind_);
}

GradeTable GradeTable::trivial() { return validate({{0}}, {"e"}); }

GradeTable GradeTable::monoid_1q() { return validate({{0, 1}, {1, 1}}, {"one", "q"}); }

GradeTable GradeTable::cyclic(int n) {
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        names.push_back("c" + std::to_string(i));
        for (int j = 0; j < n; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
    }
    return validate(t, names);
}

GradeTable GradeTable::named(const std::string& name) {
    if (name == "trivial") return trivial();
    if (name == "1q") return monoid_1q();
    if (name == "z2") return cyclic(2);
    if (name.size() > 1 && name[0] == 'z') {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 64) return cyclic(n);
    }
    throw DataError("unknown grade table name: " + name);
}

} // namespace turaev
