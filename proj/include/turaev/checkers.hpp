#pragma once

#include <functional>
#include <string>

#include "turaev/bundle.hpp"
#include "turaev/report.hpp"

namespace turaev {

// Every checker walks all basis tuples of all relevant grade combinations in
// lexicographic order, so a failing report always carries the least
// counterexample and verdicts do not depend on any partitioning.

namespace detail {

template <class F>
using Vec = std::vector<typename F::Elem>;

/// Structure constants of a family at (p,q) applied to basis elements i,j.
template <class F>
Vec<F> slice(const F& f, const Tensor3<typename F::Elem>& t, int i, int j) {
    Vec<F> v(static_cast<size_t>(t.d2), f.zero());
    for (int k = 0; k < t.d2; ++k) v[static_cast<size_t>(k)] = t.at(i, j, k);
    return v;
}

/// Column i of a matrix: the image of basis element i.
template <class F>
Vec<F> col(const F& f, const Mat<typename F::Elem>& m, int i) {
    Vec<F> v(static_cast<size_t>(m.rows), f.zero());
    for (int r = 0; r < m.rows; ++r) v[static_cast<size_t>(r)] = m.at(r, i);
    return v;
}

template <class F>
Vec<F> vec_add(const F& f, Vec<F> a, const Vec<F>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
    return a;
}

template <class F>
Vec<F> vec_sub(const F& f, Vec<F> a, const Vec<F>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = f.sub(a[i], b[i]);
    return a;
}

template <class F>
Vec<F> vec_scale(const F& f, const typename F::Elem& c, Vec<F> a) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = f.mul(c, a[i]);
    return a;
}

template <class F>
bool vec_zero(const F& f, const Vec<F>& a) {
    for (const auto& x : a)
        if (!f.is_zero(x)) return false;
    return true;
}

template <class F>
struct Scan {
    const F& f;
    const Bundle<typename F::Elem>& b;
    LawReport rep;

    Scan(const F& field, const Bundle<typename F::Elem>& bundle, std::string law)
        : f(field), b(bundle) {
        rep.law = std::move(law);
    }

    std::string loc(const std::vector<int>& grades, const std::vector<int>& basis) const {
        std::string s = "grades (";
        for (size_t i = 0; i < grades.size(); ++i)
            s += (i ? "," : "") + b.table.name(grades[i]);
        s += ") basis (";
        for (size_t i = 0; i < basis.size(); ++i)
            s += (i ? "," : "") + ("u" + std::to_string(basis[i] + 1));
        return s + ")";
    }

    void record_fail(const std::string& identity, std::vector<int> grades,
                     std::vector<int> basis, const Vec<F>& lhs, const Vec<F>& rhs) {
        if (!rep.pass) return;
        rep.pass = false;
        Counterexample c;
        c.identity = identity;
        c.where = loc(grades, basis);
        c.grades = std::move(grades);
        c.basis = std::move(basis);
        c.lhs = vec_str(f, lhs);
        c.rhs = vec_str(f, rhs);
        rep.counterexample = std::move(c);
    }

    /// fn(p,q,i,j,lhs,rhs) fills both sides; scans all grade and basis pairs.
    template <class Fn>
    void pairs(const std::string& identity, Fn&& fn) {
        const int n = b.grades();
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int i = 0; i < b.dim(p); ++i)
                    for (int j = 0; j < b.dim(q); ++j) {
                        Vec<F> lhs, rhs;
                        fn(p, q, i, j, lhs, rhs);
                        ++rep.checked;
                        if (!vec_eq(f, lhs, rhs)) {
                            record_fail(identity, {p, q}, {i, j}, lhs, rhs);
                            return;
                        }
                    }
    }

    template <class Fn>
    void triples(const std::string& identity, Fn&& fn) {
        const int n = b.grades();
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int t = 0; t < n; ++t)
                    for (int i = 0; i < b.dim(p); ++i)
                        for (int j = 0; j < b.dim(q); ++j)
                            for (int k = 0; k < b.dim(t); ++k) {
                                Vec<F> lhs, rhs;
                                fn(p, q, t, i, j, k, lhs, rhs);
                                ++rep.checked;
                                if (!vec_eq(f, lhs, rhs)) {
                                    record_fail(identity, {p, q, t}, {i, j, k}, lhs, rhs);
                                    return;
                                }
                            }
    }
};

inline void require_commutative(const GradeTable& t, const std::string& law) {
    if (!t.commutative())
        throw PreconditionError(law + " requires a commutative grading (grades pq and qp differ)");
}

} // namespace detail

struct TAlgebraOptions {
    bool unital = false;
    bool commutative = false;
};

/// Graded associativity, optionally unitality and commutativity.
template <class F>
LawReport check_t_algebra(const F& f, const Bundle<typename F::Elem>& b,
                          TAlgebraOptions opt = {}, const std::string& mul_name = "mul") {
    using namespace detail;
    const auto& mul = b.family(mul_name).tensors;
    auto at = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "t-algebra");
    s.triples("assoc", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        lhs = bil_apply(f, at(pq, t), slice(f, at(p, q), i, j), basis_vec(f, b.dim(t), k));
        rhs = bil_apply(f, at(p, qt), basis_vec(f, b.dim(p), i), slice(f, at(q, t), j, k));
    });
    if (opt.unital) {
        if (!b.table.has_unit())
            throw PreconditionError("unital check requires a monoid grading");
        if (!b.unit) throw PreconditionError("unital check requires unit data");
        int e = b.table.unit();
        LawReport u;
        u.law = "unitality";
        for (int p = 0; p < b.grades() && u.pass; ++p)
            for (int i = 0; i < b.dim(p); ++i) {
                auto ei = basis_vec(f, b.dim(p), i);
                auto right = bil_apply(f, at(p, e), ei, *b.unit);
                auto left = bil_apply(f, at(e, p), *b.unit, ei);
                u.checked += 2;
                if (!vec_eq(f, right, ei) || !vec_eq(f, left, ei)) {
                    u.pass = false;
                    Counterexample c;
                    c.identity = "unit";
                    c.grades = {p};
                    c.basis = {i};
                    c.where = "grade " + b.table.name(p) + " basis u" + std::to_string(i + 1);
                    c.lhs = vec_str(f, vec_eq(f, right, ei) ? left : right);
                    c.rhs = vec_str(f, ei);
                    u.counterexample = std::move(c);
                    break;
                }
            }
        s.rep.absorb(std::move(u));
    }
    if (opt.commutative) {
        detail::require_commutative(b.table, "commutativity check");
        Scan<F> c(f, b, "commutative");
        c.pairs("comm", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
            lhs = slice(f, at(p, q), i, j);
            rhs = slice(f, at(q, p), j, i);
        });
        s.rep.absorb(std::move(c.rep));
    }
    return s.rep;
}

/// Graded Rota-Baxter law for the named operator family against `mul`.
template <class F>
LawReport check_rota_baxter(const F& f, const Bundle<typename F::Elem>& b,
                            const std::string& op_name = "R",
                            const std::string& mul_name = "mul") {
    using namespace detail;
    const auto& mul = b.family(mul_name).tensors;
    const auto& R = b.op_family(op_name);
    auto at = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "rota-baxter");
    s.pairs("rb", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q);
        auto ra = col(f, R.mats[static_cast<size_t>(p)], i);
        auto rb = col(f, R.mats[static_cast<size_t>(q)], j);
        auto ei = basis_vec(f, b.dim(p), i);
        auto ej = basis_vec(f, b.dim(q), j);
        lhs = bil_apply(f, at(p, q), ra, rb);
        auto inner = vec_add(f, bil_apply(f, at(p, q), ra, ej),
                             vec_add(f, bil_apply(f, at(p, q), ei, rb),
                                     vec_scale(f, R.weight, slice(f, at(p, q), i, j))));
        rhs = mat_apply(f, R.mats[static_cast<size_t>(pq)], inner);
    });
    return s.rep;
}

template <class F>
LawReport check_dendriform(const F& f, const Bundle<typename F::Elem>& b) {
    using namespace detail;
    const auto& P = b.family("prec").tensors;
    const auto& S = b.family("succ").tensors;
    auto prec = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return P[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    auto succ = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return S[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "dendriform");
    s.triples("prec_prec", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        auto ei = basis_vec(f, b.dim(p), i);
        auto ek = basis_vec(f, b.dim(t), k);
        lhs = bil_apply(f, prec(pq, t), slice(f, prec(p, q), i, j), ek);
        auto inner = vec_add(f, slice(f, prec(q, t), j, k), slice(f, succ(q, t), j, k));
        rhs = bil_apply(f, prec(p, qt), ei, inner);
    });
    s.triples("succ_prec", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        auto ei = basis_vec(f, b.dim(p), i);
        auto ek = basis_vec(f, b.dim(t), k);
        lhs = bil_apply(f, prec(pq, t), slice(f, succ(p, q), i, j), ek);
        rhs = bil_apply(f, succ(p, qt), ei, slice(f, prec(q, t), j, k));
    });
    s.triples("sum_succ", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        auto ei = basis_vec(f, b.dim(p), i);
        auto ek = basis_vec(f, b.dim(t), k);
        auto sum = vec_add(f, slice(f, prec(p, q), i, j), slice(f, succ(p, q), i, j));
        lhs = bil_apply(f, succ(pq, t), sum, ek);
        rhs = bil_apply(f, succ(p, qt), ei, slice(f, succ(q, t), j, k));
    });
    return s.rep;
}

template <class F>
LawReport check_tridendriform(const F& f, const Bundle<typename F::Elem>& b) {
    using namespace detail;
    const auto& P = b.family("prec").tensors;
    const auto& S = b.family("succ").tensors;
    const auto& D = b.family("dot").tensors;
    auto prec = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return P[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    auto succ = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return S[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    auto dot = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return D[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "tridendriform");
    auto basis = [&](int g, int i) { return basis_vec(f, b.dim(g), i); };
    s.triples("prec_prec", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        lhs = bil_apply(f, prec(pq, t), slice(f, prec(p, q), i, j), basis(t, k));
        auto inner = vec_add(f, slice(f, prec(q, t), j, k),
                             vec_add(f, slice(f, succ(q, t), j, k), slice(f, dot(q, t), j, k)));
        rhs = bil_apply(f, prec(p, qt), basis(p, i), inner);
    });
    s.triples("succ_prec", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        lhs = bil_apply(f, prec(pq, t), slice(f, succ(p, q), i, j), basis(t, k));
        rhs = bil_apply(f, succ(p, qt), basis(p, i), slice(f, prec(q, t), j, k));
    });
    s.triples("sum_succ", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        auto sum = vec_add(f, slice(f, prec(p, q), i, j),
                           vec_add(f, slice(f, succ(p, q), i, j), slice(f, dot(p, q), i, j)));
        lhs = bil_apply(f, succ(pq, t), sum, basis(t, k));
        rhs = bil_apply(f, succ(p, qt), basis(p, i), slice(f, succ(q, t), j, k));
    });
    s.triples("succ_dot", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        lhs = bil_apply(f, dot(pq, t), slice(f, succ(p, q), i, j), basis(t, k));
        rhs = bil_apply(f, succ(p, qt), basis(p, i), slice(f, dot(q, t), j, k));
    });
    s.triples("prec_dot", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        lhs = bil_apply(f, dot(pq, t), slice(f, prec(p, q), i, j), basis(t, k));
        rhs = bil_apply(f, dot(p, qt), basis(p, i), slice(f, succ(q, t), j, k));
    });
    s.triples("dot_prec", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        lhs = bil_apply(f, prec(pq, t), slice(f, dot(p, q), i, j), basis(t, k));
        rhs = bil_apply(f, dot(p, qt), basis(p, i), slice(f, prec(q, t), j, k));
    });
    s.triples("dot_dot", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        lhs = bil_apply(f, dot(pq, t), slice(f, dot(p, q), i, j), basis(t, k));
        rhs = bil_apply(f, dot(p, qt), basis(p, i), slice(f, dot(q, t), j, k));
    });
    return s.rep;
}

/// Left symmetry of the associator, over a commutative grading.
template <class F>
LawReport check_prelie(const F& f, const Bundle<typename F::Elem>& b,
                       const std::string& name = "ast") {
    using namespace detail;
    require_commutative(b.table, "pre-Lie check");
    const auto& A = b.family(name).tensors;
    auto ast = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return A[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "pre-lie");
    s.triples("left_symmetry", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t);
        int pt = b.table.product(p, t), qp = b.table.product(q, p);
        auto a1 = bil_apply(f, ast(p, qt), basis_vec(f, b.dim(p), i), slice(f, ast(q, t), j, k));
        auto a2 = bil_apply(f, ast(pq, t), slice(f, ast(p, q), i, j), basis_vec(f, b.dim(t), k));
        auto b1 = bil_apply(f, ast(q, pt), basis_vec(f, b.dim(q), j), slice(f, ast(p, t), i, k));
        auto b2 = bil_apply(f, ast(qp, t), slice(f, ast(q, p), j, i), basis_vec(f, b.dim(t), k));
        lhs = vec_sub(f, a1, a2);
        rhs = vec_sub(f, b1, b2);
    });
    return s.rep;
}

template <class F>
LawReport check_lie(const F& f, const Bundle<typename F::Elem>& b,
                    const std::string& name = "bracket") {
    using namespace detail;
    require_commutative(b.table, "Lie check");
    const auto& B = b.family(name).tensors;
    auto br = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return B[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "lie");
    s.pairs("antisymmetry", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
        lhs = vec_add(f, slice(f, br(p, q), i, j), slice(f, br(q, p), j, i));
        rhs = zero_vec(f, b.dim(b.table.product(p, q)));
    });
    s.triples("jacobi", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t), tp = b.table.product(t, p);
        auto x = bil_apply(f, br(pq, t), slice(f, br(p, q), i, j), basis_vec(f, b.dim(t), k));
        auto y = bil_apply(f, br(qt, p), slice(f, br(q, t), j, k), basis_vec(f, b.dim(p), i));
        auto z = bil_apply(f, br(tp, q), slice(f, br(t, p), k, i), basis_vec(f, b.dim(q), j));
        lhs = vec_add(f, x, vec_add(f, y, z));
        rhs = zero_vec(f, b.dim(b.table.product(pq, t)));
    });
    return s.rep;
}

template <class F>
LawReport check_rb_lie(const F& f, const Bundle<typename F::Elem>& b,
                       const std::string& op_name = "R",
                       const std::string& name = "bracket") {
    using namespace detail;
    require_commutative(b.table, "Rota-Baxter Lie check");
    const auto& B = b.family(name).tensors;
    const auto& R = b.op_family(op_name);
    auto br = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return B[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "rb-lie");
    s.pairs("rb_bracket", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q);
        auto ra = col(f, R.mats[static_cast<size_t>(p)], i);
        auto rb = col(f, R.mats[static_cast<size_t>(q)], j);
        auto ei = basis_vec(f, b.dim(p), i);
        auto ej = basis_vec(f, b.dim(q), j);
        lhs = bil_apply(f, br(p, q), ra, rb);
        auto inner = vec_add(f, bil_apply(f, br(p, q), ei, rb),
                             vec_add(f, bil_apply(f, br(p, q), ra, ej),
                                     vec_scale(f, R.weight, slice(f, br(p, q), i, j))));
        rhs = mat_apply(f, R.mats[static_cast<size_t>(pq)], inner);
    });
    return s.rep;
}

template <class F>
LawReport check_zinbiel(const F& f, const Bundle<typename F::Elem>& b,
                        const std::string& name = "star") {
    using namespace detail;
    require_commutative(b.table, "Zinbiel check");
    const auto& Z = b.family(name).tensors;
    auto st = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return Z[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "zinbiel");
    s.triples("zinbiel", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t), qp = b.table.product(q, p);
        lhs = bil_apply(f, st(p, qt), basis_vec(f, b.dim(p), i), slice(f, st(q, t), j, k));
        auto r1 = bil_apply(f, st(pq, t), slice(f, st(p, q), i, j), basis_vec(f, b.dim(t), k));
        auto r2 = bil_apply(f, st(qp, t), slice(f, st(q, p), j, i), basis_vec(f, b.dim(t), k));
        rhs = vec_add(f, r1, r2);
    });
    return s.rep;
}

/// Commutative product + Lie bracket + Leibniz rule.
template <class F>
LawReport check_poisson(const F& f, const Bundle<typename F::Elem>& b) {
    using namespace detail;
    require_commutative(b.table, "Poisson check");
    LawReport rep;
    rep.law = "poisson";
    rep.absorb(check_t_algebra(f, b, {.unital = false, .commutative = true}));
    rep.absorb(check_lie(f, b));
    const auto& M = b.family("mul").tensors;
    const auto& B = b.family("bracket").tensors;
    auto mul = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return M[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    auto br = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return B[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "leibniz");
    s.triples("leibniz", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qt = b.table.product(q, t), pt = b.table.product(p, t);
        lhs = bil_apply(f, br(p, qt), basis_vec(f, b.dim(p), i), slice(f, mul(q, t), j, k));
        auto r1 = bil_apply(f, mul(pq, t), slice(f, br(p, q), i, j), basis_vec(f, b.dim(t), k));
        auto r2 = bil_apply(f, mul(q, pt), basis_vec(f, b.dim(q), j), slice(f, br(p, t), i, k));
        rhs = vec_add(f, r1, r2);
    });
    rep.absorb(std::move(s.rep));
    return rep;
}

/// Zinbiel + pre-Lie + the two mixed compatibilities.
template <class F>
LawReport check_prepoisson(const F& f, const Bundle<typename F::Elem>& b) {
    using namespace detail;
    require_commutative(b.table, "pre-Poisson check");
    LawReport rep;
    rep.law = "pre-poisson";
    rep.absorb(check_zinbiel(f, b));
    rep.absorb(check_prelie(f, b));
    const auto& Z = b.family("star").tensors;
    const auto& A = b.family("ast").tensors;
    auto st = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return Z[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    auto ast = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return A[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    Scan<F> s(f, b, "pre-poisson-mixed");
    s.triples("mixed_star", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qp = b.table.product(q, p);
        int qt = b.table.product(q, t), pt = b.table.product(p, t);
        auto l1 = bil_apply(f, st(pq, t), slice(f, ast(p, q), i, j), basis_vec(f, b.dim(t), k));
        auto l2 = bil_apply(f, st(qp, t), slice(f, ast(q, p), j, i), basis_vec(f, b.dim(t), k));
        lhs = vec_sub(f, l1, l2);
        auto r1 = bil_apply(f, ast(p, qt), basis_vec(f, b.dim(p), i), slice(f, st(q, t), j, k));
        auto r2 = bil_apply(f, st(q, pt), basis_vec(f, b.dim(q), j), slice(f, ast(p, t), i, k));
        rhs = vec_sub(f, r1, r2);
    });
    s.triples("mixed_ast", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q), qp = b.table.product(q, p);
        int qt = b.table.product(q, t), pt = b.table.product(p, t);
        auto l1 = bil_apply(f, ast(pq, t), slice(f, st(p, q), i, j), basis_vec(f, b.dim(t), k));
        auto l2 = bil_apply(f, ast(qp, t), slice(f, st(q, p), j, i), basis_vec(f, b.dim(t), k));
        lhs = vec_add(f, l1, l2);
        auto r1 = bil_apply(f, st(p, qt), basis_vec(f, b.dim(p), i), slice(f, ast(q, t), j, k));
        auto r2 = bil_apply(f, st(q, pt), basis_vec(f, b.dim(q), j), slice(f, ast(p, t), i, k));
        rhs = vec_add(f, r1, r2);
    });
    rep.absorb(std::move(s.rep));
    return rep;
}

/// Poisson + Rota-Baxter on the product + Rota-Baxter on the bracket,
/// all with one shared operator family and weight.
template <class F>
LawReport check_rb_poisson(const F& f, const Bundle<typename F::Elem>& b,
                           const std::string& op_name = "R") {
    LawReport rep;
    rep.law = "rb-poisson";
    rep.absorb(check_poisson(f, b));
    rep.absorb(check_rota_baxter(f, b, op_name));
    rep.absorb(check_rb_lie(f, b, op_name));
    return rep;
}

} // namespace turaev
