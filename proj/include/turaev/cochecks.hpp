#pragma once

#include <string>

#include "turaev/checkers.hpp"

namespace turaev {

// Coalgebra-side checkers. Values live in tensor squares/cubes of the
// components; a rank-2 value is a Mat, a rank-3 value a Tensor3.

namespace detail {

template <class F>
using Mat2 = Mat<typename F::Elem>;

template <class F>
bool mat_eq(const F& f, const Mat2<F>& a, const Mat2<F>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (size_t i = 0; i < a.a.size(); ++i)
        if (!f.eq(a.a[i], b.a[i])) return false;
    return true;
}

template <class F>
std::string mat_str(const F& f, const Mat2<F>& m) {
    std::string s;
    bool first = true;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (f.is_zero(m.at(i, j))) continue;
            if (!first) s += " + ";
            s += f.str(m.at(i, j)) + "*u" + std::to_string(i + 1) + "(x)u" + std::to_string(j + 1);
            first = false;
        }
    return first ? std::string("0") : s;
}

template <class F>
bool t3_eq(const F& f, const Tensor3<typename F::Elem>& a, const Tensor3<typename F::Elem>& b) {
    if (a.d0 != b.d0 || a.d1 != b.d1 || a.d2 != b.d2) return false;
    for (size_t i = 0; i < a.a.size(); ++i)
        if (!f.eq(a.a[i], b.a[i])) return false;
    return true;
}

template <class F>
std::string t3_str(const F& f, const Tensor3<typename F::Elem>& t) {
    std::string s;
    bool first = true;
    for (int i = 0; i < t.d0; ++i)
        for (int j = 0; j < t.d1; ++j)
            for (int k = 0; k < t.d2; ++k) {
                if (f.is_zero(t.at(i, j, k))) continue;
                if (!first) s += " + ";
                s += f.str(t.at(i, j, k)) + "*u" + std::to_string(i + 1) + "(x)u" +
                     std::to_string(j + 1) + "(x)u" + std::to_string(k + 1);
                first = false;
            }
    return first ? std::string("0") : s;
}

/// Coproduct of a basis element as a matrix: D(e_c)[i][j].
template <class F>
Mat2<F> cop_of(const F& f, const Tensor3<typename F::Elem>& d, int c) {
    Mat2<F> m(d.d1, d.d2, f.zero());
    for (int i = 0; i < d.d1; ++i)
        for (int j = 0; j < d.d2; ++j) m.at(i, j) = d.at(c, i, j);
    return m;
}

/// (outer (x) id) composed with an inner coproduct on the left leg:
/// given inner: C -> C_a (x) C_t  (as matrix E) legs (a,t), apply
/// outer: C_a -> C_p (x) C_q entrywise on the first leg.
template <class F>
Tensor3<typename F::Elem> expand_left(const F& f, const Tensor3<typename F::Elem>& outer,
                                      const Mat2<F>& inner) {
    // result[i][j][k] = sum_m inner[m][k] * outer(e_m)[i][j]
    Tensor3<typename F::Elem> r(outer.d1, outer.d2, inner.cols, f.zero());
    for (int m = 0; m < inner.rows; ++m)
        for (int k = 0; k < inner.cols; ++k) {
            const auto& c = inner.at(m, k);
            if (f.is_zero(c)) continue;
            for (int i = 0; i < outer.d1; ++i)
                for (int j = 0; j < outer.d2; ++j)
                    r.at(i, j, k) = f.add(r.at(i, j, k), f.mul(c, outer.at(m, i, j)));
        }
    return r;
}

/// (id (x) outer): expand the second leg of `inner` by `outer`.
template <class F>
Tensor3<typename F::Elem> expand_right(const F& f, const Tensor3<typename F::Elem>& outer,
                                       const Mat2<F>& inner) {
    // result[i][j][k] = sum_m inner[i][m] * outer(e_m)[j][k]
    Tensor3<typename F::Elem> r(inner.rows, outer.d1, outer.d2, f.zero());
    for (int i = 0; i < inner.rows; ++i)
        for (int m = 0; m < inner.cols; ++m) {
            const auto& c = inner.at(i, m);
            if (f.is_zero(c)) continue;
            for (int j = 0; j < outer.d1; ++j)
                for (int k = 0; k < outer.d2; ++k)
                    r.at(i, j, k) = f.add(r.at(i, j, k), f.mul(c, outer.at(m, j, k)));
        }
    return r;
}

template <class F>
Tensor3<typename F::Elem> t3_add(const F& f, Tensor3<typename F::Elem> a,
                                 const Tensor3<typename F::Elem>& b) {
    for (size_t i = 0; i < a.a.size(); ++i) a.a[i] = f.add(a.a[i], b.a[i]);
    return a;
}

template <class F>
Mat2<F> mat_add(const F& f, Mat2<F> a, const Mat2<F>& b) {
    for (size_t i = 0; i < a.a.size(); ++i) a.a[i] = f.add(a.a[i], b.a[i]);
    return a;
}

template <class F>
Mat2<F> mat_scale(const F& f, const typename F::Elem& c, Mat2<F> a) {
    for (size_t i = 0; i < a.a.size(); ++i) a.a[i] = f.mul(c, a.a[i]);
    return a;
}

/// Apply an operator matrix to the left or right leg of a rank-2 value.
template <class F>
Mat2<F> op_left(const F& f, const Mat<typename F::Elem>& Q, const Mat2<F>& m) {
    Mat2<F> r(Q.rows, m.cols, f.zero());
    for (int i = 0; i < Q.rows; ++i)
        for (int i2 = 0; i2 < Q.cols; ++i2) {
            if (f.is_zero(Q.at(i, i2))) continue;
            for (int j = 0; j < m.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(Q.at(i, i2), m.at(i2, j)));
        }
    return r;
}

template <class F>
Mat2<F> op_right(const F& f, const Mat<typename F::Elem>& Q, const Mat2<F>& m) {
    Mat2<F> r(m.rows, Q.rows, f.zero());
    for (int j = 0; j < Q.rows; ++j)
        for (int j2 = 0; j2 < Q.cols; ++j2) {
            if (f.is_zero(Q.at(j, j2))) continue;
            for (int i = 0; i < m.rows; ++i)
                r.at(i, j) = f.add(r.at(i, j), f.mul(Q.at(j, j2), m.at(i, j2)));
        }
    return r;
}

template <class F>
struct CoScan {
    const F& f;
    const Bundle<typename F::Elem>& b;
    LawReport rep;

    CoScan(const F& field, const Bundle<typename F::Elem>& bundle, std::string law)
        : f(field), b(bundle) {
        rep.law = std::move(law);
    }

    void fail2(const std::string& identity, std::vector<int> grades, int c, const Mat2<F>& lhs,
               const Mat2<F>& rhs) {
        if (!rep.pass) return;
        rep.pass = false;
        Counterexample ce;
        ce.identity = identity;
        ce.where = where(grades, c);
        ce.grades = std::move(grades);
        ce.basis = {c};
        ce.lhs = mat_str(f, lhs);
        ce.rhs = mat_str(f, rhs);
        rep.counterexample = std::move(ce);
    }
    void fail3(const std::string& identity, std::vector<int> grades, int c,
               const Tensor3<typename F::Elem>& lhs, const Tensor3<typename F::Elem>& rhs) {
        if (!rep.pass) return;
        rep.pass = false;
        Counterexample ce;
        ce.identity = identity;
        ce.where = where(grades, c);
        ce.grades = std::move(grades);
        ce.basis = {c};
        ce.lhs = t3_str(f, lhs);
        ce.rhs = t3_str(f, rhs);
        rep.counterexample = std::move(ce);
    }
    std::string where(const std::vector<int>& grades, int c) const {
        std::string s = "grades (";
        for (size_t i = 0; i < grades.size(); ++i)
            s += (i ? "," : "") + b.table.name(grades[i]);
        return s + ") basis u" + std::to_string(c + 1);
    }
};

} // namespace detail

/// Coassociativity of a coproduct family, optionally the counit law.
template <class F>
LawReport check_t_coalgebra(const F& f, const Bundle<typename F::Elem>& b, bool counital = false,
                            const std::string& name = "delta") {
    using namespace detail;
    const auto& D = b.coproduct(name).tensors;
    auto d = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return D[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    CoScan<F> s(f, b, "t-coalgebra");
    const int n = b.grades();
    for (int p = 0; p < n && s.rep.pass; ++p)
        for (int q = 0; q < n && s.rep.pass; ++q)
            for (int t = 0; t < n && s.rep.pass; ++t) {
                int pq = b.table.product(p, q), qt = b.table.product(q, t);
                int pqt = b.table.product(pq, t);
                for (int c = 0; c < b.dim(pqt); ++c) {
                    auto lhs = expand_left(f, d(p, q), cop_of(f, d(pq, t), c));
                    auto rhs = expand_right(f, d(q, t), cop_of(f, d(p, qt), c));
                    ++s.rep.checked;
                    if (!t3_eq(f, lhs, rhs)) {
                        s.fail3("coassoc", {p, q, t}, c, lhs, rhs);
                        break;
                    }
                }
            }
    if (counital) {
        if (!b.table.has_unit())
            throw PreconditionError("counital check requires a monoid grading");
        if (!b.counit) throw PreconditionError("counital check requires counit data");
        int e = b.table.unit();
        LawReport u;
        u.law = "counitality";
        for (int p = 0; p < n && u.pass; ++p)
            for (int c = 0; c < b.dim(p); ++c) {
                // (id (x) eps) Delta_{p,1} = id = (eps (x) id) Delta_{1,p}
                auto right = zero_vec(f, b.dim(p));
                auto left = zero_vec(f, b.dim(p));
                for (int i = 0; i < b.dim(p); ++i) {
                    for (int j = 0; j < b.dim(e); ++j)
                        right[static_cast<size_t>(i)] =
                            f.add(right[static_cast<size_t>(i)],
                                  f.mul(d(p, e).at(c, i, j), (*b.counit)[static_cast<size_t>(j)]));
                    for (int j = 0; j < b.dim(e); ++j)
                        left[static_cast<size_t>(i)] =
                            f.add(left[static_cast<size_t>(i)],
                                  f.mul(d(e, p).at(c, j, i), (*b.counit)[static_cast<size_t>(j)]));
                }
                auto ec = basis_vec(f, b.dim(p), c);
                u.checked += 2;
                if (!vec_eq(f, right, ec) || !vec_eq(f, left, ec)) {
                    u.pass = false;
                    Counterexample ce;
                    ce.identity = "counit";
                    ce.grades = {p};
                    ce.basis = {c};
                    ce.where = "grade " + b.table.name(p) + " basis u" + std::to_string(c + 1);
                    ce.lhs = vec_str(f, vec_eq(f, right, ec) ? left : right);
                    ce.rhs = vec_str(f, ec);
                    u.counterexample = std::move(ce);
                    break;
                }
            }
        s.rep.absorb(std::move(u));
    }
    return s.rep;
}

/// Rota-Baxter cooperator law of weight gamma for coproduct family `delta`.
template <class F>
LawReport check_rb_t_coalgebra(const F& f, const Bundle<typename F::Elem>& b,
                               const std::string& op_name = "Q",
                               const std::string& name = "delta") {
    using namespace detail;
    const auto& D = b.coproduct(name).tensors;
    const auto& Q = b.op_family(op_name);
    CoScan<F> s(f, b, "rb-t-coalgebra");
    const int n = b.grades();
    for (int p = 0; p < n && s.rep.pass; ++p)
        for (int q = 0; q < n && s.rep.pass; ++q) {
            int pq = b.table.product(p, q);
            const auto& d = D[static_cast<size_t>(p)][static_cast<size_t>(q)];
            const auto& Qp = Q.mats[static_cast<size_t>(p)];
            const auto& Qq = Q.mats[static_cast<size_t>(q)];
            const auto& Qpq = Q.mats[static_cast<size_t>(pq)];
            for (int c = 0; c < b.dim(pq); ++c) {
                auto dc = cop_of(f, d, c);
                auto lhs = op_left(f, Qp, op_right(f, Qq, dc));
                // E = Delta(Q_{pq}(e_c))
                Mat2<F> E(d.d1, d.d2, f.zero());
                for (int m = 0; m < b.dim(pq); ++m) {
                    if (f.is_zero(Qpq.at(m, c))) continue;
                    E = mat_add(f, std::move(E), mat_scale(f, Qpq.at(m, c), cop_of(f, d, m)));
                }
                auto rhs = mat_add(f, op_right(f, Qq, E),
                                   mat_add(f, op_left(f, Qp, E), mat_scale(f, Q.weight, E)));
                ++s.rep.checked;
                if (!mat_eq(f, lhs, rhs)) {
                    s.fail2("co_rb", {p, q}, c, lhs, rhs);
                    break;
                }
            }
        }
    return s.rep;
}

enum class SplitVariant { Dendriform, Tridendriform };

/// The split-coproduct laws dual to the dendriform/tridendriform splittings.
template <class F>
LawReport check_split_t_coalgebra(const F& f, const Bundle<typename F::Elem>& b,
                                  SplitVariant variant) {
    using namespace detail;
    const auto& P = b.coproduct("delta_prec").tensors;
    const auto& S = b.coproduct("delta_succ").tensors;
    const CoproductFamily<typename F::Elem>* Dp =
        variant == SplitVariant::Tridendriform ? &b.coproduct("delta_dot") : nullptr;
    auto cp = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return P[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    auto cs = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return S[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    auto cd = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return Dp->tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };

    CoScan<F> s(f, b,
                variant == SplitVariant::Dendriform ? "dendriform-t-coalgebra"
                                                    : "tridendriform-t-coalgebra");
    const int n = b.grades();

    // Each law: sum of (outer (x) id)inner  ==  sum of (id (x) outer)inner.
    struct Term {
        int which_outer; // 0 prec, 1 succ, 2 dot
        int which_inner;
    };
    auto fam_at = [&](int w, int p, int q) -> const Tensor3<typename F::Elem>& {
        if (w == 0) return cp(p, q);
        if (w == 1) return cs(p, q);
        return cd(p, q);
    };
    auto run = [&](const std::string& id, std::vector<Term> lhsT, std::vector<Term> rhsT) {
        for (int p = 0; p < n && s.rep.pass; ++p)
            for (int q = 0; q < n && s.rep.pass; ++q)
                for (int t = 0; t < n && s.rep.pass; ++t) {
                    int pq = b.table.product(p, q), qt = b.table.product(q, t);
                    int pqt = b.table.product(pq, t);
                    for (int c = 0; c < b.dim(pqt); ++c) {
                        Tensor3<typename F::Elem> lhs(b.dim(p), b.dim(q), b.dim(t), f.zero());
                        Tensor3<typename F::Elem> rhs(b.dim(p), b.dim(q), b.dim(t), f.zero());
                        for (const auto& tm : lhsT)
                            lhs = t3_add(f, std::move(lhs),
                                         expand_left(f, fam_at(tm.which_outer, p, q),
                                                     cop_of(f, fam_at(tm.which_inner, pq, t), c)));
                        for (const auto& tm : rhsT)
                            rhs = t3_add(f, std::move(rhs),
                                         expand_right(f, fam_at(tm.which_outer, q, t),
                                                      cop_of(f, fam_at(tm.which_inner, p, qt), c)));
                        ++s.rep.checked;
                        if (!t3_eq(f, lhs, rhs)) {
                            s.fail3(id, {p, q, t}, c, lhs, rhs);
                            break;
                        }
                    }
                }
    };

    if (variant == SplitVariant::Dendriform) {
        run("coprec_coprec", {{0, 0}}, {{0, 0}, {1, 0}});
        run("cosucc_coprec", {{1, 0}}, {{0, 1}});
        run("cosum_cosucc", {{0, 1}, {1, 1}}, {{1, 1}});
    } else {
        run("coprec_coprec", {{0, 0}}, {{0, 0}, {1, 0}, {2, 0}});
        run("cosucc_coprec", {{1, 0}}, {{0, 1}});
        run("cosum_cosucc", {{0, 1}, {1, 1}, {2, 1}}, {{1, 1}});
        run("cosucc_codot", {{1, 2}}, {{2, 1}});
        run("coprec_codot", {{0, 2}}, {{1, 2}});
        run("codot_coprec", {{2, 0}}, {{0, 2}});
        run("codot_codot", {{2, 2}}, {{2, 2}});
    }
    return s.rep;
}

/// Semi-Hopf data: grade-wise coalgebras, multiplicative coproducts, the
/// cooperator law, and (when unital) the unit being set-like. The counit is
/// checked as coalgebra data; no counit condition is imposed on the product
/// beyond what the structure declares.
template <class F>
LawReport check_semi_hopf_algebra(const F& f, const Bundle<typename F::Elem>& b,
                                  const std::string& op_name = "R",
                                  const std::string& gc_name = "delta_phi") {
    using namespace detail;
    auto it = b.gradewise_coalgebras.find(gc_name);
    if (it == b.gradewise_coalgebras.end())
        throw PreconditionError("bundle has no \"" + gc_name + "\" grade-wise coalgebra");
    const auto& gc = it->second;
    const auto& M = b.family("mul").tensors;
    const auto& R = b.op_family(op_name);
    auto mul = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return M[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    const int n = b.grades();
    LawReport rep;
    rep.law = "semi-hopf";

    // (i) every grade carries a coalgebra
    {
        CoScan<F> s(f, b, "gradewise-coalgebra");
        for (int p = 0; p < n && s.rep.pass; ++p) {
            const auto& d = gc.delta[static_cast<size_t>(p)];
            for (int c = 0; c < b.dim(p); ++c) {
                auto lhs = expand_left(f, d, cop_of(f, d, c));
                auto rhs = expand_right(f, d, cop_of(f, d, c));
                ++s.rep.checked;
                if (!t3_eq(f, lhs, rhs)) {
                    s.fail3("coassoc", {p}, c, lhs, rhs);
                    break;
                }
            }
            if (!s.rep.pass) break;
            if (gc.has_counit()) {
                const auto& eps = gc.counit[static_cast<size_t>(p)];
                for (int c = 0; c < b.dim(p); ++c) {
                    auto right = zero_vec(f, b.dim(p));
                    auto left = zero_vec(f, b.dim(p));
                    for (int i = 0; i < b.dim(p); ++i)
                        for (int j = 0; j < b.dim(p); ++j) {
                            right[static_cast<size_t>(i)] = f.add(
                                right[static_cast<size_t>(i)],
                                f.mul(d.at(c, i, j), eps[static_cast<size_t>(j)]));
                            left[static_cast<size_t>(j)] = f.add(
                                left[static_cast<size_t>(j)],
                                f.mul(d.at(c, i, j), eps[static_cast<size_t>(i)]));
                        }
                    auto ec = basis_vec(f, b.dim(p), c);
                    s.rep.checked += 2;
                    if (!vec_eq(f, right, ec) || !vec_eq(f, left, ec)) {
                        Counterexample ce;
                        ce.identity = "counit";
                        ce.grades = {p};
                        ce.basis = {c};
                        ce.where = "grade " + b.table.name(p) + " basis u" + std::to_string(c + 1);
                        ce.lhs = vec_str(f, vec_eq(f, right, ec) ? left : right);
                        ce.rhs = vec_str(f, ec);
                        s.rep.pass = false;
                        s.rep.counterexample = std::move(ce);
                        break;
                    }
                }
            }
        }
        rep.absorb(std::move(s.rep));
    }

    // (ii) products are comultiplicative
    {
        CoScan<F> s(f, b, "mul-comultiplicative");
        for (int p = 0; p < n && s.rep.pass; ++p)
            for (int q = 0; q < n && s.rep.pass; ++q) {
                int pq = b.table.product(p, q);
                const auto& dp = gc.delta[static_cast<size_t>(p)];
                const auto& dq = gc.delta[static_cast<size_t>(q)];
                const auto& dpq = gc.delta[static_cast<size_t>(pq)];
                for (int a = 0; a < b.dim(p) && s.rep.pass; ++a)
                    for (int bb = 0; bb < b.dim(q); ++bb) {
                        Mat2<F> lhs(b.dim(pq), b.dim(pq), f.zero());
                        for (int k = 0; k < b.dim(pq); ++k) {
                            const auto& c = mul(p, q).at(a, bb, k);
                            if (f.is_zero(c)) continue;
                            lhs = mat_add(f, std::move(lhs), mat_scale(f, c, cop_of(f, dpq, k)));
                        }
                        Mat2<F> rhs(b.dim(pq), b.dim(pq), f.zero());
                        for (int i1 = 0; i1 < b.dim(p); ++i1)
                            for (int i2 = 0; i2 < b.dim(p); ++i2) {
                                if (f.is_zero(dp.at(a, i1, i2))) continue;
                                for (int j1 = 0; j1 < b.dim(q); ++j1)
                                    for (int j2 = 0; j2 < b.dim(q); ++j2) {
                                        auto c = f.mul(dp.at(a, i1, i2), dq.at(bb, j1, j2));
                                        if (f.is_zero(c)) continue;
                                        for (int k1 = 0; k1 < b.dim(pq); ++k1) {
                                            auto c1 = f.mul(c, mul(p, q).at(i1, j1, k1));
                                            if (f.is_zero(c1)) continue;
                                            for (int k2 = 0; k2 < b.dim(pq); ++k2)
                                                rhs.at(k1, k2) =
                                                    f.add(rhs.at(k1, k2),
                                                          f.mul(c1, mul(p, q).at(i2, j2, k2)));
                                        }
                                    }
                            }
                        ++s.rep.checked;
                        if (!mat_eq(f, lhs, rhs)) {
                            Counterexample ce;
                            ce.identity = "comultiplicative";
                            ce.grades = {p, q};
                            ce.basis = {a, bb};
                            ce.where = s.where({p, q}, a) + ", u" + std::to_string(bb + 1);
                            ce.lhs = mat_str(f, lhs);
                            ce.rhs = mat_str(f, rhs);
                            s.rep.pass = false;
                            s.rep.counterexample = std::move(ce);
                            break;
                        }
                    }
            }
        rep.absorb(std::move(s.rep));
    }

    // (iii) the cooperator law, grade by grade
    {
        CoScan<F> s(f, b, "cooperator");
        for (int p = 0; p < n && s.rep.pass; ++p) {
            const auto& d = gc.delta[static_cast<size_t>(p)];
            const auto& Rp = R.mats[static_cast<size_t>(p)];
            for (int a = 0; a < b.dim(p); ++a) {
                auto lhs = op_left(f, Rp, op_right(f, Rp, cop_of(f, d, a)));
                Mat2<F> E(b.dim(p), b.dim(p), f.zero());
                for (int m = 0; m < b.dim(p); ++m) {
                    if (f.is_zero(Rp.at(m, a))) continue;
                    E = mat_add(f, std::move(E), mat_scale(f, Rp.at(m, a), cop_of(f, d, m)));
                }
                auto rhs = mat_add(f, op_left(f, Rp, E),
                                   mat_add(f, op_right(f, Rp, E), mat_scale(f, R.weight, E)));
                ++s.rep.checked;
                if (!mat_eq(f, lhs, rhs)) {
                    s.fail2("cooperator", {p}, a, lhs, rhs);
                    break;
                }
            }
        }
        rep.absorb(std::move(s.rep));
    }

    // (iv) unital variant: the unit is a coalgebra map from the ground field
    if (b.unit && b.table.has_unit()) {
        int e = b.table.unit();
        LawReport u;
        u.law = "unit-grouplike";
        const auto& d = gc.delta[static_cast<size_t>(e)];
        Mat2<F> lhs(b.dim(e), b.dim(e), f.zero());
        for (int k = 0; k < b.dim(e); ++k) {
            if (f.is_zero((*b.unit)[static_cast<size_t>(k)])) continue;
            lhs = mat_add(f, std::move(lhs),
                          mat_scale(f, (*b.unit)[static_cast<size_t>(k)], cop_of(f, d, k)));
        }
        Mat2<F> rhs(b.dim(e), b.dim(e), f.zero());
        for (int i = 0; i < b.dim(e); ++i)
            for (int j = 0; j < b.dim(e); ++j)
                rhs.at(i, j) =
                    f.mul((*b.unit)[static_cast<size_t>(i)], (*b.unit)[static_cast<size_t>(j)]);
        u.checked = 1;
        if (!mat_eq(f, lhs, rhs)) {
            u.pass = false;
            Counterexample ce;
            ce.identity = "unit-grouplike";
            ce.grades = {e};
            ce.basis = {};
            ce.where = "unit grade " + b.table.name(e);
            ce.lhs = mat_str(f, lhs);
            ce.rhs = mat_str(f, rhs);
            u.counterexample = std::move(ce);
        }
        if (gc.has_counit()) {
            const auto& eps = gc.counit[static_cast<size_t>(e)];
            auto v = f.zero();
            for (int i = 0; i < b.dim(e); ++i)
                v = f.add(v, f.mul(eps[static_cast<size_t>(i)], (*b.unit)[static_cast<size_t>(i)]));
            ++u.checked;
            if (!f.eq(v, f.one()) && u.pass) {
                u.pass = false;
                Counterexample ce;
                ce.identity = "counit-of-unit";
                ce.grades = {e};
                ce.where = "unit grade " + b.table.name(e);
                ce.lhs = f.str(v);
                ce.rhs = f.str(f.one());
                u.counterexample = std::move(ce);
            }
        }
        rep.absorb(std::move(u));
    }
    return rep;
}

/// Antipode laws over a group grading, on top of the unital semi-Hopf data.
template <class F>
LawReport check_hopf_algebra(const F& f, const Bundle<typename F::Elem>& b,
                             const std::string& op_name = "R",
                             const std::string& gc_name = "delta_phi") {
    using namespace detail;
    if (b.table.kind() != GradeKind::Group)
        throw PreconditionError("Hopf check requires a group grading");
    if (!b.antipode) throw PreconditionError("Hopf check requires an antipode family");
    if (!b.unit) throw PreconditionError("Hopf check requires a unit");
    const auto& gc = b.gradewise_coalgebras.at(gc_name);
    if (!gc.has_counit()) throw PreconditionError("Hopf check requires grade-wise counits");
    const auto& M = b.family("mul").tensors;
    const auto& R = b.op_family(op_name);
    const auto& S = b.antipode->mats;
    auto mul = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return M[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    const int n = b.grades();
    LawReport rep;
    rep.law = "hopf";
    rep.absorb(check_semi_hopf_algebra(f, b, op_name, gc_name));

    CoScan<F> s(f, b, "antipode");
    int e = b.table.unit();
    for (int p = 0; p < n && s.rep.pass; ++p) {
        int pi = b.table.inverse(p);
        const auto& d = gc.delta[static_cast<size_t>(p)];
        const auto& eps = gc.counit[static_cast<size_t>(p)];
        for (int a = 0; a < b.dim(p); ++a) {
            // left: mul_{p^{-1},p} (S (x) id) Delta_p; right: mul_{p,p^{-1}} (id (x) S)
            auto left = zero_vec(f, b.dim(e));
            auto right = zero_vec(f, b.dim(e));
            for (int i = 0; i < b.dim(p); ++i)
                for (int j = 0; j < b.dim(p); ++j) {
                    const auto& c = d.at(a, i, j);
                    if (f.is_zero(c)) continue;
                    auto si = col(f, S[static_cast<size_t>(p)], i);
                    left = vec_add(f, std::move(left),
                                   vec_scale(f, c, bil_apply(f, mul(pi, p), si,
                                                             basis_vec(f, b.dim(p), j))));
                    auto sj = col(f, S[static_cast<size_t>(p)], j);
                    right = vec_add(f, std::move(right),
                                    vec_scale(f, c, bil_apply(f, mul(p, pi),
                                                              basis_vec(f, b.dim(p), i), sj)));
                }
            auto target = vec_scale(f, eps[static_cast<size_t>(a)], *b.unit);
            s.rep.checked += 2;
            if (!vec_eq(f, left, target)) {
                s.rep.pass = false;
                Counterexample ce;
                ce.identity = "antipode_left";
                ce.grades = {p};
                ce.basis = {a};
                ce.where = s.where({p}, a);
                ce.lhs = vec_str(f, left);
                ce.rhs = vec_str(f, target);
                s.rep.counterexample = std::move(ce);
                break;
            }
            if (!vec_eq(f, right, target)) {
                s.rep.pass = false;
                Counterexample ce;
                ce.identity = "antipode_right";
                ce.grades = {p};
                ce.basis = {a};
                ce.where = s.where({p}, a);
                ce.lhs = vec_str(f, right);
                ce.rhs = vec_str(f, target);
                s.rep.counterexample = std::move(ce);
                break;
            }
        }
    }
    rep.absorb(std::move(s.rep));

    // S_phi R_phi = R_{phi^{-1}} S_phi
    {
        CoScan<F> s2(f, b, "antipode-operator");
        for (int p = 0; p < n && s2.rep.pass; ++p) {
            int pi = b.table.inverse(p);
            for (int a = 0; a < b.dim(p); ++a) {
                auto lhs = mat_apply(f, S[static_cast<size_t>(p)],
                                     col(f, R.mats[static_cast<size_t>(p)], a));
                auto rhs = mat_apply(f, R.mats[static_cast<size_t>(pi)],
                                     col(f, S[static_cast<size_t>(p)], a));
                ++s2.rep.checked;
                if (!vec_eq(f, lhs, rhs)) {
                    s2.rep.pass = false;
                    Counterexample ce;
                    ce.identity = "antipode_rb";
                    ce.grades = {p};
                    ce.basis = {a};
                    ce.where = s2.where({p}, a);
                    ce.lhs = vec_str(f, lhs);
                    ce.rhs = vec_str(f, rhs);
                    s2.rep.counterexample = std::move(ce);
                    break;
                }
            }
        }
        rep.absorb(std::move(s2.rep));
    }
    return rep;
}

/// The coalgebra-side mirror: grade-wise algebras, multiplicative coproducts
/// as algebra maps, a grade-wise Rota-Baxter operator, counit as algebra map,
/// and antipode laws when the grading is a group.
template <class F>
LawReport check_hopf_t_coalgebra(const F& f, const Bundle<typename F::Elem>& b,
                                 const std::string& op_name = "Q",
                                 const std::string& ga_name = "mul_phi") {
    using namespace detail;
    auto it = b.gradewise_algebras.find(ga_name);
    if (it == b.gradewise_algebras.end())
        throw PreconditionError("bundle has no \"" + ga_name + "\" grade-wise algebra");
    const auto& ga = it->second;
    const auto& D = b.coproduct("delta").tensors;
    const auto& Q = b.op_family(op_name);
    auto d = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
        return D[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };
    const int n = b.grades();
    LawReport rep;
    rep.law = "hopf-t-coalgebra";

    // (i) grade-wise associative (unital) algebras
    {
        detail::Scan<F> s(f, b, "gradewise-algebra");
        for (int p = 0; p < n && s.rep.pass; ++p) {
            const auto& m = ga.mul[static_cast<size_t>(p)];
            for (int i = 0; i < b.dim(p) && s.rep.pass; ++i)
                for (int j = 0; j < b.dim(p) && s.rep.pass; ++j)
                    for (int k = 0; k < b.dim(p); ++k) {
                        auto lhs = bil_apply(f, m, slice(f, m, i, j), basis_vec(f, b.dim(p), k));
                        auto rhs = bil_apply(f, m, basis_vec(f, b.dim(p), i), slice(f, m, j, k));
                        ++s.rep.checked;
                        if (!vec_eq(f, lhs, rhs)) {
                            s.record_fail("gradewise_assoc", {p}, {i, j, k}, lhs, rhs);
                            break;
                        }
                    }
            if (ga.has_unit() && s.rep.pass) {
                const auto& u = ga.unit[static_cast<size_t>(p)];
                for (int i = 0; i < b.dim(p); ++i) {
                    auto ei = basis_vec(f, b.dim(p), i);
                    auto r = bil_apply(f, m, ei, u);
                    auto l = bil_apply(f, m, u, ei);
                    s.rep.checked += 2;
                    if (!vec_eq(f, r, ei) || !vec_eq(f, l, ei)) {
                        s.record_fail("gradewise_unit", {p}, {i}, vec_eq(f, r, ei) ? l : r, ei);
                        break;
                    }
                }
            }
        }
        rep.absorb(std::move(s.rep));
    }

    // (ii) coproducts are algebra maps
    {
        CoScan<F> s(f, b, "coproduct-multiplicative");
        for (int p = 0; p < n && s.rep.pass; ++p)
            for (int q = 0; q < n && s.rep.pass; ++q) {
                int pq = b.table.product(p, q);
                const auto& mp = ga.mul[static_cast<size_t>(p)];
                const auto& mq = ga.mul[static_cast<size_t>(q)];
                const auto& mpq = ga.mul[static_cast<size_t>(pq)];
                for (int a = 0; a < b.dim(pq) && s.rep.pass; ++a)
                    for (int c = 0; c < b.dim(pq); ++c) {
                        // Delta(a *_{pq} c) vs Delta(a) * Delta(c)
                        Mat2<F> lhs(b.dim(p), b.dim(q), f.zero());
                        for (int k = 0; k < b.dim(pq); ++k) {
                            const auto& coeff = mpq.at(a, c, k);
                            if (f.is_zero(coeff)) continue;
                            lhs = mat_add(f, std::move(lhs),
                                          mat_scale(f, coeff, cop_of(f, d(p, q), k)));
                        }
                        Mat2<F> rhs(b.dim(p), b.dim(q), f.zero());
                        auto da = cop_of(f, d(p, q), a);
                        auto dc = cop_of(f, d(p, q), c);
                        for (int i1 = 0; i1 < b.dim(p); ++i1)
                            for (int j1 = 0; j1 < b.dim(q); ++j1) {
                                if (f.is_zero(da.at(i1, j1))) continue;
                                for (int i2 = 0; i2 < b.dim(p); ++i2)
                                    for (int j2 = 0; j2 < b.dim(q); ++j2) {
                                        auto coeff = f.mul(da.at(i1, j1), dc.at(i2, j2));
                                        if (f.is_zero(coeff)) continue;
                                        for (int i = 0; i < b.dim(p); ++i) {
                                            auto c1 = f.mul(coeff, mp.at(i1, i2, i));
                                            if (f.is_zero(c1)) continue;
                                            for (int j = 0; j < b.dim(q); ++j)
                                                rhs.at(i, j) = f.add(
                                                    rhs.at(i, j), f.mul(c1, mq.at(j1, j2, j)));
                                        }
                                    }
                            }
                        ++s.rep.checked;
                        if (!mat_eq(f, lhs, rhs)) {
                            Counterexample ce;
                            ce.identity = "coproduct_multiplicative";
                            ce.grades = {p, q};
                            ce.basis = {a, c};
                            ce.where = s.where({p, q}, a) + ", u" + std::to_string(c + 1);
                            ce.lhs = mat_str(f, lhs);
                            ce.rhs = mat_str(f, rhs);
                            s.rep.pass = false;
                            s.rep.counterexample = std::move(ce);
                            break;
                        }
                    }
            }
        rep.absorb(std::move(s.rep));
    }

    // (iii) grade-wise Rota-Baxter law
    {
        detail::Scan<F> s(f, b, "gradewise-rb");
        for (int p = 0; p < n && s.rep.pass; ++p) {
            const auto& m = ga.mul[static_cast<size_t>(p)];
            const auto& Qp = Q.mats[static_cast<size_t>(p)];
            for (int i = 0; i < b.dim(p) && s.rep.pass; ++i)
                for (int j = 0; j < b.dim(p); ++j) {
                    auto qa = col(f, Qp, i);
                    auto qb = col(f, Qp, j);
                    auto lhs = bil_apply(f, m, qa, qb);
                    auto inner = vec_add(
                        f, bil_apply(f, m, qa, basis_vec(f, b.dim(p), j)),
                        vec_add(f, bil_apply(f, m, basis_vec(f, b.dim(p), i), qb),
                                vec_scale(f, Q.weight, slice(f, m, i, j))));
                    auto rhs = mat_apply(f, Qp, inner);
                    ++s.rep.checked;
                    if (!vec_eq(f, lhs, rhs)) {
                        s.record_fail("gradewise_rb", {p}, {i, j}, lhs, rhs);
                        break;
                    }
                }
        }
        rep.absorb(std::move(s.rep));
    }

    // (iv) counit laws + counit multiplicative on the unit-grade algebra
    if (b.counit && b.table.has_unit()) {
        rep.absorb(check_t_coalgebra(f, b, true));
        int e = b.table.unit();
        LawReport u;
        u.law = "counit-algebra-map";
        const auto& me = ga.mul[static_cast<size_t>(e)];
        for (int i = 0; i < b.dim(e) && u.pass; ++i)
            for (int j = 0; j < b.dim(e); ++j) {
                auto v = f.zero();
                for (int k = 0; k < b.dim(e); ++k)
                    v = f.add(v, f.mul(me.at(i, j, k), (*b.counit)[static_cast<size_t>(k)]));
                auto w = f.mul((*b.counit)[static_cast<size_t>(i)],
                               (*b.counit)[static_cast<size_t>(j)]);
                ++u.checked;
                if (!f.eq(v, w)) {
                    u.pass = false;
                    Counterexample ce;
                    ce.identity = "counit_multiplicative";
                    ce.grades = {e};
                    ce.basis = {i, j};
                    ce.where = "grade " + b.table.name(e) + " basis (u" + std::to_string(i + 1) +
                               ",u" + std::to_string(j + 1) + ")";
                    ce.lhs = f.str(v);
                    ce.rhs = f.str(w);
                    u.counterexample = std::move(ce);
                    break;
                }
            }
        rep.absorb(std::move(u));
    }

    // (v) antipode over a group grading
    if (b.table.kind() == GradeKind::Group && b.antipode) {
        const auto& S = b.antipode->mats;
        CoScan<F> s(f, b, "co-antipode");
        int e = b.table.unit();
        for (int p = 0; p < n && s.rep.pass; ++p) {
            int pi = b.table.inverse(p);
            if (!ga.has_unit()) throw PreconditionError("antipode check requires grade-wise units");
            const auto& up = ga.unit[static_cast<size_t>(p)];
            const auto& m = ga.mul[static_cast<size_t>(p)];
            for (int c = 0; c < b.dim(e); ++c) {
                // mul_p (S_{p^{-1}} (x) id) Delta_{p^{-1},p} = eps(c) 1_p
                //     = mul_p (id (x) S_{p^{-1}}) Delta_{p,p^{-1}}
                auto left = zero_vec(f, b.dim(p));
                auto dl = cop_of(f, d(pi, p), c);
                for (int i = 0; i < b.dim(pi); ++i)
                    for (int j = 0; j < b.dim(p); ++j) {
                        if (f.is_zero(dl.at(i, j))) continue;
                        auto si = col(f, S[static_cast<size_t>(pi)], i);
                        left = vec_add(f, std::move(left),
                                       vec_scale(f, dl.at(i, j),
                                                 bil_apply(f, m, si, basis_vec(f, b.dim(p), j))));
                    }
                auto right = zero_vec(f, b.dim(p));
                auto dr = cop_of(f, d(p, pi), c);
                for (int i = 0; i < b.dim(p); ++i)
                    for (int j = 0; j < b.dim(pi); ++j) {
                        if (f.is_zero(dr.at(i, j))) continue;
                        auto sj = col(f, S[static_cast<size_t>(pi)], j);
                        right = vec_add(f, std::move(right),
                                        vec_scale(f, dr.at(i, j),
                                                  bil_apply(f, m, basis_vec(f, b.dim(p), i), sj)));
                    }
                auto target = vec_scale(f, (*b.counit)[static_cast<size_t>(c)], up);
                s.rep.checked += 2;
                if (!vec_eq(f, left, target) || !vec_eq(f, right, target)) {
                    Counterexample ce;
                    ce.identity = vec_eq(f, left, target) ? "co_antipode_right" : "co_antipode_left";
                    ce.grades = {p};
                    ce.basis = {c};
                    ce.where = s.where({p}, c);
                    ce.lhs = vec_str(f, vec_eq(f, left, target) ? right : left);
                    ce.rhs = vec_str(f, target);
                    s.rep.pass = false;
                    s.rep.counterexample = std::move(ce);
                    break;
                }
            }
        }
        rep.absorb(std::move(s.rep));
        // Q_{phi^{-1}} S_phi = S_phi Q_phi
        CoScan<F> s2(f, b, "co-antipode-operator");
        for (int p = 0; p < n && s2.rep.pass; ++p) {
            int pi = b.table.inverse(p);
            for (int a = 0; a < b.dim(p); ++a) {
                auto lhs = mat_apply(f, Q.mats[static_cast<size_t>(pi)],
                                     col(f, S[static_cast<size_t>(p)], a));
                auto rhs = mat_apply(f, S[static_cast<size_t>(p)],
                                     col(f, Q.mats[static_cast<size_t>(p)], a));
                ++s2.rep.checked;
                if (!vec_eq(f, lhs, rhs)) {
                    Counterexample ce;
                    ce.identity = "co_antipode_rb";
                    ce.grades = {p};
                    ce.basis = {a};
                    ce.where = s2.where({p}, a);
                    ce.lhs = vec_str(f, lhs);
                    ce.rhs = vec_str(f, rhs);
                    s2.rep.pass = false;
                    s2.rep.counterexample = std::move(ce);
                    break;
                }
            }
        }
        rep.absorb(std::move(s2.rep));
    } else {
        rep.note("antipode checks skipped (grading is not a group)");
    }
    return rep;
}

} // namespace turaev
