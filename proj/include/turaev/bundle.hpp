#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turaev/assignment.hpp"
#include "turaev/expr.hpp"
#include "turaev/grading.hpp"

namespace turaev {

/// Dense rank-3 tensor with small extents.
template <class T>
struct Tensor3 {
    int d0 = 0, d1 = 0, d2 = 0;
    std::vector<T> a;

    Tensor3() = default;
    Tensor3(int n0, int n1, int n2, T fill = T{})
        : d0(n0), d1(n1), d2(n2), a(static_cast<size_t>(n0) * n1 * n2, fill) {}

    T& at(int i, int j, int k) { return a[(static_cast<size_t>(i) * d1 + j) * d2 + k]; }
    const T& at(int i, int j, int k) const {
        return a[(static_cast<size_t>(i) * d1 + j) * d2 + k];
    }
};

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c, T fill = T{}) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/// Family of bilinear maps A_p (x) A_q -> A_{pq}: one structure-constant
/// tensor per grade pair, tensors[p][q].at(i,j,k) = coefficient of e_k.
template <class T>
struct BilinearFamily {
    std::vector<std::vector<Tensor3<T>>> tensors;
};

/// Family of square matrices, one per grade, plus a weight.
template <class T>
struct OperatorFamily {
    std::vector<Mat<T>> mats;
    T weight{};
};

/// Family of coproducts Delta_{p,q}: C_{pq} -> C_p (x) C_q:
/// tensors[p][q].at(c,i,j) = coefficient of e_i (x) e_j in Delta(e_c).
template <class T>
struct CoproductFamily {
    std::vector<std::vector<Tensor3<T>>> tensors;
};

/// Grade-wise coalgebra data: Delta_phi: A_phi -> A_phi (x) A_phi and an
/// optional counit per grade.
template <class T>
struct GradewiseCoalgebra {
    std::vector<Tensor3<T>> delta;               // [phi].at(a, j, k)
    std::vector<std::vector<T>> counit;          // [phi][i]; empty when absent
    bool has_counit() const { return !counit.empty(); }
};

/// Grade-wise algebra data: mul_phi: A_phi (x) A_phi -> A_phi and an optional
/// unit vector per grade.
template <class T>
struct GradewiseAlgebra {
    std::vector<Tensor3<T>> mul;                 // [phi].at(i, j, k)
    std::vector<std::vector<T>> unit;            // [phi][i]; empty when absent
    bool has_unit() const { return !unit.empty(); }
};

/// Antipode family S_phi: A_phi -> A_{phi^{-1}}; mats[phi] has
/// dims(phi^{-1}) rows and dims(phi) columns.
template <class T>
struct AntipodeFamily {
    std::vector<Mat<T>> mats;
};

/// The universal container: a graded space with named operation families.
/// T is either a concrete field element type or Expr (symbolic entries).
template <class T>
struct Bundle {
    GradeTable table = GradeTable::trivial();
    std::vector<int> dims;

    std::map<std::string, BilinearFamily<T>> bilinear;   // "mul", "prec", "succ", "dot", ...
    std::map<std::string, OperatorFamily<T>> operators;  // "R", "Q", ...
    std::optional<std::vector<T>> unit;                  // vector in the unit grade
    std::map<std::string, CoproductFamily<T>> coproducts; // "delta", "delta_prec", ...
    std::optional<std::vector<T>> counit;                // functional on the unit grade
    std::map<std::string, GradewiseCoalgebra<T>> gradewise_coalgebras; // "delta_phi"
    std::map<std::string, GradewiseAlgebra<T>> gradewise_algebras;     // "mul_phi"
    std::optional<AntipodeFamily<T>> antipode;

    std::string kind; // informal tag, e.g. "rb-t-algebra"

    int grades() const { return table.size(); }
    int dim(int p) const { return dims[static_cast<size_t>(p)]; }

    BilinearFamily<T>& add_bilinear(const std::string& name) {
        auto& fam = bilinear[name];
        fam.tensors.assign(static_cast<size_t>(grades()), {});
        for (int p = 0; p < grades(); ++p) {
            fam.tensors[static_cast<size_t>(p)].resize(static_cast<size_t>(grades()));
            for (int q = 0; q < grades(); ++q)
                fam.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)] =
                    Tensor3<T>(dim(p), dim(q), dim(table.product(p, q)));
        }
        return fam;
    }

    CoproductFamily<T>& add_coproduct(const std::string& name) {
        auto& fam = coproducts[name];
        fam.tensors.assign(static_cast<size_t>(grades()), {});
        for (int p = 0; p < grades(); ++p) {
            fam.tensors[static_cast<size_t>(p)].resize(static_cast<size_t>(grades()));
            for (int q = 0; q < grades(); ++q)
                fam.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)] =
                    Tensor3<T>(dim(table.product(p, q)), dim(p), dim(q));
        }
        return fam;
    }

    OperatorFamily<T>& add_operator(const std::string& name, T weight) {
        auto& op = operators[name];
        op.weight = std::move(weight);
        op.mats.clear();
        for (int p = 0; p < grades(); ++p) op.mats.emplace_back(dim(p), dim(p));
        return op;
    }

    const BilinearFamily<T>& family(const std::string& name) const {
        auto it = bilinear.find(name);
        if (it == bilinear.end()) throw PreconditionError("bundle has no \"" + name + "\" family");
        return it->second;
    }
    const OperatorFamily<T>& op_family(const std::string& name) const {
        auto it = operators.find(name);
        if (it == operators.end())
            throw PreconditionError("bundle has no \"" + name + "\" operator family");
        return it->second;
    }
    const CoproductFamily<T>& coproduct(const std::string& name) const {
        auto it = coproducts.find(name);
        if (it == coproducts.end())
            throw PreconditionError("bundle has no \"" + name + "\" coproduct family");
        return it->second;
    }
};

/// Symbolic bundle: Expr entries plus the declared parameters and the loci
/// specializations must avoid (typically every denominator factor).
struct SymBundle {
    Bundle<Expr> data;
    std::vector<std::string> params;
    std::vector<Expr> forbidden;
    std::string provenance; // free-form note carried through serialization

    bool parametric() const { return !params.empty(); }
};

/// Evaluates every entry of a symbolic bundle at an assignment.
template <class F>
Bundle<typename F::Elem> specialize(const F& f, const Bundle<Expr>& b,
                                    const Assignment<F>& a) {
    using E = typename F::Elem;
    Bundle<E> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = b.kind;
    auto ev = [&](const Expr& e) { return e.eval(f, a); };
    for (const auto& [name, fam] : b.bilinear) {
        auto& dst = out.add_bilinear(name);
        for (int p = 0; p < b.grades(); ++p)
            for (int q = 0; q < b.grades(); ++q) {
                const auto& src = fam.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                auto& t = dst.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                for (size_t i = 0; i < src.a.size(); ++i) t.a[i] = ev(src.a[i]);
            }
    }
    for (const auto& [name, op] : b.operators) {
        auto& dst = out.add_operator(name, ev(op.weight));
        for (int p = 0; p < b.grades(); ++p)
            for (size_t i = 0; i < op.mats[static_cast<size_t>(p)].a.size(); ++i)
                dst.mats[static_cast<size_t>(p)].a[i] = ev(op.mats[static_cast<size_t>(p)].a[i]);
    }
    if (b.unit) {
        std::vector<E> u;
        for (const auto& e : *b.unit) u.push_back(ev(e));
        out.unit = std::move(u);
    }
    if (b.counit) {
        std::vector<E> u;
        for (const auto& e : *b.counit) u.push_back(ev(e));
        out.counit = std::move(u);
    }
    for (const auto& [name, fam] : b.coproducts) {
        auto& dst = out.add_coproduct(name);
        for (int p = 0; p < b.grades(); ++p)
            for (int q = 0; q < b.grades(); ++q) {
                const auto& src = fam.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                auto& t = dst.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                for (size_t i = 0; i < src.a.size(); ++i) t.a[i] = ev(src.a[i]);
            }
    }
    for (const auto& [name, gc] : b.gradewise_coalgebras) {
        GradewiseCoalgebra<E> dst;
        for (const auto& t : gc.delta) {
            Tensor3<E> s(t.d0, t.d1, t.d2);
            for (size_t i = 0; i < t.a.size(); ++i) s.a[i] = ev(t.a[i]);
            dst.delta.push_back(std::move(s));
        }
        for (const auto& v : gc.counit) {
            std::vector<E> s;
            for (const auto& e : v) s.push_back(ev(e));
            dst.counit.push_back(std::move(s));
        }
        out.gradewise_coalgebras[name] = std::move(dst);
    }
    for (const auto& [name, ga] : b.gradewise_algebras) {
        GradewiseAlgebra<E> dst;
        for (const auto& t : ga.mul) {
            Tensor3<E> s(t.d0, t.d1, t.d2);
            for (size_t i = 0; i < t.a.size(); ++i) s.a[i] = ev(t.a[i]);
            dst.mul.push_back(std::move(s));
        }
        for (const auto& v : ga.unit) {
            std::vector<E> s;
            for (const auto& e : v) s.push_back(ev(e));
            dst.unit.push_back(std::move(s));
        }
        out.gradewise_algebras[name] = std::move(dst);
    }
    if (b.antipode) {
        AntipodeFamily<E> dst;
        for (const auto& m : b.antipode->mats) {
            Mat<E> s(m.rows, m.cols);
            for (size_t i = 0; i < m.a.size(); ++i) s.a[i] = ev(m.a[i]);
            dst.mats.push_back(std::move(s));
        }
        out.antipode = std::move(dst);
    }
    return out;
}

// -- small vector helpers used throughout the checkers --

template <class F>
std::vector<typename F::Elem> zero_vec(const F& f, int n) {
    return std::vector<typename F::Elem>(static_cast<size_t>(n), f.zero());
}

template <class F>
void axpy(const F& f, std::vector<typename F::Elem>& dst, const typename F::Elem& c,
          const std::vector<typename F::Elem>& src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

template <class F>
bool vec_eq(const F& f, const std::vector<typename F::Elem>& a,
            const std::vector<typename F::Elem>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!f.eq(a[i], b[i])) return false;
    return true;
}

/// y = M x
template <class F>
std::vector<typename F::Elem> mat_apply(const F& f, const Mat<typename F::Elem>& m,
                                        const std::vector<typename F::Elem>& x) {
    auto y = zero_vec(f, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) y[static_cast<size_t>(i)] =
            f.add(y[static_cast<size_t>(i)], f.mul(m.at(i, j), x[static_cast<size_t>(j)]));
    return y;
}

/// Product of two coordinate vectors through a bilinear tensor.
template <class F>
std::vector<typename F::Elem> bil_apply(const F& f, const Tensor3<typename F::Elem>& t,
                                        const std::vector<typename F::Elem>& x,
                                        const std::vector<typename F::Elem>& y) {
    auto z = zero_vec(f, t.d2);
    for (int i = 0; i < t.d0; ++i) {
        if (f.is_zero(x[static_cast<size_t>(i)])) continue;
        for (int j = 0; j < t.d1; ++j) {
            auto c = f.mul(x[static_cast<size_t>(i)], y[static_cast<size_t>(j)]);
            if (f.is_zero(c)) continue;
            for (int k = 0; k < t.d2; ++k)
                z[static_cast<size_t>(k)] = f.add(z[static_cast<size_t>(k)], f.mul(c, t.at(i, j, k)));
        }
    }
    return z;
}

/// Basis vector e_i in an n-dimensional component.
template <class F>
std::vector<typename F::Elem> basis_vec(const F& f, int n, int i) {
    auto v = zero_vec(f, n);
    v[static_cast<size_t>(i)] = f.one();
    return v;
}

template <class F>
std::string vec_str(const F& f, const std::vector<typename F::Elem>& v) {
    std::string s;
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
        if (f.is_zero(v[i])) continue;
        if (!first) s += " + ";
        s += f.str(v[i]) + "*u" + std::to_string(i + 1);
        first = false;
    }
    return first ? std::string("0") : s;
}

} // namespace turaev
