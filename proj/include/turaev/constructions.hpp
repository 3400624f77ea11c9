#pragma once

#include <functional>

#include "turaev/cochecks.hpp"

namespace turaev {

// Executable forms of the constructive statements: each takes a bundle that
// satisfies the hypothesis (validated, with a witness on refusal) and returns
// a bundle that is re-checked against the target law unless `assert_post` is
// off (the fast mode used by search inner loops and symbolic building).

namespace detail {

template <class F>
void assert_report(const LawReport& rep, const std::string& what) {
    if (!rep.pass)
        throw Error("postcondition failed: " + what + "\n" + rep.to_text(2));
}

} // namespace detail

/// Companion operator family: grade-wise -weight*id - R.
template <class F>
OperatorFamily<typename F::Elem> tilde_operator(const F& f,
                                                const OperatorFamily<typename F::Elem>& R) {
    OperatorFamily<typename F::Elem> out;
    out.weight = R.weight;
    for (const auto& m : R.mats) {
        Mat<typename F::Elem> t(m.rows, m.cols, f.zero());
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) {
                auto v = f.neg(m.at(i, j));
                if (i == j) v = f.sub(v, R.weight);
                t.at(i, j) = v;
            }
        out.mats.push_back(std::move(t));
    }
    return out;
}

struct QuasiIdempotency {
    bool idempotent = false;       // R^2 = R on every grade
    bool quasi_idempotent = false; // R^2 = -weight * R on every grade
};

template <class F>
QuasiIdempotency quasi_idempotency_test(const F& f, const OperatorFamily<typename F::Elem>& R) {
    QuasiIdempotency out{true, true};
    for (const auto& m : R.mats) {
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) {
                auto sq = f.zero();
                for (int k = 0; k < m.rows; ++k) sq = f.add(sq, f.mul(m.at(i, k), m.at(k, j)));
                if (!f.eq(sq, m.at(i, j))) out.idempotent = false;
                if (!f.eq(sq, f.neg(f.mul(R.weight, m.at(i, j))))) out.quasi_idempotent = false;
            }
    }
    return out;
}

template <class F>
struct AtkinsonWitness {
    std::vector<typename F::Elem> c; // element of A_{pq}
    bool factor_clause = false;      // R_p(a) . R_q(b) = R_{pq}(c)
    bool tilde_clause = false;       // tilde variant with the opposite sign
};

/// Witness from the forward direction of the factorization: requires a
/// nonzero weight.
template <class F>
AtkinsonWitness<F> atkinson_factorize(const F& f, const Bundle<typename F::Elem>& b, int p, int q,
                                      const std::vector<typename F::Elem>& a,
                                      const std::vector<typename F::Elem>& bv,
                                      const std::string& op_name = "R") {
    using namespace detail;
    const auto& R = b.op_family(op_name);
    if (f.is_zero(R.weight))
        throw PreconditionError("Atkinson characterization requires a nonzero weight");
    const auto& mul = b.family("mul").tensors;
    int pq = b.table.product(p, q);
    const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
    auto Ra = mat_apply(f, R.mats[static_cast<size_t>(p)], a);
    auto Rb = mat_apply(f, R.mats[static_cast<size_t>(q)], bv);
    AtkinsonWitness<F> w;
    w.c = vec_add(f, bil_apply(f, t, Ra, bv),
                  vec_add(f, bil_apply(f, t, a, Rb),
                          vec_scale(f, R.weight, bil_apply(f, t, a, bv))));
    auto lhs = bil_apply(f, t, Ra, Rb);
    auto rhs = mat_apply(f, R.mats[static_cast<size_t>(pq)], w.c);
    w.factor_clause = vec_eq(f, lhs, rhs);
    auto Rt = tilde_operator(f, R);
    auto Ta = mat_apply(f, Rt.mats[static_cast<size_t>(p)], a);
    auto Tb = mat_apply(f, Rt.mats[static_cast<size_t>(q)], bv);
    auto tl = bil_apply(f, t, Ta, Tb);
    auto tr = vec_scale(f, f.neg(f.one()), mat_apply(f, Rt.mats[static_cast<size_t>(pq)], w.c));
    w.tilde_clause = vec_eq(f, tl, tr);
    return w;
}

/// Certifies the Rota-Baxter identity from per-pair witnesses satisfying both
/// factorization clauses; the witness function gets (p, q, i, j).
template <class F>
LawReport atkinson_converse_check(
    const F& f, const Bundle<typename F::Elem>& b,
    const std::function<std::vector<typename F::Elem>(int, int, int, int)>& witness,
    const std::string& op_name = "R") {
    using namespace detail;
    const auto& R = b.op_family(op_name);
    if (f.is_zero(R.weight))
        throw PreconditionError("Atkinson characterization requires a nonzero weight");
    const auto& mul = b.family("mul").tensors;
    auto Rt = tilde_operator(f, R);
    Scan<F> s(f, b, "atkinson-converse");
    s.pairs("factor_clause", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q);
        const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
        auto c = witness(p, q, i, j);
        auto Ra = col(f, R.mats[static_cast<size_t>(p)], i);
        auto Rb = col(f, R.mats[static_cast<size_t>(q)], j);
        lhs = bil_apply(f, t, Ra, Rb);
        rhs = mat_apply(f, R.mats[static_cast<size_t>(pq)], c);
    });
    s.pairs("tilde_clause", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q);
        const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
        auto c = witness(p, q, i, j);
        auto Ta = col(f, Rt.mats[static_cast<size_t>(p)], i);
        auto Tb = col(f, Rt.mats[static_cast<size_t>(q)], j);
        lhs = bil_apply(f, t, Ta, Tb);
        rhs = vec_scale(f, f.neg(f.one()), mat_apply(f, Rt.mats[static_cast<size_t>(pq)], c));
    });
    // Reconstruction step from the converse proof: the witness is forced to
    // equal R_p(a).b + a.R_q(b) + weight a.b, whence the identity.
    s.pairs("reconstruction", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
        const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
        auto ei = basis_vec(f, b.dim(p), i);
        auto ej = basis_vec(f, b.dim(q), j);
        auto Ra = col(f, R.mats[static_cast<size_t>(p)], i);
        auto Rb = col(f, R.mats[static_cast<size_t>(q)], j);
        lhs = witness(p, q, i, j);
        rhs = vec_add(f, bil_apply(f, t, Ra, ej),
                      vec_add(f, bil_apply(f, t, ei, Rb),
                              vec_scale(f, R.weight, slice(f, t, i, j))));
    });
    if (s.rep.pass) {
        auto rb = check_rota_baxter(f, b, op_name);
        s.rep.note("certified: witnesses reconstruct the Rota-Baxter identity");
        s.rep.absorb(std::move(rb));
    }
    return s.rep;
}

/// Left A-linearity bridge: validates the hypothesis, then checks that the
/// Rota-Baxter law and quasi-idempotency agree, reporting which side fails
/// when they do not.
template <class F>
LawReport left_linear_equivalence(const F& f, const Bundle<typename F::Elem>& b,
                                  const std::string& op_name = "R") {
    using namespace detail;
    if (!b.table.has_unit())
        throw PreconditionError("left-linearity equivalence requires a monoid grading");
    if (!b.unit) throw PreconditionError("left-linearity equivalence requires a unital bundle");
    const auto& R = b.op_family(op_name);
    const auto& mul = b.family("mul").tensors;
    // hypothesis: R_{pq}(a . b) = a . R_q(b)
    for (int p = 0; p < b.grades(); ++p)
        for (int q = 0; q < b.grades(); ++q) {
            int pq = b.table.product(p, q);
            const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
            for (int i = 0; i < b.dim(p); ++i)
                for (int j = 0; j < b.dim(q); ++j) {
                    auto lhs = mat_apply(f, R.mats[static_cast<size_t>(pq)], slice(f, t, i, j));
                    auto rhs = bil_apply(f, t, basis_vec(f, b.dim(p), i),
                                         col(f, R.mats[static_cast<size_t>(q)], j));
                    if (!vec_eq(f, lhs, rhs))
                        throw PreconditionError(
                            "hypothesis violated: operator is not left A-linear at grades (" +
                            b.table.name(p) + "," + b.table.name(q) + ") basis (u" +
                            std::to_string(i + 1) + ",u" + std::to_string(j + 1) + ")");
                }
        }
    LawReport rep;
    rep.law = "left-linear-equivalence";
    auto rb = check_rota_baxter(f, b, op_name);
    auto qi = quasi_idempotency_test(f, R);
    rep.checked = rb.checked;
    if (rb.pass != qi.quasi_idempotent) {
        rep.pass = false;
        rep.note(std::string("equivalence broken: rota-baxter ") + (rb.pass ? "holds" : "fails") +
                 " but quasi-idempotency " + (qi.quasi_idempotent ? "holds" : "fails"));
    } else {
        rep.note(std::string("both sides ") + (rb.pass ? "hold" : "fail") + " together");
    }
    rep.absorb(std::move(rb));
    return rep;
}

/// Consequences of a T-idempotent Rota-Baxter family.
template <class F>
LawReport idempotent_consequences(const F& f, const Bundle<typename F::Elem>& b,
                                  const std::string& op_name = "R") {
    using namespace detail;
    const auto& R = b.op_family(op_name);
    auto qi = quasi_idempotency_test(f, R);
    if (!qi.idempotent)
        throw PreconditionError("hypothesis violated: operator family is not T-idempotent");
    auto rb = check_rota_baxter(f, b, op_name);
    if (!rb.pass)
        throw PreconditionError("hypothesis violated: bundle is not a Rota-Baxter T-algebra");
    const auto& mul = b.family("mul").tensors;
    auto one_plus = f.add(f.one(), R.weight);
    Scan<F> s(f, b, "idempotent-consequences");
    s.pairs("truncation_right", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q);
        const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
        auto v = bil_apply(f, t, basis_vec(f, b.dim(p), i),
                           col(f, R.mats[static_cast<size_t>(q)], j));
        lhs = vec_scale(f, one_plus, mat_apply(f, R.mats[static_cast<size_t>(pq)], v));
        rhs = zero_vec(f, b.dim(pq));
    });
    s.pairs("truncation_left", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q);
        const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
        auto v = bil_apply(f, t, col(f, R.mats[static_cast<size_t>(p)], i),
                           basis_vec(f, b.dim(q), j));
        lhs = vec_scale(f, one_plus, mat_apply(f, R.mats[static_cast<size_t>(pq)], v));
        rhs = zero_vec(f, b.dim(pq));
    });
    s.pairs("image_product", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
        int pq = b.table.product(p, q);
        const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
        auto ra = col(f, R.mats[static_cast<size_t>(p)], i);
        auto rbv = col(f, R.mats[static_cast<size_t>(q)], j);
        auto prod = bil_apply(f, t, ra, rbv);
        auto corr = vec_scale(f, R.weight,
                              mat_apply(f, R.mats[static_cast<size_t>(pq)], slice(f, t, i, j)));
        lhs = vec_scale(f, one_plus, vec_sub(f, prod, corr));
        rhs = zero_vec(f, b.dim(pq));
    });
    return s.rep;
}

// ---------------------------------------------------------------------------
// Lifts from ungraded data

/// An ungraded algebra: structure constants on one component, optional unit.
template <class T>
struct UngradedAlgebra {
    int dim = 0;
    Tensor3<T> mul;               // dim x dim x dim
    std::optional<std::vector<T>> unit;
};

/// Two operators on one ungraded algebra with a common weight.
template <class T>
struct RBPair {
    Mat<T> first, second;
    T weight{};
};

/// Classical Rota-Baxter check on an ungraded algebra, as a grade-free law.
template <class F>
LawReport check_classical_rb(const F& f, const UngradedAlgebra<typename F::Elem>& alg,
                             const Mat<typename F::Elem>& R, const typename F::Elem& weight) {
    using namespace detail;
    LawReport rep;
    rep.law = "classical-rb";
    for (int i = 0; i < alg.dim && rep.pass; ++i)
        for (int j = 0; j < alg.dim; ++j) {
            auto ra = col(f, R, i);
            auto rb = col(f, R, j);
            auto lhs = bil_apply(f, alg.mul, ra, rb);
            auto inner = vec_add(f, bil_apply(f, alg.mul, ra, basis_vec(f, alg.dim, j)),
                                 vec_add(f, bil_apply(f, alg.mul, basis_vec(f, alg.dim, i), rb),
                                         vec_scale(f, weight, slice(f, alg.mul, i, j))));
            auto rhs = mat_apply(f, R, inner);
            ++rep.checked;
            if (!vec_eq(f, lhs, rhs)) {
                rep.pass = false;
                Counterexample c;
                c.identity = "rb";
                c.basis = {i, j};
                c.where = "basis (u" + std::to_string(i + 1) + ",u" + std::to_string(j + 1) + ")";
                c.lhs = vec_str(f, lhs);
                c.rhs = vec_str(f, rhs);
                rep.counterexample = std::move(c);
                break;
            }
        }
    return rep;
}

/// Mixed pair laws: both operators are Rota-Baxter and the two coupling
/// identities hold (the second operator is the outer one in both).
template <class F>
LawReport check_rb_pair(const F& f, const UngradedAlgebra<typename F::Elem>& alg,
                        const RBPair<typename F::Elem>& pair) {
    using namespace detail;
    LawReport rep;
    rep.law = "rb-pair";
    {
        auto r = check_classical_rb(f, alg, pair.first, pair.weight);
        r.law = "first-rb";
        rep.absorb(std::move(r));
    }
    {
        auto r = check_classical_rb(f, alg, pair.second, pair.weight);
        r.law = "second-rb";
        rep.absorb(std::move(r));
    }
    auto mixed = [&](const Mat<typename F::Elem>& A, const Mat<typename F::Elem>& B,
                     const std::string& name) {
        // A(h) B(g) = B( A(h) g + h B(g) + w h g )
        LawReport r;
        r.law = name;
        for (int i = 0; i < alg.dim && r.pass; ++i)
            for (int j = 0; j < alg.dim; ++j) {
                auto ah = col(f, A, i);
                auto bg = col(f, B, j);
                auto lhs = bil_apply(f, alg.mul, ah, bg);
                auto inner =
                    vec_add(f, bil_apply(f, alg.mul, ah, basis_vec(f, alg.dim, j)),
                            vec_add(f, bil_apply(f, alg.mul, basis_vec(f, alg.dim, i), bg),
                                    vec_scale(f, pair.weight, slice(f, alg.mul, i, j))));
                auto rhs = mat_apply(f, B, inner);
                ++r.checked;
                if (!vec_eq(f, lhs, rhs)) {
                    r.pass = false;
                    Counterexample c;
                    c.identity = name;
                    c.basis = {i, j};
                    c.where = "basis (u" + std::to_string(i + 1) + ",u" + std::to_string(j + 1) +
                              ")";
                    c.lhs = vec_str(f, lhs);
                    c.rhs = vec_str(f, rhs);
                    r.counterexample = std::move(c);
                    break;
                }
            }
        return r;
    };
    rep.absorb(mixed(pair.first, pair.second, "mixed_first_second"));
    // second mixed law: second(h) first(g) = second( second(h) g + h first(g) + w h g )
    {
        LawReport r;
        r.law = "mixed_second_first";
        for (int i = 0; i < alg.dim && r.pass; ++i)
            for (int j = 0; j < alg.dim; ++j) {
                auto rh = col(f, pair.second, i);
                auto rg = col(f, pair.first, j);
                auto lhs = bil_apply(f, alg.mul, rh, rg);
                auto inner =
                    vec_add(f, bil_apply(f, alg.mul, rh, basis_vec(f, alg.dim, j)),
                            vec_add(f, bil_apply(f, alg.mul, basis_vec(f, alg.dim, i), rg),
                                    vec_scale(f, pair.weight, slice(f, alg.mul, i, j))));
                auto rhs = mat_apply(f, pair.second, inner);
                ++r.checked;
                if (!vec_eq(f, lhs, rhs)) {
                    r.pass = false;
                    Counterexample c;
                    c.identity = "mixed_second_first";
                    c.basis = {i, j};
                    c.where = "basis (u" + std::to_string(i + 1) + ",u" + std::to_string(j + 1) +
                              ")";
                    c.lhs = vec_str(f, lhs);
                    c.rhs = vec_str(f, rhs);
                    r.counterexample = std::move(c);
                    break;
                }
            }
        rep.absorb(std::move(r));
    }
    return rep;
}

/// Constant lift: every component a copy of the algebra, the tensor-product
/// multiplication, and the same operator on every grade.
template <class F>
Bundle<typename F::Elem> lift_group_algebra(const F& f,
                                            const UngradedAlgebra<typename F::Elem>& alg,
                                            const Mat<typename F::Elem>& R,
                                            const typename F::Elem& weight, const GradeTable& g,
                                            bool assert_post = true) {
    if (assert_post) {
        auto pre = check_classical_rb(f, alg, R, weight);
        if (!pre.pass)
            throw PreconditionError("lift refused: operator fails the Rota-Baxter identity\n" +
                                    pre.to_text(2));
    }
    Bundle<typename F::Elem> out;
    out.table = g;
    out.dims.assign(static_cast<size_t>(g.size()), alg.dim);
    out.kind = "rb-t-algebra";
    auto& mul = out.add_bilinear("mul");
    for (int p = 0; p < g.size(); ++p)
        for (int q = 0; q < g.size(); ++q)
            mul.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)] = alg.mul;
    auto& op = out.add_operator("R", weight);
    for (int p = 0; p < g.size(); ++p) op.mats[static_cast<size_t>(p)] = R;
    if (alg.unit && g.has_unit()) out.unit = alg.unit;
    if (assert_post) detail::assert_report<F>(check_rota_baxter(f, out), "lifted bundle");
    return out;
}

/// Two-grade lift over the idempotent monoid: first operator on the unit
/// grade, second on the other. Refuses when the pair laws fail.
template <class F>
Bundle<typename F::Elem> lift_rb_pair(const F& f, const UngradedAlgebra<typename F::Elem>& alg,
                                      const RBPair<typename F::Elem>& pair,
                                      bool assert_post = true) {
    if (assert_post) {
        auto pre = check_rb_pair(f, alg, pair);
        if (!pre.pass) {
            std::string which = pre.counterexample ? pre.counterexample->identity : "pair laws";
            throw PreconditionError("pair lift refused: " + which + " fails\n" + pre.to_text(2));
        }
    }
    GradeTable g = GradeTable::monoid_1q();
    Bundle<typename F::Elem> out;
    out.table = g;
    out.dims = {alg.dim, alg.dim};
    out.kind = "rb-t-algebra";
    auto& mul = out.add_bilinear("mul");
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) mul.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)] = alg.mul;
    auto& op = out.add_operator("R", pair.weight);
    op.mats[0] = pair.first;
    op.mats[1] = pair.second;
    if (alg.unit) out.unit = alg.unit;
    if (assert_post) detail::assert_report<F>(check_rota_baxter(f, out), "pair-lifted bundle");
    return out;
}

// ---------------------------------------------------------------------------
// Splittings and derived products

namespace detail {

/// prec(i,j) = e_i . R_q(e_j), as structure constants.
template <class F>
BilinearFamily<typename F::Elem> right_compose(const F& f, const Bundle<typename F::Elem>& b,
                                               const std::string& mul_name,
                                               const OperatorFamily<typename F::Elem>& R) {
    BilinearFamily<typename F::Elem> out;
    const auto& mul = b.family(mul_name).tensors;
    out.tensors.resize(static_cast<size_t>(b.grades()));
    for (int p = 0; p < b.grades(); ++p) {
        out.tensors[static_cast<size_t>(p)].resize(static_cast<size_t>(b.grades()));
        for (int q = 0; q < b.grades(); ++q) {
            const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
            Tensor3<typename F::Elem> r(t.d0, t.d1, t.d2, f.zero());
            const auto& Rq = R.mats[static_cast<size_t>(q)];
            for (int i = 0; i < t.d0; ++i)
                for (int j = 0; j < t.d1; ++j)
                    for (int j2 = 0; j2 < t.d1; ++j2) {
                        if (f.is_zero(Rq.at(j2, j))) continue;
                        for (int k = 0; k < t.d2; ++k)
                            r.at(i, j, k) =
                                f.add(r.at(i, j, k), f.mul(Rq.at(j2, j), t.at(i, j2, k)));
                    }
            out.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)] = std::move(r);
        }
    }
    return out;
}

/// succ(i,j) = R_p(e_i) . e_j.
template <class F>
BilinearFamily<typename F::Elem> left_compose(const F& f, const Bundle<typename F::Elem>& b,
                                              const std::string& mul_name,
                                              const OperatorFamily<typename F::Elem>& R) {
    BilinearFamily<typename F::Elem> out;
    const auto& mul = b.family(mul_name).tensors;
    out.tensors.resize(static_cast<size_t>(b.grades()));
    for (int p = 0; p < b.grades(); ++p) {
        out.tensors[static_cast<size_t>(p)].resize(static_cast<size_t>(b.grades()));
        for (int q = 0; q < b.grades(); ++q) {
            const auto& t = mul[static_cast<size_t>(p)][static_cast<size_t>(q)];
            Tensor3<typename F::Elem> r(t.d0, t.d1, t.d2, f.zero());
            const auto& Rp = R.mats[static_cast<size_t>(p)];
            for (int i = 0; i < t.d0; ++i)
                for (int i2 = 0; i2 < t.d0; ++i2) {
                    if (f.is_zero(Rp.at(i2, i))) continue;
                    for (int j = 0; j < t.d1; ++j)
                        for (int k = 0; k < t.d2; ++k)
                            r.at(i, j, k) =
                                f.add(r.at(i, j, k), f.mul(Rp.at(i2, i), t.at(i2, j, k)));
                }
            out.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)] = std::move(r);
        }
    }
    return out;
}

template <class F>
BilinearFamily<typename F::Elem> scale_family(const F& f,
                                              const BilinearFamily<typename F::Elem>& a,
                                              const typename F::Elem& c) {
    auto out = a;
    for (auto& row : out.tensors)
        for (auto& t : row)
            for (auto& x : t.a) x = f.mul(c, x);
    return out;
}

template <class F>
BilinearFamily<typename F::Elem> add_families(const F& f, const BilinearFamily<typename F::Elem>& a,
                                              const BilinearFamily<typename F::Elem>& b) {
    auto out = a;
    for (size_t p = 0; p < out.tensors.size(); ++p)
        for (size_t q = 0; q < out.tensors[p].size(); ++q)
            for (size_t i = 0; i < out.tensors[p][q].a.size(); ++i)
                out.tensors[p][q].a[i] = f.add(out.tensors[p][q].a[i], b.tensors[p][q].a[i]);
    return out;
}

/// op(i,j) at (p,q) mapped to op(j,i) at (q,p); needs a commutative grading.
template <class F>
BilinearFamily<typename F::Elem> opposite_family(const F& f, const Bundle<typename F::Elem>& b,
                                                 const BilinearFamily<typename F::Elem>& a) {
    (void)f;
    BilinearFamily<typename F::Elem> out;
    out.tensors.resize(static_cast<size_t>(b.grades()));
    for (int p = 0; p < b.grades(); ++p) {
        out.tensors[static_cast<size_t>(p)].resize(static_cast<size_t>(b.grades()));
        for (int q = 0; q < b.grades(); ++q) {
            const auto& t = a.tensors[static_cast<size_t>(q)][static_cast<size_t>(p)];
            Tensor3<typename F::Elem> r(b.dim(p), b.dim(q), t.d2);
            for (int i = 0; i < b.dim(p); ++i)
                for (int j = 0; j < b.dim(q); ++j)
                    for (int k = 0; k < t.d2; ++k) r.at(i, j, k) = t.at(j, i, k);
            out.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)] = std::move(r);
        }
    }
    return out;
}

} // namespace detail

/// Splitting of a Rota-Baxter product into three operations.
template <class F>
Bundle<typename F::Elem> rb_to_tridendriform(const F& f, const Bundle<typename F::Elem>& b,
                                             bool assert_post = true,
                                             const std::string& op_name = "R") {
    const auto& R = b.op_family(op_name);
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "tridendriform-t-algebra";
    out.bilinear["prec"] = detail::right_compose(f, b, "mul", R);
    out.bilinear["succ"] = detail::left_compose(f, b, "mul", R);
    out.bilinear["dot"] = detail::scale_family(f, b.family("mul"), R.weight);
    if (assert_post) detail::assert_report<F>(check_tridendriform(f, out), "tridendriform split");
    return out;
}

/// Splitting into two operations, the weight folded into prec.
template <class F>
Bundle<typename F::Elem> rb_to_dendriform(const F& f, const Bundle<typename F::Elem>& b,
                                          bool assert_post = true,
                                          const std::string& op_name = "R") {
    const auto& R = b.op_family(op_name);
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "dendriform-t-algebra";
    out.bilinear["prec"] = detail::add_families(
        f, detail::right_compose(f, b, "mul", R),
        detail::scale_family(f, b.family("mul"), R.weight));
    out.bilinear["succ"] = detail::left_compose(f, b, "mul", R);
    if (assert_post) detail::assert_report<F>(check_dendriform(f, out), "dendriform split");
    return out;
}

/// Fold the middle operation into prec.
template <class F>
Bundle<typename F::Elem> tridend_to_dend(const F& f, const Bundle<typename F::Elem>& b,
                                         bool assert_post = true) {
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "dendriform-t-algebra";
    out.bilinear["prec"] = detail::add_families(f, b.family("prec"), b.family("dot"));
    out.bilinear["succ"] = b.family("succ");
    if (assert_post) detail::assert_report<F>(check_dendriform(f, out), "dendriform collapse");
    return out;
}

template <class F>
Bundle<typename F::Elem> dend_sum_product(const F& f, const Bundle<typename F::Elem>& b,
                                          bool assert_post = true) {
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "t-algebra";
    out.bilinear["mul"] = detail::add_families(f, b.family("prec"), b.family("succ"));
    if (assert_post) detail::assert_report<F>(check_t_algebra(f, out), "dendriform sum product");
    return out;
}

template <class F>
Bundle<typename F::Elem> tridend_sum_product(const F& f, const Bundle<typename F::Elem>& b,
                                             bool assert_post = true) {
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "t-algebra";
    out.bilinear["mul"] = detail::add_families(
        f, b.family("prec"), detail::add_families(f, b.family("dot"), b.family("succ")));
    if (assert_post)
        detail::assert_report<F>(check_t_algebra(f, out), "tridendriform sum product");
    return out;
}

/// The associative double product a.R(b) + R(a).b + weight a.b; also checks
/// that the operator intertwines it with the original product.
template <class F>
Bundle<typename F::Elem> rb_double_product(const F& f, const Bundle<typename F::Elem>& b,
                                           bool assert_post = true,
                                           const std::string& op_name = "R") {
    using namespace detail;
    const auto& R = b.op_family(op_name);
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "t-algebra";
    out.bilinear["mul"] = add_families(
        f, right_compose(f, b, "mul", R),
        add_families(f, left_compose(f, b, "mul", R), scale_family(f, b.family("mul"), R.weight)));
    out.operators["R"] = R;
    if (assert_post) {
        assert_report<F>(check_t_algebra(f, out), "double product associativity");
        // R_p(a) ._{p,q} R_q(b) = R_{pq}(a diamond b)
        Scan<F> s(f, b, "double-product-intertwine");
        const auto& mul = b.family("mul").tensors;
        const auto& dia = out.family("mul").tensors;
        s.pairs("intertwine", [&](int p, int q, int i, int j, auto& lhs, auto& rhs) {
            int pq = b.table.product(p, q);
            lhs = bil_apply(f, mul[static_cast<size_t>(p)][static_cast<size_t>(q)],
                            col(f, R.mats[static_cast<size_t>(p)], i),
                            col(f, R.mats[static_cast<size_t>(q)], j));
            rhs = mat_apply(f, R.mats[static_cast<size_t>(pq)],
                            slice(f, dia[static_cast<size_t>(p)][static_cast<size_t>(q)], i, j));
        });
        assert_report<F>(s.rep, "double product intertwining");
    }
    return out;
}

template <class F>
Bundle<typename F::Elem> dend_to_prelie(const F& f, const Bundle<typename F::Elem>& b,
                                        bool assert_post = true) {
    detail::require_commutative(b.table, "pre-Lie construction");
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "pre-lie-t-algebra";
    auto prec_op = detail::opposite_family(f, b, b.family("prec"));
    auto neg = detail::scale_family(f, prec_op, f.neg(f.one()));
    out.bilinear["ast"] = detail::add_families(f, b.family("succ"), neg);
    if (assert_post) detail::assert_report<F>(check_prelie(f, out), "pre-Lie construction");
    return out;
}

template <class F>
Bundle<typename F::Elem> assoc_to_lie(const F& f, const Bundle<typename F::Elem>& b,
                                      bool assert_post = true) {
    detail::require_commutative(b.table, "commutator bracket");
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "lie-t-algebra";
    auto op = detail::opposite_family(f, b, b.family("mul"));
    out.bilinear["bracket"] =
        detail::add_families(f, b.family("mul"), detail::scale_family(f, op, f.neg(f.one())));
    if (assert_post) detail::assert_report<F>(check_lie(f, out), "commutator bracket");
    return out;
}

template <class F>
Bundle<typename F::Elem> prelie_to_lie(const F& f, const Bundle<typename F::Elem>& b,
                                       bool assert_post = true) {
    detail::require_commutative(b.table, "pre-Lie commutator bracket");
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "lie-t-algebra";
    auto op = detail::opposite_family(f, b, b.family("ast"));
    out.bilinear["bracket"] =
        detail::add_families(f, b.family("ast"), detail::scale_family(f, op, f.neg(f.one())));
    if (assert_post) detail::assert_report<F>(check_lie(f, out), "pre-Lie commutator bracket");
    return out;
}

/// Weight-zero Rota-Baxter Lie bundles only.
template <class F>
Bundle<typename F::Elem> rb_lie_to_prelie(const F& f, const Bundle<typename F::Elem>& b,
                                          bool assert_post = true,
                                          const std::string& op_name = "R") {
    const auto& R = b.op_family(op_name);
    if (!f.is_zero(R.weight))
        throw PreconditionError("construction requires weight 0 (weighted analogue not defined)");
    detail::require_commutative(b.table, "pre-Lie from Rota-Baxter Lie");
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "pre-lie-t-algebra";
    // ast(i,j) = bracket(R_p e_i, e_j)
    BilinearFamily<typename F::Elem> fam;
    Bundle<typename F::Elem> tmp = b; // reuse left_compose against "bracket"
    fam = detail::left_compose(f, tmp, "bracket", R);
    out.bilinear["ast"] = std::move(fam);
    if (assert_post) detail::assert_report<F>(check_prelie(f, out), "pre-Lie from weight-0 bracket");
    return out;
}

/// Requires the symmetric-dendriform hypothesis succ(a,b) = prec(b,a).
template <class F>
Bundle<typename F::Elem> comm_dend_to_zinbiel(const F& f, const Bundle<typename F::Elem>& b,
                                              bool assert_post = true) {
    using namespace detail;
    require_commutative(b.table, "Zinbiel construction");
    const auto& P = b.family("prec").tensors;
    const auto& S = b.family("succ").tensors;
    for (int p = 0; p < b.grades(); ++p)
        for (int q = 0; q < b.grades(); ++q)
            for (int i = 0; i < b.dim(p); ++i)
                for (int j = 0; j < b.dim(q); ++j) {
                    auto l = slice(f, S[static_cast<size_t>(p)][static_cast<size_t>(q)], i, j);
                    auto r = slice(f, P[static_cast<size_t>(q)][static_cast<size_t>(p)], j, i);
                    if (!vec_eq(f, l, r))
                        throw PreconditionError(
                            "hypothesis violated: dendriform structure is not commutative at "
                            "grades (" +
                            b.table.name(p) + "," + b.table.name(q) + ") basis (u" +
                            std::to_string(i + 1) + ",u" + std::to_string(j + 1) + ")");
                }
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "zinbiel-t-algebra";
    out.bilinear["star"] = b.family("succ");
    if (assert_post) detail::assert_report<F>(check_zinbiel(f, out), "Zinbiel construction");
    return out;
}

/// Direct pre-Lie product R_p(a).b - b.R_p(a) - weight b.a.
template <class F>
Bundle<typename F::Elem> rb_to_prelie_direct(const F& f, const Bundle<typename F::Elem>& b,
                                             bool assert_post = true,
                                             const std::string& op_name = "R") {
    using namespace detail;
    require_commutative(b.table, "direct pre-Lie construction");
    const auto& R = b.op_family(op_name);
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "pre-lie-t-algebra";
    auto succ = left_compose(f, b, "mul", R);                 // R(a).b at (p,q)
    auto prec = right_compose(f, b, "mul", R);                // a.R(b) at (q,p) -> opposite
    auto prec_op = opposite_family(f, b, prec);               // b.R_p(a) seen at (p,q)
    auto mul_op = opposite_family(f, b, b.family("mul"));     // b.a seen at (p,q)
    auto rhs = add_families(f, prec_op, scale_family(f, mul_op, R.weight));
    out.bilinear["ast"] = add_families(f, succ, scale_family(f, rhs, f.neg(f.one())));
    if (assert_post) detail::assert_report<F>(check_prelie(f, out), "direct pre-Lie construction");
    return out;
}

/// Zinbiel product R_p(a).b under the hypothesis R_p(a).b = b.R_p(a) + w b.a.
template <class F>
Bundle<typename F::Elem> rb_to_zinbiel(const F& f, const Bundle<typename F::Elem>& b,
                                       bool assert_post = true,
                                       const std::string& op_name = "R") {
    using namespace detail;
    require_commutative(b.table, "Zinbiel from Rota-Baxter");
    const auto& R = b.op_family(op_name);
    auto succ = left_compose(f, b, "mul", R);
    auto prec = right_compose(f, b, "mul", R);
    auto prec_op = opposite_family(f, b, prec);
    auto mul_op = opposite_family(f, b, b.family("mul"));
    for (int p = 0; p < b.grades(); ++p)
        for (int q = 0; q < b.grades(); ++q)
            for (int i = 0; i < b.dim(p); ++i)
                for (int j = 0; j < b.dim(q); ++j) {
                    auto l = slice(f, succ.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)],
                                   i, j);
                    auto r = vec_add(
                        f,
                        slice(f, prec_op.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)],
                              i, j),
                        vec_scale(f, R.weight,
                                  slice(f,
                                        mul_op.tensors[static_cast<size_t>(p)]
                                                      [static_cast<size_t>(q)],
                                        i, j)));
                    if (!vec_eq(f, l, r))
                        throw PreconditionError(
                            "hypothesis violated: R-image does not commute as required at grades "
                            "(" +
                            b.table.name(p) + "," + b.table.name(q) + ") basis (u" +
                            std::to_string(i + 1) + ",u" + std::to_string(j + 1) + ")");
                }
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "zinbiel-t-algebra";
    out.bilinear["star"] = std::move(succ);
    if (assert_post) detail::assert_report<F>(check_zinbiel(f, out), "Zinbiel from Rota-Baxter");
    return out;
}

/// Half-shuffle recovery of a dendriform structure; also verifies the
/// permutation identity star(a, star(b,c)) = star(b, star(a,c)) on the input.
template <class F>
Bundle<typename F::Elem> zinbiel_to_dend(const F& f, const Bundle<typename F::Elem>& b,
                                         bool assert_post = true) {
    using namespace detail;
    require_commutative(b.table, "dendriform from Zinbiel");
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "dendriform-t-algebra";
    out.bilinear["succ"] = b.family("star");
    out.bilinear["prec"] = opposite_family(f, b, b.family("star"));
    if (assert_post) {
        const auto& Z = b.family("star").tensors;
        auto st = [&](int p, int q) -> const Tensor3<typename F::Elem>& {
            return Z[static_cast<size_t>(p)][static_cast<size_t>(q)];
        };
        Scan<F> s(f, b, "zinbiel-permutation");
        s.triples("perm", [&](int p, int q, int t, int i, int j, int k, auto& lhs, auto& rhs) {
            int qt = b.table.product(q, t), pt = b.table.product(p, t);
            lhs = bil_apply(f, st(p, qt), basis_vec(f, b.dim(p), i), slice(f, st(q, t), j, k));
            rhs = bil_apply(f, st(q, pt), basis_vec(f, b.dim(q), j), slice(f, st(p, t), i, k));
        });
        assert_report<F>(s.rep, "Zinbiel permutation identity");
        assert_report<F>(check_dendriform(f, out), "dendriform from Zinbiel");
    }
    return out;
}

template <class F>
Bundle<typename F::Elem> zinbiel_to_assoc(const F& f, const Bundle<typename F::Elem>& b,
                                          bool assert_post = true) {
    detail::require_commutative(b.table, "commutative product from Zinbiel");
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "t-algebra";
    out.bilinear["mul"] = detail::add_families(
        f, b.family("star"), detail::opposite_family(f, b, b.family("star")));
    if (assert_post)
        detail::assert_report<F>(check_t_algebra(f, out, {.unital = false, .commutative = true}),
                                 "symmetrized Zinbiel product");
    return out;
}

template <class F>
Bundle<typename F::Elem> prepoisson_to_poisson(const F& f, const Bundle<typename F::Elem>& b,
                                               bool assert_post = true) {
    detail::require_commutative(b.table, "Poisson construction");
    if (assert_post) {
        auto pre = check_prepoisson(f, b);
        if (!pre.pass)
            throw PreconditionError("hypothesis violated: input is not pre-Poisson\n" +
                                    pre.to_text(2));
    }
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "poisson-t-algebra";
    out.bilinear["mul"] = detail::add_families(
        f, b.family("star"), detail::opposite_family(f, b, b.family("star")));
    auto op = detail::opposite_family(f, b, b.family("ast"));
    out.bilinear["bracket"] =
        detail::add_families(f, b.family("ast"), detail::scale_family(f, op, f.neg(f.one())));
    if (assert_post) detail::assert_report<F>(check_poisson(f, out), "Poisson construction");
    return out;
}

template <class F>
Bundle<typename F::Elem> rbpoisson_to_prepoisson(const F& f, const Bundle<typename F::Elem>& b,
                                                 bool assert_post = true,
                                                 const std::string& op_name = "R") {
    const auto& R = b.op_family(op_name);
    if (!f.is_zero(R.weight))
        throw PreconditionError("construction requires weight 0 (weighted analogue not defined)");
    detail::require_commutative(b.table, "pre-Poisson construction");
    if (assert_post) {
        auto pre = check_rb_poisson(f, b, op_name);
        if (!pre.pass)
            throw PreconditionError("hypothesis violated: input is not Rota-Baxter Poisson\n" +
                                    pre.to_text(2));
    }
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "pre-poisson-t-algebra";
    out.bilinear["star"] = detail::left_compose(f, b, "mul", R);
    out.bilinear["ast"] = detail::left_compose(f, b, "bracket", R);
    if (assert_post) detail::assert_report<F>(check_prepoisson(f, out), "pre-Poisson construction");
    return out;
}

// ---------------------------------------------------------------------------
// Linear duality and the coalgebra side

/// Transpose of all structure data: bilinear families become coproducts
/// ("mul" -> "delta", anything else gets a "delta_" prefix), operators become
/// cooperators of the same weight, unit becomes counit, grade-wise coalgebras
/// and algebras swap, the antipode transposes with inverted grade.
template <class F>
Bundle<typename F::Elem> dualize(const F& f, const Bundle<typename F::Elem>& b) {
    (void)f;
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = b.kind.empty() ? "dual" : "dual-" + b.kind;
    for (const auto& [name, fam] : b.bilinear) {
        std::string dual_name = name == "mul" ? "delta" : "delta_" + name;
        auto& dst = out.add_coproduct(dual_name);
        for (int p = 0; p < b.grades(); ++p)
            for (int q = 0; q < b.grades(); ++q) {
                const auto& t = fam.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                auto& r = dst.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                for (int i = 0; i < t.d0; ++i)
                    for (int j = 0; j < t.d1; ++j)
                        for (int k = 0; k < t.d2; ++k) r.at(k, i, j) = t.at(i, j, k);
            }
    }
    for (const auto& [name, fam] : b.coproducts) {
        std::string dual_name = name == "delta" ? "mul" : name.substr(std::string("delta_").size());
        auto& dst = out.add_bilinear(dual_name);
        for (int p = 0; p < b.grades(); ++p)
            for (int q = 0; q < b.grades(); ++q) {
                const auto& t = fam.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                auto& r = dst.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                for (int c = 0; c < t.d0; ++c)
                    for (int i = 0; i < t.d1; ++i)
                        for (int j = 0; j < t.d2; ++j) r.at(i, j, c) = t.at(c, i, j);
            }
    }
    for (const auto& [name, op] : b.operators) {
        std::string dual_name = name == "R" ? "Q" : (name == "Q" ? "R" : name);
        auto& dst = out.add_operator(dual_name, op.weight);
        for (int p = 0; p < b.grades(); ++p) {
            const auto& m = op.mats[static_cast<size_t>(p)];
            auto& r = dst.mats[static_cast<size_t>(p)];
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
        }
    }
    if (b.unit) out.counit = b.unit;
    if (b.counit) out.unit = b.counit;
    for (const auto& [name, gc] : b.gradewise_coalgebras) {
        GradewiseAlgebra<typename F::Elem> ga;
        for (const auto& t : gc.delta) {
            Tensor3<typename F::Elem> r(t.d1, t.d2, t.d0);
            for (int c = 0; c < t.d0; ++c)
                for (int i = 0; i < t.d1; ++i)
                    for (int j = 0; j < t.d2; ++j) r.at(i, j, c) = t.at(c, i, j);
            ga.mul.push_back(std::move(r));
        }
        ga.unit = gc.counit;
        out.gradewise_algebras[name == "delta_phi" ? "mul_phi" : name] = std::move(ga);
    }
    for (const auto& [name, ga] : b.gradewise_algebras) {
        GradewiseCoalgebra<typename F::Elem> gc;
        for (const auto& t : ga.mul) {
            Tensor3<typename F::Elem> r(t.d2, t.d0, t.d1);
            for (int i = 0; i < t.d0; ++i)
                for (int j = 0; j < t.d1; ++j)
                    for (int k = 0; k < t.d2; ++k) r.at(k, i, j) = t.at(i, j, k);
            gc.delta.push_back(std::move(r));
        }
        gc.counit = ga.unit;
        out.gradewise_coalgebras[name == "mul_phi" ? "delta_phi" : name] = std::move(gc);
    }
    if (b.antipode && b.table.kind() == GradeKind::Group) {
        AntipodeFamily<typename F::Elem> dst;
        dst.mats.resize(static_cast<size_t>(b.grades()));
        for (int p = 0; p < b.grades(); ++p) {
            int pi = b.table.inverse(p);
            const auto& m = b.antipode->mats[static_cast<size_t>(pi)]; // A_{pi} -> A_p
            Mat<typename F::Elem> r(m.cols, m.rows);
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
            dst.mats[static_cast<size_t>(p)] = std::move(r);
        }
        out.antipode = std::move(dst);
    }
    return out;
}

/// Split coproducts from a Rota-Baxter cooperator.
template <class F>
Bundle<typename F::Elem> coalg_split_from_rb(const F& f, const Bundle<typename F::Elem>& b,
                                             SplitVariant variant, bool assert_post = true,
                                             const std::string& op_name = "Q") {
    using namespace detail;
    const auto& D = b.coproduct("delta").tensors;
    const auto& Q = b.op_family(op_name);
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = variant == SplitVariant::Dendriform ? "dendriform-t-coalgebra"
                                                   : "tridendriform-t-coalgebra";
    auto& prec = out.add_coproduct("delta_prec");
    auto& succ = out.add_coproduct("delta_succ");
    for (int p = 0; p < b.grades(); ++p)
        for (int q = 0; q < b.grades(); ++q) {
            const auto& d = D[static_cast<size_t>(p)][static_cast<size_t>(q)];
            auto& tp = prec.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
            auto& ts = succ.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
            const auto& Qp = Q.mats[static_cast<size_t>(p)];
            const auto& Qq = Q.mats[static_cast<size_t>(q)];
            for (int c = 0; c < d.d0; ++c)
                for (int i = 0; i < d.d1; ++i)
                    for (int j = 0; j < d.d2; ++j) {
                        // prec: c_(1) (x) Q(c_(2))   [dendriform adds weight*Delta]
                        auto v = f.zero();
                        for (int j2 = 0; j2 < d.d2; ++j2)
                            v = f.add(v, f.mul(d.at(c, i, j2), Qq.at(j, j2)));
                        if (variant == SplitVariant::Dendriform)
                            v = f.add(v, f.mul(Q.weight, d.at(c, i, j)));
                        tp.at(c, i, j) = v;
                        auto w = f.zero();
                        for (int i2 = 0; i2 < d.d1; ++i2)
                            w = f.add(w, f.mul(d.at(c, i2, j), Qp.at(i, i2)));
                        ts.at(c, i, j) = w;
                    }
        }
    if (variant == SplitVariant::Tridendriform) {
        auto& dot = out.add_coproduct("delta_dot");
        for (int p = 0; p < b.grades(); ++p)
            for (int q = 0; q < b.grades(); ++q) {
                const auto& d = D[static_cast<size_t>(p)][static_cast<size_t>(q)];
                auto& td = dot.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
                for (size_t i = 0; i < d.a.size(); ++i) td.a[i] = f.mul(Q.weight, d.a[i]);
            }
    }
    if (assert_post)
        detail::assert_report<F>(check_split_t_coalgebra(f, out, variant), "coalgebra split");
    return out;
}

/// Sum of the split coproducts; lands back in a T-coalgebra.
template <class F>
Bundle<typename F::Elem> coalg_sum_coproduct(const F& f, const Bundle<typename F::Elem>& b,
                                             SplitVariant variant, bool assert_post = true) {
    Bundle<typename F::Elem> out;
    out.table = b.table;
    out.dims = b.dims;
    out.kind = "t-coalgebra";
    auto& dst = out.add_coproduct("delta");
    const auto& P = b.coproduct("delta_prec").tensors;
    const auto& S = b.coproduct("delta_succ").tensors;
    const CoproductFamily<typename F::Elem>* Dp =
        variant == SplitVariant::Tridendriform ? &b.coproduct("delta_dot") : nullptr;
    for (int p = 0; p < b.grades(); ++p)
        for (int q = 0; q < b.grades(); ++q) {
            auto& t = dst.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)];
            const auto& a = P[static_cast<size_t>(p)][static_cast<size_t>(q)];
            const auto& s = S[static_cast<size_t>(p)][static_cast<size_t>(q)];
            for (size_t i = 0; i < t.a.size(); ++i) {
                t.a[i] = f.add(a.a[i], s.a[i]);
                if (Dp)
                    t.a[i] = f.add(
                        t.a[i],
                        Dp->tensors[static_cast<size_t>(p)][static_cast<size_t>(q)].a[i]);
            }
        }
    if (assert_post) detail::assert_report<F>(check_t_coalgebra(f, out), "sum coproduct");
    return out;
}

/// Constant lift with the set-like coproduct on every basis element and the
/// all-ones counit, grade by grade.
template <class F>
Bundle<typename F::Elem> grouplike_lift(const F& f, const UngradedAlgebra<typename F::Elem>& alg,
                                        const std::vector<Mat<typename F::Elem>>& ops,
                                        const typename F::Elem& weight, const GradeTable& g,
                                        bool assert_post = true) {
    Bundle<typename F::Elem> out;
    out.table = g;
    out.dims.assign(static_cast<size_t>(g.size()), alg.dim);
    out.kind = "rb-semi-hopf-t-algebra";
    auto& mul = out.add_bilinear("mul");
    for (int p = 0; p < g.size(); ++p)
        for (int q = 0; q < g.size(); ++q)
            mul.tensors[static_cast<size_t>(p)][static_cast<size_t>(q)] = alg.mul;
    auto& op = out.add_operator("R", weight);
    if (static_cast<int>(ops.size()) != g.size())
        throw DataError("grouplike lift: need one operator matrix per grade");
    for (int p = 0; p < g.size(); ++p) op.mats[static_cast<size_t>(p)] = ops[static_cast<size_t>(p)];
    if (alg.unit && g.has_unit()) out.unit = alg.unit;
    GradewiseCoalgebra<typename F::Elem> gc;
    for (int p = 0; p < g.size(); ++p) {
        Tensor3<typename F::Elem> d(alg.dim, alg.dim, alg.dim, f.zero());
        for (int i = 0; i < alg.dim; ++i) d.at(i, i, i) = f.one();
        gc.delta.push_back(std::move(d));
        gc.counit.emplace_back(static_cast<size_t>(alg.dim), f.one());
    }
    out.gradewise_coalgebras["delta_phi"] = std::move(gc);
    if (assert_post) detail::assert_report<F>(check_rota_baxter(f, out), "grouplike lift");
    return out;
}

} // namespace turaev
