#pragma once

#include <cstdint>
#include <optional>

#include "turaev/cochecks.hpp"
#include "turaev/constructions.hpp"

namespace turaev {

struct LawFlags {
    bool unital = false;
    bool commutative = false;
    bool counital = false;
};

/// Runs the named law checker on a concrete bundle.
template <class F>
LawReport run_law(const F& f, const Bundle<typename F::Elem>& b, const std::string& law,
                  LawFlags flags = {}) {
    if (law == "t-algebra")
        return check_t_algebra(f, b, {.unital = flags.unital, .commutative = flags.commutative});
    if (law == "commutative-t-algebra")
        return check_t_algebra(f, b, {.unital = flags.unital, .commutative = true});
    if (law == "rota-baxter") return check_rota_baxter(f, b);
    if (law == "dendriform") return check_dendriform(f, b);
    if (law == "tridendriform") return check_tridendriform(f, b);
    if (law == "pre-lie") return check_prelie(f, b);
    if (law == "lie") return check_lie(f, b);
    if (law == "rb-lie") return check_rb_lie(f, b);
    if (law == "zinbiel") return check_zinbiel(f, b);
    if (law == "poisson") return check_poisson(f, b);
    if (law == "pre-poisson") return check_prepoisson(f, b);
    if (law == "rb-poisson") return check_rb_poisson(f, b);
    if (law == "t-coalgebra") return check_t_coalgebra(f, b, flags.counital);
    if (law == "rb-t-coalgebra") return check_rb_t_coalgebra(f, b);
    if (law == "dendriform-t-coalgebra")
        return check_split_t_coalgebra(f, b, SplitVariant::Dendriform);
    if (law == "tridendriform-t-coalgebra")
        return check_split_t_coalgebra(f, b, SplitVariant::Tridendriform);
    if (law == "semi-hopf") return check_semi_hopf_algebra(f, b);
    if (law == "hopf") return check_hopf_algebra(f, b);
    if (law == "hopf-t-coalgebra") return check_hopf_t_coalgebra(f, b);
    throw DataError("unknown law: " + law);
}

inline const std::vector<std::string>& known_laws() {
    static const std::vector<std::string> laws = {
        "t-algebra",     "commutative-t-algebra", "rota-baxter",
        "dendriform",    "tridendriform",         "pre-lie",
        "lie",           "rb-lie",                "zinbiel",
        "poisson",       "pre-poisson",           "rb-poisson",
        "t-coalgebra",   "rb-t-coalgebra",        "dendriform-t-coalgebra",
        "tridendriform-t-coalgebra", "semi-hopf", "hopf",
        "hopf-t-coalgebra"};
    return laws;
}

struct CheckOptions {
    int specializations = 5;           // assignments per parametric check
    std::uint64_t seed = 20240901;     // base RNG seed, recorded in the report
    std::optional<std::uint64_t> prime; // check over F_p instead of the rationals
    std::map<std::string, Rat> fixed;  // pinned parameter values
    LawFlags flags;
    int retry_budget = 1000;
};

namespace detail {

template <class F>
Assignment<F> draw_assignment(const F& f, const SymBundle& sb,
                              const std::map<std::string, Rat>& fixed, std::uint64_t seed,
                              int retry_budget) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Assignment<F> a;
        for (const auto& [k, v] : fixed) a[k] = f.from_rat(v);
        for (const auto& p : sb.params)
            if (!a.count(p)) a[p] = random_elem(f, rng);
        bool ok = true;
        for (const auto& e : sb.forbidden) {
            try {
                if (f.is_zero(e.eval(f, a))) ok = false;
            } catch (const ArithmeticError&) {
                ok = false;
            }
            if (!ok) break;
        }
        if (ok) return a;
    }
    throw BudgetError("specialization: retry budget exhausted avoiding forbidden loci");
}

inline std::string assignment_note(const std::vector<std::string>& params,
                                   const std::map<std::string, std::string>& shown) {
    std::string s = "assignment {";
    bool first = true;
    for (const auto& p : params) {
        auto it = shown.find(p);
        if (it == shown.end()) continue;
        if (!first) s += ", ";
        s += p + "=" + it->second;
        first = false;
    }
    return s + "}";
}

template <class F>
LawReport check_specialized(const F& f, const SymBundle& sb, const std::string& law,
                            const CheckOptions& opt) {
    if (!sb.parametric() && opt.fixed.empty()) {
        Assignment<F> empty;
        auto b = specialize(f, sb.data, empty);
        return run_law(f, b, law, opt.flags);
    }
    int k = opt.specializations;
    if (k < 1) throw PreconditionError("at least one specialization is required");
    if (!sb.parametric()) k = 1;
    LawReport rep;
    rep.law = law;
    for (int i = 0; i < k; ++i) {
        auto a = draw_assignment(f, sb, opt.fixed, opt.seed + static_cast<std::uint64_t>(i),
                                 opt.retry_budget);
        auto b = specialize(f, sb.data, a);
        auto r = run_law(f, b, law, opt.flags);
        std::map<std::string, std::string> shown;
        for (const auto& [name, v] : a) shown[name] = f.str(v);
        r.note(assignment_note(sb.params, shown));
        bool failed = !r.pass;
        rep.absorb(std::move(r));
        if (failed) break;
    }
    if (rep.pass && sb.parametric())
        rep.note("pass (specialized at " + std::to_string(k) + " assignments, seed " +
                 std::to_string(opt.seed) + "); not a symbolic proof");
    return rep;
}

} // namespace detail

/// Checks a (possibly parametric) bundle: concrete data is checked once
/// exactly; parametric data at k seeded random assignments avoiding the
/// declared forbidden loci.
LawReport check_bundle(const SymBundle& sb, const std::string& law, const CheckOptions& opt = {});

/// Multi-point certification of one law on a parametric bundle; the report
/// lists the assignments used.
inline LawReport specialize_and_check(const SymBundle& sb, const std::string& law, int k,
                                      std::uint64_t seed) {
    CheckOptions opt;
    opt.specializations = k;
    opt.seed = seed;
    return check_bundle(sb, law, opt);
}

} // namespace turaev
