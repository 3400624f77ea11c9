#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "turaev/expr.hpp"
#include "turaev/field.hpp"

namespace turaev {

template <class F>
using Assignment = std::map<std::string, typename F::Elem>;

/// One random element, small enough to keep exact arithmetic readable.
inline Rat random_elem(const RatField&, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-24, 24);
    std::uniform_int_distribution<int> den(1, 8);
    return make_rat(num(rng), den(rng));
}

inline std::uint64_t random_elem(const PrimeField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> d(0, f.modulus() - 1);
    return d(rng);
}

/// Draws an assignment for `params` under which no `forbidden` expression
/// vanishes. Reproducible from `seed`; throws BudgetError when the retry
/// budget runs out (e.g. a forbidden locus covers the whole field).
template <class F>
Assignment<F> random_assignment(const F& f, const std::vector<std::string>& params,
                                const std::vector<Expr>& forbidden, std::uint64_t seed,
                                int retry_budget = 1000) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Assignment<F> a;
        for (const auto& p : params) a[p] = random_elem(f, rng);
        bool ok = true;
        for (const auto& e : forbidden) {
            typename F::Elem v;
            try {
                v = e.eval(f, a);
            } catch (const ArithmeticError&) {
                ok = false; // a vanishing denominator inside the locus counts as hitting it
                break;
            }
            if (f.is_zero(v)) {
                ok = false;
                break;
            }
        }
        if (ok) return a;
    }
    throw BudgetError("random_assignment: retry budget exhausted avoiding forbidden loci");
}

} // namespace turaev
