#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turaev/error.hpp"

namespace turaev {

// Brute-force classification over small prime fields. This module is the
// independent oracle: it works on raw residue tables and never calls the
// bundle checkers, so agreement between the two paths is meaningful.

/// Multiplication table over F_p: mul[i][j][k] in [0,p).
struct FpAlgebra {
    std::uint64_t p = 2;
    int dim = 0;
    std::vector<std::uint64_t> mul; // dim^3, index ((i*dim)+j)*dim+k

    std::uint64_t at(int i, int j, int k) const {
        return mul[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
};

/// Row-major dim x dim matrix over F_p; entry(i,j) = image coefficient of
/// basis j on basis i.
struct FpMatrix {
    int dim = 0;
    std::vector<std::uint64_t> a;

    std::uint64_t at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }
    bool operator==(const FpMatrix& o) const { return dim == o.dim && a == o.a; }
    bool operator<(const FpMatrix& o) const { return a < o.a; } // row-major lexicographic
};

struct SearchOptions {
    std::uint64_t budget = 2'000'000; // max candidate count p^(dim^2)
};

/// Direct check of the weight-w identity R(a)R(b) = R(aR(b) + R(a)b + w ab)
/// on all basis pairs. `swapped` reverses the loop nesting; used for the
/// double-entry second pass.
bool fp_is_rb_operator(const FpAlgebra& alg, const FpMatrix& m, std::uint64_t weight,
                       bool swapped = false);

/// All matrices satisfying the identity, in row-major lexicographic order.
/// Refuses (BudgetError, message carries the candidate count) when p^(dim^2)
/// exceeds the budget. Every emitted matrix is re-verified with swapped loop
/// order before being returned.
std::vector<FpMatrix> enumerate_rb_operators(const FpAlgebra& alg, std::uint64_t weight,
                                             SearchOptions opts = {});

/// Ordered pairs from the candidate set satisfying both mixed pair laws.
std::vector<std::pair<FpMatrix, FpMatrix>>
enumerate_rb_pairs(const FpAlgebra& alg, std::uint64_t weight,
                   const std::vector<FpMatrix>& candidates);

/// -weight*I - M over F_p.
FpMatrix fp_tilde(const FpAlgebra& alg, const FpMatrix& m, std::uint64_t weight);

} // namespace turaev
