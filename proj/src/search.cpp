#include "turaev/search.hpp"

#include <algorithm>

namespace turaev {

namespace {

inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (static_cast<unsigned __int128>(a) * b) % p;
}

// v += c * row, all mod p
void axpy(std::vector<std::uint64_t>& v, std::uint64_t c, const std::uint64_t* row, int n,
          std::uint64_t p) {
    if (c == 0) return;
    for (int k = 0; k < n; ++k) v[static_cast<size_t>(k)] = addm(v[static_cast<size_t>(k)], mulm(c, row[k], p), p);
}

} // namespace

bool fp_is_rb_operator(const FpAlgebra& alg, const FpMatrix& m, std::uint64_t weight,
                       bool swapped) {
    const int n = alg.dim;
    const std::uint64_t p = alg.p;
    for (int aa = 0; aa < n; ++aa) {
        for (int bb = 0; bb < n; ++bb) {
            int a = swapped ? bb : aa;
            int b = swapped ? aa : bb;
            // lhs = R(e_a) . R(e_b)
            std::vector<std::uint64_t> lhs(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i) {
                std::uint64_t ra = m.at(i, a);
                if (ra == 0) continue;
                for (int j = 0; j < n; ++j) {
                    std::uint64_t c = mulm(ra, m.at(j, b), p);
                    axpy(lhs, c, &alg.mul[(static_cast<size_t>(i) * n + j) * n], n, p);
                }
            }
            // inner = R(e_a) . e_b + e_a . R(e_b) + w e_a . e_b
            std::vector<std::uint64_t> inner(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i)
                axpy(inner, m.at(i, a), &alg.mul[(static_cast<size_t>(i) * n + b) * n], n, p);
            for (int j = 0; j < n; ++j)
                axpy(inner, m.at(j, b), &alg.mul[(static_cast<size_t>(a) * n + j) * n], n, p);
            axpy(inner, weight, &alg.mul[(static_cast<size_t>(a) * n + b) * n], n, p);
            // rhs = R(inner)
            std::vector<std::uint64_t> rhs(static_cast<size_t>(n), 0);
            for (int j = 0; j < n; ++j) {
                std::uint64_t c = inner[static_cast<size_t>(j)];
                if (c == 0) continue;
                for (int i = 0; i < n; ++i)
                    rhs[static_cast<size_t>(i)] = addm(rhs[static_cast<size_t>(i)], mulm(c, m.at(i, j), p), p);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<FpMatrix> enumerate_rb_operators(const FpAlgebra& alg, std::uint64_t weight,
                                             SearchOptions opts) {
    const int n = alg.dim;
    const std::uint64_t p = alg.p;
    const int cells = n * n;
    // candidate count = p^cells
    std::uint64_t count = 1;
    for (int i = 0; i < cells; ++i) {
        if (count > opts.budget / p + 1) {
            count = opts.budget + 1;
            break;
        }
        count *= p;
    }
    if (count > opts.budget)
        throw BudgetError("enumeration refused: " + std::to_string(p) + "^" +
                          std::to_string(cells) + " candidates exceed budget " +
                          std::to_string(opts.budget));

    std::vector<FpMatrix> out;
    FpMatrix m;
    m.dim = n;
    m.a.assign(static_cast<size_t>(cells), 0);
    // Counting with the first row-major entry as the most significant digit
    // yields row-major lexicographic output order directly.
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rest = idx;
        for (int c = cells - 1; c >= 0; --c) {
            m.a[static_cast<size_t>(c)] = rest % p;
            rest /= p;
        }
        if (fp_is_rb_operator(alg, m, weight)) out.push_back(m);
    }
    // double-entry second pass with swapped loop order
    for (const auto& cand : out)
        if (!fp_is_rb_operator(alg, cand, weight, /*swapped=*/true))
            throw Error("enumeration self-check failed: swapped-order pass disagrees");
    return out;
}

std::vector<std::pair<FpMatrix, FpMatrix>>
enumerate_rb_pairs(const FpAlgebra& alg, std::uint64_t weight,
                   const std::vector<FpMatrix>& candidates) {
    const int n = alg.dim;
    const std::uint64_t p = alg.p;
    auto mixed = [&](const FpMatrix& A, const FpMatrix& B) {
        // A(h) B(g) = B( A(h) g + h B(g) + w h g ) on all basis pairs
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::vector<std::uint64_t> lhs(static_cast<size_t>(n), 0);
                for (int i = 0; i < n; ++i) {
                    std::uint64_t c1 = A.at(i, a);
                    if (c1 == 0) continue;
                    for (int j = 0; j < n; ++j)
                        axpy(lhs, mulm(c1, B.at(j, b), p),
                             &alg.mul[(static_cast<size_t>(i) * n + j) * n], n, p);
                }
                std::vector<std::uint64_t> inner(static_cast<size_t>(n), 0);
                for (int i = 0; i < n; ++i)
                    axpy(inner, A.at(i, a), &alg.mul[(static_cast<size_t>(i) * n + b) * n], n, p);
                for (int j = 0; j < n; ++j)
                    axpy(inner, B.at(j, b), &alg.mul[(static_cast<size_t>(a) * n + j) * n], n, p);
                axpy(inner, weight, &alg.mul[(static_cast<size_t>(a) * n + b) * n], n, p);
                std::vector<std::uint64_t> rhs(static_cast<size_t>(n), 0);
                for (int j = 0; j < n; ++j) {
                    std::uint64_t c = inner[static_cast<size_t>(j)];
                    if (c == 0) continue;
                    for (int i = 0; i < n; ++i)
                        rhs[static_cast<size_t>(i)] =
                            addm(rhs[static_cast<size_t>(i)], mulm(c, B.at(i, j), p), p);
                }
                if (lhs != rhs) return false;
            }
        return true;
    };
    std::vector<std::pair<FpMatrix, FpMatrix>> out;
    for (const auto& A : candidates)
        for (const auto& B : candidates) {
            // law 1: A(h)B(g) = B(A(h)g + hB(g) + w hg)
            if (!mixed(A, B)) continue;
            // law 2: B(h)A(g) = B(B(h)g + hA(g) + w hg)  -- outer operator is B again
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n; ++b) {
                    std::vector<std::uint64_t> lhs(static_cast<size_t>(n), 0);
                    for (int i = 0; i < n; ++i) {
                        std::uint64_t c1 = B.at(i, a);
                        if (c1 == 0) continue;
                        for (int j = 0; j < n; ++j)
                            axpy(lhs, mulm(c1, A.at(j, b), p),
                                 &alg.mul[(static_cast<size_t>(i) * n + j) * n], n, p);
                    }
                    std::vector<std::uint64_t> inner(static_cast<size_t>(n), 0);
                    for (int i = 0; i < n; ++i)
                        axpy(inner, B.at(i, a), &alg.mul[(static_cast<size_t>(i) * n + b) * n], n,
                             p);
                    for (int j = 0; j < n; ++j)
                        axpy(inner, A.at(j, b), &alg.mul[(static_cast<size_t>(a) * n + j) * n], n,
                             p);
                    axpy(inner, weight, &alg.mul[(static_cast<size_t>(a) * n + b) * n], n, p);
                    std::vector<std::uint64_t> rhs(static_cast<size_t>(n), 0);
                    for (int j = 0; j < n; ++j) {
                        std::uint64_t c = inner[static_cast<size_t>(j)];
                        if (c == 0) continue;
                        for (int i = 0; i < n; ++i)
                            rhs[static_cast<size_t>(i)] =
                                addm(rhs[static_cast<size_t>(i)], mulm(c, B.at(i, j), p), p);
                    }
                    if (lhs != rhs) {
                        ok = false;
                        break;
                    }
                }
            if (ok) out.emplace_back(A, B);
        }
    return out;
}

FpMatrix fp_tilde(const FpAlgebra& alg, const FpMatrix& m, std::uint64_t weight) {
    FpMatrix t;
    t.dim = m.dim;
    t.a.assign(m.a.size(), 0);
    const std::uint64_t p = alg.p;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) {
            std::uint64_t v = (p - m.at(i, j)) % p;
            if (i == j) v = addm(v, (p - weight % p) % p, p);
            t.a[static_cast<size_t>(i) * m.dim + j] = v;
        }
    return t;
}

} // namespace turaev
