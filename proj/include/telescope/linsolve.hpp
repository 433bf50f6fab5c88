#pragma once

#include "telescope/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace telescope {

template <class K>
struct LinearSolution {
    std::optional<std::vector<K>> particular;  // nullopt when the system is inconsistent
    std::vector<std::vector<K>> nullspace;
};

/// Exact affine solution set of M x = rhs over a field, by fraction-free
/// (Bareiss, division-deferred) Gaussian elimination. Every division performed
/// during elimination is exact, which keeps Q(n) entries polynomial-sized.
template <class K>
LinearSolution<K> solve_linear(std::vector<std::vector<K>> M, std::vector<K> rhs) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    if (rhs.size() != rows) throw std::invalid_argument("solve_linear: dimension mismatch");
    for (const auto& r : M)
        if (r.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

    // Augment and eliminate; pivots[c] = row holding the pivot of column c.
    for (std::size_t i = 0; i < rows; ++i) M[i].push_back(rhs[i]);
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    K prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && M[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(M[rank], M[sel]);
        const K piv = M[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const K mic = M[i][col];
            for (std::size_t j = col + 1; j <= cols; ++j)
                M[i][j] = (piv * M[i][j] - M[rank][j] * mic) / prev;
            M[i][col] = K(0);
        }
        prev = piv;
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }

    // Inconsistency: a zero row of coefficients with nonzero augmented entry.
    for (std::size_t i = rank; i < rows; ++i)
        if (!M[i][cols].is_zero()) return {std::nullopt, {}};

    // Back substitution on the echelon form, free variables set to `free_val`.
    auto back_solve = [&](const std::vector<K>& freevals, bool homogeneous) {
        std::vector<K> x(cols, K(0));
        std::size_t fi = 0;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] < 0) x[c] = freevals.empty() ? K(0) : freevals[fi++];
        for (long c = static_cast<long>(cols) - 1; c >= 0; --c) {
            const long r = pivot_of_col[static_cast<std::size_t>(c)];
            if (r < 0) continue;
            K acc = homogeneous ? K(0) : M[r][cols];
            for (std::size_t j = static_cast<std::size_t>(c) + 1; j < cols; ++j)
                if (!x[j].is_zero()) acc = acc - M[r][j] * x[j];
            x[static_cast<std::size_t>(c)] = acc / M[r][static_cast<std::size_t>(c)];
        }
        return x;
    };

    LinearSolution<K> out;
    out.particular = back_solve({}, false);
    std::size_t nfree = 0;
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) ++nfree;
    for (std::size_t f = 0; f < nfree; ++f) {
        std::vector<K> freevals(nfree, K(0));
        freevals[f] = K(1);
        out.nullspace.push_back(back_solve(freevals, true));
    }
    return out;
}

}  // namespace telescope
