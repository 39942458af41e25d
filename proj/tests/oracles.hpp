#pragma once

// Test-only oracles, kept independent of the library's elimination code:
// cofactor determinants, minor-based rank, and brute-force residue tables.

#include <cstdint>
#include <set>
#include <vector>

#include "octorank/field.hpp"
#include "octorank/matrix.hpp"

namespace oracles {

using octorank::ExactMatrix;
using octorank::FieldElement;
using octorank::FieldSpec;

// Cofactor expansion along the first row.
inline FieldElement cofactor_det(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    FieldElement det = m.field().zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        ExactMatrix minor(n - 1, n - 1, m.field());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        FieldElement term = m.at(0, j) * cofactor_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// Rank as the size of the largest nonsingular square minor. Exponential;
// fine for the tiny matrices used in tests.
inline std::size_t minor_rank(const ExactMatrix& m) {
    const std::size_t n = m.rows(), k = m.cols();
    std::vector<std::size_t> rows_idx(n), cols_idx(k);
    for (std::size_t i = 0; i < n; ++i) rows_idx[i] = i;
    for (std::size_t j = 0; j < k; ++j) cols_idx[j] = j;

    const std::size_t maxr = n < k ? n : k;
    for (std::size_t size = maxr; size >= 1; --size) {
        // all row subsets of the given size
        std::vector<std::size_t> rsel(size), csel(size);
        std::vector<bool> rmask(n, false), cmask(k, false);
        std::fill(rmask.begin(), rmask.begin() + static_cast<long>(size), true);
        do {
            std::size_t ri = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (rmask[i]) rsel[ri++] = i;
            std::fill(cmask.begin(), cmask.end(), false);
            std::fill(cmask.begin(), cmask.begin() + static_cast<long>(size), true);
            do {
                std::size_t ci = 0;
                for (std::size_t j = 0; j < k; ++j)
                    if (cmask[j]) csel[ci++] = j;
                ExactMatrix sub(size, size, m.field());
                for (std::size_t i = 0; i < size; ++i)
                    for (std::size_t j = 0; j < size; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
                if (!cofactor_det(sub).is_zero()) return size;
            } while (std::prev_permutation(cmask.begin(), cmask.end()));
        } while (std::prev_permutation(rmask.begin(), rmask.end()));
    }
    return 0;
}

// The set of nonzero squares mod p, by brute force.
inline std::set<std::int64_t> nonzero_squares_mod(std::int64_t p) {
    std::set<std::int64_t> squares;
    for (std::int64_t b = 1; b < p; ++b) squares.insert(b * b % p);
    return squares;
}

}  // namespace oracles
