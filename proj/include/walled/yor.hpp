// Young's orthogonal representation of the symmetric group: real orthogonal
// matrices phi(sigma) indexed by the standard tableaux of a shape, with
// symmetric images for transpositions.  Rows and columns follow the tableau
// order fixed in partition.hpp.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "walled/partition.hpp"
#include "walled/perm.hpp"

namespace walled {

// Image of the adjacent transposition (k, k+1), 0-based points.  Diagonal
// entries are inverse axial distances 1/r, off-diagonal sqrt(1 - 1/r^2)
// between tableaux swapped into each other by the transposition.
inline Eigen::MatrixXd yor_adjacent(const Partition& shape, int k) {
    const int w = shape.weight();
    if (k < 0 || k + 1 >= w) throw std::invalid_argument("yor_adjacent: k out of range");
    auto tabs = standard_tableaux(shape);
    const int m = static_cast<int>(tabs.size());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);

    const int u = k + 1, v = k + 2;  // tableau letters
    for (int t = 0; t < m; ++t) {
        const StandardTableau& T = tabs[t];
        const int dist = T.content(v) - T.content(u);
        const double rho = 1.0 / dist;
        M(t, t) = rho;
        if (std::abs(dist) == 1) continue;  // u, v adjacent in a row or column: no partner
        // Swapping letters u, v yields another standard tableau; locate it.
        auto rows = T.rows();
        std::swap(rows[T.row_of(u)][T.col_of(u)], rows[T.row_of(v)][T.col_of(v)]);
        StandardTableau S(shape, std::move(rows));
        for (int s = 0; s < m; ++s) {
            if (tabs[s] == S) {
                M(t, s) = std::sqrt(1.0 - rho * rho);
                break;
            }
        }
    }
    return M;
}

// phi(sigma): product of adjacent-transposition images along a bubble-sort
// factorization of sigma.  Independent of the factorization; the bubble sort
// makes the code path deterministic.
inline Eigen::MatrixXd yor_matrix(const Partition& shape, const Permutation& sigma) {
    if (sigma.degree() != shape.weight())
        throw std::invalid_argument("yor_matrix: degree does not match shape weight");
    const int m = static_cast<int>(hook_dimension(shape));
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m);
    if (shape.weight() <= 1) return M;

    // Sort the one-line word to the identity; the recorded swaps s_1 ... s_t
    // satisfy sigma * s_1 * ... * s_t = e, hence sigma = s_t * ... * s_1.
    std::vector<int> word = sigma.images();
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j + 1 < static_cast<int>(word.size()); ++j) {
            if (word[j] > word[j + 1]) {
                std::swap(word[j], word[j + 1]);
                swaps.push_back(j);
                moved = true;
            }
        }
    }
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
        M = M * yor_adjacent(shape, *it);
    return M;
}

}  // namespace walled
