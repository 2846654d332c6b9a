// The block Gram matrix Q(alpha) of the maximally-entangled-leg basis and the
// biorthogonalizing inverse D = Q^{-1}.  Blocks are indexed by leg pairs
// (a, b), entries inside a block by standard tableaux of alpha; the flat index
// is leg-major: x = a * m_alpha + i.  Q is symmetric with d * I on the
// diagonal, I on the wall row/column and phi(ab) elsewhere; for d > n-2 its
// spectrum is bounded below by d - n + 2.

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "walled/embedding.hpp"
#include "walled/partition.hpp"
#include "walled/yor.hpp"

namespace walled {

struct GramBlockMatrix {
    Partition alpha;
    int n = 0, d = 0;
    int m = 0;              // tableau count of alpha
    Eigen::MatrixXd Q;      // (n-1)m x (n-1)m
    std::vector<int> independent;  // greedy pivot survivors, ascending flat index
    int rank = 0;
    double min_eigenvalue = 0.0;
    std::optional<Eigen::MatrixXd> inverse;  // D = Q^{-1} when full rank

    int dimension() const { return static_cast<int>(Q.rows()); }
    int flat(int leg, int tableau) const { return leg * m + tableau; }
};

namespace detail {

// Greedy pivoted Cholesky in fixed index order: index x survives if its
// residual diagonal after eliminating the survivors before it exceeds tol.
inline std::vector<int> greedy_independent(const Eigen::MatrixXd& Q, double tol) {
    const int dim = static_cast<int>(Q.rows());
    Eigen::MatrixXd R = Q;
    std::vector<int> kept;
    for (int x = 0; x < dim; ++x) {
        if (R(x, x) <= tol) continue;
        kept.push_back(x);
        Eigen::VectorXd col = R.col(x) / std::sqrt(R(x, x));
        R -= col * col.transpose();
    }
    return kept;
}

}  // namespace detail

inline GramBlockMatrix gram(const Partition& alpha, const Context& ctx) {
    if (alpha.weight() != ctx.n - 2)
        throw std::invalid_argument("gram: alpha must be a partition of n-2");
    GramBlockMatrix g;
    g.alpha = alpha;
    g.n = ctx.n;
    g.d = ctx.d;
    g.m = static_cast<int>(hook_dimension(alpha));
    const int legs = ctx.legs();
    const int dim = legs * g.m;
    g.Q.resize(dim, dim);
    for (int a = 0; a < legs; ++a)
        for (int b = 0; b < legs; ++b) {
            ChiResult x = chi(a, b, ctx);
            Eigen::MatrixXd block = yor_matrix(alpha, x.perm);
            if (x.scale_power == 1) block *= ctx.d;
            g.Q.block(a * g.m, b * g.m, g.m, g.m) = block;
        }

    const double tol = 1e-9 * ctx.d;
    g.independent = detail::greedy_independent(g.Q, tol);
    g.rank = static_cast<int>(g.independent.size());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.Q, Eigen::EigenvaluesOnly);
    g.min_eigenvalue = es.eigenvalues().minCoeff();

    if (g.rank == dim) g.inverse = g.Q.inverse();
    return g;
}

// Minimal eigenvalue of Q(alpha); callers in the d > n-2 regime may rely on
// the bound min_eig >= d - n + 2.
inline double gram_positivity_margin(const Partition& alpha, const Context& ctx) {
    if (!ctx.full_rank_regime())
        throw std::invalid_argument("gram_positivity_margin: requires d > n-2");
    return gram(alpha, ctx).min_eigenvalue;
}

// Data of the basis change from the raw leg operators to the biorthogonal
// family: omega = D . v with D = Q^{-1}, and back v = Q-weighted omega.
struct OmegaTransform {
    GramBlockMatrix gram;
    Eigen::MatrixXd D;
};

inline OmegaTransform omega_coeffs(const Partition& alpha, const Context& ctx) {
    if (!ctx.full_rank_regime())
        throw std::invalid_argument("omega_coeffs: requires d > n-2");
    GramBlockMatrix g = gram(alpha, ctx);
    if (!g.inverse) throw std::runtime_error("omega_coeffs: singular Gram matrix");
    Eigen::MatrixXd D = *g.inverse;
    return OmegaTransform{std::move(g), std::move(D)};
}

}  // namespace walled
