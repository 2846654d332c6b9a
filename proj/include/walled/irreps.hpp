// Irreducible matrix representations of the algebra generated by permutation
// operators with a partial transpose on the last tensor factor.
//
// For a partition alpha of n-2 the representation space is indexed by pairs
// (leg c, tableau k), flat index c * m_alpha + k, total dimension (n-1) m_alpha
// in the full-rank regime d > n-2.  Matrices act on coordinate columns:
//
//   transposed sector   M[(b,l),(c,k)] = d^{delta_ac} phi_lk(f_ab^{-1}(sigma) o chi_ac)
//                       (only the b-row block is nonzero),
//   untransposed sector M[(sigma(c),l),(c,k)] = phi_lk(f_c(sigma)).
//
// When d <= n-2 the Gram matrix may lose rank and the representation lives on
// the span of a greedily-selected independent subset of the basis; see
// ReducedIrrep below.

#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walled/embedding.hpp"
#include "walled/gram.hpp"
#include "walled/partition.hpp"
#include "walled/perm.hpp"
#include "walled/yor.hpp"

namespace walled {

struct WalledIrrepElement {
    Partition alpha;
    Eigen::MatrixXd matrix;
};

// Image of V'(sigma_ab) for sigma_ab in S(n) with sigma_ab(n-1) != n-1.
inline Eigen::MatrixXd irrep_transposed(const Permutation& sigma_ab, const Partition& alpha,
                                        const Context& ctx) {
    auto [a, b, core] = f_ab_inverse(sigma_ab, ctx);
    const int m = static_cast<int>(hook_dimension(alpha));
    const int legs = ctx.legs();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(legs * m, legs * m);
    for (int c = 0; c < legs; ++c) {
        ChiResult x = chi(a, c, ctx);
        Eigen::MatrixXd block = yor_matrix(alpha, compose(core, x.perm));
        if (x.scale_power == 1) block *= ctx.d;
        M.block(b * m, c * m, m, m) = block;
    }
    return M;
}

// Image of V(sigma) for sigma in S(n-1): block column c feeds block row
// sigma(c) with phi(f_c(sigma)).
inline Eigen::MatrixXd irrep_untransposed(const Permutation& sigma, const Partition& alpha,
                                          const Context& ctx) {
    if (sigma.degree() != ctx.n - 1)
        throw std::invalid_argument("irrep_untransposed: sigma must have degree n-1");
    const int m = static_cast<int>(hook_dimension(alpha));
    const int legs = ctx.legs();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(legs * m, legs * m);
    for (int c = 0; c < legs; ++c)
        M.block(sigma(c) * m, c * m, m, m) = yor_matrix(alpha, f_c(sigma, c, ctx));
    return M;
}

// Dispatch on the classification of a degree-n permutation.
inline Eigen::MatrixXd irrep(const Permutation& sigma, const Partition& alpha,
                             const Context& ctx) {
    if (sigma.degree() != ctx.n) throw std::invalid_argument("irrep: sigma must have degree n");
    if (classify(sigma).fixes_last)
        return irrep_untransposed(sigma.restricted(ctx.n - 1), alpha, ctx);
    return irrep_transposed(sigma, alpha, ctx);
}

// Generator images: the identity, the adjacent transpositions (k, k+1) for
// k = 1..n-2, and the partially transposed (n-1, n).  Labels are 1-based.
inline std::vector<std::pair<std::string, Eigen::MatrixXd>> generators(const Context& ctx,
                                                                       const Partition& alpha) {
    std::vector<std::pair<std::string, Eigen::MatrixXd>> out;
    out.emplace_back("e", irrep_untransposed(Permutation::identity(ctx.n - 1), alpha, ctx));
    for (int k = 0; k + 2 < ctx.n; ++k) {
        std::string label = "(" + std::to_string(k + 1) + " " + std::to_string(k + 2) + ")";
        out.emplace_back(label,
                         irrep_untransposed(Permutation::transposition(ctx.n - 1, k, k + 1),
                                            alpha, ctx));
    }
    std::string label = "(" + std::to_string(ctx.n - 1) + " " + std::to_string(ctx.n) + ")'";
    out.emplace_back(label,
                     irrep_transposed(Permutation::transposition(ctx.n, ctx.n - 2, ctx.n - 1),
                                      alpha, ctx));
    return out;
}

// ---------------------------------------------------------------------------
// Reduced representation for the rank-deficient regime d <= n-2.
//
// The independent subset I of (leg, tableau) indices is chosen by greedy
// pivoted elimination on Q in flat order; dropped basis vectors are exact
// linear combinations of the survivors (coefficients solved against the
// reduced Gram).  Basis signs are canonicalized so the first row of the
// reduced Gram is non-negative.  action() acts on coordinate columns and is a
// homomorphism; image_rows() is its transpose, the classical presentation
// where row i lists the expansion of the image of basis vector i.
// ---------------------------------------------------------------------------
class ReducedIrrep {
public:
    ReducedIrrep(Partition alpha, const Context& ctx)
        : alpha_(std::move(alpha)), ctx_(ctx), gram_(gram(alpha_, ctx)) {
        const int dim = gram_.dimension();
        kept_ = gram_.independent;
        std::vector<char> is_kept(dim, 0);
        for (int x : kept_) is_kept[x] = 1;
        for (int x = 0; x < dim; ++x)
            if (!is_kept[x]) dropped_.push_back(x);

        const int K = static_cast<int>(kept_.size());
        sign_ = Eigen::VectorXd::Ones(K);
        if (K > 0) {
            Eigen::MatrixXd Qkk(K, K);
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < K; ++j) Qkk(i, j) = gram_.Q(kept_[i], kept_[j]);
            for (int j = 1; j < K; ++j)
                if (Qkk(0, j) < 0) sign_(j) = -1.0;

            // expansion of every full-basis vector over the signed survivors
            expand_ = Eigen::MatrixXd::Zero(K, dim);
            for (int i = 0; i < K; ++i) expand_(i, kept_[i]) = sign_(i);
            if (!dropped_.empty()) {
                Eigen::MatrixXd Qkd(K, static_cast<int>(dropped_.size()));
                for (int i = 0; i < K; ++i)
                    for (std::size_t j = 0; j < dropped_.size(); ++j)
                        Qkd(i, j) = gram_.Q(kept_[i], dropped_[j]);
                Eigen::MatrixXd C = Qkk.ldlt().solve(Qkd);
                for (std::size_t j = 0; j < dropped_.size(); ++j)
                    expand_.col(dropped_[j]) = sign_.asDiagonal() * C.col(j);
            }
            reduced_gram_ = sign_.asDiagonal() * Qkk * sign_.asDiagonal();
        }
    }

    const Partition& alpha() const { return alpha_; }
    int dimension() const { return static_cast<int>(kept_.size()); }
    bool absent() const { return kept_.empty(); }
    const std::vector<int>& basis() const { return kept_; }
    const Eigen::VectorXd& basis_signs() const { return sign_; }
    const GramBlockMatrix& gram_data() const { return gram_; }
    const Eigen::MatrixXd& reduced_gram() const { return reduced_gram_; }

    // Reduced action matrix (columns are inputs); multiplicative.
    Eigen::MatrixXd action(const Permutation& sigma_degree_n) const {
        const int K = dimension();
        if (K == 0) return Eigen::MatrixXd(0, 0);
        Eigen::MatrixXd full = irrep(sigma_degree_n, alpha_, ctx_);
        Eigen::MatrixXd cols(full.rows(), K);
        for (int j = 0; j < K; ++j) cols.col(j) = full.col(kept_[j]) * sign_(j);
        return expand_ * cols;
    }

    // Row-indexed presentation: entry (i, j) is the coefficient of basis
    // vector j in the image of basis vector i.
    Eigen::MatrixXd image_rows(const Permutation& sigma_degree_n) const {
        return action(sigma_degree_n).transpose();
    }

private:
    Partition alpha_;
    Context ctx_;
    GramBlockMatrix gram_;
    std::vector<int> kept_, dropped_;
    Eigen::VectorXd sign_;
    Eigen::MatrixXd expand_;        // K x (n-1)m
    Eigen::MatrixXd reduced_gram_;  // K x K, signed
};

inline ReducedIrrep degenerate_basis(const Partition& alpha, const Context& ctx) {
    return ReducedIrrep(alpha, ctx);
}

// Linear extension over the group algebra: sum of c_sigma times the image of
// sigma, per partition of n-2.  Uses the full-rank matrices when d > n-2 and
// the reduced action otherwise (absent irreps are skipped).
inline std::map<Partition, WalledIrrepElement> represent(
    const std::map<Permutation, double>& coeffs, const Context& ctx) {
    std::map<Partition, WalledIrrepElement> out;
    for (const Partition& alpha : partitions_of(ctx.n - 2)) {
        if (ctx.full_rank_regime()) {
            const int dim = ctx.legs() * static_cast<int>(hook_dimension(alpha));
            Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
            for (const auto& [sigma, c] : coeffs) M += c * irrep(sigma, alpha, ctx);
            out.emplace(alpha, WalledIrrepElement{alpha, std::move(M)});
        } else {
            ReducedIrrep red(alpha, ctx);
            if (red.absent()) continue;
            Eigen::MatrixXd M = Eigen::MatrixXd::Zero(red.dimension(), red.dimension());
            for (const auto& [sigma, c] : coeffs) M += c * red.action(sigma);
            out.emplace(alpha, WalledIrrepElement{alpha, std::move(M)});
        }
    }
    return out;
}

}  // namespace walled
