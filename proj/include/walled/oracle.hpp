// Brute-force ground truth on (C^d)^{x n}: dense permutation operators,
// partial transpose / trace, the projective group-algebra units E_ij, and the
// entangled-leg vector families from which Gram matrices and representation
// matrices are extracted independently of the closed-form path.
//
// Basis order of (C^d)^{x n} is fixed: factor 1 is the slowest (most
// significant) digit, so |i_1 ... i_n> has index sum_k i_k d^{n-k}.
// Everything here is deliberately dense and guarded to desk scale.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "walled/embedding.hpp"
#include "walled/gram.hpp"
#include "walled/partition.hpp"
#include "walled/perm.hpp"
#include "walled/yor.hpp"

namespace walled::oracle {

inline constexpr std::int64_t kDimGuard = 100000;

inline std::int64_t checked_dim(int d, int n) {
    std::int64_t dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > kDimGuard)
            throw std::invalid_argument("oracle: d^n exceeds the desk-scale guard of 1e5");
    }
    return dim;
}

namespace detail {

inline void decode(std::int64_t index, int d, int n, std::vector<int>& digits) {
    digits.resize(n);
    for (int k = n - 1; k >= 0; --k) {
        digits[k] = static_cast<int>(index % d);
        index /= d;
    }
}

inline std::int64_t encode(const std::vector<int>& digits, int d) {
    std::int64_t index = 0;
    for (int v : digits) index = index * d + v;
    return index;
}

}  // namespace detail

// Destination index of basis state |index> under V(sigma): factor k receives
// digit sigma^{-1}(k), i.e. digit j travels to slot sigma(j).
inline std::int64_t permuted_index(const Permutation& sigma, int d, std::int64_t index) {
    const int n = sigma.degree();
    std::vector<int> in, out(n);
    detail::decode(index, d, n, in);
    for (int j = 0; j < n; ++j) out[sigma(j)] = in[j];
    return detail::encode(out, d);
}

inline Eigen::MatrixXd perm_operator(const Permutation& sigma, int d) {
    if (d < 2) throw std::invalid_argument("perm_operator: need d >= 2");
    const std::int64_t dim = checked_dim(d, sigma.degree());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) M(permuted_index(sigma, d, col), col) = 1.0;
    return M;
}

inline Eigen::VectorXd apply_perm(const Permutation& sigma, int d, const Eigen::VectorXd& x) {
    Eigen::VectorXd y(x.size());
    for (std::int64_t col = 0; col < x.size(); ++col) y(permuted_index(sigma, d, col)) = x(col);
    return y;
}

// Transposition of the last tensor factor only; an involution.
inline Eigen::MatrixXd partial_transpose_last(const Eigen::MatrixXd& X, int n, int d) {
    const std::int64_t dim = checked_dim(d, n);
    if (X.rows() != dim || X.cols() != dim)
        throw std::invalid_argument("partial_transpose_last: dimension mismatch");
    const std::int64_t outer = dim / d;
    Eigen::MatrixXd Y(dim, dim);
    for (std::int64_t u = 0; u < outer; ++u)
        for (std::int64_t v = 0; v < outer; ++v)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    Y(u * d + i, v * d + j) = X(u * d + j, v * d + i);
    return Y;
}

// Trace over the last two factors; result acts on n-2 factors.
inline Eigen::MatrixXd partial_trace_last_two(const Eigen::MatrixXd& X, int n, int d) {
    if (n < 2) throw std::invalid_argument("partial_trace_last_two: need n >= 2");
    const std::int64_t dim = checked_dim(d, n);
    if (X.rows() != dim || X.cols() != dim)
        throw std::invalid_argument("partial_trace_last_two: dimension mismatch");
    const std::int64_t outer = dim / (d * d);
    Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(outer, outer);
    for (std::int64_t p = 0; p < outer; ++p)
        for (std::int64_t q = 0; q < outer; ++q) {
            double acc = 0.0;
            for (std::int64_t st = 0; st < static_cast<std::int64_t>(d) * d; ++st)
                acc += X(p * d * d + st, q * d * d + st);
            Y(p, q) = acc;
        }
    return Y;
}

// V'(sigma) for sigma in S(n): the permutation operator with the last factor
// transposed.
inline Eigen::MatrixXd transposed_perm_operator(const Permutation& sigma, int d) {
    return partial_transpose_last(perm_operator(sigma, d), sigma.degree(), d);
}

// ---------------------------------------------------------------------------
// Group-algebra units E_ij = (m/|G|) sum_sigma phi_ij(sigma) V(sigma) on
// (C^d)^{x w} for a partition of w, and the orthonormal family phi_i(r)
// spanning range(E_00): r runs over the multiplicity of the irrep in the
// tensor power.
// ---------------------------------------------------------------------------
struct YoungUnits {
    Partition alpha;
    int w = 0, d = 0, m = 0, mult = 0;
    std::vector<Eigen::MatrixXd> E;  // m*m operators, E[i*m + j]
    Eigen::MatrixXd phi;             // d^w x (m*mult); column i*mult + r holds phi_i(r)

    const Eigen::MatrixXd& unit(int i, int j) const { return E[i * m + j]; }
    Eigen::VectorXd phi_vector(int i, int r) const { return phi.col(i * mult + r); }
};

inline YoungUnits young_units(const Partition& alpha, int d) {
    YoungUnits u;
    u.alpha = alpha;
    u.w = alpha.weight();
    u.d = d;
    u.m = static_cast<int>(hook_dimension(alpha));
    const std::int64_t dim = checked_dim(d, u.w);

    u.E.assign(u.m * u.m, Eigen::MatrixXd::Zero(dim, dim));
    const double scale = static_cast<double>(u.m) / static_cast<double>(factorial(u.w));
    for_each_permutation(u.w, [&](const Permutation& sigma) {
        Eigen::MatrixXd V = perm_operator(sigma, d);
        Eigen::MatrixXd phi_mat = yor_matrix(alpha, sigma);
        for (int i = 0; i < u.m; ++i)
            for (int j = 0; j < u.m; ++j)
                if (phi_mat(i, j) != 0.0) u.E[i * u.m + j] += scale * phi_mat(i, j) * V;
    });

    // Orthonormal basis of range(E_00) by Gram-Schmidt over its columns in
    // basis order; deterministic, tolerance relative to the unit projector.
    std::vector<Eigen::VectorXd> basis;
    const Eigen::MatrixXd& P = u.E[0];
    for (std::int64_t c = 0; c < dim; ++c) {
        Eigen::VectorXd v = P.col(c);
        for (const auto& b : basis) v -= b.dot(v) * b;
        double norm = v.norm();
        if (norm > 1e-8) basis.push_back(v / norm);
    }
    u.mult = static_cast<int>(basis.size());
    u.phi.resize(dim, u.m * u.mult);
    for (int r = 0; r < u.mult; ++r) {
        u.phi.col(0 * u.mult + r) = basis[r];
        for (int i = 1; i < u.m; ++i) u.phi.col(i * u.mult + r) = u.unit(i, 0) * basis[r];
    }
    return u;
}

// ---------------------------------------------------------------------------
// Entangled-leg family: psi_{(k,i)}(r) = V(pi_k) (phi_i(r) ox PhiPlus) where
// PhiPlus = sum_l |ll> sits on the last two factors (so each psi has squared
// norm d).  Columns are leg-major: x = k*m + i, one matrix per multiplicity r.
// ---------------------------------------------------------------------------
struct PsiFamily {
    Partition alpha;
    int n = 0, d = 0, m = 0, mult = 0;
    std::vector<Eigen::MatrixXd> per_r;  // each d^n x ((n-1)*m)
};

inline PsiFamily psi_family(const YoungUnits& units, const Context& ctx) {
    if (units.w != ctx.n - 2 || units.d != ctx.d)
        throw std::invalid_argument("psi_family: units do not match the context");
    PsiFamily fam;
    fam.alpha = units.alpha;
    fam.n = ctx.n;
    fam.d = ctx.d;
    fam.m = units.m;
    fam.mult = units.mult;
    const std::int64_t dim = checked_dim(ctx.d, ctx.n);
    const std::int64_t inner = checked_dim(ctx.d, ctx.n - 2);
    const int legs = ctx.legs(), d = ctx.d;

    for (int r = 0; r < units.mult; ++r) {
        Eigen::MatrixXd cols(dim, legs * units.m);
        for (int i = 0; i < units.m; ++i) {
            Eigen::VectorXd base = Eigen::VectorXd::Zero(dim);
            Eigen::VectorXd phi = units.phi_vector(i, r);
            for (std::int64_t p = 0; p < inner; ++p)
                for (int l = 0; l < d; ++l) base(p * d * d + l * d + l) = phi(p);
            for (int k = 0; k < legs; ++k)
                cols.col(k * units.m + i) = apply_perm(ctx.pi(k).extended(ctx.n), d, base);
        }
        fam.per_r.push_back(std::move(cols));
    }
    return fam;
}

// Gram matrix of the family, averaged over multiplicity copies (the copies
// agree; the average just symmetrizes round-off).
inline Eigen::MatrixXd family_gram(const PsiFamily& fam) {
    if (fam.per_r.empty()) return Eigen::MatrixXd(0, 0);
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(fam.per_r[0].cols(), fam.per_r[0].cols());
    for (const auto& P : fam.per_r) G += P.transpose() * P;
    return G / static_cast<double>(fam.per_r.size());
}

struct ExtractionResult {
    Eigen::MatrixXd matrix;  // block matrix of X on the alpha sector
    double residual = 0.0;   // max norm of (X P - P M) over multiplicity copies
};

// Matrix of X on the alpha sector in the biorthogonal pairing: given dual
// coefficients D (inverse of the Gram of the supplied columns), the entry
// (x, y) equals <phi_x | X | psi_y>.  The residual measures how far X maps
// the family outside its own span and should vanish for algebra elements.
inline ExtractionResult extract_matrix(const Eigen::MatrixXd& X,
                                       const std::vector<Eigen::MatrixXd>& columns,
                                       const Eigen::MatrixXd& D) {
    ExtractionResult out;
    if (columns.empty()) return out;
    const auto cols = columns[0].cols();
    out.matrix = Eigen::MatrixXd::Zero(cols, cols);
    for (const auto& P : columns) out.matrix += D * (P.transpose() * (X * P));
    out.matrix /= static_cast<double>(columns.size());
    for (const auto& P : columns) {
        Eigen::MatrixXd res = X * P - P * out.matrix;
        out.residual = std::max(out.residual, res.cwiseAbs().maxCoeff());
    }
    return out;
}

// Full-rank extraction against the closed-form Gram inverse.
inline ExtractionResult oracle_matrix_elements(const Eigen::MatrixXd& X, const PsiFamily& fam,
                                               const GramBlockMatrix& g) {
    if (!g.inverse) throw std::invalid_argument("oracle_matrix_elements: Gram is singular");
    return extract_matrix(X, fam.per_r, *g.inverse);
}

}  // namespace walled::oracle
