// Positivity of the partial transpose for tripartite mixtures of Young
// projectors, computed entirely through the small representation blocks: one
// 2x2 block on the entangled-leg sector and two scalars on the complement.
// No d^3-dimensional matrix is ever formed here.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "walled/irreps.hpp"
#include "walled/multiplicity.hpp"
#include "walled/parallel.hpp"
#include "walled/perm.hpp"
#include "walled/yor.hpp"

namespace walled::ppt {

// Central Young projector P_lambda = sum_sigma c_sigma V(sigma) on n factors:
// c_sigma = (m_lambda / n!) * trace phi_lambda(sigma).
inline std::map<Permutation, double> young_projector_coeffs(const Partition& lambda, int n) {
    if (lambda.weight() != n)
        throw std::invalid_argument("young_projector_coeffs: lambda must be a partition of n");
    const double scale =
        static_cast<double>(hook_dimension(lambda)) / static_cast<double>(factorial(n));
    std::map<Permutation, double> coeffs;
    for_each_permutation(n, [&](const Permutation& sigma) {
        coeffs[sigma] = scale * yor_matrix(lambda, sigma).trace();
    });
    return coeffs;
}

// Precomputed per-projector data for n = 3: the image of each P_lambda after
// partial transposition of the last factor, reduced to its invariant blocks,
// plus traces and block multiplicities.  Order of lambdas: (1,1,1), (2,1), (3).
struct ProjectorBasis {
    int d = 0;
    std::array<Partition, 3> lambdas;
    std::array<double, 3> traces{};                    // tr P_lambda on (C^d)^3
    std::array<Eigen::Matrix2d, 3> leg_blocks{};       // 2x2 block, partition (1) of 1
    std::array<std::array<double, 2>, 3> rest_values{};  // scalars for (2) and (1,1) of 2
    std::int64_t mult_leg = 0;   // multiplicity of each 2x2 eigenvalue
    std::int64_t mult_sym = 0;   // multiplicity of the (2)-sector value
    std::int64_t mult_asym = 0;  // multiplicity of the (1,1)-sector value
};

inline ProjectorBasis projector_basis(int d) {
    if (d <= 2) throw std::invalid_argument("projector_basis: requires d > 2");
    ProjectorBasis basis;
    basis.d = d;
    basis.lambdas = {Partition({1, 1, 1}), Partition({2, 1}), Partition({3})};
    Context ctx(3, d);
    const Partition leg_alpha({1});

    for (int t = 0; t < 3; ++t) {
        const Partition& lambda = basis.lambdas[t];
        basis.traces[t] = static_cast<double>(hook_dimension(lambda)) *
                          static_cast<double>(weyl_dimension(make_label(Sector::M, lambda, d).weights));
        auto coeffs = young_projector_coeffs(lambda, 3);

        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(2, 2);
        double c_e = 0.0, c_swap = 0.0;
        for (const auto& [sigma, c] : coeffs) {
            block += c * irrep(sigma, leg_alpha, ctx);
            if (classify(sigma).fixes_last) {
                if (sigma.is_identity())
                    c_e = c;
                else
                    c_swap = c;  // the transposition (1 2) is the only other one
            }
        }
        basis.leg_blocks[t] = block;
        basis.rest_values[t] = {c_e + c_swap, c_e - c_swap};
    }

    basis.mult_leg = weyl_dimension(make_label(Sector::M, Partition({1}), d).weights);
    basis.mult_sym = weyl_dimension(make_label(Sector::N, Partition({2}), d).weights);
    basis.mult_asym = weyl_dimension(make_label(Sector::N, Partition({1, 1}), d).weights);
    return basis;
}

// Mixture weights a_lambda = atilde_lambda * tr P_lambda, so that a sums to
// tr rho; the density-operator normalization is sum a_lambda = 1 with every
// a_lambda >= 0.
struct Mixture {
    double a_asym = 0.0;  // lambda = (1,1,1)
    double a_mixed = 0.0; // lambda = (2,1)
    double a_sym = 0.0;   // lambda = (3)
};

struct SpectrumLine {
    double value = 0.0;
    std::int64_t multiplicity = 0;
};

namespace detail {
inline std::pair<double, double> eigenvalues_2x2(const Eigen::Matrix2d& M) {
    const double tr = M.trace();
    const double det = M.determinant();
    double disc = tr * tr - 4.0 * det;
    if (disc < 0.0 && disc > -1e-12) disc = 0.0;  // round-off on a real spectrum
    if (disc < 0.0) throw std::runtime_error("eigenvalues_2x2: complex spectrum");
    const double root = std::sqrt(disc);
    return {(tr - root) / 2.0, (tr + root) / 2.0};
}
}  // namespace detail

// Eigenvalues of the partial transpose of the mixture, with multiplicities
// summing to d^3.
inline std::vector<SpectrumLine> transposed_spectrum(const ProjectorBasis& basis,
                                                     const Mixture& mix) {
    const std::array<double, 3> a{mix.a_asym, mix.a_mixed, mix.a_sym};
    Eigen::Matrix2d block = Eigen::Matrix2d::Zero();
    double sym = 0.0, asym = 0.0;
    for (int t = 0; t < 3; ++t) {
        const double atilde = a[t] / basis.traces[t];
        block += atilde * basis.leg_blocks[t];
        sym += atilde * basis.rest_values[t][0];
        asym += atilde * basis.rest_values[t][1];
    }
    auto [lo, hi] = detail::eigenvalues_2x2(block);
    return {SpectrumLine{lo, basis.mult_leg}, SpectrumLine{hi, basis.mult_leg},
            SpectrumLine{sym, basis.mult_sym}, SpectrumLine{asym, basis.mult_asym}};
}

inline double min_transposed_eigenvalue(const ProjectorBasis& basis, const Mixture& mix) {
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& line : transposed_spectrum(basis, mix)) lo = std::min(lo, line.value);
    return lo;
}

inline constexpr double kFeasibilityTolerance = -1e-12;

struct RegionPoint {
    double a_asym = 0.0;
    double a_mixed = 0.0;
    bool feasible = false;
    double min_eig = 0.0;
};

// Uniform barycentric scan of the simplex a_asym + a_mixed + a_sym = 1,
// a >= 0, projected to (a_asym, a_mixed).  grid is the number of steps per
// axis; points are emitted row-major in (i, j), deterministically.
inline std::vector<RegionPoint> ppt_region(int d, int grid) {
    if (grid < 1) throw std::invalid_argument("ppt_region: grid must be positive");
    ProjectorBasis basis = projector_basis(d);
    std::vector<std::size_t> offsets(grid + 2, 0);
    for (int i = 0; i <= grid; ++i) offsets[i + 1] = offsets[i] + (grid - i + 1);
    std::vector<RegionPoint> points(offsets[grid + 1]);
    parallel_for(static_cast<std::size_t>(grid) + 1, [&](std::size_t i) {
        for (int j = 0; j + static_cast<int>(i) <= grid; ++j) {
            Mixture mix;
            mix.a_asym = static_cast<double>(i) / grid;
            mix.a_mixed = static_cast<double>(j) / grid;
            mix.a_sym = 1.0 - mix.a_asym - mix.a_mixed;
            RegionPoint& p = points[offsets[i] + j];
            p.a_asym = mix.a_asym;
            p.a_mixed = mix.a_mixed;
            p.min_eig = min_transposed_eigenvalue(basis, mix);
            p.feasible = p.min_eig >= kFeasibilityTolerance;
        }
    });
    return points;
}

}  // namespace walled::ppt
