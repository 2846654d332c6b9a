#include <catch2/catch_amalgamated.hpp>

#include "golden_fixtures.hpp"
#include "walled/irreps.hpp"

using namespace walled;

namespace {
constexpr double kTol = 1e-9;

bool approx_equal(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol = kTol) {
    return A.rows() == B.rows() && A.cols() == B.cols() &&
           (A - B).cwiseAbs().maxCoeff() <= tol;
}

// Cycle labels in the classical reduced-image tables map each point to its
// LEFT neighbour, the inverse of this library's parser; involutions are
// unaffected.  table_perm gives the permutation such a label denotes.
Permutation table_perm(const std::string& cycles, int n) {
    return Permutation::parse_cycles(cycles, n).inverse();
}
}  // namespace

TEST_CASE("reduced basis for the rank-deficient sign shape at n = 4, d = 2") {
    Context ctx(4, 2);
    ReducedIrrep red = degenerate_basis(Partition({1, 1}), ctx);

    SECTION("selection") {
        CHECK(red.dimension() == 2);
        CHECK(red.gram_data().rank == 2);
        CHECK(red.basis() == std::vector<int>{0, 1});  // legs 1 and 2, first tableau
        Eigen::MatrixXd expected(2, 2);
        expected << 2, 1, 1, 2;  // signs canonicalized: first Gram row non-negative
        CHECK(approx_equal(red.reduced_gram(), expected));
    }

    SECTION("reduced images of the four reference elements") {
        CHECK(approx_equal(red.image_rows(table_perm("(3 4)", 4)),
                           golden::mat({{1, -1}, {-1, 1}})));
        CHECK(approx_equal(red.image_rows(table_perm("(1 2)", 4).extended(4)),
                           golden::mat({{0, 1}, {1, 0}})));
        CHECK(approx_equal(red.image_rows(table_perm("(1 4)", 4)),
                           golden::mat({{2, 0}, {1, 0}})));
        CHECK(approx_equal(red.image_rows(table_perm("(1 2 3 4)", 4)),
                           golden::mat({{-2, 2}, {-1, 1}})));
    }

    SECTION("further table entries") {
        CHECK(approx_equal(red.image_rows(table_perm("(2 4)", 4)),
                           golden::mat({{0, 1}, {0, 2}})));
        CHECK(approx_equal(red.image_rows(table_perm("(1 2 4)", 4)),
                           golden::mat({{0, 2}, {0, 1}})));
        CHECK(approx_equal(red.image_rows(table_perm("(1 3)", 4)),
                           golden::mat({{1, -1}, {0, -1}})));
        CHECK(approx_equal(red.image_rows(table_perm("(2 3)", 4)),
                           golden::mat({{-1, 0}, {-1, 1}})));
        CHECK(approx_equal(red.image_rows(table_perm("(1 2 3)", 4)),
                           golden::mat({{-1, 1}, {-1, 0}})));
        CHECK(approx_equal(red.image_rows(table_perm("(1 3 2)", 4)),
                           golden::mat({{0, -1}, {1, -1}})));
    }

    SECTION("action matrices are multiplicative") {
        auto s4 = all_permutations(4);
        for (const auto& sigma : s4) {
            Eigen::MatrixXd A = red.action(sigma);
            for (const auto& tau : s4) {
                if (classify(tau).fixes_last) {
                    // V'(sigma) V(tau) = V'(sigma o tau)
                    CHECK(approx_equal(A * red.action(tau), red.action(compose(sigma, tau)), 1e-8));
                }
            }
        }
    }
}

TEST_CASE("full-rank shapes reduce to the standard path") {
    SECTION("all-positive Gram row: no sign adjustment") {
        Context ctx(4, 2);
        ReducedIrrep red = degenerate_basis(Partition({2}), ctx);
        CHECK(red.dimension() == 3);
        CHECK(red.basis() == std::vector<int>{0, 1, 2});
        for_each_permutation(4, [&](const Permutation& sigma) {
            CHECK(approx_equal(red.action(sigma), irrep(sigma, Partition({2}), ctx)));
        });
    }
    SECTION("negative Gram entry: reduced action is the sign-conjugated standard one") {
        Context ctx(4, 3);
        const Partition alpha({1, 1});
        ReducedIrrep red = degenerate_basis(alpha, ctx);
        CHECK(red.dimension() == 3);
        Eigen::Vector3d s(1.0, -1.0, 1.0);  // Q row 1 is (3, -1, 1)
        for_each_permutation(4, [&](const Permutation& sigma) {
            Eigen::MatrixXd expected =
                s.asDiagonal() * irrep(sigma, alpha, ctx) * s.asDiagonal();
            CHECK(approx_equal(red.action(sigma), expected));
        });
    }
}

TEST_CASE("represent in the rank-deficient regime uses reduced dimensions") {
    Context ctx(4, 2);
    auto rep = represent({{Permutation::parse_cycles("(3 4)", 4), 1.0}}, ctx);
    CHECK(rep.at(Partition({2})).matrix.rows() == 3);
    CHECK(rep.at(Partition({1, 1})).matrix.rows() == 2);
}

TEST_CASE("deeper rank deficiency at n = 5, d = 2") {
    Context ctx(5, 2);
    // dimension accounting at (n, d) = (5, 2): 6*1 + 4*4 + 2*5 = 32 = d^n
    CHECK(degenerate_basis(Partition({3}), ctx).dimension() == 4);
    CHECK(degenerate_basis(Partition({2, 1}), ctx).dimension() == 5);
    // the all-column shape cannot exist on qubits; its Gram is still nonzero,
    // and the representation content is accounted by the multiplicity module
    ReducedIrrep red = degenerate_basis(Partition({1, 1, 1}), ctx);
    Eigen::MatrixXd A12 = red.action(Permutation::parse_cycles("(1 2)", 4).extended(5));
    Eigen::MatrixXd A = red.action(Permutation::parse_cycles("(4 5)", 5));
    CHECK(approx_equal(A12 * A12, Eigen::MatrixXd::Identity(red.dimension(), red.dimension())));
    CHECK(approx_equal(A * A, static_cast<double>(ctx.d) * A, 1e-8));  // wall projector scaling
}
