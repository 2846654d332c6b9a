// Generator fixtures for n = 3, 4, 5.  Matrices are functions of the local
// dimension d; the only d-dependent entry is the corner of the transposed
// generator.  For shapes with two tableaux the recorded tables are the
// submatrix on the staircase index set (leg c, tableau c mod m), which is how
// those generators are conventionally tabulated; extract_staircase pulls that
// submatrix out of the full representation matrix.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "walled/partition.hpp"

namespace golden {

struct GeneratorTable {
    int n;
    walled::Partition alpha;
    // label -> matrix builder at local dimension d
    std::vector<std::pair<std::string, Eigen::MatrixXd (*)(double)>> matrices;
};

inline Eigen::MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows) {
    Eigen::MatrixXd M(rows.size(), rows.begin()->size());
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (double v : row) M(r, c++) = v;
        ++r;
    }
    return M;
}

inline Eigen::MatrixXd extract_staircase(const Eigen::MatrixXd& full, int legs, int m) {
    Eigen::MatrixXd S(legs, legs);
    auto flat = [&](int c) { return c * m + (c % m); };
    for (int r = 0; r < legs; ++r)
        for (int c = 0; c < legs; ++c) S(r, c) = full(flat(r), flat(c));
    return S;
}

inline std::vector<GeneratorTable> generator_tables() {
    using walled::Partition;
    const double h = std::sqrt(3.0) / 2.0;
    std::vector<GeneratorTable> tables;

    tables.push_back({3, Partition({1}), {
        {"e", +[](double) { return mat({{1, 0}, {0, 1}}); }},
        {"(1 2)", +[](double) { return mat({{0, 1}, {1, 0}}); }},
        {"(2 3)'", +[](double d) { return mat({{0, 0}, {1, d}}); }},
    }});

    tables.push_back({4, Partition({2}), {
        {"e", +[](double) { return mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }},
        {"(1 2)", +[](double) { return mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }},
        {"(2 3)", +[](double) { return mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }},
        {"(3 4)'", +[](double d) { return mat({{0, 0, 0}, {0, 0, 0}, {1, 1, d}}); }},
    }});

    tables.push_back({4, Partition({1, 1}), {
        {"e", +[](double) { return mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }},
        {"(1 2)", +[](double) { return mat({{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}); }},
        {"(2 3)", +[](double) { return mat({{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }},
        {"(3 4)'", +[](double d) { return mat({{0, 0, 0}, {0, 0, 0}, {1, 1, d}}); }},
    }});

    tables.push_back({5, Partition({3}), {
        {"e", +[](double) { return Eigen::MatrixXd(Eigen::MatrixXd::Identity(4, 4)); }},
        {"(1 2)", +[](double) {
             return mat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
         }},
        {"(2 3)", +[](double) {
             return mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
         }},
        {"(3 4)", +[](double) {
             return mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
         }},
        {"(4 5)'", +[](double d) {
             return mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 1, d}});
         }},
    }});

    // two-tableau shape: tables give the staircase submatrix of the 8x8
    tables.push_back({5, Partition({2, 1}), {
        {"e", +[](double) { return Eigen::MatrixXd(Eigen::MatrixXd::Identity(4, 4)); }},
        {"(1 2)", +[](double) {
             return mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
         }},
        {"(2 3)", +[](double) {
             const double h = std::sqrt(3.0) / 2.0;
             return mat({{-0.5, 0, 0, 0}, {0, 0, h, 0}, {0, h, 0, 0}, {0, 0, 0, 0.5}});
         }},
        {"(3 4)", +[](double) {
             return mat({{-0.5, 0, 0, 0}, {0, 0.5, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
         }},
        {"(4 5)'", +[](double d) {
             return mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, d}});
         }},
    }});

    tables.push_back({5, Partition({1, 1, 1}), {
        {"e", +[](double) { return Eigen::MatrixXd(Eigen::MatrixXd::Identity(4, 4)); }},
        {"(1 2)", +[](double) {
             return mat({{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
         }},
        {"(2 3)", +[](double) {
             return mat({{-1, 0, 0, 0}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, -1}});
         }},
        {"(3 4)", +[](double) {
             return mat({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
         }},
        {"(4 5)'", +[](double d) {
             return mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 1, d}});
         }},
    }});

    (void)h;
    return tables;
}

}  // namespace golden
