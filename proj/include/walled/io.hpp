// JSON conversions shared by the command-line tool and tests.  Numeric output
// is rounded to 12 significant digits so byte-identical flags give
// byte-identical output; integers pass through exactly.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

#include "walled/partition.hpp"
#include "walled/perm.hpp"

namespace walled::io {

using nlohmann::json;

inline double round_sig(double value) {
    if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::strtod(buf, nullptr);
}

inline json matrix_to_json(const Eigen::MatrixXd& M) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            double v = round_sig(M(r, c));
            if (v == std::floor(v) && std::abs(v) < 1e15)
                row.push_back(static_cast<long long>(v));
            else
                row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json permutation_to_json(const Permutation& p) { return json(p.one_line()); }

inline json partition_to_json(const Partition& p) { return json(p.parts()); }

}  // namespace walled::io
