// Irrep inventory: staircase weight labels, exact Weyl dimensions as
// multiplicities, and the d^n dimension accounting.  Labels come in two
// sectors: entangled-leg irreps carry partitions of n-2 padded with zeros,
// the complement carries partitions of n-1 padded with zeros and a trailing
// -1, both as length-d non-increasing integer strings.

#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "walled/embedding.hpp"
#include "walled/gram.hpp"
#include "walled/partition.hpp"

namespace walled {

enum class Sector { M, N };

struct IrrepLabel {
    Sector sector = Sector::M;
    Partition core;            // partition of n-2 (M) or n-1 (N)
    std::vector<int> weights;  // length d; empty when the label does not fit
    bool fits = false;

    std::string to_string() const {
        if (!fits) return core.to_string() + " [does not fit]";
        std::string s = "(";
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(weights[i]);
        }
        return s + ")";
    }
};

// Dimension of the unitary-group irrep with the given non-increasing integer
// weight string, as an exact integer (single reduced rational product,
// accumulated in 128 bits with an overflow guard).
inline std::int64_t weyl_dimension(const std::vector<int>& weights) {
    const int d = static_cast<int>(weights.size());
    for (int i = 0; i + 1 < d; ++i)
        if (weights[i] < weights[i + 1])
            throw std::invalid_argument("weyl_dimension: weights must be non-increasing");
    using wide = __int128;
    const wide limit = static_cast<wide>(1) << 100;
    wide num = 1, den = 1;
    auto reduce = [](wide& a, wide& b) {
        wide x = a < 0 ? -a : a, y = b;
        while (y) {
            wide t = x % y;
            x = y;
            y = t;
        }
        if (x > 1) {
            a /= x;
            b /= x;
        }
    };
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            num *= weights[i] - weights[j] + j - i;
            den *= j - i;
            reduce(num, den);
            if (num > limit)
                throw std::overflow_error("weyl_dimension: dimension exceeds 64-bit range");
        }
    wide result = num / den;  // den divides num: the product is a dimension
    if (result > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("weyl_dimension: dimension exceeds 64-bit range");
    return static_cast<std::int64_t>(result);
}

inline IrrepLabel make_label(Sector sector, const Partition& core, int d) {
    IrrepLabel label;
    label.sector = sector;
    label.core = core;
    const int tail = (sector == Sector::N) ? 1 : 0;  // room for the trailing -1
    if (core.rows() + tail > d) return label;        // does not fit: multiplicity 0
    label.fits = true;
    label.weights.assign(d, 0);
    for (int r = 0; r < core.rows(); ++r) label.weights[r] = core.parts()[r];
    if (sector == Sector::N) label.weights[d - 1] = -1;
    return label;
}

struct InventoryRow {
    IrrepLabel label;
    std::int64_t dim = 0;   // dimension of the algebra irrep
    std::int64_t mult = 0;  // multiplicity = Weyl dimension, 0 when absent
    std::int64_t product = 0;
};

// Full inventory for (n, d): N-sector rows over partitions of n-1, then
// M-sector rows over partitions of n-2.  In the regime d <= n-2 the M-sector
// dimension is the rank of the Gram matrix; labels that cannot be padded are
// retained with multiplicity 0.  The products always sum to d^n.
inline std::vector<InventoryRow> inventory(int n, int d) {
    if (n < 2 || d < 2) throw std::invalid_argument("inventory: need n >= 2 and d >= 2");
    Context ctx(n, d);
    std::vector<InventoryRow> rows;
    for (const Partition& alpha : partitions_of(n - 1)) {
        InventoryRow row;
        row.label = make_label(Sector::N, alpha, d);
        row.dim = hook_dimension(alpha);
        row.mult = row.label.fits ? weyl_dimension(row.label.weights) : 0;
        row.product = row.dim * row.mult;
        rows.push_back(std::move(row));
    }
    for (const Partition& alpha : partitions_of(n - 2)) {
        InventoryRow row;
        row.label = make_label(Sector::M, alpha, d);
        if (ctx.full_rank_regime())
            row.dim = static_cast<std::int64_t>(ctx.legs()) * hook_dimension(alpha);
        else
            row.dim = gram(alpha, ctx).rank;
        row.mult = row.label.fits ? weyl_dimension(row.label.weights) : 0;
        row.product = row.dim * row.mult;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::int64_t inventory_checksum(const std::vector<InventoryRow>& rows) {
    std::int64_t total = 0;
    for (const auto& r : rows) total += r.product;
    return total;
}

inline std::int64_t power_i64(int base, int exp) {
    std::int64_t p = 1;
    for (int i = 0; i < exp; ++i) p *= base;
    return p;
}

}  // namespace walled
