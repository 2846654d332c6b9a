// Integer partitions, standard Young tableaux and the hook-length dimension.
// Tableaux of a given shape are enumerated in a fixed "last-letter" order:
// the largest letter is placed in removable corners bottom-up, recursively.
// That order indexes the rows/columns of every representation matrix built
// downstream, so it must never change.

#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace walled {

class Partition {
public:
    Partition() = default;  // the empty partition of 0

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be non-increasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int row_length(int r) const { return r < rows() ? parts_[r] : 0; }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    int column_length(int c) const {
        int h = 0;
        while (h < rows() && parts_[h] > c) ++h;
        return h;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (int i = 0; i < rows(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ')';
        return os.str();
    }

    // Accepts "3,1", "(3,1)" or "3 1".
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::string cleaned;
        for (char ch : text)
            cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
        std::istringstream is(cleaned);
        int v;
        while (is >> v) parts.push_back(v);
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
    friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
    friend bool operator<(const Partition& x, const Partition& y) { return x.parts_ < y.parts_; }

private:
    std::vector<int> parts_;
};

// All partitions of k in reverse-lexicographic order: (k), (k-1,1), ..., (1^k).
inline std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("partitions_of: negative input");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

namespace detail {
inline std::int64_t factorial_i64(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
}  // namespace detail

inline std::int64_t hook_dimension(const Partition& shape) {
    const int w = shape.weight();
    if (w > 20) throw std::invalid_argument("hook_dimension: weight too large for exact arithmetic");
    std::int64_t hooks = 1;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.row_length(r); ++c)
            hooks *= (shape.row_length(r) - c) + (shape.column_length(c) - r) - 1;
    return detail::factorial_i64(w) / hooks;  // exact: the hook product divides w!
}

class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        const int w = shape_.weight();
        row_of_.assign(w + 1, -1);
        col_of_.assign(w + 1, -1);
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
            if (static_cast<int>(rows_[r].size()) != shape_.row_length(r))
                throw std::invalid_argument("StandardTableau: rows do not match shape");
            for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c) {
                int v = rows_[r][c];
                if (v < 1 || v > w || row_of_[v] != -1)
                    throw std::invalid_argument("StandardTableau: entries must be 1..weight, each once");
                if (c > 0 && rows_[r][c - 1] >= v)
                    throw std::invalid_argument("StandardTableau: rows must increase");
                if (r > 0 && rows_[r - 1][c] >= v)
                    throw std::invalid_argument("StandardTableau: columns must increase");
                row_of_[v] = r;
                col_of_[v] = c;
            }
        }
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int row_of(int value) const { return row_of_[value]; }
    int col_of(int value) const { return col_of_[value]; }
    int content(int value) const { return col_of_[value] - row_of_[value]; }

    friend bool operator==(const StandardTableau& x, const StandardTableau& y) {
        return x.rows_ == y.rows_;
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_, col_of_;
};

// Enumeration in last-letter order: recursively strip the largest letter,
// visiting removable corners from the bottom row upwards.  The count always
// equals hook_dimension(shape).
inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<std::vector<std::vector<int>>> fillings;
    std::vector<int> cur = shape.parts().empty() ? std::vector<int>{} : shape.parts();
    auto rec = [&](auto&& self, std::vector<int>& sh, int letter,
                   std::vector<std::pair<int, int>>& placed) -> void {
        if (letter == 0) {
            std::vector<std::vector<int>> rows(shape.rows());
            for (int r = 0; r < shape.rows(); ++r) rows[r].assign(shape.row_length(r), 0);
            // placed holds positions of letters weight..1 in that order
            int v = static_cast<int>(placed.size());
            for (const auto& [r, c] : placed) rows[r][c] = v--;
            fillings.push_back(std::move(rows));
            return;
        }
        for (int r = static_cast<int>(sh.size()) - 1; r >= 0; --r) {
            bool corner = sh[r] > 0 && (r + 1 == static_cast<int>(sh.size()) || sh[r] > sh[r + 1]);
            if (!corner) continue;
            placed.emplace_back(r, sh[r] - 1);
            --sh[r];
            self(self, sh, letter - 1, placed);
            ++sh[r];
            placed.pop_back();
        }
    };
    std::vector<std::pair<int, int>> placed;
    rec(rec, cur, shape.weight(), placed);

    std::vector<StandardTableau> out;
    out.reserve(fillings.size());
    for (auto& f : fillings) out.emplace_back(shape, std::move(f));
    return out;
}

}  // namespace walled
