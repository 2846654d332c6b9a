// Permutations of {0,...,n-1} with the composition convention fixed once for
// the whole library: compose(p, q) applies q first, then p.  All I/O (one-line
// arrays, cycle strings) is 1-based; everything internal is 0-based.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace walled {

class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        std::vector<char> seen(n, 0);
        for (int v : images_) {
            if (v < 0 || v >= n || seen[v]) {
                throw std::invalid_argument("Permutation: images are not a bijection of {0..n-1}");
            }
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    // Transposition (i j) as an element of S(n).  i == j yields the identity.
    static Permutation transposition(int n, int i, int j) {
        Permutation p = identity(n);
        check_point(n, i);
        check_point(n, j);
        std::swap(p.images_[i], p.images_[j]);
        return p;
    }

    // Cycle (c_0 c_1 ... c_k): each listed point maps to its right neighbour,
    // the last one back to the first.
    static Permutation cycle(int n, const std::vector<int>& points) {
        Permutation p = identity(n);
        std::vector<char> used(n, 0);
        for (std::size_t t = 0; t < points.size(); ++t) {
            check_point(n, points[t]);
            if (used[points[t]]) throw std::invalid_argument("Permutation::cycle: repeated point");
            used[points[t]] = 1;
            p.images_[points[t]] = points[(t + 1) % points.size()];
        }
        return p;
    }

    // One-line notation with 1-based values, e.g. {2,3,1} for the cycle (1 2 3).
    static Permutation from_one_line(const std::vector<int>& one_based) {
        std::vector<int> im(one_based.size());
        for (std::size_t i = 0; i < one_based.size(); ++i) im[i] = one_based[i] - 1;
        return Permutation(std::move(im));
    }

    // Cycle-notation parser, 1-based: "(1 2 3)(4 5)"; "e" or "()" is the identity.
    static Permutation parse_cycles(const std::string& text, int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    std::vector<int> one_line() const {
        std::vector<int> out(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
        return out;
    }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    bool fixes(int i) const { return images_[i] == i; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
        return Permutation(std::move(inv));
    }

    // Same mapping as an element of S(m), m >= degree; new points are fixed.
    Permutation extended(int m) const {
        if (m < degree()) throw std::invalid_argument("Permutation::extended: smaller degree");
        std::vector<int> im(m);
        std::iota(im.begin(), im.end(), 0);
        std::copy(images_.begin(), images_.end(), im.begin());
        return Permutation(std::move(im));
    }

    // Restriction to S(m); every point >= m must be fixed.
    Permutation restricted(int m) const {
        for (int i = m; i < degree(); ++i)
            if (images_[i] != i)
                throw std::invalid_argument("Permutation::restricted: tail is not fixed");
        return Permutation(std::vector<int>(images_.begin(), images_.begin() + m));
    }

    int sign() const {
        std::vector<char> seen(images_.size(), 0);
        int parity = 0;
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = images_[j]) {
                seen[j] = 1;
                ++len;
            }
            parity ^= (len - 1) & 1;
        }
        return parity ? -1 : 1;
    }

    // Nontrivial cycles, each starting at its smallest point, sorted by that point.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(images_.size(), 0);
        for (int i = 0; i < degree(); ++i) {
            if (seen[i] || images_[i] == i) continue;
            std::vector<int> cyc;
            for (int j = i; !seen[j]; j = images_[j]) {
                seen[j] = 1;
                cyc.push_back(j);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    int cycle_count() const {  // fixed points included
        std::vector<char> seen(images_.size(), 0);
        int count = 0;
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            ++count;
            for (int j = i; !seen[j]; j = images_[j]) seen[j] = 1;
        }
        return count;
    }

    std::string cycle_string() const {
        auto cs = cycles();
        if (cs.empty()) return "e";
        std::ostringstream os;
        for (const auto& c : cs) {
            os << '(';
            for (std::size_t t = 0; t < c.size(); ++t) {
                if (t) os << ' ';
                os << c[t] + 1;
            }
            os << ')';
        }
        return os.str();
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    static void check_point(int n, int i) {
        if (i < 0 || i >= n) throw std::invalid_argument("Permutation: point out of range");
    }

    std::vector<int> images_;
};

// Group product, rightmost factor applied first: compose(p, q)(x) = p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(p.degree());
    for (int x = 0; x < p.degree(); ++x) im[x] = p(q(x));
    return Permutation(std::move(im));
}

inline Permutation Permutation::parse_cycles(const std::string& text, int n) {
    Permutation result = identity(n);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip_ws();
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) return result;
    bool any = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(')
            throw std::invalid_argument("parse_cycles: expected '(' in \"" + text + "\"");
        ++pos;
        std::vector<int> points;
        while (true) {
            skip_ws();
            if (pos >= text.size())
                throw std::invalid_argument("parse_cycles: unterminated cycle in \"" + text + "\"");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t used = 0;
            int v = std::stoi(text.substr(pos), &used);
            pos += used;
            points.push_back(v - 1);
        }
        if (!points.empty()) result = compose(result, cycle(n, points));
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("parse_cycles: empty input");
    return result;
}

// Visits all of S(n) in lexicographic one-line order.
template <class F>
void for_each_permutation(int n, F&& fn) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    do {
        fn(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// The (a, b) label of sigma in S(n): sigma(a) = n-1 and sigma(n-1) = b
// (0-based; the last point plays the distinguished role).  Permutations fixing
// the last point carry the fixes_last marker instead.
struct SabClass {
    bool fixes_last = false;
    int a = -1;  // 0-based leg indices, valid iff !fixes_last
    int b = -1;

    friend bool operator==(const SabClass& x, const SabClass& y) {
        return x.fixes_last == y.fixes_last && (x.fixes_last || (x.a == y.a && x.b == y.b));
    }
};

inline SabClass classify(const Permutation& p) {
    const int last = p.degree() - 1;
    if (p(last) == last) return SabClass{true, -1, -1};
    SabClass c;
    c.fixes_last = false;
    c.a = p.inverse()(last);
    c.b = p(last);
    return c;
}

// Partition of S(n) into the (a, b) classes plus the subgroup fixing the last
// point.  Each class holds (n-2)! elements; classes are pairwise disjoint and
// together with the fixing set cover S(n).
struct SabDecomposition {
    std::map<std::pair<int, int>, std::vector<Permutation>> classes;
    std::vector<Permutation> fixes_last;
};

inline SabDecomposition enumerate_sab(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_sab: need n >= 2");
    SabDecomposition out;
    for (int a = 0; a + 1 < n; ++a)
        for (int b = 0; b + 1 < n; ++b) out.classes[{a, b}] = {};
    for_each_permutation(n, [&](const Permutation& p) {
        SabClass c = classify(p);
        if (c.fixes_last)
            out.fixes_last.push_back(p);
        else
            out.classes[{c.a, c.b}].push_back(p);
    });
    return out;
}

}  // namespace walled
