// Embeddings between S(n-2), S(n-1) and S(n) that organize the algebra of
// permutation operators partially transposed on the last tensor factor.
// The distinguished legs are 0-based: the last point is n-1, the wall sits
// between legs {0..n-2} and the transposed factor.  The fixed choice of
// auxiliary permutations is pi_k = (k, n-2) in S(n-1), so pi_{n-2} = e.

#pragma once

#include <stdexcept>
#include <tuple>
#include <vector>

#include "walled/perm.hpp"

namespace walled {

struct Context {
    int n;  // tensor factors
    int d;  // local dimension

    Context(int n_, int d_) : n(n_), d(d_) {
        if (n < 2 || d < 2) throw std::invalid_argument("Context: need n >= 2 and d >= 2");
    }

    int legs() const { return n - 1; }

    // pi_k in S(n-1), k = 0..n-2; satisfies pi_k(n-2) = k.
    Permutation pi(int k) const {
        check_leg(k);
        return Permutation::transposition(n - 1, k, n - 2);
    }

    void check_leg(int k) const {
        if (k < 0 || k >= n - 1) throw std::invalid_argument("Context: leg index out of range");
    }

    bool full_rank_regime() const { return d > n - 2; }
};

// f_ab: S(n-2) -> S(n), sigma |-> pi_b o sigma o (n-1, n-2) o pi_a^{-1}.
// The image sends a to the last point and the last point to b; for fixed
// (a, b) the map is injective onto the class S_ab.
inline Permutation f_ab(const Permutation& sigma, int a, int b, const Context& ctx) {
    ctx.check_leg(a);
    ctx.check_leg(b);
    if (sigma.degree() != ctx.n - 2) throw std::invalid_argument("f_ab: sigma must have degree n-2");
    const int n = ctx.n;
    Permutation lifted = sigma.extended(n);
    Permutation swap_last = Permutation::transposition(n, n - 1, n - 2);
    Permutation pa = ctx.pi(a).extended(n);
    Permutation pb = ctx.pi(b).extended(n);
    return compose(pb, compose(lifted, compose(swap_last, pa.inverse())));
}

// Inverse of f_ab on its image: recovers (a, b) from the classification and
// sigma = pi_b^{-1} o sigma_ab o pi_a o (n-1, n-2), which fixes the last two
// points and restricts to S(n-2).
inline std::tuple<int, int, Permutation> f_ab_inverse(const Permutation& sigma_ab,
                                                      const Context& ctx) {
    if (sigma_ab.degree() != ctx.n) throw std::invalid_argument("f_ab_inverse: degree must be n");
    SabClass c = classify(sigma_ab);
    if (c.fixes_last)
        throw std::invalid_argument("f_ab_inverse: input fixes the last point");
    const int n = ctx.n;
    Permutation pa = ctx.pi(c.a).extended(n);
    Permutation pb = ctx.pi(c.b).extended(n);
    Permutation swap_last = Permutation::transposition(n, n - 1, n - 2);
    Permutation sigma = compose(pb.inverse(), compose(sigma_ab, compose(pa, swap_last)));
    return {c.a, c.b, sigma.restricted(n - 2)};
}

// f_c: S(n-1) -> S(n-2), sigma |-> pi_{sigma(c)}^{-1} o sigma o pi_c.
inline Permutation f_c(const Permutation& sigma, int c, const Context& ctx) {
    ctx.check_leg(c);
    if (sigma.degree() != ctx.n - 1) throw std::invalid_argument("f_c: sigma must have degree n-1");
    Permutation res = compose(ctx.pi(sigma(c)).inverse(), compose(sigma, ctx.pi(c)));
    return res.restricted(ctx.n - 2);
}

// The permutation chi_ab in S(n-2) together with the power of d produced when
// tracing out the last two factors: d^1 on the diagonal a = b, identity when
// a or b is the wall leg n-2, and the transposition (a b) otherwise.
struct ChiResult {
    int scale_power;  // 0 or 1
    Permutation perm;
};

inline ChiResult chi(int a, int b, const Context& ctx) {
    ctx.check_leg(a);
    ctx.check_leg(b);
    const int k = ctx.n - 2;
    if (a == b) return {1, Permutation::identity(k)};
    if (a == k || b == k) return {0, Permutation::identity(k)};
    return {0, Permutation::transposition(k, a, b)};
}

// General-pi evaluation of chi_ab = (n-1, n-2) o pi_a^{-1} o pi_b o
// (n-2, n-1, pi_b^{-1}(a)); used only to cross-check the closed form above.
inline ChiResult chi_general(int a, int b, const std::vector<Permutation>& pis,
                             const Context& ctx) {
    ctx.check_leg(a);
    ctx.check_leg(b);
    const int n = ctx.n;
    if (a == b) return {1, Permutation::identity(n - 2)};
    Permutation pa = pis[a].extended(n);
    Permutation pb = pis[b].extended(n);
    int x = pis[b].inverse()(a);
    Permutation tri = Permutation::cycle(n, {n - 2, n - 1, x});
    Permutation res = compose(Permutation::transposition(n, n - 1, n - 2),
                              compose(pa.inverse(), compose(pb, tri)));
    return {0, res.restricted(n - 2)};
}

}  // namespace walled
