#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "walled/embedding.hpp"

using namespace walled;

TEST_CASE("f_ab embeds S(n-2) into the transposed sector") {
    SECTION("n = 4, a = 1, b = 2 on the identity") {
        Context ctx(4, 2);
        Permutation image = f_ab(Permutation::identity(2), 0, 1, ctx);
        CHECK(image == Permutation::from_one_line({4, 3, 1, 2}));
        SabClass c = classify(image);
        CHECK(c.a == 0);
        CHECK(c.b == 1);
    }
    SECTION("n = 3, a = b = 2 on the identity gives the wall transposition") {
        Context ctx(3, 2);
        CHECK(f_ab(Permutation::identity(1), 1, 1, ctx) ==
              Permutation::parse_cycles("(2 3)", 3));
    }
    SECTION("a = b = n-1 appends the last transposition") {
        Context ctx(5, 3);
        for_each_permutation(3, [&](const Permutation& sigma) {
            Permutation expected =
                compose(sigma.extended(5), Permutation::transposition(5, 3, 4));
            CHECK(f_ab(sigma, 3, 3, ctx) == expected);
        });
    }
    SECTION("classification of the image recovers (a, b)") {
        for (int n : {3, 4, 5}) {
            Context ctx(n, 2);
            for (int a = 0; a < n - 1; ++a)
                for (int b = 0; b < n - 1; ++b)
                    for_each_permutation(n - 2, [&](const Permutation& sigma) {
                        SabClass c = classify(f_ab(sigma, a, b, ctx));
                        CHECK_FALSE(c.fixes_last);
                        CHECK(c.a == a);
                        CHECK(c.b == b);
                    });
        }
    }
    SECTION("images for fixed (a, b) are distinct and cover the sector") {
        for (int n : {4, 5}) {
            Context ctx(n, 2);
            std::set<Permutation> images;
            for (int a = 0; a < n - 1; ++a)
                for (int b = 0; b < n - 1; ++b)
                    for_each_permutation(n - 2, [&](const Permutation& sigma) {
                        CHECK(images.insert(f_ab(sigma, a, b, ctx)).second);
                    });
            CHECK(static_cast<std::int64_t>(images.size()) == factorial(n) - factorial(n - 1));
        }
    }
    SECTION("index validation") {
        Context ctx(4, 2);
        CHECK_THROWS_AS(f_ab(Permutation::identity(2), 3, 0, ctx), std::invalid_argument);
        CHECK_THROWS_AS(f_ab(Permutation::identity(3), 0, 0, ctx), std::invalid_argument);
    }
}

TEST_CASE("f_ab_inverse") {
    SECTION("round trips") {
        for (int n : {3, 4, 5}) {
            Context ctx(n, 2);
            for (int a = 0; a < n - 1; ++a)
                for (int b = 0; b < n - 1; ++b)
                    for_each_permutation(n - 2, [&](const Permutation& sigma) {
                        auto [ra, rb, rs] = f_ab_inverse(f_ab(sigma, a, b, ctx), ctx);
                        CHECK(ra == a);
                        CHECK(rb == b);
                        CHECK(rs == sigma);
                    });
        }
    }
    SECTION("worked examples") {
        Context ctx4(4, 2);
        auto [a, b, s] = f_ab_inverse(Permutation::from_one_line({4, 3, 1, 2}), ctx4);
        CHECK(a == 0);
        CHECK(b == 1);
        CHECK(s == Permutation::identity(2));

        Context ctx3(3, 2);
        auto [a2, b2, s2] = f_ab_inverse(Permutation::parse_cycles("(2 3)", 3), ctx3);
        CHECK(a2 == 1);
        CHECK(b2 == 1);
        CHECK(s2 == Permutation::identity(1));
    }
    SECTION("rejects permutations fixing the last point") {
        Context ctx(4, 2);
        CHECK_THROWS_AS(f_ab_inverse(Permutation::parse_cycles("(1 2)", 4), ctx),
                        std::invalid_argument);
    }
}

TEST_CASE("f_c compresses S(n-1) to S(n-2)") {
    Context ctx(4, 2);
    CHECK(f_c(Permutation::parse_cycles("(1 2 3)", 3), 0, ctx) == Permutation::identity(2));
    CHECK(f_c(Permutation::parse_cycles("(1 2)", 3), 2, ctx) ==
          Permutation::parse_cycles("(1 2)", 2));
    for (int c = 0; c < 3; ++c)
        CHECK(f_c(Permutation::identity(3), c, ctx) == Permutation::identity(2));

    // the restriction inside f_c asserts that the wall point is fixed
    for (int n : {4, 5}) {
        Context ctxn(n, 2);
        for_each_permutation(n - 1, [&](const Permutation& sigma) {
            for (int c = 0; c < n - 1; ++c) CHECK_NOTHROW(f_c(sigma, c, ctxn));
        });
    }
}

TEST_CASE("chi three-case table") {
    Context ctx(5, 3);
    SECTION("diagonal carries the dimension factor") {
        ChiResult r = chi(1, 1, ctx);
        CHECK(r.scale_power == 1);
        CHECK(r.perm == Permutation::identity(3));
    }
    SECTION("wall leg gives the identity") {
        ChiResult r = chi(0, 3, ctx);
        CHECK(r.scale_power == 0);
        CHECK(r.perm == Permutation::identity(3));
        ChiResult r2 = chi(3, 2, ctx);
        CHECK(r2.scale_power == 0);
        CHECK(r2.perm == Permutation::identity(3));
    }
    SECTION("generic off-diagonal is the transposition (a b)") {
        ChiResult r = chi(0, 2, ctx);
        CHECK(r.scale_power == 0);
        CHECK(r.perm == Permutation::parse_cycles("(1 3)", 3));
    }
    SECTION("general-pi evaluation agrees with the closed form") {
        for (int n : {3, 4, 5, 6}) {
            Context c(n, 2);
            std::vector<Permutation> pis;
            for (int k = 0; k < n - 1; ++k) pis.push_back(c.pi(k));
            for (int a = 0; a < n - 1; ++a)
                for (int b = 0; b < n - 1; ++b) {
                    ChiResult closed = chi(a, b, c);
                    ChiResult general = chi_general(a, b, pis, c);
                    CHECK(closed.scale_power == general.scale_power);
                    CHECK(closed.perm == general.perm);
                }
        }
    }
}
