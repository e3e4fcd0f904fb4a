#include <catch2/catch_amalgamated.hpp>
#include <numeric>

#include "hitkit/numbers.hpp"

using namespace hitkit;

TEST_CASE("integer and rational basics") {
    CHECK(int_pow(Int(3), 4) == 81);
    Int root;
    CHECK(is_perfect_square(Int(144), &root));
    CHECK(root == 12);
    CHECK_FALSE(is_perfect_square(Int(145)));
    CHECK_FALSE(is_perfect_square(Int(-4)));

    Rat r;
    CHECK(rat_is_square(Rat(4, 9), &r));
    CHECK(r == Rat(2, 3));
    CHECK_FALSE(rat_is_square(Rat(-4, 9)));
    CHECK_FALSE(rat_is_square(Rat(2)));

    CHECK(balanced_mod(Int(48), Int(49)) == -1);
    CHECK(balanced_mod(Int(24), Int(49)) == 24);
    CHECK(balanced_mod(Int(25), Int(49)) == -24);
}

TEST_CASE("integer factorization and divisors") {
    auto f = factor_integer(Int(186624));  // 2^8 * 3^6
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::make_pair(Int(2), 8u));
    CHECK(f[1] == std::make_pair(Int(3), 6u));

    auto d = divisors(Int(12));
    CHECK(d == std::vector<Int>{1, 2, 3, 4, 6, 12});

    // a moderately large semiprime exercises the rho path
    Int n = Int(1000003) * Int(1000033);
    auto g = factor_integer(n);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 1000003);
    CHECK(g[1].first == 1000033);
}

TEST_CASE("rational reconstruction fixed points") {
    Int m = int_pow(Int(7), 4);
    auto z = rational_reconstruction(Int(0), m);
    REQUIRE(z.has_value());
    CHECK(*z == 0);

    auto neg1 = rational_reconstruction(m - 1, m);
    REQUIRE(neg1.has_value());
    CHECK(*neg1 == -1);
}

TEST_CASE("rational reconstruction round trip within the bound") {
    // encode a/b mod 7^4 then decode, for all |a|, b <= 30 with b invertible
    Int m = int_pow(Int(7), 4);
    for (int a = -30; a <= 30; ++a) {
        for (int b = 1; b <= 30; ++b) {
            if (b % 7 == 0) continue;
            if (std::gcd(std::abs(a), b) != 1) continue;
            Int binv = *mod_inverse(Int(b), m);
            Int residue = pos_mod(Int(a) * binv, m);
            auto rec = rational_reconstruction(residue, m);
            REQUIRE(rec.has_value());
            CHECK(*rec == Rat(a, b));
        }
    }
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rat(-2, 5)) == "-2/5");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_from_string("-9/10") == Rat(-9, 10));
    CHECK(rat_from_string("42") == 42);
    CHECK_THROWS_AS(rat_from_string("1/0"), parse_error);
    CHECK_THROWS_AS(rat_from_string("a/b"), parse_error);
}
