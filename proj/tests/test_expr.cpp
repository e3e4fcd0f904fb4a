#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hitkit/expr.hpp"

using namespace hitkit;

TEST_CASE("parser accepts the grammar") {
    CHECK(parse_bipoly("x^2 - t") == parse_bipoly("x*x") - parse_bipoly("t"));
    CHECK(parse_bipoly("3*x^4 - 4*x^3 + 1 + 3*t^2") ==
          parse_bipoly("3*t^2 + 3*x^4 - 4*x^3 + 1"));
    CHECK(parse_bipoly("1/2*x + 1/3") == parse_bipoly("(3*x + 2) * 1/6"));
    CHECK(parse_bipoly("-x^2") == BPoly() - parse_bipoly("x^2"));
    CHECK(parse_bipoly("- - x") == parse_bipoly("x"));
    CHECK(parse_bipoly("2^3") == parse_bipoly("8"));
    CHECK(parse_bipoly("(x + t)^2") == parse_bipoly("x^2 + 2*x*t + t^2"));
}

TEST_CASE("parser rejects bad input with byte offsets") {
    CHECK_THROWS_AS(parse_bipoly("x^2 + y"), parse_error);
    try {
        parse_bipoly("x^2 + y");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 6);
    }
    CHECK_THROWS_AS(parse_bipoly("2t"), parse_error);       // implicit multiplication
    CHECK_THROWS_AS(parse_bipoly("x^"), parse_error);       // missing exponent
    CHECK_THROWS_AS(parse_bipoly("(x + 1"), parse_error);   // unbalanced
    CHECK_THROWS_AS(parse_bipoly("x / 2"), parse_error);    // no division operator
    CHECK_THROWS_AS(parse_bipoly(""), parse_error);
    CHECK_THROWS_AS(parse_bipoly("1/0"), parse_error);
}

TEST_CASE("render canonically and round-trip") {
    CHECK(render(parse_bipoly("x^2 - t")) == "x^2 - t");
    CHECK(render(parse_bipoly("-t + x^2")) == "x^2 - t");
    CHECK(render(BPoly()) == "0");
    CHECK(render(parse_bipoly("-x - 1/2")) == "-x - 1/2");

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> cd(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    for (int it = 0; it < 200; ++it) {
        std::vector<UPolyQ> cs(4);
        for (auto& ct : cs) {
            std::vector<Rat> c(3);
            for (auto& x : c) x = make_rat(cd(rng), den(rng));
            ct = UPolyQ::from_coeffs(std::move(c));
        }
        BPoly p = BPoly::from_coeffs(std::move(cs));
        CHECK(parse_bipoly(render(p)) == p);
    }
}
