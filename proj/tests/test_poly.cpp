#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hitkit/expr.hpp"
#include "hitkit/ratfunc.hpp"
#include "hitkit/rational_roots.hpp"
#include "hitkit/resultant.hpp"

using namespace hitkit;

namespace {

BPoly P(const std::string& s) { return parse_bipoly(s); }
UPolyQ Pt(const std::string& s) { return parse_upoly_t(s); }

BPoly random_bpoly(std::mt19937& rng, int dx, int dt, int hmax) {
    std::uniform_int_distribution<int> coeff(-hmax, hmax);
    std::vector<UPolyQ> cs(dx + 1);
    for (int i = 0; i <= dx; ++i) {
        std::vector<Rat> c(dt + 1);
        for (int j = 0; j <= dt; ++j) c[j] = Rat(coeff(rng));
        cs[i] = UPolyQ::from_coeffs(std::move(c));
    }
    return BPoly::from_coeffs(std::move(cs));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    BPoly p = P("x^2 - t");
    CHECK(deg_x(p) == 2);
    CHECK(deg_t(p) == 1);
    CHECK(p.coeff(0) == Pt("-t"));
    CHECK(p.coeff(2) == Pt("1"));

    CHECK(P("(x+t)^2") == P("x^2 + 2*t*x + t^2"));
    CHECK(P("(x-t)*(x+t)") == P("x^2 - t^2"));
}

TEST_CASE("discriminant fixtures") {
    CHECK(discriminant_x(P("x^2 - t")) == Pt("4*t"));
    // the quartic family member and its degree-4 subfield polynomial
    CHECK(discriminant_x(P("3*x^4 - 4*x^3 + 1 + 3*t^2")) ==
          Pt("2^8*3^4*t^2*(3*t^2+1)^2"));
    CHECK(discriminant_x(P("x^4 + 4*x^3 + 81*t^2 + 27")) ==
          Pt("2^8*3^10*t^2*(3*t^2+1)^2"));
    CHECK_THROWS_AS(discriminant_x(P("t^3 - 1")), domain_error);
    // linear in x
    CHECK(discriminant_x(P("t*x + 1")) == Pt("1"));
}

TEST_CASE("interpolation consistency of the bivariate discriminant") {
    std::mt19937 rng(20260810);
    int done = 0;
    while (done < 12) {
        BPoly p = random_bpoly(rng, 3, 2, 5);
        if (deg_x(p) < 1) continue;
        UPolyQ d;
        try {
            d = discriminant_x(p);
        } catch (const domain_error&) {
            continue;
        }
        int samples = 2 * std::max(0, d.degree()) + 1;
        int checked = 0;
        long c = 0;
        while (checked < samples) {
            Rat tv(c);
            c = c > 0 ? -c : -c + 1;
            if (eval_at(lc_x(p), tv) == 0) continue;
            UPolyQ spec = specialize(p, tv);
            CHECK(discriminant(spec) == eval_at(d, tv));
            ++checked;
        }
        ++done;
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> cd(-6, 6);
    for (int it = 0; it < 100; ++it) {
        BPoly a = random_bpoly(rng, 3, 2, 4);
        BPoly b = random_bpoly(rng, 2, 2, 4);
        Rat c(cd(rng));
        CHECK(specialize(a * b, c) == specialize(a, c) * specialize(b, c));
        CHECK(specialize(a + b, c) == specialize(a, c) + specialize(b, c));
    }
}

TEST_CASE("specialize fixtures") {
    CHECK(specialize(P("3*x^4 - 4*x^3 + 1 + 3*t^2"), Rat(0)) ==
          specialize(P("3*x^4 - 4*x^3 + 1"), Rat(7)));
    CHECK(specialize(P("x^6 + t^6 - 1"), Rat(1)) == specialize(P("x^6"), Rat(0)));
    CHECK(specialize(P("x^2 - t"), Rat(4)) == specialize(P("x^2 - 4"), Rat(0)));
}

TEST_CASE("rational roots") {
    CHECK(rational_roots(Pt("t^6 - 1")) == std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(rational_roots(Pt("t^2 - 2")).empty());
    CHECK(rational_roots(Pt("t^2*(3*t^2+1)^2")) == std::vector<Rat>{Rat(0)});
    CHECK(rational_roots(Pt("(2*t-3)*(3*t+5)*(t^2+1)")) ==
          std::vector<Rat>{Rat(-5, 3), Rat(3, 2)});
    CHECK_THROWS_AS(rational_roots(UPolyQ()), domain_error);
}

TEST_CASE("rational roots agree with an exhaustive divisor search") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> cd(-8, 8);
    for (int it = 0; it < 40; ++it) {
        std::vector<Rat> c(5);
        for (auto& x : c) x = Rat(cd(rng));
        UPolyQ f = UPolyQ::from_coeffs(std::move(c));
        if (f.is_zero()) continue;
        auto roots = rational_roots(f);
        for (const Rat& r : roots) CHECK(eval_at(f, r) == 0);
        // no rational root outside the returned set: scan small fractions
        for (int num = -24; num <= 24; ++num)
            for (int den = 1; den <= 12; ++den) {
                Rat cand(num, den);
                cand.canonicalize();
                if (eval_at(f, cand) == 0)
                    CHECK(std::find(roots.begin(), roots.end(), cand) != roots.end());
            }
    }
}

TEST_CASE("gcd and squarefree structure in Q[t][x]") {
    CHECK(gcd_x(P("x^2 - t^2"), P("x - t")) == P("x - t"));
    CHECK(squarefree_x(P("x^2 - t")));
    CHECK_FALSE(squarefree_x(P("(x - t)^2")));
    auto parts = yun_x(P("(x - t)^2 * (x + 1)"));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::make_pair(P("x + 1"), 1u));
    CHECK(parts[1] == std::make_pair(P("x - t"), 2u));
}

TEST_CASE("is_square_ratfunc") {
    auto w1 = is_square_ratfunc(RatFunc(Pt("t^2 + 2*t + 1")));
    REQUIRE(w1.has_value());
    CHECK(w1->num == Pt("t + 1"));
    CHECK(w1->den == Pt("1"));

    CHECK_FALSE(is_square_ratfunc(RatFunc(Pt("t"))).has_value());

    auto w2 = is_square_ratfunc(RatFunc(Pt("4*t^2"), Pt("9")));
    REQUIRE(w2.has_value());
    CHECK((w2->num * w2->num) == Pt("4*t^2").scaled(Rat(1, 9)) * w2->den * w2->den);

    CHECK_THROWS_AS(is_square_ratfunc(RatFunc(UPolyQ())), domain_error);

    // witness property on products of squares
    auto w3 = is_square_ratfunc(RatFunc(Pt("(t^2+1)^2*(t-3)^4"), Pt("(t+5)^2")));
    REQUIRE(w3.has_value());
    RatFunc sq = *w3 * *w3;
    CHECK(sq == RatFunc(Pt("(t^2+1)^2*(t-3)^4"), Pt("(t+5)^2")));
}

TEST_CASE("monicize") {
    BPoly f = P("3*x^4 - 4*x^3 + 1 + 3*t^2");
    BPoly m = monicize_x(f);
    CHECK(is_monic_x(m));
    CHECK(m == P("x^4 - 4*x^3 + 27 + 81*t^2"));
}
