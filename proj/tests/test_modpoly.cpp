#include <catch2/catch_amalgamated.hpp>

#include "hitkit/expr.hpp"
#include "hitkit/fq.hpp"

using namespace hitkit;

namespace {
UPolyQ Pt(const std::string& s) {
    BPoly p = parse_bipoly(s);
    std::vector<Rat> c(p.degree() + 1 > 0 ? p.degree() + 1 : 0);
    for (int i = 0; i <= p.degree(); ++i) c[i] = p.coeff(i).coeff(0);
    return UPolyQ::from_coeffs(std::move(c));
}
}  // namespace

TEST_CASE("factor_mod_p fixtures") {
    // x^2 - 1 mod 5 = (x-1)(x+1)
    auto f1 = factor_mod_p(Pt("x^2 - 1"), 5);
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].first == mp_make({4, 1}));  // x - 1
    CHECK(f1.factors[1].first == mp_make({1, 1}));  // x + 1

    // x^2 + 1 mod 3 irreducible
    auto f2 = factor_mod_p(Pt("x^2 + 1"), 3);
    REQUIRE(f2.factors.size() == 1);
    CHECK(mp_deg(f2.factors[0].first) == 2);

    // x^3 + 6x^2 + 2x + 3 mod 7: no root mod 7 (exhaustive scan) implies irreducible
    ModPoly g = mp_from_upoly(Pt("x^3 + 6*x^2 + 2*x + 3"), 7);
    for (uint64_t r = 0; r < 7; ++r) CHECK(mp_eval(g, r, 7) != 0);
    auto f3 = factor_mod_p(g, 7);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].second == 1);
    CHECK(mp_deg(f3.factors[0].first) == 3);

    CHECK_THROWS_AS(factor_mod_p(g, 6), domain_error);
}

TEST_CASE("factor_mod_p degrees sum and verified irreducibility") {
    // degrees sum to deg f (with multiplicity) and each factor passes the
    // Frobenius-based irreducibility check
    std::vector<std::pair<std::string, uint64_t>> cases = {
        {"x^6 - 1", 7},          {"x^6 - 1", 5},       {"x^8 + x + 1", 3},
        {"(x^2+1)^2 * (x-1)", 5}, {"x^12 - 1", 13},    {"x^5 + x + 1", 11},
    };
    for (auto& [s, p] : cases) {
        ModPoly f = mp_from_upoly(Pt(s), p);
        auto fac = factor_mod_p(f, p);
        int degsum = 0;
        ModPoly prod = mp_const(fac.unit, p);
        for (auto& [g, e] : fac.factors) {
            degsum += mp_deg(g) * e;
            CHECK(mp_is_irreducible(g, p));
            for (unsigned i = 0; i < e; ++i) prod = mp_mul(prod, g, p);
        }
        CHECK(degsum == mp_deg(f));
        CHECK(prod == f);
    }
}

TEST_CASE("finite field arithmetic and root extraction") {
    FqCtx k = make_fq(7, 2);
    CHECK(mp_is_irreducible(k.modulus, 7));
    // x^2 - 3 splits over F_49 but not over F_7 (3 is a non-residue mod 7)
    ModPoly f = mp_from_upoly(Pt("x^2 - 3"), 7);
    auto roots = roots_in_fq(f, k);
    REQUIRE(roots.size() == 2);
    for (auto& r : roots) {
        FqElem sq = fq_mul(r, r, k);
        CHECK(sq == fq_const(3, k));
    }
    // inverse
    FqElem a = roots[0];
    CHECK(fq_mul(a, fq_inv(a, k), k) == fq_const(1, k));
}

TEST_CASE("roots in larger extension") {
    // x^3 + 6x^2 + 2x + 3 is irreducible mod 7: its roots live in F_343
    FqCtx k = make_fq(7, 3);
    ModPoly f = mp_from_upoly(Pt("x^3 + 6*x^2 + 2*x + 3"), 7);
    auto roots = roots_in_fq(f, k);
    REQUIRE(roots.size() == 3);
    // Vieta: sum of roots = -6 = 1 mod 7
    FqElem sum;
    for (auto& r : roots) sum = fq_add(sum, r, k);
    CHECK(sum == fq_const(1, k));
}
