#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hitkit/expr.hpp"
#include "hitkit/factor.hpp"

using namespace hitkit;

namespace {
BPoly P(const std::string& s) { return parse_bipoly(s); }
UPolyQ Pt(const std::string& s) { return parse_upoly_t(s); }

UPolyQ reassemble(const FactorsQ& f) {
    UPolyQ prod(f.unit);
    for (auto& [g, e] : f.factors) prod = prod * g.pow(e);
    return prod;
}

BPoly reassemble(const FactorsB& f) {
    BPoly prod = bpoly_of_t(UPolyQ(f.unit));
    for (auto& [g, e] : f.factors) prod = prod * g.pow(e);
    return prod;
}
}  // namespace

TEST_CASE("univariate factorization over Q") {
    // the quartic family member at t=0
    auto f = factor_univariate_q(Pt("3*t^4 - 4*t^3 + 1"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::make_pair(Pt("t - 1"), 2u));
    CHECK(f.factors[1] == std::make_pair(Pt("3*t^2 + 2*t + 1"), 1u));
    CHECK(reassemble(f) == Pt("3*t^4 - 4*t^3 + 1"));

    auto g = factor_univariate_q(Pt("t^6 + 63"));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first.degree() == 6);

    auto h = factor_univariate_q(Pt("t^2 - 1"));
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].first == Pt("t - 1"));
    CHECK(h.factors[1].first == Pt("t + 1"));

    CHECK_THROWS_AS(factor_univariate_q(UPolyQ()), domain_error);
}

TEST_CASE("x^6 + 63 irreducibility is forced by modular patterns") {
    // cross-check by an independent route: collect factorization patterns
    // mod several primes; the only degree multiset compatible with all of
    // them must be {6}
    UPolyQ f = Pt("t^6 + 63");
    std::vector<std::vector<int>> patterns;
    for (uint32_t p : {5, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        ModPoly fp = mp_from_upoly(f, p);
        if (mp_deg(fp) != 6) continue;
        if (mp_deg(mp_gcd(fp, mp_derivative(fp, p), p)) != 0) continue;
        std::vector<int> pat;
        for (auto& [g, e] : factor_mod_p(fp, p).factors)
            for (unsigned i = 0; i < e; ++i) pat.push_back(mp_deg(g));
        std::sort(pat.begin(), pat.end());
        patterns.push_back(pat);
    }
    REQUIRE(patterns.size() >= 3);
    // enumerate partitions of 6 and keep those compatible with every pattern:
    // a pattern is compatible with multiset M if it can be split into groups
    // summing to the parts of M
    auto compatible = [](const std::vector<int>& part, const std::vector<int>& pattern) {
        // brute force: assign each pattern element to a part, track remaining sums
        std::vector<int> rem = part;
        std::function<bool(size_t)> go = [&](size_t i) -> bool {
            if (i == pattern.size()) {
                for (int r : rem)
                    if (r != 0) return false;
                return true;
            }
            for (auto& r : rem) {
                if (r >= pattern[i]) {
                    r -= pattern[i];
                    if (go(i + 1)) {
                        r += pattern[i];
                        return true;
                    }
                    r += pattern[i];
                }
            }
            return false;
        };
        return go(0);
    };
    std::vector<std::vector<int>> partitions = {{6},       {1, 5},    {2, 4},    {3, 3},
                                                {1, 1, 4}, {1, 2, 3}, {2, 2, 2}, {1, 1, 1, 3},
                                                {1, 1, 2, 2}, {1, 1, 1, 1, 2}, {1, 1, 1, 1, 1, 1}};
    std::vector<std::vector<int>> survivors;
    for (auto& part : partitions) {
        bool ok = true;
        for (auto& pat : patterns)
            if (!compatible(part, pat)) ok = false;
        if (ok) survivors.push_back(part);
    }
    REQUIRE(survivors == std::vector<std::vector<int>>{{6}});
}

TEST_CASE("bivariate factorization") {
    auto f = factor_bivariate_q(P("x^2 - t^2"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == P("x - t"));
    CHECK(f.factors[1].first == P("x + t"));

    auto g = factor_bivariate_q(P("x^6 + t^6 - 1"));
    REQUIRE(g.factors.size() == 1);
    CHECK(deg_x(g.factors[0].first) == 6);

    // content and multiplicities
    auto h = factor_bivariate_q(P("t^2 * (x - t)^2 * (3*x + 1)"));
    CHECK(reassemble(h) == P("t^2 * (x - t)^2 * (3*x + 1)"));
    bool saw_content = false, saw_square = false;
    for (auto& [fac, e] : h.factors) {
        if (deg_x(fac) == 0 && e == 2) saw_content = true;
        if (fac == P("x - t") && e == 2) saw_square = true;
    }
    CHECK(saw_content);
    CHECK(saw_square);
}

TEST_CASE("the reducible sextic family splits into the two displayed cubics") {
    // substitute the curve parametrization c = (v^4+16)/(8v) into the sextic
    // and clear denominators: 64 v^2 P(c, x) must factor into two cubics
    BPoly lhs = P("64*t^2*x^6 - 256*t^2*x^2 - (t^4 + 16)^2");
    BPoly c1 = P("8*t*x^3 - 8*t^2*x^2 + 4*t^3*x - t^4 - 16");
    BPoly c2 = P("8*t*x^3 + 8*t^2*x^2 + 4*t^3*x + t^4 + 16");
    CHECK(lhs == c1 * c2);

    auto f = factor_bivariate_q(lhs);
    std::vector<BPoly> cubics;
    for (auto& [fac, e] : f.factors)
        if (deg_x(fac) == 3) cubics.push_back(fac);
    REQUIRE(cubics.size() == 2);
    CHECK(((cubics[0] == c1 && cubics[1] == c2) || (cubics[0] == c2 && cubics[1] == c1)));
}

TEST_CASE("factorization types") {
    CHECK(factorization_type(P("x^6 - 4*x^2 - t^2")) == FactType{6});
    CHECK(factorization_type(P("x^2 - t^2")) == FactType{1, 1});
    // specialization of the sextic at c = 17/8 (v = 1)
    UPolyQ spec = specialize(P("x^6 - 4*x^2 - t^2"), Rat(17, 8));
    CHECK(factorization_type(spec) == FactType{3, 3});
    CHECK_THROWS_AS(factorization_type(P("(x - t)^2")), domain_error);
}

TEST_CASE("product reassembly on random bivariate inputs") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> cd(-4, 4);
    int done = 0;
    while (done < 15) {
        std::vector<UPolyQ> cs(4);
        for (auto& ct : cs) {
            std::vector<Rat> c(3);
            for (auto& x : c) x = Rat(cd(rng));
            ct = UPolyQ::from_coeffs(std::move(c));
        }
        BPoly p = BPoly::from_coeffs(std::move(cs));
        if (p.is_zero()) continue;
        auto f = factor_bivariate_q(p);
        CHECK(reassemble(f) == p);
        ++done;
    }
}

TEST_CASE("specialization degrees refine the bivariate factorization type") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> cd(-3, 3);
    std::uniform_int_distribution<int> cpick(-20, 20);
    int done = 0;
    while (done < 6) {
        std::vector<UPolyQ> cs(4);
        for (auto& ct : cs) {
            std::vector<Rat> c(2);
            for (auto& x : c) x = Rat(cd(rng));
            ct = UPolyQ::from_coeffs(std::move(c));
        }
        BPoly p = BPoly::from_coeffs(std::move(cs));
        if (p.is_zero() || deg_x(p) < 2 || !squarefree_x(p)) continue;
        FactType ft = factorization_type(p);
        UPolyQ disc = discriminant_x(p);
        int samples = 0;
        while (samples < 8) {
            Rat c(cpick(rng));
            if (eval_at(lc_x(p), c) == 0 || eval_at(disc, c) == 0) continue;
            ++samples;
            FactType spec_ft = factorization_type(specialize(p, c));
            // each bivariate factor's specialization splits further or not:
            // spec_ft must partition-refine ft
            std::function<bool(std::vector<int>, std::vector<int>)> refines =
                [&](std::vector<int> big, std::vector<int> small) -> bool {
                if (big.empty()) return small.empty();
                int target = big.back();
                big.pop_back();
                // choose a subset of `small` summing to target (greedy backtrack)
                std::function<bool(std::vector<int>&, int, size_t)> pick =
                    [&](std::vector<int>& rem, int need, size_t from) -> bool {
                    if (need == 0) return refines(big, rem);
                    for (size_t i = from; i < rem.size(); ++i) {
                        int v = rem[i];
                        if (v > need) continue;
                        std::vector<int> nxt = rem;
                        nxt.erase(nxt.begin() + i);
                        if (pick(nxt, need - v, i)) return true;
                    }
                    return false;
                };
                std::vector<int> s = small;
                return pick(s, target, 0);
            };
            CHECK(refines(ft, spec_ft));
        }
        ++done;
    }
}
