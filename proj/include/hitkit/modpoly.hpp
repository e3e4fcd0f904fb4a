#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace hitkit {

// Dense univariate polynomial over F_p for an odd machine-word prime p.
// Coefficients lie in [0, p); the top coefficient is nonzero.
struct ModPoly {
    std::vector<uint64_t> c;
    bool operator==(const ModPoly&) const = default;
};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

inline void mp_trim(ModPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

inline int mp_deg(const ModPoly& f) { return static_cast<int>(f.c.size()) - 1; }
inline bool mp_is_zero(const ModPoly& f) { return f.c.empty(); }

inline ModPoly mp_make(std::vector<uint64_t> c) {
    ModPoly f{std::move(c)};
    mp_trim(f);
    return f;
}

inline ModPoly mp_const(uint64_t a, uint64_t p) { return mp_make({a % p}); }
inline ModPoly mp_x() { return ModPoly{{0, 1}}; }

inline ModPoly mp_add(const ModPoly& a, const ModPoly& b, uint64_t p) {
    std::vector<uint64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint64_t v = 0;
        if (i < a.c.size()) v += a.c[i];
        if (i < b.c.size()) v += b.c[i];
        c[i] = v % p;
    }
    return mp_make(std::move(c));
}

inline ModPoly mp_sub(const ModPoly& a, const ModPoly& b, uint64_t p) {
    std::vector<uint64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint64_t v = p;
        if (i < a.c.size()) v += a.c[i];
        if (i < b.c.size()) v -= b.c[i];
        c[i] = v % p;
    }
    return mp_make(std::move(c));
}

inline ModPoly mp_scale(const ModPoly& a, uint64_t s, uint64_t p) {
    s %= p;
    if (s == 0) return ModPoly{};
    std::vector<uint64_t> c(a.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mulmod(a.c[i], s, p);
    return mp_make(std::move(c));
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, uint64_t p) {
    if (mp_is_zero(a) || mp_is_zero(b)) return ModPoly{};
    std::vector<uint64_t> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = (c[i + j] + static_cast<__uint128_t>(a.c[i]) * b.c[j]) % p;
    }
    return mp_make(std::move(c));
}

inline std::pair<ModPoly, ModPoly> mp_divrem(const ModPoly& a, const ModPoly& b, uint64_t p) {
    if (mp_is_zero(b)) throw domain_error("mp_divrem: division by zero");
    int db = mp_deg(b);
    std::vector<uint64_t> rem(a.c);
    int dq = mp_deg(a) - db;
    if (dq < 0) return {ModPoly{}, a};
    std::vector<uint64_t> quo(dq + 1, 0);
    uint64_t linv = invmod_u64(b.c.back(), p);
    for (int i = mp_deg(a); i >= db; --i) {
        uint64_t coef = mulmod(rem[i], linv, p);
        if (coef == 0) continue;
        quo[i - db] = coef;
        for (int j = 0; j <= db; ++j) {
            uint64_t sub = mulmod(coef, b.c[j], p);
            rem[i - db + j] = (rem[i - db + j] + p - sub) % p;
        }
    }
    return {mp_make(std::move(quo)), mp_make(std::move(rem))};
}

inline ModPoly mp_mod(const ModPoly& a, const ModPoly& b, uint64_t p) {
    return mp_divrem(a, b, p).second;
}

inline ModPoly mp_monic(const ModPoly& f, uint64_t p) {
    if (mp_is_zero(f)) return f;
    return mp_scale(f, invmod_u64(f.c.back(), p), p);
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t p) {
    while (!mp_is_zero(b)) {
        ModPoly r = mp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

// Monic g = gcd(a,b) together with u, v satisfying u*a + v*b = g.
inline std::tuple<ModPoly, ModPoly, ModPoly> mp_ext_gcd(ModPoly a, ModPoly b, uint64_t p) {
    ModPoly u0 = mp_const(1, p), v0{};
    ModPoly u1{}, v1 = mp_const(1, p);
    while (!mp_is_zero(b)) {
        auto [q, r] = mp_divrem(a, b, p);
        ModPoly u2 = mp_sub(u0, mp_mul(q, u1, p), p);
        ModPoly v2 = mp_sub(v0, mp_mul(q, v1, p), p);
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (mp_is_zero(a)) return {a, u0, v0};
    uint64_t linv = invmod_u64(a.c.back(), p);
    return {mp_scale(a, linv, p), mp_scale(u0, linv, p), mp_scale(v0, linv, p)};
}

inline ModPoly mp_powmod(ModPoly base, const Int& e, const ModPoly& f, uint64_t p) {
    ModPoly acc = mp_const(1, p);
    base = mp_mod(base, f, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = mp_mod(mp_mul(acc, acc, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = mp_mod(mp_mul(acc, base, p), f, p);
    }
    return acc;
}

inline ModPoly mp_derivative(const ModPoly& f, uint64_t p) {
    if (mp_deg(f) < 1) return ModPoly{};
    std::vector<uint64_t> c(mp_deg(f));
    for (int i = 1; i <= mp_deg(f); ++i) c[i - 1] = mulmod(f.c[i], i % p, p);
    return mp_make(std::move(c));
}

inline uint64_t mp_eval(const ModPoly& f, uint64_t x, uint64_t p) {
    uint64_t acc = 0;
    for (int i = mp_deg(f); i >= 0; --i) acc = (mulmod(acc, x, p) + f.c[i]) % p;
    return acc;
}

// Reduction of an integer-coefficient polynomial.
inline ModPoly mp_from_int_coeffs(const std::vector<Int>& c, uint64_t p) {
    std::vector<uint64_t> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = mpz_fdiv_ui(c[i].get_mpz_t(), p);
    return mp_make(std::move(out));
}

// Reduction of f in Q[t]; throws if p divides a denominator.
inline ModPoly mp_from_upoly(const UPolyQ& f, uint64_t p) {
    std::vector<uint64_t> out(f.degree() + 1 > 0 ? f.degree() + 1 : 0);
    for (int i = 0; i <= f.degree(); ++i) {
        const Rat& q = f.coeff(i);
        uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
        if (den == 0) throw domain_error("mp_from_upoly: p divides a denominator");
        uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
        out[i] = mulmod(num, invmod_u64(den, p), p);
    }
    return mp_make(std::move(out));
}

namespace detail {

// Deterministic coefficient stream for equal-degree splitting and finite
// field root extraction.
struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
    }
};

inline constexpr uint64_t kFactorSeed = 24601;

}  // namespace detail

inline int mp_cmp(const ModPoly& a, const ModPoly& b) {
    if (mp_deg(a) != mp_deg(b)) return mp_deg(a) < mp_deg(b) ? -1 : 1;
    for (int i = mp_deg(a); i >= 0; --i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    return 0;
}

struct FactorsModP {
    uint64_t p = 0;
    uint64_t unit = 1;
    std::vector<std::pair<ModPoly, unsigned>> factors;  // monic irreducible
};

namespace detail {

// Squarefree decomposition of a monic polynomial over F_p.
inline void mp_squarefree_into(const ModPoly& f, uint64_t p, unsigned mult,
                               std::vector<std::pair<ModPoly, unsigned>>& out) {
    if (mp_deg(f) == 0) return;
    ModPoly fp = mp_derivative(f, p);
    if (mp_is_zero(fp)) {
        // f = g(x^p); p-th root is coefficient reindexing over F_p
        std::vector<uint64_t> g((mp_deg(f) / p) + 1);
        for (size_t i = 0; i < g.size(); ++i) g[i] = f.c[i * p];
        mp_squarefree_into(mp_make(std::move(g)), p, mult * static_cast<unsigned>(p), out);
        return;
    }
    ModPoly c = mp_gcd(f, fp, p);
    ModPoly w = mp_divrem(f, c, p).first;
    unsigned i = 1;
    while (mp_deg(w) > 0) {
        ModPoly y = mp_gcd(w, c, p);
        ModPoly z = mp_divrem(w, y, p).first;
        if (mp_deg(z) > 0) out.emplace_back(z, mult * i);
        ++i;
        w = std::move(y);
        c = mp_divrem(c, w, p).first;
    }
    if (mp_deg(c) > 0) mp_squarefree_into(c, p, mult, out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
inline std::vector<std::pair<ModPoly, int>> mp_ddf(ModPoly f, uint64_t p) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly h = mp_mod(mp_x(), f, p);
    int d = 0;
    while (mp_deg(f) > 0 && mp_deg(f) > 2 * d) {
        ++d;
        h = mp_powmod(h, Int(static_cast<unsigned long>(p)), f, p);
        ModPoly g = mp_gcd(mp_sub(h, mp_mod(mp_x(), f, p), p), f, p);
        if (mp_deg(g) > 0) {
            out.emplace_back(g, d);
            f = mp_divrem(f, g, p).first;
            h = mp_mod(h, f, p);
        }
    }
    if (mp_deg(f) > 0) out.emplace_back(f, mp_deg(f));
    return out;
}

// Cantor-Zassenhaus equal-degree splitting with a deterministic test
// polynomial stream.
inline void mp_edf_into(const ModPoly& f, int d, uint64_t p, Lcg& lcg,
                        std::vector<ModPoly>& out) {
    if (mp_deg(f) == d) {
        out.push_back(mp_monic(f, p));
        return;
    }
    Int exp = (int_pow(Int(static_cast<unsigned long>(p)), d) - 1) / 2;
    for (;;) {
        std::vector<uint64_t> tc(2 * d);
        for (auto& x : tc) x = lcg.next() % p;
        ModPoly t = mp_make(std::move(tc));
        if (mp_deg(t) < 1) continue;
        ModPoly w = mp_powmod(t, exp, f, p);
        w = mp_sub(w, mp_const(1, p), p);
        ModPoly g = mp_gcd(w, f, p);
        if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
            mp_edf_into(g, d, p, lcg, out);
            mp_edf_into(mp_divrem(f, g, p).first, d, p, lcg, out);
            return;
        }
    }
}

}  // namespace detail

// Complete factorization over F_p (squarefree, then distinct-degree, then
// equal-degree splitting). p must be an odd prime.
inline FactorsModP factor_mod_p(const ModPoly& f_in, uint64_t p,
                                uint64_t seed = detail::kFactorSeed) {
    if (p < 3 || !is_probable_prime(Int(static_cast<unsigned long>(p))))
        throw domain_error("factor_mod_p: modulus must be an odd prime");
    if (mp_is_zero(f_in)) throw domain_error("factor_mod_p: zero polynomial");
    FactorsModP out;
    out.p = p;
    out.unit = f_in.c.back();
    ModPoly f = mp_monic(f_in, p);
    if (mp_deg(f) == 0) return out;
    std::vector<std::pair<ModPoly, unsigned>> sqf;
    detail::mp_squarefree_into(f, p, 1, sqf);
    detail::Lcg lcg(seed);
    for (auto& [g, mult] : sqf) {
        for (auto& [h, d] : detail::mp_ddf(g, p)) {
            std::vector<ModPoly> irr;
            detail::mp_edf_into(h, d, p, lcg, irr);
            for (auto& q : irr) out.factors.emplace_back(q, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        int c = mp_cmp(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });
    return out;
}

inline FactorsModP factor_mod_p(const UPolyQ& f, uint64_t p,
                                uint64_t seed = detail::kFactorSeed) {
    return factor_mod_p(mp_from_upoly(f, p), p, seed);
}

inline bool mp_is_irreducible(const ModPoly& f, uint64_t p) {
    int n = mp_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) == 1 for prime q | n
    ModPoly x = mp_mod(mp_x(), f, p);
    ModPoly h = x;
    std::vector<ModPoly> frob(n + 1);  // frob[i] = x^(p^i) mod f
    frob[0] = x;
    for (int i = 1; i <= n; ++i) {
        h = mp_powmod(h, Int(static_cast<unsigned long>(p)), f, p);
        frob[i] = h;
    }
    if (!(mp_cmp(frob[n], x) == 0)) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q) continue;
        bool qprime = true;
        for (int r = 2; r * r <= q; ++r)
            if (q % r == 0) qprime = false;
        if (!qprime) continue;
        ModPoly g = mp_gcd(mp_sub(frob[n / q], x, p), f, p);
        if (mp_deg(g) != 0) return false;
    }
    return true;
}

}  // namespace hitkit
