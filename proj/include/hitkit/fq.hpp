#pragma once

#include <utility>
#include <vector>

#include "modpoly.hpp"

namespace hitkit {

// The field F_q, q = p^d, realized as F_p[y]/(modulus).
struct FqCtx {
    uint64_t p = 0;
    unsigned d = 1;
    ModPoly modulus;  // monic irreducible of degree d
    Int q() const { return int_pow(Int(static_cast<unsigned long>(p)), d); }
};

// Deterministic search for a monic irreducible of degree d: trinomials
// y^d + a*y + b in lex order, then all monic polynomials.
inline ModPoly find_irreducible(uint64_t p, unsigned d) {
    if (d == 1) return mp_x();
    for (uint64_t a = 0; a < p; ++a)
        for (uint64_t b = 0; b < p; ++b) {
            std::vector<uint64_t> c(d + 1, 0);
            c[0] = b;
            c[1] = a;
            c[d] = 1;
            ModPoly f = mp_make(std::move(c));
            if (mp_is_irreducible(f, p)) return f;
        }
    // exhaustive fallback over lower coefficients
    std::vector<uint64_t> c(d + 1, 0);
    c[d] = 1;
    for (;;) {
        size_t i = 0;
        while (i < d && ++c[i] == p) c[i++] = 0;
        if (i == d) break;
        ModPoly f = mp_make(std::vector<uint64_t>(c));
        if (mp_is_irreducible(f, p)) return f;
    }
    throw internal_error("find_irreducible: search exhausted");
}

inline FqCtx make_fq(uint64_t p, unsigned d) { return FqCtx{p, d, find_irreducible(p, d)}; }

using FqElem = ModPoly;  // degree < d

inline FqElem fq_red(const ModPoly& a, const FqCtx& k) { return mp_mod(a, k.modulus, k.p); }
inline FqElem fq_const(uint64_t a, const FqCtx& k) { return mp_const(a, k.p); }
inline FqElem fq_add(const FqElem& a, const FqElem& b, const FqCtx& k) {
    return mp_add(a, b, k.p);
}
inline FqElem fq_sub(const FqElem& a, const FqElem& b, const FqCtx& k) {
    return mp_sub(a, b, k.p);
}
inline FqElem fq_mul(const FqElem& a, const FqElem& b, const FqCtx& k) {
    return fq_red(mp_mul(a, b, k.p), k);
}
inline FqElem fq_inv(const FqElem& a, const FqCtx& k) {
    if (mp_is_zero(a)) throw domain_error("fq_inv: zero");
    auto [g, u, v] = mp_ext_gcd(a, k.modulus, k.p);
    (void)v;
    if (mp_deg(g) != 0) throw internal_error("fq_inv: modulus not irreducible");
    return fq_red(mp_scale(u, invmod_u64(g.c[0], k.p), k.p), k);
}

// ---- polynomials over F_q ----------------------------------------------

using FqPoly = std::vector<FqElem>;  // coefficient i multiplies x^i

inline void fqp_trim(FqPoly& f) {
    while (!f.empty() && mp_is_zero(f.back())) f.pop_back();
}
inline int fqp_deg(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }

inline FqPoly fqp_from_modpoly(const ModPoly& f) {
    FqPoly out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = ModPoly{{f.c[i]}};
    for (auto& e : out) mp_trim(e);
    fqp_trim(out);
    return out;
}

inline FqPoly fqp_sub(const FqPoly& a, const FqPoly& b, const FqCtx& k) {
    FqPoly c(std::max(a.size(), b.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        FqElem x = i < a.size() ? a[i] : FqElem{};
        FqElem y = i < b.size() ? b[i] : FqElem{};
        c[i] = fq_sub(x, y, k);
    }
    fqp_trim(c);
    return c;
}

inline FqPoly fqp_mul(const FqPoly& a, const FqPoly& b, const FqCtx& k) {
    if (a.empty() || b.empty()) return {};
    FqPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = fq_add(c[i + j], fq_mul(a[i], b[j], k), k);
    fqp_trim(c);
    return c;
}

inline std::pair<FqPoly, FqPoly> fqp_divrem(const FqPoly& a, const FqPoly& b, const FqCtx& k) {
    if (b.empty()) throw domain_error("fqp_divrem: division by zero");
    int db = fqp_deg(b);
    FqPoly rem = a;
    int dq = fqp_deg(a) - db;
    if (dq < 0) return {{}, a};
    FqPoly quo(dq + 1);
    FqElem linv = fq_inv(b.back(), k);
    for (int i = fqp_deg(a); i >= db; --i) {
        if (mp_is_zero(rem[i])) continue;
        FqElem c = fq_mul(rem[i], linv, k);
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = fq_sub(rem[i - db + j], fq_mul(c, b[j], k), k);
    }
    fqp_trim(quo);
    fqp_trim(rem);
    return {quo, rem};
}

inline FqPoly fqp_monic(const FqPoly& f, const FqCtx& k) {
    if (f.empty()) return f;
    FqElem linv = fq_inv(f.back(), k);
    FqPoly out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = fq_mul(f[i], linv, k);
    return out;
}

inline FqPoly fqp_gcd(FqPoly a, FqPoly b, const FqCtx& k) {
    while (!b.empty()) {
        FqPoly r = fqp_divrem(a, b, k).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fqp_monic(a, k);
}

inline FqPoly fqp_powmod(FqPoly base, const Int& e, const FqPoly& f, const FqCtx& k) {
    FqPoly acc{fq_const(1, k)};
    base = fqp_divrem(base, f, k).second;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = fqp_divrem(fqp_mul(acc, acc, k), f, k).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = fqp_divrem(fqp_mul(acc, base, k), f, k).second;
    }
    return acc;
}

inline int fq_cmp(const FqElem& a, const FqElem& b) { return mp_cmp(a, b); }

namespace detail {

inline void fq_roots_split(const FqPoly& f, const FqCtx& k, Lcg& lcg,
                           std::vector<FqElem>& out) {
    if (fqp_deg(f) <= 0) return;
    if (fqp_deg(f) == 1) {
        FqElem root = fq_mul(fq_sub(FqElem{}, f[0], k), fq_inv(f[1], k), k);
        out.push_back(root);
        return;
    }
    Int e = (k.q() - 1) / 2;
    for (;;) {
        // shift x -> x + c for a deterministic stream of c in F_q
        std::vector<uint64_t> cc(k.d);
        for (auto& x : cc) x = lcg.next() % k.p;
        FqElem c = mp_make(std::move(cc));
        FqPoly shifted{c, fq_const(1, k)};
        FqPoly w = fqp_powmod(shifted, e, f, k);
        if (!w.empty()) w[0] = fq_sub(w[0], fq_const(1, k), k);
        fqp_trim(w);
        FqPoly g = fqp_gcd(w, f, k);
        if (fqp_deg(g) > 0 && fqp_deg(g) < fqp_deg(f)) {
            fq_roots_split(g, k, lcg, out);
            fq_roots_split(fqp_divrem(f, g, k).first, k, lcg, out);
            return;
        }
    }
}

}  // namespace detail

// Roots in F_q of a squarefree ModPoly that splits completely over F_q
// (all its irreducible factors have degree dividing d). Sorted canonically.
inline std::vector<FqElem> roots_in_fq(const ModPoly& h, const FqCtx& k,
                                       uint64_t seed = detail::kFactorSeed) {
    FqPoly f = fqp_monic(fqp_from_modpoly(mp_monic(h, k.p)), k);
    // verify split: gcd(x^q - x, f) must be f itself
    FqPoly xq = fqp_powmod(FqPoly{FqElem{}, fq_const(1, k)}, k.q(), f, k);
    FqPoly lin = fqp_sub(xq, FqPoly{FqElem{}, fq_const(1, k)}, k);
    FqPoly g = fqp_gcd(lin, f, k);
    if (fqp_deg(g) != fqp_deg(f))
        throw internal_error("roots_in_fq: polynomial does not split over F_q");
    detail::Lcg lcg(seed ^ 0x5bd1e995u);
    std::vector<FqElem> out;
    detail::fq_roots_split(f, k, lcg, out);
    std::sort(out.begin(), out.end(), [](const FqElem& a, const FqElem& b) {
        return fq_cmp(a, b) < 0;
    });
    return out;
}

}  // namespace hitkit
