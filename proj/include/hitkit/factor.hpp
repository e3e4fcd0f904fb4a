#pragma once

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "modpoly.hpp"
#include "resultant.hpp"

namespace hitkit {

struct FactorsQ {
    Rat unit{1};
    std::vector<std::pair<UPolyQ, unsigned>> factors;  // primitive in Z[x], positive leading
};

struct FactorsB {
    Rat unit{1};
    std::vector<std::pair<BPoly, unsigned>> factors;  // primitive in Z[t][x], positive leading
};

// Multiset of x-degrees of the irreducible factors with positive x-degree.
using FactType = std::vector<int>;

namespace detail {

// ---- arithmetic on Z/m[x] (m a prime power), dense vectors --------------

using ZmPoly = std::vector<Int>;  // coefficient i multiplies x^i, in [0, m)

inline void zm_trim(ZmPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int zm_deg(const ZmPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] += b[i];
        c[i] = pos_mod(c[i], m);
    }
    zm_trim(c);
    return c;
}

inline ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] -= b[i];
        c[i] = pos_mod(c[i], m);
    }
    zm_trim(c);
    return c;
}

inline ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (auto& x : c) x = pos_mod(x, m);
    zm_trim(c);
    return c;
}

// Division by a monic divisor.
inline std::pair<ZmPoly, ZmPoly> zm_divrem_monic(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    int db = zm_deg(b);
    ZmPoly rem = a;
    int dq = zm_deg(a) - db;
    if (dq < 0) return {{}, a};
    ZmPoly quo(dq + 1, Int(0));
    for (int i = zm_deg(a); i >= db; --i) {
        Int c = i < static_cast<int>(rem.size()) ? rem[i] : Int(0);
        if (c == 0) continue;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = pos_mod(rem[i - db + j] - c * b[j], m);
    }
    zm_trim(quo);
    zm_trim(rem);
    return {quo, rem};
}

inline ZmPoly zm_from_modpoly(const ModPoly& f) {
    ZmPoly out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = Int(static_cast<unsigned long>(f.c[i]));
    return out;
}

inline ZmPoly zm_from_upoly(const UPolyQ& f, const Int& m) {
    ZmPoly out(f.degree() + 1 > 0 ? f.degree() + 1 : 0);
    for (int i = 0; i <= f.degree(); ++i) {
        const Rat& q = f.coeff(i);
        auto inv = mod_inverse(q.get_den(), m);
        if (!inv) throw domain_error("zm_from_upoly: denominator not invertible");
        out[i] = pos_mod(q.get_num() * *inv, m);
    }
    zm_trim(out);
    return out;
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m),
// h and g monic, to the same data mod m^2 (all reductions mod cap).
struct HenselPair {
    ZmPoly g, h, s, t;
};

inline HenselPair hensel_step(const ZmPoly& f, const HenselPair& in, const Int& cap) {
    const Int& m = cap;  // work modulo the final modulus throughout
    ZmPoly e = zm_sub(f, zm_mul(in.g, in.h, m), m);
    auto [q, r] = zm_divrem_monic(zm_mul(in.s, e, m), in.h, m);
    ZmPoly g2 = zm_add(in.g, zm_add(zm_mul(in.t, e, m), zm_mul(q, in.g, m), m), m);
    ZmPoly h2 = zm_add(in.h, r, m);
    ZmPoly b = zm_sub(zm_add(zm_mul(in.s, g2, m), zm_mul(in.t, h2, m), m), ZmPoly{Int(1)}, m);
    auto [c, d] = zm_divrem_monic(zm_mul(in.s, b, m), h2, m);
    ZmPoly s2 = zm_sub(in.s, d, m);
    ZmPoly t2 = zm_sub(in.t, zm_add(zm_mul(in.t, b, m), zm_mul(c, g2, m), m), m);
    return {g2, h2, s2, t2};
}

// Lift a monic factorization f = prod leaves (mod p) to mod p^a, recursively
// over a product tree.
inline void hensel_lift_tree(const ZmPoly& f, const std::vector<ModPoly>& leaves, size_t lo,
                             size_t hi, uint64_t p, unsigned a, const Int& pa,
                             std::vector<ZmPoly>& out) {
    if (hi - lo == 1) {
        out[lo] = f;
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    ModPoly gp = mp_const(1, p), hp = mp_const(1, p);
    for (size_t i = lo; i < mid; ++i) gp = mp_mul(gp, leaves[i], p);
    for (size_t i = mid; i < hi; ++i) hp = mp_mul(hp, leaves[i], p);
    auto [one, sp, tp] = mp_ext_gcd(gp, hp, p);
    if (mp_deg(one) != 0) throw internal_error("hensel_lift_tree: factors not coprime mod p");
    HenselPair cur{zm_from_modpoly(gp), zm_from_modpoly(hp), zm_from_modpoly(sp),
                   zm_from_modpoly(tp)};
    Int prec = Int(static_cast<unsigned long>(p));
    while (prec < pa) {
        cur = hensel_step(f, cur, pa);
        prec = prec * prec;
    }
    hensel_lift_tree(cur.g, leaves, lo, mid, p, a, pa, out);
    hensel_lift_tree(cur.h, leaves, mid, hi, p, a, pa, out);
}

inline UPolyQ upoly_from_balanced(const ZmPoly& f, const Int& m) {
    std::vector<Rat> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) c[i] = Rat(balanced_mod(f[i], m));
    return UPolyQ::from_coeffs(std::move(c));
}

// Zassenhaus factorization of a primitive squarefree integer polynomial
// with positive leading coefficient. Returns primitive factors.
inline std::vector<UPolyQ> factor_squarefree_z(const UPolyQ& f) {
    int n = f.degree();
    if (n <= 0) throw internal_error("factor_squarefree_z: constant input");
    if (n == 1) return {f};

    // prime selection: f squarefree mod p with degree preserved; among the
    // first few admissible primes keep the one with fewest modular factors
    const Int lead = f.leading().get_num();
    uint64_t best_p = 0;
    FactorsModP best;
    int tried = 0;
    for (uint32_t p : small_primes()) {
        if (p == 2) continue;
        if (mpz_fdiv_ui(lead.get_mpz_t(), p) == 0) continue;
        ModPoly fp = mp_from_upoly(f, p);
        if (mp_deg(fp) != n) continue;
        if (mp_deg(mp_gcd(fp, mp_derivative(fp, p), p)) != 0) continue;
        FactorsModP fac = factor_mod_p(fp, p);
        if (best_p == 0 || fac.factors.size() < best.factors.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (++tried >= 5 || best.factors.size() == 1) break;
    }
    if (best_p == 0) throw internal_error("factor_squarefree_z: no admissible prime found");
    if (best.factors.size() == 1) return {f};

    uint64_t p = best_p;
    // Mignotte-style bound: coefficients of lc * (any monic factor lifted)
    Int norm2 = 0;
    for (const Rat& c : f.coeffs()) norm2 += c.get_num() * c.get_num();
    Int bound = 2 * abs(lead) * (int_sqrt(norm2) + 1) * int_pow(Int(2), n);
    unsigned a = 1;
    Int pa(static_cast<unsigned long>(p));
    while (pa < bound) {
        pa *= static_cast<unsigned long>(p);
        ++a;
    }

    // lift the monic factorization of f/lc mod p^a
    std::vector<ModPoly> leaves;
    for (auto& [g, mult] : best.factors) {
        if (mult != 1) throw internal_error("factor_squarefree_z: repeated modular factor");
        leaves.push_back(g);
    }
    ZmPoly fhat = zm_from_upoly(f.scaled(Rat(1) / f.leading()), pa);
    std::vector<ZmPoly> lifted(leaves.size());
    hensel_lift_tree(fhat, leaves, 0, leaves.size(), p, a, pa, lifted);

    // subset recombination
    std::vector<UPolyQ> out;
    std::vector<size_t> active(leaves.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = i;
    UPolyQ rem = f;
    Int lc_rem = lead;

    auto try_subset = [&](const std::vector<size_t>& subset) -> bool {
        ZmPoly prod{pos_mod(lc_rem, pa)};
        for (size_t i : subset) prod = zm_mul(prod, lifted[active[i]], pa);
        UPolyQ cand = upoly_from_balanced(prod, pa);
        if (cand.is_zero()) return false;
        cand = primitive_int(cand).second;
        auto [q, r] = divrem(rem, cand);
        if (!r.is_zero()) return false;
        out.push_back(cand);
        std::vector<size_t> next;
        for (size_t j = 0; j < active.size(); ++j)
            if (std::find(subset.begin(), subset.end(), j) == subset.end())
                next.push_back(active[j]);
        active = std::move(next);
        rem = primitive_int(q).second;
        lc_rem = rem.is_zero() ? Int(1) : rem.leading().get_num();
        return true;
    };

    size_t size = 1;
    while (2 * size <= active.size()) {
        // enumerate index subsets of `active` of the given size, lexicographic
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i;
        bool found = false;
        for (;;) {
            if (try_subset(idx)) {
                found = true;
                break;
            }
            // next subset
            size_t i = size;
            while (i > 0) {
                --i;
                if (idx[i] != i + active.size() - size) {
                    ++idx[i];
                    for (size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) break;
        }
        if (!found) ++size;
    }
    if (rem.degree() >= 1) out.push_back(rem);
    return out;
}

}  // namespace detail

// Complete irreducible factorization over Q.
inline FactorsQ factor_univariate_q(const UPolyQ& f) {
    if (f.is_zero()) throw domain_error("factor_univariate_q: zero polynomial");
    FactorsQ out;
    auto [unit, parts] = squarefree_decomposition(f);
    out.unit = unit;
    for (auto& [g, e] : parts) {
        auto [u2, gz] = primitive_int(g);
        out.unit *= rat_pow(u2, e);
        for (const UPolyQ& irr : detail::factor_squarefree_z(gz)) {
            auto [u3, fz] = primitive_int(irr);
            if (u3 != 1) throw internal_error("factor_univariate_q: non-primitive factor");
            out.factors.emplace_back(fz, e);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        int c = cmp_canonical(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });
    return out;
}

namespace detail {

// ---- truncated power series over Q and polynomials over them ------------

using Series = std::vector<Rat>;  // coefficient i multiplies z^i; length <= N

inline Series sr_add(const Series& a, const Series& b, size_t n) {
    Series c(std::min(n, std::max(a.size(), b.size())));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] += b[i];
    }
    return c;
}

inline Series sr_sub(const Series& a, const Series& b, size_t n) {
    Series c(std::min(n, std::max(a.size(), b.size())));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] -= b[i];
    }
    return c;
}

inline Series sr_mul(const Series& a, const Series& b, size_t n) {
    if (a.empty() || b.empty()) return {};
    Series c(std::min(n, a.size() + b.size() - 1));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

inline bool sr_is_zero(const Series& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

// Multiplicative inverse of a series with nonzero constant term.
inline Series sr_inv(const Series& a, size_t n) {
    if (a.empty() || a[0] == 0) throw internal_error("sr_inv: constant term vanishes");
    Series r{Rat(1) / a[0]};
    while (r.size() < n) {
        size_t m = std::min(n, 2 * r.size());
        // r <- r * (2 - a r) mod z^m
        Series ar = sr_mul(a, r, m);
        Series two_minus(ar.size());
        for (size_t i = 0; i < ar.size(); ++i) two_minus[i] = (i == 0 ? Rat(2) : Rat(0)) - ar[i];
        r = sr_mul(r, two_minus, m);
        r.resize(m, Rat(0));
    }
    r.resize(n, Rat(0));
    return r;
}

using SPoly = std::vector<Series>;  // coefficient i (a series) multiplies x^i

inline void sp_trim(SPoly& f) {
    while (!f.empty() && sr_is_zero(f.back())) f.pop_back();
}
inline int sp_deg(const SPoly& f) { return static_cast<int>(f.size()) - 1; }

inline SPoly sp_add(const SPoly& a, const SPoly& b, size_t n) {
    SPoly c(std::max(a.size(), b.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        Series x = i < a.size() ? a[i] : Series{};
        Series y = i < b.size() ? b[i] : Series{};
        c[i] = sr_add(x, y, n);
    }
    sp_trim(c);
    return c;
}

inline SPoly sp_sub(const SPoly& a, const SPoly& b, size_t n) {
    SPoly c(std::max(a.size(), b.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        Series x = i < a.size() ? a[i] : Series{};
        Series y = i < b.size() ? b[i] : Series{};
        c[i] = sr_sub(x, y, n);
    }
    sp_trim(c);
    return c;
}

inline SPoly sp_mul(const SPoly& a, const SPoly& b, size_t n) {
    if (a.empty() || b.empty()) return {};
    SPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = sr_add(c[i + j], sr_mul(a[i], b[j], n), n);
    sp_trim(c);
    return c;
}

// Division by a divisor whose leading series coefficient is a unit.
inline std::pair<SPoly, SPoly> sp_divrem(const SPoly& a, const SPoly& b, size_t n) {
    int db = sp_deg(b);
    if (db < 0) throw internal_error("sp_divrem: zero divisor");
    SPoly rem = a;
    int dq = sp_deg(a) - db;
    if (dq < 0) return {{}, a};
    Series linv = sr_inv(b.back(), n);
    SPoly quo(dq + 1);
    for (int i = sp_deg(a); i >= db; --i) {
        if (i >= static_cast<int>(rem.size()) || sr_is_zero(rem[i])) continue;
        Series c = sr_mul(rem[i], linv, n);
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = sr_sub(rem[i - db + j], sr_mul(c, b[j], n), n);
    }
    sp_trim(quo);
    sp_trim(rem);
    return {quo, rem};
}

// Extended gcd over Q[x].
inline std::tuple<UPolyQ, UPolyQ, UPolyQ> ext_gcd_q(UPolyQ a, UPolyQ b) {
    UPolyQ u0(Rat(1)), v0;
    UPolyQ u1, v1(Rat(1));
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        UPolyQ u2 = u0 - q * u1;
        UPolyQ v2 = v0 - q * v1;
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    Rat l = a.leading();
    return {a.scaled(1 / l), u0.scaled(1 / l), v0.scaled(1 / l)};
}

inline SPoly sp_from_upoly(const UPolyQ& f) {
    SPoly out(f.degree() + 1 > 0 ? f.degree() + 1 : 0);
    for (int i = 0; i <= f.degree(); ++i) out[i] = Series{f.coeff(i)};
    sp_trim(out);
    return out;
}

struct SeriesHensel {
    SPoly g, h, s, t;
};

inline SeriesHensel series_hensel_step(const SPoly& f, const SeriesHensel& in, size_t n) {
    SPoly e = sp_sub(f, sp_mul(in.g, in.h, n), n);
    auto [q, r] = sp_divrem(sp_mul(in.s, e, n), in.h, n);
    SPoly g2 = sp_add(in.g, sp_add(sp_mul(in.t, e, n), sp_mul(q, in.g, n), n), n);
    SPoly h2 = sp_add(in.h, r, n);
    SPoly one{Series{Rat(1)}};
    SPoly b = sp_sub(sp_add(sp_mul(in.s, g2, n), sp_mul(in.t, h2, n), n), one, n);
    auto [c, d] = sp_divrem(sp_mul(in.s, b, n), h2, n);
    SPoly s2 = sp_sub(in.s, d, n);
    SPoly t2 = sp_sub(in.t, sp_add(sp_mul(in.t, b, n), sp_mul(c, g2, n), n), n);
    return {g2, h2, s2, t2};
}

inline void series_lift_tree(const SPoly& f, const std::vector<UPolyQ>& leaves, size_t lo,
                             size_t hi, size_t n, std::vector<SPoly>& out) {
    if (hi - lo == 1) {
        out[lo] = f;
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    UPolyQ g0(Rat(1)), h0(Rat(1));
    for (size_t i = lo; i < mid; ++i) g0 = g0 * leaves[i];
    for (size_t i = mid; i < hi; ++i) h0 = h0 * leaves[i];
    auto [one, s0, t0] = ext_gcd_q(g0, h0);
    if (one.degree() != 0) throw internal_error("series_lift_tree: factors not coprime");
    SeriesHensel cur{sp_from_upoly(g0), sp_from_upoly(h0), sp_from_upoly(s0), sp_from_upoly(t0)};
    size_t prec = 1;
    while (prec < n) {
        cur = series_hensel_step(f, cur, n);
        prec *= 2;
    }
    series_lift_tree(cur.g, leaves, lo, mid, n, out);
    series_lift_tree(cur.h, leaves, mid, hi, n, out);
}

// Convert an SPoly (series in z, truncated) back to Q[t][x] via z = t - c0.
inline BPoly sp_to_bpoly(const SPoly& f, const Rat& c0) {
    UPolyQ shift = UPolyQ::from_coeffs({-c0, Rat(1)});  // t - c0
    std::vector<UPolyQ> cs(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        UPolyQ as_z = UPolyQ::from_coeffs(std::vector<Rat>(f[i]));
        cs[i] = compose(as_z, shift);
    }
    return BPoly::from_coeffs(std::move(cs));
}

// Irreducible factorization of a monic, squarefree (in x), integer-coefficient
// bivariate polynomial; factors returned monic.
inline std::vector<BPoly> factor_monic_squarefree_bivar(const BPoly& m) {
    int n = deg_x(m);
    if (n == 1) return {m};
    // specialization point with squarefree image; prefer few factors
    long cand = 0;
    Rat c0;
    FactorsQ spec_fac;
    bool have = false;
    int seen = 0;
    for (int tries = 0; tries < 200 && seen < 5; ++tries) {
        Rat c(cand);
        cand = cand > 0 ? -cand : -cand + 1;
        UPolyQ u = specialize(m, c);
        if (!is_squarefree(u)) continue;
        ++seen;
        FactorsQ fac = factor_univariate_q(u);
        if (!have || fac.factors.size() < spec_fac.factors.size()) {
            have = true;
            c0 = c;
            spec_fac = std::move(fac);
        }
        if (spec_fac.factors.size() == 1) break;
    }
    if (!have) throw internal_error("factor_monic_squarefree_bivar: no good specialization");
    if (spec_fac.factors.size() == 1) return {m};
    if (spec_fac.factors.size() > 16)
        throw cap_error("factor_monic_squarefree_bivar: too many modular factors");

    size_t prec = static_cast<size_t>(deg_t(m)) * static_cast<size_t>(n) + 1;

    // m as a polynomial in x over Q[[z]], z = t - c0
    UPolyQ shift = UPolyQ::from_coeffs({c0, Rat(1)});  // t = c0 + z
    SPoly f(n + 1);
    for (int i = 0; i <= n; ++i) {
        UPolyQ in_z = compose(m.coeff(i), shift);
        Series s(in_z.degree() + 1 > 0 ? in_z.degree() + 1 : 0);
        for (int j = 0; j <= in_z.degree(); ++j) s[j] = in_z.coeff(j);
        if (s.size() > prec) s.resize(prec);
        f[i] = std::move(s);
    }

    std::vector<UPolyQ> leaves;
    for (auto& [g, e] : spec_fac.factors) {
        if (e != 1) throw internal_error("factor_monic_squarefree_bivar: repeated factor");
        leaves.push_back(g);
    }
    std::vector<SPoly> lifted(leaves.size());
    series_lift_tree(f, leaves, 0, leaves.size(), prec, lifted);

    std::vector<BPoly> out;
    std::vector<size_t> active(leaves.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = i;
    BPoly rem = m;

    auto try_subset = [&](const std::vector<size_t>& subset) -> bool {
        SPoly prod{Series{Rat(1)}};
        for (size_t i : subset) prod = sp_mul(prod, lifted[active[i]], prec);
        BPoly cand = sp_to_bpoly(prod, c0);
        BPoly q;
        try {
            q = divide_x_exact(rem, cand);
        } catch (const internal_error&) {
            return false;
        }
        out.push_back(cand);
        std::vector<size_t> next;
        for (size_t j = 0; j < active.size(); ++j)
            if (std::find(subset.begin(), subset.end(), j) == subset.end())
                next.push_back(active[j]);
        active = std::move(next);
        rem = std::move(q);
        return true;
    };

    size_t size = 1;
    while (2 * size <= active.size()) {
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i;
        bool found = false;
        for (;;) {
            if (try_subset(idx)) {
                found = true;
                break;
            }
            size_t i = size;
            while (i > 0) {
                --i;
                if (idx[i] != i + active.size() - size) {
                    ++idx[i];
                    for (size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) break;
        }
        if (!found) ++size;
    }
    if (deg_x(rem) >= 1) out.push_back(rem);
    return out;
}

}  // namespace detail

// Complete irreducible factorization in Q[t][x]. Factors are primitive with
// integer coefficients; factors of x-degree zero carry the t-content.
inline FactorsB factor_bivariate_q(const BPoly& p) {
    if (p.is_zero()) throw domain_error("factor_bivariate_q: zero polynomial");
    FactorsB out;
    auto [unit0, pz] = primitive_int(p);
    out.unit = unit0;
    BPoly work = pz;

    // t-content
    UPolyQ ct = content_t(work);
    if (ct.degree() > 0) {
        FactorsQ cf = factor_univariate_q(ct);
        out.unit *= cf.unit;
        for (auto& [g, e] : cf.factors) out.factors.emplace_back(bpoly_of_t(g), e);
        work = divexact_coeffwise(work, ct);
    }

    if (deg_x(work) >= 1) {
        for (auto& [sqf, mult] : yun_x(work)) {
            BPoly mono = monicize_x(sqf);
            for (const BPoly& mf : detail::factor_monic_squarefree_bivar(mono)) {
                // undo the monicization: factor of sqf = primitive(mf(t, lc*x))
                BPoly back = substitute_x_scaled(mf, lc_x(sqf));
                auto [u, prim] = primitive_int(back);
                (void)u;
                out.factors.emplace_back(prim, mult);
            }
        }
    }

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        int c = cmp_canonical(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });

    // reconcile the unit exactly
    BPoly prod = BPoly(UPolyQ(Rat(1)));
    for (auto& [g, e] : out.factors) prod = prod * g.pow(e);
    // p = unit * prod must hold; solve unit by comparing leading terms
    const UPolyQ& lp = lc_x(p);
    const UPolyQ& lq = lc_x(prod);
    Rat unit = lp.leading() / lq.leading();
    if (!(prod.scaled(UPolyQ(unit)) == p))
        throw internal_error("factor_bivariate_q: product reassembly failed");
    out.unit = unit;
    return out;
}

// Multiset of x-degrees of the irreducible factors with positive x-degree.
// Requires a separable input (nonzero discriminant in x).
inline FactType factorization_type(const BPoly& p) {
    if (p.is_zero() || deg_x(p) < 1)
        throw domain_error("factorization_type: need positive x-degree");
    if (!squarefree_x(p)) throw domain_error("factorization_type: input not separable");
    FactType out;
    for (auto& [f, e] : factor_bivariate_q(p).factors)
        if (deg_x(f) >= 1) out.push_back(deg_x(f));
    std::sort(out.begin(), out.end());
    return out;
}

// Degrees of the distinct irreducible factors (multiplicity ignored, so the
// sum is the degree of the squarefree part).
inline FactType factorization_type(const UPolyQ& f) {
    FactType out;
    for (auto& [g, e] : factor_univariate_q(f).factors)
        if (g.degree() >= 1) out.push_back(g.degree());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hitkit
