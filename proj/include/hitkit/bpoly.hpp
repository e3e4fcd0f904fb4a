#pragma once

#include <utility>
#include <vector>

#include "poly.hpp"

namespace hitkit {

// BPoly is Poly<UPolyQ>: coefficient i (a polynomial in t) multiplies x^i.

inline int deg_x(const BPoly& p) { return p.degree(); }

inline int deg_t(const BPoly& p) {
    int d = -1;
    for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
    return d;
}

inline const UPolyQ& lc_x(const BPoly& p) { return p.leading(); }

inline BPoly bpoly_of_t(const UPolyQ& a) { return BPoly(a); }

inline BPoly bpoly_x() { return BPoly::variable(); }

inline BPoly bpoly_t() { return BPoly(UPolyQ::variable()); }

inline UPolyQ specialize(const BPoly& p, const Rat& c) {
    std::vector<Rat> out(p.degree() + 1 > 0 ? p.degree() + 1 : 0);
    for (int i = 0; i <= p.degree(); ++i) out[i] = eval_at(p.coeff(i), c);
    return UPolyQ::from_coeffs(std::move(out));
}

inline Rat eval_at(const BPoly& p, const Rat& t, const Rat& x) {
    Rat acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + eval_at(p.coeff(i), t);
    return acc;
}

// Content in t: monic gcd of the x-coefficients.
inline UPolyQ content_t(const BPoly& p) {
    UPolyQ g;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) g = gcd_monic(g, c);
    return g;
}

inline BPoly divexact_coeffwise(const BPoly& p, const UPolyQ& d) {
    std::vector<UPolyQ> c(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c[i] = divexact(p.coeff(i), d);
    return BPoly::from_coeffs(std::move(c));
}

inline BPoly scale_by_t(const BPoly& p, const UPolyQ& s) { return p.scaled(s); }

// Clears rational denominators and integer content over all coefficients;
// returns (unit, primitive) with primitive in Z[t][x], positive leading sign.
inline std::pair<Rat, BPoly> primitive_int(const BPoly& f) {
    if (f.is_zero()) return {Rat(1), f};
    Int den_lcm = 1;
    for (const auto& ct : f.coeffs())
        for (const Rat& c : ct.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    Int num_gcd = 0;
    for (const auto& ct : f.coeffs())
        for (const Rat& c : ct.coeffs())
            num_gcd = gcd(num_gcd, Int(c.get_num() * (den_lcm / c.get_den())));
    Rat unit = make_rat(num_gcd, den_lcm);
    if (lc_x(f).leading() < 0) unit = -unit;
    std::vector<UPolyQ> cs(f.coeffs().begin(), f.coeffs().end());
    for (auto& ct : cs) ct = ct.scaled(Rat(1) / unit);
    return {unit, BPoly::from_coeffs(std::move(cs))};
}

inline bool has_integer_coeffs(const BPoly& f) {
    for (const auto& ct : f.coeffs())
        if (!has_integer_coeffs(ct)) return false;
    return true;
}

inline Int max_abs_num(const BPoly& f) {
    Int m = 0;
    for (const auto& ct : f.coeffs()) m = std::max(m, max_abs_num(ct));
    return m;
}

inline bool is_monic_x(const BPoly& f) {
    return !f.is_zero() && lc_x(f) == UPolyQ(Rat(1));
}

// Substitute x -> s(t) * x.
inline BPoly substitute_x_scaled(const BPoly& f, const UPolyQ& s) {
    std::vector<UPolyQ> c(f.degree() + 1);
    UPolyQ pw(Rat(1));
    for (int i = 0; i <= f.degree(); ++i) {
        c[i] = f.coeff(i) * pw;
        pw = pw * s;
    }
    return BPoly::from_coeffs(std::move(c));
}

// Monic form lc^(n-1) * f(t, x/lc): monic in x with polynomial coefficients.
// Roots of the result are lc(t) times the roots of f.
inline BPoly monicize_x(const BPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw domain_error("monicize_x: need positive x-degree");
    const UPolyQ& l = lc_x(f);
    int n = f.degree();
    std::vector<UPolyQ> c(n + 1);
    // leading becomes 1; coefficient of x^i picks up l^(n-1-i)
    c[n] = UPolyQ(Rat(1));
    UPolyQ pw(Rat(1));
    for (int i = n - 1; i >= 0; --i) {
        c[i] = f.coeff(i) * pw;
        pw = pw * l;
    }
    return BPoly::from_coeffs(std::move(c));
}

// Substitute t -> g(t) (for parametrized specializations).
inline BPoly substitute_t(const BPoly& f, const UPolyQ& g) {
    std::vector<UPolyQ> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c[i] = compose(f.coeff(i), g);
    return BPoly::from_coeffs(std::move(c));
}

inline int cmp_canonical(const BPoly& a, const BPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp_canonical(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace hitkit
