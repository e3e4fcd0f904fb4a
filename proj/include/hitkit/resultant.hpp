#pragma once

#include <utility>
#include <vector>

#include "bpoly.hpp"

namespace hitkit {

inline Rat ring_divexact(const Rat& a, const Rat& b) { return a / b; }
inline UPolyQ ring_divexact(const UPolyQ& a, const UPolyQ& b) { return divexact(a, b); }

// Fraction-free Gaussian elimination; exact over any integral domain with
// exact division.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
    const size_t n = m.size();
    if (n == 0) return RingOne<R>::get();
    R prev = RingOne<R>::get();
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ring_zero(m[k][k])) {
            size_t piv = k + 1;
            while (piv < n && ring_zero(m[piv][k])) ++piv;
            if (piv == n) return R{};
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = ring_divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = R{};
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return sign < 0 ? R{} - det : det;
}

template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Poly<R>& f, const Poly<R>& g) {
    const int m = f.degree(), n = g.degree();
    std::vector<std::vector<R>> s(m + n, std::vector<R>(m + n, R{}));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[i][i + k] = f.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[n + i][i + k] = g.coeff(n - k);
    return s;
}

inline Rat resultant(const UPolyQ& f, const UPolyQ& g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    if (f.degree() == 0) return rat_pow(f.coeff(0), g.degree());
    if (g.degree() == 0) return rat_pow(g.coeff(0), f.degree());
    return bareiss_determinant(sylvester_matrix(f, g));
}

inline UPolyQ resultant(const BPoly& f, const BPoly& g) {
    if (f.is_zero() || g.is_zero()) return UPolyQ();
    if (f.degree() == 0) return f.coeff(0).pow(g.degree());
    if (g.degree() == 0) return g.coeff(0).pow(f.degree());
    return bareiss_determinant(sylvester_matrix(f, g));
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
inline Rat discriminant(const UPolyQ& f) {
    int n = f.degree();
    if (n < 1) throw domain_error("discriminant: need positive degree");
    Rat r = resultant(f, derivative(f)) / f.leading();
    if ((n * (n - 1) / 2) % 2) r = -r;
    return r;
}

namespace detail {

inline UPolyQ discriminant_x_bareiss(const BPoly& p) {
    int n = p.degree();
    UPolyQ r = divexact(resultant(p, derivative(p)), lc_x(p));
    if ((n * (n - 1) / 2) % 2) r = UPolyQ() - r;
    return r;
}

inline UPolyQ discriminant_x_interpolate(const BPoly& p) {
    int n = p.degree();
    int dbound = std::max(0, deg_t(p) * (2 * n - 1));
    std::vector<std::pair<Rat, Rat>> pts;
    long c = 0;
    while (static_cast<int>(pts.size()) < dbound + 1) {
        Rat t(c);
        // next candidate: 0, 1, -1, 2, -2, ...
        c = c > 0 ? -c : -c + 1;
        if (eval_at(lc_x(p), t) == 0) continue;
        UPolyQ spec = specialize(p, t);
        pts.emplace_back(t, discriminant(spec));
    }
    return interpolate(pts);
}

}  // namespace detail

// Discriminant of p with respect to x, exact in Q[t]. Uses the Sylvester
// matrix directly for small inputs and pointwise interpolation for large
// ones (both exact).
inline UPolyQ discriminant_x(const BPoly& p) {
    if (p.degree() < 1) throw domain_error("discriminant_x: need deg_x >= 1");
    long work = static_cast<long>(2 * p.degree() - 1) * (deg_t(p) + 1);
    if (work <= 120) return detail::discriminant_x_bareiss(p);
    return detail::discriminant_x_interpolate(p);
}

// Exact quotient in Q[t][x]; throws if the division is not exact.
inline BPoly divide_x_exact(const BPoly& a, const BPoly& b) {
    if (b.is_zero()) throw domain_error("divide_x_exact: zero divisor");
    BPoly rem = a;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) {
        if (a.is_zero()) return BPoly();
        throw internal_error("divide_x_exact: inexact division (degree)");
    }
    std::vector<UPolyQ> quo(dq + 1);
    for (int i = a.degree(); i >= db; --i) {
        if (rem.coeff(i).is_zero()) continue;
        UPolyQ q = divexact(rem.coeff(i), b.coeff(db));
        quo[i - db] = q;
        rem = rem - b.shifted(i - db).scaled(q);
    }
    if (!rem.is_zero()) throw internal_error("divide_x_exact: nonzero remainder");
    return BPoly::from_coeffs(std::move(quo));
}

// Primitive part with respect to t (content removed; rational content kept).
inline BPoly primitive_t(const BPoly& p) {
    if (p.is_zero()) return p;
    UPolyQ c = content_t(p);
    if (c.degree() == 0) return p;
    return divexact_coeffwise(p, c);
}

namespace detail {

// One pseudo-remainder step sequence: returns a polynomial proportional to
// the remainder of a by b in Q(t)[x].
inline BPoly pseudo_rem(BPoly a, const BPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int da = a.degree();
        a = a.scaled(lc_x(b)) - b.shifted(da - db).scaled(lc_x(a));
        if (!a.is_zero() && a.degree() == da)
            throw internal_error("pseudo_rem: degree did not drop");
    }
    return a;
}

}  // namespace detail

// Gcd in Q[t][x] (primitive PRS), returned primitive in t with unit
// normalization left to the caller.
inline BPoly gcd_x(BPoly a, BPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_t(b);
    if (b.is_zero()) return primitive_t(a);
    UPolyQ ca = content_t(a), cb = content_t(b);
    UPolyQ cg = gcd_monic(ca, cb);
    a = primitive_t(a);
    b = primitive_t(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        BPoly r = detail::pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_t(r);
    }
    auto [unit, prim] = primitive_int(a.scaled(cg));
    (void)unit;
    return prim;
}

// Separability of p as an element of Q(t)[x].
inline bool squarefree_x(const BPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return gcd_x(p, derivative(p)).degree() == 0;
}

// Squarefree decomposition in x over Q(t) (Yun): p ~ prod out[i].first^{out[i].second}
// up to a factor of t-content and a rational unit. Parts are primitive in t.
inline std::vector<std::pair<BPoly, unsigned>> yun_x(const BPoly& p_in) {
    if (p_in.is_zero()) throw domain_error("yun_x: zero polynomial");
    BPoly f = primitive_t(p_in);
    std::vector<std::pair<BPoly, unsigned>> out;
    if (f.degree() == 0) return out;
    BPoly g = gcd_x(f, derivative(f));
    BPoly w = primitive_t(divide_x_exact(f, g));
    unsigned i = 1;
    while (w.degree() > 0) {
        BPoly y = gcd_x(w, g);
        BPoly z = primitive_t(divide_x_exact(w, y));
        if (z.degree() > 0) out.emplace_back(primitive_int(z).second, i);
        w = std::move(y);
        g = primitive_t(divide_x_exact(g, w));
        ++i;
    }
    return out;
}

}  // namespace hitkit
