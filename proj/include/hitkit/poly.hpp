#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "numbers.hpp"

namespace hitkit {

template <class R>
class Poly;

inline bool ring_zero(const Rat& x) { return x == 0; }
template <class R>
bool ring_zero(const Poly<R>& p);

template <class R>
struct RingOne {
    static R get() { return R(1); }
};
template <class R>
struct RingOne<Poly<R>> {
    static Poly<R> get() { return Poly<R>(RingOne<R>::get()); }
};

// Dense univariate polynomial over a commutative ring R.
// Coefficient i is the coefficient of X^i; the top coefficient is nonzero.
template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(R c) {
        if (!ring_zero(c)) c_.push_back(std::move(c));
    }
    static Poly from_coeffs(std::vector<R> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }
    static Poly variable() {
        Poly p;
        p.c_ = {R(0), RingOne<R>::get()};
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& coeff(int i) const {
        static const R kZero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[i];
    }
    const R& leading() const { return c_.back(); }

    Poly operator-() const {
        Poly p = *this;
        for (auto& x : p.c_) x = -x;
        return p;
    }
    Poly operator+(const Poly& o) const {
        std::vector<R> c(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] = c[i] + c_[i];
            if (i < o.c_.size()) c[i] = c[i] + o.c_[i];
        }
        return from_coeffs(std::move(c));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<R> c(c_.size() + o.c_.size() - 1, R(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
        return from_coeffs(std::move(c));
    }
    Poly scaled(const R& s) const {
        Poly p;
        if (ring_zero(s)) return p;
        p.c_ = c_;
        for (auto& x : p.c_) x = x * s;
        p.trim();
        return p;
    }
    // Multiplication by X^k.
    Poly shifted(int k) const {
        if (is_zero()) return Poly();
        Poly p;
        p.c_.assign(c_.size() + k, R(0));
        for (size_t i = 0; i < c_.size(); ++i) p.c_[i + k] = c_[i];
        return p;
    }
    Poly pow(unsigned e) const {
        Poly acc(RingOne<R>::get());
        Poly b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Poly&) const = default;

private:
    std::vector<R> c_;
    void trim() {
        while (!c_.empty() && ring_zero(c_.back())) c_.pop_back();
    }
};

template <class R>
bool ring_zero(const Poly<R>& p) {
    return p.is_zero();
}

using UPolyQ = Poly<Rat>;
using BPoly = Poly<UPolyQ>;

template <class R>
R eval(const Poly<R>& p, const R& at) {
    R acc{};
    for (int i = p.degree(); i >= 0; --i) acc = acc * at + p.coeff(i);
    return acc;
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
    if (p.degree() < 1) return Poly<R>();
    std::vector<R> c(p.degree());
    for (int i = 1; i <= p.degree(); ++i) c[i - 1] = p.coeff(i) * R(i);
    return Poly<R>::from_coeffs(std::move(c));
}

// ---- field-coefficient (Q) helpers -------------------------------------

inline std::pair<UPolyQ, UPolyQ> divrem(const UPolyQ& a, const UPolyQ& b) {
    if (b.is_zero()) throw domain_error("divrem: division by zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {UPolyQ(), a};
    std::vector<Rat> quo(dq + 1, Rat(0));
    for (int i = a.degree(); i >= db; --i) {
        Rat c = rem[i] / b.leading();
        if (c == 0) continue;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
    }
    return {UPolyQ::from_coeffs(std::move(quo)), UPolyQ::from_coeffs(std::move(rem))};
}

inline UPolyQ operator/(const UPolyQ& a, const UPolyQ& b) { return divrem(a, b).first; }
inline UPolyQ operator%(const UPolyQ& a, const UPolyQ& b) { return divrem(a, b).second; }

inline UPolyQ divexact(const UPolyQ& a, const UPolyQ& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw internal_error("divexact: inexact polynomial division");
    return q;
}

inline UPolyQ monic(const UPolyQ& f) {
    if (f.is_zero()) return f;
    return f.scaled(Rat(1) / f.leading());
}

inline bool is_monic(const UPolyQ& f) { return !f.is_zero() && f.leading() == 1; }

inline UPolyQ gcd_monic(UPolyQ a, UPolyQ b) {
    while (!b.is_zero()) {
        UPolyQ r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Rat eval_at(const UPolyQ& p, const Rat& t) {
    Rat acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + p.coeff(i);
    return acc;
}

// Clears denominators and integer content: f = unit * primitive with
// primitive having coprime integer coefficients and positive leading one.
inline std::pair<Rat, UPolyQ> primitive_int(const UPolyQ& f) {
    if (f.is_zero()) return {Rat(1), f};
    Int den_lcm = 1;
    for (const Rat& c : f.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    Int num_gcd = 0;
    for (const Rat& c : f.coeffs()) num_gcd = gcd(num_gcd, Int(c.get_num() * (den_lcm / c.get_den())));
    Rat unit = make_rat(num_gcd, den_lcm);
    if (f.leading() < 0) unit = -unit;
    std::vector<Rat> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) x /= unit;
    return {unit, UPolyQ::from_coeffs(std::move(c))};
}

inline bool has_integer_coeffs(const UPolyQ& f) {
    for (const Rat& c : f.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

inline Int max_abs_num(const UPolyQ& f) {
    Int m = 0;
    for (const Rat& c : f.coeffs()) m = std::max(m, Int(abs(c.get_num())));
    return m;
}

// Composition f(g).
inline UPolyQ compose(const UPolyQ& f, const UPolyQ& g) {
    UPolyQ acc;
    for (int i = f.degree(); i >= 0; --i) acc = acc * g + UPolyQ(f.coeff(i));
    return acc;
}

// Squarefree decomposition over Q (Yun). Returns (g_i, e_i) with f = unit * prod g_i^{e_i},
// g_i monic squarefree pairwise coprime, plus the unit.
inline std::pair<Rat, std::vector<std::pair<UPolyQ, unsigned>>> squarefree_decomposition(
    const UPolyQ& f) {
    if (f.is_zero()) throw domain_error("squarefree_decomposition: zero polynomial");
    Rat unit = f.leading();
    UPolyQ g = monic(f);
    std::vector<std::pair<UPolyQ, unsigned>> out;
    if (g.degree() == 0) return {unit, out};
    UPolyQ gp = derivative(g);
    UPolyQ a = gcd_monic(g, gp);
    UPolyQ b = divexact(g, a);
    UPolyQ c = divexact(gp, a);
    UPolyQ d = c - derivative(b);
    unsigned i = 1;
    while (!(b.degree() == 0)) {
        UPolyQ t = gcd_monic(b, d);
        if (t.degree() > 0) out.emplace_back(t, i);
        b = divexact(b, t);
        c = divexact(d, t);
        d = c - derivative(b);
        ++i;
    }
    return {unit, out};
}

inline bool is_squarefree(const UPolyQ& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    return gcd_monic(f, derivative(f)).degree() == 0;
}

// Exact interpolation through distinct nodes (Newton's divided differences).
inline UPolyQ interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    size_t n = points.size();
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - j].first);
            if (i == j) break;
        }
    UPolyQ acc(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        UPolyQ lin = UPolyQ::from_coeffs({-points[i].first, Rat(1)});
        acc = acc * lin + UPolyQ(dd[i]);
    }
    return acc;
}

// Canonical total order: by degree, then coefficients from the top down.
inline int cmp_rat(const Rat& a, const Rat& b) { return cmp(a, b); }

inline int cmp_canonical(const UPolyQ& a, const UPolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp_rat(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace hitkit
