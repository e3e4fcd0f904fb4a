#pragma once

#include <optional>
#include <utility>

#include "resultant.hpp"

namespace hitkit {

// Element of Q(t), kept in lowest terms with a monic denominator.
struct RatFunc {
    UPolyQ num;
    UPolyQ den{Rat(1)};

    RatFunc() = default;
    RatFunc(UPolyQ n, UPolyQ d) {
        if (d.is_zero()) throw domain_error("RatFunc: zero denominator");
        if (n.is_zero()) {
            num = UPolyQ();
            den = UPolyQ(Rat(1));
            return;
        }
        UPolyQ g = gcd_monic(n, d);
        n = divexact(n, g);
        d = divexact(d, g);
        Rat l = d.leading();
        num = n.scaled(Rat(1) / l);
        den = d.scaled(Rat(1) / l);
    }
    explicit RatFunc(UPolyQ n) : num(std::move(n)) {}

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFunc&) const = default;
};

inline RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.num, a.den * b.den);
}

inline RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw domain_error("RatFunc: division by zero");
    return RatFunc(a.num * b.den, a.den * b.num);
}

// Monic polynomial square root, if one exists (via squarefree decomposition).
inline std::optional<UPolyQ> monic_sqrt(const UPolyQ& f) {
    if (f.is_zero() || f.leading() != 1) return std::nullopt;
    if (f.degree() == 0) return UPolyQ(Rat(1));
    if (f.degree() % 2) return std::nullopt;
    auto [unit, parts] = squarefree_decomposition(f);
    (void)unit;
    UPolyQ root(Rat(1));
    for (auto& [g, e] : parts) {
        if (e % 2) return std::nullopt;
        root = root * g.pow(e / 2);
    }
    return root;
}

// Tests whether r is a square in Q(t); returns a witness square root when so.
inline std::optional<RatFunc> is_square_ratfunc(const RatFunc& r) {
    if (r.is_zero()) throw domain_error("is_square_ratfunc: zero input");
    Rat c = r.num.leading();  // den is monic
    UPolyQ n = monic(r.num);
    Rat croot;
    if (!rat_is_square(c, &croot)) return std::nullopt;
    auto nroot = monic_sqrt(n);
    if (!nroot) return std::nullopt;
    auto droot = monic_sqrt(r.den);
    if (!droot) return std::nullopt;
    return RatFunc(nroot->scaled(croot), *droot);
}

inline std::optional<RatFunc> is_square_ratfunc(const UPolyQ& f) {
    return is_square_ratfunc(RatFunc(f));
}

}  // namespace hitkit
