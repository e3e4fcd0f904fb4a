#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "poly.hpp"

namespace hitkit {

// All rational roots of f, each once, ascending. Clears denominators to a
// primitive integer polynomial and enumerates divisors of the trailing and
// leading coefficients.
inline std::vector<Rat> rational_roots(const UPolyQ& f_in) {
    if (f_in.is_zero()) throw domain_error("rational_roots: zero polynomial");
    std::set<Rat> roots;
    UPolyQ f = primitive_int(f_in).second;
    // strip powers of the variable
    int shift = 0;
    while (f.coeff(shift) == 0) ++shift;
    if (shift > 0) {
        roots.insert(Rat(0));
        std::vector<Rat> c(f.coeffs().begin() + shift, f.coeffs().end());
        f = UPolyQ::from_coeffs(std::move(c));
    }
    if (f.degree() >= 1) {
        Int trailing = f.coeff(0).get_num();
        Int leading = f.leading().get_num();
        for (const Int& dt : divisors(trailing)) {
            for (const Int& dl : divisors(leading)) {
                Rat c(dt, dl);
                c.canonicalize();
                if (eval_at(f, c) == 0) roots.insert(c);
                if (eval_at(f, -c) == 0) roots.insert(-c);
            }
        }
    }
    return std::vector<Rat>(roots.begin(), roots.end());
}

}  // namespace hitkit
