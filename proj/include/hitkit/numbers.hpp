#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hitkit {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical fraction; use instead of the raw two-argument Rat constructor,
// which does not reduce.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

// Floor of sqrt; input must be nonnegative.
inline Int int_sqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) *root = int_sqrt(n);
    return true;
}

inline bool rat_is_square(const Rat& r, Rat* root = nullptr) {
    if (r < 0) return false;
    Int ns, ds;
    if (!is_perfect_square(r.get_num(), &ns)) return false;
    if (!is_perfect_square(r.get_den(), &ds)) return false;
    if (root) *root = Rat(ns, ds);
    return true;
}

// Residue in [0, m).
inline Int pos_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Residue in (-m/2, m/2].
inline Int balanced_mod(const Int& a, const Int& m) {
    Int r = pos_mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

inline std::optional<Int> mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
    return r;
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Primes below 2^17, sieved once.
inline const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        const uint32_t limit = 1u << 17;
        std::vector<bool> comp(limit, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i < limit; ++i) {
            if (comp[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < limit; j += i) comp[j] = true;
        }
        return out;
    }();
    return primes;
}

namespace detail {

// Brent's cycle-finding variant of Pollard rho with a deterministic
// parameter sequence. Returns a nontrivial factor of composite n.
inline Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return Int(2);
    for (Int c = 1; c < 64; ++c) {
        Int x = 2, y = 2, d = 1;
        Int count = 0;
        while (d == 1) {
            x = pos_mod(x * x + c, n);
            y = pos_mod(y * y + c, n);
            y = pos_mod(y * y + c, n);
            d = gcd(x - y, n);
            if (++count > 4'000'000) break;
        }
        if (d != 1 && d != n) return d;
    }
    throw internal_error("integer factorization stalled (factor too hard for Pollard rho)");
}

inline void factor_into(Int n, std::vector<std::pair<Int, unsigned>>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.emplace_back(n, 1u);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Factorization of |n| as sorted (prime, exponent) pairs; n must be nonzero.
inline std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n_in) {
    if (n_in == 0) throw domain_error("factor_integer: zero input");
    Int n = abs(n_in);
    std::vector<std::pair<Int, unsigned>> out;
    for (uint32_t p : small_primes()) {
        if (n == 1) break;
        if (Int(p) * p > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(Int(p), e);
    }
    if (n > 1) {
        std::vector<std::pair<Int, unsigned>> rest;
        detail::factor_into(n, rest);
        std::sort(rest.begin(), rest.end());
        // merge equal primes
        for (auto& [p, e] : rest) {
            if (!out.empty() && out.back().first == p)
                out.back().second += e;
            else
                out.emplace_back(p, e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All positive divisors of |n|, sorted ascending.
inline std::vector<Int> divisors(const Int& n) {
    auto fac = factor_integer(n);
    std::vector<Int> out{Int(1)};
    for (auto& [p, e] : fac) {
        size_t sz = out.size();
        Int pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
        }
        if (out.size() > (1u << 22)) throw cap_error("divisors: too many divisors");
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Recover a/b from residue mod `modulus` with |a|, b <= sqrt(modulus/2),
// gcd(b, modulus) = 1. Returns nullopt when no such fraction exists.
inline std::optional<Rat> rational_reconstruction(const Int& residue, const Int& modulus) {
    if (modulus <= 1) throw domain_error("rational_reconstruction: modulus must exceed 1");
    Int a = pos_mod(residue, modulus);
    Int bound = int_sqrt(modulus / 2);
    Int r0 = modulus, s0 = 0;
    Int r1 = a, s1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; s0 = s1;
        r1 = r2; s1 = s2;
    }
    Int num = r1, den = s1;
    if (den < 0) { den = -den; num = -num; }
    if (den == 0 || den > bound) return std::nullopt;
    if (gcd(num, den) != 1) return std::nullopt;
    if (gcd(den, modulus) != 1) return std::nullopt;
    if (pos_mod(num - den * a, modulus) != 0) return std::nullopt;
    return Rat(num, den);
}

inline std::string int_to_string(const Int& n) { return n.get_str(); }

inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses "a" or "a/b" with optional leading '-'.
inline Rat rat_from_string(const std::string& s) {
    size_t i = 0;
    auto fail = [&](const std::string& msg) -> Rat { throw parse_error(msg, i); };
    auto read_int = [&]() -> Int {
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits0 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits0) fail("expected integer");
        return Int(s.substr(start, i - start));
    };
    Int num = read_int();
    Int den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_int();
        if (den == 0) fail("zero denominator");
    }
    if (i != s.size()) fail("trailing characters in rational");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace hitkit
