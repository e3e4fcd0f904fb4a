#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "bpoly.hpp"

namespace hitkit {

namespace detail {

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' natural)?
//   atom   := rational | 't' | 'x' | '(' expr ')'
//   rational := digits ('/' digits)?
// '^' binds tighter than '*', which binds tighter than '+'/'-'.
// Implicit multiplication is not allowed.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    BPoly parse() {
        BPoly e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    BPoly parse_expr() {
        BPoly acc = parse_term();
        for (;;) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    BPoly parse_term() {
        BPoly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    BPoly parse_factor() {
        if (eat('-')) return BPoly() - parse_factor();
        BPoly base = parse_atom();
        if (eat('^')) {
            unsigned long e = parse_natural();
            return base.pow(e);
        }
        return base;
    }

    unsigned long parse_natural() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected exponent");
        Int v(std::string(s_.substr(start, pos_ - start)));
        if (v > 4096) fail("exponent too large");
        return v.get_ui();
    }

    BPoly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            BPoly e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return BPoly(UPolyQ(parse_rational()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "t") return bpoly_t();
            if (name == "x") return bpoly_x();
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail("expected a number, variable, or '('");
    }

    Rat parse_rational() {
        auto digits = [&]() -> Int {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected integer");
            return Int(std::string(s_.substr(start, pos_ - start)));
        };
        Int num = digits();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            Int den = digits();
            if (den == 0) fail("zero denominator");
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }
};

}  // namespace detail

// Parses an expression in variables t, x into a canonically expanded BPoly.
inline BPoly parse_bipoly(std::string_view text) { return detail::ExprParser(text).parse(); }

inline UPolyQ parse_upoly_t(std::string_view text) {
    BPoly p = parse_bipoly(text);
    if (deg_x(p) > 0) throw parse_error("expected a polynomial in t only", 0);
    return p.coeff(0);
}

namespace detail {

inline void render_term(std::string& out, const Rat& c, int et, int ex) {
    bool first = out.empty();
    Rat a = c;
    if (first) {
        if (a < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
    }
    bool coeff_is_one = (a == 1) && (et > 0 || ex > 0);
    std::string vars;
    if (et > 0) vars += (et == 1) ? "t" : "t^" + std::to_string(et);
    if (ex > 0) {
        if (!vars.empty()) vars += "*";
        vars += (ex == 1) ? "x" : "x^" + std::to_string(ex);
    }
    if (!coeff_is_one) {
        out += rat_to_string(a);
        if (!vars.empty()) out += "*";
    }
    out += vars;
}

}  // namespace detail

// Canonical renderer matching the parser grammar. Terms in descending x,
// then descending t degree. render(parse(render(p))) == render(p).
inline std::string render(const BPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const UPolyQ& ct = p.coeff(i);
        for (int j = ct.degree(); j >= 0; --j) {
            if (ct.coeff(j) == 0) continue;
            detail::render_term(out, ct.coeff(j), j, i);
        }
    }
    return out;
}

inline std::string render(const UPolyQ& p) { return render(bpoly_of_t(p)); }

}  // namespace hitkit
