#include "epol/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace epol {

LaurentPoly::LaurentPoly(const Rational& constant) {
    add_term(0, constant);
}

LaurentPoly LaurentPoly::term(const Rational& c, int exp) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

void LaurentPoly::add_term(int exp, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentPoly::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (denominator(c) != 1) return false;
    return true;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw Error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw Error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) {
        if (!is_monomial()) throw Error("non-invertible: negative power of a non-monomial");
        const auto& [exp, c] = *terms_.begin();
        Rational inv = Rational(1) / c;
        LaurentPoly r(1);
        LaurentPoly unit = term(inv, -exp);
        for (int i = 0; i < -e; ++i) r = r * unit;
        return r;
    }
    LaurentPoly r(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& b) const {
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (is_zero()) return LaurentPoly();
    // q is a unit: shift both operands to ordinary polynomials and divide there.
    const int shift_a = min_exp();
    const int shift_b = b.min_exp();
    std::map<int, Rational> rem;
    for (const auto& [e, c] : terms_) rem.emplace(e - shift_a, c);
    std::map<int, Rational> div;
    for (const auto& [e, c] : b.terms_) div.emplace(e - shift_b, c);

    const int deg_b = div.rbegin()->first;
    const Rational lead_b = div.rbegin()->second;
    LaurentPoly quot;
    while (!rem.empty() && rem.rbegin()->first >= deg_b) {
        const int e = rem.rbegin()->first - deg_b;
        const Rational c = rem.rbegin()->second / lead_b;
        quot.add_term(e + shift_a - shift_b, c);
        for (const auto& [eb, cb] : div) {
            auto it = rem.find(eb + e);
            Rational nc = (it == rem.end() ? Rational(0) : it->second) - c * cb;
            if (it != rem.end()) rem.erase(it);
            if (nc != 0) rem.emplace(eb + e, nc);
        }
    }
    if (!rem.empty()) throw Error("inexact division");
    return quot;
}

bool LaurentPoly::divisible_by(const LaurentPoly& b) const {
    try {
        (void)divide_exact(b);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
    if (q0 == 0) {
        if (!is_zero() && min_exp() < 0)
            throw Error("evaluation at q = 0 with negative exponents present");
        return coeff(0);
    }
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational p = 1;
        const Rational base = e >= 0 ? q0 : Rational(1) / q0;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
        acc += c * p;
    }
    return acc;
}

std::string rational_text(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string LaurentPoly::text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending exponents.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (e == 0) {
            os << rational_text(c);
        } else {
            if (c != 1) os << rational_text(c) << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.text();
}

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw Error("empty rational literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(t));
        Integer num(t.substr(0, slash));
        Integer den(t.substr(slash + 1));
        if (den == 0) throw Error("rational with zero denominator");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw Error(std::string("bad rational literal '") + s + "': " + e.what());
    }
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

int parse_int(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw Error("expected integer in polynomial at position " + std::to_string(start));
    return std::stoi(c.s.substr(start, c.i - start));
}

Rational parse_unsigned_rational(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw Error("expected number in polynomial at position " + std::to_string(start));
    std::string num = c.s.substr(start, c.i - start);
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        c.skip_ws();
        size_t dstart = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == dstart) throw Error("expected denominator in polynomial");
        return parse_rational(num + "/" + c.s.substr(dstart, c.i - dstart));
    }
    return parse_rational(num);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s) {
    Cursor c{s};
    LaurentPoly result;
    bool any = false;
    while (!c.done()) {
        int sign = 1;
        while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
            if (c.peek() == '-') sign = -sign;
            ++c.i;
        }
        if (c.done()) throw Error("trailing sign in polynomial '" + s + "'");
        Rational coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = parse_unsigned_rational(c);
            have_coef = true;
            if (!c.done() && c.peek() == '*') ++c.i;
        }
        int exp = 0;
        if (!c.done() && c.peek() == 'q') {
            ++c.i;
            exp = 1;
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                exp = parse_int(c);
            }
        } else if (!have_coef) {
            throw Error("unexpected character in polynomial '" + s + "' at position " +
                        std::to_string(c.i));
        }
        result.add_term(exp, sign * coef);
        any = true;
    }
    if (!any) throw Error("empty polynomial text");
    return result;
}

}  // namespace epol
