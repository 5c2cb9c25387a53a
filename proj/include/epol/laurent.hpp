#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace epol {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Error type for all contract violations (inexact division, bad fields, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact Laurent polynomial in the single variable q with rational coefficients.
///
/// Canonical form: the term map never stores a zero coefficient, so structural
/// equality of the maps is semantic equality of the polynomials. Values are
/// immutable in spirit: all operations return fresh polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}
    LaurentPoly(const Rational& constant);

    /// The monomial c * q^exp.
    static LaurentPoly term(const Rational& c, int exp);
    /// The monomial q^exp.
    static LaurentPoly q(int exp = 1) { return term(1, exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    /// True when every coefficient is an integer.
    bool is_integral() const;
    bool is_constant() const;

    int min_exp() const;
    int max_exp() const;
    /// Coefficient of q^exp (zero when absent).
    Rational coeff(int exp) const;
    const std::map<int, Rational>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    /// q^e for e >= 0; negative e requires a monomial (units of the Laurent
    /// ring), otherwise throws "non-invertible".
    LaurentPoly pow(int e) const;

    /// Exact division: returns c with (*this) == b * c, throws
    /// "inexact division" when no such Laurent polynomial exists.
    LaurentPoly divide_exact(const LaurentPoly& b) const;
    bool divisible_by(const LaurentPoly& b) const;

    /// Exact evaluation at q = q0. q0 = 0 is only admissible when no
    /// negative exponents are present.
    Rational evaluate(const Rational& q0) const;

    /// Text form, e.g. "1/2*q^3 - 2*q + 1"; parse() round-trips it exactly.
    std::string text() const;
    static LaurentPoly parse(const std::string& s);

private:
    void add_term(int exp, const Rational& c);
    std::map<int, Rational> terms_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
    return LaurentPoly::term(c, 0) * p;
}

inline LaurentPoly pow(const LaurentPoly& a, int e) { return a.pow(e); }
inline LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    return a.divide_exact(b);
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Parses "p" or "p/r" into an exact rational; rejects r = 0.
Rational parse_rational(const std::string& s);
std::string rational_text(const Rational& r);

}  // namespace epol
