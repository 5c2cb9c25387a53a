#pragma once

#include "epol/laurent.hpp"

namespace epol {

/// Pair ([X]^+, [X]^-) attached to a variety with a Z2-action: the class of
/// the quotient and its complement inside the class of X.
struct EquivariantClass {
    LaurentPoly plus;
    LaurentPoly minus;

    LaurentPoly total() const { return plus + minus; }

    /// Trivial action: the quotient is X itself.
    static EquivariantClass trivial(const LaurentPoly& cls) { return {cls, LaurentPoly()}; }

    bool operator==(const EquivariantClass& o) const = default;
};

/// Equivariant class of the product with the simultaneous Z2-action:
/// plus = A+B+ + A-B-, minus = A+B- + A-B+.
EquivariantClass z2_product(const EquivariantClass& a, const EquivariantClass& b);

/// n-fold simultaneous power, n >= 1. Closed form:
/// plus = (T^n + D^n)/2, minus = (T^n - D^n)/2 with T = total, D = plus - minus.
EquivariantClass z2_power(const EquivariantClass& x, int n);

}  // namespace epol
