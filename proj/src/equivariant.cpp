#include "epol/equivariant.hpp"

namespace epol {

EquivariantClass z2_product(const EquivariantClass& a, const EquivariantClass& b) {
    return {a.plus * b.plus + a.minus * b.minus, a.plus * b.minus + a.minus * b.plus};
}

EquivariantClass z2_power(const EquivariantClass& x, int n) {
    if (n < 1) throw Error("z2_power undefined for exponent < 1");
    const Rational half(1, 2);
    LaurentPoly t = x.total().pow(n);
    LaurentPoly d = (x.plus - x.minus).pow(n);
    return {half * (t + d), half * (t - d)};
}

}  // namespace epol
