#pragma once

// Todd-genus arithmetic on characteristic numbers. Manifolds never appear;
// an argument here is just the pair of numbers ⟨c1², [M]⟩ and ⟨c2(TM), [M]⟩.

#include "mcgcert/numeric.hpp"

namespace mcgcert {

struct ToddData {
    BigInt c1_squared_number;
    BigInt c2_tangent_number;
    int dimension;  // 4 or 6

    ToddData(BigInt c1sq, BigInt c2, int dim)
        : c1_squared_number(std::move(c1sq)), c2_tangent_number(std::move(c2)), dimension(dim) {
        if (dim != 4 && dim != 6) throw Error("ToddData: dimension must be 4 or 6");
    }
};

// td2 = (c2 + c1²)/12 evaluated on the fundamental class.
inline Rational todd_genus_dim4(const BigInt& c1sq, const BigInt& c2) {
    return Rational(c2 + c1sq, 12);
}

// td3 = c1·c2/24; with a split tangent bundle c2 vanishes, so this is zero
// whatever the c1³ number is.
inline Rational todd_genus_dim6_split(const BigInt& /*c1cube*/) { return Rational(0); }

inline Rational todd_genus(const ToddData& d) {
    return d.dimension == 4 ? todd_genus_dim4(d.c1_squared_number, d.c2_tangent_number)
                            : todd_genus_dim6_split(d.c1_squared_number);
}

// Value of a·c1² + b·c2 on the quaternionic Hopf generator of π₄(BU): the
// 4-sphere has no degree-2 cohomology, and c2 evaluates to 1 on it.
inline BigInt c2_on_pi4_bu(const BigInt& a, const BigInt& b) {
    return a * 0 + b;
}

}  // namespace mcgcert
