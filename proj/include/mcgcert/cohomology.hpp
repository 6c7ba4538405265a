#pragma once

// Degree <= 4 integral cohomology of the classifying spaces of Z/n, Q8 and
// the binary icosahedral group, with just enough ring structure to evaluate
// Whitney products. The headline computation is the order of the second
// Chern class of the 14-dimensional representation, assembled from its
// Sylow restrictions through the mod-8 / mod-3 / mod-5 coordinates of Z/120.

#include "mcgcert/abelian.hpp"
#include "mcgcert/characters.hpp"
#include "mcgcert/modint.hpp"

#include <json.hpp>

namespace mcgcert {

// Element of H^2 ⊕ H^4 of BZ/n: deg2 * v + deg4 * v^2.
struct CyclicCohClass {
    ModInt deg2, deg4;

    CyclicCohClass(int modulus, const BigInt& v_coeff, const BigInt& v2_coeff)
        : deg2(v_coeff, modulus), deg4(v2_coeff, modulus) {}

    int modulus() const { return int(to_ll(deg2.modulus())); }

    bool operator==(const CyclicCohClass& o) const = default;

    CyclicCohClass operator+(const CyclicCohClass& o) const;
    // ring product truncated above degree 4: only deg2*deg2 survives
    CyclicCohClass operator*(const CyclicCohClass& o) const;
};

// Element of H^2 ⊕ H^4 of BQ8: a, b are the mod-2 degree-2 generators,
// u the mod-8 degree-4 generator. Relations: 2a = 2b = 0, ab = a^2 = b^2 = 0,
// 8u = 0.
struct Q8CohClass {
    ModInt a, b;  // mod 2
    ModInt u;     // mod 8

    Q8CohClass(const BigInt& a_, const BigInt& b_, const BigInt& u_)
        : a(a_, 2), b(b_, 2), u(u_, 8) {}

    bool operator==(const Q8CohClass& o) const = default;

    Q8CohClass operator+(const Q8CohClass& o) const;
    // every product of positive-degree classes dies: deg2*deg2 = 0 by the
    // relations, everything else is truncated
    Q8CohClass operator*(const Q8CohClass& o) const;
};

// Chern data of a representation: c1 in degree 2, c2 in degree 4, wrapped in
// the corresponding truncated ring element.
template <class Ring>
struct ChernPair {
    Ring c1, c2;

    bool operator==(const ChernPair& o) const = default;

    // total-class product (1 + c1 + c2)(1 + c1' + c2') truncated
    ChernPair whitney_product(const ChernPair& o) const {
        return {c1 + o.c1, c2 + o.c2 + c1 * o.c1};
    }
};

// c1 = e1(residues), c2 = e2(residues) of the Chern roots r-with-multiplicity
// m_r, reduced mod n.
ChernPair<CyclicCohClass> chern_of_cyclic_rep(const CyclicDecomposition& d);

// Whitney product of (1+a)^ma (1+b)^mb (1+a+b)^mab (1+u)^mU.
ChernPair<Q8CohClass> chern_of_q8_rep(const Q8Decomposition& d);

// Element of H^4 of the binary icosahedral classifying space, as the triple
// of restrictions to the three Sylow subgroups; equivalently Z/120 by CRT.
struct GhatH4 {
    ModInt r8, r3, r5;

    GhatH4(const BigInt& m8, const BigInt& m3, const BigInt& m5)
        : r8(m8, 8), r3(m3, 3), r5(m5, 5) {}

    static GhatH4 from_mod120(const BigInt& r);
    BigInt mod120() const;

    bool operator==(const GhatH4& o) const = default;

    nlohmann::json to_json() const;
};

// Order of the element: lcm of the additive orders of the components.
BigInt crt_order(const GhatH4& x);

// Assembles the triple of c2-restrictions of the representation with the
// given character (defined on the whole 120-element group).
GhatH4 c2_restriction_triple(const CharacterVector& chi);

// Order of the c2-triple of the 14-dimensional holomorphic representation.
BigInt certify_order24();
// The same pipeline on the 28-dimensional topological representation.
BigInt c2_order_complex_variant();

// Hom(h3, Z/24) ⊕ Ext(h2, Z/24): the degree-3 cohomology with Z/24
// coefficients by universal coefficients.
FGAbelianGroup uct_h3_with_z24(const FGAbelianGroup& h2, const FGAbelianGroup& h3);

// Degree-3 homology of the binary icosahedral classifying space: cyclic of
// order 120, the group of GhatH4 elements.
FGAbelianGroup ghat_h3_homology();

}  // namespace mcgcert
