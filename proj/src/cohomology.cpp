#include "mcgcert/cohomology.hpp"

namespace mcgcert {

CyclicCohClass CyclicCohClass::operator+(const CyclicCohClass& o) const {
    CyclicCohClass r = *this;
    r.deg2 = deg2 + o.deg2;
    r.deg4 = deg4 + o.deg4;
    return r;
}

CyclicCohClass CyclicCohClass::operator*(const CyclicCohClass& o) const {
    CyclicCohClass r = *this;
    r.deg2 = ModInt(0, deg2.modulus());
    r.deg4 = deg2 * o.deg2;
    return r;
}

Q8CohClass Q8CohClass::operator+(const Q8CohClass& o) const {
    Q8CohClass r = *this;
    r.a = a + o.a;
    r.b = b + o.b;
    r.u = u + o.u;
    return r;
}

Q8CohClass Q8CohClass::operator*(const Q8CohClass&) const { return {0, 0, 0}; }

ChernPair<CyclicCohClass> chern_of_cyclic_rep(const CyclicDecomposition& d) {
    int n = d.modulus;
    // elementary symmetric polynomials of the roots r taken m_r times
    BigInt e1 = 0, power_sum_2 = 0;
    for (int r = 0; r < n; ++r) {
        const BigInt& m = d.multiplicities[size_t(r)];
        e1 += m * r;
        power_sum_2 += m * r * r;
    }
    BigInt e2 = (e1 * e1 - power_sum_2) / 2;
    return {CyclicCohClass(n, e1, 0), CyclicCohClass(n, 0, e2)};
}

ChernPair<Q8CohClass> chern_of_q8_rep(const Q8Decomposition& d) {
    // (1+a)^ma (1+b)^mb (1+a+b)^mab (1+u)^mU with all deg2*deg2 products zero
    Q8CohClass c1(d.m_sign_a + d.m_sign_ab, d.m_sign_b + d.m_sign_ab, 0);
    Q8CohClass c2(0, 0, d.m_u);
    return {c1, c2};
}

GhatH4 GhatH4::from_mod120(const BigInt& r) { return {r, r, r}; }

BigInt GhatH4::mod120() const {
    // 105 ≡ (1,0,0), 40 ≡ (0,1,0), 96 ≡ (0,0,1) in (mod 8, mod 3, mod 5)
    return mod_norm(105 * r8.residue() + 40 * r3.residue() + 96 * r5.residue(), 120);
}

BigInt crt_order(const GhatH4& x) {
    return lcm(lcm(x.r8.additive_order(), x.r3.additive_order()), x.r5.additive_order());
}

nlohmann::json GhatH4::to_json() const {
    nlohmann::json j;
    j["mod8"] = to_ll(r8.residue());
    j["mod3"] = to_ll(r3.residue());
    j["mod5"] = to_ll(r5.residue());
    j["mod120"] = to_ll(mod120());
    j["order"] = to_ll(crt_order(*this));
    return j;
}

GhatH4 c2_restriction_triple(const CharacterVector& chi) {
    const GroupModel& g = binary_icosahedral();
    StandardGenerators sg = standard_generators(g);

    GroupModel syl2 = sylow_subgroup(g, 2);
    Q8Decomposition dq = decompose_q8(syl2, restrict_character(syl2, g, chi));
    ChernPair<Q8CohClass> cq = chern_of_q8_rep(dq);

    // order-3 and order-5 generators: squares of the order-6/order-10 picks
    CyclicDecomposition d3 = decompose_cyclic(g.multiply(sg.x3, sg.x3), chi);
    CyclicDecomposition d5 = decompose_cyclic(g.multiply(sg.x5, sg.x5), chi);
    ChernPair<CyclicCohClass> c3 = chern_of_cyclic_rep(d3);
    ChernPair<CyclicCohClass> c5 = chern_of_cyclic_rep(d5);

    return {cq.c2.u.residue(), c3.c2.deg4.residue(), c5.c2.deg4.residue()};
}

BigInt certify_order24() {
    const SurfaceModel& s = SurfaceModel::standard();
    return crt_order(c2_restriction_triple(char_h1_holomorphic(s)));
}

BigInt c2_order_complex_variant() {
    const SurfaceModel& s = SurfaceModel::standard();
    return crt_order(c2_restriction_triple(char_h1_complex(s)));
}

FGAbelianGroup uct_h3_with_z24(const FGAbelianGroup& h2, const FGAbelianGroup& h3) {
    return hom_group(h3, 24).direct_sum(ext_with_cyclic(h2, 24));
}

FGAbelianGroup ghat_h3_homology() {
    // the coordinate triple realizes the full cyclic group of order 120
    BigInt order = GhatH4(1, 1, 1).r8.modulus() * GhatH4(1, 1, 1).r3.modulus() *
                   GhatH4(1, 1, 1).r5.modulus();
    return FGAbelianGroup::cyclic(order);
}

}  // namespace mcgcert
