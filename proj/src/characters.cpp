#include "mcgcert/characters.hpp"

namespace mcgcert {

Cyclotomic char_h1_complex_at(int element, const SurfaceModel& s) {
    const GroupModel& g = binary_icosahedral();
    if (element == g.identity_index()) return Cyclotomic(2 * s.genus);
    FixedPointReport rep = fixed_points_on_surface(element, s);
    return Cyclotomic(2 - rep.total);
}

Cyclotomic char_h1_holomorphic_at(int element, const SurfaceModel& s) {
    const GroupModel& g = binary_icosahedral();
    if (element == g.identity_index()) return Cyclotomic(s.genus);
    FixedPointReport rep = fixed_points_on_surface(element, s);
    Cyclotomic sum;
    for (const FixedPointRecord& r : rep.records) {
        if (r.lifts_fixed == 0) continue;
        sum += Rational(r.lifts_fixed) * (Cyclotomic::one() - r.rotation).inverse();
    }
    return Cyclotomic::one() - sum;
}

namespace {

CharacterVector build_character(const SurfaceModel& s,
                                Cyclotomic (*at)(int, const SurfaceModel&)) {
    const GroupModel& g = binary_icosahedral();
    CharacterVector chi;
    chi.values.reserve(size_t(g.order()));
    for (int i = 0; i < g.order(); ++i) chi.values.push_back(at(i, s));
    return chi;
}

}  // namespace

// Both characters of the canonical model are memoized; several certificates
// recompute them independently.
CharacterVector char_h1_complex(const SurfaceModel& s) {
    if (&s == &SurfaceModel::standard()) {
        static const CharacterVector cached = build_character(s, char_h1_complex_at);
        return cached;
    }
    return build_character(s, char_h1_complex_at);
}

CharacterVector char_h1_holomorphic(const SurfaceModel& s) {
    if (&s == &SurfaceModel::standard()) {
        static const CharacterVector cached = build_character(s, char_h1_holomorphic_at);
        return cached;
    }
    return build_character(s, char_h1_holomorphic_at);
}

CharacterVector restrict_character(const GroupModel& sub, const GroupModel& big,
                                   const CharacterVector& chi) {
    CharacterVector out;
    out.values.reserve(size_t(sub.order()));
    for (int i = 0; i < sub.order(); ++i) {
        int j = big.index_of(sub.element(i));
        if (j < 0) throw Error("restrict_character: element not in the big group");
        out.values.push_back(chi.at(j));
    }
    return out;
}

namespace {

BigInt integral_multiplicity(const Cyclotomic& value, const std::string& what) {
    if (!value.is_rational())
        throw ConsistencyError(what + ": multiplicity is irrational: " + value.to_string());
    Rational r = value.rational_value();
    if (!is_integer(r) || r < 0)
        throw ConsistencyError(what + ": multiplicity " + to_string(r) +
                               " is not a non-negative integer");
    return to_integer(r);
}

}  // namespace

CyclicDecomposition decompose_cyclic(int gen, const CharacterVector& chi) {
    const GroupModel& g = binary_icosahedral();
    int n = g.element_order(gen);
    Cyclotomic zeta = Cyclotomic::root_of_unity(n);
    Rational inv_n(1, n);

    // character values on the powers of the generator
    std::vector<Cyclotomic> values;
    int p = g.identity_index();
    for (int k = 0; k < n; ++k) {
        values.push_back(chi.at(p));
        p = g.multiply(p, gen);
    }

    CyclicDecomposition dec;
    dec.modulus = n;
    for (int r = 0; r < n; ++r) {
        Cyclotomic m;
        for (int k = 0; k < n; ++k) m += values[size_t(k)] * zeta.pow(long(-r) * k);
        m = inv_n * m;
        dec.multiplicities.push_back(integral_multiplicity(m, "cyclic decomposition"));
    }
    return dec;
}

nlohmann::json CyclicDecomposition::to_json() const {
    nlohmann::json j;
    j["modulus"] = modulus;
    nlohmann::json mults = nlohmann::json::array();
    for (const BigInt& m : multiplicities) mults.push_back(to_ll(m));
    j["multiplicities"] = mults;
    return j;
}

Q8Decomposition decompose_q8(const GroupModel& q8, const CharacterVector& chi) {
    if (q8.order() != 8) throw Error("decompose_q8: group does not have order 8");
    ConjugacyClasses cc = conjugacy_classes(q8);
    if (cc.count() != 5) throw Error("decompose_q8: expected 5 conjugacy classes");

    // classes: {1}, {-1}, and three 2-element classes {±a}, {±b}, {±ab}
    int id_class = cc.class_of[size_t(q8.identity_index())];
    int minus_class = -1;
    std::vector<int> pair_classes;
    for (int c = 0; c < 5; ++c) {
        if (c == id_class) continue;
        if (cc.sizes[size_t(c)] == 1)
            minus_class = c;
        else
            pair_classes.push_back(c);
    }
    if (minus_class < 0 || pair_classes.size() != 3)
        throw Error("decompose_q8: class structure is not quaternion-like");

    // rows of the character table per class, in the order
    // (identity, -1, pair0, pair1, pair2)
    auto table_value = [&](int rep, int cls) -> Cyclotomic {
        if (rep == 4) {  // the 2-dimensional representation U
            if (cls == id_class) return Cyclotomic(2);
            if (cls == minus_class) return Cyclotomic(-2);
            return Cyclotomic::zero();
        }
        if (rep == 0) return Cyclotomic::one();
        // sign character #j is +1 on pair_classes[j-1], -1 on the others
        if (cls == id_class || cls == minus_class) return Cyclotomic::one();
        return cls == pair_classes[size_t(rep - 1)] ? Cyclotomic::one() : -Cyclotomic::one();
    };

    Rational inv8(1, 8);
    BigInt out[5];
    for (int rep = 0; rep < 5; ++rep) {
        Cyclotomic m;
        for (int i = 0; i < 8; ++i)
            m += chi.at(i) * table_value(rep, cc.class_of[size_t(i)]).conj();
        m = inv8 * m;
        out[rep] = integral_multiplicity(m, "quaternion-group decomposition");
    }
    return {out[0], out[1], out[2], out[3], out[4]};
}

nlohmann::json Q8Decomposition::to_json() const {
    nlohmann::json j;
    j["q8"] = {to_ll(m_trivial), to_ll(m_sign_a), to_ll(m_sign_b), to_ll(m_sign_ab), to_ll(m_u)};
    return j;
}

}  // namespace mcgcert
