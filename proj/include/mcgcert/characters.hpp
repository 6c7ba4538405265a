#pragma once

// Characters of the group action on the first cohomology of the surface.
// The topological character comes from the Lefschetz fixed-point theorem,
// the holomorphic one from the Atiyah-Bott formula; each is decomposed over
// the cyclic subgroups and the Sylow-2 subgroup by character orthogonality.

#include "mcgcert/group.hpp"
#include "mcgcert/surface.hpp"

#include <json.hpp>

namespace mcgcert {

// Trace on H^1(F; C): 2*genus at the identity, else 2 - Fix(g).
Cyclotomic char_h1_complex_at(int element, const SurfaceModel& s);

// Trace on H^1(F; O): genus at the identity, else 1 - Σ 1/(1 - rotation)
// over the fixed points on the cover.
Cyclotomic char_h1_holomorphic_at(int element, const SurfaceModel& s);

// Whole-group character vectors (indexed like the group elements).
CharacterVector char_h1_complex(const SurfaceModel& s);
CharacterVector char_h1_holomorphic(const SurfaceModel& s);

// Restriction along a subgroup whose elements all lie in the big group.
CharacterVector restrict_character(const GroupModel& sub, const GroupModel& big,
                                   const CharacterVector& chi);

// Multiplicities of the characters r -> exp(2*pi*i*r/n) in a representation
// of the cyclic group generated by a chosen element.
struct CyclicDecomposition {
    int modulus = 0;
    std::vector<BigInt> multiplicities;

    bool operator==(const CyclicDecomposition& o) const = default;
    nlohmann::json to_json() const;
};

// gen indexes an element of the 120-element group; chi is defined on the
// whole group. Throws ConsistencyError if any multiplicity fails to be a
// non-negative integer.
CyclicDecomposition decompose_cyclic(int gen, const CharacterVector& chi);

// Multiplicities over the quaternion group: the four linear characters
// through the Klein quotient and the 2-dimensional representation U.
struct Q8Decomposition {
    BigInt m_trivial, m_sign_a, m_sign_b, m_sign_ab, m_u;

    bool operator==(const Q8Decomposition& o) const = default;
    nlohmann::json to_json() const;
};

// q8 is any 8-element quaternion-type group model; chi lives on it.
Q8Decomposition decompose_q8(const GroupModel& q8, const CharacterVector& chi);

}  // namespace mcgcert
