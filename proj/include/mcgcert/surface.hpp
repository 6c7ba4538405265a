#pragma once

// The genus-14 surface: a double cover of the projective line branched over
// the 30 axes of the order-4 group elements. The surface is never
// triangulated — it exists only through (half degree, branch locus, lifting
// rule), which is enough to count fixed points of every automorphism exactly.

#include "mcgcert/group.hpp"

#include <json.hpp>

#include <vector>

namespace mcgcert {

// Point of the projective line, normalized so the first nonzero coordinate
// is 1. Equality and ordering are therefore plain structural comparisons.
struct ProjPoint {
    Cyclotomic a, b;

    ProjPoint(Cyclotomic a_, Cyclotomic b_);

    bool operator==(const ProjPoint& o) const = default;
    std::strong_ordering operator<=>(const ProjPoint& o) const = default;

    std::string to_string() const;
    nlohmann::json to_json() const;
};

struct SU2Matrix {
    Cyclotomic m00, m01, m10, m11;

    Cyclotomic trace() const { return m00 + m11; }
    Cyclotomic det() const { return m00 * m11 - m01 * m10; }
    ProjPoint apply(const ProjPoint& p) const;
};

// [[w+xi, y+zi], [-y+zi, w-xi]] with i a fixed primitive 4th root of unity.
SU2Matrix su2_matrix(const Quaternion& q);

struct EigenPair {
    Cyclotomic eigenvalue;
    ProjPoint line;
};

// The two eigenvalue/eigenline pairs of a non-central unit quaternion,
// ordered by root-of-unity exponent of the eigenvalue. Throws on ±1.
std::vector<EigenPair> eigen_data(const Quaternion& q);

// Eigenlines of all order-4 elements: 30 distinct points, one group orbit.
std::vector<ProjPoint> branch_locus();

struct SurfaceModel {
    int half_degree = 15;           // the cover lives inside O(15)
    std::vector<ProjPoint> branch;  // sorted
    int genus = 14;

    static const SurfaceModel& standard();
    bool is_branch(const ProjPoint& p) const;
};

struct FixedPointRecord {
    ProjPoint base;
    int lifts_fixed;      // 0, 1 or 2
    bool is_branch;
    Cyclotomic rotation;  // local rotation number on the cover
};

struct FixedPointReport {
    int element = -1;  // index in the 120-element group
    int order = 0;
    std::vector<FixedPointRecord> records;
    int total = 0;

    nlohmann::json to_json() const;
};

// Lifting rule: a fixed base point with eigenvalue λ contributes 1 if it is
// a branch point (rotation λ^-15), else 2 if λ^-15 = 1 (rotation λ^-2), else
// 0. The central involution fixes the base pointwise and exactly the 30
// points over the branch locus on the cover. Identity input is an error.
FixedPointReport fixed_points_on_surface(int element_index, const SurfaceModel& s);

// 2 - 2g = 2*sheets - branch_count for a branched double cover of the sphere.
int riemann_hurwitz_genus(int sheets, int branch_count);

struct BurnsideResult {
    BigInt sum;               // Σ Fix(g) over nontrivial g
    Rational quotient_euler;  // (χ(F) + sum) / |group|
};

// Cross-checks all 119 nontrivial fixed-point counts at once; throws
// ConsistencyError unless the quotient has the Euler number of a sphere.
BurnsideResult burnside_consistency(const SurfaceModel& s);

}  // namespace mcgcert
