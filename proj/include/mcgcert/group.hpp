#pragma once

// Finite groups of unit quaternions, stored with full multiplication tables.
// Only the handful of groups the verification needs is ever built: the binary
// icosahedral group, Q8, and cyclic/Sylow subgroups — so everything is done
// by straightforward enumeration against exact coordinates.

#include "mcgcert/abelian.hpp"
#include "mcgcert/quaternion.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace mcgcert {

// Pure multiplication-table view of a finite group; all structural
// algorithms (center, commutators, quotients, abelian invariants) work on
// this, so they apply to quotients that are not quaternion groups.
struct MultTable {
    int n = 0;
    int id = -1;
    std::vector<std::vector<int>> mult;
    std::vector<int> inv;

    int multiply(int a, int b) const { return mult[size_t(a)][size_t(b)]; }
    int inverse(int a) const { return inv[size_t(a)]; }
    int power(int a, long k) const;
    int order_of(int a) const;

    std::map<int, int> order_census() const;
    bool is_abelian() const;
    std::vector<int> center() const;
    std::vector<int> generated(std::vector<int> gens) const;  // sorted element list
    std::vector<int> commutator_subgroup() const;

    // Quotient by a normal subgroup; verifies normality.
    MultTable quotient(const std::vector<int>& normal) const;

    // Structure of an abelian group (throws if not abelian).
    FGAbelianGroup abelian_invariants() const;
    FGAbelianGroup abelianization() const;
};

class GroupModel {
public:
    // Builds the Cayley table; throws ConsistencyError unless the set is
    // closed under products and inverses with exactly one identity and all
    // elements of unit norm. Elements are sorted, so indices are canonical.
    static GroupModel from_elements(std::vector<Quaternion> elems);

    int order() const { return table_.n; }
    const MultTable& table() const { return table_; }
    const Quaternion& element(int i) const { return elems_[size_t(i)]; }
    int identity_index() const { return table_.id; }
    int multiply(int a, int b) const { return table_.multiply(a, b); }
    int inverse(int a) const { return table_.inverse(a); }
    int element_order(int i) const { return table_.order_of(i); }
    // -1 when the quaternion is not an element
    int index_of(const Quaternion& q) const;

    std::map<int, int> element_order_census() const { return table_.order_census(); }
    std::vector<int> center() const { return table_.center(); }
    std::vector<int> commutator_subgroup() const { return table_.commutator_subgroup(); }
    bool is_perfect() const { return int(commutator_subgroup().size()) == order(); }
    FGAbelianGroup abelianization() const { return table_.abelianization(); }

    // New model on a subset of elements (must be closed).
    GroupModel subgroup(const std::vector<int>& indices) const;
    GroupModel generated_subgroup(const std::vector<int>& gens) const;

    nlohmann::json to_json() const;

private:
    std::vector<Quaternion> elems_;
    MultTable table_;
};

struct ConjugacyClasses {
    std::vector<int> class_of;        // element index -> class index
    std::vector<int> representatives; // smallest element index per class
    std::vector<int> sizes;

    int count() const { return int(sizes.size()); }
};

ConjugacyClasses conjugacy_classes(const GroupModel& g);

// Character of a representation, stored per element.
struct CharacterVector {
    std::vector<Cyclotomic> values;

    const Cyclotomic& at(int i) const { return values[size_t(i)]; }
    // throws ConsistencyError if the vector is not a class function
    void check_constant_on_classes(const GroupModel& g, const ConjugacyClasses& cc) const;
};

// Trace of the defining SU(2) representation: 2 * Re(q).
CharacterVector spin_character(const GroupModel& g);

// The 120-element binary icosahedral group from icosian coordinates.
const GroupModel& binary_icosahedral();

GroupModel build_q8();

// A Sylow p-subgroup (trivial if p does not divide the order).
GroupModel sylow_subgroup(const GroupModel& g, int p);

// Lexicographically first elements of orders 4, 6, 10 in the binary
// icosahedral group; their images in the order-60 quotient generate it.
struct StandardGenerators {
    int x2, x3, x5;
};
StandardGenerators standard_generators(const GroupModel& ghat);

}  // namespace mcgcert
