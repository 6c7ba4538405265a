#pragma once

// Finitely generated abelian groups in invariant-factor form, and
// homomorphisms between them given by integer matrices against the canonical
// generators. Kernels, cokernels and Hom groups all reduce to Smith normal
// form computations.

#include "mcgcert/intmatrix.hpp"
#include "mcgcert/numeric.hpp"

#include <string>
#include <vector>

namespace mcgcert {

// Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dt with 2 <= d1 | d2 | ... | dt. Construction always
// canonicalizes, so equality of groups is plain structural equality.
class FGAbelianGroup {
public:
    FGAbelianGroup() = default;  // trivial group

    // Canonicalizes an arbitrary factor list (factors >= 1; ones are dropped,
    // the rest is rearranged into a divisibility chain).
    FGAbelianGroup(int free_rank, std::vector<BigInt> factors);

    static FGAbelianGroup trivial() { return {}; }
    static FGAbelianGroup free_group(int rank) { return {rank, {}}; }
    static FGAbelianGroup cyclic(const BigInt& n);

    // Z^rows / (column span of rel).
    static FGAbelianGroup cokernel(const IntMat& rel);

    int free_rank() const { return rank_; }
    const std::vector<BigInt>& invariant_factors() const { return factors_; }

    // Generator convention: free generators first, torsion generators after,
    // in invariant-factor order.
    int num_generators() const { return rank_ + int(factors_.size()); }
    // 0 for a free generator.
    BigInt generator_order(int i) const;

    bool is_trivial() const { return rank_ == 0 && factors_.empty(); }
    bool is_finite() const { return rank_ == 0; }
    BigInt order() const;  // throws on infinite groups

    FGAbelianGroup direct_sum(const FGAbelianGroup& o) const;

    bool operator==(const FGAbelianGroup& o) const = default;

    // "0", "Z", "Z^3", "Z/24", "Z^2 ⊕ Z/2 ⊕ Z/24", ...
    std::string to_string() const;
    // Accepts "⊕" or "+" between summands, any term order.
    static FGAbelianGroup parse(const std::string& s);

private:
    int rank_ = 0;
    std::vector<BigInt> factors_;
};

// Homomorphism f: source -> target. Column j of the matrix is the image of
// source generator j written in target generators. Torsion coordinates are
// normalized into [0, order); construction verifies that generator orders are
// respected.
class AbHom {
public:
    AbHom(FGAbelianGroup source, FGAbelianGroup target, IntMat matrix);

    static AbHom zero(const FGAbelianGroup& source, const FGAbelianGroup& target);
    static AbHom identity(const FGAbelianGroup& g);

    const FGAbelianGroup& source() const { return source_; }
    const FGAbelianGroup& target() const { return target_; }
    const IntMat& matrix() const { return matrix_; }

    bool is_zero() const;
    bool is_surjective() const;
    FGAbelianGroup cokernel_group() const;

    // this ∘ g (apply g first).
    AbHom compose(const AbHom& g) const;

    // Equal as maps between the same groups (matrices agree after
    // normalization, which construction guarantees).
    bool operator==(const AbHom& o) const = default;

private:
    FGAbelianGroup source_, target_;
    IntMat matrix_;
};

struct KernelResult {
    FGAbelianGroup group;
    AbHom inclusion;  // kernel -> source; f ∘ inclusion == 0
};

KernelResult hom_kernel_with_inclusion(const AbHom& f);
FGAbelianGroup hom_kernel(const AbHom& f);

// Hom(a, Z/m) for m >= 2.
FGAbelianGroup hom_group(const FGAbelianGroup& a, const BigInt& m);

// Ext^1(a, Z/m): free part contributes nothing, each Z/d contributes Z/gcd(d,m).
FGAbelianGroup ext_with_cyclic(const FGAbelianGroup& a, const BigInt& m);

// a ⊗ b: Z^{rs} plus a copy of each torsion factor per free generator of the
// other side, plus Z/gcd(d,e) for every pair of torsion factors.
FGAbelianGroup tensor_product(const FGAbelianGroup& a, const FGAbelianGroup& b);

// Tor_1(a, b): one Z/gcd(d,e) per pair of torsion factors.
FGAbelianGroup tor_product(const FGAbelianGroup& a, const FGAbelianGroup& b);

}  // namespace mcgcert
