#pragma once

// Stable-stem bookkeeping: ingested stem tables, the eta action, circle
// transfer kernels, the k^3-order and torsion bookkeeping, the two-stage
// Postnikov homology, and the generator certificate. Everything here is
// arithmetic over the finitely generated abelian group layer; the classical
// input values live in data/stable_tables.json and are validated on load.

#include "mcgcert/abelian.hpp"
#include "mcgcert/numeric.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mcgcert {

struct StableTables {
    std::map<int, FGAbelianGroup> sphere;  // degrees 0..6
    std::map<int, FGAbelianGroup> cp;      // degrees 1..7 (reduced stems)
    // H_0..H_4 per Eilenberg-MacLane space, keyed "K(Z,2)" etc.
    std::map<std::string, std::vector<FGAbelianGroup>> em;
    std::map<int, AbHom> eta;  // degrees 0..5, stem k -> stem k+1
    long transfer_t1 = 1;      // odd; degree-2 projective transfer component

    const FGAbelianGroup& sphere_stem(int k) const;
    const FGAbelianGroup& cp_stem(int k) const;
    const std::vector<FGAbelianGroup>& em_homology(const std::string& space) const;
};

// Strict parse: schema must be 1, unknown or missing fields are rejected.
StableTables parse_stable_tables(const nlohmann::json& j);
StableTables load_stable_tables(const std::string& path);

// Degree-by-degree comparison against the classical tables; DataError on any
// mismatch.
void validate_stable_tables(const StableTables& t);

// Multiplication-by-eta is consistent: the square is nonzero and the degree-2
// image is the order-2 subgroup of Z/24.
void check_eta_chain(const StableTables& t);

// Circle transfer in degrees 1..5: cp(k) ⊕ sphere(k) -> sphere(k+1). The
// sphere summand acts through eta; the projective summand is forced to 1 in
// degree 5 and carries the odd parameter t1 in degree 2.
struct TransferData {
    std::map<int, AbHom> maps;
    long t1 = 1;

    const AbHom& at(int k) const;
};

TransferData build_transfer(const StableTables& t);           // t1 from the file
TransferData build_transfer(const StableTables& t, long t1);  // explicit odd t1

// Degrees in 1..5 where the transfer fails to surject. Empty for the shipped
// tables with t1 = 1.
std::vector<int> transfer_non_surjective_degrees(const TransferData& tr);

// pi_k of the Madsen-Tillmann spectrum as the kernel of the degree-k transfer,
// for k in 1..4. Requires the degree-(k+1) transfer to be surjective so the
// long exact sequence splits into short pieces; DataError otherwise.
FGAbelianGroup derive_pi_mt(int k, const StableTables& t, const TransferData& tr);
// Same, but also returns the kernel inclusion (used for the degree-2
// generator check: with t1 = 1 the generator is 12*(first) + (second)).
KernelResult derive_pi_mt_with_inclusion(int k, const StableTables& t,
                                         const TransferData& tr);

struct K3Invariant {
    long order = 1;  // positive, divides 24
};

// order = 24 / tors_size; Error unless tors_size divides 24.
K3Invariant k3_order_from_torsion(long tors_size);

enum class ConclusionStatus { conclusive, inconclusive };

struct TorsionH4Result {
    ConclusionStatus status = ConclusionStatus::inconclusive;
    // Conclusive: exactly one entry. Inconclusive: the surviving candidates.
    std::vector<FGAbelianGroup> candidates;
    std::optional<K3Invariant> k3;  // set iff conclusive
    std::vector<std::string> argument;

    const FGAbelianGroup& torsion() const;  // conclusive only
};

// Pins down the torsion subgroup of H^4 of the total space inside the cyclic
// order-24 group attached to pi_3. restriction_order is the certified order
// of the marked degree-4 class: 24 makes the subgroup lattice argument
// conclusive (torsion = Z/12, k^3 of order 2); proper divisors leave two
// candidates; non-divisors are rejected.
TorsionH4Result torsion_h4_argument(long restriction_order, const FGAbelianGroup& pi3);
// Standard pipeline: restriction order from the Chern certificate, pi_3 from
// the transfer kernel.
TorsionH4Result torsion_h4_argument(const StableTables& t);

// Homology H_0..H_4 of the 4-coconnected stage: fibration of K(Z/m,3) over
// K(Z,2) with transgression image of order k3.order, then the split K(Z,4)
// factor on top.
std::vector<FGAbelianGroup> serre_two_stage_homology(long m, const K3Invariant& k3,
                                                     const StableTables& t);

// H_0..H_maxdeg of a product space from the factors' homology (torsion-free
// factors make the correction term vanish degree by degree; the general Tor
// term is included).
std::vector<FGAbelianGroup> kunneth_product(const std::vector<FGAbelianGroup>& a,
                                            const std::vector<FGAbelianGroup>& b,
                                            int maxdeg);

// Certified order of the distinguished element of pi_3 = Z/24: compares
// Hom(h3, Z/24) with Hom(Z, Z/24) along precomposition with the degree-one
// comparison map (multiplication by surjection_coeff). Returns 24 for the
// standard inputs h3 = Z/120, coeff 1; smaller cyclic h3 degrades the bound;
// a non-surjective comparison map is a certificate failure (Error).
long theta_generator_certificate(const FGAbelianGroup& h3, long surjection_coeff);
long theta_generator_certificate();  // h3 from the group homology ledger

}  // namespace mcgcert
