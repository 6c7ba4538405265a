#include "mcgcert/homotopy.hpp"

#include "mcgcert/cohomology.hpp"
#include "mcgcert/modint.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace mcgcert {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw DataError("stable tables: " + msg); }

const json& field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) bad("missing field \"" + key + "\"");
    return *it;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) bad("unknown field \"" + k + "\" in " + where);
}

FGAbelianGroup group_from(const json& v, const std::string& where) {
    if (!v.is_string()) bad(where + " must be a string");
    try {
        return FGAbelianGroup::parse(v.get<std::string>());
    } catch (const DataError&) {
        throw;
    } catch (const Error& e) {
        bad(where + ": " + std::string(e.what()));
    }
}

std::map<int, FGAbelianGroup> stems_from(const json& j, int lo, int hi,
                                         const std::string& where) {
    if (!j.is_object()) bad(where + " must be an object");
    std::set<std::string> allowed;
    for (int k = lo; k <= hi; ++k) allowed.insert(std::to_string(k));
    reject_unknown(j, allowed, where);
    std::map<int, FGAbelianGroup> out;
    for (int k = lo; k <= hi; ++k) {
        std::string key = std::to_string(k);
        out.emplace(k, group_from(field(j, key), where + "." + key));
    }
    return out;
}

}  // namespace

const FGAbelianGroup& StableTables::sphere_stem(int k) const {
    auto it = sphere.find(k);
    if (it == sphere.end()) throw Error("no sphere stem in degree " + std::to_string(k));
    return it->second;
}

const FGAbelianGroup& StableTables::cp_stem(int k) const {
    auto it = cp.find(k);
    if (it == cp.end()) throw Error("no projective stem in degree " + std::to_string(k));
    return it->second;
}

const std::vector<FGAbelianGroup>& StableTables::em_homology(const std::string& space) const {
    auto it = em.find(space);
    if (it == em.end()) throw DataError("no homology table for " + space);
    return it->second;
}

StableTables parse_stable_tables(const json& j) {
    if (!j.is_object()) bad("top level must be an object");
    reject_unknown(j,
                   {"schema", "sphere_stems", "cp_stems", "em_homology", "eta",
                    "transfer_t1"},
                   "top level");

    const json& schema = field(j, "schema");
    if (!schema.is_number_integer() || schema.get<long>() != 1)
        bad("unsupported schema version " + schema.dump());

    StableTables t;
    t.sphere = stems_from(field(j, "sphere_stems"), 0, 6, "sphere_stems");
    t.cp = stems_from(field(j, "cp_stems"), 1, 7, "cp_stems");

    const json& em = field(j, "em_homology");
    if (!em.is_object()) bad("em_homology must be an object");
    reject_unknown(em, {"K(Z,2)", "K(Z/24,3)", "K(Z,4)"}, "em_homology");
    for (const char* space : {"K(Z,2)", "K(Z/24,3)", "K(Z,4)"}) {
        const json& row = field(em, space);
        if (!row.is_array() || row.size() != 5)
            bad(std::string("em_homology[") + space + "] must list degrees 0..4");
        std::vector<FGAbelianGroup> h;
        for (size_t d = 0; d < row.size(); ++d)
            h.push_back(group_from(row[d], std::string(space) + " degree " + std::to_string(d)));
        t.em.emplace(space, std::move(h));
    }

    const json& eta = field(j, "eta");
    if (!eta.is_object()) bad("eta must be an object");
    {
        std::set<std::string> allowed;
        for (int k = 0; k <= 5; ++k) allowed.insert(std::to_string(k));
        reject_unknown(eta, allowed, "eta");
    }
    for (int k = 0; k <= 5; ++k) {
        std::string where = "eta." + std::to_string(k);
        const json& cols = field(eta, std::to_string(k));
        const FGAbelianGroup& src = t.sphere_stem(k);
        const FGAbelianGroup& tgt = t.sphere_stem(k + 1);
        if (!cols.is_array() || int(cols.size()) != src.num_generators())
            bad(where + " must list one column per source generator");
        IntMat m(tgt.num_generators(), src.num_generators());
        for (int c = 0; c < m.cols(); ++c) {
            const json& col = cols[size_t(c)];
            if (!col.is_array() || int(col.size()) != tgt.num_generators())
                bad(where + " column " + std::to_string(c) + " has the wrong length");
            for (int r = 0; r < m.rows(); ++r) {
                const json& v = col[size_t(r)];
                if (!v.is_number_integer()) bad(where + " entries must be integers");
                m.at(r, c) = BigInt(v.get<long long>());
            }
        }
        try {
            t.eta.emplace(k, AbHom(src, tgt, std::move(m)));
        } catch (const Error& e) {
            bad(where + ": " + std::string(e.what()));
        }
    }

    const json& t1 = field(j, "transfer_t1");
    if (!t1.is_number_integer()) bad("transfer_t1 must be an integer");
    t.transfer_t1 = t1.get<long>();
    if (t.transfer_t1 % 2 == 0) bad("transfer_t1 must be odd (the degree-2 kernel forces it)");

    return t;
}

StableTables load_stable_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw DataError("invalid JSON in " + path + ": " + e.what());
    }
    return parse_stable_tables(j);
}

void validate_stable_tables(const StableTables& t) {
    auto check = [](const FGAbelianGroup& got, const char* want, const std::string& where) {
        if (got != FGAbelianGroup::parse(want))
            throw DataError("stable tables: " + where + " is " + got.to_string() +
                            ", want " + want);
    };
    const char* sphere[] = {"Z", "Z/2", "Z/2", "Z/24", "0", "0", "Z/2"};
    for (int k = 0; k <= 6; ++k)
        check(t.sphere_stem(k), sphere[k], "sphere stem " + std::to_string(k));
    const char* cp[] = {"0", "Z", "0", "Z", "Z/2", "Z", "Z/2"};
    for (int k = 1; k <= 7; ++k)
        check(t.cp_stem(k), cp[k - 1], "projective stem " + std::to_string(k));

    auto check_row = [&](const char* space, std::initializer_list<const char*> want) {
        const auto& got = t.em_homology(space);
        int d = 0;
        for (const char* w : want) {
            check(got[size_t(d)], w, std::string(space) + " degree " + std::to_string(d));
            ++d;
        }
    };
    check_row("K(Z,2)", {"Z", "0", "Z", "0", "Z"});
    check_row("K(Z/24,3)", {"Z", "0", "0", "Z/24", "0"});
    check_row("K(Z,4)", {"Z", "0", "0", "0", "Z"});

    auto unit = [&](int k) {
        IntMat m(1, 1);
        m.at(0, 0) = k == 2 ? 12 : 1;
        return AbHom(t.sphere_stem(k), t.sphere_stem(k + 1), m);
    };
    for (int k = 0; k <= 2; ++k)
        if (t.eta.at(k) != unit(k))
            throw DataError("stable tables: eta in degree " + std::to_string(k) +
                            " differs from the classical value");
    for (int k = 3; k <= 5; ++k)
        if (!t.eta.at(k).is_zero())
            throw DataError("stable tables: eta in degree " + std::to_string(k) +
                            " must vanish");
}

void check_eta_chain(const StableTables& t) {
    // eta-squared as a map from stem 1 to stem 3
    if (t.eta.at(2).compose(t.eta.at(1)).is_zero())
        throw ConsistencyError("eta chain: the square of eta vanishes");
    const AbHom& e2 = t.eta.at(2);
    BigInt image_order = e2.target().order() / e2.cokernel_group().order();
    if (image_order != 2)
        throw ConsistencyError("eta chain: degree-2 image has order " +
                               to_string(image_order) + ", want 2");
}

const AbHom& TransferData::at(int k) const {
    auto it = maps.find(k);
    if (it == maps.end()) throw Error("no transfer map in degree " + std::to_string(k));
    return it->second;
}

TransferData build_transfer(const StableTables& t) { return build_transfer(t, t.transfer_t1); }

TransferData build_transfer(const StableTables& t, long t1) {
    if (t1 % 2 == 0)
        throw DataError("transfer parameter must be odd, got " + std::to_string(t1));
    TransferData tr;
    tr.t1 = t1;
    for (int k = 1; k <= 5; ++k) {
        const FGAbelianGroup& cpk = t.cp_stem(k);
        const FGAbelianGroup& sk = t.sphere_stem(k);
        const FGAbelianGroup& tgt = t.sphere_stem(k + 1);

        // The sum must keep both blocks verbatim (projective generators
        // first); in these degrees at most one summand has generators of any
        // given kind, so canonicalization never merges anything.
        FGAbelianGroup dom = cpk.direct_sum(sk);
        int nc = cpk.num_generators(), ns = sk.num_generators();
        bool aligned = dom.num_generators() == nc + ns;
        for (int i = 0; aligned && i < nc; ++i)
            aligned = dom.generator_order(i) == cpk.generator_order(i);
        for (int i = 0; aligned && i < ns; ++i)
            aligned = dom.generator_order(nc + i) == sk.generator_order(i);
        if (!aligned)
            throw ConsistencyError("transfer: generator bookkeeping broke in degree " +
                                   std::to_string(k));

        const AbHom& e = t.eta.at(k);
        if (e.source() != sk || e.target() != tgt)
            throw ConsistencyError("transfer: eta map has the wrong shape in degree " +
                                   std::to_string(k));

        IntMat m(tgt.num_generators(), nc + ns);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < ns; ++j) m.at(i, nc + j) = e.matrix().at(i, j);
        if (k == 2) m.at(0, 0) = t1;  // odd parameter on the projective class
        if (k == 5) m.at(0, 0) = 1;   // forced by surjectivity onto stem 6
        tr.maps.emplace(k, AbHom(std::move(dom), tgt, std::move(m)));
    }
    return tr;
}

std::vector<int> transfer_non_surjective_degrees(const TransferData& tr) {
    std::vector<int> out;
    for (const auto& [k, f] : tr.maps)
        if (!f.is_surjective()) out.push_back(k);
    return out;
}

KernelResult derive_pi_mt_with_inclusion(int k, const StableTables& t,
                                         const TransferData& tr) {
    (void)t;
    if (k < 1 || k > 4)
        throw Error("derive_pi_mt: degree must be in 1..4, got " + std::to_string(k));
    if (!tr.at(k + 1).is_surjective())
        throw DataError("transfer is not surjective in degree " + std::to_string(k + 1) +
                        "; the long exact sequence does not break into short pieces");
    KernelResult ker = hom_kernel_with_inclusion(tr.at(k));
    if (k == 2) {
        // The degree-2 kernel is infinite cyclic and its generator hits the
        // torsion generator once; with t1 = 1 the free coordinate is 12.
        if (ker.group != FGAbelianGroup::free_group(1))
            throw ConsistencyError("degree-2 transfer kernel is " + ker.group.to_string() +
                                   ", want Z");
        const IntMat& m = ker.inclusion.matrix();
        if (m.rows() != 2 || m.cols() != 1 || m.at(1, 0) != 1)
            throw ConsistencyError("degree-2 kernel generator misses the torsion generator");
        if (tr.t1 == 1 && m.at(0, 0) != 12)
            throw ConsistencyError(
                "degree-2 kernel generator should be twelve times the first generator "
                "plus the second one, got " + to_string(m.at(0, 0)) + " times");
    }
    return ker;
}

FGAbelianGroup derive_pi_mt(int k, const StableTables& t, const TransferData& tr) {
    return derive_pi_mt_with_inclusion(k, t, tr).group;
}

K3Invariant k3_order_from_torsion(long tors_size) {
    if (tors_size <= 0 || 24 % tors_size != 0)
        throw Error("k3_order_from_torsion: torsion size must divide 24, got " +
                    std::to_string(tors_size));
    return {24 / tors_size};
}

const FGAbelianGroup& TorsionH4Result::torsion() const {
    if (status != ConclusionStatus::conclusive || candidates.size() != 1)
        throw Error("torsion_h4_argument: no conclusive torsion subgroup");
    return candidates.front();
}

TorsionH4Result torsion_h4_argument(long restriction_order, const FGAbelianGroup& pi3) {
    if (restriction_order <= 0 || 24 % restriction_order != 0)
        throw Error("torsion_h4_argument: certified order must divide 24, got " +
                    std::to_string(restriction_order));
    if (pi3 != FGAbelianGroup::cyclic(24))
        throw ConsistencyError("torsion_h4_argument: third homotopy group must be Z/24, got " +
                               pi3.to_string());

    TorsionH4Result res;
    // The torsion subgroup under scrutiny embeds in a cyclic group of order
    // 24 with a marked class. It contains the image of the squared degree-2
    // class minus twice the marked class -- the residue -2.
    ModInt member(-2, 24);
    BigInt member_order = member.additive_order();
    res.argument.push_back("torsion embeds in a cyclic group of order 24 and contains the "
                           "residue -2, of additive order " + to_string(member_order));
    for (long d = 1; d <= 24; ++d)
        if (24 % d == 0 && BigInt(d) % member_order == 0)
            res.candidates.push_back(FGAbelianGroup::cyclic(d));

    if (restriction_order == 24) {
        // The marked class generates, and every preimage of it would make an
        // odd multiple of an infinite-order square torsion; the full group is
        // excluded and the lattice pins the index-2 subgroup.
        std::erase_if(res.candidates,
                      [](const FGAbelianGroup& g) { return g.order() == 24; });
        res.argument.push_back(
            "the certified order 24 marks a generator; a preimage of it would force an odd "
            "multiple of an infinite-order class to be torsion, so the full group is excluded");
        if (res.candidates.size() != 1)
            throw ConsistencyError("torsion_h4_argument: subgroup lattice not pinned down");
        res.status = ConclusionStatus::conclusive;
        res.k3 = k3_order_from_torsion(to_ll(res.candidates.front().order()));
        res.argument.push_back("torsion is the index-2 subgroup " +
                               res.candidates.front().to_string() +
                               "; the gluing class has order " + std::to_string(res.k3->order));
    } else {
        res.status = ConclusionStatus::inconclusive;
        res.argument.push_back("certified order " + std::to_string(restriction_order) +
                               " does not mark a generator; the candidates " +
                               res.candidates.front().to_string() + " and " +
                               res.candidates.back().to_string() + " both survive");
    }
    return res;
}

TorsionH4Result torsion_h4_argument(const StableTables& t) {
    BigInt certified = certify_order24();
    FGAbelianGroup pi3 = derive_pi_mt(3, t, build_transfer(t));
    return torsion_h4_argument(to_ll(certified), pi3);
}

std::vector<FGAbelianGroup> serre_two_stage_homology(long m, const K3Invariant& k3,
                                                     const StableTables& t) {
    if (m <= 0) throw Error("serre_two_stage_homology: modulus must be positive");
    if (k3.order <= 0 || 24 % k3.order != 0)
        throw Error("serre_two_stage_homology: gluing class order must divide 24, got " +
                    std::to_string(k3.order));
    if (m % k3.order != 0)
        throw Error("serre_two_stage_homology: gluing class order must divide " +
                    std::to_string(m));
    const auto& base = t.em_homology("K(Z,2)");
    const auto& fiber = t.em_homology("K(Z/" + std::to_string(m) + ",3)");
    for (const auto& h : base)
        if (!h.invariant_factors().empty())
            throw ConsistencyError("serre_two_stage_homology: base homology must be torsion-free");

    auto entry = [&](int p, int q) -> FGAbelianGroup {
        if (p < 0 || q < 0 || p >= int(base.size()) || q >= int(fiber.size())) return {};
        return tensor_product(base[size_t(p)], fiber[size_t(q)]);
    };

    // In total degree <= 4 everything is settled on the second page except
    // the transgression from position (4,0) to (0,3); verify no other
    // differential in range connects two nonzero entries.
    for (int n = 0; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            if (entry(p, q).is_trivial()) continue;
            for (int r = 2; r <= 6; ++r) {
                int sp = p + r, sq = q - r + 1;
                if (sq < 0 || (sp == 4 && sq == 0 && p == 0 && q == 3)) continue;
                if (!entry(sp, sq).is_trivial())
                    throw ConsistencyError(
                        "serre_two_stage_homology: unexpected differential into position (" +
                        std::to_string(p) + "," + std::to_string(q) + ")");
            }
        }

    FGAbelianGroup e40 = entry(4, 0), e03 = entry(0, 3);
    if (e40 != FGAbelianGroup::free_group(1) || e03 != FGAbelianGroup::cyclic(m))
        throw ConsistencyError("serre_two_stage_homology: transgression endpoints have "
                               "unexpected groups");
    IntMat tm(1, 1);
    tm.at(0, 0) = BigInt(m) / k3.order;  // image is the order-k3 subgroup
    AbHom transgression(e40, e03, tm);
    FGAbelianGroup h3 = transgression.cokernel_group();
    FGAbelianGroup e40_limit = hom_kernel(transgression);

    std::vector<FGAbelianGroup> stage(5);
    for (int n = 0; n <= 4; ++n) {
        FGAbelianGroup acc;
        int nonzero = 0;
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            FGAbelianGroup piece = (p == 4 && q == 0)   ? e40_limit
                                   : (p == 0 && q == 3) ? h3
                                                        : entry(p, q);
            if (!piece.is_trivial()) ++nonzero;
            acc = acc.direct_sum(piece);
        }
        if (nonzero > 1)
            throw ConsistencyError("serre_two_stage_homology: unsettled extension in degree " +
                                   std::to_string(n));
        stage[size_t(n)] = acc;
    }

    // The 4-coconnected stage splits off a K(Z,4) factor on top.
    return kunneth_product(stage, t.em_homology("K(Z,4)"), 4);
}

std::vector<FGAbelianGroup> kunneth_product(const std::vector<FGAbelianGroup>& a,
                                            const std::vector<FGAbelianGroup>& b,
                                            int maxdeg) {
    if (maxdeg < 0) throw Error("kunneth_product: negative degree");
    std::vector<FGAbelianGroup> h(size_t(maxdeg) + 1);
    for (int n = 0; n <= maxdeg; ++n) {
        FGAbelianGroup acc;
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            if (p < int(a.size()) && q < int(b.size()))
                acc = acc.direct_sum(tensor_product(a[size_t(p)], b[size_t(q)]));
        }
        for (int p = 0; p <= n - 1; ++p) {
            int q = n - 1 - p;
            if (p < int(a.size()) && q < int(b.size()))
                acc = acc.direct_sum(tor_product(a[size_t(p)], b[size_t(q)]));
        }
        h[size_t(n)] = acc;
    }
    return h;
}

long theta_generator_certificate(const FGAbelianGroup& h3, long surjection_coeff) {
    if (!h3.is_finite() || h3.invariant_factors().size() != 1)
        throw Error("theta certificate: degree-3 homology must be finite cyclic, got " +
                    h3.to_string());

    // comparison map from the top homology of the homology sphere
    IntMat cm(1, 1);
    cm.at(0, 0) = surjection_coeff;
    AbHom comparison(FGAbelianGroup::free_group(1), h3, cm);
    if (!comparison.is_surjective())
        throw Error("theta certificate: comparison map is not surjective");

    FGAbelianGroup from_h3 = hom_group(h3, 24);
    FGAbelianGroup from_sphere = hom_group(FGAbelianGroup::free_group(1), 24);
    if (from_sphere != FGAbelianGroup::cyclic(24))
        throw ConsistencyError("theta certificate: Hom(Z, Z/24) came out as " +
                               from_sphere.to_string());

    // Precomposition with the comparison map is multiplication by the
    // coefficient on these Hom groups; surjectivity makes it a unit, so the
    // Hom group embeds and the pairing evaluates the class to an element of
    // exactly this order.
    if (gcd(BigInt(surjection_coeff), from_h3.order()) != 1)
        throw ConsistencyError("theta certificate: precomposition fails to inject");
    return to_ll(from_h3.order());
}

long theta_generator_certificate() {
    return theta_generator_certificate(ghat_h3_homology(), 1);
}

}  // namespace mcgcert
