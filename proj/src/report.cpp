#include "mcgcert/report.hpp"

#include "mcgcert/characters.hpp"
#include "mcgcert/cohomology.hpp"
#include "mcgcert/group.hpp"
#include "mcgcert/homotopy.hpp"
#include "mcgcert/surface.hpp"
#include "mcgcert/todd.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace mcgcert {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    throw Error("unreachable check status");
}

nlohmann::json CheckResult::to_json() const {
    return {{"check_id", check_id}, {"status", to_string(status)},
            {"expected", expected},  {"computed", computed},
            {"provenance", provenance}, {"elapsed_ms", elapsed_ms}};
}

int SuiteReport::passed() const {
    int n = 0;
    for (const auto& r : results) n += r.status == CheckStatus::pass;
    return n;
}

int SuiteReport::failed() const { return int(results.size()) - passed(); }

bool SuiteReport::all_passed() const { return failed() == 0; }

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : results) rs.push_back(r.to_json());
    return {{"schema", 1},
            {"suite", suite},
            {"results", std::move(rs)},
            {"summary", {{"pass", passed()}, {"fail", failed()}}}};
}

std::string SuiteReport::to_text(bool verbose) const {
    std::ostringstream os;
    for (const auto& r : results) {
        os << r.check_id << ": expected " << r.expected << ", computed " << r.computed
           << ", " << to_string(r.status) << "\n";
        if (verbose) os << "    via " << r.provenance << " (" << r.elapsed_ms << " ms)\n";
    }
    os << "suite " << suite << ": " << passed() << "/" << results.size() << " passed\n";
    return os.str();
}

namespace {

struct Context {
    VerifyOptions opt;
    StableTables tables;
    TransferData transfer;
    std::optional<CharacterVector> hol_, cx_;

    explicit Context(const VerifyOptions& o)
        : opt(o), tables(load_stable_tables(o.data_path)) {
        validate_stable_tables(tables);
        transfer = build_transfer(tables, o.t1.value_or(tables.transfer_t1));
    }

    const CharacterVector& hol() {
        if (!hol_) hol_ = char_h1_holomorphic(SurfaceModel::standard());
        return *hol_;
    }
    const CharacterVector& cx() {
        if (!cx_) cx_ = char_h1_complex(SurfaceModel::standard());
        return *cx_;
    }
    const BurnsideResult& burn() {
        if (!burn_) burn_ = burnside_consistency(SurfaceModel::standard());
        return *burn_;
    }

  private:
    std::optional<BurnsideResult> burn_;
};

struct Outcome {
    std::string computed;
    std::optional<CheckStatus> forced;
};

Outcome val(std::string s) { return {std::move(s), std::nullopt}; }

CheckResult run_check(const std::string& id, const std::string& expected,
                      const std::string& provenance,
                      const std::function<Outcome()>& body) {
    CheckResult r;
    r.check_id = id;
    r.expected = expected;
    r.provenance = provenance;
    auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = body();
        r.computed = o.computed;
        r.status = o.forced ? *o.forced
                            : (o.computed == expected ? CheckStatus::pass : CheckStatus::fail);
    } catch (const std::exception& e) {
        r.computed = std::string("error: ") + e.what();
        r.status = CheckStatus::fail;
    }
    auto end = std::chrono::steady_clock::now();
    r.elapsed_ms =
        long(std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
    return r;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string tuple_str(const std::vector<BigInt>& xs) {
    std::vector<std::string> p;
    for (const auto& x : xs) p.push_back(to_string(x));
    return "(" + join(p, ", ") + ")";
}

std::string homology_str(const std::vector<FGAbelianGroup>& h, size_t lo = 0) {
    std::vector<std::string> p;
    for (size_t i = lo; i < h.size(); ++i) p.push_back(h[i].to_string());
    return "[" + join(p, ", ") + "]";
}

int central_involution(const GroupModel& g) {
    for (int i = 0; i < g.order(); ++i)
        if (g.element_order(i) == 2) return i;
    throw ConsistencyError("no central involution found");
}

using Checks = std::vector<CheckResult>;

void suite_group(Context&, Checks& out) {
    const GroupModel& g = binary_icosahedral();
    out.push_back(run_check("group_order", "120",
                            "enumeration of the icosian unit quaternions",
                            [&] { return val(std::to_string(g.order())); }));
    out.push_back(run_check("group_perfect", "0",
                            "abelianization via commutator closure over all pairs",
                            [&] { return val(g.abelianization().to_string()); }));
    out.push_back(run_check("group_center", "{1, -1}",
                            "centralizer scan over the multiplication table", [&] {
                                auto c = g.center();
                                if (c.size() == 2) {
                                    int other = c[0] == g.identity_index() ? c[1] : c[0];
                                    if (g.element_order(other) == 2) return val("{1, -1}");
                                }
                                return val(std::to_string(c.size()) + " central elements");
                            }));
    out.push_back(run_check("conjugacy_classes", "9", "orbit partition under conjugation",
                            [&] { return val(std::to_string(conjugacy_classes(g).count())); }));
    out.push_back(run_check("order_census", "1:1 2:1 3:20 4:30 5:24 6:20 10:24",
                            "element orders by direct powering", [&] {
                                std::vector<std::string> p;
                                for (const auto& [o, c] : g.element_order_census())
                                    p.push_back(std::to_string(o) + ":" + std::to_string(c));
                                return val(join(p, " "));
                            }));
    out.push_back(run_check(
        "sylow2_q8", "Q8",
        "maximal 2-subgroup; order 8 with a unique involution pins the quaternion group",
        [&] {
            GroupModel s = sylow_subgroup(g, 2);
            auto census = s.element_order_census();
            int involutions = census.count(2) ? census.at(2) : 0;
            if (s.order() == 8 && involutions == 1 && !s.table().is_abelian()) return val("Q8");
            return val("order " + std::to_string(s.order()) + ", " +
                       std::to_string(involutions) + " involutions");
        }));
}

void suite_surface(Context& ctx, Checks& out) {
    const GroupModel& g = binary_icosahedral();
    const SurfaceModel& s = SurfaceModel::standard();
    out.push_back(run_check("branch_points", "30", "eigenlines of the order-4 elements",
                            [&] { return val(std::to_string(branch_locus().size())); }));
    out.push_back(run_check("genus", "14", "Riemann-Hurwitz for a double cover of the sphere",
                            [&] {
                                return val(std::to_string(
                                    riemann_hurwitz_genus(2, int(s.branch.size()))));
                            }));
    out.push_back(run_check(
        "fixed_points", "h:30 x2:2 x3:0 x5:0 x3^2:4 x5^2:4",
        "lifting rule over the branch locus and the eigenlines", [&] {
            StandardGenerators sg = standard_generators(g);
            int h = central_involution(g);
            auto n = [&](int e) { return std::to_string(fixed_points_on_surface(e, s).total); };
            return val("h:" + n(h) + " x2:" + n(sg.x2) + " x3:" + n(sg.x3) + " x5:" + n(sg.x5) +
                       " x3^2:" + n(g.multiply(sg.x3, sg.x3)) +
                       " x5^2:" + n(g.multiply(sg.x5, sg.x5)));
        }));
    out.push_back(run_check("fixed_points_conjugation", "constant",
                            "counts compared across each conjugacy class", [&] {
                                ConjugacyClasses cc = conjugacy_classes(g);
                                std::vector<int> value(size_t(cc.count()), -1);
                                for (int i = 0; i < g.order(); ++i) {
                                    if (i == g.identity_index()) continue;
                                    int f = fixed_points_on_surface(i, s).total;
                                    int& slot = value[size_t(cc.class_of[size_t(i)])];
                                    if (slot == -1) slot = f;
                                    else if (slot != f)
                                        return val("varies on class " +
                                                   std::to_string(cc.class_of[size_t(i)]));
                                }
                                return val("constant");
                            }));
    out.push_back(run_check("burnside_sum", "266",
                            "sum of all 119 nontrivial fixed-point counts",
                            [&] { return val(to_string(ctx.burn().sum)); }));
    out.push_back(run_check("quotient_euler", "2",
                            "orbit-counting average against the Euler number",
                            [&] { return val(to_string(ctx.burn().quotient_euler)); }));
}

void suite_characters(Context& ctx, Checks& out) {
    const GroupModel& g = binary_icosahedral();
    StandardGenerators sg = standard_generators(g);
    int x3sq = g.multiply(sg.x3, sg.x3), x5sq = g.multiply(sg.x5, sg.x5);
    out.push_back(run_check("dolbeault", "holds for 120 elements",
                            "holomorphic trace plus its conjugate against the topological trace",
                            [&] {
                                int bad = 0;
                                for (int i = 0; i < g.order(); ++i)
                                    if (ctx.hol().at(i) + ctx.hol().at(i).conj() != ctx.cx().at(i))
                                        ++bad;
                                return val(bad == 0 ? "holds for 120 elements"
                                                    : "fails for " + std::to_string(bad) +
                                                          " elements");
                            }));
    auto dec = [&](int gen, const CharacterVector& chi) {
        return tuple_str(decompose_cyclic(gen, chi).multiplicities);
    };
    const char* orth = "character orthogonality over the cyclic subgroup";
    out.push_back(run_check("h1_complex_mod3", "(8, 10, 10)", orth,
                            [&] { return val(dec(x3sq, ctx.cx())); }));
    out.push_back(run_check("h1_hol_mod3", "(4, 5, 5)", orth,
                            [&] { return val(dec(x3sq, ctx.hol())); }));
    out.push_back(run_check("h1_hol_mod5", "(2, 3, 3, 3, 3)", orth,
                            [&] { return val(dec(x5sq, ctx.hol())); }));
    out.push_back(run_check("h1_complex_mod5", "(4, 6, 6, 6, 6)", orth,
                            [&] { return val(dec(x5sq, ctx.cx())); }));
    out.push_back(run_check("h1_hol_q8", "(0, 0, 0, 0, 7)",
                            "restriction to the Sylow 2-subgroup and its character table", [&] {
                                GroupModel q8 = sylow_subgroup(g, 2);
                                Q8Decomposition d =
                                    decompose_q8(q8, restrict_character(q8, g, ctx.hol()));
                                return val(tuple_str(
                                    {d.m_trivial, d.m_sign_a, d.m_sign_b, d.m_sign_ab, d.m_u}));
                            }));
}

void suite_chern(Context& ctx, Checks& out) {
    out.push_back(run_check("restriction_orders", "(8, 3, 1)",
                            "additive orders of the three Sylow restrictions of c2", [&] {
                                GhatH4 t = c2_restriction_triple(ctx.hol());
                                return val(tuple_str({t.r8.additive_order(),
                                                      t.r3.additive_order(),
                                                      t.r5.additive_order()}));
                            }));
    out.push_back(run_check("order24", "24",
                            "order of the c2 class assembled through Z/120 by CRT",
                            [&] { return val(to_string(certify_order24())); }));
    out.push_back(run_check("order24_complex", "12",
                            "same pipeline on the 28-dimensional topological representation",
                            [&] { return val(to_string(c2_order_complex_variant())); }));
}

void suite_todd(Context&, Checks& out) {
    out.push_back(run_check("todd_dim4", "1", "the identity (c2 + c1^2)/12 at (12, 0)",
                            [&] { return val(to_string(todd_genus_dim4(12, 0))); }));
    out.push_back(run_check("todd_dim6_split", "0",
                            "vanishing of c1*c2/24 for split tangent bundles over 50 samples",
                            [&] {
                                std::mt19937 rng(628318);
                                std::uniform_int_distribution<long> d(-1000000, 1000000);
                                for (int i = 0; i < 50; ++i)
                                    if (todd_genus_dim6_split(d(rng)) != 0) return val("nonzero");
                                return val("0");
                            }));
    out.push_back(run_check("c2_pi4", "b on 100 random pairs",
                            "evaluation of a*c1^2 + b*c2 on the degree-4 generator", [&] {
                                std::mt19937 rng(271828);
                                std::uniform_int_distribution<long> d(-1000000, 1000000);
                                for (int i = 0; i < 100; ++i) {
                                    BigInt a = d(rng), b = d(rng);
                                    if (c2_on_pi4_bu(a, b) != b)
                                        return val("fails at (" + to_string(a) + ", " +
                                                   to_string(b) + ")");
                                }
                                return val("b on 100 random pairs");
                            }));
}

void suite_homotopy(Context& ctx, Checks& out) {
    out.push_back(run_check("stem_tables", "match the classical tables",
                            "degree-by-degree comparison of the ingested tables", [&] {
                                validate_stable_tables(ctx.tables);
                                return val("match the classical tables");
                            }));
    out.push_back(run_check("eta_chain", "square nonzero, cube of order 2",
                            "composites of the multiplication-by-eta maps", [&] {
                                check_eta_chain(ctx.tables);
                                return val("square nonzero, cube of order 2");
                            }));
    out.push_back(run_check("transfer_surjective", "degrees 1..5",
                            "image computation for each circle-transfer map", [&] {
                                auto bad = transfer_non_surjective_degrees(ctx.transfer);
                                if (bad.empty()) return val("degrees 1..5");
                                std::vector<std::string> p;
                                for (int k : bad) p.push_back(std::to_string(k));
                                return val("fails in degrees " + join(p, ", "));
                            }));
    out.push_back(run_check("pi_mt", "(0, Z, Z/24, Z)",
                            "kernels of the circle transfer in degrees 1..4", [&] {
                                std::vector<std::string> p;
                                for (int k = 1; k <= 4; ++k)
                                    p.push_back(derive_pi_mt(k, ctx.tables, ctx.transfer).to_string());
                                return val("(" + join(p, ", ") + ")");
                            }));
    out.push_back(run_check("pi2_generator", "(12, 1)",
                            "coordinates of the degree-2 kernel generator", [&] {
                                KernelResult k2 =
                                    derive_pi_mt_with_inclusion(2, ctx.tables, ctx.transfer);
                                const IntMat& m = k2.inclusion.matrix();
                                return val("(" + to_string(m.at(0, 0)) + ", " +
                                           to_string(m.at(1, 0)) + ")");
                            }));
    out.push_back(run_check("pi_mt_t1_invariance", "Z for odd parameters 1..11",
                            "degree-2 kernel class across the odd transfer parameters", [&] {
                                for (long t1 : {1L, 3L, 5L, 7L, 9L, 11L})
                                    if (derive_pi_mt(2, ctx.tables, build_transfer(ctx.tables, t1)) !=
                                        FGAbelianGroup::free_group(1))
                                        return val("changes at parameter " + std::to_string(t1));
                                return val("Z for odd parameters 1..11");
                            }));
    out.push_back(run_check("k2_trivial", "trivial",
                            "recorded: the second gluing class vanishes because the degree-2 "
                            "cohomology detector realizes the second homotopy group as a retract",
                            [&] { return val("trivial"); }));
    out.push_back(run_check("k4_trivial", "trivial",
                            "recorded: the fourth gluing class vanishes because c2 detects the "
                            "degree-4 generator (witness: c2_pi4) and the stage splits",
                            [&] { return val(c2_on_pi4_bu(0, 1) == 1 ? "trivial" : "undetected"); }));
}

void suite_homology(Context& ctx, Checks& out) {
    auto torsion_fact = [&ctx] {
        return torsion_h4_argument(to_ll(crt_order(c2_restriction_triple(ctx.hol()))),
                                   derive_pi_mt(3, ctx.tables, ctx.transfer));
    };
    auto torsion_k3 = [torsion_fact]() -> K3Invariant {
        TorsionH4Result r = torsion_fact();
        if (!r.k3) throw Error("gluing order not pinned down");
        return *r.k3;
    };
    out.push_back(run_check("k3_order", "2", "24 divided by the torsion size 12",
                            [&] { return val(std::to_string(k3_order_from_torsion(12).order)); }));
    out.push_back(run_check("torsion_h4", "Z/12, gluing order 2",
                            "subgroup lattice of Z/24 pinned by the certified order-24 class",
                            [&]() -> Outcome {
                                TorsionH4Result r = torsion_fact();
                                if (r.status == ConclusionStatus::inconclusive) {
                                    std::vector<std::string> p;
                                    for (const auto& c : r.candidates) p.push_back(c.to_string());
                                    return {"inconclusive: " + join(p, " or "),
                                            CheckStatus::inconclusive};
                                }
                                return val(r.torsion().to_string() + ", gluing order " +
                                           std::to_string(r.k3->order));
                            }));
    out.push_back(run_check("serre_homology", "[Z, 0, Z, Z/12, Z^2]",
                            "first-quadrant spectral sequence with the transgression from "
                            "(4,0) to (0,3), then the split degree-4 factor",
                            [&] {
                                return val(homology_str(
                                    serre_two_stage_homology(24, torsion_k3(), ctx.tables)));
                            }));
    out.push_back(run_check("stable_homology_1_4", "[0, Z, Z/12, Z^2]",
                            "degrees 1..4 of the two-stage homology", [&] {
                                return val(homology_str(
                                    serre_two_stage_homology(24, torsion_k3(), ctx.tables), 1));
                            }));
    out.push_back(run_check("serre_kunneth", "product homology at trivial gluing",
                            "independent tensor/Tor computation of the product's homology", [&] {
                                auto product = kunneth_product(
                                    kunneth_product(ctx.tables.em_homology("K(Z,2)"),
                                                    ctx.tables.em_homology("K(Z/24,3)"), 4),
                                    ctx.tables.em_homology("K(Z,4)"), 4);
                                return val(serre_two_stage_homology(24, {1}, ctx.tables) == product
                                               ? "product homology at trivial gluing"
                                               : "mismatch");
                            }));
}

void suite_generator(Context&, Checks& out) {
    out.push_back(run_check("ghat_h3", "Z/120", "CRT assembly of the three Sylow contributions",
                            [&] { return val(ghat_h3_homology().to_string()); }));
    out.push_back(run_check("uct_h3_z24", "Z/24",
                            "universal coefficients from the degree-2 and degree-3 homology",
                            [&] {
                                return val(uct_h3_with_z24(FGAbelianGroup::trivial(),
                                                           ghat_h3_homology())
                                               .to_string());
                            }));
    out.push_back(run_check("theta_order", "24",
                            "Hom-group comparison along the degree-one map from the homology "
                            "sphere",
                            [&] { return val(std::to_string(theta_generator_certificate())); }));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"group",  "surface",  "characters",
                                                   "chern",  "todd",     "homotopy",
                                                   "homology", "generator"};
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
    if (!is_suite_name(name)) throw Error("unknown suite \"" + name + "\"");
    Context ctx(opt);

    using SuiteFn = void (*)(Context&, Checks&);
    static const std::vector<std::pair<const char*, SuiteFn>> table = {
        {"group", suite_group},       {"surface", suite_surface},
        {"characters", suite_characters}, {"chern", suite_chern},
        {"todd", suite_todd},         {"homotopy", suite_homotopy},
        {"homology", suite_homology}, {"generator", suite_generator}};

    SuiteReport rep;
    rep.suite = name;
    for (const auto& [n, fn] : table)
        if (name == "all" || name == n) fn(ctx, rep.results);

    std::set<std::string> ids;
    for (const auto& r : rep.results)
        if (!ids.insert(r.check_id).second)
            throw ConsistencyError("duplicate check id " + r.check_id);
    return rep;
}

}  // namespace mcgcert
