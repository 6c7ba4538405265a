#include "mcgcert/surface.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace mcgcert {

ProjPoint::ProjPoint(Cyclotomic a_, Cyclotomic b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.is_zero() && b.is_zero()) throw Error("ProjPoint: both coordinates zero");
    if (!a.is_zero()) {
        Cyclotomic inv = a.inverse();
        b *= inv;
        a = Cyclotomic::one();
    } else {
        b = Cyclotomic::one();
    }
}

std::string ProjPoint::to_string() const {
    return "[" + a.to_string() + " : " + b.to_string() + "]";
}

nlohmann::json ProjPoint::to_json() const {
    nlohmann::json coords = nlohmann::json::array();
    for (const Cyclotomic* c : {&a, &b}) {
        nlohmann::json vec = nlohmann::json::array();
        for (int i = 0; i < Cyclotomic::Degree; ++i) vec.push_back(mcgcert::to_string(c->coeff(i)));
        coords.push_back(vec);
    }
    return coords;
}

ProjPoint SU2Matrix::apply(const ProjPoint& p) const {
    return {m00 * p.a + m01 * p.b, m10 * p.a + m11 * p.b};
}

SU2Matrix su2_matrix(const Quaternion& q) {
    Cyclotomic i = Cyclotomic::root_of_unity(4);
    return {q.w + q.x * i, q.y + q.z * i, -q.y + q.z * i, q.w - q.x * i};
}

std::vector<EigenPair> eigen_data(const Quaternion& q) {
    if (q == Quaternion::one() || q == -Quaternion::one())
        throw Error("eigen_data: central element fixes every line");
    SU2Matrix m = su2_matrix(q);
    Cyclotomic tr = m.trace();

    // Eigenvalues are roots of unity λ, λ^-1 with λ + λ^-1 = trace.
    std::vector<int> exps;
    for (int k = 0; k < Cyclotomic::Order; ++k) {
        if (Cyclotomic::zeta_pow(k) + Cyclotomic::zeta_pow(-k) == tr) exps.push_back(k);
    }
    // the solutions come in a pair {k, 60-k}; k=0,30 would mean q = ±1
    if (exps.size() != 2 || exps[0] == 0 || exps[0] == 30)
        throw ConsistencyError("eigen_data: eigenvalue search failed for " + q.to_string());

    std::vector<EigenPair> out;
    for (int k : exps) {
        Cyclotomic lam = Cyclotomic::zeta_pow(k);
        // a row of (M - λI) annihilates the eigenvector
        Cyclotomic r0 = m.m00 - lam, r1 = m.m01;
        ProjPoint line = (!r0.is_zero() || !r1.is_zero())
                             ? ProjPoint(r1, -r0)
                             : ProjPoint(m.m11 - lam, -m.m10);
        // verify M v = λ v
        ProjPoint image = m.apply(line);
        if (!(image == line))
            throw ConsistencyError("eigen_data: eigenline is not fixed");
        Cyclotomic check0 = m.m00 * line.a + m.m01 * line.b - lam * line.a;
        Cyclotomic check1 = m.m10 * line.a + m.m11 * line.b - lam * line.b;
        if (!check0.is_zero() || !check1.is_zero())
            throw ConsistencyError("eigen_data: eigenvalue mismatch on eigenline");
        out.push_back({lam, line});
    }
    if (out[0].line == out[1].line)
        throw ConsistencyError("eigen_data: coincident eigenlines for non-central element");
    return out;
}

std::vector<ProjPoint> branch_locus() {
    const GroupModel& g = binary_icosahedral();
    std::set<ProjPoint> pts;
    for (int i = 0; i < g.order(); ++i) {
        if (g.element_order(i) != 4) continue;
        for (const EigenPair& e : eigen_data(g.element(i))) pts.insert(e.line);
    }
    if (pts.size() != 30)
        throw ConsistencyError("branch locus has " + std::to_string(pts.size()) +
                               " points, expected 30");
    return {pts.begin(), pts.end()};
}

const SurfaceModel& SurfaceModel::standard() {
    static const SurfaceModel s = [] {
        SurfaceModel m;
        m.half_degree = 15;
        m.branch = branch_locus();
        m.genus = riemann_hurwitz_genus(2, int(m.branch.size()));
        return m;
    }();
    return s;
}

bool SurfaceModel::is_branch(const ProjPoint& p) const {
    return std::binary_search(branch.begin(), branch.end(), p);
}

int riemann_hurwitz_genus(int sheets, int branch_count) {
    if (sheets != 2) throw Error("riemann_hurwitz_genus: only double covers are supported");
    if (branch_count % 2 != 0)
        throw Error("riemann_hurwitz_genus: odd branch count admits no double cover");
    // 2 - 2g = 2*2 - branch_count
    int g = (branch_count - 2) / 2;
    if (g < 0) throw Error("riemann_hurwitz_genus: negative genus");
    return g;
}

namespace {

FixedPointReport compute_fixed_points(int element_index, const SurfaceModel& s) {
    const GroupModel& g = binary_icosahedral();
    FixedPointReport rep;
    rep.element = element_index;
    rep.order = g.element_order(element_index);
    const Quaternion& q = g.element(element_index);

    if (q == -Quaternion::one()) {
        // acts trivially on the base; on the cover exactly the points over
        // the branch locus survive, each with rotation -1 on the fiber
        for (const ProjPoint& p : s.branch)
            rep.records.push_back({p, 1, true, -Cyclotomic::one()});
        rep.total = int(s.branch.size());
        return rep;
    }

    for (const EigenPair& e : eigen_data(q)) {
        bool branch = s.is_branch(e.line);
        if (branch) {
            // fiber coordinate of O(15) is the local coordinate of the cover
            Cyclotomic rot = e.eigenvalue.pow(-s.half_degree);
            // the derivative of the invariant section forces λ^-2 = λ^-30
            if (!(e.eigenvalue.pow(-2) == e.eigenvalue.pow(-2 * s.half_degree)))
                throw ConsistencyError("fixed branch point violates the section derivative rule");
            rep.records.push_back({e.line, 1, true, rot});
        } else {
            bool unramified_lifts = e.eigenvalue.pow(-s.half_degree) == Cyclotomic::one();
            rep.records.push_back({e.line, unramified_lifts ? 2 : 0, false, e.eigenvalue.pow(-2)});
        }
    }
    for (const FixedPointRecord& r : rep.records) rep.total += r.lifts_fixed;
    return rep;
}

}  // namespace

FixedPointReport fixed_points_on_surface(int element_index, const SurfaceModel& s) {
    const GroupModel& g = binary_icosahedral();
    if (element_index == g.identity_index())
        throw Error("fixed_points_on_surface: identity has an infinite fixed set");
    // Every certificate walks the same 119 reports of the canonical model, so
    // those are computed once per process.
    if (&s == &SurfaceModel::standard()) {
        static std::vector<std::optional<FixedPointReport>> cache(size_t(g.order()));
        auto& slot = cache[size_t(element_index)];
        if (!slot) slot = compute_fixed_points(element_index, s);
        return *slot;
    }
    return compute_fixed_points(element_index, s);
}

nlohmann::json FixedPointReport::to_json() const {
    nlohmann::json j;
    j["element"] = element;
    j["order"] = order;
    j["total"] = total;
    nlohmann::json recs = nlohmann::json::array();
    for (const FixedPointRecord& r : records) {
        nlohmann::json rec;
        rec["base"] = r.base.to_json();
        rec["lifts_fixed"] = r.lifts_fixed;
        rec["is_branch"] = r.is_branch;
        auto exp = r.rotation.as_root_of_unity();
        if (!exp) throw ConsistencyError("fixed-point rotation is not a root of unity");
        rec["rotation_exponent"] = *exp;
        recs.push_back(rec);
    }
    j["records"] = recs;
    return j;
}

BurnsideResult burnside_consistency(const SurfaceModel& s) {
    const GroupModel& g = binary_icosahedral();
    BurnsideResult res;
    res.sum = 0;
    for (int i = 0; i < g.order(); ++i) {
        if (i == g.identity_index()) continue;
        res.sum += fixed_points_on_surface(i, s).total;
    }
    BigInt chi = 2 - 2 * BigInt(s.genus);
    res.quotient_euler = Rational(chi + res.sum, g.order());
    if (res.quotient_euler != 2)
        throw ConsistencyError("Burnside average is not the Euler number of a sphere");
    return res;
}

}  // namespace mcgcert
