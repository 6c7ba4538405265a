#include "mcgcert/group.hpp"

#include <algorithm>
#include <set>

namespace mcgcert {

int MultTable::power(int a, long k) const {
    if (k < 0) return power(inverse(a), -k);
    int acc = id;
    int base = a;
    while (k > 0) {
        if (k & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return acc;
}

int MultTable::order_of(int a) const {
    int x = a, ord = 1;
    while (x != id) {
        x = multiply(x, a);
        ++ord;
        if (ord > n) throw ConsistencyError("order_of: ran past group order");
    }
    return ord;
}

std::map<int, int> MultTable::order_census() const {
    std::map<int, int> census;
    for (int i = 0; i < n; ++i) ++census[order_of(i)];
    return census;
}

bool MultTable::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (multiply(a, b) != multiply(b, a)) return false;
    return true;
}

std::vector<int> MultTable::center() const {
    std::vector<int> z;
    for (int a = 0; a < n; ++a) {
        bool central = true;
        for (int b = 0; b < n && central; ++b) central = multiply(a, b) == multiply(b, a);
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<int> MultTable::generated(std::vector<int> gens) const {
    std::set<int> have{id};
    std::vector<int> work{id};
    for (int g : gens)
        if (have.insert(g).second) work.push_back(g);
    // close under products (inverses follow in a finite group)
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < work.size(); ++j) {
            int p = multiply(work[i], work[j]);
            if (have.insert(p).second) work.push_back(p);
        }
    return {have.begin(), have.end()};
}

std::vector<int> MultTable::commutator_subgroup() const {
    std::set<int> comms;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
            comms.insert(c);
        }
    return generated({comms.begin(), comms.end()});
}

MultTable MultTable::quotient(const std::vector<int>& normal) const {
    std::set<int> nset(normal.begin(), normal.end());
    if (!nset.count(id)) throw Error("quotient: subgroup does not contain the identity");
    for (int a : normal)
        for (int b : normal)
            if (!nset.count(multiply(a, b))) throw Error("quotient: subset is not a subgroup");
    for (int g = 0; g < n; ++g)
        for (int x : normal)
            if (!nset.count(multiply(multiply(g, x), inverse(g))))
                throw Error("quotient: subgroup is not normal");

    std::vector<int> coset_of(size_t(n), -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (coset_of[size_t(i)] >= 0) continue;
        int c = int(reps.size());
        reps.push_back(i);
        for (int x : nset) coset_of[size_t(multiply(i, x))] = c;
    }

    MultTable q;
    q.n = int(reps.size());
    q.mult.assign(size_t(q.n), std::vector<int>(size_t(q.n)));
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b)
            q.mult[size_t(a)][size_t(b)] = coset_of[size_t(multiply(reps[size_t(a)], reps[size_t(b)]))];
    // representative independence (normality should guarantee it; verify)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (q.mult[size_t(coset_of[size_t(a)])][size_t(coset_of[size_t(b)])] !=
                coset_of[size_t(multiply(a, b))])
                throw ConsistencyError("quotient: product not well-defined on cosets");
    q.id = coset_of[size_t(id)];
    q.inv.assign(size_t(q.n), -1);
    for (int a = 0; a < q.n; ++a) q.inv[size_t(a)] = coset_of[size_t(inverse(reps[size_t(a)]))];
    return q;
}

FGAbelianGroup MultTable::abelian_invariants() const {
    if (!is_abelian()) throw Error("abelian_invariants: group is not abelian");
    // factor the order, then read each p-part off the power-counting filtration
    std::vector<BigInt> cyclic_orders;
    long m = n;
    for (long p = 2; p * p <= m || m > 1; ++p) {
        if (p * p > m && m > 1) p = m;
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        // s_k = log_p #{x : x^(p^k) = 1}; m_k = s_k - s_{k-1} counts the
        // cyclic p-factors of exponent >= k
        std::vector<int> s{0};
        long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            int cnt = 0;
            for (int x = 0; x < n; ++x)
                if (power(x, pk) == id) ++cnt;
            int log = 0;
            long c = cnt;
            while (c % p == 0) {
                c /= p;
                ++log;
            }
            if (c != 1) throw ConsistencyError("abelian_invariants: fixed-point count not a p-power");
            s.push_back(log);
        }
        int parts = s[1];  // number of cyclic p-factors
        for (int i = 1; i <= parts; ++i) {
            int lambda = 0;
            for (int k = 1; k <= e; ++k)
                if (s[size_t(k)] - s[size_t(k - 1)] >= i) ++lambda;
            BigInt q = 1;
            for (int t = 0; t < lambda; ++t) q *= p;
            cyclic_orders.push_back(q);
        }
    }
    return {0, std::move(cyclic_orders)};
}

FGAbelianGroup MultTable::abelianization() const {
    return quotient(commutator_subgroup()).abelian_invariants();
}

// ---------------------------------------------------------------------------

GroupModel GroupModel::from_elements(std::vector<Quaternion> elems) {
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw ConsistencyError("group construction: duplicate elements");
    GroupModel g;
    g.elems_ = std::move(elems);
    int n = int(g.elems_.size());
    g.table_.n = n;

    std::map<Quaternion, int> index;
    for (int i = 0; i < n; ++i) {
        if (!(g.elems_[size_t(i)].norm() == Cyclotomic::one()))
            throw ConsistencyError("group construction: element without unit norm: " +
                                   g.elems_[size_t(i)].to_string());
        index[g.elems_[size_t(i)]] = i;
    }

    auto it = index.find(Quaternion::one());
    if (it == index.end()) throw ConsistencyError("group construction: no identity element");
    g.table_.id = it->second;

    auto mul_idx = [&](int a, int b) {
        auto p = index.find(g.elems_[size_t(a)] * g.elems_[size_t(b)]);
        if (p == index.end())
            throw ConsistencyError("group construction: set not closed under product");
        return p->second;
    };

    // Express every element as a word in a small generating set, verifying
    // one exact product per BFS step. The set is closed under right
    // multiplication by the generators and every element is a generator word,
    // so it is closed under all products; the remaining table entries follow
    // by associativity without touching the quaternion coordinates again.
    const int id = g.table_.id;
    std::vector<int> parent(size_t(n), -1), via(size_t(n), -1);
    std::vector<int> bfs_order;
    std::vector<char> reached(size_t(n), 0);
    reached[size_t(id)] = 1;
    std::vector<int> gens;
    for (int seed = 0; seed < n; ++seed) {
        if (reached[size_t(seed)]) continue;
        gens.push_back(seed);
        std::vector<int> frontier;
        for (int i = 0; i < n; ++i)
            if (reached[size_t(i)]) frontier.push_back(i);
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int a : frontier)
                for (int gi : gens) {
                    int ab = mul_idx(a, gi);
                    if (!reached[size_t(ab)]) {
                        reached[size_t(ab)] = 1;
                        parent[size_t(ab)] = a;
                        via[size_t(ab)] = gi;
                        bfs_order.push_back(ab);
                        next.push_back(ab);
                    }
                }
            frontier = std::move(next);
        }
    }

    g.table_.mult.assign(size_t(n), std::vector<int>(size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int gi : gens) g.table_.mult[size_t(i)][size_t(gi)] = mul_idx(i, gi);
    for (int i = 0; i < n; ++i) {
        auto& row = g.table_.mult[size_t(i)];
        row[size_t(id)] = i;
        for (int j : bfs_order)  // i*j = (i*parent)*generator
            row[size_t(j)] = g.table_.mult[size_t(row[size_t(parent[size_t(j)])])]
                                          [size_t(via[size_t(j)])];
    }

    g.table_.inv.assign(size_t(n), -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (g.table_.mult[size_t(i)][size_t(j)] == g.table_.id) {
                g.table_.inv[size_t(i)] = j;
                break;
            }
        if (g.table_.inv[size_t(i)] < 0)
            throw ConsistencyError("group construction: element without inverse");
    }
    return g;
}

int GroupModel::index_of(const Quaternion& q) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), q);
    if (it != elems_.end() && *it == q) return int(it - elems_.begin());
    return -1;
}

GroupModel GroupModel::subgroup(const std::vector<int>& indices) const {
    std::vector<Quaternion> sub;
    sub.reserve(indices.size());
    for (int i : indices) sub.push_back(elems_[size_t(i)]);
    return from_elements(std::move(sub));
}

GroupModel GroupModel::generated_subgroup(const std::vector<int>& gens) const {
    return subgroup(table_.generated(gens));
}

nlohmann::json GroupModel::to_json() const {
    nlohmann::json j;
    j["order"] = order();
    j["identity"] = identity_index();
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& q : elems_) {
        nlohmann::json coords = nlohmann::json::array();
        for (const Cyclotomic* c : {&q.w, &q.x, &q.y, &q.z}) {
            nlohmann::json vec = nlohmann::json::array();
            for (int i = 0; i < Cyclotomic::Degree; ++i) vec.push_back(to_string(c->coeff(i)));
            coords.push_back(vec);
        }
        elems.push_back(coords);
    }
    j["elements"] = elems;
    j["cayley"] = table_.mult;
    j["inverses"] = table_.inv;
    return j;
}

ConjugacyClasses conjugacy_classes(const GroupModel& g) {
    int n = g.order();
    ConjugacyClasses cc;
    cc.class_of.assign(size_t(n), -1);
    for (int i = 0; i < n; ++i) {
        if (cc.class_of[size_t(i)] >= 0) continue;
        int c = int(cc.representatives.size());
        cc.representatives.push_back(i);
        int size = 0;
        for (int x = 0; x < n; ++x) {
            int conj = g.multiply(g.multiply(x, i), g.inverse(x));
            if (cc.class_of[size_t(conj)] < 0) {
                cc.class_of[size_t(conj)] = c;
                ++size;
            }
        }
        cc.sizes.push_back(size);
    }
    return cc;
}

void CharacterVector::check_constant_on_classes(const GroupModel& g,
                                                const ConjugacyClasses& cc) const {
    if (int(values.size()) != g.order())
        throw ConsistencyError("character: wrong number of values");
    for (int i = 0; i < g.order(); ++i)
        if (!(values[size_t(i)] == values[size_t(cc.representatives[size_t(cc.class_of[size_t(i)])])]))
            throw ConsistencyError("character: not constant on conjugacy classes");
}

CharacterVector spin_character(const GroupModel& g) {
    CharacterVector chi;
    chi.values.reserve(size_t(g.order()));
    for (int i = 0; i < g.order(); ++i)
        chi.values.push_back(Rational(2) * g.element(i).w);
    return chi;
}

namespace {

GroupModel build_icosians() {
    const Cyclotomic one = Cyclotomic::one();
    const Cyclotomic phi = Cyclotomic::golden_ratio();
    const Cyclotomic phi_inv = phi - one;  // 1/phi = phi - 1
    const Rational half(1, 2);

    std::set<Quaternion> elems;

    // (±1, 0, 0, 0) and coordinate permutations: 8 elements
    for (int pos = 0; pos < 4; ++pos)
        for (int s : {1, -1}) {
            std::array<Cyclotomic, 4> v{};
            v[size_t(pos)] = s > 0 ? one : -one;
            elems.insert({v[0], v[1], v[2], v[3]});
        }

    // (±1 ±1 ±1 ±1)/2: 16 elements
    for (int mask = 0; mask < 16; ++mask) {
        std::array<Cyclotomic, 4> v;
        for (int i = 0; i < 4; ++i) {
            Cyclotomic c = half * one;
            v[size_t(i)] = (mask >> i) & 1 ? -c : c;
        }
        elems.insert({v[0], v[1], v[2], v[3]});
    }

    // even permutations of (0, ±1, ±phi, ±1/phi)/2: 96 elements
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[size_t(i)] > perm[size_t(j)]) ++inversions;
        if (inversions % 2 != 0) continue;
        for (int mask = 0; mask < 8; ++mask) {
            std::array<Cyclotomic, 4> base{Cyclotomic::zero(), half * one, half * phi,
                                           half * phi_inv};
            for (int b = 0; b < 3; ++b)
                if ((mask >> b) & 1) base[size_t(b + 1)] = -base[size_t(b + 1)];
            std::array<Cyclotomic, 4> v;
            for (int i = 0; i < 4; ++i) v[size_t(i)] = base[size_t(perm[size_t(i)])];
            elems.insert({v[0], v[1], v[2], v[3]});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (elems.size() != 120)
        throw ConsistencyError("binary icosahedral construction produced " +
                               std::to_string(elems.size()) + " elements, expected 120");
    return GroupModel::from_elements({elems.begin(), elems.end()});
}

}  // namespace

const GroupModel& binary_icosahedral() {
    static const GroupModel g = build_icosians();
    return g;
}

GroupModel build_q8() {
    const Cyclotomic one = Cyclotomic::one();
    std::vector<Quaternion> elems;
    for (int pos = 0; pos < 4; ++pos)
        for (int s : {1, -1}) {
            std::array<Cyclotomic, 4> v{};
            v[size_t(pos)] = s > 0 ? one : -one;
            elems.push_back({v[0], v[1], v[2], v[3]});
        }
    return GroupModel::from_elements(std::move(elems));
}

GroupModel sylow_subgroup(const GroupModel& g, int p) {
    if (p < 2) throw Error("sylow_subgroup: p must be at least 2");
    long target = 1;
    {
        long n = g.order();
        while (n % p == 0) {
            n /= p;
            target *= p;
        }
    }
    if (target == 1) return g.subgroup({g.identity_index()});

    auto is_p_power = [&](long m) {
        while (m % p == 0) m /= p;
        return m == 1;
    };

    std::vector<int> current{g.identity_index()};
    std::set<int> in_current(current.begin(), current.end());
    for (int i = 0; i < g.order() && long(current.size()) < target; ++i) {
        if (in_current.count(i) || !is_p_power(g.element_order(i))) continue;
        std::vector<int> gens = current;
        gens.push_back(i);
        std::vector<int> bigger = g.table().generated(gens);
        if (long(bigger.size()) <= target && is_p_power(long(bigger.size()))) {
            current = std::move(bigger);
            in_current = {current.begin(), current.end()};
        }
    }
    if (long(current.size()) != target)
        throw ConsistencyError("sylow_subgroup: search failed to reach full order");
    return g.subgroup(current);
}

StandardGenerators standard_generators(const GroupModel& ghat) {
    StandardGenerators sg{-1, -1, -1};
    for (int i = 0; i < ghat.order(); ++i) {
        int ord = ghat.element_order(i);
        if (ord == 4 && sg.x2 < 0) sg.x2 = i;
        if (ord == 6 && sg.x3 < 0) sg.x3 = i;
        if (ord == 10 && sg.x5 < 0) sg.x5 = i;
    }
    if (sg.x2 < 0 || sg.x3 < 0 || sg.x5 < 0)
        throw ConsistencyError("standard_generators: missing element orders");
    // images must generate the order-60 quotient by {±1}
    size_t span = ghat.table().generated({sg.x2, sg.x3, sg.x5}).size();
    if (span != 60 && span != 120)
        throw ConsistencyError("standard_generators: chosen elements do not generate");
    return sg;
}

}  // namespace mcgcert
