#include "mcgcert/abelian.hpp"

#include "mcgcert/modint.hpp"

#include <algorithm>
#include <sstream>

namespace mcgcert {

namespace {

// Relation matrix of a group: column i kills torsion generator i.
IntMat relation_matrix(const FGAbelianGroup& g) {
    int n = g.num_generators();
    int t = int(g.invariant_factors().size());
    IntMat r(n, t);
    for (int i = 0; i < t; ++i) r.at(g.free_rank() + i, i) = g.invariant_factors()[size_t(i)];
    return r;
}

BigInt parse_positive_int(const std::string& s) {
    if (s.empty()) throw Error("abelian group parse: empty integer");
    for (char ch : s)
        if (!isdigit(static_cast<unsigned char>(ch)))
            throw Error("abelian group parse: bad integer '" + s + "'");
    return BigInt(s);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

FGAbelianGroup::FGAbelianGroup(int free_rank, std::vector<BigInt> factors) : rank_(free_rank) {
    if (free_rank < 0) throw Error("FGAbelianGroup: negative rank");
    for (const auto& f : factors)
        if (f < 1) throw Error("FGAbelianGroup: invariant factor must be >= 1");
    // canonicalize via the Smith form of the diagonal relation matrix
    IntMat diag(int(factors.size()), int(factors.size()));
    for (int i = 0; i < diag.rows(); ++i) diag.at(i, i) = factors[size_t(i)];
    for (auto& d : smith_invariants(diag))
        if (d > 1) factors_.push_back(d);
}

FGAbelianGroup FGAbelianGroup::cyclic(const BigInt& n) {
    if (n < 1) throw Error("cyclic group order must be >= 1");
    FGAbelianGroup g;
    if (n > 1) g.factors_.push_back(n);
    return g;
}

FGAbelianGroup FGAbelianGroup::cokernel(const IntMat& rel) {
    SmithResult s = smith_normal_form(rel);
    FGAbelianGroup g;
    int n = rel.rows();
    int pivots = std::min(rel.rows(), rel.cols());
    int nonzero = 0;
    for (int i = 0; i < pivots; ++i) {
        const BigInt& d = s.D.at(i, i);
        if (d == 0) break;
        ++nonzero;
        if (d > 1) g.factors_.push_back(d);
    }
    g.rank_ = n - nonzero;
    return g;
}

BigInt FGAbelianGroup::generator_order(int i) const {
    if (i < 0 || i >= num_generators()) throw Error("generator index out of range");
    if (i < rank_) return 0;
    return factors_[size_t(i - rank_)];
}

BigInt FGAbelianGroup::order() const {
    if (rank_ > 0) throw Error("order of infinite group");
    BigInt o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
}

FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& o) const {
    std::vector<BigInt> f = factors_;
    f.insert(f.end(), o.factors_.begin(), o.factors_.end());
    return {rank_ + o.rank_, std::move(f)};
}

std::string FGAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ == 1) {
        os << "Z";
        first = false;
    } else if (rank_ > 1) {
        os << "Z^" << rank_;
        first = false;
    }
    for (const auto& d : factors_) {
        if (!first) os << " ⊕ ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FGAbelianGroup FGAbelianGroup::parse(const std::string& s) {
    // normalize "⊕" to "+" and split
    std::string text = s;
    const std::string oplus = "⊕";
    size_t pos;
    while ((pos = text.find(oplus)) != std::string::npos) text.replace(pos, oplus.size(), "+");

    int rank = 0;
    std::vector<BigInt> factors;
    size_t start = 0;
    bool any = false;
    while (start <= text.size()) {
        size_t sep = text.find('+', start);
        std::string term = trim(text.substr(start, sep == std::string::npos ? sep : sep - start));
        start = (sep == std::string::npos) ? text.size() + 1 : sep + 1;
        if (term.empty()) throw Error("abelian group parse: empty summand in '" + s + "'");
        any = true;
        if (term == "0") continue;
        if (term == "Z") {
            ++rank;
        } else if (term.rfind("Z^", 0) == 0) {
            BigInt k = parse_positive_int(term.substr(2));
            if (k < 1) throw Error("abelian group parse: bad rank in '" + term + "'");
            rank += int(k);
        } else if (term.rfind("Z/", 0) == 0) {
            BigInt d = parse_positive_int(term.substr(2));
            if (d < 1) throw Error("abelian group parse: bad torsion order in '" + term + "'");
            factors.push_back(d);
        } else {
            throw Error("abelian group parse: unrecognized summand '" + term + "'");
        }
    }
    if (!any) throw Error("abelian group parse: empty input");
    return {rank, std::move(factors)};
}

// ---------------------------------------------------------------------------

AbHom::AbHom(FGAbelianGroup source, FGAbelianGroup target, IntMat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    int n = source_.num_generators();
    int m = target_.num_generators();
    if (matrix_.rows() != m || matrix_.cols() != n)
        throw Error("AbHom: matrix is " + std::to_string(matrix_.rows()) + "x" +
                    std::to_string(matrix_.cols()) + ", expected " + std::to_string(m) + "x" +
                    std::to_string(n));
    // normalize torsion coordinates
    for (int i = target_.free_rank(); i < m; ++i) {
        BigInt e = target_.generator_order(i);
        for (int j = 0; j < n; ++j) matrix_.at(i, j) = mod_norm(matrix_.at(i, j), e);
    }
    // each source generator's order must annihilate its image
    for (int j = 0; j < n; ++j) {
        BigInt d = source_.generator_order(j);
        if (d == 0) continue;
        for (int i = 0; i < m; ++i) {
            BigInt e = target_.generator_order(i);
            BigInt v = d * matrix_.at(i, j);
            bool ok = (e == 0) ? (v == 0) : (v % e == 0);
            if (!ok)
                throw Error("AbHom: image of generator " + std::to_string(j) +
                            " is not annihilated by its order");
        }
    }
}

AbHom AbHom::zero(const FGAbelianGroup& source, const FGAbelianGroup& target) {
    return {source, target, IntMat(target.num_generators(), source.num_generators())};
}

AbHom AbHom::identity(const FGAbelianGroup& g) {
    return {g, g, IntMat::identity(g.num_generators())};
}

bool AbHom::is_zero() const { return matrix_.is_zero(); }

FGAbelianGroup AbHom::cokernel_group() const {
    return FGAbelianGroup::cokernel(matrix_.hstack(relation_matrix(target_)));
}

bool AbHom::is_surjective() const { return cokernel_group().is_trivial(); }

AbHom AbHom::compose(const AbHom& g) const {
    if (g.target_ != source_) throw Error("AbHom::compose: middle groups differ");
    return {g.source_, target_, matrix_ * g.matrix_};
}

KernelResult hom_kernel_with_inclusion(const AbHom& f) {
    const FGAbelianGroup& src = f.source();
    int n = src.num_generators();

    // Lattice of lifts x in Z^n with f(x) = 0 in the target: kernel of
    // [F | R_target] projected to the first n coordinates.
    IntMat big = f.matrix().hstack(relation_matrix(f.target()));
    IntMat ker = big.kernel_lattice();
    int k = ker.cols();
    IntMat P(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) P.at(i, j) = ker.at(i, j);

    // Relations among those generators: z with P z ∈ source relations.
    IntMat rel_big = P.hstack(relation_matrix(src));
    IntMat rel_ker = rel_big.kernel_lattice();
    IntMat Rel(k, rel_ker.cols());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < rel_ker.cols(); ++j) Rel.at(i, j) = rel_ker.at(i, j);

    // ker(f) = Z^k / span(Rel); read generators off the Smith form.
    SmithResult s = smith_normal_form(Rel);
    IntMat new_gens = P * inverse_unimodular(s.U);  // column i generates summand i

    std::vector<int> free_idx, torsion_idx;
    std::vector<BigInt> torsion_orders;
    for (int i = 0; i < k; ++i) {
        BigInt d = (i < std::min(Rel.rows(), Rel.cols())) ? s.D.at(i, i) : BigInt(0);
        if (d == 1) continue;  // trivial summand
        if (d == 0)
            free_idx.push_back(i);
        else {
            torsion_idx.push_back(i);
            torsion_orders.push_back(d);
        }
    }

    FGAbelianGroup kernel_group(int(free_idx.size()), torsion_orders);

    // Write the surviving generators in source coordinates, free ones first,
    // sign-normalized on the leading free coordinate.
    IntMat incl(n, kernel_group.num_generators());
    auto place = [&](int dst, int src_col) {
        // reduce torsion coordinates, fix the sign from the free part
        std::vector<BigInt> col(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) col[size_t(i)] = new_gens.at(i, src_col);
        for (int i = 0; i < src.free_rank(); ++i) {
            if (col[size_t(i)] == 0) continue;
            if (col[size_t(i)] < 0)
                for (auto& x : col) x = -x;
            break;
        }
        for (int i = src.free_rank(); i < n; ++i)
            col[size_t(i)] = mod_norm(col[size_t(i)], src.generator_order(i));
        for (int i = 0; i < n; ++i) incl.at(i, dst) = col[size_t(i)];
    };
    int out = 0;
    for (int i : free_idx) place(out++, i);
    for (int i : torsion_idx) place(out++, i);

    return {kernel_group, AbHom(kernel_group, src, incl)};
}

FGAbelianGroup hom_kernel(const AbHom& f) { return hom_kernel_with_inclusion(f).group; }

FGAbelianGroup hom_group(const FGAbelianGroup& a, const BigInt& m) {
    if (m < 2) throw Error("hom_group: cyclic target order must be >= 2");
    std::vector<BigInt> factors;
    for (int i = 0; i < a.free_rank(); ++i) factors.push_back(m);
    for (const auto& d : a.invariant_factors()) factors.push_back(gcd(d, m));
    return {0, std::move(factors)};
}

FGAbelianGroup ext_with_cyclic(const FGAbelianGroup& a, const BigInt& m) {
    if (m < 2) throw Error("ext_with_cyclic: cyclic order must be >= 2");
    std::vector<BigInt> factors;
    for (const auto& d : a.invariant_factors()) factors.push_back(gcd(d, m));
    return {0, std::move(factors)};
}

FGAbelianGroup tensor_product(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    std::vector<BigInt> factors;
    for (const auto& d : a.invariant_factors())
        for (int i = 0; i < b.free_rank(); ++i) factors.push_back(d);
    for (const auto& e : b.invariant_factors())
        for (int i = 0; i < a.free_rank(); ++i) factors.push_back(e);
    for (const auto& d : a.invariant_factors())
        for (const auto& e : b.invariant_factors()) factors.push_back(gcd(d, e));
    return {a.free_rank() * b.free_rank(), std::move(factors)};
}

FGAbelianGroup tor_product(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    std::vector<BigInt> factors;
    for (const auto& d : a.invariant_factors())
        for (const auto& e : b.invariant_factors()) factors.push_back(gcd(d, e));
    return {0, std::move(factors)};
}

}  // namespace mcgcert
