#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcgcert/abelian.hpp"

#include <random>

using mcgcert::AbHom;
using mcgcert::BigInt;
using mcgcert::FGAbelianGroup;
using mcgcert::IntMat;

namespace {

FGAbelianGroup G(const std::string& s) { return FGAbelianGroup::parse(s); }

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
    IntMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("canonical invariant factors") {
    CHECK(FGAbelianGroup(0, {BigInt(2), BigInt(3)}) == FGAbelianGroup::cyclic(6));
    CHECK(FGAbelianGroup(1, {BigInt(1)}) == FGAbelianGroup::free_group(1));
    FGAbelianGroup g(0, {BigInt(4), BigInt(6)});
    REQUIRE(g.invariant_factors().size() == 2);
    CHECK(g.invariant_factors()[0] == 2);
    CHECK(g.invariant_factors()[1] == 12);
    CHECK(g.order() == 24);

    // canonicalization is idempotent and order-preserving
    FGAbelianGroup again(g.free_rank(), g.invariant_factors());
    CHECK(again == g);
    CHECK(FGAbelianGroup(0, {BigInt(2), BigInt(4), BigInt(8)}).order() == 64);
}

TEST_CASE("string round trips") {
    for (const char* s : {"0", "Z", "Z^2", "Z/24", "Z ⊕ Z/2", "Z^3 ⊕ Z/2 ⊕ Z/24"}) {
        FGAbelianGroup g = G(s);
        CHECK(g.to_string() == s);
        CHECK(FGAbelianGroup::parse(g.to_string()) == g);
    }
    CHECK(G("Z + Z/2") == G("Z ⊕ Z/2"));
    CHECK(G("Z/3 + Z/2") == G("Z/6"));
    CHECK(G("Z/2 ⊕ Z") .to_string() == "Z ⊕ Z/2");
    CHECK(G("Z/1") == FGAbelianGroup::trivial());
    CHECK(G("0 + Z") == G("Z"));
    CHECK_THROWS_AS(G(""), mcgcert::Error);
    CHECK_THROWS_AS(G("Z/"), mcgcert::Error);
    CHECK_THROWS_AS(G("Q"), mcgcert::Error);
    CHECK_THROWS_AS(G("Z + + Z"), mcgcert::Error);
    CHECK_THROWS_AS(G("Z/-4"), mcgcert::Error);
}

TEST_CASE("cokernel presentation") {
    CHECK(FGAbelianGroup::cokernel(from_rows({{2}})) == G("Z/2"));
    CHECK(FGAbelianGroup::cokernel(from_rows({{2, 4}, {6, 8}})) == G("Z/2 + Z/4"));
    CHECK(FGAbelianGroup::cokernel(IntMat(2, 0)) == G("Z^2"));
    CHECK(FGAbelianGroup::cokernel(from_rows({{1, 0}, {0, 1}})) == G("0"));
    CHECK(FGAbelianGroup::cokernel(from_rows({{2, 0}, {0, 0}})) == G("Z + Z/2"));
}

TEST_CASE("hom validity") {
    // Z/2 -> Z, 1 -> 1 is not a homomorphism
    CHECK_THROWS_AS(AbHom(G("Z/2"), G("Z"), from_rows({{1}})), mcgcert::Error);
    // Z/2 -> Z/4, 1 -> 1 is not a homomorphism either
    CHECK_THROWS_AS(AbHom(G("Z/2"), G("Z/4"), from_rows({{1}})), mcgcert::Error);
    // but 1 -> 2 is
    AbHom f(G("Z/2"), G("Z/4"), from_rows({{2}}));
    CHECK(!f.is_zero());
    // torsion coordinates are normalized
    AbHom g(G("Z"), G("Z/5"), from_rows({{7}}));
    CHECK(g.matrix().at(0, 0) == 2);
    CHECK_THROWS_AS(AbHom(G("Z"), G("Z"), IntMat(2, 2)), mcgcert::Error);
}

TEST_CASE("kernel examples") {
    CHECK(hom_kernel(AbHom::zero(G("Z"), G("Z/2"))) == G("Z"));
    CHECK(hom_kernel(AbHom::identity(G("Z/24"))) == G("0"));

    // (n, e) -> n + 12 e  from Z ⊕ Z/2 onto Z/24
    AbHom f(G("Z + Z/2"), G("Z/24"), from_rows({{1, 12}}));
    auto [ker, incl] = hom_kernel_with_inclusion(f);
    CHECK(ker == G("Z"));
    REQUIRE(incl.matrix().cols() == 1);
    CHECK(incl.matrix().at(0, 0) == 12);
    CHECK(incl.matrix().at(1, 0) == 1);
    CHECK(f.compose(incl).is_zero());
    CHECK(f.is_surjective());
}

TEST_CASE("more kernels") {
    // multiplication by 2 on Z/4 has kernel Z/2
    CHECK(hom_kernel(AbHom(G("Z/4"), G("Z/4"), from_rows({{2}}))) == G("Z/2"));
    // projection Z^2 -> Z has kernel Z
    CHECK(hom_kernel(AbHom(G("Z^2"), G("Z"), from_rows({{1, 0}}))) == G("Z"));
    // multiplication by 3 on Z/24: kernel Z/3, cokernel Z/3
    AbHom m3(G("Z/24"), G("Z/24"), from_rows({{3}}));
    CHECK(hom_kernel(m3) == G("Z/3"));
    CHECK(m3.cokernel_group() == G("Z/3"));
    CHECK(!m3.is_surjective());
    // everything dies: map to trivial group
    CHECK(hom_kernel(AbHom::zero(G("Z^2 + Z/6"), G("0"))) == G("Z^2 + Z/6"));
}

TEST_CASE("hom groups into cyclic targets") {
    CHECK(hom_group(G("Z/120"), 24) == G("Z/24"));
    CHECK(hom_group(G("Z"), 24) == G("Z/24"));
    CHECK(hom_group(G("0"), 24) == G("0"));
    CHECK(hom_group(G("Z + Z/2"), 24) == G("Z/2 + Z/24"));
    CHECK(mcgcert::ext_with_cyclic(G("Z/120"), 24) == G("Z/24"));
    CHECK(mcgcert::ext_with_cyclic(G("Z"), 24) == G("0"));
    CHECK(mcgcert::ext_with_cyclic(G("Z/5"), 24) == G("0"));
}

TEST_CASE("composition") {
    AbHom a(G("Z"), G("Z"), from_rows({{3}}));
    AbHom b(G("Z"), G("Z/12"), from_rows({{2}}));
    AbHom c = b.compose(a);  // n -> 6n mod 12
    CHECK(c.matrix().at(0, 0) == 6);
    CHECK(hom_kernel(c) == G("Z"));
    CHECK(c.cokernel_group() == G("Z/6"));
}

TEST_CASE("kernel-inclusion exactness on random homs") {
    std::mt19937 rng(314);
    std::uniform_int_distribution<int> small(0, 2);
    std::uniform_int_distribution<int> coef(-8, 8);
    const BigInt orders[] = {BigInt(2), BigInt(3), BigInt(4), BigInt(6), BigInt(8), BigInt(12)};
    std::uniform_int_distribution<int> ordpick(0, 5);

    for (int trial = 0; trial < 120; ++trial) {
        auto random_group = [&] {
            int rank = small(rng);
            std::vector<BigInt> f;
            int t = small(rng);
            for (int i = 0; i < t; ++i) f.push_back(orders[ordpick(rng)]);
            return FGAbelianGroup(rank, f);
        };
        FGAbelianGroup src = random_group(), tgt = random_group();
        IntMat m(tgt.num_generators(), src.num_generators());
        for (int j = 0; j < src.num_generators(); ++j) {
            BigInt d = src.generator_order(j);
            for (int i = 0; i < tgt.num_generators(); ++i) {
                BigInt e = tgt.generator_order(i);
                if (d == 0) {
                    m.at(i, j) = coef(rng);
                } else if (e == 0) {
                    m.at(i, j) = 0;
                } else {
                    // entry must be a multiple of e / gcd(d, e)
                    m.at(i, j) = (e / gcd(d, e)) * coef(rng);
                }
            }
        }
        AbHom f(src, tgt, m);
        auto [ker, incl] = hom_kernel_with_inclusion(f);
        CHECK(f.compose(incl).is_zero());
        CHECK(incl.source() == ker);
        if (src.is_finite() && tgt.is_finite()) {
            // |src| * |coker| == |tgt| * |ker|
            CHECK(src.order() * f.cokernel_group().order() == tgt.order() * ker.order());
        }
    }
}

TEST_CASE("direct sum") {
    CHECK(G("Z/2").direct_sum(G("Z/3")) == G("Z/6"));
    CHECK(G("Z").direct_sum(G("Z/2")) == G("Z + Z/2"));
    CHECK(G("0").direct_sum(G("Z^2")) == G("Z^2"));
}

TEST_CASE("tensor and Tor") {
    CHECK(tensor_product(G("Z^2"), G("Z^3")) == G("Z^6"));
    CHECK(tensor_product(G("Z"), G("Z/24")) == G("Z/24"));
    CHECK(tensor_product(G("Z/2"), G("Z/3")).is_trivial());
    CHECK(tensor_product(G("Z/4"), G("Z/6")) == G("Z/2"));
    CHECK(tensor_product(G("Z + Z/2"), G("Z/4")) == G("Z/2 + Z/4"));
    CHECK(tensor_product(G("0"), G("Z^5")).is_trivial());

    CHECK(tor_product(G("Z^3"), G("Z/8")).is_trivial());
    CHECK(tor_product(G("Z/2"), G("Z/4")) == G("Z/2"));
    CHECK(tor_product(G("Z/6"), G("Z/4")) == G("Z/2"));
    CHECK(tor_product(G("Z/2 + Z/4"), G("Z/4")) == G("Z/2 + Z/4"));

    // symmetry on a few shapes
    for (const char* a : {"Z/2", "Z/12", "Z + Z/6", "Z^2 + Z/4 + Z/8"})
        for (const char* b : {"Z/3", "Z/8", "Z + Z/2"}) {
            CHECK(tensor_product(G(a), G(b)) == tensor_product(G(b), G(a)));
            CHECK(tor_product(G(a), G(b)) == tor_product(G(b), G(a)));
        }
}
