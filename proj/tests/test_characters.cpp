#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcgcert/characters.hpp"

using namespace mcgcert;

namespace {

struct Fixture {
    const GroupModel& g = binary_icosahedral();
    const SurfaceModel& s = SurfaceModel::standard();
    StandardGenerators sg = standard_generators(g);
    CharacterVector complex = char_h1_complex(s);
    CharacterVector hol = char_h1_holomorphic(s);
    int h = g.index_of(-Quaternion::one());
    int x3sq, x5sq;

    Fixture() {
        x3sq = g.multiply(sg.x3, sg.x3);
        x5sq = g.multiply(sg.x5, sg.x5);
    }
};

const Fixture& fx() {
    static Fixture f;
    return f;
}

std::vector<BigInt> mults(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("topological character values") {
    const auto& f = fx();
    CHECK(f.complex.at(f.g.identity_index()) == Cyclotomic(28));
    CHECK(f.complex.at(f.h) == Cyclotomic(-28));
    CHECK(f.complex.at(f.x3sq) == Cyclotomic(-2));
    CHECK(f.complex.at(f.x5sq) == Cyclotomic(-2));
    CHECK(f.complex.at(f.sg.x2) == Cyclotomic(0));
    CHECK(f.complex.at(f.sg.x3) == Cyclotomic(2));
    CHECK(f.complex.at(f.sg.x5) == Cyclotomic(2));
}

TEST_CASE("holomorphic character values") {
    const auto& f = fx();
    CHECK(f.hol.at(f.g.identity_index()) == Cyclotomic(14));
    CHECK(f.hol.at(f.h) == Cyclotomic(-14));
    CHECK(f.hol.at(f.x3sq) == Cyclotomic(-1));
    CHECK(f.hol.at(f.x5sq) == Cyclotomic(-1));
    CHECK(f.hol.at(f.sg.x3) == Cyclotomic(1));
    CHECK(f.hol.at(f.sg.x5) == Cyclotomic(1));
    int order4 = 0;
    for (int i = 0; i < f.g.order(); ++i)
        if (f.g.element_order(i) == 4) {
            CHECK(f.hol.at(i).is_zero());
            ++order4;
        }
    CHECK(order4 == 30);
}

TEST_CASE("characters are class functions") {
    const auto& f = fx();
    ConjugacyClasses cc = conjugacy_classes(f.g);
    f.complex.check_constant_on_classes(f.g, cc);
    f.hol.check_constant_on_classes(f.g, cc);
}

TEST_CASE("dolbeault consistency at every element") {
    const auto& f = fx();
    for (int i = 0; i < f.g.order(); ++i)
        CHECK(f.hol.at(i) + f.hol.at(i).conj() == f.complex.at(i));
}

TEST_CASE("cyclic decompositions match the expected module structures") {
    const auto& f = fx();

    CyclicDecomposition c3 = decompose_cyclic(f.x3sq, f.complex);
    CHECK(c3.modulus == 3);
    CHECK(c3.multiplicities == mults({8, 10, 10}));

    CyclicDecomposition h3 = decompose_cyclic(f.x3sq, f.hol);
    CHECK(h3.multiplicities == mults({4, 5, 5}));

    CyclicDecomposition h5 = decompose_cyclic(f.x5sq, f.hol);
    CHECK(h5.modulus == 5);
    CHECK(h5.multiplicities == mults({2, 3, 3, 3, 3}));

    CyclicDecomposition c5 = decompose_cyclic(f.x5sq, f.complex);
    CHECK(c5.multiplicities == mults({4, 6, 6, 6, 6}));
}

TEST_CASE("decomposition dimensions and conjugation pairing") {
    const auto& f = fx();
    for (int gen : {f.sg.x2, f.sg.x3, f.sg.x5, f.x3sq, f.x5sq}) {
        CyclicDecomposition c = decompose_cyclic(gen, f.complex);
        CyclicDecomposition h = decompose_cyclic(gen, f.hol);
        int n = c.modulus;
        BigInt cdim = 0, hdim = 0;
        for (const auto& m : c.multiplicities) cdim += m;
        for (const auto& m : h.multiplicities) hdim += m;
        CHECK(cdim == 28);
        CHECK(hdim == 14);
        // m_r(complex) = m_r(hol) + m_{n-r}(hol)
        for (int r = 0; r < n; ++r)
            CHECK(c.multiplicities[size_t(r)] ==
                  h.multiplicities[size_t(r)] + h.multiplicities[size_t((n - r) % n)]);
    }
}

TEST_CASE("non-integral decomposition is a hard error") {
    const auto& f = fx();
    CharacterVector bogus;
    bogus.values.assign(size_t(f.g.order()), Cyclotomic::zero());
    bogus.values[size_t(f.x3sq)] = Cyclotomic::one();
    CHECK_THROWS_AS(decompose_cyclic(f.x3sq, bogus), ConsistencyError);
}

TEST_CASE("q8 decompositions") {
    const auto& f = fx();
    GroupModel syl2 = sylow_subgroup(f.g, 2);

    CharacterVector hol_res = restrict_character(syl2, f.g, f.hol);
    Q8Decomposition d = decompose_q8(syl2, hol_res);
    CHECK(d == Q8Decomposition{0, 0, 0, 0, 7});

    CharacterVector complex_res = restrict_character(syl2, f.g, f.complex);
    Q8Decomposition dc = decompose_q8(syl2, complex_res);
    CHECK(dc == Q8Decomposition{0, 0, 0, 0, 14});

    CharacterVector triv;
    triv.values.assign(8, Cyclotomic::one());
    CHECK(decompose_q8(syl2, triv) == Q8Decomposition{1, 0, 0, 0, 0});

    CharacterVector regular;
    regular.values.assign(8, Cyclotomic::zero());
    regular.values[size_t(syl2.identity_index())] = Cyclotomic(8);
    CHECK(decompose_q8(syl2, regular) == Q8Decomposition{1, 1, 1, 1, 2});

    CharacterVector bad;
    bad.values.assign(8, Cyclotomic::zero());
    bad.values[size_t(syl2.identity_index())] = Cyclotomic(1);
    bad.values[size_t(syl2.index_of(-Quaternion::one()))] = Cyclotomic(-3);
    CHECK_THROWS_AS(decompose_q8(syl2, bad), ConsistencyError);
}

TEST_CASE("decomposition json") {
    const auto& f = fx();
    nlohmann::json j = decompose_cyclic(f.x3sq, f.hol).to_json();
    CHECK(j["modulus"] == 3);
    CHECK(j["multiplicities"] == nlohmann::json({4, 5, 5}));

    GroupModel syl2 = sylow_subgroup(f.g, 2);
    nlohmann::json q = decompose_q8(syl2, restrict_character(syl2, f.g, f.hol)).to_json();
    CHECK(q["q8"] == nlohmann::json({0, 0, 0, 0, 7}));
}
