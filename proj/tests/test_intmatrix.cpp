#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcgcert/intmatrix.hpp"

#include <random>

using mcgcert::BigInt;
using mcgcert::IntMat;
using mcgcert::smith_invariants;
using mcgcert::smith_normal_form;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
    IntMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

void check_snf(const IntMat& a) {
    auto s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(abs(s.U.determinant()) == 1);
    CHECK(abs(s.V.determinant()) == 1);
    // diagonal, nonnegative, divisibility chain
    for (int i = 0; i < s.D.rows(); ++i)
        for (int j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D.at(i, j) == 0);
    int n = std::min(s.D.rows(), s.D.cols());
    for (int i = 0; i < n; ++i) CHECK(s.D.at(i, i) >= 0);
    for (int i = 0; i + 1 < n; ++i) {
        if (s.D.at(i, i) == 0)
            CHECK(s.D.at(i + 1, i + 1) == 0);
        else
            CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
    }
}

}  // namespace

TEST_CASE("snf of identity") {
    IntMat id = IntMat::identity(4);
    auto s = smith_normal_form(id);
    CHECK(s.D == id);
    check_snf(id);
}

TEST_CASE("snf worked example") {
    IntMat a = from_rows({{2, 4}, {6, 8}});
    auto inv = smith_invariants(a);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 4);
    check_snf(a);
}

TEST_CASE("snf of zero and rectangular matrices") {
    IntMat z(3, 2);
    auto s = smith_normal_form(z);
    CHECK(s.D.is_zero());
    check_snf(z);
    CHECK(smith_invariants(z).empty());

    IntMat r = from_rows({{1, 2, 3}, {4, 5, 6}});
    check_snf(r);
    auto inv = smith_invariants(r);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == 3);
}

TEST_CASE("determinant examples") {
    CHECK(from_rows({{1, 2}, {3, 4}}).determinant() == -2);
    CHECK(from_rows({{2, 0}, {0, 5}}).determinant() == 10);
    CHECK(IntMat::identity(5).determinant() == 1);
    CHECK(from_rows({{0, 1}, {1, 0}}).determinant() == -1);
    CHECK(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).determinant() == 0);
}

TEST_CASE("snf property test on random matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int t = 0; t < 200; ++t) {
        IntMat a(dim(rng), dim(rng));
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) = val(rng);
        check_snf(a);
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int t = 0; t < 50; ++t) {
        IntMat a(4, 4), b(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                a.at(i, j) = val(rng);
                b.at(i, j) = val(rng);
            }
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
}

TEST_CASE("kernel lattice") {
    IntMat a = from_rows({{1, 2, 3}, {2, 4, 6}});  // rank 1
    IntMat k = a.kernel_lattice();
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());

    IntMat full = IntMat::identity(3);
    CHECK(full.kernel_lattice().cols() == 0);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int t = 0; t < 50; ++t) {
        IntMat m(3, 5);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
        IntMat ker = m.kernel_lattice();
        CHECK((m * ker).is_zero());
        CHECK(ker.cols() >= 2);  // rank is at most 3
    }
}

TEST_CASE("stacking helpers") {
    IntMat a = from_rows({{1, 2}});
    IntMat b = from_rows({{3, 4}});
    IntMat v = a.vstack(b);
    CHECK(v.rows() == 2);
    CHECK(v.at(1, 0) == 3);
    IntMat h = a.hstack(b);
    CHECK(h.cols() == 4);
    CHECK(h.at(0, 2) == 3);
    CHECK_THROWS_AS(a.vstack(IntMat(1, 3)), mcgcert::Error);
}
