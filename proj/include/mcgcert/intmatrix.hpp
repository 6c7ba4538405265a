#pragma once

// Dense integer matrices over arbitrary-precision integers, plus the Smith
// normal form. SNF is the workhorse behind every finitely generated abelian
// group computation in the library.

#include "mcgcert/numeric.hpp"

#include <string>
#include <vector>

namespace mcgcert {

class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMat& o) const = default;

    IntMat operator*(const IntMat& o) const;
    IntMat transpose() const;
    bool is_zero() const;

    // Exact determinant (Bareiss fraction-free elimination). Square only.
    BigInt determinant() const;

    std::string to_string() const;

    // Columns form a basis of the integer kernel lattice {x : A x = 0}.
    IntMat kernel_lattice() const;

    // Stacks o below *this (column counts must match).
    IntMat vstack(const IntMat& o) const;
    // Places o to the right of *this (row counts must match).
    IntMat hstack(const IntMat& o) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> a_;
};

// U * A * V == D with U, V unimodular and D diagonal, each diagonal entry
// nonnegative and dividing the next.
struct SmithResult {
    IntMat U, D, V;
};

SmithResult smith_normal_form(const IntMat& A);

// The nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<BigInt> smith_invariants(const IntMat& A);

// Exact inverse of a matrix with determinant ±1; throws otherwise.
IntMat inverse_unimodular(const IntMat& m);

}  // namespace mcgcert
