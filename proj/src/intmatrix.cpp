#include "mcgcert/intmatrix.hpp"

#include <sstream>
#include <utility>

namespace mcgcert {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix product: dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

BigInt IntMat::determinant() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMat m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

IntMat IntMat::vstack(const IntMat& o) const {
    if (cols_ != o.cols_) throw Error("vstack: column mismatch");
    IntMat r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

IntMat IntMat::hstack(const IntMat& o) const {
    if (rows_ != o.rows_) throw Error("hstack: row mismatch");
    IntMat r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

namespace {

void swap_rows(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_sub(IntMat& m, int a, const BigInt& q, int b) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_sub(IntMat& m, int a, const BigInt& q, int b) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMat& m, int i) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// g = x*a + y*b with g = gcd(a, b) >= 0 (g = 0 only for a = b = 0)
BigInt ext_gcd(BigInt a, BigInt b, BigInt& x, BigInt& y) {
    BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        BigInt t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0;
    y = y0;
    return a;
}

// (row[a], row[b]) <- (p*row[a] + q*row[b], r*row[a] + s*row[b]); the caller
// guarantees p*s - q*r = +-1, so the pair is a change of basis
void row_combine(IntMat& m, int a, int b, const BigInt& p, const BigInt& q,
                 const BigInt& r, const BigInt& s) {
    for (int j = 0; j < m.cols(); ++j) {
        BigInt va = m.at(a, j), vb = m.at(b, j);
        m.at(a, j) = p * va + q * vb;
        m.at(b, j) = r * va + s * vb;
    }
}

void col_combine(IntMat& m, int a, int b, const BigInt& p, const BigInt& q,
                 const BigInt& r, const BigInt& s) {
    for (int i = 0; i < m.rows(); ++i) {
        BigInt va = m.at(i, a), vb = m.at(i, b);
        m.at(i, a) = p * va + q * vb;
        m.at(i, b) = r * va + s * vb;
    }
}

}  // namespace

SmithResult smith_normal_form(const IntMat& A) {
    int r = A.rows(), c = A.cols();
    SmithResult res{IntMat::identity(r), A, IntMat::identity(c)};
    IntMat& U = res.U;
    IntMat& D = res.D;
    IntMat& V = res.V;

    int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        // locate a pivot of minimal absolute value in the trailing submatrix
        auto find_pivot = [&]() -> std::pair<int, int> {
            int bi = -1, bj = -1;
            BigInt best = 0;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    if (D.at(i, j) == 0) continue;
                    BigInt v = abs(D.at(i, j));
                    if (bi < 0 || v < best) { best = v; bi = i; bj = j; }
                }
            return {bi, bj};
        };

        auto [pi, pj] = find_pivot();
        if (pi < 0) break;  // submatrix is zero, done
        swap_rows(D, t, pi);
        swap_rows(U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(V, t, pj);

        for (;;) {
            bool clean = true;
            // Clear column t. A non-divisible entry is absorbed with a
            // unimodular 2x2 combination that turns the pivot into the gcd
            // in one move; repeated remainder-promotion is what lets entries
            // explode on unlucky inputs.
            for (int i = t + 1; i < r; ++i) {
                BigInt a = D.at(t, t), b = D.at(i, t);
                if (b == 0) continue;
                if (b % a == 0) {
                    BigInt q = b / a;
                    row_sub(D, i, q, t);
                    row_sub(U, i, q, t);
                } else {
                    BigInt x, y;
                    BigInt g = ext_gcd(a, b, x, y);
                    BigInt as = a / g, bs = b / g;
                    row_combine(D, t, i, x, y, -bs, as);
                    row_combine(U, t, i, x, y, -bs, as);
                    clean = false;  // row t changed; rescan
                }
            }
            // clear row t the same way
            for (int j = t + 1; j < c; ++j) {
                BigInt a = D.at(t, t), b = D.at(t, j);
                if (b == 0) continue;
                if (b % a == 0) {
                    BigInt q = b / a;
                    col_sub(D, j, q, t);
                    col_sub(V, j, q, t);
                } else {
                    BigInt x, y;
                    BigInt g = ext_gcd(a, b, x, y);
                    BigInt as = a / g, bs = b / g;
                    col_combine(D, t, j, x, y, -bs, as);
                    col_combine(V, t, j, x, y, -bs, as);
                    clean = false;  // column t below the pivot may be dirty again
                }
            }
            if (!clean) continue;

            // enforce the divisibility chain: the pivot must divide every
            // remaining entry, else fold the offending row in and repeat
            bool divides_all = true;
            for (int i = t + 1; i < r && divides_all; ++i)
                for (int j = t + 1; j < c && divides_all; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        row_sub(D, t, BigInt(-1), i);
                        row_sub(U, t, BigInt(-1), i);
                        divides_all = false;
                    }
            if (divides_all) break;
        }

        if (D.at(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
        }
    }
    return res;
}

std::vector<BigInt> smith_invariants(const IntMat& A) {
    SmithResult s = smith_normal_form(A);
    std::vector<BigInt> inv;
    int n = std::min(A.rows(), A.cols());
    for (int i = 0; i < n; ++i)
        if (s.D.at(i, i) != 0) inv.push_back(s.D.at(i, i));
    return inv;
}

IntMat inverse_unimodular(const IntMat& m) {
    if (m.rows() != m.cols()) throw Error("inverse_unimodular: non-square matrix");
    int n = m.rows();
    // Gauss-Jordan over the rationals; entries of the result are integers
    // exactly when det = ±1, which we verify at the end.
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rational(m.at(i, j));
        w[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (w[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) throw Error("inverse_unimodular: singular matrix");
        std::swap(w[c], w[pivot]);
        Rational inv_p = Rational(1) / w[c][c];
        for (int j = 0; j < 2 * n; ++j) w[c][j] *= inv_p;
        for (int r = 0; r < n; ++r) {
            if (r == c || w[r][c] == 0) continue;
            Rational f = w[r][c];
            for (int j = 0; j < 2 * n; ++j) w[r][j] -= f * w[c][j];
        }
    }
    IntMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& v = w[i][n + j];
            if (!is_integer(v)) throw Error("inverse_unimodular: matrix is not unimodular");
            inv.at(i, j) = to_integer(v);
        }
    return inv;
}

IntMat IntMat::kernel_lattice() const {
    // columns j of V with zero diagonal in the Smith form span the kernel
    SmithResult s = smith_normal_form(*this);
    int rank = 0;
    int n = std::min(rows_, cols_);
    while (rank < n && s.D.at(rank, rank) != 0) ++rank;
    IntMat k(cols_, cols_ - rank);
    for (int j = rank; j < cols_; ++j)
        for (int i = 0; i < cols_; ++i) k.at(i, j - rank) = s.V.at(i, j);
    return k;
}

}  // namespace mcgcert
