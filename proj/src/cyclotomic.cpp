#include "mcgcert/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace mcgcert {

namespace {

constexpr int D = Cyclotomic::Degree;

using Row = std::array<Rational, D>;

// x^16 = -x^14 + x^10 + x^8 + x^6 - x^2 - 1, the tail of the 60th
// cyclotomic polynomial with signs flipped.
Row x16_row() {
    Row r{};
    r[14] = -1;
    r[10] = 1;
    r[8] = 1;
    r[6] = 1;
    r[2] = -1;
    r[0] = -1;
    return r;
}

// Rows for x^16 .. x^30, enough to fold a degree-30 product back into the
// standard basis. Row k-16 holds the coefficients of x^k.
const std::vector<Row>& reduction_rows() {
    static const std::vector<Row> rows = [] {
        std::vector<Row> out;
        out.push_back(x16_row());
        for (int k = 17; k <= 30; ++k) {
            const Row& prev = out.back();
            Row next{};
            // multiply by x, then substitute for the x^16 that falls out
            for (int i = 0; i < D - 1; ++i) next[i + 1] = prev[i];
            const Rational& top = prev[D - 1];
            if (top != 0) {
                const Row& r16 = out[0];
                for (int i = 0; i < D; ++i) next[i] += top * r16[i];
            }
            out.push_back(next);
        }
        return out;
    }();
    return rows;
}

// zeta^k in the standard basis, k = 0..59.
const std::array<Row, Cyclotomic::Order>& zeta_table() {
    static const std::array<Row, Cyclotomic::Order> table = [] {
        std::array<Row, Cyclotomic::Order> t{};
        t[0][0] = 1;
        for (int k = 1; k < Cyclotomic::Order; ++k) {
            const Row& prev = t[k - 1];
            Row& next = t[k];
            for (int i = 0; i < D - 1; ++i) next[i + 1] = prev[i];
            const Rational& top = prev[D - 1];
            if (top != 0) {
                const Row& r16 = reduction_rows()[0];
                for (int i = 0; i < D; ++i) next[i] += top * r16[i];
            }
        }
        return t;
    }();
    return table;
}

// Integer mirrors of the two tables above. Powers of zeta lie in Z[zeta]
// and the reduction rows come from a monic integer polynomial, so the
// rational entries are integers in disguise; converting once lets products
// run over cpp_int with a single normalisation at the end instead of a gcd
// per coefficient multiply.
using ZRow = std::array<BigInt, D>;

ZRow to_zrow(const Row& r) {
    ZRow out{};
    for (int i = 0; i < D; ++i) {
        if (denominator(r[i]) != 1)
            throw ConsistencyError("cyclotomic table entry is not integral");
        out[i] = numerator(r[i]);
    }
    return out;
}

const std::vector<ZRow>& z_reduction_rows() {
    static const std::vector<ZRow> rows = [] {
        std::vector<ZRow> out;
        for (const Row& r : reduction_rows()) out.push_back(to_zrow(r));
        return out;
    }();
    return rows;
}

const std::array<ZRow, Cyclotomic::Order>& z_zeta_table() {
    static const std::array<ZRow, Cyclotomic::Order> table = [] {
        std::array<ZRow, Cyclotomic::Order> t{};
        for (int k = 0; k < Cyclotomic::Order; ++k) t[static_cast<size_t>(k)] = to_zrow(zeta_table()[static_cast<size_t>(k)]);
        return t;
    }();
    return table;
}

// a as den * (integer element): den is the lcm of the coefficient denominators
ZRow clear_denominators(const Cyclotomic& a, BigInt& den) {
    den = 1;
    for (int i = 0; i < D; ++i) {
        const BigInt& d = denominator(a.coeff(i));
        if (d != 1) den = lcm(den, d);
    }
    ZRow out{};
    for (int i = 0; i < D; ++i) {
        if (a.coeff(i) == 0) continue;
        out[i] = numerator(a.coeff(i)) * (den / denominator(a.coeff(i)));
    }
    return out;
}

ZRow zmul(const ZRow& a, const ZRow& b) {
    std::array<BigInt, 2 * D - 1> prod{};
    for (int i = 0; i < D; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < D; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    ZRow out{};
    for (int i = 0; i < D; ++i) out[i] = prod[i];
    for (int k = D; k < 2 * D - 1; ++k) {
        if (prod[k] == 0) continue;
        const ZRow& row = z_reduction_rows()[static_cast<size_t>(k - D)];
        for (int i = 0; i < D; ++i)
            if (row[i] != 0) out[i] += prod[k] * row[i];
    }
    return out;
}

// image of a under zeta -> zeta^k; a field automorphism when gcd(k, 60) = 1
ZRow zgalois(const ZRow& a, int k) {
    ZRow out{};
    for (int i = 0; i < D; ++i) {
        if (a[i] == 0) continue;
        const ZRow& row = z_zeta_table()[static_cast<size_t>((long(i) * k) % Cyclotomic::Order)];
        for (int j = 0; j < D; ++j)
            if (row[j] != 0) out[j] += a[i] * row[j];
    }
    return out;
}

}  // namespace

Cyclotomic Cyclotomic::zeta_pow(long k) {
    k %= Order;
    if (k < 0) k += Order;
    Cyclotomic r;
    const Row& row = zeta_table()[static_cast<size_t>(k)];
    for (int i = 0; i < D; ++i) r.coeff_[i] = row[i];
    return r;
}

Cyclotomic Cyclotomic::root_of_unity(long n) {
    if (n <= 0 || Order % n != 0)
        throw Error("root_of_unity: order " + std::to_string(n) + " does not divide 60");
    return zeta_pow(Order / n);
}

Cyclotomic Cyclotomic::golden_ratio() {
    // (1 + sqrt 5)/2 = 1 + zeta_5 + zeta_5^4
    return one() + root_of_unity(5) + root_of_unity(5).pow(4);
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (int i = 1; i < D; ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("rational_value: element is irrational: " + to_string());
    return coeff_[0];
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^i -> zeta^(60-i)
    Cyclotomic r(coeff_[0]);
    for (int i = 1; i < D; ++i) {
        if (coeff_[i] == 0) continue;
        const Row& row = zeta_table()[static_cast<size_t>(Order - i)];
        for (int j = 0; j < D; ++j) r.coeff_[j] += coeff_[i] * row[j];
    }
    return r;
}

Cyclotomic Cyclotomic::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Cyclotomic base = *this;
    Cyclotomic acc = one();
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r;
    for (int i = 0; i < D; ++i) r.coeff_[i] = -coeff_[i];
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    for (int i = 0; i < D; ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    for (int i = 0; i < D; ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    BigInt p, q;
    ZRow a = clear_denominators(*this, p);
    ZRow b = clear_denominators(o, q);
    ZRow c = zmul(a, b);
    BigInt pq = p * q;
    for (int i = 0; i < D; ++i)
        coeff_[i] = (c[i] == 0) ? Rational(0) : Rational(c[i], pq);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("inverse of zero cyclotomic element");
    // 1/a = (product of the other Galois conjugates) / (field norm); the
    // norm is fixed by the whole Galois group, hence rational and nonzero.
    // Denominators are cleared up front so the conjugate product runs over
    // plain integers.
    BigInt den;
    ZRow a = clear_denominators(*this, den);
    ZRow prod{};
    prod[0] = 1;
    for (int k = 2; k < Order; ++k)
        if (std::gcd(k, Order) == 1) prod = zmul(prod, zgalois(a, k));
    ZRow full = zmul(prod, a);
    for (int i = 1; i < D; ++i)
        if (full[i] != 0) throw ConsistencyError("inverse: norm is not rational");
    const BigInt& n = full[0];
    if (n == 0) throw ConsistencyError("inverse: vanishing norm of a nonzero element");
    Cyclotomic result;
    for (int i = 0; i < D; ++i)
        if (prod[i] != 0) result.coeff_[i] = Rational(den * prod[i], n);
    return result;
}

std::optional<int> Cyclotomic::as_root_of_unity() const {
    for (int k = 0; k < Order; ++k) {
        const Row& row = zeta_table()[static_cast<size_t>(k)];
        bool eq = true;
        for (int i = 0; i < D && eq; ++i) eq = (coeff_[i] == row[i]);
        if (eq) return k;
    }
    return std::nullopt;
}

std::optional<int> Cyclotomic::root_of_unity_order() const {
    auto k = as_root_of_unity();
    if (!k) return std::nullopt;
    return Order / std::gcd(Order, *k);
}

std::strong_ordering Cyclotomic::operator<=>(const Cyclotomic& o) const {
    for (int i = 0; i < D; ++i) {
        if (coeff_[i] < o.coeff_[i]) return std::strong_ordering::less;
        if (coeff_[i] > o.coeff_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = D - 1; i >= 0; --i) {
        if (coeff_[i] == 0) continue;
        Rational c = coeff_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << mcgcert::to_string(c);
        } else {
            if (c != 1) os << mcgcert::to_string(c) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace mcgcert
