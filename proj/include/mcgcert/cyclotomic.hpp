#pragma once

// Arithmetic in the cyclotomic field Q(zeta_60), the degree-16 extension of Q
// generated by a primitive 60th root of unity. Every algebraic number the
// engine touches (eigenvalues of group elements, character values, the golden
// ratio) lives in this one field, so equality is decidable coefficient-wise.
//
// Elements are polynomials in zeta of degree < 16, reduced modulo the 60th
// cyclotomic polynomial x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1.

#include "mcgcert/numeric.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>

namespace mcgcert {

class Cyclotomic {
public:
    static constexpr int Degree = 16;
    static constexpr int Order = 60;  // zeta^60 == 1

    Cyclotomic() = default;
    explicit Cyclotomic(const Rational& c) { coeff_[0] = c; }
    explicit Cyclotomic(long n) { coeff_[0] = n; }

    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(1); }

    // zeta_60^k for any integer k (negative exponents wrap).
    static Cyclotomic zeta_pow(long k);

    // A primitive n-th root of unity, zeta_60^(60/n). Throws Error unless n | 60.
    static Cyclotomic root_of_unity(long n);

    // (1 + sqrt(5)) / 2, written in terms of fifth roots of unity.
    static Cyclotomic golden_ratio();

    const Rational& coeff(int i) const { return coeff_[i]; }
    Rational& coeff(int i) { return coeff_[i]; }

    bool is_zero() const;
    bool is_rational() const;

    // The value as a Rational; throws Error if the element is irrational.
    Rational rational_value() const;

    // Galois conjugation zeta -> zeta^-1 (complex conjugation on the field).
    Cyclotomic conj() const;

    Cyclotomic pow(long n) const;

    // Multiplicative inverse; throws Error on zero. Solves the 16x16 rational
    // linear system given by the multiplication-by-*this matrix, which is
    // nonsingular for nonzero elements because the modulus is irreducible.
    Cyclotomic inverse() const;

    // If the element equals zeta_60^k for some k, returns k in [0, 60).
    std::optional<int> as_root_of_unity() const;

    // Exact multiplicative order when the element is a root of unity.
    std::optional<int> root_of_unity_order() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    bool operator==(const Cyclotomic& o) const { return coeff_ == o.coeff_; }

    // Coefficient-lexicographic order; used only for canonical sorting and
    // map keys, it has no arithmetic meaning.
    std::strong_ordering operator<=>(const Cyclotomic& o) const;

    std::string to_string() const;

private:
    std::array<Rational, Degree> coeff_{};  // value-initialized to 0
};

inline Cyclotomic operator*(const Rational& s, Cyclotomic a) {
    Cyclotomic r;
    for (int i = 0; i < Cyclotomic::Degree; ++i) r.coeff(i) = s * a.coeff(i);
    return r;
}

}  // namespace mcgcert
