#pragma once

#include "mcgcert/numeric.hpp"

namespace mcgcert {

inline BigInt mod_norm(const BigInt& x, const BigInt& m) {
    if (m <= 0) throw Error("mod_norm: modulus must be positive");
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

// Residue class in Z/m, always stored in [0, m).
class ModInt {
public:
    ModInt(const BigInt& value, const BigInt& modulus)
        : mod_(modulus), res_(mod_norm(value, modulus)) {}

    const BigInt& residue() const { return res_; }
    const BigInt& modulus() const { return mod_; }

    bool operator==(const ModInt& o) const = default;

    ModInt operator+(const ModInt& o) const { return {res_ + check(o).res_, mod_}; }
    ModInt operator-(const ModInt& o) const { return {res_ - check(o).res_, mod_}; }
    ModInt operator*(const ModInt& o) const { return {res_ * check(o).res_, mod_}; }
    ModInt operator-() const { return {-res_, mod_}; }

    ModInt pow(long n) const {
        if (n < 0) throw Error("ModInt::pow: negative exponent");
        ModInt acc(1, mod_), base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool is_zero() const { return res_ == 0; }

    // additive order of the residue in Z/m
    BigInt additive_order() const { return mod_ / gcd(res_, mod_); }

private:
    const ModInt& check(const ModInt& o) const {
        if (o.mod_ != mod_) throw Error("ModInt: modulus mismatch");
        return o;
    }
    BigInt mod_;
    BigInt res_;
};

}  // namespace mcgcert
