#pragma once

// Exact scalar types used across the whole library. Everything downstream
// (cyclotomic numbers, matrices, abelian groups) is built on these; no
// floating point exists anywhere in the computation paths.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mcgcert {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator. cpp_rational keeps both
// invariants (gcd(num, den) == 1, den >= 1) canonical after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("to_integer: value is not a rational integer");
    return numerator(r);
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }
inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline long long to_ll(const BigInt& a) { return a.convert_to<long long>(); }

inline std::string to_string(const BigInt& a) { return a.str(); }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Base error for all exact-computation failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data (schema, table contents) is unusable.
struct DataError : Error {
    using Error::Error;
};

// An internal cross-check failed; indicates a convention or construction bug.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace mcgcert
