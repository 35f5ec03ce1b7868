#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsing {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor division, matching Python's `//`.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Residue in [0, |m|).
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool fits_int64(const Integer& a) {
    return mpz_sizeinbase(a.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const Integer& a) {
    return static_cast<std::int64_t>(a.get_si());
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Returns the numerator when `q` is integral.
inline std::optional<Integer> as_integer(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() != 1) return std::nullopt;
    return c.get_num();
}

}  // namespace hsing
