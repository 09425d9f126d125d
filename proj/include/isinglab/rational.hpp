#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isinglab {

// Exact rational carrier for all correlation/Ursell/series arithmetic.
// mpq_class keeps values canonical (lowest terms, positive denominator).
using BigRational = mpq_class;
using BigInt = mpz_class;

// Parses "p/q" or "p"; whitespace is not tolerated inside the token.
inline BigRational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    q.canonicalize();
    if (q.get_den() <= 0) throw std::invalid_argument("nonpositive denominator: '" + text + "'");
    return q;
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }

inline double to_double(const BigRational& q) { return q.get_d(); }

inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace isinglab
