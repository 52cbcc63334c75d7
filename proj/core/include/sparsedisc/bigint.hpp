#pragma once

#include <gmpxx.h>

#include <string>

namespace sparsedisc {

// Arbitrary-precision integer. GMP's mpz keeps the canonical sign+magnitude
// form (unique zero, no leading zero limbs), which is exactly the contract
// the rest of the library relies on.
using BigInt = mpz_class;

// C(n, k), with C(n, k) = 0 whenever k < 0 or k > n. The out-of-range
// convention lets recurrence sums touch boundary indices without special
// casing.
inline BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

// (-1)^e for e >= 0, read off the parity without materializing the power.
inline int sign_pow(const BigInt& e) {
    return mpz_even_p(e.get_mpz_t()) ? 1 : -1;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Number of decimal digits of |n| (1 for zero).
inline unsigned long decimal_digits(const BigInt& n) {
    const std::string s = n.get_str();
    return static_cast<unsigned long>(s.size() - (s[0] == '-' ? 1 : 0));
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace sparsedisc
