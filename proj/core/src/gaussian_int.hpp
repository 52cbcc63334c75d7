#pragma once

// Internal: Gaussian integers for the fraction-free determinant and the
// formula accumulation loops. Not installed.

#include "sparsedisc/bigint.hpp"

namespace sparsedisc::detail {

struct GaussianInt {
    BigInt re;
    BigInt im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt operator*(const BigInt& s) const { return {re * s, im * s}; }

    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    void mul_by(const GaussianInt& o) { *this = *this * o; }

    // this / d where the quotient is known to lie in Z[i] (Bareiss pivots,
    // power streams): multiply by conj(d) and divide componentwise by |d|^2.
    void divexact_by(const GaussianInt& d) {
        const BigInt norm = d.re * d.re + d.im * d.im;
        BigInt r = re * d.re + im * d.im;
        BigInt i = im * d.re - re * d.im;
        mpz_divexact(re.get_mpz_t(), r.get_mpz_t(), norm.get_mpz_t());
        mpz_divexact(im.get_mpz_t(), i.get_mpz_t(), norm.get_mpz_t());
    }
};

}  // namespace sparsedisc::detail
