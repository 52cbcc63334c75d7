#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sparsedisc/bigint.hpp"
#include "sparsedisc/errors.hpp"

namespace sparsedisc {

/**
 * An element of Q(i): (re_num + im_num*i) / den with a single shared positive
 * denominator and gcd(re_num, im_num, den) = 1. The shared denominator keeps
 * normalization and equality to one gcd pass; equality is structural.
 *
 * Values are immutable after construction and safe to share across threads.
 */
class GaussianRational {
  public:
    GaussianRational() : re_num_(0), im_num_(0), den_(1) {}
    GaussianRational(long v) : re_num_(v), im_num_(0), den_(1) {}
    explicit GaussianRational(const BigInt& v) : re_num_(v), im_num_(0), den_(1) {}

    // (re_num + im_num*i) / den; normalizes. den must be nonzero.
    GaussianRational(BigInt re_num, BigInt im_num, BigInt den);

    static GaussianRational rational(const BigInt& num, const BigInt& den) {
        return GaussianRational(num, BigInt(0), den);
    }
    static GaussianRational imaginary_unit() { return GaussianRational(BigInt(0), BigInt(1), BigInt(1)); }

    const BigInt& re_num() const { return re_num_; }
    const BigInt& im_num() const { return im_num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return re_num_ == 0 && im_num_ == 0; }
    bool is_real() const { return im_num_ == 0; }
    bool is_integer() const { return im_num_ == 0 && den_ == 1; }

    GaussianRational operator-() const;
    GaussianRational conjugate() const;

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y);
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y);
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y);
    // Throws ArithmeticError on division by zero.
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y);

    GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
    GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
    GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
    GaussianRational& operator/=(const GaussianRational& y) { return *this = *this / y; }

    bool operator==(const GaussianRational& o) const {
        return re_num_ == o.re_num_ && im_num_ == o.im_num_ && den_ == o.den_;
    }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // x^e by binary exponentiation, with 0^0 = 1 so that degenerate formula
    // terms evaluate without branching.
    GaussianRational pow(const BigInt& e) const;
    GaussianRational pow(unsigned long e) const;

    // Canonical text form `p/q+r/si`: "3", "-1/2", "i", "2-3/4i", "-3/4i".
    // parse(to_string(x)) == x.
    std::string to_string() const;
    static GaussianRational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

  private:
    void normalize();

    BigInt re_num_;
    BigInt im_num_;
    BigInt den_;
};

inline GaussianRational operator*(long s, const GaussianRational& x) {
    return GaussianRational(s) * x;
}

}  // namespace sparsedisc
