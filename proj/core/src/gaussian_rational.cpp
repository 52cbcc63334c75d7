#include "sparsedisc/gaussian_rational.hpp"

#include <ostream>
#include <utility>

namespace sparsedisc {

GaussianRational::GaussianRational(BigInt re_num, BigInt im_num, BigInt den)
    : re_num_(std::move(re_num)), im_num_(std::move(im_num)), den_(std::move(den)) {
    if (den_ == 0) throw ArithmeticError("GaussianRational: zero denominator");
    normalize();
}

void GaussianRational::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        re_num_ = -re_num_;
        im_num_ = -im_num_;
    }
    if (re_num_ == 0 && im_num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), re_num_.get_mpz_t(), im_num_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        mpz_divexact(re_num_.get_mpz_t(), re_num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(im_num_.get_mpz_t(), im_num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

GaussianRational GaussianRational::operator-() const {
    GaussianRational r;
    r.re_num_ = -re_num_;
    r.im_num_ = -im_num_;
    r.den_ = den_;
    return r;
}

GaussianRational GaussianRational::conjugate() const {
    GaussianRational r;
    r.re_num_ = re_num_;
    r.im_num_ = -im_num_;
    r.den_ = den_;
    return r;
}

GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return GaussianRational(x.re_num_ * y.den_ + y.re_num_ * x.den_,
                            x.im_num_ * y.den_ + y.im_num_ * x.den_,
                            x.den_ * y.den_);
}

GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return GaussianRational(x.re_num_ * y.den_ - y.re_num_ * x.den_,
                            x.im_num_ * y.den_ - y.im_num_ * x.den_,
                            x.den_ * y.den_);
}

GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return GaussianRational(x.re_num_ * y.re_num_ - x.im_num_ * y.im_num_,
                            x.re_num_ * y.im_num_ + x.im_num_ * y.re_num_,
                            x.den_ * y.den_);
}

GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
    if (y.is_zero()) throw ArithmeticError("GaussianRational: division by zero");
    // x/y = x * conj(y) / |y|^2, with the numerator norm kept integral.
    const BigInt norm = y.re_num_ * y.re_num_ + y.im_num_ * y.im_num_;
    return GaussianRational((x.re_num_ * y.re_num_ + x.im_num_ * y.im_num_) * y.den_,
                            (x.im_num_ * y.re_num_ - x.re_num_ * y.im_num_) * y.den_,
                            x.den_ * norm);
}

GaussianRational GaussianRational::pow(unsigned long e) const {
    // 0^0 = 1 by the library-wide convention.
    GaussianRational result(1);
    GaussianRational base = *this;
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

GaussianRational GaussianRational::pow(const BigInt& e) const {
    if (e < 0) throw ArithmeticError("GaussianRational::pow: negative exponent");
    if (!e.fits_ulong_p()) throw ArithmeticError("GaussianRational::pow: exponent too large");
    return pow(e.get_ui());
}

namespace {

// "n" or "n/d" with the fraction reduced.
std::string fraction_str(const BigInt& num, const BigInt& den) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    BigInt n = num / g, d = den / g;
    if (d == 1) return n.get_str();
    return n.get_str() + "/" + d.get_str();
}

}  // namespace

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_num_ != 0) out += fraction_str(re_num_, den_);
    if (im_num_ != 0) {
        const BigInt mag = abs(im_num_);
        std::string im_part;
        if (!(mag == 1 && den_ == 1)) im_part = fraction_str(mag, den_);
        im_part += "i";
        if (re_num_ != 0) {
            out += (im_num_ > 0) ? "+" : "-";
            out += im_part;
        } else {
            out += (im_num_ > 0) ? im_part : "-" + im_part;
        }
    }
    return out;
}

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    BigInt digits() {
        if (done() || peek() < '0' || peek() > '9') fail("expected digits");
        std::size_t start = pos;
        while (!done() && peek() >= '0' && peek() <= '9') ++pos;
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    // num[/den]; returns {num, den}.
    std::pair<BigInt, BigInt> rational() {
        BigInt num = digits();
        BigInt den(1);
        if (!done() && peek() == '/') {
            ++pos;
            den = digits();
            if (den == 0) fail("zero denominator");
        }
        return {num, den};
    }
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    Scanner s{text};
    if (s.done()) s.fail("empty value");

    auto signed_part = [&s](bool* is_imag) -> std::pair<BigInt, BigInt> {
        BigInt sign(1);
        if (!s.done() && (s.peek() == '+' || s.peek() == '-')) {
            if (s.peek() == '-') sign = -1;
            ++s.pos;
        }
        if (s.done()) s.fail("expected value");
        if (s.peek() == 'i') {
            ++s.pos;
            *is_imag = true;
            return {sign, BigInt(1)};
        }
        auto [num, den] = s.rational();
        *is_imag = false;
        if (!s.done() && s.peek() == 'i') {
            ++s.pos;
            *is_imag = true;
        }
        return {sign * num, den};
    };

    bool first_imag = false;
    auto [n1, d1] = signed_part(&first_imag);
    if (s.done()) {
        return first_imag ? GaussianRational(BigInt(0), n1, d1) : GaussianRational(n1, BigInt(0), d1);
    }
    if (first_imag) s.fail("trailing characters after imaginary part");
    if (s.peek() != '+' && s.peek() != '-') s.fail("expected '+' or '-' before imaginary part");

    bool second_imag = false;
    auto [n2, d2] = signed_part(&second_imag);
    if (!second_imag) s.fail("expected imaginary part");
    if (!s.done()) s.fail("trailing characters");
    return GaussianRational(n1 * d2, n2 * d1, d1 * d2);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) {
    return os << v.to_string();
}

}  // namespace sparsedisc
