#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sparsedisc/gaussian_rational.hpp"

namespace sparsedisc {

/**
 * Univariate polynomial over Q(i), stored densely by ascending power. The
 * zero polynomial is the empty coefficient vector; its degree() is -1 and
 * compares below every true degree. Nonzero polynomials keep a nonzero
 * leading coefficient.
 */
class Polynomial {
  public:
    Polynomial() = default;

    // Trims trailing zeros; {a0, a1, ..., an} ascending.
    explicit Polynomial(std::vector<GaussianRational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(GaussianRational c);
    static Polynomial monomial(std::size_t degree, GaussianRational coeff);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;

    // a_k, with zero beyond the stored range.
    const GaussianRational& coeff(std::size_t k) const;
    const GaussianRational& leading() const;
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const GaussianRational& s, const Polynomial& f);

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative() const;

    // x^n f(1/x): the coefficient sequence reversed. Degree may drop when the
    // constant term is zero.
    Polynomial reciprocal() const;

    GaussianRational eval(const GaussianRational& x) const;

    // Text form `x^7 + (2-3i)*x^2 - 1/2`; terms in any order, complex
    // coefficients parenthesized. Throws ParseError with the offset of the
    // offending character.
    std::string to_string() const;
    static Polynomial parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& f);

  private:
    std::vector<GaussianRational> coeffs_;
};

// Euclidean division: f = q*g + r with deg(r) < deg(g); the pair is unique.
// Throws ArithmeticError when g is the zero polynomial.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);

}  // namespace sparsedisc
