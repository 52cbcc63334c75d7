#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sparsedisc/polynomial.hpp"

namespace sparsedisc {

/**
 * The (n+m)x(n+m) Sylvester matrix of f (degree n) and g (degree m): the
 * first m rows hold f's coefficients a_n..a_0 shifted right by the row
 * index, the last n rows hold g's likewise.
 */
class SylvesterMatrix {
  public:
    // Requires deg f >= 0, deg g >= 0, deg f + deg g >= 1 (neither zero).
    SylvesterMatrix(const Polynomial& f, const Polynomial& g);

    std::size_t dim() const { return dim_; }
    std::size_t deg_f() const { return n_; }
    std::size_t deg_g() const { return m_; }
    const GaussianRational& at(std::size_t row, std::size_t col) const;

  private:
    std::size_t n_, m_, dim_;
    std::vector<GaussianRational> entries_;  // row-major
};

// Exact determinant. Clears each row to a common integer denominator, runs
// fraction-free Bareiss elimination over the Gaussian integers, and divides
// the scale back out at the end. Pivot choice is "first nonzero in column";
// an all-zero column short-circuits to 0.
GaussianRational det(const SylvesterMatrix& m);

// R(f,g) = det(Syl(f,g)).
GaussianRational resultant_sylvester(const Polynomial& f, const Polynomial& g);

// Same value by repeated Euclidean reduction: each step applies
// R(f,g) = (-1)^{(n-k)m} lead(g)^{n-k} R(r,g) with r the remainder of f by g,
// swaps via R(r,g) = (-1)^{km} R(g,r), and bottoms out at constants with
// R(f,c) = c^{deg f}.
GaussianRational resultant_prs(const Polynomial& f, const Polynomial& g);

enum class DiscMethod {
    ClosedFormBinomial,
    ClosedFormTrinomial,
    ClosedFormCubic,
    ClosedFormQuarticK3,
    ClosedFormK2,
    ClosedFormK3,
    ClosedFormKNMinus1,
    ClosedFormRecipN2,
    ClosedFormRecipN3,
    ClosedFormOtakeShaska,
    Section6Pipeline,
    OracleSylvester,
    OraclePrs,
};

// Spelled like "CLOSED_FORM_K2" / "ORACLE_SYLVESTER" for text and JSON output.
const char* disc_method_name(DiscMethod m);

struct DiscriminantResult {
    GaussianRational value;
    DiscMethod method;
    // Exponent whose parity fixed the sign prefactor of the producing path
    // (n(n-1)/2 for the oracle and most formulas).
    BigInt sign_exponent_audit;
};

enum class OracleAlgorithm { Sylvester, Prs };

// Delta(f) = (-1)^{n(n-1)/2} lead(f)^{-1} R(f, f'). Requires deg f >= 1.
DiscriminantResult discriminant_oracle(const Polynomial& f,
                                       OracleAlgorithm algo = OracleAlgorithm::Sylvester);

}  // namespace sparsedisc
