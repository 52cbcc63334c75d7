#pragma once

#include <string>

#include "sparsedisc/polynomial.hpp"

namespace sparsedisc {

// The supported quadrinomial families. n, a, b, c parametrize each shape;
// TwoNPipeline additionally uses l (the polynomial is x^{2n}+ax^n+bx^l+c).
enum class Family {
    K2,            // x^n + a x^2 + b x + c,        n > 3
    K3,            // x^n + a x^3 + b x + c,        n > 4
    KNMinus1,      // x^n + a x^{n-1} + b x + c,    n > 4
    RecipN2,       // x^n + a x^{n-1} + b x^{n-2} + c, n > 3
    RecipN3,       // x^n + a x^{n-1} + b x^{n-3} + c, n > 5
    TwoNPipeline,  // x^{2n} + a x^n + b x^l + c,   n > 2l, a^2 != 4c
};

const char* family_name(Family f);

struct QuadrinomialSpec {
    Family family;
    BigInt n;
    BigInt l;  // TwoNPipeline only
    GaussianRational a;
    GaussianRational b;
    GaussianRational c;

    // Throws ArithmeticError when the family preconditions fail
    // (degree bounds, abc != 0, and a^2 != 4c for the pipeline family).
    void validate() const;

    std::string to_string() const;
};

// Materializes the family member as a dense polynomial (the oracle path).
Polynomial expand(const QuadrinomialSpec& spec);

}  // namespace sparsedisc
