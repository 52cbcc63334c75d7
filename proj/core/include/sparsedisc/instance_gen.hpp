#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sparsedisc/quadrinomial.hpp"
#include "sparsedisc/resultant.hpp"

namespace sparsedisc {

// Every family the fuzz/bench surfaces can draw from (the quadrinomial
// families plus the standalone formulas).
enum class FamilyTag { Binomial, Trinomial, K2, K3, KNMinus1, RecipN2, RecipN3, TwoN, OtakeShaska };

const char* family_tag_name(FamilyTag t);                       // "k2", "os", ...
std::optional<FamilyTag> family_tag_from_name(std::string_view name);

// One generated instance. n/k/l are always set as applicable; t only for
// Otake-Shaska.
struct FamilyInstance {
    FamilyTag tag;
    unsigned long n = 0;
    unsigned long k = 0;
    unsigned long l = 0;
    GaussianRational a, b, c, t;

    // The polynomial the instance denotes (degree 2n for TwoN).
    Polynomial expand() const;
    // The QuadrinomialSpec view; throws for the non-quadrinomial tags.
    QuadrinomialSpec quadrinomial_spec() const;
    std::string describe() const;
};

// Routes the instance to its family's closed form. May throw
// DegenerateFormulaError for k3/recip3 instances with a vanishing divisor.
DiscriminantResult closed_form_value(const FamilyInstance& inst);

/**
 * Deterministic, seed-reproducible generator of family instances. Coefficient
 * parts are drawn with numerators in [-99, 99] and denominators in [1, 9]
 * (real and imaginary parts independently), rejecting draws that violate the
 * family's preconditions. Degree parameters are drawn from the family's valid
 * range up to n_max. The stream depends only on the seed and call sequence,
 * not on the platform.
 */
class InstanceGenerator {
  public:
    InstanceGenerator(std::uint64_t seed, unsigned long n_max = 40);

    FamilyInstance generate(FamilyTag tag);

    // Cycles through all nine families in a fixed order.
    FamilyInstance generate_any();

    std::uint64_t next_u64();
    // Uniform in [lo, hi].
    long uniform(long lo, long hi);
    GaussianRational coefficient(bool nonzero);

  private:
    std::uint64_t state_;
    unsigned long n_max_;
    unsigned cycle_ = 0;
};

}  // namespace sparsedisc
