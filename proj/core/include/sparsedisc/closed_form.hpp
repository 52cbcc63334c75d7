#pragma once

#include <vector>

#include "sparsedisc/quadrinomial.hpp"
#include "sparsedisc/resultant.hpp"

namespace sparsedisc {

// Parameters of a cubic divisor written in the sign convention
// q(x) = b3 x^3 - b1 x - b0 (the x^2 coefficient is structurally zero).
struct TrParams {
    GaussianRational b3;
    GaussianRational b1;
    GaussianRational b0;
};

/**
 * The linear recurrent sequence attached to q = b3 x^3 - b1 x - b0:
 *   t_1 = 1/b3, t_2 = 0, t_3 = b1/b3^2, t_r = (b1 t_{r-2} + b0 t_{r-3}) / b3.
 * Values are memoized; value(r) extends the table as needed.
 */
class TrSequence {
  public:
    explicit TrSequence(TrParams params);

    // t_r for r >= 1.
    const GaussianRational& value(unsigned long r);

    const TrParams& params() const { return params_; }

  private:
    TrParams params_;
    std::vector<GaussianRational> memo_;  // memo_[i] = t_{i+1}
};

// t_r straight from the memoized recurrence. Requires b3 != 0, r >= 1.
GaussianRational tr_recurrence(const TrParams& params, unsigned long r);

// t_r from the closed-form case split (sums of binomial-weighted monomials in
// b0, b1, b3 over k <= floor(r/6), resp. floor((r+2)/6)). Equal to
// tr_recurrence for every r.
GaussianRational tr_closed(const TrParams& params, unsigned long r);

// Remainder of p by q where q = b_m x^m - b_{m-1} x^{m-1} - ... - b_0 is
// encoded as q_params = (b_m, b_{m-1}, ..., b_0). Requires deg p >= m >= 1 and
// b_m != 0. Agrees with divmod(p, q).second.
Polynomial generalized_remainder(const Polynomial& p,
                                 const std::vector<GaussianRational>& q_params);

// Delta(x^n + a) = (-1)^{n(n-1)/2} n^n a^{n-1}. Requires n >= 1, a != 0.
GaussianRational disc_binomial(const BigInt& n, const GaussianRational& a);

// Delta(x^n + a x^k + b) with d = gcd(n-k, k). Requires n >= 3, 0 < k < n,
// a != 0, b != 0.
GaussianRational disc_trinomial(const BigInt& n, const BigInt& k,
                                const GaussianRational& a, const GaussianRational& b);

// Delta(x^3 + a x^2 + b x + c) = -4a^3c + a^2b^2 - 4b^3 + 18abc - 27c^2.
GaussianRational disc_cubic(const GaussianRational& a, const GaussianRational& b,
                            const GaussianRational& c);

// Delta(x^4 + a x^3 + b x + c).
GaussianRational disc_quartic_k3(const GaussianRational& a, const GaussianRational& b,
                                 const GaussianRational& c);

// Delta(x^n + t(x^2 + a x + b)) via the Otake-Shaska identity (gamma_c, S_k).
// Requires n >= 5, b != 0, t != 0.
GaussianRational disc_otake_shaska(const BigInt& n, const GaussianRational& a,
                                   const GaussianRational& b, const GaussianRational& t);

// The quadrinomial closed forms. Each validates its family's preconditions;
// disc_quad_k3 / disc_recip_n3 throw DegenerateFormulaError when the internal
// divisor 3a + n t_{n-2} (resp. 3b + cn t_{n-2}) vanishes.
DiscriminantResult disc_quad_k2(const QuadrinomialSpec& spec);      // Family::K2
DiscriminantResult disc_recip_n2(const QuadrinomialSpec& spec);     // Family::RecipN2
DiscriminantResult disc_quad_k_nm1(const QuadrinomialSpec& spec);   // Family::KNMinus1
DiscriminantResult disc_quad_k3(const QuadrinomialSpec& spec);      // Family::K3
DiscriminantResult disc_recip_n3(const QuadrinomialSpec& spec);     // Family::RecipN3

// Delta(x^{2n} + a x^n + b x^l + c) as the semi-closed product formula: the
// explicit degree-(n-l) and degree-2l remainders are built directly and the
// root product over the quadratic-in-x^l remainder is taken as a single
// small resultant; no degree-2n matrix is ever formed.
DiscriminantResult disc_2n_pipeline(const QuadrinomialSpec& spec);  // Family::TwoNPipeline

// Pattern-matches f against the supported families and uses the closed form
// when one applies (preconditions included); otherwise falls back to the
// Sylvester oracle. Non-monic inputs are scaled monic and the result is
// multiplied by lead^{2n-2}. Requires deg f >= 1.
DiscriminantResult dispatch(const Polynomial& f);

}  // namespace sparsedisc
