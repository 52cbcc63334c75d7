#include <algorithm>
#include <vector>

#include "sparsedisc/closed_form.hpp"
#include "sparsedisc/errors.hpp"

namespace sparsedisc {

namespace {

DiscriminantResult dispatch_monic(const Polynomial& f) {
    const long n = f.degree();

    std::vector<std::size_t> support;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
        if (!f.coeff(k).is_zero()) support.push_back(k);

    // Total low-degree closed forms first.
    if (n == 3) {
        GaussianRational v = disc_cubic(f.coeff(2), f.coeff(1), f.coeff(0));
        return {std::move(v), DiscMethod::ClosedFormCubic, BigInt(3)};
    }

    // x^n + a
    if (support.size() == 2 && support[0] == 0) {
        GaussianRational v = disc_binomial(BigInt(n), f.coeff(0));
        return {std::move(v), DiscMethod::ClosedFormBinomial, BigInt(n) * BigInt(n - 1) / 2};
    }

    // x^n + a x^k + b
    if (support.size() == 3 && support[0] == 0 && n >= 3) {
        const std::size_t k = support[1];
        GaussianRational v = disc_trinomial(BigInt(n), BigInt(static_cast<long>(k)),
                                            f.coeff(k), f.coeff(0));
        return {std::move(v), DiscMethod::ClosedFormTrinomial, BigInt(n) * BigInt(n - 1) / 2};
    }

    if (support.size() == 4 && support[0] == 0) {
        const std::size_t l = support[1], k = support[2];
        const GaussianRational &a = f.coeff(k), &b = f.coeff(l), &c = f.coeff(0);
        auto quad = [&](Family fam) {
            QuadrinomialSpec s{fam, BigInt(n), BigInt(static_cast<long>(l)), a, b, c};
            return s;
        };

        if (n == 4 && k == 3 && l == 1) {
            GaussianRational v = disc_quartic_k3(a, b, c);
            return {std::move(v), DiscMethod::ClosedFormQuarticK3, BigInt(6)};
        }
        try {
            if (k == 2 && l == 1 && n > 3) return disc_quad_k2(quad(Family::K2));
            if (k == 3 && l == 1 && n > 4) return disc_quad_k3(quad(Family::K3));
            if (k == static_cast<std::size_t>(n - 1) && l == 1 && n > 4)
                return disc_quad_k_nm1(quad(Family::KNMinus1));
            if (k == static_cast<std::size_t>(n - 1) && l == static_cast<std::size_t>(n - 2) &&
                n > 3)
                return disc_recip_n2(quad(Family::RecipN2));
            if (k == static_cast<std::size_t>(n - 1) && l == static_cast<std::size_t>(n - 3) &&
                n > 5)
                return disc_recip_n3(quad(Family::RecipN3));
            if (n % 2 == 0 && k == static_cast<std::size_t>(n / 2) &&
                static_cast<long>(2 * l) < n / 2 && !(a * a == 4 * c)) {
                QuadrinomialSpec s{Family::TwoNPipeline, BigInt(n / 2),
                                   BigInt(static_cast<long>(l)), a, b, c};
                return disc_2n_pipeline(s);
            }
        } catch (const DegenerateFormulaError&) {
            // fall through to the oracle
        }
    }

    return discriminant_oracle(f);
}

}  // namespace

DiscriminantResult dispatch(const Polynomial& f) {
    if (f.degree() < 1) throw ArithmeticError("dispatch: degree must be >= 1");
    if (f.is_monic()) return dispatch_monic(f);

    // All families are stated for monic polynomials; scale and correct by
    // lead^{2n-2}.
    const GaussianRational& lead = f.leading();
    const GaussianRational inv = GaussianRational(1) / lead;
    DiscriminantResult r = dispatch_monic(inv * f);
    r.value *= lead.pow(static_cast<unsigned long>(2 * f.degree() - 2));
    return r;
}

}  // namespace sparsedisc
