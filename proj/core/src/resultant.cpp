#include "sparsedisc/resultant.hpp"

#include <utility>
#include <vector>

#include "gaussian_int.hpp"
#include "sparsedisc/errors.hpp"

namespace sparsedisc {

using detail::GaussianInt;

SylvesterMatrix::SylvesterMatrix(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw ArithmeticError("sylvester: zero polynomial input");
    const long n = f.degree(), m = g.degree();
    if (n + m < 1) throw ArithmeticError("sylvester: deg f + deg g must be >= 1");
    n_ = static_cast<std::size_t>(n);
    m_ = static_cast<std::size_t>(m);
    dim_ = n_ + m_;
    entries_.assign(dim_ * dim_, GaussianRational());
    // Row i of the first m rows: a_n ... a_0 starting at column i.
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j <= n_; ++j)
            entries_[i * dim_ + i + j] = f.coeff(n_ - j);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j <= m_; ++j)
            entries_[(m_ + i) * dim_ + i + j] = g.coeff(m_ - j);
}

const GaussianRational& SylvesterMatrix::at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
}

GaussianRational det(const SylvesterMatrix& m) {
    const std::size_t d = m.dim();

    // Scale each row to Gaussian-integer entries; det picks up 1/prod(scales).
    std::vector<GaussianInt> e(d * d);
    BigInt scale(1);
    for (std::size_t i = 0; i < d; ++i) {
        BigInt row_lcm(1);
        for (std::size_t j = 0; j < d; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < d; ++j) {
            const GaussianRational& v = m.at(i, j);
            BigInt mult = row_lcm / v.den();
            e[i * d + j] = GaussianInt(v.re_num() * mult, v.im_num() * mult);
        }
        scale *= row_lcm;
    }

    // Bareiss: entries stay in Z[i]; every division is exact.
    int sign = 1;
    GaussianInt prev(BigInt(1), BigInt(0));
    for (std::size_t k = 0; k + 1 < d; ++k) {
        std::size_t pivot = k;
        while (pivot < d && e[pivot * d + k].is_zero()) ++pivot;
        if (pivot == d) return GaussianRational();
        if (pivot != k) {
            for (std::size_t j = k; j < d; ++j) std::swap(e[pivot * d + j], e[k * d + j]);
            sign = -sign;
        }
        const GaussianInt& pk = e[k * d + k];
        for (std::size_t i = k + 1; i < d; ++i) {
            if (e[i * d + k].is_zero()) {
                // Still needs the pivot rescale to keep the Bareiss invariant.
                for (std::size_t j = k + 1; j < d; ++j) {
                    GaussianInt t = pk * e[i * d + j];
                    t.divexact_by(prev);
                    e[i * d + j] = std::move(t);
                }
                continue;
            }
            for (std::size_t j = k + 1; j < d; ++j) {
                GaussianInt t = pk * e[i * d + j] - e[i * d + k] * e[k * d + j];
                t.divexact_by(prev);
                e[i * d + j] = std::move(t);
            }
            e[i * d + k] = GaussianInt();
        }
        prev = pk;
    }

    GaussianInt result = e[d * d - 1];
    if (sign < 0) result = GaussianInt() - result;
    return GaussianRational(result.re, result.im, scale);
}

GaussianRational resultant_sylvester(const Polynomial& f, const Polynomial& g) {
    return det(SylvesterMatrix(f, g));
}

GaussianRational resultant_prs(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw ArithmeticError("resultant: zero polynomial input");
    if (f.degree() + g.degree() < 1)
        throw ArithmeticError("resultant: deg f + deg g must be >= 1");

    Polynomial a = f, b = g;
    GaussianRational acc(1);
    if (a.degree() < b.degree()) {
        if ((a.degree() * b.degree()) % 2 != 0) acc = -acc;
        std::swap(a, b);
    }
    while (b.degree() >= 1) {
        const long n = a.degree(), m = b.degree();
        Polynomial r = divmod(a, b).second;
        if (r.is_zero()) return GaussianRational();
        const long k = r.degree();
        // R(a,b) = (-1)^{(n-k)m} lead(b)^{n-k} R(r,b), then swap to R(b,r).
        acc *= b.leading().pow(static_cast<unsigned long>(n - k));
        if (((n - k) * m) % 2 != 0) acc = -acc;
        if ((k * m) % 2 != 0) acc = -acc;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: R(a, b) = b^{deg a}.
    acc *= b.coeff(0).pow(static_cast<unsigned long>(a.degree()));
    return acc;
}

const char* disc_method_name(DiscMethod m) {
    switch (m) {
        case DiscMethod::ClosedFormBinomial: return "CLOSED_FORM_BINOMIAL";
        case DiscMethod::ClosedFormTrinomial: return "CLOSED_FORM_TRINOMIAL";
        case DiscMethod::ClosedFormCubic: return "CLOSED_FORM_CUBIC";
        case DiscMethod::ClosedFormQuarticK3: return "CLOSED_FORM_QUARTIC_K3";
        case DiscMethod::ClosedFormK2: return "CLOSED_FORM_K2";
        case DiscMethod::ClosedFormK3: return "CLOSED_FORM_K3";
        case DiscMethod::ClosedFormKNMinus1: return "CLOSED_FORM_K_N_MINUS_1";
        case DiscMethod::ClosedFormRecipN2: return "CLOSED_FORM_RECIP_N2";
        case DiscMethod::ClosedFormRecipN3: return "CLOSED_FORM_RECIP_N3";
        case DiscMethod::ClosedFormOtakeShaska: return "CLOSED_FORM_OTAKE_SHASKA";
        case DiscMethod::Section6Pipeline: return "SECTION6_PIPELINE";
        case DiscMethod::OracleSylvester: return "ORACLE_SYLVESTER";
        case DiscMethod::OraclePrs: return "ORACLE_PRS";
    }
    return "?";
}

DiscriminantResult discriminant_oracle(const Polynomial& f, OracleAlgorithm algo) {
    const long n = f.degree();
    if (n < 1) throw ArithmeticError("discriminant: degree must be >= 1");
    const Polynomial fp = f.derivative();
    GaussianRational r = (algo == OracleAlgorithm::Sylvester) ? resultant_sylvester(f, fp)
                                                              : resultant_prs(f, fp);
    const BigInt audit = BigInt(n) * BigInt(n - 1) / 2;
    GaussianRational value = r / f.leading();
    if (sign_pow(audit) < 0) value = -value;
    return {std::move(value),
            algo == OracleAlgorithm::Sylvester ? DiscMethod::OracleSylvester : DiscMethod::OraclePrs,
            audit};
}

}  // namespace sparsedisc
