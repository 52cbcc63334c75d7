#include "sparsedisc/closed_form.hpp"

#include "sparsedisc/errors.hpp"

namespace sparsedisc {

TrSequence::TrSequence(TrParams params) : params_(std::move(params)) {
    if (params_.b3.is_zero()) throw ArithmeticError("TrSequence: b3 must be nonzero");
}

const GaussianRational& TrSequence::value(unsigned long r) {
    if (r < 1) throw ArithmeticError("TrSequence: r must be >= 1");
    if (memo_.empty()) {
        const GaussianRational one(1);
        memo_.push_back(one / params_.b3);                         // t_1
        memo_.push_back(GaussianRational());                       // t_2 (b2 = 0)
        memo_.push_back(params_.b1 / (params_.b3 * params_.b3));   // t_3
    }
    while (memo_.size() < r) {
        const std::size_t s = memo_.size();  // computing t_{s+1}
        memo_.push_back((params_.b1 * memo_[s - 2] + params_.b0 * memo_[s - 3]) / params_.b3);
    }
    return memo_[r - 1];
}

GaussianRational tr_recurrence(const TrParams& params, unsigned long r) {
    TrSequence seq(params);
    return seq.value(r);
}

GaussianRational tr_closed(const TrParams& params, unsigned long r) {
    if (params.b3.is_zero()) throw ArithmeticError("tr_closed: b3 must be nonzero");
    if (r < 1) throw ArithmeticError("tr_closed: r must be >= 1");
    const GaussianRational inv_b3 = GaussianRational(1) / params.b3;
    GaussianRational sum;
    if (r % 2 == 1) {
        const unsigned long fl = r / 2;
        for (unsigned long k = 0; k <= r / 6; ++k) {
            // both exponents are >= 0 on this k-range
            sum += GaussianRational(binomial(BigInt(fl - k), BigInt(fl - 3 * k))) *
                   params.b0.pow(2 * k) * params.b1.pow(fl - 3 * k) * params.b3.pow(k);
        }
        return inv_b3.pow((r + 1) / 2) * sum;
    }
    const unsigned long h = r / 2;
    for (unsigned long k = 1; k <= (r + 2) / 6; ++k) {
        sum += GaussianRational(binomial(BigInt(h - k), BigInt(h - 3 * k + 1))) *
               params.b0.pow(2 * k - 1) * params.b1.pow(h - 3 * k + 1) * params.b3.pow(k - 1);
    }
    return inv_b3.pow(h) * sum;
}

Polynomial generalized_remainder(const Polynomial& p,
                                 const std::vector<GaussianRational>& q_params) {
    if (q_params.size() < 2) throw ArithmeticError("generalized_remainder: need deg q >= 1");
    const std::size_t m = q_params.size() - 1;
    const GaussianRational& bm = q_params.front();
    if (bm.is_zero()) throw ArithmeticError("generalized_remainder: b_m must be nonzero");
    if (p.degree() < static_cast<long>(m))
        throw ArithmeticError("generalized_remainder: requires deg p >= deg q");
    const std::size_t n = static_cast<std::size_t>(p.degree());

    // b_j with j counted from the constant term; q = b_m x^m - b_{m-1}x^{m-1} - ... - b_0.
    auto b = [&q_params, m](std::size_t j) -> const GaussianRational& {
        return q_params[m - j];
    };

    // t_1 = 1/b_m, t_r = (1/b_m) sum_{i=1}^{r-1} b_{m-i} t_{r-i}; the top index
    // reached below is n - m + 1.
    std::vector<GaussianRational> t(n - m + 2);
    if (t.size() > 1) t[1] = GaussianRational(1) / bm;
    for (std::size_t r = 2; r < t.size(); ++r) {
        GaussianRational s;
        for (std::size_t i = 1; i < r && i <= m; ++i) s += b(m - i) * t[r - i];
        t[r] = s / bm;
    }

    // Remainder coefficients. The correction term is sum_i b_i sum_nu t a_{n-nu}
    // (no 1/b_m in front: the sequence above already carries it).
    std::vector<GaussianRational> out(m);
    for (std::size_t k = 0; k < m; ++k) {
        GaussianRational inner = p.coeff(k);
        for (std::size_t i = 0; i <= k; ++i) {
            const long upper = static_cast<long>(n) - static_cast<long>(m) -
                               static_cast<long>(k) + static_cast<long>(i);
            if (upper < 0) continue;
            GaussianRational s2;
            for (long nu = 0; nu <= upper; ++nu) {
                s2 += t[static_cast<std::size_t>(upper - nu + 1)] *
                      p.coeff(n - static_cast<std::size_t>(nu));
            }
            inner += b(i) * s2;
        }
        out[k] = std::move(inner);
    }
    return Polynomial(std::move(out));
}

}  // namespace sparsedisc
