#include "sparsedisc/closed_form.hpp"

#include <cassert>

#include "gaussian_int.hpp"
#include "sparsedisc/errors.hpp"

namespace sparsedisc {

using detail::GaussianInt;

namespace {

unsigned long as_ulong(const BigInt& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) throw ArithmeticError(std::string(what) + " out of range");
    return v.get_ui();
}

GaussianRational gr(long v) { return GaussianRational(v); }
GaussianRational gr(const BigInt& v) { return GaussianRational(v); }

// x^e for possibly negative e (x != 0 when e < 0).
GaussianRational pow_signed(const GaussianRational& x, long e) {
    if (e >= 0) return x.pow(static_cast<unsigned long>(e));
    return GaussianRational(1) / x.pow(static_cast<unsigned long>(-e));
}

/*
 * sum_{i=0}^{floor(s/2)} (cA*C(s,2i) + cB*C(s+1,2i)) * half^(s-2i) * disc^i
 *
 * This is the Sigma shape shared by the x^n+ax^2+bx+c family and its
 * relatives, after absorbing the varying factor via the exact identity
 * C(s,2i)*(s+1)/(s+1-2i) = C(s+1,2i). The two binomial streams, the power
 * of r = disc/half^2 and the compensating denominator power are updated
 * incrementally over a common denominator, with a single normalization at
 * the end; per-term normalized arithmetic is far too slow at s ~ 10^4.
 */
GaussianRational quadratic_power_sum(unsigned long s, const GaussianRational& cA,
                                     const GaussianRational& cB, const GaussianRational& half,
                                     const GaussianRational& disc) {
    const unsigned long imax = s / 2;
    if (half.is_zero()) {
        // Only the zero-exponent term survives (0^0 = 1), present iff s is even.
        if (s % 2 != 0) return GaussianRational();
        return (cA + gr(BigInt(s + 1)) * cB) * disc.pow(imax);
    }

    const GaussianRational r = disc / (half * half);

    BigInt cden;
    mpz_lcm(cden.get_mpz_t(), cA.den().get_mpz_t(), cB.den().get_mpz_t());
    const GaussianInt ca_num(cA.re_num() * (cden / cA.den()), cA.im_num() * (cden / cA.den()));
    const GaussianInt cb_num(cB.re_num() * (cden / cB.den()), cB.im_num() * (cden / cB.den()));

    const GaussianInt r_num(r.re_num(), r.im_num());
    const BigInt& r_den = r.den();
    const BigInt r_den_pow = pow(r_den, imax);

    GaussianInt acc;
    GaussianInt r_pow(BigInt(1), BigInt(0));  // r_num^i
    BigInt den_comp = r_den_pow;              // r_den^(imax-i)
    BigInt c1(1);                             // C(s, 2i)
    BigInt c2(1);                             // C(s+1, 2i)
    for (unsigned long i = 0;; ++i) {
        GaussianInt term = ca_num * c1 + cb_num * c2;
        term.mul_by(r_pow);
        acc += term * den_comp;
        if (i == imax) break;
        // C(s, 2i+2) = C(s, 2i) * (s-2i)(s-2i-1) / ((2i+1)(2i+2)), likewise for s+1.
        c1 *= BigInt(s - 2 * i) * BigInt(s - 2 * i - 1);
        mpz_divexact_ui(c1.get_mpz_t(), c1.get_mpz_t(), (2 * i + 1) * (2 * i + 2));
        c2 *= BigInt(s + 1 - 2 * i) * BigInt(s - 2 * i);
        mpz_divexact_ui(c2.get_mpz_t(), c2.get_mpz_t(), (2 * i + 1) * (2 * i + 2));
        r_pow.mul_by(r_num);
        mpz_divexact(den_comp.get_mpz_t(), den_comp.get_mpz_t(), r_den.get_mpz_t());
    }
    return GaussianRational(acc.re, acc.im, cden * r_den_pow) * half.pow(s);
}

}  // namespace

GaussianRational disc_binomial(const BigInt& n, const GaussianRational& a) {
    if (n < 1) throw ArithmeticError("disc_binomial: n must be >= 1");
    if (a.is_zero()) throw ArithmeticError("disc_binomial: a must be nonzero");
    const unsigned long nu = as_ulong(n, "n");
    GaussianRational value = gr(pow(n, nu)) * a.pow(nu - 1);
    if (sign_pow(n * (n - 1) / 2) < 0) value = -value;
    return value;
}

GaussianRational disc_trinomial(const BigInt& n, const BigInt& k, const GaussianRational& a,
                                const GaussianRational& b) {
    if (n < 3) throw ArithmeticError("disc_trinomial: n must be >= 3");
    if (k <= 0 || k >= n) throw ArithmeticError("disc_trinomial: requires n > k > 0");
    if (a.is_zero() || b.is_zero()) throw ArithmeticError("disc_trinomial: requires ab != 0");
    BigInt d;
    mpz_gcd(d.get_mpz_t(), BigInt(n - k).get_mpz_t(), k.get_mpz_t());
    const unsigned long nd = as_ulong(n / d, "n/d");
    const unsigned long kd = as_ulong(k / d, "k/d");
    const unsigned long nkd = as_ulong((n - k) / d, "(n-k)/d");

    GaussianRational inner = b.pow(nkd) * gr(pow(n, nd));
    GaussianRational second = a.pow(nd) * gr(pow(k, kd)) * gr(pow(n - k, nkd));
    if (sign_pow(BigInt(nd + 1)) < 0) second = -second;
    inner += second;

    GaussianRational value = b.pow(as_ulong(k - 1, "k-1")) * inner.pow(as_ulong(d, "d"));
    if (sign_pow(n * (n - 1) / 2) < 0) value = -value;
    return value;
}

GaussianRational disc_cubic(const GaussianRational& a, const GaussianRational& b,
                            const GaussianRational& c) {
    return -4 * a.pow(3UL) * c + a * a * b * b - 4 * b.pow(3UL) + 18 * a * b * c - 27 * c * c;
}

GaussianRational disc_quartic_k3(const GaussianRational& a, const GaussianRational& b,
                                 const GaussianRational& c) {
    return -4 * a.pow(3UL) * b.pow(3UL) - 27 * a.pow(4UL) * c * c - 6 * a * a * b * b * c -
           27 * b.pow(4UL) - 192 * a * b * c * c + 256 * c.pow(3UL);
}

DiscriminantResult disc_quad_k2(const QuadrinomialSpec& spec) {
    if (spec.family != Family::K2) throw ArithmeticError("disc_quad_k2: wrong family");
    spec.validate();
    const unsigned long n = as_ulong(spec.n, "n");
    const GaussianRational &a = spec.a, &b = spec.b, &c = spec.c;

    const GaussianRational e1 = -(gr(BigInt(n - 1)) * b) / (gr(BigInt(n - 2)) * a);
    const GaussianRational e2 = (gr(BigInt(n)) * c) / (gr(BigInt(n - 2)) * a);
    const GaussianRational half = e1 / gr(2);
    const GaussianRational disc2 = half * half - e2;

    GaussianRational bracket = gr(BigInt(n) * BigInt(n)) * e2.pow(n - 1) + 4 * a * a * e2 +
                               2 * a * b * e1 + b * b;
    if (n % 2 == 1) {
        // (1+(-1)^{n-1}) b n (...)^{(n-1)/2}; the term vanishes for even n and
        // its exponent is integral exactly when it survives.
        bracket += 2 * b * gr(BigInt(n)) * disc2.pow((n - 1) / 2);
    }
    bracket += gr(BigInt(n)) *
               quadratic_power_sum(n - 2, 4 * a * e2, b * e1, half, disc2);

    GaussianRational value =
        gr(pow(BigInt(n - 2), n - 1)) * a.pow(n - 1) * bracket / gr(BigInt(n));
    const BigInt audit = BigInt(n) * BigInt(n - 1) / 2;
    if (sign_pow(audit) < 0) value = -value;
    return {std::move(value), DiscMethod::ClosedFormK2, audit};
}

DiscriminantResult disc_recip_n2(const QuadrinomialSpec& spec) {
    if (spec.family != Family::RecipN2) throw ArithmeticError("disc_recip_n2: wrong family");
    spec.validate();
    const unsigned long n = as_ulong(spec.n, "n");
    const GaussianRational &a = spec.a, &b = spec.b, &c = spec.c;

    const GaussianRational e1 = -(gr(BigInt(n - 1)) * a) / (gr(BigInt(n - 2)) * b);
    const GaussianRational e2 = gr(BigInt(n)) / (gr(BigInt(n - 2)) * b);
    const GaussianRational half = e1 / gr(2);
    const GaussianRational disc2 = half * half - e2;

    GaussianRational bracket = gr(BigInt(n) * BigInt(n)) * e2.pow(n - 1) +
                               (4 * b * b * e2 + 2 * a * b * e1 + a * a) / (c * c);
    if (n % 2 == 1) {
        bracket += 2 * (a * gr(BigInt(n)) / c) * disc2.pow((n - 1) / 2);
    }
    bracket += (gr(BigInt(n)) / c) *
               quadratic_power_sum(n - 2, 4 * b * e2, a * e1, half, disc2);

    GaussianRational value =
        (gr(BigInt(n - 2)) * b * c).pow(n - 1) * bracket / gr(BigInt(n));
    const BigInt audit = BigInt(n) * BigInt(n - 1) / 2;
    if (sign_pow(audit) < 0) value = -value;
    return {std::move(value), DiscMethod::ClosedFormRecipN2, audit};
}

DiscriminantResult disc_quad_k_nm1(const QuadrinomialSpec& spec) {
    if (spec.family != Family::KNMinus1) throw ArithmeticError("disc_quad_k_nm1: wrong family");
    spec.validate();
    const unsigned long n = as_ulong(spec.n, "n");
    const GaussianRational &a = spec.a, &b = spec.b, &c = spec.c;
    const GaussianRational n_gr = gr(BigInt(n));
    const GaussianRational nsq = gr(BigInt(n) * BigInt(n));

    const GaussianRational e1 =
        -(gr(BigInt(n - 2)) * a * b + c * n_gr) / (b * gr(BigInt(n - 1)));
    const GaussianRational e2 = a * c / b;
    const GaussianRational half = e1 / gr(2);
    const GaussianRational disc2 = half * half - e2;

    const GaussianRational A = gr(BigInt(n - 1)) * a * a / nsq;   // (n-1)a^2/n^2
    const GaussianRational B = gr(BigInt(n - 1)) * b / n_gr;      // (n-1)b/n
    const GaussianRational C = c - a * b / nsq;                   // c - ab/n^2

    GaussianRational bracket = A * A * e2.pow(n - 2) + B * B * e2 + B * C * e1 + C * C;
    if (n % 2 == 0) {
        bracket -= 2 * A * C * disc2.pow((n - 2) / 2);
    }
    // Sum runs to floor((n-3)/2): one index further the n-2-2i denominator
    // inside hits zero (with a vanishing binomial attached).
    bracket -= A * quadratic_power_sum(n - 3, 2 * B * e2, C * e1, half, disc2);

    GaussianRational value = gr(BigInt(n) * BigInt(n) * BigInt(n) * BigInt(n)) *
                             gr(pow(BigInt(n - 1), n - 3)) * b.pow(n - 2) * bracket / (a * a);
    const BigInt audit = (BigInt(n) + 2) * BigInt(n - 1) / 2;
    if (sign_pow(audit) < 0) value = -value;
    return {std::move(value), DiscMethod::ClosedFormKNMinus1, audit};
}

namespace {

// Helper sequence for the x^n+ax^3+bx+c chain: w_r = b3 * t_r with (t_r) run
// at the divisor parameters of the actual remainder q = b3 x^3 - b1 x - b0,
// i.e. b1 = -b(n-1)/n, b0 = -c. Equivalently w_1 = 1, w_2 = 0, w_3 = b1/b3,
// w_r = (b1 w_{r-2} + b0 w_{r-3})/b3.
struct K3Terms {
    GaussianRational w_nm3, w_nm2, w_nm1;
};

K3Terms k3_sequence_terms(const GaussianRational& b3, const GaussianRational& b1,
                          const GaussianRational& b0, unsigned long n) {
    TrSequence seq(TrParams{b3, b1, b0});
    return {b3 * seq.value(n - 3), b3 * seq.value(n - 2), b3 * seq.value(n - 1)};
}

}  // namespace

DiscriminantResult disc_quad_k3(const QuadrinomialSpec& spec) {
    if (spec.family != Family::K3) throw ArithmeticError("disc_quad_k3: wrong family");
    spec.validate();
    const unsigned long n = as_ulong(spec.n, "n");
    const GaussianRational &a = spec.a, &b = spec.b, &c = spec.c;
    const GaussianRational n_gr = gr(BigInt(n));
    const GaussianRational nm3 = gr(BigInt(n - 3));

    const GaussianRational b3 = a * nm3 / n_gr;
    const GaussianRational bq = b * gr(BigInt(n - 1)) / n_gr;  // b(n-1)/n
    const K3Terms w = k3_sequence_terms(b3, -bq, -c, n);

    const GaussianRational lead = 3 * a + n_gr * w.w_nm2;  // leading coeff of the final quadratic
    if (lead.is_zero())
        throw DegenerateFormulaError("disc_quad_k3: 3a + n t_{n-2} vanished");

    const GaussianRational e1 = -(n_gr * w.w_nm1) / lead;
    const GaussianRational e2 =
        (a * b * nm3 - c * gr(BigInt(n) * BigInt(n)) * w.w_nm3) / (a * nm3 * lead);

    const GaussianRational bracket =
        b3 * b3 * e2.pow(3UL) + b3 * bq * (e1 * e1 - 2 * e2) * e2 +
        (a * c * nm3 / n_gr) * (e1.pow(3UL) - 3 * e1 * e2) + bq * bq * e2 +
        (b * c * gr(BigInt(n - 1)) / n_gr) * e1 + c * c;

    GaussianRational value =
        a.pow(n - 3) * gr(pow(BigInt(n - 3), n - 3)) * lead.pow(3UL) * bracket;
    const BigInt audit = BigInt(n - 1) * (BigInt(n) + 2) / 2;
    if (sign_pow(audit) < 0) value = -value;
    return {std::move(value), DiscMethod::ClosedFormK3, audit};
}

DiscriminantResult disc_recip_n3(const QuadrinomialSpec& spec) {
    if (spec.family != Family::RecipN3) throw ArithmeticError("disc_recip_n3: wrong family");
    spec.validate();
    const unsigned long n = as_ulong(spec.n, "n");
    const GaussianRational &a = spec.a, &b = spec.b, &c = spec.c;
    const GaussianRational n_gr = gr(BigInt(n));
    const GaussianRational nm3 = gr(BigInt(n - 3));
    const GaussianRational cn = c * n_gr;

    const GaussianRational b3 = b * nm3 / cn;
    const GaussianRational aq = a * gr(BigInt(n - 1)) / cn;  // a(n-1)/(cn)
    const K3Terms w = k3_sequence_terms(b3, -aq, -(GaussianRational(1) / c), n);

    const GaussianRational lead = 3 * b + cn * w.w_nm2;
    if (lead.is_zero())
        throw DegenerateFormulaError("disc_recip_n3: 3b + cn t_{n-2} vanished");

    const GaussianRational e1 = -(cn * w.w_nm1) / lead;
    const GaussianRational e2 =
        (a * b * nm3 - c * gr(BigInt(n) * BigInt(n)) * w.w_nm3) / (b * nm3 * lead);

    const GaussianRational bracket =
        (b * nm3 / cn).pow(2UL) * e2.pow(3UL) +
        (a * b * gr(BigInt(n - 1) * BigInt(n - 3)) / (c * c * gr(BigInt(n) * BigInt(n)))) *
            (e1 * e1 - 2 * e2) * e2 +
        (b * nm3 / (c * cn)) * (e1.pow(3UL) - 3 * e1 * e2) + aq * aq * e2 +
        (a * gr(BigInt(n - 1)) / (c * cn)) * e1 + GaussianRational(1) / (c * c);

    GaussianRational value = b.pow(n - 3) * c.pow(n + 1) * gr(pow(BigInt(n - 3), n - 3)) *
                             (3 * b / c + n_gr * w.w_nm2).pow(3UL) * bracket;
    const BigInt audit = BigInt(n - 1) * (BigInt(n) + 2) / 2;
    if (sign_pow(audit) < 0) value = -value;
    return {std::move(value), DiscMethod::ClosedFormRecipN3, audit};
}

DiscriminantResult disc_2n_pipeline(const QuadrinomialSpec& spec) {
    if (spec.family != Family::TwoNPipeline) throw ArithmeticError("disc_2n_pipeline: wrong family");
    spec.validate();
    const unsigned long n = as_ulong(spec.n, "n");
    const unsigned long l = as_ulong(spec.l, "l");
    const GaussianRational &a = spec.a, &b = spec.b, &c = spec.c;
    const GaussianRational n_gr = gr(BigInt(n));
    const GaussianRational a2m4c = a * a - 4 * c;
    const GaussianRational b2nl = b * gr(BigInt(2 * n - l));  // b(2n-l)

    // Monic forms of the two small remainders of the division chain. The
    // degree-(n-l) one has leading coefficient (a^2-4c)/(2a); the quadratic-
    // in-x^l one follows from a single further reduction step.
    const GaussianRational lead1 = a2m4c / (2 * a);
    const GaussianRational mid1 = (b2nl / (a * n_gr)).pow(2UL);
    const GaussianRational con1 = b * (a * a * gr(BigInt(l)) + 4 * c * gr(BigInt(2 * n - l))) /
                                  (2 * a * a * n_gr);
    std::vector<GaussianRational> rb1(n - l + 1);
    rb1[n - l] = GaussianRational(1);
    rb1[l] += mid1 / lead1;
    rb1[0] += con1 / lead1;

    const GaussianRational lead2 = -(b2nl / n_gr).pow(2UL) / a2m4c;
    const GaussianRational mid2 =
        (b / (gr(BigInt(2 * n)) * a2m4c)) *
        (gr(BigInt(2 * n - l)) * (a * a - 8 * c) - a * a * gr(BigInt(l)));
    std::vector<GaussianRational> rb2(2 * l + 1);
    rb2[2 * l] = GaussianRational(1);
    rb2[l] += mid2 / lead2;
    rb2[0] += c / lead2;

    // prod_{j=1}^{2l} rbar1(xi_j) over the roots of rbar2, as a resultant of
    // the two explicit remainders; degrees never exceed max(n-l, 2l).
    const GaussianRational prod =
        resultant_sylvester(Polynomial(std::move(rb2)), Polynomial(std::move(rb1)));

    GaussianRational value = b.pow(2 * (n - l)) * c.pow(l - 1) * a2m4c.pow(l) *
                             gr(pow(BigInt(n), 2 * l)) * gr(pow(BigInt(2 * n - l), 2 * (n - l))) *
                             prod;
    const BigInt audit = BigInt(n) + BigInt(l);
    if (sign_pow(audit) < 0) value = -value;
    return {std::move(value), DiscMethod::Section6Pipeline, audit};
}

GaussianRational disc_otake_shaska(const BigInt& n_big, const GaussianRational& a,
                                   const GaussianRational& b, const GaussianRational& t) {
    if (n_big < 5) throw ArithmeticError("disc_otake_shaska: n must be >= 5");
    if (b.is_zero() || t.is_zero()) throw ArithmeticError("disc_otake_shaska: requires bt != 0");
    const unsigned long n = as_ulong(n_big, "n");
    const unsigned long m0 = (n - 3) / 2;
    const unsigned long m1 = (n - 2) / 2;  // ceil((n-3)/2)

    GaussianRational gamma;
    if (!(a.is_zero() && n % 2 == 1)) {
        for (unsigned long k = 0; k <= m0; ++k) {
            const BigInt nk3(static_cast<long>(n - k - 3));
            GaussianRational sk =
                gr(pow(BigInt(n - 1), 3)) * gr(binomial(nk3, BigInt(k))) * a.pow(4UL) +
                4 * gr(BigInt(n) * BigInt(n) * BigInt(n - 2)) *
                    gr(binomial(BigInt(static_cast<long>(n) - static_cast<long>(k) - 4),
                                BigInt(k))) *
                    b * b;
            // nk3 >= (n-3)/2 >= 1 on this k-range for n >= 5.
            const BigInt nn(n), kk(k);
            const BigInt curly = 5 * nn * nn - (6 * kk + 23) * nn + 10 * kk + 24;
            sk -= gr(nn * BigInt(n - 1) * curly) * gr(binomial(nk3, kk)) * a * a * b / gr(nk3);
            const long e = static_cast<long>(n) - 2 * static_cast<long>(k) - 4;
            GaussianRational term = gr(pow(BigInt(n), k)) * pow_signed(gr(BigInt(n - 1)), e) *
                                    gr(pow(BigInt(n - 2), k)) * pow_signed(a, e) * b.pow(k) * sk;
            if (sign_pow(BigInt(n + k)) < 0) term = -term;
            gamma += term;
        }
    }

    const GaussianRational inner = gr(pow(BigInt(n - 2), n - 2)) * (a * a - 4 * b) * t * t +
                                   gamma * t - gr(pow(BigInt(n), n)) * b.pow(n - 1);
    GaussianRational value = t.pow(n - 1) * inner;
    if (m1 % 2 == 1) value = -value;
    return value;
}

}  // namespace sparsedisc
