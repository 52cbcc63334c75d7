#pragma once

// Shared helpers for the test binaries.

#include <sparsedisc/closed_form.hpp>
#include <sparsedisc/instance_gen.hpp>
#include <sparsedisc/polynomial.hpp>

namespace testsupport {

using namespace sparsedisc;

inline GaussianRational gq(long num, long den = 1) {
    return GaussianRational(BigInt(num), BigInt(0), BigInt(den));
}

inline GaussianRational gqi(long re, long im, long den = 1) {
    return GaussianRational(BigInt(re), BigInt(im), BigInt(den));
}

inline Polynomial poly(std::initializer_list<long> ascending) {
    std::vector<GaussianRational> v;
    for (long c : ascending) v.push_back(gq(c));
    return Polynomial(std::move(v));
}

// Random degree <= max_deg polynomial with small Q(i) coefficients; nonzero.
inline Polynomial random_poly(InstanceGenerator& rng, long max_deg, bool monic = false) {
    const long deg = rng.uniform(0, max_deg);
    std::vector<GaussianRational> v(static_cast<std::size_t>(deg) + 1);
    for (auto& c : v) {
        c = GaussianRational(BigInt(rng.uniform(-9, 9)), BigInt(rng.uniform(-9, 9)),
                             BigInt(rng.uniform(1, 4)));
    }
    if (monic) {
        v.back() = GaussianRational(1);
    } else {
        while (v.back().is_zero())
            v.back() = GaussianRational(BigInt(rng.uniform(-9, 9)), BigInt(rng.uniform(-9, 9)),
                                        BigInt(rng.uniform(1, 4)));
    }
    return Polynomial(std::move(v));
}

}  // namespace testsupport
