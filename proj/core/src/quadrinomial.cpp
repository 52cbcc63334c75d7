#include "sparsedisc/quadrinomial.hpp"

#include <sstream>

#include "sparsedisc/errors.hpp"

namespace sparsedisc {

const char* family_name(Family f) {
    switch (f) {
        case Family::K2: return "k2";
        case Family::K3: return "k3";
        case Family::KNMinus1: return "knm1";
        case Family::RecipN2: return "recip2";
        case Family::RecipN3: return "recip3";
        case Family::TwoNPipeline: return "two_n";
    }
    return "?";
}

void QuadrinomialSpec::validate() const {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw ArithmeticError("quadrinomial family requires abc != 0");
    switch (family) {
        case Family::K2:
            if (n <= 3) throw ArithmeticError("k2 requires n > 3");
            break;
        case Family::K3:
            if (n <= 4) throw ArithmeticError("k3 requires n > 4");
            break;
        case Family::KNMinus1:
            if (n <= 4) throw ArithmeticError("knm1 requires n > 4");
            break;
        case Family::RecipN2:
            if (n <= 3) throw ArithmeticError("recip2 requires n > 3");
            break;
        case Family::RecipN3:
            if (n <= 5) throw ArithmeticError("recip3 requires n > 5");
            break;
        case Family::TwoNPipeline:
            if (l < 1) throw ArithmeticError("two_n requires l >= 1");
            if (n <= 2 * l) throw ArithmeticError("two_n requires n > 2l");
            if (a * a == 4 * c) throw ArithmeticError("two_n requires a^2 != 4c");
            break;
    }
}

namespace {

std::size_t to_index(const BigInt& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) throw ArithmeticError(std::string(what) + " out of range");
    return static_cast<std::size_t>(v.get_ui());
}

}  // namespace

Polynomial expand(const QuadrinomialSpec& spec) {
    spec.validate();
    const std::size_t n = to_index(spec.n, "n");
    std::size_t deg = n, ka = 0, lb = 0;
    switch (spec.family) {
        case Family::K2: ka = 2; lb = 1; break;
        case Family::K3: ka = 3; lb = 1; break;
        case Family::KNMinus1: ka = n - 1; lb = 1; break;
        case Family::RecipN2: ka = n - 1; lb = n - 2; break;
        case Family::RecipN3: ka = n - 1; lb = n - 3; break;
        case Family::TwoNPipeline:
            deg = 2 * n;
            ka = n;
            lb = to_index(spec.l, "l");
            break;
    }
    std::vector<GaussianRational> v(deg + 1);
    v[deg] = GaussianRational(1);
    v[ka] += spec.a;
    v[lb] += spec.b;
    v[0] += spec.c;
    return Polynomial(std::move(v));
}

std::string QuadrinomialSpec::to_string() const {
    std::ostringstream os;
    os << family_name(family) << " n=" << n.get_str();
    if (family == Family::TwoNPipeline) os << " l=" << l.get_str();
    os << " a=" << a << " b=" << b << " c=" << c;
    return os.str();
}

}  // namespace sparsedisc
