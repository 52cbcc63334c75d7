#include "sparsedisc/instance_gen.hpp"

#include <array>
#include <sstream>

#include "sparsedisc/closed_form.hpp"
#include "sparsedisc/errors.hpp"

namespace sparsedisc {

const char* family_tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::Binomial: return "binomial";
        case FamilyTag::Trinomial: return "trinomial";
        case FamilyTag::K2: return "k2";
        case FamilyTag::K3: return "k3";
        case FamilyTag::KNMinus1: return "knm1";
        case FamilyTag::RecipN2: return "recip2";
        case FamilyTag::RecipN3: return "recip3";
        case FamilyTag::TwoN: return "two_n";
        case FamilyTag::OtakeShaska: return "os";
    }
    return "?";
}

std::optional<FamilyTag> family_tag_from_name(std::string_view name) {
    static constexpr std::array<FamilyTag, 9> all = {
        FamilyTag::Binomial, FamilyTag::Trinomial, FamilyTag::K2,      FamilyTag::K3,
        FamilyTag::KNMinus1, FamilyTag::RecipN2,   FamilyTag::RecipN3, FamilyTag::TwoN,
        FamilyTag::OtakeShaska};
    for (FamilyTag t : all)
        if (name == family_tag_name(t)) return t;
    return std::nullopt;
}

Polynomial FamilyInstance::expand() const {
    switch (tag) {
        case FamilyTag::Binomial: {
            std::vector<GaussianRational> v(n + 1);
            v[n] = GaussianRational(1);
            v[0] = a;
            return Polynomial(std::move(v));
        }
        case FamilyTag::Trinomial: {
            std::vector<GaussianRational> v(n + 1);
            v[n] = GaussianRational(1);
            v[k] += a;
            v[0] += b;
            return Polynomial(std::move(v));
        }
        case FamilyTag::OtakeShaska: {
            // x^n + t(x^2 + a x + b)
            std::vector<GaussianRational> v(n + 1);
            v[n] = GaussianRational(1);
            v[2] += t;
            v[1] += t * a;
            v[0] += t * b;
            return Polynomial(std::move(v));
        }
        default: {
            return sparsedisc::expand(quadrinomial_spec());
        }
    }
}

QuadrinomialSpec FamilyInstance::quadrinomial_spec() const {
    Family fam;
    switch (tag) {
        case FamilyTag::K2: fam = Family::K2; break;
        case FamilyTag::K3: fam = Family::K3; break;
        case FamilyTag::KNMinus1: fam = Family::KNMinus1; break;
        case FamilyTag::RecipN2: fam = Family::RecipN2; break;
        case FamilyTag::RecipN3: fam = Family::RecipN3; break;
        case FamilyTag::TwoN: fam = Family::TwoNPipeline; break;
        default: throw ArithmeticError("not a quadrinomial family instance");
    }
    return QuadrinomialSpec{fam, BigInt(static_cast<long>(n)), BigInt(static_cast<long>(l)), a, b,
                            c};
}

std::string FamilyInstance::describe() const {
    std::ostringstream os;
    os << family_tag_name(tag) << " n=" << n;
    switch (tag) {
        case FamilyTag::Binomial:
            os << " a=" << a;
            break;
        case FamilyTag::Trinomial:
            os << " k=" << k << " a=" << a << " b=" << b;
            break;
        case FamilyTag::OtakeShaska:
            os << " a=" << a << " b=" << b << " t=" << t;
            break;
        case FamilyTag::TwoN:
            os << " l=" << l << " a=" << a << " b=" << b << " c=" << c;
            break;
        default:
            os << " a=" << a << " b=" << b << " c=" << c;
            break;
    }
    return os.str();
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, unsigned long n_max)
    : state_(seed), n_max_(n_max < 8 ? 8 : n_max) {}

// splitmix64: tiny, seed-stable across platforms.
std::uint64_t InstanceGenerator::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long InstanceGenerator::uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next_u64() % span);
}

GaussianRational InstanceGenerator::coefficient(bool nonzero) {
    for (;;) {
        const BigInt p1(uniform(-99, 99)), q1(uniform(1, 9));
        const BigInt p2(uniform(-99, 99)), q2(uniform(1, 9));
        GaussianRational v(p1 * q2, p2 * q1, q1 * q2);
        if (!nonzero || !v.is_zero()) return v;
    }
}

FamilyInstance InstanceGenerator::generate(FamilyTag tag) {
    FamilyInstance inst;
    inst.tag = tag;
    const long nmax = static_cast<long>(n_max_);
    switch (tag) {
        case FamilyTag::Binomial:
            inst.n = static_cast<unsigned long>(uniform(1, nmax));
            inst.a = coefficient(true);
            break;
        case FamilyTag::Trinomial:
            inst.n = static_cast<unsigned long>(uniform(3, nmax));
            inst.k = static_cast<unsigned long>(uniform(1, static_cast<long>(inst.n) - 1));
            inst.a = coefficient(true);
            inst.b = coefficient(true);
            break;
        case FamilyTag::K2:
        case FamilyTag::RecipN2:
            inst.n = static_cast<unsigned long>(uniform(4, nmax));
            inst.a = coefficient(true);
            inst.b = coefficient(true);
            inst.c = coefficient(true);
            break;
        case FamilyTag::K3:
        case FamilyTag::KNMinus1:
            inst.n = static_cast<unsigned long>(uniform(5, nmax));
            inst.a = coefficient(true);
            inst.b = coefficient(true);
            inst.c = coefficient(true);
            break;
        case FamilyTag::RecipN3:
            inst.n = static_cast<unsigned long>(uniform(6, nmax));
            inst.a = coefficient(true);
            inst.b = coefficient(true);
            inst.c = coefficient(true);
            break;
        case FamilyTag::TwoN: {
            // degree 2n stays within n_max; n > 2l.
            const long inner_max = std::max(3L, nmax / 2);
            const long lmax = std::max(1L, (inner_max - 1) / 2);
            inst.l = static_cast<unsigned long>(uniform(1, lmax));
            inst.n = static_cast<unsigned long>(
                uniform(static_cast<long>(2 * inst.l) + 1, inner_max));
            inst.a = coefficient(true);
            inst.b = coefficient(true);
            do {
                inst.c = coefficient(true);
            } while (inst.a * inst.a == 4 * inst.c);
            break;
        }
        case FamilyTag::OtakeShaska:
            inst.n = static_cast<unsigned long>(uniform(5, nmax));
            // keep the a = 0 branches reachable
            inst.a = (uniform(0, 7) == 0) ? GaussianRational() : coefficient(false);
            inst.b = coefficient(true);
            inst.t = coefficient(true);
            break;
    }
    return inst;
}

FamilyInstance InstanceGenerator::generate_any() {
    static constexpr std::array<FamilyTag, 9> order = {
        FamilyTag::Binomial, FamilyTag::Trinomial, FamilyTag::K2,      FamilyTag::K3,
        FamilyTag::KNMinus1, FamilyTag::RecipN2,   FamilyTag::RecipN3, FamilyTag::TwoN,
        FamilyTag::OtakeShaska};
    FamilyTag tag = order[cycle_ % order.size()];
    ++cycle_;
    return generate(tag);
}

DiscriminantResult closed_form_value(const FamilyInstance& inst) {
    switch (inst.tag) {
        case FamilyTag::Binomial: {
            const BigInt n(static_cast<long>(inst.n));
            return {disc_binomial(n, inst.a), DiscMethod::ClosedFormBinomial, n * (n - 1) / 2};
        }
        case FamilyTag::Trinomial: {
            const BigInt n(static_cast<long>(inst.n));
            return {disc_trinomial(n, BigInt(static_cast<long>(inst.k)), inst.a, inst.b),
                    DiscMethod::ClosedFormTrinomial, n * (n - 1) / 2};
        }
        case FamilyTag::OtakeShaska: {
            const BigInt n(static_cast<long>(inst.n));
            return {disc_otake_shaska(n, inst.a, inst.b, inst.t),
                    DiscMethod::ClosedFormOtakeShaska, (n - 2) / 2};
        }
        case FamilyTag::K2: return disc_quad_k2(inst.quadrinomial_spec());
        case FamilyTag::K3: return disc_quad_k3(inst.quadrinomial_spec());
        case FamilyTag::KNMinus1: return disc_quad_k_nm1(inst.quadrinomial_spec());
        case FamilyTag::RecipN2: return disc_recip_n2(inst.quadrinomial_spec());
        case FamilyTag::RecipN3: return disc_recip_n3(inst.quadrinomial_spec());
        case FamilyTag::TwoN: return disc_2n_pipeline(inst.quadrinomial_spec());
    }
    throw ArithmeticError("unknown family tag");
}

}  // namespace sparsedisc
