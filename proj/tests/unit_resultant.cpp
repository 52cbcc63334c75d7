#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sparsedisc/resultant.hpp>

#include "support.hpp"

using namespace sparsedisc;
using testsupport::gq;
using testsupport::gqi;
using testsupport::poly;
using testsupport::random_poly;

TEST_CASE("sylvester layout") {
    // f = x - u, g = x - v  ->  [[1, -u], [1, -v]]
    const GaussianRational u = gq(5), v = gq(-2);
    const Polynomial f = Polynomial::monomial(1, gq(1)) + Polynomial::constant(-u);
    const Polynomial g = Polynomial::monomial(1, gq(1)) + Polynomial::constant(-v);
    SylvesterMatrix m(f, g);
    CHECK(m.dim() == 2);
    CHECK(m.at(0, 0) == gq(1));
    CHECK(m.at(0, 1) == -u);
    CHECK(m.at(1, 0) == gq(1));
    CHECK(m.at(1, 1) == -v);

    // deg 3 x deg 2 -> 5x5; rows 0-1 from f, rows 2-4 from g, shifted copies.
    const Polynomial f3 = poly({4, 3, 2, 1});
    const Polynomial g2 = poly({7, 6, 5});
    SylvesterMatrix s(f3, g2);
    CHECK(s.dim() == 5);
    for (std::size_t j = 0; j <= 3; ++j) CHECK(s.at(0, j) == f3.coeff(3 - j));
    CHECK(s.at(0, 4) == gq(0));
    for (std::size_t j = 0; j <= 3; ++j) CHECK(s.at(1, j + 1) == f3.coeff(3 - j));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j <= 2; ++j) CHECK(s.at(2 + i, i + j) == g2.coeff(2 - j));

    // row i+1 of each band is row i shifted right by one
    for (std::size_t j = 0; j + 1 < 5; ++j) CHECK(s.at(1, j + 1) == s.at(0, j));
    for (std::size_t i = 2; i < 4; ++i)
        for (std::size_t j = 0; j + 1 < 5; ++j) CHECK(s.at(i + 1, j + 1) == s.at(i, j));

    CHECK_THROWS_AS(SylvesterMatrix(Polynomial::zero(), g2), ArithmeticError);
    CHECK_THROWS_AS(SylvesterMatrix(Polynomial::constant(gq(1)), Polynomial::constant(gq(2))),
                    ArithmeticError);
}

TEST_CASE("determinant basics") {
    const GaussianRational u = gqi(3, 1, 2), v = gqi(-1, 4, 3);
    const Polynomial f = Polynomial::monomial(1, gq(1)) + Polynomial::constant(-u);
    const Polynomial g = Polynomial::monomial(1, gq(1)) + Polynomial::constant(-v);
    CHECK(det(SylvesterMatrix(f, g)) == u - v);  // 2x2 cofactor expansion

    // Syl(x^3, c) is diagonal c,c,c -> det c^3; with c=1 an identity-shaped instance.
    CHECK(det(SylvesterMatrix(Polynomial::monomial(3, gq(1)), Polynomial::constant(gq(1)))) ==
          gq(1));

    // equal rows -> 0: Syl(f, f') of x^2+2x+1 has rank deficiency (common root)
    const Polynomial sq = poly({1, 2, 1});
    CHECK(resultant_sylvester(sq, sq.derivative()) == gq(0));
}

TEST_CASE("resultant examples") {
    const GaussianRational u = gq(7), v = gqi(0, 1);
    const Polynomial f = Polynomial::monomial(1, gq(1)) + Polynomial::constant(-u);
    const Polynomial g = Polynomial::monomial(1, gq(1)) + Polynomial::constant(-v);
    CHECK(resultant_sylvester(f, g) == u - v);
    CHECK(resultant_prs(f, g) == u - v);

    // R(f, c) = c^{deg f}
    const Polynomial h = poly({3, 1, 4, 1});
    CHECK(resultant_sylvester(h, Polynomial::constant(gq(5))) == gq(125));
    CHECK(resultant_prs(h, Polynomial::constant(gq(5))) == gq(125));
}

TEST_CASE("antisymmetry and multiplicativity") {
    InstanceGenerator rng(2718281);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial f = random_poly(rng, 7);
        const Polynomial g = random_poly(rng, 7);
        if (f.degree() + g.degree() < 1) continue;
        GaussianRational lhs = resultant_sylvester(f, g);
        GaussianRational rhs = resultant_sylvester(g, f);
        if ((f.degree() * g.degree()) % 2 != 0) rhs = -rhs;
        CHECK(lhs == rhs);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial f1 = random_poly(rng, 4);
        const Polynomial f2 = random_poly(rng, 4);
        const Polynomial g = random_poly(rng, 4);
        if (f1.degree() < 1 || f2.degree() < 1 || g.degree() < 1) continue;
        CHECK(resultant_sylvester(f1 * f2, g) ==
              resultant_sylvester(f1, g) * resultant_sylvester(f2, g));
    }
}

TEST_CASE("prs agrees with sylvester on 200 random pairs") {
    InstanceGenerator rng(1729);
    int done = 0;
    while (done < 200) {
        const Polynomial f = random_poly(rng, 12);
        const Polynomial g = random_poly(rng, 12);
        if (f.degree() + g.degree() < 1) continue;
        CHECK(resultant_prs(f, g) == resultant_sylvester(f, g));
        ++done;
    }
}

TEST_CASE("root product: R(f,g) = lead(f)^deg(g) prod g(xi)") {
    InstanceGenerator rng(60221);
    for (int trial = 0; trial < 100; ++trial) {
        // f = lead * prod (x - xi) with chosen Q(i) roots
        const int nroots = static_cast<int>(rng.uniform(1, 4));
        GaussianRational lead = rng.coefficient(true);
        Polynomial f = Polynomial::constant(lead);
        std::vector<GaussianRational> roots;
        for (int i = 0; i < nroots; ++i) {
            roots.push_back(GaussianRational(BigInt(rng.uniform(-5, 5)), BigInt(rng.uniform(-5, 5)),
                                             BigInt(rng.uniform(1, 3))));
            f = f * (Polynomial::monomial(1, gq(1)) + Polynomial::constant(-roots.back()));
        }
        const Polynomial g = random_poly(rng, 5);
        if (g.degree() < 0 || f.degree() + g.degree() < 1) continue;
        GaussianRational expected = lead.pow(static_cast<unsigned long>(g.degree()));
        for (const auto& r : roots) expected *= g.eval(r);
        CHECK(resultant_sylvester(f, g) == expected);
    }
}

TEST_CASE("discriminant oracle") {
    // roots of x^3+x^2+x+1 are -1, +-i; Delta = prod (xi - xj)^2 = -16
    CHECK(discriminant_oracle(poly({1, 1, 1, 1})).value == gq(-16));
    CHECK(discriminant_oracle(poly({1, 1, 1, 1})).method == DiscMethod::OracleSylvester);
    CHECK(discriminant_oracle(poly({1, 1, 1, 1})).sign_exponent_audit == 3);
    CHECK(discriminant_oracle(poly({1, 1, 1, 1}), OracleAlgorithm::Prs).value == gq(-16));

    // x^2+ax+b -> a^2-4b
    InstanceGenerator rng(8675309);
    for (int trial = 0; trial < 50; ++trial) {
        const GaussianRational a = rng.coefficient(false), b = rng.coefficient(false);
        std::vector<GaussianRational> v{b, a, gq(1)};
        CHECK(discriminant_oracle(Polynomial(std::move(v))).value == a * a - 4 * b);
    }

    // repeated root -> 0
    const Polynomial rep = poly({-1, 1}) * poly({-1, 1}) * poly({-2, 1});
    CHECK(discriminant_oracle(rep).value == gq(0));
    CHECK(discriminant_oracle(rep, OracleAlgorithm::Prs).value == gq(0));

    CHECK_THROWS_AS(discriminant_oracle(Polynomial::constant(gq(3))), ArithmeticError);
}

TEST_CASE("Delta(f) = Delta(f*) for a0 != 0") {
    InstanceGenerator rng(4444);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f = random_poly(rng, 8);
        if (f.degree() < 1) continue;
        if (f.coeff(0).is_zero()) f = f + Polynomial::constant(gq(1));
        if (f.degree() < 1) continue;
        CHECK(discriminant_oracle(f).value == discriminant_oracle(f.reciprocal()).value);
    }
}

TEST_CASE("reduction step of the euclidean resultant identity") {
    // R(f,g) = (-1)^{(n-k)m} lead(g)^{n-k} R(f+hg, g) for random h with
    // deg h <= n - m.
    InstanceGenerator rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial g = random_poly(rng, 5);
        if (g.degree() < 1) continue;
        const Polynomial f = random_poly(rng, 11);
        if (f.degree() < g.degree()) continue;
        const Polynomial h = random_poly(rng, f.degree() - g.degree());
        const Polynomial fh = f + h * g;
        if (fh.is_zero()) continue;
        const long n = f.degree(), m = g.degree(), k = fh.degree();
        GaussianRational rhs = resultant_sylvester(fh, g) *
                               g.leading().pow(static_cast<unsigned long>(n - k));
        if (((n - k) * m) % 2 != 0) rhs = -rhs;
        CHECK(resultant_sylvester(f, g) == rhs);
    }
}
