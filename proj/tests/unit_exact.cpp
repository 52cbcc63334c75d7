#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sparsedisc/gaussian_rational.hpp>
#include <sparsedisc/instance_gen.hpp>

#include "support.hpp"

using namespace sparsedisc;
using testsupport::gq;
using testsupport::gqi;

TEST_CASE("field arithmetic basics") {
    const GaussianRational i = GaussianRational::imaginary_unit();
    CHECK((gq(1) + i) * (gq(1) - i) == gq(2));  // |1+i|^2
    CHECK(gqi(3, 0, 4) / gqi(3, 0, 4) == gq(1));
    CHECK(gq(0) + gqi(5, -7, 3) == gqi(5, -7, 3));
    CHECK(i * i == gq(-1));
    CHECK(i.pow(4UL) == gq(1));
    CHECK(gq(1, 2).pow(3UL) == gq(1, 8));
    CHECK(gqi(2, -3, 5).pow(0UL) == gq(1));
    CHECK(gq(0).pow(0UL) == gq(1));  // 0^0 = 1 by convention
    CHECK(gq(0).pow(5UL) == gq(0));
    CHECK_THROWS_AS(gq(1) / gq(0), ArithmeticError);
    CHECK_THROWS_AS(gq(2).pow(BigInt(-1)), ArithmeticError);
}

TEST_CASE("normalization is canonical") {
    // den > 0, gcd(re, im, den) = 1, canonical zero
    GaussianRational v(BigInt(4), BigInt(-6), BigInt(-8));
    CHECK(v.re_num() == -2);
    CHECK(v.im_num() == 3);
    CHECK(v.den() == 4);
    GaussianRational z(BigInt(0), BigInt(0), BigInt(17));
    CHECK(z.den() == 1);
    CHECK(z.is_zero());
    // structural equality after normalization
    CHECK(GaussianRational(BigInt(2), BigInt(4), BigInt(6)) ==
          GaussianRational(BigInt(1), BigInt(2), BigInt(3)));
    CHECK_THROWS_AS(GaussianRational(BigInt(1), BigInt(0), BigInt(0)), ArithmeticError);
}

TEST_CASE("field axioms on random triples") {
    InstanceGenerator rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const GaussianRational x = rng.coefficient(false);
        const GaussianRational y = rng.coefficient(false);
        const GaussianRational z = rng.coefficient(false);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == gq(0));
        if (!x.is_zero()) CHECK(x / x == gq(1));
    }
}

TEST_CASE("normalizing twice equals normalizing once") {
    InstanceGenerator rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussianRational x = rng.coefficient(false);
        CHECK(GaussianRational(x.re_num(), x.im_num(), x.den()) == x);
    }
}

TEST_CASE("pow is a homomorphism in the exponent") {
    InstanceGenerator rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        GaussianRational x = rng.coefficient(true);
        const unsigned long a = static_cast<unsigned long>(rng.uniform(0, 64));
        const unsigned long b = static_cast<unsigned long>(rng.uniform(0, 64));
        CHECK(x.pow(a + b) == x.pow(a) * x.pow(b));
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(BigInt(5), BigInt(2)) == 10);
    CHECK(binomial(BigInt(4), BigInt(7)) == 0);
    CHECK(binomial(BigInt(4), BigInt(-1)) == 0);
    CHECK(binomial(BigInt(0), BigInt(0)) == 1);
    // Pascal identity up to n = 40
    for (long n = 1; n <= 40; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(BigInt(n), BigInt(k)) ==
                  binomial(BigInt(n - 1), BigInt(k - 1)) + binomial(BigInt(n - 1), BigInt(k)));
}

TEST_CASE("sign_pow from parity") {
    CHECK(sign_pow(BigInt(0)) == 1);
    CHECK(sign_pow(BigInt(4) * 3 / 2) == 1);   // n=4: n(n-1)/2 = 6
    CHECK(sign_pow(BigInt(3) * 2 / 2) == -1);  // n=3: 3
    CHECK(sign_pow(BigInt("123456789123456789123456789")) == -1);
}

TEST_CASE("canonical text round-trip") {
    const char* cases[] = {"3", "-1/2", "i", "-i", "2-3/4i", "0", "5/2i", "-7+i", "1/3+1/3i"};
    for (const char* c : cases) {
        const GaussianRational v = GaussianRational::parse(c);
        CHECK(v.to_string() == c);
        CHECK(GaussianRational::parse(v.to_string()) == v);
    }
    // parse . print = identity on random values
    InstanceGenerator rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        const GaussianRational v = rng.coefficient(false);
        CHECK(GaussianRational::parse(v.to_string()) == v);
    }
}

TEST_CASE("parser rejects malformed input with positions") {
    CHECK_THROWS_AS(GaussianRational::parse(""), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1+"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1+2"), ParseError);   // second part must be imaginary
    CHECK_THROWS_AS(GaussianRational::parse("i+1"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("2x"), ParseError);
    try {
        GaussianRational::parse("1+2x");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}
