#include <doctest.h>

#include "plr/fp.hpp"
#include "plr/rng.hpp"
#include "plr/zp.hpp"

using namespace plr;

TEST_CASE("primality check") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7));
    CHECK(is_prime(2147483647));  // 2^31 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
    CHECK_THROWS_AS(PrimeModulus(4), NotPrime);
    CHECK_THROWS_AS(PrimeModulus(0), NotPrime);
}

TEST_CASE("modular inverse") {
    const PrimeModulus m7(7);
    CHECK(m7.inv(3) == 5);
    const PrimeModulus m5(5);
    CHECK(m5.inv(4) == 4);
    CHECK_THROWS_AS(m7.inv(0), ZeroInversion);
}

TEST_CASE("inverse properties") {
    Rng rng(11);
    for (const std::uint32_t p : {2u, 3u, 7u, 65521u, 2147483647u}) {
        const PrimeModulus m(p);
        for (int t = 0; t < 2000; ++t) {
            const auto a = static_cast<FpScalar>(1 + rng.below(p - 1));
            const FpScalar b = m.inv(a);
            CHECK(m.mul(a, b) == 1);
            CHECK(m.inv(b) == a);
        }
    }
}

TEST_CASE("affine evaluation") {
    const PrimeModulus m7(7);
    const FpVector c{2, 3, 1};
    const FpVector x{4, 5};
    CHECK(fp_affine_eval(m7, c, x) == 3);

    const PrimeModulus m5(5);
    for (FpScalar k = 0; k < 5; ++k) {
        CHECK(fp_affine_eval(m5, FpVector{0, 0, k}, FpVector{3, 2}) == k);
    }
    // D = 0: the sum is empty
    CHECK(fp_affine_eval(m5, FpVector{4}, FpVector{}) == 4);
    CHECK_THROWS_AS(fp_affine_eval(m5, FpVector{1, 2}, FpVector{}), LengthMismatch);
}

TEST_CASE("affine evaluation is linear in c") {
    Rng rng(23);
    for (int t = 0; t < 2000; ++t) {
        const std::uint32_t p = t % 2 == 0 ? 7 : 65521;
        const PrimeModulus m(p);
        const auto dim = static_cast<std::size_t>(rng.below(9));
        FpVector c1(dim + 1), c2(dim + 1), sum(dim + 1), x(dim);
        for (std::size_t d = 0; d <= dim; ++d) {
            c1[d] = static_cast<FpScalar>(rng.below(p));
            c2[d] = static_cast<FpScalar>(rng.below(p));
            sum[d] = m.add(c1[d], c2[d]);
        }
        for (auto& a : x) a = static_cast<FpScalar>(rng.below(p));
        CHECK(fp_affine_eval(m, sum, x) ==
              m.add(fp_affine_eval(m, c1, x), fp_affine_eval(m, c2, x)));
    }
}

TEST_CASE("truncated p-adic arithmetic") {
    const ZpTrunc a(4, 3, 2);
    const ZpTrunc b(2, 3, 2);
    const ZpTrunc x(5, 3, 2);
    const std::vector<ZpTrunc> c{a, b};
    CHECK(zp_affine_eval(c, std::vector<ZpTrunc>{x}).value() == 4);  // 22 mod 9

    // E = 0: the trivial ring
    CHECK(zp_affine_eval(std::vector<ZpTrunc>{ZpTrunc(7, 3, 0), ZpTrunc(1, 3, 0)},
                         std::vector<ZpTrunc>{ZpTrunc(5, 3, 0)})
              .value() == 0);
    CHECK(zp_affine_eval(std::vector<ZpTrunc>{ZpTrunc(0, 3, 2), ZpTrunc(0, 3, 2)},
                         std::vector<ZpTrunc>{x})
              .value() == 0);

    CHECK_THROWS_AS(a + ZpTrunc(1, 3, 1), PrecisionMismatch);
    CHECK_THROWS_AS(a + ZpTrunc(1, 5, 2), ModulusMismatch);
}

TEST_CASE("valuation") {
    CHECK(ZpTrunc(6, 3, 2).valuation() == 1);
    CHECK(ZpTrunc(0, 3, 2).valuation() == 2);
    CHECK(ZpTrunc(7, 5, 3).valuation() == 0);
}

TEST_CASE("exact division by p") {
    const ZpTrunc a(6, 3, 2);
    const ZpTrunc q = a.exact_div_p();
    CHECK(q.value() == 2);
    CHECK(q.precision() == 1);
    CHECK(ZpTrunc(0, 3, 2).exact_div_p() == ZpTrunc(0, 3, 1));
    CHECK_THROWS_AS(ZpTrunc(4, 3, 2).exact_div_p(), NotDivisible);
}

TEST_CASE("reduction mod p is a homomorphism") {
    Rng rng(37);
    const std::uint32_t p = 5;
    const PrimeModulus m(p);
    for (int t = 0; t < 1000; ++t) {
        const unsigned prec = 1 + static_cast<unsigned>(rng.below(4));
        const auto dim = static_cast<std::size_t>(rng.below(5));
        const mpz_class q = pow_ui(p, prec);
        std::vector<ZpTrunc> c, x;
        FpVector cp, xp;
        for (std::size_t d = 0; d <= dim; ++d) {
            const auto v = static_cast<unsigned long>(rng.below(600));
            c.emplace_back(mpz_class(v), p, prec);
            cp.push_back(c.back().mod_p());
        }
        for (std::size_t d = 0; d < dim; ++d) {
            const auto v = static_cast<unsigned long>(rng.below(600));
            x.emplace_back(mpz_class(v), p, prec);
            xp.push_back(x.back().mod_p());
        }
        CHECK(zp_affine_eval(c, x).mod_p() == fp_affine_eval(m, cp, xp));
    }
}

TEST_CASE("exact division round-trips with multiplication by p") {
    Rng rng(41);
    for (int t = 0; t < 1000; ++t) {
        const std::uint32_t p = t % 2 == 0 ? 3 : 101;
        const unsigned prec = 1 + static_cast<unsigned>(rng.below(5));
        const ZpTrunc a(mpz_class(static_cast<unsigned long>(rng.below(100000))) * p, p, prec);
        const ZpTrunc lifted(a.exact_div_p().value() * p, p, prec);
        CHECK(lifted == a);
    }
}
