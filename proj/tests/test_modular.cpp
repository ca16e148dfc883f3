#include <gtest/gtest.h>

#include <random>

#include "isogsum/error.hpp"
#include "isogsum/modular.hpp"
#include "oracles.hpp"

using namespace isogsum;

TEST(Prime, RejectsSmallAndComposite)
{
    for (std::int64_t n : { -7, 0, 1, 2, 3, 4, 9, 91, 561 }) {
        try {
            prime p(n);
            FAIL() << n << " accepted";
        } catch (error const & e) {
            EXPECT_TRUE(e.code() == errc::not_prime || e.code() == errc::invalid_argument) << n;
        }
    }
    EXPECT_EQ(prime(5).value(), 5u);
    EXPECT_EQ(prime(1000003).signed_value(), 1000003);
}

TEST(Prime, MillerRabinMatchesTrialDivision)
{
    for (std::int64_t n = 0; n < 20000; ++n)
        ASSERT_EQ(is_prime(static_cast<std::uint64_t>(n)), oracle::is_prime(n)) << n;
    // strong pseudoprimes to several small bases
    EXPECT_FALSE(is_prime(3215031751ull));
    EXPECT_FALSE(is_prime(3825123056546413051ull));
    EXPECT_TRUE(is_prime(4611686018427387847ull));   // largest prime below 2^62
}

TEST(FieldElement, ReducesNegativeInput)
{
    prime const p(11);
    EXPECT_EQ(field_element(-3, p).residue(), 8u);
    EXPECT_EQ(field_element(-22, p).residue(), 0u);
    EXPECT_EQ(lift(-1, p), 10);
}

TEST(FieldElement, InverseOfZeroThrows)
{
    prime const p(7);
    EXPECT_THROW((void) field_element::zero(p).inverse(), error);
    for (std::int64_t x = 1; x < 7; ++x)
        EXPECT_EQ(field_element(x, p) * field_element(x, p).inverse(), field_element::one(p));
}

TEST(FieldElement, RandomArithmeticAgainstIntegers)
{
    std::mt19937_64 rng(20240611);
    prime const p(1000000007);
    std::uniform_int_distribution<std::int64_t> d(-2000000000, 2000000000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t const x = d(rng), y = d(rng);
        field_element const fx(x, p), fy(y, p);
        std::int64_t const m = 1000000007;
        EXPECT_EQ(lift(fx + fy), oracle::mod(oracle::mod(x, m) + oracle::mod(y, m), m));
        EXPECT_EQ(lift(fx - fy), oracle::mod(oracle::mod(x, m) - oracle::mod(y, m), m));
        EXPECT_EQ(lift(fx * fy), oracle::mod(x, m) * oracle::mod(y, m) % m);
        if (!fy.is_zero())
            EXPECT_EQ(fx / fy * fy, fx);
    }
}

TEST(FieldElement, LargeModulusProducts)
{
    prime const p(4611686018427387847ll);
    field_element const x(p.signed_value() - 1, p);
    EXPECT_EQ(x * x, field_element::one(p));
    EXPECT_EQ(x.pow(p.value() - 1), field_element::one(p));
}

TEST(Legendre, EulerReciprocityAndSquaresAgree)
{
    for (auto q : oracle::primes(5, 400)) {
        prime const p(q);
        for (std::int64_t n = -q - 3; n <= q + 3; ++n) {
            int const expected = oracle::legendre(n, q);
            ASSERT_EQ(legendre(n, p), expected) << n << " mod " << q;
            ASSERT_EQ(legendre_reciprocity(n, p), expected) << n << " mod " << q;
        }
    }
}

TEST(Legendre, Supplements)
{
    for (auto q : oracle::primes(5, 2000)) {
        prime const p(q);
        EXPECT_EQ(legendre(-1, p), q % 4 == 1 ? 1 : -1);
        EXPECT_EQ(legendre(2, p), (q % 8 == 1 || q % 8 == 7) ? 1 : -1);
    }
}

TEST(SqrtMod, SmallerRootOrEmpty)
{
    for (auto q : oracle::primes(5, 600)) {
        prime const p(q);
        for (std::int64_t n = 0; n < q; ++n) {
            auto const r = sqrt_mod(field_element(n, p));
            if (oracle::legendre(n, q) == -1) {
                ASSERT_FALSE(r) << n << " mod " << q;
                continue;
            }
            ASSERT_TRUE(r) << n << " mod " << q;
            ASSERT_EQ(lift(*r * *r), n);
            ASSERT_TRUE(lift(*r) == 0 || 2 * lift(*r) < q);
        }
    }
}

TEST(SqrtMod, FrozenValues)
{
    EXPECT_EQ(lift(*sqrt_mod(field_element(-1, prime(13)))), 5);
    EXPECT_EQ(lift(*sqrt_mod(field_element(-2, prime(11)))), 3);
    EXPECT_EQ(lift(*sqrt_mod(field_element(-7, prime(11)))), 2);
}
