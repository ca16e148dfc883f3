#include <gtest/gtest.h>

#include "isogsum/classnumber.hpp"
#include "oracles.hpp"

using namespace isogsum;

TEST(ReducedForms, DiscriminantMinus23)
{
    std::vector<quad_form> const expected { { 1, 1, 6 }, { 2, -1, 3 }, { 2, 1, 3 } };
    EXPECT_EQ(reduced_forms(-23), expected);
    EXPECT_EQ(class_number(std::int64_t(-23)), 3);
}

TEST(ReducedForms, MatchExhaustiveSearch)
{
    for (std::int64_t d = -3; d >= -3000; --d) {
        if (oracle::mod(d, 4) > 1)
            continue;
        auto const forms = reduced_forms(d);
        auto const ref = oracle::reduced_forms(d);
        ASSERT_EQ(forms.size(), ref.size()) << d;
        for (auto const & f : forms) {
            ASSERT_TRUE(f.is_reduced());
            ASSERT_TRUE(f.is_primitive());
            ASSERT_EQ(f.discriminant(), d);
        }
    }
}

TEST(ClassNumber, FrozenValues)
{
    EXPECT_EQ(class_number(std::int64_t(-4)), 1);
    EXPECT_EQ(class_number(std::int64_t(-20)), 2);
    EXPECT_EQ(class_number(std::int64_t(-47)), 5);
    EXPECT_EQ(class_number(std::int64_t(-71)), 7);
    EXPECT_EQ(class_number(std::int64_t(-52)), 2);
    EXPECT_EQ(class_number(prime(163)), 1);
    EXPECT_EQ(class_number(prime(13)), 2);
}

TEST(HpStar, ZeroForOneModFour)
{
    for (auto q : oracle::primes(5, 1500)) {
        prime const p(q);
        EXPECT_EQ(field_discriminant(p), q % 4 == 3 ? -q : -4 * q);
        EXPECT_EQ(hp_star(p), oracle::h_star(q)) << q;
    }
}
