#include <gtest/gtest.h>

#include "isogsum/classnumber.hpp"
#include "isogsum/cm.hpp"
#include "isogsum/error.hpp"
#include "oracles.hpp"

using namespace isogsum;

namespace {

cm_case const all_cases[] = { cm_case::minus1, cm_case::minus2, cm_case::minus7 };

}

TEST(CmSplit, LegendreOfDiscriminant)
{
    for (auto q : oracle::primes(5, 300))
        for (auto c : all_cases)
            EXPECT_EQ(cm_split(c, prime(q)), oracle::legendre(cm_discriminant(c), q) == 1);
    EXPECT_THROW(cm_endomorphism(cm_case::minus2, prime(13)), error);
}

TEST(CmEndomorphism, WorkedExampleAtEleven)
{
    cm_endomorphism const phi(cm_case::minus2, prime(11));
    auto const & E = phi.curve();
    std::vector<curve_point> const expected { curve_point::infinity(), E.point(7, 4), E.point(7, 7) };
    EXPECT_EQ(phi.image(), expected);
    auto const rep = cm_weighted_sum(cm_case::minus2, prime(11));
    EXPECT_EQ(rep.report.sum, -11);
    EXPECT_EQ(rep.report.quotient, 1);
    EXPECT_TRUE(rep.case_claim_holds);
}

TEST(CmEndomorphism, MapsCurveToItselfWithKernelOfOrderTwo)
{
    for (auto q : oracle::primes(5, 200))
        for (auto c : all_cases)
            for (auto choice : { surd_choice::canonical, surd_choice::conjugate }) {
                prime const p(q);
                if (!cm_split(c, p))
                    continue;
                cm_endomorphism const phi(c, p, choice);
                auto const pts = enumerate_points(phi.curve());
                std::size_t kernel = 0;
                for (auto const & P : pts) {
                    auto const Q = phi(P);
                    ASSERT_TRUE(phi.curve().contains(Q));
                    kernel += Q.is_infinity() ? 1 : 0;
                }
                ASSERT_EQ(kernel, 2u) << to_string(c) << " p=" << q;
            }
}

TEST(CmEndomorphism, CoordinateChangeIntertwinesTau)
{
    for (auto q : oracle::primes(5, 150))
        for (auto c : all_cases) {
            prime const p(q);
            if (!cm_split(c, p))
                continue;
            cm_endomorphism const phi(c, p);
            two_isogeny_pair const iso = phi.normalized_pair();
            auto const & k = phi.coordinates();
            for (auto const & P : enumerate_points(phi.curve())) {
                auto const A1 = k.alpha1(P);
                auto const A2 = k.alpha2(phi(P));
                ASSERT_TRUE(iso.e1().contains(A1));
                ASSERT_EQ(apply_tau(iso, A1), A2) << to_string(c) << " p=" << q;
            }
        }
}

TEST(CmEndomorphism, XiVanishesExceptMinusSeven)
{
    for (auto q : oracle::primes(5, 100)) {
        prime const p(q);
        if (cm_split(cm_case::minus1, p))
            EXPECT_TRUE(cm_endomorphism(cm_case::minus1, p).coordinates().xi().is_zero());
        if (cm_split(cm_case::minus2, p))
            EXPECT_TRUE(cm_endomorphism(cm_case::minus2, p).coordinates().xi().is_zero());
    }
    cm_endomorphism const phi(cm_case::minus7, prime(11));
    EXPECT_FALSE(phi.coordinates().xi().is_zero());
}

TEST(CmWeightedSum, FrozenMinusSeven)
{
    auto const r11 = cm_weighted_sum(cm_case::minus7, prime(11));
    EXPECT_EQ(r11.report.sum, 11);
    EXPECT_EQ(r11.report.error, -2);
    EXPECT_EQ(r11.xi, 6);
    EXPECT_EQ(r11.unshifted_sum, -6);
    EXPECT_FALSE(r11.unshifted_matches);
    EXPECT_TRUE(r11.case_claim_holds);
}

TEST(CmWeightedSum, ClaimsHold)
{
    for (auto q : oracle::primes(5, 400))
        for (auto c : all_cases) {
            prime const p(q);
            if (!cm_split(c, p))
                continue;
            auto const r = cm_weighted_sum(c, p);
            ASSERT_TRUE(r.report.passed()) << to_string(c) << " p=" << q;
            ASSERT_TRUE(r.case_claim_holds) << to_string(c) << " p=" << q;
            if (c == cm_case::minus1)
                ASSERT_EQ(r.report.sum, -q);
            if (c == cm_case::minus2)
                ASSERT_EQ(r.report.quotient, hp_star(p));
        }
}

TEST(TranslateEquivalence, MinusOneAndMinusTwo)
{
    for (auto q : oracle::primes(5, 200))
        for (auto c : { cm_case::minus1, cm_case::minus2 }) {
            prime const p(q);
            if (cm_split(c, p))
                ASSERT_TRUE(translate_equivalence_check(c, p)) << to_string(c) << " p=" << q;
        }
}
