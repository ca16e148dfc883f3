#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "isogsum/charsums.hpp"
#include "isogsum/curves.hpp"
#include "isogsum/isogeny.hpp"
#include "isogsum/modular.hpp"

namespace isogsum {

/*
 * The three CM curves carrying a degree-2 endomorphism:
 *   minus1: y^2 = x^3 + x                  (CM by Z[i])
 *   minus2: y^2 = (x + 2)(x^2 - 2)         (CM by Z[sqrt(-2)])
 *   minus7: y^2 = (x + 7)(x^2 - 7x + 14)   (CM by Z[(1 + sqrt(-7))/2])
 * The endomorphism reduces to F_p when (D/p) = +1, D = -1, -2, -7.
 */
enum class cm_case { minus1, minus2, minus7 };

/* Which square root of D instantiates the endomorphism. */
enum class surd_choice { canonical, conjugate };

std::string_view to_string(cm_case c);
std::int64_t cm_discriminant(cm_case c);
bool cm_split(cm_case c, prime p);

/* The case's curve reduced mod p; error(errc::bad_reduction) if singular. */
cubic_curve cm_curve(cm_case c, prime p);

/*
 * Isomorphisms onto the normalized pair (a, b):
 *   alpha1: E -> E1, (x, y) -> (u^2 x + shift, u^3 y)
 *   alpha2: E -> E2, (x, y) -> (x - epsilon, y)
 * with alpha2 o phi = tau o alpha1 and (epsilon, 0) generating ker phi_hat.
 */
struct coord_change
{
    field_element epsilon;
    field_element u;
    field_element shift;
    field_element a;
    field_element b;

    /* epsilon + a: the shift that turns S_phi into S_tau. */
    field_element xi() const { return epsilon + a; }

    curve_point alpha1(curve_point const & P) const;
    curve_point alpha2(curve_point const & P) const;
};

class cm_endomorphism
{
    cm_case tag_;
    surd_choice choice_;
    field_element surd_;
    cubic_curve curve_;
    coord_change coords_;

    public:

    /* error(errc::split_condition_failed) unless (D/p) = +1. */
    cm_endomorphism(cm_case c, prime p, surd_choice choice = surd_choice::canonical);

    cm_case tag() const noexcept { return tag_; }
    surd_choice choice() const noexcept { return choice_; }
    prime modulus() const noexcept { return surd_.modulus(); }

    /* The square root of D in use (i, sqrt(-2) or sqrt(-7)). */
    field_element const & surd() const noexcept { return surd_; }
    cubic_curve const & curve() const noexcept { return curve_; }
    coord_change const & coordinates() const noexcept { return coords_; }
    two_isogeny_pair normalized_pair() const;

    /* Kernel points (a vanishing denominator) and infinity map to infinity;
     * error(errc::point_not_on_curve) for P off the curve. */
    curve_point operator()(curve_point const & P) const;

    /* phi(E(F_p)), sorted. */
    std::vector<curve_point> image() const;
};

curve_point cm_endomorphism_apply(cm_case c, prime p, curve_point const & P);

/*
 * S_phi for one prime. report.sum uses the weight {x(P) - xi} with
 * xi = epsilon + a, which is 0 for minus1 and minus2; report.error is
 * R_{a,b} of the normalized pair. The unshifted {x(P)} sum is kept
 * alongside since for minus7 xi != 0.
 */
struct cm_sum_report
{
    cm_case tag = cm_case::minus1;
    surd_choice choice = surd_choice::canonical;
    std::int64_t surd = 0;
    std::int64_t xi = 0;
    sum_report report;
    std::int64_t unshifted_sum = 0;
    bool unshifted_matches = false;   // -unshifted/p == hstar + error
    bool case_claim_holds = false;    // minus1: quotient 1; minus2: quotient h*;
                                      // minus7: quotient h* + R
};

cm_sum_report cm_weighted_sum(cm_case c, prime p,
                              surd_choice choice = surd_choice::canonical);

/* chi_phi(P) == chi_tau(alpha2(P)) on all of E(F_p), and S_phi == S_tau. */
bool translate_equivalence_check(cm_case c, prime p,
                                 surd_choice choice = surd_choice::canonical);

} // namespace isogsum
