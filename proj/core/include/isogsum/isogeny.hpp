#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "isogsum/curves.hpp"
#include "isogsum/modular.hpp"

namespace isogsum {

/* A value in mu_2 = {+1, -1}. */
class character
{
    int sign_;

    explicit constexpr character(int sign) : sign_(sign) {}

    public:

    static constexpr character plus() { return character(1); }
    static constexpr character minus() { return character(-1); }

    /* Nonzero Legendre values only; throws error(errc::invalid_argument) on 0. */
    static character from_legendre(int symbol);

    constexpr int value() const noexcept { return sign_; }

    friend constexpr character operator*(character a, character b)
    {
        return character(a.sign_ * b.sign_);
    }
    friend constexpr bool operator==(character, character) = default;
};

std::ostream & operator<<(std::ostream & o, character c);

/*
 * The normalized 2-isogeny
 *
 *   tau: E1: y^2 = x^3 + a x^2 + b x  -->  E2: y^2 = x^3 - 2a x^2 + r x,
 *
 * r = a^2 - 4b, with ker tau = <T1>, ker tau_hat = <T2>, T1 = T2 = (0,0).
 */
class two_isogeny_pair
{
    field_element a_, b_, r_;
    cubic_curve e1_, e2_;

    public:

    /* Throws error(errc::bad_reduction) when b = 0 or r = 0. */
    two_isogeny_pair(field_element a, field_element b);
    two_isogeny_pair(std::int64_t a, std::int64_t b, prime p);

    field_element const & a() const noexcept { return a_; }
    field_element const & b() const noexcept { return b_; }
    field_element const & r() const noexcept { return r_; }
    cubic_curve const & e1() const noexcept { return e1_; }
    cubic_curve const & e2() const noexcept { return e2_; }
    curve_point t1() const;
    curve_point t2() const;
    prime modulus() const noexcept { return a_.modulus(); }
};

/* tau(x,y) = (y^2/x^2, y(b - x^2)/x^2); infinity and T1 go to infinity. */
curve_point apply_tau(two_isogeny_pair const & iso, curve_point const & P);

/* tau_hat(x,y) = (y^2/4x^2, y(r - x^2)/8x^2); infinity and T2 go to infinity. */
curve_point apply_tau_hat(two_isogeny_pair const & iso, curve_point const & P);

/* Cokernel character of tau on E2(F_p), pointwise:
 * inf -> +1, T2 -> (r/p), otherwise (x/p). */
character chi_tau(two_isogeny_pair const & iso, curve_point const & P);

/* Cokernel character of tau_hat on E1(F_p):
 * inf -> +1, T1 -> (b/p), otherwise (x/p). */
character chi_tau_hat(two_isogeny_pair const & iso, curve_point const & P);

/* The functions used to evaluate the pairings: div f = 2(T2) - 2(inf) on E2
 * with f o tau = g^2, and dually f_hat o tau_hat = g_hat^2. */
struct pairing_functions
{
    static field_element f(curve_point const & P);      // x on E2
    static field_element g(curve_point const & P);      // y/x on E1
    static field_element f_hat(curve_point const & P);  // x on E1
    static field_element g_hat(curve_point const & P);  // y/(2x) on E2
};

enum class direction { forward, dual };

/* Image of E1(F_p) under tau (forward) or of E2(F_p) under tau_hat (dual),
 * computed by pushing every enumerated point through the map. */
class isogeny_image
{
    prime modulus_;
    direction dir_;
    std::vector<curve_point> points_;

    public:

    isogeny_image(two_isogeny_pair const & iso, direction dir);

    direction dir() const noexcept { return dir_; }
    std::vector<curve_point> const & points() const noexcept { return points_; }
    bool contains(curve_point const & P) const;
    character chi(curve_point const & P) const;
};

/* Brute-force ground truth for chi_tau / chi_tau_hat. */
character image_oracle(two_isogeny_pair const & iso, direction dir,
                       curve_point const & P);

/*
 * psi_tau([S], k T2) read through the Legendre symbol. For S outside
 * {inf, T2} this is (f(S)/p)^k. At S in {inf, T2} the shift formula
 * f(S+Q)/f(Q) is used with Q the first enumerated affine point of E2 with
 * x(Q) != 0 and Q != +-S; error(errc::no_auxiliary_point) if none exists.
 */
character tate_pairing_tau(two_isogeny_pair const & iso,
                           curve_point const & S, std::int64_t k);

/* The shift formula with an explicit auxiliary point Q. Requires Q, S + Q
 * outside {inf, T2} and Q != +-S; otherwise error(errc::invalid_argument). */
character tate_pairing_tau_shifted(two_isogeny_pair const & iso,
                                   curve_point const & S,
                                   curve_point const & Q, std::int64_t k);

} // namespace isogsum
