#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "isogsum/modular.hpp"

namespace isogsum {

/* Either the point at infinity or an affine pair (x, y). Construction does
 * not check curve membership; use cubic_curve::point for that. */
class curve_point
{
    std::optional<std::pair<field_element, field_element>> xy_;

    curve_point() = default;

    public:

    static curve_point infinity() { return {}; }
    curve_point(field_element x, field_element y);

    bool is_infinity() const noexcept { return !xy_; }

    /* Both throw error(errc::invalid_argument) at infinity. */
    field_element const & x() const;
    field_element const & y() const;

    curve_point operator-() const;

    friend bool operator==(curve_point const &, curve_point const &) = default;

    /* Infinity first, then by (lift(x), lift(y)). */
    friend std::strong_ordering operator<=>(curve_point const & a,
                                            curve_point const & b);
};

std::ostream & operator<<(std::ostream & o, curve_point const & P);

/* y^2 = x^3 + c2 x^2 + c1 x + c0 over F_p, nonsingular. */
class cubic_curve
{
    field_element c2_, c1_, c0_;

    public:

    /* Throws error(errc::singular_curve) when the cubic has a repeated root. */
    cubic_curve(field_element c2, field_element c1, field_element c0);

    field_element const & c2() const noexcept { return c2_; }
    field_element const & c1() const noexcept { return c1_; }
    field_element const & c0() const noexcept { return c0_; }
    prime modulus() const noexcept { return c2_.modulus(); }

    field_element discriminant() const;
    field_element rhs(field_element const & x) const;

    bool contains(curve_point const & P) const;

    /* Checked affine constructor: error(errc::point_not_on_curve). */
    curve_point point(field_element x, field_element y) const;
    curve_point point(std::int64_t x, std::int64_t y) const;

    /* Throws error(errc::point_not_on_curve) unless contains(P). */
    void require(curve_point const & P) const;

    friend bool operator==(cubic_curve const &, cubic_curve const &) = default;
};

std::ostream & operator<<(std::ostream & o, cubic_curve const & E);

/*
 * E(F_p) by a single scan over x, infinity first, affine points sorted by
 * (lift(x), lift(y)). The point count is checked against the Hasse bound.
 */
std::vector<curve_point> enumerate_points(cubic_curve const & E);

/* Infinity plus every (x, 0) with f(x) = 0. */
std::vector<curve_point> two_torsion(cubic_curve const & E);

/* True iff p > 3 is prime and p does not divide 2 b (a^2 - 4b): both curves
 * y^2 = x^3 + a x^2 + b x and y^2 = x^3 - 2a x^2 + (a^2 - 4b) x are
 * nonsingular mod p. */
bool good_reduction_pair(std::int64_t a, std::int64_t b, std::int64_t p);
bool good_reduction_pair(std::int64_t a, std::int64_t b, prime p);
bool good_reduction_pair(field_element const & a, field_element const & b);

} // namespace isogsum
