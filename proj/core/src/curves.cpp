#include "isogsum/curves.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "isogsum/error.hpp"

namespace isogsum {

__extension__ typedef __int128 i128;

curve_point::curve_point(field_element x, field_element y)
    : xy_(std::in_place, std::move(x), std::move(y))
{
}

field_element const & curve_point::x() const
{
    if (!xy_)
        throw error(errc::invalid_argument, "x() of the point at infinity");
    return xy_->first;
}

field_element const & curve_point::y() const
{
    if (!xy_)
        throw error(errc::invalid_argument, "y() of the point at infinity");
    return xy_->second;
}

curve_point curve_point::operator-() const
{
    if (!xy_)
        return *this;
    return { xy_->first, -xy_->second };
}

std::strong_ordering operator<=>(curve_point const & a, curve_point const & b)
{
    if (a.is_infinity() || b.is_infinity())
        return !a.is_infinity() <=> !b.is_infinity();
    if (auto c = a.x() <=> b.x(); c != 0)
        return c;
    return a.y() <=> b.y();
}

std::ostream & operator<<(std::ostream & o, curve_point const & P)
{
    if (P.is_infinity())
        return o << "inf";
    return o << "(" << P.x() << "," << P.y() << ")";
}

cubic_curve::cubic_curve(field_element c2, field_element c1, field_element c0)
    : c2_(std::move(c2)), c1_(std::move(c1)), c0_(std::move(c0))
{
    if (c2_.modulus() != c1_.modulus() || c1_.modulus() != c0_.modulus())
        throw error(errc::invalid_argument, "coefficients over different fields");
    if (discriminant().is_zero()) {
        std::ostringstream os;
        os << *this;
        throw error(errc::singular_curve, os.str());
    }
}

field_element cubic_curve::discriminant() const
{
    /* x^3 + b x^2 + c x + d:
     *   b^2 c^2 - 4 c^3 - 4 b^3 d - 27 d^2 + 18 b c d */
    prime const p = modulus();
    auto const & b = c2_;
    auto const & c = c1_;
    auto const & d = c0_;
    return b * b * c * c
        - field_element(4, p) * c * c * c
        - field_element(4, p) * b * b * b * d
        - field_element(27, p) * d * d
        + field_element(18, p) * b * c * d;
}

field_element cubic_curve::rhs(field_element const & x) const
{
    return ((x + c2_) * x + c1_) * x + c0_;
}

bool cubic_curve::contains(curve_point const & P) const
{
    if (P.is_infinity())
        return true;
    if (P.x().modulus() != modulus() || P.y().modulus() != modulus())
        return false;
    return P.y() * P.y() == rhs(P.x());
}

curve_point cubic_curve::point(field_element x, field_element y) const
{
    curve_point P(std::move(x), std::move(y));
    require(P);
    return P;
}

curve_point cubic_curve::point(std::int64_t x, std::int64_t y) const
{
    return point(field_element(x, modulus()), field_element(y, modulus()));
}

void cubic_curve::require(curve_point const & P) const
{
    if (!contains(P)) {
        std::ostringstream os;
        os << P << " on " << *this;
        throw error(errc::point_not_on_curve, os.str());
    }
}

std::ostream & operator<<(std::ostream & o, cubic_curve const & E)
{
    return o << "y^2 = x^3 + " << E.c2() << "x^2 + " << E.c1() << "x + "
             << E.c0() << " over F_" << E.modulus();
}

std::vector<curve_point> enumerate_points(cubic_curve const & E)
{
    prime const p = E.modulus();
    std::vector<curve_point> points { curve_point::infinity() };
    for (std::uint64_t i = 0; i < p.value(); ++i) {
        field_element const x(static_cast<std::int64_t>(i), p);
        field_element const f = E.rhs(x);
        switch (legendre(f)) {
            case 0:
                points.emplace_back(x, f);
                break;
            case 1: {
                auto const y = *sqrt_mod(f);
                points.emplace_back(x, y);
                points.emplace_back(x, -y);
                break;
            }
            default:
                break;
        }
    }
    std::sort(points.begin(), points.end());

    /* Hasse: (N - p - 1)^2 <= 4p */
    auto const t = static_cast<std::int64_t>(points.size()) - p.signed_value() - 1;
    if (static_cast<i128>(t) * t > static_cast<i128>(4) * p.value())
        throw std::logic_error("point count violates the Hasse bound");
    return points;
}

std::vector<curve_point> two_torsion(cubic_curve const & E)
{
    prime const p = E.modulus();
    std::vector<curve_point> points { curve_point::infinity() };
    for (std::uint64_t i = 0; i < p.value(); ++i) {
        field_element const x(static_cast<std::int64_t>(i), p);
        if (E.rhs(x).is_zero())
            points.emplace_back(x, field_element::zero(p));
    }
    return points;
}

bool good_reduction_pair(field_element const & a, field_element const & b)
{
    field_element const r = a * a - field_element(4, a.modulus()) * b;
    return !b.is_zero() && !r.is_zero();
}

bool good_reduction_pair(std::int64_t a, std::int64_t b, prime p)
{
    return good_reduction_pair(field_element(a, p), field_element(b, p));
}

bool good_reduction_pair(std::int64_t a, std::int64_t b, std::int64_t p)
{
    if (p <= 3 || static_cast<std::uint64_t>(p) >= prime::max_value
            || !is_prime(static_cast<std::uint64_t>(p)))
        return false;
    return good_reduction_pair(a, b, prime(p));
}

} // namespace isogsum
