#include "isogsum/isogeny.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "isogsum/error.hpp"

namespace isogsum {

character character::from_legendre(int symbol)
{
    if (symbol == 1)
        return plus();
    if (symbol == -1)
        return minus();
    throw error(errc::invalid_argument, "Legendre symbol 0 is not a character value");
}

std::ostream & operator<<(std::ostream & o, character c)
{
    return o << (c.value() > 0 ? "+1" : "-1");
}

namespace {

field_element require_nonzero_r(field_element const & a, field_element const & b)
{
    field_element const r = a * a - field_element(4, a.modulus()) * b;
    if (b.is_zero() || r.is_zero())
        throw error(errc::bad_reduction,
                    "b (a^2 - 4b) vanishes mod " + std::to_string(a.modulus().value()));
    return r;
}

/* Chord rule on y^2 = x^3 + c2 x^2 + c1 x + c0 for P != +-Q. Only the
 * pairing shift needs it. */
curve_point chord_add(cubic_curve const & E, curve_point const & P,
                      curve_point const & Q)
{
    if (P.is_infinity())
        return Q;
    if (Q.is_infinity())
        return P;
    if (P.x() == Q.x())
        throw std::logic_error("chord_add: equal x-coordinates");
    field_element const lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    field_element const x3 = lambda * lambda - E.c2() - P.x() - Q.x();
    field_element const y3 = lambda * (P.x() - x3) - P.y();
    return { x3, y3 };
}

bool is_kernel_point(curve_point const & P)
{
    return !P.is_infinity() && P.x().is_zero();
}

} // namespace

two_isogeny_pair::two_isogeny_pair(field_element a, field_element b)
    : a_(a)
    , b_(b)
    , r_(require_nonzero_r(a, b))
    , e1_(a, b, field_element::zero(a.modulus()))
    , e2_(field_element(-2, a.modulus()) * a, r_, field_element::zero(a.modulus()))
{
}

two_isogeny_pair::two_isogeny_pair(std::int64_t a, std::int64_t b, prime p)
    : two_isogeny_pair(field_element(a, p), field_element(b, p))
{
}

curve_point two_isogeny_pair::t1() const
{
    return e1_.point(0, 0);
}

curve_point two_isogeny_pair::t2() const
{
    return e2_.point(0, 0);
}

curve_point apply_tau(two_isogeny_pair const & iso, curve_point const & P)
{
    iso.e1().require(P);
    if (P.is_infinity() || P.x().is_zero())
        return curve_point::infinity();
    field_element const x2 = P.x() * P.x();
    field_element const inv_x2 = x2.inverse();
    curve_point image(P.y() * P.y() * inv_x2, P.y() * (iso.b() - x2) * inv_x2);
    if (!iso.e2().contains(image))
        throw std::logic_error("tau image left E2");
    return image;
}

curve_point apply_tau_hat(two_isogeny_pair const & iso, curve_point const & P)
{
    iso.e2().require(P);
    if (P.is_infinity() || P.x().is_zero())
        return curve_point::infinity();
    prime const p = iso.modulus();
    field_element const x2 = P.x() * P.x();
    field_element const inv_x2 = x2.inverse();
    curve_point image(P.y() * P.y() * inv_x2 / field_element(4, p),
                      P.y() * (iso.r() - x2) * inv_x2 / field_element(8, p));
    if (!iso.e1().contains(image))
        throw std::logic_error("tau_hat image left E1");
    return image;
}

character chi_tau(two_isogeny_pair const & iso, curve_point const & P)
{
    iso.e2().require(P);
    if (P.is_infinity())
        return character::plus();
    if (P.x().is_zero())
        return character::from_legendre(legendre(iso.r()));
    return character::from_legendre(legendre(P.x()));
}

character chi_tau_hat(two_isogeny_pair const & iso, curve_point const & P)
{
    iso.e1().require(P);
    if (P.is_infinity())
        return character::plus();
    if (P.x().is_zero())
        return character::from_legendre(legendre(iso.b()));
    return character::from_legendre(legendre(P.x()));
}

field_element pairing_functions::f(curve_point const & P)
{
    return P.x();
}

field_element pairing_functions::g(curve_point const & P)
{
    return P.y() / P.x();
}

field_element pairing_functions::f_hat(curve_point const & P)
{
    return P.x();
}

field_element pairing_functions::g_hat(curve_point const & P)
{
    return P.y() / (field_element(2, P.x().modulus()) * P.x());
}

isogeny_image::isogeny_image(two_isogeny_pair const & iso, direction dir)
    : modulus_(iso.modulus())
    , dir_(dir)
{
    auto const & domain = dir == direction::forward ? iso.e1() : iso.e2();
    for (auto const & P : enumerate_points(domain))
        points_.push_back(dir == direction::forward ? apply_tau(iso, P)
                                                    : apply_tau_hat(iso, P));
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool isogeny_image::contains(curve_point const & P) const
{
    return std::binary_search(points_.begin(), points_.end(), P);
}

character isogeny_image::chi(curve_point const & P) const
{
    return contains(P) ? character::plus() : character::minus();
}

character image_oracle(two_isogeny_pair const & iso, direction dir,
                       curve_point const & P)
{
    (dir == direction::forward ? iso.e2() : iso.e1()).require(P);
    return isogeny_image(iso, dir).chi(P);
}

character tate_pairing_tau_shifted(two_isogeny_pair const & iso,
                                   curve_point const & S,
                                   curve_point const & Q, std::int64_t k)
{
    iso.e2().require(S);
    iso.e2().require(Q);
    if (Q.is_infinity() || is_kernel_point(Q))
        throw error(errc::invalid_argument, "auxiliary point must avoid {inf, T2}");
    if (!S.is_infinity() && S.x() == Q.x())
        throw error(errc::invalid_argument, "auxiliary point must differ from +-S");
    curve_point const shifted = chord_add(iso.e2(), S, Q);
    if (shifted.is_infinity() || is_kernel_point(shifted))
        throw error(errc::invalid_argument, "S + Q lands in {inf, T2}");
    if (k % 2 == 0)
        return character::plus();
    using pf = pairing_functions;
    return character::from_legendre(legendre(pf::f(shifted)))
         * character::from_legendre(legendre(pf::f(Q)));
}

character tate_pairing_tau(two_isogeny_pair const & iso,
                           curve_point const & S, std::int64_t k)
{
    iso.e2().require(S);
    if (k % 2 == 0)
        return character::plus();
    if (!S.is_infinity() && !is_kernel_point(S))
        return character::from_legendre(legendre(pairing_functions::f(S)));

    for (auto const & Q : enumerate_points(iso.e2())) {
        if (Q.is_infinity() || is_kernel_point(Q))
            continue;
        if (!S.is_infinity() && S.x() == Q.x())
            continue;
        curve_point const shifted = chord_add(iso.e2(), S, Q);
        if (shifted.is_infinity() || is_kernel_point(shifted))
            continue;
        return tate_pairing_tau_shifted(iso, S, Q, k);
    }
    throw error(errc::no_auxiliary_point,
                "E2(F_p) has no affine point off the kernel");
}

} // namespace isogsum
