#include "isogsum/cm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "isogsum/classnumber.hpp"
#include "isogsum/error.hpp"

namespace isogsum {

std::string_view to_string(cm_case c)
{
    switch (c) {
        case cm_case::minus1: return "-1";
        case cm_case::minus2: return "-2";
        case cm_case::minus7: return "-7";
    }
    return "?";
}

std::int64_t cm_discriminant(cm_case c)
{
    switch (c) {
        case cm_case::minus1: return -1;
        case cm_case::minus2: return -2;
        case cm_case::minus7: return -7;
    }
    return 0;
}

bool cm_split(cm_case c, prime p)
{
    return legendre(cm_discriminant(c), p) == 1;
}

cubic_curve cm_curve(cm_case c, prime p)
{
    auto fe = [p](std::int64_t n) { return field_element(n, p); };
    try {
        switch (c) {
            case cm_case::minus1:
                return { fe(0), fe(1), fe(0) };
            case cm_case::minus2:
                /* (x + 2)(x^2 - 2) */
                return { fe(2), fe(-2), fe(-4) };
            case cm_case::minus7:
                /* (x + 7)(x^2 - 7x + 14) */
                return { fe(0), fe(-35), fe(98) };
        }
    } catch (error const & e) {
        if (e.code() == errc::singular_curve)
            throw error(errc::bad_reduction, e.what());
        throw;
    }
    throw std::logic_error("unknown cm_case");
}

curve_point coord_change::alpha1(curve_point const & P) const
{
    if (P.is_infinity())
        return P;
    return { u * u * P.x() + shift, u * u * u * P.y() };
}

curve_point coord_change::alpha2(curve_point const & P) const
{
    if (P.is_infinity())
        return P;
    return { P.x() - epsilon, P.y() };
}

namespace {

field_element pick_surd(cm_case c, prime p, surd_choice choice)
{
    if (!cm_split(c, p))
        throw error(errc::split_condition_failed,
                    "(" + std::string(to_string(c)) + "/" + std::to_string(p.value())
                    + ") != 1");
    field_element const s = *sqrt_mod(field_element(cm_discriminant(c), p));
    return choice == surd_choice::canonical ? s : -s;
}

coord_change make_coords(cm_case c, field_element const & s)
{
    prime const p = s.modulus();
    auto fe = [p](std::int64_t n) { return field_element(n, p); };
    switch (c) {
        case cm_case::minus1: {
            /* alpha1 = (w^-2 x, w^-3 y) with w = -(1 + i) */
            field_element const w = -(fe(1) + s);
            return { fe(0), w.inverse(), fe(0), fe(0), -fe(4).inverse() };
        }
        case cm_case::minus2:
            return { fe(-2), -s / fe(2), fe(-1), fe(2), fe(2).inverse() };
        case cm_case::minus7: {
            /* ker phi_hat = <(beta + 3, 0)>; the normalized parameters are
             * a = (3/2)(conj(beta) - 4), b = (7/16)(3 conj(beta) + 14). */
            field_element const beta = (fe(1) + s) / fe(2);
            field_element const conj = fe(1) - beta;
            return {
                beta + fe(3),
                (beta - fe(1)) / fe(2),
                (beta + fe(3)) / fe(2),
                fe(3) / fe(2) * (conj - fe(4)),
                fe(7) / fe(16) * (fe(3) * conj + fe(14)),
            };
        }
    }
    throw std::logic_error("unknown cm_case");
}

} // namespace

cm_endomorphism::cm_endomorphism(cm_case c, prime p, surd_choice choice)
    : tag_(c)
    , choice_(choice)
    , surd_(pick_surd(c, p, choice))
    , curve_(cm_curve(c, p))
    , coords_(make_coords(c, surd_))
{
}

two_isogeny_pair cm_endomorphism::normalized_pair() const
{
    return { coords_.a, coords_.b };
}

curve_point cm_endomorphism::operator()(curve_point const & P) const
{
    curve_.require(P);
    if (P.is_infinity())
        return P;

    prime const p = modulus();
    auto fe = [p](std::int64_t n) { return field_element(n, p); };
    field_element const & x = P.x();
    field_element const & y = P.y();
    field_element const & s = surd_;
    curve_point image = curve_point::infinity();

    switch (tag_) {
        case cm_case::minus1: {
            /* ((x^2 + 1)/(2ix), y(x^2 - 1)/((2i - 2)x^2)) */
            if (x.is_zero())
                return image;
            field_element const x2 = x * x;
            image = { (x2 + fe(1)) / (fe(2) * s * x),
                      y * (x2 - fe(1)) / ((fe(2) * s - fe(2)) * x2) };
            break;
        }
        case cm_case::minus2: {
            /* (((x+2)^2 + 2)/(-2(x+2)), y((x+2)^2 - 2)/(2 sqrt(-2) (x+2)^2)) */
            field_element const t = x + fe(2);
            if (t.is_zero())
                return image;
            field_element const t2 = t * t;
            image = { (t2 + fe(2)) / (fe(-2) * t),
                      y * (t2 - fe(2)) / (fe(2) * s * t2) };
            break;
        }
        case cm_case::minus7: {
            /* beta = (1 + sqrt(-7))/2, d = x + beta^2 - 2:
             * (beta^-2 (x - 7(1 - beta^4)/d), beta^-3 y (1 + 7(1 - beta)^4/d^2)) */
            field_element const beta = (fe(1) + s) / fe(2);
            field_element const d = x + beta * beta - fe(2);
            if (d.is_zero())
                return image;
            field_element const beta2 = beta * beta;
            field_element const one_minus_beta = fe(1) - beta;
            image = { (x - fe(7) * (fe(1) - beta2 * beta2) / d) / beta2,
                      y * (fe(1) + fe(7) * one_minus_beta.pow(4) / (d * d))
                          / (beta2 * beta) };
            break;
        }
    }
    if (!curve_.contains(image))
        throw std::logic_error("CM endomorphism image left the curve");
    return image;
}

std::vector<curve_point> cm_endomorphism::image() const
{
    std::vector<curve_point> out;
    for (auto const & P : enumerate_points(curve_))
        out.push_back((*this)(P));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

curve_point cm_endomorphism_apply(cm_case c, prime p, curve_point const & P)
{
    return cm_endomorphism(c, p)(P);
}

namespace {

struct phi_sums
{
    std::int64_t shifted = 0;
    std::int64_t unshifted = 0;
};

phi_sums weighted_sums(cm_endomorphism const & phi,
                       std::vector<curve_point> const & points,
                       std::vector<curve_point> const & image)
{
    field_element const xi = phi.coordinates().xi();
    phi_sums s;
    for (auto const & P : points) {
        if (P.is_infinity())
            continue;
        int const chi = std::binary_search(image.begin(), image.end(), P) ? 1 : -1;
        s.shifted += lift(P.x() - xi) * chi;
        s.unshifted += lift(P.x()) * chi;
    }
    return s;
}

} // namespace

cm_sum_report cm_weighted_sum(cm_case c, prime p, surd_choice choice)
{
    cm_endomorphism const phi(c, p, choice);
    auto const points = enumerate_points(phi.curve());
    auto const image = phi.image();
    auto const sums = weighted_sums(phi, points, image);
    auto const & cc = phi.coordinates();

    cm_sum_report out;
    out.tag = c;
    out.choice = choice;
    out.surd = lift(phi.surd());
    out.xi = lift(cc.xi());

    sum_report & r = out.report;
    r.p = p.signed_value();
    r.a = lift(cc.a);
    r.b = lift(cc.b);
    r.sum = sums.shifted;
    r.hstar = hp_star(p);
    r.error = error_r(cc.a, cc.b);
    r.divisible = r.sum % r.p == 0;
    r.quotient = r.divisible ? -(r.sum / r.p) : 0;
    r.identity_holds = r.divisible && r.quotient == r.hstar + r.error;

    out.unshifted_sum = sums.unshifted;
    out.unshifted_matches = sums.unshifted % r.p == 0
        && -(sums.unshifted / r.p) == r.hstar + r.error;

    switch (c) {
        case cm_case::minus1:
            out.case_claim_holds = r.divisible && r.quotient == 1;
            break;
        case cm_case::minus2:
            out.case_claim_holds = r.divisible && r.quotient == r.hstar;
            break;
        case cm_case::minus7:
            out.case_claim_holds = r.identity_holds;
            break;
    }
    return out;
}

bool translate_equivalence_check(cm_case c, prime p, surd_choice choice)
{
    cm_endomorphism const phi(c, p, choice);
    two_isogeny_pair const iso = phi.normalized_pair();
    auto const & cc = phi.coordinates();
    auto const points = enumerate_points(phi.curve());
    auto const image = phi.image();

    for (auto const & P : points) {
        curve_point const moved = cc.alpha2(P);
        if (!iso.e2().contains(moved))
            return false;
        character const chi_phi = std::binary_search(image.begin(), image.end(), P)
            ? character::plus() : character::minus();
        if (chi_phi != chi_tau(iso, moved))
            return false;
    }
    return weighted_sums(phi, points, image).shifted == s_tau(cc.a, cc.b).sum;
}

} // namespace isogsum
