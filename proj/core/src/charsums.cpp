#include "isogsum/charsums.hpp"

#include <ostream>
#include <string>

#include "isogsum/classnumber.hpp"
#include "isogsum/curves.hpp"
#include "isogsum/error.hpp"

namespace isogsum {

std::ostream & operator<<(std::ostream & o, sum_report const & r)
{
    return o << "p=" << r.p << " a=" << r.a << " b=" << r.b << " S=" << r.sum
             << " quotient=" << r.quotient << " hstar=" << r.hstar
             << " error=" << r.error << " divisible=" << r.divisible
             << " identity=" << r.identity_holds;
}

namespace {

void require_good(field_element const & a, field_element const & b)
{
    if (!good_reduction_pair(a, b))
        throw error(errc::bad_reduction,
                    "p = " + std::to_string(a.modulus().value())
                    + " divides 2b(a^2 - 4b)");
}

std::int64_t legendre_range_sum(std::int64_t lo, std::int64_t hi, prime p)
{
    std::int64_t s = 0;
    for (std::int64_t x = lo; x <= hi; ++x)
        s += legendre(x, p);
    return s;
}

/* Fills quotient / divisible / identity from sum, hstar and error. */
sum_report finish(sum_report r)
{
    r.divisible = r.sum % r.p == 0;
    r.quotient = r.divisible ? -(r.sum / r.p) : 0;
    r.identity_holds = r.divisible && r.quotient == r.hstar + r.error;
    return r;
}

} // namespace

std::int64_t dirichlet_sum(prime p)
{
    std::int64_t s = 0;
    for (std::int64_t x = 1; x < p.signed_value(); ++x)
        s += x * legendre(x, p);
    return s;
}

std::int64_t dirichlet_hstar(prime p)
{
    std::int64_t const s = dirichlet_sum(p);
    if (s % p.signed_value() != 0)
        throw error(errc::not_divisible,
                    "Dirichlet sum " + std::to_string(s) + " mod "
                    + std::to_string(p.value()));
    return -s / p.signed_value();
}

int delta(field_element const & k)
{
    if (k.is_zero())
        throw error(errc::k_divisible_by_p,
                    "delta_k needs p not dividing k, p = "
                    + std::to_string(k.modulus().value()));
    return (1 + legendre(k)) / 2;
}

int delta(std::int64_t k, prime p)
{
    return delta(field_element(k, p));
}

std::int64_t quad_lemma_sum(field_element const & k)
{
    prime const p = k.modulus();
    int const d = delta(k);
    std::int64_t s = 0;
    for (std::int64_t u = 1; u < p.signed_value(); ++u) {
        field_element const fu(u, p);
        s += u * legendre(fu * fu + k);
    }
    if (s != -p.signed_value() * d)
        throw error(errc::identity_failed,
                    "quadratic lemma sum " + std::to_string(s) + " at p = "
                    + std::to_string(p.value()));
    return s;
}

std::int64_t quad_lemma_sum(std::int64_t k, prime p)
{
    return quad_lemma_sum(field_element(k, p));
}

std::int64_t error_r(field_element const & a, field_element const & b)
{
    require_good(a, b);
    prime const p = a.modulus();
    return delta(-b) - legendre_range_sum(1, lift(a) - 1, p);
}

std::int64_t error_r(std::int64_t a, std::int64_t b, prime p)
{
    return error_r(field_element(a, p), field_element(b, p));
}

sum_report s_tau(field_element const & a, field_element const & b)
{
    require_good(a, b);
    two_isogeny_pair const iso(a, b);
    prime const p = iso.modulus();

    sum_report r;
    r.p = p.signed_value();
    r.a = lift(a);
    r.b = lift(b);
    for (auto const & P : enumerate_points(iso.e2())) {
        if (P.is_infinity())
            continue;
        r.sum += lift(P.x() - a) * chi_tau(iso, P).value();
    }
    r.hstar = hp_star(p);
    r.error = error_r(a, b);
    return finish(r);
}

sum_report s_tau(std::int64_t a, std::int64_t b, prime p)
{
    sum_report r = s_tau(field_element(a, p), field_element(b, p));
    r.a = a;
    r.b = b;
    return r;
}

std::int64_t error_r_hat(field_element const & a, field_element const & b)
{
    require_good(a, b);
    prime const p = a.modulus();
    field_element const r = a * a - field_element(4, p) * b;
    std::int64_t const eta = lift(a / field_element(2, p));
    std::int64_t s = delta(-r);
    for (std::int64_t x = 1; x <= eta; ++x)
        s += legendre(-x, p);
    return s;
}

std::int64_t error_r_hat(std::int64_t a, std::int64_t b, prime p)
{
    return error_r_hat(field_element(a, p), field_element(b, p));
}

sum_report s_tau_hat(field_element const & a, field_element const & b)
{
    require_good(a, b);
    two_isogeny_pair const iso(a, b);
    prime const p = iso.modulus();
    field_element const half_a = a / field_element(2, p);

    sum_report r;
    r.p = p.signed_value();
    r.a = lift(a);
    r.b = lift(b);
    for (auto const & P : enumerate_points(iso.e1())) {
        if (P.is_infinity())
            continue;
        r.sum += lift(P.x() + half_a) * chi_tau_hat(iso, P).value();
    }
    r.hstar = hp_star(p);
    r.error = error_r_hat(a, b);
    return finish(r);
}

sum_report s_tau_hat(std::int64_t a, std::int64_t b, prime p)
{
    sum_report r = s_tau_hat(field_element(a, p), field_element(b, p));
    r.a = a;
    r.b = b;
    return r;
}

std::int64_t rho_hat(std::int64_t a, std::int64_t b, prime p)
{
    field_element const fa(a, p), fb(b, p);
    require_good(fa, fb);
    if (a % 2 == 0)
        throw error(errc::a_even, "rho_hat needs odd a, got " + std::to_string(a));
    if (a <= 0 || p.signed_value() <= 2 * a)
        throw error(errc::invalid_argument,
                    "rho_hat needs 0 < a and p > 2a, got a = " + std::to_string(a)
                    + ", p = " + std::to_string(p.value()));
    std::int64_t const half = (p.signed_value() - 1) / 2;
    std::int64_t s = delta(-(fa * fa - field_element(4, p) * fb));
    for (std::int64_t x = 1; x <= (a + 1) / 2; ++x)
        s += legendre(-half - x, p);
    return s;
}

std::int64_t half_interval_expected(prime p)
{
    switch (p.value() % 8) {
        case 3: return -3 * class_number(p);
        case 7: return -class_number(p);
        default: return 0;
    }
}

std::int64_t half_interval_sum(prime p)
{
    std::int64_t s = 0;
    for (std::int64_t x = 1; x <= (p.signed_value() - 1) / 2; ++x)
        s += legendre(-x, p);
    if (s != half_interval_expected(p))
        throw error(errc::identity_failed,
                    "half-interval sum " + std::to_string(s) + " at p = "
                    + std::to_string(p.value()));
    return s;
}

} // namespace isogsum
