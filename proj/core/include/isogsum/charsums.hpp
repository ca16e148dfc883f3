#pragma once

#include <cstdint>
#include <iosfwd>

#include "isogsum/isogeny.hpp"
#include "isogsum/modular.hpp"

namespace isogsum {

/*
 * One prime's verification record for a weighted character sum S:
 * quotient = -S/p (0 when p does not divide S), hstar = h_p^*, error the
 * matching error term. Identity failures are recorded, never thrown.
 */
struct sum_report
{
    std::int64_t p = 0;
    std::int64_t a = 0;   // integer parameter, or its lift in field mode
    std::int64_t b = 0;
    std::int64_t sum = 0;
    std::int64_t quotient = 0;
    std::int64_t hstar = 0;
    std::int64_t error = 0;
    bool divisible = false;
    bool identity_holds = false;

    bool passed() const { return divisible && identity_holds; }

    friend bool operator==(sum_report const &, sum_report const &) = default;
};

std::ostream & operator<<(std::ostream & o, sum_report const & r);

/* sum_{x=1}^{p-1} x (x/p) */
std::int64_t dirichlet_sum(prime p);

/* -dirichlet_sum(p)/p; error(errc::not_divisible) if p does not divide it. */
std::int64_t dirichlet_hstar(prime p);

/* (1 + (k/p))/2; error(errc::k_divisible_by_p) when p | k. */
int delta(std::int64_t k, prime p);
int delta(field_element const & k);

/* sum_{u=1}^{p-1} u ((u^2 + k)/p), evaluated term by term. The closed form
 * -p delta_k is checked: error(errc::identity_failed) on mismatch. */
std::int64_t quad_lemma_sum(std::int64_t k, prime p);
std::int64_t quad_lemma_sum(field_element const & k);

/* R_{a,b} = delta_{-b} - sum_{x=1}^{{a}-1} (x/p). */
std::int64_t error_r(std::int64_t a, std::int64_t b, prime p);
std::int64_t error_r(field_element const & a, field_element const & b);

/*
 * S_tau = sum over affine P in E2(F_p) of {x(P) - a} chi_tau(P). All of
 * these throw error(errc::bad_reduction) when p | 2b(a^2 - 4b).
 */
sum_report s_tau(std::int64_t a, std::int64_t b, prime p);
sum_report s_tau(field_element const & a, field_element const & b);

/* R_hat_{a,b} = delta_{-r} + sum_{x=1}^{eta} (-x/p), eta = {a/2}. */
std::int64_t error_r_hat(std::int64_t a, std::int64_t b, prime p);
std::int64_t error_r_hat(field_element const & a, field_element const & b);

/* S_tau_hat = sum over affine P in E1(F_p) of {x(P) + a/2} chi_tau_hat(P). */
sum_report s_tau_hat(std::int64_t a, std::int64_t b, prime p);
sum_report s_tau_hat(field_element const & a, field_element const & b);

/*
 * rho_hat_{a,b} = delta_{-r} + sum_{x=1}^{(a+1)/2} ((-(p-1)/2 - x)/p) for
 * odd a > 0 and p > 2a. error(errc::a_even) for even a,
 * error(errc::invalid_argument) for a <= 0 or p <= 2a.
 */
std::int64_t rho_hat(std::int64_t a, std::int64_t b, prime p);

/* sum_{x=1}^{(p-1)/2} (-x/p), checked against 0 / -3h_p / -h_p by p mod 8. */
std::int64_t half_interval_sum(prime p);

/* The p mod 8 value the half-interval sum must take. */
std::int64_t half_interval_expected(prime p);

} // namespace isogsum
