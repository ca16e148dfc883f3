#pragma once

#include <cstdint>
#include <vector>

namespace isogsum {

/* 4 lcm(2, ..., |a| - 1), the empty lcm being 1. */
std::int64_t periodicity_modulus(std::int64_t a);

/*
 * Modulus under which R_{a,b}(p) is periodic for p > |a|: the lcm of
 * periodicity_modulus(a) with 4|b| (the period of delta_{-b}). For a < 0
 * the sum runs over x = 0..|a| of (-x/p), so |a| joins the lcm.
 */
std::int64_t working_modulus(std::int64_t a, std::int64_t b);

/* Primes p with lower < p <= limit, of good reduction, and R_{a,b}(p) = 0.
 * lower defaults to |a|. */
std::vector<std::int64_t> vanishing_primes(std::int64_t a, std::int64_t b,
                                           std::int64_t limit);
std::vector<std::int64_t> vanishing_primes(std::int64_t a, std::int64_t b,
                                           std::int64_t limit,
                                           std::int64_t lower);

struct excluded_prime
{
    std::int64_t p;
    bool good_reduction;
    std::int64_t error;   // R_{a,b}(p); 0 when reduction is bad

    friend bool operator==(excluded_prime const &, excluded_prime const &) = default;
};

struct vanishing_report
{
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t modulus = 1;              // minimal M
    std::vector<std::int64_t> residues;    // vanishing classes mod M, sorted
    std::vector<std::int64_t> witnesses;   // vanishing primes in (|a|, exhaustive_below]
    std::int64_t exhaustive_below = 0;

    std::int64_t working_modulus = 1;
    /* 3 < p <= |a|, and bad primes above |a|: outside the classification. */
    std::vector<excluded_prime> excluded;
    /* Classes mod working_modulus where no testable prime was found. */
    std::vector<std::int64_t> missing_classes;
    /* Classes whose two extra primes disagreed with the classifying prime. */
    std::vector<std::int64_t> periodicity_violations;
};

/*
 * Classifies every unit class mod working_modulus(a, b) by R_{a,b} at its
 * smallest good prime above max(|a|, 2|b|), confirms periodicity on two more
 * primes of each class, then descends to the least divisor M on which
 * vanishing is constant.
 */
vanishing_report vanishing_residues(std::int64_t a, std::int64_t b);

} // namespace isogsum
