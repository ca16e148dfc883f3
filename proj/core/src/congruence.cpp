#include "isogsum/congruence.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "isogsum/charsums.hpp"
#include "isogsum/curves.hpp"
#include "isogsum/error.hpp"
#include "isogsum/modular.hpp"

namespace isogsum {

namespace {

constexpr std::int64_t class_scan_cap = 20000;   // candidates per class
constexpr std::int64_t witness_scan_floor = 10000;

std::int64_t lcm_range(std::int64_t lo, std::int64_t hi)
{
    std::int64_t l = 1;
    for (std::int64_t k = lo; k <= hi; ++k)
        l = std::lcm(l, k);
    return l;
}

bool testable(std::int64_t a, std::int64_t b, std::int64_t p)
{
    return p > std::abs(a) && good_reduction_pair(a, b, p);
}

std::vector<std::int64_t> primes_in_class(std::int64_t a, std::int64_t b,
                                          std::int64_t r, std::int64_t m,
                                          std::int64_t floor, std::size_t count)
{
    std::vector<std::int64_t> out;
    std::int64_t p = r;
    if (p <= floor)
        p += ((floor - p) / m + 1) * m;
    for (std::int64_t i = 0; i < class_scan_cap && out.size() < count; ++i, p += m) {
        if (is_prime(static_cast<std::uint64_t>(p)) && testable(a, b, p))
            out.push_back(p);
    }
    return out;
}

} // namespace

std::int64_t periodicity_modulus(std::int64_t a)
{
    if (a == 0)
        throw error(errc::invalid_argument, "periodicity_modulus needs |a| >= 1");
    return 4 * lcm_range(2, std::abs(a) - 1);
}

std::int64_t working_modulus(std::int64_t a, std::int64_t b)
{
    std::int64_t m = a < 0 ? 4 * lcm_range(2, -a) : periodicity_modulus(a);
    if (b != 0)
        m = std::lcm(m, 4 * std::abs(b));
    return m;
}

std::vector<std::int64_t> vanishing_primes(std::int64_t a, std::int64_t b,
                                           std::int64_t limit,
                                           std::int64_t lower)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = std::max<std::int64_t>(lower + 1, 5); p <= limit; ++p) {
        if (!good_reduction_pair(a, b, p))
            continue;
        if (error_r(a, b, prime(p)) == 0)
            out.push_back(p);
    }
    return out;
}

std::vector<std::int64_t> vanishing_primes(std::int64_t a, std::int64_t b,
                                           std::int64_t limit)
{
    return vanishing_primes(a, b, limit, std::abs(a));
}

vanishing_report vanishing_residues(std::int64_t a, std::int64_t b)
{
    if (a == 0)
        throw error(errc::invalid_argument, "vanishing_residues needs |a| >= 1");

    vanishing_report rep;
    rep.a = a;
    rep.b = b;
    rep.working_modulus = working_modulus(a, b);
    std::int64_t const w = rep.working_modulus;
    std::int64_t const floor = std::max(std::abs(a), 2 * std::abs(b));

    /* status of each unit class mod w */
    std::map<std::int64_t, bool> vanishes;
    std::int64_t largest = 0;
    for (std::int64_t r = 1; r < w; ++r) {
        if (std::gcd(r, w) != 1)
            continue;
        auto const ps = primes_in_class(a, b, r, w, floor, 3);
        if (ps.empty()) {
            rep.missing_classes.push_back(r);
            continue;
        }
        bool const v = error_r(a, b, prime(ps.front())) == 0;
        vanishes[r] = v;
        largest = std::max(largest, ps.back());
        for (std::size_t i = 1; i < ps.size(); ++i) {
            if ((error_r(a, b, prime(ps[i])) == 0) != v) {
                rep.periodicity_violations.push_back(r);
                break;
            }
        }
    }

    /* least divisor of w on which the vanishing status is constant */
    for (std::int64_t m = 1; m <= w; ++m) {
        if (w % m != 0)
            continue;
        std::map<std::int64_t, bool> reduced;
        bool consistent = true;
        for (auto const & [r, v] : vanishes) {
            auto [it, inserted] = reduced.emplace(r % m, v);
            if (!inserted && it->second != v) {
                consistent = false;
                break;
            }
        }
        if (!consistent)
            continue;
        rep.modulus = m;
        for (auto const & [r, v] : reduced) {
            if (v)
                rep.residues.push_back(r);
        }
        break;
    }

    rep.exhaustive_below = std::max(largest, witness_scan_floor);
    rep.witnesses = vanishing_primes(a, b, rep.exhaustive_below);

    for (std::int64_t p = 5; p <= rep.exhaustive_below; ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p)))
            continue;
        bool const good = good_reduction_pair(a, b, p);
        if (p > std::abs(a) && good)
            continue;
        rep.excluded.push_back({ p, good, good ? error_r(a, b, prime(p)) : 0 });
    }
    return rep;
}

} // namespace isogsum
