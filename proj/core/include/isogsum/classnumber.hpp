#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "isogsum/modular.hpp"

namespace isogsum {

/* Positive definite binary quadratic form A x^2 + B xy + C y^2. */
struct quad_form
{
    std::int64_t a, b, c;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }

    /* |B| <= A <= C, and B >= 0 whenever |B| = A or A = C. */
    bool is_reduced() const;
    bool is_primitive() const;

    friend bool operator==(quad_form const &, quad_form const &) = default;
};

std::ostream & operator<<(std::ostream & o, quad_form const & f);

/* All reduced primitive forms of discriminant d < 0, d = 0, 1 mod 4,
 * ordered by (A, B). */
std::vector<quad_form> reduced_forms(std::int64_t d);

/* h(d), the number of reduced primitive forms. */
std::int64_t class_number(std::int64_t d);

/* Discriminant of Q(sqrt(-p)): -p for p = 3 mod 4, -4p for p = 1 mod 4. */
std::int64_t field_discriminant(prime p);

/* h_p, the class number of Q(sqrt(-p)). */
std::int64_t class_number(prime p);

/* h_p^*: 0 for p = 1 mod 4, h_p for p = 3 mod 4. */
std::int64_t hp_star(prime p);

} // namespace isogsum
