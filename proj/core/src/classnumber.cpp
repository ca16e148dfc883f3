#include "isogsum/classnumber.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>

#include "isogsum/error.hpp"

namespace isogsum {

bool quad_form::is_reduced() const
{
    if (a <= 0 || std::abs(b) > a || a > c)
        return false;
    if ((std::abs(b) == a || a == c) && b < 0)
        return false;
    return true;
}

bool quad_form::is_primitive() const
{
    return std::gcd(std::gcd(a, b), c) == 1;
}

std::ostream & operator<<(std::ostream & o, quad_form const & f)
{
    return o << "(" << f.a << ", " << f.b << ", " << f.c << ")";
}

std::vector<quad_form> reduced_forms(std::int64_t d)
{
    if (d >= 0 || (d % 4 != 0 && d % 4 != -3))
        throw error(errc::invalid_argument,
                    "not a negative discriminant: " + std::to_string(d));
    std::vector<quad_form> forms;
    /* reduced => 3A^2 <= |d| */
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            if ((b - d) % 2 != 0)
                continue;
            std::int64_t const num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            quad_form const f { a, b, num / (4 * a) };
            if (f.is_reduced() && f.is_primitive())
                forms.push_back(f);
        }
    }
    return forms;
}

std::int64_t class_number(std::int64_t d)
{
    return static_cast<std::int64_t>(reduced_forms(d).size());
}

std::int64_t field_discriminant(prime p)
{
    return p.value() % 4 == 3 ? -p.signed_value() : -4 * p.signed_value();
}

std::int64_t class_number(prime p)
{
    return class_number(field_discriminant(p));
}

std::int64_t hp_star(prime p)
{
    return p.value() % 4 == 1 ? 0 : class_number(p);
}

} // namespace isogsum
