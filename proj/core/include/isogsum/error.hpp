#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isogsum {

enum class errc {
    not_prime,
    singular_curve,
    point_not_on_curve,
    no_auxiliary_point,
    not_divisible,
    k_divisible_by_p,
    bad_reduction,
    a_even,
    split_condition_failed,
    invalid_argument,
    identity_failed,
};

std::string_view to_string(errc code);

/* All recoverable failures of the library are reported through this type;
 * code() identifies the condition, what() carries the details. */
class error : public std::runtime_error
{
    errc code_;

    public:

    error(errc code, std::string const & detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail)
        , code_(code)
    {}

    errc code() const noexcept { return code_; }
};

} // namespace isogsum
