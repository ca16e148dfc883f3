#include "isogsum/modular.hpp"

#include <array>
#include <ostream>
#include <string>
#include <utility>

#include "isogsum/error.hpp"

namespace isogsum {

std::string_view to_string(errc code)
{
    switch (code) {
        case errc::not_prime:              return "NotPrime";
        case errc::singular_curve:         return "SingularCurve";
        case errc::point_not_on_curve:     return "PointNotOnCurve";
        case errc::no_auxiliary_point:     return "NoAuxiliaryPoint";
        case errc::not_divisible:          return "NotDivisible";
        case errc::k_divisible_by_p:       return "KDivisibleByP";
        case errc::bad_reduction:          return "BadReduction";
        case errc::a_even:                 return "AEven";
        case errc::split_condition_failed: return "SplitConditionFailed";
        case errc::invalid_argument:       return "InvalidArgument";
        case errc::identity_failed:        return "IdentityFailed";
    }
    return "Unknown";
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(
            static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    /* these bases are a certificate for all n < 3.3 * 10^24 */
    static constexpr std::array<std::uint64_t, 12> bases {
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37
    };
    for (auto q : bases) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto q : bases) {
        std::uint64_t x = pow_mod(q, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

prime::prime(std::int64_t value)
    : value_(static_cast<std::uint64_t>(value))
{
    if (value <= 3 || value_ >= max_value || !is_prime(value_))
        throw error(errc::not_prime,
                    std::to_string(value) + " is not a prime in (3, 2^62)");
}

std::ostream & operator<<(std::ostream & o, prime p)
{
    return o << p.value();
}

field_element::field_element(std::int64_t n, prime p)
    : residue_(static_cast<std::uint64_t>(lift(n, p)))
    , modulus_(p)
{
}

field_element field_element::operator-() const
{
    field_element r = *this;
    if (r.residue_)
        r.residue_ = modulus_.value() - r.residue_;
    return r;
}

field_element & field_element::operator+=(field_element const & o)
{
    residue_ += o.residue_;
    if (residue_ >= modulus_.value())
        residue_ -= modulus_.value();
    return *this;
}

field_element & field_element::operator-=(field_element const & o)
{
    residue_ = residue_ >= o.residue_
        ? residue_ - o.residue_
        : residue_ + modulus_.value() - o.residue_;
    return *this;
}

field_element & field_element::operator*=(field_element const & o)
{
    residue_ = mul_mod(residue_, o.residue_, modulus_.value());
    return *this;
}

field_element & field_element::operator/=(field_element const & o)
{
    return *this *= o.inverse();
}

field_element field_element::pow(std::uint64_t e) const
{
    field_element r = *this;
    r.residue_ = pow_mod(residue_, e, modulus_.value());
    return r;
}

field_element field_element::inverse() const
{
    if (is_zero())
        throw error(errc::invalid_argument, "inverse of zero");
    return pow(modulus_.value() - 2);
}

std::ostream & operator<<(std::ostream & o, field_element const & a)
{
    return o << a.residue();
}

std::int64_t lift(field_element const & a)
{
    return static_cast<std::int64_t>(a.residue());
}

std::int64_t lift(std::int64_t n, prime p)
{
    std::int64_t const m = p.signed_value();
    std::int64_t r = n % m;
    return r < 0 ? r + m : r;
}

int legendre(field_element const & a)
{
    if (a.is_zero())
        return 0;
    auto const p = a.modulus().value();
    return pow_mod(a.residue(), (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(std::int64_t n, prime p)
{
    return legendre(field_element(n, p));
}

int legendre_reciprocity(std::int64_t n, prime p)
{
    std::uint64_t a = static_cast<std::uint64_t>(lift(n, p));
    std::uint64_t m = p.value();
    int sign = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            auto const r = m & 7;
            if (r == 3 || r == 5)
                sign = -sign;
        }
        std::swap(a, m);
        if ((a & 3) == 3 && (m & 3) == 3)
            sign = -sign;
        a %= m;
    }
    return m == 1 ? sign : 0;
}

std::optional<field_element> sqrt_mod(field_element const & a)
{
    prime const p = a.modulus();
    if (a.is_zero())
        return a;
    if (legendre(a) != 1)
        return std::nullopt;

    std::uint64_t const pv = p.value();
    field_element root = field_element::zero(p);
    if (pv % 4 == 3) {
        root = a.pow((pv + 1) / 4);
    } else {
        std::uint64_t q = pv - 1;
        unsigned s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        field_element z(2, p);
        while (legendre(z) != -1)
            z += field_element::one(p);
        field_element c = z.pow(q);
        field_element t = a.pow(q);
        root = a.pow((q + 1) / 2);
        unsigned m = s;
        while (t != field_element::one(p)) {
            unsigned i = 0;
            for (field_element t2 = t; t2 != field_element::one(p); t2 *= t2)
                ++i;
            field_element b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j)
                b *= b;
            m = i;
            c = b * b;
            t *= c;
            root *= b;
        }
    }
    field_element const other = -root;
    return other < root ? other : root;
}

} // namespace isogsum
