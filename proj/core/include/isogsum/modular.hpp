#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>

namespace isogsum {

/* Deterministic Miller-Rabin, exact for every 64-bit input. */
bool is_prime(std::uint64_t n);

/*
 * A certified prime p with 3 < p < 2^62. Products of residues are formed in
 * 128-bit intermediates, so the bound leaves room for sums of two residues.
 */
class prime
{
    std::uint64_t value_;

    public:

    static constexpr std::uint64_t max_value = std::uint64_t(1) << 62;

    explicit prime(std::int64_t value);

    std::uint64_t value() const noexcept { return value_; }
    std::int64_t signed_value() const noexcept
    {
        return static_cast<std::int64_t>(value_);
    }

    friend bool operator==(prime, prime) = default;
    friend auto operator<=>(prime, prime) = default;
};

std::ostream & operator<<(std::ostream & o, prime p);

/* Canonical residue in [0, p). */
class field_element
{
    std::uint64_t residue_;
    prime modulus_;

    public:

    /* Reduces any signed integer, e.g. field_element(-3, 11) == 8. */
    field_element(std::int64_t n, prime p);

    static field_element zero(prime p) { return { 0, p }; }
    static field_element one(prime p) { return { 1, p }; }

    std::uint64_t residue() const noexcept { return residue_; }
    prime modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return residue_ == 0; }

    field_element operator-() const;
    field_element & operator+=(field_element const & o);
    field_element & operator-=(field_element const & o);
    field_element & operator*=(field_element const & o);
    field_element & operator/=(field_element const & o);

    friend field_element operator+(field_element a, field_element const & b) { return a += b; }
    friend field_element operator-(field_element a, field_element const & b) { return a -= b; }
    friend field_element operator*(field_element a, field_element const & b) { return a *= b; }
    friend field_element operator/(field_element a, field_element const & b) { return a /= b; }

    field_element pow(std::uint64_t e) const;

    /* Throws error(errc::invalid_argument) for zero. */
    field_element inverse() const;

    friend bool operator==(field_element const & a, field_element const & b)
    {
        return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
    }

    /* Orders by lift; only meaningful within one modulus. */
    friend std::strong_ordering operator<=>(field_element const & a,
                                            field_element const & b)
    {
        return a.residue_ <=> b.residue_;
    }
};

std::ostream & operator<<(std::ostream & o, field_element const & a);

/* The braces lift F_p -> Z cap [0, p). */
std::int64_t lift(field_element const & a);
std::int64_t lift(std::int64_t n, prime p);

/* Legendre symbol by Euler's criterion. */
int legendre(field_element const & a);
int legendre(std::int64_t n, prime p);

/* Legendre symbol by Jacobi-symbol reciprocity descent; an independent route
 * kept alongside the Euler criterion. */
int legendre_reciprocity(std::int64_t n, prime p);

/*
 * Square root of a residue, the root with the smaller lift. Empty when a is
 * a non-residue. Tonelli-Shanks.
 */
std::optional<field_element> sqrt_mod(field_element const & a);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

} // namespace isogsum
