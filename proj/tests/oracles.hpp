#pragma once

// Brute-force reference implementations in plain integer arithmetic. None of
// these call into the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 mod(i64 n, i64 p)
{
    n %= p;
    return n < 0 ? n + p : n;
}

inline bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<i64> primes(i64 lo, i64 hi)
{
    std::vector<i64> out;
    for (i64 p = lo; p <= hi; ++p)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

// Legendre symbol by listing the squares.
inline int legendre(i64 n, i64 p)
{
    n = mod(n, p);
    if (n == 0)
        return 0;
    for (i64 x = 1; x <= p / 2; ++x)
        if (x * x % p == n)
            return 1;
    return -1;
}

inline i64 inverse(i64 n, i64 p)
{
    n = mod(n, p);
    for (i64 x = 1; x < p; ++x)
        if (x * n % p == 1)
            return x;
    return 0;
}

using pt = std::pair<i64, i64>;   // affine point

// Affine points of y^2 = x^3 + c2 x^2 + c1 x + c0 by a double loop.
inline std::vector<pt> points(i64 c2, i64 c1, i64 c0, i64 p)
{
    std::vector<pt> out;
    for (i64 x = 0; x < p; ++x) {
        i64 const rhs = mod(mod(mod(x * x, p) * x, p) + mod(c2, p) * mod(x * x, p)
                            + mod(c1, p) * x + mod(c0, p), p);
        for (i64 y = 0; y < p; ++y)
            if (y * y % p == rhs)
                out.emplace_back(x, y);
    }
    return out;
}

// tau(x, y) = (y^2/x^2, y(b - x^2)/x^2) on E1; nullopt-like flag for infinity.
struct image_pt { bool inf; i64 x, y; };

inline image_pt tau(i64 b, pt P, i64 p)
{
    auto [x, y] = P;
    if (x == 0)
        return { true, 0, 0 };
    i64 const ix2 = inverse(x * x % p, p);
    return { false, y * y % p * ix2 % p, mod(y * mod(b - x * x, p) % p * ix2, p) };
}

inline image_pt tau_hat(i64 r, pt P, i64 p)
{
    auto [x, y] = P;
    if (x == 0)
        return { true, 0, 0 };
    i64 const ix2 = inverse(x * x % p, p);
    return { false, y * y % p * inverse(4, p) % p * ix2 % p,
             mod(y * mod(r - x * x, p) % p * inverse(8, p) % p * ix2, p) };
}

// S_tau with the character taken from the actual image of tau.
inline i64 s_tau(i64 a, i64 b, i64 p)
{
    i64 const r = mod(a * a - 4 * b, p);
    std::set<pt> image;
    for (auto P : points(a, b, 0, p)) {
        auto Q = tau(mod(b, p), P, p);
        if (!Q.inf)
            image.emplace(Q.x, Q.y);
    }
    i64 s = 0;
    for (auto P : points(-2 * a, r, 0, p))
        s += mod(P.first - a, p) * (image.count(P) ? 1 : -1);
    return s;
}

inline i64 s_tau_hat(i64 a, i64 b, i64 p)
{
    i64 const r = mod(a * a - 4 * b, p);
    std::set<pt> image;
    for (auto P : points(-2 * a, r, 0, p)) {
        auto Q = tau_hat(r, P, p);
        if (!Q.inf)
            image.emplace(Q.x, Q.y);
    }
    i64 const half_a = mod(a, p) * inverse(2, p) % p;
    i64 s = 0;
    for (auto P : points(a, b, 0, p))
        s += mod(P.first + half_a, p) * (image.count(P) ? 1 : -1);
    return s;
}

// Reduced forms (A, B, C) of discriminant d < 0 by exhaustive search.
inline std::vector<std::tuple<i64, i64, i64>> reduced_forms(i64 d)
{
    auto gcd = [](i64 x, i64 y) {
        x = x < 0 ? -x : x;
        y = y < 0 ? -y : y;
        while (y) {
            i64 t = x % y;
            x = y;
            y = t;
        }
        return x;
    };
    std::vector<std::tuple<i64, i64, i64>> out;
    for (i64 A = 1; 3 * A * A <= -d; ++A) {
        for (i64 B = -A + 1; B <= A; ++B) {
            i64 const num = B * B - d;
            if (num % (4 * A))
                continue;
            i64 const C = num / (4 * A);
            if (C < A || (C == A && B < 0))
                continue;
            if (gcd(gcd(A, B), C) != 1)
                continue;
            out.emplace_back(A, B, C);
        }
    }
    return out;
}

inline i64 class_number(i64 d) { return static_cast<i64>(reduced_forms(d).size()); }

inline i64 h_star(i64 p)
{
    return p % 4 == 3 ? class_number(-p) : 0;
}

inline i64 error_r(i64 a, i64 b, i64 p)
{
    i64 r = (1 + legendre(-b, p)) / 2;
    for (i64 x = 1; x < mod(a, p); ++x)
        r -= legendre(x, p);
    return r;
}

} // namespace oracle
