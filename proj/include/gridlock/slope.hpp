#pragma once

// Points of QP^1 = Q u {inf}: [p : q] is read as q/p, and as inf when p = 0.

#include <gridlock/error.hpp>

#include <cstdint>
#include <numeric>
#include <string>

namespace gridlock {

struct Slope
{
    std::int64_t p = 0;
    std::int64_t q = 1;

    bool is_infinite() const noexcept { return p == 0; }

    friend bool operator==(const Slope&, const Slope&) = default;

    std::string to_string() const
    {
        if (is_infinite())
            return "inf";
        if (p == 1)
            return std::to_string(q);
        return std::to_string(q) + "/" + std::to_string(p);
    }
};

/// gcd(p, q) = 1, p >= 0, and (0, 1) for infinity.
inline Slope slope_normalize(std::int64_t p, std::int64_t q)
{
    if (p == 0 && q == 0)
        throw Error(ErrorKind::ZeroZero, "[0 : 0] is not a point of QP^1");
    if (p == 0)
        return Slope{0, 1};
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (p < 0) {
        p = -p;
        q = -q;
    }
    return Slope{p, q};
}

inline Slope slope_normalize(const Slope& s) { return slope_normalize(s.p, s.q); }

} // namespace gridlock
