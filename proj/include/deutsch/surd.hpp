// surd.hpp
//
// The quadratic integer ring Z[√2]: values a + b√2 with 64-bit integer
// coefficients. The representation is exact, so "is this rational" is the
// structural test b = 0 rather than a numeric comparison.

#pragma once

#include <ostream>
#include <string>

#include "deutsch/rational.hpp"

namespace deutsch {

struct Surd2 {
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool is_rational() const { return b == 0; }

    friend bool operator==(const Surd2&, const Surd2&) = default;
};

inline Surd2 operator+(const Surd2& x, const Surd2& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

inline Surd2 operator-(const Surd2& x, const Surd2& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

// (a1 + b1√2)(a2 + b2√2) = (a1a2 + 2b1b2) + (a1b2 + b1a2)√2
inline Surd2 operator*(const Surd2& x, const Surd2& y) {
    return {checked_add(checked_mul(x.a, y.a), checked_mul(2, checked_mul(x.b, y.b))),
            checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a))};
}

inline Surd2 operator-(const Surd2& x) { return {checked_neg(x.a), checked_neg(x.b)}; }

inline Surd2 conj(const Surd2& x) { return {x.a, checked_neg(x.b)}; }

inline std::string to_string(const Surd2& s) {
    auto surd_part = [](std::uint64_t m) {  // m > 0
        return m == 1 ? std::string("√2") : std::to_string(m) + "√2";
    };
    if (s.is_rational())
        return std::to_string(s.a);
    if (s.a == 0)
        return (s.b < 0 ? "-" : "") + surd_part(magnitude(s.b));
    return std::to_string(s.a) + (s.b < 0 ? "-" : "+") + surd_part(magnitude(s.b));
}

inline std::ostream& operator<<(std::ostream& os, const Surd2& s) {
    return os << to_string(s);
}

}  // namespace deutsch
