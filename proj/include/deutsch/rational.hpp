// rational.hpp
//
// Exact rational numbers over checked 64-bit integers. Every value is kept
// in canonical form: den > 0 and gcd(|num|, den) = 1, with 0 stored as 0/1.
// Equality is therefore structural. Overflow is a hard error, never a wrap.

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace deutsch {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t x) {
    return checked_sub(0, x);
}

// Magnitude as unsigned, safe for INT64_MIN.
inline std::uint64_t magnitude(std::int64_t x) {
    return x < 0 ? 0u - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

class Rat {
public:
    Rat() = default;

    Rat(std::int64_t n) : num_(n) {}  // integers embed as n/1

    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0)
            throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        std::uint64_t g = std::gcd(magnitude(num_), static_cast<std::uint64_t>(den_));
        if (g > 1) {
            num_ /= static_cast<std::int64_t>(g);
            den_ /= static_cast<std::int64_t>(g);
        }
        if (num_ == 0)
            den_ = 1;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& x, const Rat& y) {
        return Rat(checked_add(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)),
                   checked_mul(x.den_, y.den_));
    }

    friend Rat operator-(const Rat& x, const Rat& y) {
        return Rat(checked_sub(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)),
                   checked_mul(x.den_, y.den_));
    }

    friend Rat operator*(const Rat& x, const Rat& y) {
        return Rat(checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_));
    }

    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num_ == 0)
            throw std::domain_error("rational division by zero");
        return Rat(checked_mul(x.num_, y.den_), checked_mul(x.den_, y.num_));
    }

    Rat operator-() const {
        Rat r;
        r.num_ = checked_neg(num_);
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& y) { return *this = *this + y; }
    Rat& operator-=(const Rat& y) { return *this = *this - y; }
    Rat& operator*=(const Rat& y) { return *this = *this * y; }
    Rat& operator/=(const Rat& y) { return *this = *this / y; }

    friend bool operator==(const Rat&, const Rat&) = default;

    friend std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
        return checked_mul(x.num_, y.den_) <=> checked_mul(y.num_, x.den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rat abs(const Rat& x) { return x.num() < 0 ? -x : x; }

inline std::string to_string(const Rat& x) {
    std::string s = std::to_string(x.num());
    if (!x.is_integer()) {
        s += '/';
        s += std::to_string(x.den());
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Rat& x) {
    return os << to_string(x);
}

}  // namespace deutsch
