// gaussian.hpp
//
// Gaussian rationals: numbers a + bi with rational a, b. Componentwise
// canonical via Rat, so equality stays structural and arithmetic exact.

#pragma once

#include <ostream>
#include <string>

#include "deutsch/rational.hpp"

namespace deutsch {

struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(r) {}
    GaussRat(std::int64_t n) : re(n) {}
    GaussRat(Rat r, Rat i) : re(r), im(i) {}

    bool is_real() const { return im.is_zero(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    // |z|^2 = re^2 + im^2, always a nonnegative rational
    Rat norm() const { return re * re + im * im; }

    friend bool operator==(const GaussRat&, const GaussRat&) = default;
};

inline GaussRat operator+(const GaussRat& x, const GaussRat& y) {
    return {x.re + y.re, x.im + y.im};
}

inline GaussRat operator-(const GaussRat& x, const GaussRat& y) {
    return {x.re - y.re, x.im - y.im};
}

inline GaussRat operator*(const GaussRat& x, const GaussRat& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

inline GaussRat operator-(const GaussRat& x) { return {-x.re, -x.im}; }

inline GaussRat conj(const GaussRat& x) { return {x.re, -x.im}; }

inline std::string to_string(const GaussRat& z) {
    auto imag_part = [](const Rat& m) {  // m > 0
        return m == Rat(1) ? std::string("i") : to_string(m) + "i";
    };
    if (z.is_real())
        return to_string(z.re);
    if (z.re.is_zero())
        return (z.im.num() < 0 ? "-" : "") + imag_part(abs(z.im));
    return to_string(z.re) + (z.im.num() < 0 ? "-" : "+") + imag_part(abs(z.im));
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
    return os << to_string(z);
}

}  // namespace deutsch
