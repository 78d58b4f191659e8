#include "deutsch/dequant.hpp"

#include <cassert>
#include <stdexcept>

namespace deutsch {

GaussRat CfBox::eval(const GaussRat& z) const {
    BitFn f = tap_.table();
    tap_.charge();
    return {f.f0 ? -z.re : z.re, f.f1 ? z.im : -z.im};
}

Surd2 CfBox::eval(const Surd2& s) const {
    BitFn f = tap_.table();
    tap_.charge();
    return {f.f0 ? checked_neg(s.a) : s.a, f.f1 ? s.b : checked_neg(s.b)};
}

GaussResult solve_gauss(OracleHandle& h) {
    const GaussRat probe(Rat(1), Rat(1));       // 1 + i
    const GaussRat multiplier(Rat(-1), Rat(1));  // i - 1
    GaussRat product = multiplier * CfBox(h).eval(probe);
    Classification c = product.is_real() ? Classification::balanced : Classification::constant;
    return {c, product};
}

GaussResult solve_gauss_family(OracleHandle& h, const Rat& a, FamilySign sign) {
    if (a.is_zero())
        throw std::invalid_argument("family scale must be a nonzero rational");
    const GaussRat probe(Rat(1), Rat(1));
    GaussRat multiplier = sign == FamilySign::minus ? GaussRat(-a, a) : GaussRat(a, a);
    GaussRat product = multiplier * CfBox(h).eval(probe);
    bool real = product.is_real();
    Classification c;
    if (sign == FamilySign::minus)
        c = real ? Classification::balanced : Classification::constant;
    else
        c = real ? Classification::constant : Classification::balanced;
    return {c, product};
}

namespace {

// The whole computation stays inside {a + b√2 : |a|, |b| <= 3}.
[[maybe_unused]] bool in_bounded_subset(const Surd2& s) {
    return magnitude(s.a) <= 3 && magnitude(s.b) <= 3;
}

}  // namespace

SurdResult solve_surd(OracleHandle& h) {
    const Surd2 probe{1, 1};       // 1 + √2
    const Surd2 multiplier{-1, 1};  // √2 - 1
    Surd2 image = CfBox(h).eval(probe);
    Surd2 product = multiplier * image;
    assert(in_bounded_subset(probe) && in_bounded_subset(multiplier) &&
           in_bounded_subset(image) && in_bounded_subset(product));
    Classification c = product.is_rational() ? Classification::balanced : Classification::constant;
    return {c, product};
}

}  // namespace deutsch
