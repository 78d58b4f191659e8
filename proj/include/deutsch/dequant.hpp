// dequant.hpp
//
// Deterministic single-query classical solvers. The oracle is embedded into
// a two-dimensional number system as
//
//   C_f(a + b*u) = (-1)^(0 xor f(0)) a + (-1)^(1 xor f(1)) b*u
//
// with u = i over Q[i] or u = √2 over Z[√2]. One evaluation of C_f at the
// probe 1 + u, times a fixed multiplier, lands in disjoint sets depending on
// whether f is constant or balanced; the decision reads off structurally
// (imaginary part zero / surd part zero).

#pragma once

#include "deutsch/gaussian.hpp"
#include "deutsch/oracle.hpp"
#include "deutsch/surd.hpp"

namespace deutsch {

// Classical analogue of the oracle unitary; each eval charges one query.
class CfBox {
public:
    explicit CfBox(OracleHandle& h) noexcept : tap_(h) {}

    GaussRat eval(const GaussRat& z) const;
    Surd2 eval(const Surd2& s) const;

private:
    OracleTap tap_;
};

enum class FamilySign { minus, plus };  // multiplier a(i-1) vs a(i+1)

struct GaussResult {
    Classification classification;
    GaussRat product;  // the decision witness
};

struct SurdResult {
    Classification classification;
    Surd2 product;
};

// Evaluate (i-1)*C_f(1+i); balanced iff the product is real. One query.
GaussResult solve_gauss(OracleHandle& h);

// The scalar family: a(i-1)*C_f(1+i) with the same rule, or a(i+1)*C_f(1+i)
// with the rule flipped (real means constant). Rejects a = 0, where the
// product degenerates to 0 and decides nothing.
GaussResult solve_gauss_family(OracleHandle& h, const Rat& a, FamilySign sign);

// Evaluate (√2-1)*C_f(1+√2); balanced iff the product is rational. One query.
SurdResult solve_surd(OracleHandle& h);

}  // namespace deutsch
