// oracle.hpp
//
// The black box: one of the four bit functions f : {0,1} -> {0,1}, wrapped
// with a monotone query counter. Solvers receive only an OracleHandle and
// must pay one query per oracle use, whatever form that use takes:
//
//   - one bit lookup via query()            = 1 query
//   - one application of the unitary U_f     = 1 query  (quantum module)
//   - one evaluation of the embedding C_f    = 1 query  (dequant module)
//
// Building U_f or C_f from a handle is free; only applications are charged.
// The builders go through OracleTap, the privileged view that exposes the
// truth table. Solver code never touches the tap.

#pragma once

#include <array>
#include <cassert>
#include <stdexcept>

namespace deutsch {

enum class Classification { constant, balanced };

inline const char* to_string(Classification c) {
    return c == Classification::constant ? "constant" : "balanced";
}

struct BitFn {
    int f0 = 0;
    int f1 = 0;

    int operator()(int x) const {
        assert(x == 0 || x == 1);
        return x ? f1 : f0;
    }

    Classification kind() const {
        return f0 == f1 ? Classification::constant : Classification::balanced;
    }

    friend bool operator==(const BitFn&, const BitFn&) = default;
};

// The four inhabitants, in ascending (f0, f1) order.
inline constexpr std::array<BitFn, 4> all_bit_fns() {
    return {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
}

class OracleTap;

class OracleHandle {
public:
    OracleHandle(int f0, int f1) : fn_{f0, f1} {
        if ((f0 | f1) & ~1)
            throw std::invalid_argument("oracle bits must be 0 or 1");
    }

    explicit OracleHandle(BitFn fn) : OracleHandle(fn.f0, fn.f1) {}

    // f(x); charges one query
    int query(int x) {
        ++queries_;
        return fn_(x);
    }

    long query_count() const noexcept { return queries_; }

private:
    friend class OracleTap;
    BitFn fn_;
    long queries_ = 0;
};

// Privileged access for the U_f / C_f constructions: grants the truth table
// without charging, plus charge() to pay for each application.
class OracleTap {
public:
    explicit OracleTap(OracleHandle& h) noexcept : handle_(&h) {}

    BitFn table() const noexcept { return handle_->fn_; }
    void charge() const noexcept { ++handle_->queries_; }

private:
    OracleHandle* handle_;
};

// Two-query ground truth: compute f(0) and f(1), compare.
inline Classification classify_baseline(OracleHandle& h) {
    return h.query(0) == h.query(1) ? Classification::constant : Classification::balanced;
}

}  // namespace deutsch
