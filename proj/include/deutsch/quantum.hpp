// quantum.hpp
//
// Exact two-qubit state-vector execution of Deutsch's algorithm. Basis
// ordering is fixed as |00>, |01>, |10>, |11> = outputs 1..4, so "the second
// possible output" always means index 1 here. All amplitudes close over the
// rationals: the two-qubit Hadamard has entries ±1/2, U_f has entries 0/1,
// so measurement probabilities are exactly 0 or 1 and every check below is
// an equality test.

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "deutsch/gaussian.hpp"
#include "deutsch/oracle.hpp"

namespace deutsch {

struct State4 {
    std::array<GaussRat, 4> amp{};

    static State4 basis(int k);  // k in 0..3

    Rat norm_sq() const;  // sum of |amp_k|^2
    bool is_real() const;

    friend bool operator==(const State4&, const State4&) = default;
};

struct Mat4 {
    std::array<std::array<GaussRat, 4>, 4> e{};

    static Mat4 identity();
    Mat4 dagger() const;  // conjugate transpose

    friend bool operator==(const Mat4&, const Mat4&) = default;
};

Mat4 operator*(const Mat4& m, const Mat4& n);
State4 operator*(const Mat4& m, const State4& v);

// The combined two-qubit Hadamard, entries ±1/2; self-inverse.
Mat4 hadamard4();

bool is_unitary(const Mat4& m);

struct Distribution4 {
    std::array<Rat, 4> p{};

    friend bool operator==(const Distribution4&, const Distribution4&) = default;
};

// p_k = |amp_k|^2; rejects states whose norm is not exactly 1.
Distribution4 measure(const State4& v);

// U_f bound to an oracle handle. Construction inspects the truth table at
// zero cost; each apply() charges one query.
class OracleGate {
public:
    explicit OracleGate(OracleHandle& h);

    const Mat4& matrix() const noexcept { return m_; }
    State4 apply(const State4& v) const;

private:
    Mat4 m_;
    OracleTap tap_;
};

// Phase-kickback closed form of the state after U_f acts on H|01>:
// (1/2)(-1)^f(0) (|0> + (-1)^(f(0) xor f(1)) |1>)(|0> - |1>). Charges one
// query, same as applying the gate.
State4 kickback_state(OracleHandle& h);

struct DeutschOutcome {
    Distribution4 distribution;
    Classification classification;
};

// The five-step pipeline: |01>, H, U_f (one query), H, measure. Constant if
// the distribution is concentrated on output 2, balanced if on output 4.
DeutschOutcome run_deutsch(OracleHandle& h);

// Seeded sampling from an exact distribution, demonstration only: returns
// per-outcome tallies. Deterministic for a fixed (seed, shots).
std::array<long, 4> sample_outcomes(const Distribution4& d, std::uint64_t seed, long shots);

std::string to_string(const State4& v);
std::string to_string(const Distribution4& d);

}  // namespace deutsch
