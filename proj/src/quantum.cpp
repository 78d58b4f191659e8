#include "deutsch/quantum.hpp"

#include <random>
#include <stdexcept>

namespace deutsch {

State4 State4::basis(int k) {
    if (k < 0 || k > 3)
        throw std::invalid_argument("basis index out of range");
    State4 v;
    v.amp[static_cast<std::size_t>(k)] = GaussRat(1);
    return v;
}

Rat State4::norm_sq() const {
    Rat s;
    for (const auto& a : amp)
        s += a.norm();
    return s;
}

bool State4::is_real() const {
    for (const auto& a : amp)
        if (!a.is_real())
            return false;
    return true;
}

Mat4 Mat4::identity() {
    Mat4 m;
    for (int k = 0; k < 4; ++k)
        m.e[k][k] = GaussRat(1);
    return m;
}

Mat4 Mat4::dagger() const {
    Mat4 d;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            d.e[r][c] = conj(e[c][r]);
    return d;
}

Mat4 operator*(const Mat4& m, const Mat4& n) {
    Mat4 p;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            GaussRat s;
            for (int k = 0; k < 4; ++k)
                s = s + m.e[r][k] * n.e[k][c];
            p.e[r][c] = s;
        }
    return p;
}

State4 operator*(const Mat4& m, const State4& v) {
    State4 w;
    for (int r = 0; r < 4; ++r) {
        GaussRat s;
        for (int k = 0; k < 4; ++k)
            s = s + m.e[r][k] * v.amp[static_cast<std::size_t>(k)];
        w.amp[static_cast<std::size_t>(r)] = s;
    }
    return w;
}

Mat4 hadamard4() {
    const Rat h(1, 2);
    Mat4 m;
    const int sign[4][4] = {
        {+1, +1, +1, +1},
        {+1, -1, +1, -1},
        {+1, +1, -1, -1},
        {+1, -1, -1, +1},
    };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m.e[r][c] = GaussRat(sign[r][c] > 0 ? h : -h);
    return m;
}

bool is_unitary(const Mat4& m) {
    return m * m.dagger() == Mat4::identity();
}

Distribution4 measure(const State4& v) {
    if (v.norm_sq() != Rat(1))
        throw std::invalid_argument("cannot measure a non-normalized state");
    Distribution4 d;
    for (std::size_t k = 0; k < 4; ++k)
        d.p[k] = v.amp[k].norm();
    return d;
}

namespace {

// |x>|y> -> |x>|y xor f(x)>: within each 2x2 block, identity if f is 0
// on that block's x, swap if 1.
Mat4 oracle_unitary(BitFn f) {
    Mat4 m;
    for (int x = 0; x < 2; ++x) {
        GaussRat keep(1 - f(x));
        GaussRat flip(f(x));
        m.e[2 * x][2 * x] = keep;
        m.e[2 * x][2 * x + 1] = flip;
        m.e[2 * x + 1][2 * x] = flip;
        m.e[2 * x + 1][2 * x + 1] = keep;
    }
    return m;
}

}  // namespace

OracleGate::OracleGate(OracleHandle& h) : m_(oracle_unitary(OracleTap(h).table())), tap_(h) {}

State4 OracleGate::apply(const State4& v) const {
    tap_.charge();
    return m_ * v;
}

State4 kickback_state(OracleHandle& h) {
    OracleTap tap(h);
    BitFn f = tap.table();
    tap.charge();
    Rat s = f.f0 ? Rat(-1, 2) : Rat(1, 2);
    Rat t = (f.f0 ^ f.f1) ? -s : s;
    State4 v;
    v.amp = {GaussRat(s), GaussRat(-s), GaussRat(t), GaussRat(-t)};
    return v;
}

DeutschOutcome run_deutsch(OracleHandle& h) {
    const Mat4 had = hadamard4();
    State4 v = State4::basis(1);  // |01>
    v = had * v;
    v = OracleGate(h).apply(v);
    v = had * v;
    Distribution4 d = measure(v);
    Classification c;
    if (d.p[1] == Rat(1))
        c = Classification::constant;
    else if (d.p[3] == Rat(1))
        c = Classification::balanced;
    else
        throw std::logic_error("pipeline produced a non-dichotomous distribution");
    return {d, c};
}

std::array<long, 4> sample_outcomes(const Distribution4& d, std::uint64_t seed, long shots) {
    if (shots < 0)
        throw std::invalid_argument("negative shot count");
    // Exact sampling: scale to a common denominator D and draw uniform
    // integers in [0, D) by rejection, so no floating point enters.
    std::int64_t common = 1;
    for (const auto& p : d.p)
        common = checked_mul(common / std::gcd(common, p.den()), p.den());
    std::array<std::int64_t, 4> weight{};
    for (std::size_t k = 0; k < 4; ++k)
        weight[k] = checked_mul(d.p[k].num(), common / d.p[k].den());

    std::mt19937_64 rng(seed);
    const auto bound = static_cast<std::uint64_t>(common);
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::array<long, 4> tally{};
    for (long s = 0; s < shots; ++s) {
        std::uint64_t r;
        do {
            r = rng();
        } while (r >= limit);
        auto draw = static_cast<std::int64_t>(r % bound);
        for (std::size_t k = 0; k < 4; ++k) {
            draw -= weight[k];
            if (draw < 0) {
                ++tally[k];
                break;
            }
        }
    }
    return tally;
}

namespace {

template <typename T>
std::string join4(const std::array<T, 4>& xs) {
    std::string s = "(";
    for (std::size_t k = 0; k < 4; ++k) {
        if (k)
            s += ',';
        s += to_string(xs[k]);
    }
    s += ')';
    return s;
}

}  // namespace

std::string to_string(const State4& v) { return join4(v.amp); }

std::string to_string(const Distribution4& d) { return join4(d.p); }

}  // namespace deutsch
