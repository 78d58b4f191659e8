// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every comparison is exact equality under exact arithmetic.

#include <cstdio>
#include <numeric>
#include <random>

#include "deutsch/dequant.hpp"
#include "deutsch/format.hpp"
#include "deutsch/quantum.hpp"
#include "deutsch/report.hpp"

using namespace deutsch;

namespace {

int failures = 0;

void criterion(int n, const char* name, bool ok) {
    std::printf("[%2d] %s  %s\n", n, ok ? "PASS" : "FAIL", name);
    if (!ok)
        ++failures;
}

State4 st(Rat a1, Rat a2, Rat a3, Rat a4) {
    State4 v;
    v.amp = {GaussRat(a1), GaussRat(a2), GaussRat(a3), GaussRat(a4)};
    return v;
}

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rat random_rat(std::mt19937_64& rng) { return Rat(pick(rng, -50, 50), pick(rng, 1, 50)); }

GaussRat random_gauss(std::mt19937_64& rng) { return {random_rat(rng), random_rat(rng)}; }

Surd2 random_surd(std::mt19937_64& rng) { return {pick(rng, -50, 50), pick(rng, -50, 50)}; }

bool canonical(const Rat& x) {
    return x.den() > 0 &&
           std::gcd(magnitude(x.num()), static_cast<std::uint64_t>(x.den())) == 1 &&
           (x.num() != 0 || x.den() == 1);
}

bool quantum_correctness() {
    bool ok = true;
    for (BitFn fn : all_bit_fns()) {
        OracleHandle h(fn);
        DeutschOutcome out = run_deutsch(h);
        Distribution4 expected;
        expected.p = fn.kind() == Classification::constant
                         ? std::array<Rat, 4>{Rat(0), Rat(1), Rat(0), Rat(0)}
                         : std::array<Rat, 4>{Rat(0), Rat(0), Rat(0), Rat(1)};
        ok &= out.distribution == expected;
        ok &= out.classification == fn.kind();
        ok &= out.distribution.p[0] == Rat(0) && out.distribution.p[2] == Rat(0);
    }
    return ok;
}

bool intermediate_states() {
    bool ok = true;
    const Mat4 had = hadamard4();
    for (BitFn fn : all_bit_fns()) {
        OracleHandle h(fn);
        OracleGate gate(h);
        State4 after_h = had * State4::basis(1);
        ok &= after_h == st(Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2));
        State4 after_uf = gate.apply(after_h);
        ok &= after_uf == st(Rat(1, 2) - Rat(fn.f0), Rat(-1, 2) + Rat(fn.f0),
                             Rat(1, 2) - Rat(fn.f1), Rat(-1, 2) + Rat(fn.f1));
        State4 final_state = had * after_uf;
        ok &= final_state == st(Rat(0), Rat(1 - fn.f0 - fn.f1), Rat(0), Rat(fn.f1 - fn.f0));
    }
    return ok;
}

bool kickback_equivalence() {
    bool ok = true;
    const Mat4 had = hadamard4();
    for (BitFn fn : all_bit_fns()) {
        OracleHandle a(fn), b(fn);
        ok &= kickback_state(a) == OracleGate(b).apply(had * State4::basis(1));
        ok &= a.query_count() == 1 && b.query_count() == 1;
    }
    return ok;
}

bool unitarity() {
    const Mat4 had = hadamard4();
    bool ok = is_unitary(had) && had * had == Mat4::identity();
    for (BitFn fn : all_bit_fns()) {
        OracleHandle h(fn);
        ok &= is_unitary(OracleGate(h).matrix());
    }
    return ok;
}

bool gauss_product_table() {
    const std::array<GaussRat, 4> products = {
        GaussRat(Rat(0), Rat(2)),
        GaussRat(Rat(-2), Rat(0)),
        GaussRat(Rat(2), Rat(0)),
        GaussRat(Rat(0), Rat(-2)),
    };
    bool ok = true;
    auto fns = all_bit_fns();
    for (std::size_t k = 0; k < 4; ++k) {
        OracleHandle h(fns[k]);
        GaussResult res = solve_gauss(h);
        ok &= res.product == products[k];
        ok &= res.classification == fns[k].kind();
        ok &= h.query_count() == 1;
    }
    return ok;
}

bool surd_product_table() {
    const std::array<Surd2, 4> products = {Surd2{-3, 2}, Surd2{1, 0}, Surd2{-1, 0}, Surd2{3, -2}};
    const Surd2 probe{1, 1};
    const Surd2 multiplier{-1, 1};
    auto bounded = [](const Surd2& s) { return magnitude(s.a) <= 3 && magnitude(s.b) <= 3; };
    bool ok = true;
    auto fns = all_bit_fns();
    for (std::size_t k = 0; k < 4; ++k) {
        OracleHandle h(fns[k]);
        SurdResult res = solve_surd(h);
        ok &= res.product == products[k];
        ok &= res.classification == fns[k].kind();
        ok &= h.query_count() == 1;

        OracleHandle h2(fns[k]);
        Surd2 image = CfBox(h2).eval(probe);
        ok &= bounded(probe) && bounded(multiplier) && bounded(image) &&
              bounded(multiplier * image);
    }
    return ok;
}

bool family_property() {
    std::mt19937_64 rng(1);
    bool ok = true;
    int checks = 0;
    for (int k = 0; k < 100; ++k) {
        Rat a;
        do {
            a = random_rat(rng);
        } while (a.is_zero());
        for (BitFn fn : all_bit_fns()) {
            OracleHandle truth(fn);
            Classification want = classify_baseline(truth);
            for (FamilySign sign : {FamilySign::minus, FamilySign::plus}) {
                OracleHandle h(fn);
                ok &= solve_gauss_family(h, a, sign).classification == want;
                ok &= h.query_count() == 1;
                ++checks;
            }
        }
    }
    return ok && checks >= 800;
}

bool query_efficiency() {
    bool ok = true;
    for (BitFn fn : all_bit_fns()) {
        OracleHandle hq(fn), hg(fn), hf(fn), hs(fn), hb(fn);
        run_deutsch(hq);
        solve_gauss(hg);
        solve_gauss_family(hf, Rat(1), FamilySign::minus);
        solve_surd(hs);
        classify_baseline(hb);
        ok &= hq.query_count() == 1;
        ok &= hg.query_count() == 1;
        ok &= hf.query_count() == 1;
        ok &= hs.query_count() == 1;
        ok &= hb.query_count() == 2;
    }
    return ok;
}

bool method_agreement() {
    auto fns = all_bit_fns();
    auto ms = all_methods();
    auto reports = run_matrix({fns.begin(), fns.end()}, {ms.begin(), ms.end()}, {});
    bool ok = reports.size() == 20;
    for (const RunReport& r : reports)
        ok &= r.classification == r.oracle.kind();
    return ok;
}

bool property_suites() {
    std::mt19937_64 rng(2);
    bool ok = true;
    for (int k = 0; k < 200; ++k) {
        Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
        ok &= (a + b) + c == a + (b + c) && a + b == b + a;
        ok &= (a * b) * c == a * (b * c) && a * b == b * a;
        ok &= a * (b + c) == a * b + a * c;
        ok &= canonical(a + b) && canonical(a * b) && canonical(-a);
        ok &= parse_rat(to_string(a)) == a;

        GaussRat x = random_gauss(rng), y = random_gauss(rng), z = random_gauss(rng);
        ok &= (x + y) + z == x + (y + z) && x * y == y * x;
        ok &= (x * y) * z == x * (y * z);
        ok &= x * (y + z) == x * y + x * z;
        ok &= conj(conj(x)) == x;
        GaussRat n = x * conj(x);
        ok &= n.is_real() && n.re >= Rat(0);
        ok &= parse_gauss(to_string(x)) == x;

        Surd2 u = random_surd(rng), v = random_surd(rng), w = random_surd(rng);
        ok &= (u + v) + w == u + (v + w) && u * v == v * u;
        ok &= (u * v) * w == u * (v * w);
        ok &= u * (v + w) == u * v + u * w;
        ok &= conj(conj(u)) == u;
        ok &= (u * conj(u)).is_rational();
        ok &= parse_surd(to_string(u)) == u;
    }
    for (BitFn fn : all_bit_fns()) {
        OracleHandle h(fn);
        CfBox box(h);
        for (int k = 0; k < 200; ++k) {
            GaussRat z = random_gauss(rng), w = random_gauss(rng);
            Rat r = random_rat(rng);
            ok &= box.eval(z + w) == box.eval(z) + box.eval(w);
            ok &= box.eval(GaussRat(r) * z) == GaussRat(r) * box.eval(z);
        }
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "quantum correctness: exact distributions and classifications", quantum_correctness());
    criterion(2, "intermediate-state reproduction: HV, UfHV, HUfHV closed forms", intermediate_states());
    criterion(3, "kickback closed form equals the gate application", kickback_equivalence());
    criterion(4, "unitarity of the oracle matrices and the hadamard", unitarity());
    criterion(5, "gaussian product table 2i, -2, 2, -2i with one query", gauss_product_table());
    criterion(6, "surd product table within the bounded subset, one query", surd_product_table());
    criterion(7, "scalar family agrees with baseline, 800+ sampled checks", family_property());
    criterion(8, "query counts: single-query solvers vs two-query baseline", query_efficiency());
    criterion(9, "all five methods agree with the ground-truth kind", method_agreement());
    criterion(10, "property suites: ring laws, canonical form, conjugation, linearity", property_suites());

    if (failures) {
        std::printf("%d criteria failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
