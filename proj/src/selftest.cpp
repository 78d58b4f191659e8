#include "deutsch/selftest.hpp"

#include <random>

#include "deutsch/dequant.hpp"
#include "deutsch/format.hpp"
#include "deutsch/quantum.hpp"
#include "deutsch/report.hpp"

namespace deutsch {

namespace {

constexpr int kSamples = 200;

struct Suite {
    SuiteResult result;
    std::mt19937_64 rng;

    Suite(std::string name, std::uint64_t seed) : rng(seed) { result.name = std::move(name); }

    void require(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok)
            result.failures.push_back(what);
    }

    std::int64_t pick(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    }

    Rat rat() { return Rat(pick(-50, 50), pick(1, 50)); }
    GaussRat gauss() { return {rat(), rat()}; }
    Surd2 surd() { return {pick(-50, 50), pick(-50, 50)}; }
};

bool canonical(const Rat& x) {
    return x.den() > 0 && std::gcd(magnitude(x.num()), static_cast<std::uint64_t>(x.den())) == 1;
}

bool canonical(const GaussRat& z) { return canonical(z.re) && canonical(z.im); }

template <typename T>
void check_ring_laws(Suite& s, T a, T b, T c, const char* tag) {
    s.require((a + b) + c == a + (b + c), std::string(tag) + ": additive associativity");
    s.require(a + b == b + a, std::string(tag) + ": additive commutativity");
    s.require((a * b) * c == a * (b * c), std::string(tag) + ": multiplicative associativity");
    s.require(a * b == b * a, std::string(tag) + ": multiplicative commutativity");
    s.require(a * (b + c) == a * b + a * c, std::string(tag) + ": distributivity");
    s.require(a + (-a) == T{}, std::string(tag) + ": additive inverse");
}

SuiteResult exactnum_suite(std::uint64_t seed) {
    Suite s("exactnum ring laws and canonical form", seed);
    for (int k = 0; k < kSamples; ++k) {
        Rat a = s.rat(), b = s.rat(), c = s.rat();
        check_ring_laws(s, a, b, c, "rat");
        s.require(canonical(a + b) && canonical(a * b) && canonical(-a), "rat: canonical results");

        GaussRat x = s.gauss(), y = s.gauss(), z = s.gauss();
        check_ring_laws(s, x, y, z, "gauss");
        s.require(canonical(x * y), "gauss: canonical results");
        s.require(conj(conj(x)) == x, "gauss: conjugation involution");
        GaussRat n = x * conj(x);
        s.require(n.is_real() && n.re >= Rat(0), "gauss: z*conj(z) real and nonnegative");
        s.require(n.re == x.norm(), "gauss: norm agrees with z*conj(z)");

        Surd2 u = s.surd(), v = s.surd(), w = s.surd();
        check_ring_laws(s, u, v, w, "surd");
        s.require(conj(conj(u)) == u, "surd: conjugation involution");
        s.require((u * conj(u)).is_rational(), "surd: s*conj(s) rational");
    }
    return s.result;
}

SuiteResult serialization_suite(std::uint64_t seed) {
    Suite s("serialization round-trip", seed);
    for (int k = 0; k < kSamples; ++k) {
        Rat a = s.rat();
        s.require(parse_rat(to_string(a)) == a, "rat round-trip: " + to_string(a));
        GaussRat z = s.gauss();
        s.require(parse_gauss(to_string(z)) == z, "gauss round-trip: " + to_string(z));
        Surd2 u = s.surd();
        s.require(parse_surd(to_string(u)) == u, "surd round-trip: " + to_string(u));
    }
    return s.result;
}

SuiteResult unitarity_suite(std::uint64_t seed) {
    Suite s("unitarity", seed);
    const Mat4 had = hadamard4();
    s.require(is_unitary(had), "hadamard unitary");
    s.require(had * had == Mat4::identity(), "hadamard self-inverse");
    for (BitFn fn : all_bit_fns()) {
        OracleHandle h(fn);
        OracleGate gate(h);
        s.require(is_unitary(gate.matrix()), "oracle unitary for " + std::to_string(fn.f0) +
                                                 std::to_string(fn.f1));
        s.require(h.query_count() == 0, "building the gate is free");
    }
    return s.result;
}

SuiteResult pipeline_suite(std::uint64_t seed) {
    Suite s("quantum pipeline", seed);
    const Mat4 had = hadamard4();
    const State4 start = State4::basis(1);
    for (BitFn fn : all_bit_fns()) {
        OracleHandle h(fn);
        OracleGate gate(h);
        State4 after_h = had * start;
        State4 after_uf = gate.apply(after_h);
        State4 final_state = had * after_uf;

        State4 expected;
        expected.amp = {GaussRat(0), GaussRat(Rat(1 - fn.f0 - fn.f1)), GaussRat(0),
                        GaussRat(Rat(fn.f1 - fn.f0))};
        s.require(final_state == expected, "pipeline closed form");

        for (const State4* v : {&after_h, &after_uf, &final_state}) {
            s.require(v->norm_sq() == Rat(1), "norm conserved");
            s.require(v->is_real(), "amplitudes stay real");
        }

        OracleHandle h2(fn);
        s.require(kickback_state(h2) == after_uf, "kickback closed form matches U_f H V");

        OracleHandle h3(fn);
        DeutschOutcome out = run_deutsch(h3);
        s.require(h3.query_count() == 1, "one query per quantum run");
        s.require(out.classification == fn.kind(), "quantum classification correct");
        s.require(out.distribution.p[0] == Rat(0) && out.distribution.p[2] == Rat(0),
                  "outputs 1 and 3 have probability zero");
        s.require(out.distribution.p[1] + out.distribution.p[3] == Rat(1) &&
                      out.distribution.p[1] * out.distribution.p[3] == Rat(0),
                  "outputs 2 and 4 form a 0/1 dichotomy");
    }
    return s.result;
}

SuiteResult product_table_suite(std::uint64_t seed) {
    Suite s("decision product tables", seed);
    const std::array<GaussRat, 4> gauss_products = {
        GaussRat(Rat(0), Rat(2)),   // 2i
        GaussRat(Rat(-2), Rat(0)),  // -2
        GaussRat(Rat(2), Rat(0)),   // 2
        GaussRat(Rat(0), Rat(-2)),  // -2i
    };
    const std::array<Surd2, 4> surd_products = {
        Surd2{-3, 2},
        Surd2{1, 0},
        Surd2{-1, 0},
        Surd2{3, -2},
    };
    auto fns = all_bit_fns();
    for (std::size_t k = 0; k < fns.size(); ++k) {
        OracleHandle hg(fns[k]);
        GaussResult g = solve_gauss(hg);
        s.require(g.product == gauss_products[k], "gauss product " + to_string(g.product));
        s.require(g.classification == fns[k].kind(), "gauss classification");
        s.require(hg.query_count() == 1, "gauss uses one query");
        s.require(g.product.is_real() != g.product.re.is_zero(),
                  "product is exactly one of real / purely imaginary");

        OracleHandle hs(fns[k]);
        SurdResult r = solve_surd(hs);
        s.require(r.product == surd_products[k], "surd product " + to_string(r.product));
        s.require(r.classification == fns[k].kind(), "surd classification");
        s.require(hs.query_count() == 1, "surd uses one query");
        s.require(magnitude(r.product.a) <= 3 && magnitude(r.product.b) <= 3,
                  "surd product within the bounded subset");
    }
    return s.result;
}

SuiteResult embedding_suite(std::uint64_t seed) {
    Suite s("embedding closed forms and linearity", seed);
    for (BitFn fn : all_bit_fns()) {
        OracleHandle h(fn);
        CfBox box(h);
        for (int k = 0; k < kSamples; ++k) {
            GaussRat z = s.gauss();
            GaussRat image = box.eval(z);
            GaussRat closed;
            if (fn.f0 == 0 && fn.f1 == 0)
                closed = conj(z);
            else if (fn.f0 == 0 && fn.f1 == 1)
                closed = z;
            else if (fn.f0 == 1 && fn.f1 == 0)
                closed = -z;
            else
                closed = -conj(z);
            s.require(image == closed, "embedding matches its closed form");

            GaussRat w = s.gauss();
            Rat r = s.rat();
            s.require(box.eval(z + w) == box.eval(z) + box.eval(w), "embedding additive");
            s.require(box.eval(GaussRat(r) * z) == GaussRat(r) * box.eval(z),
                      "embedding scales by real rationals");

            Surd2 u = s.surd(), v = s.surd();
            s.require(box.eval(u + v) == box.eval(u) + box.eval(v), "surd embedding additive");
        }
        s.require(h.query_count() > 0, "evaluations were charged");
    }
    return s.result;
}

SuiteResult family_suite(std::uint64_t seed) {
    Suite s("scalar family agreement", seed);
    for (int k = 0; k < kSamples; ++k) {
        Rat a;
        do {
            a = s.rat();
        } while (a.is_zero());
        for (BitFn fn : all_bit_fns()) {
            OracleHandle truth(fn);
            Classification want = classify_baseline(truth);
            for (FamilySign sign : {FamilySign::minus, FamilySign::plus}) {
                OracleHandle h(fn);
                GaussResult res = solve_gauss_family(h, a, sign);
                s.require(res.classification == want, "family agrees with baseline");
                s.require(h.query_count() == 1, "family uses one query");
            }
        }
    }
    return s.result;
}

SuiteResult accounting_suite(std::uint64_t seed) {
    Suite s("oracle accounting", seed);
    for (BitFn fn : all_bit_fns()) {
        OracleHandle h(fn);
        s.require(h.query_count() == 0, "fresh handle starts at zero");
        s.require(classify_baseline(h) == fn.kind(), "baseline classification");
        s.require(h.query_count() == 2, "baseline costs two queries");

        long before = h.query_count();
        for (int k = 0; k < 16; ++k) {
            h.query(static_cast<int>(s.pick(0, 1)));
            long now = h.query_count();
            s.require(now == before + 1, "counter increments by exactly one");
            before = now;
        }
    }
    // All five methods agree with the ground-truth kind.
    auto fns = all_bit_fns();
    auto methods = all_methods();
    auto reports =
        run_matrix({fns.begin(), fns.end()}, {methods.begin(), methods.end()}, {});
    for (const RunReport& r : reports)
        s.require(r.classification == r.oracle.kind(),
                  std::string("method agreement: ") + to_string(r.method));
    return s.result;
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
    std::mt19937_64 seeder(seed);
    std::vector<SuiteResult> results;
    results.push_back(exactnum_suite(seeder()));
    results.push_back(serialization_suite(seeder()));
    results.push_back(unitarity_suite(seeder()));
    results.push_back(pipeline_suite(seeder()));
    results.push_back(product_table_suite(seeder()));
    results.push_back(embedding_suite(seeder()));
    results.push_back(family_suite(seeder()));
    results.push_back(accounting_suite(seeder()));
    return results;
}

}  // namespace deutsch
