#include "deutsch/report.hpp"

#include <json.hpp>

#include "deutsch/quantum.hpp"

namespace deutsch {

const char* to_string(Method m) {
    switch (m) {
        case Method::baseline: return "baseline";
        case Method::quantum: return "quantum";
        case Method::gauss: return "gauss";
        case Method::gauss_family: return "gauss-family";
        case Method::surd: return "surd";
    }
    throw std::invalid_argument("unknown method");
}

namespace {

std::string oracle_label(BitFn fn) {
    return {static_cast<char>('0' + fn.f0), static_cast<char>('0' + fn.f1)};
}

}  // namespace

RunReport run_method(BitFn fn, Method m, const FamilyParams& fam) {
    OracleHandle h(fn);
    RunReport r;
    r.oracle = fn;
    r.method = m;
    switch (m) {
        case Method::baseline: {
            int b0 = h.query(0);
            int b1 = h.query(1);
            r.classification =
                b0 == b1 ? Classification::constant : Classification::balanced;
            r.witness = "f(0)=" + std::to_string(b0) + ",f(1)=" + std::to_string(b1);
            break;
        }
        case Method::quantum: {
            DeutschOutcome out = run_deutsch(h);
            r.classification = out.classification;
            r.witness = to_string(out.distribution);
            break;
        }
        case Method::gauss: {
            GaussResult res = solve_gauss(h);
            r.classification = res.classification;
            r.witness = to_string(res.product);
            break;
        }
        case Method::gauss_family: {
            GaussResult res = solve_gauss_family(h, fam.scale, fam.sign);
            r.classification = res.classification;
            r.witness = to_string(res.product);
            break;
        }
        case Method::surd: {
            SurdResult res = solve_surd(h);
            r.classification = res.classification;
            r.witness = to_string(res.product);
            break;
        }
    }
    r.queries = h.query_count();
    return r;
}

std::vector<RunReport> run_matrix(const std::vector<BitFn>& oracles,
                                  const std::vector<Method>& methods,
                                  const FamilyParams& fam) {
    std::vector<RunReport> reports;
    reports.reserve(oracles.size() * methods.size());
    for (BitFn fn : oracles)
        for (Method m : methods)
            reports.push_back(run_method(fn, m, fam));
    return reports;
}

std::vector<BitFn> parse_oracle_spec(const std::string& spec) {
    if (spec == "all") {
        auto fns = all_bit_fns();
        return {fns.begin(), fns.end()};
    }
    if (spec.size() == 2 && (spec[0] == '0' || spec[0] == '1') &&
        (spec[1] == '0' || spec[1] == '1'))
        return {BitFn{spec[0] - '0', spec[1] - '0'}};
    throw std::invalid_argument("oracle must be one of 00, 01, 10, 11, all (got '" + spec + "')");
}

std::vector<Method> parse_method_spec(const std::string& spec) {
    if (spec == "all") {
        auto ms = all_methods();
        return {ms.begin(), ms.end()};
    }
    for (Method m : all_methods())
        if (spec == to_string(m))
            return {m};
    if (spec == "family")  // shorthand accepted on the command line
        return {Method::gauss_family};
    throw std::invalid_argument(
        "method must be one of baseline, quantum, gauss, family, surd, all (got '" + spec + "')");
}

namespace {

constexpr const char* kCsvHeader = "oracle,method,classification,queries,witness";

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string render_text(const std::vector<RunReport>& reports) {
    const std::array<std::string, 5> header = {"oracle", "method", "classification", "queries",
                                               "witness"};
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back(header);
    for (const RunReport& r : reports)
        rows.push_back({oracle_label(r.oracle), to_string(r.method),
                        to_string(r.classification), std::to_string(r.queries), r.witness});
    std::array<std::size_t, 5> width{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 5; ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 5; ++c) {
            if (c) {
                out += "  ";
            }
            out += row[c];
            if (c < 4)  // last column unpadded
                out += std::string(width[c] - row[c].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

std::string render_csv(const std::vector<RunReport>& reports) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const RunReport& r : reports) {
        out += oracle_label(r.oracle);
        out += ',';
        out += to_string(r.method);
        out += ',';
        out += to_string(r.classification);
        out += ',';
        out += std::to_string(r.queries);
        out += ',';
        out += csv_field(r.witness);
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<RunReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const RunReport& r : reports) {
        arr.push_back({{"oracle", oracle_label(r.oracle)},
                       {"method", to_string(r.method)},
                       {"classification", to_string(r.classification)},
                       {"queries", r.queries},
                       {"witness", r.witness}});
    }
    return arr.dump(2) + "\n";
}

std::string render(const std::vector<RunReport>& reports, const std::string& format) {
    if (format == "text")
        return render_text(reports);
    if (format == "csv")
        return render_csv(reports);
    if (format == "json")
        return render_json(reports);
    throw std::invalid_argument("format must be one of text, csv, json (got '" + format + "')");
}

}  // namespace deutsch
