#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "CLI11.hpp"
#include "walshcode/boolfun.hpp"
#include "walshcode/catalog.hpp"
#include "walshcode/defining_set.hpp"
#include "walshcode/gf2.hpp"

namespace walshcode::cli {

namespace {

using io::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        write_atomically(out_path, text);
    }
}

std::string bracket(std::size_t n, std::size_t k) { return "[" + std::to_string(n) + ", " + std::to_string(k) + "]"; }

std::string bracket(std::size_t n, std::size_t k, std::optional<std::size_t> d) {
    return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + (d ? std::to_string(*d) : std::string("?")) + "]";
}

Json classification_json(const Classification& c) {
    return Json{{"label", std::string(to_string(c.label))},
                {"affine", c.affine},
                {"bent", c.bent},
                {"plateaued", c.plateaued},
                {"balanced", c.balanced},
                {"amplitude", c.amplitude}};
}

// ---------------------------------------------------------------- verify

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    bool coin() { return engine_() & 1u; }

private:
    std::mt19937_64 engine_;
};

struct Tally {
    std::size_t passed = 0;
    std::size_t failed = 0;
};

void record(Tally& t, bool ok, std::ostream& out, const std::function<std::string()>& describe) {
    if (ok) {
        ++t.passed;
    } else {
        ++t.failed;
        out << "FAIL " << describe() << "\n";
    }
}

void summarize(const std::string& label, const Tally& t, std::ostream& out) {
    out << (t.failed == 0 ? "PASS " : "FAIL ") << label << ": " << t.passed << "/" << (t.passed + t.failed) << "\n";
}

BinaryCode random_matrix(Rng& rng, std::size_t rows, std::size_t n, bool rank_deficient) {
    std::vector<BitVec> g;
    for (std::size_t i = 0; i < rows; ++i) {
        BitVec r(n);
        for (std::size_t j = 0; j < n; ++j) r.set(j, rng.coin());
        g.push_back(std::move(r));
    }
    if (rank_deficient && rows >= 3) g.back() = g[0] ^ g[1];
    return BinaryCode(std::move(g));
}

Tally verify_roundtrip(Rng& rng, std::size_t trials, std::ostream& out) {
    Tally t;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t rows = 1 + rng.below(12);
        const std::size_t n = 1 + rng.below(64);
        const BinaryCode c = random_matrix(rng, rows, n, trial % 4 == 3);
        if (c.dimension() == 0) {
            ++t.passed;  // nothing to extract; rejection is covered by the CLI tests
            continue;
        }
        const BinaryCode back = code_from_defining_set(extract_defining_set(c));
        const bool ok = std::equal(back.rows().begin(), back.rows().end(), c.echelon().rows.begin(), c.echelon().rows.end()) &&
                        codes_equal(back, c);
        record(t, ok, out, [&] { return "roundtrip trial " + std::to_string(trial) + " " + bracket(n, c.dimension()); });
    }
    summarize("roundtrip", t, out);
    return t;
}

Tally verify_theorem3(Rng& rng, std::size_t trials, std::size_t max_k, std::ostream& out) {
    Tally total;
    for (int m : {4, 6, 8}) {
        Tally t;
        const Field field(m);
        for (std::size_t trial = 0; trial < trials; ++trial) {
            BitVec table(field.size());
            for (std::uint32_t x = 0; x < field.size(); ++x) table.set(x, rng.coin());
            if (table.none()) table.set(1);
            const BooleanFunction f(field, std::move(table));
            record(t, verify_spectral_weights(f, max_k), out, [&] {
                return "theorem3 m=" + std::to_string(m) + " trial " + std::to_string(trial) + " n_f=" + std::to_string(f.weight());
            });
        }
        summarize("theorem3 m=" + std::to_string(m), t, out);
        total.passed += t.passed;
        total.failed += t.failed;
    }
    return total;
}

Tally verify_bivariate(Rng& rng, std::size_t trials, std::ostream& out) {
    Tally total;
    for (int m : {2, 4, 6}) {
        Tally t;
        const Field field(m);
        for (std::size_t trial = 0; trial < trials; ++trial) {
            const std::size_t n = 1 + rng.below(2 * field.size());
            std::vector<std::uint32_t> elements;
            for (std::size_t j = 0; j < n; ++j) elements.push_back(static_cast<std::uint32_t>(rng.below(field.size())));
            const DefiningSet d(field, std::move(elements));
            const auto view = bivariate_view(d, m / 2);
            record(t, codes_equal(view.code, code_from_defining_set(d)), out, [&] {
                return "bivariate m=" + std::to_string(m) + " trial " + std::to_string(trial) + " n=" + std::to_string(n);
            });
        }
        summarize("bivariate m=" + std::to_string(m), t, out);
        total.passed += t.passed;
        total.failed += t.failed;
    }
    return total;
}

std::size_t binomial(std::size_t n, std::size_t r) {
    std::size_t b = 1;
    for (std::size_t i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
}

struct ParameterCase {
    std::string name;
    std::size_t n = 0, k = 0, d = 0;
    bool d_lower_bound = false;  // designed distance
    bool sqrt_bound = false;     // d^2 >= n
    bool two_weight = false;     // exactly the weights d and d + 1
};

std::vector<ParameterCase> parameter_table() {
    std::vector<ParameterCase> cases;
    for (std::size_t k = 2; k <= 10; ++k) {
        cases.push_back({"simplex:k=" + std::to_string(k), (std::size_t{1} << k) - 1, k, std::size_t{1} << (k - 1)});
    }
    for (std::size_t k = 3; k <= 8; ++k) {
        ParameterCase c{"macdonald:k=" + std::to_string(k), (std::size_t{1} << k) - 2, k, (std::size_t{1} << (k - 1)) - 1};
        c.two_weight = true;
        cases.push_back(c);
    }
    for (std::size_t m = 3; m <= 8; ++m) {
        cases.push_back({"hamming:m=" + std::to_string(m), (std::size_t{1} << m) - 1, (std::size_t{1} << m) - 1 - m, 3});
    }
    for (std::size_t m = 3; m <= 6; ++m) {
        for (std::size_t l = 1; l < m; ++l) {
            std::size_t k = 0;
            for (std::size_t i = 0; i <= l; ++i) k += binomial(m, i);
            cases.push_back({"rm:l=" + std::to_string(l) + ",m=" + std::to_string(m), std::size_t{1} << m, k,
                             std::size_t{1} << (m - l)});
        }
    }
    cases.push_back({"golay23", 23, 12, 7});
    cases.push_back({"golay24", 24, 12, 8});
    for (auto [n, delta] : {std::pair<std::size_t, std::size_t>{7, 3}, {15, 3}, {15, 5}, {15, 7}, {31, 5}, {31, 7}, {63, 9}}) {
        ParameterCase c{"bch:n=" + std::to_string(n) + ",d=" + std::to_string(delta), n, 0, delta};
        c.d_lower_bound = true;
        cases.push_back(c);
    }
    for (std::size_t n : {7, 17, 23, 31, 41}) {
        ParameterCase c{"qr:n=" + std::to_string(n), n, (n + 1) / 2, 0};
        c.sqrt_bound = true;
        cases.push_back(c);
    }
    return cases;
}

Tally verify_catalog(std::size_t max_k, std::ostream& out) {
    Tally t;
    for (const auto& pc : parameter_table()) {
        const auto named = catalog::from_name(pc.name);
        const BinaryCode& c = named.code;
        const auto d = minimum_distance_auto(c, max_k);
        // Cyclic codes: k = n - deg g.
        const std::size_t expected_k =
            pc.k != 0 ? pc.k : c.length() - static_cast<std::size_t>(named.generator_polynomial->degree());
        bool ok = c.length() == pc.n && c.dimension() == expected_k && d.has_value();
        std::string expectation = bracket(pc.n, expected_k, pc.d);
        if (ok && pc.d_lower_bound) {
            ok = *d >= pc.d;
            expectation = "[" + std::to_string(pc.n) + ", " + std::to_string(expected_k) + ", >=" + std::to_string(pc.d) + "]";
        } else if (ok && pc.sqrt_bound) {
            ok = *d * *d >= pc.n;
            expectation = "[" + std::to_string(pc.n) + ", " + std::to_string(expected_k) + ", d^2>=n]";
        } else if (ok) {
            ok = *d == pc.d;
        }
        if (ok && pc.two_weight) {
            const auto weights = weight_distribution_bruteforce(c, max_k).nonzero_weights();
            ok = weights == std::vector<std::size_t>{pc.d, pc.d + 1};
            expectation += " two weights";
        }
        out << (ok ? "PASS " : "FAIL ") << pc.name << " " << bracket(c.length(), c.dimension(), d) << " expected "
            << expectation << "\n";
        (ok ? t.passed : t.failed) += 1;
    }
    for (auto [m, N] : {std::pair<int, std::uint32_t>{4, 3}, {4, 5}, {6, 3}, {6, 7}, {6, 9}, {8, 5}, {8, 15}, {8, 17}}) {
        // Length (2^m - 1)/N; dimension ord_n(2) for n = (2^m - 1)/N.
        const auto ic = catalog::irreducible_cyclic(m, N);
        const std::uint32_t n = ((1u << m) - 1) / N;
        const std::size_t k = n == 1 ? 1 : static_cast<std::size_t>(catalog::multiplicative_order_of_two(n));
        const bool ok = ic.code.length() == n && ic.code.dimension() == k;
        out << (ok ? "PASS " : "FAIL ") << "irrcyclic:m=" << m << ",N=" << N << " " << bracket(ic.code.length(), ic.code.dimension())
            << " expected " << bracket(n, k) << "\n";
        (ok ? t.passed : t.failed) += 1;
    }
    summarize("catalog", t, out);
    return t;
}

// ---------------------------------------------------------- openproblems

struct Family {
    std::string file;
    std::string title;
    std::vector<std::string> instances;
};

std::vector<Family> families() {
    std::vector<Family> out;
    out.push_back({"golay", "binary Golay codes", {"golay23", "golay24"}});
    Family mac{"macdonald", "MacDonald codes", {}};
    for (int k = 3; k <= 8; ++k) mac.instances.push_back("macdonald:k=" + std::to_string(k));
    out.push_back(mac);
    out.push_back({"reed_muller",
                   "Reed-Muller codes",
                   {"rm:l=1,m=3", "rm:l=1,m=4", "rm:l=2,m=4", "rm:l=1,m=5", "rm:l=2,m=5", "rm:l=3,m=5", "rm:l=1,m=6",
                    "rm:l=2,m=6"}});
    out.push_back({"hamming", "Hamming codes", {"hamming:m=3", "hamming:m=4", "hamming:m=5"}});
    out.push_back({"irreducible_cyclic",
                   "binary irreducible cyclic codes",
                   {"irrcyclic:m=4,N=3", "irrcyclic:m=4,N=5", "irrcyclic:m=6,N=3", "irrcyclic:m=6,N=7", "irrcyclic:m=6,N=9",
                    "irrcyclic:m=8,N=5", "irrcyclic:m=8,N=15", "irrcyclic:m=8,N=17"}});
    out.push_back({"bch",
                   "BCH codes",
                   {"bch:n=7,d=3", "bch:n=15,d=3", "bch:n=15,d=5", "bch:n=15,d=7", "bch:n=31,d=5", "bch:n=31,d=7"}});
    out.push_back({"quadratic_residue", "quadratic residue codes", {"qr:n=7", "qr:n=17", "qr:n=23", "qr:n=31"}});
    return out;
}

Json summary_row(const std::string& family, const Json& report) {
    const Json& f = report.at("boolean_function");
    const Json& spectral = report.at("weight_distribution").at("spectral");
    return Json{{"family", family},
                {"instance", report.at("code")},
                {"n_f", f.is_null() ? Json(nullptr) : f.at("n_f")},
                {"dimension", report.at("parameters").at("k")},
                {"spectrum_histogram", report.at("spectrum_histogram")},
                {"degree", report.at("algebraic_degree")},
                {"nonlinearity", report.at("nonlinearity")},
                {"classification", report.at("classification").is_null() ? Json(nullptr) : report.at("classification").at("label")},
                {"weights_equal", report.at("weight_distribution").at("verdict")},
                {"status", report.at("status")},
                {"spectral_dimension", spectral.is_null() ? Json(nullptr) : spectral.at("dimension")}};
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object()) {
        std::string s;
        for (const auto& [key, val] : v.items()) s += (s.empty() ? "" : " ") + key + ":" + val.dump();
        return s;
    }
    return v.dump();
}

std::string summary_csv(const Json& rows) {
    std::string out = "family,instance,n_f,dimension,spectrum_histogram,degree,nonlinearity,classification,weights_equal,status\n";
    for (const auto& r : rows) {
        out += csv_cell(r["family"]) + "," + csv_cell(r["instance"]) + "," + csv_cell(r["n_f"]) + "," +
               csv_cell(r["dimension"]) + "," + csv_cell(r["spectrum_histogram"]) + "," + csv_cell(r["degree"]) + "," +
               csv_cell(r["nonlinearity"]) + "," + csv_cell(r["classification"]) + "," + csv_cell(r["weights_equal"]) + "," +
               csv_cell(r["status"]) + "\n";
    }
    return out;
}

// ------------------------------------------------------------- commands

int cmd_analyze(const std::string& spec, const std::string& format, const std::string& out_path, std::size_t max_k,
                std::ostream& out, std::ostream& err) {
    const CodeSource source = resolve_code(spec);
    const Analysis a = analyze(source.name, source.code, max_k);
    emit(format == "csv" ? analysis_csv(a.report) : dump(a.report), out_path, out);
    if (!a.consistent) {
        err << "weight distributions disagree for " << source.name << "\n";
        return kVerificationFailure;
    }
    return kOk;
}

int cmd_build(const std::string& path, const std::string& out_path, std::ostream& out, std::ostream& err) {
    Json json;
    try {
        json = Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
    const DefiningSet set = io::defining_set_from_json(json);
    if (set.has_duplicates()) err << "warning: the defining set repeats elements; the code is not projective\n";
    if (set.contains_zero()) err << "warning: the defining set contains 0; the code has a zero coordinate\n";
    const BinaryCode code = code_from_defining_set(set);
    emit(io::generator_to_text(code), out_path, out);
    (out_path.empty() ? err : out) << bracket(code.length(), code.dimension()) << "\n";
    return kOk;
}

int cmd_extract(const std::string& path, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const BinaryCode code = io::generator_from_text(read_file(path));
    if (code.dimension() < code.rows().size()) {
        err << "note: " << code.rows().size() << " rows of rank " << code.dimension() << "; using the rank\n";
    }
    emit(dump(io::to_json(extract_defining_set(code))), out_path, out);
    return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t trials, std::size_t max_k, std::ostream& out) {
    Rng rng(seed);
    out << "suite " << suite;
    if (suite != "catalog") out << " seed " << seed << " trials " << trials;
    out << "\n";
    Tally t;
    if (suite == "roundtrip") t = verify_roundtrip(rng, trials, out);
    if (suite == "theorem3") t = verify_theorem3(rng, trials, max_k, out);
    if (suite == "bivariate") t = verify_bivariate(rng, trials, out);
    if (suite == "catalog") t = verify_catalog(max_k, out);
    out << (t.failed == 0 ? "PASSED" : "FAILED") << " " << t.passed << " passed, " << t.failed << " failed\n";
    return t.failed == 0 ? kOk : kVerificationFailure;
}

int cmd_openproblems(const std::string& dir, std::size_t max_k, std::ostream& out) {
    std::filesystem::create_directories(dir);
    Json rows = Json::array();
    bool consistent = true;
    for (const auto& fam : families()) {
        Json reports = Json::array();
        for (const auto& name : fam.instances) {
            const auto named = catalog::from_name(name);
            Analysis a = analyze(name, named.code, max_k);
            consistent = consistent && a.consistent;
            rows.push_back(summary_row(fam.file, a.report));
            reports.push_back(std::move(a.report));
        }
        write_atomically(std::filesystem::path(dir) / (fam.file + ".json"),
                         dump(Json{{"family", fam.title}, {"instances", std::move(reports)}}));
        out << "wrote " << (std::filesystem::path(dir) / (fam.file + ".json")).string() << "\n";
    }
    write_atomically(std::filesystem::path(dir) / "summary.json", dump(rows));
    write_atomically(std::filesystem::path(dir) / "summary.csv", summary_csv(rows));
    out << summary_csv(rows);
    return consistent ? kOk : kVerificationFailure;
}

}  // namespace

CodeSource resolve_code(const std::string& spec) {
    if (catalog::is_catalog_name(spec)) {
        auto named = catalog::from_name(spec);
        return {named.name, std::move(named.code)};
    }
    std::error_code ec;
    if (!std::filesystem::is_regular_file(spec, ec)) {
        throw std::invalid_argument("'" + spec + "' is neither a catalog code name nor a generator-matrix file");
    }
    return {spec, io::generator_from_text(read_file(spec))};
}

std::optional<std::size_t> minimum_distance_auto(const BinaryCode& code, std::size_t max_k) {
    if (code.dimension() == 0) return std::nullopt;
    if (code.dimension() <= max_k) return minimum_distance(code, max_k);
    const BinaryCode d = dual(code);
    if (d.dimension() == 0) return 1;  // the full space
    if (code.length() <= 96 && d.dimension() <= max_k) {
        return macwilliams_transform(weight_distribution_bruteforce(d, max_k), d.dimension()).min_nonzero_weight();
    }
    return dual_distance_up_to(d, 4);
}

Analysis analyze(const std::string& name, const BinaryCode& code, std::size_t max_k) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    if (k == 0) throw std::invalid_argument("the zero code has nothing to analyze");

    Analysis a;
    Json notes = Json::array();
    const ProjectivityCheck check = check_projectivity(code);

    std::optional<WeightDistribution> enumerated;
    if (k <= max_k) {
        enumerated = weight_distribution_bruteforce(code, max_k);
    } else {
        notes.push_back("k = " + std::to_string(k) + " exceeds the enumeration guard " + std::to_string(max_k));
    }

    std::optional<DefiningSet> set;
    if (k <= static_cast<std::size_t>(Field::kMaxDegree)) {
        set = extract_defining_set(code);
    } else {
        notes.push_back("k = " + std::to_string(k) + " exceeds the field cap 20; no defining set or f_C");
    }
    if (!check.projective) notes.push_back("not projective (" + check.diagnostic() + "); f_C is undefined");

    Json f_json = nullptr, histogram = nullptr, classification = nullptr, degree = nullptr, nl = nullptr;
    std::optional<SpectralWeightReport> spectral;
    if (set && check.projective) {
        const auto f = BooleanFunction::from_support(set->field(), set->elements());
        const auto spectrum = walsh_transform(f);
        spectral = spectral_weight_distribution(f, spectrum);
        f_json = Json{{"m", f.num_variables()},
                      {"modulus", io::to_hex(f.field().modulus())},
                      {"n_f", f.weight()},
                      {"truth_table_hex", io::truth_table_hex(f.table())}};
        const auto c = classify(spectrum);
        histogram = io::to_json(c.histogram);
        classification = classification_json(c);
        degree = anf(f).degree();
        nl = nonlinearity(spectrum);
    }

    std::optional<std::size_t> d;
    if (enumerated) {
        d = enumerated->min_nonzero_weight();
    } else if (spectral) {
        d = spectral->weights.min_nonzero_weight();
    } else {
        d = minimum_distance_auto(code, max_k);
    }

    std::string verdict = "UNAVAILABLE";
    if (enumerated && spectral) {
        a.consistent = spectral->weights == *enumerated && static_cast<std::size_t>(spectral->dimension) == k;
        verdict = a.consistent ? "EQUAL" : "DIFFERENT";
    }
    a.complete = enumerated && spectral;

    Json& r = a.report;
    r["code"] = name;
    r["parameters"] = Json{{"n", n}, {"k", k}, {"d", d ? Json(*d) : Json(nullptr)}};
    r["projective"] = check.projective;
    r["projectivity"] = check.projective ? Json(nullptr) : Json(check.diagnostic());
    r["defining_set"] = set ? io::to_json(*set) : Json(nullptr);
    r["boolean_function"] = f_json;
    r["spectrum_histogram"] = histogram;
    r["classification"] = classification;
    r["algebraic_degree"] = degree;
    r["nonlinearity"] = nl;
    r["weight_distribution"] = Json{{"spectral", spectral ? io::to_json(*spectral) : Json(nullptr)},
                                    {"enumerated", enumerated ? io::to_json(*enumerated) : Json(nullptr)},
                                    {"verdict", verdict}};
    r["status"] = a.complete ? "complete" : "partial";
    r["notes"] = notes;
    return a;
}

std::string analysis_csv(const Json& report) {
    std::string out = "table,key,value\n";
    for (const auto& [key, value] : report.at("parameters").items()) out += "parameters," + key + "," + csv_cell(value) + "\n";
    const Json& wd = report.at("weight_distribution");
    if (!wd.at("spectral").is_null()) {
        for (const auto& [w, c] : wd.at("spectral").at("weights").items()) out += "weights_spectral," + w + "," + c.dump() + "\n";
    }
    if (!wd.at("enumerated").is_null()) {
        for (const auto& [w, c] : wd.at("enumerated").items()) out += "weights_enumerated," + w + "," + c.dump() + "\n";
    }
    if (!report.at("spectrum_histogram").is_null()) {
        for (const auto& [v, c] : report.at("spectrum_histogram").items()) out += "spectrum_histogram," + v + "," + c.dump() + "\n";
    }
    out += "verdict,weights," + wd.at("verdict").get<std::string>() + "\n";
    return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        file << contents;
        if (!file.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Projective binary codes and their Boolean functions", "walshcode"};
    app.require_subcommand(1);

    std::string spec, file, suite, format = "json", out_path;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t max_k = kMaxEnumerationDimension;
    const auto guard = CLI::Range(std::size_t{1}, kMaxEnumerationDimension);

    auto* analyze_cmd = app.add_subcommand("analyze", "Report on a catalog code or a generator-matrix file");
    analyze_cmd->add_option("code", spec, "catalog name (e.g. simplex:k=3) or generator file")->required();
    analyze_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    analyze_cmd->add_option("--out", out_path, "write the report here instead of stdout");
    analyze_cmd->add_option("--max-k", max_k, "enumeration guard (at most 24)")->check(guard);

    auto* build_cmd = app.add_subcommand("build", "Generator matrix from a defining-set JSON file");
    build_cmd->add_option("defining_set", file, "defining-set JSON")->required();
    build_cmd->add_option("--out", out_path, "write the matrix here instead of stdout");

    auto* extract_cmd = app.add_subcommand("extract", "Defining-set JSON from a generator-matrix file");
    extract_cmd->add_option("matrix", file, "generator matrix, one 0/1 row per line")->required();
    extract_cmd->add_option("--out", out_path, "write the JSON here instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "Run a seeded verification suite");
    verify_cmd->add_option("suite", suite, "roundtrip, theorem3, bivariate or catalog")
        ->required()
        ->check(CLI::IsMember({"roundtrip", "theorem3", "bivariate", "catalog"}));
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--trials", trials, "random cases per group")->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    verify_cmd->add_option("--max-k", max_k, "enumeration guard (at most 24)")->check(guard);

    auto* open_cmd = app.add_subcommand("openproblems", "Write per-family JSON reports and a summary table");
    open_cmd->add_option("--out", out_path, "output directory")->required();
    open_cmd->add_option("--max-k", max_k, "enumeration guard (at most 24)")->check(guard);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(spec, format, out_path, max_k, out, err);
        if (build_cmd->parsed()) return cmd_build(file, out_path, out, err);
        if (extract_cmd->parsed()) return cmd_extract(file, out_path, out, err);
        if (verify_cmd->parsed()) return cmd_verify(suite, seed, trials, max_k, out);
        if (open_cmd->parsed()) return cmd_openproblems(out_path, max_k, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::logic_error& e) {
        // Integrality or consistency violations inside a computation.
        err << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace walshcode::cli
