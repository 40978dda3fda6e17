// hpo - command-line front end: classify composition-operator symbols, run
// verification suites, dump truncated matrices, and emit machine-readable
// reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <hpo/classify.hpp>
#include <hpo/kernel.hpp>
#include <hpo/lfmap.hpp>
#include <hpo/spectral.hpp>
#include <hpo/verify.hpp>

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnknownSuite = 3;
constexpr int kExitWriteFailure = 4;

/// Round to 12 significant digits so serialized reports re-parse and
/// re-serialize to the identical document. Extreme exponents are passed
/// through untouched: the scale factor would overflow there, and the
/// shortest-representation dump already round-trips them.
double round_sig(double x) {
    if (x == 0.0 || !std::isfinite(x)) {
        return x;
    }
    const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
    if (exponent > 280 || exponent < -280) {
        return x;
    }
    const double scale = std::pow(10.0, 11 - exponent);
    return std::round(x * scale) / scale;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HPO_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable HPO_SEED='" << env << "'\n";
        }
    }
    return 0;
}

Json symbol_json(const hpo::AffineSymbol& phi) {
    return Json{{"a", round_sig(phi.a())},
                {"b_re", round_sig(phi.b().real())},
                {"b_im", round_sig(phi.b().imag())}};
}

Json classification_json(const hpo::ClassificationReport& report) {
    Json j;
    j["symbol"] = symbol_json(report.symbol);
    j["symbol_class"] = hpo::to_string(report.symbol_class);
    j["normal"] = report.normal;
    j["self_adjoint"] = report.self_adjoint;
    j["unitary"] = report.unitary;
    j["complex_symmetric"] = report.complex_symmetric;
    j["cohyponormal"] = report.cohyponormal;
    j["certificate"] = report.certificate ? Json(report.certificate->name()) : Json(nullptr);
    Json residuals = Json::object();
    for (const auto& [name, value] : report.residuals) {
        residuals[name] = round_sig(value);
    }
    j["residuals"] = residuals;
    j["notes"] = report.notes;
    return j;
}

Json cross_checks_json(const std::map<std::string, hpo::CrossCheck>& checks) {
    Json j = Json::object();
    for (const auto& [name, check] : checks) {
        j[name] = Json{{"expected_below", check.expect_below},
                       {"measured", round_sig(check.measured)},
                       {"threshold", round_sig(check.threshold)},
                       {"pass", check.pass}};
    }
    return j;
}

Json suite_json(const hpo::SuiteResult& result, hpo::Scale scale) {
    Json cases = Json::array();
    for (const auto& c : result.cases) {
        cases.push_back(Json{{"label", c.label},
                             {"measured", round_sig(c.measured)},
                             {"threshold", round_sig(c.threshold)},
                             {"direction", c.direction == hpo::Direction::Below ? "below" : "above"},
                             {"pass", c.pass}});
    }
    return Json{{"name", result.suite_name},
                {"seed", result.seed},
                {"scale", hpo::to_string(scale)},
                {"elapsed_seconds", round_sig(result.elapsed_seconds)},
                {"pass", result.all_pass()},
                {"cases", cases}};
}

void print_suite_text(const hpo::SuiteResult& result, std::ostream& os) {
    for (const auto& c : result.cases) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << result.suite_name << ": " << c.label
           << "  measured=" << c.measured << " threshold=" << c.threshold
           << (c.direction == hpo::Direction::Below ? " (below)" : " (above)") << "\n";
    }
    os << (result.all_pass() ? "[PASS] " : "[FAIL] ") << "suite " << result.suite_name << " ("
       << result.cases.size() << " cases, " << result.elapsed_seconds << " s)\n";
}

int write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitWriteFailure;
    }
    out << content;
    out.close();
    if (!out) {
        std::cerr << "error: failed while writing '" << path << "'\n";
        return kExitWriteFailure;
    }
    return kExitOk;
}

struct SymbolFlags {
    double a = 1.0;
    double b_re = 0.0;
    double b_im = 0.0;

    hpo::AffineSymbol make() const { return hpo::make_symbol(a, {b_re, b_im}); }
};

int cmd_classify(const SymbolFlags& flags, std::uint64_t seed, const std::string& format) {
    std::optional<hpo::AffineSymbol> phi;
    try {
        phi = flags.make();
    } catch (const hpo::UnboundedSymbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    const auto report = hpo::classify_operator(*phi, seed);
    if (format == "json") {
        std::cout << classification_json(report).dump(2) << "\n";
    } else {
        std::cout << "symbol: a=" << phi->a() << " b=" << phi->b().real() << "+"
                  << phi->b().imag() << "i (" << hpo::to_string(report.symbol_class) << ")\n"
                  << "  normal:            " << (report.normal ? "true" : "false") << "\n"
                  << "  self_adjoint:      " << (report.self_adjoint ? "true" : "false") << "\n"
                  << "  unitary:           " << (report.unitary ? "true" : "false") << "\n"
                  << "  complex_symmetric: " << (report.complex_symmetric ? "true" : "false")
                  << "\n"
                  << "  cohyponormal:      " << (report.cohyponormal ? "true" : "false") << "\n"
                  << "  certificate:       "
                  << (report.certificate ? report.certificate->name() : "none") << "\n";
        for (const auto& [name, value] : report.residuals) {
            std::cout << "  residual " << name << " = " << value << "\n";
        }
        for (const auto& note : report.notes) {
            std::cout << "  note: " << note << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& scale_text,
               const std::string& format) {
    hpo::Scale scale;
    try {
        scale = hpo::parse_scale(scale_text);
    } catch (const hpo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    std::vector<hpo::SuiteResult> results;
    try {
        if (suite == "all") {
            results = hpo::run_all(seed, scale);
        } else {
            results.push_back(hpo::run_suite(suite, seed, scale));
        }
    } catch (const hpo::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "known suites:";
        for (const auto& name : hpo::suite_names()) {
            std::cerr << " " << name;
        }
        std::cerr << "\n";
        return kExitUnknownSuite;
    }

    bool all_pass = true;
    if (format == "json") {
        Json j = Json::array();
        for (const auto& r : results) {
            j.push_back(suite_json(r, scale));
            all_pass = all_pass && r.all_pass();
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            print_suite_text(r, std::cout);
            all_pass = all_pass && r.all_pass();
        }
        std::cout << (all_pass ? "PASS" : "FAIL") << " (" << results.size() << " suites, seed "
                  << seed << ", " << hpo::to_string(scale) << ")\n";
    }
    return all_pass ? kExitOk : kExitInternal;
}

int cmd_matrix(const SymbolFlags& flags, int order, double radius, int fft,
               const std::string& conjugation, std::optional<double> r_param,
               std::optional<double> c_param, const std::string& emit_path) {
    hpo::TruncatedOperator op;
    std::string description;
    try {
        if (order < 1) {
            throw hpo::Error("--order must be >= 1");
        }
        if (conjugation.empty()) {
            const auto phi = flags.make();
            op = hpo::composition_matrix(phi, order, fft, radius);
            description = "composition matrix";
        } else if (conjugation == "J") {
            op = hpo::conjugation_matrix(hpo::ConjugationSpec::j(), order, fft, radius);
            description = "conjugation matrix J";
        } else if (conjugation == "W0") {
            op = hpo::conjugation_matrix(hpo::ConjugationSpec::w0(), order, fft, radius);
            description = "conjugation matrix W0";
        } else if (conjugation == "Jr") {
            if (!r_param) {
                std::cerr << "error: --conjugation Jr requires --r\n";
                return kExitBadInput;
            }
            op = hpo::conjugation_matrix(hpo::ConjugationSpec::jr(*r_param), order, fft, radius);
            description = "conjugation matrix Jr";
        } else if (conjugation == "Wc") {
            if (!c_param) {
                std::cerr << "error: --conjugation Wc requires --c\n";
                return kExitBadInput;
            }
            op = hpo::wc_conjugation_matrix(*c_param, order, fft, radius);
            description = "conjugation matrix Wc";
        } else {
            std::cerr << "error: unknown conjugation '" << conjugation
                      << "' (expected J, W0, Jr or Wc)\n";
            return kExitBadInput;
        }
    } catch (const hpo::UnboundedSymbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const hpo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    std::cout << description << ", order " << op.order << ", fft " << op.meta.fft_size
              << ", radius " << op.meta.sample_radius << "\n";
    char entry_line[128];
    std::snprintf(entry_line, sizeof(entry_line), "entry [0,0] = %.6f%+.6fi",
                  op.entries(0, 0).real(), op.entries(0, 0).imag());
    std::cout << entry_line << "\n";

    try {
        if (op.kind == hpo::OperatorKind::ConjugateLinear) {
            hpo::ConjugationMatrixDefects defects{};
            if (conjugation == "Wc") {
                defects = hpo::wc_conjugation_defects(*c_param, order);
            } else if (conjugation == "Jr") {
                defects = hpo::conjugation_defects(hpo::ConjugationSpec::jr(*r_param), order);
            } else {
                defects = hpo::conjugation_matrix_checks(op);
            }
            std::cout << "symmetry defect  = " << defects.symmetry << "\n"
                      << "unitarity defect = " << defects.unitarity << "\n";
        } else {
            const auto phi = flags.make();
            const int block = std::max(1, order / 2);
            const double min_eig = hpo::cohypo_matrix_residual(phi, block, fft);
            const Eigen::MatrixXcd commutator = hpo::stabilized_block(
                [&](int inner) {
                    const Eigen::MatrixXcd rows =
                        hpo::composition_block(phi, block, inner, 4 * inner, 0.995);
                    const Eigen::MatrixXcd cols =
                        hpo::composition_block(phi, inner, block, 4 * inner, 0.995);
                    return (rows * rows.adjoint() - cols.adjoint() * cols).eval();
                },
                2 * block, 1e-9);
            std::cout << "commutator norm |MM*-M*M| (block " << block
                      << ") = " << commutator.cwiseAbs().maxCoeff() << "\n"
                      << "commutator min eigenvalue (block " << block << ") = " << min_eig
                      << "\n";
        }
    } catch (const hpo::Error& e) {
        std::cerr << "warning: defect summary unavailable: " << e.what() << "\n";
    }

    if (!emit_path.empty()) {
        std::string csv = "m,n,re,im\n";
        char line[128];
        for (int m = 0; m < op.order; ++m) {
            for (int n = 0; n < op.order; ++n) {
                std::snprintf(line, sizeof(line), "%d,%d,%.17g,%.17g\n", m, n,
                              op.entries(m, n).real(), op.entries(m, n).imag());
                csv += line;
            }
        }
        const int status = write_text_file(emit_path, csv);
        if (status != kExitOk) {
            return status;
        }
        std::cout << "wrote " << op.order * op.order << " entries to " << emit_path << "\n";
    }
    return kExitOk;
}

struct ReportConfig {
    std::vector<hpo::AffineSymbol> symbols;
    std::vector<std::string> suites;
    std::uint64_t seed = 0;
    hpo::Scale scale = hpo::Scale::Quick;
    std::string output_path;
    std::string format = "json";
};

/// Parses and validates the run configuration; error messages name the
/// offending field.
ReportConfig parse_config(const Json& j) {
    ReportConfig config;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) {
            throw hpo::Error("config field 'seed' must be a nonnegative integer");
        }
        config.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("scale")) {
        if (!j["scale"].is_string()) {
            throw hpo::Error("config field 'scale' must be a string");
        }
        config.scale = hpo::parse_scale(j["scale"].get<std::string>());
    }
    if (j.contains("output_path")) {
        if (!j["output_path"].is_string()) {
            throw hpo::Error("config field 'output_path' must be a string");
        }
        config.output_path = j["output_path"].get<std::string>();
    }
    if (j.contains("format")) {
        if (!j["format"].is_string()) {
            throw hpo::Error("config field 'format' must be a string");
        }
        config.format = j["format"].get<std::string>();
        if (config.format != "json" && config.format != "csv" && config.format != "text") {
            throw hpo::Error("config field 'format' must be json, csv or text");
        }
    }
    if (j.contains("symbols")) {
        if (!j["symbols"].is_array()) {
            throw hpo::Error("config field 'symbols' must be an array");
        }
        std::size_t index = 0;
        for (const auto& entry : j["symbols"]) {
            const std::string where = "symbols[" + std::to_string(index) + "]";
            double a = 0.0;
            double b_re = 0.0;
            double b_im = 0.0;
            if (entry.is_array()) {
                if (entry.size() != 3 || !entry[0].is_number() || !entry[1].is_number() ||
                    !entry[2].is_number()) {
                    throw hpo::Error("config entry " + where +
                                     " must be a numeric triple [a, b_re, b_im]");
                }
                a = entry[0].get<double>();
                b_re = entry[1].get<double>();
                b_im = entry[2].get<double>();
            } else if (entry.is_object()) {
                for (const char* key : {"a", "b_re", "b_im"}) {
                    if (!entry.contains(key) || !entry[key].is_number()) {
                        throw hpo::Error("config entry " + where + "." + key +
                                         " must be a number");
                    }
                }
                a = entry["a"].get<double>();
                b_re = entry["b_re"].get<double>();
                b_im = entry["b_im"].get<double>();
            } else {
                throw hpo::Error("config entry " + where + " must be an array or object");
            }
            try {
                config.symbols.push_back(hpo::make_symbol(a, {b_re, b_im}));
            } catch (const hpo::UnboundedSymbol& e) {
                throw hpo::Error("config entry " + where + " is not a bounded symbol: " +
                                 e.what());
            }
            ++index;
        }
    }
    if (j.contains("suites")) {
        if (!j["suites"].is_array()) {
            throw hpo::Error("config field 'suites' must be an array of names");
        }
        for (const auto& entry : j["suites"]) {
            if (!entry.is_string()) {
                throw hpo::Error("config field 'suites' must contain strings");
            }
            const std::string name = entry.get<std::string>();
            if (name == "all") {
                config.suites = hpo::suite_names();
                break;
            }
            const auto& known = hpo::suite_names();
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                throw hpo::Error("config field 'suites' names unknown suite '" + name + "'");
            }
            config.suites.push_back(name);
        }
    }
    return config;
}

int cmd_report(const std::string& config_path, const std::string& output_override) {
    Json config_json;
    {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot read config '" << config_path << "'\n";
            return kExitBadInput;
        }
        try {
            in >> config_json;
        } catch (const std::exception& e) {
            std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
            return kExitBadInput;
        }
    }

    ReportConfig config;
    try {
        config = parse_config(config_json);
    } catch (const hpo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    if (!output_override.empty()) {
        config.output_path = output_override;
    }

    bool all_pass = true;
    Json classifications = Json::array();
    for (const auto& phi : config.symbols) {
        const auto report = hpo::classify_operator(phi, config.seed);
        const auto checks = hpo::cross_validate(phi, config.seed, 12);
        int failures = 0;
        for (const auto& [name, check] : checks) {
            if (!check.pass) {
                ++failures;
            }
        }
        all_pass = all_pass && failures == 0;
        Json entry = classification_json(report);
        entry["cross_checks"] = cross_checks_json(checks);
        entry["cross_validate_failures"] = failures;
        classifications.push_back(entry);
    }

    Json suites = Json::array();
    for (const auto& name : config.suites) {
        const auto result = hpo::run_suite(name, config.seed, config.scale);
        all_pass = all_pass && result.all_pass();
        suites.push_back(suite_json(result, config.scale));
    }

    Json document{{"meta", Json{{"seed", config.seed},
                                {"scale", hpo::to_string(config.scale)},
                                {"versions", Json{{"hpo", kVersion}}}}},
                  {"classifications", classifications},
                  {"suites", suites}};

    std::string rendered;
    if (config.format == "json") {
        rendered = document.dump(2) + "\n";
    } else if (config.format == "csv") {
        rendered = "section,name,item,measured,threshold,pass\n";
        for (const auto& entry : classifications) {
            const std::string symbol = "a=" + entry["symbol"]["a"].dump() +
                                       ";b=" + entry["symbol"]["b_re"].dump() + "+" +
                                       entry["symbol"]["b_im"].dump() + "i";
            for (const auto& [name, check] : entry["cross_checks"].items()) {
                rendered += "classification," + symbol + "," + name + "," +
                            check["measured"].dump() + "," + check["threshold"].dump() + "," +
                            (check["pass"].get<bool>() ? "1" : "0") + "\n";
            }
        }
        for (const auto& suite : suites) {
            for (const auto& c : suite["cases"]) {
                rendered += "suite," + suite["name"].get<std::string>() + ",\"" +
                            c["label"].get<std::string>() + "\"," + c["measured"].dump() + "," +
                            c["threshold"].dump() + "," + (c["pass"].get<bool>() ? "1" : "0") +
                            "\n";
            }
        }
    } else {
        rendered = "hpo report (seed " + std::to_string(config.seed) + ", " +
                   hpo::to_string(config.scale) + ")\n";
        for (const auto& entry : classifications) {
            rendered += "symbol a=" + entry["symbol"]["a"].dump() + " b=" +
                        entry["symbol"]["b_re"].dump() + "+" + entry["symbol"]["b_im"].dump() +
                        "i: class=" + entry["symbol_class"].get<std::string>() +
                        " certificate=" + entry["certificate"].dump() +
                        " cross_validate_failures=" +
                        entry["cross_validate_failures"].dump() + "\n";
        }
        for (const auto& suite : suites) {
            rendered += "suite " + suite["name"].get<std::string>() + ": " +
                        (suite["pass"].get<bool>() ? "pass" : "FAIL") + "\n";
        }
        rendered += std::string("overall: ") + (all_pass ? "pass" : "FAIL") + "\n";
    }

    if (config.output_path.empty()) {
        std::cout << rendered;
    } else {
        const int status = write_text_file(config.output_path, rendered);
        if (status != kExitOk) {
            return status;
        }
        std::cout << "wrote report to " << config.output_path << "\n";
    }
    return all_pass ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifiable toolkit for affine composition operators on the Hardy space of the right half-plane"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();

    SymbolFlags classify_flags;
    std::string classify_format = "text";
    auto* classify = app.add_subcommand("classify", "classify the operator induced by a symbol");
    classify->add_option("--a", classify_flags.a, "dilation a > 0")->required();
    classify->add_option("--b-re", classify_flags.b_re, "Re(b) >= 0")->required();
    classify->add_option("--b-im", classify_flags.b_im, "Im(b)")->required();
    classify->add_option("--seed", seed, "seed for the validation point set");
    classify->add_option("--format", classify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string verify_suite;
    std::string verify_scale = "quick";
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "run named verification suites");
    verify->add_option("--suite", verify_suite, "suite name or 'all'")->required();
    verify->add_option("--seed", seed, "seed for randomized content");
    verify->add_option("--scale", verify_scale, "quick or full");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    SymbolFlags matrix_flags;
    int matrix_order = 64;
    double matrix_radius = 0.9;
    int matrix_fft = 8192;
    std::string matrix_conjugation;
    std::optional<double> matrix_r;
    std::optional<double> matrix_c;
    std::string matrix_emit;
    auto* matrix = app.add_subcommand("matrix", "build a truncated matrix and dump/check it");
    matrix->add_option("--a", matrix_flags.a, "dilation a > 0 (composition matrices)");
    matrix->add_option("--b-re", matrix_flags.b_re, "Re(b) >= 0");
    matrix->add_option("--b-im", matrix_flags.b_im, "Im(b)");
    matrix->add_option("--order", matrix_order, "truncation order N (default 64)");
    matrix->add_option("--radius", matrix_radius, "sampling radius in (0,1) (default 0.9)");
    matrix->add_option("--fft", matrix_fft, "sample count, >= 4N (default 8192)");
    matrix->add_option("--conjugation", matrix_conjugation, "J, W0, Jr or Wc");
    matrix->add_option("--r", matrix_r, "translation parameter for Jr");
    matrix->add_option("--c", matrix_c, "disk parameter for Wc, in (-1,1)");
    matrix->add_option("--emit", matrix_emit, "write the matrix as CSV (m,n,re,im)");

    std::string report_config;
    std::string report_output;
    auto* report = app.add_subcommand("report", "run a configured set of checks and emit one document");
    report->add_option("--config", report_config, "path to a JSON run configuration")->required();
    report->add_option("--output", report_output, "override the config's output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) {
            return cmd_classify(classify_flags, seed, classify_format);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_suite, seed, verify_scale, verify_format);
        }
        if (matrix->parsed()) {
            return cmd_matrix(matrix_flags, matrix_order, matrix_radius, matrix_fft,
                              matrix_conjugation, matrix_r, matrix_c, matrix_emit);
        }
        if (report->parsed()) {
            return cmd_report(report_config, report_output);
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
