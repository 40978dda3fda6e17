#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "subprocess.hpp"

using Json = nlohmann::ordered_json;
using subprocess::cli_path;
using subprocess::run;

namespace {

Json parse_json(const std::string& text) { return Json::parse(text); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

} // namespace

TEST_CASE("classify emits the full report and honors exit codes") {
    const auto ok = run(cli_path() + " classify --a 1 --b-re 2 --b-im 0 --format json");
    CHECK(ok.exit_code == 0);
    const Json report = parse_json(ok.output);
    CHECK(report["symbol_class"] == "parabolic");
    CHECK(report["self_adjoint"] == true);
    CHECK(report["unitary"] == false);
    CHECK(report["certificate"] == "J");
    CHECK(report["residuals"]["certificate_symmetry"].get<double>() <= 1e-12);

    const auto contraction = run(cli_path() + " classify --a 0.5 --b-re 1 --b-im 0 --format json");
    CHECK(contraction.exit_code == 0);
    const Json report2 = parse_json(contraction.output);
    CHECK(report2["cohyponormal"] == false);
    CHECK(report2["complex_symmetric"] == false);
    CHECK(report2["certificate"].is_null());

    const auto invalid = run(cli_path() + " classify --a 0 --b-re 1 --b-im 0");
    CHECK(invalid.exit_code == 2);
}

TEST_CASE("verify runs suites, reports cases and maps unknown names to exit 3") {
    const auto all = run(cli_path() + " verify --suite all --seed 0 --scale quick");
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("PASS (9 suites, seed 0, quick)") != std::string::npos);

    const auto unknown = run(cli_path() + " verify --suite nope");
    CHECK(unknown.exit_code == 3);

    const auto thm100 = run(cli_path() + " verify --suite thm100 --seed 0 --format json");
    CHECK(thm100.exit_code == 0);
    const Json suites = parse_json(thm100.output);
    REQUIRE(suites.size() == 1);
    bool matched_below = false;
    bool offset_above = false;
    for (const auto& c : suites[0]["cases"]) {
        const std::string label = c["label"].get<std::string>();
        if (label.find("Jr(r*)") != std::string::npos && c["direction"] == "below") {
            matched_below = true;
        }
        if (label.find("Jr(r*+0.1)") != std::string::npos && c["direction"] == "above") {
            offset_above = true;
        }
    }
    CHECK(matched_below);
    CHECK(offset_above);
}

TEST_CASE("verify output is deterministic in the seed and HPO_SEED is the default") {
    // Strip the wall-clock field; everything else is seed-determined.
    const auto canonical = [](const std::string& text) {
        Json j = Json::parse(text);
        for (auto& suite : j) {
            suite.erase("elapsed_seconds");
        }
        return j.dump();
    };

    const auto first = run(cli_path() + " verify --suite thm9 --seed 5 --format json");
    const auto second = run(cli_path() + " verify --suite thm9 --seed 5 --format json");
    CHECK(canonical(first.output) == canonical(second.output));

    const auto via_env = run("HPO_SEED=5 " + cli_path() + " verify --suite thm9 --format json");
    CHECK(canonical(via_env.output) == canonical(first.output));

    // An explicit flag wins over the environment.
    const auto flag_wins =
        run("HPO_SEED=9 " + cli_path() + " verify --suite thm9 --seed 5 --format json");
    CHECK(canonical(flag_wins.output) == canonical(first.output));

    // A different seed changes the sampled content but not the verdict.
    const auto other_seed = run(cli_path() + " verify --suite thm9 --seed 6 --format json");
    CHECK(canonical(other_seed.output) != canonical(first.output));
    CHECK(other_seed.exit_code == 0);
}

TEST_CASE("matrix dumps CSV and prints the frozen summary entries") {
    const auto identity =
        run(cli_path() + " matrix --a 1 --b-re 0 --b-im 0 --order 8 --emit cli_identity.csv");
    CHECK(identity.exit_code == 0);

    std::ifstream csv("cli_identity.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "m,n,re,im");
    int rows = 0;
    std::string line;
    double max_defect = 0.0;
    while (std::getline(csv, line)) {
        std::istringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');
        const int m = std::stoi(cell);
        std::getline(ss, cell, ',');
        const int n = std::stoi(cell);
        std::getline(ss, cell, ',');
        const double re = std::stod(cell);
        std::getline(ss, cell, ',');
        const double im = std::stod(cell);
        const double expected = (m == n) ? 1.0 : 0.0;
        max_defect = std::max({max_defect, std::abs(re - expected), std::abs(im)});
        ++rows;
    }
    CHECK(rows == 64);
    CHECK(max_defect <= 1e-12);

    const auto dilation = run(cli_path() + " matrix --a 2 --b-re 0 --b-im 0 --order 8");
    CHECK(dilation.exit_code == 0);
    CHECK(dilation.output.find("entry [0,0] = 0.666667") != std::string::npos);

    const auto wc = run(cli_path() + " matrix --conjugation Wc --c 0.6 --order 8");
    CHECK(wc.exit_code == 0);
    CHECK(wc.output.find("entry [0,0] = 0.800000") != std::string::npos);
}

TEST_CASE("matrix maps bad parameters to exit 2 and write failures to exit 4") {
    CHECK(run(cli_path() + " matrix --a -1 --b-re 0 --b-im 0 --order 8").exit_code == 2);
    CHECK(run(cli_path() + " matrix --a 2 --b-re 0 --b-im 0 --order 8 --radius 1.5").exit_code ==
          2);
    CHECK(run(cli_path() + " matrix --conjugation Jr --order 8").exit_code == 2);
    CHECK(run(cli_path() + " matrix --conjugation Wc --c 1.0 --order 8").exit_code == 2);
    CHECK(run(cli_path() + " matrix --conjugation Zz --order 8").exit_code == 2);
    CHECK(run(cli_path() +
              " matrix --a 1 --b-re 0 --b-im 0 --order 4 --emit /nonexistent/dir/out.csv")
              .exit_code == 4);
}

TEST_CASE("report executes a configured run and emits one JSON document") {
    write_file("cli_report_config.json", R"({
        "symbols": [[1.0, 2.0, 0.0], [2.0, 1.0, 0.0], {"a": 3.0, "b_re": 0.0, "b_im": 1.0}],
        "suites": ["thm9", "prop3"],
        "seed": 0,
        "scale": "quick",
        "format": "json"
    })");
    const auto result = run(cli_path() + " report --config cli_report_config.json");
    CHECK(result.exit_code == 0);
    const Json doc = parse_json(result.output);
    CHECK(doc["meta"]["seed"] == 0);
    CHECK(doc["meta"]["scale"] == "quick");
    CHECK(doc["meta"]["versions"].contains("hpo"));
    REQUIRE(doc["classifications"].size() == 3);
    for (const auto& entry : doc["classifications"]) {
        CHECK(entry["cross_validate_failures"] == 0);
    }
    REQUIRE(doc["suites"].size() == 2);
    for (const auto& suite : doc["suites"]) {
        CHECK(suite["pass"] == true);
    }

    // Round trip: parsing and re-serializing reproduces the document exactly.
    CHECK(doc.dump(2) + "\n" == result.output);
}

TEST_CASE("report with no symbols produces a suite-only document") {
    write_file("cli_report_suites_only.json", R"({"suites": ["thm9"], "seed": 1})");
    const auto result = run(cli_path() + " report --config cli_report_suites_only.json");
    CHECK(result.exit_code == 0);
    const Json doc = parse_json(result.output);
    CHECK(doc["classifications"].empty());
    REQUIRE(doc["suites"].size() == 1);
    CHECK(doc["suites"][0]["name"] == "thm9");
}

TEST_CASE("report rejects malformed configs naming the offending entry") {
    write_file("cli_report_bad_symbol.json", R"({"symbols": [[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0]]})");
    const auto bad_symbol = run(cli_path() + " report --config cli_report_bad_symbol.json");
    CHECK(bad_symbol.exit_code == 2);
    CHECK(bad_symbol.output.find("symbols[1]") != std::string::npos);

    write_file("cli_report_bad_suite.json", R"({"suites": ["thmX"]})");
    const auto bad_suite = run(cli_path() + " report --config cli_report_bad_suite.json");
    CHECK(bad_suite.exit_code == 2);
    CHECK(bad_suite.output.find("thmX") != std::string::npos);

    CHECK(run(cli_path() + " report --config does_not_exist.json").exit_code == 2);

    write_file("cli_report_not_json.json", "not json {");
    CHECK(run(cli_path() + " report --config cli_report_not_json.json").exit_code == 2);
}

TEST_CASE("report writes to the configured output path") {
    write_file("cli_report_to_file.json",
               R"({"suites": ["prop3"], "output_path": "cli_report_out.json"})");
    const auto result = run(cli_path() + " report --config cli_report_to_file.json");
    CHECK(result.exit_code == 0);
    std::ifstream written("cli_report_out.json");
    REQUIRE(written.good());
    Json doc;
    written >> doc;
    CHECK(doc["suites"][0]["name"] == "prop3");
}
