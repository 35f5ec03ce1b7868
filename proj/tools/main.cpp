#include "hsing/report.hpp"
#include "hsing/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>

using namespace hsing;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hsing: graded hypersurface singularity calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string config_path;
    std::optional<long> window, max_n, max_entry, max_d;
    std::optional<std::uint64_t> node_limit;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--window", window, "Cohomology window L")->check(CLI::NonNegativeNumber);
    app.add_option("--max-n", max_n, "Exhaustive batteries: n bound")->check(CLI::NonNegativeNumber);
    app.add_option("--max-entry", max_entry, "Exhaustive batteries: entry bound")->check(CLI::PositiveNumber);
    app.add_option("--max-d", max_d, "Largest exponent for the mf battery")->check(CLI::Range(2L, 64L));
    app.add_option("--node-limit", node_limit, "Partition search node limit (0 = unlimited)");

    std::string weights, quiver_type, suite;
    long degree = 3;
    auto add_weights = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("weights", weights, "Comma-separated weights, e.g. 3,3,4")->required();
        return sub;
    };
    auto* analyze = add_weights("analyze", "Full report for a Fermat weight sequence");
    auto* group = add_weights("group", "Weight group structure");
    auto* decompose = add_weights("decompose", "Minimal ADE / nonpositive partitions and dimension bounds");
    auto* sod = add_weights("sod", "Semi-orthogonal decomposition summary");
    auto* quiver = app.add_subcommand("quiver", "Cartan and Coxeter data of a Dynkin quiver or tensor product");
    quiver->add_option("type", quiver_type, "e.g. D4 or A2xA3")->required();
    auto* mf = app.add_subcommand("mf", "Standard factorizations of x^d");
    mf->add_option("d", degree, "Exponent d >= 2")->required()->check(CLI::Range(2L, 64L));
    auto* orbit = app.add_subcommand("orbit", "Orbit hom identity for x^d + y^d");
    orbit->add_option("d", degree, "Exponent d >= 2 (default 3)")->check(CLI::Range(2L, 16L));
    auto* verify = app.add_subcommand("verify", "Run a verification battery");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("suite", suite, "Battery name")->required()->check(CLI::IsMember(suite_choices));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        Config cfg = config_path.empty() ? Config{} : load_config(config_path);
        if (window) cfg.window = *window;
        if (max_n) cfg.max_n = *max_n;
        if (max_entry) cfg.max_entry = *max_entry;
        if (max_d) cfg.max_d = *max_d;
        if (node_limit) cfg.node_limit = *node_limit;

        Json input, results;
        std::string command;
        int rc = kExitOk;
        if (analyze->parsed() || group->parsed() || decompose->parsed() || sod->parsed()) {
            const WeightSequence d = WeightSequence::parse(weights);
            input = {{"weights", sequence_json(d)}, {"raw", weights}};
            if (analyze->parsed()) {
                command = "analyze";
                results = analyze_results(d, cfg);
            } else if (group->parsed()) {
                command = "group";
                results = group_results(d);
            } else if (decompose->parsed()) {
                command = "decompose";
                results = decompose_results(d, cfg);
            } else {
                command = "sod";
                results = sod_results(d);
            }
        } else if (quiver->parsed()) {
            command = "quiver";
            input = {{"type", quiver_type}};
            results = quiver_results(quiver_type);
        } else if (mf->parsed()) {
            command = "mf";
            input = {{"d", degree}};
            results = mf_results(degree, cfg);
        } else if (orbit->parsed()) {
            command = "orbit";
            input = {{"d", degree}};
            results = orbit_results(degree, cfg);
            if (!results["holds"].get<bool>()) rc = kExitVerifyFailed;
        } else {
            command = "verify";
            input = {{"suite", suite}};
            results = run_suite(suite, cfg);
            if (!results["passed"].get<bool>()) rc = kExitVerifyFailed;
        }
        const Json report = make_report(command, input, results, {{"config", config_json(cfg)}});
        if (format == "json")
            std::cout << report.dump(2) << "\n";
        else
            std::cout << render_text(report);
        return rc;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
