// levi: invariants of binomial edge ideals of Levi graphs, from the command line.
//
//   levi validate <file|catalog-name> [--json]
//   levi report   <file|catalog-name> [--powers t] [--cap n] [--threads n] [--json]
//   levi gen      <catalog-name> [--k n] [--d n] [--p n] [-o file]
//   levi cutsets  <file|catalog-name> [--list] [--cap n] [--threads n] [--json]
//   levi catalog
//
// Exit codes: 0 success, 1 validation failure, 2 usage, parse or resource error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "levi/arrangement_io.hpp"
#include "levi/catalog.hpp"
#include "levi/errors.hpp"
#include "levi/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct TargetArgs {
    std::string target;
    std::map<std::string, int> params;

    void add_to(CLI::App* cmd) {
        cmd->add_option("target", target, "arrangement file or catalog name")->required();
        for (const char* key : {"k", "d", "n", "p"}) {
            cmd->add_option_function<int>(std::string("--") + key,
                                          [this, key](const int& v) { params[key] = v; },
                                          std::string("catalog parameter ") + key);
        }
    }
};

levi::CatalogEntry resolve(const TargetArgs& args) {
    if (std::filesystem::is_regular_file(args.target)) {
        auto arr = levi::read_arrangement(args.target);
        return {std::filesystem::path(args.target).stem().string(), std::move(arr), args.target};
    }
    return levi::make_catalog_entry(args.target, args.params);
}

int cmd_validate(const TargetArgs& args, bool json) {
    const auto entry = resolve(args);
    levi::ValidationReport report;
    if (const auto* arr = std::get_if<levi::Arrangement>(&entry.payload)) {
        report = levi::validate(*arr);
    } else if (const auto* counts = std::get_if<levi::CountOnlyDataset>(&entry.payload)) {
        report = levi::validate_counts_only(counts->counts, counts->params);
    } else {
        std::cerr << "levi: '" << entry.name << "' is a graph fixture, not an arrangement\n";
        return kExitUsage;
    }
    std::cout << (json ? levi::render_validation_json(entry.name, report)
                       : levi::render_validation_text(entry.name, report));
    return report.passed() ? kExitOk : kExitFailed;
}

int cmd_report(const TargetArgs& args, const levi::ReportOptions& options, bool json) {
    const auto subject = levi::subject_from_entry(resolve(args));
    const auto report = levi::build_report(subject, options);
    std::cout << (json ? levi::render_json(report) : levi::render_text(report));
    return kExitOk;
}

int cmd_gen(const TargetArgs& args, const std::string& output) {
    const auto entry = levi::make_catalog_entry(args.target, args.params);
    const auto* arr = std::get_if<levi::Arrangement>(&entry.payload);
    if (!arr) {
        std::cerr << "levi: '" << entry.name << "' has no incidence data to write\n";
        return kExitUsage;
    }
    const std::string text = levi::emit_arrangement(*arr);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "levi: cannot write '" << output << "'\n";
            return kExitUsage;
        }
        out << text;
    }
    return kExitOk;
}

int cmd_cutsets(const TargetArgs& args, const levi::CutsetOptions& options, bool list, bool json) {
    const auto subject = levi::subject_from_entry(resolve(args));
    const auto cutsets = levi::enumerate_cutsets(subject.graph, options);
    std::cout << (json ? levi::render_cutsets_json(subject, cutsets, list)
                       : levi::render_cutsets_text(subject, cutsets, list));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial invariants of binomial edge ideals of Levi graphs"};
    app.require_subcommand(1);

    bool json = false;
    unsigned threads = 1;
    std::size_t cap = levi::default_cutset_cap;

    TargetArgs validate_args;
    auto* validate = app.add_subcommand("validate", "check the combinatorial count identities");
    validate_args.add_to(validate);
    validate->add_flag("--json", json, "structured output");

    TargetArgs report_args;
    levi::ReportOptions report_options;
    auto* report = app.add_subcommand("report", "full invariant report");
    report_args.add_to(report);
    report->add_option("--powers", report_options.powers, "regularity bounds for t = 1..powers")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    report->add_option("--cap", cap, "exact cutset enumeration cap (vertices)")->capture_default_str();
    report->add_option("--path-cap", report_options.paths.exact_cap, "exact induced-path search cap (vertices)")
        ->capture_default_str();
    report->add_option("--path-budget", report_options.paths.node_budget,
                       "search nodes per start vertex above the path cap")
        ->capture_default_str();
    report->add_flag("--longest-cycle", report_options.longest_cycle, "also search a longest induced cycle");
    report->add_option("--threads", threads, "worker threads")->capture_default_str();
    report->add_flag("--json", json, "structured output");

    TargetArgs gen_args;
    std::string output;
    auto* gen = app.add_subcommand("gen", "write a catalog arrangement in the arrangement format");
    gen_args.add_to(gen);
    gen->add_option("-o,--output", output, "output file (default: standard output)");

    TargetArgs cutset_args;
    bool list = false;
    auto* cutsets = app.add_subcommand("cutsets", "dump all cutsets");
    cutset_args.add_to(cutsets);
    cutsets->add_flag("--list", list, "also list the components of G \\ T");
    cutsets->add_option("--cap", cap, "exact cutset enumeration cap (vertices)")->capture_default_str();
    cutsets->add_option("--threads", threads, "worker threads")->capture_default_str();
    cutsets->add_flag("--json", json, "structured output");

    auto* catalog = app.add_subcommand("catalog", "list catalog names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(validate_args, json);
        if (*report) {
            report_options.cutsets = {cap, threads};
            report_options.paths.threads = threads;
            return cmd_report(report_args, report_options, json);
        }
        if (*gen) return cmd_gen(gen_args, output);
        if (*cutsets) return cmd_cutsets(cutset_args, {cap, threads}, list, json);
        if (*catalog) {
            for (const auto& name : levi::catalog_names()) std::cout << name << "\n";
            return kExitOk;
        }
    } catch (const levi::ParseError& e) {
        std::cerr << "levi: parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const levi::ResourceLimitError& e) {
        std::cerr << "levi: resource limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const levi::Error& e) {
        std::cerr << "levi: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
