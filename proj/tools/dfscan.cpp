// dfscan: corpus scanner for vector-register instruction exposure.

#include <cstdio>

#include <CLI11.hpp>

#include "dfscan/report.hpp"
#include "dfscan/scan.hpp"

using namespace dfscan;

namespace {

int run_corpus_scan(const ScanConfig& config) {
    WarningList warnings;
    try {
        auto items = enumerate_corpus(config.corpus_root, &warnings);
        if (items.empty()) {
            fprintf(stderr, "error: no packages under %s\n", config.corpus_root.c_str());
            return 1;
        }
        CorpusReport report =
            config.jobs > 1 ? scan_corpus(config, &warnings) : scan_corpus_serial(config, &warnings);
        write_reports(report, config, warnings, corpus_content_hash(items));
        printf("packages: %zu  binaries: %zu  target instructions: %llu\n", report.n_packages(),
               report.n_binaries(),
               static_cast<unsigned long long>(report.n_target_total()));
        printf("outputs written to %s\n", config.output_dir.c_str());
        for (const auto& w : warnings)
            fprintf(stderr, "warning: %s: %s\n", w.context.c_str(), w.message.c_str());
        return warnings.empty() ? 0 : 2;
    } catch (const Error& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

int run_single(const std::string& file, IsaMode isa_mode, bool show_hits, bool force) {
    WarningList warnings;
    std::vector<TargetHit> hits;
    try {
        BinaryReport rep = scan_binary_file(file, isa_mode, force, &warnings, &hits);
        printf("file: %s\n", rep.binary_path.c_str());
        printf("instructions: %llu\ntarget instructions: %llu\n",
               static_cast<unsigned long long>(rep.n_instructions),
               static_cast<unsigned long long>(rep.n_target));
        printf("classes: sse=%llu avx=%llu other=%llu\n",
               static_cast<unsigned long long>(rep.class_counts[0]),
               static_cast<unsigned long long>(rep.class_counts[1]),
               static_cast<unsigned long long>(rep.class_counts[2]));
        printf("lineage: known=%llu library=%llu\n",
               static_cast<unsigned long long>(rep.lineage_known),
               static_cast<unsigned long long>(rep.lineage_library));
        if (auto r = library_origin_ratio(rep)) printf("library ratio: %.6f\n", *r);
        if (show_hits) {
            for (const auto& h : hits) {
                printf("%#10llx  %-12s %-17s %-5s", static_cast<unsigned long long>(h.address),
                       std::string(h.mnemonic).c_str(), target_mode_name(h.mode),
                       isa_class_name(h.isa_class));
                for (const auto& r : h.registers) printf(" %s", register_name(r).c_str());
                if (h.lineage) printf("  %s:%u", h.lineage->path.c_str(), h.lineage->line);
                printf("\n");
            }
        }
        for (const auto& w : warnings)
            fprintf(stderr, "warning: %s: %s\n", w.context.c_str(), w.message.c_str());
        return warnings.empty() ? 0 : 2;
    } catch (const NotABinary& e) {
        fprintf(stderr, "error: %s (use --force to scan anyway)\n", e.what());
        return 1;
    } catch (const Error& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"corpus scanner for vector-register instruction exposure"};
    app.require_subcommand(1);

    ScanConfig config;
    std::string corpus_root, debug_source, out_dir = "dfscan-out";
    std::string format = "both", isa_mode = "encoding";

    auto* scan = app.add_subcommand("scan", "scan a corpus of .deb packages");
    scan->add_option("corpus_root", corpus_root, "directory containing .deb files")->required();
    scan->add_option("--debug-source", debug_source, "local dir or URL with -dbgsym companions");
    scan->add_option("--out", out_dir, "output directory");
    scan->add_option("--format", format, "json|csv|both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    scan->add_option("--isa-mode", isa_mode, "encoding|extension")
        ->check(CLI::IsMember({"encoding", "extension"}));
    scan->add_option("--top-k", config.top_k, "rows in top-k tables")->check(CLI::PositiveNumber);
    scan->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--request-delay-ms", config.request_delay_ms,
                     "delay between remote debug fetches");
    scan->add_flag("--table3-per-binary-mean", config.table3_per_binary_mean,
                   "average per-binary mnemonic ratios instead of corpus-wide counts");

    std::string single_file;
    bool show_hits = false, force = false;
    auto* single = app.add_subcommand("scan-binary", "scan one binary file");
    single->add_option("file", single_file, "binary to scan")->required();
    single->add_option("--isa-mode", isa_mode, "encoding|extension")
        ->check(CLI::IsMember({"encoding", "extension"}));
    single->add_flag("--hits", show_hits, "list every target instruction");
    single->add_flag("--force", force, "scan even when binary detection rejects the file");

    auto* version = app.add_subcommand("version", "print the tool version");

    CLI11_PARSE(app, argc, argv);

    config.isa_mode = isa_mode == "extension" ? IsaMode::extension : IsaMode::encoding;

    if (version->parsed()) {
        printf("dfscan %s\n", kToolVersion);
        return 0;
    }
    if (single->parsed()) return run_single(single_file, config.isa_mode, show_hits, force);

    config.corpus_root = corpus_root;
    if (!debug_source.empty()) config.debug_source = debug_source;
    config.output_dir = out_dir;
    config.format = format == "json"  ? OutputFormat::json
                    : format == "csv" ? OutputFormat::csv
                                      : OutputFormat::both;
    return run_corpus_scan(config);
}
