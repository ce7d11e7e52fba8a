#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dfscan/classify.hpp"
#include "dfscan/corpus.hpp"
#include "dfscan/metrics.hpp"

namespace dfscan {

enum class OutputFormat { json, csv, both };

struct ScanConfig {
    std::filesystem::path corpus_root;
    std::optional<std::string> debug_source;  // local dir or repository URL
    std::filesystem::path output_dir = "dfscan-out";
    OutputFormat format = OutputFormat::both;
    IsaMode isa_mode = IsaMode::encoding;
    int top_k = 10;
    int jobs = 1;
    int request_delay_ms = 1000;
    bool table3_per_binary_mean = false;  // Table 3 alternative aggregation
};

// One binary's scan: decode all executable ranges, classify, attribute
// lineage and containing function. `hits` (when non-null) receives the full
// hit list for single-file mode.
BinaryReport scan_binary_content(ByteView content, const std::string& path,
                                 const std::string& package, BinaryKind kind, IsaMode isa_mode,
                                 const std::optional<Bytes>& debug_companion,
                                 WarningList* warnings = nullptr,
                                 std::vector<TargetHit>* hits = nullptr);

// Single-file mode: applies detect_binary (bypassed by `force`, which scans
// as a plain executable) and runs the pipeline. Throws NotABinary.
BinaryReport scan_binary_file(const std::filesystem::path& file, IsaMode isa_mode, bool force,
                              WarningList* warnings = nullptr,
                              std::vector<TargetHit>* hits = nullptr);

// One package archive -> per-binary reports added to `out`.
void scan_package(const PackageArchive& pkg, IsaMode isa_mode,
                  const std::vector<FileEntry>* debug_entries, CorpusReport& out,
                  WarningList* warnings);

// Whole-corpus scan. The OpenMP path distributes packages across `jobs`
// workers; the serial path is the reference implementation the tests and the
// benchmark compare against. Both produce identical reports.
CorpusReport scan_corpus(const ScanConfig& config, WarningList* warnings);
CorpusReport scan_corpus_serial(const ScanConfig& config, WarningList* warnings);

// In the companion package's file list, the debug ELF whose path encodes
// `build_id` per the .build-id/xx/rest.debug layout (or any member whose
// embedded build-id matches). Absent when not found.
std::optional<Bytes> find_debug_companion(const std::vector<FileEntry>& entries,
                                          const Bytes& build_id);

}  // namespace dfscan
