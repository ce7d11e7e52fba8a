#pragma once

#include <string>

#include "dfscan/metrics.hpp"
#include "dfscan/scan.hpp"

namespace dfscan {

inline constexpr const char* kToolVersion = "0.1.0";

std::string sha256_hex(ByteView data);

// Order-independent digest over the corpus items' file contents.
std::string corpus_content_hash(const std::vector<CorpusItem>& items);

// Fig 6 series: per-binary library-origin ratio among lineage-known hits,
// descending, ties by path; binaries without known lineage are excluded.
std::vector<std::pair<std::string, double>> lineage_series(const CorpusReport& report);

// Writes the seven datasets plus the run manifest into config.output_dir.
// Returns the paths written. Throws Error when the directory is unwritable.
std::vector<std::filesystem::path> write_reports(const CorpusReport& report,
                                                 const ScanConfig& config,
                                                 const WarningList& warnings,
                                                 const std::string& corpus_hash);

}  // namespace dfscan
