// Benchmark: whole-corpus scan, OpenMP-parallel kernel vs the serial
// reference implementation, on a generated fixture corpus of real system
// binaries. Verifies both produce the same report before timing is trusted.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <thread>
#include <vector>

#include "dfscan/scan.hpp"
#include "fixture.hpp"

using namespace dfscan;
using namespace dfscan::testing;

namespace fs = std::filesystem;

namespace {

// Medium-sized ELF files from the system library directory: realistic decode
// workloads without multi-hundred-megabyte outliers.
std::vector<fs::path> pick_binaries(std::size_t want) {
    std::vector<fs::path> picks;
    std::error_code ec;
    for (fs::directory_iterator it("/usr/lib/x86_64-linux-gnu", ec), end;
         it != end && picks.size() < want; it.increment(ec)) {
        if (ec) break;
        if (!it->is_regular_file(ec)) continue;
        auto sz = it->file_size(ec);
        if (ec || sz < 100 * 1024 || sz > 8 * 1024 * 1024) continue;
        if (it->path().filename().string().find(".so") == std::string::npos) continue;
        picks.push_back(it->path());
    }
    return picks;
}

double time_scan(CorpusReport (*scan)(const ScanConfig&, WarningList*),
                 const ScanConfig& config, CorpusReport& out) {
    WarningList warnings;
    auto t0 = std::chrono::steady_clock::now();
    out = scan(config, &warnings);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n_packages = 16;
    std::size_t per_package = 2;
    if (argc > 1) n_packages = static_cast<std::size_t>(atoi(argv[1]));

    auto binaries = pick_binaries(n_packages * per_package);
    if (binaries.size() < n_packages * per_package) {
        n_packages = binaries.size() / per_package;
        if (n_packages == 0) {
            fprintf(stderr, "no suitable system libraries found\n");
            return 1;
        }
    }

    TempDir tmp;
    auto corpus = tmp / "corpus";
    fs::create_directories(corpus);
    printf("building %zu fixture packages (%zu binaries)...\n", n_packages,
           n_packages * per_package);
    for (std::size_t p = 0; p < n_packages; ++p) {
        std::vector<DebFile> files;
        for (std::size_t b = 0; b < per_package; ++b) {
            const auto& src = binaries[p * per_package + b];
            files.push_back({"usr/lib/" + src.filename().string(), src, false});
        }
        char name[32];
        snprintf(name, sizeof name, "bench-pkg-%03zu", p);
        make_deb(corpus, name, "1.0", files);
    }

    ScanConfig config;
    config.corpus_root = corpus;
    config.jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (config.jobs < 2) config.jobs = 2;

    CorpusReport warm, serial, parallel;
    time_scan(scan_corpus_serial, config, warm);  // page cache warm-up

    double t_serial = time_scan(scan_corpus_serial, config, serial);
    double t_parallel = time_scan(scan_corpus, config, parallel);

    bool equal = serial.n_packages() == parallel.n_packages() &&
                 serial.n_binaries() == parallel.n_binaries() &&
                 serial.n_target_total() == parallel.n_target_total();
    printf("\npackages=%zu binaries=%zu target_instructions=%llu\n", serial.n_packages(),
           serial.n_binaries(), static_cast<unsigned long long>(serial.n_target_total()));
    printf("serial reference : %8.3f s\n", t_serial);
    printf("openmp (%2d jobs) : %8.3f s   speedup %.2fx\n", config.jobs, t_parallel,
           t_serial / t_parallel);
    printf("reports identical: %s\n", equal ? "yes" : "NO");
    return equal ? 0 : 1;
}
