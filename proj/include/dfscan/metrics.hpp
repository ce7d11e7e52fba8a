#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfscan/classify.hpp"
#include "dfscan/common.hpp"

namespace dfscan {

// Per-binary tallies; the unit the parallel scan produces and merges.
struct BinaryReport {
    std::string binary_path;
    std::string package;
    std::uint64_t n_instructions = 0;
    std::uint64_t n_target = 0;
    std::array<std::uint64_t, 3> class_counts{};  // indexed by IsaClass
    std::map<std::string, std::uint64_t> mnemonic_counts;
    std::uint64_t lineage_known = 0;
    std::uint64_t lineage_library = 0;
    std::map<std::string, std::uint64_t> library_path_counts;
    std::map<std::string, std::uint64_t> function_counts;

    void add_hit(const TargetHit& hit, const std::string& function_name);
};

// Reserved function name for hits outside every known function span.
inline constexpr const char* kUnattributed = "<unattributed>";

struct FMax {
    enum Kind { none, multiple, name } kind = none;
    std::string function;  // set only for kind == name

    bool operator==(const FMax&) const = default;
};

struct PackageReport {
    std::string package;
    std::uint64_t n_binaries = 0;
    std::uint64_t n_binaries_with_hits = 0;  // N_F
    std::uint64_t n_target = 0;              // N_T
    FMax f_max;
};

class CorpusReport {
public:
    void add_package(const std::string& package);
    void add_binary(BinaryReport report);  // OverlapDetected on duplicates

    std::size_t n_packages() const;
    std::size_t n_binaries() const;
    std::uint64_t n_target_total() const;

    const std::map<std::string, std::map<std::string, BinaryReport>>& packages() const {
        return by_package_;
    }

    static CorpusReport merge(const CorpusReport& a, const CorpusReport& b);

    // Table 2: packages with >=1 binary file / all packages.
    double package_binary_ratio() const;  // EmptyCorpus when no packages
    // Fig 4: binaries with >=1 hit / all binaries.
    double binary_target_ratio() const;  // EmptyCorpus when no binaries

    // Fig 5: per hit-carrying binary (ratio_sse, ratio_avx, ratio_other),
    // sorted by ratio_sse descending, ties by path.
    struct IsaTriple {
        std::string binary_path;
        double sse = 0, avx = 0, other = 0;
    };
    std::vector<IsaTriple> isa_ratio_series() const;

    // Table 3: top-k mnemonics as percentages. Corpus-wide counts by default;
    // per_binary_mean averages each binary's own ratio instead.
    std::vector<std::pair<std::string, double>> mnemonic_table(
        std::size_t k, bool per_binary_mean = false) const;

    // Fig 7: per-path share among library-origin hits, top-k.
    std::vector<std::pair<std::string, double>> library_share(std::size_t k) const;

    // Table 4 row.
    PackageReport package_detail(const std::string& package) const;  // UnknownPackage

private:
    std::map<std::string, std::map<std::string, BinaryReport>> by_package_;
};

// Library-origin hits / lineage-known hits; absent when none known.
std::optional<double> library_origin_ratio(const BinaryReport& b);

}  // namespace dfscan
