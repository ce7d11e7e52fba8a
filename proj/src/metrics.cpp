#include "dfscan/metrics.hpp"

#include <algorithm>

namespace dfscan {

void BinaryReport::add_hit(const TargetHit& hit, const std::string& function_name) {
    n_target++;
    class_counts[static_cast<std::size_t>(hit.isa_class)]++;
    mnemonic_counts[std::string(hit.mnemonic)]++;
    if (hit.lineage) {
        lineage_known++;
        if (is_shared_library_origin(*hit.lineage)) {
            lineage_library++;
            library_path_counts[hit.lineage->path]++;
        }
    }
    function_counts[function_name.empty() ? kUnattributed : function_name]++;
}

void CorpusReport::add_package(const std::string& package) { by_package_[package]; }

void CorpusReport::add_binary(BinaryReport report) {
    auto& pkg = by_package_[report.package];
    std::string path = report.binary_path;
    if (!pkg.emplace(path, std::move(report)).second)
        throw OverlapDetected("duplicate binary: " + path);
}

std::size_t CorpusReport::n_packages() const { return by_package_.size(); }

std::size_t CorpusReport::n_binaries() const {
    std::size_t n = 0;
    for (const auto& [_, bins] : by_package_) n += bins.size();
    return n;
}

std::uint64_t CorpusReport::n_target_total() const {
    std::uint64_t n = 0;
    for (const auto& [_, bins] : by_package_)
        for (const auto& [__, b] : bins) n += b.n_target;
    return n;
}

CorpusReport CorpusReport::merge(const CorpusReport& a, const CorpusReport& b) {
    CorpusReport out = a;
    for (const auto& [pkg, bins] : b.by_package_) {
        auto& dst = out.by_package_[pkg];
        for (const auto& [path, rep] : bins) {
            if (!dst.emplace(path, rep).second)
                throw OverlapDetected("binary in both reports: " + pkg + "/" + path);
        }
    }
    return out;
}

double CorpusReport::package_binary_ratio() const {
    if (by_package_.empty()) throw EmptyCorpus("no packages in corpus");
    std::size_t with = 0;
    for (const auto& [_, bins] : by_package_)
        if (!bins.empty()) with++;
    return static_cast<double>(with) / static_cast<double>(by_package_.size());
}

double CorpusReport::binary_target_ratio() const {
    std::size_t total = n_binaries();
    if (total == 0) throw EmptyCorpus("no binaries in corpus");
    std::size_t with = 0;
    for (const auto& [_, bins] : by_package_)
        for (const auto& [__, b] : bins)
            if (b.n_target > 0) with++;
    return static_cast<double>(with) / static_cast<double>(total);
}

std::vector<CorpusReport::IsaTriple> CorpusReport::isa_ratio_series() const {
    std::vector<IsaTriple> out;
    for (const auto& [_, bins] : by_package_) {
        for (const auto& [path, b] : bins) {
            if (b.n_target == 0) continue;
            double n = static_cast<double>(b.n_target);
            out.push_back({path, b.class_counts[0] / n, b.class_counts[1] / n,
                           b.class_counts[2] / n});
        }
    }
    std::sort(out.begin(), out.end(), [](const IsaTriple& a, const IsaTriple& b) {
        if (a.sse != b.sse) return a.sse > b.sse;
        return a.binary_path < b.binary_path;
    });
    return out;
}

namespace {

std::vector<std::pair<std::string, double>> top_k(
    const std::map<std::string, double>& weights, std::size_t k, double denom) {
    std::vector<std::pair<std::string, double>> rows(weights.begin(), weights.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (rows.size() > k) rows.resize(k);
    for (auto& [_, v] : rows) v = denom > 0 ? v / denom * 100.0 : 0.0;
    return rows;
}

}  // namespace

std::vector<std::pair<std::string, double>> CorpusReport::mnemonic_table(
    std::size_t k, bool per_binary_mean) const {
    std::map<std::string, double> weights;
    double denom = 0;
    if (per_binary_mean) {
        // Average of each hit-carrying binary's own mnemonic ratios.
        for (const auto& [_, bins] : by_package_) {
            for (const auto& [__, b] : bins) {
                if (b.n_target == 0) continue;
                denom += 1.0;
                for (const auto& [mn, c] : b.mnemonic_counts)
                    weights[mn] += static_cast<double>(c) / static_cast<double>(b.n_target);
            }
        }
    } else {
        for (const auto& [_, bins] : by_package_)
            for (const auto& [__, b] : bins)
                for (const auto& [mn, c] : b.mnemonic_counts) {
                    weights[mn] += static_cast<double>(c);
                    denom += static_cast<double>(c);
                }
    }
    return top_k(weights, k, denom);
}

std::vector<std::pair<std::string, double>> CorpusReport::library_share(std::size_t k) const {
    std::map<std::string, double> weights;
    double denom = 0;
    for (const auto& [_, bins] : by_package_)
        for (const auto& [__, b] : bins)
            for (const auto& [path, c] : b.library_path_counts) {
                weights[path] += static_cast<double>(c);
                denom += static_cast<double>(c);
            }
    return top_k(weights, k, denom);
}

PackageReport CorpusReport::package_detail(const std::string& package) const {
    auto it = by_package_.find(package);
    if (it == by_package_.end()) throw UnknownPackage("unknown package: " + package);
    PackageReport out;
    out.package = package;
    out.n_binaries = it->second.size();
    std::map<std::string, std::uint64_t> fn_counts;
    for (const auto& [_, b] : it->second) {
        out.n_target += b.n_target;
        if (b.n_target > 0) out.n_binaries_with_hits++;
        for (const auto& [fn, c] : b.function_counts) fn_counts[fn] += c;
    }
    if (out.n_target == 0) {
        out.f_max.kind = FMax::none;
        return out;
    }
    // The argmax ranges over real functions; the <unattributed> pool is not
    // a function name and cannot be F_MAX.
    fn_counts.erase(kUnattributed);
    if (fn_counts.empty()) {
        out.f_max.kind = FMax::none;
        return out;
    }
    std::uint64_t best = 0;
    for (const auto& [_, c] : fn_counts) best = std::max(best, c);
    std::vector<const std::string*> winners;
    for (const auto& [fn, c] : fn_counts)
        if (c == best) winners.push_back(&fn);
    if (winners.size() > 1) {
        out.f_max.kind = FMax::multiple;
    } else {
        out.f_max.kind = FMax::name;
        out.f_max.function = *winners.front();
    }
    return out;
}

std::optional<double> library_origin_ratio(const BinaryReport& b) {
    if (b.lineage_known == 0) return std::nullopt;
    return static_cast<double>(b.lineage_library) / static_cast<double>(b.lineage_known);
}

}  // namespace dfscan
