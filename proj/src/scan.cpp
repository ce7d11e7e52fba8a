#include "dfscan/scan.hpp"

#include <algorithm>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dfscan/archive.hpp"
#include "dfscan/binobj.hpp"
#include "dfscan/decode.hpp"
#include "dfscan/elf.hpp"

namespace dfscan {

namespace {

std::string hex_lower(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (auto x : b) {
        s += digits[x >> 4];
        s += digits[x & 15];
    }
    return s;
}

const FunctionSpan* function_at(const std::vector<FunctionSpan>& fns, std::uint64_t addr) {
    auto it = std::upper_bound(fns.begin(), fns.end(), addr,
                               [](std::uint64_t a, const FunctionSpan& f) { return a < f.start; });
    if (it == fns.begin()) return nullptr;
    --it;
    if (it->size > 0 && addr >= it->start + it->size) return nullptr;
    return &*it;
}

void scan_image(const ElfImage& image, IsaMode isa_mode,
                const std::optional<Bytes>& debug_companion, BinaryReport& report,
                WarningList* warnings, std::vector<TargetHit>* hits) {
    if (image.machine != Machine::x86_64) return;  // counted, zero hits
    auto table = load_line_table(image, debug_companion, warnings);
    for (const auto& range : image.exec_ranges) {
        LinearDecoder dec(ByteView(range.bytes), range.vaddr);
        while (auto ev = dec.next()) {
            if (!std::holds_alternative<Instruction>(*ev)) continue;
            const Instruction& inst = std::get<Instruction>(*ev);
            report.n_instructions++;
            auto hit = classify(inst, isa_mode);
            if (!hit) continue;
            if (table)
                if (auto loc = table->resolve(inst.address)) hit->lineage = std::move(loc);
            const FunctionSpan* fn = function_at(image.functions, inst.address);
            report.add_hit(*hit, fn ? fn->name : std::string{});
            if (hits) hits->push_back(std::move(*hit));
        }
    }
}

}  // namespace

BinaryReport scan_binary_content(ByteView content, const std::string& path,
                                 const std::string& package, BinaryKind kind, IsaMode isa_mode,
                                 const std::optional<Bytes>& debug_companion,
                                 WarningList* warnings, std::vector<TargetHit>* hits) {
    BinaryReport report;
    report.binary_path = path;
    report.package = package;
    try {
        if (kind == BinaryKind::static_archive) {
            // One archive counts as one binary file: member union.
            for (auto& [member, bytes] : unpack_static_archive(content)) {
                if (!ElfFile::has_elf_magic(ByteView(bytes))) continue;
                ElfImage img = load_elf(ByteView(bytes), kind);
                scan_image(img, isa_mode, debug_companion, report, warnings, hits);
            }
        } else {
            ElfImage img = load_elf(content, kind);
            scan_image(img, isa_mode, debug_companion, report, warnings, hits);
        }
    } catch (const Error& e) {
        // Undecodable binaries stay in the denominator with zero hits.
        if (warnings) warnings->push_back({path, e.what()});
    }
    return report;
}

BinaryReport scan_binary_file(const std::filesystem::path& file, IsaMode isa_mode, bool force,
                              WarningList* warnings, std::vector<TargetHit>* hits) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error("cannot read " + file.string());
    Bytes content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::error_code ec;
    auto status = std::filesystem::status(file, ec);
    unsigned mode_bits = 0;
    if (!ec && (status.permissions() & std::filesystem::perms::owner_exec) !=
                   std::filesystem::perms::none)
        mode_bits = 0755;

    auto kind = detect_binary(file.string(), mode_bits, ByteView(content));
    if (!kind) {
        if (!force) throw NotABinary(file.string() + " is not a binary file");
        kind = looks_like_ar(ByteView(content)) ? BinaryKind::static_archive
                                                : BinaryKind::executable;
    }
    return scan_binary_content(ByteView(content), file.string(), file.filename().string(), *kind,
                               isa_mode, std::nullopt, warnings, hits);
}

std::optional<Bytes> find_debug_companion(const std::vector<FileEntry>& entries,
                                          const Bytes& build_id) {
    if (build_id.empty()) return std::nullopt;
    std::string hex = hex_lower(build_id);
    // /usr/lib/debug/.build-id/ab/cdef...debug
    std::string needle = hex.substr(0, 2) + "/" + hex.substr(2) + ".debug";
    for (const auto& e : entries)
        if (e.path.size() >= needle.size() &&
            e.path.compare(e.path.size() - needle.size(), needle.size(), needle) == 0)
            return e.content;
    return std::nullopt;
}

void scan_package(const PackageArchive& pkg, IsaMode isa_mode,
                  const std::vector<FileEntry>* debug_entries, CorpusReport& out,
                  WarningList* warnings) {
    out.add_package(pkg.meta.name);
    for (const auto& entry : pkg.entries) {
        auto kind = detect_binary(entry.path, entry.mode_bits, ByteView(entry.content));
        if (!kind) continue;
        std::optional<Bytes> companion;
        if (debug_entries && *kind != BinaryKind::static_archive) {
            try {
                ElfFile elf = ElfFile::parse(ByteView(entry.content));
                if (auto id = elf.build_id()) companion = find_debug_companion(*debug_entries, *id);
            } catch (const Error&) {
                // fall through: scan without a companion
            }
        }
        out.add_binary(scan_binary_content(ByteView(entry.content), entry.path, pkg.meta.name,
                                           *kind, isa_mode, companion, warnings));
    }
}

namespace {

struct PackageResult {
    CorpusReport report;
    WarningList warnings;
};

PackageResult scan_one_item(const CorpusItem& item, const ScanConfig& config,
                            DebugFetcher* fetcher) {
    PackageResult res;
    try {
        std::ifstream in(item.file, std::ios::binary);
        if (!in) throw Error("cannot read " + item.file.string());
        Bytes raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        PackageArchive pkg = open_package(ByteView(raw), item.meta);

        std::optional<PackageArchive> debug_pkg;
        if (fetcher) {
            if (auto ddeb = fetcher->fetch(item.meta, &res.warnings)) {
                try {
                    // the companion's control names the -dbgsym package
                    PackageMeta debug_meta = item.meta;
                    debug_meta.name += "-dbgsym";
                    debug_pkg = open_package(ByteView(*ddeb), debug_meta);
                } catch (const Error& e) {
                    res.warnings.push_back({item.meta.name, e.what()});
                }
            }
        }
        scan_package(pkg, config.isa_mode, debug_pkg ? &debug_pkg->entries : nullptr, res.report,
                     &res.warnings);
    } catch (const Error& e) {
        res.warnings.push_back({item.file.string(), e.what()});
        res.report.add_package(item.meta.name);  // package stays in the denominator
    }
    return res;
}

CorpusReport scan_items(const std::vector<CorpusItem>& items, const ScanConfig& config,
                        WarningList* warnings, bool parallel) {
    std::vector<PackageResult> results(items.size());

    // The debug fetcher rate-limits and keeps request state; network access
    // stays serial even in the parallel scan.
    std::optional<DebugFetcher> fetcher;
    if (config.debug_source)
        fetcher.emplace(*config.debug_source,
                        std::chrono::milliseconds(config.request_delay_ms));

    if (parallel && !config.debug_source) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(config.jobs, 1))
#endif
        for (std::size_t i = 0; i < items.size(); ++i)
            results[i] = scan_one_item(items[i], config, nullptr);
    } else {
        for (std::size_t i = 0; i < items.size(); ++i)
            results[i] = scan_one_item(items[i], config, fetcher ? &*fetcher : nullptr);
    }

    CorpusReport merged;
    for (auto& r : results) {
        merged = CorpusReport::merge(merged, r.report);
        if (warnings)
            warnings->insert(warnings->end(), r.warnings.begin(), r.warnings.end());
    }
    return merged;
}

}  // namespace

CorpusReport scan_corpus(const ScanConfig& config, WarningList* warnings) {
    auto items = enumerate_corpus(config.corpus_root, warnings);
    return scan_items(items, config, warnings, true);
}

CorpusReport scan_corpus_serial(const ScanConfig& config, WarningList* warnings) {
    auto items = enumerate_corpus(config.corpus_root, warnings);
    return scan_items(items, config, warnings, false);
}

}  // namespace dfscan
