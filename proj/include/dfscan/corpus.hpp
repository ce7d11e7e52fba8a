#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dfscan/common.hpp"

namespace dfscan {

enum class RepoComponent { main, universe, multiverse, restricted, unknown };

RepoComponent repo_component_from_filename(std::string_view pool_path);

struct PackageMeta {
    std::string name;
    std::string version;
    RepoComponent repository_component = RepoComponent::unknown;
    std::string filename;  // relative pool path
    std::uint64_t size_bytes = 0;
    std::string sha256;  // 64 lowercase hex chars, or empty when unknown
};

struct FileEntry {
    std::string path;  // absolute-style, as stored in the data tarball
    unsigned mode_bits = 0;
    Bytes content;
};

struct PackageArchive {
    PackageMeta meta;
    std::vector<FileEntry> entries;
};

// Unpacks a .deb image: ar(debian-binary, control.tar.*, data.tar.*).
// Returns the regular files of the data tarball; the control tarball is
// only consulted to cross-check the package name.
PackageArchive open_package(ByteView raw, PackageMeta meta);

// Parses a blank-line-separated Packages index into metadata records.
std::vector<PackageMeta> parse_repo_index(std::string_view index_text);

struct CorpusItem {
    PackageMeta meta;
    std::filesystem::path file;
};

// Every *.deb under root, lexicographic by path. Metadata is synthesized
// from the filename; unreadable paths become warnings.
std::vector<CorpusItem> enumerate_corpus(const std::filesystem::path& root,
                                         WarningList* warnings = nullptr);

PackageMeta meta_from_deb_filename(const std::filesystem::path& file);

// Debug-companion lookup. Local directories are searched for
// <package>-dbgsym*.ddeb; remote sources go through `http_get` with at least
// `request_delay` between consecutive requests.
class DebugFetcher {
public:
    using HttpGet = std::function<std::optional<Bytes>(const std::string& url)>;
    using Clock = std::function<std::chrono::steady_clock::time_point()>;
    using Sleeper = std::function<void(std::chrono::milliseconds)>;

    explicit DebugFetcher(std::string source,
                          std::chrono::milliseconds request_delay = std::chrono::milliseconds(1000));

    // Test seams; default to real HTTP / steady_clock / sleep_for.
    void set_http_get(HttpGet get) { http_get_ = std::move(get); }
    void set_clock(Clock clock, Sleeper sleep);

    // Absent result means no companion exists; network trouble is reported
    // through `warnings` and also yields absent.
    std::optional<Bytes> fetch(const PackageMeta& meta, WarningList* warnings = nullptr);

private:
    std::string source_;
    bool remote_ = false;
    std::chrono::milliseconds delay_;
    std::optional<std::chrono::steady_clock::time_point> last_request_;
    HttpGet http_get_;
    Clock clock_;
    Sleeper sleep_;
};

}  // namespace dfscan
