#include "dfscan/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

#include "dfscan/archive.hpp"
#include "dfscan/decompress.hpp"

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

namespace dfscan {

namespace fs = std::filesystem;

RepoComponent repo_component_from_filename(std::string_view pool_path) {
    // pool/<component>/<shard>/<source>/<file>.deb
    if (pool_path.substr(0, 5) != "pool/") return RepoComponent::unknown;
    std::string_view rest = pool_path.substr(5);
    std::string_view comp = rest.substr(0, rest.find('/'));
    if (comp == "main") return RepoComponent::main;
    if (comp == "universe") return RepoComponent::universe;
    if (comp == "multiverse") return RepoComponent::multiverse;
    if (comp == "restricted") return RepoComponent::restricted;
    return RepoComponent::unknown;
}

namespace {

// "/./usr/bin/x" or "./usr/bin/x" -> "/usr/bin/x"; rejects traversal.
std::string normalize_entry_path(std::string_view raw) {
    std::vector<std::string_view> parts;
    size_t pos = 0;
    while (pos <= raw.size()) {
        size_t slash = raw.find('/', pos);
        std::string_view seg = raw.substr(pos, (slash == std::string_view::npos ? raw.size() : slash) - pos);
        if (seg == "..")
            throw MalformedArchive("package entry path contains '..': " + std::string(raw));
        if (!seg.empty() && seg != ".") parts.push_back(seg);
        if (slash == std::string_view::npos) break;
        pos = slash + 1;
    }
    std::string out;
    for (auto seg : parts) {
        out += '/';
        out += seg;
    }
    return out;
}

Codec codec_of_member(const std::string& member, std::string_view stem) {
    std::string_view name = member;
    if (name.substr(0, stem.size()) != stem) throw MalformedArchive("unexpected member name: " + member);
    std::string_view suffix = name.substr(stem.size());
    if (!suffix.empty()) {
        if (suffix[0] != '.') throw MalformedArchive("unexpected member name: " + member);
        suffix.remove_prefix(1);
    }
    auto codec = codec_from_suffix(suffix);
    if (!codec)
        throw UnsupportedCompression("unsupported tarball codec ." + std::string(suffix) + " in " + member);
    return *codec;
}

std::map<std::string, std::string> parse_control_stanza(std::string_view text) {
    std::map<std::string, std::string> kv;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
        if (line.empty()) break;
        if (line[0] == ' ' || line[0] == '\t') continue;  // continuation
        size_t colon = line.find(':');
        if (colon == std::string_view::npos) continue;
        std::string_view val = line.substr(colon + 1);
        while (!val.empty() && val.front() == ' ') val.remove_prefix(1);
        kv.emplace(std::string(line.substr(0, colon)), std::string(val));
    }
    return kv;
}

}  // namespace

PackageArchive open_package(ByteView raw, PackageMeta meta) {
    if (!looks_like_ar(raw)) throw MalformedArchive("not an ar container");
    auto members = parse_ar(raw);
    if (members.size() < 3 || members[0].name != "debian-binary" ||
        members[1].name.substr(0, 11) != "control.tar" ||
        members[2].name.substr(0, 8) != "data.tar")
        throw MalformedArchive("missing debian-binary/control/data members");

    // Cross-check the package name against the control file.
    Codec ctl_codec = codec_of_member(members[1].name, "control.tar");
    auto control_entries = parse_tar(decompress(members[1].data, ctl_codec));
    for (const auto& e : control_entries) {
        if (e.path != "control" && e.path != "./control") continue;
        auto kv = parse_control_stanza(as_string(e.content));
        auto it = kv.find("Package");
        if (it != kv.end()) {
            if (meta.name.empty())
                meta.name = it->second;
            else if (meta.name != it->second)
                throw MalformedArchive("package name mismatch: meta says '" + meta.name +
                                       "', control says '" + it->second + "'");
        }
        if (auto v = kv.find("Version"); v != kv.end() && meta.version.empty())
            meta.version = v->second;
        break;
    }

    Codec data_codec = codec_of_member(members[2].name, "data.tar");
    auto tar_entries = parse_tar(decompress(members[2].data, data_codec));

    PackageArchive archive;
    archive.meta = std::move(meta);
    std::map<std::string, size_t> by_path;  // last occurrence wins
    for (auto& e : tar_entries) {
        if (e.type != '0') continue;
        FileEntry fe;
        fe.path = normalize_entry_path(e.path);
        fe.mode_bits = e.mode_bits;
        fe.content = std::move(e.content);
        auto [it, inserted] = by_path.emplace(fe.path, archive.entries.size());
        if (inserted)
            archive.entries.push_back(std::move(fe));
        else
            archive.entries[it->second] = std::move(fe);
    }
    return archive;
}

std::vector<PackageMeta> parse_repo_index(std::string_view index_text) {
    std::vector<PackageMeta> out;
    std::map<std::string, std::string> kv;
    bool in_stanza = false;

    auto flush = [&] {
        if (kv.count("Package") && kv.count("Version") && kv.count("Filename")) {
            PackageMeta m;
            m.name = kv["Package"];
            m.version = kv["Version"];
            m.filename = kv["Filename"];
            m.repository_component = repo_component_from_filename(m.filename);
            if (auto it = kv.find("Size"); it != kv.end())
                m.size_bytes = std::strtoull(it->second.c_str(), nullptr, 10);
            if (auto it = kv.find("SHA256"); it != kv.end()) {
                std::string h = it->second;
                std::transform(h.begin(), h.end(), h.begin(),
                               [](unsigned char c) { return std::tolower(c); });
                m.sha256 = h;
            }
            out.push_back(std::move(m));
        }
        kv.clear();
        in_stanza = false;
    };

    size_t pos = 0;
    while (pos <= index_text.size()) {
        size_t eol = index_text.find('\n', pos);
        std::string_view line =
            index_text.substr(pos, (eol == std::string_view::npos ? index_text.size() : eol) - pos);
        bool last = (eol == std::string_view::npos);
        pos = last ? index_text.size() + 1 : eol + 1;

        if (line.empty()) {
            if (in_stanza) flush();
            continue;
        }
        if (line[0] == ' ' || line[0] == '\t') {
            if (!in_stanza) throw MalformedStanza("continuation line before any key");
            continue;  // multi-line value body, not needed here
        }
        size_t colon = line.find(':');
        if (colon == std::string_view::npos) throw MalformedStanza("line without ':'");
        std::string key(line.substr(0, colon));
        if (key == "Package" && kv.count("Package"))
            throw MalformedStanza("duplicate Package key within a stanza");
        std::string_view val = line.substr(colon + 1);
        while (!val.empty() && val.front() == ' ') val.remove_prefix(1);
        kv[key] = std::string(val);
        in_stanza = true;
    }
    if (in_stanza) flush();
    return out;
}

PackageMeta meta_from_deb_filename(const fs::path& file) {
    PackageMeta m;
    std::string stem = file.stem().string();  // name_version_arch
    size_t first = stem.find('_');
    m.name = stem.substr(0, first);
    if (first != std::string::npos) {
        size_t second = stem.find('_', first + 1);
        std::string ver = stem.substr(first + 1, second == std::string::npos
                                                     ? std::string::npos
                                                     : second - first - 1);
        // un-escape %3a (epoch colon) as used in pool filenames
        for (size_t p; (p = ver.find("%3a")) != std::string::npos;) ver.replace(p, 3, ":");
        m.version = ver;
    }
    m.filename = file.filename().string();
    std::error_code ec;
    auto sz = fs::file_size(file, ec);
    if (!ec) m.size_bytes = sz;
    return m;
}

std::vector<CorpusItem> enumerate_corpus(const fs::path& root, WarningList* warnings) {
    std::vector<fs::path> debs;
    std::error_code ec;
    for (fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec), end;
         it != end; it.increment(ec)) {
        if (ec) {
            if (warnings) warnings->push_back({root.string(), "enumeration error: " + ec.message()});
            break;
        }
        if (!it->is_regular_file(ec)) continue;
        if (it->path().extension() == ".deb") debs.push_back(it->path());
    }
    std::sort(debs.begin(), debs.end());
    std::vector<CorpusItem> items;
    items.reserve(debs.size());
    for (const auto& p : debs) items.push_back({meta_from_deb_filename(p), p});
    return items;
}

DebugFetcher::DebugFetcher(std::string source, std::chrono::milliseconds request_delay)
    : source_(std::move(source)), delay_(request_delay) {
    remote_ = source_.rfind("http://", 0) == 0 || source_.rfind("https://", 0) == 0;
    clock_ = [] { return std::chrono::steady_clock::now(); };
    sleep_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
    http_get_ = [](const std::string& url) -> std::optional<Bytes> {
        size_t scheme_end = url.find("://");
        if (scheme_end == std::string::npos) return std::nullopt;
        size_t host_end = url.find('/', scheme_end + 3);
        std::string origin = url.substr(0, host_end);
        std::string path = host_end == std::string::npos ? "/" : url.substr(host_end);
        httplib::Client cli(origin);
        cli.set_follow_location(true);
        if (const char* proxy = std::getenv(url.rfind("https", 0) == 0 ? "https_proxy" : "http_proxy")) {
            std::string p(proxy);
            size_t se = p.find("://");
            std::string hostport = se == std::string::npos ? p : p.substr(se + 3);
            size_t colon = hostport.rfind(':');
            if (colon != std::string::npos) {
                cli.set_proxy(hostport.substr(0, colon), std::atoi(hostport.c_str() + colon + 1));
            }
        }
        auto res = cli.Get(path);
        if (!res || res->status != 200) return std::nullopt;
        return Bytes(res->body.begin(), res->body.end());
    };
}

void DebugFetcher::set_clock(Clock clock, Sleeper sleep) {
    clock_ = std::move(clock);
    sleep_ = std::move(sleep);
}

std::optional<Bytes> DebugFetcher::fetch(const PackageMeta& meta, WarningList* warnings) {
    if (source_.empty()) return std::nullopt;
    if (!remote_) {
        std::error_code ec;
        std::vector<fs::path> candidates;
        for (fs::directory_iterator it(source_, ec), end; it != end; it.increment(ec)) {
            if (ec) break;
            std::string fn = it->path().filename().string();
            if (fn.rfind(meta.name + "-dbgsym", 0) == 0 && it->path().extension() == ".ddeb")
                candidates.push_back(it->path());
        }
        std::sort(candidates.begin(), candidates.end());
        if (candidates.empty()) return std::nullopt;
        std::ifstream in(candidates.front(), std::ios::binary);
        if (!in) {
            if (warnings)
                warnings->push_back({candidates.front().string(), "unreadable debug companion"});
            return std::nullopt;
        }
        return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }

    // Remote fetch: symbol repositories are fragile, keep a spacing between
    // consecutive requests.
    if (last_request_) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock_() - *last_request_);
        if (elapsed < delay_) sleep_(delay_ - elapsed);
    }
    last_request_ = clock_();
    std::string url = source_ + "/" + meta.name + "-dbgsym_" + meta.version + "_amd64.ddeb";
    auto result = http_get_(url);
    if (!result && warnings)
        warnings->push_back({url, "debug companion fetch failed (retryable)"});
    return result;
}

}  // namespace dfscan
