#pragma once

// Test fixtures built with system tooling (gcc, dpkg-deb, objcopy, ...) so
// the artifacts under test come from an independent producer.

#include <filesystem>
#include <string>
#include <vector>

#include "dfscan/common.hpp"

namespace dfscan::testing {

// Self-deleting scratch directory.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

private:
    std::filesystem::path path_;
};

// Runs a shell command; returns its exit status.
int run(const std::string& cmd);

// Runs a shell command and returns captured stdout. Throws on spawn failure.
std::string run_capture(const std::string& cmd);

void write_file(const std::filesystem::path& p, const std::string& content);
void write_file(const std::filesystem::path& p, ByteView content);
Bytes read_file(const std::filesystem::path& p);

// Compiles a C source string with the system gcc. Returns the output path.
std::filesystem::path compile_c(const std::filesystem::path& dir, const std::string& stem,
                                const std::string& source, const std::string& flags);

// A file to place into a fixture package.
struct DebFile {
    std::string install_path;       // e.g. "usr/bin/tool"
    std::filesystem::path source;   // local file to copy in
    bool executable = true;
};

// Builds <name>_<version>_amd64.deb under `dir` with dpkg-deb. Returns the
// .deb path.
std::filesystem::path make_deb(const std::filesystem::path& dir, const std::string& name,
                               const std::string& version, const std::vector<DebFile>& files);

// addr2line oracle: FILE:LINE for an address, or empty when unknown ("??").
struct OracleLoc {
    std::string path;
    unsigned line = 0;
    bool known = false;
};
OracleLoc addr2line(const std::filesystem::path& binary, std::uint64_t address);

}  // namespace dfscan::testing
