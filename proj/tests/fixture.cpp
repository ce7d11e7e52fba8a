#include "fixture.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace dfscan::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "dfscan-test-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
    path_ = buf.data();
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

std::string run_capture(const std::string& cmd) {
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("popen failed: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    return out;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
}

void write_file(const fs::path& p, ByteView content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out.write(reinterpret_cast<const char*>(content.data()),
              static_cast<std::streamsize>(content.size()));
}

Bytes read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

fs::path compile_c(const fs::path& dir, const std::string& stem, const std::string& source,
                   const std::string& flags) {
    fs::path src = dir / (stem + ".c");
    fs::path out = dir / stem;
    write_file(src, source);
    std::string cmd = "gcc " + flags + " -o " + out.string() + " " + src.string() + " 2>&1";
    if (run(cmd) != 0) throw std::runtime_error("gcc failed for " + src.string());
    return out;
}

fs::path make_deb(const fs::path& dir, const std::string& name, const std::string& version,
                  const std::vector<DebFile>& files) {
    fs::path root = dir / (name + ".pkgroot");
    fs::create_directories(root / "DEBIAN");
    write_file(root / "DEBIAN/control",
               "Package: " + name + "\nVersion: " + version +
                   "\nArchitecture: amd64\nMaintainer: test <test@example.org>\n"
                   "Description: fixture package\n");
    for (const auto& f : files) {
        fs::path dst = root / f.install_path;
        fs::create_directories(dst.parent_path());
        fs::copy_file(f.source, dst, fs::copy_options::overwrite_existing);
        fs::permissions(dst, f.executable ? fs::perms(0755) : fs::perms(0644));
    }
    fs::path deb = dir / (name + "_" + version + "_amd64.deb");
    std::string cmd = "dpkg-deb --root-owner-group -b " + root.string() + " " + deb.string() +
                      " >/dev/null 2>&1";
    if (run(cmd) != 0) throw std::runtime_error("dpkg-deb failed for " + name);
    fs::remove_all(root);
    return deb;
}

OracleLoc addr2line(const fs::path& binary, std::uint64_t address) {
    char cmd[512];
    snprintf(cmd, sizeof cmd, "addr2line -e %s 0x%llx", binary.string().c_str(),
             static_cast<unsigned long long>(address));
    std::string out = run_capture(cmd);
    while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) out.pop_back();
    OracleLoc loc;
    auto colon = out.rfind(':');
    if (colon == std::string::npos) return loc;
    std::string file = out.substr(0, colon);
    std::string line = out.substr(colon + 1);
    // strip " (discriminator N)" suffixes
    if (auto sp = line.find(' '); sp != std::string::npos) line = line.substr(0, sp);
    if (file == "??" || line == "?" || line == "0" || line.empty()) return loc;
    loc.path = file;
    loc.line = static_cast<unsigned>(std::strtoul(line.c_str(), nullptr, 10));
    loc.known = loc.line != 0;
    return loc;
}

}  // namespace dfscan::testing
