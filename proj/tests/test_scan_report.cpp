#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "dfscan/binobj.hpp"
#include "dfscan/report.hpp"
#include "dfscan/scan.hpp"
#include "fixture.hpp"

using namespace dfscan;
using namespace dfscan::testing;

namespace {

const char* kVectorSource =
    "float mix(float a, float b) { return a * 0.5f + b * 0.5f; }\n"
    "int main(void) { return (int)mix(1.0f, 2.0f); }\n";

const char* kIntSource =
    "int add(int a, int b) { return a + b; }\n"
    "int main(void) { return add(20, 22); }\n";

std::string hex_of(const Bytes& b) {
    static const char* d = "0123456789abcdef";
    std::string s;
    for (auto x : b) {
        s += d[x >> 4];
        s += d[x & 15];
    }
    return s;
}

// Three packages: one with SSE code, one integer-only, one with no binary.
void build_fixture_corpus(const std::filesystem::path& dir) {
    TempDir work;
    auto vec = compile_c(work.path(), "vecprog", kVectorSource, "-O0");
    auto intp = compile_c(work.path(), "intprog", kIntSource, "-O0");
    write_file(work / "tool.sh", std::string("#!/bin/sh\nexit 0\n"));
    make_deb(dir, "alpha-vec", "1.0", {{"usr/bin/vecprog", vec, true}});
    make_deb(dir, "beta-int", "1.0", {{"usr/bin/intprog", intp, true}});
    make_deb(dir, "gamma-scripts", "1.0", {{"usr/bin/tool.sh", work / "tool.sh", true}});
}

std::vector<std::pair<std::string, Bytes>> slurp_dir(const std::filesystem::path& dir) {
    std::vector<std::pair<std::string, Bytes>> out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        out.emplace_back(e.path().filename().string(), read_file(e.path()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("corpus scan: parallel and serial pipelines produce identical outputs") {
    TempDir tmp;
    auto corpus = tmp / "corpus";
    std::filesystem::create_directories(corpus);
    build_fixture_corpus(corpus);

    ScanConfig config;
    config.corpus_root = corpus;
    config.format = OutputFormat::both;

    WarningList w1, w2;
    CorpusReport serial = scan_corpus_serial(config, &w1);
    config.jobs = 4;
    CorpusReport parallel = scan_corpus(config, &w2);

    CHECK(serial.n_packages() == 3);
    CHECK(serial.n_binaries() == 2);  // the script package contributes none
    CHECK(serial.n_target_total() > 0);
    CHECK(serial.package_binary_ratio() == doctest::Approx(2.0 / 3.0));
    CHECK(serial.binary_target_ratio() == doctest::Approx(0.5));

    auto items = enumerate_corpus(corpus);
    std::string hash = corpus_content_hash(items);
    config.output_dir = tmp / "out-serial";
    write_reports(serial, config, {}, hash);
    config.output_dir = tmp / "out-parallel";
    write_reports(parallel, config, {}, hash);

    auto a = slurp_dir(tmp / "out-serial");
    auto b = slurp_dir(tmp / "out-parallel");
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == 15);  // 7 datasets x json+csv, plus the manifest
    for (std::size_t i = 0; i < a.size(); ++i) {
        CAPTURE(a[i].first);
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second == b[i].second);
    }
}

TEST_CASE("scan_binary_file applies detection and supports --force") {
    TempDir tmp;
    write_file(tmp / "run.py", std::string("#!/usr/bin/env python3\nprint(1)\n"));
    std::filesystem::permissions(tmp / "run.py", std::filesystem::perms(0755));
    CHECK_THROWS_AS(scan_binary_file(tmp / "run.py", IsaMode::encoding, false), NotABinary);
    // forced: scanned as a flat executable, yields a (probably hitless) report
    auto rep = scan_binary_file(tmp / "run.py", IsaMode::encoding, true);
    CHECK(rep.binary_path == (tmp / "run.py").string());

    auto exe = compile_c(tmp.path(), "v", kVectorSource, "-O0");
    auto vrep = scan_binary_file(exe, IsaMode::encoding, false);
    CHECK(vrep.n_target > 0);
    CHECK(vrep.class_counts[0] > 0);  // -O0 scalar float code is SSE
}

TEST_CASE("find_debug_companion matches the .build-id layout") {
    Bytes id{0xab, 0xcd, 0x12, 0x34};
    std::string readme = "x", debugelf = "DEBUGELF";
    std::vector<FileEntry> entries;
    entries.push_back({"/usr/share/doc/readme", 0644, Bytes(readme.begin(), readme.end())});
    entries.push_back({"/usr/lib/debug/.build-id/ab/cd1234.debug", 0644,
                       Bytes(debugelf.begin(), debugelf.end())});
    auto got = find_debug_companion(entries, id);
    REQUIRE(got);
    CHECK(as_string(ByteView(*got)) == "DEBUGELF");
    CHECK(!find_debug_companion(entries, Bytes{0xab, 0xcd, 0x12, 0x35}));
    CHECK(!find_debug_companion(entries, Bytes{}));
}

TEST_CASE("dbgsym companions restore lineage for stripped package binaries") {
    TempDir tmp;
    auto corpus = tmp / "corpus";
    auto ddebs = tmp / "ddebs";
    std::filesystem::create_directories(corpus);
    std::filesystem::create_directories(ddebs);

    TempDir work;
    auto exe = compile_c(work.path(), "prog", kVectorSource, "-g -O0");
    Bytes unstripped = read_file(exe);
    ElfImage img = load_elf(ByteView(unstripped), BinaryKind::pie_executable);
    REQUIRE(img.build_id);
    std::string hex = hex_of(*img.build_id);

    auto dbg = work / "prog.debug";
    REQUIRE(run("objcopy --only-keep-debug " + exe.string() + " " + dbg.string()) == 0);
    REQUIRE(run("strip " + exe.string()) == 0);

    make_deb(corpus, "mypkg", "1.0", {{"usr/bin/prog", exe, true}});
    std::string dbg_path =
        "usr/lib/debug/.build-id/" + hex.substr(0, 2) + "/" + hex.substr(2) + ".debug";
    auto deb = make_deb(work.path(), "mypkg-dbgsym", "1.0", {{dbg_path, dbg, false}});
    std::filesystem::rename(deb, ddebs / "mypkg-dbgsym_1.0_amd64.ddeb");

    ScanConfig config;
    config.corpus_root = corpus;
    WarningList warnings;
    CorpusReport without = scan_corpus_serial(config, &warnings);
    const BinaryReport& plain = without.packages().at("mypkg").at("/usr/bin/prog");
    CHECK(plain.n_target > 0);
    CHECK(plain.lineage_known == 0);  // stripped, no companion

    config.debug_source = ddebs.string();
    warnings.clear();
    CorpusReport with = scan_corpus_serial(config, &warnings);
    const BinaryReport& restored = with.packages().at("mypkg").at("/usr/bin/prog");
    CHECK(restored.n_target == plain.n_target);
    CHECK(restored.lineage_known > 0);
    for (const auto& w : warnings) CAPTURE(w.context + ": " + w.message);
    CHECK(warnings.empty());
}

TEST_CASE("undecodable package content degrades to a warning, not an error") {
    TempDir tmp;
    auto corpus = tmp / "corpus";
    std::filesystem::create_directories(corpus);
    write_file(corpus / "broken_1.0_amd64.deb", std::string("this is not an ar archive"));

    ScanConfig config;
    config.corpus_root = corpus;
    WarningList warnings;
    CorpusReport report = scan_corpus_serial(config, &warnings);
    CHECK(report.n_packages() == 1);  // stays in the denominator
    CHECK(report.n_binaries() == 0);
    CHECK(!warnings.empty());
}
