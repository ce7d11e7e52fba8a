// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "decdiff_common.hpp"
#include "dfscan/binobj.hpp"
#include "dfscan/report.hpp"
#include "dfscan/scan.hpp"
#include "fixture.hpp"

using namespace dfscan;
using namespace dfscan::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail) {
    printf("%s: criterion %2d (%s): %s\n", ok ? "PASS" : "FAIL", criterion, what,
           detail.c_str());
    if (!ok) failures++;
}

TargetHit synth_hit(IsaClass cls, const char* mnemonic,
                    std::optional<SourceLoc> lineage = std::nullopt) {
    TargetHit h;
    h.isa_class = cls;
    h.mnemonic = mnemonic;
    h.registers = {RegisterRef{Bank::xmm, 0}};
    h.lineage = std::move(lineage);
    return h;
}

// ---- criterion 1: Fig-2 reproduction (scaled) -------------------------------

void criterion1() {
    auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        TempDir tmp;
        auto exe = compile_c(tmp.path(), "fig2",
                             "int main(void) {\n"
                             "    float pi = 3.14f;\n"
                             "    float x = pi * 2.0f;\n"
                             "    return (int)x;\n"
                             "}\n",
                             "-O0");
        std::vector<TargetHit> hits;
        BinaryReport rep = scan_binary_file(exe, IsaMode::encoding, false, nullptr, &hits);
        std::size_t good = 0;
        for (const auto& h : hits) {
            bool has_xmm = false;
            for (auto r : h.registers) has_xmm |= r.bank == Bank::xmm;
            if (h.mode == TargetMode::explicit_vector && h.isa_class == IsaClass::sse && has_xmm)
                ++good;
        }
        double dt = seconds_since(t0);
        ok = good >= 1 && dt < 5.0;
        char buf[160];
        snprintf(buf, sizeof buf,
                 "%zu sse/xmm explicit hits among %llu targets in %.2fs (limit 5s)", good,
                 static_cast<unsigned long long>(rep.n_target), dt);
        detail = buf;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(1, "scaled Fig-2 reproduction", ok, detail);
}

// ---- criterion 2: classifier oracle equivalence -----------------------------

void criterion2() {
    auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        DiffStats st;
        // realistic code: a compiled fixture's executable ranges
        TempDir tmp;
        auto exe = compile_c(tmp.path(), "real",
                             "#include <string.h>\n"
                             "float dot(const float* a, const float* b, int n) {\n"
                             "    float s = 0;\n"
                             "    for (int i = 0; i < n; ++i) s += a[i] * b[i];\n"
                             "    return s;\n"
                             "}\n"
                             "int main(void) {\n"
                             "    float v[8]; memset(v, 0, sizeof v);\n"
                             "    return (int)dot(v, v, 8);\n"
                             "}\n",
                             "-O2");
        ElfImage img = load_elf(ByteView(read_file(exe)), BinaryKind::pie_executable);
        for (const auto& r : img.exec_ranges) check_stream(ByteView(r.bytes), st, 0, 20);
        // plus random byte streams biased toward vector encodings
        std::mt19937 rng(42);
        while (st.insns < 10000) {
            Bytes code = gen_biased(rng, 4096);
            check_stream(ByteView(code), st, 0, 20);
        }
        double dt = seconds_since(t0);
        ok = st.insns >= 10000 && st.mismatches() == 0 && dt < 60.0;
        char buf[200];
        snprintf(buf, sizeof buf,
                 "%zu instructions, %zu disagreements vs objdump in %.1fs (limit 60s)",
                 st.insns, st.mismatches(), dt);
        detail = buf;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(2, "classifier oracle equivalence", ok, detail);
}

// ---- criterion 3: movsd disambiguation --------------------------------------

void criterion3() {
    auto classify_bytes = [](std::initializer_list<std::uint8_t> bytes)
        -> std::optional<TargetHit> {
        Bytes code(bytes);
        Instruction inst;
        if (!decode_one(ByteView(code), 0, inst)) return std::nullopt;
        return classify(inst);
    };
    auto sse = classify_bytes({0xF2, 0x0F, 0x10, 0xC1});
    auto rep = classify_bytes({0xF3, 0xA5});
    auto plain = classify_bytes({0xA5});
    bool ok = sse && sse->mode == TargetMode::explicit_vector && sse->isa_class == IsaClass::sse &&
              rep && rep->mode == TargetMode::implicit_rep_movs &&
              rep->isa_class == IsaClass::other && !plain;
    report(3, "movsd disambiguation", ok,
           ok ? "F2 0F 10 C1 -> explicit/sse; F3 A5 -> rep-movs/other; A5 -> no target"
              : "classification deviates from the required triple");
}

// ---- criterion 4: worked ratio example --------------------------------------

void criterion4() {
    BinaryReport r;
    r.binary_path = "/usr/bin/example";
    r.add_hit(synth_hit(IsaClass::sse, "movss", SourceLoc{"/usr/include/bits/s.h", 40}), "f");
    r.add_hit(synth_hit(IsaClass::sse, "addps", SourceLoc{"/home/dev/main.c", 12}), "f");
    r.add_hit(synth_hit(IsaClass::avx, "vaddps"), "f");
    auto ratio = library_origin_ratio(r);
    bool ok = ratio && *ratio == 0.5;
    report(4, "worked library-ratio example", ok,
           ratio ? "library/known = " + std::to_string(*ratio) : "no ratio produced");
}

// ---- criterion 5: F_MAX regimes ---------------------------------------------

void criterion5() {
    bool ok = false;
    std::string detail = "all three regimes reproduced";
    try {
        CorpusReport c;
        c.add_package("adduser");
        BinaryReport none;
        none.binary_path = "/usr/sbin/adduser";
        none.package = "adduser";
        none.n_instructions = 50;
        c.add_binary(none);

        c.add_package("libacl1");
        BinaryReport tied;
        tied.binary_path = "/usr/lib/libacl.so.1";
        tied.package = "libacl1";
        tied.add_hit(synth_hit(IsaClass::sse, "movss"), "acl_get");
        tied.add_hit(synth_hit(IsaClass::sse, "movss"), "acl_set");
        c.add_binary(tied);

        c.add_package("zlib1g");
        BinaryReport uniq;
        uniq.binary_path = "/usr/lib/libz.so.1";
        uniq.package = "zlib1g";
        uniq.add_hit(synth_hit(IsaClass::sse, "movss"), "inflate_fast");
        uniq.add_hit(synth_hit(IsaClass::sse, "movss"), "inflate_fast");
        uniq.add_hit(synth_hit(IsaClass::avx, "vaddps"), "deflate");
        c.add_binary(uniq);

        ok = c.package_detail("adduser").f_max == FMax{FMax::none, ""} &&
             c.package_detail("libacl1").f_max == FMax{FMax::multiple, ""} &&
             c.package_detail("zlib1g").f_max == FMax{FMax::name, "inflate_fast"};
        if (!ok) detail = "regime mismatch";
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(5, "Table-4 F_MAX regimes", ok, detail);
}

// ---- criterion 6: binary-detection rules ------------------------------------

void criterion6() {
    bool ok = false;
    std::string detail;
    try {
        TempDir tmp;
        auto pie = compile_c(tmp.path(), "pie", "int main(void){return 0;}\n", "-O0");
        auto so = compile_c(tmp.path(), "lib", "int f(void){return 1;}\n", "-shared -fPIC -O0");
        Bytes pie_bytes = read_file(pie), so_bytes = read_file(so);
        std::string script = "#!/usr/bin/env python3\nprint('x')\n";

        bool so_by_name =
            detect_binary("/usr/lib/liba.so", 0644, ByteView(so_bytes)) ==
                BinaryKind::shared_library &&
            detect_binary("/usr/lib/liba.so.1.2", 0644, ByteView(so_bytes)) ==
                BinaryKind::shared_library;
        bool script_rejected = !detect_binary("/usr/bin/run.py", 0755, as_bytes(script));
        bool pie_ok =
            detect_binary("/usr/bin/pie", 0755, ByteView(pie_bytes)) == BinaryKind::pie_executable;
        ok = so_by_name && script_rejected && pie_ok;
        detail = ok ? "liba.so/.so.1.2 accepted, exec-bit run.py rejected, PIE detected"
                    : "detection deviates from conditions (1)-(2)";
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(6, "binary-detection rules", ok, detail);
}

// ---- criteria 7/8: randomized invariants ------------------------------------

const char* kMnemonics[] = {"movss", "addps", "vaddps", "movsd", "pxor", "vpxor"};

BinaryReport random_report(std::mt19937& rng, const std::string& path, const std::string& pkg) {
    BinaryReport r;
    r.binary_path = path;
    r.package = pkg;
    std::uniform_int_distribution<int> n_hits(0, 10), cls(0, 2), mn(0, 5), fn(0, 3), lin(0, 2);
    static const char* fns[] = {"", "frob", "twiddle", "blit"};
    int hits = n_hits(rng);
    r.n_instructions = static_cast<std::uint64_t>(hits) * 5 + 9;
    for (int i = 0; i < hits; ++i) {
        std::optional<SourceLoc> loc;
        int l = lin(rng);
        if (l == 1) loc = SourceLoc{"/usr/include/lib.h", 10};
        if (l == 2) loc = SourceLoc{"/src/app.c", 20};
        r.add_hit(synth_hit(static_cast<IsaClass>(cls(rng)), kMnemonics[mn(rng)], loc),
                  fns[fn(rng)]);
    }
    return r;
}

void criterion7() {
    std::mt19937 rng(2024);
    std::size_t cases = 0, violations = 0;
    auto check_report = [&](const BinaryReport& r) {
        ++cases;
        std::uint64_t mn_sum = 0, fn_sum = 0, lib_sum = 0;
        for (const auto& [_, v] : r.mnemonic_counts) mn_sum += v;
        for (const auto& [_, v] : r.function_counts) fn_sum += v;
        for (const auto& [_, v] : r.library_path_counts) lib_sum += v;
        bool ok = r.class_counts[0] + r.class_counts[1] + r.class_counts[2] == r.n_target &&
                  mn_sum == r.n_target && fn_sum == r.n_target &&
                  lib_sum == r.lineage_library && r.lineage_library <= r.lineage_known &&
                  r.lineage_known <= r.n_target;
        if (!ok) ++violations;
    };

    CorpusReport corpus;
    corpus.add_package("p");
    int serial = 0;
    for (int i = 0; i < 1100; ++i) {
        BinaryReport r = random_report(rng, "/bin/r" + std::to_string(serial++), "p");
        check_report(r);
        if (r.n_target > 0) corpus.add_binary(r);
    }
    // scanned fixture reports obey the same partitions
    try {
        TempDir tmp;
        auto exe = compile_c(tmp.path(), "p7",
                             "float f(float a){return a*a+1.5f;}\n"
                             "int main(void){return (int)f(2.0f);}\n",
                             "-O1");
        check_report(scan_binary_file(exe, IsaMode::encoding, false));
    } catch (const std::exception&) {
        ++violations;
    }
    // Fig-5 triples sum to one
    for (const auto& t : corpus.isa_ratio_series())
        if (std::abs(t.sse + t.avx + t.other - 1.0) > 1e-12) ++violations;

    bool ok = cases >= 1000 && violations == 0;
    char buf[120];
    snprintf(buf, sizeof buf, "%zu cases, %zu violations", cases, violations);
    report(7, "partition and sum invariants", ok, buf);
}

void criterion8() {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> n_pkgs(0, 3), n_bins(0, 3);
    int serial = 0;
    auto random_corpus = [&](const std::string& tag) {
        CorpusReport c;
        int pkgs = n_pkgs(rng);
        for (int p = 0; p < pkgs; ++p) {
            std::string pkg = "pkg-" + tag + std::to_string(p);
            c.add_package(pkg);
            int bins = n_bins(rng);
            for (int b = 0; b < bins; ++b)
                c.add_binary(random_report(rng, "/bin/" + tag + std::to_string(serial++), pkg));
        }
        return c;
    };
    auto equal = [](const CorpusReport& a, const CorpusReport& b) {
        if (a.packages().size() != b.packages().size()) return false;
        auto ia = a.packages().begin();
        for (auto ib = b.packages().begin(); ib != b.packages().end(); ++ia, ++ib) {
            if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
            auto ja = ia->second.begin();
            for (auto jb = ib->second.begin(); jb != ib->second.end(); ++ja, ++jb) {
                const BinaryReport &x = ja->second, &y = jb->second;
                if (ja->first != jb->first || x.n_target != y.n_target ||
                    x.n_instructions != y.n_instructions || x.class_counts != y.class_counts ||
                    x.mnemonic_counts != y.mnemonic_counts ||
                    x.function_counts != y.function_counts ||
                    x.lineage_known != y.lineage_known ||
                    x.lineage_library != y.lineage_library ||
                    x.library_path_counts != y.library_path_counts)
                    return false;
            }
        }
        return true;
    };

    std::size_t cases = 0, violations = 0;
    for (int iter = 0; iter < 260; ++iter) {
        std::string t = std::to_string(iter);
        CorpusReport a = random_corpus("a" + t);
        CorpusReport b = random_corpus("b" + t);
        CorpusReport c = random_corpus("c" + t);
        CorpusReport empty;
        // identity, commutativity, associativity, single-pass equivalence
        cases += 4;
        if (!equal(CorpusReport::merge(a, empty), a)) ++violations;
        if (!equal(CorpusReport::merge(a, b), CorpusReport::merge(b, a))) ++violations;
        if (!equal(CorpusReport::merge(CorpusReport::merge(a, b), c),
                   CorpusReport::merge(a, CorpusReport::merge(b, c))))
            ++violations;
        // merging piecewise equals building in one pass
        CorpusReport once;
        for (const auto& src : {&a, &b, &c})
            for (const auto& [pkg, bins] : src->packages()) {
                once.add_package(pkg);
                for (const auto& [_, rep] : bins) once.add_binary(rep);
            }
        if (!equal(once, CorpusReport::merge(CorpusReport::merge(a, b), c))) ++violations;
    }
    bool ok = cases >= 1000 && violations == 0;
    char buf[120];
    snprintf(buf, sizeof buf, "%zu cases, %zu violations", cases, violations);
    report(8, "merge monoid laws", ok, buf);
}

// ---- criterion 9: decode tiling ---------------------------------------------

void criterion9() {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<int> len(0, 200);
    std::size_t cases = 0, violations = 0;
    for (int iter = 0; iter < 10500; ++iter) {
        Bytes code(static_cast<std::size_t>(len(rng)));
        for (auto& b : code) b = static_cast<std::uint8_t>(byte(rng));
        const std::uint64_t base = 0x1000;
        std::uint64_t cursor = base;
        bool ok = true;
        for (const auto& ev : decode_linear(ByteView(code), base)) {
            if (event_address(ev) != cursor) ok = false;
            unsigned l = event_length(ev);
            if (l < 1 || l > 15) ok = false;
            cursor += l;
        }
        if (cursor != base + code.size()) ok = false;
        ++cases;
        if (!ok) ++violations;
    }
    char buf[120];
    snprintf(buf, sizeof buf, "%zu random inputs, %zu tiling violations", cases, violations);
    report(9, "decode tiling", cases >= 10000 && violations == 0, buf);
}

// ---- criterion 10: end-to-end determinism -----------------------------------

void criterion10() {
    auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        TempDir tmp;
        auto corpus = tmp / "corpus";
        std::filesystem::create_directories(corpus);
        TempDir work;
        auto vec = compile_c(work.path(), "v",
                             "float g(float x){return x*0.25f;}\n"
                             "int main(void){return (int)g(8.0f);}\n",
                             "-g -O0");
        auto intp = compile_c(work.path(), "i", "int main(void){return 3;}\n", "-O0");
        write_file(work / "s.sh", std::string("#!/bin/sh\nexit 0\n"));
        make_deb(corpus, "aaa-vec", "1.0", {{"usr/bin/v", vec, true}});
        make_deb(corpus, "bbb-int", "1.0", {{"usr/bin/i", intp, true}});
        make_deb(corpus, "ccc-script", "1.0", {{"usr/bin/s.sh", work / "s.sh", true}});

        ScanConfig config;
        config.corpus_root = corpus;
        config.jobs = 4;
        std::string hash = corpus_content_hash(enumerate_corpus(corpus));

        auto run_once = [&](const std::filesystem::path& out) {
            WarningList warnings;
            CorpusReport rep = scan_corpus(config, &warnings);
            config.output_dir = out;
            write_reports(rep, config, warnings, hash);
        };
        run_once(tmp / "out1");
        run_once(tmp / "out2");

        std::size_t files = 0;
        bool identical = true;
        for (const auto& e : std::filesystem::directory_iterator(tmp / "out1")) {
            ++files;
            Bytes a = read_file(e.path());
            Bytes b = read_file(tmp / "out2" / e.path().filename());
            if (a != b) identical = false;
        }
        double dt = seconds_since(t0);
        ok = identical && files >= 8 && dt < 30.0;
        char buf[160];
        snprintf(buf, sizeof buf, "%zu output files byte-identical across runs in %.1fs (limit 30s)",
                 files, dt);
        detail = identical ? buf : "outputs differ between runs";
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(10, "end-to-end determinism", ok, detail);
}

// ---- criterion 11: desk-scale throughput ------------------------------------

void criterion11() {
    auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        CorpusReport corpus;
        corpus.add_package("system");
        std::size_t scanned = 0;
        const char* roots[] = {"/usr/bin", "/usr/sbin", "/usr/lib/x86_64-linux-gnu"};
        for (const char* root : roots) {
            if (scanned >= 1000) break;
            std::error_code ec;
            for (std::filesystem::directory_iterator it(root, ec), end;
                 it != end && scanned < 1000; it.increment(ec)) {
                if (ec) break;
                if (!it->is_regular_file(ec)) continue;
                try {
                    BinaryReport rep =
                        scan_binary_file(it->path(), IsaMode::encoding, false);
                    rep.package = "system";
                    corpus.add_binary(std::move(rep));
                    ++scanned;
                } catch (const Error&) {
                    continue;  // scripts, data files, broken symlinks
                }
            }
        }
        double ratio = corpus.binary_target_ratio();
        double dt = seconds_since(t0);
        ok = scanned >= 900 && ratio > 0.0 && ratio < 1.0 && dt < 300.0;
        char buf[160];
        snprintf(buf, sizeof buf, "%zu binaries, target ratio %.3f, %.1fs (limit 300s)",
                 scanned, ratio, dt);
        detail = buf;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(11, "desk-scale throughput", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    printf("%s (%d failing)\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED",
           failures);
    return failures == 0 ? 0 : 1;
}
