#include <doctest.h>

#include <algorithm>

#include "dfscan/corpus.hpp"
#include "fixture.hpp"

using namespace dfscan;
using namespace dfscan::testing;

TEST_CASE("parse_repo_index extracts package stanzas") {
    const char* index =
        "Package: zlib1g\n"
        "Version: 1:1.2.11.dfsg-2ubuntu9\n"
        "Architecture: amd64\n"
        "Description: compression library\n"
        " a multi-line\n"
        " continuation body\n"
        "Filename: pool/main/z/zlib/zlib1g_1.2.11.dfsg-2ubuntu9_amd64.deb\n"
        "Size: 58236\n"
        "SHA256: ABCDEF0123456789abcdef0123456789abcdef0123456789abcdef0123456789\n"
        "\n"
        "Package: somegame\n"
        "Version: 2.0-1\n"
        "Filename: pool/universe/s/somegame/somegame_2.0-1_amd64.deb\n"
        "\n"
        "Comment: stanza without the mandatory keys is skipped\n";
    auto metas = parse_repo_index(index);
    REQUIRE(metas.size() == 2);
    CHECK(metas[0].name == "zlib1g");
    CHECK(metas[0].version == "1:1.2.11.dfsg-2ubuntu9");
    CHECK(metas[0].repository_component == RepoComponent::main);
    CHECK(metas[0].size_bytes == 58236);
    CHECK(metas[0].sha256 ==
          "abcdef0123456789abcdef0123456789abcdef0123456789abcdef0123456789");
    CHECK(metas[1].repository_component == RepoComponent::universe);
    CHECK(metas[1].size_bytes == 0);
}

TEST_CASE("parse_repo_index rejects malformed stanzas") {
    CHECK_THROWS_AS(parse_repo_index(" leading continuation\n"), MalformedStanza);
    CHECK_THROWS_AS(parse_repo_index("no colon here\n"), MalformedStanza);
    CHECK_THROWS_AS(parse_repo_index("Package: a\nPackage: b\n"), MalformedStanza);
}

TEST_CASE("repo_component_from_filename") {
    CHECK(repo_component_from_filename("pool/main/a/x/x_1_amd64.deb") == RepoComponent::main);
    CHECK(repo_component_from_filename("pool/multiverse/a/x/x.deb") == RepoComponent::multiverse);
    CHECK(repo_component_from_filename("pool/restricted/a/x/x.deb") == RepoComponent::restricted);
    CHECK(repo_component_from_filename("dists/x.deb") == RepoComponent::unknown);
}

TEST_CASE("meta_from_deb_filename parses pool-style names") {
    auto m = meta_from_deb_filename("/x/coreutils_8.32-4.1ubuntu1_amd64.deb");
    CHECK(m.name == "coreutils");
    CHECK(m.version == "8.32-4.1ubuntu1");
    auto e = meta_from_deb_filename("/x/gcc_4%3a11.2.0-1ubuntu1_amd64.deb");
    CHECK(e.version == "4:11.2.0-1ubuntu1");  // epoch colon un-escaped
}

TEST_CASE("open_package unpacks a dpkg-built .deb") {
    TempDir tmp;
    auto exe = compile_c(tmp.path(), "hello", "int main(void){return 0;}\n", "-O0");
    auto deb = make_deb(tmp.path(), "fixpkg", "1.2-3",
                        {{"usr/bin/hello", exe, true}, {"usr/share/doc/readme", exe, false}});

    auto pkg = open_package(ByteView(read_file(deb)), meta_from_deb_filename(deb));
    CHECK(pkg.meta.name == "fixpkg");
    CHECK(pkg.meta.version == "1.2-3");
    REQUIRE(pkg.entries.size() == 2);
    auto it = std::find_if(pkg.entries.begin(), pkg.entries.end(),
                           [](const FileEntry& e) { return e.path == "/usr/bin/hello"; });
    REQUIRE(it != pkg.entries.end());
    CHECK((it->mode_bits & 0111) != 0);
    CHECK(it->content == read_file(exe));

    // the control name cross-check rejects mismatched metadata
    PackageMeta wrong = pkg.meta;
    wrong.name = "otherpkg";
    CHECK_THROWS_AS(open_package(ByteView(read_file(deb)), wrong), MalformedArchive);
}

TEST_CASE("enumerate_corpus finds .deb files in lexicographic order") {
    TempDir tmp;
    auto exe = compile_c(tmp.path(), "noop", "int main(void){return 0;}\n", "-O0");
    std::filesystem::create_directories(tmp / "sub");
    auto d1 = make_deb(tmp / "sub", "bravo", "1.0", {{"usr/bin/noop", exe, true}});
    auto d2 = make_deb(tmp.path(), "alpha", "1.0", {{"usr/bin/noop", exe, true}});
    write_file(tmp / "notes.txt", std::string("not a deb"));

    auto items = enumerate_corpus(tmp.path());
    REQUIRE(items.size() == 2);
    CHECK(items[0].meta.name == "alpha");
    CHECK(items[1].meta.name == "bravo");
    CHECK(items[0].file == d2);
    CHECK(items[1].file == d1);
}

TEST_CASE("DebugFetcher finds local ddeb companions") {
    TempDir tmp;
    write_file(tmp / "mypkg-dbgsym_1.0_amd64.ddeb", std::string("DDEBBYTES"));
    write_file(tmp / "unrelated-dbgsym_1.0_amd64.ddeb", std::string("XX"));

    DebugFetcher fetcher(tmp.path().string());
    PackageMeta meta;
    meta.name = "mypkg";
    meta.version = "1.0";
    auto got = fetcher.fetch(meta);
    REQUIRE(got);
    CHECK(as_string(ByteView(*got)) == "DDEBBYTES");

    meta.name = "absent";
    CHECK(!fetcher.fetch(meta));
}

TEST_CASE("DebugFetcher spaces out remote requests") {
    DebugFetcher fetcher("http://symbols.example.org/pool",
                         std::chrono::milliseconds(250));
    std::vector<std::string> urls;
    fetcher.set_http_get([&](const std::string& url) -> std::optional<Bytes> {
        urls.push_back(url);
        return Bytes{1, 2, 3};
    });
    auto now = std::chrono::steady_clock::now();
    std::chrono::milliseconds slept{0};
    fetcher.set_clock([&] { return now; },
                      [&](std::chrono::milliseconds d) { slept += d; now += d; });

    PackageMeta meta;
    meta.name = "pkg";
    meta.version = "2.0-1";
    CHECK(fetcher.fetch(meta));
    CHECK(slept.count() == 0);  // first request goes out immediately
    CHECK(fetcher.fetch(meta));
    CHECK(slept.count() >= 250);  // second one waits out the delay
    REQUIRE(urls.size() == 2);
    CHECK(urls[0] == "http://symbols.example.org/pool/pkg-dbgsym_2.0-1_amd64.ddeb");

    WarningList warnings;
    fetcher.set_http_get([](const std::string&) -> std::optional<Bytes> { return std::nullopt; });
    CHECK(!fetcher.fetch(meta, &warnings));
    CHECK(warnings.size() == 1);  // network failure degrades to a warning
}
