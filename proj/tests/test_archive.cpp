#include <doctest.h>

#include <algorithm>

#include "dfscan/archive.hpp"
#include "fixture.hpp"

using namespace dfscan;
using namespace dfscan::testing;

TEST_CASE("parse_ar reads GNU archives incl. extended names") {
    // Oracle: the system ar produces the container.
    TempDir tmp;
    write_file(tmp / "short.txt", std::string("alpha"));
    write_file(tmp / "a-member-name-well-beyond-sixteen-chars.txt", std::string("beta"));
    REQUIRE(run("cd " + tmp.path().string() +
                " && ar rc lib.ar short.txt a-member-name-well-beyond-sixteen-chars.txt") == 0);

    Bytes raw = read_file(tmp / "lib.ar");
    CHECK(looks_like_ar(ByteView(raw)));
    auto members = parse_ar(ByteView(raw));
    REQUIRE(members.size() == 2);
    CHECK(members[0].name == "short.txt");
    CHECK(as_string(ByteView(members[0].data)) == "alpha");
    CHECK(members[1].name == "a-member-name-well-beyond-sixteen-chars.txt");
    CHECK(as_string(ByteView(members[1].data)) == "beta");
}

TEST_CASE("parse_ar consumes the symbol index without yielding it") {
    TempDir tmp;
    compile_c(tmp.path(), "obj", "int fortytwo(void){return 42;}\n", "-c -O1");
    REQUIRE(run("cd " + tmp.path().string() + " && ar rcs libobj.a obj") == 0);
    auto members = parse_ar(ByteView(read_file(tmp / "libobj.a")));
    REQUIRE(members.size() == 1);
    CHECK(members[0].name == "obj");
}

TEST_CASE("parse_ar rejects malformed containers") {
    std::string junk = "!<arch>\ntruncated header follows";
    CHECK_THROWS_AS(parse_ar(as_bytes(junk)), Error);
    std::string notar = "definitely not an archive at all........";
    CHECK(!looks_like_ar(as_bytes(notar)));
    CHECK_THROWS_AS(parse_ar(as_bytes(notar)), MalformedArchive);
}

TEST_CASE("parse_tar matches system tar output") {
    TempDir tmp;
    auto root = tmp / "root";
    std::filesystem::create_directories(root / "usr/bin");
    write_file(root / "usr/bin/tool", std::string("#!/bin/sh\nexit 0\n"));
    std::filesystem::permissions(root / "usr/bin/tool", std::filesystem::perms(0755));
    write_file(root / "usr/bin/data", std::string(100000, 'x'));
    // a path longer than the 100-byte ustar name field
    std::string longname(120, 'n');
    write_file(root / longname, std::string("deep"));

    REQUIRE(run("cd " + root.string() + " && tar cf ../t.tar .") == 0);
    Bytes raw = read_file(tmp / "t.tar");
    CHECK(looks_like_tar(ByteView(raw)));

    auto entries = parse_tar(ByteView(raw));
    auto find = [&](const std::string& suffix) -> const TarEntry* {
        for (const auto& e : entries)
            if (e.path.size() >= suffix.size() &&
                e.path.compare(e.path.size() - suffix.size(), suffix.size(), suffix) == 0)
                return &e;
        return nullptr;
    };

    const TarEntry* tool = find("usr/bin/tool");
    REQUIRE(tool);
    CHECK(tool->type == '0');
    CHECK((tool->mode_bits & 0111) != 0);
    CHECK(as_string(ByteView(tool->content)).substr(0, 9) == "#!/bin/sh");

    const TarEntry* data = find("usr/bin/data");
    REQUIRE(data);
    CHECK(data->content.size() == 100000);

    const TarEntry* deep = find(longname);
    REQUIRE(deep);  // GNU longname extension resolved
    CHECK(as_string(ByteView(deep->content)) == "deep");
}

TEST_CASE("parse_tar rejects truncated streams") {
    TempDir tmp;
    auto root = tmp / "root";
    std::filesystem::create_directories(root);
    write_file(root / "f", std::string(4096, 'y'));
    REQUIRE(run("cd " + root.string() + " && tar cf ../t.tar f") == 0);
    Bytes raw = read_file(tmp / "t.tar");
    Bytes cut(raw.begin(), raw.begin() + 700);  // header + partial body
    CHECK_THROWS_AS(parse_tar(ByteView(cut)), TruncatedMember);
}
