#pragma once

#include <string>
#include <vector>

#include "dfscan/common.hpp"

namespace dfscan {

// One member of a System V ar archive. `name` has the trailing '/' and any
// extended-name indirection already resolved.
struct ArMember {
    std::string name;
    Bytes data;
};

bool looks_like_ar(ByteView data);

// Parses an ar container (GNU/SysV variant, extended names supported).
// The symbol index ("/", "/SYM64/") and the extended-name table ("//") are
// consumed but not returned.
std::vector<ArMember> parse_ar(ByteView data);

// One entry of a tar stream (ustar/GNU/pax as produced by packaging tools).
struct TarEntry {
    std::string path;
    unsigned mode_bits = 0;
    char type = '0';  // tar typeflag; '0' = regular file
    Bytes content;
};

bool looks_like_tar(ByteView data);

std::vector<TarEntry> parse_tar(ByteView data);

}  // namespace dfscan
