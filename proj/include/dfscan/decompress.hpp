#pragma once

#include <optional>
#include <string_view>

#include "dfscan/common.hpp"

namespace dfscan {

enum class Codec { none, gzip, xz, zstd, bzip2 };

// Maps a tarball member suffix ("gz", "xz", "zst", "bz2", "") to a codec.
std::optional<Codec> codec_from_suffix(std::string_view suffix);

const char* codec_name(Codec c);

// Inflates `data` with the given codec. Throws UnsupportedCompression for a
// codec we cannot handle and TruncatedMember when the stream ends early or
// is corrupt.
Bytes decompress(ByteView data, Codec c);

}  // namespace dfscan
