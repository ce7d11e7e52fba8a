#include "dfscan/decompress.hpp"

#include <lzma.h>
#include <zlib.h>

#include <cstring>

// libzstd and libbz2 ship only their runtime .so on this image; declare the
// stable C entry points we use instead of relying on headers.
extern "C" {
size_t ZSTD_decompress(void* dst, size_t dstCapacity, const void* src, size_t srcSize);
unsigned long long ZSTD_getFrameContentSize(const void* src, size_t srcSize);
unsigned ZSTD_isError(size_t code);

typedef struct {
    char* next_in;
    unsigned avail_in;
    unsigned total_in_lo32;
    unsigned total_in_hi32;
    char* next_out;
    unsigned avail_out;
    unsigned total_out_lo32;
    unsigned total_out_hi32;
    void* state;
    void* (*bzalloc)(void*, int, int);
    void (*bzfree)(void*, void*);
    void* opaque;
} bz_stream;
int BZ2_bzDecompressInit(bz_stream* strm, int verbosity, int small);
int BZ2_bzDecompress(bz_stream* strm);
int BZ2_bzDecompressEnd(bz_stream* strm);
}

namespace dfscan {

std::optional<Codec> codec_from_suffix(std::string_view suffix) {
    if (suffix.empty()) return Codec::none;
    if (suffix == "gz") return Codec::gzip;
    if (suffix == "xz") return Codec::xz;
    if (suffix == "zst") return Codec::zstd;
    if (suffix == "bz2") return Codec::bzip2;
    return std::nullopt;
}

const char* codec_name(Codec c) {
    switch (c) {
        case Codec::none: return "none";
        case Codec::gzip: return "gzip";
        case Codec::xz: return "xz";
        case Codec::zstd: return "zstd";
        case Codec::bzip2: return "bzip2";
    }
    return "?";
}

namespace {

Bytes inflate_gzip(ByteView data) {
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    // 15 + 32: accept both zlib and gzip framing.
    if (inflateInit2(&zs, 15 + 32) != Z_OK)
        throw Error("zlib: inflateInit failed");
    Bytes out;
    Bytes buf(1 << 16);
    zs.next_in = const_cast<Bytef*>(data.data());
    zs.avail_in = static_cast<uInt>(data.size());
    int rc = Z_OK;
    do {
        zs.next_out = buf.data();
        zs.avail_out = static_cast<uInt>(buf.size());
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&zs);
            throw TruncatedMember("gzip: corrupt or truncated stream");
        }
        out.insert(out.end(), buf.data(), buf.data() + (buf.size() - zs.avail_out));
        // Concatenated gzip members (tarballs are sometimes multi-member).
        if (rc == Z_STREAM_END && zs.avail_in > 0) {
            if (inflateReset2(&zs, 15 + 32) != Z_OK) break;
            rc = Z_OK;
        }
    } while (rc != Z_STREAM_END);
    if (rc != Z_STREAM_END) {
        inflateEnd(&zs);
        throw TruncatedMember("gzip: stream ended early");
    }
    inflateEnd(&zs);
    return out;
}

Bytes inflate_xz(ByteView data) {
    lzma_stream strm = LZMA_STREAM_INIT;
    if (lzma_stream_decoder(&strm, UINT64_MAX, LZMA_CONCATENATED) != LZMA_OK)
        throw Error("lzma: decoder init failed");
    Bytes out;
    Bytes buf(1 << 16);
    strm.next_in = data.data();
    strm.avail_in = data.size();
    lzma_ret rc = LZMA_OK;
    while (rc != LZMA_STREAM_END) {
        strm.next_out = buf.data();
        strm.avail_out = buf.size();
        rc = lzma_code(&strm, LZMA_FINISH);
        if (rc != LZMA_OK && rc != LZMA_STREAM_END) {
            lzma_end(&strm);
            throw TruncatedMember("xz: corrupt or truncated stream");
        }
        out.insert(out.end(), buf.data(), buf.data() + (buf.size() - strm.avail_out));
    }
    lzma_end(&strm);
    return out;
}

Bytes inflate_zstd(ByteView data) {
    unsigned long long sz = ZSTD_getFrameContentSize(data.data(), data.size());
    // ZSTD_CONTENTSIZE_UNKNOWN (-1) / ERROR (-2): fall back to a growing guess.
    size_t cap = (sz + 2 < 2) ? (data.size() * 8 + (1 << 20)) : static_cast<size_t>(sz);
    for (;;) {
        Bytes out(cap);
        size_t n = ZSTD_decompress(out.data(), out.size(), data.data(), data.size());
        if (!ZSTD_isError(n)) {
            out.resize(n);
            return out;
        }
        if (sz + 2 < 2 && cap < (size_t{1} << 32)) {
            cap *= 4;
            continue;
        }
        throw TruncatedMember("zstd: corrupt or truncated stream");
    }
}

Bytes inflate_bzip2(ByteView data) {
    bz_stream bs;
    std::memset(&bs, 0, sizeof(bs));
    if (BZ2_bzDecompressInit(&bs, 0, 0) != 0)
        throw Error("bzip2: decoder init failed");
    Bytes out;
    Bytes buf(1 << 16);
    bs.next_in = const_cast<char*>(reinterpret_cast<const char*>(data.data()));
    bs.avail_in = static_cast<unsigned>(data.size());
    int rc = 0;
    do {
        bs.next_out = reinterpret_cast<char*>(buf.data());
        bs.avail_out = static_cast<unsigned>(buf.size());
        rc = BZ2_bzDecompress(&bs);
        if (rc != 0 && rc != 4 /* BZ_STREAM_END */) {
            BZ2_bzDecompressEnd(&bs);
            throw TruncatedMember("bzip2: corrupt or truncated stream");
        }
        out.insert(out.end(), buf.data(), buf.data() + (buf.size() - bs.avail_out));
        if (rc == 0 && bs.avail_in == 0 && bs.avail_out != 0) {
            BZ2_bzDecompressEnd(&bs);
            throw TruncatedMember("bzip2: stream ended early");
        }
    } while (rc != 4);
    BZ2_bzDecompressEnd(&bs);
    return out;
}

}  // namespace

Bytes decompress(ByteView data, Codec c) {
    switch (c) {
        case Codec::none: return Bytes(data.begin(), data.end());
        case Codec::gzip: return inflate_gzip(data);
        case Codec::xz: return inflate_xz(data);
        case Codec::zstd: return inflate_zstd(data);
        case Codec::bzip2: return inflate_bzip2(data);
    }
    throw UnsupportedCompression("unknown codec");
}

}  // namespace dfscan
