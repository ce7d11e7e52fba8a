#include "dfscan/archive.hpp"

#include <algorithm>
#include <cstring>

namespace dfscan {

namespace {

constexpr char kArMagic[] = "!<arch>\n";

std::string trim_right(std::string_view s) {
    size_t end = s.size();
    while (end > 0 && (s[end - 1] == ' ' || s[end - 1] == '\0')) --end;
    return std::string(s.substr(0, end));
}

unsigned long parse_decimal(std::string_view field, const char* what) {
    std::string t = trim_right(field);
    if (t.empty()) return 0;
    unsigned long v = 0;
    for (char c : t) {
        if (c < '0' || c > '9')
            throw MalformedArchive(std::string("ar: bad numeric field in ") + what);
        v = v * 10 + static_cast<unsigned long>(c - '0');
    }
    return v;
}

}  // namespace

bool looks_like_ar(ByteView data) {
    return data.size() >= 8 && std::memcmp(data.data(), kArMagic, 8) == 0;
}

std::vector<ArMember> parse_ar(ByteView data) {
    if (!looks_like_ar(data)) throw MalformedArchive("ar: bad magic");
    std::vector<ArMember> members;
    std::string long_names;  // "//" table, '\n'-separated, offsets index into it
    size_t off = 8;
    while (off < data.size()) {
        if (off + 60 > data.size())
            throw TruncatedMember("ar: truncated member header");
        const char* hdr = reinterpret_cast<const char*>(data.data() + off);
        if (hdr[58] != 0x60 || hdr[59] != 0x0a)
            throw MalformedArchive("ar: bad member header terminator");
        std::string name = trim_right({hdr, 16});
        unsigned long size = parse_decimal({hdr + 48, 10}, "size");
        off += 60;
        if (off + size > data.size())
            throw TruncatedMember("ar: member data extends past end of archive");
        ByteView body = data.subspan(off, size);
        off += size;
        if (off % 2 != 0) ++off;  // members are 2-byte aligned

        if (name == "//") {
            long_names.assign(reinterpret_cast<const char*>(body.data()), body.size());
            continue;
        }
        if (name == "/" || name == "/SYM64/") continue;  // symbol index
        if (name.size() >= 2 && name[0] == '/' && name[1] >= '0' && name[1] <= '9') {
            unsigned long idx = parse_decimal(std::string_view(name).substr(1), "long name offset");
            if (idx >= long_names.size())
                throw MalformedArchive("ar: long-name offset out of range");
            size_t end = long_names.find('\n', idx);
            std::string_view resolved(long_names.data() + idx,
                                      (end == std::string::npos ? long_names.size() : end) - idx);
            if (!resolved.empty() && resolved.back() == '/')
                resolved.remove_suffix(1);
            name.assign(resolved);
        } else if (!name.empty() && name.back() == '/') {
            name.pop_back();
        }
        members.push_back({std::move(name), Bytes(body.begin(), body.end())});
    }
    return members;
}

namespace {

constexpr size_t kBlock = 512;

bool zero_block(ByteView b) {
    return std::all_of(b.begin(), b.end(), [](std::uint8_t c) { return c == 0; });
}

unsigned long long tar_number(ByteView field) {
    // GNU base-256 extension for big values
    if (!field.empty() && (field[0] & 0x80)) {
        unsigned long long v = field[0] & 0x7f;
        for (size_t i = 1; i < field.size(); ++i) v = (v << 8) | field[i];
        return v;
    }
    unsigned long long v = 0;
    for (std::uint8_t c : field) {
        if (c == ' ' || c == 0) continue;
        if (c < '0' || c > '7') break;
        v = v * 8 + (c - '0');
    }
    return v;
}

std::string tar_string(ByteView field) {
    size_t len = 0;
    while (len < field.size() && field[len] != 0) ++len;
    return {reinterpret_cast<const char*>(field.data()), len};
}

// pax extended header records: "len key=value\n"
void apply_pax(std::string_view blob, std::string* path) {
    size_t pos = 0;
    while (pos < blob.size()) {
        size_t sp = blob.find(' ', pos);
        if (sp == std::string_view::npos) break;
        unsigned long len = 0;
        for (char c : blob.substr(pos, sp - pos)) {
            if (c < '0' || c > '9') return;
            len = len * 10 + static_cast<unsigned long>(c - '0');
        }
        if (len == 0 || pos + len > blob.size()) break;
        std::string_view rec = blob.substr(sp + 1, pos + len - sp - 2);
        if (rec.substr(0, 5) == "path=") *path = std::string(rec.substr(5));
        pos += len;
    }
}

}  // namespace

bool looks_like_tar(ByteView data) {
    return data.size() >= kBlock &&
           (std::memcmp(data.data() + 257, "ustar", 5) == 0 || zero_block(data.first(kBlock)));
}

std::vector<TarEntry> parse_tar(ByteView data) {
    std::vector<TarEntry> entries;
    std::string pending_longname;
    std::string pax_path;
    size_t off = 0;
    while (off + kBlock <= data.size()) {
        ByteView hdr = data.subspan(off, kBlock);
        if (zero_block(hdr)) break;  // end-of-archive marker
        off += kBlock;
        std::string name = tar_string(hdr.subspan(0, 100));
        unsigned mode = static_cast<unsigned>(tar_number(hdr.subspan(100, 8)));
        unsigned long long size = tar_number(hdr.subspan(124, 12));
        char type = static_cast<char>(hdr[156]);
        std::string prefix = tar_string(hdr.subspan(345, 155));

        size_t padded = (static_cast<size_t>(size) + kBlock - 1) / kBlock * kBlock;
        if (off + padded > data.size())
            throw TruncatedMember("tar: entry data extends past end of stream");
        ByteView body = data.subspan(off, static_cast<size_t>(size));
        off += padded;

        if (type == 'L') {  // GNU long name for the next entry
            pending_longname = tar_string(body);
            continue;
        }
        if (type == 'K') continue;  // long link target, irrelevant here
        if (type == 'x') {          // pax extended header for the next entry
            apply_pax(as_string(body), &pax_path);
            continue;
        }
        if (type == 'g') continue;  // pax global header

        TarEntry e;
        if (!pax_path.empty()) {
            e.path = std::move(pax_path);
            pax_path.clear();
        } else if (!pending_longname.empty()) {
            e.path = std::move(pending_longname);
            pending_longname.clear();
        } else if (!prefix.empty()) {
            e.path = prefix + "/" + name;
        } else {
            e.path = name;
        }
        e.mode_bits = mode & 07777;
        e.type = (type == 0) ? '0' : type;
        e.content.assign(body.begin(), body.end());
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace dfscan
