#include "dfscan/elf.hpp"

#include <cstring>

namespace dfscan {

namespace {

constexpr std::uint8_t kMagic[4] = {0x7f, 'E', 'L', 'F'};

template <typename T>
T read_le(ByteView data, std::uint64_t off) {
    if (off + sizeof(T) > data.size()) throw TruncatedElf("read past end of ELF image");
    T v;
    std::memcpy(&v, data.data() + off, sizeof(T));
    return v;  // host is little-endian x86-64
}

std::string cstr_at(ByteView data, std::uint64_t off, std::uint64_t limit) {
    std::string s;
    while (off < limit && off < data.size() && data[off] != 0) s.push_back(static_cast<char>(data[off++]));
    return s;
}

constexpr std::uint32_t SHT_NOBITS = 8;
constexpr std::uint32_t SHT_NOTE = 7;
constexpr std::uint32_t SHT_DYNAMIC = 6;
constexpr std::uint32_t PT_INTERP = 3;
constexpr std::int64_t DT_FLAGS_1 = 0x6ffffffb;
constexpr std::uint64_t DF_1_PIE = 0x08000000;

}  // namespace

bool ElfFile::has_elf_magic(ByteView data) {
    return data.size() >= 4 && std::memcmp(data.data(), kMagic, 4) == 0;
}

ElfFile ElfFile::parse(ByteView data) {
    if (data.size() < 64) throw TruncatedElf("file shorter than an ELF64 header");
    if (!has_elf_magic(data)) throw TruncatedElf("missing ELF magic");
    if (data[4] != 2) throw TruncatedElf("not ELFCLASS64");
    if (data[5] != 1) throw TruncatedElf("not little-endian");

    ElfFile f;
    f.data_ = data;
    f.type_ = read_le<std::uint16_t>(data, 16);
    f.machine_ = read_le<std::uint16_t>(data, 18);
    auto phoff = read_le<std::uint64_t>(data, 32);
    auto shoff = read_le<std::uint64_t>(data, 40);
    auto phentsize = read_le<std::uint16_t>(data, 54);
    auto phnum = read_le<std::uint16_t>(data, 56);
    auto shentsize = read_le<std::uint16_t>(data, 58);
    auto shnum = read_le<std::uint16_t>(data, 60);
    auto shstrndx = read_le<std::uint16_t>(data, 62);

    for (unsigned i = 0; i < phnum; ++i) {
        std::uint64_t base = phoff + std::uint64_t(i) * phentsize;
        if (base + phentsize > data.size()) throw TruncatedElf("program header table truncated");
        auto p_type = read_le<std::uint32_t>(data, base);
        if (p_type == PT_INTERP) f.has_interp_ = true;
    }

    if (shnum > 0 && shentsize < 64) throw TruncatedElf("bad section header entry size");
    std::vector<Section> secs;
    for (unsigned i = 0; i < shnum; ++i) {
        std::uint64_t base = shoff + std::uint64_t(i) * shentsize;
        if (base + 64 > data.size()) throw TruncatedElf("section header table truncated");
        Section s;
        s.type = read_le<std::uint32_t>(data, base + 4);
        s.flags = read_le<std::uint64_t>(data, base + 8);
        s.addr = read_le<std::uint64_t>(data, base + 16);
        s.offset = read_le<std::uint64_t>(data, base + 24);
        s.size = read_le<std::uint64_t>(data, base + 32);
        s.link = read_le<std::uint32_t>(data, base + 40);
        s.entsize = read_le<std::uint64_t>(data, base + 56);
        if (s.type != SHT_NOBITS && s.size > 0) {
            if (s.offset + s.size > data.size()) throw TruncatedElf("section data truncated");
            s.data = data.subspan(s.offset, s.size);
        }
        // name resolved below once shstrtab is known
        s.name = std::to_string(read_le<std::uint32_t>(data, base));
        secs.push_back(s);
    }
    if (shstrndx < secs.size()) {
        ByteView strtab = secs[shstrndx].data;
        for (auto& s : secs) {
            std::uint64_t name_off = std::strtoull(s.name.c_str(), nullptr, 10);
            s.name = cstr_at(strtab, name_off, strtab.size());
        }
    }
    f.sections_ = std::move(secs);

    for (const auto& s : f.sections_) {
        if (s.type != SHT_DYNAMIC || s.data.empty()) continue;
        for (std::uint64_t off = 0; off + 16 <= s.data.size(); off += 16) {
            auto tag = read_le<std::int64_t>(s.data, off);
            auto val = read_le<std::uint64_t>(s.data, off + 8);
            if (tag == 0) break;
            if (tag == DT_FLAGS_1 && (val & DF_1_PIE)) f.has_pie_flag_ = true;
        }
    }
    return f;
}

const ElfFile::Section* ElfFile::section(std::string_view name) const {
    for (const auto& s : sections_)
        if (s.name == name) return &s;
    return nullptr;
}

std::vector<ElfFile::Symbol> ElfFile::symbols_from(const Section& symtab) const {
    std::vector<Symbol> out;
    if (symtab.entsize < 24 || symtab.data.empty()) return out;
    ByteView strtab;
    if (symtab.link < sections_.size()) strtab = sections_[symtab.link].data;
    for (std::uint64_t off = 0; off + 24 <= symtab.data.size(); off += symtab.entsize) {
        Symbol sym;
        auto name_off = read_le<std::uint32_t>(symtab.data, off);
        auto info = read_le<std::uint8_t>(symtab.data, off + 4);
        sym.shndx = read_le<std::uint16_t>(symtab.data, off + 6);
        sym.value = read_le<std::uint64_t>(symtab.data, off + 8);
        sym.size = read_le<std::uint64_t>(symtab.data, off + 16);
        sym.type = info & 0xf;
        sym.name = cstr_at(strtab, name_off, strtab.size());
        out.push_back(std::move(sym));
    }
    return out;
}

std::vector<ElfFile::Symbol> ElfFile::function_symbols() const {
    constexpr unsigned char STT_FUNC = 2;
    std::vector<Symbol> funcs;
    auto collect = [&](const Section* sec) {
        if (!sec) return;
        for (auto& sym : symbols_from(*sec))
            if (sym.type == STT_FUNC && sym.shndx != 0 && !sym.name.empty())
                funcs.push_back(std::move(sym));
    };
    collect(section(".symtab"));
    if (funcs.empty()) collect(section(".dynsym"));
    return funcs;
}

std::optional<Bytes> ElfFile::build_id() const {
    constexpr std::uint32_t NT_GNU_BUILD_ID = 3;
    for (const auto& s : sections_) {
        if (s.type != SHT_NOTE || s.data.empty()) continue;
        std::uint64_t off = 0;
        while (off + 12 <= s.data.size()) {
            auto namesz = read_le<std::uint32_t>(s.data, off);
            auto descsz = read_le<std::uint32_t>(s.data, off + 4);
            auto ntype = read_le<std::uint32_t>(s.data, off + 8);
            std::uint64_t name_off = off + 12;
            std::uint64_t desc_off = name_off + ((namesz + 3) & ~3u);
            if (desc_off + descsz > s.data.size()) break;
            if (ntype == NT_GNU_BUILD_ID && namesz == 4 &&
                std::memcmp(s.data.data() + name_off, "GNU", 4) == 0) {
                auto* p = s.data.data() + desc_off;
                return Bytes(p, p + descsz);
            }
            off = desc_off + ((descsz + 3) & ~3u);
        }
    }
    return std::nullopt;
}

std::optional<std::string> ElfFile::debug_link() const {
    const Section* s = section(".gnu_debuglink");
    if (!s || s->data.empty()) return std::nullopt;
    return cstr_at(s->data, 0, s->data.size());
}

}  // namespace dfscan
