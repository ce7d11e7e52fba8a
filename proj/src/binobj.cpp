#include "dfscan/binobj.hpp"

#include <algorithm>
#include <cctype>

#include "dfscan/archive.hpp"
#include "dfscan/elf.hpp"

namespace dfscan {

const char* binary_kind_name(BinaryKind k) {
    switch (k) {
        case BinaryKind::executable: return "executable";
        case BinaryKind::pie_executable: return "pie_executable";
        case BinaryKind::shared_library: return "shared_library";
        case BinaryKind::static_archive: return "static_archive";
    }
    return "?";
}

bool has_shared_library_name(std::string_view name) {
    // strip trailing (.digits)* groups, then require a ".so" suffix
    for (;;) {
        size_t dot = name.rfind('.');
        if (dot == std::string_view::npos || dot + 1 >= name.size()) break;
        std::string_view tail = name.substr(dot + 1);
        bool all_digits = std::all_of(tail.begin(), tail.end(),
                                      [](unsigned char c) { return std::isdigit(c); });
        if (!all_digits) break;
        name = name.substr(0, dot);
    }
    return name.size() > 3 && name.substr(name.size() - 3) == ".so";
}

std::optional<BinaryKind> detect_binary(std::string_view path, unsigned mode_bits, ByteView head) {
    size_t slash = path.rfind('/');
    std::string_view base = slash == std::string_view::npos ? path : path.substr(slash + 1);

    // Condition (1): execute permission + ELF executable / PIE.
    constexpr unsigned kExecBits = 0111;
    if ((mode_bits & kExecBits) && ElfFile::has_elf_magic(head)) {
        constexpr std::uint16_t ET_EXEC = 2, ET_DYN = 3;
        try {
            ElfFile f = ElfFile::parse(head);
            if (f.type() == ET_EXEC) return BinaryKind::executable;
            if (f.type() == ET_DYN && (f.has_interp() || f.has_pie_flag()))
                return BinaryKind::pie_executable;
        } catch (const TruncatedElf&) {
            // A 64-byte head cannot reach the program headers; the type field
            // alone still decides the ET_EXEC case.
            if (head.size() >= 18) {
                std::uint16_t type = head[16] | (head[17] << 8);
                if (type == ET_EXEC) return BinaryKind::executable;
            }
        }
    }

    // Condition (2): library-style filename, execute bit irrelevant.
    if (base.size() > 2 && base.substr(base.size() - 2) == ".a") return BinaryKind::static_archive;
    if (has_shared_library_name(base)) return BinaryKind::shared_library;

    return std::nullopt;
}

namespace {

std::vector<FunctionSpan> build_function_spans(const ElfFile& elf,
                                               const std::vector<ExecRange>& exec_ranges) {
    struct Raw {
        std::string name;
        std::uint64_t start, size;
    };
    std::vector<Raw> raw;
    for (const auto& sym : elf.function_symbols())
        raw.push_back({sym.name, sym.value, sym.size});
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        return a.start != b.start ? a.start < b.start : a.name < b.name;
    });

    // Aliases at the same start collapse to the lexicographically smallest name.
    std::vector<Raw> dedup;
    for (auto& r : raw) {
        if (!dedup.empty() && dedup.back().start == r.start) {
            dedup.back().size = std::max(dedup.back().size, r.size);
            continue;  // r.name sorts after dedup.back().name
        }
        dedup.push_back(std::move(r));
    }

    auto containing_range_end = [&](std::uint64_t addr) -> std::optional<std::uint64_t> {
        for (const auto& er : exec_ranges)
            if (addr >= er.vaddr && addr < er.vaddr + er.bytes.size())
                return er.vaddr + er.bytes.size();
        return std::nullopt;
    };

    std::vector<FunctionSpan> spans;
    for (size_t i = 0; i < dedup.size(); ++i) {
        FunctionSpan fs;
        fs.name = dedup[i].name;
        fs.start = dedup[i].start;
        fs.size = dedup[i].size;
        auto range_end = containing_range_end(fs.start);
        fs.in_text = range_end.has_value();
        if (fs.size == 0) {
            // Zero-size symbols (hand-written assembly) extend to the next
            // function start within the same section.
            std::uint64_t end = range_end.value_or(fs.start);
            if (i + 1 < dedup.size() && range_end && dedup[i + 1].start < *range_end)
                end = dedup[i + 1].start;
            fs.size = end > fs.start ? end - fs.start : 0;
        }
        // Clamp overlap with the next span for deterministic attribution.
        if (i + 1 < dedup.size() && fs.start + fs.size > dedup[i + 1].start)
            fs.size = dedup[i + 1].start - fs.start;
        spans.push_back(std::move(fs));
    }
    return spans;
}

}  // namespace

ElfImage load_elf(ByteView content, BinaryKind kind) {
    ElfFile elf = ElfFile::parse(content);

    ElfImage img;
    img.kind = kind;
    constexpr std::uint16_t EM_X86_64 = 62;
    img.machine = elf.machine() == EM_X86_64 ? Machine::x86_64 : Machine::other;

    constexpr std::uint64_t SHF_EXECINSTR = 0x4;
    for (const auto& s : elf.sections()) {
        if (!(s.flags & SHF_EXECINSTR) || s.data.empty()) continue;
        ExecRange r;
        r.vaddr = s.addr;
        r.bytes.assign(s.data.begin(), s.data.end());
        r.section_name = s.name;
        img.exec_ranges.push_back(std::move(r));
    }
    std::sort(img.exec_ranges.begin(), img.exec_ranges.end(),
              [](const ExecRange& a, const ExecRange& b) { return a.vaddr < b.vaddr; });

    img.functions = build_function_spans(elf, img.exec_ranges);
    img.build_id = elf.build_id();
    img.debug_link = elf.debug_link();
    for (const auto& s : elf.sections())
        if (s.name.rfind(".debug_", 0) == 0 && !s.data.empty())
            img.debug_sections.emplace(s.name, Bytes(s.data.begin(), s.data.end()));
    return img;
}

std::vector<std::pair<std::string, Bytes>> unpack_static_archive(ByteView content) {
    auto members = parse_ar(content);
    std::vector<std::pair<std::string, Bytes>> out;
    out.reserve(members.size());
    for (auto& m : members) out.emplace_back(std::move(m.name), std::move(m.data));
    return out;
}

}  // namespace dfscan
