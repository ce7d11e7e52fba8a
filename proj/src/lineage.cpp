#include "dfscan/lineage.hpp"

#include <algorithm>
#include <cstring>
#include <map>

#include "dfscan/elf.hpp"

namespace dfscan {

namespace {

// DWARF attribute / form / line-program constants (only what we consume).
constexpr unsigned DW_AT_name = 0x03;
constexpr unsigned DW_AT_stmt_list = 0x10;
constexpr unsigned DW_AT_comp_dir = 0x1b;
constexpr unsigned DW_AT_str_offsets_base = 0x72;

constexpr unsigned DW_FORM_addr = 0x01;
constexpr unsigned DW_FORM_block2 = 0x03;
constexpr unsigned DW_FORM_block4 = 0x04;
constexpr unsigned DW_FORM_data2 = 0x05;
constexpr unsigned DW_FORM_data4 = 0x06;
constexpr unsigned DW_FORM_data8 = 0x07;
constexpr unsigned DW_FORM_string = 0x08;
constexpr unsigned DW_FORM_block = 0x09;
constexpr unsigned DW_FORM_block1 = 0x0a;
constexpr unsigned DW_FORM_data1 = 0x0b;
constexpr unsigned DW_FORM_flag = 0x0c;
constexpr unsigned DW_FORM_sdata = 0x0d;
constexpr unsigned DW_FORM_strp = 0x0e;
constexpr unsigned DW_FORM_udata = 0x0f;
constexpr unsigned DW_FORM_ref_addr = 0x10;
constexpr unsigned DW_FORM_ref1 = 0x11;
constexpr unsigned DW_FORM_ref2 = 0x12;
constexpr unsigned DW_FORM_ref4 = 0x13;
constexpr unsigned DW_FORM_ref8 = 0x14;
constexpr unsigned DW_FORM_ref_udata = 0x15;
constexpr unsigned DW_FORM_indirect = 0x16;
constexpr unsigned DW_FORM_sec_offset = 0x17;
constexpr unsigned DW_FORM_exprloc = 0x18;
constexpr unsigned DW_FORM_flag_present = 0x19;
constexpr unsigned DW_FORM_strx = 0x1a;
constexpr unsigned DW_FORM_addrx = 0x1b;
constexpr unsigned DW_FORM_ref_sup4 = 0x1c;
constexpr unsigned DW_FORM_strp_sup = 0x1d;
constexpr unsigned DW_FORM_data16 = 0x1e;
constexpr unsigned DW_FORM_line_strp = 0x1f;
constexpr unsigned DW_FORM_ref_sig8 = 0x20;
constexpr unsigned DW_FORM_implicit_const = 0x21;
constexpr unsigned DW_FORM_loclistx = 0x22;
constexpr unsigned DW_FORM_rnglistx = 0x23;
constexpr unsigned DW_FORM_ref_sup8 = 0x24;
constexpr unsigned DW_FORM_strx1 = 0x25;
constexpr unsigned DW_FORM_strx2 = 0x26;
constexpr unsigned DW_FORM_strx3 = 0x27;
constexpr unsigned DW_FORM_strx4 = 0x28;
constexpr unsigned DW_FORM_addrx1 = 0x29;
constexpr unsigned DW_FORM_addrx2 = 0x2a;
constexpr unsigned DW_FORM_addrx3 = 0x2b;
constexpr unsigned DW_FORM_addrx4 = 0x2c;

constexpr unsigned DW_LNCT_path = 1;
constexpr unsigned DW_LNCT_directory_index = 2;

constexpr unsigned DW_LNS_copy = 1;
constexpr unsigned DW_LNS_advance_pc = 2;
constexpr unsigned DW_LNS_advance_line = 3;
constexpr unsigned DW_LNS_set_file = 4;
constexpr unsigned DW_LNS_const_add_pc = 8;
constexpr unsigned DW_LNS_fixed_advance_pc = 9;

constexpr unsigned DW_LNE_end_sequence = 1;
constexpr unsigned DW_LNE_set_address = 2;
constexpr unsigned DW_LNE_define_file = 3;

struct Reader {
    ByteView data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }
    std::size_t left() const { return data.size() - pos; }

    std::uint8_t u8() {
        if (pos >= data.size()) throw MalformedDebugInfo("debug info: truncated");
        return data[pos++];
    }
    std::uint64_t fixed(std::size_t n) {
        if (pos + n > data.size()) throw MalformedDebugInfo("debug info: truncated");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < n; ++i) v |= std::uint64_t(data[pos + i]) << (8 * i);
        pos += n;
        return v;
    }
    std::uint16_t u16() { return static_cast<std::uint16_t>(fixed(2)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(fixed(4)); }
    std::uint64_t u64() { return fixed(8); }
    std::uint64_t uleb() {
        std::uint64_t v = 0;
        unsigned shift = 0;
        for (;;) {
            std::uint8_t b = u8();
            if (shift < 64) v |= std::uint64_t(b & 0x7f) << shift;
            if (!(b & 0x80)) return v;
            shift += 7;
        }
    }
    std::int64_t sleb() {
        std::int64_t v = 0;
        unsigned shift = 0;
        std::uint8_t b;
        do {
            b = u8();
            if (shift < 64) v |= std::int64_t(b & 0x7f) << shift;
            shift += 7;
        } while (b & 0x80);
        if (shift < 64 && (b & 0x40)) v |= -(std::int64_t(1) << shift);
        return v;
    }
    std::string cstr() {
        std::string s;
        for (;;) {
            char c = static_cast<char>(u8());
            if (c == '\0') return s;
            s += c;
        }
    }
    void skip(std::size_t n) {
        if (pos + n > data.size()) throw MalformedDebugInfo("debug info: truncated");
        pos += n;
    }
};

std::string str_at(ByteView sec, std::uint64_t off) {
    if (off >= sec.size()) throw MalformedDebugInfo("debug info: string offset out of range");
    const char* p = reinterpret_cast<const char*>(sec.data() + off);
    std::size_t max = sec.size() - off;
    std::size_t len = strnlen(p, max);
    if (len == max) throw MalformedDebugInfo("debug info: unterminated string");
    return std::string(p, len);
}

struct Sections {
    ByteView line, info, abbrev, str, line_str, str_offsets;
};

ByteView find_section(const std::map<std::string, Bytes>& m, const char* name) {
    auto it = m.find(name);
    return it == m.end() ? ByteView{} : ByteView(it->second);
}

// --- .debug_info first-DIE walk: stmt_list offset -> (comp_dir, unit name) ---

struct AbbrevAttr {
    unsigned attr = 0;
    unsigned form = 0;
    std::int64_t implicit = 0;
};

struct AbbrevDecl {
    std::vector<AbbrevAttr> attrs;
};

std::map<std::uint64_t, AbbrevDecl> parse_abbrev_table(ByteView sec, std::uint64_t offset) {
    Reader r{sec, static_cast<std::size_t>(offset)};
    if (offset > sec.size()) throw MalformedDebugInfo("debug info: abbrev offset out of range");
    std::map<std::uint64_t, AbbrevDecl> out;
    for (;;) {
        std::uint64_t code = r.uleb();
        if (code == 0) break;
        AbbrevDecl decl;
        r.uleb();  // tag
        r.u8();    // has_children
        for (;;) {
            AbbrevAttr a;
            a.attr = static_cast<unsigned>(r.uleb());
            a.form = static_cast<unsigned>(r.uleb());
            if (a.form == DW_FORM_implicit_const) a.implicit = r.sleb();
            if (a.attr == 0 && a.form == 0) break;
            decl.attrs.push_back(a);
        }
        out.emplace(code, std::move(decl));
    }
    return out;
}

struct UnitInfo {
    std::string comp_dir;
    std::string name;
};

// A raw attribute value before string-index resolution.
struct AttrValue {
    std::uint64_t num = 0;      // numeric/offset payload
    std::string str;            // resolved string payload
    bool is_strx = false;       // num is an index into .debug_str_offsets
};

AttrValue read_form(Reader& r, unsigned form, std::int64_t implicit, unsigned offset_size,
                    unsigned address_size, const Sections& s) {
    AttrValue v;
    switch (form) {
        case DW_FORM_addr: v.num = r.fixed(address_size); break;
        case DW_FORM_block2: r.skip(r.u16()); break;
        case DW_FORM_block4: r.skip(r.u32()); break;
        case DW_FORM_data2: v.num = r.u16(); break;
        case DW_FORM_data4: v.num = r.u32(); break;
        case DW_FORM_data8: v.num = r.u64(); break;
        case DW_FORM_data16: r.skip(16); break;
        case DW_FORM_string: v.str = r.cstr(); break;
        case DW_FORM_block:
        case DW_FORM_exprloc: r.skip(r.uleb()); break;
        case DW_FORM_block1: r.skip(r.u8()); break;
        case DW_FORM_data1:
        case DW_FORM_flag:
        case DW_FORM_ref1: v.num = r.u8(); break;
        case DW_FORM_sdata: v.num = static_cast<std::uint64_t>(r.sleb()); break;
        case DW_FORM_strp: v.str = str_at(s.str, r.fixed(offset_size)); break;
        case DW_FORM_line_strp: v.str = str_at(s.line_str, r.fixed(offset_size)); break;
        case DW_FORM_udata:
        case DW_FORM_ref_udata:
        case DW_FORM_loclistx:
        case DW_FORM_rnglistx:
        case DW_FORM_addrx: v.num = r.uleb(); break;
        case DW_FORM_ref_addr:
        case DW_FORM_sec_offset:
        case DW_FORM_strp_sup: v.num = r.fixed(offset_size); break;
        case DW_FORM_ref2: v.num = r.u16(); break;
        case DW_FORM_ref4:
        case DW_FORM_ref_sup4: v.num = r.u32(); break;
        case DW_FORM_ref8:
        case DW_FORM_ref_sig8:
        case DW_FORM_ref_sup8: v.num = r.u64(); break;
        case DW_FORM_indirect:
            return read_form(r, static_cast<unsigned>(r.uleb()), implicit, offset_size,
                             address_size, s);
        case DW_FORM_flag_present: v.num = 1; break;
        case DW_FORM_implicit_const: v.num = static_cast<std::uint64_t>(implicit); break;
        case DW_FORM_strx: v.num = r.uleb(); v.is_strx = true; break;
        case DW_FORM_strx1: v.num = r.u8(); v.is_strx = true; break;
        case DW_FORM_strx2: v.num = r.u16(); v.is_strx = true; break;
        case DW_FORM_strx3: v.num = r.fixed(3); v.is_strx = true; break;
        case DW_FORM_strx4: v.num = r.u32(); v.is_strx = true; break;
        case DW_FORM_addrx1: v.num = r.u8(); break;
        case DW_FORM_addrx2: v.num = r.u16(); break;
        case DW_FORM_addrx3: v.num = r.fixed(3); break;
        case DW_FORM_addrx4: v.num = r.u32(); break;
        default:
            throw MalformedDebugInfo("debug info: unknown form");
    }
    return v;
}

std::string resolve_strx(const Sections& s, std::uint64_t base, std::uint64_t index,
                         unsigned offset_size) {
    std::uint64_t at = base + index * offset_size;
    if (at + offset_size > s.str_offsets.size())
        throw MalformedDebugInfo("debug info: str_offsets index out of range");
    std::uint64_t off = 0;
    for (unsigned i = 0; i < offset_size; ++i)
        off |= std::uint64_t(s.str_offsets[at + i]) << (8 * i);
    return str_at(s.str, off);
}

// Maps each unit's DW_AT_stmt_list offset to its comp dir and name.
std::map<std::uint64_t, UnitInfo> parse_unit_dirs(const Sections& s) {
    std::map<std::uint64_t, UnitInfo> out;
    Reader r{s.info};
    while (!r.eof()) {
        std::size_t unit_start = r.pos;
        std::uint64_t unit_length = r.u32();
        unsigned offset_size = 4;
        if (unit_length == 0xffffffffu) {
            unit_length = r.u64();
            offset_size = 8;
        }
        std::size_t unit_end = r.pos + unit_length;
        if (unit_end > s.info.size()) throw MalformedDebugInfo("debug info: unit overruns");
        unsigned version = r.u16();
        std::uint64_t abbrev_off;
        unsigned address_size;
        if (version >= 5) {
            unsigned unit_type = r.u8();
            address_size = r.u8();
            abbrev_off = r.fixed(offset_size);
            if (unit_type == 0x02 || unit_type == 0x06) r.u64();  // type/skeleton signature
            if (unit_type == 0x02) r.fixed(offset_size);          // type offset
        } else if (version >= 2) {
            abbrev_off = r.fixed(offset_size);
            address_size = r.u8();
        } else {
            throw MalformedDebugInfo("debug info: unsupported version");
        }
        auto abbrevs = parse_abbrev_table(s.abbrev, abbrev_off);
        std::uint64_t code = r.uleb();
        auto it = abbrevs.find(code);
        if (code != 0 && it != abbrevs.end()) {
            UnitInfo ui;
            std::optional<std::uint64_t> stmt_list;
            std::uint64_t str_base = s.str_offsets.size() >= 8 ? 8 : 0;  // default header size
            std::optional<std::uint64_t> name_strx, dir_strx;
            for (const auto& a : it->second.attrs) {
                AttrValue v = read_form(r, a.form, a.implicit, offset_size, address_size, s);
                switch (a.attr) {
                    case DW_AT_stmt_list: stmt_list = v.num; break;
                    case DW_AT_str_offsets_base: str_base = v.num; break;
                    case DW_AT_comp_dir:
                        if (v.is_strx) dir_strx = v.num;
                        else ui.comp_dir = v.str;
                        break;
                    case DW_AT_name:
                        if (v.is_strx) name_strx = v.num;
                        else ui.name = v.str;
                        break;
                    default: break;
                }
            }
            // strx forms may appear before DW_AT_str_offsets_base; resolve late.
            if (dir_strx) ui.comp_dir = resolve_strx(s, str_base, *dir_strx, offset_size);
            if (name_strx) ui.name = resolve_strx(s, str_base, *name_strx, offset_size);
            if (stmt_list) out.emplace(*stmt_list, std::move(ui));
        }
        r.pos = unit_end;
        if (r.pos <= unit_start) break;  // defensive: no progress
    }
    return out;
}

// --- .debug_line unit parsing ---

struct LineRow {
    std::uint64_t address = 0;
    unsigned file = 1;
    std::uint32_t line = 1;
    bool end_sequence = false;
};

struct FileRec {
    std::string name;
    std::uint64_t dir = 0;
};

std::string join_path(std::string_view dir, std::string_view name) {
    if (name.empty() || name.front() == '/') return std::string(name);
    if (dir.empty()) return std::string(name);
    std::string out(dir);
    if (out.back() != '/') out += '/';
    out += name;
    return out;
}

void parse_line_unit(Reader& r, const Sections& s,
                     const std::map<std::uint64_t, UnitInfo>& units,
                     std::vector<LineTable::Range>& out) {
    std::size_t unit_off = r.pos;
    std::uint64_t unit_length = r.u32();
    unsigned offset_size = 4;
    if (unit_length == 0xffffffffu) {
        unit_length = r.u64();
        offset_size = 8;
    }
    std::size_t unit_end = r.pos + unit_length;
    if (unit_end > r.data.size()) throw MalformedDebugInfo("debug line: unit overruns");

    unsigned version = r.u16();
    if (version < 2 || version > 5) throw MalformedDebugInfo("debug line: unsupported version");
    unsigned address_size = 8;
    if (version >= 5) {
        address_size = r.u8();
        r.u8();  // segment selector size
    }
    std::uint64_t header_length = r.fixed(offset_size);
    std::size_t program_start = r.pos + header_length;
    std::uint8_t min_inst = r.u8();
    if (version >= 4) r.u8();  // max ops per instruction (VLIW only)
    r.u8();                    // default_is_stmt
    std::int8_t line_base = static_cast<std::int8_t>(r.u8());
    std::uint8_t line_range = r.u8();
    std::uint8_t opcode_base = r.u8();
    std::vector<std::uint8_t> std_lens;
    for (unsigned i = 1; i < opcode_base; ++i) std_lens.push_back(r.u8());
    if (line_range == 0) throw MalformedDebugInfo("debug line: zero line_range");

    std::string comp_dir;
    auto ui = units.find(unit_off);
    if (ui != units.end()) comp_dir = ui->second.comp_dir;

    std::vector<std::string> dirs;
    std::vector<FileRec> files;

    if (version >= 5) {
        auto read_entries = [&](auto&& take) {
            std::uint8_t nformats = r.u8();
            std::vector<std::pair<unsigned, unsigned>> formats;
            for (unsigned i = 0; i < nformats; ++i) {
                unsigned content = static_cast<unsigned>(r.uleb());
                unsigned form = static_cast<unsigned>(r.uleb());
                formats.emplace_back(content, form);
            }
            std::uint64_t count = r.uleb();
            for (std::uint64_t i = 0; i < count; ++i) {
                std::string path;
                std::uint64_t dir = 0;
                for (auto [content, form] : formats) {
                    AttrValue v = read_form(r, form, 0, offset_size, address_size, s);
                    if (content == DW_LNCT_path) path = std::move(v.str);
                    else if (content == DW_LNCT_directory_index) dir = v.num;
                }
                take(std::move(path), dir);
            }
        };
        read_entries([&](std::string p, std::uint64_t) { dirs.push_back(std::move(p)); });
        read_entries([&](std::string p, std::uint64_t d) { files.push_back({std::move(p), d}); });
        if (comp_dir.empty() && !dirs.empty()) comp_dir = dirs[0];
    } else {
        dirs.push_back(comp_dir);  // dir index 0 = compilation directory
        for (;;) {
            std::string d = r.cstr();
            if (d.empty()) break;
            dirs.push_back(std::move(d));
        }
        files.push_back({"", 0});  // index 0 unused in v2-4
        for (;;) {
            std::string name = r.cstr();
            if (name.empty()) break;
            std::uint64_t dir = r.uleb();
            r.uleb();  // mtime
            r.uleb();  // size
            files.push_back({std::move(name), dir});
        }
    }

    auto file_path = [&](unsigned index) -> std::string {
        if (index >= files.size()) return {};
        const FileRec& f = files[index];
        std::string dir = f.dir < dirs.size() ? dirs[f.dir] : std::string{};
        return normalize_source_path(join_path(dir, f.name), comp_dir);
    };

    // line-number program state machine
    r.pos = program_start;
    std::uint64_t address = 0;
    unsigned file = 1;
    std::int64_t line = 1;
    std::vector<LineRow> rows;
    auto emit = [&](bool end_seq) {
        rows.push_back({address, file, static_cast<std::uint32_t>(std::max<std::int64_t>(line, 0)),
                        end_seq});
    };
    while (r.pos < unit_end) {
        std::uint8_t op = r.u8();
        if (op >= opcode_base) {  // special opcode
            unsigned adj = op - opcode_base;
            address += (adj / line_range) * min_inst;
            line += line_base + static_cast<int>(adj % line_range);
            emit(false);
        } else if (op == 0) {  // extended
            std::uint64_t len = r.uleb();
            std::size_t next = r.pos + len;
            if (len == 0 || next > unit_end) throw MalformedDebugInfo("debug line: bad extended op");
            std::uint8_t sub = r.u8();
            switch (sub) {
                case DW_LNE_end_sequence:
                    emit(true);
                    address = 0;
                    file = 1;
                    line = 1;
                    break;
                case DW_LNE_set_address: address = r.fixed(address_size); break;
                case DW_LNE_define_file: {
                    std::string name = r.cstr();
                    std::uint64_t dir = r.uleb();
                    r.uleb();
                    r.uleb();
                    files.push_back({std::move(name), dir});
                    break;
                }
                default: break;  // set_discriminator, vendor ops
            }
            r.pos = next;
        } else {
            switch (op) {
                case DW_LNS_copy: emit(false); break;
                case DW_LNS_advance_pc: address += r.uleb() * min_inst; break;
                case DW_LNS_advance_line: line += r.sleb(); break;
                case DW_LNS_set_file: file = static_cast<unsigned>(r.uleb()); break;
                case DW_LNS_const_add_pc:
                    address += ((255 - opcode_base) / line_range) * min_inst;
                    break;
                case DW_LNS_fixed_advance_pc: address += r.u16(); break;
                default:  // set_column and friends: skip declared operands
                    for (unsigned i = 0; op - 1u < std_lens.size() && i < std_lens[op - 1]; ++i)
                        r.uleb();
                    break;
            }
        }
    }
    r.pos = unit_end;

    // Rows -> half-open ranges within each sequence.
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].end_sequence) continue;
        std::uint64_t end = rows[i + 1].address;
        if (end <= rows[i].address) continue;
        std::string path = file_path(rows[i].file);
        if (path.empty()) continue;
        out.push_back({rows[i].address, end, {std::move(path), rows[i].line}});
    }
}

}  // namespace

LineTable::LineTable(std::vector<Range> ranges) : ranges_(std::move(ranges)) {
    std::sort(ranges_.begin(), ranges_.end(),
              [](const Range& a, const Range& b) { return a.start < b.start; });
    // Clip overlaps deterministically: the earlier-starting range wins.
    std::vector<Range> clean;
    for (auto& r : ranges_) {
        if (!clean.empty() && r.start < clean.back().end) {
            if (r.end <= clean.back().end) continue;
            r.start = clean.back().end;
        }
        if (r.start < r.end) clean.push_back(std::move(r));
    }
    ranges_ = std::move(clean);
}

std::optional<SourceLoc> LineTable::resolve(std::uint64_t address) const {
    auto it = std::upper_bound(
        ranges_.begin(), ranges_.end(), address,
        [](std::uint64_t a, const Range& r) { return a < r.start; });
    if (it == ranges_.begin()) return std::nullopt;
    --it;
    if (address >= it->end) return std::nullopt;
    return it->loc;
}

std::string normalize_source_path(std::string_view path, std::string_view comp_dir) {
    std::string joined = path.empty() || path.front() == '/'
                             ? std::string(path)
                             : join_path(comp_dir, path);
    // lexical cleanup of ".", ".." and doubled separators
    std::vector<std::string> parts;
    bool absolute = !joined.empty() && joined.front() == '/';
    std::size_t i = 0;
    while (i < joined.size()) {
        std::size_t j = joined.find('/', i);
        if (j == std::string::npos) j = joined.size();
        std::string_view seg(joined.data() + i, j - i);
        if (seg == "..") {
            if (!parts.empty() && parts.back() != "..") parts.pop_back();
            else if (!absolute) parts.emplace_back("..");
        } else if (!seg.empty() && seg != ".") {
            parts.emplace_back(seg);
        }
        i = j + 1;
    }
    std::string out = absolute ? "/" : "";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        out += parts[k];
        if (k + 1 < parts.size()) out += '/';
    }
    return out;
}

bool is_shared_library_origin(const SourceLoc& loc) {
    std::string_view p = loc.path;
    auto has_prefix = [&](std::string_view pre) {
        return p.size() >= pre.size() && p.substr(0, pre.size()) == pre &&
               (p.size() == pre.size() || p[pre.size()] == '/');
    };
    return has_prefix("/usr/include") || has_prefix("/usr/lib");
}

std::optional<LineTable> line_table_from_sections(const std::map<std::string, Bytes>& sections,
                                                  WarningList* warnings) {
    Sections s;
    s.line = find_section(sections, ".debug_line");
    s.info = find_section(sections, ".debug_info");
    s.abbrev = find_section(sections, ".debug_abbrev");
    s.str = find_section(sections, ".debug_str");
    s.line_str = find_section(sections, ".debug_line_str");
    s.str_offsets = find_section(sections, ".debug_str_offsets");
    if (s.line.empty()) return std::nullopt;
    try {
        std::map<std::uint64_t, UnitInfo> units;
        if (!s.info.empty() && !s.abbrev.empty()) units = parse_unit_dirs(s);
        std::vector<LineTable::Range> ranges;
        Reader r{s.line};
        while (!r.eof()) parse_line_unit(r, s, units, ranges);
        return LineTable(std::move(ranges));
    } catch (const MalformedDebugInfo& e) {
        if (warnings) warnings->push_back({"debug line", e.what()});
        return std::nullopt;
    }
}

std::optional<LineTable> load_line_table(const ElfImage& image,
                                         const std::optional<Bytes>& debug_companion,
                                         WarningList* warnings) {
    if (image.debug_sections.count(".debug_line")) {
        auto t = line_table_from_sections(image.debug_sections, warnings);
        if (t) return t;
    }
    if (!debug_companion) return std::nullopt;
    try {
        ElfFile dbg = ElfFile::parse(*debug_companion);
        auto dbg_id = dbg.build_id();
        if (image.build_id && dbg_id && *image.build_id != *dbg_id) {
            if (warnings)
                warnings->push_back({"debug companion", "build-id mismatch, companion ignored"});
            return std::nullopt;
        }
        std::map<std::string, Bytes> sections;
        for (const auto& sec : dbg.sections())
            if (sec.name.rfind(".debug_", 0) == 0 && !sec.data.empty())
                sections.emplace(sec.name, Bytes(sec.data.begin(), sec.data.end()));
        return line_table_from_sections(sections, warnings);
    } catch (const Error& e) {
        if (warnings) warnings->push_back({"debug companion", e.what()});
        return std::nullopt;
    }
}

}  // namespace dfscan
