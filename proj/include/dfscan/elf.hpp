#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfscan/common.hpp"

namespace dfscan {

// Minimal ELF64 little-endian reader. Views point into the buffer handed to
// parse(); the caller keeps it alive.
class ElfFile {
public:
    struct Section {
        std::string name;
        std::uint32_t type = 0;
        std::uint64_t flags = 0;
        std::uint64_t addr = 0;
        std::uint64_t offset = 0;
        std::uint64_t size = 0;
        std::uint32_t link = 0;
        std::uint64_t entsize = 0;
        ByteView data;  // empty for SHT_NOBITS
    };

    struct Symbol {
        std::string name;
        std::uint64_t value = 0;
        std::uint64_t size = 0;
        unsigned char type = 0;  // STT_*
        std::uint16_t shndx = 0;
    };

    static bool has_elf_magic(ByteView data);

    // Throws TruncatedElf on anything that does not parse as ELF64.
    static ElfFile parse(ByteView data);

    std::uint16_t type() const { return type_; }      // ET_*
    std::uint16_t machine() const { return machine_; }  // EM_*
    bool has_interp() const { return has_interp_; }
    bool has_pie_flag() const { return has_pie_flag_; }  // DF_1_PIE

    const std::vector<Section>& sections() const { return sections_; }
    const Section* section(std::string_view name) const;

    // Function symbols from .symtab, or .dynsym when .symtab has none.
    std::vector<Symbol> function_symbols() const;

    std::optional<Bytes> build_id() const;
    std::optional<std::string> debug_link() const;

private:
    ByteView data_;
    std::uint16_t type_ = 0;
    std::uint16_t machine_ = 0;
    bool has_interp_ = false;
    bool has_pie_flag_ = false;
    std::vector<Section> sections_;

    std::vector<Symbol> symbols_from(const Section& symtab) const;
};

}  // namespace dfscan
