#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfscan/common.hpp"

namespace dfscan {

enum class BinaryKind { executable, pie_executable, shared_library, static_archive };

const char* binary_kind_name(BinaryKind k);

enum class Machine { x86_64, other };

struct FunctionSpan {
    std::string name;
    std::uint64_t start = 0;
    std::uint64_t size = 0;
    bool in_text = true;
};

struct ExecRange {
    std::uint64_t vaddr = 0;
    Bytes bytes;
    std::string section_name;
};

struct ElfImage {
    BinaryKind kind = BinaryKind::executable;
    Machine machine = Machine::other;
    std::vector<ExecRange> exec_ranges;   // non-overlapping, sorted by vaddr
    std::vector<FunctionSpan> functions;  // non-overlapping, sorted by start
    std::optional<Bytes> build_id;
    std::optional<std::string> debug_link;
    // Debugging sections retained for lineage resolution.
    std::map<std::string, Bytes> debug_sections;
};

// The two acceptance conditions for a binary file: (1) execute bit + ELF
// executable/PIE, (2) library-style filename (.so(.N)* or .a). Absent means
// not a binary file.
std::optional<BinaryKind> detect_binary(std::string_view path, unsigned mode_bits, ByteView head);

// True when `name` ends with ".so" followed by zero or more ".<digits>" groups.
bool has_shared_library_name(std::string_view name);

ElfImage load_elf(ByteView content, BinaryKind kind);

// Members of a .a archive in stored order (symbol index and name table
// consumed, not yielded).
std::vector<std::pair<std::string, Bytes>> unpack_static_archive(ByteView content);

}  // namespace dfscan
