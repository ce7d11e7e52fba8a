#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfscan/binobj.hpp"
#include "dfscan/common.hpp"

namespace dfscan {

struct SourceLoc {
    std::string path;
    std::uint32_t line = 0;

    auto operator<=>(const SourceLoc&) const = default;
};

// Address-to-source mapping materialized from DWARF line programs.
// Half-open ranges [start, end), non-overlapping, sorted by start.
class LineTable {
public:
    struct Range {
        std::uint64_t start = 0;
        std::uint64_t end = 0;
        SourceLoc loc;
    };

    explicit LineTable(std::vector<Range> ranges);

    std::optional<SourceLoc> resolve(std::uint64_t address) const;

    const std::vector<Range>& ranges() const { return ranges_; }

private:
    std::vector<Range> ranges_;
};

// Builds the line table from the image's own debug sections when present,
// otherwise from the companion ELF (which must carry a matching build-id
// when both sides have one). Absent when neither source exists; malformed
// debug info degrades to absent with a warning, never an error.
std::optional<LineTable> load_line_table(const ElfImage& image,
                                         const std::optional<Bytes>& debug_companion,
                                         WarningList* warnings = nullptr);

// Line table straight from a set of debug sections (exposed for tests).
std::optional<LineTable> line_table_from_sections(
    const std::map<std::string, Bytes>& sections, WarningList* warnings = nullptr);

// The shared-library-origin rule: the normalized absolute path
// starts with /usr/include or /usr/lib.
bool is_shared_library_origin(const SourceLoc& loc);

// Lexical normalization + comp-dir joining helper (exposed for tests).
std::string normalize_source_path(std::string_view path, std::string_view comp_dir);

}  // namespace dfscan
