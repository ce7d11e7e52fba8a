#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dfscan/decode.hpp"
#include "dfscan/lineage.hpp"

namespace dfscan {

enum class TargetMode : std::uint8_t { explicit_vector, implicit_rep_movs };
enum class IsaClass : std::uint8_t { sse, avx, other };

const char* target_mode_name(TargetMode m);
const char* isa_class_name(IsaClass c);

// How hits are bucketed into the three ISA classes: by encoding
// (legacy -> sse, VEX/EVEX -> avx) or by the decoder's per-extension tag.
enum class IsaMode : std::uint8_t { encoding, extension };

struct TargetHit {
    std::uint64_t address = 0;
    TargetMode mode = TargetMode::explicit_vector;
    IsaClass isa_class = IsaClass::sse;
    std::string_view mnemonic;  // canonical lowercase, static storage
    std::vector<RegisterRef> registers;  // xmm/ymm/zmm only; empty for rep movs
    std::optional<SourceLoc> lineage;    // filled by the lineage stage
};

// The target-instruction test: explicit vector-register reference,
// or an effective-rep movs string move. Absent for everything else.
std::optional<TargetHit> classify(const Instruction& inst, IsaMode mode = IsaMode::encoding);

IsaClass isa_class_of(const Instruction& inst, TargetMode mode,
                      IsaMode isa_mode = IsaMode::encoding);

// Histogram key for Table 3; prefixes are not part of the key.
std::string_view normalize_mnemonic(const Instruction& inst);

// repne-prefixed movs: hardware treats it as rep, but the target set counts only
// plain rep. Surfaced so the scanner can warn about the discrepancy.
bool is_repne_movs(const Instruction& inst);

}  // namespace dfscan
