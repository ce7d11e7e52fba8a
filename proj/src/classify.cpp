#include "dfscan/classify.hpp"

#include <algorithm>

namespace dfscan {

const char* target_mode_name(TargetMode m) {
    return m == TargetMode::explicit_vector ? "explicit_vector" : "implicit_rep_movs";
}

const char* isa_class_name(IsaClass c) {
    switch (c) {
        case IsaClass::sse: return "sse";
        case IsaClass::avx: return "avx";
        case IsaClass::other: return "other";
    }
    return "?";
}

namespace {

bool is_movs_family(const Instruction& inst) {
    return inst.is_string_op && inst.mnemonic.substr(0, 4) == "movs";
}

}  // namespace

bool is_repne_movs(const Instruction& inst) {
    return is_movs_family(inst) && inst.has_prefix(PFX_REPNE);
}

IsaClass isa_class_of(const Instruction& inst, TargetMode mode, IsaMode isa_mode) {
    if (mode == TargetMode::implicit_rep_movs) return IsaClass::other;
    if (isa_mode == IsaMode::extension) {
        switch (inst.ext) {
            case IsaExt::sse_family: return IsaClass::sse;
            case IsaExt::avx_family: return IsaClass::avx;
            default: return IsaClass::other;
        }
    }
    return inst.encoding == VexEncoding::legacy ? IsaClass::sse : IsaClass::avx;
}

std::string_view normalize_mnemonic(const Instruction& inst) { return inst.mnemonic; }

std::optional<TargetHit> classify(const Instruction& inst, IsaMode mode) {
    auto regs = vector_registers_of(inst);
    if (!regs.empty()) {
        TargetHit hit;
        hit.address = inst.address;
        hit.mode = TargetMode::explicit_vector;
        hit.isa_class = isa_class_of(inst, hit.mode, mode);
        hit.mnemonic = normalize_mnemonic(inst);
        std::sort(regs.begin(), regs.end());
        regs.erase(std::unique(regs.begin(), regs.end()), regs.end());
        hit.registers = std::move(regs);
        return hit;
    }
    // Condition 2: the string-move opcode under an effective rep prefix.
    // The scalar-double movsd (F2 0F 10/11) never reaches this branch: it is
    // not a string opcode and already classified above via its xmm operands.
    if (is_movs_family(inst) && inst.has_prefix(PFX_REP)) {
        TargetHit hit;
        hit.address = inst.address;
        hit.mode = TargetMode::implicit_rep_movs;
        hit.isa_class = IsaClass::other;
        hit.mnemonic = normalize_mnemonic(inst);
        return hit;
    }
    return std::nullopt;
}

}  // namespace dfscan
