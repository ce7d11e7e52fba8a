#pragma once

// Reference disassembly via the system objdump. Used by tests as an
// independent oracle for the in-tree decoder.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfscan/common.hpp"

namespace dfscan::testing {

struct RefInsn {
    std::uint64_t offset = 0;
    std::vector<std::uint8_t> bytes;
    std::string text;  // full AT&T text, "(bad)" for undecodable
    bool bad = false;

    bool has_rep() const;          // effective F3 rep (last rep-ish prefix wins)
    std::string mnemonic() const;  // first token after prefix tokens
    bool is_rep_movs() const;      // rep + movs string op
    std::vector<std::string> vector_regs() const;  // sorted unique xmm/ymm/zmm names
};

// Runs objdump -D -b binary -m i386:x86-64 on the byte buffer and parses the
// per-instruction rows. Throws dfscan::Error when objdump cannot be run.
std::vector<RefInsn> objdump_disassemble(ByteView code);

// True when the encoding (not the text) uses VEX/EVEX: first non-prefix byte
// is C4/C5/62/XOP-8F. Mirrors the classifier's bucketing rule.
bool encoding_is_vex(ByteView insn);

}  // namespace dfscan::testing
