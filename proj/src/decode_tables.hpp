#pragma once

#include <cstdint>

// Internal opcode attribute tables for the x86-64 decoder. Layout mirrors the
// hardware opcode maps: one-byte map, 0F / 0F38 / 0F3A escape maps split by
// mandatory prefix (np/66/F3/F2), VEX/EVEX maps, XOP maps.

namespace dfscan::tables {

// operand role codes (low 5 bits)
enum Role : std::uint8_t {
    OP_NONE = 0,
    V_REG,    // ModRM.reg, vector
    W_RM,     // ModRM.rm, vector or memory
    U_RM,     // ModRM.rm, register-only, vector
    M_RM,     // ModRM.rm, memory-only
    H_VVVV,   // VEX/EVEX.vvvv, vector
    L_IS4,    // imm8[7:4], vector
    VSIB_MEM, // memory operand with vector index register
    G_REG,    // ModRM.reg, gpr
    E_RM,     // ModRM.rm, gpr or memory
    P_REG,    // ModRM.reg, mmx
    Q_RM,     // ModRM.rm, mmx or memory
    N_RM,     // ModRM.rm, register-only, mmx
    K_REG,    // ModRM.reg, opmask
    K_RM,     // ModRM.rm, opmask or memory
    K_VVVV,   // vvvv, opmask
    X0_IMPL,  // implicit xmm0 operand
    B_REG,    // ModRM.reg, bound register
    B_RM,     // ModRM.rm, bound or memory
    H_MOD3,   // vvvv, vector, present only in the register form (vmovss/vmovsd)
};

// vector operand width relative to the encoding's L/L'L (high 3 bits)
enum SizeCode : std::uint8_t {
    SZ_DEF = 0 << 5,      // xmm/ymm/zmm by L
    SZ_X = 1 << 5,        // always xmm
    SZ_HALF = 2 << 5,     // one step below L, floor xmm
    SZ_QUARTER = 3 << 5,  // two steps below L, floor xmm
    SZ_Y = 4 << 5,        // always ymm
};

constexpr std::uint8_t role_of(std::uint8_t code) { return code & 0x1f; }
constexpr std::uint8_t size_of(std::uint8_t code) { return code & 0xe0; }

enum Flag : std::uint16_t {
    FM = 1,        // has ModRM
    I8 = 2,        // imm8
    I16 = 4,       // imm16
    IZ = 8,        // imm16/32 by operand size
    IV = 16,       // imm16/32/64 by operand size + REX.W (mov reg, imm)
    REL8 = 32,
    RELZ = 64,
    MOFFS = 128,   // 64-bit moffs (32 with 67)
    STR = 256,     // rep-able string opcode
    NO64 = 512,    // invalid in 64-bit mode
    GRP = 1024,    // engine-special handling keyed on opcode
    PPSEL = 2048,  // mandatory prefix consumed as opcode selector
};

enum Ext : std::uint8_t { EXT_NONE = 0, EXT_SSE, EXT_AVX, EXT_OTHERV };

struct OpEntry {
    const char* name = nullptr;    // nullptr = invalid/unassigned
    const char* name_w = nullptr;  // REX.W / VEX.W=1 name override
    std::uint16_t flags = 0;
    std::uint8_t ops[4] = {0, 0, 0, 0};
    std::uint8_t ops_w[4] = {0, 0, 0, 0};  // W=1 operand override (gathers, cvt)
    std::uint8_t ext = EXT_NONE;

    bool valid() const { return name != nullptr; }
};

struct Maps {
    OpEntry onebyte[256];
    OpEntry m0f[256][4];
    OpEntry m0f38[256][4];
    OpEntry m0f3a[256][4];
    OpEntry vex1[256][4];
    OpEntry vex2[256][4];
    OpEntry vex3[256][4];
    OpEntry evex1[256][4];
    OpEntry evex2[256][4];
    OpEntry evex3[256][4];
    OpEntry evex5[256][4];
    OpEntry evex6[256][4];
    OpEntry xop8[256];
    OpEntry xop9[256];
    OpEntry xopA[256];
};

const Maps& maps();

// x87 mnemonic lookup: opcode D8..DF with the ModRM byte.
const char* x87_name(std::uint8_t opcode, std::uint8_t modrm);

}  // namespace dfscan::tables
