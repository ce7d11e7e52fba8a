#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "dfscan/common.hpp"

namespace dfscan {

enum class Bank : std::uint8_t { gpr, x87, mmx, xmm, ymm, zmm, mask, other };

const char* bank_name(Bank b);

struct RegisterRef {
    Bank bank = Bank::other;
    std::uint8_t index = 0;

    auto operator<=>(const RegisterRef&) const = default;
};

std::string register_name(RegisterRef r);

// Prefix presence, after mandatory-prefix consumption: an F3 that selects an
// SSE opcode (movss) is not reported as `rep`.
enum PrefixFlag : unsigned {
    PFX_REP = 1u << 0,
    PFX_REPNE = 1u << 1,
    PFX_OPERAND_SIZE = 1u << 2,
    PFX_ADDRESS_SIZE = 1u << 3,
    PFX_LOCK = 1u << 4,
    PFX_SEGMENT = 1u << 5,
};

enum class VexEncoding : std::uint8_t { legacy, vex, evex };

// ISA extension attribute carried by the decoder tables; used only by the
// optional per-extension classification mode.
enum class IsaExt : std::uint8_t {
    none,     // no vector extension involved
    sse_family,   // SSE..SSE4.2 + SSSE3
    avx_family,   // AVX, AVX2, AVX-512, FMA, F16C, VAES, ...
    other_vector, // vector-register ops outside the SSE/AVX naming (AES-NI, SHA, ...)
};

struct Instruction {
    std::uint64_t address = 0;
    std::uint8_t length = 0;  // 1..15
    std::string_view mnemonic;  // canonical lowercase, static storage
    unsigned prefixes = 0;      // PrefixFlag bits
    VexEncoding encoding = VexEncoding::legacy;
    bool has_memory_operand = false;
    bool is_string_op = false;  // rep-able string opcode family (movs/stos/...)
    IsaExt ext = IsaExt::none;

    // fixed capacity: an x86 instruction names at most a handful of registers
    static constexpr int kMaxRegs = 6;
    RegisterRef explicit_regs[kMaxRegs];
    std::uint8_t n_explicit = 0;
    RegisterRef implicit_regs[2];
    std::uint8_t n_implicit = 0;

    void add_explicit(RegisterRef r) {
        if (n_explicit < kMaxRegs) explicit_regs[n_explicit++] = r;
    }
    void add_implicit(RegisterRef r) {
        if (n_implicit < 2) implicit_regs[n_implicit++] = r;
    }
    bool has_prefix(PrefixFlag f) const { return prefixes & f; }
};

struct InvalidByte {
    std::uint64_t address = 0;
    std::uint8_t byte = 0;
};

using DecodeEvent = std::variant<Instruction, InvalidByte>;

inline std::uint64_t event_address(const DecodeEvent& e) {
    return std::holds_alternative<Instruction>(e) ? std::get<Instruction>(e).address
                                                  : std::get<InvalidByte>(e).address;
}
inline unsigned event_length(const DecodeEvent& e) {
    return std::holds_alternative<Instruction>(e) ? std::get<Instruction>(e).length : 1u;
}

// Decodes a single instruction at the start of `code`. Returns false when the
// bytes do not form a valid instruction (caller resynchronizes by one byte).
bool decode_one(ByteView code, std::uint64_t address, Instruction& out);

// Linear sweep: decode at each position, emit InvalidByte and advance one
// byte on failure. Events tile the input exactly.
class LinearDecoder {
public:
    LinearDecoder(ByteView code, std::uint64_t base) : code_(code), base_(base) {}
    std::optional<DecodeEvent> next();

private:
    ByteView code_;
    std::uint64_t base_;
    std::size_t pos_ = 0;
};

std::vector<DecodeEvent> decode_linear(ByteView code, std::uint64_t base);

// Union of explicit and implicit registers restricted to xmm/ymm/zmm.
std::vector<RegisterRef> vector_registers_of(const Instruction& inst);

}  // namespace dfscan
