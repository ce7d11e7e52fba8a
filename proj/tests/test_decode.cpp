#include <doctest.h>

#include <random>

#include "dfscan/decode.hpp"

using namespace dfscan;

namespace {

Instruction decode_ok(std::initializer_list<std::uint8_t> bytes) {
    Bytes code(bytes);
    Instruction inst;
    REQUIRE(decode_one(ByteView(code), 0x1000, inst));
    return inst;
}

bool has_reg(const Instruction& inst, Bank bank, std::uint8_t index) {
    for (auto r : vector_registers_of(inst))
        if (r.bank == bank && r.index == index) return true;
    return false;
}

}  // namespace

TEST_CASE("decode_one: scalar SSE with mandatory prefixes") {
    // F2 0F 10 C1 = movsd %xmm1,%xmm0 — the SSE one, not the string one
    auto movsd = decode_ok({0xF2, 0x0F, 0x10, 0xC1});
    CHECK(movsd.mnemonic == "movsd");
    CHECK(movsd.length == 4);
    CHECK(!movsd.is_string_op);
    CHECK(!movsd.has_prefix(PFX_REPNE));  // F2 consumed as mandatory prefix
    CHECK(movsd.encoding == VexEncoding::legacy);
    CHECK(has_reg(movsd, Bank::xmm, 0));
    CHECK(has_reg(movsd, Bank::xmm, 1));

    // F3 0F 58 C2 = addss %xmm2,%xmm0
    auto addss = decode_ok({0xF3, 0x0F, 0x58, 0xC2});
    CHECK(addss.mnemonic == "addss");
    CHECK(!addss.has_prefix(PFX_REP));
    CHECK(has_reg(addss, Bank::xmm, 0));
    CHECK(has_reg(addss, Bank::xmm, 2));
}

TEST_CASE("decode_one: string ops keep their rep prefixes") {
    auto rep_movs = decode_ok({0xF3, 0xA5});  // rep movsd (string form)
    CHECK(rep_movs.is_string_op);
    CHECK(rep_movs.has_prefix(PFX_REP));
    CHECK(rep_movs.mnemonic.substr(0, 4) == "movs");
    CHECK(vector_registers_of(rep_movs).empty());

    auto plain = decode_ok({0xA5});
    CHECK(plain.is_string_op);
    CHECK(!plain.has_prefix(PFX_REP));

    auto repnz = decode_ok({0xF2, 0xA5});  // hardware reps it, prefix reported as REPNE
    CHECK(repnz.is_string_op);
    CHECK(repnz.has_prefix(PFX_REPNE));
    CHECK(!repnz.has_prefix(PFX_REP));

    // last rep-ish prefix wins: F2 F3 A5 is an effective rep
    auto both = decode_ok({0xF2, 0xF3, 0xA5});
    CHECK(both.has_prefix(PFX_REP));
    CHECK(!both.has_prefix(PFX_REPNE));
}

TEST_CASE("decode_one: VEX and EVEX encodings") {
    // C5 F4 58 D9 = vaddps %ymm1,%ymm1,%ymm3
    auto vaddps = decode_ok({0xC5, 0xF4, 0x58, 0xD9});
    CHECK(vaddps.mnemonic == "vaddps");
    CHECK(vaddps.encoding == VexEncoding::vex);
    CHECK(has_reg(vaddps, Bank::ymm, 1));
    CHECK(has_reg(vaddps, Bank::ymm, 3));

    // 62 F1 74 48 58 D9 = vaddps %zmm1,%zmm1,%zmm3
    auto evex = decode_ok({0x62, 0xF1, 0x74, 0x48, 0x58, 0xD9});
    CHECK(evex.mnemonic == "vaddps");
    CHECK(evex.encoding == VexEncoding::evex);
    CHECK(has_reg(evex, Bank::zmm, 1));
    CHECK(has_reg(evex, Bank::zmm, 3));

    // REX/EVEX high registers: 62 61 74 40 58 F9 -> zmm31
    auto high = decode_ok({0x62, 0x61, 0x74, 0x40, 0x58, 0xF9});
    CHECK(has_reg(high, Bank::zmm, 31));
}

TEST_CASE("decode_one: non-vector instructions carry no vector registers") {
    auto mov = decode_ok({0x48, 0x89, 0xD8});  // mov %rbx,%rax
    CHECK(vector_registers_of(mov).empty());
    auto nop = decode_ok({0x90});
    CHECK(vector_registers_of(nop).empty());
    // kmovw %k1,%k2 touches mask registers only
    auto kmov = decode_ok({0xC5, 0xF8, 0x90, 0xD1});
    CHECK(vector_registers_of(kmov).empty());
    // MMX stays out of the vector set: 0F 6F CA = movq %mm2,%mm1
    auto mmx = decode_ok({0x0F, 0x6F, 0xCA});
    CHECK(vector_registers_of(mmx).empty());
}

TEST_CASE("decode_one rejects garbage") {
    Bytes junk{0x62, 0x00};  // EVEX prefix with impossible payload
    Instruction inst;
    CHECK(!decode_one(ByteView(junk), 0, inst));
    Bytes empty;
    CHECK(!decode_one(ByteView(empty), 0, inst));
}

TEST_CASE("decode_linear tiles arbitrary input exactly") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<int> len(0, 300);
    for (int iter = 0; iter < 400; ++iter) {
        Bytes code(static_cast<std::size_t>(len(rng)));
        for (auto& b : code) b = static_cast<std::uint8_t>(byte(rng));
        const std::uint64_t base = 0x400000;
        auto events = decode_linear(ByteView(code), base);
        std::uint64_t cursor = base;
        for (const auto& ev : events) {
            CHECK(event_address(ev) == cursor);
            unsigned l = event_length(ev);
            CHECK(l >= 1);
            CHECK(l <= 15);
            cursor += l;
        }
        CHECK(cursor == base + code.size());
    }
}

TEST_CASE("LinearDecoder resynchronizes after an invalid byte") {
    // a truncated EVEX prefix cannot decode; the sweep must advance one byte
    // and still find the rep movs behind it
    Bytes code{0x62, 0xF3, 0xA5};
    auto events = decode_linear(ByteView(code), 0);
    bool saw_invalid = false, saw_movs = false;
    for (const auto& ev : events) {
        if (std::holds_alternative<InvalidByte>(ev)) saw_invalid = true;
        if (std::holds_alternative<Instruction>(ev) &&
            std::get<Instruction>(ev).is_string_op)
            saw_movs = true;
    }
    CHECK(saw_invalid);
    CHECK(saw_movs);
}
