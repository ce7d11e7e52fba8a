#include <doctest.h>

#include "dfscan/classify.hpp"

using namespace dfscan;

namespace {

std::optional<TargetHit> classify_bytes(std::initializer_list<std::uint8_t> bytes,
                                        IsaMode mode = IsaMode::encoding) {
    Bytes code(bytes);
    Instruction inst;
    REQUIRE(decode_one(ByteView(code), 0, inst));
    return classify(inst, mode);
}

}  // namespace

TEST_CASE("movsd disambiguation: SSE load vs string move vs plain move") {
    auto sse = classify_bytes({0xF2, 0x0F, 0x10, 0xC1});
    REQUIRE(sse);
    CHECK(sse->mode == TargetMode::explicit_vector);
    CHECK(sse->isa_class == IsaClass::sse);
    CHECK(sse->mnemonic == "movsd");
    REQUIRE(sse->registers.size() == 2);
    CHECK(sse->registers[0] == RegisterRef{Bank::xmm, 0});
    CHECK(sse->registers[1] == RegisterRef{Bank::xmm, 1});

    auto rep = classify_bytes({0xF3, 0xA5});
    REQUIRE(rep);
    CHECK(rep->mode == TargetMode::implicit_rep_movs);
    CHECK(rep->isa_class == IsaClass::other);
    CHECK(rep->registers.empty());

    CHECK(!classify_bytes({0xA5}));  // unprefixed string move is not a target
}

TEST_CASE("repnz-prefixed movs is not a target but is flagged") {
    Bytes code{0xF2, 0xA5};
    Instruction inst;
    REQUIRE(decode_one(ByteView(code), 0, inst));
    CHECK(!classify(inst));
    CHECK(is_repne_movs(inst));

    // rep on a non-movs string op is not a target either
    CHECK(!classify_bytes({0xF3, 0xAB}));  // rep stosd
    // with both prefixes the last one wins: F3 F2 movs is repnz, not a target
    CHECK(!classify_bytes({0xF3, 0xF2, 0xA5}));
    // ...and the other order is an effective rep
    CHECK(classify_bytes({0xF2, 0xF3, 0xA5}));
}

TEST_CASE("encoding mode buckets by legacy/VEX/EVEX") {
    auto legacy = classify_bytes({0x66, 0x0F, 0xFE, 0xC1});  // paddd %xmm1,%xmm0
    REQUIRE(legacy);
    CHECK(legacy->isa_class == IsaClass::sse);

    auto vex = classify_bytes({0xC5, 0xF4, 0x58, 0xD9});  // vaddps %ymm
    REQUIRE(vex);
    CHECK(vex->isa_class == IsaClass::avx);

    auto evex = classify_bytes({0x62, 0xF1, 0x74, 0x48, 0x58, 0xD9});  // vaddps %zmm
    REQUIRE(evex);
    CHECK(evex->isa_class == IsaClass::avx);
}

TEST_CASE("extension mode reclassifies non-SIMD-family vector ops") {
    // aesenc %xmm1,%xmm0: legacy encoding (sse bucket) but the AES-NI
    // extension is outside the SSE naming, so extension mode says other.
    auto enc = classify_bytes({0x66, 0x0F, 0x38, 0xDC, 0xC1}, IsaMode::encoding);
    REQUIRE(enc);
    CHECK(enc->isa_class == IsaClass::sse);
    auto ext = classify_bytes({0x66, 0x0F, 0x38, 0xDC, 0xC1}, IsaMode::extension);
    REQUIRE(ext);
    CHECK(ext->isa_class == IsaClass::other);

    // plain SSE addss stays sse in both modes
    CHECK(classify_bytes({0xF3, 0x0F, 0x58, 0xC2}, IsaMode::extension)->isa_class ==
          IsaClass::sse);
}

TEST_CASE("non-vector instructions are not targets") {
    CHECK(!classify_bytes({0x48, 0x89, 0xD8}));             // mov %rbx,%rax
    CHECK(!classify_bytes({0x90}));                         // nop
    CHECK(!classify_bytes({0xC5, 0xF8, 0x90, 0xD1}));       // kmovw (mask regs)
    CHECK(!classify_bytes({0x0F, 0x6F, 0xCA}));             // movq (mmx)
}

TEST_CASE("register sets are sorted and deduplicated") {
    // addss %xmm0,%xmm0: the same register on both sides appears once
    auto self = classify_bytes({0xF3, 0x0F, 0x58, 0xC0});
    REQUIRE(self);
    REQUIRE(self->registers.size() == 1);
    CHECK(self->registers[0] == RegisterRef{Bank::xmm, 0});

    // three-operand VEX: registers come out in bank/index order
    auto three = classify_bytes({0xC4, 0xE1, 0x6C, 0x58, 0xDC});  // vaddps %ymm4,%ymm2,%ymm3
    REQUIRE(three);
    REQUIRE(three->registers.size() == 3);
    CHECK(three->registers[0].index == 2);
    CHECK(three->registers[1].index == 3);
    CHECK(three->registers[2].index == 4);
}
