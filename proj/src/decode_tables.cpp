#include "decode_tables.hpp"

#include <cstring>
#include <initializer_list>

namespace dfscan::tables {

namespace {

using u8 = std::uint8_t;
using u16 = std::uint16_t;

// operand shorthands
constexpr u8 Vd = V_REG | (u8)SZ_DEF;
constexpr u8 Vx = V_REG | (u8)SZ_X;
constexpr u8 Vh = V_REG | (u8)SZ_HALF;
constexpr u8 Vq = V_REG | (u8)SZ_QUARTER;
constexpr u8 Vy = V_REG | (u8)SZ_Y;
constexpr u8 Wd = W_RM | (u8)SZ_DEF;
constexpr u8 Wx = W_RM | (u8)SZ_X;
constexpr u8 Wh = W_RM | (u8)SZ_HALF;
constexpr u8 Wq = W_RM | (u8)SZ_QUARTER;
constexpr u8 Ud = U_RM | (u8)SZ_DEF;
constexpr u8 Ux = U_RM | (u8)SZ_X;
constexpr u8 Uy = U_RM | (u8)SZ_Y;
constexpr u8 Hd = H_VVVV | (u8)SZ_DEF;
constexpr u8 Hx = H_VVVV | (u8)SZ_X;
constexpr u8 Hh = H_VVVV | (u8)SZ_HALF;
constexpr u8 Hy = H_VVVV | (u8)SZ_Y;
constexpr u8 Ld = L_IS4 | (u8)SZ_DEF;
constexpr u8 Lx = L_IS4 | (u8)SZ_X;
constexpr u8 Gv = G_REG;
constexpr u8 Ev = E_RM;
constexpr u8 Pq = P_REG;
constexpr u8 Qq = Q_RM;
constexpr u8 Nq = N_RM;
constexpr u8 Kr = K_REG;
constexpr u8 Km = K_RM;
constexpr u8 Kv = K_VVVV;
constexpr u8 Mm = M_RM;
constexpr u8 X0 = X0_IMPL;
constexpr u8 SBd = VSIB_MEM | (u8)SZ_DEF;
constexpr u8 SBh = VSIB_MEM | (u8)SZ_HALF;
constexpr u8 H3x = H_MOD3 | (u8)SZ_X;

constexpr unsigned NP = 1, P66 = 2, PF3 = 4, PF2 = 8, ALL = 15;

struct Ops {
    u8 v[4] = {0, 0, 0, 0};
    Ops() = default;
    Ops(std::initializer_list<u8> l) {
        int i = 0;
        for (u8 x : l)
            if (i < 4) v[i++] = x;
    }
};

void put(OpEntry (*tab)[4], u8 op, unsigned ppmask, const char* n, u16 f = 0, Ops ops = {},
         u8 ext = EXT_NONE, const char* nw = nullptr, Ops opsw = {}) {
    for (unsigned pp = 0; pp < 4; ++pp) {
        if (!(ppmask & (1u << pp))) continue;
        OpEntry& e = tab[op][pp];
        e.name = n;
        e.name_w = nw;
        e.flags = f;
        if (ppmask != ALL && pp != 0) e.flags |= PPSEL;
        std::memcpy(e.ops, ops.v, 4);
        std::memcpy(e.ops_w, opsw.v, 4);
        e.ext = ext;
    }
}

void clear(OpEntry (*tab)[4], u8 op, unsigned ppmask = ALL) {
    for (unsigned pp = 0; pp < 4; ++pp)
        if (ppmask & (1u << pp)) tab[op][pp] = OpEntry{};
}

void put1(OpEntry* tab, u8 op, const char* n, u16 f = 0, Ops ops = {}, u8 ext = EXT_NONE,
          const char* nw = nullptr) {
    OpEntry& e = tab[op];
    e.name = n;
    e.name_w = nw;
    e.flags = f;
    std::memcpy(e.ops, ops.v, 4);
    e.ext = ext;
}

void build_onebyte(Maps& m) {
    OpEntry* t = m.onebyte;
    static constexpr const char* kAlu[] = {"add", "or", "adc", "sbb", "and", "sub", "xor", "cmp"};
    for (int i = 0; i < 8; ++i) {
        u8 base = static_cast<u8>(i * 8);
        put1(t, base + 0, kAlu[i], FM, {Ev, Gv});
        put1(t, base + 1, kAlu[i], FM, {Ev, Gv});
        put1(t, base + 2, kAlu[i], FM, {Gv, Ev});
        put1(t, base + 3, kAlu[i], FM, {Gv, Ev});
        put1(t, base + 4, kAlu[i], I8);
        put1(t, base + 5, kAlu[i], IZ);
    }
    for (u8 op : {0x06, 0x07, 0x0E, 0x16, 0x17, 0x1E, 0x1F, 0x27, 0x2F, 0x37, 0x3F, 0x60, 0x61,
                  0x82, 0x9A, 0xC4, 0xC5, 0xCE, 0xD4, 0xD5, 0xD6, 0xEA})
        put1(t, op, "bad", NO64);
    for (u8 op = 0x50; op <= 0x57; ++op) put1(t, op, "push");
    for (u8 op = 0x58; op <= 0x5F; ++op) put1(t, op, "pop");
    put1(t, 0x63, "movsxd", FM, {Gv, Ev});
    put1(t, 0x68, "push", IZ);
    put1(t, 0x69, "imul", FM | IZ, {Gv, Ev});
    put1(t, 0x6A, "push", I8);
    put1(t, 0x6B, "imul", FM | I8, {Gv, Ev});
    put1(t, 0x6C, "insb", STR);
    put1(t, 0x6D, "insd", STR);
    put1(t, 0x6E, "outsb", STR);
    put1(t, 0x6F, "outsd", STR);
    static constexpr const char* kJcc[] = {"jo", "jno", "jb", "jae", "je", "jne", "jbe", "ja",
                                           "js", "jns", "jp", "jnp", "jl", "jge", "jle", "jg"};
    for (int i = 0; i < 16; ++i) put1(t, static_cast<u8>(0x70 + i), kJcc[i], REL8);
    put1(t, 0x80, "alu", FM | I8 | GRP, {Ev});
    put1(t, 0x81, "alu", FM | IZ | GRP, {Ev});
    put1(t, 0x83, "alu", FM | I8 | GRP, {Ev});
    put1(t, 0x84, "test", FM, {Ev, Gv});
    put1(t, 0x85, "test", FM, {Ev, Gv});
    put1(t, 0x86, "xchg", FM, {Ev, Gv});
    put1(t, 0x87, "xchg", FM, {Ev, Gv});
    put1(t, 0x88, "mov", FM, {Ev, Gv});
    put1(t, 0x89, "mov", FM, {Ev, Gv});
    put1(t, 0x8A, "mov", FM, {Gv, Ev});
    put1(t, 0x8B, "mov", FM, {Gv, Ev});
    put1(t, 0x8C, "mov", FM, {Ev});
    put1(t, 0x8D, "lea", FM, {Gv, Mm});
    put1(t, 0x8E, "mov", FM, {Ev});
    put1(t, 0x8F, "pop", FM | GRP, {Ev});
    put1(t, 0x90, "nop");
    for (u8 op = 0x91; op <= 0x97; ++op) put1(t, op, "xchg");
    put1(t, 0x98, "cwde", GRP, {}, EXT_NONE, "cdqe");
    put1(t, 0x99, "cdq", GRP, {}, EXT_NONE, "cqo");
    put1(t, 0x9B, "fwait");
    put1(t, 0x9C, "pushf");
    put1(t, 0x9D, "popf");
    put1(t, 0x9E, "sahf");
    put1(t, 0x9F, "lahf");
    put1(t, 0xA0, "mov", MOFFS);
    put1(t, 0xA1, "mov", MOFFS);
    put1(t, 0xA2, "mov", MOFFS);
    put1(t, 0xA3, "mov", MOFFS);
    put1(t, 0xA4, "movsb", STR);
    put1(t, 0xA5, "movsd", STR);
    put1(t, 0xA6, "cmpsb", STR);
    put1(t, 0xA7, "cmpsd", STR);
    put1(t, 0xA8, "test", I8);
    put1(t, 0xA9, "test", IZ);
    put1(t, 0xAA, "stosb", STR);
    put1(t, 0xAB, "stosd", STR);
    put1(t, 0xAC, "lodsb", STR);
    put1(t, 0xAD, "lodsd", STR);
    put1(t, 0xAE, "scasb", STR);
    put1(t, 0xAF, "scasd", STR);
    for (u8 op = 0xB0; op <= 0xB7; ++op) put1(t, op, "mov", I8);
    for (u8 op = 0xB8; op <= 0xBF; ++op) put1(t, op, "mov", IV);
    put1(t, 0xC0, "shift", FM | I8 | GRP, {Ev});
    put1(t, 0xC1, "shift", FM | I8 | GRP, {Ev});
    put1(t, 0xC2, "ret", I16);
    put1(t, 0xC3, "ret");
    put1(t, 0xC6, "mov", FM | GRP, {Ev});
    put1(t, 0xC7, "mov", FM | GRP, {Ev});
    put1(t, 0xC8, "enter", I16 | I8);
    put1(t, 0xC9, "leave");
    put1(t, 0xCA, "retf", I16);
    put1(t, 0xCB, "retf");
    put1(t, 0xCC, "int3");
    put1(t, 0xCD, "int", I8);
    put1(t, 0xCF, "iret");
    put1(t, 0xD0, "shift", FM | GRP, {Ev});
    put1(t, 0xD1, "shift", FM | GRP, {Ev});
    put1(t, 0xD2, "shift", FM | GRP, {Ev});
    put1(t, 0xD3, "shift", FM | GRP, {Ev});
    put1(t, 0xD7, "xlat");
    put1(t, 0xE0, "loopne", REL8);
    put1(t, 0xE1, "loope", REL8);
    put1(t, 0xE2, "loop", REL8);
    put1(t, 0xE3, "jrcxz", REL8);
    put1(t, 0xE4, "in", I8);
    put1(t, 0xE5, "in", I8);
    put1(t, 0xE6, "out", I8);
    put1(t, 0xE7, "out", I8);
    put1(t, 0xE8, "call", RELZ);
    put1(t, 0xE9, "jmp", RELZ);
    put1(t, 0xEB, "jmp", REL8);
    put1(t, 0xEC, "in");
    put1(t, 0xED, "in");
    put1(t, 0xEE, "out");
    put1(t, 0xEF, "out");
    put1(t, 0xF1, "int1");
    put1(t, 0xF4, "hlt");
    put1(t, 0xF5, "cmc");
    put1(t, 0xF6, "f6", FM | GRP, {Ev});
    put1(t, 0xF7, "f7", FM | GRP, {Ev});
    put1(t, 0xF8, "clc");
    put1(t, 0xF9, "stc");
    put1(t, 0xFA, "cli");
    put1(t, 0xFB, "sti");
    put1(t, 0xFC, "cld");
    put1(t, 0xFD, "std");
    put1(t, 0xFE, "incdec", FM | GRP, {Ev});
    put1(t, 0xFF, "ff", FM | GRP, {Ev});
}

void build_0f(Maps& m) {
    auto* t = m.m0f;
    put(t, 0x00, ALL, "grp6", FM | GRP);
    put(t, 0x01, ALL, "grp7", FM | GRP);
    put(t, 0x02, ALL, "lar", FM, {Gv, Ev});
    put(t, 0x03, ALL, "lsl", FM, {Gv, Ev});
    put(t, 0x05, ALL, "syscall");
    put(t, 0x06, ALL, "clts");
    put(t, 0x07, ALL, "sysret");
    put(t, 0x08, ALL, "invd");
    put(t, 0x09, ALL, "wbinvd");
    put(t, 0x0B, ALL, "ud2");
    put(t, 0x0D, ALL, "prefetch", FM);
    put(t, 0x0E, ALL, "femms");
    put(t, 0x0F, ALL, "3dnow", FM | I8 | GRP, {Pq, Qq});
    put(t, 0x10, NP, "movups", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x10, P66, "movupd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x10, PF3, "movss", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x10, PF2, "movsd", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x11, NP, "movups", FM, {Wd, Vd}, EXT_SSE);
    put(t, 0x11, P66, "movupd", FM, {Wd, Vd}, EXT_SSE);
    put(t, 0x11, PF3, "movss", FM, {Wx, Vx}, EXT_SSE);
    put(t, 0x11, PF2, "movsd", FM, {Wx, Vx}, EXT_SSE);
    put(t, 0x12, NP, "movlps", FM | GRP, {Vx, Wx}, EXT_SSE);  // movhlps in reg form
    put(t, 0x12, P66, "movlpd", FM, {Vx, Mm}, EXT_SSE);
    put(t, 0x12, PF3, "movsldup", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x12, PF2, "movddup", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x13, NP, "movlps", FM, {Mm, Vx}, EXT_SSE);
    put(t, 0x13, P66, "movlpd", FM, {Mm, Vx}, EXT_SSE);
    put(t, 0x14, NP, "unpcklps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x14, P66, "unpcklpd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x15, NP, "unpckhps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x15, P66, "unpckhpd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x16, NP, "movhps", FM | GRP, {Vx, Wx}, EXT_SSE);  // movlhps in reg form
    put(t, 0x16, P66, "movhpd", FM, {Vx, Mm}, EXT_SSE);
    put(t, 0x16, PF3, "movshdup", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x17, NP, "movhps", FM, {Mm, Vx}, EXT_SSE);
    put(t, 0x17, P66, "movhpd", FM, {Mm, Vx}, EXT_SSE);
    for (u8 op = 0x18; op <= 0x1F; ++op) put(t, op, ALL, "nop", FM | GRP);
    for (u8 op = 0x20; op <= 0x23; ++op) put(t, op, ALL, "mov", FM);
    put(t, 0x28, NP, "movaps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x28, P66, "movapd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x29, NP, "movaps", FM, {Wd, Vd}, EXT_SSE);
    put(t, 0x29, P66, "movapd", FM, {Wd, Vd}, EXT_SSE);
    put(t, 0x2A, NP, "cvtpi2ps", FM, {Vx, Qq}, EXT_SSE);
    put(t, 0x2A, P66, "cvtpi2pd", FM, {Vx, Qq}, EXT_SSE);
    put(t, 0x2A, PF3, "cvtsi2ss", FM, {Vx, Ev}, EXT_SSE);
    put(t, 0x2A, PF2, "cvtsi2sd", FM, {Vx, Ev}, EXT_SSE);
    put(t, 0x2B, NP, "movntps", FM, {Mm, Vd}, EXT_SSE);
    put(t, 0x2B, P66, "movntpd", FM, {Mm, Vd}, EXT_SSE);
    put(t, 0x2B, PF3, "movntss", FM, {Mm, Vx}, EXT_SSE);
    put(t, 0x2B, PF2, "movntsd", FM, {Mm, Vx}, EXT_SSE);
    put(t, 0x2C, NP, "cvttps2pi", FM, {Pq, Wx}, EXT_SSE);
    put(t, 0x2C, P66, "cvttpd2pi", FM, {Pq, Wx}, EXT_SSE);
    put(t, 0x2C, PF3, "cvttss2si", FM, {Gv, Wx}, EXT_SSE);
    put(t, 0x2C, PF2, "cvttsd2si", FM, {Gv, Wx}, EXT_SSE);
    put(t, 0x2D, NP, "cvtps2pi", FM, {Pq, Wx}, EXT_SSE);
    put(t, 0x2D, P66, "cvtpd2pi", FM, {Pq, Wx}, EXT_SSE);
    put(t, 0x2D, PF3, "cvtss2si", FM, {Gv, Wx}, EXT_SSE);
    put(t, 0x2D, PF2, "cvtsd2si", FM, {Gv, Wx}, EXT_SSE);
    put(t, 0x2E, NP, "ucomiss", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x2E, P66, "ucomisd", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x2F, NP, "comiss", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x2F, P66, "comisd", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x30, ALL, "wrmsr");
    put(t, 0x31, ALL, "rdtsc");
    put(t, 0x32, ALL, "rdmsr");
    put(t, 0x33, ALL, "rdpmc");
    put(t, 0x34, ALL, "sysenter");
    put(t, 0x35, ALL, "sysexit");
    put(t, 0x37, ALL, "getsec");
    static constexpr const char* kCmov[] = {"cmovo", "cmovno", "cmovb", "cmovae",
                                            "cmove", "cmovne", "cmovbe", "cmova",
                                            "cmovs", "cmovns", "cmovp", "cmovnp",
                                            "cmovl", "cmovge", "cmovle", "cmovg"};
    for (int i = 0; i < 16; ++i) put(t, static_cast<u8>(0x40 + i), ALL, kCmov[i], FM, {Gv, Ev});
    put(t, 0x50, NP, "movmskps", FM, {Gv, Ux}, EXT_SSE);
    put(t, 0x50, P66, "movmskpd", FM, {Gv, Ux}, EXT_SSE);
    put(t, 0x51, NP, "sqrtps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x51, P66, "sqrtpd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x51, PF3, "sqrtss", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x51, PF2, "sqrtsd", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x52, NP, "rsqrtps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x52, PF3, "rsqrtss", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x53, NP, "rcpps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x53, PF3, "rcpss", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x54, NP, "andps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x54, P66, "andpd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x55, NP, "andnps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x55, P66, "andnpd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x56, NP, "orps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x56, P66, "orpd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x57, NP, "xorps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x57, P66, "xorpd", FM, {Vd, Wd}, EXT_SSE);
    struct Arith { u8 op; const char* ps; const char* pd; const char* ss; const char* sd; };
    static constexpr Arith kArith[] = {
        {0x58, "addps", "addpd", "addss", "addsd"},
        {0x59, "mulps", "mulpd", "mulss", "mulsd"},
        {0x5C, "subps", "subpd", "subss", "subsd"},
        {0x5D, "minps", "minpd", "minss", "minsd"},
        {0x5E, "divps", "divpd", "divss", "divsd"},
        {0x5F, "maxps", "maxpd", "maxss", "maxsd"},
    };
    for (const auto& a : kArith) {
        put(t, a.op, NP, a.ps, FM, {Vd, Wd}, EXT_SSE);
        put(t, a.op, P66, a.pd, FM, {Vd, Wd}, EXT_SSE);
        put(t, a.op, PF3, a.ss, FM, {Vx, Wx}, EXT_SSE);
        put(t, a.op, PF2, a.sd, FM, {Vx, Wx}, EXT_SSE);
    }
    put(t, 0x5A, NP, "cvtps2pd", FM, {Vd, Wh}, EXT_SSE);
    put(t, 0x5A, P66, "cvtpd2ps", FM, {Vh, Wd}, EXT_SSE);
    put(t, 0x5A, PF3, "cvtss2sd", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x5A, PF2, "cvtsd2ss", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x5B, NP, "cvtdq2ps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x5B, P66, "cvtps2dq", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x5B, PF3, "cvttps2dq", FM, {Vd, Wd}, EXT_SSE);
    static constexpr const char* kPck[] = {"punpcklbw", "punpcklwd", "punpckldq", "packsswb",
                                           "pcmpgtb", "pcmpgtw", "pcmpgtd", "packuswb",
                                           "punpckhbw", "punpckhwd", "punpckhdq", "packssdw"};
    for (int i = 0; i < 12; ++i) {
        put(t, static_cast<u8>(0x60 + i), NP, kPck[i], FM, {Pq, Qq}, EXT_SSE);
        put(t, static_cast<u8>(0x60 + i), P66, kPck[i], FM, {Vd, Wd}, EXT_SSE);
    }
    put(t, 0x6C, P66, "punpcklqdq", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x6D, P66, "punpckhqdq", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x6E, NP, "movd", FM, {Pq, Ev}, EXT_SSE, "movq");
    put(t, 0x6E, P66, "movd", FM, {Vx, Ev}, EXT_SSE, "movq");
    put(t, 0x6F, NP, "movq", FM, {Pq, Qq}, EXT_SSE);
    put(t, 0x6F, P66, "movdqa", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x6F, PF3, "movdqu", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x70, NP, "pshufw", FM | I8, {Pq, Qq}, EXT_SSE);
    put(t, 0x70, P66, "pshufd", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x70, PF3, "pshufhw", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x70, PF2, "pshuflw", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x71, NP, "psllw", FM | I8 | GRP, {Nq}, EXT_SSE);
    put(t, 0x71, P66, "psllw", FM | I8 | GRP, {Ux}, EXT_SSE);
    put(t, 0x72, NP, "pslld", FM | I8 | GRP, {Nq}, EXT_SSE);
    put(t, 0x72, P66, "pslld", FM | I8 | GRP, {Ux}, EXT_SSE);
    put(t, 0x73, NP, "psllq", FM | I8 | GRP, {Nq}, EXT_SSE);
    put(t, 0x73, P66, "psllq", FM | I8 | GRP, {Ux}, EXT_SSE);
    put(t, 0x74, NP, "pcmpeqb", FM, {Pq, Qq}, EXT_SSE);
    put(t, 0x74, P66, "pcmpeqb", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x75, NP, "pcmpeqw", FM, {Pq, Qq}, EXT_SSE);
    put(t, 0x75, P66, "pcmpeqw", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x76, NP, "pcmpeqd", FM, {Pq, Qq}, EXT_SSE);
    put(t, 0x76, P66, "pcmpeqd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x77, NP, "emms");
    put(t, 0x78, NP, "vmread", FM, {Ev, Gv});
    put(t, 0x78, P66, "extrq", FM | I16, {Ux}, EXT_SSE);
    put(t, 0x78, PF2, "insertq", FM | I16, {Vx, Ux}, EXT_SSE);
    put(t, 0x79, NP, "vmwrite", FM, {Gv, Ev});
    put(t, 0x79, P66, "extrq", FM, {Vx, Ux}, EXT_SSE);
    put(t, 0x79, PF2, "insertq", FM, {Vx, Ux}, EXT_SSE);
    put(t, 0x7C, P66, "haddpd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x7C, PF2, "haddps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x7D, P66, "hsubpd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x7D, PF2, "hsubps", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x7E, NP, "movd", FM, {Ev, Pq}, EXT_SSE, "movq");
    put(t, 0x7E, P66, "movd", FM, {Ev, Vx}, EXT_SSE, "movq");
    put(t, 0x7E, PF3, "movq", FM, {Vx, Wx}, EXT_SSE);
    put(t, 0x7F, NP, "movq", FM, {Qq, Pq}, EXT_SSE);
    put(t, 0x7F, P66, "movdqa", FM, {Wd, Vd}, EXT_SSE);
    put(t, 0x7F, PF3, "movdqu", FM, {Wd, Vd}, EXT_SSE);
    static constexpr const char* kJccL[] = {"jo", "jno", "jb", "jae", "je", "jne", "jbe", "ja",
                                            "js", "jns", "jp", "jnp", "jl", "jge", "jle", "jg"};
    for (int i = 0; i < 16; ++i) put(t, static_cast<u8>(0x80 + i), ALL, kJccL[i], RELZ);
    static constexpr const char* kSet[] = {"seto", "setno", "setb", "setae", "sete", "setne",
                                           "setbe", "seta", "sets", "setns", "setp", "setnp",
                                           "setl", "setge", "setle", "setg"};
    for (int i = 0; i < 16; ++i) put(t, static_cast<u8>(0x90 + i), ALL, kSet[i], FM, {Ev});
    put(t, 0xA0, ALL, "push");
    put(t, 0xA1, ALL, "pop");
    put(t, 0xA2, ALL, "cpuid");
    put(t, 0xA3, ALL, "bt", FM, {Ev, Gv});
    put(t, 0xA4, ALL, "shld", FM | I8, {Ev, Gv});
    put(t, 0xA5, ALL, "shld", FM, {Ev, Gv});
    put(t, 0xA8, ALL, "push");
    put(t, 0xA9, ALL, "pop");
    put(t, 0xAA, ALL, "rsm");
    put(t, 0xAB, ALL, "bts", FM, {Ev, Gv});
    put(t, 0xAC, ALL, "shrd", FM | I8, {Ev, Gv});
    put(t, 0xAD, ALL, "shrd", FM, {Ev, Gv});
    put(t, 0xAE, ALL, "grp15", FM | GRP);
    put(t, 0xAF, ALL, "imul", FM, {Gv, Ev});
    put(t, 0xB0, ALL, "cmpxchg", FM, {Ev, Gv});
    put(t, 0xB1, ALL, "cmpxchg", FM, {Ev, Gv});
    put(t, 0xB2, ALL, "lss", FM, {Gv, Mm});
    put(t, 0xB3, ALL, "btr", FM, {Ev, Gv});
    put(t, 0xB4, ALL, "lfs", FM, {Gv, Mm});
    put(t, 0xB5, ALL, "lgs", FM, {Gv, Mm});
    put(t, 0xB6, ALL, "movzx", FM, {Gv, Ev});
    put(t, 0xB7, ALL, "movzx", FM, {Gv, Ev});
    put(t, 0xB8, PF3, "popcnt", FM, {Gv, Ev});
    put(t, 0xB9, ALL, "ud1", FM);
    put(t, 0xBA, ALL, "btx", FM | I8 | GRP, {Ev});
    put(t, 0xBB, ALL, "btc", FM, {Ev, Gv});
    put(t, 0xBC, NP | P66, "bsf", FM, {Gv, Ev});
    put(t, 0xBC, PF3, "tzcnt", FM, {Gv, Ev});
    put(t, 0xBD, NP | P66, "bsr", FM, {Gv, Ev});
    put(t, 0xBD, PF3, "lzcnt", FM, {Gv, Ev});
    put(t, 0xBE, ALL, "movsx", FM, {Gv, Ev});
    put(t, 0xBF, ALL, "movsx", FM, {Gv, Ev});
    put(t, 0xC0, ALL, "xadd", FM, {Ev, Gv});
    put(t, 0xC1, ALL, "xadd", FM, {Ev, Gv});
    put(t, 0xC2, NP, "cmpps", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0xC2, P66, "cmppd", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0xC2, PF3, "cmpss", FM | I8, {Vx, Wx}, EXT_SSE);
    put(t, 0xC2, PF2, "cmpsd", FM | I8, {Vx, Wx}, EXT_SSE);
    put(t, 0xC3, NP, "movnti", FM, {Mm, Gv});
    put(t, 0xC4, NP, "pinsrw", FM | I8, {Pq, Ev}, EXT_SSE);
    put(t, 0xC4, P66, "pinsrw", FM | I8, {Vx, Ev}, EXT_SSE);
    put(t, 0xC5, NP, "pextrw", FM | I8, {Gv, Nq}, EXT_SSE);
    put(t, 0xC5, P66, "pextrw", FM | I8, {Gv, Ux}, EXT_SSE);
    put(t, 0xC6, NP, "shufps", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0xC6, P66, "shufpd", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0xC7, ALL, "grp9", FM | GRP);
    for (u8 op = 0xC8; op <= 0xCF; ++op) put(t, op, ALL, "bswap");
    put(t, 0xD0, P66, "addsubpd", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0xD0, PF2, "addsubps", FM, {Vd, Wd}, EXT_SSE);
    struct MmxOp { u8 op; const char* n; };
    static constexpr MmxOp kMmx[] = {
        {0xD1, "psrlw"}, {0xD2, "psrld"}, {0xD3, "psrlq"}, {0xD4, "paddq"}, {0xD5, "pmullw"},
        {0xD8, "psubusb"}, {0xD9, "psubusw"}, {0xDA, "pminub"}, {0xDB, "pand"},
        {0xDC, "paddusb"}, {0xDD, "paddusw"}, {0xDE, "pmaxub"}, {0xDF, "pandn"},
        {0xE0, "pavgb"}, {0xE1, "psraw"}, {0xE2, "psrad"}, {0xE3, "pavgw"},
        {0xE4, "pmulhuw"}, {0xE5, "pmulhw"},
        {0xE8, "psubsb"}, {0xE9, "psubsw"}, {0xEA, "pminsw"}, {0xEB, "por"},
        {0xEC, "paddsb"}, {0xED, "paddsw"}, {0xEE, "pmaxsw"}, {0xEF, "pxor"},
        {0xF1, "psllw"}, {0xF2, "pslld"}, {0xF3, "psllq"}, {0xF4, "pmuludq"},
        {0xF5, "pmaddwd"}, {0xF6, "psadbw"},
        {0xF8, "psubb"}, {0xF9, "psubw"}, {0xFA, "psubd"}, {0xFB, "psubq"},
        {0xFC, "paddb"}, {0xFD, "paddw"}, {0xFE, "paddd"},
    };
    for (const auto& x : kMmx) {
        put(t, x.op, NP, x.n, FM, {Pq, Qq}, EXT_SSE);
        put(t, x.op, P66, x.n, FM, {Vd, Wd}, EXT_SSE);
    }
    put(t, 0xD6, P66, "movq", FM, {Wx, Vx}, EXT_SSE);
    put(t, 0xD6, PF3, "movq2dq", FM, {Vx, Nq}, EXT_SSE);
    put(t, 0xD6, PF2, "movdq2q", FM, {Pq, Ux}, EXT_SSE);
    put(t, 0xD7, NP, "pmovmskb", FM, {Gv, Nq}, EXT_SSE);
    put(t, 0xD7, P66, "pmovmskb", FM, {Gv, Ux}, EXT_SSE);
    put(t, 0xE6, P66, "cvttpd2dq", FM, {Vh, Wd}, EXT_SSE);
    put(t, 0xE6, PF3, "cvtdq2pd", FM, {Vd, Wh}, EXT_SSE);
    put(t, 0xE6, PF2, "cvtpd2dq", FM, {Vh, Wd}, EXT_SSE);
    put(t, 0xE7, NP, "movntq", FM, {Mm, Pq}, EXT_SSE);
    put(t, 0xE7, P66, "movntdq", FM, {Mm, Vd}, EXT_SSE);
    put(t, 0xF0, PF2, "lddqu", FM, {Vd, Mm}, EXT_SSE);
    put(t, 0xF7, NP, "maskmovq", FM, {Pq, Nq}, EXT_SSE);
    put(t, 0xF7, P66, "maskmovdqu", FM, {Vx, Ux}, EXT_SSE);
    put(t, 0xFF, ALL, "ud0", FM);
}

void build_0f38(Maps& m) {
    auto* t = m.m0f38;
    static constexpr const char* kSsse3[] = {"pshufb", "phaddw", "phaddd", "phaddsw",
                                             "pmaddubsw", "phsubw", "phsubd", "phsubsw",
                                             "psignb", "psignw", "psignd", "pmulhrsw"};
    for (int i = 0; i < 12; ++i) {
        put(t, static_cast<u8>(i), NP, kSsse3[i], FM, {Pq, Qq}, EXT_SSE);
        put(t, static_cast<u8>(i), P66, kSsse3[i], FM, {Vd, Wd}, EXT_SSE);
    }
    put(t, 0x10, P66, "pblendvb", FM, {Vd, Wd, X0}, EXT_SSE);
    put(t, 0x14, P66, "blendvps", FM, {Vd, Wd, X0}, EXT_SSE);
    put(t, 0x15, P66, "blendvpd", FM, {Vd, Wd, X0}, EXT_SSE);
    put(t, 0x17, P66, "ptest", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x1C, NP, "pabsb", FM, {Pq, Qq}, EXT_SSE);
    put(t, 0x1C, P66, "pabsb", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x1D, NP, "pabsw", FM, {Pq, Qq}, EXT_SSE);
    put(t, 0x1D, P66, "pabsw", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x1E, NP, "pabsd", FM, {Pq, Qq}, EXT_SSE);
    put(t, 0x1E, P66, "pabsd", FM, {Vd, Wd}, EXT_SSE);
    static constexpr const char* kPmovsx[] = {"pmovsxbw", "pmovsxbd", "pmovsxbq",
                                              "pmovsxwd", "pmovsxwq", "pmovsxdq"};
    static constexpr const char* kPmovzx[] = {"pmovzxbw", "pmovzxbd", "pmovzxbq",
                                              "pmovzxwd", "pmovzxwq", "pmovzxdq"};
    for (int i = 0; i < 6; ++i) {
        put(t, static_cast<u8>(0x20 + i), P66, kPmovsx[i], FM, {Vd, Wx}, EXT_SSE);
        put(t, static_cast<u8>(0x30 + i), P66, kPmovzx[i], FM, {Vd, Wx}, EXT_SSE);
    }
    put(t, 0x28, P66, "pmuldq", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x29, P66, "pcmpeqq", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x2A, P66, "movntdqa", FM, {Vd, Mm}, EXT_SSE);
    put(t, 0x2B, P66, "packusdw", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x37, P66, "pcmpgtq", FM, {Vd, Wd}, EXT_SSE);
    struct Min2 { u8 op; const char* n; };
    static constexpr Min2 kMin[] = {
        {0x38, "pminsb"}, {0x39, "pminsd"}, {0x3A, "pminuw"}, {0x3B, "pminud"},
        {0x3C, "pmaxsb"}, {0x3D, "pmaxsd"}, {0x3E, "pmaxuw"}, {0x3F, "pmaxud"},
        {0x40, "pmulld"},
    };
    for (const auto& x : kMin) put(t, x.op, P66, x.n, FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x41, P66, "phminposuw", FM, {Vd, Wd}, EXT_SSE);
    put(t, 0x80, P66, "invept", FM, {Gv, Mm});
    put(t, 0x81, P66, "invvpid", FM, {Gv, Mm});
    put(t, 0x82, P66, "invpcid", FM, {Gv, Mm});
    put(t, 0xC8, NP, "sha1nexte", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xC9, NP, "sha1msg1", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xCA, NP, "sha1msg2", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xCB, NP, "sha256rnds2", FM, {Vx, Wx, X0}, EXT_OTHERV);
    put(t, 0xCC, NP, "sha256msg1", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xCD, NP, "sha256msg2", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xCF, P66, "gf2p8mulb", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xDB, P66, "aesimc", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xDC, P66, "aesenc", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xDD, P66, "aesenclast", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xDE, P66, "aesdec", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xDF, P66, "aesdeclast", FM, {Vx, Wx}, EXT_OTHERV);
    // Key Locker
    put(t, 0xD8, PF3, "aesencwide128kl", FM, {Mm}, EXT_OTHERV);
    put(t, 0xDC, PF3, "aesenc128kl", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xDD, PF3, "aesdec128kl", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xDE, PF3, "aesenc256kl", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xDF, PF3, "aesdec256kl", FM, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xFA, PF3, "encodekey128", FM, {Gv, Ev});
    put(t, 0xFB, PF3, "encodekey256", FM, {Gv, Ev});
    put(t, 0xF0, NP | P66, "movbe", FM, {Gv, Ev});
    put(t, 0xF0, PF2, "crc32", FM, {Gv, Ev});
    put(t, 0xF1, NP | P66, "movbe", FM, {Ev, Gv});
    put(t, 0xF1, PF2, "crc32", FM, {Gv, Ev});
    put(t, 0xF6, P66, "adcx", FM, {Gv, Ev});
    put(t, 0xF6, PF3, "adox", FM, {Gv, Ev});
}

void build_0f3a(Maps& m) {
    auto* t = m.m0f3a;
    put(t, 0x08, P66, "roundps", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x09, P66, "roundpd", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x0A, P66, "roundss", FM | I8, {Vx, Wx}, EXT_SSE);
    put(t, 0x0B, P66, "roundsd", FM | I8, {Vx, Wx}, EXT_SSE);
    put(t, 0x0C, P66, "blendps", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x0D, P66, "blendpd", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x0E, P66, "pblendw", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x0F, NP, "palignr", FM | I8, {Pq, Qq}, EXT_SSE);
    put(t, 0x0F, P66, "palignr", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x14, P66, "pextrb", FM | I8, {Ev, Vx}, EXT_SSE);
    put(t, 0x15, P66, "pextrw", FM | I8, {Ev, Vx}, EXT_SSE);
    put(t, 0x16, P66, "pextrd", FM | I8, {Ev, Vx}, EXT_SSE, "pextrq");
    put(t, 0x17, P66, "extractps", FM | I8, {Ev, Vx}, EXT_SSE);
    put(t, 0x20, P66, "pinsrb", FM | I8, {Vx, Ev}, EXT_SSE);
    put(t, 0x21, P66, "insertps", FM | I8, {Vx, Wx}, EXT_SSE);
    put(t, 0x22, P66, "pinsrd", FM | I8, {Vx, Ev}, EXT_SSE, "pinsrq");
    put(t, 0x40, P66, "dpps", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x41, P66, "dppd", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x42, P66, "mpsadbw", FM | I8, {Vd, Wd}, EXT_SSE);
    put(t, 0x44, P66, "pclmulqdq", FM | I8, {Vd, Wd}, EXT_OTHERV);
    put(t, 0x60, P66, "pcmpestrm", FM | I8, {Vx, Wx}, EXT_SSE);
    put(t, 0x61, P66, "pcmpestri", FM | I8, {Vx, Wx}, EXT_SSE);
    put(t, 0x62, P66, "pcmpistrm", FM | I8, {Vx, Wx}, EXT_SSE);
    put(t, 0x63, P66, "pcmpistri", FM | I8, {Vx, Wx}, EXT_SSE);
    put(t, 0xCC, NP, "sha1rnds4", FM | I8, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xCE, P66, "gf2p8affineqb", FM | I8, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xCF, P66, "gf2p8affineinvqb", FM | I8, {Vx, Wx}, EXT_OTHERV);
    put(t, 0xDF, P66, "aeskeygenassist", FM | I8, {Vx, Wx}, EXT_OTHERV);
}

void build_vex(Maps& m) {
    auto* t = m.vex1;
    put(t, 0x10, NP, "vmovups", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x10, P66, "vmovupd", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x10, PF3, "vmovss", FM, {Vx, H3x, Wx}, EXT_AVX);
    put(t, 0x10, PF2, "vmovsd", FM, {Vx, H3x, Wx}, EXT_AVX);
    put(t, 0x11, NP, "vmovups", FM, {Wd, Vd}, EXT_AVX);
    put(t, 0x11, P66, "vmovupd", FM, {Wd, Vd}, EXT_AVX);
    // binutils sizes the rm register of the store form by VEX.L
    put(t, 0x11, PF3, "vmovss", FM, {Wd, H3x, Vx}, EXT_AVX);
    put(t, 0x11, PF2, "vmovsd", FM, {Wd, H3x, Vx}, EXT_AVX);
    put(t, 0x12, NP, "vmovlps", FM | GRP, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0x12, P66, "vmovlpd", FM, {Vx, Hx, Mm}, EXT_AVX);
    put(t, 0x12, PF3, "vmovsldup", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x12, PF2, "vmovddup", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x13, NP, "vmovlps", FM, {Mm, Vx}, EXT_AVX);
    put(t, 0x13, P66, "vmovlpd", FM, {Mm, Vx}, EXT_AVX);
    put(t, 0x14, NP, "vunpcklps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x14, P66, "vunpcklpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x15, NP, "vunpckhps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x15, P66, "vunpckhpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x16, NP, "vmovhps", FM | GRP, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0x16, P66, "vmovhpd", FM, {Vx, Hx, Mm}, EXT_AVX);
    put(t, 0x16, PF3, "vmovshdup", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x17, NP, "vmovhps", FM, {Mm, Vx}, EXT_AVX);
    put(t, 0x17, P66, "vmovhpd", FM, {Mm, Vx}, EXT_AVX);
    put(t, 0x28, NP, "vmovaps", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x28, P66, "vmovapd", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x29, NP, "vmovaps", FM, {Wd, Vd}, EXT_AVX);
    put(t, 0x29, P66, "vmovapd", FM, {Wd, Vd}, EXT_AVX);
    put(t, 0x2A, PF3, "vcvtsi2ss", FM, {Vx, Hx, Ev}, EXT_AVX);
    put(t, 0x2A, PF2, "vcvtsi2sd", FM, {Vx, Hx, Ev}, EXT_AVX);
    put(t, 0x2B, NP, "vmovntps", FM, {Mm, Vd}, EXT_AVX);
    put(t, 0x2B, P66, "vmovntpd", FM, {Mm, Vd}, EXT_AVX);
    put(t, 0x2C, PF3, "vcvttss2si", FM, {Gv, Wx}, EXT_AVX);
    put(t, 0x2C, PF2, "vcvttsd2si", FM, {Gv, Wx}, EXT_AVX);
    put(t, 0x2D, PF3, "vcvtss2si", FM, {Gv, Wx}, EXT_AVX);
    put(t, 0x2D, PF2, "vcvtsd2si", FM, {Gv, Wx}, EXT_AVX);
    put(t, 0x2E, NP, "vucomiss", FM, {Vx, Wx}, EXT_AVX);
    put(t, 0x2E, P66, "vucomisd", FM, {Vx, Wx}, EXT_AVX);
    put(t, 0x2F, NP, "vcomiss", FM, {Vx, Wx}, EXT_AVX);
    put(t, 0x2F, P66, "vcomisd", FM, {Vx, Wx}, EXT_AVX);
    // opmask register ops (AVX-512 but VEX-encoded)
    put(t, 0x41, NP, "kandw", FM, {Kr, Kv, Km}, EXT_NONE, "kandq");
    put(t, 0x41, P66, "kandb", FM, {Kr, Kv, Km}, EXT_NONE, "kandd");
    put(t, 0x42, NP, "kandnw", FM, {Kr, Kv, Km}, EXT_NONE, "kandnq");
    put(t, 0x42, P66, "kandnb", FM, {Kr, Kv, Km}, EXT_NONE, "kandnd");
    put(t, 0x44, NP, "knotw", FM, {Kr, Km}, EXT_NONE, "knotq");
    put(t, 0x44, P66, "knotb", FM, {Kr, Km}, EXT_NONE, "knotd");
    put(t, 0x45, NP, "korw", FM, {Kr, Kv, Km}, EXT_NONE, "korq");
    put(t, 0x45, P66, "korb", FM, {Kr, Kv, Km}, EXT_NONE, "kord");
    put(t, 0x46, NP, "kxnorw", FM, {Kr, Kv, Km}, EXT_NONE, "kxnorq");
    put(t, 0x46, P66, "kxnorb", FM, {Kr, Kv, Km}, EXT_NONE, "kxnord");
    put(t, 0x47, NP, "kxorw", FM, {Kr, Kv, Km}, EXT_NONE, "kxorq");
    put(t, 0x47, P66, "kxorb", FM, {Kr, Kv, Km}, EXT_NONE, "kxord");
    put(t, 0x4A, NP, "kaddw", FM, {Kr, Kv, Km}, EXT_NONE, "kaddq");
    put(t, 0x4A, P66, "kaddb", FM, {Kr, Kv, Km}, EXT_NONE, "kaddd");
    put(t, 0x4B, NP, "kunpckwd", FM, {Kr, Kv, Km}, EXT_NONE, "kunpckdq");
    put(t, 0x4B, P66, "kunpckbw", FM, {Kr, Kv, Km}, EXT_NONE);
    put(t, 0x50, NP, "vmovmskps", FM, {Gv, Ud}, EXT_AVX);
    put(t, 0x50, P66, "vmovmskpd", FM, {Gv, Ud}, EXT_AVX);
    put(t, 0x51, NP, "vsqrtps", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x51, P66, "vsqrtpd", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x51, PF3, "vsqrtss", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0x51, PF2, "vsqrtsd", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0x52, NP, "vrsqrtps", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x52, PF3, "vrsqrtss", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0x53, NP, "vrcpps", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x53, PF3, "vrcpss", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0x54, NP, "vandps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x54, P66, "vandpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x55, NP, "vandnps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x55, P66, "vandnpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x56, NP, "vorps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x56, P66, "vorpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x57, NP, "vxorps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x57, P66, "vxorpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    struct VArith { u8 op; const char* ps; const char* pd; const char* ss; const char* sd; };
    static constexpr VArith kVArith[] = {
        {0x58, "vaddps", "vaddpd", "vaddss", "vaddsd"},
        {0x59, "vmulps", "vmulpd", "vmulss", "vmulsd"},
        {0x5C, "vsubps", "vsubpd", "vsubss", "vsubsd"},
        {0x5D, "vminps", "vminpd", "vminss", "vminsd"},
        {0x5E, "vdivps", "vdivpd", "vdivss", "vdivsd"},
        {0x5F, "vmaxps", "vmaxpd", "vmaxss", "vmaxsd"},
    };
    for (const auto& a : kVArith) {
        put(t, a.op, NP, a.ps, FM, {Vd, Hd, Wd}, EXT_AVX);
        put(t, a.op, P66, a.pd, FM, {Vd, Hd, Wd}, EXT_AVX);
        put(t, a.op, PF3, a.ss, FM, {Vx, Hx, Wx}, EXT_AVX);
        put(t, a.op, PF2, a.sd, FM, {Vx, Hx, Wx}, EXT_AVX);
    }
    put(t, 0x5A, NP, "vcvtps2pd", FM, {Vd, Wh}, EXT_AVX);
    put(t, 0x5A, P66, "vcvtpd2ps", FM, {Vh, Wd}, EXT_AVX);
    put(t, 0x5A, PF3, "vcvtss2sd", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0x5A, PF2, "vcvtsd2ss", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0x5B, NP, "vcvtdq2ps", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x5B, P66, "vcvtps2dq", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x5B, PF3, "vcvttps2dq", FM, {Vd, Wd}, EXT_AVX);
    static constexpr const char* kVPck[] = {"vpunpcklbw", "vpunpcklwd", "vpunpckldq",
                                            "vpacksswb", "vpcmpgtb", "vpcmpgtw", "vpcmpgtd",
                                            "vpackuswb", "vpunpckhbw", "vpunpckhwd",
                                            "vpunpckhdq", "vpackssdw", "vpunpcklqdq",
                                            "vpunpckhqdq"};
    for (int i = 0; i < 14; ++i)
        put(t, static_cast<u8>(0x60 + i), P66, kVPck[i], FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x6E, P66, "vmovd", FM, {Vx, Ev}, EXT_AVX, "vmovq");
    put(t, 0x6F, P66, "vmovdqa", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x6F, PF3, "vmovdqu", FM, {Vd, Wd}, EXT_AVX);
    put(t, 0x70, P66, "vpshufd", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t, 0x70, PF3, "vpshufhw", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t, 0x70, PF2, "vpshuflw", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t, 0x71, P66, "vpsllw", FM | I8 | GRP, {Hd, Ud}, EXT_AVX);
    put(t, 0x72, P66, "vpslld", FM | I8 | GRP, {Hd, Ud}, EXT_AVX);
    put(t, 0x73, P66, "vpsllq", FM | I8 | GRP, {Hd, Ud}, EXT_AVX);
    put(t, 0x74, P66, "vpcmpeqb", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x75, P66, "vpcmpeqw", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x76, P66, "vpcmpeqd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x77, NP, "vzeroupper", GRP, {}, EXT_AVX);
    put(t, 0x7C, P66, "vhaddpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x7C, PF2, "vhaddps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x7D, P66, "vhsubpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x7D, PF2, "vhsubps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0x7E, P66, "vmovd", FM, {Ev, Vx}, EXT_AVX, "vmovq");
    put(t, 0x7E, PF3, "vmovq", FM, {Vx, Wx}, EXT_AVX);
    put(t, 0x7F, P66, "vmovdqa", FM, {Wd, Vd}, EXT_AVX);
    put(t, 0x7F, PF3, "vmovdqu", FM, {Wd, Vd}, EXT_AVX);
    put(t, 0x90, NP, "kmovw", FM, {Kr, Km}, EXT_NONE, "kmovq");
    put(t, 0x90, P66, "kmovb", FM, {Kr, Km}, EXT_NONE, "kmovd");
    put(t, 0x91, NP, "kmovw", FM, {Mm, Kr}, EXT_NONE, "kmovq");
    put(t, 0x91, P66, "kmovb", FM, {Mm, Kr}, EXT_NONE, "kmovd");
    put(t, 0x92, NP, "kmovw", FM, {Kr, Ev}, EXT_NONE);
    put(t, 0x92, P66, "kmovb", FM, {Kr, Ev}, EXT_NONE);
    put(t, 0x92, PF2, "kmovd", FM, {Kr, Ev}, EXT_NONE, "kmovq");
    put(t, 0x93, NP, "kmovw", FM, {Gv, Km}, EXT_NONE);
    put(t, 0x93, P66, "kmovb", FM, {Gv, Km}, EXT_NONE);
    put(t, 0x93, PF2, "kmovd", FM, {Gv, Km}, EXT_NONE, "kmovq");
    put(t, 0x98, NP, "kortestw", FM, {Kr, Km}, EXT_NONE, "kortestq");
    put(t, 0x98, P66, "kortestb", FM, {Kr, Km}, EXT_NONE, "kortestd");
    put(t, 0x99, NP, "ktestw", FM, {Kr, Km}, EXT_NONE, "ktestq");
    put(t, 0x99, P66, "ktestb", FM, {Kr, Km}, EXT_NONE, "ktestd");
    put(t, 0xAE, NP, "vldmxcsr", FM | GRP, {}, EXT_AVX);
    put(t, 0xC2, NP, "vcmpps", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0xC2, P66, "vcmppd", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0xC2, PF3, "vcmpss", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0xC2, PF2, "vcmpsd", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t, 0xC4, P66, "vpinsrw", FM | I8, {Vx, Hx, Ev}, EXT_AVX);
    put(t, 0xC5, P66, "vpextrw", FM | I8, {Gv, Ux}, EXT_AVX);
    put(t, 0xC6, NP, "vshufps", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0xC6, P66, "vshufpd", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0xD0, P66, "vaddsubpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t, 0xD0, PF2, "vaddsubps", FM, {Vd, Hd, Wd}, EXT_AVX);
    struct VMmx { u8 op; const char* n; };
    static constexpr VMmx kVInt[] = {
        {0xD1, "vpsrlw"}, {0xD2, "vpsrld"}, {0xD3, "vpsrlq"}, {0xD4, "vpaddq"},
        {0xD5, "vpmullw"},
        {0xD8, "vpsubusb"}, {0xD9, "vpsubusw"}, {0xDA, "vpminub"}, {0xDB, "vpand"},
        {0xDC, "vpaddusb"}, {0xDD, "vpaddusw"}, {0xDE, "vpmaxub"}, {0xDF, "vpandn"},
        {0xE0, "vpavgb"}, {0xE1, "vpsraw"}, {0xE2, "vpsrad"}, {0xE3, "vpavgw"},
        {0xE4, "vpmulhuw"}, {0xE5, "vpmulhw"},
        {0xE8, "vpsubsb"}, {0xE9, "vpsubsw"}, {0xEA, "vpminsw"}, {0xEB, "vpor"},
        {0xEC, "vpaddsb"}, {0xED, "vpaddsw"}, {0xEE, "vpmaxsw"}, {0xEF, "vpxor"},
        {0xF1, "vpsllw"}, {0xF2, "vpslld"}, {0xF3, "vpsllq"}, {0xF4, "vpmuludq"},
        {0xF5, "vpmaddwd"}, {0xF6, "vpsadbw"},
        {0xF8, "vpsubb"}, {0xF9, "vpsubw"}, {0xFA, "vpsubd"}, {0xFB, "vpsubq"},
        {0xFC, "vpaddb"}, {0xFD, "vpaddw"}, {0xFE, "vpaddd"},
    };
    for (const auto& x : kVInt) put(t, x.op, P66, x.n, FM, {Vd, Hd, Wd}, EXT_AVX);
    // shift-by-vector: the count operand is always xmm
    static constexpr VMmx kVShift[] = {
        {0xD1, "vpsrlw"}, {0xD2, "vpsrld"}, {0xD3, "vpsrlq"},
        {0xE1, "vpsraw"}, {0xE2, "vpsrad"},
        {0xF1, "vpsllw"}, {0xF2, "vpslld"}, {0xF3, "vpsllq"},
    };
    for (const auto& x : kVShift) put(t, x.op, P66, x.n, FM, {Vd, Hd, Wx}, EXT_AVX);
    put(t, 0xD6, P66, "vmovq", FM, {Wx, Vx}, EXT_AVX);
    put(t, 0xD7, P66, "vpmovmskb", FM, {Gv, Ud}, EXT_AVX);
    put(t, 0xE6, P66, "vcvttpd2dq", FM, {Vh, Wd}, EXT_AVX);
    put(t, 0xE6, PF3, "vcvtdq2pd", FM, {Vd, Wh}, EXT_AVX);
    put(t, 0xE6, PF2, "vcvtpd2dq", FM, {Vh, Wd}, EXT_AVX);
    put(t, 0xE7, P66, "vmovntdq", FM, {Mm, Vd}, EXT_AVX);
    put(t, 0xF0, PF2, "vlddqu", FM, {Vd, Mm}, EXT_AVX);
    put(t, 0xF7, P66, "vmaskmovdqu", FM, {Vx, Ux}, EXT_AVX);

    auto* t2 = m.vex2;
    static constexpr const char* kVSsse3[] = {"vpshufb", "vphaddw", "vphaddd", "vphaddsw",
                                              "vpmaddubsw", "vphsubw", "vphsubd", "vphsubsw",
                                              "vpsignb", "vpsignw", "vpsignd", "vpmulhrsw"};
    for (int i = 0; i < 12; ++i)
        put(t2, static_cast<u8>(i), P66, kVSsse3[i], FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x0C, P66, "vpermilps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x0D, P66, "vpermilpd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x0E, P66, "vtestps", FM, {Vd, Wd}, EXT_AVX);
    put(t2, 0x0F, P66, "vtestpd", FM, {Vd, Wd}, EXT_AVX);
    put(t2, 0x13, P66, "vcvtph2ps", FM, {Vd, Wh}, EXT_AVX);
    put(t2, 0x16, P66, "vpermps", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x17, P66, "vptest", FM, {Vd, Wd}, EXT_AVX);
    put(t2, 0x18, P66, "vbroadcastss", FM, {Vd, Wx}, EXT_AVX);
    put(t2, 0x19, P66, "vbroadcastsd", FM, {Vd, Wx}, EXT_AVX);
    put(t2, 0x1A, P66, "vbroadcastf128", FM, {Vy, Mm}, EXT_AVX);
    put(t2, 0x1C, P66, "vpabsb", FM, {Vd, Wd}, EXT_AVX);
    put(t2, 0x1D, P66, "vpabsw", FM, {Vd, Wd}, EXT_AVX);
    put(t2, 0x1E, P66, "vpabsd", FM, {Vd, Wd}, EXT_AVX);
    static constexpr const char* kVPmovsx[] = {"vpmovsxbw", "vpmovsxbd", "vpmovsxbq",
                                               "vpmovsxwd", "vpmovsxwq", "vpmovsxdq"};
    static constexpr const char* kVPmovzx[] = {"vpmovzxbw", "vpmovzxbd", "vpmovzxbq",
                                               "vpmovzxwd", "vpmovzxwq", "vpmovzxdq"};
    static constexpr u8 kPmovSz[] = {Wh, Wq, Wq, Wh, Wq, Wh};
    for (int i = 0; i < 6; ++i) {
        put(t2, static_cast<u8>(0x20 + i), P66, kVPmovsx[i], FM, {Vd, kPmovSz[i]}, EXT_AVX);
        put(t2, static_cast<u8>(0x30 + i), P66, kVPmovzx[i], FM, {Vd, kPmovSz[i]}, EXT_AVX);
    }
    put(t2, 0x28, P66, "vpmuldq", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x29, P66, "vpcmpeqq", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x2A, P66, "vmovntdqa", FM, {Vd, Mm}, EXT_AVX);
    put(t2, 0x2B, P66, "vpackusdw", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x2C, P66, "vmaskmovps", FM, {Vd, Hd, Mm}, EXT_AVX);
    put(t2, 0x2D, P66, "vmaskmovpd", FM, {Vd, Hd, Mm}, EXT_AVX);
    put(t2, 0x2E, P66, "vmaskmovps", FM, {Mm, Hd, Vd}, EXT_AVX);
    put(t2, 0x2F, P66, "vmaskmovpd", FM, {Mm, Hd, Vd}, EXT_AVX);
    put(t2, 0x36, P66, "vpermd", FM, {Vd, Hd, Wd}, EXT_AVX);
    static constexpr VMmx kVMin[] = {
        {0x37, "vpcmpgtq"}, {0x38, "vpminsb"}, {0x39, "vpminsd"}, {0x3A, "vpminuw"},
        {0x3B, "vpminud"}, {0x3C, "vpmaxsb"}, {0x3D, "vpmaxsd"}, {0x3E, "vpmaxuw"},
        {0x3F, "vpmaxud"}, {0x40, "vpmulld"},
    };
    for (const auto& x : kVMin) put(t2, x.op, P66, x.n, FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x41, P66, "vphminposuw", FM, {Vx, Wx}, EXT_AVX);
    put(t2, 0x45, P66, "vpsrlvd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpsrlvq");
    put(t2, 0x46, P66, "vpsravd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x47, P66, "vpsllvd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpsllvq");
    // binutils decodes the VEX VNNI forms regardless of the pp field
    put(t2, 0x50, ALL, "vpdpbusd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x51, ALL, "vpdpbusds", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x52, ALL, "vpdpwssd", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x53, ALL, "vpdpwssds", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x58, P66, "vpbroadcastd", FM, {Vd, Wx}, EXT_AVX);
    put(t2, 0x59, P66, "vpbroadcastq", FM, {Vd, Wx}, EXT_AVX);
    put(t2, 0x5A, P66, "vbroadcasti128", FM, {Vy, Mm}, EXT_AVX);
    put(t2, 0x78, P66, "vpbroadcastb", FM, {Vd, Wx}, EXT_AVX);
    put(t2, 0x79, P66, "vpbroadcastw", FM, {Vd, Wx}, EXT_AVX);
    put(t2, 0x8C, P66, "vpmaskmovd", FM, {Vd, Hd, Mm}, EXT_AVX, "vpmaskmovq");
    put(t2, 0x8E, P66, "vpmaskmovd", FM, {Mm, Hd, Vd}, EXT_AVX, "vpmaskmovq");
    put(t2, 0x90, P66, "vpgatherdd", FM, {Vd, SBd, Hd}, EXT_AVX, "vpgatherdq",
        {Vd, SBh, Hd});
    put(t2, 0x91, P66, "vpgatherqd", FM, {Vh, SBd, Hh}, EXT_AVX, "vpgatherqq",
        {Vd, SBd, Hd});
    put(t2, 0x92, P66, "vgatherdps", FM, {Vd, SBd, Hd}, EXT_AVX, "vgatherdpd",
        {Vd, SBh, Hd});
    put(t2, 0x93, P66, "vgatherqps", FM, {Vh, SBd, Hh}, EXT_AVX, "vgatherqpd",
        {Vd, SBd, Hd});
    struct Fma { u8 op; const char* n; const char* nw; bool scalar; };
    static constexpr Fma kFma[] = {
        {0x96, "vfmaddsub132ps", "vfmaddsub132pd", false},
        {0x97, "vfmsubadd132ps", "vfmsubadd132pd", false},
        {0x98, "vfmadd132ps", "vfmadd132pd", false},
        {0x99, "vfmadd132ss", "vfmadd132sd", true},
        {0x9A, "vfmsub132ps", "vfmsub132pd", false},
        {0x9B, "vfmsub132ss", "vfmsub132sd", true},
        {0x9C, "vfnmadd132ps", "vfnmadd132pd", false},
        {0x9D, "vfnmadd132ss", "vfnmadd132sd", true},
        {0x9E, "vfnmsub132ps", "vfnmsub132pd", false},
        {0x9F, "vfnmsub132ss", "vfnmsub132sd", true},
        {0xA6, "vfmaddsub213ps", "vfmaddsub213pd", false},
        {0xA7, "vfmsubadd213ps", "vfmsubadd213pd", false},
        {0xA8, "vfmadd213ps", "vfmadd213pd", false},
        {0xA9, "vfmadd213ss", "vfmadd213sd", true},
        {0xAA, "vfmsub213ps", "vfmsub213pd", false},
        {0xAB, "vfmsub213ss", "vfmsub213sd", true},
        {0xAC, "vfnmadd213ps", "vfnmadd213pd", false},
        {0xAD, "vfnmadd213ss", "vfnmadd213sd", true},
        {0xAE, "vfnmsub213ps", "vfnmsub213pd", false},
        {0xAF, "vfnmsub213ss", "vfnmsub213sd", true},
        {0xB6, "vfmaddsub231ps", "vfmaddsub231pd", false},
        {0xB7, "vfmsubadd231ps", "vfmsubadd231pd", false},
        {0xB8, "vfmadd231ps", "vfmadd231pd", false},
        {0xB9, "vfmadd231ss", "vfmadd231sd", true},
        {0xBA, "vfmsub231ps", "vfmsub231pd", false},
        {0xBB, "vfmsub231ss", "vfmsub231sd", true},
        {0xBC, "vfnmadd231ps", "vfnmadd231pd", false},
        {0xBD, "vfnmadd231ss", "vfnmadd231sd", true},
        {0xBE, "vfnmsub231ps", "vfnmsub231pd", false},
        {0xBF, "vfnmsub231ss", "vfnmsub231sd", true},
    };
    for (const auto& f : kFma) {
        if (f.scalar)
            put(t2, f.op, P66, f.n, FM, {Vx, Hx, Wx}, EXT_AVX, f.nw);
        else
            put(t2, f.op, P66, f.n, FM, {Vd, Hd, Wd}, EXT_AVX, f.nw);
    }
    put(t2, 0xCF, P66, "vgf2p8mulb", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0xDB, P66, "vaesimc", FM, {Vx, Wx}, EXT_AVX);
    put(t2, 0xDC, P66, "vaesenc", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0xDD, P66, "vaesenclast", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0xDE, P66, "vaesdec", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0xDF, P66, "vaesdeclast", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0xF2, NP, "andn", FM, {Gv, Ev});
    put(t2, 0xF3, NP, "blsr", FM | GRP, {Ev});
    put(t2, 0xF5, NP, "bzhi", FM, {Gv, Ev});
    put(t2, 0xF5, PF3, "pext", FM, {Gv, Ev});
    put(t2, 0xF5, PF2, "pdep", FM, {Gv, Ev});
    put(t2, 0xF6, PF2, "mulx", FM, {Gv, Ev});
    put(t2, 0xF7, NP, "bextr", FM, {Gv, Ev});
    put(t2, 0xF7, P66, "shlx", FM, {Gv, Ev});
    put(t2, 0xF7, PF3, "sarx", FM, {Gv, Ev});
    put(t2, 0xF7, PF2, "shrx", FM, {Gv, Ev});

    auto* t3 = m.vex3;
    put(t3, 0x00, P66, "vpermq", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x01, P66, "vpermpd", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x02, P66, "vpblendd", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x04, P66, "vpermilps", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x05, P66, "vpermilpd", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x06, P66, "vperm2f128", FM | I8, {Vy, Hy, Wd}, EXT_AVX);
    put(t3, 0x08, P66, "vroundps", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x09, P66, "vroundpd", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x0A, P66, "vroundss", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t3, 0x0B, P66, "vroundsd", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t3, 0x0C, P66, "vblendps", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x0D, P66, "vblendpd", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x0E, P66, "vpblendw", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x0F, P66, "vpalignr", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x14, P66, "vpextrb", FM | I8, {Ev, Vx}, EXT_AVX);
    put(t3, 0x15, P66, "vpextrw", FM | I8, {Ev, Vx}, EXT_AVX);
    put(t3, 0x16, P66, "vpextrd", FM | I8, {Ev, Vx}, EXT_AVX, "vpextrq");
    put(t3, 0x17, P66, "vextractps", FM | I8, {Ev, Vx}, EXT_AVX);
    put(t3, 0x18, P66, "vinsertf128", FM | I8, {Vy, Hy, Wx}, EXT_AVX);
    put(t3, 0x19, P66, "vextractf128", FM | I8, {Wx, Vy}, EXT_AVX);
    put(t3, 0x1D, P66, "vcvtps2ph", FM | I8, {Wh, Vd}, EXT_AVX);
    put(t3, 0x20, P66, "vpinsrb", FM | I8, {Vx, Hx, Ev}, EXT_AVX);
    put(t3, 0x21, P66, "vinsertps", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t3, 0x22, P66, "vpinsrd", FM | I8, {Vx, Hx, Ev}, EXT_AVX, "vpinsrq");
    put(t3, 0x30, P66, "kshiftrb", FM | I8, {Kr, Km}, EXT_NONE, "kshiftrw");
    put(t3, 0x31, P66, "kshiftrd", FM | I8, {Kr, Km}, EXT_NONE, "kshiftrq");
    put(t3, 0x32, P66, "kshiftlb", FM | I8, {Kr, Km}, EXT_NONE, "kshiftlw");
    put(t3, 0x33, P66, "kshiftld", FM | I8, {Kr, Km}, EXT_NONE, "kshiftlq");
    put(t3, 0x38, P66, "vinserti128", FM | I8, {Vy, Hy, Wx}, EXT_AVX);
    put(t3, 0x39, P66, "vextracti128", FM | I8, {Wx, Vy}, EXT_AVX);
    put(t3, 0x40, P66, "vdpps", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x41, P66, "vdppd", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t3, 0x42, P66, "vmpsadbw", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x44, P66, "vpclmulqdq", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x46, P66, "vperm2i128", FM | I8, {Vy, Hy, Wd}, EXT_AVX);
    put(t3, 0x48, P66, "vpermil2ps", FM | I8, {Vd, Hd, Wd, Ld}, EXT_AVX);
    put(t3, 0x49, P66, "vpermil2pd", FM | I8, {Vd, Hd, Wd, Ld}, EXT_AVX);
    // FMA4 (AMD, is4 operand)
    struct Fma4 { u8 op; const char* n; bool scalar; };
    static constexpr Fma4 kFma4[] = {
        {0x5C, "vfmaddsubps", false}, {0x5D, "vfmaddsubpd", false},
        {0x5E, "vfmsubaddps", false}, {0x5F, "vfmsubaddpd", false},
        {0x68, "vfmaddps", false}, {0x69, "vfmaddpd", false},
        {0x6A, "vfmaddss", true}, {0x6B, "vfmaddsd", true},
        {0x6C, "vfmsubps", false}, {0x6D, "vfmsubpd", false},
        {0x6E, "vfmsubss", true}, {0x6F, "vfmsubsd", true},
        {0x78, "vfnmaddps", false}, {0x79, "vfnmaddpd", false},
        {0x7A, "vfnmaddss", true}, {0x7B, "vfnmaddsd", true},
        {0x7C, "vfnmsubps", false}, {0x7D, "vfnmsubpd", false},
        {0x7E, "vfnmsubss", true}, {0x7F, "vfnmsubsd", true},
    };
    for (const auto& f : kFma4) {
        if (f.scalar)
            put(t3, f.op, P66, f.n, FM | I8, {Vx, Hx, Wx, Lx}, EXT_AVX);
        else
            put(t3, f.op, P66, f.n, FM | I8, {Vd, Hd, Wd, Ld}, EXT_AVX);
    }
    put(t3, 0x4A, P66, "vblendvps", FM | I8, {Vd, Hd, Wd, Ld}, EXT_AVX);
    put(t3, 0x4B, P66, "vblendvpd", FM | I8, {Vd, Hd, Wd, Ld}, EXT_AVX);
    put(t3, 0x4C, P66, "vpblendvb", FM | I8, {Vd, Hd, Wd, Ld}, EXT_AVX);
    put(t3, 0x60, P66, "vpcmpestrm", FM | I8, {Vx, Wx}, EXT_AVX);
    put(t3, 0x61, P66, "vpcmpestri", FM | I8, {Vx, Wx}, EXT_AVX);
    put(t3, 0x62, P66, "vpcmpistrm", FM | I8, {Vx, Wx}, EXT_AVX);
    put(t3, 0x63, P66, "vpcmpistri", FM | I8, {Vx, Wx}, EXT_AVX);
    put(t3, 0xCE, P66, "vgf2p8affineqb", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0xCF, P66, "vgf2p8affineinvqb", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0xDF, P66, "vaeskeygenassist", FM | I8, {Vx, Wx}, EXT_AVX);
    put(t3, 0xF0, PF2, "rorx", FM | I8, {Gv, Ev});
}

// The EVEX maps start as a copy of the VEX maps (most AVX2 ops promote
// unchanged) and are then patched for EVEX-only semantics and additions.
void build_evex(Maps& m) {
    std::memcpy(m.evex1, m.vex1, sizeof(m.evex1));
    std::memcpy(m.evex2, m.vex2, sizeof(m.evex2));
    std::memcpy(m.evex3, m.vex3, sizeof(m.evex3));
    auto* t = m.evex1;
    // VEX-only encodings
    for (u8 op : {0x41, 0x42, 0x44, 0x45, 0x46, 0x47, 0x4A, 0x4B, 0x50, 0x52, 0x53,
                  0x77, 0x7C, 0x7D, 0x90, 0x91, 0x92, 0x93, 0x98, 0x99, 0xAE, 0xD0,
                  0xD7, 0xF0, 0xF7})
        clear(t, op);
    // comparisons write an opmask register under EVEX
    put(t, 0x64, P66, "vpcmpgtb", FM, {Kr, Hd, Wd}, EXT_AVX);
    put(t, 0x65, P66, "vpcmpgtw", FM, {Kr, Hd, Wd}, EXT_AVX);
    put(t, 0x66, P66, "vpcmpgtd", FM, {Kr, Hd, Wd}, EXT_AVX);
    put(t, 0x74, P66, "vpcmpeqb", FM, {Kr, Hd, Wd}, EXT_AVX);
    put(t, 0x75, P66, "vpcmpeqw", FM, {Kr, Hd, Wd}, EXT_AVX);
    put(t, 0x76, P66, "vpcmpeqd", FM, {Kr, Hd, Wd}, EXT_AVX);
    put(t, 0xC2, NP, "vcmpps", FM | I8, {Kr, Hd, Wd}, EXT_AVX);
    put(t, 0xC2, P66, "vcmppd", FM | I8, {Kr, Hd, Wd}, EXT_AVX);
    put(t, 0xC2, PF3, "vcmpss", FM | I8, {Kr, Hx, Wx}, EXT_AVX);
    put(t, 0xC2, PF2, "vcmpsd", FM | I8, {Kr, Hx, Wx}, EXT_AVX);
    put(t, 0x5B, NP, "vcvtdq2ps", FM, {Vd, Wd}, EXT_AVX, "vcvtqq2ps", {Vh, Wd});
    put(t, 0x6F, P66, "vmovdqa32", FM, {Vd, Wd}, EXT_AVX, "vmovdqa64");
    put(t, 0x6F, PF3, "vmovdqu32", FM, {Vd, Wd}, EXT_AVX, "vmovdqu64");
    put(t, 0x6F, PF2, "vmovdqu8", FM, {Vd, Wd}, EXT_AVX, "vmovdqu16");
    put(t, 0x7F, P66, "vmovdqa32", FM, {Wd, Vd}, EXT_AVX, "vmovdqa64");
    put(t, 0x7F, PF3, "vmovdqu32", FM, {Wd, Vd}, EXT_AVX, "vmovdqu64");
    put(t, 0x7F, PF2, "vmovdqu8", FM, {Wd, Vd}, EXT_AVX, "vmovdqu16");
    put(t, 0x71, P66, "vpsllw", FM | I8 | GRP, {Hd, Wd}, EXT_AVX);
    put(t, 0x72, P66, "vpslld", FM | I8 | GRP, {Hd, Wd}, EXT_AVX);
    put(t, 0x72, NP, "vprord", FM | I8 | GRP, {Hd, Wd}, EXT_AVX);
    put(t, 0x73, P66, "vpsllq", FM | I8 | GRP, {Hd, Wd}, EXT_AVX);
    put(t, 0xE2, P66, "vpsrad", FM, {Vd, Hd, Wx}, EXT_AVX, "vpsraq");
    put(t, 0x78, NP, "vcvttps2udq", FM, {Vd, Wd}, EXT_AVX, "vcvttpd2udq", {Vh, Wd});
    put(t, 0x78, P66, "vcvttps2uqq", FM, {Vd, Wh}, EXT_AVX, "vcvttpd2uqq", {Vd, Wd});
    put(t, 0x78, PF3, "vcvttss2usi", FM, {Gv, Wx}, EXT_AVX);
    put(t, 0x78, PF2, "vcvttsd2usi", FM, {Gv, Wx}, EXT_AVX);
    put(t, 0x79, NP, "vcvtps2udq", FM, {Vd, Wd}, EXT_AVX, "vcvtpd2udq", {Vh, Wd});
    put(t, 0x79, P66, "vcvtps2uqq", FM, {Vd, Wh}, EXT_AVX, "vcvtpd2uqq", {Vd, Wd});
    put(t, 0x79, PF3, "vcvtss2usi", FM, {Gv, Wx}, EXT_AVX);
    put(t, 0x79, PF2, "vcvtsd2usi", FM, {Gv, Wx}, EXT_AVX);
    put(t, 0x7A, P66, "vcvttps2qq", FM, {Vd, Wh}, EXT_AVX, "vcvttpd2qq", {Vd, Wd});
    put(t, 0x7A, PF3, "vcvtudq2pd", FM, {Vd, Wh}, EXT_AVX, "vcvtuqq2pd", {Vd, Wd});
    put(t, 0x7A, PF2, "vcvtudq2ps", FM, {Vd, Wd}, EXT_AVX, "vcvtuqq2ps", {Vh, Wd});
    put(t, 0x7B, P66, "vcvtps2qq", FM, {Vd, Wh}, EXT_AVX, "vcvtpd2qq", {Vd, Wd});
    put(t, 0x7B, PF3, "vcvtusi2ss", FM, {Vx, Hx, Ev}, EXT_AVX);
    put(t, 0x7B, PF2, "vcvtusi2sd", FM, {Vx, Hx, Ev}, EXT_AVX);
    put(t, 0xE6, PF3, "vcvtdq2pd", FM, {Vd, Wh}, EXT_AVX, "vcvtqq2pd", {Vd, Wd});

    auto* t2 = m.evex2;
    for (u8 op : {0x0E, 0x0F, 0x17, 0x41, 0xF2, 0xF3, 0xF5, 0xF6, 0xF7}) clear(t2, op);
    put(t2, 0x10, PF3, "vpmovuswb", FM, {Wh, Vd}, EXT_AVX);
    put(t2, 0x11, PF3, "vpmovusdb", FM, {Wq, Vd}, EXT_AVX);
    put(t2, 0x12, PF3, "vpmovusqb", FM, {Wq, Vd}, EXT_AVX);
    put(t2, 0x13, PF3, "vpmovusdw", FM, {Wh, Vd}, EXT_AVX);
    put(t2, 0x14, PF3, "vpmovusqw", FM, {Wq, Vd}, EXT_AVX);
    put(t2, 0x15, PF3, "vpmovusqd", FM, {Wh, Vd}, EXT_AVX);
    put(t2, 0x10, P66, "vpsrlvw", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x11, P66, "vpsravw", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x12, P66, "vpsllvw", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x14, P66, "vprorvd", FM, {Vd, Hd, Wd}, EXT_AVX, "vprorvq");
    put(t2, 0x15, P66, "vprolvd", FM, {Vd, Hd, Wd}, EXT_AVX, "vprolvq");
    put(t2, 0x16, P66, "vpermps", FM, {Vd, Hd, Wd}, EXT_AVX, "vpermpd");
    put(t2, 0x19, P66, "vbroadcastf32x2", FM, {Vd, Wx}, EXT_AVX, "vbroadcastsd");
    put(t2, 0x1A, P66, "vbroadcastf32x4", FM, {Vd, Mm}, EXT_AVX, "vbroadcastf64x2");
    put(t2, 0x1B, P66, "vbroadcastf32x8", FM, {Vd, Mm}, EXT_AVX, "vbroadcastf64x4");
    put(t2, 0x1F, P66, "vpabsq", FM, {Vd, Wd}, EXT_AVX);
    put(t2, 0x20, PF3, "vpmovswb", FM, {Wh, Vd}, EXT_AVX);
    put(t2, 0x21, PF3, "vpmovsdb", FM, {Wq, Vd}, EXT_AVX);
    put(t2, 0x22, PF3, "vpmovsqb", FM, {Wq, Vd}, EXT_AVX);
    put(t2, 0x23, PF3, "vpmovsdw", FM, {Wh, Vd}, EXT_AVX);
    put(t2, 0x24, PF3, "vpmovsqw", FM, {Wq, Vd}, EXT_AVX);
    put(t2, 0x25, PF3, "vpmovsqd", FM, {Wh, Vd}, EXT_AVX);
    put(t2, 0x26, P66, "vptestmb", FM, {Kr, Hd, Wd}, EXT_AVX, "vptestmw");
    put(t2, 0x26, PF3, "vptestnmb", FM, {Kr, Hd, Wd}, EXT_AVX, "vptestnmw");
    put(t2, 0x27, P66, "vptestmd", FM, {Kr, Hd, Wd}, EXT_AVX, "vptestmq");
    put(t2, 0x27, PF3, "vptestnmd", FM, {Kr, Hd, Wd}, EXT_AVX, "vptestnmq");
    put(t2, 0x28, PF3, "vpmovm2b", FM, {Vd, Km}, EXT_AVX, "vpmovm2w");
    put(t2, 0x29, P66, "vpcmpeqq", FM, {Kr, Hd, Wd}, EXT_AVX);
    put(t2, 0x29, PF3, "vpmovb2m", FM, {Kr, Ud}, EXT_AVX, "vpmovw2m");
    put(t2, 0x2A, PF3, "vpbroadcastmb2q", FM, {Vd, Km}, EXT_AVX);
    put(t2, 0x2C, P66, "vscalefps", FM, {Vd, Hd, Wd}, EXT_AVX, "vscalefpd");
    put(t2, 0x2D, P66, "vscalefss", FM, {Vx, Hx, Wx}, EXT_AVX, "vscalefsd");
    clear(t2, 0x2E);
    clear(t2, 0x2F);
    put(t2, 0x30, PF3, "vpmovwb", FM, {Wh, Vd}, EXT_AVX);
    put(t2, 0x31, PF3, "vpmovdb", FM, {Wq, Vd}, EXT_AVX);
    put(t2, 0x32, PF3, "vpmovqb", FM, {Wq, Vd}, EXT_AVX);
    put(t2, 0x33, PF3, "vpmovdw", FM, {Wh, Vd}, EXT_AVX);
    put(t2, 0x34, PF3, "vpmovqw", FM, {Wq, Vd}, EXT_AVX);
    put(t2, 0x35, PF3, "vpmovqd", FM, {Wh, Vd}, EXT_AVX);
    put(t2, 0x36, P66, "vpermd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpermq");
    put(t2, 0x37, P66, "vpcmpgtq", FM, {Kr, Hd, Wd}, EXT_AVX);
    put(t2, 0x38, PF3, "vpmovm2d", FM, {Vd, Km}, EXT_AVX, "vpmovm2q");
    put(t2, 0x39, P66, "vpminsd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpminsq");
    put(t2, 0x39, PF3, "vpmovd2m", FM, {Kr, Ud}, EXT_AVX, "vpmovq2m");
    put(t2, 0x3A, PF3, "vpbroadcastmw2d", FM, {Vd, Km}, EXT_AVX);
    put(t2, 0x3B, P66, "vpminud", FM, {Vd, Hd, Wd}, EXT_AVX, "vpminuq");
    put(t2, 0x3D, P66, "vpmaxsd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpmaxsq");
    put(t2, 0x3F, P66, "vpmaxud", FM, {Vd, Hd, Wd}, EXT_AVX, "vpmaxuq");
    put(t2, 0x40, P66, "vpmulld", FM, {Vd, Hd, Wd}, EXT_AVX, "vpmullq");
    put(t2, 0x42, P66, "vgetexpps", FM, {Vd, Wd}, EXT_AVX, "vgetexppd");
    put(t2, 0x43, P66, "vgetexpss", FM, {Vx, Hx, Wx}, EXT_AVX, "vgetexpsd");
    put(t2, 0x44, P66, "vplzcntd", FM, {Vd, Wd}, EXT_AVX, "vplzcntq");
    put(t2, 0x45, P66, "vpsrlvd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpsrlvq");
    put(t2, 0x46, P66, "vpsravd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpsravq");
    put(t2, 0x4C, P66, "vrcp14ps", FM, {Vd, Wd}, EXT_AVX, "vrcp14pd");
    put(t2, 0x4D, P66, "vrcp14ss", FM, {Vx, Hx, Wx}, EXT_AVX, "vrcp14sd");
    put(t2, 0x4E, ALL, "vrsqrt14ps", FM, {Vd, Wd}, EXT_AVX, "vrsqrt14pd");  // pp-agnostic in binutils
    put(t2, 0x4F, P66, "vrsqrt14ss", FM, {Vx, Hx, Wx}, EXT_AVX, "vrsqrt14sd");
    put(t2, 0x52, PF3, "vdpbf16ps", FM, {Vd, Hd, Wd}, EXT_AVX);
    // 4VNNIW/4FMAPS: rm names an m128 block; binutils prints reg forms as xmm
    put(t2, 0x52, PF2, "vp4dpwssd", FM, {Vd, Hd, Wx}, EXT_AVX);
    put(t2, 0x53, PF2, "vp4dpwssds", FM, {Vd, Hd, Wx}, EXT_AVX);
    put(t2, 0x54, P66, "vpopcntb", FM, {Vd, Wd}, EXT_AVX, "vpopcntw");
    put(t2, 0x55, P66, "vpopcntd", FM, {Vd, Wd}, EXT_AVX, "vpopcntq");
    put(t2, 0x59, P66, "vbroadcasti32x2", FM, {Vd, Wx}, EXT_AVX, "vpbroadcastq");
    put(t2, 0x5A, P66, "vbroadcasti32x4", FM, {Vd, Mm}, EXT_AVX, "vbroadcasti64x2");
    put(t2, 0x5B, P66, "vbroadcasti32x8", FM, {Vd, Mm}, EXT_AVX, "vbroadcasti64x4");
    put(t2, 0x62, P66, "vpexpandb", FM, {Vd, Wd}, EXT_AVX, "vpexpandw");
    put(t2, 0x63, P66, "vpcompressb", FM, {Wd, Vd}, EXT_AVX, "vpcompressw");
    put(t2, 0x64, P66, "vpblendmd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpblendmq");
    put(t2, 0x65, P66, "vblendmps", FM, {Vd, Hd, Wd}, EXT_AVX, "vblendmpd");
    put(t2, 0x66, P66, "vpblendmb", FM, {Vd, Hd, Wd}, EXT_AVX, "vpblendmw");
    put(t2, 0x68, PF2, "vp2intersectd", FM, {Kr, Hd, Wd}, EXT_AVX, "vp2intersectq");
    put(t2, 0x70, P66, "vpshldvw", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x71, P66, "vpshldvd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpshldvq");
    put(t2, 0x72, P66, "vpshrdvw", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x72, PF3, "vcvtneps2bf16", FM, {Vh, Wd}, EXT_AVX);
    put(t2, 0x72, PF2, "vcvtne2ps2bf16", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x73, P66, "vpshrdvd", FM, {Vd, Hd, Wd}, EXT_AVX, "vpshrdvq");
    put(t2, 0x75, P66, "vpermi2b", FM, {Vd, Hd, Wd}, EXT_AVX, "vpermi2w");
    put(t2, 0x76, P66, "vpermi2d", FM, {Vd, Hd, Wd}, EXT_AVX, "vpermi2q");
    put(t2, 0x77, P66, "vpermi2ps", FM, {Vd, Hd, Wd}, EXT_AVX, "vpermi2pd");
    put(t2, 0x7A, P66, "vpbroadcastb", FM, {Vd, Ev}, EXT_AVX);
    put(t2, 0x7B, P66, "vpbroadcastw", FM, {Vd, Ev}, EXT_AVX);
    put(t2, 0x7C, P66, "vpbroadcastd", FM, {Vd, Ev}, EXT_AVX, "vpbroadcastq");
    put(t2, 0x7D, P66, "vpermt2b", FM, {Vd, Hd, Wd}, EXT_AVX, "vpermt2w");
    put(t2, 0x7E, P66, "vpermt2d", FM, {Vd, Hd, Wd}, EXT_AVX, "vpermt2q");
    put(t2, 0x7F, P66, "vpermt2ps", FM, {Vd, Hd, Wd}, EXT_AVX, "vpermt2pd");
    put(t2, 0x83, P66, "vpmultishiftqb", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0x88, P66, "vexpandps", FM, {Vd, Wd}, EXT_AVX, "vexpandpd");
    put(t2, 0x89, P66, "vpexpandd", FM, {Vd, Wd}, EXT_AVX, "vpexpandq");
    put(t2, 0x8A, P66, "vcompressps", FM, {Wd, Vd}, EXT_AVX, "vcompresspd");
    put(t2, 0x8B, P66, "vpcompressd", FM, {Wd, Vd}, EXT_AVX, "vpcompressq");
    put(t2, 0x8D, P66, "vpermb", FM, {Vd, Hd, Wd}, EXT_AVX, "vpermw");
    put(t2, 0x8F, P66, "vpshufbitqmb", FM, {Kr, Hd, Wd}, EXT_AVX);
    // EVEX gathers drop the mask-vector operand (opmask instead)
    put(t2, 0x90, P66, "vpgatherdd", FM, {Vd, SBd}, EXT_AVX, "vpgatherdq", {Vd, SBh});
    put(t2, 0x91, P66, "vpgatherqd", FM, {Vh, SBd}, EXT_AVX, "vpgatherqq", {Vd, SBd});
    put(t2, 0x92, P66, "vgatherdps", FM, {Vd, SBd}, EXT_AVX, "vgatherdpd", {Vd, SBh});
    put(t2, 0x93, P66, "vgatherqps", FM, {Vh, SBd}, EXT_AVX, "vgatherqpd", {Vd, SBd});
    put(t2, 0x9A, PF2, "v4fmaddps", FM, {Vd, Hd, Wx}, EXT_AVX);
    put(t2, 0x9B, PF2, "v4fmaddss", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t2, 0xA0, P66, "vpscatterdd", FM, {SBd, Vd}, EXT_AVX, "vpscatterdq", {SBh, Vd});
    put(t2, 0xA1, P66, "vpscatterqd", FM, {SBd, Vh}, EXT_AVX, "vpscatterqq", {SBd, Vd});
    put(t2, 0xA2, P66, "vscatterdps", FM, {SBd, Vd}, EXT_AVX, "vscatterdpd", {SBh, Vd});
    put(t2, 0xA3, P66, "vscatterqps", FM, {SBd, Vh}, EXT_AVX, "vscatterqpd", {SBd, Vd});
    put(t2, 0xAA, PF2, "v4fnmaddps", FM, {Vd, Hd, Wx}, EXT_AVX);
    put(t2, 0xAB, PF2, "v4fnmaddss", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t2, 0xB4, P66, "vpmadd52luq", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0xB5, P66, "vpmadd52huq", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t2, 0xC4, P66, "vpconflictd", FM, {Vd, Wd}, EXT_AVX, "vpconflictq");
    put(t2, 0xC6, P66, "vgatherpf", FM | GRP, {SBd}, EXT_AVX, nullptr, {SBh});
    put(t2, 0xC7, P66, "vgatherpf", FM | GRP, {SBd}, EXT_AVX);
    put(t2, 0xC8, P66, "vexp2ps", FM, {Vd, Wd}, EXT_AVX, "vexp2pd");
    put(t2, 0xCA, P66, "vrcp28ps", FM, {Vd, Wd}, EXT_AVX, "vrcp28pd");
    put(t2, 0xCB, P66, "vrcp28ss", FM, {Vx, Hx, Wx}, EXT_AVX, "vrcp28sd");
    put(t2, 0xCC, P66, "vrsqrt28ps", FM, {Vd, Wd}, EXT_AVX, "vrsqrt28pd");
    put(t2, 0xCD, P66, "vrsqrt28ss", FM, {Vx, Hx, Wx}, EXT_AVX, "vrsqrt28sd");

    auto* t3 = m.evex3;
    for (u8 op : {0x02, 0x06, 0x0C, 0x0D, 0x0E, 0x30, 0x31, 0x32, 0x33, 0x40, 0x41,
                  0x46, 0x48, 0x49, 0x4A, 0x4B, 0x4C, 0x60, 0x61, 0x62, 0x63, 0xDF})
        clear(t3, op);
    put(t3, 0x00, P66, "vpermq", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x03, P66, "valignd", FM | I8, {Vd, Hd, Wd}, EXT_AVX, "valignq");
    put(t3, 0x08, P66, "vrndscaleps", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x09, P66, "vrndscalepd", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x0A, P66, "vrndscaless", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t3, 0x0B, P66, "vrndscalesd", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t3, 0x18, P66, "vinsertf32x4", FM | I8, {Vd, Hd, Wx}, EXT_AVX, "vinsertf64x2");
    put(t3, 0x19, P66, "vextractf32x4", FM | I8, {Wx, Vd}, EXT_AVX, "vextractf64x2");
    put(t3, 0x1A, P66, "vinsertf32x8", FM | I8, {Vd, Hd, Wh}, EXT_AVX, "vinsertf64x4");
    put(t3, 0x1B, P66, "vextractf32x8", FM | I8, {Wh, Vd}, EXT_AVX, "vextractf64x4");
    put(t3, 0x1E, P66, "vpcmpud", FM | I8, {Kr, Hd, Wd}, EXT_AVX, "vpcmpuq");
    put(t3, 0x1F, P66, "vpcmpd", FM | I8, {Kr, Hd, Wd}, EXT_AVX, "vpcmpq");
    put(t3, 0x23, P66, "vshuff32x4", FM | I8, {Vd, Hd, Wd}, EXT_AVX, "vshuff64x2");
    put(t3, 0x25, P66, "vpternlogd", FM | I8, {Vd, Hd, Wd}, EXT_AVX, "vpternlogq");
    put(t3, 0x26, P66, "vgetmantps", FM | I8, {Vd, Wd}, EXT_AVX, "vgetmantpd");
    put(t3, 0x27, P66, "vgetmantss", FM | I8, {Vx, Hx, Wx}, EXT_AVX, "vgetmantsd");
    put(t3, 0x38, P66, "vinserti32x4", FM | I8, {Vd, Hd, Wx}, EXT_AVX, "vinserti64x2");
    put(t3, 0x39, P66, "vextracti32x4", FM | I8, {Wx, Vd}, EXT_AVX, "vextracti64x2");
    put(t3, 0x3A, P66, "vinserti32x8", FM | I8, {Vd, Hd, Wh}, EXT_AVX, "vinserti64x4");
    put(t3, 0x3B, P66, "vextracti32x8", FM | I8, {Wh, Vd}, EXT_AVX, "vextracti64x4");
    put(t3, 0x3E, P66, "vpcmpub", FM | I8, {Kr, Hd, Wd}, EXT_AVX, "vpcmpuw");
    put(t3, 0x3F, P66, "vpcmpb", FM | I8, {Kr, Hd, Wd}, EXT_AVX, "vpcmpw");
    put(t3, 0x42, ALL, "vdbpsadbw", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x43, P66, "vshufi32x4", FM | I8, {Vd, Hd, Wd}, EXT_AVX, "vshufi64x2");
    put(t3, 0x50, P66, "vrangeps", FM | I8, {Vd, Hd, Wd}, EXT_AVX, "vrangepd");
    put(t3, 0x51, P66, "vrangess", FM | I8, {Vx, Hx, Wx}, EXT_AVX, "vrangesd");
    put(t3, 0x54, P66, "vfixupimmps", FM | I8, {Vd, Hd, Wd}, EXT_AVX, "vfixupimmpd");
    put(t3, 0x55, P66, "vfixupimmss", FM | I8, {Vx, Hx, Wx}, EXT_AVX, "vfixupimmsd");
    put(t3, 0x56, P66, "vreduceps", FM | I8, {Vd, Wd}, EXT_AVX, "vreducepd");
    put(t3, 0x57, P66, "vreducess", FM | I8, {Vx, Hx, Wx}, EXT_AVX, "vreducesd");
    put(t3, 0x66, P66, "vfpclassps", FM | I8, {Kr, Wd}, EXT_AVX, "vfpclasspd");
    put(t3, 0x67, P66, "vfpclassss", FM | I8, {Kr, Wx}, EXT_AVX, "vfpclasssd");
    // binutils accepts any pp for the funnel shifts and vdbpsadbw
    put(t3, 0x70, ALL, "vpshldw", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x71, ALL, "vpshldd", FM | I8, {Vd, Hd, Wd}, EXT_AVX, "vpshldq");
    put(t3, 0x72, ALL, "vpshrdw", FM | I8, {Vd, Hd, Wd}, EXT_AVX);
    put(t3, 0x73, ALL, "vpshrdd", FM | I8, {Vd, Hd, Wd}, EXT_AVX, "vpshrdq");
    // FP16 entries living in map 3
    put(t3, 0x08, NP, "vrndscaleph", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x0A, NP, "vrndscalesh", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t3, 0x26, NP, "vgetmantph", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x27, NP, "vgetmantsh", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t3, 0x56, NP, "vreduceph", FM | I8, {Vd, Wd}, EXT_AVX);
    put(t3, 0x57, NP, "vreducesh", FM | I8, {Vx, Hx, Wx}, EXT_AVX);
    put(t3, 0x66, NP, "vfpclassph", FM | I8, {Kr, Wd}, EXT_AVX);
    put(t3, 0x67, NP, "vfpclasssh", FM | I8, {Kr, Wx}, EXT_AVX);
    put(t3, 0xC2, NP, "vcmpph", FM | I8, {Kr, Hd, Wd}, EXT_AVX);
    put(t3, 0xC2, PF3, "vcmpsh", FM | I8, {Kr, Hx, Wx}, EXT_AVX);

    // map 5: FP16 versions of the 0F map
    auto* t5 = m.evex5;
    put(t5, 0x10, PF3, "vmovsh", FM, {Vx, H3x, Wx}, EXT_AVX);
    put(t5, 0x11, PF3, "vmovsh", FM, {Wx, H3x, Vx}, EXT_AVX);
    put(t5, 0x1D, NP, "vcvtss2sh", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t5, 0x1D, P66, "vcvtps2phx", FM, {Vh, Wd}, EXT_AVX);
    put(t5, 0x2A, PF3, "vcvtsi2sh", FM, {Vx, Hx, Ev}, EXT_AVX);
    put(t5, 0x2C, PF3, "vcvttsh2si", FM, {Gv, Wx}, EXT_AVX);
    put(t5, 0x2D, PF3, "vcvtsh2si", FM, {Gv, Wx}, EXT_AVX);
    put(t5, 0x2E, NP, "vucomish", FM, {Vx, Wx}, EXT_AVX);
    put(t5, 0x2F, NP, "vcomish", FM, {Vx, Wx}, EXT_AVX);
    put(t5, 0x51, NP, "vsqrtph", FM, {Vd, Wd}, EXT_AVX);
    put(t5, 0x51, PF3, "vsqrtsh", FM, {Vx, Hx, Wx}, EXT_AVX);
    struct Ph { u8 op; const char* ph; const char* sh; };
    static constexpr Ph kPh[] = {
        {0x58, "vaddph", "vaddsh"}, {0x59, "vmulph", "vmulsh"},
        {0x5C, "vsubph", "vsubsh"}, {0x5D, "vminph", "vminsh"},
        {0x5E, "vdivph", "vdivsh"}, {0x5F, "vmaxph", "vmaxsh"},
    };
    for (const auto& p : kPh) {
        put(t5, p.op, NP, p.ph, FM, {Vd, Hd, Wd}, EXT_AVX);
        put(t5, p.op, PF3, p.sh, FM, {Vx, Hx, Wx}, EXT_AVX);
    }
    put(t5, 0x5A, NP, "vcvtph2pd", FM, {Vd, Wq}, EXT_AVX);
    put(t5, 0x5A, P66, "vcvtpd2ph", FM, {Vq, Wd}, EXT_AVX);
    put(t5, 0x5A, PF3, "vcvtsh2sd", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t5, 0x5A, PF2, "vcvtsd2sh", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t5, 0x5B, NP, "vcvtdq2ph", FM, {Vh, Wd}, EXT_AVX, "vcvtqq2ph", {Vq, Wd});
    put(t5, 0x5B, P66, "vcvtph2dq", FM, {Vd, Wh}, EXT_AVX);
    put(t5, 0x5B, PF3, "vcvttph2dq", FM, {Vd, Wh}, EXT_AVX);
    put(t5, 0x6E, P66, "vmovw", FM, {Vx, Ev}, EXT_AVX);
    put(t5, 0x7E, P66, "vmovw", FM, {Ev, Vx}, EXT_AVX);
    put(t5, 0x78, NP, "vcvttph2udq", FM, {Vd, Wh}, EXT_AVX);
    put(t5, 0x78, P66, "vcvttph2uqq", FM, {Vd, Wq}, EXT_AVX);
    put(t5, 0x78, PF3, "vcvttsh2usi", FM, {Gv, Wx}, EXT_AVX);
    put(t5, 0x79, NP, "vcvtph2udq", FM, {Vd, Wh}, EXT_AVX);
    put(t5, 0x79, P66, "vcvtph2uqq", FM, {Vd, Wq}, EXT_AVX);
    put(t5, 0x79, PF3, "vcvtsh2usi", FM, {Gv, Wx}, EXT_AVX);
    put(t5, 0x7A, P66, "vcvttph2qq", FM, {Vd, Wq}, EXT_AVX);
    put(t5, 0x7A, PF2, "vcvtudq2ph", FM, {Vh, Wd}, EXT_AVX, "vcvtuqq2ph", {Vq, Wd});
    put(t5, 0x7B, P66, "vcvtph2qq", FM, {Vd, Wq}, EXT_AVX);
    put(t5, 0x7B, PF3, "vcvtusi2sh", FM, {Vx, Hx, Ev}, EXT_AVX);
    put(t5, 0x7C, NP, "vcvttph2uw", FM, {Vd, Wd}, EXT_AVX);
    put(t5, 0x7C, P66, "vcvttph2w", FM, {Vd, Wd}, EXT_AVX);
    put(t5, 0x7D, NP, "vcvtph2uw", FM, {Vd, Wd}, EXT_AVX);
    put(t5, 0x7D, P66, "vcvtph2w", FM, {Vd, Wd}, EXT_AVX);
    put(t5, 0x7D, PF3, "vcvtw2ph", FM, {Vd, Wd}, EXT_AVX);
    put(t5, 0x7D, PF2, "vcvtuw2ph", FM, {Vd, Wd}, EXT_AVX);

    // map 6: FP16 versions of the 0F38 map
    auto* t6 = m.evex6;
    put(t6, 0x13, NP, "vcvtsh2ss", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t6, 0x13, P66, "vcvtph2psx", FM, {Vd, Wh}, EXT_AVX);
    put(t6, 0x2C, P66, "vscalefph", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t6, 0x2D, P66, "vscalefsh", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t6, 0x42, P66, "vgetexpph", FM, {Vd, Wd}, EXT_AVX);
    put(t6, 0x43, P66, "vgetexpsh", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t6, 0x4C, P66, "vrcpph", FM, {Vd, Wd}, EXT_AVX);
    put(t6, 0x4D, P66, "vrcpsh", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t6, 0x4E, P66, "vrsqrtph", FM, {Vd, Wd}, EXT_AVX);
    put(t6, 0x4F, P66, "vrsqrtsh", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t6, 0x56, PF3, "vfmaddcph", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t6, 0x56, PF2, "vfcmaddcph", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t6, 0x57, PF3, "vfmaddcsh", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t6, 0x57, PF2, "vfcmaddcsh", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t6, 0xD6, PF3, "vfmulcph", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t6, 0xD6, PF2, "vfcmulcph", FM, {Vd, Hd, Wd}, EXT_AVX);
    put(t6, 0xD7, PF3, "vfmulcsh", FM, {Vx, Hx, Wx}, EXT_AVX);
    put(t6, 0xD7, PF2, "vfcmulcsh", FM, {Vx, Hx, Wx}, EXT_AVX);
    struct FmaPh { u8 op; const char* n; bool scalar; };
    static constexpr FmaPh kFmaPh[] = {
        {0x96, "vfmaddsub132ph", false}, {0x97, "vfmsubadd132ph", false},
        {0x98, "vfmadd132ph", false}, {0x99, "vfmadd132sh", true},
        {0x9A, "vfmsub132ph", false}, {0x9B, "vfmsub132sh", true},
        {0x9C, "vfnmadd132ph", false}, {0x9D, "vfnmadd132sh", true},
        {0x9E, "vfnmsub132ph", false}, {0x9F, "vfnmsub132sh", true},
        {0xA6, "vfmaddsub213ph", false}, {0xA7, "vfmsubadd213ph", false},
        {0xA8, "vfmadd213ph", false}, {0xA9, "vfmadd213sh", true},
        {0xAA, "vfmsub213ph", false}, {0xAB, "vfmsub213sh", true},
        {0xAC, "vfnmadd213ph", false}, {0xAD, "vfnmadd213sh", true},
        {0xAE, "vfnmsub213ph", false}, {0xAF, "vfnmsub213sh", true},
        {0xB6, "vfmaddsub231ph", false}, {0xB7, "vfmsubadd231ph", false},
        {0xB8, "vfmadd231ph", false}, {0xB9, "vfmadd231sh", true},
        {0xBA, "vfmsub231ph", false}, {0xBB, "vfmsub231sh", true},
        {0xBC, "vfnmadd231ph", false}, {0xBD, "vfnmadd231sh", true},
        {0xBE, "vfnmsub231ph", false}, {0xBF, "vfnmsub231sh", true},
    };
    for (const auto& f : kFmaPh) {
        if (f.scalar)
            put(t6, f.op, P66, f.n, FM, {Vx, Hx, Wx}, EXT_AVX);
        else
            put(t6, f.op, P66, f.n, FM, {Vd, Hd, Wd}, EXT_AVX);
    }
}

void build_xop(Maps& m) {
    auto* t8 = m.xop8;
    struct X4 { u8 op; const char* n; };
    static constexpr X4 kMac[] = {
        {0x85, "vpmacssww"}, {0x86, "vpmacsswd"}, {0x87, "vpmacssdql"},
        {0x8E, "vpmacssdd"}, {0x8F, "vpmacssdqh"},
        {0x95, "vpmacsww"}, {0x96, "vpmacswd"}, {0x97, "vpmacsdql"},
        {0x9E, "vpmacsdd"}, {0x9F, "vpmacsdqh"},
        {0xA6, "vpmadcsswd"}, {0xB6, "vpmadcswd"},
    };
    for (const auto& x : kMac) put1(t8, x.op, x.n, FM | I8, {Vx, Hx, Wx, Lx}, EXT_OTHERV);
    put1(t8, 0xA2, "vpcmov", FM | I8, {Vd, Hd, Wd, Ld}, EXT_OTHERV);
    put1(t8, 0xA3, "vpperm", FM | I8, {Vx, Hx, Wx, Lx}, EXT_OTHERV);
    put1(t8, 0xC0, "vprotb", FM | I8, {Vx, Wx}, EXT_OTHERV);
    put1(t8, 0xC1, "vprotw", FM | I8, {Vx, Wx}, EXT_OTHERV);
    put1(t8, 0xC2, "vprotd", FM | I8, {Vx, Wx}, EXT_OTHERV);
    put1(t8, 0xC3, "vprotq", FM | I8, {Vx, Wx}, EXT_OTHERV);
    static constexpr X4 kCom[] = {
        {0xCC, "vpcomb"}, {0xCD, "vpcomw"}, {0xCE, "vpcomd"}, {0xCF, "vpcomq"},
        {0xEC, "vpcomub"}, {0xED, "vpcomuw"}, {0xEE, "vpcomud"}, {0xEF, "vpcomuq"},
    };
    for (const auto& x : kCom) put1(t8, x.op, x.n, FM | I8, {Vx, Hx, Wx}, EXT_OTHERV);

    auto* t9 = m.xop9;
    put1(t9, 0x01, "blcfill", FM | GRP, {Ev});
    put1(t9, 0x02, "blcmsk", FM | GRP, {Ev});
    put1(t9, 0x12, "llwpcb", FM | GRP, {Ev});
    put1(t9, 0x80, "vfrczps", FM, {Vd, Wd}, EXT_OTHERV);
    put1(t9, 0x81, "vfrczpd", FM, {Vd, Wd}, EXT_OTHERV);
    put1(t9, 0x82, "vfrczss", FM, {Vx, Wx}, EXT_OTHERV);
    put1(t9, 0x83, "vfrczsd", FM, {Vx, Wx}, EXT_OTHERV);
    static constexpr X4 kShift[] = {
        {0x90, "vprotb"}, {0x91, "vprotw"}, {0x92, "vprotd"}, {0x93, "vprotq"},
        {0x94, "vpshlb"}, {0x95, "vpshlw"}, {0x96, "vpshld"}, {0x97, "vpshlq"},
        {0x98, "vpshab"}, {0x99, "vpshaw"}, {0x9A, "vpshad"}, {0x9B, "vpshaq"},
    };
    for (const auto& x : kShift) put1(t9, x.op, x.n, FM, {Vx, Hx, Wx}, EXT_OTHERV);
    static constexpr X4 kHadd[] = {
        {0xC1, "vphaddbw"}, {0xC2, "vphaddbd"}, {0xC3, "vphaddbq"},
        {0xC6, "vphaddwd"}, {0xC7, "vphaddwq"}, {0xCB, "vphadddq"},
        {0xD1, "vphaddubw"}, {0xD2, "vphaddubd"}, {0xD3, "vphaddubq"},
        {0xD6, "vphadduwd"}, {0xD7, "vphadduwq"}, {0xDB, "vphaddudq"},
        {0xE1, "vphsubbw"}, {0xE2, "vphsubwd"}, {0xE3, "vphsubdq"},
    };
    for (const auto& x : kHadd) put1(t9, x.op, x.n, FM, {Vx, Wx}, EXT_OTHERV);

    put1(m.xopA, 0x10, "bextr", FM | IZ, {Gv, Ev});
    put1(m.xopA, 0x12, "lwpins", FM | IZ | GRP, {Ev});
}

}  // namespace

const Maps& maps() {
    static const Maps m = [] {
        Maps mm{};
        build_onebyte(mm);
        build_0f(mm);
        build_0f38(mm);
        build_0f3a(mm);
        build_vex(mm);
        build_evex(mm);
        build_xop(mm);
        return mm;
    }();
    return m;
}

const char* x87_name(std::uint8_t opcode, std::uint8_t modrm) {
    unsigned reg = (modrm >> 3) & 7;
    bool mem = modrm < 0xC0;
    switch (opcode) {
        case 0xD8: {
            static constexpr const char* n[] = {"fadd", "fmul", "fcom", "fcomp",
                                                "fsub", "fsubr", "fdiv", "fdivr"};
            return n[reg];
        }
        case 0xD9:
            if (mem) {
                static constexpr const char* n[] = {"fld", nullptr, "fst", "fstp",
                                                    "fldenv", "fldcw", "fnstenv", "fnstcw"};
                return n[reg];
            }
            switch (modrm) {
                case 0xD0: return "fnop";
                case 0xE0: return "fchs";
                case 0xE1: return "fabs";
                case 0xE4: return "ftst";
                case 0xE5: return "fxam";
                case 0xE8: return "fld1";
                case 0xE9: return "fldl2t";
                case 0xEA: return "fldl2e";
                case 0xEB: return "fldpi";
                case 0xEC: return "fldlg2";
                case 0xED: return "fldln2";
                case 0xEE: return "fldz";
                case 0xF0: return "f2xm1";
                case 0xF1: return "fyl2x";
                case 0xF2: return "fptan";
                case 0xF3: return "fpatan";
                case 0xF4: return "fxtract";
                case 0xF5: return "fprem1";
                case 0xF6: return "fdecstp";
                case 0xF7: return "fincstp";
                case 0xF8: return "fprem";
                case 0xF9: return "fyl2xp1";
                case 0xFA: return "fsqrt";
                case 0xFB: return "fsincos";
                case 0xFC: return "frndint";
                case 0xFD: return "fscale";
                case 0xFE: return "fsin";
                case 0xFF: return "fcos";
                default:
                    if (reg == 0) return "fld";
                    if (reg == 1) return "fxch";
                    return nullptr;
            }
        case 0xDA:
            if (mem) {
                static constexpr const char* n[] = {"fiadd", "fimul", "ficom", "ficomp",
                                                    "fisub", "fisubr", "fidiv", "fidivr"};
                return n[reg];
            }
            if (modrm == 0xE9) return "fucompp";
            switch (reg) {
                case 0: return "fcmovb";
                case 1: return "fcmove";
                case 2: return "fcmovbe";
                case 3: return "fcmovu";
                default: return nullptr;
            }
        case 0xDB:
            if (mem) {
                static constexpr const char* n[] = {"fild", "fisttp", "fist", "fistp",
                                                    nullptr, "fld", nullptr, "fstp"};
                return n[reg];
            }
            if (modrm == 0xE0) return "fneni";
            if (modrm == 0xE1) return "fndisi";
            if (modrm == 0xE4) return "fnsetpm";
            if (modrm == 0xE5) return "frstpm";
            if (modrm == 0xE2) return "fnclex";
            if (modrm == 0xE3) return "fninit";
            switch (reg) {
                case 0: return "fcmovnb";
                case 1: return "fcmovne";
                case 2: return "fcmovnbe";
                case 3: return "fcmovnu";
                case 5: return "fucomi";
                case 6: return "fcomi";
                default: return nullptr;
            }
        case 0xDC: {
            static constexpr const char* nm[] = {"fadd", "fmul", "fcom", "fcomp",
                                                 "fsub", "fsubr", "fdiv", "fdivr"};
            static constexpr const char* nr[] = {"fadd", "fmul", nullptr, nullptr,
                                                 "fsubr", "fsub", "fdivr", "fdiv"};
            return mem ? nm[reg] : nr[reg];
        }
        case 0xDD:
            if (mem) {
                static constexpr const char* n[] = {"fld", "fisttp", "fst", "fstp",
                                                    "frstor", nullptr, "fnsave", "fnstsw"};
                return n[reg];
            }
            switch (reg) {
                case 0: return "ffree";
                case 2: return "fst";
                case 3: return "fstp";
                case 4: return "fucom";
                case 5: return "fucomp";
                default: return nullptr;
            }
        case 0xDE:
            if (mem) {
                static constexpr const char* n[] = {"fiadd", "fimul", "ficom", "ficomp",
                                                    "fisub", "fisubr", "fidiv", "fidivr"};
                return n[reg];
            }
            if (modrm == 0xD9) return "fcompp";
            switch (reg) {
                case 0: return "faddp";
                case 1: return "fmulp";
                case 4: return "fsubrp";
                case 5: return "fsubp";
                case 6: return "fdivrp";
                case 7: return "fdivp";
                default: return nullptr;
            }
        case 0xDF:
            if (mem) {
                static constexpr const char* n[] = {"fild", "fisttp", "fist", "fistp",
                                                    "fbld", "fild", "fbstp", "fistp"};
                return n[reg];
            }
            if (modrm == 0xE0) return "fnstsw";
            switch (reg) {
                case 0: return "ffreep";
                case 5: return "fucomip";
                case 6: return "fcomip";
                default: return nullptr;
            }
        default:
            return nullptr;
    }
}

}  // namespace dfscan::tables
