#include "dfscan/decode.hpp"

#include <algorithm>
#include <cstring>

#include "decode_tables.hpp"

namespace dfscan {

using namespace tables;

const char* bank_name(Bank b) {
    switch (b) {
        case Bank::gpr: return "gpr";
        case Bank::x87: return "x87";
        case Bank::mmx: return "mmx";
        case Bank::xmm: return "xmm";
        case Bank::ymm: return "ymm";
        case Bank::zmm: return "zmm";
        case Bank::mask: return "mask";
        case Bank::other: return "other";
    }
    return "?";
}

std::string register_name(RegisterRef r) {
    switch (r.bank) {
        case Bank::xmm: return "xmm" + std::to_string(r.index);
        case Bank::ymm: return "ymm" + std::to_string(r.index);
        case Bank::zmm: return "zmm" + std::to_string(r.index);
        case Bank::mmx: return "mm" + std::to_string(r.index);
        case Bank::mask: return "k" + std::to_string(r.index);
        case Bank::x87: return "st" + std::to_string(r.index);
        case Bank::gpr: return "r" + std::to_string(r.index);
        default: return "reg" + std::to_string(r.index);
    }
}

namespace {

constexpr std::size_t kMaxInstrLen = 15;

bool is_legacy_prefix(std::uint8_t b) {
    switch (b) {
        case 0xF0: case 0xF2: case 0xF3: case 0x66: case 0x67:
        case 0x2E: case 0x36: case 0x3E: case 0x26: case 0x64: case 0x65:
            return true;
        default:
            return false;
    }
}

struct Cursor {
    ByteView data;
    std::size_t pos = 0;
    bool ok = true;

    std::uint8_t take() {
        if (pos >= data.size()) {
            ok = false;
            return 0;
        }
        return data[pos++];
    }
    std::uint8_t peek() const { return pos < data.size() ? data[pos] : 0; }
    bool skip(std::size_t n) {
        if (pos + n > data.size()) {
            ok = false;
            return false;
        }
        pos += n;
        return true;
    }
};

struct Ctx {
    // legacy prefixes
    bool lock = false, f2 = false, f3 = false, osz = false, asz = false, seg = false;
    std::uint8_t rex = 0;
    // vex/evex payload
    VexEncoding enc = VexEncoding::legacy;
    unsigned map = 0;  // 1=0F 2=0F38 3=0F3A 5,6=FP16; 8,9,10=XOP
    unsigned pp = 0;
    unsigned ll = 0;  // L / L'L
    bool w = false;
    std::uint8_t vvvv = 0;   // 5 bits with EVEX.V'
    bool evex = false, evex_b = false;
    std::uint8_t evex_aaa = 0;
    bool evex_z = false;
    // extension bits
    unsigned ext_r = 0, ext_x = 0, ext_b = 0;  // already multiplied into position
    // modrm
    bool has_modrm = false;
    std::uint8_t modrm = 0, sib = 0;
    bool has_sib = false;

    bool rexw() const { return w || (rex & 0x08); }
    unsigned modrm_mod() const { return modrm >> 6; }
    unsigned modrm_reg() const { return ((modrm >> 3) & 7) | ext_r; }
    unsigned modrm_rm_reg() const { return (modrm & 7) | ext_b | (evex ? ext_x * 2 : 0); }
};

Bank bank_for(unsigned eff_l) {
    return eff_l >= 2 ? Bank::zmm : eff_l == 1 ? Bank::ymm : Bank::xmm;
}

Bank sized_bank(std::uint8_t size_code, unsigned ll) {
    int l = static_cast<int>(ll);
    switch (size_code) {
        case SZ_DEF: break;
        case SZ_X: l = 0; break;
        case SZ_HALF: l -= 1; break;
        case SZ_QUARTER: l -= 2; break;
        case SZ_Y: l = 1; break;
        default: break;
    }
    return bank_for(static_cast<unsigned>(std::max(l, 0)));
}

// string-op name suffix by operand size
std::string_view string_op_name(std::uint8_t opcode, const Ctx& c) {
    static constexpr const char* kByte[] = {"movsb", "cmpsb", "stosb", "lodsb", "scasb",
                                            "insb", "outsb"};
    static constexpr const char* kWord[] = {"movsw", "cmpsw", "stosw", "lodsw", "scasw",
                                            "insw", "outsw"};
    static constexpr const char* kDword[] = {"movsd", "cmpsd", "stosd", "lodsd", "scasd",
                                             "insd", "outsd"};
    static constexpr const char* kQword[] = {"movsq", "cmpsq", "stosq", "lodsq", "scasq",
                                             "insq", "outsq"};
    int fam;
    bool byte_form;
    switch (opcode) {
        case 0xA4: fam = 0; byte_form = true; break;
        case 0xA5: fam = 0; byte_form = false; break;
        case 0xA6: fam = 1; byte_form = true; break;
        case 0xA7: fam = 1; byte_form = false; break;
        case 0xAA: fam = 2; byte_form = true; break;
        case 0xAB: fam = 2; byte_form = false; break;
        case 0xAC: fam = 3; byte_form = true; break;
        case 0xAD: fam = 3; byte_form = false; break;
        case 0xAE: fam = 4; byte_form = true; break;
        case 0xAF: fam = 4; byte_form = false; break;
        case 0x6C: fam = 5; byte_form = true; break;
        case 0x6D: fam = 5; byte_form = false; break;
        case 0x6E: fam = 6; byte_form = true; break;
        case 0x6F: fam = 6; byte_form = false; break;
        default: return "movs";
    }
    if (byte_form) return kByte[fam];
    if (c.rexw()) return kQword[fam];
    if (c.osz) return kWord[fam];
    return kDword[fam];
}

}  // namespace

bool decode_one(ByteView code, std::uint64_t address, Instruction& out) {
    if (code.empty()) return false;
    Cursor cur{code.first(std::min(code.size(), kMaxInstrLen))};
    Ctx c;

    // --- legacy prefixes ---
    for (;;) {
        std::uint8_t b = cur.peek();
        if (cur.pos >= cur.data.size()) return false;
        if (is_legacy_prefix(b)) {
            switch (b) {
                case 0xF0: c.lock = true; break;
                case 0xF2: c.f2 = true; c.f3 = false; break;
                case 0xF3: c.f3 = true; c.f2 = false; break;
                case 0x66: c.osz = true; break;
                case 0x67: c.asz = true; break;
                default: c.seg = true; break;
            }
            cur.pos++;
            c.rex = 0;  // REX must immediately precede the opcode
            continue;
        }
        if ((b & 0xF0) == 0x40) {
            c.rex = b;
            cur.pos++;
            continue;
        }
        break;
    }
    if (cur.pos >= cur.data.size()) return false;
    c.ext_r = (c.rex & 0x04) ? 8 : 0;
    c.ext_x = (c.rex & 0x02) ? 8 : 0;
    c.ext_b = (c.rex & 0x01) ? 8 : 0;

    std::uint8_t opcode = cur.take();
    const OpEntry* entry = nullptr;
    const Maps& M = maps();
    bool x87 = false;

    auto pick_pp = [&]() -> unsigned { return c.f3 ? 2 : c.f2 ? 3 : c.osz ? 1 : 0; };

    if (opcode == 0xC4 || opcode == 0xC5 || opcode == 0x62 ||
        (opcode == 0x8F && (cur.peek() & 0x38) != 0)) {
        // Stray legacy/REX prefixes before the escape byte are architecturally
        // undefined but binutils accepts and ignores them; mirror that.
        c.rex = 0;
        if (opcode == 0xC5) {
            std::uint8_t b1 = cur.take();
            if (!cur.ok) return false;
            c.enc = VexEncoding::vex;
            c.ext_r = (b1 & 0x80) ? 0 : 8;
            c.ext_x = c.ext_b = 0;
            c.vvvv = (~b1 >> 3) & 0xF;
            c.ll = (b1 >> 2) & 1;
            c.pp = b1 & 3;
            c.map = 1;
        } else if (opcode == 0xC4 || opcode == 0x8F) {
            std::uint8_t b1 = cur.take(), b2 = cur.take();
            if (!cur.ok) return false;
            c.enc = VexEncoding::vex;
            c.ext_r = (b1 & 0x80) ? 0 : 8;
            c.ext_x = (b1 & 0x40) ? 0 : 8;
            c.ext_b = (b1 & 0x20) ? 0 : 8;
            c.map = b1 & 0x1F;
            c.w = b2 & 0x80;
            c.vvvv = (~b2 >> 3) & 0xF;
            c.ll = (b2 >> 2) & 1;
            c.pp = b2 & 3;
            if (opcode == 0xC4) {
                if (c.map < 1 || c.map > 3) return false;
            } else {
                if (c.map < 8 || c.map > 10) return false;
                if (c.pp != 0) return false;
            }
        } else {  // EVEX
            std::uint8_t p0 = cur.take(), p1 = cur.take(), p2 = cur.take();
            if (!cur.ok) return false;
            c.enc = VexEncoding::evex;
            c.evex = true;
            c.ext_r = ((p0 & 0x80) ? 0 : 8) | ((p0 & 0x10) ? 0 : 16);
            c.ext_x = (p0 & 0x40) ? 0 : 8;
            c.ext_b = (p0 & 0x20) ? 0 : 8;
            c.map = p0 & 0x07;
            if (p0 & 0x08) return false;
            if (c.map != 1 && c.map != 2 && c.map != 3 && c.map != 5 && c.map != 6) return false;
            if (!(p1 & 0x04)) return false;
            c.w = p1 & 0x80;
            c.vvvv = ((~p1 >> 3) & 0xF) | ((p2 & 0x08) ? 0 : 16);
            c.pp = p1 & 3;
            c.evex_z = p2 & 0x80;
            c.ll = (p2 >> 5) & 3;
            c.evex_b = p2 & 0x10;
            c.evex_aaa = p2 & 7;
        }
        opcode = cur.take();
        if (!cur.ok) return false;
        switch (c.map) {
            case 1: entry = c.enc == VexEncoding::evex ? &M.evex1[opcode][c.pp] : &M.vex1[opcode][c.pp]; break;
            case 2: entry = c.enc == VexEncoding::evex ? &M.evex2[opcode][c.pp] : &M.vex2[opcode][c.pp]; break;
            case 3: entry = c.enc == VexEncoding::evex ? &M.evex3[opcode][c.pp] : &M.vex3[opcode][c.pp]; break;
            case 5: entry = &M.evex5[opcode][c.pp]; break;
            case 6: entry = &M.evex6[opcode][c.pp]; break;
            case 8: entry = &M.xop8[opcode]; break;
            case 9: entry = &M.xop9[opcode]; break;
            case 10: entry = &M.xopA[opcode]; break;
            default: return false;
        }
    } else if (opcode == 0x0F) {
        std::uint8_t b2 = cur.take();
        if (!cur.ok) return false;
        if (b2 == 0x38) {
            opcode = cur.take();
            if (!cur.ok) return false;
            c.map = 2;
            c.pp = pick_pp();
            entry = &M.m0f38[opcode][c.pp];
        } else if (b2 == 0x3A) {
            opcode = cur.take();
            if (!cur.ok) return false;
            c.map = 3;
            c.pp = pick_pp();
            entry = &M.m0f3a[opcode][c.pp];
        } else {
            opcode = b2;
            c.map = 1;
            c.pp = pick_pp();
            entry = &M.m0f[opcode][c.pp];
        }
    } else if (opcode >= 0xD8 && opcode <= 0xDF) {
        x87 = true;
    } else {
        entry = &M.onebyte[opcode];
    }

    static const OpEntry kX87Entry{"x87", nullptr, FM, {0, 0, 0, 0}, EXT_NONE};
    if (x87) entry = &kX87Entry;
    if (!entry || !entry->valid()) return false;
    if (entry->flags & NO64) return false;

    // --- ModRM / SIB / displacement ---
    std::size_t disp = 0;
    if (entry->flags & FM) {
        c.has_modrm = true;
        c.modrm = cur.take();
        if (!cur.ok) return false;
        unsigned mod = c.modrm >> 6, rm = c.modrm & 7;
        if (mod != 3) {
            if (rm == 4) {
                c.has_sib = true;
                c.sib = cur.take();
                if (!cur.ok) return false;
                if ((c.sib & 7) == 5 && mod == 0) disp = 4;
            }
            if (mod == 1)
                disp = 1;
            else if (mod == 2)
                disp = 4;
            else if (rm == 5)
                disp = 4;  // RIP-relative
            // EVEX compressed disp8 is still one byte on the wire
            if (!cur.skip(disp)) return false;
        }
    }
    if (c.evex && c.ll == 3 && !(c.evex_b && c.modrm_mod() == 3)) return false;

    // --- immediates ---
    std::size_t imm_bytes = 0;
    std::uint8_t imm8_val = 0;
    std::uint16_t flags = entry->flags;
    if (flags & GRP) {
        unsigned reg = (c.modrm >> 3) & 7;
        switch (opcode) {
            case 0xF6: if (reg <= 1) flags |= I8; break;
            case 0xF7: if (reg <= 1) flags |= IZ; break;
            case 0xC6:
                if (reg == 0) flags |= I8;
                else if (reg == 7 && c.modrm_mod() == 3) flags |= I8;  // xabort
                else if (reg != 0) return false;
                break;
            case 0xC7:
                if (reg == 0) flags |= IZ;
                else if (reg == 7 && c.modrm_mod() == 3) flags |= RELZ;  // xbegin
                break;
            default: break;
        }
    }
    if (flags & I8) imm_bytes += 1;
    if (flags & I16) imm_bytes += 2;
    if (flags & IZ) imm_bytes += (c.osz && !c.rexw()) ? 2 : 4;
    if (flags & IV) imm_bytes += c.rexw() ? 8 : (c.osz ? 2 : 4);
    if (flags & REL8) imm_bytes += 1;
    if (flags & RELZ) imm_bytes += 4;
    if (flags & MOFFS) imm_bytes += c.asz ? 4 : 8;
    if (imm_bytes > 0) {
        if (cur.pos + imm_bytes > cur.data.size()) return false;
        if ((flags & I8) && !(flags & (I16 | IZ | IV)))
            imm8_val = cur.data[cur.pos + imm_bytes - 1];
        cur.skip(imm_bytes);
    }
    if (!cur.ok) return false;

    // --- assemble the result ---
    out = Instruction{};
    out.address = address;
    out.length = static_cast<std::uint8_t>(cur.pos);
    out.encoding = c.enc;
    out.ext = static_cast<IsaExt>(
        entry->ext == EXT_SSE ? static_cast<int>(IsaExt::sse_family)
        : entry->ext == EXT_AVX ? static_cast<int>(IsaExt::avx_family)
        : entry->ext == EXT_OTHERV ? static_cast<int>(IsaExt::other_vector)
                                   : static_cast<int>(IsaExt::none));
    if (c.enc != VexEncoding::legacy && entry->ext == EXT_NONE && entry->ops[0] != OP_NONE) {
        // vector operands under VEX/EVEX default to the AVX families
    }
    out.is_string_op = flags & STR;

    // prefix reporting: mandatory-prefix selectors are not surfaced
    bool pp_selected = flags & PPSEL;
    if (c.lock) out.prefixes |= PFX_LOCK;
    if (c.asz) out.prefixes |= PFX_ADDRESS_SIZE;
    if (c.seg) out.prefixes |= PFX_SEGMENT;
    if (c.f3 && !(pp_selected && c.pp == 2)) out.prefixes |= PFX_REP;
    if (c.f2 && !(pp_selected && c.pp == 3)) out.prefixes |= PFX_REPNE;
    if (c.osz && !(pp_selected && c.pp == 1)) out.prefixes |= PFX_OPERAND_SIZE;

    // mnemonic
    if (x87) {
        const char* n = x87_name(opcode, c.modrm);
        if (!n) return false;
        out.mnemonic = n;
    } else if (flags & STR) {
        out.mnemonic = string_op_name(opcode, c);
    } else if (flags & GRP) {
        out.mnemonic = entry->name;  // refined below for known groups
    } else {
        out.mnemonic = (c.rexw() && entry->name_w) ? entry->name_w : entry->name;
    }
    if (flags & GRP) {
        unsigned reg = (c.modrm >> 3) & 7;
        bool v = c.enc != VexEncoding::legacy;
        static constexpr const char* kGrpF6[] = {"test", "test", "not", "neg",
                                                 "mul", "imul", "div", "idiv"};
        static constexpr const char* kGrpFF[] = {"inc", "dec", "call", "call",
                                                 "jmp", "jmp", "push", nullptr};
        static constexpr const char* kGrp80[] = {"add", "or", "adc", "sbb",
                                                 "and", "sub", "xor", "cmp"};
        static constexpr const char* kGrpC0[] = {"rol", "ror", "rcl", "rcr",
                                                 "shl", "shr", "shl", "sar"};
        if (c.map == 0) {
            switch (opcode) {
                case 0xF6: case 0xF7: out.mnemonic = kGrpF6[reg]; break;
                case 0xFE: out.mnemonic = reg == 0 ? "inc" : reg == 1 ? "dec" : ""; break;
                case 0xFF:
                    if (!kGrpFF[reg]) return false;
                    out.mnemonic = kGrpFF[reg];
                    break;
                case 0x80: case 0x81: case 0x83: out.mnemonic = kGrp80[reg]; break;
                case 0xC0: case 0xC1: case 0xD0: case 0xD1: case 0xD2: case 0xD3:
                    out.mnemonic = kGrpC0[reg];
                    break;
                case 0xC6: out.mnemonic = reg == 7 ? "xabort" : "mov"; break;
                case 0xC7: out.mnemonic = reg == 7 ? "xbegin" : "mov"; break;
                case 0x8F: out.mnemonic = "pop"; break;
                case 0x98: out.mnemonic = c.osz ? "cbw" : c.rexw() ? "cdqe" : "cwde"; break;
                case 0x99: out.mnemonic = c.osz ? "cwd" : c.rexw() ? "cqo" : "cdq"; break;
                default: break;
            }
        } else if (c.map == 1) {
            switch (opcode) {
                case 0x12:
                    out.mnemonic = c.modrm_mod() == 3 ? (v ? "vmovhlps" : "movhlps")
                                                      : (v ? "vmovlps" : "movlps");
                    break;
                case 0x16:
                    out.mnemonic = c.modrm_mod() == 3 ? (v ? "vmovlhps" : "movlhps")
                                                      : (v ? "vmovhps" : "movhps");
                    break;
                case 0x71:
                    switch (reg) {
                        case 2: out.mnemonic = v ? "vpsrlw" : "psrlw"; break;
                        case 4: out.mnemonic = v ? "vpsraw" : "psraw"; break;
                        case 6: out.mnemonic = v ? "vpsllw" : "psllw"; break;
                        default: return false;
                    }
                    break;
                case 0x72:
                    if (c.evex && reg == 0) { out.mnemonic = c.rexw() ? "vprorq" : "vprord"; break; }
                    if (c.evex && reg == 1) { out.mnemonic = c.rexw() ? "vprolq" : "vprold"; break; }
                    switch (reg) {
                        case 2: out.mnemonic = v ? "vpsrld" : "psrld"; break;
                        case 4:
                            out.mnemonic = !v ? "psrad"
                                              : (c.evex && c.rexw()) ? "vpsraq" : "vpsrad";
                            break;
                        case 6: out.mnemonic = v ? "vpslld" : "pslld"; break;
                        default: return false;
                    }
                    break;
                case 0x73:
                    switch (reg) {
                        case 2: out.mnemonic = v ? "vpsrlq" : "psrlq"; break;
                        case 3: out.mnemonic = v ? "vpsrldq" : "psrldq"; break;
                        case 6: out.mnemonic = v ? "vpsllq" : "psllq"; break;
                        case 7: out.mnemonic = v ? "vpslldq" : "pslldq"; break;
                        default: return false;
                    }
                    break;
                case 0x77:
                    out.mnemonic = c.ll ? "vzeroall" : "vzeroupper";
                    break;
                default: break;
            }
        }
    }
    if (c.map == 0 && opcode == 0x90 && c.f3 && !(c.rex & 1)) {
        out.mnemonic = "pause";
        out.prefixes &= ~PFX_REP;
    }
    if (c.map == 0 && opcode == 0x9B) {
        // binutils folds fwait into a following x87 instruction (wait forms),
        // skipping any prefixes and further fwaits in between
        std::size_t i = cur.pos;
        while (i < code.size() &&
               (is_legacy_prefix(code[i]) || (code[i] & 0xF0) == 0x40 || code[i] == 0x9B))
            ++i;
        if (i < code.size() && code[i] >= 0xD8 && code[i] <= 0xDF) {
            Instruction sub;
            if (decode_one(code.subspan(cur.pos), address + cur.pos, sub)) {
                out.length = static_cast<std::uint8_t>(cur.pos + sub.length);
                out.mnemonic = sub.mnemonic;
                out.prefixes |= sub.prefixes;
                return true;
            }
        }
    }
    if (out.mnemonic.empty()) return false;

    // --- operand registers ---
    unsigned eff_l = c.ll;
    if (c.evex && c.evex_b && c.modrm_mod() == 3) eff_l = 2;  // static rounding form
    unsigned mod = c.has_modrm ? c.modrm_mod() : 3;

    const bool mmx_as_xmm = c.osz && !(pp_selected && c.pp == 1);
    const std::uint8_t* opspecs =
        (c.rexw() && entry->ops_w[0] != OP_NONE) ? entry->ops_w : entry->ops;
    for (int opi = 0; opi < 4; ++opi) {
        std::uint8_t opspec = opspecs[opi];
        if (opspec == OP_NONE) break;
        std::uint8_t role = role_of(opspec);
        Bank vb = sized_bank(size_of(opspec), eff_l);
        switch (role) {
            case V_REG:
                out.add_explicit({vb, static_cast<std::uint8_t>(c.modrm_reg())});
                break;
            case W_RM:
                if (mod == 3)
                    out.add_explicit({vb, static_cast<std::uint8_t>(c.modrm_rm_reg())});
                else
                    out.has_memory_operand = true;
                break;
            case U_RM:
                if (mod != 3) return false;
                out.add_explicit({vb, static_cast<std::uint8_t>(c.modrm_rm_reg())});
                break;
            case M_RM:
                if (mod == 3) return false;
                out.has_memory_operand = true;
                break;
            case H_VVVV:
                if (c.enc == VexEncoding::legacy) break;
                out.add_explicit({vb, c.vvvv});
                break;
            case H_MOD3:
                if (c.enc == VexEncoding::legacy || mod != 3) break;
                out.add_explicit({vb, c.vvvv});
                break;
            case L_IS4:
                out.add_explicit({vb, static_cast<std::uint8_t>(imm8_val >> 4)});
                break;
            case VSIB_MEM: {
                if (mod == 3 || !c.has_sib) return false;
                out.has_memory_operand = true;
                unsigned idx = ((c.sib >> 3) & 7) | c.ext_x |
                               (c.evex ? ((c.vvvv & 16) ? 16 : 0) : 0);
                out.add_explicit({vb, static_cast<std::uint8_t>(idx)});
                break;
            }
            case G_REG:
                out.add_explicit({Bank::gpr, static_cast<std::uint8_t>(c.modrm_reg() & 15)});
                break;
            case E_RM:
                if (mod == 3)
                    out.add_explicit({Bank::gpr, static_cast<std::uint8_t>(c.modrm_rm_reg() & 15)});
                else
                    out.has_memory_operand = true;
                break;
            // A stray 66 prefix on a pp-agnostic MMX entry (3dnow) promotes
            // the register operands to xmm, as binutils renders them. Not so
            // when 66 is the mandatory-prefix selector (cvtpd2pi and friends).
            case P_REG:
                if (mmx_as_xmm)
                    out.add_explicit({Bank::xmm, static_cast<std::uint8_t>(c.modrm_reg())});
                else
                    out.add_explicit({Bank::mmx, static_cast<std::uint8_t>((c.modrm >> 3) & 7)});
                break;
            case Q_RM:
                if (mod != 3) {
                    out.has_memory_operand = true;
                } else if (mmx_as_xmm) {
                    out.add_explicit({Bank::xmm, static_cast<std::uint8_t>(c.modrm_rm_reg())});
                } else {
                    out.add_explicit({Bank::mmx, static_cast<std::uint8_t>(c.modrm & 7)});
                }
                break;
            case N_RM:
                if (mod != 3) return false;
                if (mmx_as_xmm)
                    out.add_explicit({Bank::xmm, static_cast<std::uint8_t>(c.modrm_rm_reg())});
                else
                    out.add_explicit({Bank::mmx, static_cast<std::uint8_t>(c.modrm & 7)});
                break;
            case K_REG:
                out.add_explicit({Bank::mask, static_cast<std::uint8_t>(c.modrm_reg() & 7)});
                break;
            case K_RM:
                if (mod == 3)
                    out.add_explicit({Bank::mask, static_cast<std::uint8_t>(c.modrm & 7)});
                else
                    out.has_memory_operand = true;
                break;
            case K_VVVV:
                out.add_implicit({Bank::mask, static_cast<std::uint8_t>(c.vvvv & 7)});
                break;
            case X0_IMPL:
                out.add_implicit({Bank::xmm, 0});
                break;
            case B_REG:
            case B_RM:
                if (role == B_RM && mod != 3) out.has_memory_operand = true;
                break;
            default:
                break;
        }
    }
    // memory operand flag for plain modrm ops with no operand spec
    if (c.has_modrm && mod != 3 && entry->ops[0] == OP_NONE) out.has_memory_operand = true;

    return true;
}

std::optional<DecodeEvent> LinearDecoder::next() {
    if (pos_ >= code_.size()) return std::nullopt;
    Instruction inst;
    if (decode_one(code_.subspan(pos_), base_ + pos_, inst)) {
        pos_ += inst.length;
        return DecodeEvent{inst};
    }
    InvalidByte bad{base_ + pos_, code_[pos_]};
    pos_ += 1;
    return DecodeEvent{bad};
}

std::vector<DecodeEvent> decode_linear(ByteView code, std::uint64_t base) {
    std::vector<DecodeEvent> events;
    LinearDecoder dec(code, base);
    while (auto e = dec.next()) events.push_back(*e);
    return events;
}

std::vector<RegisterRef> vector_registers_of(const Instruction& inst) {
    std::vector<RegisterRef> regs;
    auto add = [&](RegisterRef r) {
        if (r.bank != Bank::xmm && r.bank != Bank::ymm && r.bank != Bank::zmm) return;
        if (std::find(regs.begin(), regs.end(), r) == regs.end()) regs.push_back(r);
    };
    for (int i = 0; i < inst.n_explicit; ++i) add(inst.explicit_regs[i]);
    for (int i = 0; i < inst.n_implicit; ++i) add(inst.implicit_regs[i]);
    std::sort(regs.begin(), regs.end());
    return regs;
}

}  // namespace dfscan
