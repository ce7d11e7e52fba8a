#include "decdiff_common.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "dfscan/decode.hpp"
#include "objdump_ref.hpp"

namespace dfscan::testing {

namespace {

std::string hex(const std::vector<std::uint8_t>& b) {
    std::string s;
    char tmp[4];
    for (auto x : b) {
        snprintf(tmp, sizeof tmp, "%02x ", x);
        s += tmp;
    }
    return s;
}

std::vector<std::string> our_reg_names(const Instruction& inst) {
    std::vector<std::string> v;
    for (auto r : vector_registers_of(inst)) v.push_back(register_name(r));
    std::sort(v.begin(), v.end());  // match the oracle's lexicographic order
    return v;
}

}  // namespace

void check_stream(ByteView code, DiffStats& st, int verbose, std::size_t max_report) {
    auto rows = objdump_disassemble(code);
    static std::size_t reported = 0;
    for (const auto& r : rows) {
        if (r.bad || r.mnemonic().empty()) {  // prefix-only rows at buffer end
            st.bad++;
            continue;
        }
        st.insns++;
        auto ref_regs = r.vector_regs();
        // only effective F3 rep counts (repnz movs is not in the target set)
        bool ref_rep_movs = r.is_rep_movs();
        bool ref_target = !ref_regs.empty() || ref_rep_movs;

        Instruction inst;
        bool ok = decode_one(ByteView(r.bytes), r.offset, inst);
        if (!ok) {
            if (ref_target) {
                st.target_mismatch++;
                if (reported++ < max_report)
                    printf("MISS  %-48s %s\n", hex(r.bytes).c_str(), r.text.c_str());
            } else {
                st.we_reject++;
                if (verbose > 1 && reported++ < max_report)
                    printf("rej   %-48s %s\n", hex(r.bytes).c_str(), r.text.c_str());
            }
            continue;
        }
        auto our_regs = our_reg_names(inst);
        bool our_rep_movs =
            inst.is_string_op && inst.has_prefix(PFX_REP) && inst.mnemonic.substr(0, 4) == "movs";
        bool our_target = !our_regs.empty() || our_rep_movs;

        if (inst.length != r.bytes.size()) {
            st.len_mismatch++;
            if ((verbose || ref_target || our_target) && reported++ < max_report)
                printf("LEN   %-48s %s   (ours=%u)\n", hex(r.bytes).c_str(), r.text.c_str(),
                       inst.length);
        }
        if (our_target != ref_target) {
            st.target_mismatch++;
            if (reported++ < max_report) {
                printf("TGT   %-48s %s\n      ours: %s regs=[", hex(r.bytes).c_str(),
                       r.text.c_str(), std::string(inst.mnemonic).c_str());
                for (auto& s : our_regs) printf("%s ", s.c_str());
                printf("]\n");
            }
            continue;
        }
        if (ref_target && our_regs != ref_regs) {
            st.reg_mismatch++;
            if (reported++ < max_report) {
                printf("REG   %-48s %s\n      ours: %s [", hex(r.bytes).c_str(), r.text.c_str(),
                       std::string(inst.mnemonic).c_str());
                for (auto& s : our_regs) printf("%s ", s.c_str());
                printf("] want [");
                for (auto& s : ref_regs) printf("%s ", s.c_str());
                printf("]\n");
            }
        }
        if (ref_rep_movs != our_rep_movs) {
            st.rep_mismatch++;
            if (reported++ < max_report)
                printf("REP   %-48s %s\n", hex(r.bytes).c_str(), r.text.c_str());
        }
    }
}

Bytes gen_biased(std::mt19937& rng, std::size_t len) {
    Bytes out;
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<int> kind(0, 9);
    while (out.size() < len) {
        int k = kind(rng);
        auto rb = [&] { return static_cast<std::uint8_t>(byte(rng)); };
        switch (k) {
            case 0: case 1: {  // legacy 0F with optional mandatory prefix
                int pfx = byte(rng) & 3;
                if (pfx == 1) out.push_back(0x66);
                else if (pfx == 2) out.push_back(0xF3);
                else if (pfx == 3) out.push_back(0xF2);
                if (byte(rng) & 1) out.push_back(static_cast<std::uint8_t>(0x40 | (byte(rng) & 15)));
                out.push_back(0x0F);
                int esc = byte(rng) % 3;
                if (esc == 1) out.push_back(0x38);
                else if (esc == 2) out.push_back(0x3A);
                for (int i = 0; i < 7; ++i) out.push_back(rb());
                break;
            }
            case 2: case 3: {  // VEX3
                out.push_back(0xC4);
                out.push_back(static_cast<std::uint8_t>((byte(rng) & 0xE0) | (1 + byte(rng) % 3)));
                out.push_back(rb());
                for (int i = 0; i < 7; ++i) out.push_back(rb());
                break;
            }
            case 4: {  // VEX2
                out.push_back(0xC5);
                for (int i = 0; i < 7; ++i) out.push_back(rb());
                break;
            }
            case 5: case 6: {  // EVEX
                out.push_back(0x62);
                static const std::uint8_t maps[] = {1, 2, 3, 5, 6};
                out.push_back(static_cast<std::uint8_t>((byte(rng) & 0xF0) | maps[byte(rng) % 5]));
                out.push_back(static_cast<std::uint8_t>(byte(rng) | 0x04));
                out.push_back(rb());
                for (int i = 0; i < 7; ++i) out.push_back(rb());
                break;
            }
            case 7: {  // XOP
                out.push_back(0x8F);
                out.push_back(static_cast<std::uint8_t>((byte(rng) & 0xE0) | (8 + byte(rng) % 3)));
                out.push_back(rb());
                for (int i = 0; i < 6; ++i) out.push_back(rb());
                break;
            }
            case 8: {  // rep string ops
                out.push_back((byte(rng) & 1) ? 0xF3 : 0xF2);
                if (byte(rng) & 1) out.push_back(0x48);
                static const std::uint8_t strops[] = {0xA4, 0xA5, 0xA6, 0xA7, 0xAA,
                                                      0xAB, 0xAC, 0xAD, 0xAE, 0xAF};
                out.push_back(strops[byte(rng) % 10]);
                break;
            }
            default:
                for (int i = 0; i < 8; ++i) out.push_back(rb());
                break;
        }
    }
    out.resize(len);
    return out;
}

}  // namespace dfscan::testing
