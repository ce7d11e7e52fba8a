#pragma once

// Shared oracle comparison: random byte streams through objdump and the
// in-tree decoder, tallying classification disagreements. Used by the
// decdiff driver and by the acceptance test.

#include <cstddef>
#include <random>

#include "dfscan/common.hpp"

namespace dfscan::testing {

struct DiffStats {
    std::size_t insns = 0;
    std::size_t bad = 0;
    std::size_t target_mismatch = 0;
    std::size_t reg_mismatch = 0;
    std::size_t rep_mismatch = 0;
    std::size_t len_mismatch = 0;
    std::size_t we_reject = 0;  // objdump decodes (non-vector), we do not

    std::size_t mismatches() const { return target_mismatch + reg_mismatch + rep_mismatch; }
};

// Disassembles `code` with objdump and compares every instruction against
// decode_one on (is-target, vector-register set, rep-movs, length).
void check_stream(ByteView code, DiffStats& st, int verbose = 0, std::size_t max_report = 40);

// Byte stream biased toward vector-instruction encodings.
Bytes gen_biased(std::mt19937& rng, std::size_t len);

}  // namespace dfscan::testing
