#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfscan {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(const std::string& s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline std::string as_string(ByteView b) {
    return {reinterpret_cast<const char*>(b.data()), b.size()};
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedArchive : Error { using Error::Error; };
struct UnsupportedCompression : Error { using Error::Error; };
struct TruncatedMember : Error { using Error::Error; };
struct MalformedStanza : Error { using Error::Error; };
struct TruncatedElf : Error { using Error::Error; };
struct MalformedDebugInfo : Error { using Error::Error; };
struct OverlapDetected : Error { using Error::Error; };
struct EmptyCorpus : Error { using Error::Error; };
struct UnknownPackage : Error { using Error::Error; };
struct NotABinary : Error { using Error::Error; };

// Non-fatal per-item problem, collected into the run manifest.
struct Warning {
    std::string context;
    std::string message;
};

using WarningList = std::vector<Warning>;

}  // namespace dfscan
