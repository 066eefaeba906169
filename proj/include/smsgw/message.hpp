#pragma once

#include <cstdint>
#include <string>

#include "smsgw/phone.hpp"

namespace smsgw {

struct LogicalTime {
    std::uint64_t tick = 0;
    auto operator<=>(const LogicalTime&) const = default;
};

// The unit routed by the simulator: a short message as seen by receivers.
struct ShortMessage {
    SmsAddress origin;
    SmsAddress destination;
    std::string text; // ASCII, <= 254 bytes
    LogicalTime submitted_at;

    bool operator==(const ShortMessage&) const = default;
};

} // namespace smsgw
