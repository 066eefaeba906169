#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "smsgw/phone.hpp"

namespace smsgw::smpp {

// SMPP 3.4, mandatory fields only. Big-endian integers, C-octet strings.
// Optional TLVs are ignored on decode and never emitted.

enum class CommandId : std::uint32_t {
    GenericNack = 0x80000000,
    BindTransceiver = 0x00000009,
    BindTransceiverResp = 0x80000009,
    SubmitSm = 0x00000004,
    SubmitSmResp = 0x80000004,
    DeliverSm = 0x00000005,
    DeliverSmResp = 0x80000005,
    Unbind = 0x00000006,
    UnbindResp = 0x80000006,
    EnquireLink = 0x00000015,
    EnquireLinkResp = 0x80000015,
};

// command_status values used by the simulator
inline constexpr std::uint32_t kStatusOk = 0x00000000;
inline constexpr std::uint32_t kStatusInvalidSourceAddr = 0x0000000A; // ESME_RINVSRCADR
inline constexpr std::uint32_t kStatusBindFailed = 0x0000000D;        // ESME_RBINDFAIL
inline constexpr std::uint32_t kStatusInvalidBindStatus = 0x00000004; // ESME_RINVBNDSTS

struct PduHeader {
    std::uint32_t command_length = 0;
    std::uint32_t command_id = 0;
    std::uint32_t command_status = 0;
    std::uint32_t sequence_number = 0;

    bool operator==(const PduHeader&) const = default;
};

inline constexpr std::size_t kHeaderSize = 16;
inline constexpr std::size_t kMaxShortMessage = 254;

struct BindTransceiver {
    std::string system_id;
    std::string password;
    std::string system_type;
    std::uint8_t interface_version = 0x34;
    std::uint8_t addr_ton = 0;
    std::uint8_t addr_npi = 0;
    std::string address_range;
    bool operator==(const BindTransceiver&) const = default;
};

struct BindTransceiverResp {
    std::string system_id;
    bool operator==(const BindTransceiverResp&) const = default;
};

struct SubmitSm {
    std::string service_type;
    SmsAddress source;
    SmsAddress destination;
    std::uint8_t esm_class = 0;
    std::uint8_t protocol_id = 0;
    std::uint8_t priority = 0;
    std::string schedule_delivery_time;
    std::string validity_period;
    std::uint8_t registered_delivery = 0;
    std::uint8_t replace_if_present = 0;
    std::uint8_t data_coding = 0;
    std::uint8_t sm_default_msg_id = 0;
    std::string short_message; // <= 254 bytes, 7-bit-safe ASCII
    bool operator==(const SubmitSm&) const = default;
};

struct SubmitSmResp {
    std::string message_id;
    bool operator==(const SubmitSmResp&) const = default;
};

// deliver_sm shares the submit_sm mandatory-field layout
struct DeliverSm : SubmitSm {
    bool operator==(const DeliverSm&) const = default;
};

struct DeliverSmResp {
    std::string message_id;
    bool operator==(const DeliverSmResp&) const = default;
};

struct EnquireLink {
    bool operator==(const EnquireLink&) const = default;
};
struct EnquireLinkResp {
    bool operator==(const EnquireLinkResp&) const = default;
};
struct Unbind {
    bool operator==(const Unbind&) const = default;
};
struct UnbindResp {
    bool operator==(const UnbindResp&) const = default;
};
struct GenericNack {
    bool operator==(const GenericNack&) const = default;
};

// Decoder result for a structurally sound PDU whose command_id we do not speak.
struct UnknownCommand {
    PduHeader raw_header;
    std::vector<std::uint8_t> body;
    bool operator==(const UnknownCommand&) const = default;
};

using Body = std::variant<BindTransceiver, BindTransceiverResp, SubmitSm, SubmitSmResp,
                          DeliverSm, DeliverSmResp, EnquireLink, EnquireLinkResp, Unbind,
                          UnbindResp, GenericNack, UnknownCommand>;

struct Pdu {
    std::uint32_t command_status = 0;
    std::uint32_t sequence_number = 0;
    Body body;

    bool operator==(const Pdu&) const = default;
};

struct CodecError : std::runtime_error {
    enum class Kind {
        FieldTooLong,
        InvalidVariantState,
        Truncated,
        LengthMismatch,
        UnterminatedString,
        LengthFieldTooSmall,
    };
    Kind kind;
    CodecError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

std::vector<std::uint8_t> encode_pdu(const Pdu& pdu);

// `wire` must contain exactly one complete PDU.
Pdu decode_pdu(std::span<const std::uint8_t> wire);

// Splits a byte stream on command_length boundaries. Never splits mid-PDU;
// the unconsumed tail is returned as `remainder`.
struct FrameResult {
    std::vector<std::vector<std::uint8_t>> pdus;
    std::vector<std::uint8_t> remainder;
};
FrameResult frame_stream(std::span<const std::uint8_t> buffer);

const char* command_name(const Body& body);

} // namespace smsgw::smpp
