#include "smsgw/smpp.hpp"

#include <algorithm>

namespace smsgw::smpp {

namespace {

// C-octet string size limits from SMPP 3.4, terminator included.
constexpr std::size_t kMaxSystemId = 16;
constexpr std::size_t kMaxPassword = 9;
constexpr std::size_t kMaxSystemType = 13;
constexpr std::size_t kMaxAddressRange = 41;
constexpr std::size_t kMaxAddr = 21;
constexpr std::size_t kMaxServiceType = 6;
constexpr std::size_t kMaxMessageId = 65;
constexpr std::size_t kMaxTime = 17;

class Writer {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v) {
        out_.push_back(static_cast<std::uint8_t>(v >> 24));
        out_.push_back(static_cast<std::uint8_t>(v >> 16));
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
        out_.push_back(static_cast<std::uint8_t>(v));
    }
    // null-terminated octet string, max_size includes the terminator
    void cstr(const std::string& s, std::size_t max_size, const char* field) {
        if (s.size() + 1 > max_size)
            throw CodecError(CodecError::Kind::FieldTooLong,
                             std::string("field too long: ") + field);
        if (s.find('\0') != std::string::npos)
            throw CodecError(CodecError::Kind::InvalidVariantState,
                             std::string("embedded NUL in field: ") + field);
        out_.insert(out_.end(), s.begin(), s.end());
        out_.push_back(0);
    }
    void raw(const std::string& s) { out_.insert(out_.end(), s.begin(), s.end()); }
    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    std::vector<std::uint8_t> out_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = (std::uint32_t{data_[pos_]} << 24) |
                          (std::uint32_t{data_[pos_ + 1]} << 16) |
                          (std::uint32_t{data_[pos_ + 2]} << 8) | std::uint32_t{data_[pos_ + 3]};
        pos_ += 4;
        return v;
    }
    std::string cstr(std::size_t max_size, const char* field) {
        std::size_t end = pos_;
        while (end < data_.size() && data_[end] != 0)
            ++end;
        if (end == data_.size())
            throw CodecError(CodecError::Kind::UnterminatedString,
                             std::string("unterminated string in field: ") + field);
        std::size_t len = end - pos_;
        if (len + 1 > max_size)
            throw CodecError(CodecError::Kind::FieldTooLong,
                             std::string("field too long: ") + field);
        std::string s(reinterpret_cast<const char*>(data_.data() + pos_), len);
        pos_ = end + 1;
        return s;
    }
    std::string bytes(std::size_t n, const char* field) {
        if (remaining() < n)
            throw CodecError(CodecError::Kind::Truncated,
                             std::string("truncated field: ") + field);
        std::string s(reinterpret_cast<const char*>(data_.data() + pos_), n);
        pos_ += n;
        return s;
    }
    std::size_t remaining() const { return data_.size() - pos_; }

private:
    void need(std::size_t n) {
        if (remaining() < n)
            throw CodecError(CodecError::Kind::Truncated, "truncated PDU body");
    }
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

void write_address(Writer& w, const SmsAddress& a, const char* field) {
    w.u8(static_cast<std::uint8_t>(a.ton));
    w.u8(static_cast<std::uint8_t>(a.npi));
    w.cstr(a.number.digits(), kMaxAddr, field);
}

SmsAddress read_address(Reader& r, const char* field) {
    SmsAddress a;
    a.ton = static_cast<Ton>(r.u8());
    a.npi = static_cast<Npi>(r.u8());
    std::string digits = r.cstr(kMaxAddr, field);
    if (!digits.empty()) {
        try {
            a.number = PhoneNumber(std::move(digits));
        } catch (const PhoneParseError&) {
            throw CodecError(CodecError::Kind::InvalidVariantState,
                             std::string("invalid address digits in field: ") + field);
        }
    }
    return a;
}

void write_sm_body(Writer& w, const SubmitSm& p) {
    if (p.short_message.size() > kMaxShortMessage)
        throw CodecError(CodecError::Kind::FieldTooLong, "short_message exceeds 254 bytes");
    w.cstr(p.service_type, kMaxServiceType, "service_type");
    write_address(w, p.source, "source_addr");
    write_address(w, p.destination, "destination_addr");
    w.u8(p.esm_class);
    w.u8(p.protocol_id);
    w.u8(p.priority);
    w.cstr(p.schedule_delivery_time, kMaxTime, "schedule_delivery_time");
    w.cstr(p.validity_period, kMaxTime, "validity_period");
    w.u8(p.registered_delivery);
    w.u8(p.replace_if_present);
    w.u8(p.data_coding);
    w.u8(p.sm_default_msg_id);
    w.u8(static_cast<std::uint8_t>(p.short_message.size()));
    w.raw(p.short_message);
}

template <typename T>
T read_sm_body(Reader& r) {
    T p;
    p.service_type = r.cstr(kMaxServiceType, "service_type");
    p.source = read_address(r, "source_addr");
    p.destination = read_address(r, "destination_addr");
    p.esm_class = r.u8();
    p.protocol_id = r.u8();
    p.priority = r.u8();
    p.schedule_delivery_time = r.cstr(kMaxTime, "schedule_delivery_time");
    p.validity_period = r.cstr(kMaxTime, "validity_period");
    p.registered_delivery = r.u8();
    p.replace_if_present = r.u8();
    p.data_coding = r.u8();
    p.sm_default_msg_id = r.u8();
    std::uint8_t sm_length = r.u8();
    p.short_message = r.bytes(sm_length, "short_message");
    return p;
}

CommandId command_id_of(const Body& body) {
    struct Visitor {
        CommandId operator()(const BindTransceiver&) { return CommandId::BindTransceiver; }
        CommandId operator()(const BindTransceiverResp&) { return CommandId::BindTransceiverResp; }
        CommandId operator()(const SubmitSm&) { return CommandId::SubmitSm; }
        CommandId operator()(const SubmitSmResp&) { return CommandId::SubmitSmResp; }
        CommandId operator()(const DeliverSm&) { return CommandId::DeliverSm; }
        CommandId operator()(const DeliverSmResp&) { return CommandId::DeliverSmResp; }
        CommandId operator()(const EnquireLink&) { return CommandId::EnquireLink; }
        CommandId operator()(const EnquireLinkResp&) { return CommandId::EnquireLinkResp; }
        CommandId operator()(const Unbind&) { return CommandId::Unbind; }
        CommandId operator()(const UnbindResp&) { return CommandId::UnbindResp; }
        CommandId operator()(const GenericNack&) { return CommandId::GenericNack; }
        CommandId operator()(const UnknownCommand& u) {
            return static_cast<CommandId>(u.raw_header.command_id);
        }
    };
    return std::visit(Visitor{}, body);
}

} // namespace

std::vector<std::uint8_t> encode_pdu(const Pdu& pdu) {
    Writer body;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BindTransceiver>) {
                body.cstr(v.system_id, kMaxSystemId, "system_id");
                body.cstr(v.password, kMaxPassword, "password");
                body.cstr(v.system_type, kMaxSystemType, "system_type");
                body.u8(v.interface_version);
                body.u8(v.addr_ton);
                body.u8(v.addr_npi);
                body.cstr(v.address_range, kMaxAddressRange, "address_range");
            } else if constexpr (std::is_same_v<T, BindTransceiverResp>) {
                body.cstr(v.system_id, kMaxSystemId, "system_id");
            } else if constexpr (std::is_same_v<T, SubmitSm> || std::is_same_v<T, DeliverSm>) {
                write_sm_body(body, v);
            } else if constexpr (std::is_same_v<T, SubmitSmResp> ||
                                 std::is_same_v<T, DeliverSmResp>) {
                body.cstr(v.message_id, kMaxMessageId, "message_id");
            } else if constexpr (std::is_same_v<T, UnknownCommand>) {
                throw CodecError(CodecError::Kind::InvalidVariantState,
                                 "cannot encode UnknownCommand");
            }
            // EnquireLink/Resp, Unbind/Resp, GenericNack: header only
        },
        pdu.body);

    std::vector<std::uint8_t> body_bytes = body.take();
    Writer w;
    w.u32(static_cast<std::uint32_t>(kHeaderSize + body_bytes.size()));
    w.u32(static_cast<std::uint32_t>(command_id_of(pdu.body)));
    w.u32(pdu.command_status);
    w.u32(pdu.sequence_number);
    std::vector<std::uint8_t> out = w.take();
    out.insert(out.end(), body_bytes.begin(), body_bytes.end());
    return out;
}

Pdu decode_pdu(std::span<const std::uint8_t> wire) {
    if (wire.size() < kHeaderSize)
        throw CodecError(CodecError::Kind::Truncated,
                         "truncated header: expected 16, got " + std::to_string(wire.size()));
    Reader hr(wire);
    PduHeader h;
    h.command_length = hr.u32();
    h.command_id = hr.u32();
    h.command_status = hr.u32();
    h.sequence_number = hr.u32();

    if (h.command_length < kHeaderSize)
        throw CodecError(CodecError::Kind::LengthFieldTooSmall,
                         "command_length below header size");
    if (h.command_length > wire.size())
        throw CodecError(CodecError::Kind::Truncated,
                         "truncated PDU: expected " + std::to_string(h.command_length) +
                             ", got " + std::to_string(wire.size()));
    if (h.command_length != wire.size())
        throw CodecError(CodecError::Kind::LengthMismatch,
                         "command_length does not match input size");

    Reader r(wire.subspan(kHeaderSize, h.command_length - kHeaderSize));
    Pdu pdu;
    pdu.command_status = h.command_status;
    pdu.sequence_number = h.sequence_number;

    switch (static_cast<CommandId>(h.command_id)) {
    case CommandId::BindTransceiver: {
        BindTransceiver b;
        b.system_id = r.cstr(kMaxSystemId, "system_id");
        b.password = r.cstr(kMaxPassword, "password");
        b.system_type = r.cstr(kMaxSystemType, "system_type");
        b.interface_version = r.u8();
        b.addr_ton = r.u8();
        b.addr_npi = r.u8();
        b.address_range = r.cstr(kMaxAddressRange, "address_range");
        pdu.body = std::move(b);
        break;
    }
    case CommandId::BindTransceiverResp: {
        BindTransceiverResp b;
        // on error responses the body may be absent
        b.system_id = r.remaining() ? r.cstr(kMaxSystemId, "system_id") : std::string{};
        pdu.body = std::move(b);
        break;
    }
    case CommandId::SubmitSm:
        pdu.body = read_sm_body<SubmitSm>(r);
        break;
    case CommandId::DeliverSm:
        pdu.body = read_sm_body<DeliverSm>(r);
        break;
    case CommandId::SubmitSmResp:
        pdu.body = SubmitSmResp{r.remaining() ? r.cstr(kMaxMessageId, "message_id")
                                              : std::string{}};
        break;
    case CommandId::DeliverSmResp:
        pdu.body = DeliverSmResp{r.remaining() ? r.cstr(kMaxMessageId, "message_id")
                                               : std::string{}};
        break;
    case CommandId::EnquireLink:
        pdu.body = EnquireLink{};
        break;
    case CommandId::EnquireLinkResp:
        pdu.body = EnquireLinkResp{};
        break;
    case CommandId::Unbind:
        pdu.body = Unbind{};
        break;
    case CommandId::UnbindResp:
        pdu.body = UnbindResp{};
        break;
    case CommandId::GenericNack:
        pdu.body = GenericNack{};
        break;
    default: {
        UnknownCommand u;
        u.raw_header = h;
        auto body_span = wire.subspan(kHeaderSize);
        u.body.assign(body_span.begin(), body_span.end());
        pdu.body = std::move(u);
        break;
    }
    }
    return pdu;
}

FrameResult frame_stream(std::span<const std::uint8_t> buffer) {
    FrameResult result;
    std::size_t pos = 0;
    while (buffer.size() - pos >= 4) {
        std::uint32_t len = (std::uint32_t{buffer[pos]} << 24) |
                            (std::uint32_t{buffer[pos + 1]} << 16) |
                            (std::uint32_t{buffer[pos + 2]} << 8) | std::uint32_t{buffer[pos + 3]};
        if (len < kHeaderSize)
            throw CodecError(CodecError::Kind::LengthFieldTooSmall,
                             "stream header declares length below 16");
        if (buffer.size() - pos < len)
            break;
        result.pdus.emplace_back(buffer.begin() + pos, buffer.begin() + pos + len);
        pos += len;
    }
    result.remainder.assign(buffer.begin() + pos, buffer.end());
    return result;
}

const char* command_name(const Body& body) {
    struct Visitor {
        const char* operator()(const BindTransceiver&) { return "bind_transceiver"; }
        const char* operator()(const BindTransceiverResp&) { return "bind_transceiver_resp"; }
        const char* operator()(const SubmitSm&) { return "submit_sm"; }
        const char* operator()(const SubmitSmResp&) { return "submit_sm_resp"; }
        const char* operator()(const DeliverSm&) { return "deliver_sm"; }
        const char* operator()(const DeliverSmResp&) { return "deliver_sm_resp"; }
        const char* operator()(const EnquireLink&) { return "enquire_link"; }
        const char* operator()(const EnquireLinkResp&) { return "enquire_link_resp"; }
        const char* operator()(const Unbind&) { return "unbind"; }
        const char* operator()(const UnbindResp&) { return "unbind_resp"; }
        const char* operator()(const GenericNack&) { return "generic_nack"; }
        const char* operator()(const UnknownCommand&) { return "unknown"; }
    };
    return std::visit(Visitor{}, body);
}

} // namespace smsgw::smpp
