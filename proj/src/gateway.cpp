#include "smsgw/gateway.hpp"

#include <cctype>

namespace smsgw::gateway {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::Accepted:
        return "Accepted";
    case Outcome::RejectedAuth:
        return "RejectedAuth";
    case Outcome::RejectedParse:
        return "RejectedParse";
    case Outcome::ChallengeIssued:
        return "ChallengeIssued";
    }
    return "?";
}

std::string format_log_record(const LogRecord& rec) {
    std::string line = "tick=" + std::to_string(rec.tick.tick);
    line += " dir=rx origin=" + rec.origin.digits();
    line += " text=\"" + rec.text + "\"";
    line += " outcome=";
    line += outcome_name(rec.outcome);
    line += " detail=\"" + rec.detail + "\"";
    return line;
}

SmsCommand parse_command(std::string_view text) {
    std::string_view trimmed = trim(text);
    std::size_t sp = trimmed.find(' ');
    std::string token = lowercase(sp == std::string_view::npos ? trimmed : trimmed.substr(0, sp));
    std::string_view rest =
        sp == std::string_view::npos ? std::string_view{} : trim(trimmed.substr(sp + 1));

    if (token == "reboot" && rest.empty())
        return {SmsCommand::Kind::Reboot, std::nullopt, {}};
    if (token == "status" && rest.empty())
        return {SmsCommand::Kind::Status, std::nullopt, {}};
    if (token == "ipunblock") {
        if (rest.empty())
            return {SmsCommand::Kind::IpUnblock, std::nullopt, {}};
        try {
            return {SmsCommand::Kind::IpUnblock, protection::Ipv4::parse(rest), {}};
        } catch (const std::invalid_argument&) {
            return {SmsCommand::Kind::Unknown, std::nullopt, std::string(text)};
        }
    }
    return {SmsCommand::Kind::Unknown, std::nullopt, std::string(text)};
}

GatewayDevice::GatewayDevice(Config cfg)
    : own_number_(std::move(cfg.own_number)),
      blocked_ips_(cfg.block_threshold),
      ssh_(cfg.ssh_password, blocked_ips_) {}

void GatewayDevice::configure_auth(std::vector<std::unique_ptr<auth::Policy>> chain) {
    if (chain.empty())
        throw EmptyChainRefused{}; // an empty chain would leave the device wide open
    auth_chain_ = std::move(chain);
}

std::uint64_t GatewayDevice::uptime_ticks(LogicalTime now) const {
    return now.tick >= boot_tick_ ? now.tick - boot_tick_ : 0;
}

void GatewayDevice::reply(sim::Network& net, const PhoneNumber& to, std::string text) const {
    ShortMessage msg;
    msg.origin = make_address(own_number_);
    msg.destination = make_address(to);
    msg.text = std::move(text);
    net.send(std::move(msg));
}

ExecutionResult GatewayDevice::execute(const SmsCommand& cmd, LogicalTime now) {
    switch (cmd.kind) {
    case SmsCommand::Kind::Reboot:
        boot_tick_ = now.tick;
        ++reboot_count_;
        deaf_tick_ = now.tick + 1;
        has_deaf_tick_ = true;
        return {cmd.kind, "OK reboot"};
    case SmsCommand::Kind::IpUnblock:
        blocked_ips_.unblock(cmd.ip);
        return {cmd.kind, "OK ipunblock"};
    case SmsCommand::Kind::Status:
        return {cmd.kind, "OK status uptime=" + std::to_string(uptime_ticks(now)) +
                              " reboots=" + std::to_string(reboot_count_)};
    case SmsCommand::Kind::Unknown:
        break;
    }
    return {SmsCommand::Kind::Unknown, {}};
}

void GatewayDevice::on_message(const ShortMessage& msg, sim::Network& net) {
    LogicalTime now = net.now();

    // still rebooting: the message never reaches the device
    if (has_deaf_tick_ && now.tick == deaf_tick_) {
        ++dropped_while_rebooting_;
        return;
    }

    LogRecord rec;
    rec.tick = now;
    rec.origin = msg.origin.number;
    rec.text = msg.text;

    if (auth_chain_.empty()) {
        rec.outcome = Outcome::RejectedAuth;
        rec.detail = "no authenticator configured";
        log_.push_back(std::move(rec));
        return;
    }

    std::string text = msg.text;
    for (auto& policy : auth_chain_) {
        auth::Result r = policy->check(msg.origin.number, text, now);
        switch (r.kind) {
        case auth::Result::Kind::Fail:
            rec.outcome = Outcome::RejectedAuth;
            rec.detail = policy->name() + ": " + r.detail;
            log_.push_back(std::move(rec));
            return; // silent on auth failure
        case auth::Result::Kind::Challenge:
            rec.outcome = Outcome::ChallengeIssued;
            rec.detail = policy->name() + ": " + r.detail;
            log_.push_back(std::move(rec));
            // routed to the claimed origin number, not the transport path
            reply(net, msg.origin.number, r.text);
            return;
        case auth::Result::Kind::Pass:
            text = r.text;
            break;
        }
    }

    SmsCommand cmd = parse_command(text);
    if (cmd.kind == SmsCommand::Kind::Unknown || trim(text).empty()) {
        rec.outcome = Outcome::RejectedParse;
        rec.detail = "unknown command";
        log_.push_back(std::move(rec));
        return;
    }

    rec.outcome = Outcome::Accepted;
    ExecutionResult result = execute(cmd, now);
    rec.detail = result.reply;
    log_.push_back(std::move(rec));
    reply(net, msg.origin.number, result.reply);
}

} // namespace smsgw::gateway
