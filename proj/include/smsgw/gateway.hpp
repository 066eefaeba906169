#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smsgw/auth.hpp"
#include "smsgw/message.hpp"
#include "smsgw/protection.hpp"
#include "smsgw/sim.hpp"

namespace smsgw::gateway {

enum class Outcome { Accepted, RejectedAuth, RejectedParse, ChallengeIssued };

const char* outcome_name(Outcome o);

struct LogRecord {
    LogicalTime tick;
    PhoneNumber origin;
    std::string text;
    Outcome outcome;
    std::string detail;
};

// Bit-exact line format:
//   tick=<n> dir=rx origin=<digits> text="<raw>" outcome=<...> detail="<s>"
std::string format_log_record(const LogRecord& rec);

struct SmsCommand {
    enum class Kind { Reboot, IpUnblock, Status, Unknown } kind;
    std::optional<protection::Ipv4> ip; // IpUnblock only; absent = unblock all
    std::string raw;                    // Unknown preserves the raw input
};

// Case-insensitive on the command token; surrounding whitespace ignored.
SmsCommand parse_command(std::string_view text);

struct ExecutionResult {
    SmsCommand::Kind kind;
    std::string reply; // "OK <command>..." sent back to the origin
};

struct EmptyChainRefused : std::runtime_error {
    EmptyChainRefused() : std::runtime_error("auth chain must not be empty") {}
};

// The cellular IoT gateway under test. Receives short messages from the
// simulator, runs the authenticator chain (conjunction, in order), executes
// accepted commands, and logs every decision. Replies "OK <command>" on
// success; stays silent on auth failure so it cannot be used as an
// allowlist oracle.
class GatewayDevice : public sim::MessageSink {
public:
    struct Config {
        PhoneNumber own_number;
        std::uint32_t block_threshold = 10;
        std::string ssh_password;
    };

    explicit GatewayDevice(Config cfg);

    void configure_auth(std::vector<std::unique_ptr<auth::Policy>> chain);

    void on_message(const ShortMessage& msg, sim::Network& net) override;

    ExecutionResult execute(const SmsCommand& cmd, LogicalTime now);

    const PhoneNumber& own_number() const { return own_number_; }
    std::uint64_t uptime_ticks(LogicalTime now) const;
    std::uint64_t reboot_count() const { return reboot_count_; }
    const std::vector<LogRecord>& command_log() const { return log_; }
    std::uint64_t dropped_while_rebooting() const { return dropped_while_rebooting_; }

    protection::IpBlockTable& blocked_ips() { return blocked_ips_; }
    protection::SshService& ssh() { return ssh_; }

private:
    PhoneNumber own_number_;
    std::vector<std::unique_ptr<auth::Policy>> auth_chain_;
    std::uint64_t boot_tick_ = 0;
    std::uint64_t reboot_count_ = 0;
    std::uint64_t deaf_tick_ = 0; // reboot takes effect next tick; device deaf for it
    bool has_deaf_tick_ = false;
    std::uint64_t dropped_while_rebooting_ = 0;
    protection::IpBlockTable blocked_ips_;
    protection::SshService ssh_;
    std::vector<LogRecord> log_;

    void reply(sim::Network& net, const PhoneNumber& to, std::string text) const;
};

} // namespace smsgw::gateway
