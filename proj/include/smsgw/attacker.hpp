#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "smsgw/gateway.hpp"
#include "smsgw/scenario.hpp"
#include "smsgw/sim.hpp"
#include "smsgw/smpp.hpp"

namespace smsgw::attacker {

struct TextTooLong : std::runtime_error {
    explicit TextTooLong(std::size_t len)
        : std::runtime_error("command text exceeds 254 bytes: " + std::to_string(len)) {}
};

// submit_sm with a forged source_addr: the admin's number in source_addr,
// the target device in destination_addr, the command in the message text.
smpp::SubmitSm craft_spoofed_submit(const PhoneNumber& admin, const PhoneNumber& target,
                                    const std::string& text);

struct SendSpoofed {
    std::string text;
};
struct SshAttempt {
    std::string password;
};
struct Wait {
    std::uint64_t ticks;
};
using AttackStep = std::variant<SendSpoofed, SshAttempt, Wait>;

struct AttackPlan {
    PhoneNumber admin_number;  // the number to spoof
    PhoneNumber target_number;
    std::vector<AttackStep> steps;
};

struct AttackReport {
    std::size_t deliveries = 0;        // messages delivered to the gateway
    std::size_t accepted_commands = 0; // Accepted log records, any sender
    std::size_t rejected_auth = 0;
    std::size_t attacker_accepted = 0; // Accepted records caused by attacker traffic
    bool device_rebooted = false;
    bool ssh_breached = false;
    std::size_t ssh_attempts = 0;  // evaluated logins (Blocked ones do not count)
    std::size_t unblocks_used = 0; // spoofed ipunblock commands that took effect
    std::vector<gateway::LogRecord> trace;

    bool reproduced = false; // scenario-specific success criteria met
    std::string verdict_detail;
};

// The assembled experiment: one operator, the gateway under test, and the
// admin / non-admin handsets of the verification setup.
class Testbed {
public:
    explicit Testbed(const scenario::ScenarioConfig& cfg);

    sim::Network& net() { return net_; }
    sim::Operator& op() { return *op_; }
    gateway::GatewayDevice& device() { return *device_; }
    sim::Handset& admin() { return admin_; }
    sim::Handset& other() { return other_; }
    const scenario::ScenarioConfig& config() const { return cfg_; }
    const std::vector<std::string>& ssh_candidates() const { return ssh_candidates_; }
    const std::string& true_ssh_password() const {
        return ssh_candidates_[cfg_.ssh_true_index - 1];
    }

    // Binds the attacker's SMPP session on first use, then submits.
    smpp::Pdu submit_spoofed(const std::string& text);

    std::mt19937_64& attacker_rng() { return attacker_rng_; }
    std::string random_digest_hex();

private:
    scenario::ScenarioConfig cfg_;
    sim::Network net_;
    sim::Operator* op_;
    std::unique_ptr<gateway::GatewayDevice> device_;
    sim::Handset admin_;
    sim::Handset other_;
    sim::Operator::Session session_;
    std::vector<std::string> ssh_candidates_;
    std::mt19937_64 attacker_rng_;
    std::uint32_t seq_ = 0;
};

AttackReport run_plan(Testbed& tb, const AttackPlan& plan);

AttackReport run_bypass_demo(Testbed& tb);
AttackReport run_ipunblock_scenario(Testbed& tb);
AttackReport run_mitigation_demo(Testbed& tb);

AttackReport run_scenario(Testbed& tb); // dispatches on cfg.attack_kind

} // namespace smsgw::attacker
