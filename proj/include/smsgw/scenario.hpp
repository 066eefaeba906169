#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "smsgw/phone.hpp"
#include "smsgw/sim.hpp"

namespace smsgw::scenario {

enum class AttackKind { Bypass, IpUnblock, Mitigation };

enum class AuthKind { Origin, Password, Challenge, OmaBasic, OmaDigest };

// Parsed scenario file. Line-oriented "section.key = value" plain text;
// '#' starts a comment, blank lines ignored.
struct ScenarioConfig {
    std::uint64_t seed = 0;

    std::string operator_name = "mno";
    sim::OperatorPolicy operator_policy = sim::OperatorPolicy::Permissive;

    std::string account_system_id = "bulk";
    std::string account_password = "secret";
    std::vector<PhoneNumber> account_owns;

    PhoneNumber gateway_number;
    std::vector<AuthKind> auth_chain;
    std::vector<PhoneNumber> allowlist;
    std::string sms_password = "s3cret";     // static-password and challenge-response secret
    std::uint32_t block_threshold = 10;
    std::uint32_t ssh_candidates = 25;       // N candidate SSH passwords
    std::uint32_t ssh_true_index = 25;       // 1-based position of the real password

    PhoneNumber admin_number;
    PhoneNumber other_number;

    AttackKind attack_kind = AttackKind::Bypass;
    PhoneNumber spoof_as;                    // number forged into source_addr
    std::uint32_t attack_guesses = 100;      // random digest guesses per round
    std::string attack_source_ip = "203.0.113.66";
};

struct ConfigError : std::runtime_error {
    std::size_t line; // 1-based, 0 when not tied to a line
    ConfigError(std::size_t ln, const std::string& what) : std::runtime_error(what), line(ln) {}
};

struct UnknownNumberRef : ConfigError {
    using ConfigError::ConfigError;
};

ScenarioConfig parse_config(const std::string& content);
ScenarioConfig load_config(const std::string& path);

const char* attack_kind_name(AttackKind k);

} // namespace smsgw::scenario
