#include "smsgw/demos.hpp"

namespace smsgw::demos {

namespace {

const std::string kBypass = R"(# Origin-spoofing authentication bypass against an origin-allowlist gateway.
seed = 0
operator.policy = permissive
account.system_id = bulk
account.password = secret
account.owns = 815000000001
gateway.number = 818098765432
gateway.auth = origin
gateway.allowlist = 819012345678
handset.admin = 819012345678
handset.other = 817011112222
attack.kind = bypass
attack.spoof_as = 819012345678
)";

const std::string kIpUnblock = R"(# SSH brute force sustained by spoofed "ipunblock" commands.
seed = 0
operator.policy = permissive
account.system_id = bulk
account.password = secret
account.owns = 815000000001
gateway.number = 818098765432
gateway.auth = origin
gateway.allowlist = 819012345678
gateway.block_threshold = 10
gateway.ssh_candidates = 25
gateway.ssh_true_index = 25
handset.admin = 819012345678
handset.other = 817011112222
attack.kind = ipunblock
attack.spoof_as = 819012345678
attack.source_ip = 203.0.113.66
attack.guesses = 100
)";

const std::string kMitigation = R"(# Challenge-response authentication defeating spoofed commands.
seed = 0
operator.policy = permissive
account.system_id = bulk
account.password = secret
account.owns = 815000000001
gateway.number = 818098765432
gateway.auth = origin,challenge
gateway.allowlist = 819012345678
gateway.sms_password = s3cret
handset.admin = 819012345678
handset.other = 817011112222
attack.kind = mitigation
attack.spoof_as = 819012345678
attack.guesses = 100
)";

} // namespace

const std::string& scenario_text(scenario::AttackKind kind) {
    switch (kind) {
    case scenario::AttackKind::Bypass:
        return kBypass;
    case scenario::AttackKind::IpUnblock:
        return kIpUnblock;
    case scenario::AttackKind::Mitigation:
        return kMitigation;
    }
    throw std::logic_error("unreachable attack kind");
}

} // namespace smsgw::demos
