#include "smsgw/attacker.hpp"

#include <algorithm>

#include "smsgw/crypto.hpp"

namespace smsgw::attacker {

namespace {

// distinct RNG streams per consumer, all derived from the scenario seed
constexpr std::uint64_t kChallengeSeedTag = 0x6368616c6c656e67; // "challeng"
constexpr std::uint64_t kOmaSeedTag = 0x6f6d612d64696765;       // "oma-dige"
constexpr std::uint64_t kAttackerSeedTag = 0x61747461636b6572;  // "attacker"

std::vector<std::unique_ptr<auth::Policy>> build_auth_chain(
    const scenario::ScenarioConfig& cfg) {
    std::vector<std::unique_ptr<auth::Policy>> chain;
    for (auto kind : cfg.auth_chain) {
        switch (kind) {
        case scenario::AuthKind::Origin: {
            std::set<PhoneNumber> allowed(cfg.allowlist.begin(), cfg.allowlist.end());
            if (allowed.empty())
                allowed.insert(cfg.admin_number);
            chain.push_back(std::make_unique<auth::OriginAllowlist>(std::move(allowed)));
            break;
        }
        case scenario::AuthKind::Password:
            chain.push_back(std::make_unique<auth::StaticPassword>(cfg.sms_password));
            break;
        case scenario::AuthKind::Challenge:
            chain.push_back(std::make_unique<auth::ChallengeResponse>(
                cfg.sms_password, cfg.seed ^ kChallengeSeedTag));
            break;
        case scenario::AuthKind::OmaBasic:
            chain.push_back(std::make_unique<auth::OmaDmBasic>("admin", cfg.sms_password));
            break;
        case scenario::AuthKind::OmaDigest:
            chain.push_back(std::make_unique<auth::OmaDmDigest>("admin", cfg.sms_password,
                                                                cfg.seed ^ kOmaSeedTag));
            break;
        }
    }
    return chain;
}

bool chain_has(const scenario::ScenarioConfig& cfg, scenario::AuthKind kind) {
    return std::find(cfg.auth_chain.begin(), cfg.auth_chain.end(), kind) !=
           cfg.auth_chain.end();
}

// command text as the legitimate admin would send it
std::string admin_text(const scenario::ScenarioConfig& cfg, const std::string& command) {
    if (chain_has(cfg, scenario::AuthKind::Password))
        return cfg.sms_password + " " + command;
    return command;
}

void fill_counts(Testbed& tb, AttackReport& report) {
    const auto& log = tb.device().command_log();
    report.trace = log;
    report.accepted_commands = 0;
    report.rejected_auth = 0;
    for (const auto& rec : log) {
        if (rec.outcome == gateway::Outcome::Accepted)
            ++report.accepted_commands;
        else if (rec.outcome == gateway::Outcome::RejectedAuth)
            ++report.rejected_auth;
    }
    report.deliveries = 0;
    for (const auto& ev : tb.net().trace())
        if (ev.delivered && ev.msg.destination.number == tb.device().own_number())
            ++report.deliveries;
    report.device_rebooted = tb.device().reboot_count() > 0;
}

std::size_t accepted_count(const gateway::GatewayDevice& dev) {
    std::size_t n = 0;
    for (const auto& rec : dev.command_log())
        if (rec.outcome == gateway::Outcome::Accepted)
            ++n;
    return n;
}

} // namespace

smpp::SubmitSm craft_spoofed_submit(const PhoneNumber& admin, const PhoneNumber& target,
                                    const std::string& text) {
    if (text.size() > smpp::kMaxShortMessage)
        throw TextTooLong(text.size());
    smpp::SubmitSm pdu;
    pdu.source = make_address(admin);
    pdu.destination = make_address(target);
    pdu.short_message = text;
    return pdu;
}

Testbed::Testbed(const scenario::ScenarioConfig& cfg)
    : cfg_(cfg),
      net_(1),
      op_(&net_.add_operator(cfg.operator_name, cfg.operator_policy)),
      admin_(cfg.admin_number),
      other_(cfg.other_number.empty() ? PhoneNumber("1") : cfg.other_number),
      attacker_rng_(cfg.seed ^ kAttackerSeedTag) {
    for (std::uint32_t i = 1; i <= cfg.ssh_candidates; ++i)
        ssh_candidates_.push_back("candidate-" + std::to_string(i));

    gateway::GatewayDevice::Config dev_cfg;
    dev_cfg.own_number = cfg.gateway_number;
    dev_cfg.block_threshold = cfg.block_threshold;
    dev_cfg.ssh_password = true_ssh_password();
    device_ = std::make_unique<gateway::GatewayDevice>(dev_cfg);
    device_->configure_auth(build_auth_chain(cfg));

    sim::SmscAccount account;
    account.system_id = cfg.account_system_id;
    account.password = cfg.account_password;
    account.owned_numbers.insert(cfg.account_owns.begin(), cfg.account_owns.end());
    op_->add_account(std::move(account));

    net_.register_subscriber(cfg.gateway_number, *device_);
    net_.register_subscriber(cfg.admin_number, admin_);
    if (!cfg.other_number.empty())
        net_.register_subscriber(cfg.other_number, other_);
}

smpp::Pdu Testbed::submit_spoofed(const std::string& text) {
    if (!session_.bound()) {
        smpp::BindTransceiver bind;
        bind.system_id = cfg_.account_system_id;
        bind.password = cfg_.account_password;
        smpp::Pdu resp = op_->bind(session_, bind, ++seq_);
        if (resp.command_status != smpp::kStatusOk)
            return resp;
    }
    return op_->submit(session_, craft_spoofed_submit(cfg_.spoof_as, cfg_.gateway_number, text),
                       ++seq_);
}

std::string Testbed::random_digest_hex() {
    std::uint8_t bytes[16];
    for (auto& b : bytes)
        b = static_cast<std::uint8_t>(attacker_rng_());
    return crypto::to_hex(bytes, sizeof bytes);
}

AttackReport run_plan(Testbed& tb, const AttackPlan& plan) {
    AttackReport report;
    auto ip = protection::Ipv4::parse(tb.config().attack_source_ip);
    for (const auto& step : plan.steps) {
        if (const auto* s = std::get_if<SendSpoofed>(&step)) {
            std::size_t before = accepted_count(tb.device());
            tb.submit_spoofed(s->text);
            tb.net().run_until_idle();
            tb.net().advance(2);
            report.attacker_accepted += accepted_count(tb.device()) - before;
        } else if (const auto* a = std::get_if<SshAttempt>(&step)) {
            auto r = tb.device().ssh().attempt_login(ip, a->password);
            if (r != protection::LoginResult::Blocked)
                ++report.ssh_attempts;
            if (r == protection::LoginResult::Success)
                report.ssh_breached = true;
        } else if (const auto* w = std::get_if<Wait>(&step)) {
            tb.net().advance(w->ticks);
        }
    }
    fill_counts(tb, report);
    return report;
}

AttackReport run_bypass_demo(Testbed& tb) {
    const auto& cfg = tb.config();
    auto& net = tb.net();
    std::string text = admin_text(cfg, "reboot");

    // 1. legitimate command from the admin handset
    tb.admin().send(net, cfg.gateway_number, text);
    net.run_until_idle();
    net.advance(2);

    // 2. same text from the non-admin handset
    tb.other().send(net, cfg.gateway_number, text);
    net.run_until_idle();
    net.advance(2);

    // 3. spoofed submit_sm carrying the admin's number in source_addr
    AttackReport report;
    std::size_t before = accepted_count(tb.device());
    tb.submit_spoofed(text);
    net.run_until_idle();
    net.advance(2);
    report.attacker_accepted = accepted_count(tb.device()) - before;

    fill_counts(tb, report);

    // §4.2 behaviors: admin accepted, non-admin rejected, spoof accepted with
    // an origin identical to the legitimate one
    std::vector<const gateway::LogRecord*> accepted;
    for (const auto& rec : report.trace)
        if (rec.outcome == gateway::Outcome::Accepted)
            accepted.push_back(&rec);
    bool origins_match = accepted.size() == 2 && accepted[0]->origin == accepted[1]->origin &&
                         accepted[0]->origin == cfg.spoof_as;
    report.reproduced = report.device_rebooted && report.accepted_commands == 2 &&
                        report.rejected_auth == 1 && report.attacker_accepted == 1 &&
                        origins_match;
    report.verdict_detail =
        report.reproduced ? "spoofed origin accepted alongside legitimate admin command"
                          : "bypass not observed";
    return report;
}

namespace {

// One unblock round: plain spoofed "ipunblock"; if the auth chain resists,
// fall back to an "auth" request plus random digest guesses.
bool attempt_unblock(Testbed& tb, AttackReport& report, protection::Ipv4 ip) {
    auto& net = tb.net();
    auto& dev = tb.device();

    std::size_t before = accepted_count(dev);
    tb.submit_spoofed("ipunblock");
    net.run_until_idle();
    net.advance(2);
    report.attacker_accepted += accepted_count(dev) - before;
    if (!dev.blocked_ips().is_blocked(ip)) {
        ++report.unblocks_used;
        return true;
    }

    before = accepted_count(dev);
    tb.submit_spoofed("auth"); // challenge goes to the real admin, not to us
    net.run_until_idle();
    net.advance(2);
    for (std::uint32_t g = 0; g < tb.config().attack_guesses; ++g)
        tb.submit_spoofed("RESP " + tb.random_digest_hex() + " ipunblock");
    net.run_until_idle();
    net.advance(2);
    report.attacker_accepted += accepted_count(dev) - before;

    if (!dev.blocked_ips().is_blocked(ip)) {
        ++report.unblocks_used;
        return true;
    }
    return false;
}

} // namespace

AttackReport run_ipunblock_scenario(Testbed& tb) {
    const auto& cfg = tb.config();
    AttackReport report;
    auto ip = protection::Ipv4::parse(cfg.attack_source_ip);
    auto& ssh = tb.device().ssh();

    for (const auto& candidate : tb.ssh_candidates()) {
        bool evaluated = false;
        while (!evaluated) {
            auto r = ssh.attempt_login(ip, candidate);
            if (r == protection::LoginResult::Blocked) {
                if (!attempt_unblock(tb, report, ip))
                    goto done; // cannot get unblocked; attack stalls at the threshold
                continue;
            }
            evaluated = true;
            ++report.ssh_attempts;
            if (r == protection::LoginResult::Success) {
                report.ssh_breached = true;
                goto done;
            }
        }
    }
done:
    fill_counts(tb, report);

    // Fig. 4 arithmetic: true password at index t, threshold k -> t evaluated
    // attempts and floor((t-1)/k) unblocks
    std::size_t expected_attempts = cfg.ssh_true_index;
    std::size_t expected_unblocks = (cfg.ssh_true_index - 1) / cfg.block_threshold;
    report.reproduced = report.ssh_breached && report.ssh_attempts == expected_attempts &&
                        report.unblocks_used == expected_unblocks;
    report.verdict_detail = report.reproduced
                                ? "ssh breach via spoofed ipunblock"
                                : (report.ssh_breached ? "breached with unexpected counts"
                                                       : "ssh not breached");
    return report;
}

AttackReport run_mitigation_demo(Testbed& tb) {
    const auto& cfg = tb.config();
    auto& net = tb.net();
    auto& dev = tb.device();
    AttackReport report;

    // attacker: spoofed access request; the challenge is routed to the admin
    std::size_t before = accepted_count(dev);
    tb.submit_spoofed("auth");
    net.run_until_idle();
    net.advance(2);

    // attacker: blind digest guesses
    for (std::uint32_t g = 0; g < cfg.attack_guesses; ++g)
        tb.submit_spoofed("RESP " + tb.random_digest_hex() + " reboot");
    net.run_until_idle();
    net.advance(2);
    report.attacker_accepted += accepted_count(dev) - before;

    // admin: real handshake
    tb.admin().send(net, cfg.gateway_number, "auth");
    net.run_until_idle();
    net.advance(2);
    std::string response_text;
    if (!tb.admin().inbox().empty()) {
        const std::string& challenge = tb.admin().inbox().back().text;
        if (challenge.starts_with("CHALLENGE ")) {
            std::string nonce = challenge.substr(10);
            response_text = "RESP " + crypto::md5_hex(cfg.sms_password + nonce) + " reboot";
            tb.admin().send(net, cfg.gateway_number, response_text);
            net.run_until_idle();
            net.advance(2);
        }
    }

    // attacker: replay the admin's captured response (nonce already consumed)
    if (!response_text.empty()) {
        before = accepted_count(dev);
        tb.submit_spoofed(response_text);
        net.run_until_idle();
        net.advance(2);
        report.attacker_accepted += accepted_count(dev) - before;
    }

    fill_counts(tb, report);
    report.reproduced = report.device_rebooted && report.accepted_commands == 1 &&
                        report.attacker_accepted == 0;
    report.verdict_detail = report.reproduced
                                ? "challenge-response defeats spoofed commands"
                                : "mitigation property violated";
    return report;
}

AttackReport run_scenario(Testbed& tb) {
    switch (tb.config().attack_kind) {
    case scenario::AttackKind::Bypass:
        return run_bypass_demo(tb);
    case scenario::AttackKind::IpUnblock:
        return run_ipunblock_scenario(tb);
    case scenario::AttackKind::Mitigation:
        return run_mitigation_demo(tb);
    }
    throw std::logic_error("unreachable attack kind");
}

} // namespace smsgw::attacker
