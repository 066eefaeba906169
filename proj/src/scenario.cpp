#include "smsgw/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace smsgw::scenario {

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        std::string item =
            trim(comma == std::string::npos ? value.substr(start)
                                            : value.substr(start, comma - start));
        if (!item.empty())
            items.push_back(std::move(item));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return items;
}

std::uint64_t parse_uint(const std::string& value, std::size_t line) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size())
        throw ConfigError(line, "expected unsigned integer, got \"" + value + "\"");
    return v;
}

PhoneNumber parse_number(const std::string& value, std::size_t line) {
    try {
        return parse_phone_number(value);
    } catch (const PhoneParseError& e) {
        throw ConfigError(line, "bad phone number \"" + value + "\": " + e.what());
    }
}

AuthKind parse_auth_kind(const std::string& s, std::size_t line) {
    if (s == "origin")
        return AuthKind::Origin;
    if (s == "password")
        return AuthKind::Password;
    if (s == "challenge")
        return AuthKind::Challenge;
    if (s == "oma-basic")
        return AuthKind::OmaBasic;
    if (s == "oma-digest")
        return AuthKind::OmaDigest;
    throw ConfigError(line, "unknown auth policy \"" + s + "\"");
}

} // namespace

const char* attack_kind_name(AttackKind k) {
    switch (k) {
    case AttackKind::Bypass:
        return "bypass";
    case AttackKind::IpUnblock:
        return "ipunblock";
    case AttackKind::Mitigation:
        return "mitigation";
    }
    return "?";
}

ScenarioConfig parse_config(const std::string& content) {
    ScenarioConfig cfg;
    std::istringstream in(content);
    std::string raw;
    std::size_t lineno = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(lineno, "expected \"key = value\"");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(lineno, "empty key or value");

        if (key == "seed") {
            cfg.seed = parse_uint(value, lineno);
        } else if (key == "operator.name") {
            cfg.operator_name = value;
        } else if (key == "operator.policy") {
            if (value == "permissive")
                cfg.operator_policy = sim::OperatorPolicy::Permissive;
            else if (value == "verify-source")
                cfg.operator_policy = sim::OperatorPolicy::VerifySource;
            else if (value == "overwrite-source")
                cfg.operator_policy = sim::OperatorPolicy::OverwriteSource;
            else
                throw ConfigError(lineno, "unknown operator policy \"" + value + "\"");
        } else if (key == "account.system_id") {
            cfg.account_system_id = value;
        } else if (key == "account.password") {
            cfg.account_password = value;
        } else if (key == "account.owns") {
            cfg.account_owns.clear();
            for (const auto& item : split_list(value))
                cfg.account_owns.push_back(parse_number(item, lineno));
        } else if (key == "gateway.number") {
            cfg.gateway_number = parse_number(value, lineno);
        } else if (key == "gateway.auth") {
            cfg.auth_chain.clear();
            for (const auto& item : split_list(value))
                cfg.auth_chain.push_back(parse_auth_kind(item, lineno));
        } else if (key == "gateway.allowlist") {
            cfg.allowlist.clear();
            for (const auto& item : split_list(value))
                cfg.allowlist.push_back(parse_number(item, lineno));
        } else if (key == "gateway.sms_password") {
            cfg.sms_password = value;
        } else if (key == "gateway.block_threshold") {
            cfg.block_threshold = static_cast<std::uint32_t>(parse_uint(value, lineno));
        } else if (key == "gateway.ssh_candidates") {
            cfg.ssh_candidates = static_cast<std::uint32_t>(parse_uint(value, lineno));
        } else if (key == "gateway.ssh_true_index") {
            cfg.ssh_true_index = static_cast<std::uint32_t>(parse_uint(value, lineno));
        } else if (key == "handset.admin") {
            cfg.admin_number = parse_number(value, lineno);
        } else if (key == "handset.other") {
            cfg.other_number = parse_number(value, lineno);
        } else if (key == "attack.kind") {
            if (value == "bypass")
                cfg.attack_kind = AttackKind::Bypass;
            else if (value == "ipunblock")
                cfg.attack_kind = AttackKind::IpUnblock;
            else if (value == "mitigation")
                cfg.attack_kind = AttackKind::Mitigation;
            else
                throw ConfigError(lineno, "unknown attack kind \"" + value + "\"");
        } else if (key == "attack.spoof_as") {
            cfg.spoof_as = parse_number(value, lineno);
        } else if (key == "attack.guesses") {
            cfg.attack_guesses = static_cast<std::uint32_t>(parse_uint(value, lineno));
        } else if (key == "attack.source_ip") {
            cfg.attack_source_ip = value;
        } else {
            throw ConfigError(lineno, "unknown key \"" + key + "\"");
        }
    }

    if (cfg.gateway_number.empty())
        throw ConfigError(0, "gateway.number is required");
    if (cfg.admin_number.empty())
        throw ConfigError(0, "handset.admin is required");
    if (cfg.auth_chain.empty())
        throw ConfigError(0, "gateway.auth is required");
    if (cfg.spoof_as.empty())
        cfg.spoof_as = cfg.admin_number;
    if (cfg.ssh_true_index == 0 || cfg.ssh_true_index > cfg.ssh_candidates)
        throw ConfigError(0, "gateway.ssh_true_index out of range");

    // every number referenced by the attack must be a declared participant
    auto declared = [&](const PhoneNumber& n) {
        return n == cfg.gateway_number || n == cfg.admin_number ||
               (!cfg.other_number.empty() && n == cfg.other_number);
    };
    if (!declared(cfg.spoof_as))
        throw UnknownNumberRef(0, "attack.spoof_as references undeclared number " +
                                      cfg.spoof_as.digits());
    for (const auto& n : cfg.allowlist)
        if (!declared(n))
            throw UnknownNumberRef(0,
                                   "gateway.allowlist references undeclared number " + n.digits());

    // the attacker must not own the number it spoofs
    if (std::find(cfg.account_owns.begin(), cfg.account_owns.end(), cfg.spoof_as) !=
        cfg.account_owns.end())
        throw ConfigError(0, "attack.spoof_as must not be owned by the attacker account");

    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(0, "cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace smsgw::scenario
