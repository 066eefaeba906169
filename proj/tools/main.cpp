#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "smsgw/attacker.hpp"
#include "smsgw/demos.hpp"
#include "smsgw/gateway.hpp"
#include "smsgw/scenario.hpp"
#include "smsgw/smpp.hpp"
#include "smsgw/survey.hpp"

namespace {

using namespace smsgw;

std::string to_hex_string(const std::vector<std::uint8_t>& bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0x0f]);
    }
    return s;
}

std::vector<std::uint8_t> from_hex_string(const std::string& hex) {
    std::vector<std::uint8_t> out;
    std::string clean;
    for (char c : hex)
        if (!std::isspace(static_cast<unsigned char>(c)))
            clean.push_back(c);
    if (clean.size() % 2 != 0)
        throw std::invalid_argument("odd-length hex input");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        throw std::invalid_argument(std::string("bad hex digit: ") + c);
    };
    for (std::size_t i = 0; i < clean.size(); i += 2)
        out.push_back(static_cast<std::uint8_t>(nibble(clean[i]) << 4 | nibble(clean[i + 1])));
    return out;
}

std::string describe_pdu(const smpp::Pdu& pdu) {
    std::string s = smpp::command_name(pdu.body);
    s += " seq=" + std::to_string(pdu.sequence_number);
    if (pdu.command_status != 0)
        s += " status=" + std::to_string(pdu.command_status);
    if (const auto* sm = std::get_if<smpp::SubmitSm>(&pdu.body)) {
        s += " source=" + sm->source.number.digits() + " dest=" +
             sm->destination.number.digits() + " text=\"" + sm->short_message + "\"";
    } else if (const auto* dm = std::get_if<smpp::DeliverSm>(&pdu.body)) {
        s += " source=" + dm->source.number.digits() + " dest=" +
             dm->destination.number.digits() + " text=\"" + dm->short_message + "\"";
    } else if (const auto* br = std::get_if<smpp::BindTransceiver>(&pdu.body)) {
        s += " system_id=" + br->system_id;
    } else if (const auto* rr = std::get_if<smpp::SubmitSmResp>(&pdu.body)) {
        if (!rr->message_id.empty())
            s += " message_id=" + rr->message_id;
    } else if (const auto* u = std::get_if<smpp::UnknownCommand>(&pdu.body)) {
        s += " command_id=" + std::to_string(u->raw_header.command_id);
    }
    return s;
}

void print_report(const attacker::AttackReport& report) {
    for (const auto& rec : report.trace)
        std::cout << gateway::format_log_record(rec) << "\n";
    std::cout << "report deliveries=" << report.deliveries
              << " accepted=" << report.accepted_commands
              << " rejected_auth=" << report.rejected_auth
              << " attacker_accepted=" << report.attacker_accepted
              << " device_rebooted=" << (report.device_rebooted ? "true" : "false")
              << " ssh_breached=" << (report.ssh_breached ? "true" : "false")
              << " ssh_attempts=" << report.ssh_attempts
              << " unblocks=" << report.unblocks_used << "\n";
}

int run_scenario_config(scenario::ScenarioConfig cfg, const std::string& verdict_name) {
    if (const char* seed_env = std::getenv("SEED"))
        cfg.seed = std::strtoull(seed_env, nullptr, 10);
    attacker::Testbed tb(cfg);
    attacker::AttackReport report = attacker::run_scenario(tb);
    print_report(report);
    std::cout << "VERDICT " << verdict_name << " "
              << (report.reproduced ? "reproduced" : "not-reproduced") << "\n";
    return report.reproduced ? 0 : 1;
}

int cmd_demo(const std::string& name) {
    scenario::AttackKind kind;
    if (name == "bypass")
        kind = scenario::AttackKind::Bypass;
    else if (name == "ipunblock")
        kind = scenario::AttackKind::IpUnblock;
    else if (name == "mitigation")
        kind = scenario::AttackKind::Mitigation;
    else {
        std::cerr << "unknown demo: " << name << "\n";
        return 1;
    }
    return run_scenario_config(scenario::parse_config(demos::scenario_text(kind)), name);
}

int cmd_simulate(const std::string& path) {
    scenario::ScenarioConfig cfg = scenario::load_config(path);
    return run_scenario_config(cfg, scenario::attack_kind_name(cfg.attack_kind));
}

int cmd_survey(const std::string& data_path, bool full) {
    auto records = survey::load_dataset(data_path);
    auto s = survey::summarize(records);
    if (full) {
        for (const auto& r : records)
            std::cout << r.vendor << "\t" << r.product << "\t" << survey::sms_mgmt_name(r.sms_mgmt)
                      << "\t" << survey::origin_auth_name(r.origin_auth) << "\n";
    }
    std::cout << "total " << s.total << "\n";
    std::cout << "sms_supported " << s.sms_supported << "/" << s.total << "\n";
    std::cout << "origin_auth " << s.origin_auth_yes << "/" << s.sms_supported << "\n";
    std::cout << "password_required " << s.password_required << "\n";
    std::cout << "implementation_dependent " << s.implementation_dependent << "\n";
    std::cout << "information_deficit " << s.information_deficit << "\n";
    std::cout << "origin_auth_no " << s.origin_auth_no << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic testbed for SMS origin spoofing against cellular IoT gateways"};
    app.require_subcommand(1);

    std::string demo_name;
    auto* demo = app.add_subcommand("demo", "run a canned scenario");
    demo->add_option("name", demo_name, "bypass | ipunblock | mitigation")->required();

    std::string scenario_path;
    auto* simulate = app.add_subcommand("simulate", "run a scenario file");
    simulate->add_option("file", scenario_path, "scenario config path")->required();

    auto* pdu = app.add_subcommand("pdu", "SMPP PDU tools");
    pdu->require_subcommand(1);

    std::string decode_hex;
    auto* dec = pdu->add_subcommand("decode", "decode a hex-encoded PDU");
    dec->add_option("hex", decode_hex, "wire bytes as hex text")->required();

    std::string enc_variant, enc_source, enc_dest, enc_text, enc_system_id, enc_password,
        enc_message_id;
    std::uint32_t enc_seq = 1, enc_status = 0;
    auto* enc = pdu->add_subcommand("encode", "encode a PDU to hex");
    enc->add_option("variant", enc_variant,
                    "enquire_link | enquire_link_resp | unbind | unbind_resp | generic_nack | "
                    "submit_sm | deliver_sm | submit_sm_resp | bind_transceiver")
        ->required();
    enc->add_option("--seq", enc_seq, "sequence number");
    enc->add_option("--status", enc_status, "command status");
    enc->add_option("--source", enc_source, "source address digits");
    enc->add_option("--dest", enc_dest, "destination address digits");
    enc->add_option("--text", enc_text, "short message text");
    enc->add_option("--system-id", enc_system_id, "system id");
    enc->add_option("--password", enc_password, "password");
    enc->add_option("--message-id", enc_message_id, "message id");

    std::string data_path = "data/survey.tsv";
    bool full = false;
    auto* surv = app.add_subcommand("survey", "survey dataset tools");
    surv->require_subcommand(1);
    auto* surv_report = surv->add_subcommand("report", "print the survey summary");
    surv_report->add_option("--data", data_path, "dataset path");
    surv_report->add_flag("--full", full, "print every record");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*demo)
            return cmd_demo(demo_name);
        if (*simulate)
            return cmd_simulate(scenario_path);
        if (*surv)
            return cmd_survey(data_path, full);
        if (*dec) {
            auto bytes = from_hex_string(decode_hex);
            std::cout << describe_pdu(smpp::decode_pdu(bytes)) << "\n";
            return 0;
        }
        if (*enc) {
            smpp::Pdu p;
            p.sequence_number = enc_seq;
            p.command_status = enc_status;
            if (enc_variant == "enquire_link")
                p.body = smpp::EnquireLink{};
            else if (enc_variant == "enquire_link_resp")
                p.body = smpp::EnquireLinkResp{};
            else if (enc_variant == "unbind")
                p.body = smpp::Unbind{};
            else if (enc_variant == "unbind_resp")
                p.body = smpp::UnbindResp{};
            else if (enc_variant == "generic_nack")
                p.body = smpp::GenericNack{};
            else if (enc_variant == "submit_sm" || enc_variant == "deliver_sm") {
                smpp::SubmitSm sm;
                sm.source = make_address(parse_phone_number(enc_source));
                sm.destination = make_address(parse_phone_number(enc_dest));
                sm.short_message = enc_text;
                if (enc_variant == "deliver_sm") {
                    smpp::DeliverSm dm;
                    static_cast<smpp::SubmitSm&>(dm) = sm;
                    p.body = dm;
                } else {
                    p.body = sm;
                }
            } else if (enc_variant == "submit_sm_resp")
                p.body = smpp::SubmitSmResp{enc_message_id};
            else if (enc_variant == "bind_transceiver") {
                smpp::BindTransceiver b;
                b.system_id = enc_system_id;
                b.password = enc_password;
                p.body = b;
            } else {
                std::cerr << "unknown PDU variant: " << enc_variant << "\n";
                return 1;
            }
            std::cout << to_hex_string(smpp::encode_pdu(p)) << "\n";
            return 0;
        }
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
