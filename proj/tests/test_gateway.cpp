#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ref_md5.h"
#include "smsgw/gateway.hpp"

using namespace smsgw;
using namespace smsgw::gateway;

namespace {

const PhoneNumber kAdmin("819012345678");
const PhoneNumber kOther("817011112222");
const PhoneNumber kGateway("818098765432");

GatewayDevice::Config device_config() {
    GatewayDevice::Config cfg;
    cfg.own_number = kGateway;
    cfg.block_threshold = 10;
    cfg.ssh_password = "hunter2";
    return cfg;
}

std::vector<std::unique_ptr<auth::Policy>> origin_only() {
    std::vector<std::unique_ptr<auth::Policy>> chain;
    chain.push_back(std::make_unique<auth::OriginAllowlist>(std::set<PhoneNumber>{kAdmin}));
    return chain;
}

struct Fixture {
    sim::Network net;
    GatewayDevice device{device_config()};
    sim::Handset admin{kAdmin};
    sim::Handset other{kOther};

    Fixture() {
        device.configure_auth(origin_only());
        net.register_subscriber(kGateway, device);
        net.register_subscriber(kAdmin, admin);
        net.register_subscriber(kOther, other);
    }

    void deliver(const sim::Handset& from, const std::string& text) {
        from.send(net, kGateway, text);
        net.run_until_idle();
        net.advance(2);
    }
};

} // namespace

TEST_CASE("command parsing") {
    CHECK(parse_command("reboot").kind == SmsCommand::Kind::Reboot);
    CHECK(parse_command("  REBOOT  ").kind == SmsCommand::Kind::Reboot);
    CHECK(parse_command("Status").kind == SmsCommand::Kind::Status);
    auto unblock_all = parse_command("ipunblock");
    CHECK(unblock_all.kind == SmsCommand::Kind::IpUnblock);
    CHECK_FALSE(unblock_all.ip.has_value());
    auto unblock_one = parse_command("ipunblock 10.0.0.9");
    REQUIRE(unblock_one.ip.has_value());
    CHECK(unblock_one.ip->to_string() == "10.0.0.9");
    CHECK(parse_command("ipunblock nonsense").kind == SmsCommand::Kind::Unknown);
    auto unknown = parse_command("explode now");
    CHECK(unknown.kind == SmsCommand::Kind::Unknown);
    CHECK(unknown.raw == "explode now");
    CHECK(parse_command("reboot extra").kind == SmsCommand::Kind::Unknown);
}

TEST_CASE("allowlisted reboot is accepted and executed") {
    Fixture f;
    f.deliver(f.admin, "reboot");
    REQUIRE(f.device.command_log().size() == 1);
    CHECK(f.device.command_log()[0].outcome == Outcome::Accepted);
    CHECK(f.device.reboot_count() == 1);
    // success reply went back to the origin
    REQUIRE(f.admin.inbox().size() == 1);
    CHECK(f.admin.inbox()[0].text == "OK reboot");
}

TEST_CASE("non-allowlisted sender is rejected silently with no state change") {
    Fixture f;
    f.deliver(f.other, "reboot");
    REQUIRE(f.device.command_log().size() == 1);
    CHECK(f.device.command_log()[0].outcome == Outcome::RejectedAuth);
    CHECK(f.device.reboot_count() == 0);
    CHECK(f.other.inbox().empty()); // silence avoids becoming an allowlist oracle
}

TEST_CASE("unknown command from an authorized sender") {
    Fixture f;
    f.deliver(f.admin, "explode");
    REQUIRE(f.device.command_log().size() == 1);
    CHECK(f.device.command_log()[0].outcome == Outcome::RejectedParse);
    CHECK(f.device.reboot_count() == 0);
}

TEST_CASE("reboot resets uptime and increments the counter") {
    GatewayDevice dev(device_config());
    CHECK(dev.uptime_ticks(LogicalTime{500}) == 500);
    auto r = dev.execute(SmsCommand{SmsCommand::Kind::Reboot, std::nullopt, {}},
                         LogicalTime{500});
    CHECK(r.reply == "OK reboot");
    CHECK(dev.uptime_ticks(LogicalTime{500}) == 0);
    CHECK(dev.reboot_count() == 1);
}

TEST_CASE("ipunblock removes a specific ip") {
    GatewayDevice dev(device_config());
    auto ip = protection::Ipv4::parse("10.0.0.9");
    for (int i = 0; i < 10; ++i)
        dev.ssh().attempt_login(ip, "wrong");
    REQUIRE(dev.blocked_ips().is_blocked(ip));
    dev.execute(SmsCommand{SmsCommand::Kind::IpUnblock, ip, {}}, LogicalTime{1});
    CHECK_FALSE(dev.blocked_ips().is_blocked(ip));
}

TEST_CASE("status reports both counters to the origin") {
    Fixture f;
    f.deliver(f.admin, "reboot");
    f.deliver(f.admin, "status");
    REQUIRE(f.admin.inbox().size() == 2);
    const std::string& status = f.admin.inbox()[1].text;
    CHECK(status.find("uptime=") != std::string::npos);
    CHECK(status.find("reboots=1") != std::string::npos);
}

TEST_CASE("empty auth chain is refused") {
    GatewayDevice dev(device_config());
    CHECK_THROWS_AS(dev.configure_auth({}), EmptyChainRefused);
}

TEST_CASE("auth chain is a conjunction") {
    Fixture f;
    std::vector<std::unique_ptr<auth::Policy>> chain;
    chain.push_back(std::make_unique<auth::OriginAllowlist>(std::set<PhoneNumber>{kAdmin}));
    chain.push_back(std::make_unique<auth::StaticPassword>("s3cret"));
    f.device.configure_auth(std::move(chain));

    f.deliver(f.admin, "reboot"); // wrong password
    f.deliver(f.admin, "s3cret reboot");
    f.deliver(f.other, "s3cret reboot"); // wrong origin

    const auto& log = f.device.command_log();
    REQUIRE(log.size() == 3);
    CHECK(log[0].outcome == Outcome::RejectedAuth);
    CHECK(log[1].outcome == Outcome::Accepted);
    CHECK(log[2].outcome == Outcome::RejectedAuth);
    CHECK(f.device.reboot_count() == 1);
}

TEST_CASE("challenge handshake through the device") {
    Fixture f;
    std::vector<std::unique_ptr<auth::Policy>> chain;
    chain.push_back(std::make_unique<auth::ChallengeResponse>("s3cret", 42));
    f.device.configure_auth(std::move(chain));

    f.deliver(f.admin, "auth");
    REQUIRE(f.device.command_log().size() == 1);
    CHECK(f.device.command_log()[0].outcome == Outcome::ChallengeIssued);
    REQUIRE(f.admin.inbox().size() == 1);
    REQUIRE(f.admin.inbox()[0].text.starts_with("CHALLENGE "));

    std::string nonce = f.admin.inbox()[0].text.substr(10);
    f.deliver(f.admin, "RESP " + testref::md5_hex("s3cret" + nonce) + " reboot");
    CHECK(f.device.command_log().back().outcome == Outcome::Accepted);
    CHECK(f.device.reboot_count() == 1);
}

TEST_CASE("log record line format is bit-exact") {
    LogRecord rec;
    rec.tick = LogicalTime{3};
    rec.origin = kAdmin;
    rec.text = "reboot";
    rec.outcome = Outcome::Accepted;
    rec.detail = "OK reboot";
    CHECK(format_log_record(rec) ==
          "tick=3 dir=rx origin=819012345678 text=\"reboot\" outcome=Accepted detail=\"OK reboot\"");
}

TEST_CASE("device is deaf for the tick after a reboot") {
    sim::Network net(2); // latency 2 lets a message be in flight during the reboot
    GatewayDevice device(device_config());
    device.configure_auth(origin_only());
    sim::Handset admin(kAdmin);
    net.register_subscriber(kGateway, device);
    net.register_subscriber(kAdmin, admin);

    admin.send(net, kGateway, "reboot"); // due at tick 2
    net.advance(1);
    admin.send(net, kGateway, "status"); // due at tick 3, the deaf tick
    net.run_until_idle();

    CHECK(device.reboot_count() == 1);
    CHECK(device.dropped_while_rebooting() == 1);
    CHECK(device.command_log().size() == 1);

    net.advance(2);
    admin.send(net, kGateway, "status");
    net.run_until_idle();
    CHECK(device.command_log().size() == 2);
}

TEST_CASE("log completeness: one record per message received") {
    Fixture f;
    f.deliver(f.admin, "reboot");
    f.deliver(f.other, "reboot");
    f.deliver(f.admin, "garbage");
    f.deliver(f.admin, "status");

    std::size_t delivered_to_device = 0;
    for (const auto& ev : f.net.trace())
        if (ev.delivered && ev.msg.destination.number == kGateway)
            ++delivered_to_device;
    CHECK(f.device.command_log().size() ==
          delivered_to_device - f.device.dropped_while_rebooting());
}

TEST_CASE("no side effect without authentication") {
    Fixture f;
    // hammer the device with rejected traffic, tracking state snapshots
    for (int i = 0; i < 20; ++i) {
        auto reboots_before = f.device.reboot_count();
        f.deliver(f.other, "reboot");
        CHECK(f.device.reboot_count() == reboots_before);
        CHECK(f.device.command_log().back().outcome == Outcome::RejectedAuth);
    }
}
