#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "smsgw/demos.hpp"
#include "smsgw/scenario.hpp"

using namespace smsgw;
using namespace smsgw::scenario;

namespace {

std::string source_root() {
    const char* src = std::getenv("GWSIM_SRC");
    REQUIRE(src != nullptr);
    return src;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("built-in demo configs parse") {
    for (auto kind :
         {AttackKind::Bypass, AttackKind::IpUnblock, AttackKind::Mitigation}) {
        ScenarioConfig cfg = parse_config(demos::scenario_text(kind));
        CHECK(cfg.attack_kind == kind);
        CHECK(cfg.gateway_number.digits() == "818098765432");
        CHECK(cfg.admin_number.digits() == "819012345678");
        CHECK(cfg.spoof_as == cfg.admin_number);
        CHECK(cfg.seed == 0);
    }
}

TEST_CASE("shipped scenario files are byte-identical to the built-in configs") {
    CHECK(read_file(source_root() + "/scenarios/bypass.scenario") ==
          demos::scenario_text(AttackKind::Bypass));
    CHECK(read_file(source_root() + "/scenarios/ipunblock.scenario") ==
          demos::scenario_text(AttackKind::IpUnblock));
    CHECK(read_file(source_root() + "/scenarios/mitigation.scenario") ==
          demos::scenario_text(AttackKind::Mitigation));
}

TEST_CASE("comments, blank lines and whitespace are tolerated") {
    ScenarioConfig cfg = parse_config(
        "# comment\n"
        "\n"
        "  seed =  7 \n"
        "gateway.number = 818098765432\n"
        "gateway.auth = origin\n"
        "handset.admin = 819012345678\n");
    CHECK(cfg.seed == 7);
    CHECK(cfg.spoof_as == cfg.admin_number); // defaults to the admin
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_config("seed = 0\nnot a config line\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_config("seed = x\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("unknown.key = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("operator.policy = open\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gateway.auth = none\n"), ConfigError);
}

TEST_CASE("missing required keys") {
    CHECK_THROWS_AS(parse_config("gateway.auth = origin\nhandset.admin = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gateway.number = 1\ngateway.auth = origin\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gateway.number = 1\nhandset.admin = 2\n"), ConfigError);
}

TEST_CASE("undeclared number references are rejected") {
    const std::string base =
        "gateway.number = 818098765432\n"
        "gateway.auth = origin\n"
        "handset.admin = 819012345678\n";
    CHECK_THROWS_AS(parse_config(base + "attack.spoof_as = 810000000000\n"), UnknownNumberRef);
    CHECK_THROWS_AS(parse_config(base + "gateway.allowlist = 810000000000\n"),
                    UnknownNumberRef);
    // declared numbers are fine
    auto cfg = parse_config(base + "gateway.allowlist = 819012345678\n");
    CHECK(cfg.allowlist.size() == 1);
}

TEST_CASE("attacker cannot own the spoofed number") {
    CHECK_THROWS_AS(parse_config("gateway.number = 818098765432\n"
                                 "gateway.auth = origin\n"
                                 "handset.admin = 819012345678\n"
                                 "account.owns = 819012345678\n"),
                    ConfigError);
}

TEST_CASE("ssh candidate index must be in range") {
    CHECK_THROWS_AS(parse_config("gateway.number = 818098765432\n"
                                 "gateway.auth = origin\n"
                                 "handset.admin = 819012345678\n"
                                 "gateway.ssh_candidates = 5\n"
                                 "gateway.ssh_true_index = 6\n"),
                    ConfigError);
}

TEST_CASE("load_config reports missing files") {
    CHECK_THROWS_AS(load_config("/nonexistent/x.scenario"), ConfigError);
}
