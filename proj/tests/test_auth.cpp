#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ref_base64.h"
#include "ref_md5.h"
#include "smsgw/auth.hpp"
#include "smsgw/crypto.hpp"

using namespace smsgw;
using namespace smsgw::auth;

namespace {
const PhoneNumber kAdmin("819012345678");
const PhoneNumber kOther("817011112222");

std::string random_token(std::mt19937_64& rng, std::size_t max_len) {
    std::size_t len = 1 + rng() % max_len;
    std::string s;
    for (std::size_t i = 0; i < len; ++i)
        s.push_back(static_cast<char>('!' + rng() % 94));
    return s;
}
} // namespace

TEST_CASE("md5 and base64 against known values") {
    CHECK(crypto::md5_hex("abc") == "900150983cd24fb0d6963f7d28e17f72");
    CHECK(crypto::md5_hex("") == "d41d8cd98f00b204e9800998ecf8427e");
    CHECK(crypto::base64_encode("admin:pw") == "YWRtaW46cHc=");
    // reference oracles agree with themselves on the same values
    CHECK(testref::md5_hex("abc") == "900150983cd24fb0d6963f7d28e17f72");
    CHECK(testref::base64("admin:pw") == "YWRtaW46cHc=");
}

TEST_CASE("implementation matches independent oracles on random inputs") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        std::string data = random_token(rng, 80);
        CHECK(crypto::md5_hex(data) == testref::md5_hex(data));
        CHECK(crypto::base64_encode(data) == testref::base64(data));
    }
}

TEST_CASE("origin allowlist") {
    OriginAllowlist policy({kAdmin});
    CHECK(policy.check(kAdmin, "reboot", {}).kind == Result::Kind::Pass);
    CHECK(policy.check(kOther, "reboot", {}).kind == Result::Kind::Fail);
    // a spoofed message carrying the admin number passes: the bypass
    CHECK(policy.check(PhoneNumber("819012345678"), "reboot", {}).kind == Result::Kind::Pass);
    CHECK_THROWS(OriginAllowlist({}));
}

TEST_CASE("origin allowlist bypass property over random allowlists") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        std::set<PhoneNumber> allowed;
        while (allowed.size() < 3) {
            std::string d;
            for (int j = 0; j < 10; ++j)
                d.push_back(static_cast<char>('0' + rng() % 10));
            allowed.insert(PhoneNumber(d));
        }
        OriginAllowlist policy(allowed);
        for (const auto& n : allowed)
            CHECK(policy.check(n, "x", {}).kind == Result::Kind::Pass);
        PhoneNumber outside("99999999999999");
        if (!allowed.contains(outside))
            CHECK(policy.check(outside, "x", {}).kind == Result::Kind::Fail);
    }
}

TEST_CASE("static password splits off the first token") {
    StaticPassword policy("s3cret");
    auto r = policy.check(kAdmin, "s3cret reboot", {});
    CHECK(r.kind == Result::Kind::Pass);
    CHECK(r.text == "reboot");
    CHECK(policy.check(kAdmin, "wrong reboot", {}).kind == Result::Kind::Fail);
    auto bare = policy.check(kAdmin, "s3cret", {});
    CHECK(bare.kind == Result::Kind::Pass);
    CHECK(bare.text.empty()); // downstream parser rejects the empty command
}

TEST_CASE("challenge-response full handshake") {
    ChallengeResponse policy("s3cret", 42);
    LogicalTime t{10};

    auto challenge = policy.check(kAdmin, "auth", t);
    REQUIRE(challenge.kind == Result::Kind::Challenge);
    REQUIRE(challenge.text.starts_with("CHALLENGE "));
    std::string nonce = challenge.text.substr(10);
    CHECK(nonce.size() == 32);

    // digest verified against the independent MD5 oracle
    std::string digest = testref::md5_hex("s3cret" + nonce);
    auto pass = policy.check(kAdmin, "RESP " + digest + " reboot", LogicalTime{12});
    CHECK(pass.kind == Result::Kind::Pass);
    CHECK(pass.text == "reboot");

    // replay: the nonce was consumed
    auto replay = policy.check(kAdmin, "RESP " + digest + " reboot", LogicalTime{13});
    CHECK(replay.kind == Result::Kind::Fail);
}

TEST_CASE("challenge-response expiry") {
    ChallengeResponse policy("s3cret", 42, 50);
    auto challenge = policy.check(kAdmin, "auth", LogicalTime{0});
    std::string nonce = challenge.text.substr(10);
    std::string digest = testref::md5_hex("s3cret" + nonce);
    // one tick past the TTL
    auto late = policy.check(kAdmin, "RESP " + digest + " reboot", LogicalTime{51});
    CHECK(late.kind == Result::Kind::Fail);
}

TEST_CASE("second auth overwrites the old nonce") {
    ChallengeResponse policy("s3cret", 42);
    auto c1 = policy.check(kAdmin, "auth", LogicalTime{0});
    std::string n1 = c1.text.substr(10);
    auto c2 = policy.check(kAdmin, "auth", LogicalTime{1});
    std::string n2 = c2.text.substr(10);
    CHECK(n1 != n2);
    // the first nonce no longer verifies
    auto r1 = policy.check(kAdmin, "RESP " + testref::md5_hex("s3cret" + n1) + " x",
                           LogicalTime{2});
    CHECK(r1.kind == Result::Kind::Fail);
    auto r2 = policy.check(kAdmin, "RESP " + testref::md5_hex("s3cret" + n2) + " x",
                           LogicalTime{3});
    CHECK(r2.kind == Result::Kind::Pass);
}

TEST_CASE("challenge-response rejects malformed and sessionless input") {
    ChallengeResponse policy("s3cret", 42);
    CHECK(policy.check(kAdmin, "RESP zzzz reboot", {}).kind == Result::Kind::Fail);
    CHECK(policy.check(kAdmin, "reboot", {}).kind == Result::Kind::Fail);
    CHECK(policy.check(kOther, "RESP 00112233445566778899aabbccddeeff x", {}).kind ==
          Result::Kind::Fail);
}

TEST_CASE("challenge-response sessions are per-origin") {
    ChallengeResponse policy("s3cret", 42);
    auto ca = policy.check(kAdmin, "auth", LogicalTime{0});
    auto co = policy.check(kOther, "auth", LogicalTime{0});
    std::string na = ca.text.substr(10);
    std::string no = co.text.substr(10);
    // the other party's nonce does not verify for the admin
    CHECK(policy.check(kAdmin, "RESP " + testref::md5_hex("s3cret" + no) + " x", LogicalTime{1})
              .kind == Result::Kind::Fail);
    CHECK(policy.check(kAdmin, "RESP " + testref::md5_hex("s3cret" + na) + " x", LogicalTime{1})
              .kind == Result::Kind::Pass);
}

TEST_CASE("challenge-response digest agrees with oracle over random pairs") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 150; ++i) {
        std::string password = random_token(rng, 20);
        ChallengeResponse policy(password, rng());
        auto c = policy.check(kAdmin, "auth", LogicalTime{0});
        std::string nonce = c.text.substr(10);
        CHECK(policy.compute_digest(nonce) == testref::md5_hex(password + nonce));
    }
}

TEST_CASE("oma basic credential") {
    OmaDmBasic cred("admin", "pw");
    CHECK(cred.expected_token() == "YWRtaW46cHc=");
    CHECK(cred.verify_token("YWRtaW46cHc="));
    CHECK_FALSE(cred.verify_token("YWRtaW46cHc")); // wrong padding
    CHECK_FALSE(cred.verify_token(""));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 150; ++i) {
        std::string user = random_token(rng, 12);
        std::string pw = random_token(rng, 12);
        OmaDmBasic c(user, pw);
        CHECK(c.verify_token(testref::base64(user + ":" + pw)));
    }
}

TEST_CASE("oma digest two-stage construction") {
    OmaDmDigest cred("admin", "pw", 42);
    std::string nonce = cred.current_nonce();

    // independent two-stage oracle: md5(b64(md5(user:pass)) ++ ":" ++ nonce)
    auto inner_hex = testref::md5_hex("admin:pw");
    std::string inner_raw;
    for (std::size_t i = 0; i < inner_hex.size(); i += 2)
        inner_raw.push_back(
            static_cast<char>(std::stoi(inner_hex.substr(i, 2), nullptr, 16)));
    std::string expected = testref::md5_hex(testref::base64(inner_raw) + ":" + nonce);

    CHECK(cred.expected_digest_hex() == expected);
    CHECK(cred.verify_digest_hex(expected));
    // nonce rotated after the pass: the old digest is now stale
    CHECK_FALSE(cred.verify_digest_hex(expected));
    CHECK(cred.current_nonce() != nonce);

    OmaDmDigest wrong_pw("admin", "other", 42);
    CHECK_FALSE(wrong_pw.verify_digest_hex(expected));
}

TEST_CASE("oma digest agrees with oracle over random credentials") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 150; ++i) {
        std::string user = random_token(rng, 10);
        std::string pw = random_token(rng, 10);
        OmaDmDigest cred(user, pw, rng());
        auto inner_hex = testref::md5_hex(user + ":" + pw);
        std::string inner_raw;
        for (std::size_t j = 0; j < inner_hex.size(); j += 2)
            inner_raw.push_back(
                static_cast<char>(std::stoi(inner_hex.substr(j, 2), nullptr, 16)));
        std::string expected =
            testref::md5_hex(testref::base64(inner_raw) + ":" + cred.current_nonce());
        CHECK(cred.verify_digest_hex(expected));
    }
}

TEST_CASE("constant-time equality") {
    CHECK(auth::equals_constant_time("abc", "abc"));
    CHECK_FALSE(auth::equals_constant_time("abc", "abd"));
    CHECK_FALSE(auth::equals_constant_time("abc", "abcd"));
    CHECK_FALSE(auth::equals_constant_time("", "a"));
    CHECK(auth::equals_constant_time("", ""));
}
