#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smsgw/message.hpp"
#include "smsgw/phone.hpp"

namespace smsgw::auth {

// Outcome of one authenticator in the chain.
//  Pass      - authentication succeeded; `text` carries the remaining
//              command text for the next stage
//  Fail      - reject the message, change no state
//  Challenge - no command this round; `text` is a challenge message to
//              route back to the claimed origin number
struct Result {
    enum class Kind { Pass, Fail, Challenge } kind;
    std::string text;
    std::string detail;

    static Result pass(std::string remaining, std::string detail = {}) {
        return {Kind::Pass, std::move(remaining), std::move(detail)};
    }
    static Result fail(std::string detail) { return {Kind::Fail, {}, std::move(detail)}; }
    static Result challenge(std::string challenge_text, std::string detail) {
        return {Kind::Challenge, std::move(challenge_text), std::move(detail)};
    }
};

class Policy {
public:
    virtual ~Policy() = default;
    virtual Result check(const PhoneNumber& origin, std::string_view text, LogicalTime now) = 0;
    virtual std::string name() const = 0;
};

class OriginAllowlist : public Policy {
public:
    explicit OriginAllowlist(std::set<PhoneNumber> allowed);

    Result check(const PhoneNumber& origin, std::string_view text, LogicalTime now) override;
    std::string name() const override { return "origin-allowlist"; }

private:
    std::set<PhoneNumber> allowed_;
};

// Expected wire format: "<password> <command...>".
class StaticPassword : public Policy {
public:
    explicit StaticPassword(std::string password);

    Result check(const PhoneNumber& origin, std::string_view text, LogicalTime now) override;
    std::string name() const override { return "static-password"; }

private:
    std::string password_;
};

// SMS text grammar:
//   request   "auth"
//   challenge "CHALLENGE <32 hex chars>"
//   response  "RESP <32 hex chars> <command...>"
// Digest = lowercase hex of hash(password_bytes ++ nonce_hex_bytes); MD5 by
// default, pluggable.
class ChallengeResponse : public Policy {
public:
    using HashFn = std::function<std::string(std::string_view)>; // returns lowercase hex

    ChallengeResponse(std::string password, std::uint64_t rng_seed,
                      std::uint64_t nonce_ttl_ticks = 50, HashFn hash = {});

    Result check(const PhoneNumber& origin, std::string_view text, LogicalTime now) override;
    std::string name() const override { return "challenge-response"; }

    // Exposed for direct protocol-level tests.
    std::string issue_challenge(const PhoneNumber& requester, LogicalTime now);
    Result verify_response(const PhoneNumber& origin, std::string_view text, LogicalTime now);

    std::string compute_digest(std::string_view nonce_hex) const;

private:
    struct Session {
        std::string nonce_hex; // 16 random bytes, hex-encoded
        LogicalTime issued_at;
    };

    std::string password_;
    std::uint64_t nonce_ttl_;
    HashFn hash_;
    std::mt19937_64 rng_;
    std::map<PhoneNumber, Session> sessions_;
    std::set<std::string> used_nonces_;
};

// OMA DM security: credential token = base64(user_id ":" password).
class OmaDmBasic : public Policy {
public:
    OmaDmBasic(std::string user_id, std::string password);

    // Message format: "<token> <command...>".
    Result check(const PhoneNumber& origin, std::string_view text, LogicalTime now) override;
    std::string name() const override { return "oma-basic"; }

    bool verify_token(std::string_view token) const;
    std::string expected_token() const;

private:
    std::string user_id_;
    std::string password_;
};

// OMA DM MD5 digest:
//   digest = MD5( base64(MD5(user_id ":" password)) ++ ":" ++ server_nonce )
// The server nonce rotates after each successful verification.
class OmaDmDigest : public Policy {
public:
    OmaDmDigest(std::string user_id, std::string password, std::uint64_t rng_seed);

    // Message format: "<32 hex chars> <command...>".
    Result check(const PhoneNumber& origin, std::string_view text, LogicalTime now) override;
    std::string name() const override { return "oma-digest"; }

    bool verify_digest_hex(std::string_view digest_hex);
    std::string current_nonce() const { return server_nonce_; }
    std::string expected_digest_hex() const;

private:
    void rotate_nonce();

    std::string user_id_;
    std::string password_;
    std::string server_nonce_;
    std::mt19937_64 rng_;
};

// Constant-time string comparison for credential checks.
bool equals_constant_time(std::string_view a, std::string_view b);

} // namespace smsgw::auth
