#include "smsgw/phone.hpp"

#include <cctype>

namespace smsgw {

namespace {
constexpr std::size_t kMaxDigits = 15; // E.164 significant digits
}

PhoneNumber::PhoneNumber(std::string digits) : digits_(std::move(digits)) {
    if (digits_.empty())
        throw PhoneParseError(PhoneParseError::Kind::EmptyNumber, 0, "empty phone number");
    if (digits_.size() > kMaxDigits)
        throw PhoneParseError(PhoneParseError::Kind::TooLong, digits_.size(),
                              "phone number longer than 15 digits");
    for (std::size_t i = 0; i < digits_.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits_[i])))
            throw PhoneParseError(PhoneParseError::Kind::InvalidCharacter, i,
                                  "non-digit in phone number");
}

PhoneNumber parse_phone_number(std::string_view raw) {
    std::string out;
    bool plus_seen = false;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (c == '+' && !plus_seen && out.empty()) {
            plus_seen = true;
            continue;
        }
        if (c == ' ' || c == '-')
            continue;
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw PhoneParseError(PhoneParseError::Kind::InvalidCharacter, i,
                                  "invalid character in phone number");
        out.push_back(c);
        if (out.size() > kMaxDigits)
            throw PhoneParseError(PhoneParseError::Kind::TooLong, out.size(),
                                  "phone number longer than 15 digits");
    }
    if (out.empty())
        throw PhoneParseError(PhoneParseError::Kind::EmptyNumber, 0, "empty phone number");
    return PhoneNumber(std::move(out));
}

} // namespace smsgw
