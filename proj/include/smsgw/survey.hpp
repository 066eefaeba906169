#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace smsgw::survey {

enum class SmsMgmt { Yes, No };

enum class OriginAuth {
    Yes,
    YesPasswordRequired,
    YesImplementationDependent,
    No,
    InformationDeficit,
    NotApplicable, // product has no SMS-based remote management
};

struct SurveyRecord {
    std::string vendor;
    std::string product;
    SmsMgmt sms_mgmt;
    OriginAuth origin_auth;
};

struct SurveySummary {
    std::size_t total = 0;
    std::size_t sms_supported = 0;
    std::size_t origin_auth_yes = 0; // Yes + password-required + implementation-dependent
    std::size_t password_required = 0;
    std::size_t implementation_dependent = 0;
    std::size_t information_deficit = 0;
    std::size_t origin_auth_no = 0;
};

struct DatasetError : std::runtime_error {
    enum class Kind { MalformedRow, BadEnumValue, WrongRecordCount, FileNotFound };
    Kind kind;
    std::size_t line; // 1-based, 0 when not applicable
    DatasetError(Kind k, std::size_t ln, const std::string& what)
        : std::runtime_error(what), kind(k), line(ln) {}
};

inline constexpr std::size_t kExpectedRecordCount = 32;

// Tab-separated, UTF-8, header line required:
//   vendor<TAB>product<TAB>sms_mgmt<TAB>origin_auth
std::vector<SurveyRecord> load_dataset(const std::string& path);
std::vector<SurveyRecord> parse_dataset(const std::string& content, bool enforce_count = true);

SurveySummary summarize(const std::vector<SurveyRecord>& records);

const char* sms_mgmt_name(SmsMgmt v);
const char* origin_auth_name(OriginAuth v);

} // namespace smsgw::survey
