#include "smsgw/survey.hpp"

#include <fstream>
#include <sstream>

namespace smsgw::survey {

namespace {

SmsMgmt parse_sms_mgmt(const std::string& s, std::size_t line) {
    if (s == "Yes")
        return SmsMgmt::Yes;
    if (s == "No")
        return SmsMgmt::No;
    throw DatasetError(DatasetError::Kind::BadEnumValue, line, "bad sms_mgmt value: " + s);
}

OriginAuth parse_origin_auth(const std::string& s, std::size_t line) {
    if (s == "Yes")
        return OriginAuth::Yes;
    if (s == "YesPasswordRequired")
        return OriginAuth::YesPasswordRequired;
    if (s == "YesImplementationDependent")
        return OriginAuth::YesImplementationDependent;
    if (s == "No")
        return OriginAuth::No;
    if (s == "InformationDeficit")
        return OriginAuth::InformationDeficit;
    if (s == "NotApplicable")
        return OriginAuth::NotApplicable;
    throw DatasetError(DatasetError::Kind::BadEnumValue, line, "bad origin_auth value: " + s);
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

} // namespace

std::vector<SurveyRecord> parse_dataset(const std::string& content, bool enforce_count) {
    std::vector<SurveyRecord> records;
    std::istringstream in(content);
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (!header_seen) {
            if (line != "vendor\tproduct\tsms_mgmt\torigin_auth")
                throw DatasetError(DatasetError::Kind::MalformedRow, lineno,
                                   "missing or malformed header line");
            header_seen = true;
            continue;
        }
        auto fields = split_tabs(line);
        if (fields.size() != 4)
            throw DatasetError(DatasetError::Kind::MalformedRow, lineno,
                               "expected 4 tab-separated fields");
        SurveyRecord rec;
        rec.vendor = fields[0];
        rec.product = fields[1];
        rec.sms_mgmt = parse_sms_mgmt(fields[2], lineno);
        rec.origin_auth = parse_origin_auth(fields[3], lineno);
        if (rec.vendor.empty() || rec.product.empty())
            throw DatasetError(DatasetError::Kind::MalformedRow, lineno,
                               "empty vendor or product");
        // a product without SMS management cannot have an origin-auth status
        if (rec.sms_mgmt == SmsMgmt::No && rec.origin_auth != OriginAuth::NotApplicable)
            throw DatasetError(DatasetError::Kind::MalformedRow, lineno,
                               "sms_mgmt=No requires origin_auth=NotApplicable");
        if (rec.sms_mgmt == SmsMgmt::Yes && rec.origin_auth == OriginAuth::NotApplicable)
            throw DatasetError(DatasetError::Kind::MalformedRow, lineno,
                               "sms_mgmt=Yes forbids origin_auth=NotApplicable");
        records.push_back(std::move(rec));
    }
    if (!header_seen)
        throw DatasetError(DatasetError::Kind::MalformedRow, 0, "empty dataset");
    if (enforce_count && records.size() != kExpectedRecordCount)
        throw DatasetError(DatasetError::Kind::WrongRecordCount, 0,
                           "expected " + std::to_string(kExpectedRecordCount) + " records, got " +
                               std::to_string(records.size()));
    return records;
}

std::vector<SurveyRecord> load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DatasetError(DatasetError::Kind::FileNotFound, 0, "cannot open dataset: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str());
}

SurveySummary summarize(const std::vector<SurveyRecord>& records) {
    SurveySummary s;
    s.total = records.size();
    for (const auto& r : records) {
        if (r.sms_mgmt != SmsMgmt::Yes)
            continue;
        ++s.sms_supported;
        switch (r.origin_auth) {
        case OriginAuth::Yes:
            ++s.origin_auth_yes;
            break;
        case OriginAuth::YesPasswordRequired:
            ++s.origin_auth_yes;
            ++s.password_required;
            break;
        case OriginAuth::YesImplementationDependent:
            ++s.origin_auth_yes;
            ++s.implementation_dependent;
            break;
        case OriginAuth::No:
            ++s.origin_auth_no;
            break;
        case OriginAuth::InformationDeficit:
            ++s.information_deficit;
            break;
        case OriginAuth::NotApplicable:
            break;
        }
    }
    return s;
}

const char* sms_mgmt_name(SmsMgmt v) {
    return v == SmsMgmt::Yes ? "Yes" : "No";
}

const char* origin_auth_name(OriginAuth v) {
    switch (v) {
    case OriginAuth::Yes:
        return "Yes";
    case OriginAuth::YesPasswordRequired:
        return "YesPasswordRequired";
    case OriginAuth::YesImplementationDependent:
        return "YesImplementationDependent";
    case OriginAuth::No:
        return "No";
    case OriginAuth::InformationDeficit:
        return "InformationDeficit";
    case OriginAuth::NotApplicable:
        return "NotApplicable";
    }
    return "?";
}

} // namespace smsgw::survey
