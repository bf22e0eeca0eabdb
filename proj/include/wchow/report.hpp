#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace wchow {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

enum class Status { pass, fail };

struct ReportItem {
    std::string id;
    std::string description;
    Status status = Status::fail;
    std::string expected;
    std::string actual;
    /// The statement being checked, e.g. "Z[x,y]/(24x^2+24y^2,xy)".
    std::string reference;

    friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

struct ReportSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
    int schema = kReportSchema;
    std::string version = kVersion;
    std::int64_t bound = 8;
    std::vector<ReportItem> items;

    ReportSummary summary() const;
    bool all_passed() const { return summary().fail == 0; }
    const ReportItem* find(const std::string& id) const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Builds an item whose status is pass iff expected == actual.
ReportItem make_item(std::string id, std::string description, std::string expected, std::string actual,
                     std::string reference);

nlohmann::json to_json(const VerificationReport& r);
/// Throws std::invalid_argument on a malformed document or when the stored
/// summary disagrees with the items.
VerificationReport report_from_json(const nlohmann::json& j);
std::string render_text(const VerificationReport& r);

struct VerifyOptions {
    std::int64_t bound = 8;
    /// Replaces 24 by 23 in the relations of the two-pointed ring so that
    /// the checks depending on it must fail.
    bool self_test = false;
    /// Run the items on worker threads.
    bool parallel = true;
};

/// Runs every identity check. Requires bound >= 4.
VerificationReport run_verification(const VerifyOptions& options = {});

}  // namespace wchow
