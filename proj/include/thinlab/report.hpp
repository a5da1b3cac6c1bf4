#pragma once

#include <string>
#include <vector>

namespace thinlab {

// One (check, instance) result. Instance descriptors use ';' and '|' as
// separators and never contain commas, so the CSV stays trivially parsable.
struct ReportRow {
    std::string check_name;
    std::string instance_descriptor;
    double lhs = 0;
    double rhs = 0;
    double slack = 0;
    bool pass = false;
    bool conjecture_flag = false;

    bool operator==(const ReportRow&) const = default;
};

enum class ReportFormat { csv, json };

// 17 significant digits; round-trips through strtod bit-exactly.
std::string format_double(double x);

// Header line `check,instance,lhs,rhs,slack,pass,conjecture`. Lines
// starting with '#' (e.g. a generated_at stamp) are comments.
std::string emit_csv(const std::vector<ReportRow>& rows, const std::string& comment = "");
std::vector<ReportRow> parse_csv(const std::string& text);

// One top-level array; object keys mirror the ReportRow field names.
std::string emit_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_json(const std::string& text);

std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                        const std::string& comment = "");

}  // namespace thinlab
