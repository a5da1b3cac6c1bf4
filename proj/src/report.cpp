#include "thinlab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "thinlab/errors.hpp"

namespace thinlab {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

const char* kCsvHeader = "check,instance,lhs,rhs,slack,pass,conjecture";

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ConfigError("report: bad boolean field '" + s + "'");
}

std::string check_no_comma(const std::string& s) {
    if (s.find(',') != std::string::npos)
        throw ConfigError("report: string field may not contain a comma: " + s);
    return s;
}

}  // namespace

std::string emit_csv(const std::vector<ReportRow>& rows, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << "\n";
    out << kCsvHeader << "\n";
    for (const auto& r : rows) {
        out << check_no_comma(r.check_name) << ',' << check_no_comma(r.instance_descriptor)
            << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
            << format_double(r.slack) << ',' << (r.pass ? "true" : "false") << ','
            << (r.conjecture_flag ? "true" : "false") << "\n";
    }
    return out.str();
}

std::vector<ReportRow> parse_csv(const std::string& text) {
    std::vector<ReportRow> rows;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kCsvHeader) throw ConfigError("report: unexpected CSV header: " + line);
            header_seen = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 7) throw ConfigError("report: bad CSV row: " + line);
        ReportRow r;
        r.check_name = fields[0];
        r.instance_descriptor = fields[1];
        r.lhs = std::strtod(fields[2].c_str(), nullptr);
        r.rhs = std::strtod(fields[3].c_str(), nullptr);
        r.slack = std::strtod(fields[4].c_str(), nullptr);
        r.pass = parse_bool(fields[5]);
        r.conjecture_flag = parse_bool(fields[6]);
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

nlohmann::json row_to_json(const ReportRow& r) {
    return nlohmann::json{{"check_name", r.check_name},
                          {"instance_descriptor", r.instance_descriptor},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs},
                          {"slack", r.slack},
                          {"pass", r.pass},
                          {"conjecture_flag", r.conjecture_flag}};
}

}  // namespace

std::string emit_json(const std::vector<ReportRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(row_to_json(r));
    return arr.dump(2) + "\n";
}

std::vector<ReportRow> parse_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw ConfigError("report: JSON report must be a top-level array");
    std::vector<ReportRow> rows;
    rows.reserve(arr.size());
    for (const auto& item : arr) {
        ReportRow r;
        r.check_name = item.at("check_name").get<std::string>();
        r.instance_descriptor = item.at("instance_descriptor").get<std::string>();
        r.lhs = item.at("lhs").get<double>();
        r.rhs = item.at("rhs").get<double>();
        r.slack = item.at("slack").get<double>();
        r.pass = item.at("pass").get<bool>();
        r.conjecture_flag = item.at("conjecture_flag").get<bool>();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                        const std::string& comment) {
    return format == ReportFormat::csv ? emit_csv(rows, comment) : emit_json(rows);
}

}  // namespace thinlab
