#include "terj/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "terj/errors.hpp"

namespace terj {

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw Error("unknown output format: '" + s + "' (expected text, json, or csv)");
}

void Report::sort_records() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                         if (a.id != b.id) return a.id < b.id;
                         return a.params < b.params;
                     });
}

void Report::merge(Report other) {
    for (auto& r : other.checks) checks.push_back(std::move(r));
}

long long Report::passed() const {
    long long n = 0;
    for (const auto& c : checks)
        if (c.pass) ++n;
    return n;
}

void Report::normalize_timings() {
    for (auto& c : checks) c.millis = 0;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "verification report (version " << version << ")\n";
    for (const auto& [key, value] : config) os << "  " << key << " = " << value << "\n";
    os << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.id;
        if (!c.params.empty()) os << "  [" << c.params << "]";
        os << "  expected=" << c.expected << "  actual=" << c.actual << "  (" << c.millis
           << " ms)\n";
    }
    os << "\nsummary: " << passed() << "/" << total() << " passed, " << failed() << " failed\n";
    return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "id,params,expected,actual,pass,millis\n";
    for (const auto& c : checks) {
        os << csv_escape(c.id) << "," << csv_escape(c.params) << "," << csv_escape(c.expected)
           << "," << csv_escape(c.actual) << "," << (c.pass ? "true" : "false") << ","
           << c.millis << "\n";
    }
    return os.str();
}

std::string Report::to_json_string() const {
    nlohmann::ordered_json j;
    j["version"] = version;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config) cfg[key] = value;
    j["config"] = std::move(cfg);
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json r;
        r["id"] = c.id;
        r["params"] = c.params;
        r["expected"] = c.expected;
        r["actual"] = c.actual;
        r["pass"] = c.pass;
        r["millis"] = c.millis;
        records.push_back(std::move(r));
    }
    j["checks"] = std::move(records);
    j["summary"] = {{"total", total()}, {"passed", passed()}, {"failed", failed()}};
    return j.dump(2) + "\n";
}

Report Report::from_json_string(const std::string& s) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad report JSON: ") + e.what());
    }
    Report rep;
    try {
        rep.version = j.at("version").get<std::string>();
        for (const auto& [key, value] : j.at("config").items())
            rep.config[key] = value.get<std::string>();
        for (const auto& r : j.at("checks")) {
            CheckRecord c;
            c.id = r.at("id").get<std::string>();
            c.params = r.at("params").get<std::string>();
            c.expected = r.at("expected").get<std::string>();
            c.actual = r.at("actual").get<std::string>();
            c.pass = r.at("pass").get<bool>();
            c.millis = r.at("millis").get<long long>();
            rep.checks.push_back(std::move(c));
        }
        const auto& summary = j.at("summary");
        if (summary.at("total").get<long long>() != rep.total() ||
            summary.at("passed").get<long long>() != rep.passed() ||
            summary.at("failed").get<long long>() != rep.failed())
            throw Error("report summary disagrees with its records");
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad report JSON: ") + e.what());
    }
    return rep;
}

} // namespace terj
