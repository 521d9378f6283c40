#pragma once

#include <map>
#include <string>
#include <vector>

namespace terj {

enum class OutputFormat { text, json, csv };

/// Parse "text" / "json" / "csv"; throws Error otherwise.
OutputFormat parse_format(const std::string& s);

/// One verification record. `expected` and `actual` are exact renderings
/// (rationals as p/q, never decimals); `pass` means they agreed exactly.
/// `millis` is measured wall-clock and is the only nondeterministic field.
struct CheckRecord {
    std::string id;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
    long long millis = 0;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// A full verification report: version, the effective configuration, and
/// the check records sorted canonically by (id, params).
struct Report {
    std::string version;
    std::map<std::string, std::string> config;
    std::vector<CheckRecord> checks;

    void add(CheckRecord record) { checks.push_back(std::move(record)); }
    void sort_records();
    void merge(Report other); // append records, keep config of *this

    long long total() const { return static_cast<long long>(checks.size()); }
    long long passed() const;
    long long failed() const { return total() - passed(); }
    bool all_pass() const { return failed() == 0; }

    /// Set every record's millis to zero (used to compare reports modulo
    /// timing telemetry).
    void normalize_timings();

    std::string to_text() const;
    std::string to_csv() const;
    /// Schema: {"version", "config", "checks":[{"id","params","expected",
    /// "actual","pass","millis"}], "summary":{"total","passed","failed"}}.
    std::string to_json_string() const;
    static Report from_json_string(const std::string& s);

    friend bool operator==(const Report&, const Report&) = default;
};

} // namespace terj
