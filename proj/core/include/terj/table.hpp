#pragma once

#include <optional>
#include <string>
#include <vector>

namespace terj {

/// One row of the dimension table for J(D,k): the closed-form dimension,
/// the simple-summand sizes, the brute-force dimension when the shell size
/// is within the cap, and whether every route agreed.
struct TableRow {
    int D = 0, k = 0;
    std::string case_label;                  // "i".."v"
    long long dim_formula = 0;
    std::vector<int> blocks;                 // sorted descending
    std::optional<long long> dim_bruteforce; // absent when over the cap
    bool agree = false;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Rows for all D in [d_min, d_max] and 1 <= k <= D-1, in (D, k) order.
/// `agree` records dim_formula == sum of squared blocks == brute dimension
/// (when computed). Throws OutOfRange for an empty or invalid range.
std::vector<TableRow> build_table(int d_min, int d_max, long long cap = 130);

/// CSV schema: D,k,case,dim_formula,blocks,dim_bruteforce,agree with blocks
/// ';'-joined and dim_bruteforce empty when skipped.
std::string table_to_csv(const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_csv(const std::string& csv);

std::string table_to_text(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows);

} // namespace terj
