#include "terj/table.hpp"

#include <algorithm>
#include <cstring>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "terj/binomials.hpp"
#include "terj/errors.hpp"
#include "terj/johnson.hpp"
#include "terj/version.hpp"

namespace terj {

std::vector<TableRow> build_table(int d_min, int d_max, long long cap) {
    if (d_min < 1 || d_max < d_min) throw OutOfRange("table requires 1 <= d_min <= d_max");
    std::vector<TableRow> rows;
    for (int D = d_min; D <= d_max; ++D) {
        for (int k = 1; k <= D - 1; ++k) {
            TableRow row;
            row.D = D;
            row.k = k;
            row.case_label = formula_case_label(D, k);
            row.dim_formula = terwilliger_dim_formula(D, k);
            row.blocks = terwilliger_blocks(D, k);
            long long squares = 0;
            for (int b : row.blocks) squares += static_cast<long long>(b) * b;
            if (binom_ll(D, k) <= cap)
                row.dim_bruteforce = terwilliger_dim_bruteforce(D, k, (1u << k) - 1, cap);
            row.agree = (squares == row.dim_formula) &&
                        (!row.dim_bruteforce || *row.dim_bruteforce == row.dim_formula);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

std::string blocks_str(const std::vector<int>& blocks) {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) s += ";";
        s += std::to_string(blocks[i]);
    }
    return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "D,k,case,dim_formula,blocks,dim_bruteforce,agree\n";
    for (const auto& r : rows) {
        os << r.D << "," << r.k << "," << r.case_label << "," << r.dim_formula << ","
           << blocks_str(r.blocks) << ",";
        if (r.dim_bruteforce) os << *r.dim_bruteforce;
        os << "," << (r.agree ? "true" : "false") << "\n";
    }
    return os.str();
}

std::vector<TableRow> table_from_csv(const std::string& csv) {
    std::istringstream is(csv);
    std::string line;
    if (!std::getline(is, line) || line != "D,k,case,dim_formula,blocks,dim_bruteforce,agree")
        throw Error("bad table CSV header");
    std::vector<TableRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 7) throw Error("bad table CSV row: " + line);
        TableRow r;
        r.D = std::stoi(fields[0]);
        r.k = std::stoi(fields[1]);
        r.case_label = fields[2];
        r.dim_formula = std::stoll(fields[3]);
        if (!fields[4].empty())
            for (const auto& b : split(fields[4], ';')) r.blocks.push_back(std::stoi(b));
        if (!fields[5].empty()) r.dim_bruteforce = std::stoll(fields[5]);
        if (fields[6] == "true") r.agree = true;
        else if (fields[6] == "false") r.agree = false;
        else throw Error("bad agree flag: " + fields[6]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string table_to_text(const std::vector<TableRow>& rows) {
    std::size_t blocks_width = std::strlen("blocks");
    for (const auto& r : rows)
        blocks_width = std::max(blocks_width, blocks_str(r.blocks).size());
    std::ostringstream os;
    os << std::left << std::setw(4) << "D" << std::setw(4) << "k"
       << std::setw(6) << "case" << std::setw(6) << "dim"
       << std::setw(static_cast<int>(blocks_width) + 2) << "blocks"
       << std::setw(7) << "brute" << "agree\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(4) << r.D << std::setw(4) << r.k
           << std::setw(6) << r.case_label << std::setw(6) << r.dim_formula
           << std::setw(static_cast<int>(blocks_width) + 2)
           << blocks_str(r.blocks) << std::setw(7)
           << (r.dim_bruteforce ? std::to_string(*r.dim_bruteforce) : "-")
           << (r.agree ? "yes" : "NO") << "\n";
    }
    return os.str();
}

std::string table_to_json(const std::vector<TableRow>& rows) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["D"] = r.D;
        row["k"] = r.k;
        row["case"] = r.case_label;
        row["dim_formula"] = r.dim_formula;
        row["blocks"] = r.blocks;
        if (r.dim_bruteforce) row["dim_bruteforce"] = *r.dim_bruteforce;
        else row["dim_bruteforce"] = nullptr;
        row["agree"] = r.agree;
        arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

} // namespace terj
