// terj: exact verification of the Hahn-algebra / Terwilliger-algebra
// computations.
//
//   terj verify <suite>       run a verification suite (sl2, hahn, decomp,
//                             johnson, or all) and report every check
//   terj decompose <m> <n>    decompose the weight spaces of L_m (x) L_n
//                             into irreducible V_d(a,b) modules
//   terj table <Dmin> <Dmax>  dimension/block table of the Terwilliger
//                             algebras of the Johnson graphs J(D,k)
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// configuration error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "terj/errors.hpp"
#include "terj/hahn.hpp"
#include "terj/lattice.hpp"
#include "terj/report.hpp"
#include "terj/suites.hpp"
#include "terj/table.hpp"
#include "terj/version.hpp"

namespace {

using terj::OutputFormat;

/// Writes payload to `out_path` when given (then prints the summary line to
/// stdout), otherwise prints the payload itself. Throws terj::Error when the
/// file cannot be written.
void emit(const std::string& payload, const std::string& out_path,
          const std::string& summary) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw terj::Error("cannot open output file '" + out_path + "'");
    out << payload;
    if (!out) throw terj::Error("failed writing output file '" + out_path + "'");
    out.close();
    std::cout << summary << " -> " << out_path << "\n";
}

int run_verify(const std::string& suite, const terj::VerifyOptions& opts,
               const std::string& format, const std::string& out_path) {
    const OutputFormat fmt = terj::parse_format(format);
    terj::Report rep = terj::run_suite(suite, opts);
    // Machine formats are byte-reproducible for identical config and seed;
    // wall-clock timings would break that, so they only appear in the
    // human-readable text rendering.
    if (fmt != OutputFormat::text) rep.normalize_timings();
    std::string payload;
    switch (fmt) {
        case OutputFormat::json: payload = rep.to_json_string(); break;
        case OutputFormat::csv: payload = rep.to_csv(); break;
        case OutputFormat::text: payload = rep.to_text(); break;
    }
    std::ostringstream summary;
    summary << "suite " << suite << ": " << rep.passed() << "/" << rep.total()
            << " checks passed";
    emit(payload, out_path, summary.str());
    return rep.all_pass() ? 0 : 1;
}

std::string orbit_text(const std::vector<std::array<int, 3>>& orbit) {
    std::ostringstream out;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (i) out << " ";
        out << "(" << orbit[i][0] << "," << orbit[i][1] << "," << orbit[i][2]
            << ")";
    }
    return out.str();
}

std::string orbit_csv(const std::vector<std::array<int, 3>>& orbit) {
    std::ostringstream out;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (i) out << ";";
        out << orbit[i][0] << ":" << orbit[i][1] << ":" << orbit[i][2];
    }
    return out.str();
}

int run_decompose(int m, int n, int ell_filter, const std::string& format,
                  const std::string& out_path) {
    const OutputFormat fmt = terj::parse_format(format);
    std::vector<int> ells;
    if (ell_filter >= 0) {
        if (ell_filter > m + n)
            throw terj::Error("--l must lie in [0, m+n] = [0, " +
                              std::to_string(m + n) + "]");
        ells.push_back(ell_filter);
    } else {
        for (int ell = 0; ell <= m + n; ++ell) ells.push_back(ell);
    }

    std::vector<terj::WeightModuleDescriptor> rows;
    rows.reserve(ells.size());
    for (int ell : ells) rows.push_back(terj::weight_module_descriptor(m, n, ell));

    std::string payload;
    if (fmt == OutputFormat::text) {
        std::ostringstream out;
        out << "weight modules of L_" << m << " (x) L_" << n << "\n";
        for (const auto& row : rows) {
            out << "l=" << row.ell << " weight=" << row.weight
                << " d=" << row.params.d << " a=" << row.params.a.str()
                << " b=" << row.params.b.str() << " dim=" << (row.params.d + 1)
                << " orbit=" << orbit_text(terj::iso_orbit(m, n, row.ell))
                << "\n";
        }
        payload = out.str();
    } else if (fmt == OutputFormat::csv) {
        std::ostringstream out;
        out << "l,weight,a,b,d,dim,orbit\n";
        for (const auto& row : rows) {
            out << row.ell << "," << row.weight << "," << row.params.a.str()
                << "," << row.params.b.str() << "," << row.params.d << ","
                << (row.params.d + 1) << ","
                << orbit_csv(terj::iso_orbit(m, n, row.ell)) << "\n";
        }
        payload = out.str();
    } else {
        nlohmann::ordered_json doc;
        doc["version"] = terj::kVersion;
        doc["m"] = m;
        doc["n"] = n;
        doc["modules"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json mod;
            mod["l"] = row.ell;
            mod["weight"] = row.weight;
            mod["a"] = row.params.a.str();
            mod["b"] = row.params.b.str();
            mod["d"] = row.params.d;
            mod["dim"] = row.params.d + 1;
            mod["orbit"] = nlohmann::ordered_json::array();
            for (const auto& t : terj::iso_orbit(m, n, row.ell))
                mod["orbit"].push_back({t[0], t[1], t[2]});
            doc["modules"].push_back(std::move(mod));
        }
        payload = doc.dump(2) + "\n";
    }

    std::ostringstream summary;
    summary << "decomposition of L_" << m << " (x) L_" << n << ": "
            << rows.size() << " weight modules";
    emit(payload, out_path, summary.str());
    return 0;
}

int run_table(int d_min, int d_max, long long cap, const std::string& format,
              const std::string& out_path) {
    const OutputFormat fmt = terj::parse_format(format);
    if (d_min > d_max)
        throw terj::Error("Dmin must not exceed Dmax (got " +
                          std::to_string(d_min) + " > " + std::to_string(d_max) +
                          ")");
    const std::vector<terj::TableRow> rows = terj::build_table(d_min, d_max, cap);
    std::string payload;
    switch (fmt) {
        case OutputFormat::csv: payload = terj::table_to_csv(rows); break;
        case OutputFormat::json: payload = terj::table_to_json(rows); break;
        case OutputFormat::text: payload = terj::table_to_text(rows); break;
    }
    long long disagreements = 0;
    for (const auto& row : rows)
        if (!row.agree) ++disagreements;
    std::ostringstream summary;
    summary << "table D=" << d_min << ".." << d_max << ": " << rows.size()
            << " rows, " << disagreements << " disagreements";
    emit(payload, out_path, summary.str());
    return disagreements == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hahn-algebra and Terwilliger-algebra verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(terj::kVersion));

    std::string format = "text";
    std::string out_path;

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    terj::VerifyOptions opts;
    verify_cmd->add_option("suite", suite, "suite to run")
        ->required()
        ->check(CLI::IsMember(terj::suite_names()));
    verify_cmd->add_option("--m-max", opts.m_max, "largest left tensor factor")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--n-max", opts.n_max, "largest right tensor factor")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--d-max", opts.d_max, "largest ground-set size")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd
        ->add_option("--cap", opts.brute_cap,
                     "largest shell size for brute-force span closures")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--seed", opts.seed, "seed for sampled anchors")
        ->capture_default_str();
    verify_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    verify_cmd->add_option("--out", out_path, "write the report to a file");

    // decompose
    auto* decompose_cmd = app.add_subcommand(
        "decompose", "decompose the weight spaces of L_m (x) L_n");
    int dec_m = 0, dec_n = 0, dec_ell = -1;
    decompose_cmd->add_option("m", dec_m, "left tensor factor")
        ->required()
        ->check(CLI::NonNegativeNumber);
    decompose_cmd->add_option("n", dec_n, "right tensor factor")
        ->required()
        ->check(CLI::NonNegativeNumber);
    decompose_cmd
        ->add_option("--l", dec_ell, "restrict to the single weight space l")
        ->check(CLI::NonNegativeNumber);
    decompose_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    decompose_cmd->add_option("--out", out_path, "write the output to a file");

    // table
    auto* table_cmd = app.add_subcommand(
        "table", "Terwilliger dimension/block table for J(D,k)");
    int d_min = 0, d_max = 0;
    long long table_cap = 130;
    table_cmd->add_option("Dmin", d_min, "first ground-set size")
        ->required()
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("Dmax", d_max, "last ground-set size")
        ->required()
        ->check(CLI::PositiveNumber);
    table_cmd
        ->add_option("--cap", table_cap,
                     "largest shell size for brute-force dimensions")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    table_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    table_cmd->add_option("--out", out_path, "write the table to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify_cmd) return run_verify(suite, opts, format, out_path);
        if (*decompose_cmd)
            return run_decompose(dec_m, dec_n, dec_ell, format, out_path);
        if (*table_cmd)
            return run_table(d_min, d_max, table_cap, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
