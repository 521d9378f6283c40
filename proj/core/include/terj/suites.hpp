#pragma once

#include <string>
#include <vector>

#include "terj/report.hpp"

namespace terj {

/// Ranges and caps for the verification suites. Defaults match the
/// standard desk-scale run; the acceptance harness raises them per
/// criterion.
struct VerifyOptions {
    int m_max = 4;          // tensor factor range for sl2/hahn checks
    int n_max = 4;
    int d_max = 8;          // ground-set size range for lattice/graph checks
    long long brute_cap = 130; // largest shell size for brute-force closures
    int lattice_cap = 12;      // largest D for which 2^D matrices are built
    unsigned long long seed = 0; // seed for the sampled anchors
};

/// Deterministic "random" k-subset of {0..D-1} derived from (seed, D, k);
/// differs from the default anchor {0..k-1} whenever C(D,k) > 1.
unsigned seeded_anchor(int D, int k, unsigned long long seed);

Report run_sl2_suite(const VerifyOptions& opts);
Report run_hahn_suite(const VerifyOptions& opts);
Report run_decomp_suite(const VerifyOptions& opts);
Report run_johnson_suite(const VerifyOptions& opts);

/// name in {"sl2", "hahn", "decomp", "johnson", "all"}; throws Error for
/// anything else.
Report run_suite(const std::string& name, const VerifyOptions& opts);

const std::vector<std::string>& suite_names();

} // namespace terj
