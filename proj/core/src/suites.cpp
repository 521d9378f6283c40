#include "terj/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "terj/binomials.hpp"
#include "terj/errors.hpp"
#include "terj/hahn.hpp"
#include "terj/johnson.hpp"
#include "terj/lattice.hpp"
#include "terj/matrix.hpp"
#include "terj/sl2.hpp"
#include "terj/span.hpp"
#include "terj/version.hpp"

namespace terj {

namespace {

using Clock = std::chrono::steady_clock;

/// Runs one check: `actual_fn` computes the observed value, the record
/// passes iff it equals `expected` byte for byte.  Exceptions are folded
/// into the actual string so a thrown invariant shows up as a failure
/// rather than aborting the whole suite.
void run_check(Report& rep, std::string id, std::string params,
               std::string expected,
               const std::function<std::string()>& actual_fn) {
    CheckRecord rec;
    rec.id = std::move(id);
    rec.params = std::move(params);
    rec.expected = std::move(expected);
    const auto t0 = Clock::now();
    try {
        rec.actual = actual_fn();
    } catch (const std::exception& ex) {
        rec.actual = std::string("exception: ") + ex.what();
    }
    const auto t1 = Clock::now();
    rec.pass = (rec.expected == rec.actual);
    rec.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rep.add(std::move(rec));
}

Report base_report(const std::string& suite, const VerifyOptions& o) {
    Report rep;
    rep.version = kVersion;
    rep.config["suite"] = suite;
    rep.config["m_max"] = std::to_string(o.m_max);
    rep.config["n_max"] = std::to_string(o.n_max);
    rep.config["d_max"] = std::to_string(o.d_max);
    rep.config["brute_cap"] = std::to_string(o.brute_cap);
    rep.config["lattice_cap"] = std::to_string(o.lattice_cap);
    rep.config["seed"] = std::to_string(o.seed);
    return rep;
}

std::string pair_params(int m, int n) {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

std::string triple_params(int m, int n, int ell) {
    return pair_params(m, n) + " l=" + std::to_string(ell);
}

std::string dk_params(int D, int k) {
    return "D=" + std::to_string(D) + " k=" + std::to_string(k);
}

std::string ok_or(const RelationReport& rr) { return rr.summary(); }

std::string ok_summary(std::size_t n) {
    return "ok (" + std::to_string(n) + " checks)";
}

// ---------------------------------------------------------------- sl2 ----

void sl2_defining_relations(Report& rep, int n) {
    run_check(rep, "sl2.defining_relations", "n=" + std::to_string(n), "ok",
              [n]() -> std::string {
                  const Sl2Action L = build_Ln(n);
                  if (commutator(L.H, L.E) != L.E * Rational(2))
                      return "[H,E] != 2E";
                  if (commutator(L.H, L.F) != L.F * Rational(-2))
                      return "[H,F] != -2F";
                  if (commutator(L.E, L.F) != L.H) return "[E,F] != H";
                  return "ok";
              });
}

void sl2_casimir_scalar(Report& rep, int n) {
    const Rational scalar = Rational(n) * Rational(n + 2) / Rational(2);
    run_check(rep, "sl2.casimir_scalar", "n=" + std::to_string(n),
              scalar.str(), [n]() -> std::string {
                  const Sl2Action L = build_Ln(n);
                  const Matrix cas = casimir_matrix(L.E, L.F, L.H);
                  if (!cas.is_diagonal()) return "non-scalar";
                  for (int i = 0; i <= n; ++i)
                      if (cas(i, i) != cas(0, 0)) return "non-scalar";
                  return cas(0, 0).str();
              });
}

std::string cg_spectrum_string(const std::vector<CgSummand>& summands) {
    std::ostringstream out;
    for (std::size_t p = 0; p < summands.size(); ++p) {
        if (p) out << " ";
        out << "L" << summands[p].weight << ":" << summands[p].dim;
    }
    return out.str();
}

void sl2_pair_checks(Report& rep, int m, int n) {
    const std::string params = pair_params(m, n);

    run_check(rep, "sl2.coproduct_casimir", params, "ok",
              [m, n]() -> std::string {
                  build_tensor_rep(m, n); // verifies the expansion internally
                  return "ok";
              });

    run_check(rep, "sl2.coproduct_central", params, "ok",
              [m, n]() -> std::string {
                  const TensorRep t = build_tensor_rep(m, n);
                  if (!commutator(t.dLambda, t.dE).is_zero())
                      return "[dLambda,dE] != 0";
                  if (!commutator(t.dLambda, t.dF).is_zero())
                      return "[dLambda,dF] != 0";
                  if (!commutator(t.dLambda, t.dH).is_zero())
                      return "[dLambda,dH] != 0";
                  return "ok";
              });

    // The expected spectrum comes straight from the index arithmetic; the
    // actual one is read off eigenspaces of the coproduct Casimir.
    std::ostringstream expected;
    for (int p = 0; p <= std::min(m, n); ++p) {
        if (p) expected << " ";
        const int w = m + n - 2 * p;
        expected << "L" << w << ":" << (w + 1);
    }
    run_check(rep, "sl2.clebsch_gordan", params, expected.str(),
              [m, n]() -> std::string {
                  const TensorRep t = build_tensor_rep(m, n);
                  return cg_spectrum_string(clebsch_gordan_summands(t));
              });

    run_check(rep, "sl2.weight_spaces", params, "ok",
              [m, n]() -> std::string {
                  const TensorRep t = build_tensor_rep(m, n);
                  int total = 0;
                  for (int ell = 0; ell <= m + n; ++ell) {
                      const WeightSpace ws = weight_space(t, ell);
                      const int expect = std::min(m, ell) +
                                         std::min(n, ell) - ell + 1;
                      if (static_cast<int>(ws.indices.size()) != expect)
                          return "wrong dimension at l=" + std::to_string(ell);
                      if (ws.weight != m + n - 2 * ell)
                          return "wrong weight at l=" + std::to_string(ell);
                      total += expect;
                  }
                  if (total != (m + 1) * (n + 1)) return "dimensions do not sum";
                  return "ok";
              });
}

// --------------------------------------------------------------- hahn ----

const std::vector<std::pair<Rational, Rational>>& hahn_parameter_grid() {
    static const std::vector<std::pair<Rational, Rational>> grid = {
        {Rational(0), Rational(-2)},       {Rational(1), Rational(-3)},
        {Rational(1, 2), Rational(-5, 2)}, {Rational(-1, 2), Rational(-2)},
        {Rational(2), Rational(-4)},       {Rational(1), Rational(0)},
        {Rational(0), Rational(0)},        {Rational(3, 2), Rational(-7, 2)},
    };
    return grid;
}

void hahn_relations(Report& rep, int m, int n) {
    run_check(rep, "hahn.relations", pair_params(m, n), ok_summary(5),
              [m, n]() -> std::string {
                  const TensorRep t = build_tensor_rep(m, n);
                  return ok_or(check_hahn_relations(natural_images(t)));
              });
}

std::string vd_params_string(const Rational& a, const Rational& b, int d) {
    return "a=" + a.str() + " b=" + b.str() + " d=" + std::to_string(d);
}

void hahn_vd_relations(Report& rep, const Rational& a, const Rational& b,
                       int d) {
    run_check(rep, "hahn.vd_relations", vd_params_string(a, b, d), "ok",
              [a, b, d]() -> std::string {
                  const VdModule mod = build_vd(a, b, d);
                  const Matrix C = commutator(mod.A, mod.B);
                  const Matrix I = Matrix::identity(d + 1);
                  const Matrix lhs1 =
                      commutator(C, mod.A) + mod.A * mod.A * Rational(2) + mod.B;
                  if (lhs1 != I * mod.params.eta)
                      return "first defining relation fails";
                  const Matrix lhs2 = commutator(mod.B, C) +
                                      mod.B * mod.A * Rational(4) +
                                      C * Rational(2);
                  if (lhs2 != I * mod.params.eta_star)
                      return "second defining relation fails";
                  return "ok";
              });
}

void hahn_irreducibility_burnside(Report& rep, const Rational& a,
                                  const Rational& b, int d) {
    const bool predicted = vd_irreducible(a, b, d);
    run_check(rep, "hahn.irreducibility_burnside", vd_params_string(a, b, d),
              predicted ? "irreducible" : "reducible",
              [a, b, d]() -> std::string {
                  const VdModule mod = build_vd(a, b, d);
                  const SpanClosureResult closure =
                      span_closure({mod.A, mod.B});
                  const long long full =
                      static_cast<long long>(d + 1) * (d + 1);
                  return closure.dimension == full ? "irreducible"
                                                   : "reducible";
              });
}

void hahn_classify_roundtrip(Report& rep, const Rational& a, const Rational& b,
                             int d) {
    const ModuleClass canonical = canonical_class(a, b, d);
    run_check(rep, "hahn.classify_roundtrip", vd_params_string(a, b, d),
              class_str(canonical), [a, b, d]() -> std::string {
                  const VdModule mod = build_vd(a, b, d);
                  return class_str(
                      classify_module(mod.A, mod.B, mod.params.eta));
              });
}

void hahn_weight_module(Report& rep, int m, int n, int ell) {
    const WeightModuleDescriptor desc = weight_module_descriptor(m, n, ell);
    const int dim = desc.params.d + 1;
    run_check(rep, "hahn.weight_module", triple_params(m, n, ell),
              "invertible intertwiner of size " + std::to_string(dim),
              [m, n, ell]() -> std::string {
                  const RealizedWeightModule mod =
                      realize_weight_module(m, n, ell);
                  if (!mod.intertwiner_invertible)
                      return "intertwiner is singular";
                  return "invertible intertwiner of size " +
                         std::to_string(mod.desc.params.d + 1);
              });
}

void hahn_iso_orbit(Report& rep, int m, int n, int m_max, int n_max) {
    run_check(
        rep, "hahn.iso_orbit", pair_params(m, n), "0 mismatches",
        [m, n, m_max, n_max]() -> std::string {
            long long mismatches = 0;
            for (int ell = 0; ell <= m + n; ++ell) {
                const WeightModuleDescriptor lhs =
                    weight_module_descriptor(m, n, ell);
                const ModuleClass lhs_class =
                    canonical_class(lhs.params.a, lhs.params.b, lhs.params.d);
                const auto orbit = iso_orbit(m, n, ell);
                for (int mp = 0; mp <= m_max; ++mp)
                    for (int np = 0; np <= n_max; ++np)
                        for (int lp = 0; lp <= mp + np; ++lp) {
                            const WeightModuleDescriptor rhs =
                                weight_module_descriptor(mp, np, lp);
                            const bool same_class =
                                canonical_class(rhs.params.a, rhs.params.b,
                                                rhs.params.d) == lhs_class;
                            const bool in_orbit =
                                std::find(orbit.begin(), orbit.end(),
                                          std::array<int, 3>{mp, np, lp}) !=
                                orbit.end();
                            if (same_class != in_orbit) ++mismatches;
                        }
            }
            return std::to_string(mismatches) + " mismatches";
        });
}

// ------------------------------------------------------------- decomp ----

void decomp_lattice_build(Report& rep, int D, int cap) {
    run_check(rep, "decomp.lattice_build", "D=" + std::to_string(D), "ok",
              [D, cap]() -> std::string {
                  const SubsetLatticeRep rep_ = build_subset_lattice(D, cap);
                  if (commutator(rep_.H, rep_.E) != rep_.E * Rational(2))
                      return "[H,E] != 2E";
                  if (commutator(rep_.H, rep_.F) != rep_.F * Rational(-2))
                      return "[H,F] != -2F";
                  if (commutator(rep_.E, rep_.F) != rep_.H)
                      return "[E,F] != H";
                  if (!commutator(rep_.Lambda, rep_.E).is_zero())
                      return "[Lambda,E] != 0";
                  if (!commutator(rep_.Lambda, rep_.F).is_zero())
                      return "[Lambda,F] != 0";
                  return "ok";
              });
}

void decomp_multiplicity_sum(Report& rep, int D) {
    mpz_class expected = 1;
    mpz_mul_2exp(expected.get_mpz_t(), expected.get_mpz_t(),
                 static_cast<unsigned long>(D));
    run_check(rep, "decomp.multiplicity_sum", "D=" + std::to_string(D),
              expected.get_str(), [D]() -> std::string {
                  mpz_class sum = 0;
                  for (int i = 0; 2 * i <= D; ++i) {
                      const long mult = static_cast<long>(multiplicity_m(i, D));
                      sum += mpz_class(mult) * (D - 2 * i + 1);
                  }
                  return sum.get_str();
              });
}

void decomp_lattice_spectrum(Report& rep, int D, int cap) {
    std::ostringstream expected;
    for (int i = 0; 2 * i <= D; ++i) {
        if (i) expected << " ";
        expected << "L" << (D - 2 * i) << "x" << multiplicity_m(i, D);
    }
    run_check(rep, "decomp.lattice_spectrum", "D=" + std::to_string(D),
              expected.str(), [D, cap]() -> std::string {
                  const auto rows = lattice_decomposition(D, cap);
                  std::ostringstream out;
                  for (std::size_t i = 0; i < rows.size(); ++i) {
                      if (i) out << " ";
                      out << "L" << rows[i].weight << "x"
                          << rows[i].multiplicity;
                  }
                  return out.str();
              });
}

void decomp_anchor_split(Report& rep, const SubsetLatticeRep& lattice,
                         unsigned anchor) {
    const std::string params = "D=" + std::to_string(lattice.D) +
                               " anchor=" + subset_str(anchor);
    run_check(rep, "decomp.anchor_split", params, ok_summary(6),
              [&lattice, anchor]() -> std::string {
                  return ok_or(split_by_anchor(lattice, anchor).checks);
              });
}

void decomp_slice_profile(Report& rep, int D, int k) {
    run_check(rep, "decomp.slice_profile", dk_params(D, k),
              binom_mpz(D, k).get_str(), [D, k]() -> std::string {
                  const SliceProfile profile =
                      slice_decomposition_profile(D, k);
                  mpz_class total = 0;
                  for (const auto& entry : profile.classes)
                      total += mpz_class(static_cast<long>(entry.multiplicity)) *
                               static_cast<long>(entry.dim);
                  return total.get_str();
              });
}

void decomp_descriptor_irreducible(Report& rep, int m, int n) {
    run_check(rep, "decomp.descriptor_irreducible", pair_params(m, n),
              "all irreducible", [m, n]() -> std::string {
                  for (int ell = 0; ell <= m + n; ++ell) {
                      const WeightModuleDescriptor desc =
                          weight_module_descriptor(m, n, ell);
                      if (!vd_irreducible(desc.params.a, desc.params.b,
                                          desc.params.d))
                          return "reducible at l=" + std::to_string(ell);
                  }
                  return "all irreducible";
              });
}

// ------------------------------------------------------------ johnson ----

void johnson_operators_check(Report& rep, int D, int k) {
    run_check(rep, "johnson.operators", dk_params(D, k), "ok",
              [D, k]() -> std::string {
                  const JohnsonOps ops = johnson_operators(D, k);
                  if (!ops.adjacency.is_symmetric())
                      return "adjacency not symmetric";
                  if (!ops.dual_adjacency.is_diagonal())
                      return "dual adjacency not diagonal";
                  return "ok";
              });
}

void johnson_dim(Report& rep, int D, int k, long long brute_cap) {
    const long long formula = terwilliger_dim_formula(D, k);
    run_check(
        rep, "johnson.dim", dk_params(D, k), std::to_string(formula),
        [D, k, formula, brute_cap]() -> std::string {
            const std::vector<int> idx_blocks = blocks_from_index_sets(D, k);
            long long idx_sum = 0;
            for (int b : idx_blocks) idx_sum += static_cast<long long>(b) * b;

            const std::vector<int> profile_blocks = blocks_from_profile(D, k);
            long long profile_sum = 0;
            for (int b : profile_blocks)
                profile_sum += static_cast<long long>(b) * b;

            std::string brute = "-";
            bool brute_ok = true;
            if (binom_mpz(D, k) <= static_cast<long>(brute_cap)) {
                const long long bf = terwilliger_dim_bruteforce(
                    D, k, (1u << k) - 1u, brute_cap);
                brute = std::to_string(bf);
                brute_ok = (bf == formula);
            }
            if (idx_sum == formula && profile_sum == formula && brute_ok)
                return std::to_string(formula);
            return "formula=" + std::to_string(formula) +
                   " blocks=" + std::to_string(idx_sum) +
                   " profile=" + std::to_string(profile_sum) +
                   " brute=" + brute;
        });
}

void johnson_formula_symmetry(Report& rep, int D, int k) {
    run_check(rep, "johnson.formula_symmetry", dk_params(D, k),
              std::to_string(terwilliger_dim_formula(D, k)),
              [D, k]() -> std::string {
                  return std::to_string(terwilliger_dim_formula(D, D - k));
              });
}

void johnson_index_bijection(Report& rep, int D, int k) {
    run_check(rep, "johnson.index_bijection", dk_params(D, k), "ok",
              [D, k]() -> std::string {
                  return index_set_bijection_agrees(D, k)
                             ? "ok"
                             : "transpose does not map the families";
              });
}

void johnson_slice_checks(Report& rep, const SubsetLatticeRep& lattice, int k,
                          unsigned anchor, long long cap) {
    const std::string params = dk_params(lattice.D, k) +
                               " anchor=" + subset_str(anchor);
    // Shared computation for the two records below.
    run_check(rep, "johnson.slice_relations", params, "ok",
              [&lattice, k, anchor, cap]() -> std::string {
                  const SliceComparison cmp =
                      compare_terwilliger_realizations(lattice, k, anchor, cap);
                  if (!cmp.adjacency_matches)
                      return "adjacency is not the shifted lowering image";
                  if (!cmp.dual_matches)
                      return "dual adjacency is not the scaled raising image";
                  return "ok";
              });
    run_check(rep, "johnson.span_equality", params, "ok",
              [&lattice, k, anchor, cap]() -> std::string {
                  const SliceComparison cmp =
                      compare_terwilliger_realizations(lattice, k, anchor, cap);
                  if (!cmp.spans_equal)
                      return "spans differ: graph=" +
                             std::to_string(cmp.dim_graph) +
                             " image=" + std::to_string(cmp.dim_image);
                  return "ok";
              });
}

void johnson_binomial_identities(Report& rep, int n_max, int ell_max) {
    run_check(rep, "johnson.binomial_identities",
              "n_max=" + std::to_string(n_max) +
                  " ell_max=" + std::to_string(ell_max),
              "all identities hold", [n_max, ell_max]() -> std::string {
                  const IdentityReport ir =
                      verify_binomial_identities(n_max, ell_max);
                  if (ir.pass()) return "all identities hold";
                  return std::to_string(ir.failed) + " of " +
                         std::to_string(ir.total) + " failed";
              });
}

void johnson_s_value(Report& rep, int ell, int n, long long expected) {
    run_check(rep, "johnson.s_value",
              "ell=" + std::to_string(ell) + " n=" + std::to_string(n),
              std::to_string(expected), [ell, n]() -> std::string {
                  const long long direct = s_ell(ell, n);
                  const long long closed = s_closed(ell, n);
                  if (direct != closed) return "direct and closed form differ";
                  return std::to_string(direct);
              });
}

} // namespace

unsigned seeded_anchor(int D, int k, unsigned long long seed) {
    if (D < 0 || k < 0 || k > D) throw OutOfRange("seeded_anchor: bad (D,k)");
    const unsigned def = (k == 0) ? 0u : ((1u << k) - 1u);
    if (k == 0 || k == D) return def;
    std::mt19937_64 eng(seed * 0x9E3779B97F4A7C15ULL +
                        static_cast<unsigned long long>(D) * 131ULL +
                        static_cast<unsigned long long>(k) * 17ULL + 1ULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> pool(D);
        for (int i = 0; i < D; ++i) pool[i] = i;
        unsigned mask = 0;
        for (int i = 0; i < k; ++i) {
            const std::size_t j =
                i + static_cast<std::size_t>(eng() % (D - i));
            std::swap(pool[i], pool[j]);
            mask |= (1u << pool[i]);
        }
        if (mask != def) return mask;
    }
    return def; // C(D,k) == 1 corner cases never reach here
}

Report run_sl2_suite(const VerifyOptions& opts) {
    Report rep = base_report("sl2", opts);
    const int single_max = std::max({12, opts.m_max, opts.n_max});
    for (int n = 0; n <= single_max; ++n) {
        sl2_defining_relations(rep, n);
        sl2_casimir_scalar(rep, n);
    }
    for (int m = 0; m <= opts.m_max; ++m)
        for (int n = 0; n <= opts.n_max; ++n) sl2_pair_checks(rep, m, n);
    rep.sort_records();
    return rep;
}

Report run_hahn_suite(const VerifyOptions& opts) {
    Report rep = base_report("hahn", opts);
    for (int m = 0; m <= opts.m_max; ++m)
        for (int n = 0; n <= opts.n_max; ++n) {
            hahn_relations(rep, m, n);
            hahn_iso_orbit(rep, m, n, opts.m_max, opts.n_max);
            for (int ell = 0; ell <= m + n; ++ell)
                hahn_weight_module(rep, m, n, ell);
        }
    for (const auto& [a, b] : hahn_parameter_grid())
        for (int d = 0; d <= 4; ++d) {
            hahn_vd_relations(rep, a, b, d);
            hahn_classify_roundtrip(rep, a, b, d);
            if (d <= 3) hahn_irreducibility_burnside(rep, a, b, d);
        }
    rep.sort_records();
    return rep;
}

Report run_decomp_suite(const VerifyOptions& opts) {
    Report rep = base_report("decomp", opts);
    const int d_top = std::min(opts.d_max, opts.lattice_cap);
    for (int D = 0; D <= d_top; ++D) {
        decomp_lattice_build(rep, D, opts.lattice_cap);
        decomp_lattice_spectrum(rep, D, opts.lattice_cap);
    }
    for (int D = 0; D <= std::max(10, opts.d_max); ++D)
        decomp_multiplicity_sum(rep, D);

    for (int D = 0; D <= std::min(d_top, 6); ++D) {
        const SubsetLatticeRep lattice =
            build_subset_lattice(D, opts.lattice_cap);
        for (unsigned anchor = 0; anchor < (1u << D); ++anchor)
            decomp_anchor_split(rep, lattice, anchor);
    }
    for (int D = 7; D <= d_top; ++D) {
        const SubsetLatticeRep lattice =
            build_subset_lattice(D, opts.lattice_cap);
        for (int k0 = 0; k0 <= D; ++k0) {
            const unsigned def = (k0 == 0) ? 0u : ((1u << k0) - 1u);
            decomp_anchor_split(rep, lattice, def);
            const unsigned sampled = seeded_anchor(D, k0, opts.seed);
            if (sampled != def) decomp_anchor_split(rep, lattice, sampled);
        }
    }

    for (int D = 0; D <= opts.d_max; ++D)
        for (int k = 0; k <= D; ++k) decomp_slice_profile(rep, D, k);
    for (int m = 0; m <= opts.m_max; ++m)
        for (int n = 0; n <= opts.n_max; ++n)
            decomp_descriptor_irreducible(rep, m, n);
    rep.sort_records();
    return rep;
}

Report run_johnson_suite(const VerifyOptions& opts) {
    Report rep = base_report("johnson", opts);
    for (int D = 2; D <= opts.d_max; ++D)
        for (int k = 1; k <= D - 1; ++k) {
            johnson_dim(rep, D, k, opts.brute_cap);
            johnson_formula_symmetry(rep, D, k);
            if (2 * k < D) johnson_index_bijection(rep, D, k);
            if (binom_mpz(D, k) <= static_cast<long>(opts.brute_cap))
                johnson_operators_check(rep, D, k);
        }

    const int span_top = std::min(opts.d_max, 7);
    for (int D = 2; D <= span_top; ++D) {
        const SubsetLatticeRep lattice =
            build_subset_lattice(D, opts.lattice_cap);
        for (int k = 1; k <= D - 1; ++k) {
            const unsigned def = (1u << k) - 1u;
            johnson_slice_checks(rep, lattice, k, def, opts.brute_cap);
            const unsigned sampled = seeded_anchor(D, k, opts.seed);
            if (sampled != def)
                johnson_slice_checks(rep, lattice, k, sampled, opts.brute_cap);
        }
    }

    johnson_binomial_identities(rep, 40, 6);
    const std::vector<std::array<long long, 3>> s_values = {
        {0, 7, 4},    {1, 6, 12},   {2, 9, 70},       {3, 5, 11},
        {3, 6, 24},   {3, 7, 46},   {3, 11, 295},     {4, 12, 791},
        {5, 13, 1897}, {3, 43, 71071}, {6, 40, 12277401},
    };
    for (const auto& [ell, n, expected] : s_values)
        johnson_s_value(rep, static_cast<int>(ell), static_cast<int>(n),
                        expected);
    rep.sort_records();
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"sl2", "hahn", "decomp",
                                                   "johnson", "all"};
    return names;
}

Report run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "sl2") return run_sl2_suite(opts);
    if (name == "hahn") return run_hahn_suite(opts);
    if (name == "decomp") return run_decomp_suite(opts);
    if (name == "johnson") return run_johnson_suite(opts);
    if (name == "all") {
        Report rep = base_report("all", opts);
        rep.merge(run_sl2_suite(opts));
        rep.merge(run_hahn_suite(opts));
        rep.merge(run_decomp_suite(opts));
        rep.merge(run_johnson_suite(opts));
        rep.sort_records();
        return rep;
    }
    throw Error("unknown suite '" + name + "' (expected sl2, hahn, decomp, johnson, or all)");
}

} // namespace terj
