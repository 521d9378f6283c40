#include <benchmark/benchmark.h>

#include "terj/johnson.hpp"
#include "terj/lattice.hpp"
#include "terj/matrix.hpp"
#include "terj/sl2.hpp"
#include "terj/span.hpp"

namespace {

void BM_matrix_product(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const terj::TensorRep t = terj::build_tensor_rep(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(t.dE * t.dF);
    }
}
BENCHMARK(BM_matrix_product)->Arg(3)->Arg(5)->Arg(7);

void BM_kron(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const terj::Sl2Action L = terj::build_Ln(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(terj::kron(L.E, L.F));
    }
}
BENCHMARK(BM_kron)->Arg(4)->Arg(8)->Arg(12);

void BM_casimir_eigenspaces(benchmark::State& state) {
    const int D = static_cast<int>(state.range(0));
    const terj::SubsetLatticeRep rep = terj::build_subset_lattice(D);
    for (auto _ : state) {
        const terj::Rational top =
            terj::Rational(D) * terj::Rational(D + 2) / terj::Rational(2);
        benchmark::DoNotOptimize(terj::eigenspace_basis(rep.Lambda, top));
    }
}
BENCHMARK(BM_casimir_eigenspaces)->Arg(4)->Arg(6);

void BM_span_closure_johnson(benchmark::State& state) {
    const int D = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const terj::JohnsonOps ops = terj::johnson_operators(D, k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            terj::span_closure({ops.adjacency, ops.dual_adjacency}));
    }
}
BENCHMARK(BM_span_closure_johnson)->Args({6, 2})->Args({6, 3});

void BM_anchor_split(benchmark::State& state) {
    const int D = static_cast<int>(state.range(0));
    const terj::SubsetLatticeRep rep = terj::build_subset_lattice(D);
    const unsigned anchor = (1u << (D / 2)) - 1u;
    for (auto _ : state) {
        benchmark::DoNotOptimize(terj::split_by_anchor(rep, anchor));
    }
}
BENCHMARK(BM_anchor_split)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
