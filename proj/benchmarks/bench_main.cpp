#include <benchmark/benchmark.h>

#include "idkit/lp.hpp"

namespace {

using idkit::Mat;
using idkit::Rat;
using idkit::Vec;

// Max <c,x> over the n-cube [-1,1]^n.
void bm_lp_cube(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Vec c(n);
  for (std::size_t i = 0; i < n; ++i) c.e[i] = Rat(static_cast<long>(i) + 1);
  Mat A(n);
  Vec b(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    A.add_row(idkit::unit_vec(n, i));
    b.e[2 * i] = Rat(1);
    A.add_row(-idkit::unit_vec(n, i));
    b.e[2 * i + 1] = Rat(1);
  }
  for (auto _ : state) {
    auto r = idkit::lp_solve(c, A, b, true);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_lp_cube)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
