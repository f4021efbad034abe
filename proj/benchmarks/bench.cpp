#include <benchmark/benchmark.h>

#include "fibpoly/extract.hpp"
#include "fibpoly/poly.hpp"
#include "fibpoly/rng.hpp"

namespace {

using namespace fibpoly;

Polynomial sample_polynomial(int n) {
  // I <-s- E -p-> B -t-> J with |I|=|J|=n, |E|=2n, |B|=n, deterministic maps.
  FinSet i(n), e(2 * n), b(n), j(n);
  std::vector<int> st(2 * n), pt(2 * n), tt(n);
  for (int k = 0; k < 2 * n; ++k) {
    st[k] = k % n;
    pt[k] = (k / 2) % n;
  }
  for (int k = 0; k < n; ++k) tt[k] = (k + 1) % n;
  return {i, e, b, j, FinMap{e, i, st}, FinMap{e, b, pt}, FinMap{b, j, tt}};
}

void BM_EvalPlain(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Polynomial p = sample_polynomial(n);
  Rng rng(7);
  SliceObj x = random_slice_obj(rng, p.I, 3 * n);
  for (auto _ : state) benchmark::DoNotOptimize(eval_plain(p, x));
}
BENCHMARK(BM_EvalPlain)->Arg(2)->Arg(4)->Arg(8);

void BM_FiberedEvalMap(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Polynomial p = sample_polynomial(n);
  ComposedBox box = eval_fibered(p);
  Rng rng(11);
  FinSet k(n), m(2 * n);
  Span s{p.I, m, k, random_finmap(rng, m, p.I), random_finmap(rng, m, k)};
  FinSet k2(std::max(1, n - 1));
  FinMap a = random_finmap(rng, k2, s.fiber_base);
  SpanMap cart = cartesian_lift(a, s).to_src;
  for (auto _ : state) benchmark::DoNotOptimize(box.eval_map(cart));
}
BENCHMARK(BM_FiberedEvalMap)->Arg(2)->Arg(3)->Arg(4);

void BM_AdjointSearch(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Polynomial p = sample_polynomial(n);
  ComposedBox rbar = middle_part_box(p.s, p.p);
  SearchOptions opts;
  opts.size_bound = 2 * n;
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_search(rbar, opts));
}
BENCHMARK(BM_AdjointSearch)->Arg(1)->Arg(2);

}  // namespace
