/* Copyright 2026 The taghol Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Workload generation and timing: replays one generated proof script on the
// stateful kernel and on the stateless kernel in every tracking mode,
// demands byte-identical transcripts, and reports median wall times plus a
// microbenchmark of constant equality with and without the pointer
// identity shortcut.

#ifndef TAGHOL_BENCH_HPP_
#define TAGHOL_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace taghol {
namespace bench {

struct Workload {
  std::uint64_t seed = 0;
  int n_defs = 0;
  int n_inferences = 0;
  int chain_depth = 0;
  std::string script;
};

// Deterministic in all parameters.  The script assumes the default prelude
// (num, 0, 1).  Definitions build constant chains c0, c1 = c0, ... reset
// every chain_depth steps; inferences draw on a growing pool of equational
// theorems with a fixed mix of REFL, TRANS, EQ_MP, and MK_COMB steps and an
// occasional print.
Workload gen_workload(std::uint64_t seed, int n_defs, int n_inferences,
                      int chain_depth);

struct KernelTiming {
  std::string name;
  double median_s = 0.0;
  double overhead_pct = 0.0;  // relative to the stateful baseline
};

struct EqualityBench {
  int depth = 0;
  int iterations = 0;
  double fast_on_s = 0.0;
  double fast_off_s = 0.0;
  double slowdown = 0.0;  // fast_off_s / fast_on_s
  std::uint64_t walks_on = 0;
  std::uint64_t walks_off = 0;
};

struct BenchReport {
  Workload workload;
  std::vector<KernelTiming> kernels;  // stateful first
  EqualityBench equality;
};

// Fails with "bench: transcripts diverge" if any kernel disagrees on the
// replay, and "bench: script error" if the script itself misfires.
BenchReport run_bench(const Workload& w, int reps);

// Compares two copies of the constant at the end of a definition chain of
// the given depth, with the identity shortcut on and off.
EqualityBench equality_bench(int depth, int iterations);

std::string report_json(const BenchReport& r);
std::string report_table(const BenchReport& r);

}  // namespace bench
}  // namespace taghol

#endif  // TAGHOL_BENCH_HPP_
