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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "taghol/bench.hpp"
#include "taghol/core.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Kernel replay benchmark"};
  std::uint64_t seed = 42;
  int defs = 200;
  int inferences = 100000;
  int depth = 50;
  int reps = 5;
  std::string out_path;
  app.add_option("--seed", seed, "Workload seed");
  app.add_option("--defs", defs, "Number of definitions");
  app.add_option("--inferences", inferences, "Number of inference steps");
  app.add_option("--depth", depth, "Definition chain depth");
  app.add_option("--reps", reps, "Timed repetitions per kernel");
  app.add_option("--out", out_path, "Write the JSON report to this file");
  CLI11_PARSE(app, argc, argv);

  using namespace taghol;
  try {
    bench::Workload w = bench::gen_workload(seed, defs, inferences, depth);
    bench::BenchReport r = bench::run_bench(w, reps);
    std::cout << bench::report_table(r);
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
      }
      f << bench::report_json(r) << "\n";
    }
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what() << "\n";
    return 1;
  }
}
