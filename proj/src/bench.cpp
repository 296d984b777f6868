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

#include "taghol/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "taghol/repl.hpp"
#include "taghol/state.hpp"
#include "taghol/syntax.hpp"

namespace taghol {
namespace bench {

namespace {

// Wraps a printed term so it can be re-quoted inside a larger term.
std::string atomize(const std::string& s) {
  if (s.find(' ') == std::string::npos) return s;
  return "(" + s + ")";
}

}  // namespace

Workload gen_workload(std::uint64_t seed, int n_defs, int n_inferences,
                      int chain_depth) {
  // Raw engine draws with modulo keep the output identical across standard
  // library implementations, which distributions would not.
  std::mt19937_64 rng(seed);
  std::ostringstream out;
  out << "# generated proof workload\n";
  out << "# seed=" << seed << " defs=" << n_defs
      << " inferences=" << n_inferences << " depth=" << chain_depth << "\n";
  out << "# mix: 40% REFL, 25% TRANS, 15% EQ_MP, 20% MK_COMB;"
      << " one print per 50 steps\n";

  struct Entry {
    std::string name;  // bound theorem name
    std::string lhs;   // printed left side of the conclusion
    std::string rhs;   // printed right side
    bool num;          // both sides have the base type
  };
  std::vector<Entry> pool;
  std::map<std::string, std::vector<size_t>> by_lhs;
  std::vector<size_t> num_pool;
  auto add = [&](std::string name, std::string lhs, std::string rhs,
                 bool num) {
    size_t idx = pool.size();
    by_lhs[lhs].push_back(idx);
    if (num) num_pool.push_back(idx);
    pool.push_back(Entry{std::move(name), std::move(lhs), std::move(rhs), num});
  };

  if (n_inferences > 0) {
    out << "axiom AX0: `0 = 0`\n";
    add("AX0", "0", "0", true);
    out << "axiom AX1: `1 = 1`\n";
    add("AX1", "1", "1", true);
    out << "axiom AX2: `(0 = 0) = (0 = 0)`\n";
    add("AX2", "0 = 0", "0 = 0", false);
  }

  for (int k = 0; k < n_defs; ++k) {
    std::string c = "c" + std::to_string(k);
    std::string rhs = (chain_depth <= 1 || k % chain_depth == 0)
                          ? "0"
                          : "c" + std::to_string(k - 1);
    out << "def D" << k << ": `" << c << " = " << rhs << "`\n";
    add("D" + std::to_string(k), c, rhs, true);
  }

  auto random_refl = [&](const std::string& tname) {
    std::string t =
        n_defs > 0 ? "c" + std::to_string(rng() % n_defs) : std::string("0");
    out << "thm " << tname << " = REFL `" << t << "`\n";
    add(tname, t, t, true);
  };

  for (int i = 0; i < n_inferences; ++i) {
    std::string tname = "T" + std::to_string(i);
    std::uint64_t roll = rng() % 100;
    if (roll < 40 || pool.empty()) {
      random_refl(tname);
    } else if (roll < 65) {
      size_t a = rng() % pool.size();
      auto it = by_lhs.find(pool[a].rhs);
      if (it == by_lhs.end() || it->second.empty()) {
        random_refl(tname);
      } else {
        size_t b = it->second[rng() % it->second.size()];
        out << "thm " << tname << " = TRANS " << pool[a].name << " "
            << pool[b].name << "\n";
        add(tname, pool[a].lhs, pool[b].rhs, pool[a].num);
      }
    } else if (roll < 80) {
      size_t a = rng() % pool.size();
      std::string eq = atomize(pool[a].lhs) + " = " + atomize(pool[a].rhs);
      out << "thm " << tname << " = EQ_MP (REFL `" << eq << "`) "
          << pool[a].name << "\n";
      add(tname, pool[a].lhs, pool[a].rhs, pool[a].num);
    } else if (num_pool.empty()) {
      random_refl(tname);
    } else {
      size_t a = num_pool[rng() % num_pool.size()];
      out << "thm " << tname << " = MK_COMB (REFL `\\x:num. x`) "
          << pool[a].name << "\n";
      add(tname, "(\\x:num. x) " + atomize(pool[a].lhs),
          "(\\x:num. x) " + atomize(pool[a].rhs), true);
    }
    if (i % 50 == 49) {
      size_t p = rng() % pool.size();
      out << "print " << pool[p].name << "\n";
    }
  }

  Workload w;
  w.seed = seed;
  w.n_defs = n_defs;
  w.n_inferences = n_inferences;
  w.chain_depth = chain_depth;
  w.script = out.str();
  return w;
}

namespace {

struct EngineSpec {
  std::string name;
  std::function<std::unique_ptr<repl::Engine>()> make;
};

std::vector<EngineSpec> engine_specs() {
  std::vector<EngineSpec> specs;
  specs.push_back({"stateful", [] { return repl::make_stateful_engine(); }});
  specs.push_back({"stateless/none", [] {
                     return repl::make_stateless_engine(TrackMode::none);
                   }});
  specs.push_back({"stateless/linear", [] {
                     return repl::make_stateless_engine(TrackMode::linear);
                   }});
  specs.push_back({"stateless/precise", [] {
                     return repl::make_stateless_engine(TrackMode::precise);
                   }});
  return specs;
}

double run_once(const EngineSpec& spec, const std::string& script,
                std::string* transcript) {
  auto eng = spec.make();
  {
    repl::ScriptRunner prelude(*eng, nullptr, nullptr);
    prelude.run_text(repl::kDefaultPrelude, "<prelude>");
    if (!prelude.result().ok()) fail("bench: prelude error");
  }
  std::ostringstream ts;
  repl::ScriptRunner runner(*eng, transcript ? &ts : nullptr, nullptr);
  auto t0 = std::chrono::steady_clock::now();
  runner.run_text(script, "<bench>");
  auto t1 = std::chrono::steady_clock::now();
  if (runner.result().errors != 0) fail("bench: script error");
  if (transcript) *transcript = ts.str();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

BenchReport run_bench(const Workload& w, int reps) {
  if (reps < 1) reps = 1;
  BenchReport report;
  report.workload = w;
  std::vector<EngineSpec> specs = engine_specs();

  // Correctness gate first (it doubles as a warmup): every kernel must
  // replay the script to the same transcript, byte for byte.
  std::string reference;
  for (size_t k = 0; k < specs.size(); ++k) {
    std::string ts;
    run_once(specs[k], w.script, &ts);
    if (k == 0) {
      reference = std::move(ts);
    } else if (ts != reference) {
      fail("bench: transcripts diverge");
    }
  }

  // Reps are interleaved round-robin so allocator state and clock drift
  // spread evenly across kernels instead of penalizing whichever runs last.
  std::vector<std::vector<double>> times(specs.size());
  for (auto& ts : times) ts.reserve(reps);
  for (int i = 0; i < reps; ++i)
    for (size_t k = 0; k < specs.size(); ++k)
      times[k].push_back(run_once(specs[k], w.script, nullptr));
  std::vector<double> medians;
  medians.reserve(specs.size());
  for (auto& ts : times) {
    std::sort(ts.begin(), ts.end());
    medians.push_back(ts[ts.size() / 2]);
  }
  for (size_t k = 0; k < specs.size(); ++k) {
    KernelTiming t;
    t.name = specs[k].name;
    t.median_s = medians[k];
    t.overhead_pct =
        medians[0] > 0.0 ? (medians[k] / medians[0] - 1.0) * 100.0 : 0.0;
    report.kernels.push_back(std::move(t));
  }

  report.equality = equality_bench(100, 10000);
  return report;
}

EqualityBench equality_bench(int depth, int iterations) {
  EqualityBench eb;
  eb.depth = depth;
  eb.iterations = iterations;

  SymbolTable table(TrackMode::none);
  table.new_tyop("num", 0);
  TypePtr num = parse_type("num", table);
  table.new_constant("z", num);
  TermPtr prev = table.lookup_const("z");
  for (int i = 0; i < depth; ++i) {
    std::string name = "d" + std::to_string(i);
    table.new_basic_definition(safe_mk_eq(mk_var(name, num), prev));
    prev = table.lookup_const(name);
  }
  // Two copies of the chain-end constant: distinct term nodes sharing the
  // definition tag, so only the identity shortcut avoids a payload walk.
  TermPtr a = prev;
  TermPtr b = inst_const(a, {});

  auto measure = [&](bool on, std::uint64_t* walks) {
    bool saved = eqcfg::identity_fast_path.load();
    eqcfg::identity_fast_path.store(on);
    std::uint64_t before = eqcfg::defined_payload_walks.load();
    volatile bool sink = true;
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < iterations; ++i) sink = sink && term_eq(a, b);
    auto t1 = std::chrono::steady_clock::now();
    *walks = eqcfg::defined_payload_walks.load() - before;
    eqcfg::identity_fast_path.store(saved);
    if (!sink) fail("equality_bench: copies compare unequal");
    return std::chrono::duration<double>(t1 - t0).count();
  };
  eb.fast_on_s = measure(true, &eb.walks_on);
  eb.fast_off_s = measure(false, &eb.walks_off);
  eb.slowdown = eb.fast_off_s / std::max(eb.fast_on_s, 1e-9);
  return eb;
}

std::string report_json(const BenchReport& r) {
  nlohmann::json j;
  j["workload"] = {{"seed", r.workload.seed},
                   {"defs", r.workload.n_defs},
                   {"inferences", r.workload.n_inferences},
                   {"chain_depth", r.workload.chain_depth}};
  j["kernels"] = nlohmann::json::array();
  for (const auto& k : r.kernels)
    j["kernels"].push_back({{"name", k.name},
                            {"median_s", k.median_s},
                            {"overhead_pct", k.overhead_pct}});
  j["equality"] = {{"depth", r.equality.depth},
                   {"iterations", r.equality.iterations},
                   {"fast_on_s", r.equality.fast_on_s},
                   {"fast_off_s", r.equality.fast_off_s},
                   {"slowdown", r.equality.slowdown},
                   {"walks_on", r.equality.walks_on},
                   {"walks_off", r.equality.walks_off}};
  return j.dump(2);
}

std::string report_table(const BenchReport& r) {
  std::ostringstream out;
  char line[160];
  out << "workload: seed=" << r.workload.seed << " defs=" << r.workload.n_defs
      << " inferences=" << r.workload.n_inferences
      << " depth=" << r.workload.chain_depth << "\n";
  std::snprintf(line, sizeof(line), "%-20s %12s %12s\n", "kernel", "median_s",
                "overhead");
  out << line;
  for (const auto& k : r.kernels) {
    std::snprintf(line, sizeof(line), "%-20s %12.6f %+11.1f%%\n",
                  k.name.c_str(), k.median_s, k.overhead_pct);
    out << line;
  }
  std::snprintf(line, sizeof(line),
                "equality depth=%d iters=%d: on=%.6fs off=%.6fs "
                "slowdown=%.1fx walks on/off=%llu/%llu\n",
                r.equality.depth, r.equality.iterations, r.equality.fast_on_s,
                r.equality.fast_off_s, r.equality.slowdown,
                static_cast<unsigned long long>(r.equality.walks_on),
                static_cast<unsigned long long>(r.equality.walks_off));
  out << line;
  return out.str();
}

}  // namespace bench
}  // namespace taghol
