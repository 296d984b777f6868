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

#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "taghol/repl.hpp"

int main(int argc, char** argv) {
  CLI::App app{"HOL proof script interpreter"};
  std::string mode = "linear";
  std::string kernel = "stateless";
  std::string prelude;
  std::string script;
  app.add_option("--mode", mode, "Axiom tracking: none, linear, or precise")
      ->check(CLI::IsMember({"none", "linear", "precise"}));
  app.add_option("--kernel", kernel, "Kernel to drive")
      ->check(CLI::IsMember({"stateless", "stateful"}));
  app.add_option("--prelude", prelude,
                 "Script run silently before the session (replaces the "
                 "built-in num/0/1 prelude)");
  app.add_option("script", script, "Script file; interactive when omitted");
  CLI11_PARSE(app, argc, argv);

  using namespace taghol;
  TrackMode m = mode == "none"      ? TrackMode::none
                : mode == "precise" ? TrackMode::precise
                                    : TrackMode::linear;
  std::unique_ptr<repl::Engine> engine = kernel == "stateful"
                                             ? repl::make_stateful_engine()
                                             : repl::make_stateless_engine(m);

  {
    repl::ScriptRunner pre(*engine, nullptr, &std::cerr);
    if (prelude.empty()) {
      pre.run_text(repl::kDefaultPrelude, "<prelude>");
    } else {
      pre.run_file(prelude);
    }
    if (!pre.result().ok()) {
      std::cerr << "prelude failed\n";
      return 2;
    }
  }

  repl::ScriptRunner runner(*engine, &std::cout, &std::cerr);
  if (!script.empty()) return runner.run_file(script).ok() ? 0 : 1;

  std::string line;
  int lineno = 0;
  for (;;) {
    std::cerr << "hol> ";
    if (!std::getline(std::cin, line)) break;
    runner.run_line(line, "<stdin>", ++lineno);
  }
  return runner.result().ok() ? 0 : 1;
}
