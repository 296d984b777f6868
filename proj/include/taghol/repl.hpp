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

// Script interpreter driving either kernel through a common command
// language, so the same session can be replayed against both and the
// transcripts compared line by line.
//
// Commands, one per line ('#' starts a comment line):
//
//   tyop NAME ARITY            declare a primitive type operator
//   const NAME : TYPE          declare a primitive constant
//   def NAME: `c = t`          define constant c, bind theorem NAME
//   undo NAME                  withdraw the definition of constant NAME
//   axiom NAME: `tm`           assert an axiom, bind theorem NAME
//   thm NAME = EXPR            run an inference, bind theorem NAME
//   print NAME                 print a bound theorem
//   assert_prints NAME "STR"   check that NAME prints exactly as STR
//   assert_fails CMD "MSG"     check that CMD fails mentioning MSG
//   include PATH               splice in another script file
//
// EXPR applies rules to quoted terms and bound theorem names:
//
//   expr := NAME atom*  |  atom
//   atom := NAME  |  `text`  |  '(' expr ')'
//
// Rules: REFL `t`, TRANS a b, MK_COMB f x, ABS `v` th, BETA `t`,
// ASSUME `t`, EQ_MP eq th, DEDUCT_ANTISYM a b, INST_TYPE (`ty` `v`)* th,
// INST (`t` `v`)* th, SYM th, AP_TERM `f` th, AP_THM th `t`.

#ifndef TAGHOL_REPL_HPP_
#define TAGHOL_REPL_HPP_

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "taghol/kernel.hpp"

namespace taghol {
namespace repl {

// -- Rule expressions --------------------------------------------------------

struct RuleExpr;
using RuleExprPtr = std::shared_ptr<const RuleExpr>;

struct RuleExpr {
  enum class Kind { Apply, ThmRef, Quote };
  Kind kind;
  std::string name;   // Apply: rule name; ThmRef: theorem name
  std::string quote;  // Quote: text between the backticks
  std::vector<RuleExprPtr> args;
};

RuleExprPtr parse_rule_expr(const std::string& src);

// -- Engines -----------------------------------------------------------------
//
// One implementation per kernel.  Methods either succeed, returning any
// transcript text, or throw Failure; they never print on their own.

class Engine {
 public:
  virtual ~Engine() = default;
  virtual void cmd_tyop(const std::string& name, int arity) = 0;
  // Returns the canonical form of the declared type.
  virtual std::string cmd_const(const std::string& name,
                                const std::string& ty_src) = 0;
  // Returns the printed definitional theorem bound to thm_name.
  virtual std::string cmd_def(const std::string& thm_name,
                              const std::string& eq_src) = 0;
  virtual void cmd_undo(const std::string& const_name) = 0;
  virtual std::string cmd_axiom(const std::string& thm_name,
                                const std::string& tm_src) = 0;
  virtual std::string cmd_thm(const std::string& thm_name,
                              const std::string& expr_src) = 0;
  // Evaluates an expression and discards the result.
  virtual void cmd_eval(const std::string& expr_src) = 0;
  virtual std::string cmd_print(const std::string& thm_name) = 0;
};

std::unique_ptr<Engine> make_stateless_engine(TrackMode mode);
std::unique_ptr<Engine> make_stateful_engine();

// -- Script runner -------------------------------------------------------------

struct RunResult {
  int commands = 0;
  int failed_assertions = 0;
  int errors = 0;
  bool ok() const { return failed_assertions == 0 && errors == 0; }
};

// Declarations and constants every script can rely on.
extern const char kDefaultPrelude[];

class ScriptRunner {
 public:
  // Either stream may be null.  Transcript lines (one per effective
  // command) go to transcript; "file:line: error: ..." diagnostics go to
  // diagnostics.  A failed command is recorded in the transcript as
  // "error: MSG" and the run continues.
  ScriptRunner(Engine& engine, std::ostream* transcript,
               std::ostream* diagnostics);

  void run_line(const std::string& line, const std::string& file, int lineno);
  RunResult run_text(const std::string& text, const std::string& name);
  RunResult run_file(const std::string& path);

  const RunResult& result() const { return result_; }

 private:
  void exec(const std::string& line);
  void do_assert_fails(const std::string& rest, const std::string& expect);
  void do_include(const std::string& path);
  void emit(const std::string& line);

  Engine& engine_;
  std::ostream* transcript_;
  std::ostream* diagnostics_;
  RunResult result_;
  int include_depth_ = 0;
  std::vector<std::string> dirs_;  // include resolution, innermost last
};

}  // namespace repl
}  // namespace taghol

#endif  // TAGHOL_REPL_HPP_
