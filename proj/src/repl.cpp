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

#include "taghol/repl.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "taghol/baseline.hpp"
#include "taghol/state.hpp"
#include "taghol/syntax.hpp"

namespace taghol {
namespace repl {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::string trimmed(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Cursor over a single command line.
struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  std::string ident(const std::string& who) {
    skip_ws();
    size_t b = i;
    while (i < s.size() && ident_char(s[i])) ++i;
    if (i == b) fail(who + ": expected a name");
    return s.substr(b, i - b);
  }
  int number(const std::string& who) {
    std::string tok = ident(who);
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(who + ": expected a number");
    return std::stoi(tok);
  }
  void expect(char c, const std::string& who) {
    skip_ws();
    if (i >= s.size() || s[i] != c)
      fail(who + ": expected '" + std::string(1, c) + "'");
    ++i;
  }
  std::string backtick(const std::string& who) {
    skip_ws();
    if (i >= s.size() || s[i] != '`') fail(who + ": expected a quotation");
    size_t close = s.find('`', i + 1);
    if (close == std::string::npos) fail(who + ": unterminated quotation");
    std::string body = s.substr(i + 1, close - i - 1);
    i = close + 1;
    return body;
  }
  void end(const std::string& who) {
    if (!done()) fail(who + ": trailing input");
  }
  std::string rest() {
    std::string r = trimmed(s.substr(i));
    i = s.size();
    return r;
  }
};

}  // namespace

// -- Rule expression parser -----------------------------------------------

namespace {

struct ExprParser {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool starts_atom() {
    skip_ws();
    if (i >= s.size()) return false;
    return s[i] == '(' || s[i] == '`' || ident_char(s[i]);
  }
  std::string ident() {
    size_t b = i;
    while (i < s.size() && ident_char(s[i])) ++i;
    return s.substr(b, i - b);
  }

  RuleExprPtr parse_expr() {
    skip_ws();
    if (i < s.size() && ident_char(s[i])) {
      std::string head = ident();
      std::vector<RuleExprPtr> args;
      while (starts_atom()) args.push_back(parse_atom());
      auto e = std::make_shared<RuleExpr>();
      if (args.empty()) {
        e->kind = RuleExpr::Kind::ThmRef;
        e->name = std::move(head);
      } else {
        e->kind = RuleExpr::Kind::Apply;
        e->name = std::move(head);
        e->args = std::move(args);
      }
      return e;
    }
    return parse_atom();
  }

  RuleExprPtr parse_atom() {
    skip_ws();
    if (i >= s.size()) fail("rule expression: unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      RuleExprPtr e = parse_expr();
      skip_ws();
      if (i >= s.size() || s[i] != ')')
        fail("rule expression: expected ')'");
      ++i;
      return e;
    }
    if (c == '`') {
      size_t close = s.find('`', i + 1);
      if (close == std::string::npos)
        fail("rule expression: unterminated quotation");
      auto e = std::make_shared<RuleExpr>();
      e->kind = RuleExpr::Kind::Quote;
      e->quote = s.substr(i + 1, close - i - 1);
      i = close + 1;
      return e;
    }
    if (ident_char(c)) {
      auto e = std::make_shared<RuleExpr>();
      e->kind = RuleExpr::Kind::ThmRef;
      e->name = ident();
      return e;
    }
    fail("rule expression: unexpected character '" + std::string(1, c) + "'");
  }
};

}  // namespace

RuleExprPtr parse_rule_expr(const std::string& src) {
  ExprParser p{src};
  RuleExprPtr e = p.parse_expr();
  p.skip_ws();
  if (p.i < src.size()) fail("rule expression: trailing input");
  return e;
}

// -- Rule evaluation ---------------------------------------------------------
//
// The evaluator is generic over an operations struct so both kernels share
// one dispatch (and therefore identical argument-shape errors).

namespace {

using QuotePairs = std::vector<std::pair<std::string, std::string>>;

template <typename Ops>
typename Ops::ThmT eval_rule(Ops& ops, const RuleExprPtr& e) {
  if (e->kind == RuleExpr::Kind::ThmRef) return ops.lookup(e->name);
  if (e->kind == RuleExpr::Kind::Quote)
    fail("rule expression: expected a theorem");
  const std::string& r = e->name;
  const auto& as = e->args;
  auto exactly = [&](size_t n) {
    if (as.size() != n) fail(r + ": bad arguments");
  };
  auto quote_at = [&](size_t k) -> const std::string& {
    if (as[k]->kind != RuleExpr::Kind::Quote) fail(r + ": bad arguments");
    return as[k]->quote;
  };
  if (r == "REFL") {
    exactly(1);
    return ops.refl(quote_at(0));
  }
  if (r == "TRANS") {
    exactly(2);
    auto a = eval_rule(ops, as[0]);
    auto b = eval_rule(ops, as[1]);
    return ops.trans(a, b);
  }
  if (r == "MK_COMB") {
    exactly(2);
    auto a = eval_rule(ops, as[0]);
    auto b = eval_rule(ops, as[1]);
    return ops.mk_comb(a, b);
  }
  if (r == "ABS") {
    exactly(2);
    const std::string& v = quote_at(0);
    auto th = eval_rule(ops, as[1]);
    return ops.abs(v, th);
  }
  if (r == "BETA") {
    exactly(1);
    return ops.beta(quote_at(0));
  }
  if (r == "ASSUME") {
    exactly(1);
    return ops.assume(quote_at(0));
  }
  if (r == "EQ_MP") {
    exactly(2);
    auto a = eval_rule(ops, as[0]);
    auto b = eval_rule(ops, as[1]);
    return ops.eq_mp(a, b);
  }
  if (r == "DEDUCT_ANTISYM") {
    exactly(2);
    auto a = eval_rule(ops, as[0]);
    auto b = eval_rule(ops, as[1]);
    return ops.deduct_antisym(a, b);
  }
  if (r == "INST_TYPE" || r == "INST") {
    size_t nq = 0;
    while (nq < as.size() && as[nq]->kind == RuleExpr::Kind::Quote) ++nq;
    if (nq % 2 != 0 || nq + 1 != as.size()) fail(r + ": bad arguments");
    QuotePairs pairs;
    pairs.reserve(nq / 2);
    for (size_t k = 0; k < nq; k += 2)
      pairs.emplace_back(as[k]->quote, as[k + 1]->quote);
    auto th = eval_rule(ops, as[nq]);
    return r == "INST_TYPE" ? ops.inst_type(pairs, th) : ops.inst(pairs, th);
  }
  if (r == "SYM") {
    exactly(1);
    auto th = eval_rule(ops, as[0]);
    return ops.sym(th);
  }
  if (r == "AP_TERM") {
    exactly(2);
    const std::string& f = quote_at(0);
    auto th = eval_rule(ops, as[1]);
    return ops.ap_term(f, th);
  }
  if (r == "AP_THM") {
    exactly(2);
    auto th = eval_rule(ops, as[0]);
    const std::string& t = quote_at(1);
    return ops.ap_thm(th, t);
  }
  fail("unknown rule: " + r);
}

struct StatelessOps {
  using ThmT = Thm;
  SymbolTable& table;
  std::map<std::string, Thm>& thms;

  Thm lookup(const std::string& n) {
    auto it = thms.find(n);
    if (it == thms.end()) fail("unknown theorem: " + n);
    return it->second;
  }
  TermPtr term(const std::string& q) { return parse_term(q, table); }

  Thm refl(const std::string& q) { return taghol::refl(term(q)); }
  Thm trans(const Thm& a, const Thm& b) { return taghol::trans(a, b); }
  Thm mk_comb(const Thm& a, const Thm& b) {
    return taghol::mk_comb_rule(a, b);
  }
  Thm abs(const std::string& v, const Thm& th) {
    return taghol::abs_rule(term(v), th);
  }
  Thm beta(const std::string& q) { return taghol::beta(term(q)); }
  Thm assume(const std::string& q) { return taghol::assume(term(q)); }
  Thm eq_mp(const Thm& a, const Thm& b) { return taghol::eq_mp(a, b); }
  Thm deduct_antisym(const Thm& a, const Thm& b) {
    return taghol::deduct_antisym(a, b);
  }
  Thm inst_type(const QuotePairs& ps, const Thm& th) {
    TypeSubst theta;
    theta.reserve(ps.size());
    for (const auto& [r, v] : ps) {
      TypePtr var = parse_type(v, table);
      if (!var->is_var()) fail("INST_TYPE: bad arguments");
      theta.emplace_back(parse_type(r, table), std::move(var));
    }
    return taghol::inst_type_rule(theta, th);
  }
  Thm inst(const QuotePairs& ps, const Thm& th) {
    TermSubst theta;
    theta.reserve(ps.size());
    for (const auto& [r, v] : ps)
      theta.emplace_back(term(r), term(v));
    return taghol::inst_rule(theta, th);
  }
  Thm sym(const Thm& th) {
    if (!taghol::is_eq(th.concl())) fail("SYM");
    auto [l, r] = taghol::dest_eq(th.concl());
    (void)r;
    Thm lth = taghol::refl(l);
    Thm fth = taghol::refl(th.concl()->fn()->fn());
    return taghol::eq_mp(
        taghol::mk_comb_rule(taghol::mk_comb_rule(fth, th), lth), lth);
  }
  Thm ap_term(const std::string& f, const Thm& th) {
    TermPtr fn = term(f);
    try {
      return taghol::mk_comb_rule(taghol::refl(fn), th);
    } catch (const Failure&) {
      fail("AP_TERM");
    }
  }
  Thm ap_thm(const Thm& th, const std::string& t) {
    TermPtr x = term(t);
    try {
      return taghol::mk_comb_rule(th, taghol::refl(x));
    } catch (const Failure&) {
      fail("AP_THM");
    }
  }
};

struct StatefulOps {
  using ThmT = baseline::BThm;
  using BThm = baseline::BThm;
  baseline::StatefulKernel& k;
  std::map<std::string, BThm>& thms;

  BThm lookup(const std::string& n) {
    auto it = thms.find(n);
    if (it == thms.end()) fail("unknown theorem: " + n);
    return it->second;
  }
  baseline::BTermPtr term(const std::string& q) {
    return baseline::parse_bterm(q, k);
  }

  BThm refl(const std::string& q) { return k.refl(term(q)); }
  BThm trans(const BThm& a, const BThm& b) { return k.trans(a, b); }
  BThm mk_comb(const BThm& a, const BThm& b) { return k.mk_comb_rule(a, b); }
  BThm abs(const std::string& v, const BThm& th) {
    return k.abs_rule(term(v), th);
  }
  BThm beta(const std::string& q) { return k.beta(term(q)); }
  BThm assume(const std::string& q) { return k.assume(term(q)); }
  BThm eq_mp(const BThm& a, const BThm& b) { return k.eq_mp(a, b); }
  BThm deduct_antisym(const BThm& a, const BThm& b) {
    return k.deduct_antisym(a, b);
  }
  BThm inst_type(const QuotePairs& ps, const BThm& th) {
    baseline::BTypeSubst theta;
    theta.reserve(ps.size());
    for (const auto& [r, v] : ps) {
      baseline::BTypePtr var = baseline::parse_btype(v, k);
      if (!var->is_var) fail("INST_TYPE: bad arguments");
      theta.emplace_back(baseline::parse_btype(r, k), std::move(var));
    }
    return k.inst_type_rule(theta, th);
  }
  BThm inst(const QuotePairs& ps, const BThm& th) {
    baseline::BTermSubst theta;
    theta.reserve(ps.size());
    for (const auto& [r, v] : ps)
      theta.emplace_back(term(r), term(v));
    return k.inst_rule(theta, th);
  }
  BThm sym(const BThm& th) {
    if (!baseline::is_eq(th.concl())) fail("SYM");
    auto [l, r] = baseline::dest_eq(th.concl());
    (void)r;
    BThm lth = k.refl(l);
    BThm fth = k.refl(th.concl()->a->a);
    return k.eq_mp(k.mk_comb_rule(k.mk_comb_rule(fth, th), lth), lth);
  }
  BThm ap_term(const std::string& f, const BThm& th) {
    baseline::BTermPtr fn = term(f);
    try {
      return k.mk_comb_rule(k.refl(fn), th);
    } catch (const Failure&) {
      fail("AP_TERM");
    }
  }
  BThm ap_thm(const BThm& th, const std::string& t) {
    baseline::BTermPtr x = term(t);
    try {
      return k.mk_comb_rule(th, k.refl(x));
    } catch (const Failure&) {
      fail("AP_THM");
    }
  }
};

}  // namespace

// -- Engines -------------------------------------------------------------

namespace {

class StatelessEngine : public Engine {
 public:
  explicit StatelessEngine(TrackMode mode) : table_(mode) {}

  void cmd_tyop(const std::string& name, int arity) override {
    table_.new_tyop(name, arity);
  }
  std::string cmd_const(const std::string& name,
                        const std::string& ty_src) override {
    TypePtr ty = parse_type(ty_src, table_);
    table_.new_constant(name, ty);
    return print_type(ty);
  }
  std::string cmd_def(const std::string& thm_name,
                      const std::string& eq_src) override {
    Thm dth = table_.new_basic_definition(parse_term(eq_src, table_));
    bind(thm_name, dth);
    return print_thm(dth, table_);
  }
  void cmd_undo(const std::string& const_name) override {
    table_.undo_definition(const_name);
  }
  std::string cmd_axiom(const std::string& thm_name,
                        const std::string& tm_src) override {
    Thm th = table_.new_axiom(parse_term(tm_src, table_));
    bind(thm_name, th);
    return print_thm(th, table_);
  }
  std::string cmd_thm(const std::string& thm_name,
                      const std::string& expr_src) override {
    StatelessOps ops{table_, thms_};
    Thm th = eval_rule(ops, parse_rule_expr(expr_src));
    bind(thm_name, th);
    return print_thm(th, table_);
  }
  void cmd_eval(const std::string& expr_src) override {
    StatelessOps ops{table_, thms_};
    (void)eval_rule(ops, parse_rule_expr(expr_src));
  }
  std::string cmd_print(const std::string& thm_name) override {
    StatelessOps ops{table_, thms_};
    return print_thm(ops.lookup(thm_name), table_);
  }

 private:
  void bind(const std::string& n, const Thm& th) {
    thms_.insert_or_assign(n, th);
  }

  SymbolTable table_;
  std::map<std::string, Thm> thms_;
};

class StatefulEngine : public Engine {
 public:
  void cmd_tyop(const std::string& name, int arity) override {
    kernel_.new_type(name, arity);
  }
  std::string cmd_const(const std::string& name,
                        const std::string& ty_src) override {
    baseline::BTypePtr ty = baseline::parse_btype(ty_src, kernel_);
    kernel_.new_constant(name, ty);
    return baseline::print_btype(ty);
  }
  std::string cmd_def(const std::string& thm_name,
                      const std::string& eq_src) override {
    baseline::BThm dth =
        kernel_.new_basic_definition(baseline::parse_bterm(eq_src, kernel_));
    bind(thm_name, dth);
    return baseline::print_bthm(dth);
  }
  void cmd_undo(const std::string&) override {
    fail("undo_definition: not supported by stateful kernel");
  }
  std::string cmd_axiom(const std::string& thm_name,
                        const std::string& tm_src) override {
    baseline::BThm th =
        kernel_.new_axiom(baseline::parse_bterm(tm_src, kernel_));
    bind(thm_name, th);
    return baseline::print_bthm(th);
  }
  std::string cmd_thm(const std::string& thm_name,
                      const std::string& expr_src) override {
    StatefulOps ops{kernel_, thms_};
    baseline::BThm th = eval_rule(ops, parse_rule_expr(expr_src));
    bind(thm_name, th);
    return baseline::print_bthm(th);
  }
  void cmd_eval(const std::string& expr_src) override {
    StatefulOps ops{kernel_, thms_};
    (void)eval_rule(ops, parse_rule_expr(expr_src));
  }
  std::string cmd_print(const std::string& thm_name) override {
    StatefulOps ops{kernel_, thms_};
    return baseline::print_bthm(ops.lookup(thm_name));
  }

 private:
  void bind(const std::string& n, const baseline::BThm& th) {
    thms_.insert_or_assign(n, th);
  }

  baseline::StatefulKernel kernel_;
  std::map<std::string, baseline::BThm> thms_;
};

}  // namespace

std::unique_ptr<Engine> make_stateless_engine(TrackMode mode) {
  return std::make_unique<StatelessEngine>(mode);
}

std::unique_ptr<Engine> make_stateful_engine() {
  return std::make_unique<StatefulEngine>();
}

// -- Script runner ----------------------------------------------------------

const char kDefaultPrelude[] =
    "tyop num 0\n"
    "const 0 : num\n"
    "const 1 : num\n";

namespace {

std::string dir_of(const std::string& path) {
  size_t slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  if (slash == 0) return "/";
  return path.substr(0, slash);
}

}  // namespace

ScriptRunner::ScriptRunner(Engine& engine, std::ostream* transcript,
                           std::ostream* diagnostics)
    : engine_(engine), transcript_(transcript), diagnostics_(diagnostics) {
  dirs_.push_back(".");
}

void ScriptRunner::emit(const std::string& line) {
  if (transcript_) (*transcript_) << line << '\n';
}

void ScriptRunner::run_line(const std::string& line, const std::string& file,
                            int lineno) {
  std::string body = trimmed(line);
  if (body.empty() || body[0] == '#') return;
  ++result_.commands;
  try {
    exec(body);
  } catch (const Failure& f) {
    emit(std::string("error: ") + f.what());
    if (diagnostics_)
      (*diagnostics_) << file << ':' << lineno << ": error: " << f.what()
                      << '\n';
    ++result_.errors;
  }
}

RunResult ScriptRunner::run_text(const std::string& text,
                                 const std::string& name) {
  size_t pos = 0;
  int lineno = 0;
  for (;;) {
    size_t nl = text.find('\n', pos);
    std::string line =
        nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++lineno;
    run_line(line, name, lineno);
    if (nl == std::string::npos) break;
    pos = nl + 1;
    if (pos == text.size()) break;
  }
  return result_;
}

RunResult ScriptRunner::run_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    if (diagnostics_)
      (*diagnostics_) << path << ": error: cannot open file\n";
    ++result_.errors;
    return result_;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  dirs_.push_back(dir_of(path));
  run_text(ss.str(), path);
  dirs_.pop_back();
  return result_;
}

void ScriptRunner::exec(const std::string& line) {
  Cursor c{line};
  std::string word = c.ident("command");
  if (word == "tyop") {
    std::string name = c.ident("tyop");
    int arity = c.number("tyop");
    c.end("tyop");
    engine_.cmd_tyop(name, arity);
    emit("tyop " + name + " " + std::to_string(arity));
    return;
  }
  if (word == "const") {
    std::string name = c.ident("const");
    c.expect(':', "const");
    std::string ty_src = c.rest();
    emit("const " + name + " : " + engine_.cmd_const(name, ty_src));
    return;
  }
  if (word == "def") {
    std::string name = c.ident("def");
    c.expect(':', "def");
    std::string eq = c.backtick("def");
    c.end("def");
    emit(name + " = " + engine_.cmd_def(name, eq));
    return;
  }
  if (word == "undo") {
    std::string name = c.ident("undo");
    c.end("undo");
    engine_.cmd_undo(name);
    emit("undo " + name);
    return;
  }
  if (word == "axiom") {
    std::string name = c.ident("axiom");
    c.expect(':', "axiom");
    std::string tm = c.backtick("axiom");
    c.end("axiom");
    emit(name + " = " + engine_.cmd_axiom(name, tm));
    return;
  }
  if (word == "thm") {
    std::string name = c.ident("thm");
    c.expect('=', "thm");
    std::string expr = c.rest();
    emit(name + " = " + engine_.cmd_thm(name, expr));
    return;
  }
  if (word == "print") {
    std::string name = c.ident("print");
    c.end("print");
    emit(engine_.cmd_print(name));
    return;
  }
  if (word == "assert_prints") {
    std::string name = c.ident("assert_prints");
    std::string tail = c.rest();
    size_t close = tail.rfind('"');
    size_t open = tail.find('"');
    if (close == std::string::npos || open == close)
      fail("assert_prints: expected a quoted string");
    if (trimmed(tail.substr(close + 1)) != "" || trimmed(tail.substr(0, open)) != "")
      fail("assert_prints: trailing input");
    std::string expect = tail.substr(open + 1, close - open - 1);
    std::string actual = engine_.cmd_print(name);
    if (actual == expect) {
      emit("assert_prints " + name + " ok");
    } else {
      emit("assert_prints " + name + " FAILED: got: " + actual);
      ++result_.failed_assertions;
    }
    return;
  }
  if (word == "assert_fails") {
    std::string tail = c.rest();
    size_t close = tail.rfind('"');
    if (close == std::string::npos || trimmed(tail.substr(close + 1)) != "")
      fail("assert_fails: expected a quoted message");
    size_t open = tail.rfind('"', close - 1);
    if (open == std::string::npos || open == close)
      fail("assert_fails: expected a quoted message");
    std::string msg = tail.substr(open + 1, close - open - 1);
    std::string rest = trimmed(tail.substr(0, open));
    if (rest.empty()) fail("assert_fails: expected a command");
    do_assert_fails(rest, msg);
    return;
  }
  if (word == "include") {
    std::string path = c.rest();
    if (path.empty()) fail("include: expected a path");
    do_include(path);
    return;
  }
  fail("unknown command: " + word);
}

void ScriptRunner::do_assert_fails(const std::string& rest,
                                   const std::string& expect) {
  static const char* const kCommands[] = {"tyop", "const", "def",  "undo",
                                          "axiom", "thm",  "print"};
  size_t wend = 0;
  while (wend < rest.size() && ident_char(rest[wend])) ++wend;
  std::string word = rest.substr(0, wend);
  bool is_command = false;
  for (const char* k : kCommands) is_command = is_command || word == k;

  std::ostream* saved = transcript_;
  transcript_ = nullptr;
  bool failed = false;
  std::string got;
  try {
    if (is_command) {
      exec(rest);
    } else {
      engine_.cmd_eval(rest);
    }
  } catch (const Failure& f) {
    failed = true;
    got = f.what();
  }
  transcript_ = saved;

  if (!failed) {
    emit("assert_fails FAILED: no failure");
    ++result_.failed_assertions;
  } else if (got.find(expect) != std::string::npos) {
    emit("assert_fails ok: " + expect);
  } else {
    emit("assert_fails FAILED: got: " + got);
    ++result_.failed_assertions;
  }
}

void ScriptRunner::do_include(const std::string& path) {
  if (include_depth_ >= 8) fail("include: too deeply nested");
  std::string full = path;
  if (!path.empty() && path[0] != '/') full = dirs_.back() + "/" + path;
  std::ifstream in(full);
  if (!in) fail("include: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  ++include_depth_;
  dirs_.push_back(dir_of(full));
  run_text(ss.str(), full);
  dirs_.pop_back();
  --include_depth_;
}

}  // namespace repl
}  // namespace taghol
