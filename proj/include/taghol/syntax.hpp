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

// Surface syntax for terms and types.
//
// The parser and printer work on small kernel-independent trees (PType,
// TTerm), so the two kernel implementations in this repository share one
// grammar and one printing routine and produce identical text by
// construction.  Each kernel converts the neutral trees to and from its own
// representation.
//
// Grammar (ASCII):
//   type   :=  appty ('->' type)?                    arrow, right associative
//   appty  :=  atomty OPNAME*                        postfix arity-1 operators
//   atomty :=  TYVAR | OPNAME0 | '(' type ')' | '(' type (',' type)+ ')' OPNAME
//   term   :=  '\' binder+ '.' term | eqterm
//   eqterm :=  appterm ('=' term)?                   '=' below application
//   appterm:=  atom+                                 left associative
//   atom   :=  IDENT annot? | '(' '=' ')' annot? | '(' term ')' annot?
//   binder :=  IDENT (':' type)?
//   annot  :=  ':' type                              binds tightest
// Type variables are identifiers starting with an uppercase letter or a
// prime.  Identifiers are runs of [A-Za-z0-9_'].  Identifiers resolve to the
// innermost binder, then to a table constant, then to a free variable.
// Unconstrained types default to bool.

#ifndef TAGHOL_SYNTAX_HPP_
#define TAGHOL_SYNTAX_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taghol/state.hpp"

namespace taghol {
namespace syntax {

// -- Neutral types -------------------------------------------------------

struct PType;
using PTypePtr = std::shared_ptr<const PType>;

struct PType {
  bool is_var;       // variable, else operator application
  std::string name;  // variable name or operator name
  std::vector<PTypePtr> args;
};

PTypePtr ptyvar(std::string name);
PTypePtr ptyapp(std::string name, std::vector<PTypePtr> args);
PTypePtr pty_bool();
PTypePtr pty_fun(PTypePtr dom, PTypePtr cod);
bool ptype_eq(const PTypePtr& a, const PTypePtr& b);

// -- Neutral terms ---------------------------------------------------------
//
// Every node carries its full type information; nothing is left to infer.

struct TTerm;
using TTermPtr = std::shared_ptr<const TTerm>;

struct TTerm {
  enum class Kind { Var, Const, Comb, Abs };
  Kind kind;
  std::string name;  // Var/Const
  PTypePtr ty;       // Var/Const: the occurrence's type
  // Const only: how the table's generic type was instantiated here, as
  // (replacement type, generic type variable name) pairs.
  std::vector<std::pair<PTypePtr, std::string>> inst;
  TTermPtr a;  // Comb: function; Abs: bound variable (a Var node)
  TTermPtr b;  // Comb: argument; Abs: body
};

TTermPtr tvar(std::string name, PTypePtr ty);
TTermPtr tconst(std::string name, PTypePtr ty,
                std::vector<std::pair<PTypePtr, std::string>> inst);
TTermPtr tcomb(TTermPtr f, TTermPtr x);
TTermPtr tabs(TTermPtr v, TTermPtr body);

// -- Table view ------------------------------------------------------------
//
// What the parser needs to know about the session: which type operators
// exist (and their arities) and the generic types of the declared constants.

class Tables {
 public:
  virtual ~Tables() = default;
  virtual std::optional<int> tyop_arity(const std::string& name) const = 0;
  // Generic type of the constant, or null when the name is not a constant.
  virtual PTypePtr const_type(const std::string& name) const = 0;
};

// -- Parsing ----------------------------------------------------------------
//
// Errors: "parse_type: unknown type operator <name>", "parse_type: wrong
// number of arguments for <name>", "parse_term: type mismatch",
// "parse_term: cannot infer type", and syntax errors carrying the byte
// offset of the offending token.

PTypePtr parse_ptype(const std::string& src, const Tables& tables);
TTermPtr parse_tterm(const std::string& src, const Tables& tables);

// -- Printing ----------------------------------------------------------------
//
// Inverse of the parser on the supported fragment.  Binders of non-bool
// variables and the first occurrence of each non-bool free variable are
// annotated; everything else prints bare.  Binders are renamed (with
// primes) when their name collides with a variable free in their body.

std::string print_ptype(const PTypePtr& ty);
std::string print_tterm(const TTermPtr& t);
std::string print_sequent(const std::vector<TTermPtr>& hyps,
                          const TTermPtr& concl);

}  // namespace syntax

// -- Stateless-kernel adapters ---------------------------------------------

// Conversions between kernel and neutral representations.  to_kernel_term
// resolves constants through the table (so they come out correctly tagged).
TypePtr to_kernel_type(const syntax::PTypePtr& ty, const SymbolTable& table);
TermPtr to_kernel_term(const syntax::TTermPtr& t, const SymbolTable& table);
syntax::PTypePtr from_kernel_type(const TypePtr& ty);
syntax::TTermPtr from_kernel_term(const TermPtr& t);

// A Tables view over a SymbolTable.
class KernelTables : public syntax::Tables {
 public:
  explicit KernelTables(const SymbolTable& table) : table_(table) {}
  std::optional<int> tyop_arity(const std::string& name) const override;
  syntax::PTypePtr const_type(const std::string& name) const override;

 private:
  const SymbolTable& table_;
};

TypePtr parse_type(const std::string& src, const SymbolTable& table);
TermPtr parse_term(const std::string& src, const SymbolTable& table);
std::string print_type(const TypePtr& ty);
std::string print_term(const TermPtr& t);

// Prints "h1, ..., hn |- concl", or "<obsolete theorem>" when any constant
// in the theorem is no longer what the table currently binds its name to
// (same name, same tag, and the occurrence's type an instance of the
// binding's type).  This keeps printed text re-parseable: stale constants
// never masquerade as current ones.
std::string print_thm(const Thm& th, const SymbolTable& table);

// True when every constant occurring in th is current per the above.
bool thm_is_current(const Thm& th, const SymbolTable& table);

}  // namespace taghol

#endif  // TAGHOL_SYNTAX_HPP_
