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

// The convenience layer around the functional kernel: name tables for
// constants and type operators, the definition lists, and the current axiom
// context.  All the state of a session lives here; the kernel below is pure.
//
// Because constants carry their definitions as tags, dropping a table entry
// (undo_definition) cannot compromise theorems minted earlier: they keep
// referring to the old, fully self-contained constant.

#ifndef TAGHOL_STATE_HPP_
#define TAGHOL_STATE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "taghol/kernel.hpp"

namespace taghol {

class SymbolTable {
 public:
  explicit SymbolTable(TrackMode mode = TrackMode::linear);

  TrackMode mode() const { return mode_; }
  const Context& current_ctx() const { return ctx_; }

  // -- Constants ---------------------------------------------------------

  // Most recent binding for name, or null when unbound.
  TermPtr lookup_const(const std::string& name) const;
  // Type of the current binding; fails with "get_const_type: not a constant
  // name" when unbound.
  TypePtr get_const_type(const std::string& name) const;
  // Declares a fresh primitive constant.  Fails with "new_constant: constant
  // <name> has already been declared" on a rebinding attempt.
  void new_constant(const std::string& name, const TypePtr& ty);
  // Registers an already-built constant term under name (used for the
  // constants a definition or type definition mints).  Same clash error.
  void new_constant_term(const std::string& name, const TermPtr& c);
  // Current binding re-typed under theta; fails with "mk_const: not a
  // constant name" when unbound.
  TermPtr mk_const(const std::string& name, const TypeSubst& theta) const;

  // Defines a constant from `v = t`, registers it, records the defining
  // theorem in both definition lists, and returns it.  Kernel errors pass
  // through; a bound name gives the new_constant clash error.  The table is
  // unchanged whenever an error is raised.
  Thm new_basic_definition(const TermPtr& tm);

  // Removes cname's constant binding and every definition recorded for it.
  // Unknown names are a no-op.  Theorems already minted stay valid; their
  // constants carry their definitions with them.
  void undo_definition(const std::string& cname);

  // -- Type operators ------------------------------------------------------

  TypeOpPtr lookup_tyop(const std::string& name) const;
  // Declares a fresh primitive type operator.  Fails with "new_type: type
  // <name> has already been declared" on a rebinding attempt.
  void new_tyop(const std::string& name, int arity);

  // Defines a type from a nonemptiness witness |- P x, registering the
  // operator and both coercion constants.  Returns the two characterizing
  // theorems (abs_rep, rep_abs).  All three names are checked before
  // anything is registered.
  std::pair<Thm, Thm> new_basic_type_definition(const std::string& tyname,
                                                const std::string& absname,
                                                const std::string& repname,
                                                const Thm& witness);

  // -- Axioms ----------------------------------------------------------------

  // Asserts tm, extends the current context, and returns the axiom theorem.
  Thm new_axiom(const TermPtr& tm);

  // -- Introspection (oldest entry first) ---------------------------------

  const std::vector<std::pair<std::string, TermPtr>>& term_constants() const {
    return term_constants_;
  }
  const std::vector<std::pair<std::string, TypeOpPtr>>& type_ops() const {
    return type_ops_;
  }
  const std::vector<std::pair<std::string, Thm>>& core_definitions() const {
    return core_definitions_;
  }
  const std::vector<std::pair<std::string, Thm>>& definitions() const {
    return definitions_;
  }
  const std::vector<Thm>& axioms() const { return axioms_; }

 private:
  TrackMode mode_;
  Context ctx_;
  std::vector<std::pair<std::string, TermPtr>> term_constants_;
  std::vector<std::pair<std::string, TypeOpPtr>> type_ops_;
  // HOL Light keeps two definition lists (the core one and the one the
  // derived definitional mechanisms maintain); both are updated in lock step
  // here and both are filtered by undo_definition.
  std::vector<std::pair<std::string, Thm>> core_definitions_;
  std::vector<std::pair<std::string, Thm>> definitions_;
  std::vector<Thm> axioms_;
};

}  // namespace taghol

#endif  // TAGHOL_STATE_HPP_
