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

#include "taghol/state.hpp"

#include <algorithm>

namespace taghol {

SymbolTable::SymbolTable(TrackMode mode) : mode_(mode), ctx_(empty_context()) {
  term_constants_.emplace_back("=", eq_term(aty()));
  type_ops_.emplace_back("bool", bool_op());
  type_ops_.emplace_back("fun", fun_op());
}

TermPtr SymbolTable::lookup_const(const std::string& name) const {
  for (auto it = term_constants_.rbegin(); it != term_constants_.rend(); ++it)
    if (it->first == name) return it->second;
  return nullptr;
}

TypePtr SymbolTable::get_const_type(const std::string& name) const {
  TermPtr c = lookup_const(name);
  if (!c) fail("get_const_type: not a constant name");
  return c->ty();
}

void SymbolTable::new_constant_term(const std::string& name, const TermPtr& c) {
  if (lookup_const(name))
    fail("new_constant: constant " + name + " has already been declared");
  term_constants_.emplace_back(name, c);
}

void SymbolTable::new_constant(const std::string& name, const TypePtr& ty) {
  new_constant_term(name, new_prim_const(name, ty));
}

TermPtr SymbolTable::mk_const(const std::string& name,
                              const TypeSubst& theta) const {
  TermPtr c = lookup_const(name);
  if (!c) fail("mk_const: not a constant name");
  return inst_const(c, theta);
}

Thm SymbolTable::new_basic_definition(const TermPtr& tm) {
  auto [c, dth] = new_defined_const(tm);
  new_constant_term(c->name(), c);
  core_definitions_.emplace_back(c->name(), dth);
  definitions_.emplace_back(c->name(), dth);
  return dth;
}

void SymbolTable::undo_definition(const std::string& cname) {
  auto drop_named = [&cname](auto& entries) {
    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [&cname](const auto& e) {
                                   return e.first == cname;
                                 }),
                  entries.end());
  };
  drop_named(term_constants_);
  drop_named(core_definitions_);
  drop_named(definitions_);
}

TypeOpPtr SymbolTable::lookup_tyop(const std::string& name) const {
  for (auto it = type_ops_.rbegin(); it != type_ops_.rend(); ++it)
    if (it->first == name) return it->second;
  return nullptr;
}

void SymbolTable::new_tyop(const std::string& name, int arity) {
  if (lookup_tyop(name))
    fail("new_type: type " + name + " has already been declared");
  type_ops_.emplace_back(name, new_prim_tyop(name, arity));
}

std::pair<Thm, Thm> SymbolTable::new_basic_type_definition(
    const std::string& tyname, const std::string& absname,
    const std::string& repname, const Thm& witness) {
  if (lookup_tyop(tyname))
    fail("new_type: type " + tyname + " has already been declared");
  if (lookup_const(absname))
    fail("new_constant: constant " + absname + " has already been declared");
  if (lookup_const(repname) || repname == absname)
    fail("new_constant: constant " + repname + " has already been declared");
  TypeDefinition def =
      new_defined_tyop(tyname, absname, repname, witness);
  type_ops_.emplace_back(tyname, def.op);
  term_constants_.emplace_back(absname, def.abs_const);
  term_constants_.emplace_back(repname, def.rep_const);
  return {def.abs_rep, def.rep_abs};
}

Thm SymbolTable::new_axiom(const TermPtr& tm) {
  auto [th, ctx2] = axiom_sequent(ctx_, tm, mode_);
  ctx_ = ctx2;
  axioms_.push_back(th);
  return th;
}

}  // namespace taghol
