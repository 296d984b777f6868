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

// The trusted inference layer: primitive rules, definitional principles,
// and axiom-context bookkeeping.  Everything here is a pure function; the
// kernel holds no tables and no current state.

#ifndef TAGHOL_KERNEL_HPP_
#define TAGHOL_KERNEL_HPP_

#include <utility>

#include "taghol/core.hpp"

namespace taghol {

// How theorems record the axioms they depend on.
//  none:    every theorem carries the empty context.
//  linear:  contexts form a chain; a theorem depends on some prefix of the
//           axioms introduced so far.
//  precise: like linear, plus a 32-bit mask naming the axioms actually used.
enum class TrackMode { none, linear, precise };

// -- Constants and type operators -----------------------------------------

// A primitive (undefined) constant of the given type.
TermPtr new_prim_const(std::string name, TypePtr ty);

// The polymorphic equality constant at instance type ty: ty -> ty -> bool.
TermPtr eq_term(const TypePtr& ty);

// Introduces a constant from a defining equation `v = t` whose left side is
// a variable naming the new constant.  The minted constant carries the
// equation as its tag; the result theorem is |- c = t with empty context.
// Fails with "new_definition: term not closed" when t has free variables,
// "new_definition: Type variables not reflected in constant" when t has type
// variables the constant's type lacks, and "new_basic_definition" when the
// term is not an equation of the required shape.
std::pair<TermPtr, Thm> new_defined_const(const TermPtr& defn);

// Re-types a constant under a type substitution, keeping its tag.
// Fails with "inst_const: not a constant".
TermPtr inst_const(const TermPtr& c, const TypeSubst& theta);

// A primitive type operator of the given arity.
TypeOpPtr new_prim_tyop(std::string name, int arity);

// Result of a type definition: the operator, the two coercion constants,
// and the characterizing theorems |- abs(rep a) = a and
// |- P r = (rep(abs r) = r).
struct TypeDefinition {
  TypeOpPtr op;
  TermPtr abs_const;
  TermPtr rep_const;
  Thm abs_rep;
  Thm rep_abs;
};

// Carves a new type from the subset of type_of(t) described by P, given a
// witness |- P t with no hypotheses and closed P.  Both returned theorems
// inherit the witness's context.  Fails with "new_basic_type_definition"
// when the witness has hypotheses, is not an application, or P is open.
TypeDefinition new_defined_tyop(const std::string& tyname,
                                const std::string& absname,
                                const std::string& repname, const Thm& witness);

// -- Primitive inference rules ---------------------------------------------

Thm refl(const TermPtr& t);                           // |- t = t
Thm trans(const Thm& a, const Thm& b);                // "TRANS"
Thm mk_comb_rule(const Thm& fth, const Thm& xth);     // "MK_COMB"
Thm abs_rule(const TermPtr& v, const Thm& th);        // "ABS"
Thm beta(const TermPtr& t);                           // "BETA"
Thm assume(const TermPtr& t);                         // "ASSUME"
Thm eq_mp(const Thm& eq, const Thm& th);              // "EQ_MP"
Thm deduct_antisym(const Thm& a, const Thm& b);
Thm inst_type_rule(const TypeSubst& theta, const Thm& th);
Thm inst_rule(const TermSubst& theta, const Thm& th);  // "INST"

// -- Axiom contexts -----------------------------------------------------

// Extends ctx with a new boolean axiom, returning the axiom theorem and the
// extended context (both the same context value).  Under precise tracking
// the theorem's mask has exactly the new axiom's bit set; the 33rd axiom
// fails with "axiom_sequent: mask full".  Non-boolean terms fail with
// "new_axiom".  Under TrackMode::none the result carries the empty context.
std::pair<Thm, Context> axiom_sequent(const Context& ctx, const TermPtr& tm,
                                      TrackMode mode);

// Combines the contexts of two premises: identical histories merge for
// free, otherwise the shorter history must match the longer one's entry at
// the length difference (an indexed, identity-accelerated list comparison;
// the history is never walked).  Masks are or-ed.  Incompatible contexts
// fail with "merge_contexts".
Context merge_contexts(const Context& a, const Context& b);

}  // namespace taghol

#endif  // TAGHOL_KERNEL_HPP_
