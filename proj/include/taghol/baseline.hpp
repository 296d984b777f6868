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

// A conventional stateful HOL kernel, used as a differential-testing oracle
// and benchmark baseline for the tagged kernel.
//
// Constants here are identified by name and type alone; the tables of
// declared types, constants, definitions, and axioms live inside the kernel.
// Defining a bound name again fails, and there is no sound way to undo a
// definition.  The inference rules and their error messages match the
// tagged kernel's, and the two implementations share no kernel code, so
// replaying one script on both and comparing transcripts is a meaningful
// test.

#ifndef TAGHOL_BASELINE_HPP_
#define TAGHOL_BASELINE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taghol/core.hpp"  // Failure / fail only
#include "taghol/syntax.hpp"

namespace taghol {
namespace baseline {

// -- Datatypes ---------------------------------------------------------------

struct BType;
using BTypePtr = std::shared_ptr<const BType>;

struct BType {
  bool is_var;
  std::string name;  // variable name or operator name
  std::vector<BTypePtr> args;
};

BTypePtr mk_vartype(std::string name);
BTypePtr mk_tyapp(std::string name, std::vector<BTypePtr> args);
const BTypePtr& bool_ty();
BTypePtr mk_fun_ty(const BTypePtr& dom, const BTypePtr& cod);

struct BTerm;
using BTermPtr = std::shared_ptr<const BTerm>;

struct BTerm {
  enum class Kind { Var, Const, Comb, Abs };
  Kind kind;
  std::string name;  // Var/Const
  BTypePtr ty;       // Var/Const
  BTermPtr a, b;     // Comb: fn/arg; Abs: bvar/body
};

BTermPtr mk_var(std::string name, BTypePtr ty);
BTermPtr mk_comb(BTermPtr f, BTermPtr x);  // "mk_comb: types do not agree"
BTermPtr mk_abs(BTermPtr v, BTermPtr body);  // "mk_abs: not a variable"

class StatefulKernel;

class BThm {
 public:
  const std::vector<BTermPtr>& hyps() const { return hyps_; }
  const BTermPtr& concl() const { return concl_; }

 private:
  BThm(std::vector<BTermPtr> hyps, BTermPtr concl)
      : hyps_(std::move(hyps)), concl_(std::move(concl)) {}

  std::vector<BTermPtr> hyps_;
  BTermPtr concl_;

  friend class StatefulKernel;
};

// -- Pure term operations ---------------------------------------------------

bool type_eq(const BTypePtr& a, const BTypePtr& b);
int type_cmp(const BTypePtr& a, const BTypePtr& b);
bool term_eq(const BTermPtr& a, const BTermPtr& b);
int alpha_cmp(const BTermPtr& a, const BTermPtr& b);
bool aconv(const BTermPtr& a, const BTermPtr& b);

BTypePtr type_of(const BTermPtr& t);  // "type_of"
bool vfree_in(const BTermPtr& v, const BTermPtr& t);
std::vector<BTermPtr> frees(const BTermPtr& t);
bool freesin(const std::vector<BTermPtr>& acc, const BTermPtr& t);
std::vector<BTypePtr> tyvars(const BTypePtr& ty);
std::vector<BTypePtr> type_vars_in_term(const BTermPtr& t);

using BTypeSubst = std::vector<std::pair<BTypePtr, BTypePtr>>;
using BTermSubst = std::vector<std::pair<BTermPtr, BTermPtr>>;

BTypePtr type_subst(const BTypeSubst& theta, const BTypePtr& ty);
BTermPtr vsubst(const BTermSubst& theta, const BTermPtr& t);  // "vsubst"
BTermPtr inst(const BTypeSubst& theta, const BTermPtr& t);
BTermPtr safe_mk_eq(const BTermPtr& l, const BTermPtr& r);  // "safe_mk_eq"
bool is_eq(const BTermPtr& t);
std::pair<BTermPtr, BTermPtr> dest_eq(const BTermPtr& t);  // "dest_eq"
BTermPtr rator(const BTermPtr& t);  // "rator"

// -- The kernel ------------------------------------------------------------
//
// Rules are members because the theorem constructor is sealed inside; they
// still consult no state.  The error strings equal the tagged kernel's.

class StatefulKernel {
 public:
  StatefulKernel();  // bool/fun declared; "=" : A->A->bool declared

  // Inference rules.
  BThm refl(const BTermPtr& t) const;
  BThm trans(const BThm& a, const BThm& b) const;               // "TRANS"
  BThm mk_comb_rule(const BThm& f, const BThm& x) const;        // "MK_COMB"
  BThm abs_rule(const BTermPtr& v, const BThm& th) const;       // "ABS"
  BThm beta(const BTermPtr& t) const;                           // "BETA"
  BThm assume(const BTermPtr& t) const;                         // "ASSUME"
  BThm eq_mp(const BThm& eq, const BThm& th) const;             // "EQ_MP"
  BThm deduct_antisym(const BThm& a, const BThm& b) const;
  BThm inst_type_rule(const BTypeSubst& theta, const BThm& th) const;
  BThm inst_rule(const BTermSubst& theta, const BThm& th) const;  // "INST"

  // Tables.
  std::optional<int> get_type_arity(const std::string& name) const;
  void new_type(const std::string& name, int arity);
  BTypePtr lookup_const_type(const std::string& name) const;  // null if absent
  BTypePtr get_const_type(const std::string& name) const;
  void new_constant(const std::string& name, const BTypePtr& ty);
  BTermPtr mk_const(const std::string& name, const BTypeSubst& theta) const;

  // Definitional mechanisms (these do mutate the tables).
  BThm new_basic_definition(const BTermPtr& tm);
  std::pair<BThm, BThm> new_basic_type_definition(const std::string& tyname,
                                                  const std::string& absname,
                                                  const std::string& repname,
                                                  const BThm& witness);
  BThm new_axiom(const BTermPtr& tm);

  // Introspection (oldest first).
  const std::vector<std::pair<std::string, int>>& types() const {
    return types_;
  }
  const std::vector<std::pair<std::string, BTypePtr>>& constants() const {
    return constants_;
  }
  const std::vector<std::pair<std::string, BThm>>& definitions() const {
    return definitions_;
  }
  const std::vector<BThm>& axioms() const { return axioms_; }

 private:
  static BThm sequent(std::vector<BTermPtr> hyps, BTermPtr concl) {
    return BThm(std::move(hyps), std::move(concl));
  }

  std::vector<std::pair<std::string, int>> types_;
  std::vector<std::pair<std::string, BTypePtr>> constants_;
  std::vector<std::pair<std::string, BThm>> definitions_;
  std::vector<BThm> axioms_;
};

// -- Surface syntax adapters -------------------------------------------------

syntax::PTypePtr from_btype(const BTypePtr& ty);
BTypePtr to_btype(const syntax::PTypePtr& ty, const StatefulKernel& k);
syntax::TTermPtr from_bterm(const BTermPtr& t);
BTermPtr to_bterm(const syntax::TTermPtr& t, const StatefulKernel& k);

class BaselineTables : public syntax::Tables {
 public:
  explicit BaselineTables(const StatefulKernel& k) : k_(k) {}
  std::optional<int> tyop_arity(const std::string& name) const override;
  syntax::PTypePtr const_type(const std::string& name) const override;

 private:
  const StatefulKernel& k_;
};

BTypePtr parse_btype(const std::string& src, const StatefulKernel& k);
BTermPtr parse_bterm(const std::string& src, const StatefulKernel& k);
std::string print_btype(const BTypePtr& ty);
std::string print_bterm(const BTermPtr& t);
// No currency guard is possible here: untagged constants carry no history,
// which is exactly the printing hazard the tagged kernel removes.
std::string print_bthm(const BThm& th);

}  // namespace baseline
}  // namespace taghol

#endif  // TAGHOL_BASELINE_HPP_
