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

// Core datatypes of a purely functional HOL kernel.
//
// Constants and type operators carry their defining equation (or defining
// theorem) as an immutable tag, so a name alone never identifies a constant:
// two constants are equal only if name, type, and tag all agree.  All nodes
// are immutable and shared through shared_ptr, which makes pointer identity
// a sound fast path for every comparison below.

#ifndef TAGHOL_CORE_HPP_
#define TAGHOL_CORE_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace taghol {

// Error type for every kernel-level failure; what() carries the same short
// messages a failwith-style kernel would produce ("TRANS", "vsubst", ...).
class Failure : public std::runtime_error {
 public:
  explicit Failure(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Failure(msg); }

class Type;
class TypeOp;
class Term;
class ConstTag;
class Thm;

using TypePtr = std::shared_ptr<const Type>;
using TypeOpPtr = std::shared_ptr<const TypeOp>;
using TermPtr = std::shared_ptr<const Term>;
using ConstTagPtr = std::shared_ptr<const ConstTag>;

namespace detail {
struct Access;  // sole constructor of sealed values (tags, theorems, contexts)
}

// Knobs for the equality instrumentation.  The fast path toggle exists only
// so tests can show that pointer identity never changes a verdict and that
// it is what keeps deep definition tags cheap to compare; leave it on.
namespace eqcfg {
inline std::atomic<bool> identity_fast_path{true};
// Number of times a comparison had to walk into a Defined tag payload
// instead of deciding by pointer identity.
inline std::atomic<std::uint64_t> defined_payload_walks{0};

inline bool fast_path() {
  return identity_fast_path.load(std::memory_order_relaxed);
}
}  // namespace eqcfg

// -- Axiom contexts -----------------------------------------------------
//
// A context is the list of axioms a theorem may depend on, kept as an array
// of axiom lists of strictly decreasing length (front entry first, last
// entry empty).  Pushing an axiom copies the outer array but shares every
// inner list, so two contexts from the same chain expose shared list nodes
// and can be merged by an indexed pointer comparison instead of a walk.

using AxiomList = std::shared_ptr<const std::vector<TermPtr>>;

class Context {
 public:
  // Number of axioms recorded (the front history entry has this length).
  int size() const { return n_; }
  const std::vector<AxiomList>& history() const { return *hist_; }
  // Dependency bitmask; only populated under precise tracking.
  std::uint32_t mask() const { return mask_; }
  bool same_history(const Context& o) const { return hist_ == o.hist_; }

 private:
  Context(int n, std::shared_ptr<const std::vector<AxiomList>> hist,
          std::uint32_t mask)
      : n_(n), hist_(std::move(hist)), mask_(mask) {}

  int n_;
  std::shared_ptr<const std::vector<AxiomList>> hist_;
  std::uint32_t mask_;

  friend struct detail::Access;
};

// The shared context with no axioms; every merge against it is trivial.
const Context& empty_context();

// -- Theorems ------------------------------------------------------------
//
// Sequent(context, hyps, concl).  Only the inference rules in kernel.hpp can
// construct one; holding a Thm is the certificate that it was derived.
// Hypotheses are kept sorted in the canonical term order and deduplicated up
// to alpha-equivalence.

class Thm {
 public:
  Thm(const Thm&) = default;
  Thm(Thm&&) = default;
  Thm& operator=(const Thm&) = default;
  Thm& operator=(Thm&&) = default;

  const Context& context() const { return ctx_; }
  const std::vector<TermPtr>& hyps() const { return hyps_; }
  const TermPtr& concl() const { return concl_; }

 private:
  Thm(Context ctx, std::vector<TermPtr> hyps, TermPtr concl)
      : ctx_(std::move(ctx)), hyps_(std::move(hyps)), concl_(std::move(concl)) {}

  Context ctx_;
  std::vector<TermPtr> hyps_;
  TermPtr concl_;

  friend struct detail::Access;
};

// -- Type operators -------------------------------------------------------

class TypeOp {
 public:
  enum class Kind { Prim, Defined };

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  // Defining theorem of a Defined operator; fails on a primitive one.
  const Thm& defining() const;

 private:
  TypeOp(Kind kind, std::string name, int arity,
         std::shared_ptr<const Thm> defining)
      : kind_(kind),
        name_(std::move(name)),
        arity_(arity),
        defining_(std::move(defining)) {}

  Kind kind_;
  std::string name_;
  int arity_;
  std::shared_ptr<const Thm> defining_;  // null iff Prim

  friend struct detail::Access;
};

// The two primitive operators every kernel starts from, created once.
const TypeOpPtr& bool_op();
const TypeOpPtr& fun_op();

// -- Types ----------------------------------------------------------------

class Type {
 public:
  enum class Kind { Var, App };

  Kind kind() const {
    return std::holds_alternative<VarData>(v_) ? Kind::Var : Kind::App;
  }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_app() const { return kind() == Kind::App; }

  // Var: the variable's name.  App: the operator's name.
  const std::string& name() const;
  const TypeOpPtr& op() const;             // App only
  const std::vector<TypePtr>& args() const;  // App only

 private:
  struct VarData {
    std::string name;
  };
  struct AppData {
    TypeOpPtr op;
    std::vector<TypePtr> args;
  };

  explicit Type(VarData d) : v_(std::move(d)) {}
  explicit Type(AppData d) : v_(std::move(d)) {}

  std::variant<VarData, AppData> v_;

  friend TypePtr mk_tyvar(std::string name);
  friend TypePtr mk_tyapp(TypeOpPtr op, std::vector<TypePtr> args);
};

TypePtr mk_tyvar(std::string name);
// Applies op to args; fails with "mk_tyapp" when the arity does not match.
TypePtr mk_tyapp(TypeOpPtr op, std::vector<TypePtr> args);

const TypePtr& bool_ty();
const TypePtr& aty();  // the type variable A, as used by the equality constant
TypePtr mk_fun_ty(const TypePtr& dom, const TypePtr& cod);
bool is_fun_ty(const TypePtr& ty);

// -- Constant tags ----------------------------------------------------------
//
// The tag is what makes constants self-contained: a defined constant carries
// its defining equation, the two constants minted by a type definition carry
// the witness theorem.  Tags are shared, so re-typing a constant (inst_const)
// copies one pointer and comparisons of related constants stay O(1).

class ConstTag {
 public:
  enum class Kind { Prim, Defined, MkAbstract, DestAbstract };

  Kind kind() const { return kind_; }
  const TermPtr& defn() const;          // Defined only
  const std::string& tyop_name() const;  // MkAbstract/DestAbstract only
  int tyop_arity() const;                // MkAbstract/DestAbstract only
  const Thm& witness() const;            // MkAbstract/DestAbstract only

 private:
  ConstTag(Kind kind, TermPtr defn, std::string tyop_name, int tyop_arity,
           std::shared_ptr<const Thm> witness)
      : kind_(kind),
        defn_(std::move(defn)),
        tyop_name_(std::move(tyop_name)),
        tyop_arity_(tyop_arity),
        witness_(std::move(witness)) {}

  Kind kind_;
  TermPtr defn_;           // Defined: the defining equation `c = t`
  std::string tyop_name_;  // MkAbstract/DestAbstract: the defined type's name
  int tyop_arity_ = 0;
  std::shared_ptr<const Thm> witness_;

  friend struct detail::Access;
};

// -- Terms ------------------------------------------------------------------

class Term {
 public:
  enum class Kind { Var, Const, Comb, Abs };

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_comb() const { return kind() == Kind::Comb; }
  bool is_abs() const { return kind() == Kind::Abs; }

  const std::string& name() const;  // Var/Const
  const TypePtr& ty() const;        // Var/Const
  const ConstTagPtr& tag() const;   // Const
  const TermPtr& fn() const;        // Comb
  const TermPtr& arg() const;       // Comb
  const TermPtr& bvar() const;      // Abs
  const TermPtr& body() const;      // Abs

 private:
  struct VarData {
    std::string name;
    TypePtr ty;
  };
  struct ConstData {
    std::string name;
    TypePtr ty;
    ConstTagPtr tag;
  };
  struct CombData {
    TermPtr fn;
    TermPtr arg;
  };
  struct AbsData {
    TermPtr bvar;
    TermPtr body;
  };

  explicit Term(VarData d) : v_(std::move(d)) {}
  explicit Term(ConstData d) : v_(std::move(d)) {}
  explicit Term(CombData d) : v_(std::move(d)) {}
  explicit Term(AbsData d) : v_(std::move(d)) {}

  std::variant<VarData, ConstData, CombData, AbsData> v_;

  friend struct detail::Access;
  friend TermPtr mk_var(std::string name, TypePtr ty);
  friend TermPtr mk_comb(TermPtr fn, TermPtr arg);
  friend TermPtr mk_abs(TermPtr bvar, TermPtr body);
};

TermPtr mk_var(std::string name, TypePtr ty);
// Fails with "mk_comb: types do not agree" unless fn has a function type
// whose domain equals the argument's type.
TermPtr mk_comb(TermPtr fn, TermPtr arg);
// Fails with "mk_abs: not a variable" unless bvar is a Var.
TermPtr mk_abs(TermPtr bvar, TermPtr body);

// -- Sealed factories ---------------------------------------------------
//
// Everything below detail::Access is internal to the kernel modules; the
// theorem type stays unforgeable because only these factories reach the
// private constructors.

namespace detail {
struct Access {
  static TermPtr mk_const(std::string name, TypePtr ty, ConstTagPtr tag);
  // Builders that skip the public constructors' type checks, for rule code
  // where well-typedness is preserved by construction.
  static TermPtr mk_comb_unchecked(TermPtr fn, TermPtr arg);
  static TermPtr mk_abs_unchecked(TermPtr bvar, TermPtr body);
  static const ConstTagPtr& tag_prim();
  static ConstTagPtr tag_defined(TermPtr defn);
  static ConstTagPtr tag_mk_abstract(std::string op, int arity, Thm witness);
  static ConstTagPtr tag_dest_abstract(std::string op, int arity, Thm witness);
  static TypeOpPtr typrim(std::string name, int arity);
  static TypeOpPtr tydefined(std::string name, int arity, Thm witness);
  static Thm mk_thm(Context ctx, std::vector<TermPtr> hyps, TermPtr concl);
  static Context mk_context(int n,
                            std::shared_ptr<const std::vector<AxiomList>> hist,
                            std::uint32_t mask);
  // Same history, different dependency mask (used when merging contexts).
  static Context with_mask(const Context& c, std::uint32_t mask);
};
}  // namespace detail

// -- Equality -----------------------------------------------------------
//
// Structural equality with a pointer-identity short circuit at every level.
// Two constants are equal iff name, type, and tag all agree, so a constant
// and its undone-then-redefined namesake always compare unequal.

bool type_eq(const TypePtr& a, const TypePtr& b);
bool typeop_eq(const TypeOpPtr& a, const TypeOpPtr& b);
bool tag_eq(const ConstTagPtr& a, const ConstTagPtr& b);
bool context_eq(const Context& a, const Context& b);
bool thm_eq(const Thm& a, const Thm& b);
bool term_eq(const TermPtr& a, const TermPtr& b);

// -- Orders ---------------------------------------------------------------
//
// term_cmp is a plain structural total order.  alpha_cmp compares bound
// variables positionally and is therefore a total order on alpha-equivalence
// classes; it is the canonical order used for hypothesis lists.

int type_cmp(const TypePtr& a, const TypePtr& b);
int term_cmp(const TermPtr& a, const TermPtr& b);
int alpha_cmp(const TermPtr& a, const TermPtr& b);
bool aconv(const TermPtr& a, const TermPtr& b);

// Sorted-merge union / removal on canonically ordered, alpha-deduplicated
// hypothesis lists.
std::vector<TermPtr> term_union(const std::vector<TermPtr>& l1,
                                const std::vector<TermPtr>& l2);
std::vector<TermPtr> term_remove(const TermPtr& t,
                                 const std::vector<TermPtr>& l);
std::vector<TermPtr> normalize_hyps(std::vector<TermPtr> hyps);

// -- Term operations ------------------------------------------------------

// Computes the type, checking applications as it goes; fails with "type_of"
// on an ill-formed application.
TypePtr type_of(const TermPtr& t);

bool vfree_in(const TermPtr& v, const TermPtr& t);
// Free variables, deduplicated and in the canonical order.
std::vector<TermPtr> frees(const TermPtr& t);
// True iff every free variable of t occurs in acc.
bool freesin(const std::vector<TermPtr>& acc, const TermPtr& t);

// Type variables, deduplicated and sorted by name.
std::vector<TypePtr> tyvars(const TypePtr& ty);
std::vector<TypePtr> type_vars_in_term(const TermPtr& t);

// Substitutions are (replacement, variable) pairs, most recent first.
using TypeSubst = std::vector<std::pair<TypePtr, TypePtr>>;
using TermSubst = std::vector<std::pair<TermPtr, TermPtr>>;

// Applies a type substitution; returns the identical node when nothing
// changes (so the empty substitution is the identity on nodes).
TypePtr type_subst(const TypeSubst& theta, const TypePtr& ty);

// Capture-avoiding substitution of terms for free variables.  Bound
// variables are renamed by appending primes until fresh.  Fails with
// "vsubst" when a pair does not map a variable to a term of its type.
TermPtr vsubst(const TermSubst& theta, const TermPtr& t);

// Instantiates type variables throughout a term, renaming bound variables
// whose instantiated form would capture a free variable.  Constant tags are
// preserved untouched.
TermPtr inst_type(const TypeSubst& theta, const TermPtr& t);

// First variable in v, v', v'', ... that is not free in any avoid term.
TermPtr variant_var(const std::vector<TermPtr>& avoid, const TermPtr& v);

// Builds the equation l = r after checking both sides have the same type;
// fails with "safe_mk_eq" otherwise.  Consults no tables: the equality
// constant is built directly at the needed type.
TermPtr safe_mk_eq(const TermPtr& l, const TermPtr& r);

// -- Destructors ----------------------------------------------------------

std::pair<TermPtr, TermPtr> dest_comb(const TermPtr& t);  // "dest_comb"
std::pair<TermPtr, TermPtr> dest_abs(const TermPtr& t);   // "dest_abs"
TermPtr rator(const TermPtr& t);
TermPtr rand(const TermPtr& t);
bool is_eq(const TermPtr& t);
std::pair<TermPtr, TermPtr> dest_eq(const TermPtr& t);  // "dest_eq"

}  // namespace taghol

#endif  // TAGHOL_CORE_HPP_
