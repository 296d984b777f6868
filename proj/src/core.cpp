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

#include "taghol/core.hpp"

#include <algorithm>

namespace taghol {

namespace {

int sgn(int x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

int str_cmp(const std::string& a, const std::string& b) {
  return sgn(a.compare(b));
}

}  // namespace

// -- Accessors ------------------------------------------------------------

const Thm& TypeOp::defining() const {
  if (!defining_) fail("TypeOp: primitive operator has no defining theorem");
  return *defining_;
}

const std::string& Type::name() const {
  if (auto* v = std::get_if<VarData>(&v_)) return v->name;
  return std::get<AppData>(v_).op->name();
}

const TypeOpPtr& Type::op() const {
  if (auto* a = std::get_if<AppData>(&v_)) return a->op;
  fail("Type: not a type application");
}

const std::vector<TypePtr>& Type::args() const {
  if (auto* a = std::get_if<AppData>(&v_)) return a->args;
  fail("Type: not a type application");
}

const TermPtr& ConstTag::defn() const {
  if (kind_ != Kind::Defined) fail("ConstTag: not a defined constant");
  return defn_;
}

const std::string& ConstTag::tyop_name() const {
  if (kind_ != Kind::MkAbstract && kind_ != Kind::DestAbstract)
    fail("ConstTag: not a type-definition constant");
  return tyop_name_;
}

int ConstTag::tyop_arity() const {
  if (kind_ != Kind::MkAbstract && kind_ != Kind::DestAbstract)
    fail("ConstTag: not a type-definition constant");
  return tyop_arity_;
}

const Thm& ConstTag::witness() const {
  if (!witness_) fail("ConstTag: no witness theorem");
  return *witness_;
}

const std::string& Term::name() const {
  if (auto* v = std::get_if<VarData>(&v_)) return v->name;
  if (auto* c = std::get_if<ConstData>(&v_)) return c->name;
  fail("Term: not an atomic term");
}

const TypePtr& Term::ty() const {
  if (auto* v = std::get_if<VarData>(&v_)) return v->ty;
  if (auto* c = std::get_if<ConstData>(&v_)) return c->ty;
  fail("Term: not an atomic term");
}

const ConstTagPtr& Term::tag() const {
  if (auto* c = std::get_if<ConstData>(&v_)) return c->tag;
  fail("Term: not a constant");
}

const TermPtr& Term::fn() const {
  if (auto* c = std::get_if<CombData>(&v_)) return c->fn;
  fail("Term: not a combination");
}

const TermPtr& Term::arg() const {
  if (auto* c = std::get_if<CombData>(&v_)) return c->arg;
  fail("Term: not a combination");
}

const TermPtr& Term::bvar() const {
  if (auto* a = std::get_if<AbsData>(&v_)) return a->bvar;
  fail("Term: not an abstraction");
}

const TermPtr& Term::body() const {
  if (auto* a = std::get_if<AbsData>(&v_)) return a->body;
  fail("Term: not an abstraction");
}

// -- Construction -----------------------------------------------------------

TypePtr mk_tyvar(std::string name) {
  return TypePtr(new Type(Type::VarData{std::move(name)}));
}

TypePtr mk_tyapp(TypeOpPtr op, std::vector<TypePtr> args) {
  if (!op) fail("mk_tyapp: no operator");
  if (static_cast<int>(args.size()) != op->arity())
    fail("mk_tyapp: wrong number of arguments");
  return TypePtr(new Type(Type::AppData{std::move(op), std::move(args)}));
}

const TypeOpPtr& bool_op() {
  static const TypeOpPtr op = detail::Access::typrim("bool", 0);
  return op;
}

const TypeOpPtr& fun_op() {
  static const TypeOpPtr op = detail::Access::typrim("fun", 2);
  return op;
}

const TypePtr& bool_ty() {
  static const TypePtr ty = mk_tyapp(bool_op(), {});
  return ty;
}

const TypePtr& aty() {
  static const TypePtr ty = mk_tyvar("A");
  return ty;
}

TypePtr mk_fun_ty(const TypePtr& dom, const TypePtr& cod) {
  return mk_tyapp(fun_op(), {dom, cod});
}

bool is_fun_ty(const TypePtr& ty) {
  return ty->is_app() && typeop_eq(ty->op(), fun_op());
}

TermPtr mk_var(std::string name, TypePtr ty) {
  if (!ty) fail("mk_var: no type");
  return TermPtr(new Term(Term::VarData{std::move(name), std::move(ty)}));
}

TermPtr mk_comb(TermPtr fn, TermPtr arg) {
  TypePtr fty = type_of(fn);
  if (!is_fun_ty(fty) || !type_eq(fty->args()[0], type_of(arg)))
    fail("mk_comb: types do not agree");
  return TermPtr(new Term(Term::CombData{std::move(fn), std::move(arg)}));
}

TermPtr mk_abs(TermPtr bvar, TermPtr body) {
  if (!bvar->is_var()) fail("mk_abs: not a variable");
  return TermPtr(new Term(Term::AbsData{std::move(bvar), std::move(body)}));
}

// Unchecked builders for contexts where typing is preserved by construction.
namespace {

TermPtr raw_comb(TermPtr fn, TermPtr arg) {
  return detail::Access::mk_comb_unchecked(std::move(fn), std::move(arg));
}

TermPtr raw_abs(TermPtr bvar, TermPtr body) {
  return detail::Access::mk_abs_unchecked(std::move(bvar), std::move(body));
}

}  // namespace

// -- Sealed factories ---------------------------------------------------

namespace detail {

TermPtr Access::mk_const(std::string name, TypePtr ty, ConstTagPtr tag) {
  return TermPtr(
      new Term(Term::ConstData{std::move(name), std::move(ty), std::move(tag)}));
}

TermPtr Access::mk_comb_unchecked(TermPtr fn, TermPtr arg) {
  return TermPtr(new Term(Term::CombData{std::move(fn), std::move(arg)}));
}

TermPtr Access::mk_abs_unchecked(TermPtr bvar, TermPtr body) {
  return TermPtr(new Term(Term::AbsData{std::move(bvar), std::move(body)}));
}

const ConstTagPtr& Access::tag_prim() {
  static const ConstTagPtr tag(
      new ConstTag(ConstTag::Kind::Prim, nullptr, std::string(), 0, nullptr));
  return tag;
}

ConstTagPtr Access::tag_defined(TermPtr defn) {
  return ConstTagPtr(new ConstTag(ConstTag::Kind::Defined, std::move(defn),
                                  std::string(), 0, nullptr));
}

ConstTagPtr Access::tag_mk_abstract(std::string op, int arity, Thm witness) {
  return ConstTagPtr(new ConstTag(ConstTag::Kind::MkAbstract, nullptr,
                                  std::move(op), arity,
                                  std::make_shared<const Thm>(std::move(witness))));
}

ConstTagPtr Access::tag_dest_abstract(std::string op, int arity, Thm witness) {
  return ConstTagPtr(new ConstTag(ConstTag::Kind::DestAbstract, nullptr,
                                  std::move(op), arity,
                                  std::make_shared<const Thm>(std::move(witness))));
}

TypeOpPtr Access::typrim(std::string name, int arity) {
  return TypeOpPtr(new TypeOp(TypeOp::Kind::Prim, std::move(name), arity, nullptr));
}

TypeOpPtr Access::tydefined(std::string name, int arity, Thm witness) {
  return TypeOpPtr(new TypeOp(TypeOp::Kind::Defined, std::move(name), arity,
                              std::make_shared<const Thm>(std::move(witness))));
}

Thm Access::mk_thm(Context ctx, std::vector<TermPtr> hyps, TermPtr concl) {
  return Thm(std::move(ctx), std::move(hyps), std::move(concl));
}

Context Access::mk_context(int n,
                           std::shared_ptr<const std::vector<AxiomList>> hist,
                           std::uint32_t mask) {
  return Context(n, std::move(hist), mask);
}

Context Access::with_mask(const Context& c, std::uint32_t mask) {
  return Context(c.n_, c.hist_, mask);
}

}  // namespace detail

const Context& empty_context() {
  static const Context ctx = detail::Access::mk_context(
      0,
      std::make_shared<const std::vector<AxiomList>>(
          1, std::make_shared<const std::vector<TermPtr>>()),
      0);
  return ctx;
}

// -- Equality -----------------------------------------------------------

bool type_eq(const TypePtr& a, const TypePtr& b) {
  if (eqcfg::fast_path() && a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  if (a->is_var()) return a->name() == b->name();
  if (!typeop_eq(a->op(), b->op())) return false;
  const auto& xs = a->args();
  const auto& ys = b->args();
  if (xs.size() != ys.size()) return false;
  for (size_t i = 0; i < xs.size(); ++i)
    if (!type_eq(xs[i], ys[i])) return false;
  return true;
}

bool typeop_eq(const TypeOpPtr& a, const TypeOpPtr& b) {
  if (eqcfg::fast_path() && a.get() == b.get()) return true;
  if (a->kind() != b->kind() || a->arity() != b->arity() ||
      a->name() != b->name())
    return false;
  if (a->kind() == TypeOp::Kind::Prim) return true;
  if (eqcfg::fast_path() && &a->defining() == &b->defining()) return true;
  return thm_eq(a->defining(), b->defining());
}

bool tag_eq(const ConstTagPtr& a, const ConstTagPtr& b) {
  if (eqcfg::fast_path() && a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case ConstTag::Kind::Prim:
      return true;
    case ConstTag::Kind::Defined: {
      if (eqcfg::fast_path() && a->defn().get() == b->defn().get()) return true;
      eqcfg::defined_payload_walks.fetch_add(1, std::memory_order_relaxed);
      return term_eq(a->defn(), b->defn());
    }
    case ConstTag::Kind::MkAbstract:
    case ConstTag::Kind::DestAbstract: {
      if (a->tyop_arity() != b->tyop_arity() ||
          a->tyop_name() != b->tyop_name())
        return false;
      if (eqcfg::fast_path() && &a->witness() == &b->witness()) return true;
      return thm_eq(a->witness(), b->witness());
    }
  }
  return false;
}

bool context_eq(const Context& a, const Context& b) {
  if (a.size() != b.size() || a.mask() != b.mask()) return false;
  if (eqcfg::fast_path() && a.same_history(b)) return true;
  const auto& xs = *a.history().front();
  const auto& ys = *b.history().front();
  if (xs.size() != ys.size()) return false;
  for (size_t i = 0; i < xs.size(); ++i)
    if (!term_eq(xs[i], ys[i])) return false;
  return true;
}

bool thm_eq(const Thm& a, const Thm& b) {
  if (a.hyps().size() != b.hyps().size()) return false;
  if (!term_eq(a.concl(), b.concl())) return false;
  for (size_t i = 0; i < a.hyps().size(); ++i)
    if (!term_eq(a.hyps()[i], b.hyps()[i])) return false;
  return context_eq(a.context(), b.context());
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (eqcfg::fast_path() && a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Term::Kind::Var:
      return a->name() == b->name() && type_eq(a->ty(), b->ty());
    case Term::Kind::Const:
      return a->name() == b->name() && type_eq(a->ty(), b->ty()) &&
             tag_eq(a->tag(), b->tag());
    case Term::Kind::Comb:
      return term_eq(a->fn(), b->fn()) && term_eq(a->arg(), b->arg());
    case Term::Kind::Abs:
      return term_eq(a->bvar(), b->bvar()) && term_eq(a->body(), b->body());
  }
  return false;
}

// -- Orders ----------------------------------------------------------------

namespace {

int typeop_cmp(const TypeOpPtr& a, const TypeOpPtr& b);
int thm_cmp(const Thm& a, const Thm& b);

int tag_cmp(const ConstTagPtr& a, const ConstTagPtr& b) {
  if (eqcfg::fast_path() && a.get() == b.get()) return 0;
  int ka = static_cast<int>(a->kind());
  int kb = static_cast<int>(b->kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a->kind()) {
    case ConstTag::Kind::Prim:
      return 0;
    case ConstTag::Kind::Defined: {
      if (eqcfg::fast_path() && a->defn().get() == b->defn().get()) return 0;
      eqcfg::defined_payload_walks.fetch_add(1, std::memory_order_relaxed);
      return term_cmp(a->defn(), b->defn());
    }
    default: {
      if (int c = str_cmp(a->tyop_name(), b->tyop_name())) return c;
      if (a->tyop_arity() != b->tyop_arity())
        return a->tyop_arity() < b->tyop_arity() ? -1 : 1;
      if (eqcfg::fast_path() && &a->witness() == &b->witness()) return 0;
      return thm_cmp(a->witness(), b->witness());
    }
  }
}

int context_cmp(const Context& a, const Context& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.mask() != b.mask()) return a.mask() < b.mask() ? -1 : 1;
  if (eqcfg::fast_path() && a.same_history(b)) return 0;
  const auto& xs = *a.history().front();
  const auto& ys = *b.history().front();
  for (size_t i = 0; i < xs.size(); ++i)
    if (int c = term_cmp(xs[i], ys[i])) return c;
  return 0;
}

int thm_cmp(const Thm& a, const Thm& b) {
  if (a.hyps().size() != b.hyps().size())
    return a.hyps().size() < b.hyps().size() ? -1 : 1;
  for (size_t i = 0; i < a.hyps().size(); ++i)
    if (int c = term_cmp(a.hyps()[i], b.hyps()[i])) return c;
  if (int c = term_cmp(a.concl(), b.concl())) return c;
  return context_cmp(a.context(), b.context());
}

int typeop_cmp(const TypeOpPtr& a, const TypeOpPtr& b) {
  if (eqcfg::fast_path() && a.get() == b.get()) return 0;
  int ka = static_cast<int>(a->kind());
  int kb = static_cast<int>(b->kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  if (int c = str_cmp(a->name(), b->name())) return c;
  if (a->arity() != b->arity()) return a->arity() < b->arity() ? -1 : 1;
  if (a->kind() == TypeOp::Kind::Prim) return 0;
  if (eqcfg::fast_path() && &a->defining() == &b->defining()) return 0;
  return thm_cmp(a->defining(), b->defining());
}

// Rank used by the alpha-respecting order: Const < Var < Comb < Abs.
int alpha_rank(Term::Kind k) {
  switch (k) {
    case Term::Kind::Const:
      return 0;
    case Term::Kind::Var:
      return 1;
    case Term::Kind::Comb:
      return 2;
    case Term::Kind::Abs:
      return 3;
  }
  return 4;
}

// Compares two variables under the binder environment: a variable bound in
// one term is ordered by its binding position, not its name.
int ordav(const std::vector<std::pair<TermPtr, TermPtr>>& env, const TermPtr& x1,
          const TermPtr& x2) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (term_eq(x1, it->first)) return term_eq(x2, it->second) ? 0 : -1;
    if (term_eq(x2, it->second)) return 1;
  }
  if (int c = str_cmp(x1->name(), x2->name())) return c;
  return type_cmp(x1->ty(), x2->ty());
}

int orda(std::vector<std::pair<TermPtr, TermPtr>>& env, bool env_trivial,
         const TermPtr& a, const TermPtr& b) {
  if (env_trivial && eqcfg::fast_path() && a.get() == b.get()) return 0;
  int ra = alpha_rank(a->kind());
  int rb = alpha_rank(b->kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a->kind()) {
    case Term::Kind::Var:
      return ordav(env, a, b);
    case Term::Kind::Const: {
      if (int c = str_cmp(a->name(), b->name())) return c;
      if (int c = type_cmp(a->ty(), b->ty())) return c;
      return tag_cmp(a->tag(), b->tag());
    }
    case Term::Kind::Comb: {
      if (int c = orda(env, env_trivial, a->fn(), b->fn())) return c;
      return orda(env, env_trivial, a->arg(), b->arg());
    }
    case Term::Kind::Abs: {
      if (int c = type_cmp(a->bvar()->ty(), b->bvar()->ty())) return c;
      env.emplace_back(a->bvar(), b->bvar());
      bool trivial = env_trivial && term_eq(a->bvar(), b->bvar());
      int c = orda(env, trivial, a->body(), b->body());
      env.pop_back();
      return c;
    }
  }
  return 0;
}

}  // namespace

int type_cmp(const TypePtr& a, const TypePtr& b) {
  if (eqcfg::fast_path() && a.get() == b.get()) return 0;
  if (a->kind() != b->kind()) return a->is_var() ? -1 : 1;
  if (a->is_var()) return str_cmp(a->name(), b->name());
  if (int c = typeop_cmp(a->op(), b->op())) return c;
  const auto& xs = a->args();
  const auto& ys = b->args();
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  for (size_t i = 0; i < xs.size(); ++i)
    if (int c = type_cmp(xs[i], ys[i])) return c;
  return 0;
}

int term_cmp(const TermPtr& a, const TermPtr& b) {
  if (eqcfg::fast_path() && a.get() == b.get()) return 0;
  if (a->kind() != b->kind())
    return static_cast<int>(a->kind()) < static_cast<int>(b->kind()) ? -1 : 1;
  switch (a->kind()) {
    case Term::Kind::Var: {
      if (int c = str_cmp(a->name(), b->name())) return c;
      return type_cmp(a->ty(), b->ty());
    }
    case Term::Kind::Const: {
      if (int c = str_cmp(a->name(), b->name())) return c;
      if (int c = type_cmp(a->ty(), b->ty())) return c;
      return tag_cmp(a->tag(), b->tag());
    }
    case Term::Kind::Comb: {
      if (int c = term_cmp(a->fn(), b->fn())) return c;
      return term_cmp(a->arg(), b->arg());
    }
    case Term::Kind::Abs: {
      if (int c = term_cmp(a->bvar(), b->bvar())) return c;
      return term_cmp(a->body(), b->body());
    }
  }
  return 0;
}

int alpha_cmp(const TermPtr& a, const TermPtr& b) {
  std::vector<std::pair<TermPtr, TermPtr>> env;
  return orda(env, true, a, b);
}

bool aconv(const TermPtr& a, const TermPtr& b) { return alpha_cmp(a, b) == 0; }

std::vector<TermPtr> term_union(const std::vector<TermPtr>& l1,
                                const std::vector<TermPtr>& l2) {
  std::vector<TermPtr> out;
  out.reserve(l1.size() + l2.size());
  size_t i = 0, j = 0;
  while (i < l1.size() && j < l2.size()) {
    int c = alpha_cmp(l1[i], l2[j]);
    if (c == 0) {
      out.push_back(l1[i]);
      ++i;
      ++j;
    } else if (c < 0) {
      out.push_back(l1[i++]);
    } else {
      out.push_back(l2[j++]);
    }
  }
  for (; i < l1.size(); ++i) out.push_back(l1[i]);
  for (; j < l2.size(); ++j) out.push_back(l2[j]);
  return out;
}

std::vector<TermPtr> term_remove(const TermPtr& t,
                                 const std::vector<TermPtr>& l) {
  std::vector<TermPtr> out;
  out.reserve(l.size());
  for (const auto& h : l)
    if (alpha_cmp(t, h) != 0) out.push_back(h);
  return out;
}

std::vector<TermPtr> normalize_hyps(std::vector<TermPtr> hyps) {
  std::stable_sort(hyps.begin(), hyps.end(),
                   [](const TermPtr& a, const TermPtr& b) {
                     return alpha_cmp(a, b) < 0;
                   });
  std::vector<TermPtr> out;
  out.reserve(hyps.size());
  for (auto& h : hyps)
    if (out.empty() || alpha_cmp(out.back(), h) != 0) out.push_back(std::move(h));
  return out;
}

// -- Term operations ------------------------------------------------------

TypePtr type_of(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t->ty();
    case Term::Kind::Comb: {
      TypePtr fty = type_of(t->fn());
      if (!is_fun_ty(fty) || !type_eq(fty->args()[0], type_of(t->arg())))
        fail("type_of");
      return fty->args()[1];
    }
    case Term::Kind::Abs:
      return mk_fun_ty(t->bvar()->ty(), type_of(t->body()));
  }
  fail("type_of");
}

bool vfree_in(const TermPtr& v, const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Abs:
      return !term_eq(t->bvar(), v) && vfree_in(v, t->body());
    case Term::Kind::Comb:
      return vfree_in(v, t->fn()) || vfree_in(v, t->arg());
    default:
      return term_eq(t, v);
  }
}

namespace {

void frees_rec(const TermPtr& t, std::vector<TermPtr>& bound,
               std::vector<TermPtr>& out) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      for (const auto& b : bound)
        if (term_eq(b, t)) return;
      out.push_back(t);
      return;
    }
    case Term::Kind::Const:
      return;
    case Term::Kind::Comb:
      frees_rec(t->fn(), bound, out);
      frees_rec(t->arg(), bound, out);
      return;
    case Term::Kind::Abs:
      bound.push_back(t->bvar());
      frees_rec(t->body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::vector<TermPtr> frees(const TermPtr& t) {
  std::vector<TermPtr> bound, out;
  frees_rec(t, bound, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const TermPtr& a, const TermPtr& b) {
                     return term_cmp(a, b) < 0;
                   });
  std::vector<TermPtr> dedup;
  dedup.reserve(out.size());
  for (auto& v : out)
    if (dedup.empty() || term_cmp(dedup.back(), v) != 0)
      dedup.push_back(std::move(v));
  return dedup;
}

namespace {

bool freesin_rec(std::vector<TermPtr>& acc, const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      for (const auto& a : acc)
        if (term_eq(a, t)) return true;
      return false;
    }
    case Term::Kind::Const:
      return true;
    case Term::Kind::Comb:
      return freesin_rec(acc, t->fn()) && freesin_rec(acc, t->arg());
    case Term::Kind::Abs: {
      acc.push_back(t->bvar());
      bool ok = freesin_rec(acc, t->body());
      acc.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool freesin(const std::vector<TermPtr>& acc, const TermPtr& t) {
  std::vector<TermPtr> work(acc);
  return freesin_rec(work, t);
}

namespace {

void tyvars_rec(const TypePtr& ty, std::vector<TypePtr>& out) {
  if (ty->is_var()) {
    out.push_back(ty);
    return;
  }
  for (const auto& a : ty->args()) tyvars_rec(a, out);
}

std::vector<TypePtr> sort_tyvars(std::vector<TypePtr> vs) {
  std::stable_sort(vs.begin(), vs.end(),
                   [](const TypePtr& a, const TypePtr& b) {
                     return a->name() < b->name();
                   });
  std::vector<TypePtr> out;
  out.reserve(vs.size());
  for (auto& v : vs)
    if (out.empty() || out.back()->name() != v->name())
      out.push_back(std::move(v));
  return out;
}

void term_tyvars_rec(const TermPtr& t, std::vector<TypePtr>& out) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      tyvars_rec(t->ty(), out);
      return;
    case Term::Kind::Comb:
      term_tyvars_rec(t->fn(), out);
      term_tyvars_rec(t->arg(), out);
      return;
    case Term::Kind::Abs:
      term_tyvars_rec(t->bvar(), out);
      term_tyvars_rec(t->body(), out);
      return;
  }
}

}  // namespace

std::vector<TypePtr> tyvars(const TypePtr& ty) {
  std::vector<TypePtr> out;
  tyvars_rec(ty, out);
  return sort_tyvars(std::move(out));
}

std::vector<TypePtr> type_vars_in_term(const TermPtr& t) {
  std::vector<TypePtr> out;
  term_tyvars_rec(t, out);
  return sort_tyvars(std::move(out));
}

namespace {

TypePtr type_subst_rec(const TypeSubst& theta, const TypePtr& ty) {
  if (ty->is_var()) {
    for (const auto& [repl, var] : theta)
      if (type_eq(var, ty)) return repl;
    return ty;
  }
  bool changed = false;
  std::vector<TypePtr> args;
  args.reserve(ty->args().size());
  for (const auto& a : ty->args()) {
    TypePtr a2 = type_subst_rec(theta, a);
    changed = changed || a2.get() != a.get();
    args.push_back(std::move(a2));
  }
  if (!changed) return ty;
  return mk_tyapp(ty->op(), std::move(args));
}

}  // namespace

TypePtr type_subst(const TypeSubst& theta, const TypePtr& ty) {
  if (theta.empty()) return ty;
  return type_subst_rec(theta, ty);
}

TermPtr variant_var(const std::vector<TermPtr>& avoid, const TermPtr& v) {
  if (!v->is_var()) fail("variant: not a variable");
  TermPtr cur = v;
  for (;;) {
    bool clash = false;
    for (const auto& t : avoid)
      if (vfree_in(cur, t)) {
        clash = true;
        break;
      }
    if (!clash) return cur;
    cur = mk_var(cur->name() + "'", cur->ty());
  }
}

namespace {

TermPtr vsubst_rec(const TermSubst& theta, const TermPtr& tm) {
  switch (tm->kind()) {
    case Term::Kind::Var: {
      for (const auto& [repl, var] : theta)
        if (term_eq(var, tm)) return repl;
      return tm;
    }
    case Term::Kind::Const:
      return tm;
    case Term::Kind::Comb: {
      TermPtr f = vsubst_rec(theta, tm->fn());
      TermPtr x = vsubst_rec(theta, tm->arg());
      if (f.get() == tm->fn().get() && x.get() == tm->arg().get()) return tm;
      return raw_comb(std::move(f), std::move(x));
    }
    case Term::Kind::Abs: {
      const TermPtr& v = tm->bvar();
      TermSubst filtered;
      filtered.reserve(theta.size());
      for (const auto& p : theta)
        if (!term_eq(p.second, v)) filtered.push_back(p);
      if (filtered.empty()) return tm;
      TermPtr b = vsubst_rec(filtered, tm->body());
      if (b.get() == tm->body().get()) return tm;
      // Renaming is needed exactly when some replacement would put a free
      // occurrence of the binder into the body.
      bool clash = false;
      for (const auto& [repl, var] : filtered)
        if (vfree_in(v, repl) && vfree_in(var, tm->body())) {
          clash = true;
          break;
        }
      if (!clash) return raw_abs(v, std::move(b));
      TermPtr v2 = variant_var({b}, v);
      TermSubst extended;
      extended.reserve(filtered.size() + 1);
      extended.emplace_back(v2, v);
      for (const auto& p : filtered) extended.push_back(p);
      return raw_abs(v2, vsubst_rec(extended, tm->body()));
    }
  }
  fail("vsubst");
}

}  // namespace

TermPtr vsubst(const TermSubst& theta, const TermPtr& t) {
  for (const auto& [repl, var] : theta)
    if (!var->is_var() || !type_eq(type_of(repl), var->ty())) fail("vsubst");
  if (theta.empty()) return t;
  return vsubst_rec(theta, t);
}

namespace {

// Raised when instantiating a bound variable makes it collide with a
// distinct variable already in scope; caught at the offending binder.
struct InstClash {
  TermPtr var;
};

TermPtr inst_rec(std::vector<std::pair<TermPtr, TermPtr>>& env,
                 const TypeSubst& tyin, const TermPtr& tm) {
  switch (tm->kind()) {
    case Term::Kind::Var: {
      TypePtr ty2 = type_subst(tyin, tm->ty());
      TermPtr tm2 = ty2.get() == tm->ty().get() ? tm : mk_var(tm->name(), ty2);
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (term_eq(it->second, tm2)) {
          if (!term_eq(it->first, tm)) throw InstClash{tm2};
          break;
        }
      return tm2;
    }
    case Term::Kind::Const: {
      TypePtr ty2 = type_subst(tyin, tm->ty());
      if (ty2.get() == tm->ty().get()) return tm;
      return detail::Access::mk_const(tm->name(), std::move(ty2), tm->tag());
    }
    case Term::Kind::Comb: {
      TermPtr f = inst_rec(env, tyin, tm->fn());
      TermPtr x = inst_rec(env, tyin, tm->arg());
      if (f.get() == tm->fn().get() && x.get() == tm->arg().get()) return tm;
      return raw_comb(std::move(f), std::move(x));
    }
    case Term::Kind::Abs: {
      const TermPtr& y = tm->bvar();
      std::vector<std::pair<TermPtr, TermPtr>> none;
      TermPtr y2 = inst_rec(none, tyin, y);
      env.emplace_back(y, y2);
      try {
        TermPtr b = inst_rec(env, tyin, tm->body());
        env.pop_back();
        if (y2.get() == y.get() && b.get() == tm->body().get()) return tm;
        return raw_abs(std::move(y2), std::move(b));
      } catch (InstClash& clash) {
        env.pop_back();
        if (!term_eq(clash.var, y2)) throw;
        // Rename the binder away from every instantiated free variable of
        // the body, then retry on the renamed abstraction.
        std::vector<TermPtr> ifrees;
        for (const auto& f : frees(tm->body())) {
          std::vector<std::pair<TermPtr, TermPtr>> e;
          ifrees.push_back(inst_rec(e, tyin, f));
        }
        TermPtr fresh = variant_var(ifrees, y2);
        TermPtr z = mk_var(fresh->name(), y->ty());
        TermPtr renamed = raw_abs(z, vsubst_rec({{z, y}}, tm->body()));
        return inst_rec(env, tyin, renamed);
      }
    }
  }
  fail("inst_type");
}

}  // namespace

TermPtr inst_type(const TypeSubst& theta, const TermPtr& t) {
  if (theta.empty()) return t;
  std::vector<std::pair<TermPtr, TermPtr>> env;
  return inst_rec(env, theta, t);
}

TermPtr safe_mk_eq(const TermPtr& l, const TermPtr& r) {
  TypePtr lt = type_of(l);
  if (!type_eq(lt, type_of(r))) fail("safe_mk_eq");
  TermPtr eq = detail::Access::mk_const(
      "=", mk_fun_ty(lt, mk_fun_ty(lt, bool_ty())), detail::Access::tag_prim());
  return raw_comb(raw_comb(std::move(eq), l), r);
}

// -- Destructors ----------------------------------------------------------

std::pair<TermPtr, TermPtr> dest_comb(const TermPtr& t) {
  if (!t->is_comb()) fail("dest_comb");
  return {t->fn(), t->arg()};
}

std::pair<TermPtr, TermPtr> dest_abs(const TermPtr& t) {
  if (!t->is_abs()) fail("dest_abs");
  return {t->bvar(), t->body()};
}

TermPtr rator(const TermPtr& t) {
  if (!t->is_comb()) fail("rator");
  return t->fn();
}

TermPtr rand(const TermPtr& t) {
  if (!t->is_comb()) fail("rand");
  return t->arg();
}

bool is_eq(const TermPtr& t) {
  // Only the primitive equality counts.  A defined constant that happens to
  // be named "=" must not satisfy the equation patterns of the rules.
  return t->is_comb() && t->fn()->is_comb() && t->fn()->fn()->is_const() &&
         t->fn()->fn()->name() == "=" &&
         t->fn()->fn()->tag()->kind() == ConstTag::Kind::Prim;
}

std::pair<TermPtr, TermPtr> dest_eq(const TermPtr& t) {
  if (!is_eq(t)) fail("dest_eq");
  return {t->fn()->arg(), t->arg()};
}

}  // namespace taghol
