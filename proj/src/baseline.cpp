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

#include "taghol/baseline.hpp"

#include <algorithm>

namespace taghol {
namespace baseline {

// -- Types -------------------------------------------------------------------

BTypePtr mk_vartype(std::string name) {
  auto ty = std::make_shared<BType>();
  ty->is_var = true;
  ty->name = std::move(name);
  return ty;
}

BTypePtr mk_tyapp(std::string name, std::vector<BTypePtr> args) {
  auto ty = std::make_shared<BType>();
  ty->is_var = false;
  ty->name = std::move(name);
  ty->args = std::move(args);
  return ty;
}

const BTypePtr& bool_ty() {
  static const BTypePtr ty = mk_tyapp("bool", {});
  return ty;
}

BTypePtr mk_fun_ty(const BTypePtr& dom, const BTypePtr& cod) {
  return mk_tyapp("fun", {dom, cod});
}

static bool is_fun_ty(const BTypePtr& ty) {
  return !ty->is_var && ty->name == "fun" && ty->args.size() == 2;
}

int type_cmp(const BTypePtr& a, const BTypePtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->is_var != b->is_var) return a->is_var ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (a->args.size() != b->args.size())
    return a->args.size() < b->args.size() ? -1 : 1;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (int c = type_cmp(a->args[i], b->args[i])) return c;
  return 0;
}

bool type_eq(const BTypePtr& a, const BTypePtr& b) {
  return type_cmp(a, b) == 0;
}

// -- Terms -------------------------------------------------------------------

static BTermPtr make_term(BTerm::Kind kind, std::string name, BTypePtr ty,
                          BTermPtr a, BTermPtr b) {
  auto t = std::make_shared<BTerm>();
  t->kind = kind;
  t->name = std::move(name);
  t->ty = std::move(ty);
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

BTermPtr mk_var(std::string name, BTypePtr ty) {
  return make_term(BTerm::Kind::Var, std::move(name), std::move(ty), nullptr,
                   nullptr);
}

static BTermPtr raw_const(std::string name, BTypePtr ty) {
  return make_term(BTerm::Kind::Const, std::move(name), std::move(ty), nullptr,
                   nullptr);
}

static BTermPtr raw_comb(BTermPtr f, BTermPtr x) {
  return make_term(BTerm::Kind::Comb, {}, nullptr, std::move(f), std::move(x));
}

static BTermPtr raw_abs(BTermPtr v, BTermPtr body) {
  return make_term(BTerm::Kind::Abs, {}, nullptr, std::move(v),
                   std::move(body));
}

BTypePtr type_of(const BTermPtr& t) {
  switch (t->kind) {
    case BTerm::Kind::Var:
    case BTerm::Kind::Const:
      return t->ty;
    case BTerm::Kind::Comb: {
      BTypePtr fty = type_of(t->a);
      if (!is_fun_ty(fty) || !type_eq(fty->args[0], type_of(t->b)))
        fail("type_of");
      return fty->args[1];
    }
    case BTerm::Kind::Abs:
      return mk_fun_ty(t->a->ty, type_of(t->b));
  }
  fail("type_of");
}

BTermPtr mk_comb(BTermPtr f, BTermPtr x) {
  BTypePtr fty = type_of(f);
  if (!is_fun_ty(fty) || !type_eq(fty->args[0], type_of(x)))
    fail("mk_comb: types do not agree");
  return raw_comb(std::move(f), std::move(x));
}

BTermPtr mk_abs(BTermPtr v, BTermPtr body) {
  if (v->kind != BTerm::Kind::Var) fail("mk_abs: not a variable");
  return raw_abs(std::move(v), std::move(body));
}

bool term_eq(const BTermPtr& a, const BTermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case BTerm::Kind::Var:
    case BTerm::Kind::Const:
      return a->name == b->name && type_eq(a->ty, b->ty);
    case BTerm::Kind::Comb:
    case BTerm::Kind::Abs:
      return term_eq(a->a, b->a) && term_eq(a->b, b->b);
  }
  return false;
}

// Structural order used for sorting free-variable lists.
static int term_cmp(const BTermPtr& a, const BTermPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind)
    return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
  switch (a->kind) {
    case BTerm::Kind::Var:
    case BTerm::Kind::Const: {
      if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
      return type_cmp(a->ty, b->ty);
    }
    case BTerm::Kind::Comb:
    case BTerm::Kind::Abs: {
      if (int c = term_cmp(a->a, b->a)) return c;
      return term_cmp(a->b, b->b);
    }
  }
  return 0;
}

namespace {

// Alpha-respecting order.  Constants sort before variables, variables
// before applications, applications before abstractions; bound variables
// compare by binding position, innermost binder first.
int rank(BTerm::Kind k) {
  switch (k) {
    case BTerm::Kind::Const:
      return 0;
    case BTerm::Kind::Var:
      return 1;
    case BTerm::Kind::Comb:
      return 2;
    case BTerm::Kind::Abs:
      return 3;
  }
  return 4;
}

using Env = std::vector<std::pair<BTermPtr, BTermPtr>>;

int ordav(const Env& env, const BTermPtr& x1, const BTermPtr& x2) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (term_eq(x1, it->first)) return term_eq(x2, it->second) ? 0 : -1;
    if (term_eq(x2, it->second)) return 1;
  }
  if (int c = x1->name.compare(x2->name)) return c < 0 ? -1 : 1;
  return type_cmp(x1->ty, x2->ty);
}

int orda(Env& env, const BTermPtr& a, const BTermPtr& b) {
  if (env.empty() && a.get() == b.get()) return 0;
  int ra = rank(a->kind);
  int rb = rank(b->kind);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a->kind) {
    case BTerm::Kind::Var:
      return ordav(env, a, b);
    case BTerm::Kind::Const: {
      if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
      return type_cmp(a->ty, b->ty);
    }
    case BTerm::Kind::Comb: {
      if (int c = orda(env, a->a, b->a)) return c;
      return orda(env, a->b, b->b);
    }
    case BTerm::Kind::Abs: {
      if (int c = type_cmp(a->a->ty, b->a->ty)) return c;
      env.emplace_back(a->a, b->a);
      int c = orda(env, a->b, b->b);
      env.pop_back();
      return c;
    }
  }
  return 0;
}

}  // namespace

int alpha_cmp(const BTermPtr& a, const BTermPtr& b) {
  Env env;
  return orda(env, a, b);
}

bool aconv(const BTermPtr& a, const BTermPtr& b) {
  return alpha_cmp(a, b) == 0;
}

// -- Hypothesis lists ---------------------------------------------------------

static std::vector<BTermPtr> normalize_hyps(std::vector<BTermPtr> hyps) {
  std::stable_sort(hyps.begin(), hyps.end(),
                   [](const BTermPtr& a, const BTermPtr& b) {
                     return alpha_cmp(a, b) < 0;
                   });
  std::vector<BTermPtr> out;
  out.reserve(hyps.size());
  for (auto& h : hyps)
    if (out.empty() || alpha_cmp(out.back(), h) != 0)
      out.push_back(std::move(h));
  return out;
}

static std::vector<BTermPtr> term_union(const std::vector<BTermPtr>& l1,
                                        const std::vector<BTermPtr>& l2) {
  std::vector<BTermPtr> out;
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

static std::vector<BTermPtr> term_remove(const BTermPtr& t,
                                         const std::vector<BTermPtr>& l) {
  std::vector<BTermPtr> out;
  out.reserve(l.size());
  for (const auto& h : l)
    if (alpha_cmp(t, h) != 0) out.push_back(h);
  return out;
}

template <typename F>
static std::vector<BTermPtr> term_image(const std::vector<BTermPtr>& hyps,
                                        F&& f) {
  std::vector<BTermPtr> out;
  out.reserve(hyps.size());
  for (const auto& h : hyps) out.push_back(f(h));
  return normalize_hyps(std::move(out));
}

// -- Free variables and type variables ----------------------------------------

bool vfree_in(const BTermPtr& v, const BTermPtr& t) {
  switch (t->kind) {
    case BTerm::Kind::Abs:
      return !term_eq(t->a, v) && vfree_in(v, t->b);
    case BTerm::Kind::Comb:
      return vfree_in(v, t->a) || vfree_in(v, t->b);
    default:
      return term_eq(t, v);
  }
}

static void frees_rec(const BTermPtr& t, std::vector<BTermPtr>& bound,
                      std::vector<BTermPtr>& out) {
  switch (t->kind) {
    case BTerm::Kind::Var: {
      for (const auto& b : bound)
        if (term_eq(b, t)) return;
      out.push_back(t);
      return;
    }
    case BTerm::Kind::Const:
      return;
    case BTerm::Kind::Comb:
      frees_rec(t->a, bound, out);
      frees_rec(t->b, bound, out);
      return;
    case BTerm::Kind::Abs:
      bound.push_back(t->a);
      frees_rec(t->b, bound, out);
      bound.pop_back();
      return;
  }
}

std::vector<BTermPtr> frees(const BTermPtr& t) {
  std::vector<BTermPtr> bound, out;
  frees_rec(t, bound, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const BTermPtr& a, const BTermPtr& b) {
                     return term_cmp(a, b) < 0;
                   });
  std::vector<BTermPtr> dedup;
  dedup.reserve(out.size());
  for (auto& v : out)
    if (dedup.empty() || term_cmp(dedup.back(), v) != 0)
      dedup.push_back(std::move(v));
  return dedup;
}

static bool freesin_rec(std::vector<BTermPtr>& acc, const BTermPtr& t) {
  switch (t->kind) {
    case BTerm::Kind::Var: {
      for (const auto& a : acc)
        if (term_eq(a, t)) return true;
      return false;
    }
    case BTerm::Kind::Const:
      return true;
    case BTerm::Kind::Comb:
      return freesin_rec(acc, t->a) && freesin_rec(acc, t->b);
    case BTerm::Kind::Abs: {
      acc.push_back(t->a);
      bool ok = freesin_rec(acc, t->b);
      acc.pop_back();
      return ok;
    }
  }
  return false;
}

bool freesin(const std::vector<BTermPtr>& acc, const BTermPtr& t) {
  std::vector<BTermPtr> work(acc);
  return freesin_rec(work, t);
}

static void tyvars_rec(const BTypePtr& ty, std::vector<BTypePtr>& out) {
  if (ty->is_var) {
    out.push_back(ty);
    return;
  }
  for (const auto& a : ty->args) tyvars_rec(a, out);
}

static std::vector<BTypePtr> sort_tyvars(std::vector<BTypePtr> vs) {
  std::stable_sort(vs.begin(), vs.end(),
                   [](const BTypePtr& a, const BTypePtr& b) {
                     return a->name < b->name;
                   });
  std::vector<BTypePtr> out;
  out.reserve(vs.size());
  for (auto& v : vs)
    if (out.empty() || out.back()->name != v->name)
      out.push_back(std::move(v));
  return out;
}

std::vector<BTypePtr> tyvars(const BTypePtr& ty) {
  std::vector<BTypePtr> out;
  tyvars_rec(ty, out);
  return sort_tyvars(std::move(out));
}

static void term_tyvars_rec(const BTermPtr& t, std::vector<BTypePtr>& out) {
  switch (t->kind) {
    case BTerm::Kind::Var:
    case BTerm::Kind::Const:
      tyvars_rec(t->ty, out);
      return;
    case BTerm::Kind::Comb:
    case BTerm::Kind::Abs:
      term_tyvars_rec(t->a, out);
      term_tyvars_rec(t->b, out);
      return;
  }
}

std::vector<BTypePtr> type_vars_in_term(const BTermPtr& t) {
  std::vector<BTypePtr> out;
  term_tyvars_rec(t, out);
  return sort_tyvars(std::move(out));
}

// -- Substitution --------------------------------------------------------------

BTypePtr type_subst(const BTypeSubst& theta, const BTypePtr& ty) {
  if (theta.empty()) return ty;
  if (ty->is_var) {
    for (const auto& [repl, var] : theta)
      if (type_eq(var, ty)) return repl;
    return ty;
  }
  bool changed = false;
  std::vector<BTypePtr> args;
  args.reserve(ty->args.size());
  for (const auto& a : ty->args) {
    BTypePtr a2 = type_subst(theta, a);
    changed = changed || a2.get() != a.get();
    args.push_back(std::move(a2));
  }
  if (!changed) return ty;
  return mk_tyapp(ty->name, std::move(args));
}

static BTermPtr variant(const std::vector<BTermPtr>& avoid, const BTermPtr& v) {
  if (v->kind != BTerm::Kind::Var) fail("variant: not a variable");
  BTermPtr cur = v;
  for (;;) {
    bool clash = false;
    for (const auto& t : avoid)
      if (vfree_in(cur, t)) {
        clash = true;
        break;
      }
    if (!clash) return cur;
    cur = mk_var(cur->name + "'", cur->ty);
  }
}

static BTermPtr vsubst_rec(const BTermSubst& theta, const BTermPtr& tm) {
  switch (tm->kind) {
    case BTerm::Kind::Var: {
      for (const auto& [repl, var] : theta)
        if (term_eq(var, tm)) return repl;
      return tm;
    }
    case BTerm::Kind::Const:
      return tm;
    case BTerm::Kind::Comb: {
      BTermPtr f = vsubst_rec(theta, tm->a);
      BTermPtr x = vsubst_rec(theta, tm->b);
      if (f.get() == tm->a.get() && x.get() == tm->b.get()) return tm;
      return raw_comb(std::move(f), std::move(x));
    }
    case BTerm::Kind::Abs: {
      const BTermPtr& v = tm->a;
      BTermSubst filtered;
      filtered.reserve(theta.size());
      for (const auto& p : theta)
        if (!term_eq(p.second, v)) filtered.push_back(p);
      if (filtered.empty()) return tm;
      BTermPtr b = vsubst_rec(filtered, tm->b);
      if (b.get() == tm->b.get()) return tm;
      bool clash = false;
      for (const auto& [repl, var] : filtered)
        if (vfree_in(v, repl) && vfree_in(var, tm->b)) {
          clash = true;
          break;
        }
      if (!clash) return raw_abs(v, std::move(b));
      // The binder would capture a replacement.  Rename it away from the
      // substituted body, then redo the body with the renaming included.
      BTermPtr v2 = variant({b}, v);
      BTermSubst extended;
      extended.reserve(filtered.size() + 1);
      extended.emplace_back(v2, v);
      for (const auto& p : filtered) extended.push_back(p);
      return raw_abs(v2, vsubst_rec(extended, tm->b));
    }
  }
  fail("vsubst");
}

BTermPtr vsubst(const BTermSubst& theta, const BTermPtr& t) {
  for (const auto& [repl, var] : theta)
    if (var->kind != BTerm::Kind::Var || !type_eq(type_of(repl), var->ty))
      fail("vsubst");
  if (theta.empty()) return t;
  return vsubst_rec(theta, t);
}

namespace {

struct InstClash {
  BTermPtr var;
};

BTermPtr inst_rec(Env& env, const BTypeSubst& tyin, const BTermPtr& tm) {
  switch (tm->kind) {
    case BTerm::Kind::Var: {
      BTypePtr ty2 = type_subst(tyin, tm->ty);
      BTermPtr tm2 = ty2.get() == tm->ty.get() ? tm : mk_var(tm->name, ty2);
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (term_eq(it->second, tm2)) {
          if (!term_eq(it->first, tm)) throw InstClash{tm2};
          break;
        }
      return tm2;
    }
    case BTerm::Kind::Const: {
      BTypePtr ty2 = type_subst(tyin, tm->ty);
      if (ty2.get() == tm->ty.get()) return tm;
      return raw_const(tm->name, std::move(ty2));
    }
    case BTerm::Kind::Comb: {
      BTermPtr f = inst_rec(env, tyin, tm->a);
      BTermPtr x = inst_rec(env, tyin, tm->b);
      if (f.get() == tm->a.get() && x.get() == tm->b.get()) return tm;
      return raw_comb(std::move(f), std::move(x));
    }
    case BTerm::Kind::Abs: {
      const BTermPtr& y = tm->a;
      Env none;
      BTermPtr y2 = inst_rec(none, tyin, y);
      env.emplace_back(y, y2);
      try {
        BTermPtr b = inst_rec(env, tyin, tm->b);
        env.pop_back();
        if (y2.get() == y.get() && b.get() == tm->b.get()) return tm;
        return raw_abs(std::move(y2), std::move(b));
      } catch (InstClash& clash) {
        env.pop_back();
        if (!term_eq(clash.var, y2)) throw;
        // Instantiation made the binder collide with a distinct variable.
        // Rename it past every instantiated free variable of the body and
        // try the renamed abstraction instead.
        std::vector<BTermPtr> ifrees;
        for (const auto& f : frees(tm->b)) {
          Env e;
          ifrees.push_back(inst_rec(e, tyin, f));
        }
        BTermPtr fresh = variant(ifrees, y2);
        BTermPtr z = mk_var(fresh->name, y->ty);
        BTermPtr renamed = raw_abs(z, vsubst_rec({{z, y}}, tm->b));
        return inst_rec(env, tyin, renamed);
      }
    }
  }
  fail("inst_type");
}

}  // namespace

BTermPtr inst(const BTypeSubst& theta, const BTermPtr& t) {
  if (theta.empty()) return t;
  Env env;
  return inst_rec(env, theta, t);
}

// -- Equations ----------------------------------------------------------------

BTermPtr safe_mk_eq(const BTermPtr& l, const BTermPtr& r) {
  BTypePtr lt = type_of(l);
  if (!type_eq(lt, type_of(r))) fail("safe_mk_eq");
  BTermPtr eq = raw_const("=", mk_fun_ty(lt, mk_fun_ty(lt, bool_ty())));
  return raw_comb(raw_comb(std::move(eq), l), r);
}

bool is_eq(const BTermPtr& t) {
  return t->kind == BTerm::Kind::Comb && t->a->kind == BTerm::Kind::Comb &&
         t->a->a->kind == BTerm::Kind::Const && t->a->a->name == "=";
}

std::pair<BTermPtr, BTermPtr> dest_eq(const BTermPtr& t) {
  if (!is_eq(t)) fail("dest_eq");
  return {t->a->b, t->b};
}

BTermPtr rator(const BTermPtr& t) {
  if (t->kind != BTerm::Kind::Comb) fail("rator");
  return t->a;
}

// -- Inference rules ----------------------------------------------------------

StatefulKernel::StatefulKernel() {
  types_.emplace_back("bool", 0);
  types_.emplace_back("fun", 2);
  BTypePtr a = mk_vartype("A");
  constants_.emplace_back("=", mk_fun_ty(a, mk_fun_ty(a, bool_ty())));
}

BThm StatefulKernel::refl(const BTermPtr& t) const {
  return sequent({}, safe_mk_eq(t, t));
}

BThm StatefulKernel::trans(const BThm& a, const BThm& b) const {
  if (!is_eq(a.concl()) || !is_eq(b.concl())) fail("TRANS");
  if (!aconv(a.concl()->b, b.concl()->a->b)) fail("TRANS");
  BTermPtr concl = raw_comb(a.concl()->a, b.concl()->b);
  return sequent(term_union(a.hyps(), b.hyps()), std::move(concl));
}

BThm StatefulKernel::mk_comb_rule(const BThm& f, const BThm& x) const {
  if (!is_eq(f.concl()) || !is_eq(x.concl())) fail("MK_COMB");
  auto [f1, f2] = dest_eq(f.concl());
  auto [x1, x2] = dest_eq(x.concl());
  BTypePtr fty = type_of(f2);
  if (!is_fun_ty(fty) || !type_eq(fty->args[0], type_of(x2))) fail("MK_COMB");
  return sequent(term_union(f.hyps(), x.hyps()),
                 safe_mk_eq(raw_comb(f1, x1), raw_comb(f2, x2)));
}

BThm StatefulKernel::abs_rule(const BTermPtr& v, const BThm& th) const {
  if (v->kind != BTerm::Kind::Var || !is_eq(th.concl())) fail("ABS");
  for (const auto& h : th.hyps())
    if (vfree_in(v, h)) fail("ABS");
  auto [l, r] = dest_eq(th.concl());
  return sequent(th.hyps(), safe_mk_eq(raw_abs(v, l), raw_abs(v, r)));
}

BThm StatefulKernel::beta(const BTermPtr& t) const {
  if (!(t->kind == BTerm::Kind::Comb && t->a->kind == BTerm::Kind::Abs &&
        term_eq(t->b, t->a->a)))
    fail("BETA");
  return sequent({}, safe_mk_eq(t, t->a->b));
}

BThm StatefulKernel::assume(const BTermPtr& t) const {
  if (!type_eq(type_of(t), bool_ty())) fail("ASSUME");
  return sequent({t}, t);
}

BThm StatefulKernel::eq_mp(const BThm& eq, const BThm& th) const {
  if (!is_eq(eq.concl())) fail("EQ_MP");
  auto [l, r] = dest_eq(eq.concl());
  if (!aconv(l, th.concl())) fail("EQ_MP");
  return sequent(term_union(eq.hyps(), th.hyps()), r);
}

BThm StatefulKernel::deduct_antisym(const BThm& a, const BThm& b) const {
  std::vector<BTermPtr> ha = term_remove(b.concl(), a.hyps());
  std::vector<BTermPtr> hb = term_remove(a.concl(), b.hyps());
  return sequent(term_union(ha, hb), safe_mk_eq(a.concl(), b.concl()));
}

BThm StatefulKernel::inst_type_rule(const BTypeSubst& theta,
                                    const BThm& th) const {
  auto apply = [&theta](const BTermPtr& t) { return inst(theta, t); };
  return sequent(term_image(th.hyps(), apply), inst(theta, th.concl()));
}

BThm StatefulKernel::inst_rule(const BTermSubst& theta, const BThm& th) const {
  for (const auto& [repl, var] : theta)
    if (var->kind != BTerm::Kind::Var || !type_eq(type_of(repl), var->ty))
      fail("INST");
  auto apply = [&theta](const BTermPtr& t) { return vsubst(theta, t); };
  return sequent(term_image(th.hyps(), apply), vsubst(theta, th.concl()));
}

// -- Tables ---------------------------------------------------------------

std::optional<int> StatefulKernel::get_type_arity(
    const std::string& name) const {
  for (auto it = types_.rbegin(); it != types_.rend(); ++it)
    if (it->first == name) return it->second;
  return std::nullopt;
}

void StatefulKernel::new_type(const std::string& name, int arity) {
  if (get_type_arity(name))
    fail("new_type: type " + name + " has already been declared");
  types_.emplace_back(name, arity);
}

BTypePtr StatefulKernel::lookup_const_type(const std::string& name) const {
  for (auto it = constants_.rbegin(); it != constants_.rend(); ++it)
    if (it->first == name) return it->second;
  return nullptr;
}

BTypePtr StatefulKernel::get_const_type(const std::string& name) const {
  BTypePtr ty = lookup_const_type(name);
  if (!ty) fail("get_const_type: not a constant name");
  return ty;
}

void StatefulKernel::new_constant(const std::string& name, const BTypePtr& ty) {
  if (lookup_const_type(name))
    fail("new_constant: constant " + name + " has already been declared");
  constants_.emplace_back(name, ty);
}

BTermPtr StatefulKernel::mk_const(const std::string& name,
                                  const BTypeSubst& theta) const {
  BTypePtr uty = lookup_const_type(name);
  if (!uty) fail("mk_const: not a constant name");
  return raw_const(name, type_subst(theta, uty));
}

// -- Definitional mechanisms -----------------------------------------------

BThm StatefulKernel::new_basic_definition(const BTermPtr& tm) {
  if (!(is_eq(tm) && tm->a->b->kind == BTerm::Kind::Var))
    fail("new_basic_definition");
  const BTermPtr& var = tm->a->b;
  const BTermPtr& t = tm->b;
  if (!freesin({}, t)) fail("new_definition: term not closed");
  std::vector<BTypePtr> cvars = tyvars(var->ty);
  for (const auto& tv : type_vars_in_term(t)) {
    bool found = false;
    for (const auto& cv : cvars)
      if (cv->name == tv->name) {
        found = true;
        break;
      }
    if (!found)
      fail("new_definition: Type variables not reflected in constant");
  }
  new_constant(var->name, var->ty);
  BTermPtr c = raw_const(var->name, var->ty);
  BThm dth = sequent({}, safe_mk_eq(c, t));
  definitions_.emplace_back(var->name, dth);
  return dth;
}

std::pair<BThm, BThm> StatefulKernel::new_basic_type_definition(
    const std::string& tyname, const std::string& absname,
    const std::string& repname, const BThm& witness) {
  if (get_type_arity(tyname))
    fail("new_type: type " + tyname + " has already been declared");
  if (lookup_const_type(absname))
    fail("new_constant: constant " + absname + " has already been declared");
  if (lookup_const_type(repname) || repname == absname)
    fail("new_constant: constant " + repname + " has already been declared");
  if (!witness.hyps().empty()) fail("new_basic_type_definition");
  if (witness.concl()->kind != BTerm::Kind::Comb)
    fail("new_basic_type_definition");
  const BTermPtr& pred = witness.concl()->a;
  const BTermPtr& elem = witness.concl()->b;
  if (!freesin({}, pred)) fail("new_basic_type_definition");
  std::vector<BTypePtr> tvs = type_vars_in_term(pred);
  int arity = static_cast<int>(tvs.size());
  new_type(tyname, arity);
  BTypePtr new_ty = mk_tyapp(tyname, tvs);
  BTypePtr rep_ty = type_of(elem);
  BTermPtr abs_c = raw_const(absname, mk_fun_ty(rep_ty, new_ty));
  BTermPtr rep_c = raw_const(repname, mk_fun_ty(new_ty, rep_ty));
  new_constant(absname, abs_c->ty);
  new_constant(repname, rep_c->ty);
  BTermPtr a = mk_var("a", new_ty);
  BTermPtr r = mk_var("r", rep_ty);
  BThm abs_rep =
      sequent({}, safe_mk_eq(mk_comb(abs_c, mk_comb(rep_c, a)), a));
  BThm rep_abs = sequent(
      {}, safe_mk_eq(mk_comb(pred, r),
                     safe_mk_eq(mk_comb(rep_c, mk_comb(abs_c, r)), r)));
  return {std::move(abs_rep), std::move(rep_abs)};
}

BThm StatefulKernel::new_axiom(const BTermPtr& tm) {
  if (!type_eq(type_of(tm), bool_ty())) fail("new_axiom");
  BThm th = sequent({}, tm);
  axioms_.push_back(th);
  return th;
}

// -- Surface syntax adapters --------------------------------------------------

syntax::PTypePtr from_btype(const BTypePtr& ty) {
  if (ty->is_var) return syntax::ptyvar(ty->name);
  std::vector<syntax::PTypePtr> args;
  args.reserve(ty->args.size());
  for (const auto& a : ty->args) args.push_back(from_btype(a));
  return syntax::ptyapp(ty->name, std::move(args));
}

BTypePtr to_btype(const syntax::PTypePtr& ty, const StatefulKernel& k) {
  if (ty->is_var) return mk_vartype(ty->name);
  std::optional<int> arity = k.get_type_arity(ty->name);
  if (!arity) fail("parse_type: unknown type operator " + ty->name);
  if (*arity != static_cast<int>(ty->args.size()))
    fail("mk_tyapp: wrong number of arguments");
  std::vector<BTypePtr> args;
  args.reserve(ty->args.size());
  for (const auto& a : ty->args) args.push_back(to_btype(a, k));
  return mk_tyapp(ty->name, std::move(args));
}

syntax::TTermPtr from_bterm(const BTermPtr& t) {
  switch (t->kind) {
    case BTerm::Kind::Var:
      return syntax::tvar(t->name, from_btype(t->ty));
    case BTerm::Kind::Const:
      return syntax::tconst(t->name, from_btype(t->ty), {});
    case BTerm::Kind::Comb:
      return syntax::tcomb(from_bterm(t->a), from_bterm(t->b));
    case BTerm::Kind::Abs:
      return syntax::tabs(from_bterm(t->a), from_bterm(t->b));
  }
  fail("from_bterm: bad term");
}

namespace {

// Does assigning the type variables of general produce specific?
bool btype_matches(const BTypePtr& general, const BTypePtr& specific,
                   std::vector<std::pair<std::string, BTypePtr>>& binding) {
  if (general->is_var) {
    for (const auto& [n, t] : binding)
      if (n == general->name) return type_eq(t, specific);
    binding.emplace_back(general->name, specific);
    return true;
  }
  if (specific->is_var || general->name != specific->name ||
      general->args.size() != specific->args.size())
    return false;
  for (size_t i = 0; i < general->args.size(); ++i)
    if (!btype_matches(general->args[i], specific->args[i], binding))
      return false;
  return true;
}

}  // namespace

BTermPtr to_bterm(const syntax::TTermPtr& t, const StatefulKernel& k) {
  switch (t->kind) {
    case syntax::TTerm::Kind::Var:
      return mk_var(t->name, to_btype(t->ty, k));
    case syntax::TTerm::Kind::Const: {
      BTypeSubst theta;
      if (!t->inst.empty()) {
        theta.reserve(t->inst.size());
        for (const auto& [ty, gname] : t->inst)
          theta.emplace_back(to_btype(ty, k), mk_vartype(gname));
      } else if (BTypePtr generic = k.lookup_const_type(t->name)) {
        // Trees built by from_bterm carry the occurrence type but no
        // instantiation list, so recover one by matching the generic type.
        std::vector<std::pair<std::string, BTypePtr>> binding;
        if (btype_matches(generic, to_btype(t->ty, k), binding)) {
          theta.reserve(binding.size());
          for (auto& [gname, gty] : binding)
            theta.emplace_back(std::move(gty), mk_vartype(gname));
        }
      }
      return k.mk_const(t->name, theta);
    }
    case syntax::TTerm::Kind::Comb:
      return mk_comb(to_bterm(t->a, k), to_bterm(t->b, k));
    case syntax::TTerm::Kind::Abs:
      return mk_abs(to_bterm(t->a, k), to_bterm(t->b, k));
  }
  fail("to_bterm: bad term");
}

std::optional<int> BaselineTables::tyop_arity(const std::string& name) const {
  return k_.get_type_arity(name);
}

syntax::PTypePtr BaselineTables::const_type(const std::string& name) const {
  BTypePtr ty = k_.lookup_const_type(name);
  if (!ty) return nullptr;
  return from_btype(ty);
}

BTypePtr parse_btype(const std::string& src, const StatefulKernel& k) {
  return to_btype(syntax::parse_ptype(src, BaselineTables(k)), k);
}

BTermPtr parse_bterm(const std::string& src, const StatefulKernel& k) {
  return to_bterm(syntax::parse_tterm(src, BaselineTables(k)), k);
}

std::string print_btype(const BTypePtr& ty) {
  return syntax::print_ptype(from_btype(ty));
}

std::string print_bterm(const BTermPtr& t) {
  return syntax::print_tterm(from_bterm(t));
}

std::string print_bthm(const BThm& th) {
  std::vector<syntax::TTermPtr> hyps;
  hyps.reserve(th.hyps().size());
  for (const auto& h : th.hyps()) hyps.push_back(from_bterm(h));
  return syntax::print_sequent(hyps, from_bterm(th.concl()));
}

}  // namespace baseline
}  // namespace taghol
