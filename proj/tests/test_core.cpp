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

// Term and type layer tests.  Alpha-equivalence is checked against an
// independent de Bruijn conversion oracle, free variables against a
// brute-force recursion, and substitution against hand-derived capture
// cases plus invariance properties on randomly generated well-typed terms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "taghol/core.hpp"

using taghol::aconv;
using taghol::alpha_cmp;
using taghol::aty;
using taghol::bool_ty;
using taghol::ConstTag;
using taghol::ConstTagPtr;
using taghol::dest_abs;
using taghol::dest_comb;
using taghol::dest_eq;
using taghol::Failure;
using taghol::frees;
using taghol::freesin;
using taghol::inst_type;
using taghol::is_eq;
using taghol::is_fun_ty;
using taghol::mk_abs;
using taghol::mk_comb;
using taghol::mk_fun_ty;
using taghol::mk_tyapp;
using taghol::mk_tyvar;
using taghol::mk_var;
using taghol::normalize_hyps;
using taghol::rator;
using taghol::safe_mk_eq;
using taghol::tag_eq;
using taghol::Term;
using taghol::term_cmp;
using taghol::term_eq;
using taghol::term_remove;
using taghol::term_union;
using taghol::TermPtr;
using taghol::TermSubst;
using taghol::Type;
using taghol::type_cmp;
using taghol::type_eq;
using taghol::type_of;
using taghol::type_subst;
using taghol::type_vars_in_term;
using taghol::TypePtr;
using taghol::TypeSubst;
using taghol::tyvars;
using taghol::variant_var;
using taghol::vfree_in;
using taghol::vsubst;
using Access = taghol::detail::Access;

namespace {

// Deterministic draws; raw modulo keeps runs identical across platforms.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t pick(std::uint64_t n) { return eng() % n; }
};

// Restores the equality fast path on scope exit so a failing test cannot
// leave it disabled for the rest of the suite.
struct FastPathGuard {
  bool saved = taghol::eqcfg::identity_fast_path.load();
  ~FastPathGuard() { taghol::eqcfg::identity_fast_path.store(saved); }
};

const TypePtr& ind_ty() {
  static const TypePtr ty = mk_tyapp(Access::typrim("ind", 0), {});
  return ty;
}

// A primitive and a defined boolean constant, for tag variety in random
// terms.  The defined one carries a real equation as its tag.
const TermPtr& kb_const() {
  static const TermPtr c = Access::mk_const("kb", bool_ty(), Access::tag_prim());
  return c;
}

const TermPtr& kd_const() {
  static const TermPtr c = [] {
    TermPtr defn = safe_mk_eq(mk_var("kd", bool_ty()), kb_const());
    return Access::mk_const("kd", bool_ty(), Access::tag_defined(defn));
  }();
  return c;
}

TypePtr random_type(Rng& rng, int depth) {
  if (depth > 0 && rng.pick(10) < 3)
    return mk_fun_ty(random_type(rng, depth - 1), random_type(rng, depth - 1));
  switch (rng.pick(4)) {
    case 0: return bool_ty();
    case 1: return ind_ty();
    case 2: return mk_tyvar("A");
    default: return mk_tyvar("B");
  }
}

const char* const kVarNames[] = {"x", "y", "z", "f", "g"};

TermPtr leaf(Rng& rng, const TypePtr& ty) {
  if (type_eq(ty, bool_ty())) {
    std::uint64_t roll = rng.pick(6);
    if (roll == 0) return kb_const();
    if (roll == 1) return kd_const();
  }
  return mk_var(kVarNames[rng.pick(5)], ty);
}

// Well-typed by construction: every node goes through the checked builders.
TermPtr random_term(Rng& rng, const TypePtr& ty, int depth) {
  if (depth <= 0) return leaf(rng, ty);
  std::uint64_t roll = rng.pick(10);
  if (is_fun_ty(ty) && roll < 4) {
    TermPtr v = mk_var(kVarNames[rng.pick(5)], ty->args()[0]);
    return mk_abs(v, random_term(rng, ty->args()[1], depth - 1));
  }
  if (type_eq(ty, bool_ty()) && roll < 6) {
    TypePtr side = random_type(rng, 1);
    return safe_mk_eq(random_term(rng, side, depth - 1),
                      random_term(rng, side, depth - 1));
  }
  if (roll < 8) {
    TypePtr ta = random_type(rng, 1);
    return mk_comb(random_term(rng, mk_fun_ty(ta, ty), depth - 1),
                   random_term(rng, ta, depth - 1));
  }
  return leaf(rng, ty);
}

// Alpha-equivalent copy: binders are renamed (with some probability) to
// globally fresh "w<n>" names, which never occur in generated terms, so the
// rename cannot capture anything.
TermPtr rename_binders(Rng& rng, const TermPtr& t, int* counter) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t;
    case Term::Kind::Comb: {
      TermPtr f = rename_binders(rng, t->fn(), counter);
      TermPtr x = rename_binders(rng, t->arg(), counter);
      if (f.get() == t->fn().get() && x.get() == t->arg().get()) return t;
      return Access::mk_comb_unchecked(std::move(f), std::move(x));
    }
    case Term::Kind::Abs: {
      TermPtr body = rename_binders(rng, t->body(), counter);
      if (rng.pick(2) == 0) {
        if (body.get() == t->body().get()) return t;
        return Access::mk_abs_unchecked(t->bvar(), std::move(body));
      }
      TermPtr fresh = mk_var("w" + std::to_string((*counter)++), t->bvar()->ty());
      return Access::mk_abs_unchecked(fresh,
                                      vsubst({{fresh, t->bvar()}}, body));
    }
  }
  return t;
}

// -- De Bruijn oracle ------------------------------------------------------
//
// Bound variables become distances to their binder, free variables and
// constants stay as leaves.  Two terms are alpha-equivalent exactly when
// their conversions are structurally equal, with no positional comparison
// anywhere, which makes this a genuinely independent check of alpha_cmp.

struct Db;
using DbPtr = std::shared_ptr<const Db>;

struct Db {
  enum class K { Bound, Free, Const, App, Lam };
  K k;
  int index = -1;         // Bound: 0 is the innermost binder
  std::string name;       // Free, Const
  TypePtr ty;             // Free, Const, Lam (the binder's type)
  ConstTagPtr tag;        // Const
  DbPtr f, x;             // App: both; Lam: x is the body
};

DbPtr to_db(const TermPtr& t, std::vector<TermPtr>& binders) {
  auto node = std::make_shared<Db>();
  switch (t->kind()) {
    case Term::Kind::Var: {
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        if (term_eq(*it, t)) {
          node->k = Db::K::Bound;
          node->index = static_cast<int>(it - binders.rbegin());
          return node;
        }
      node->k = Db::K::Free;
      node->name = t->name();
      node->ty = t->ty();
      return node;
    }
    case Term::Kind::Const:
      node->k = Db::K::Const;
      node->name = t->name();
      node->ty = t->ty();
      node->tag = t->tag();
      return node;
    case Term::Kind::Comb:
      node->k = Db::K::App;
      node->f = to_db(t->fn(), binders);
      node->x = to_db(t->arg(), binders);
      return node;
    case Term::Kind::Abs:
      node->k = Db::K::Lam;
      node->ty = t->bvar()->ty();
      binders.push_back(t->bvar());
      node->x = to_db(t->body(), binders);
      binders.pop_back();
      return node;
  }
  return node;
}

DbPtr to_db(const TermPtr& t) {
  std::vector<TermPtr> binders;
  return to_db(t, binders);
}

bool db_eq(const DbPtr& a, const DbPtr& b) {
  if (a->k != b->k) return false;
  switch (a->k) {
    case Db::K::Bound: return a->index == b->index;
    case Db::K::Free: return a->name == b->name && type_eq(a->ty, b->ty);
    case Db::K::Const:
      return a->name == b->name && type_eq(a->ty, b->ty) &&
             tag_eq(a->tag, b->tag);
    case Db::K::App: return db_eq(a->f, b->f) && db_eq(a->x, b->x);
    case Db::K::Lam: return type_eq(a->ty, b->ty) && db_eq(a->x, b->x);
  }
  return false;
}

// -- Free variable oracle ----------------------------------------------------

void oracle_frees_rec(const TermPtr& t, std::vector<TermPtr>& bound,
                      std::vector<TermPtr>& out) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      for (const auto& b : bound)
        if (term_eq(b, t)) return;
      for (const auto& f : out)
        if (term_eq(f, t)) return;
      out.push_back(t);
      return;
    }
    case Term::Kind::Const:
      return;
    case Term::Kind::Comb:
      oracle_frees_rec(t->fn(), bound, out);
      oracle_frees_rec(t->arg(), bound, out);
      return;
    case Term::Kind::Abs:
      bound.push_back(t->bvar());
      oracle_frees_rec(t->body(), bound, out);
      bound.pop_back();
      return;
  }
}

std::vector<TermPtr> oracle_frees(const TermPtr& t) {
  std::vector<TermPtr> bound, out;
  oracle_frees_rec(t, bound, out);
  return out;
}

bool contains_eq(const std::vector<TermPtr>& l, const TermPtr& t) {
  for (const auto& e : l)
    if (term_eq(e, t)) return true;
  return false;
}

}  // namespace

TEST_CASE("type constructors check their arguments") {
  TypePtr a = mk_tyvar("A");
  CHECK(a->is_var());
  CHECK(a->name() == "A");
  CHECK(bool_ty()->is_app());
  CHECK(bool_ty()->name() == "bool");
  CHECK(aty()->name() == "A");

  TypePtr fn = mk_fun_ty(a, bool_ty());
  CHECK(is_fun_ty(fn));
  CHECK(fn->args().size() == 2);
  CHECK(!is_fun_ty(a));
  CHECK(!is_fun_ty(bool_ty()));

  CHECK_THROWS_WITH_AS(mk_tyapp(taghol::fun_op(), {bool_ty()}),
                       "mk_tyapp: wrong number of arguments", Failure);
  CHECK_THROWS_WITH_AS(mk_tyapp(taghol::bool_op(), {bool_ty()}),
                       "mk_tyapp: wrong number of arguments", Failure);
}

TEST_CASE("term constructors check types") {
  TermPtr x = mk_var("x", bool_ty());
  TermPtr f = mk_var("f", mk_fun_ty(bool_ty(), bool_ty()));
  CHECK(mk_comb(f, x)->is_comb());
  CHECK_THROWS_WITH_AS(mk_comb(x, x), "mk_comb: types do not agree", Failure);
  CHECK_THROWS_WITH_AS(mk_comb(f, mk_var("y", ind_ty())),
                       "mk_comb: types do not agree", Failure);
  CHECK(mk_abs(x, x)->is_abs());
  CHECK_THROWS_WITH_AS(mk_abs(mk_comb(f, x), x), "mk_abs: not a variable",
                       Failure);

  // type_of rejects an application built behind the checks.
  TermPtr bad = Access::mk_comb_unchecked(x, x);
  CHECK_THROWS_WITH_AS(type_of(bad), "type_of", Failure);
}

TEST_CASE("type_of computes the expected types") {
  TermPtr x = mk_var("x", ind_ty());
  TermPtr f = mk_var("f", mk_fun_ty(ind_ty(), bool_ty()));
  CHECK(type_eq(type_of(mk_comb(f, x)), bool_ty()));
  CHECK(type_eq(type_of(mk_abs(x, mk_comb(f, x))),
                mk_fun_ty(ind_ty(), bool_ty())));
  CHECK(type_eq(type_of(safe_mk_eq(x, x)), bool_ty()));

  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    TypePtr ty = random_type(rng, 2);
    TermPtr t = random_term(rng, ty, 4);
    CHECK(type_eq(type_of(t), ty));
  }
}

TEST_CASE("alpha equivalence agrees with the de Bruijn oracle") {
  Rng rng(1234);
  int equivalent = 0;
  for (int i = 0; i < 10000; ++i) {
    TypePtr ty = random_type(rng, 2);
    TermPtr a = random_term(rng, ty, 4);
    TermPtr b;
    if (i % 2 == 0) {
      int counter = i;
      b = rename_binders(rng, a, &counter);
    } else {
      b = random_term(rng, ty, 4);
    }
    bool oracle = db_eq(to_db(a), to_db(b));
    CHECK(aconv(a, b) == oracle);
    CHECK(aconv(b, a) == oracle);
    CHECK((alpha_cmp(a, b) == 0) == oracle);
    if (oracle) ++equivalent;
  }
  // Every renamed copy is alpha-equivalent, so at least half the pairs are.
  CHECK(equivalent >= 5000);
}

TEST_CASE("alpha order ranks constants, variables, combinations, abstractions") {
  TermPtr c = kb_const();
  TermPtr v = mk_var("x", bool_ty());
  TermPtr f = mk_var("f", mk_fun_ty(bool_ty(), bool_ty()));
  TermPtr comb = mk_comb(f, v);
  TermPtr abs = mk_abs(v, v);
  CHECK(alpha_cmp(c, v) < 0);
  CHECK(alpha_cmp(v, comb) < 0);
  CHECK(alpha_cmp(comb, abs) < 0);
  CHECK(alpha_cmp(v, c) > 0);

  // Binder types decide before bodies do.
  TermPtr ab = mk_abs(mk_var("x", ind_ty()), kb_const());
  CHECK(alpha_cmp(abs, ab) != 0);
  CHECK(alpha_cmp(abs, ab) == -alpha_cmp(ab, abs));
}

TEST_CASE("term order is a total order consistent with equality") {
  Rng rng(77);
  std::vector<TermPtr> ts;
  for (int i = 0; i < 40; ++i)
    ts.push_back(random_term(rng, random_type(rng, 2), 3));
  for (const auto& t : ts) {
    CHECK(term_cmp(t, t) == 0);
    CHECK(alpha_cmp(t, t) == 0);
    CHECK(term_eq(t, t));
  }
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = 0; j < ts.size(); ++j) {
      int c = term_cmp(ts[i], ts[j]);
      CHECK(((c == 0) == term_eq(ts[i], ts[j])));
      CHECK(((c > 0) == (term_cmp(ts[j], ts[i]) < 0)));
      int a = alpha_cmp(ts[i], ts[j]);
      CHECK(((a > 0) == (alpha_cmp(ts[j], ts[i]) < 0)));
    }

  std::stable_sort(ts.begin(), ts.end(), [](const TermPtr& a, const TermPtr& b) {
    return alpha_cmp(a, b) < 0;
  });
  for (size_t i = 0; i + 1 < ts.size(); ++i)
    for (size_t j = i + 1; j < ts.size(); ++j)
      CHECK(alpha_cmp(ts[i], ts[j]) <= 0);
}

TEST_CASE("equality verdicts do not depend on the identity fast path") {
  FastPathGuard guard;
  Rng rng(4242);
  for (int i = 0; i < 2000; ++i) {
    TypePtr ty = random_type(rng, 2);
    TermPtr a = random_term(rng, ty, 3);
    TermPtr b;
    int counter = i;
    switch (i % 3) {
      case 0: b = a; break;
      case 1: b = rename_binders(rng, a, &counter); break;
      default: b = random_term(rng, ty, 3); break;
    }
    taghol::eqcfg::identity_fast_path.store(true);
    bool eq_on = term_eq(a, b);
    int alpha_on = alpha_cmp(a, b);
    int ty_on = type_cmp(type_of(a), type_of(b));
    taghol::eqcfg::identity_fast_path.store(false);
    CHECK(term_eq(a, b) == eq_on);
    CHECK(alpha_cmp(a, b) == alpha_on);
    CHECK(type_cmp(type_of(a), type_of(b)) == ty_on);
    taghol::eqcfg::identity_fast_path.store(true);
  }
}

TEST_CASE("identity fast path is what keeps definition tags cheap") {
  FastPathGuard guard;
  // A chain of defined constants, each tagged with an equation whose right
  // side is the previous constant.
  const int depth = 30;
  TermPtr prev = Access::mk_const("z0", ind_ty(), Access::tag_prim());
  for (int i = 0; i < depth; ++i) {
    std::string name = "d" + std::to_string(i);
    TermPtr defn = safe_mk_eq(mk_var(name, ind_ty()), prev);
    prev = Access::mk_const(name, ind_ty(), Access::tag_defined(defn));
  }
  // A distinct node for the same constant: same name, type, and tag object.
  TermPtr twin = Access::mk_const(prev->name(), prev->ty(), prev->tag());
  REQUIRE(twin.get() != prev.get());

  taghol::eqcfg::identity_fast_path.store(true);
  std::uint64_t before = taghol::eqcfg::defined_payload_walks.load();
  CHECK(term_eq(prev, twin));
  CHECK(taghol::eqcfg::defined_payload_walks.load() == before);

  taghol::eqcfg::identity_fast_path.store(false);
  before = taghol::eqcfg::defined_payload_walks.load();
  CHECK(term_eq(prev, twin));
  std::uint64_t walked = taghol::eqcfg::defined_payload_walks.load() - before;
  CHECK(walked >= depth);
}

TEST_CASE("tag equality separates same-named definitions") {
  TermPtr zero = Access::mk_const("O", ind_ty(), Access::tag_prim());
  TermPtr one = Access::mk_const("S", ind_ty(), Access::tag_prim());
  TermPtr d0 = safe_mk_eq(mk_var("X", ind_ty()), zero);
  TermPtr d1 = safe_mk_eq(mk_var("X", ind_ty()), one);

  ConstTagPtr t0 = Access::tag_defined(d0);
  ConstTagPtr t0b = Access::tag_defined(d0);
  ConstTagPtr t1 = Access::tag_defined(d1);
  CHECK(tag_eq(t0, t0));
  CHECK(tag_eq(t0, t0b));  // distinct tag objects, equal payloads
  CHECK(!tag_eq(t0, t1));
  CHECK(!tag_eq(t0, Access::tag_prim()));

  TermPtr x_old = Access::mk_const("X", ind_ty(), t0);
  TermPtr x_new = Access::mk_const("X", ind_ty(), t1);
  TermPtr x_old2 = Access::mk_const("X", ind_ty(), t0b);
  CHECK(term_eq(x_old, x_old2));
  CHECK(!term_eq(x_old, x_new));
  CHECK(!aconv(x_old, x_new));
  CHECK(alpha_cmp(x_old, x_new) != 0);
}

TEST_CASE("free variables match a brute-force oracle") {
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    TermPtr t = random_term(rng, random_type(rng, 2), 4);
    std::vector<TermPtr> got = frees(t);
    std::vector<TermPtr> want = oracle_frees(t);
    CHECK(got.size() == want.size());
    for (const auto& v : want) {
      CHECK(contains_eq(got, v));
      CHECK(vfree_in(v, t));
    }
    // Sorted in the canonical order and duplicate-free.
    for (size_t k = 0; k + 1 < got.size(); ++k)
      CHECK(term_cmp(got[k], got[k + 1]) < 0);
    CHECK(freesin(want, t));
    if (!want.empty()) {
      std::vector<TermPtr> short_list(want.begin(), want.end() - 1);
      CHECK(!freesin(short_list, t));
    }
    // A variable absent from the oracle set is not free.
    TermPtr probe = mk_var("qq", bool_ty());
    CHECK(vfree_in(probe, t) == contains_eq(want, probe));
  }
}

TEST_CASE("variant renames by priming until fresh") {
  TermPtr x = mk_var("x", bool_ty());
  TermPtr y = mk_var("y", bool_ty());
  CHECK(variant_var({y}, x).get() == x.get());
  CHECK(variant_var({x}, x)->name() == "x'");
  TermPtr xp = mk_var("x'", bool_ty());
  CHECK(variant_var({mk_comb(mk_var("f", mk_fun_ty(bool_ty(), bool_ty())), x),
                     xp},
                    x)
            ->name() == "x''");
  CHECK_THROWS_WITH_AS(variant_var({}, kb_const()), "variant: not a variable",
                       Failure);
}

TEST_CASE("type substitution returns identical nodes when nothing changes") {
  TypePtr a = mk_tyvar("A");
  TypePtr fn = mk_fun_ty(a, bool_ty());
  CHECK(type_subst({}, fn).get() == fn.get());
  CHECK(type_subst({{ind_ty(), mk_tyvar("C")}}, fn).get() == fn.get());
  TypePtr out = type_subst({{ind_ty(), a}}, fn);
  CHECK(type_eq(out, mk_fun_ty(ind_ty(), bool_ty())));
  // The untouched bool branch is shared, not rebuilt.
  CHECK(out->args()[1].get() == fn->args()[1].get());
}

TEST_CASE("tyvars and type_vars_in_term sort and deduplicate") {
  TypePtr a = mk_tyvar("A");
  TypePtr b = mk_tyvar("B");
  TypePtr ty = mk_fun_ty(b, mk_fun_ty(a, b));
  std::vector<TypePtr> vs = tyvars(ty);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0]->name() == "A");
  CHECK(vs[1]->name() == "B");
  CHECK(tyvars(bool_ty()).empty());

  TermPtr t = mk_abs(mk_var("x", b), mk_var("y", mk_fun_ty(a, b)));
  std::vector<TypePtr> ws = type_vars_in_term(t);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0]->name() == "A");
  CHECK(ws[1]->name() == "B");
}

TEST_CASE("vsubst avoids capture by renaming binders") {
  TermPtr x = mk_var("x", bool_ty());
  TermPtr y = mk_var("y", bool_ty());
  TermPtr z = mk_var("z", bool_ty());

  // (\y. x)[y/x] must not capture: the binder moves out of the way.
  TermPtr t = mk_abs(y, x);
  TermPtr s = vsubst({{y, x}}, t);
  REQUIRE(s->is_abs());
  CHECK(s->bvar()->name() == "y'");
  CHECK(term_eq(s->body(), y));
  CHECK(!aconv(s, mk_abs(z, x)));
  CHECK(!aconv(s, t));

  // A shadowed binder stops the substitution, and the node comes back
  // untouched.
  TermPtr id = mk_abs(x, x);
  CHECK(vsubst({{y, x}}, id).get() == id.get());

  // No match anywhere: the original node, not a copy.
  TermPtr app = mk_comb(mk_abs(x, x), y);
  CHECK(vsubst({{z, y}}, app).get() != app.get());
  CHECK(vsubst({{x, mk_var("q", bool_ty())}}, app).get() == app.get());

  CHECK(vsubst({}, t).get() == t.get());

  CHECK_THROWS_WITH_AS(vsubst({{mk_var("v", ind_ty()), x}}, t), "vsubst",
                       Failure);
  CHECK_THROWS_WITH_AS(vsubst({{x, kb_const()}}, t), "vsubst", Failure);
}

TEST_CASE("vsubst properties hold on random terms") {
  Rng rng(31337);
  for (int i = 0; i < 2000; ++i) {
    TypePtr ty = random_type(rng, 2);
    TermPtr t = random_term(rng, ty, 4);
    std::vector<TermPtr> fv = frees(t);
    if (fv.empty()) {
      CHECK(vsubst({{mk_var("u", bool_ty()), mk_var("u", bool_ty())}}, t)
                .get() == t.get());
      continue;
    }
    TermPtr v = fv[rng.pick(fv.size())];
    TermPtr r = random_term(rng, v->ty(), 3);
    TermPtr s = vsubst({{r, v}}, t);

    // Type is preserved.
    CHECK(type_eq(type_of(s), ty));

    // Free variables of the result: from t (minus v) or from r.
    std::vector<TermPtr> fv_t = frees(t);
    std::vector<TermPtr> fv_r = frees(r);
    for (const auto& u : frees(s)) {
      bool from_t = contains_eq(fv_t, u) && !term_eq(u, v);
      bool from_r = contains_eq(fv_r, u);
      CHECK((from_t || from_r));
    }

    // Substitution commutes with alpha-renaming of the input.
    int counter = 100000 + i;
    TermPtr t2 = rename_binders(rng, t, &counter);
    CHECK(aconv(vsubst({{r, v}}, t2), s));
  }
}

TEST_CASE("inst_type instantiates types and renames colliding binders") {
  TypePtr a = mk_tyvar("A");
  TypePtr b = mk_tyvar("B");

  // Binder x:A and free x:B are distinct variables; after A := B the naive
  // result would capture, so the binder is renamed.
  TermPtr bound = mk_var("x", a);
  TermPtr free_x = mk_var("x", b);
  TermPtr t = Access::mk_abs_unchecked(bound, free_x);
  TermPtr s = inst_type({{b, a}}, t);
  REQUIRE(s->is_abs());
  CHECK(s->bvar()->name() == "x'");
  CHECK(type_eq(s->bvar()->ty(), b));
  CHECK(s->body()->name() == "x");
  CHECK(!term_eq(s->body(), s->bvar()));

  // Plain instantiation, no collisions.
  TermPtr f = mk_var("f", mk_fun_ty(a, bool_ty()));
  TermPtr xa = mk_var("x", a);
  TermPtr app = mk_comb(f, xa);
  TermPtr app2 = inst_type({{ind_ty(), a}}, app);
  CHECK(type_eq(type_of(app2), bool_ty()));
  CHECK(type_eq(app2->arg()->ty(), ind_ty()));

  // Tags survive instantiation.
  TermPtr eq_a = safe_mk_eq(xa, xa)->fn()->fn();
  TermPtr eq_i = inst_type({{ind_ty(), a}}, eq_a);
  CHECK(eq_i->tag().get() == eq_a->tag().get());

  // Identity on nodes without the substituted variable, and on empty theta.
  CHECK(inst_type({}, t).get() == t.get());
  TermPtr no_a = mk_abs(mk_var("x", bool_ty()), kb_const());
  CHECK(inst_type({{ind_ty(), a}}, no_a).get() == no_a.get());
}

TEST_CASE("inst_type properties hold on random terms") {
  Rng rng(555);
  TypePtr a = mk_tyvar("A");
  for (int i = 0; i < 2000; ++i) {
    TypePtr ty = random_type(rng, 2);
    TermPtr t = random_term(rng, ty, 4);
    TypeSubst theta = {{ind_ty(), a}};
    TermPtr s = inst_type(theta, t);
    CHECK(type_eq(type_of(s), type_subst(theta, ty)));
    // Instantiation commutes with alpha-renaming of the input.
    int counter = 200000 + i;
    TermPtr t2 = rename_binders(rng, t, &counter);
    CHECK(aconv(inst_type(theta, t2), s));
  }
}

TEST_CASE("hypothesis lists stay sorted and deduplicated") {
  Rng rng(2024);
  TermPtr x = mk_var("x", bool_ty());
  TermPtr y = mk_var("y", bool_ty());
  for (int i = 0; i < 500; ++i) {
    std::vector<TermPtr> raw;
    int n = 1 + static_cast<int>(rng.pick(8));
    for (int k = 0; k < n; ++k) {
      TermPtr t = random_term(rng, bool_ty(), 2);
      raw.push_back(t);
      if (rng.pick(3) == 0) raw.push_back(t);  // duplicate
      if (rng.pick(4) == 0) {
        int counter = 300000 + i * 10 + k;
        raw.push_back(rename_binders(rng, t, &counter));  // alpha-duplicate
      }
    }
    std::vector<TermPtr> norm = normalize_hyps(raw);
    for (size_t k = 0; k + 1 < norm.size(); ++k)
      CHECK(alpha_cmp(norm[k], norm[k + 1]) < 0);
    for (const auto& t : raw) {
      bool present = false;
      for (const auto& u : norm) present = present || aconv(t, u);
      CHECK(present);
    }

    std::vector<TermPtr> l1 = normalize_hyps({raw.begin(),
                                              raw.begin() + raw.size() / 2});
    std::vector<TermPtr> l2 = normalize_hyps({raw.begin() + raw.size() / 2,
                                              raw.end()});
    std::vector<TermPtr> u = term_union(l1, l2);
    CHECK(u.size() == norm.size());
    for (size_t k = 0; k < u.size(); ++k) CHECK(aconv(u[k], norm[k]));
  }

  // Removal drops every alpha-equal copy and nothing else.
  std::vector<TermPtr> hyps = normalize_hyps({safe_mk_eq(x, x),
                                              safe_mk_eq(x, y),
                                              safe_mk_eq(y, y)});
  std::vector<TermPtr> rest = term_remove(safe_mk_eq(x, y), hyps);
  CHECK(rest.size() == 2);
  for (const auto& h : rest) CHECK(!aconv(h, safe_mk_eq(x, y)));
  CHECK(term_remove(safe_mk_eq(y, x), hyps).size() == 3);
}

TEST_CASE("destructors check shapes and equality requires the primitive tag") {
  TermPtr x = mk_var("x", ind_ty());
  TermPtr eq = safe_mk_eq(x, x);
  CHECK(is_eq(eq));
  auto [l, r] = dest_eq(eq);
  CHECK(term_eq(l, x));
  CHECK(term_eq(r, x));
  CHECK(term_eq(rator(eq), eq->fn()));
  CHECK(term_eq(taghol::rand(eq), x));
  auto [cf, cx] = dest_comb(eq);
  CHECK(term_eq(cf, eq->fn()));
  CHECK(term_eq(cx, x));
  TermPtr ab = mk_abs(x, x);
  auto [bv, bb] = dest_abs(ab);
  CHECK(term_eq(bv, x));
  CHECK(term_eq(bb, x));

  CHECK_THROWS_WITH_AS(dest_comb(x), "dest_comb", Failure);
  CHECK_THROWS_WITH_AS(dest_abs(x), "dest_abs", Failure);
  CHECK_THROWS_WITH_AS(rator(x), "rator", Failure);
  CHECK_THROWS_WITH_AS(taghol::rand(x), "rand", Failure);
  CHECK_THROWS_WITH_AS(dest_eq(x), "dest_eq", Failure);
  CHECK_THROWS_WITH_AS(safe_mk_eq(x, kb_const()), "safe_mk_eq", Failure);

  // A defined constant named "=" does not satisfy the equation pattern, so
  // none of the equality-shaped rules can be tricked by it.
  TypePtr ety = mk_fun_ty(ind_ty(), mk_fun_ty(ind_ty(), bool_ty()));
  TermPtr fake_defn = safe_mk_eq(mk_var("=", ety), mk_var("w", ety));
  TermPtr fake_eq = Access::mk_const("=", ety, Access::tag_defined(fake_defn));
  TermPtr fake_app = Access::mk_comb_unchecked(
      Access::mk_comb_unchecked(fake_eq, x), x);
  CHECK(!is_eq(fake_app));
  CHECK_THROWS_WITH_AS(dest_eq(fake_app), "dest_eq", Failure);
}
