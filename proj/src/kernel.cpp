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

#include "taghol/kernel.hpp"

namespace taghol {

namespace {

using detail::Access;

Thm mk_sequent(Context ctx, std::vector<TermPtr> hyps, TermPtr concl) {
  return Access::mk_thm(std::move(ctx), std::move(hyps), std::move(concl));
}

template <typename F>
std::vector<TermPtr> term_image(const std::vector<TermPtr>& hyps, F&& f) {
  std::vector<TermPtr> out;
  out.reserve(hyps.size());
  for (const auto& h : hyps) out.push_back(f(h));
  return normalize_hyps(std::move(out));
}

bool axiom_list_eq(const AxiomList& a, const AxiomList& b) {
  if (eqcfg::fast_path() && a.get() == b.get()) return true;
  if (a->size() != b->size()) return false;
  for (size_t i = 0; i < a->size(); ++i)
    if (!term_eq((*a)[i], (*b)[i])) return false;
  return true;
}

}  // namespace

// -- Constants and type operators -----------------------------------------

TermPtr new_prim_const(std::string name, TypePtr ty) {
  return Access::mk_const(std::move(name), std::move(ty), Access::tag_prim());
}

TermPtr eq_term(const TypePtr& ty) {
  return Access::mk_const("=", mk_fun_ty(ty, mk_fun_ty(ty, bool_ty())),
                          Access::tag_prim());
}

std::pair<TermPtr, Thm> new_defined_const(const TermPtr& defn) {
  // Required shape: Comb(Comb(Const("=", _, Prim), Var(name, ty)), t).
  if (!(defn->is_comb() && defn->fn()->is_comb() &&
        defn->fn()->fn()->is_const() && defn->fn()->fn()->name() == "=" &&
        defn->fn()->fn()->tag()->kind() == ConstTag::Kind::Prim &&
        defn->fn()->arg()->is_var()))
    fail("new_basic_definition");
  const TermPtr& var = defn->fn()->arg();
  const TermPtr& t = defn->arg();
  if (!freesin({}, t)) fail("new_definition: term not closed");
  std::vector<TypePtr> cvars = tyvars(var->ty());
  for (const auto& tv : type_vars_in_term(t)) {
    bool found = false;
    for (const auto& cv : cvars)
      if (cv->name() == tv->name()) {
        found = true;
        break;
      }
    if (!found)
      fail("new_definition: Type variables not reflected in constant");
  }
  TermPtr c = Access::mk_const(var->name(), var->ty(), Access::tag_defined(defn));
  Thm dth = mk_sequent(empty_context(), {}, safe_mk_eq(c, t));
  return {std::move(c), std::move(dth)};
}

TermPtr inst_const(const TermPtr& c, const TypeSubst& theta) {
  if (!c->is_const()) fail("inst_const: not a constant");
  return Access::mk_const(c->name(), type_subst(theta, c->ty()), c->tag());
}

TypeOpPtr new_prim_tyop(std::string name, int arity) {
  return Access::typrim(std::move(name), arity);
}

TypeDefinition new_defined_tyop(const std::string& tyname,
                                const std::string& absname,
                                const std::string& repname,
                                const Thm& witness) {
  if (!witness.hyps().empty()) fail("new_basic_type_definition");
  if (!witness.concl()->is_comb()) fail("new_basic_type_definition");
  const TermPtr& pred = witness.concl()->fn();
  const TermPtr& elem = witness.concl()->arg();
  if (!freesin({}, pred)) fail("new_basic_type_definition");
  // The new operator's arguments are the predicate's type variables, in
  // canonical order, so the carved type covers everything P mentions.
  std::vector<TypePtr> tvs = type_vars_in_term(pred);
  int arity = static_cast<int>(tvs.size());
  TypeOpPtr op = Access::tydefined(tyname, arity, witness);
  TypePtr new_ty = mk_tyapp(op, tvs);
  TypePtr rep_ty = type_of(elem);
  TermPtr abs_c =
      Access::mk_const(absname, mk_fun_ty(rep_ty, new_ty),
                       Access::tag_mk_abstract(tyname, arity, witness));
  TermPtr rep_c =
      Access::mk_const(repname, mk_fun_ty(new_ty, rep_ty),
                       Access::tag_dest_abstract(tyname, arity, witness));
  TermPtr a = mk_var("a", new_ty);
  TermPtr r = mk_var("r", rep_ty);
  // |- abs(rep a) = a
  Thm abs_rep = mk_sequent(
      witness.context(), {},
      safe_mk_eq(mk_comb(abs_c, mk_comb(rep_c, a)), a));
  // |- P r = (rep(abs r) = r)
  Thm rep_abs = mk_sequent(
      witness.context(), {},
      safe_mk_eq(mk_comb(pred, r),
                 safe_mk_eq(mk_comb(rep_c, mk_comb(abs_c, r)), r)));
  return {std::move(op), std::move(abs_c), std::move(rep_c),
          std::move(abs_rep), std::move(rep_abs)};
}

// -- Primitive inference rules ---------------------------------------------

Thm refl(const TermPtr& t) {
  return mk_sequent(empty_context(), {}, safe_mk_eq(t, t));
}

Thm trans(const Thm& a, const Thm& b) {
  if (!is_eq(a.concl()) || !is_eq(b.concl())) fail("TRANS");
  const TermPtr& mid_a = a.concl()->arg();
  const TermPtr& mid_b = b.concl()->fn()->arg();
  if (!aconv(mid_a, mid_b)) fail("TRANS");
  // Reuse the left premise's equality instance: its fn() is `(=) lhs`.
  TermPtr concl = Access::mk_comb_unchecked(a.concl()->fn(), b.concl()->arg());
  return mk_sequent(merge_contexts(a.context(), b.context()),
                    term_union(a.hyps(), b.hyps()), std::move(concl));
}

Thm mk_comb_rule(const Thm& fth, const Thm& xth) {
  if (!is_eq(fth.concl()) || !is_eq(xth.concl())) fail("MK_COMB");
  auto [f1, f2] = dest_eq(fth.concl());
  auto [x1, x2] = dest_eq(xth.concl());
  TypePtr fty = type_of(f2);
  if (!is_fun_ty(fty) || !type_eq(fty->args()[0], type_of(x2)))
    fail("MK_COMB");
  return mk_sequent(merge_contexts(fth.context(), xth.context()),
                    term_union(fth.hyps(), xth.hyps()),
                    safe_mk_eq(Access::mk_comb_unchecked(f1, x1),
                               Access::mk_comb_unchecked(f2, x2)));
}

Thm abs_rule(const TermPtr& v, const Thm& th) {
  if (!v->is_var() || !is_eq(th.concl())) fail("ABS");
  for (const auto& h : th.hyps())
    if (vfree_in(v, h)) fail("ABS");
  auto [l, r] = dest_eq(th.concl());
  return mk_sequent(th.context(), th.hyps(),
                    safe_mk_eq(Access::mk_abs_unchecked(v, l),
                               Access::mk_abs_unchecked(v, r)));
}

Thm beta(const TermPtr& t) {
  if (!(t->is_comb() && t->fn()->is_abs() &&
        term_eq(t->arg(), t->fn()->bvar())))
    fail("BETA");
  return mk_sequent(empty_context(), {}, safe_mk_eq(t, t->fn()->body()));
}

Thm assume(const TermPtr& t) {
  if (!type_eq(type_of(t), bool_ty())) fail("ASSUME");
  return mk_sequent(empty_context(), {t}, t);
}

Thm eq_mp(const Thm& eq, const Thm& th) {
  if (!is_eq(eq.concl())) fail("EQ_MP");
  auto [l, r] = dest_eq(eq.concl());
  if (!aconv(l, th.concl())) fail("EQ_MP");
  return mk_sequent(merge_contexts(eq.context(), th.context()),
                    term_union(eq.hyps(), th.hyps()), r);
}

Thm deduct_antisym(const Thm& a, const Thm& b) {
  std::vector<TermPtr> ha = term_remove(b.concl(), a.hyps());
  std::vector<TermPtr> hb = term_remove(a.concl(), b.hyps());
  return mk_sequent(merge_contexts(a.context(), b.context()),
                    term_union(ha, hb), safe_mk_eq(a.concl(), b.concl()));
}

Thm inst_type_rule(const TypeSubst& theta, const Thm& th) {
  auto apply = [&theta](const TermPtr& t) { return inst_type(theta, t); };
  return mk_sequent(th.context(), term_image(th.hyps(), apply),
                    inst_type(theta, th.concl()));
}

Thm inst_rule(const TermSubst& theta, const Thm& th) {
  for (const auto& [repl, var] : theta)
    if (!var->is_var() || !type_eq(type_of(repl), var->ty())) fail("INST");
  auto apply = [&theta](const TermPtr& t) { return vsubst(theta, t); };
  return mk_sequent(th.context(), term_image(th.hyps(), apply),
                    vsubst(theta, th.concl()));
}

// -- Axiom contexts -----------------------------------------------------

std::pair<Thm, Context> axiom_sequent(const Context& ctx, const TermPtr& tm,
                                      TrackMode mode) {
  if (!type_eq(type_of(tm), bool_ty())) fail("new_axiom");
  if (mode == TrackMode::none)
    return {mk_sequent(empty_context(), {}, tm), empty_context()};
  std::uint32_t mask = 0;
  if (mode == TrackMode::precise) {
    if (ctx.size() >= 32) fail("axiom_sequent: mask full");
    mask = std::uint32_t{1} << ctx.size();
  }
  const auto& hist = ctx.history();
  auto front = std::make_shared<std::vector<TermPtr>>();
  front->reserve(hist.front()->size() + 1);
  front->push_back(tm);
  front->insert(front->end(), hist.front()->begin(), hist.front()->end());
  auto hist2 = std::make_shared<std::vector<AxiomList>>();
  hist2->reserve(hist.size() + 1);
  hist2->push_back(std::move(front));
  // The previous history's entries are shared, not copied.
  hist2->insert(hist2->end(), hist.begin(), hist.end());
  Context ctx2 = Access::mk_context(ctx.size() + 1, std::move(hist2), mask);
  return {mk_sequent(ctx2, {}, tm), ctx2};
}

Context merge_contexts(const Context& a, const Context& b) {
  std::uint32_t mask = a.mask() | b.mask();
  // Contexts from the same axiom chain share their history array, so the
  // common case is a pointer comparison plus a mask union.
  if (a.same_history(b)) {
    if (mask == a.mask()) return a;
    if (mask == b.mask()) return b;
    return Access::with_mask(a, mask);
  }
  if (a.size() == b.size()) {
    if (!axiom_list_eq(a.history().front(), b.history().front()))
      fail("merge_contexts");
    if (mask == a.mask()) return a;
    if (mask == b.mask()) return b;
    return Access::with_mask(a, mask);
  }
  // One context must extend the other: the shorter one's full axiom list has
  // to reappear in the longer one's history, at the index its length dictates.
  const Context& shorter = a.size() < b.size() ? a : b;
  const Context& longer = a.size() < b.size() ? b : a;
  int gap = longer.size() - shorter.size();
  if (!axiom_list_eq(shorter.history().front(), longer.history()[gap]))
    fail("merge_contexts");
  if (mask == longer.mask()) return longer;
  return Access::with_mask(longer, mask);
}

}  // namespace taghol
