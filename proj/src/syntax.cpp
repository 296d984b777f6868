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

#include "taghol/syntax.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace taghol {
namespace syntax {

// -- Neutral tree factories -------------------------------------------------

PTypePtr ptyvar(std::string name) {
  auto t = std::make_shared<PType>();
  t->is_var = true;
  t->name = std::move(name);
  return t;
}

PTypePtr ptyapp(std::string name, std::vector<PTypePtr> args) {
  auto t = std::make_shared<PType>();
  t->is_var = false;
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

PTypePtr pty_bool() {
  static const PTypePtr b = ptyapp("bool", {});
  return b;
}

PTypePtr pty_fun(PTypePtr dom, PTypePtr cod) {
  return ptyapp("fun", {std::move(dom), std::move(cod)});
}

bool ptype_eq(const PTypePtr& a, const PTypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_var != b->is_var || a->name != b->name ||
      a->args.size() != b->args.size())
    return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!ptype_eq(a->args[i], b->args[i])) return false;
  return true;
}

TTermPtr tvar(std::string name, PTypePtr ty) {
  auto t = std::make_shared<TTerm>();
  t->kind = TTerm::Kind::Var;
  t->name = std::move(name);
  t->ty = std::move(ty);
  return t;
}

TTermPtr tconst(std::string name, PTypePtr ty,
                std::vector<std::pair<PTypePtr, std::string>> inst) {
  auto t = std::make_shared<TTerm>();
  t->kind = TTerm::Kind::Const;
  t->name = std::move(name);
  t->ty = std::move(ty);
  t->inst = std::move(inst);
  return t;
}

TTermPtr tcomb(TTermPtr f, TTermPtr x) {
  auto t = std::make_shared<TTerm>();
  t->kind = TTerm::Kind::Comb;
  t->a = std::move(f);
  t->b = std::move(x);
  return t;
}

TTermPtr tabs(TTermPtr v, TTermPtr body) {
  if (v->kind != TTerm::Kind::Var) fail("tabs: binder is not a variable");
  auto t = std::make_shared<TTerm>();
  t->kind = TTerm::Kind::Abs;
  t->a = std::move(v);
  t->b = std::move(body);
  return t;
}

namespace {

// -- Lexer ------------------------------------------------------------------

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Colon,
  Eq,
  Arrow,
  Backslash,
  End,
};

struct Token {
  Tok k;
  std::string text;
  size_t pos;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& src, const char* who) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_char(c)) {
      size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", i});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '.': k = Tok::Dot; break;
      case ':': k = Tok::Colon; break;
      case '=': k = Tok::Eq; break;
      case '\\': k = Tok::Backslash; break;
      default:
        fail(std::string(who) + ": unexpected character '" +
             std::string(1, c) + "' at " + std::to_string(i));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

// -- Type parsing -------------------------------------------------------

bool is_tyvar_name(const std::string& s) {
  return !s.empty() && (std::isupper(static_cast<unsigned char>(s[0])) ||
                        s[0] == '\'');
}

struct TypeParser {
  const std::vector<Token>& toks;
  size_t& i;
  const Tables& tables;
  // Inside a term, an unknown identifier after a type ends the type (it is
  // the next term atom); standalone, it is an error.
  bool embedded;

  [[noreturn]] void unexpected() const {
    const Token& t = toks[i];
    fail(t.k == Tok::End
             ? std::string("parse_type: unexpected end of input")
             : "parse_type: unexpected '" + t.text + "' at " +
                   std::to_string(t.pos));
  }

  int arity_of(const std::string& name) const {
    auto a = tables.tyop_arity(name);
    if (!a) fail("parse_type: unknown type operator " + name);
    return *a;
  }

  PTypePtr apply_op(const std::string& name, std::vector<PTypePtr> args) {
    if (arity_of(name) != static_cast<int>(args.size()))
      fail("parse_type: wrong number of arguments for " + name);
    return ptyapp(name, std::move(args));
  }

  PTypePtr type() {  // arrow level, right associative
    PTypePtr l = appty();
    if (toks[i].k == Tok::Arrow) {
      ++i;
      return pty_fun(std::move(l), type());
    }
    return l;
  }

  PTypePtr appty() {
    PTypePtr t = atomty();
    while (toks[i].k == Tok::Ident && !is_tyvar_name(toks[i].text)) {
      if (embedded && !tables.tyop_arity(toks[i].text)) break;
      t = apply_op(toks[i].text, {std::move(t)});
      ++i;
    }
    return t;
  }

  PTypePtr atomty() {
    const Token& t = toks[i];
    if (t.k == Tok::Ident) {
      ++i;
      if (is_tyvar_name(t.text)) return ptyvar(t.text);
      return apply_op(t.text, {});
    }
    if (t.k == Tok::LParen) {
      ++i;
      std::vector<PTypePtr> group;
      group.push_back(type());
      while (toks[i].k == Tok::Comma) {
        ++i;
        group.push_back(type());
      }
      if (toks[i].k != Tok::RParen) unexpected();
      ++i;
      if (group.size() == 1) return group[0];
      // A tuple must be applied to an operator of matching arity.
      if (toks[i].k != Tok::Ident || is_tyvar_name(toks[i].text)) unexpected();
      PTypePtr r = apply_op(toks[i].text, std::move(group));
      ++i;
      return r;
    }
    unexpected();
  }
};

// -- Inference types ---------------------------------------------------------

struct ITy;
using ITyPtr = std::shared_ptr<ITy>;

struct ITy {
  enum class K { Meta, Var, App };
  K k;
  std::string name;          // Var/App
  std::vector<ITyPtr> args;  // App
  ITyPtr link;               // Meta: solution when bound
};

ITyPtr imeta() {
  auto t = std::make_shared<ITy>();
  t->k = ITy::K::Meta;
  return t;
}

ITyPtr ivar(std::string name) {
  auto t = std::make_shared<ITy>();
  t->k = ITy::K::Var;
  t->name = std::move(name);
  return t;
}

ITyPtr iapp(std::string name, std::vector<ITyPtr> args) {
  auto t = std::make_shared<ITy>();
  t->k = ITy::K::App;
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

ITyPtr prune(ITyPtr t) {
  while (t->k == ITy::K::Meta && t->link) t = t->link;
  return t;
}

bool occurs(const ITy* meta, const ITyPtr& t0) {
  ITyPtr t = prune(t0);
  if (t.get() == meta) return true;
  if (t->k == ITy::K::App)
    for (const auto& a : t->args)
      if (occurs(meta, a)) return true;
  return false;
}

void unify(ITyPtr a, ITyPtr b) {
  a = prune(std::move(a));
  b = prune(std::move(b));
  if (a.get() == b.get()) return;
  if (a->k == ITy::K::Meta) {
    if (occurs(a.get(), b)) fail("parse_term: cannot infer type");
    a->link = b;
    return;
  }
  if (b->k == ITy::K::Meta) {
    if (occurs(b.get(), a)) fail("parse_term: cannot infer type");
    b->link = a;
    return;
  }
  if (a->k == ITy::K::Var && b->k == ITy::K::Var && a->name == b->name) return;
  if (a->k == ITy::K::App && b->k == ITy::K::App && a->name == b->name &&
      a->args.size() == b->args.size()) {
    for (size_t i = 0; i < a->args.size(); ++i) unify(a->args[i], b->args[i]);
    return;
  }
  fail("parse_term: type mismatch");
}

// Rigid conversion: type variables in annotations stand for themselves.
ITyPtr rigid(const PTypePtr& p) {
  if (p->is_var) return ivar(p->name);
  std::vector<ITyPtr> args;
  args.reserve(p->args.size());
  for (const auto& a : p->args) args.push_back(rigid(a));
  return iapp(p->name, std::move(args));
}

// Instantiating conversion: each generic type variable becomes one fresh
// meta, recorded (in first-appearance order) for the occurrence's theta.
ITyPtr instantiate(const PTypePtr& p,
                   std::vector<std::pair<std::string, ITyPtr>>& m) {
  if (p->is_var) {
    for (const auto& [n, t] : m)
      if (n == p->name) return t;
    m.emplace_back(p->name, imeta());
    return m.back().second;
  }
  std::vector<ITyPtr> args;
  args.reserve(p->args.size());
  for (const auto& a : p->args) args.push_back(instantiate(a, m));
  return iapp(p->name, std::move(args));
}

// Unsolved metas default to bool, making the bare equations and lambdas in
// the scripted sessions well-typed without annotations.
PTypePtr zonk(const ITyPtr& t0) {
  ITyPtr t = prune(t0);
  switch (t->k) {
    case ITy::K::Meta:
      return pty_bool();
    case ITy::K::Var:
      return ptyvar(t->name);
    case ITy::K::App: {
      std::vector<PTypePtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(zonk(a));
      return ptyapp(t->name, std::move(args));
    }
  }
  fail("zonk: bad type");
}

// -- Term elaboration ---------------------------------------------------------

struct ENode;
using ENodePtr = std::shared_ptr<ENode>;

struct ENode {
  TTerm::Kind kind;
  std::string name;
  ITyPtr ty;  // type of this node, for every kind
  std::vector<std::pair<std::string, ITyPtr>> inst;  // Const
  ENodePtr a, b;
};

ENodePtr enode(TTerm::Kind kind, std::string name, ITyPtr ty) {
  auto n = std::make_shared<ENode>();
  n->kind = kind;
  n->name = std::move(name);
  n->ty = std::move(ty);
  return n;
}

struct TermParser {
  const std::vector<Token>& toks;
  size_t i = 0;
  const Tables& tables;
  std::vector<std::pair<std::string, ITyPtr>> bound;  // binder stack
  std::vector<std::pair<std::string, ITyPtr>> free;   // shared per free name

  explicit TermParser(const std::vector<Token>& t, const Tables& tb)
      : toks(t), tables(tb) {}

  [[noreturn]] void unexpected() const {
    const Token& t = toks[i];
    fail(t.k == Tok::End
             ? std::string("parse_term: unexpected end of input")
             : "parse_term: unexpected '" + t.text + "' at " +
                   std::to_string(t.pos));
  }

  PTypePtr embedded_type() {
    TypeParser tp{toks, i, tables, /*embedded=*/true};
    return tp.type();
  }

  ENodePtr mk_comb(ENodePtr f, ENodePtr x) {
    ITyPtr res = imeta();
    unify(f->ty, iapp("fun", {x->ty, res}));
    ENodePtr n = enode(TTerm::Kind::Comb, "", std::move(res));
    n->a = std::move(f);
    n->b = std::move(x);
    return n;
  }

  ENodePtr mk_const_node(const std::string& name, const PTypePtr& generic) {
    std::vector<std::pair<std::string, ITyPtr>> m;
    ITyPtr ty = instantiate(generic, m);
    ENodePtr n = enode(TTerm::Kind::Const, name, std::move(ty));
    n->inst = std::move(m);
    return n;
  }

  ENodePtr eq_const() {
    PTypePtr g = tables.const_type("=");
    if (!g) g = pty_fun(ptyvar("A"), pty_fun(ptyvar("A"), pty_bool()));
    return mk_const_node("=", g);
  }

  ENodePtr resolve(const std::string& name) {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (it->first == name)
        return enode(TTerm::Kind::Var, name, it->second);
    if (PTypePtr g = tables.const_type(name)) return mk_const_node(name, g);
    for (auto& [n, t] : free)
      if (n == name) return enode(TTerm::Kind::Var, name, t);
    free.emplace_back(name, imeta());
    return enode(TTerm::Kind::Var, name, free.back().second);
  }

  bool starts_atom() const {
    return toks[i].k == Tok::Ident || toks[i].k == Tok::LParen;
  }

  ENodePtr atom() {
    ENodePtr n;
    if (toks[i].k == Tok::Ident) {
      n = resolve(toks[i].text);
      ++i;
    } else if (toks[i].k == Tok::LParen) {
      if (toks[i + 1].k == Tok::Eq && toks[i + 2].k == Tok::RParen) {
        n = eq_const();
        i += 3;
      } else {
        ++i;
        n = term();
        if (toks[i].k != Tok::RParen) unexpected();
        ++i;
      }
    } else {
      unexpected();
    }
    if (toks[i].k == Tok::Colon) {
      ++i;
      unify(n->ty, rigid(embedded_type()));
    }
    return n;
  }

  ENodePtr appterm() {
    ENodePtr n = atom();
    while (starts_atom()) n = mk_comb(n, atom());
    return n;
  }

  ENodePtr term() {
    if (toks[i].k == Tok::Backslash) {
      ++i;
      std::vector<ENodePtr> binders;
      while (toks[i].k == Tok::Ident) {
        ENodePtr v = enode(TTerm::Kind::Var, toks[i].text, imeta());
        ++i;
        if (toks[i].k == Tok::Colon) {
          ++i;
          unify(v->ty, rigid(embedded_type()));
        }
        binders.push_back(v);
        bound.emplace_back(binders.back()->name, binders.back()->ty);
      }
      if (binders.empty() || toks[i].k != Tok::Dot) unexpected();
      ++i;
      ENodePtr body = term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        ENodePtr n =
            enode(TTerm::Kind::Abs, "", iapp("fun", {(*it)->ty, body->ty}));
        n->a = *it;
        n->b = std::move(body);
        body = std::move(n);
        bound.pop_back();
      }
      return body;
    }
    ENodePtr l = appterm();
    if (toks[i].k == Tok::Eq) {
      ++i;
      ENodePtr r = term();
      return mk_comb(mk_comb(eq_const(), std::move(l)), std::move(r));
    }
    return l;
  }
};

TTermPtr finalize(const ENodePtr& n) {
  switch (n->kind) {
    case TTerm::Kind::Var:
      return tvar(n->name, zonk(n->ty));
    case TTerm::Kind::Const: {
      std::vector<std::pair<PTypePtr, std::string>> inst;
      for (const auto& [gname, meta] : n->inst) {
        PTypePtr z = zonk(meta);
        if (z->is_var && z->name == gname) continue;  // identity entry
        inst.emplace_back(std::move(z), gname);
      }
      return tconst(n->name, zonk(n->ty), std::move(inst));
    }
    case TTerm::Kind::Comb:
      return tcomb(finalize(n->a), finalize(n->b));
    case TTerm::Kind::Abs:
      return tabs(finalize(n->a), finalize(n->b));
  }
  fail("finalize: bad term");
}

}  // namespace

PTypePtr parse_ptype(const std::string& src, const Tables& tables) {
  std::vector<Token> toks = lex(src, "parse_type");
  size_t i = 0;
  if (toks[i].k == Tok::Colon) ++i;  // a leading ':' is permitted
  TypeParser tp{toks, i, tables, /*embedded=*/false};
  PTypePtr t = tp.type();
  if (toks[i].k != Tok::End) tp.unexpected();
  return t;
}

TTermPtr parse_tterm(const std::string& src, const Tables& tables) {
  std::vector<Token> toks = lex(src, "parse_term");
  TermParser p(toks, tables);
  ENodePtr n = p.term();
  if (toks[p.i].k != Tok::End) p.unexpected();
  return finalize(n);
}

// -- Printing ----------------------------------------------------------------

namespace {

void print_ptype_rec(const PTypePtr& ty, int prec, std::string& out) {
  if (ty->is_var) {
    out += ty->name;
    return;
  }
  if (ty->name == "fun" && ty->args.size() == 2) {
    bool paren = prec > 0;
    if (paren) out += '(';
    print_ptype_rec(ty->args[0], 1, out);
    out += " -> ";
    print_ptype_rec(ty->args[1], 0, out);
    if (paren) out += ')';
    return;
  }
  if (ty->args.empty()) {
    out += ty->name;
    return;
  }
  if (ty->args.size() == 1) {
    print_ptype_rec(ty->args[0], 1, out);
    out += ' ';
    out += ty->name;
    return;
  }
  out += '(';
  for (size_t i = 0; i < ty->args.size(); ++i) {
    if (i) out += ", ";
    print_ptype_rec(ty->args[i], 0, out);
  }
  out += ") ";
  out += ty->name;
}

bool is_bool_ty(const PTypePtr& ty) {
  return !ty->is_var && ty->name == "bool" && ty->args.empty();
}

struct NamedVar {
  std::string name;
  PTypePtr ty;
};

bool same_var(const NamedVar& a, const std::string& name, const PTypePtr& ty) {
  return a.name == name && ptype_eq(a.ty, ty);
}

void collect_free_vars(const TTermPtr& t, std::vector<NamedVar>& bound,
                       std::vector<NamedVar>& out) {
  switch (t->kind) {
    case TTerm::Kind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (same_var(*it, t->name, t->ty)) return;
      for (const auto& v : out)
        if (same_var(v, t->name, t->ty)) return;
      out.push_back({t->name, t->ty});
      return;
    }
    case TTerm::Kind::Const:
      return;
    case TTerm::Kind::Comb:
      collect_free_vars(t->a, bound, out);
      collect_free_vars(t->b, bound, out);
      return;
    case TTerm::Kind::Abs:
      bound.push_back({t->a->name, t->a->ty});
      collect_free_vars(t->b, bound, out);
      bound.pop_back();
      return;
  }
}

void collect_names(const TTermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TTerm::Kind::Var:
    case TTerm::Kind::Const:
      out.insert(t->name);
      return;
    case TTerm::Kind::Comb:
    case TTerm::Kind::Abs:
      collect_names(t->a, out);
      collect_names(t->b, out);
      return;
  }
}

// Replaces free occurrences of (name, ty) with a same-typed variable named
// newname.  Binders of exactly (name, ty) shadow as usual.
TTermPtr rename_free(const TTermPtr& t, const std::string& name,
                     const PTypePtr& ty, const std::string& newname) {
  switch (t->kind) {
    case TTerm::Kind::Var:
      if (t->name == name && ptype_eq(t->ty, ty)) return tvar(newname, t->ty);
      return t;
    case TTerm::Kind::Const:
      return t;
    case TTerm::Kind::Comb:
      return tcomb(rename_free(t->a, name, ty, newname),
                   rename_free(t->b, name, ty, newname));
    case TTerm::Kind::Abs:
      if (t->a->name == name && ptype_eq(t->a->ty, ty)) return t;
      return tabs(t->a, rename_free(t->b, name, ty, newname));
  }
  fail("rename_free: bad term");
}

// Renames binders whose name collides with a differently-typed variable
// free in their body, so the printed text re-binds occurrences correctly.
TTermPtr shadow_safe(const TTermPtr& t) {
  switch (t->kind) {
    case TTerm::Kind::Var:
    case TTerm::Kind::Const:
      return t;
    case TTerm::Kind::Comb:
      return tcomb(shadow_safe(t->a), shadow_safe(t->b));
    case TTerm::Kind::Abs: {
      std::vector<NamedVar> bound, fvs;
      collect_free_vars(t->b, bound, fvs);
      bool clash = false;
      for (const auto& v : fvs)
        if (v.name == t->a->name && !ptype_eq(v.ty, t->a->ty)) clash = true;
      if (!clash) return tabs(t->a, shadow_safe(t->b));
      std::set<std::string> avoid;
      collect_names(t->b, avoid);
      std::string newname = t->a->name;
      do {
        newname += '\'';
      } while (avoid.count(newname));
      TTermPtr body = rename_free(t->b, t->a->name, t->a->ty, newname);
      return tabs(tvar(newname, t->a->ty), shadow_safe(body));
    }
  }
  fail("shadow_safe: bad term");
}

bool is_eq_comb(const TTermPtr& t) {
  return t->kind == TTerm::Kind::Comb && t->a->kind == TTerm::Kind::Comb &&
         t->a->a->kind == TTerm::Kind::Const && t->a->a->name == "=";
}

// First occurrence (in print order) of each non-bool free variable gets a
// type annotation, which pins every variable type on re-parse.
void mark_annotations(const TTermPtr& t, std::vector<NamedVar>& bound,
                      std::vector<NamedVar>& seen,
                      std::set<const TTerm*>& out) {
  switch (t->kind) {
    case TTerm::Kind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (same_var(*it, t->name, t->ty)) return;
      for (const auto& v : seen)
        if (same_var(v, t->name, t->ty)) return;
      seen.push_back({t->name, t->ty});
      if (!is_bool_ty(t->ty)) out.insert(t.get());
      return;
    }
    case TTerm::Kind::Const:
      return;
    case TTerm::Kind::Comb:
      mark_annotations(t->a, bound, seen, out);
      mark_annotations(t->b, bound, seen, out);
      return;
    case TTerm::Kind::Abs:
      bound.push_back({t->a->name, t->a->ty});
      mark_annotations(t->b, bound, seen, out);
      bound.pop_back();
      return;
  }
}

// Precedence levels: lambda 0, '=' 1, application 2, atom 3.
void print_rec(const TTermPtr& t, int prec,
               const std::set<const TTerm*>& annots, std::string& out) {
  switch (t->kind) {
    case TTerm::Kind::Var:
      if (annots.count(t.get())) {
        out += '(';
        out += t->name;
        out += ':';
        print_ptype_rec(t->ty, 0, out);
        out += ')';
      } else {
        out += t->name;
      }
      return;
    case TTerm::Kind::Const:
      out += t->name == "=" ? "(=)" : t->name;
      return;
    case TTerm::Kind::Comb: {
      if (is_eq_comb(t)) {
        bool paren = prec > 1;
        if (paren) out += '(';
        print_rec(t->a->b, 2, annots, out);
        out += " = ";
        print_rec(t->b, 1, annots, out);
        if (paren) out += ')';
        return;
      }
      bool paren = prec > 2;
      if (paren) out += '(';
      print_rec(t->a, 2, annots, out);
      out += ' ';
      print_rec(t->b, 3, annots, out);
      if (paren) out += ')';
      return;
    }
    case TTerm::Kind::Abs: {
      bool paren = prec > 0;
      if (paren) out += '(';
      out += '\\';
      out += t->a->name;
      if (!is_bool_ty(t->a->ty)) {
        out += ':';
        print_ptype_rec(t->a->ty, 0, out);
      }
      out += ". ";
      print_rec(t->b, 0, annots, out);
      if (paren) out += ')';
      return;
    }
  }
}

std::string print_prepared(const TTermPtr& t) {
  TTermPtr safe = shadow_safe(t);
  std::vector<NamedVar> bound, seen;
  std::set<const TTerm*> annots;
  mark_annotations(safe, bound, seen, annots);
  std::string out;
  print_rec(safe, 0, annots, out);
  return out;
}

}  // namespace

std::string print_ptype(const PTypePtr& ty) {
  std::string out;
  print_ptype_rec(ty, 0, out);
  return out;
}

std::string print_tterm(const TTermPtr& t) { return print_prepared(t); }

std::string print_sequent(const std::vector<TTermPtr>& hyps,
                          const TTermPtr& concl) {
  std::string out;
  for (size_t i = 0; i < hyps.size(); ++i) {
    if (i) out += ", ";
    out += print_prepared(hyps[i]);
  }
  if (!hyps.empty()) out += ' ';
  out += "|- ";
  out += print_prepared(concl);
  return out;
}

}  // namespace syntax

// -- Stateless-kernel adapters ---------------------------------------------

syntax::PTypePtr from_kernel_type(const TypePtr& ty) {
  if (ty->is_var()) return syntax::ptyvar(ty->name());
  std::vector<syntax::PTypePtr> args;
  args.reserve(ty->args().size());
  for (const auto& a : ty->args()) args.push_back(from_kernel_type(a));
  return syntax::ptyapp(ty->op()->name(), std::move(args));
}

TypePtr to_kernel_type(const syntax::PTypePtr& ty, const SymbolTable& table) {
  if (ty->is_var) return mk_tyvar(ty->name);
  TypeOpPtr op = table.lookup_tyop(ty->name);
  if (!op) fail("parse_type: unknown type operator " + ty->name);
  std::vector<TypePtr> args;
  args.reserve(ty->args.size());
  for (const auto& a : ty->args) args.push_back(to_kernel_type(a, table));
  return mk_tyapp(std::move(op), std::move(args));
}

namespace {

// Does assigning the type variables of general produce specific?
bool type_matches(const TypePtr& general, const TypePtr& specific,
                  std::vector<std::pair<std::string, TypePtr>>& binding) {
  if (general->is_var()) {
    for (const auto& [n, t] : binding)
      if (n == general->name()) return type_eq(t, specific);
    binding.emplace_back(general->name(), specific);
    return true;
  }
  if (specific->is_var() || !typeop_eq(general->op(), specific->op()))
    return false;
  for (size_t i = 0; i < general->args().size(); ++i)
    if (!type_matches(general->args()[i], specific->args()[i], binding))
      return false;
  return true;
}

}  // namespace

syntax::TTermPtr from_kernel_term(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var:
      return syntax::tvar(t->name(), from_kernel_type(t->ty()));
    case Term::Kind::Const:
      return syntax::tconst(t->name(), from_kernel_type(t->ty()), {});
    case Term::Kind::Comb:
      return syntax::tcomb(from_kernel_term(t->fn()),
                           from_kernel_term(t->arg()));
    case Term::Kind::Abs:
      return syntax::tabs(from_kernel_term(t->bvar()),
                          from_kernel_term(t->body()));
  }
  fail("from_kernel_term: bad term");
}

TermPtr to_kernel_term(const syntax::TTermPtr& t, const SymbolTable& table) {
  switch (t->kind) {
    case syntax::TTerm::Kind::Var:
      return mk_var(t->name, to_kernel_type(t->ty, table));
    case syntax::TTerm::Kind::Const: {
      TypeSubst theta;
      if (!t->inst.empty()) {
        theta.reserve(t->inst.size());
        for (const auto& [ty, gname] : t->inst)
          theta.emplace_back(to_kernel_type(ty, table), mk_tyvar(gname));
      } else if (TermPtr generic = table.lookup_const(t->name)) {
        // Trees built by from_kernel_term carry the occurrence type but no
        // instantiation list, so recover one by matching the generic type.
        std::vector<std::pair<std::string, TypePtr>> binding;
        if (type_matches(generic->ty(), to_kernel_type(t->ty, table),
                         binding)) {
          theta.reserve(binding.size());
          for (auto& [gname, gty] : binding)
            theta.emplace_back(std::move(gty), mk_tyvar(gname));
        }
      }
      return table.mk_const(t->name, theta);
    }
    case syntax::TTerm::Kind::Comb:
      return mk_comb(to_kernel_term(t->a, table), to_kernel_term(t->b, table));
    case syntax::TTerm::Kind::Abs:
      return mk_abs(to_kernel_term(t->a, table), to_kernel_term(t->b, table));
  }
  fail("to_kernel_term: bad term");
}

std::optional<int> KernelTables::tyop_arity(const std::string& name) const {
  TypeOpPtr op = table_.lookup_tyop(name);
  if (!op) return std::nullopt;
  return op->arity();
}

syntax::PTypePtr KernelTables::const_type(const std::string& name) const {
  TermPtr c = table_.lookup_const(name);
  if (!c) return nullptr;
  return from_kernel_type(c->ty());
}

TypePtr parse_type(const std::string& src, const SymbolTable& table) {
  return to_kernel_type(syntax::parse_ptype(src, KernelTables(table)), table);
}

TermPtr parse_term(const std::string& src, const SymbolTable& table) {
  return to_kernel_term(syntax::parse_tterm(src, KernelTables(table)), table);
}

std::string print_type(const TypePtr& ty) {
  return syntax::print_ptype(from_kernel_type(ty));
}

std::string print_term(const TermPtr& t) {
  return syntax::print_tterm(from_kernel_term(t));
}

namespace {

bool const_is_current(const TermPtr& c, const SymbolTable& table) {
  TermPtr b = table.lookup_const(c->name());
  if (!b || !tag_eq(c->tag(), b->tag())) return false;
  std::vector<std::pair<std::string, TypePtr>> binding;
  return type_matches(b->ty(), c->ty(), binding);
}

bool term_is_current(const TermPtr& t, const SymbolTable& table) {
  switch (t->kind()) {
    case Term::Kind::Var:
      return true;
    case Term::Kind::Const:
      return const_is_current(t, table);
    case Term::Kind::Comb:
      return term_is_current(t->fn(), table) &&
             term_is_current(t->arg(), table);
    case Term::Kind::Abs:
      return term_is_current(t->body(), table);
  }
  return false;
}

}  // namespace

bool thm_is_current(const Thm& th, const SymbolTable& table) {
  if (!term_is_current(th.concl(), table)) return false;
  for (const auto& h : th.hyps())
    if (!term_is_current(h, table)) return false;
  return true;
}

std::string print_thm(const Thm& th, const SymbolTable& table) {
  if (!thm_is_current(th, table)) return "<obsolete theorem>";
  std::vector<syntax::TTermPtr> hyps;
  hyps.reserve(th.hyps().size());
  for (const auto& h : th.hyps()) hyps.push_back(from_kernel_term(h));
  return syntax::print_sequent(hyps, from_kernel_term(th.concl()));
}

}  // namespace taghol
