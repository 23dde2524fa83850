#include "bhw/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace bhw::fml {

using ord::Cmp;
using ord::OrdTerm;

namespace {

Formula mk(FNode n) { return Formula{std::make_shared<const FNode>(std::move(n))}; }

void check_level(const OrdTerm& alpha, const char* what) {
  if (ord::compare(alpha, ord::big_omega()) != Cmp::Less)
    throw Error(std::string(what) + " annotation must be below Omega: " +
                ord::render(alpha));
}

bool is_quantifier(FKind k) {
  switch (k) {
    case FKind::BEx: case FKind::BAll: case FKind::REx: case FKind::RAll:
    case FKind::Ex: case FKind::All: case FKind::RelEx: case FKind::RelAll:
      return true;
    default:
      return false;
  }
}

}  // namespace

SetTerm var(const std::string& name) { return SetTerm{TKind::Var, name}; }
SetTerm empty_set() { return SetTerm{TKind::Empty, {}}; }
SetTerm omega_const() { return SetTerm{TKind::OmegaC, {}}; }

bool operator==(const SetTerm& s, const SetTerm& t) {
  return s.kind == t.kind && (s.kind != TKind::Var || s.name == t.name);
}
bool operator<(const SetTerm& s, const SetTerm& t) {
  if (s.kind != t.kind) return s.kind < t.kind;
  return s.kind == TKind::Var && s.name < t.name;
}

std::string render(const SetTerm& t) {
  switch (t.kind) {
    case TKind::Var: return t.name;
    case TKind::Empty: return "empty";
    case TKind::OmegaC: return "omega";
  }
  return "?";
}

Formula in(const SetTerm& a, const SetTerm& b) { return mk({FKind::In, a, b}); }
Formula nin(const SetTerm& a, const SetTerm& b) { return mk({FKind::NotIn, a, b}); }
Formula rel(const std::string& u, const SetTerm& a) {
  FNode n{FKind::Rel, a};
  n.rel = u;
  return mk(std::move(n));
}
Formula nrel(const std::string& u, const SetTerm& a) {
  FNode n{FKind::NotRel, a};
  n.rel = u;
  return mk(std::move(n));
}
Formula m_atom(const OrdTerm& alpha, const SetTerm& a) {
  check_level(alpha, "M");
  FNode n{FKind::MAtom, a};
  n.alpha = alpha;
  return mk(std::move(n));
}
Formula nm_atom(const OrdTerm& alpha, const SetTerm& a) {
  check_level(alpha, "M");
  FNode n{FKind::NotMAtom, a};
  n.alpha = alpha;
  return mk(std::move(n));
}
Formula or_(const Formula& f, const Formula& g) {
  FNode n{FKind::Or};
  n.f = f;
  n.g = g;
  return mk(std::move(n));
}
Formula and_(const Formula& f, const Formula& g) {
  FNode n{FKind::And};
  n.f = f;
  n.g = g;
  return mk(std::move(n));
}
Formula bex(const std::string& x, const SetTerm& a, const Formula& body) {
  FNode n{FKind::BEx};
  n.b = a;
  n.var = x;
  n.f = body;
  return mk(std::move(n));
}
Formula ball(const std::string& x, const SetTerm& a, const Formula& body) {
  FNode n{FKind::BAll};
  n.b = a;
  n.var = x;
  n.f = body;
  return mk(std::move(n));
}
Formula rex(const OrdTerm& alpha, const std::string& x, const Formula& body) {
  check_level(alpha, "ranked quantifier");
  FNode n{FKind::REx};
  n.alpha = alpha;
  n.var = x;
  n.f = body;
  return mk(std::move(n));
}
Formula rall(const OrdTerm& alpha, const std::string& x, const Formula& body) {
  check_level(alpha, "ranked quantifier");
  FNode n{FKind::RAll};
  n.alpha = alpha;
  n.var = x;
  n.f = body;
  return mk(std::move(n));
}
Formula ex(const std::string& x, const Formula& body) {
  FNode n{FKind::Ex};
  n.var = x;
  n.f = body;
  return mk(std::move(n));
}
Formula all(const std::string& x, const Formula& body) {
  FNode n{FKind::All};
  n.var = x;
  n.f = body;
  return mk(std::move(n));
}
Formula rel_ex(const std::string& X, const Formula& body) {
  FNode n{FKind::RelEx};
  n.rel = X;
  n.f = body;
  return mk(std::move(n));
}
Formula rel_all(const std::string& X, const Formula& body) {
  FNode n{FKind::RelAll};
  n.rel = X;
  n.f = body;
  return mk(std::move(n));
}

Formula impl(const Formula& f, const Formula& g) { return or_(negate(f), g); }
Formula iff(const Formula& f, const Formula& g) {
  return and_(impl(f, g), impl(g, f));
}

Formula negate(const Formula& f) {
  const FNode& n = *f;
  switch (n.kind) {
    case FKind::In: return nin(n.a, n.b);
    case FKind::NotIn: return in(n.a, n.b);
    case FKind::Rel: return nrel(n.rel, n.a);
    case FKind::NotRel: return rel(n.rel, n.a);
    case FKind::MAtom: return nm_atom(n.alpha, n.a);
    case FKind::NotMAtom: return m_atom(n.alpha, n.a);
    case FKind::Or: return and_(negate(n.f), negate(n.g));
    case FKind::And: return or_(negate(n.f), negate(n.g));
    case FKind::BEx: return ball(n.var, n.b, negate(n.f));
    case FKind::BAll: return bex(n.var, n.b, negate(n.f));
    case FKind::REx: return rall(n.alpha, n.var, negate(n.f));
    case FKind::RAll: return rex(n.alpha, n.var, negate(n.f));
    case FKind::Ex: return all(n.var, negate(n.f));
    case FKind::All: return ex(n.var, negate(n.f));
    case FKind::RelEx: return rel_all(n.rel, negate(n.f));
    case FKind::RelAll: return rel_ex(n.rel, negate(n.f));
  }
  throw Error("negate: bad node");
}

namespace {

struct Scan {
  bool unbEx = false, unbAll = false, relQ = false, ranked = false, matom = false;
};

void scan(const Formula& f, Scan& s) {
  const FNode& n = *f;
  switch (n.kind) {
    case FKind::Ex: s.unbEx = true; break;
    case FKind::All: s.unbAll = true; break;
    case FKind::RelEx: case FKind::RelAll: s.relQ = true; break;
    case FKind::REx: case FKind::RAll: s.ranked = true; break;
    case FKind::MAtom: case FKind::NotMAtom: s.matom = true; break;
    default: break;
  }
  if (n.f) scan(n.f, s);
  if (n.g) scan(n.g, s);
}

}  // namespace

ClassFlags class_of(const Formula& f) {
  Scan s;
  scan(f, s);
  ClassFlags c;
  c.l2set = !s.ranked && !s.matom;
  c.d = !s.unbEx && !s.unbAll && !s.relQ;
  c.b = !s.unbEx && !s.unbAll;
  c.delta0 = c.l2set && c.d;
  c.sigma = c.l2set && !s.unbAll && !s.relQ;
  c.s = !s.unbAll && !s.relQ;
  c.s0 = c.sigma && !c.delta0;
  return c;
}

ord::OrdTerm rank(const Formula& f) {
  const FNode& n = *f;
  switch (n.kind) {
    case FKind::In: case FKind::NotIn: case FKind::Rel: case FKind::NotRel:
      return ord::zero();
    case FKind::MAtom: case FKind::NotMAtom:
      return ord::omega_times(n.alpha);
    case FKind::Or: case FKind::And: {
      OrdTerm rf = rank(n.f), rg = rank(n.g);
      return ord::succ(ord::compare(rf, rg) == Cmp::Less ? rg : rf);
    }
    case FKind::BEx: case FKind::BAll:
      // rk(u in a /\ F[u]) + 1
      return ord::nf_sum(rank(n.f), ord::from_nat(2));
    case FKind::REx: case FKind::RAll: {
      OrdTerm ma = ord::omega_times(n.alpha), rf = rank(n.f);
      OrdTerm m = ord::compare(ma, rf) == Cmp::Less ? rf : ma;
      return ord::nf_sum(m, ord::from_nat(2));
    }
    case FKind::Ex: case FKind::All: {
      if (class_of(n.f).delta0) return ord::big_omega();
      OrdTerm r3 = ord::nf_sum(rank(n.f), ord::from_nat(3));
      OrdTerm o1 = ord::succ(ord::big_omega());
      return ord::compare(o1, r3) == Cmp::Less ? r3 : o1;
    }
    case FKind::RelEx: case FKind::RelAll:
      return ord::succ(rank(n.f));
  }
  throw Error("rank: bad node");
}

namespace {

void params_into(const Formula& f, ParamSet& out) {
  const FNode& n = *f;
  switch (n.kind) {
    case FKind::In: case FKind::NotIn: case FKind::Rel: case FKind::NotRel:
      out.insert(ord::zero());
      return;
    case FKind::MAtom: case FKind::NotMAtom:
      out.insert(n.alpha);
      return;
    case FKind::BEx: case FKind::BAll:
      out.insert(ord::zero());  // the bound term contributes level 0
      params_into(n.f, out);
      return;
    case FKind::REx: case FKind::RAll:
      out.insert(n.alpha);
      params_into(n.f, out);
      return;
    case FKind::Or: case FKind::And:
      params_into(n.f, out);
      params_into(n.g, out);
      return;
    case FKind::Ex: case FKind::All: case FKind::RelEx: case FKind::RelAll:
      params_into(n.f, out);
      return;
  }
}

}  // namespace

ParamSet params(const Formula& f) {
  ParamSet out;
  params_into(f, out);
  return out;
}

ord::OrdTerm level(const Formula& f) {
  if (ord::compare(rank(f), ord::big_omega()) != Cmp::Less) return ord::big_omega();
  ParamSet p = params(f);
  return p.empty() ? ord::zero() : *p.rbegin();
}

int length(const Formula& f) {
  const FNode& n = *f;
  switch (n.kind) {
    case FKind::In: case FKind::NotIn: case FKind::Rel: case FKind::NotRel:
    case FKind::MAtom: case FKind::NotMAtom:
      return 0;
    case FKind::Or: case FKind::And:
      return std::max(length(n.f), length(n.g)) + 1;
    default:
      return length(n.f) + 1;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string cand = base;
  while (avoid.count(cand)) cand += "'";
  return cand;
}

namespace {

void free_vars_into(const Formula& f, std::set<std::string>& bound,
                    std::set<std::string>& out) {
  const FNode& n = *f;
  auto term = [&](const SetTerm& t) {
    if (t.kind == TKind::Var && !bound.count(t.name)) out.insert(t.name);
  };
  switch (n.kind) {
    case FKind::In: case FKind::NotIn: term(n.a); term(n.b); return;
    case FKind::Rel: case FKind::NotRel: case FKind::MAtom: case FKind::NotMAtom:
      term(n.a);
      return;
    case FKind::Or: case FKind::And:
      free_vars_into(n.f, bound, out);
      free_vars_into(n.g, bound, out);
      return;
    case FKind::BEx: case FKind::BAll: {
      term(n.b);
      bool fresh = bound.insert(n.var).second;
      free_vars_into(n.f, bound, out);
      if (fresh) bound.erase(n.var);
      return;
    }
    case FKind::REx: case FKind::RAll: case FKind::Ex: case FKind::All: {
      bool fresh = bound.insert(n.var).second;
      free_vars_into(n.f, bound, out);
      if (fresh) bound.erase(n.var);
      return;
    }
    case FKind::RelEx: case FKind::RelAll:
      free_vars_into(n.f, bound, out);
      return;
  }
}

void free_rels_into(const Formula& f, std::set<std::string>& bound,
                    std::set<std::string>& out) {
  const FNode& n = *f;
  switch (n.kind) {
    case FKind::Rel: case FKind::NotRel:
      if (!bound.count(n.rel)) out.insert(n.rel);
      return;
    case FKind::RelEx: case FKind::RelAll: {
      bool fresh = bound.insert(n.rel).second;
      free_rels_into(n.f, bound, out);
      if (fresh) bound.erase(n.rel);
      return;
    }
    default:
      if (n.f) free_rels_into(n.f, bound, out);
      if (n.g) free_rels_into(n.g, bound, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

std::set<std::string> free_rel_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_rels_into(f, bound, out);
  return out;
}

Formula substitute(const Formula& f, const std::string& x, const SetTerm& t) {
  const FNode& n = *f;
  auto st = [&](const SetTerm& s) {
    return (s.kind == TKind::Var && s.name == x) ? t : s;
  };
  switch (n.kind) {
    case FKind::In: return in(st(n.a), st(n.b));
    case FKind::NotIn: return nin(st(n.a), st(n.b));
    case FKind::Rel: return rel(n.rel, st(n.a));
    case FKind::NotRel: return nrel(n.rel, st(n.a));
    case FKind::MAtom: return m_atom(n.alpha, st(n.a));
    case FKind::NotMAtom: return nm_atom(n.alpha, st(n.a));
    case FKind::Or: return or_(substitute(n.f, x, t), substitute(n.g, x, t));
    case FKind::And: return and_(substitute(n.f, x, t), substitute(n.g, x, t));
    case FKind::RelEx: return rel_ex(n.rel, substitute(n.f, x, t));
    case FKind::RelAll: return rel_all(n.rel, substitute(n.f, x, t));
    default: break;
  }
  // set-variable binders
  SetTerm nb = (n.kind == FKind::BEx || n.kind == FKind::BAll) ? st(n.b) : n.b;
  std::string v = n.var;
  Formula body = n.f;
  if (v == x) {
    // bound occurrence shadows x; only the bound term changes
  } else {
    if (t.kind == TKind::Var && v == t.name && free_vars(body).count(x)) {
      std::set<std::string> avoid = free_vars(body);
      avoid.insert(x);
      avoid.insert(t.name);
      std::string v2 = fresh_name(v, avoid);
      body = substitute(body, v, var(v2));
      v = v2;
    }
    if (v != x) body = substitute(body, x, t);
  }
  switch (n.kind) {
    case FKind::BEx: return bex(v, nb, body);
    case FKind::BAll: return ball(v, nb, body);
    case FKind::REx: return rex(n.alpha, v, body);
    case FKind::RAll: return rall(n.alpha, v, body);
    case FKind::Ex: return ex(v, body);
    case FKind::All: return all(v, body);
    default: throw Error("substitute: bad node");
  }
}

Formula substitute_rel(const Formula& f, const std::string& X, const std::string& U) {
  const FNode& n = *f;
  switch (n.kind) {
    case FKind::Rel: return rel(n.rel == X ? U : n.rel, n.a);
    case FKind::NotRel: return nrel(n.rel == X ? U : n.rel, n.a);
    case FKind::RelEx: case FKind::RelAll: {
      std::string v = n.rel;
      Formula body = n.f;
      if (v == X) return f;  // shadowed
      if (v == U && free_rel_vars(body).count(X)) {
        std::set<std::string> avoid = free_rel_vars(body);
        avoid.insert(X);
        avoid.insert(U);
        std::string v2 = fresh_name(v, avoid);
        body = substitute_rel(body, v, v2);
        v = v2;
      }
      body = substitute_rel(body, X, U);
      return n.kind == FKind::RelEx ? rel_ex(v, body) : rel_all(v, body);
    }
    default: {
      if (!n.f) return f;
      FNode m = n;
      m.f = substitute_rel(n.f, X, U);
      if (n.g) m.g = substitute_rel(n.g, X, U);
      return mk(std::move(m));
    }
  }
}

Formula bound_exists(const Formula& f, const OrdTerm& beta) {
  const FNode& n = *f;
  if (n.kind == FKind::All)
    throw HypothesisViolation("bound_exists: formula is not in class S");
  if (n.kind == FKind::Ex) return rex(beta, n.var, bound_exists(n.f, beta));
  if (!n.f) return f;
  FNode m = n;
  m.f = bound_exists(n.f, beta);
  if (n.g) m.g = bound_exists(n.g, beta);
  return mk(std::move(m));
}

Formula relativize(const Formula& f, const SetTerm& a) {
  const FNode& n = *f;
  if (n.kind == FKind::Ex || n.kind == FKind::All) {
    std::string v = n.var;
    Formula body = n.f;
    if (a.kind == TKind::Var && v == a.name) {
      std::set<std::string> avoid = free_vars(body);
      avoid.insert(a.name);
      std::string v2 = fresh_name(v, avoid);
      body = substitute(body, v, var(v2));
      v = v2;
    }
    body = relativize(body, a);
    return n.kind == FKind::Ex ? bex(v, a, body) : ball(v, a, body);
  }
  if (!n.f) return f;
  FNode m = n;
  m.f = relativize(n.f, a);
  if (n.g) m.g = relativize(n.g, a);
  return mk(std::move(m));
}

namespace {

struct CanonEnv {
  std::map<std::string, std::string> setv, relv;
  int nextSet = 0, nextRel = 0;
};

Formula canon_rec(const Formula& f, CanonEnv env) {
  const FNode& n = *f;
  auto st = [&](const SetTerm& t) {
    if (t.kind != TKind::Var) return t;
    auto it = env.setv.find(t.name);
    return it == env.setv.end() ? t : var(it->second);
  };
  auto rl = [&](const std::string& r) {
    auto it = env.relv.find(r);
    return it == env.relv.end() ? r : it->second;
  };
  switch (n.kind) {
    case FKind::In: return in(st(n.a), st(n.b));
    case FKind::NotIn: return nin(st(n.a), st(n.b));
    case FKind::Rel: return rel(rl(n.rel), st(n.a));
    case FKind::NotRel: return nrel(rl(n.rel), st(n.a));
    case FKind::MAtom: return m_atom(n.alpha, st(n.a));
    case FKind::NotMAtom: return nm_atom(n.alpha, st(n.a));
    case FKind::Or: return or_(canon_rec(n.f, env), canon_rec(n.g, env));
    case FKind::And: return and_(canon_rec(n.f, env), canon_rec(n.g, env));
    case FKind::RelEx: case FKind::RelAll: {
      CanonEnv e2 = env;
      std::string nn = "@" + std::to_string(e2.nextRel++);
      e2.relv[n.rel] = nn;
      Formula body = canon_rec(n.f, e2);
      return n.kind == FKind::RelEx ? rel_ex(nn, body) : rel_all(nn, body);
    }
    default: {
      CanonEnv e2 = env;
      std::string nn = "$" + std::to_string(e2.nextSet++);
      e2.setv[n.var] = nn;
      SetTerm nb = st(n.b);
      Formula body = canon_rec(n.f, e2);
      switch (n.kind) {
        case FKind::BEx: return bex(nn, nb, body);
        case FKind::BAll: return ball(nn, nb, body);
        case FKind::REx: return rex(n.alpha, nn, body);
        case FKind::RAll: return rall(n.alpha, nn, body);
        case FKind::Ex: return ex(nn, body);
        case FKind::All: return all(nn, body);
        default: throw Error("canon: bad node");
      }
    }
  }
}

}  // namespace

Formula canon(const Formula& f) { return canon_rec(f, CanonEnv{}); }

ord::Cmp compare_raw(const Formula& f, const Formula& g) {
  const FNode& a = *f;
  const FNode& b = *g;
  auto cmp_int = [](long x, long y) {
    return x < y ? Cmp::Less : x > y ? Cmp::Greater : Cmp::Equal;
  };
  auto cmp_str = [&](const std::string& x, const std::string& y) {
    return cmp_int(x.compare(y), 0);
  };
  auto cmp_term = [&](const SetTerm& x, const SetTerm& y) {
    Cmp c = cmp_int((int)x.kind, (int)y.kind);
    if (c != Cmp::Equal) return c;
    return x.kind == TKind::Var ? cmp_str(x.name, y.name) : Cmp::Equal;
  };
  Cmp c = cmp_int((int)a.kind, (int)b.kind);
  if (c != Cmp::Equal) return c;
  if ((c = cmp_term(a.a, b.a)) != Cmp::Equal) return c;
  if ((c = cmp_term(a.b, b.b)) != Cmp::Equal) return c;
  if ((c = cmp_str(a.rel, b.rel)) != Cmp::Equal) return c;
  if ((c = ord::compare(a.alpha, b.alpha)) != Cmp::Equal) return c;
  if ((c = cmp_str(a.var, b.var)) != Cmp::Equal) return c;
  if (bool(a.f) != bool(b.f)) return bool(a.f) ? Cmp::Greater : Cmp::Less;
  if (a.f && (c = compare_raw(a.f, b.f)) != Cmp::Equal) return c;
  if (bool(a.g) != bool(b.g)) return bool(a.g) ? Cmp::Greater : Cmp::Less;
  if (a.g && (c = compare_raw(a.g, b.g)) != Cmp::Equal) return c;
  return Cmp::Equal;
}

bool alpha_equal(const Formula& f, const Formula& g) {
  return compare_raw(canon(f), canon(g)) == Cmp::Equal;
}

std::string render(const Formula& f) {
  const FNode& n = *f;
  auto o = [](const OrdTerm& t) { return ord::render(t, false); };
  switch (n.kind) {
    case FKind::In: return "(in " + render(n.a) + " " + render(n.b) + ")";
    case FKind::NotIn: return "(nin " + render(n.a) + " " + render(n.b) + ")";
    case FKind::Rel: return "(rel " + n.rel + " " + render(n.a) + ")";
    case FKind::NotRel: return "(nrel " + n.rel + " " + render(n.a) + ")";
    case FKind::MAtom: return "(M " + o(n.alpha) + " " + render(n.a) + ")";
    case FKind::NotMAtom: return "(nM " + o(n.alpha) + " " + render(n.a) + ")";
    case FKind::Or: return "(or " + render(n.f) + " " + render(n.g) + ")";
    case FKind::And: return "(and " + render(n.f) + " " + render(n.g) + ")";
    case FKind::BEx:
      return "(bex " + n.var + " " + render(n.b) + " " + render(n.f) + ")";
    case FKind::BAll:
      return "(ball " + n.var + " " + render(n.b) + " " + render(n.f) + ")";
    case FKind::REx:
      return "(rex " + o(n.alpha) + " " + n.var + " " + render(n.f) + ")";
    case FKind::RAll:
      return "(rall " + o(n.alpha) + " " + n.var + " " + render(n.f) + ")";
    case FKind::Ex: return "(ex " + n.var + " " + render(n.f) + ")";
    case FKind::All: return "(all " + n.var + " " + render(n.f) + ")";
    case FKind::RelEx: return "(Rex " + n.rel + " " + render(n.f) + ")";
    case FKind::RelAll: return "(Rall " + n.rel + " " + render(n.f) + ")";
  }
  throw Error("render: bad node");
}

namespace {

struct SexprParser {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  std::string token() {
    skip();
    if (i >= s.size()) throw ParseError("unexpected end of formula \"" + s + "\"");
    if (s[i] == '(' || s[i] == ')') return std::string(1, s[i++]);
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) &&
           s[j] != '(' && s[j] != ')')
      ++j;
    std::string t = s.substr(i, j - i);
    i = j;
    return t;
  }
  std::string ident() {
    std::string t = token();
    if (t == "(" || t == ")")
      throw ParseError("expected identifier in formula \"" + s + "\"");
    if (t[0] == '$' || t[0] == '@')
      throw ParseError("identifiers may not start with '$' or '@': " + t);
    return t;
  }
  SetTerm term() {
    std::string t = token();
    if (t == "(" || t == ")") throw ParseError("expected set term in \"" + s + "\"");
    if (t == "empty") return empty_set();
    if (t == "omega") return omega_const();
    if (t[0] == '$' || t[0] == '@')
      throw ParseError("identifiers may not start with '$' or '@': " + t);
    return var(t);
  }
  OrdTerm ordterm() { return ord::parse(token()); }

  Formula formula() {
    std::string t = token();
    if (t != "(") throw ParseError("expected '(' in formula \"" + s + "\"");
    std::string head = token();
    Formula r;
    if (head == "in") { SetTerm a = term(), b = term(); r = in(a, b); }
    else if (head == "nin") { SetTerm a = term(), b = term(); r = nin(a, b); }
    else if (head == "rel") { std::string u = ident(); r = rel(u, term()); }
    else if (head == "nrel") { std::string u = ident(); r = nrel(u, term()); }
    else if (head == "M") { OrdTerm a = ordterm(); r = m_atom(a, term()); }
    else if (head == "nM") { OrdTerm a = ordterm(); r = nm_atom(a, term()); }
    else if (head == "or") { Formula f = formula(), g = formula(); r = or_(f, g); }
    else if (head == "and") { Formula f = formula(), g = formula(); r = and_(f, g); }
    else if (head == "bex") { std::string x = ident(); SetTerm a = term(); r = bex(x, a, formula()); }
    else if (head == "ball") { std::string x = ident(); SetTerm a = term(); r = ball(x, a, formula()); }
    else if (head == "rex") { OrdTerm a = ordterm(); std::string x = ident(); r = rex(a, x, formula()); }
    else if (head == "rall") { OrdTerm a = ordterm(); std::string x = ident(); r = rall(a, x, formula()); }
    else if (head == "ex") { std::string x = ident(); r = ex(x, formula()); }
    else if (head == "all") { std::string x = ident(); r = all(x, formula()); }
    else if (head == "Rex") { std::string X = ident(); r = rel_ex(X, formula()); }
    else if (head == "Rall") { std::string X = ident(); r = rel_all(X, formula()); }
    else throw ParseError("unknown formula head '" + head + "'");
    std::string close = token();
    if (close != ")") throw ParseError("expected ')' in formula \"" + s + "\"");
    return r;
  }
};

}  // namespace

Formula parse(const std::string& text) {
  SexprParser p{text};
  Formula f = p.formula();
  p.skip();
  if (p.i != text.size()) throw ParseError("trailing input in formula \"" + text + "\"");
  return f;
}

SetTerm parse_term(const std::string& text) {
  SexprParser p{text};
  SetTerm t = p.term();
  p.skip();
  if (p.i != text.size()) throw ParseError("trailing input in term \"" + text + "\"");
  return t;
}

// --- defined predicates ---

namespace {

std::set<std::string> term_names(std::initializer_list<SetTerm> ts) {
  std::set<std::string> out;
  for (const SetTerm& t : ts)
    if (t.kind == TKind::Var) out.insert(t.name);
  return out;
}

}  // namespace

Formula set_eq(const SetTerm& a, const SetTerm& b) {
  std::string x = fresh_name("x", term_names({a, b}));
  return and_(ball(x, a, in(var(x), b)), ball(x, b, in(var(x), a)));
}

Formula set_neq(const SetTerm& a, const SetTerm& b) { return negate(set_eq(a, b)); }

Formula rel_eq(const std::string& u, const std::string& v) {
  return ball("x", omega_const(), iff(rel(u, var("x")), rel(v, var("x"))));
}

Formula tran(const SetTerm& a) {
  std::set<std::string> avoid = term_names({a});
  std::string x = fresh_name("x", avoid);
  avoid.insert(x);
  std::string y = fresh_name("y", avoid);
  return ball(x, a, ball(y, var(x), in(var(y), a)));
}

Formula ord_pred(const SetTerm& a) {
  std::string x = fresh_name("x", term_names({a}));
  return and_(tran(a), ball(x, a, tran(var(x))));
}

Formula eq_union_singleton(const SetTerm& a, const SetTerm& x) {
  std::set<std::string> avoid = term_names({a, x});
  std::string y = fresh_name("y", avoid);
  return and_(ball(y, a, or_(in(var(y), x), set_eq(var(y), x))),
              and_(ball(y, x, in(var(y), a)), in(x, a)));
}

Formula succ_pred(const SetTerm& a) {
  std::string x = fresh_name("x", term_names({a}));
  return and_(ord_pred(a), bex(x, a, eq_union_singleton(a, var(x))));
}

Formula fin_ord(const SetTerm& a) {
  std::string x = fresh_name("x", term_names({a}));
  Formula zeroOrSucc = or_(set_eq(a, empty_set()), succ_pred(a));
  Formula elems = ball(x, a, or_(set_eq(var(x), empty_set()), succ_pred(var(x))));
  return and_(ord_pred(a), and_(zeroOrSucc, elems));
}

Formula setbuilder_eq(const SetTerm& z, const SetTerm& a, const std::string& x,
                      const Formula& d) {
  std::set<std::string> avoid = free_vars(d);
  avoid.merge(term_names({z, a}));
  avoid.insert(x);
  std::string y = fresh_name(x, avoid);
  Formula dy = substitute(d, x, var(y));
  return and_(ball(y, z, and_(in(var(y), a), dy)),
              ball(y, a, or_(negate(dy), in(var(y), z))));
}

}  // namespace bhw::fml
