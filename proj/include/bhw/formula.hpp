#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "bhw/errors.hpp"
#include "bhw/ordinal.hpp"

namespace bhw::fml {

enum class TKind : unsigned char { Var, Empty, OmegaC };

struct SetTerm {
  TKind kind = TKind::Var;
  std::string name;
};

SetTerm var(const std::string& name);
SetTerm empty_set();
SetTerm omega_const();
bool operator==(const SetTerm& s, const SetTerm& t);
bool operator<(const SetTerm& s, const SetTerm& t);
std::string render(const SetTerm& t);

enum class FKind : unsigned char {
  In, NotIn, Rel, NotRel, MAtom, NotMAtom,
  Or, And, BEx, BAll, REx, RAll, Ex, All, RelEx, RelAll
};

struct FNode;

// Immutable formula in negation normal form.  All construction goes through
// the factories, which enforce that level annotations stay below Omega.
struct Formula {
  std::shared_ptr<const FNode> node;
  const FNode& operator*() const { return *node; }
  const FNode* operator->() const { return node.get(); }
  explicit operator bool() const { return node != nullptr; }
};

struct FNode {
  FKind kind;
  SetTerm a, b;         // In/NotIn: a in b;  Rel/NotRel/MAtom: argument in a;  BEx/BAll: bound in b
  std::string rel;      // relation symbol, or relation binder for RelEx/RelAll
  ord::OrdTerm alpha;   // MAtom/NotMAtom/REx/RAll
  std::string var;      // set binder
  Formula f, g;         // children (quantifier body in f)
};

// --- constructors ---
Formula in(const SetTerm& a, const SetTerm& b);
Formula nin(const SetTerm& a, const SetTerm& b);
Formula rel(const std::string& u, const SetTerm& a);
Formula nrel(const std::string& u, const SetTerm& a);
Formula m_atom(const ord::OrdTerm& alpha, const SetTerm& a);
Formula nm_atom(const ord::OrdTerm& alpha, const SetTerm& a);
Formula or_(const Formula& f, const Formula& g);
Formula and_(const Formula& f, const Formula& g);
Formula bex(const std::string& x, const SetTerm& a, const Formula& body);
Formula ball(const std::string& x, const SetTerm& a, const Formula& body);
Formula rex(const ord::OrdTerm& alpha, const std::string& x, const Formula& body);
Formula rall(const ord::OrdTerm& alpha, const std::string& x, const Formula& body);
Formula ex(const std::string& x, const Formula& body);
Formula all(const std::string& x, const Formula& body);
Formula rel_ex(const std::string& X, const Formula& body);
Formula rel_all(const std::string& X, const Formula& body);

// implication and biconditional are expanded on construction
Formula impl(const Formula& f, const Formula& g);
Formula iff(const Formula& f, const Formula& g);

// --- operations ---
Formula negate(const Formula& f);
ord::OrdTerm rank(const Formula& f);

using ParamSet = std::set<ord::OrdTerm, ord::OrdLess>;
ParamSet params(const Formula& f);
ord::OrdTerm level(const Formula& f);
int length(const Formula& f);

struct ClassFlags {
  bool delta0 = false;  // L2set with bounded set quantifiers only
  bool d = false;       // no unbounded set or relation quantifiers
  bool s = false;       // closure of d under /\ \/ ranked bounded and unbounded-exists
  bool s0 = false;      // Sigma of L2set, not delta0
  bool b = false;       // no unbounded set quantifiers
  bool l2set = false;   // no M atoms, no ranked quantifiers
  bool sigma = false;   // Sigma of L2set
};
ClassFlags class_of(const Formula& f);

// F^beta: every unbounded existential becomes a ranked one.  Requires F in S.
Formula bound_exists(const Formula& f, const ord::OrdTerm& beta);
// F^(a): unbounded set quantifiers restricted to a; relation quantifiers kept.
Formula relativize(const Formula& f, const SetTerm& a);

Formula substitute(const Formula& f, const std::string& x, const SetTerm& t);
Formula substitute_rel(const Formula& f, const std::string& X, const std::string& U);

std::set<std::string> free_vars(const Formula& f);
std::set<std::string> free_rel_vars(const Formula& f);

// Canonical renaming of bound variables; alpha-equivalent formulas map to
// identical trees.
Formula canon(const Formula& f);
ord::Cmp compare_raw(const Formula& f, const Formula& g);
bool alpha_equal(const Formula& f, const Formula& g);

struct FormulaLess {
  bool operator()(const Formula& f, const Formula& g) const {
    return compare_raw(f, g) == ord::Cmp::Less;
  }
};

std::string render(const Formula& f);
Formula parse(const std::string& text);
SetTerm parse_term(const std::string& text);

// --- defined predicates ---
Formula set_eq(const SetTerm& a, const SetTerm& b);
Formula set_neq(const SetTerm& a, const SetTerm& b);
Formula rel_eq(const std::string& u, const std::string& v);
Formula tran(const SetTerm& a);
Formula ord_pred(const SetTerm& a);
// a = x u {x}
Formula eq_union_singleton(const SetTerm& a, const SetTerm& x);
Formula succ_pred(const SetTerm& a);
Formula fin_ord(const SetTerm& a);
// z = {x in a : D[x]} where D has hole variable x
Formula setbuilder_eq(const SetTerm& z, const SetTerm& a, const std::string& x,
                      const Formula& d);

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

}  // namespace bhw::fml
