#include "oracles.hpp"

namespace bhw::checks {

using ord::Cmp;
using ord::OrdTerm;
using ord::PKind;
using ord::Principal;

namespace {

OrdTerm head(const OrdTerm& t) {
  OrdTerm h;
  h.parts.push_back(t.parts.front());
  return h;
}

OrdTerm tail(const OrdTerm& t) {
  OrdTerm r;
  r.parts.assign(t.parts.begin() + 1, t.parts.end());
  return r;
}

}  // namespace

OrdTerm cnf_sum(const OrdTerm& a, const OrdTerm& b) {
  if (a.parts.empty()) return b;
  if (b.parts.empty()) return a;
  // w^x + y = y when w^x < leading(y); otherwise keep the head.
  OrdTerm rest = cnf_sum(tail(a), b);
  OrdTerm h = head(a);
  if (!rest.parts.empty() &&
      ord::compare_principal(h.parts[0], rest.parts[0]) == Cmp::Less)
    return rest;
  OrdTerm r = h;
  r.parts.insert(r.parts.end(), rest.parts.begin(), rest.parts.end());
  return r;
}

OrdTerm cnf_omega_times(const OrdTerm& a) {
  // omega * (w^x1 + ... + w^xn) = w^(1+x1) + ... + w^(1+xn)
  OrdTerm r;
  for (const Principal& p : a.parts) {
    OrdTerm lg;
    if (p.kind == PKind::WPow)
      lg = *p.arg;
    else
      lg.parts.push_back(p);
    OrdTerm e = cnf_sum(ord::one(), lg);
    OrdTerm pw = ord::omega_pow(e);
    r.parts.push_back(pw.parts.front());
  }
  return r;
}

TermSet saturate_C(const OrdTerm& a, const OrdTerm& b,
                   const std::vector<OrdTerm>& universe) {
  TermSet in;
  in.insert(ord::zero());
  in.insert(ord::big_omega());
  for (const OrdTerm& t : universe)
    if (ord::compare(t, b) == Cmp::Less) in.insert(t);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const OrdTerm& t : universe) {
      if (in.count(t)) continue;
      bool add = false;
      // eta + xi
      for (const OrdTerm& x : in) {
        if (x.parts.empty() || x == t) continue;
        for (const OrdTerm& y : in) {
          if (y.parts.empty()) continue;
          if (ord::nf_sum(x, y) == t) { add = true; break; }
        }
        if (add) break;
      }
      // w^xi
      if (!add) {
        for (const OrdTerm& x : in)
          if (ord::omega_pow(x) == t) { add = true; break; }
      }
      // psi(xi) for xi < a
      if (!add && t.parts.size() == 1 && t.parts[0].kind == PKind::Psi) {
        const OrdTerm& arg = *t.parts[0].arg;
        if (ord::compare(arg, a) == Cmp::Less && in.count(arg)) add = true;
      }
      if (add) {
        in.insert(t);
        changed = true;
      }
    }
  }
  return in;
}

bool saturation_in_C(const OrdTerm& t, const OrdTerm& a,
                     const std::vector<OrdTerm>& universe) {
  TermSet s = saturate_C(a, ord::zero(), universe);
  return s.count(t) != 0;
}

}  // namespace bhw::checks
