#include "bhw/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace bhw::ord {

namespace {

std::shared_ptr<const OrdTerm> box(const OrdTerm& t) {
  return std::make_shared<const OrdTerm>(t);
}

OrdTerm single(Principal p) {
  OrdTerm t;
  t.parts.push_back(std::move(p));
  return t;
}

Cmp flip(Cmp c) {
  if (c == Cmp::Less) return Cmp::Greater;
  if (c == Cmp::Greater) return Cmp::Less;
  return Cmp::Equal;
}

}  // namespace

OrdTerm zero() { return OrdTerm{}; }

OrdTerm one() { return single(Principal{PKind::WPow, box(zero())}); }

OrdTerm omega() { return single(Principal{PKind::WPow, box(one())}); }

OrdTerm big_omega() { return single(Principal{PKind::Omega, nullptr}); }

OrdTerm from_nat(std::uint64_t n) {
  OrdTerm t;
  Principal unit{PKind::WPow, box(zero())};
  t.parts.assign(static_cast<std::size_t>(n), unit);
  return t;
}

std::optional<std::uint64_t> to_nat(const OrdTerm& t) {
  for (const Principal& p : t.parts)
    if (p.kind != PKind::WPow || !p.arg->parts.empty()) return std::nullopt;
  return t.parts.size();
}

// Principals compare via their omega-logarithms: Omega = w^Omega,
// psi(a) = w^psi(a) (both epsilon numbers), w^e = w^e.  The mixed cases
// ground out because a WPow argument is never a bare Omega/psi term.
Cmp compare_principal(const Principal& p, const Principal& q) {
  if (p.kind == PKind::Omega) {
    if (q.kind == PKind::Omega) return Cmp::Equal;
    if (q.kind == PKind::Psi) return Cmp::Greater;
    return flip(compare(*q.arg, single(p)));
  }
  if (p.kind == PKind::Psi) {
    if (q.kind == PKind::Omega) return Cmp::Less;
    if (q.kind == PKind::Psi) return compare(*p.arg, *q.arg);
    return flip(compare(*q.arg, single(p)));
  }
  // p is WPow
  if (q.kind == PKind::WPow) return compare(*p.arg, *q.arg);
  return compare(*p.arg, single(q));
}

Cmp compare(const OrdTerm& a, const OrdTerm& b) {
  const std::size_t n = std::min(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = compare_principal(a.parts[i], b.parts[i]);
    if (c != Cmp::Equal) return c;
  }
  if (a.parts.size() == b.parts.size()) return Cmp::Equal;
  return a.parts.size() < b.parts.size() ? Cmp::Less : Cmp::Greater;
}

OrdTerm nf_sum(const OrdTerm& a, const OrdTerm& b) {
  if (b.parts.empty()) return a;
  OrdTerm r;
  const Principal& lead = b.parts.front();
  for (const Principal& p : a.parts) {
    if (compare_principal(p, lead) == Cmp::Less) break;
    r.parts.push_back(p);
  }
  r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
  return r;
}

OrdTerm natural_sum(const OrdTerm& a, const OrdTerm& b) {
  OrdTerm r;
  r.parts.reserve(a.parts.size() + b.parts.size());
  std::size_t i = 0, j = 0;
  while (i < a.parts.size() && j < b.parts.size()) {
    if (compare_principal(a.parts[i], b.parts[j]) == Cmp::Less)
      r.parts.push_back(b.parts[j++]);
    else
      r.parts.push_back(a.parts[i++]);
  }
  while (i < a.parts.size()) r.parts.push_back(a.parts[i++]);
  while (j < b.parts.size()) r.parts.push_back(b.parts[j++]);
  return r;
}

OrdTerm omega_pow(const OrdTerm& e) {
  if (e.parts.size() == 1 &&
      (e.parts[0].kind == PKind::Omega || e.parts[0].kind == PKind::Psi))
    return e;  // fixed point: w^Omega = Omega, w^psi(a) = psi(a)
  return single(Principal{PKind::WPow, box(e)});
}

OrdTerm omega_times(const OrdTerm& a) {
  OrdTerm r;
  for (const Principal& p : a.parts) {
    OrdTerm lg = (p.kind == PKind::WPow) ? *p.arg : single(p);
    OrdTerm t = omega_pow(nf_sum(one(), lg));
    r.parts.push_back(t.parts.front());
  }
  return r;
}

OrdTerm omega_tower(unsigned n, const OrdTerm& xi) {
  OrdTerm t = xi;
  for (unsigned i = 0; i < n; ++i) t = omega_pow(t);
  return t;
}

OrdTerm succ(const OrdTerm& t) { return nf_sum(t, one()); }

OrdTerm psi(const OrdTerm& a) {
  if (!in_C(a, a))
    throw NotInCError("psi argument not in C(arg, 0): " + render(a));
  return single(Principal{PKind::Psi, box(a)});
}

bool c_mem(const OrdTerm& t, const OrdTerm& a, const OrdTerm& b) {
  for (const Principal& p : t.parts) {
    switch (p.kind) {
      case PKind::Omega:
        break;
      case PKind::WPow:
        if (compare(single(p), b) == Cmp::Less) break;
        if (!c_mem(*p.arg, a, b)) return false;
        break;
      case PKind::Psi:
        if (compare(single(p), b) == Cmp::Less) break;
        // hereditary normal form makes arg < a equivalent to membership
        if (compare(*p.arg, a) != Cmp::Less) return false;
        if (!c_mem(*p.arg, a, b)) return false;
        break;
    }
  }
  return true;
}

bool in_C(const OrdTerm& t, const OrdTerm& a) { return c_mem(t, a, zero()); }

OrdClass classify(const OrdTerm& t) {
  if (t.parts.empty()) return OrdClass::Zero;
  const Principal& last = t.parts.back();
  if (last.kind == PKind::WPow && last.arg->parts.empty()) return OrdClass::Successor;
  return OrdClass::Limit;
}

bool is_normal_form(const OrdTerm& t) {
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    const Principal& p = t.parts[i];
    if (i > 0 && compare_principal(t.parts[i - 1], p) == Cmp::Less) return false;
    if (p.kind == PKind::WPow) {
      const OrdTerm& e = *p.arg;
      if (e.parts.size() == 1 &&
          (e.parts[0].kind == PKind::Omega || e.parts[0].kind == PKind::Psi))
        return false;
      if (!is_normal_form(e)) return false;
    } else if (p.kind == PKind::Psi) {
      if (!is_normal_form(*p.arg)) return false;
      if (!in_C(*p.arg, *p.arg)) return false;
    }
  }
  return true;
}

std::size_t term_size(const OrdTerm& t) {
  if (t.parts.empty()) return 1;
  std::size_t s = t.parts.size() - 1;
  for (const Principal& p : t.parts)
    s += 1 + (p.kind == PKind::Omega ? 0 : term_size(*p.arg));
  return s;
}

std::vector<OrdTerm> enumerate_upto(std::size_t budget) {
  // Layered by exact size: principals of size s feed terms of size >= s.
  std::vector<std::vector<Principal>> prinBySize(budget + 1);
  std::vector<std::vector<OrdTerm>> termBySize(budget + 1);
  if (budget >= 1) {
    termBySize[1].push_back(zero());
    prinBySize[1].push_back(Principal{PKind::Omega, nullptr});
  }
  for (std::size_t s = 1; s <= budget; ++s) {
    if (s >= 2) {
      for (const OrdTerm& t : termBySize[s - 1]) {
        if (in_C(t, t)) prinBySize[s].push_back(Principal{PKind::Psi, box(t)});
        bool eps = t.parts.size() == 1 &&
                   (t.parts[0].kind == PKind::Omega || t.parts[0].kind == PKind::Psi);
        if (!eps) prinBySize[s].push_back(Principal{PKind::WPow, box(t)});
      }
    }
    // sums of exact size s with a chosen leading principal
    for (std::size_t ps = 1; ps <= s; ++ps) {
      for (const Principal& p : prinBySize[ps]) {
        if (ps == s) {
          termBySize[s].push_back(single(p));
          continue;
        }
        std::size_t rest = s - ps - 1;  // one '+' joins p to the tail
        if (rest == 0) continue;
        for (const OrdTerm& tail : termBySize[rest]) {
          if (tail.parts.empty()) continue;
          if (compare_principal(p, tail.parts.front()) == Cmp::Less) continue;
          OrdTerm t = single(p);
          t.parts.insert(t.parts.end(), tail.parts.begin(), tail.parts.end());
          termBySize[s].push_back(t);
        }
      }
    }
  }
  std::vector<OrdTerm> out;
  for (std::size_t s = 1; s <= budget; ++s)
    out.insert(out.end(), termBySize[s].begin(), termBySize[s].end());
  return out;
}

std::string render(const OrdTerm& t, bool spaced) {
  if (t.parts.empty()) return "0";
  std::string out;
  const char* plus = spaced ? " + " : "+";
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (i) out += plus;
    const Principal& p = t.parts[i];
    switch (p.kind) {
      case PKind::Omega: out += "W"; break;
      case PKind::Psi: out += "p(" + render(*p.arg, spaced) + ")"; break;
      case PKind::WPow: out += "w^(" + render(*p.arg, spaced) + ")"; break;
    }
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;
  bool allowNatSum;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("expected '" + std::string(1, c) + "' at offset " +
                       std::to_string(i) + " in ordinal \"" + s + "\"");
  }

  OrdTerm atom() {
    skip();
    if (i >= s.size()) throw ParseError("unexpected end of ordinal \"" + s + "\"");
    char c = s[i];
    if (c == '0') { ++i; return zero(); }
    if (c == 'W') { ++i; return big_omega(); }
    if (c == 'w') {
      ++i;
      expect('^');
      expect('(');
      OrdTerm e = sum();
      expect(')');
      return omega_pow(e);
    }
    if (c == 'p') {
      ++i;
      expect('(');
      OrdTerm a = sum();
      expect(')');
      return psi(a);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' in ordinal \"" + s + "\"");
  }

  OrdTerm sum() {
    OrdTerm t = atom();
    while (eat('+')) t = nf_sum(t, atom());
    return t;
  }

  OrdTerm top() {
    OrdTerm t = sum();
    if (allowNatSum) {
      while (eat('#')) t = natural_sum(t, sum());
    }
    skip();
    if (i != s.size())
      throw ParseError("trailing input at offset " + std::to_string(i) +
                       " in ordinal \"" + s + "\"");
    return t;
  }
};

}  // namespace

OrdTerm parse(const std::string& text) {
  Parser p{text, 0, false};
  return p.top();
}

OrdTerm parse_calc(const std::string& text) {
  Parser p{text, 0, true};
  return p.top();
}

}  // namespace bhw::ord
