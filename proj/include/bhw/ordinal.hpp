#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bhw/errors.hpp"

namespace bhw::ord {

enum class Cmp { Less, Equal, Greater };
enum class OrdClass { Zero, Successor, Limit };

enum class PKind : unsigned char { Omega, Psi, WPow };

struct OrdTerm;

// One additive component: Omega, psi(arg), or omega^arg.
struct Principal {
  PKind kind;
  std::shared_ptr<const OrdTerm> arg;  // null for Omega
};

// Normal form: a finite non-increasing sum of principal terms; empty = 0.
// Build through the factories below, never by hand, so that every reachable
// term is in normal form.
struct OrdTerm {
  std::vector<Principal> parts;
};

OrdTerm zero();
OrdTerm one();
OrdTerm omega();
OrdTerm big_omega();
OrdTerm from_nat(std::uint64_t n);
std::optional<std::uint64_t> to_nat(const OrdTerm& t);

Cmp compare(const OrdTerm& a, const OrdTerm& b);
Cmp compare_principal(const Principal& p, const Principal& q);

inline bool operator==(const OrdTerm& a, const OrdTerm& b) { return compare(a, b) == Cmp::Equal; }
inline bool operator!=(const OrdTerm& a, const OrdTerm& b) { return !(a == b); }
inline bool operator<(const OrdTerm& a, const OrdTerm& b) { return compare(a, b) == Cmp::Less; }
inline bool operator<=(const OrdTerm& a, const OrdTerm& b) { return compare(a, b) != Cmp::Greater; }

OrdTerm nf_sum(const OrdTerm& a, const OrdTerm& b);
OrdTerm natural_sum(const OrdTerm& a, const OrdTerm& b);
OrdTerm omega_pow(const OrdTerm& e);   // collapses epsilon fixed points
OrdTerm omega_times(const OrdTerm& a); // left product omega * a
OrdTerm omega_tower(unsigned n, const OrdTerm& xi);
OrdTerm succ(const OrdTerm& t);

// psi in normal form; throws NotInCError unless in_C(a, a).
OrdTerm psi(const OrdTerm& a);

// t in C(a, 0), decided structurally on normal forms.
bool in_C(const OrdTerm& t, const OrdTerm& a);
// t in C(a, b) for arbitrary b (all ordinals below b are members).
bool c_mem(const OrdTerm& t, const OrdTerm& a, const OrdTerm& b);

OrdClass classify(const OrdTerm& t);

bool is_normal_form(const OrdTerm& t);

// AST size used by the enumerator: 0 costs 1, a sum of k principals costs
// (k-1) plus the principal costs, Omega costs 1, psi/omega^ cost 1 + arg.
std::size_t term_size(const OrdTerm& t);

// Every normal-form term with term_size <= budget, each exactly once,
// in a deterministic order (size-layered).
std::vector<OrdTerm> enumerate_upto(std::size_t budget);

std::string render(const OrdTerm& t, bool spaced = true);
OrdTerm parse(const std::string& text);
// Same grammar plus '#' (natural sum) at lowest precedence.
OrdTerm parse_calc(const std::string& text);

struct OrdLess {
  bool operator()(const OrdTerm& a, const OrdTerm& b) const { return a < b; }
};

}  // namespace bhw::ord
