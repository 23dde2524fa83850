#pragma once

// Independent reference computations used by the test suites and the CLI
// selftest.  Everything here recomputes results from the definitions by
// saturation or plain structural recursion, deliberately avoiding the
// shortcut paths in the main library.

#include <set>
#include <vector>

#include "bhw/ordinal.hpp"

namespace bhw::checks {

// Definitional CNF addition: recursion on the left summand's components.
ord::OrdTerm cnf_sum(const ord::OrdTerm& a, const ord::OrdTerm& b);

// Definitional left product omega * a via distribution over components.
ord::OrdTerm cnf_omega_times(const ord::OrdTerm& a);

using TermSet = std::set<ord::OrdTerm, ord::OrdLess>;

// Saturation of C(a, b) intersected with a finite universe.  The universe
// must be closed under subterms of its members (enumerate_upto output is).
TermSet saturate_C(const ord::OrdTerm& a, const ord::OrdTerm& b,
                   const std::vector<ord::OrdTerm>& universe);

bool saturation_in_C(const ord::OrdTerm& t, const ord::OrdTerm& a,
                     const std::vector<ord::OrdTerm>& universe);

}  // namespace bhw::checks
