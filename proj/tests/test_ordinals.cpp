#include "doctest.h"

#include <algorithm>

#include "../checks/oracles.hpp"
#include "bhw/ordinal.hpp"

using namespace bhw;
using ord::Cmp;
using ord::OrdTerm;

namespace {

OrdTerm P(const std::string& s) { return ord::parse(s); }

}  // namespace

TEST_CASE("basic comparisons") {
  CHECK(ord::compare(P("p(0)"), P("W")) == Cmp::Less);
  CHECK(ord::compare(P("0"), P("0")) == Cmp::Equal);
  // psi(0) is closed under xi -> w^xi, so w^(w^(w^(0))) stays below it
  CHECK(ord::compare(P("w^(w^(w^(0)))"), P("p(0)")) == Cmp::Less);
  CHECK(checks::saturation_in_C(P("w^(w^(w^(0)))"), ord::zero(),
                                ord::enumerate_upto(7)));
  CHECK(ord::compare(P("W"), P("w^(W + w^(0))")) == Cmp::Less);
  CHECK(ord::compare(P("p(W)"), P("p(W + w^(0))")) == Cmp::Less);
  CHECK(ord::compare(P("W + p(0)"), P("W + W")) == Cmp::Less);
}

TEST_CASE("nf_sum") {
  OrdTerm alpha = P("p(W)");
  CHECK(ord::nf_sum(alpha, ord::zero()) == alpha);
  CHECK(ord::nf_sum(ord::one(), ord::omega()) == ord::omega());
  CHECK(ord::render(ord::nf_sum(ord::omega(), ord::one())) == "w^(w^(0)) + w^(0)");
  CHECK(ord::nf_sum(ord::one(), ord::omega()) ==
        checks::cnf_sum(ord::one(), ord::omega()));
}

TEST_CASE("natural_sum") {
  OrdTerm wp1 = ord::nf_sum(ord::omega(), ord::one());
  OrdTerm r = ord::natural_sum(wp1, ord::omega());
  CHECK(ord::render(r) == "w^(w^(0)) + w^(w^(0)) + w^(0)");
  CHECK(ord::natural_sum(P("p(0)"), ord::zero()) == P("p(0)"));
}

TEST_CASE("omega_pow fixed points") {
  CHECK(ord::omega_pow(ord::zero()) == ord::one());
  CHECK(ord::omega_pow(ord::big_omega()) == ord::big_omega());
  CHECK(ord::omega_pow(P("p(0)")) == P("p(0)"));
  CHECK(ord::render(ord::omega_pow(P("W + w^(0)"))) == "w^(W + w^(0))");
}

TEST_CASE("omega_times") {
  CHECK(ord::omega_times(ord::zero()) == ord::zero());
  CHECK(ord::omega_times(ord::one()) == ord::omega());
  CHECK(ord::omega_times(ord::omega()) == P("w^(w^(0) + w^(0))"));
  for (const OrdTerm& t : ord::enumerate_upto(5))
    CHECK(ord::omega_times(t) == checks::cnf_omega_times(t));
}

TEST_CASE("psi normal-form condition") {
  CHECK(ord::render(ord::psi(ord::zero())) == "p(0)");
  CHECK_NOTHROW(ord::psi(P("w^(W + w^(0))")));
  // psi(psi(W)) is not a notation: W >= psi(W)
  CHECK_THROWS_AS(ord::psi(P("p(W)")), NotInCError);
}

TEST_CASE("in_C basics") {
  CHECK(ord::in_C(ord::big_omega(), ord::one()));
  CHECK_FALSE(ord::in_C(P("p(0)"), ord::zero()));
  CHECK(ord::in_C(P("p(0)"), ord::one()));
}

TEST_CASE("classify") {
  CHECK(ord::classify(ord::zero()) == ord::OrdClass::Zero);
  CHECK(ord::classify(ord::nf_sum(ord::omega(), ord::one())) == ord::OrdClass::Successor);
  CHECK(ord::classify(ord::big_omega()) == ord::OrdClass::Limit);
}

TEST_CASE("omega_tower") {
  OrdTerm xi = P("W + w^(0)");
  CHECK(ord::omega_tower(0, xi) == xi);
  CHECK(ord::omega_tower(1, ord::zero()) == ord::one());
  CHECK(ord::render(ord::omega_tower(2, xi)) == "w^(w^(W + w^(0)))");
}

TEST_CASE("enumerate_upto small layers") {
  auto u1 = ord::enumerate_upto(1);
  REQUIRE(u1.size() == 2);  // 0 and W
  CHECK(u1[0] == ord::zero());
  CHECK(u1[1] == ord::big_omega());
  auto u2 = ord::enumerate_upto(2);
  REQUIRE(u2.size() == 5);  // adds p(0), w^(0) and p(W)
  CHECK(std::count_if(u2.begin(), u2.end(), [](const OrdTerm& t) {
          return t == P("p(0)") || t == P("w^(0)") || t == P("p(W)");
        }) == 3);
  for (const OrdTerm& t : ord::enumerate_upto(6)) CHECK(ord::is_normal_form(t));
}

TEST_CASE("enumerate_upto uniqueness") {
  auto u = ord::enumerate_upto(6);
  std::set<OrdTerm, ord::OrdLess> seen;
  for (const OrdTerm& t : u) CHECK(seen.insert(t).second);
}

TEST_CASE("parse / render round trip") {
  CHECK(ord::render(P("p(W + w^(W))")) == "p(W + W)");  // w^(W) collapses to W
  for (const OrdTerm& t : ord::enumerate_upto(5)) {
    CHECK(ord::parse(ord::render(t)) == t);
    CHECK(ord::parse(ord::render(t, false)) == t);
  }
  CHECK(P("w^(p(0))") == P("p(0)"));
  CHECK(ord::parse_calc("w^(0) + w^(0) # w^(w^(0))") ==
        ord::natural_sum(ord::from_nat(2), ord::omega()));
  CHECK_THROWS_AS(ord::parse("w^0"), ParseError);
}

TEST_CASE("order laws on the small universe") {
  auto u = ord::enumerate_upto(5);
  auto sorted = u;
  std::sort(sorted.begin(), sorted.end(), ord::OrdLess{});
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    CHECK(ord::compare(sorted[i], sorted[i]) == Cmp::Equal);
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      CHECK(ord::compare(sorted[i], sorted[j]) == Cmp::Less);
      CHECK(ord::compare(sorted[j], sorted[i]) == Cmp::Greater);
    }
  }
}

TEST_CASE("psi monotone and below Omega") {
  auto u = ord::enumerate_upto(5);
  std::vector<OrdTerm> valid;
  for (const OrdTerm& t : u)
    if (ord::in_C(t, t)) valid.push_back(t);
  for (const OrdTerm& a : valid) {
    CHECK(ord::compare(ord::psi(a), ord::big_omega()) == Cmp::Less);
    CHECK(ord::omega_pow(ord::psi(a)) == ord::psi(a));
    for (const OrdTerm& b : valid) {
      Cmp c = ord::compare(a, b);
      if (c == Cmp::Less && ord::in_C(a, b))
        CHECK(ord::compare(ord::psi(a), ord::psi(b)) == Cmp::Less);
      if (c != Cmp::Greater)
        CHECK(ord::compare(ord::psi(a), ord::psi(b)) != Cmp::Greater);
    }
  }
}

TEST_CASE("in_C agrees with saturation oracle") {
  auto u = ord::enumerate_upto(5);
  for (const OrdTerm& t : u)
    for (const OrdTerm& a : u)
      CHECK(ord::in_C(t, a) == checks::saturation_in_C(t, a, u));
}

TEST_CASE("sum laws") {
  auto u = ord::enumerate_upto(4);
  for (const OrdTerm& a : u)
    for (const OrdTerm& b : u) {
      CHECK(ord::nf_sum(a, b) == checks::cnf_sum(a, b));
      CHECK(ord::natural_sum(a, b) == ord::natural_sum(b, a));
      CHECK(ord::compare(ord::nf_sum(a, b), b) != Cmp::Less);
      CHECK(ord::compare(ord::natural_sum(a, b), ord::nf_sum(a, b)) != Cmp::Less);
      for (const OrdTerm& c : u) {
        if (ord::term_size(a) + ord::term_size(b) + ord::term_size(c) > 9) continue;
        CHECK(ord::nf_sum(ord::nf_sum(a, b), c) == ord::nf_sum(a, ord::nf_sum(b, c)));
        CHECK(ord::natural_sum(ord::natural_sum(a, b), c) ==
              ord::natural_sum(a, ord::natural_sum(b, c)));
      }
    }
}

TEST_CASE("membership below psi matches compare") {
  // t in C(a,0) with t < Omega holds exactly when t < psi(a)
  auto u = ord::enumerate_upto(5);
  for (const OrdTerm& t : u) {
    if (ord::compare(t, ord::big_omega()) != Cmp::Less) continue;
    for (const OrdTerm& a : u) {
      if (!ord::in_C(a, a)) continue;
      CHECK(ord::in_C(t, a) == (ord::compare(t, ord::psi(a)) == Cmp::Less));
    }
  }
}
