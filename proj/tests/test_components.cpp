/*
Copyright 2026 the realk3 authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <doctest.h>

#include "core/components.hpp"

using namespace rk3;

namespace {

GenusInvariants make(int r, int a, int dphi, long n, int dP, int dpp) {
  GenusInvariants inv;
  inv.r = r;
  inv.a = a;
  inv.delta_phi = dphi;
  inv.n = n;
  inv.delta_P = dP;
  inv.delta_phiP = dpp;
  inv.k = (n == 2) ? Int(3) : Int(1);
  return inv;
}

}  // namespace

TEST_CASE("case resolution") {
  CHECK(resolve_case(make(10, 10, 0, 6, 1, 1)) == CaseTag::UNIQUE);
  CHECK(resolve_case(make(19, 1, 1, 6, 1, 1)) == CaseTag::R1911);
  CHECK(resolve_case(make(19, 1, 1, 10, 0, 0)) == CaseTag::R1910);
  CHECK(resolve_case(make(19, 3, 1, 6, 0, 1)) == CaseTag::R1931);
  CHECK(resolve_case(make(19, 3, 1, 2, 0, 0)) == CaseTag::R1930);
  CHECK(resolve_case(make(20, 2, 1, 10, 0, 1)) == CaseTag::R202);
  CHECK_THROWS_AS((void)resolve_case(make(20, 2, 1, 6, 0, 1)), error);
}

TEST_CASE("component counts for the unique regime") {
  ComponentCount c = count_components(make(5, 5, 1, 8, 1, 1));
  CHECK(c.total == 1);
  CHECK(c.method == CaseTag::UNIQUE);
  Int sum(0);
  for (const auto& pc : c.per_class) sum += pc.count;
  CHECK(sum == c.total);
}

TEST_CASE("single-component claims at small degrees") {
  for (long n : {2L, 4L, 6L, 8L}) {
    CHECK(count_components(make(19, 1, 1, n, 1, 1)).total == 1);
    CHECK(count_components(make(19, 3, 1, n, 0, 1)).total == 1);
  }
  CHECK(count_components(make(19, 1, 1, 2, 0, 0)).total == 1);
  CHECK(count_components(make(19, 3, 1, 2, 0, 0)).total == 1);
}

TEST_CASE("closed-form counts for the rank-1 regime") {
  CHECK(count_components(make(20, 2, 1, 130, 0, 1)).total == 2);
  CHECK(count_components(make(20, 2, 1, 10, 0, 1)).total == 1);
  CHECK(count_components(make(20, 2, 1, 100, 0, 0)).total == 1);
  // brute force oracle: units with k^2 = -1 mod n/2, up to sign
  for (long n : {10L, 20L, 26L, 50L, 100L, 130L, 290L}) {
    Int m(n / 2);
    long sols = 0;
    for (Int k(1); k <= m; ++k)
      if (gcd(k, m) == 1 && mod_floor(k * k + 1, m) == 0) ++sols;
    long expected = (sols + (m <= 2 ? 1 : 0)) / (m <= 2 ? 1 : 2);
    GenusInvariants inv = make(20, 2, 1, n, 0, n % 4 == 0 ? 0 : 1);
    CHECK(count_components(inv).total == expected);
  }
}

TEST_CASE("tau units") {
  CHECK(tau_units_mod(Int(1)) == std::vector<Int>{Int(0)});
  CHECK(tau_units_mod(Int(2)) == std::vector<Int>{Int(1)});
  CHECK(tau_units_mod(Int(5)) == std::vector<Int>{Int(2)});
  CHECK(tau_units_mod(Int(65)).size() == 2);
}

TEST_CASE("list matches count and flags behave") {
  for (long n : {2L, 4L, 6L, 8L, 10L, 12L, 16L}) {
    GenusInvariants inv = make(19, 1, 1, n, 1, 1);
    auto lst = list_components(inv);
    CHECK(Int(static_cast<long>(lst.size())) == count_components(inv).total);
    int n_standard = 0;
    for (const auto& d : lst) {
      if (d.is_standard) {
        ++n_standard;
        CHECK(d.is_over2);  // the inclusive convention
      }
    }
    CHECK(n_standard == 1);
  }
  // the rank-1 regime carries no standard notion
  for (const auto& d : list_components(make(20, 2, 1, 130, 0, 1))) {
    CHECK_FALSE(d.is_standard);
    CHECK(d.rank1);
  }
  // n = 2 (mod 8): the 2-part of the orthogonal group is trivial, so every
  // over-2 descriptor is the standard one
  for (long n : {10L, 18L, 26L}) {
    for (const auto& d : list_components(make(19, 1, 1, n, 1, 1)))
      if (d.is_over2) CHECK(d.is_standard);
  }
  // unique regime: a single descriptor
  auto u = list_components(make(2, 0, 0, 6, 1, 1));
  REQUIRE(u.size() == 1);
  CHECK(u[0].tag == CaseTag::UNIQUE);
}

TEST_CASE("over-2 bound") {
  CHECK(over2_component_bound(make(19, 1, 1, 10, 1, 1)) == 1);
  CHECK(over2_component_bound(make(19, 1, 1, 16, 1, 1)) == 4);
  CHECK(over2_component_bound(make(19, 1, 1, 12, 1, 1)) == 2);
  CHECK(over2_component_bound(make(19, 3, 1, 10, 0, 1)) == 1);
  CHECK(over2_component_bound(make(19, 3, 1, 24, 0, 1)) == 2);
  CHECK(over2_component_bound(make(19, 3, 1, 32, 0, 1)) == 4);
  CHECK_THROWS_AS((void)over2_component_bound(make(20, 2, 1, 10, 0, 1)), error);
  // over-2 descriptors never exceed the bound (small sweep)
  for (long n = 2; n <= 32; n += 2) {
    GenusInvariants inv = make(19, 1, 1, n, 1, 1);
    long over2 = 0;
    for (const auto& d : list_components(inv))
      if (d.is_over2) ++over2;
    CHECK(Int(over2) <= over2_component_bound(inv));
  }
}

TEST_CASE("counts agree with direct enumeration of the labeling isomorphisms") {
  // Components correspond to pairs (class, tau) with tau an isomorphism onto
  // the reference discriminant form, taken up to the image of the lattice
  // automorphisms. Count those pairs directly.
  for (long n = 2; n <= 40; n += 2) {
    GenusInvariants inv = make(19, 1, 1, n, 1, 1);
    EvenLattice ref = reference_lattice(CaseTag::R1911, Int(n));
    FiniteForm q_ref = discriminant_form(ref).form;
    Int direct(0);
    for (const auto& cls : classes_in_genus(ref, Equivalence::improper)) {
      EvenLattice lat{gram_of_form(cls.canonical)};
      DiscriminantData dd = discriminant_form(lat);
      auto taus = all_isometries(dd.form, q_ref);
      auto img = aut_image(lat.gram(), dd, kDefaultGroupBound);
      REQUIRE(taus.size() % img.size() == 0);
      direct += Int(static_cast<long>(taus.size() / img.size()));
    }
    CHECK_MESSAGE(direct == count_components(inv).total, "n = ", n);
  }
  // the bilinear regime, same idea
  for (long n = 2; n <= 40; n += 2) {
    GenusInvariants inv = make(19, 3, 1, n, 0, 1);
    EvenLattice ref = reference_lattice(CaseTag::R1931, Int(n));
    FiniteForm b_ref = discriminant_bilinear(half_gram(ref)).form;
    Int direct(0);
    for (const auto& cls : classes_in_genus(ref, Equivalence::improper)) {
      EvenLattice lat{gram_of_form(cls.canonical)};
      DiscriminantData dd = discriminant_bilinear(half_gram(lat));
      auto taus = all_isometries(dd.form, b_ref);
      auto img = aut_image(lat.gram(), dd, kDefaultGroupBound);
      REQUIRE(taus.size() % img.size() == 0);
      direct += Int(static_cast<long>(taus.size() / img.size()));
    }
    CHECK_MESSAGE(direct == count_components(inv).total, "n = ", n);
  }
}

TEST_CASE("list length equals the count in every boundary regime") {
  std::vector<GenusInvariants> cases = {
      make(19, 1, 1, 24, 1, 1),  make(19, 1, 1, 26, 0, 0), make(19, 3, 1, 24, 0, 1),
      make(19, 3, 1, 18, 0, 0),  make(20, 2, 1, 50, 0, 1), make(19, 1, 1, 34, 0, 0),
      make(19, 3, 1, 34, 0, 0)};
  for (const auto& inv : cases) {
    CHECK(Int(static_cast<long>(list_components(inv).size())) == count_components(inv).total);
  }
}

TEST_CASE("deterministic descriptor labels") {
  GenusInvariants inv = make(19, 1, 1, 12, 1, 1);
  auto a = list_components(inv);
  auto b = list_components(inv);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].is_standard == b[i].is_standard);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS((void)count_components(make(19, 1, 0, 6, 1, 1)), error);
  try {
    (void)count_components(make(19, 1, 0, 6, 1, 1));
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_invariants);
  }
  // group bound propagates
  CHECK_THROWS_AS((void)count_components(make(19, 1, 1, 600, 1, 1), 100), error);
}
