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

#include "core/lattice.hpp"

using namespace rk3;

namespace {

FiniteForm disc_q(const EvenLattice& l) { return discriminant_form(l).form; }

FiniteForm q_rank1(long n) { return disc_q(lat_rank1(Int(n))); }

// b<m>: the discriminant bilinear form of the rank-1 lattice [m]
FiniteForm b_rank1(const Int& m) {
  IntMat g(1, 1);
  g.at(0, 0) = m;
  return discriminant_bilinear(g).form;
}

}  // namespace

TEST_CASE("direct sum with the trivial form") {
  FiniteForm q2 = q_rank1(2);
  FiniteForm s = direct_sum(q2, FiniteForm::trivial(FormKind::quadratic));
  CHECK(s.group().orders() == q2.group().orders());
  CHECK(s.gen_q() == q2.gen_q());
}

TEST_CASE("direct sum q<2> + q<-6>") {
  FiniteForm s = direct_sum(q_rank1(2), q_rank1(-6));
  CHECK(s.group().orders() == std::vector<Int>{Int(2), Int(6)});
  CHECK(s.gen_q()[0] == Rat(1, 2));
  CHECK(s.gen_q()[1] == mod2(Rat(-1, 6)));
}

TEST_CASE("b<n/2> for n = 10 lives on Z/5 with value 1/5") {
  FiniteForm b = b_rank1(Int(5));
  CHECK(b.group().orders() == std::vector<Int>{Int(5)});
  CHECK(b.gen_b().at(0, 0) == Rat(1, 5));
}

TEST_CASE("kind mismatch is rejected") {
  CHECK_THROWS_AS((void)direct_sum(q_rank1(2), b_rank1(Int(5))), error);
}

TEST_CASE("p-components") {
  FiniteForm s = direct_sum(q_rank1(2), q_rank1(-6));
  FiniteForm p3 = p_component(s, Int(3));
  CHECK(p3.group().orders() == std::vector<Int>{Int(3)});
  CHECK(p3.gen_q()[0] == mod2(Rat(-2, 3)));
  FiniteForm p5 = p_component(FiniteForm::trivial(FormKind::quadratic), Int(5));
  CHECK(p5.group().num_gens() == 0);
  // 2-part of the index-2 overlattice [[-2,-1],[-1,2]] (n = 10) is trivial
  FiniteForm latt2 = disc_q(lat_gram2x2(Int(-2), Int(-1), Int(2)));
  CHECK(p_component(latt2, Int(2)).group().num_gens() == 0);
  CHECK(latt2.group().order() == 5);
  // Sylow decomposition oracle: the p-components reassemble the form
  FiniteForm back = direct_sum(p_component(s, Int(2)), p_component(s, Int(3)));
  CHECK(find_isometry(back, s).has_value());
}

TEST_CASE("orthogonal group of small forms") {
  // odd cyclic nontrivial q has exactly +-1
  FiniteForm q5 = p_component(q_rank1(-10), Int(5));
  auto o5 = orthogonal_group(q5);
  CHECK(o5.size() == 2);
  CHECK(is_identity(o5[0]));
  // q<2> on Z/2 admits only the identity
  auto o2 = orthogonal_group(q_rank1(2));
  CHECK(o2.size() == 1);
  // 2-part of q<2> + q<-n> has order 4 when n = 0 (mod 16)
  FiniteForm q16 = p_component(direct_sum(q_rank1(2), q_rank1(-16)), Int(2));
  CHECK(orthogonal_group(q16).size() == 4);
  FiniteForm q32 = p_component(direct_sum(q_rank1(2), q_rank1(-32)), Int(2));
  CHECK(orthogonal_group(q32).size() == 4);
}

TEST_CASE("orthogonal group is a group with deterministic order") {
  FiniteForm f = direct_sum(q_rank1(2), q_rank1(-12));
  auto g = orthogonal_group(f);
  CHECK(is_identity(g[0]));
  for (const auto& x : g) {
    FormIsometry xi = inverse(f, x);
    bool found = false;
    for (const auto& y : g)
      if (y == xi) found = true;
    CHECK(found);
    for (const auto& y : g) {
      FormIsometry z = compose(f, x, y);
      bool closed = false;
      for (const auto& w : g)
        if (w == z) closed = true;
      CHECK(closed);
    }
  }
  auto again = orthogonal_group(f);
  CHECK(again.size() == g.size());
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(again[i] == g[i]);
}

TEST_CASE("group bound is enforced") {
  CHECK_THROWS_AS((void)orthogonal_group(q_rank1(2), 1), error);
  FiniteForm big = q_rank1(-30000);
  CHECK_THROWS_AS((void)orthogonal_group(big), error);
}

TEST_CASE("find_isometry") {
  FiniteForm q2 = q_rank1(2);
  auto self = find_isometry(q2, q2);
  REQUIRE(self.has_value());
  CHECK(is_identity(*self));
  CHECK_FALSE(find_isometry(q_rank1(2), q_rank1(-2)).has_value());
  // b<5> vs -b<5>: x -> 2x
  FiniteForm b5 = b_rank1(Int(5));
  auto iso = find_isometry(b5, negate(b5));
  REQUIRE(iso.has_value());
  CHECK(iso->map.at(0, 0) == 2);
}

TEST_CASE("negate is an involution") {
  FiniteForm f = direct_sum(q_rank1(4), q_rank1(-6));
  CHECK(negate(FiniteForm::trivial(FormKind::quadratic)).group().num_gens() == 0);
  FiniteForm n2 = negate(negate(f));
  CHECK(n2.gen_q() == f.gen_q());
  CHECK(negate(q_rank1(2)).gen_q()[0] == mod2(Rat(-1, 2)));
}

TEST_CASE("quadratic and bilinear parts are compatible") {
  for (long n : {4L, 6L, 10L, 12L, 18L}) {
    FiniteForm f = direct_sum(q_rank1(2), q_rank1(-n));
    const auto& grp = f.group();
    auto elems = grp.elements(kDefaultGroupBound);
    for (const auto& x : elems)
      for (const auto& y : elems) {
        Rat lhs = mod2(f.q_value(grp.add(x, y)) - f.q_value(x) - f.q_value(y));
        Rat rhs = mod2(Rat(2) * f.b_value(x, y));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("2-part group orders match the stated residue rules") {
  for (long n = 2; n <= 64; n += 2) {
    FiniteForm q = direct_sum(q_rank1(2), q_rank1(-n));
    std::size_t got = orthogonal_group(p_component(q, Int(2))).size();
    std::size_t expect = (n % 8 == 2) ? 1 : (n % 16 == 0 ? 4 : 2);
    CHECK_MESSAGE(got == expect, "q side at n = ", n);
    FiniteForm b = b_rank1(Int(n / 2));
    std::size_t gotb = orthogonal_group(p_component(b, Int(2))).size();
    std::size_t expectb = (n % 4 == 2 || n % 8 == 4) ? 1 : (n % 16 == 8 ? 2 : 4);
    CHECK_MESSAGE(gotb == expectb, "b side at n = ", n);
  }
}

TEST_CASE("subgroup order divides the automorphism group order") {
  FiniteForm f = direct_sum(q_rank1(2), q_rank1(-8));
  auto g = orthogonal_group(f);
  // |Aut(Z/2 x Z/8)| = 16
  CHECK(16 % g.size() == 0);
}
