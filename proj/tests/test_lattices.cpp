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

#include "core/binary_form.hpp"

using namespace rk3;

TEST_CASE("standard lattices") {
  EvenLattice u = lat_U();
  CHECK(u.det() == -1);
  CHECK(u.signature() == std::make_pair(1, 1));
  EvenLattice e8 = lat_E8();
  CHECK(e8.det() == 1);
  CHECK(e8.signature() == std::make_pair(0, 8));
  // matrices of the two boundary regimes
  EvenLattice m1910 = lat_gram2x2(Int(2), Int(1), exact_div(Int(2) - 10, 4));
  CHECK(m1910.gram() == IntMat{{2, 1}, {1, -2}});
  CHECK(m1910.det() == -5);
  EvenLattice m1930 = lat_gram2x2(Int(8), Int(2), exact_div(Int(2) - 18, 4));
  CHECK(m1930.gram() == IntMat{{8, 2}, {2, -4}});
  CHECK(m1930.det() == -36);
  CHECK_THROWS_AS((void)lat_gram2x2(Int(2), Int(1), Int(-3)), error);
  CHECK_THROWS_AS((void)lat_rank1(Int(0)), error);
}

TEST_CASE("rescale") {
  EvenLattice u2 = rescale(lat_U(), Rat(2));
  CHECK(u2.gram() == IntMat{{0, 2}, {2, 0}});
  EvenLattice d = rescale(EvenLattice{IntMat{{4, 0}, {0, -4}}}, Rat(1, 2));
  CHECK(d.gram() == IntMat{{2, 0}, {0, -2}});
  EvenLattice round_trip = rescale(rescale(lat_U(), Rat(2)), Rat(1, 2));
  CHECK(round_trip.gram() == lat_U().gram());
  CHECK_THROWS_AS((void)rescale(lat_U(), Rat(1, 3)), error);
  CHECK_THROWS_AS((void)rescale(lat_rank1(Int(2)), Rat(1, 2)), error);
}

TEST_CASE("discriminant forms of the standard lattices") {
  CHECK(discriminant_form(lat_U()).form.group().num_gens() == 0);
  CHECK(discriminant_form(lat_E8()).form.group().num_gens() == 0);
  DiscriminantData d2 = discriminant_form(lat_rank1(Int(2)));
  CHECK(d2.form.group().orders() == std::vector<Int>{Int(2)});
  CHECK(d2.form.gen_q()[0] == Rat(1, 2));
  // the lift pairs to the stored value
  CHECK(d2.lifts.at(0, 0) == Rat(1, 2));
  DiscriminantData latt2 = discriminant_form(lat_gram2x2(Int(-2), Int(-1), Int(2)));
  CHECK(latt2.form.group().order() == 5);
}

TEST_CASE("discriminant group order equals |det|") {
  for (const EvenLattice& l :
       {lat_gram2x2(Int(2), Int(1), Int(-2)), lat_gram2x2(Int(4), Int(2), Int(-2)),
        lat_direct_sum({lat_rank1(Int(6)), lat_rank1(Int(-8))})}) {
    DiscriminantData dd = discriminant_form(l);
    CHECK(dd.form.group().order() == abs(l.det()));
  }
}

TEST_CASE("discriminant form of a direct sum is the direct sum") {
  EvenLattice a = lat_rank1(Int(4));
  EvenLattice b = lat_rank1(Int(-6));
  FiniteForm whole = discriminant_form(lat_direct_sum({a, b})).form;
  FiniteForm parts = direct_sum(discriminant_form(a).form, discriminant_form(b).form);
  CHECK(find_isometry(whole, parts).has_value());
}

TEST_CASE("overlattice from glue") {
  // <2> + <-2> glued by (g1 + g2)/2 is the even unimodular hyperbolic plane
  GlueGroup glue{lat_rank1(Int(2)), lat_rank1(Int(-2)), {{Rat(1, 2), Rat(1, 2)}}};
  Overlattice ov = overlattice_from_glue(glue);
  CHECK(ov.index == 2);
  CHECK(ov.lattice.det() == -1);
  CHECK(ov.lattice.signature() == std::make_pair(1, 1));
  // Gram recomputation oracle: basis against the base pairing
  RatMat base(lat_direct_sum({glue.l1, glue.l2}).gram());
  RatMat gram = ov.basis * base * ov.basis.transpose();
  CHECK(gram.to_int() == ov.lattice.gram());
  // same class as [[2,1],[1,0]]
  CHECK(gl_transform(form_of_gram(ov.lattice.gram()), form_of_gram(IntMat{{2, 1}, {1, 0}}))
            .has_value());

  // empty glue keeps the direct sum
  GlueGroup none{lat_rank1(Int(2)), lat_rank1(Int(-2)), {}};
  CHECK(overlattice_from_glue(none).lattice.gram() == IntMat{{2, 0}, {0, -2}});

  // <-2> + <10> glued by (e + P)/2 for n = 10
  GlueGroup g10{lat_rank1(Int(-2)), lat_rank1(Int(10)), {{Rat(1, 2), Rat(1, 2)}}};
  Overlattice ov10 = overlattice_from_glue(g10);
  CHECK(ov10.lattice.det() == exact_div(Int(-20), 4));
  CHECK(gl_transform(form_of_gram(ov10.lattice.gram()), form_of_gram(IntMat{{-2, -1}, {-1, 2}}))
            .has_value());
  // det L / index^2
  CHECK(ov10.lattice.det() * ov10.index * ov10.index == Int(-20));
}

TEST_CASE("overlattice rejections") {
  GlueGroup bad{lat_rank1(Int(2)), lat_rank1(Int(-4)), {{Rat(1, 2), Rat(1, 2)}}};
  CHECK_THROWS_AS((void)overlattice_from_glue(bad), error);  // q = -1/2, not isotropic
  GlueGroup onesided{lat_rank1(Int(2)), lat_rank1(Int(-2)), {{Rat(1, 2), Rat(0)}}};
  CHECK_THROWS_AS((void)overlattice_from_glue(onesided), error);  // not even a dual/isotropic vector
  // isotropic but not a graph: one-sided glue inside U(2) + U(2)
  GlueGroup nograph{rescale(lat_U(), Rat(2)), rescale(lat_U(), Rat(2)),
                    {{Rat(1, 2), Rat(0), Rat(0), Rat(0)}}};
  CHECK_THROWS_AS((void)overlattice_from_glue(nograph), error);
  try {
    (void)overlattice_from_glue(nograph);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_graph);
  }
}

TEST_CASE("complement duality of the glued constructions") {
  // inside the unimodular overlattice of <2> + <-2>, the two rank-1 pieces
  // have opposite discriminant forms
  for (long n : {2L, 6L, 10L}) {
    EvenLattice l1 = lat_rank1(Int(2));
    EvenLattice l2 = lat_rank1(Int(-n));
    FiniteForm q1 = discriminant_form(l1).form;
    FiniteForm q2 = discriminant_form(l2).form;
    // glue exists exactly when q1 = -q2 on the glue subgroup; for n = 2 the
    // full graph glue produces a unimodular lattice
    if (n == 2) {
      GlueGroup glue{l1, l2, {{Rat(1, 2), Rat(1, 2)}}};
      Overlattice ov = overlattice_from_glue(glue);
      CHECK(abs(ov.lattice.det()) == 1);
      CHECK(find_isometry(q1, negate(q2)).has_value());
    }
  }
}

TEST_CASE("two-elementary invariants") {
  TwoElementaryInvariants a =
      two_elementary_invariants(lat_direct_sum({lat_U(), lat_E8(), lat_E8(), lat_rank1(Int(-2))}));
  CHECK(a.r == 19);
  CHECK(a.a == 1);
  CHECK(a.delta == 1);
  TwoElementaryInvariants b = two_elementary_invariants(rescale(lat_U(), Rat(2)));
  CHECK(b.r == 2);
  CHECK(b.a == 2);
  CHECK(b.delta == 0);
  TwoElementaryInvariants c = two_elementary_invariants(lat_U());
  CHECK(c.r == 2);
  CHECK(c.a == 0);
  CHECK(c.delta == 0);
  CHECK_THROWS_AS((void)two_elementary_invariants(lat_rank1(Int(6))), error);
}

TEST_CASE("orthogonal complements") {
  IntMat g = lat_direct_sum({lat_rank1(Int(2)), lat_rank1(Int(-4)), lat_U()}).gram();
  IntMat rows{{1, 0, 0, 0}};
  IntMat comp = orthogonal_complement(g, rows);
  CHECK(comp.rows() == 3);
  IntMat pairing = comp * g * rows.transpose();
  for (std::size_t i = 0; i < pairing.rows(); ++i) CHECK(pairing.at(i, 0) == 0);
}
