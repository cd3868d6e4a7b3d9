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

#include "core/deformation.hpp"

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

bool has_case(const std::vector<HypCase>& cases, HypTag t) {
  for (const auto& c : cases)
    if (c.tag == t) return true;
  return false;
}

// pairing in the constructed basis
Int pair_in(const PolarizedInvolution& pi, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  RatMat g(pi.l.gram());
  return dot(mat_apply(g, x), y).get_num();
}

std::vector<Rat> ratvec(const std::vector<Int>& v) {
  std::vector<Rat> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

}  // namespace

TEST_CASE("case table") {
  auto t12 = case_table(Int(12));
  CHECK(has_case(t12, HypTag::F4_1));
  CHECK(has_case(t12, HypTag::F4_2));
  CHECK(has_case(t12, HypTag::H1));
  CHECK_FALSE(has_case(t12, HypTag::F1_19_1));
  auto t6 = case_table(Int(6));
  CHECK(has_case(t6, HypTag::F4_1));
  CHECK(has_case(t6, HypTag::F1_19_1));
  CHECK(has_case(t6, HypTag::F1_19_3));
  CHECK_FALSE(has_case(t6, HypTag::F4_2));
  CHECK_FALSE(has_case(t6, HypTag::H1));
  auto t4 = case_table(Int(4));
  CHECK(has_case(t4, HypTag::H1));
  CHECK_FALSE(has_case(t4, HypTag::F4_1));
  CHECK_THROWS_AS((void)case_table(Int(7)), error);
  // fold annotations
  for (const auto& c : case_table(Int(8)))
    if (c.tag == HypTag::F0_2 || c.tag == HypTag::F2) CHECK(c.folds_into == HypTag::H1);
}

TEST_CASE("constructions satisfy the stated invariants") {
  auto check_build = [](HypTag t, long n) {
    PolarizedInvolution pi = build_involution(t, Int(n));
    CHECK(pi.l.is_unimodular());
    CHECK(pi.l.signature() == std::make_pair(3, 19));
    CHECK(pair_in(pi, ratvec(pi.p), ratvec(pi.p)) == n);
    CHECK(pair_in(pi, ratvec(pi.q_vec), ratvec(pi.q_vec)) == -n);
    CHECK(pair_in(pi, ratvec(pi.p), ratvec(pi.q_vec)) == 0);
    CHECK(validate_full(pi.invariants).valid);
    return pi;
  };
  {
    PolarizedInvolution pi = check_build(HypTag::F4_1, 10);
    CHECK(pi.invariants.r == 19);
    CHECK(pi.invariants.a == 1);
    CHECK(pi.invariants.delta_P == 1);
    CHECK(pi.invariants.delta_phiP == 1);
  }
  {
    PolarizedInvolution pi = check_build(HypTag::H1, 8);
    CHECK(pi.invariants.a == 3);
    CHECK(pi.invariants.delta_P == 0);
    CHECK(pi.invariants.delta_phiP == 1);
  }
  {
    PolarizedInvolution pi = check_build(HypTag::F1_19_1, 10);
    CHECK(pi.invariants.delta_P == 0);
    CHECK(pi.invariants.delta_phiP == 0);
  }
  CHECK_THROWS_AS((void)build_involution(HypTag::F4_2, Int(10)), error);
}

TEST_CASE("membership identities of the constructions") {
  // F4_1: (P + Q)/n = C lies in the lattice, and (g1 + g2)/2 lies in it
  PolarizedInvolution pi = build_involution(HypTag::F4_1, Int(10));
  RatMat id22 = RatMat::identity(22);
  std::vector<Rat> v(22, Rat(0));
  for (std::size_t i = 0; i < 22; ++i)
    v[i] = (Rat(pi.p[i]) + Rat(pi.q_vec[i])) / Rat(10);
  CHECK(lattice_membership(v, id22));
  // F4_2: (P + Q)/(n/2) in L and (P - Q)/4 in L, (P + Q)/n not in L
  PolarizedInvolution pj = build_involution(HypTag::F4_2, Int(12));
  std::vector<Rat> w1(22), w2(22), w3(22);
  for (std::size_t i = 0; i < 22; ++i) {
    w1[i] = (Rat(pj.p[i]) + Rat(pj.q_vec[i])) / Rat(6);
    w2[i] = (Rat(pj.p[i]) - Rat(pj.q_vec[i])) / Rat(4);
    w3[i] = (Rat(pj.p[i]) + Rat(pj.q_vec[i])) / Rat(12);
  }
  CHECK(lattice_membership(w1, id22));
  CHECK(lattice_membership(w2, id22));
  CHECK_FALSE(lattice_membership(w3, id22));
  // H1: (P + Q)/(n/2) in L
  PolarizedInvolution ph = build_involution(HypTag::H1, Int(8));
  std::vector<Rat> u(22);
  for (std::size_t i = 0; i < 22; ++i) u[i] = (Rat(ph.p[i]) + Rat(ph.q_vec[i])) / Rat(4);
  CHECK(lattice_membership(u, id22));
}

TEST_CASE("component labels reproduce the stated conclusions") {
  // standard for the first family at every admissible degree
  for (long n : {6L, 8L, 10L, 12L, 14L}) {
    ComponentLabel cl = component_label(HypTag::F4_1, Int(n));
    CHECK(is_identity(cl.raw));
    CHECK(cl.flags.is_standard);
  }
  // the -1 twist on the 2-part for the second family
  {
    ComponentLabel cl = component_label(HypTag::F4_2, Int(12));
    CHECK_FALSE(is_identity(cl.raw));
    CHECK(cl.flags.is_over2);
    // raw acts trivially on the odd part and is not the identity there
    EvenLattice ref = reference_lattice(CaseTag::R1911, Int(12));
    DiscriminantData dd = discriminant_form(ref);
    CHECK(acts_trivially_on_odd_part(dd.form, cl.raw));
  }
  // the n mod 8 split for the third family
  {
    ComponentLabel cl = component_label(HypTag::F1_19_1, Int(10));
    CHECK(cl.regime == CaseTag::R1910);
    CHECK(is_identity(cl.raw));
    CHECK(cl.flags.is_standard);
  }
  {
    ComponentLabel cl = component_label(HypTag::F1_19_1, Int(6));
    CHECK(cl.regime == CaseTag::R1911);
    CHECK_FALSE(is_identity(cl.raw));
    EvenLattice ref = reference_lattice(CaseTag::R1911, Int(6));
    DiscriminantData dd = discriminant_form(ref);
    CHECK(acts_trivially_on_odd_part(dd.form, cl.raw));
  }
  // both (19,3) families are standard
  CHECK(component_label(HypTag::H1, Int(8)).flags.is_standard);
  CHECK(component_label(HypTag::F1_19_3, Int(6)).flags.is_standard);
}

TEST_CASE("realizability soundness: every construction is deformable") {
  for (HypTag tag : {HypTag::F4_1, HypTag::F4_2, HypTag::F1_19_1, HypTag::H1, HypTag::F1_19_3,
                     HypTag::F0_2, HypTag::F2}) {
    for (long n = 2; n <= 40; n += 2) {
      if (!hyp_admissible(tag, Int(n))) continue;
      PolarizedInvolution pi = build_involution(tag, Int(n));
      std::optional<DeformFlags> flags;
      if (pi.invariants.n >= 6) {
        ComponentLabel cl = component_label(pi);
        flags = DeformFlags{cl.flags.is_standard, cl.flags.is_over2};
      }
      DeformVerdict v = is_deformation_of_hyperelliptic(pi.invariants, flags);
      CHECK_MESSAGE(v.deformable, hyp_tag_name(tag), " at n = ", n);
    }
  }
}

TEST_CASE("complement duality on a constructed pair") {
  PolarizedInvolution pi = build_involution(HypTag::F4_1, Int(10));
  EvenLattice s{sublattice_gram(pi.l.gram(), pi.s_basis)};
  EvenLattice m{sublattice_gram(pi.l.gram(), pi.m_basis)};
  FiniteForm qs = discriminant_form(s).form;
  FiniteForm qm = discriminant_form(m).form;
  CHECK(find_isometry(qm, negate(qs)).has_value());
}

TEST_CASE("the degenerate families fold into the hyperboloid family") {
  for (long n = 8; n <= 32; n += 4) {
    ComponentLabel h = component_label(HypTag::H1, Int(n));
    ComponentLabel f2 = component_label(HypTag::F2, Int(n));
    ComponentLabel f02 = component_label(HypTag::F0_2, Int(n));
    CHECK(build_involution(HypTag::F2, Int(n)).invariants == build_involution(HypTag::H1, Int(n)).invariants);
    CHECK(f2.flags.is_standard == h.flags.is_standard);
    CHECK(f02.flags.is_standard == h.flags.is_standard);
    CHECK(f2.flags.is_over2 == h.flags.is_over2);
  }
}

TEST_CASE("genus-level deformability") {
  CHECK(genus_deformable(make(20, 2, 1, 4, 0, 0)));
  CHECK_FALSE(genus_deformable(make(20, 2, 1, 10, 0, 1)));
  CHECK(genus_deformable(make(19, 3, 1, 2, 0, 0)));
  CHECK(genus_deformable(make(10, 10, 0, 20, 1, 1)));
  CHECK_FALSE(genus_deformable(make(19, 3, 1, 18, 0, 0)));
  CHECK_THROWS_AS((void)genus_deformable(make(19, 1, 0, 6, 1, 1)), error);
}

TEST_CASE("component-level deformability") {
  // clause (i)
  {
    DeformVerdict v = is_deformation_of_hyperelliptic(make(10, 10, 0, 4, 1, 1), std::nullopt);
    CHECK(v.deformable);
    CHECK(v.clause == "i");
  }
  // the rank-1 boundary regime is excluded at n >= 6
  {
    DeformVerdict v = is_deformation_of_hyperelliptic(make(20, 2, 1, 10, 0, 1), std::nullopt);
    CHECK_FALSE(v.deformable);
  }
  // clause (iii) with a standard component
  {
    DeformVerdict v = is_deformation_of_hyperelliptic(make(19, 1, 1, 12, 1, 1),
                                                      DeformFlags{true, true});
    CHECK(v.deformable);
    CHECK(v.clause == "iii");
    CHECK(v.witness_case == std::optional<std::string>("F4_1"));
  }
  // clause (iii) requires the over-2 property at n = 4, 6 (mod 8)
  {
    DeformVerdict v = is_deformation_of_hyperelliptic(make(19, 1, 1, 12, 1, 1),
                                                      DeformFlags{false, true});
    CHECK(v.deformable);
    CHECK(v.witness_case == std::optional<std::string>("F4_2"));
    DeformVerdict w = is_deformation_of_hyperelliptic(make(19, 1, 1, 12, 1, 1),
                                                      DeformFlags{false, false});
    CHECK_FALSE(w.deformable);
    DeformVerdict x = is_deformation_of_hyperelliptic(make(19, 1, 1, 16, 1, 1),
                                                      DeformFlags{false, true});
    CHECK_FALSE(x.deformable);  // n = 0 (mod 8) requires the standard component
  }
  // clause (iv)
  {
    DeformVerdict v = is_deformation_of_hyperelliptic(make(19, 3, 1, 8, 0, 1),
                                                      DeformFlags{true, true});
    CHECK(v.deformable);
    CHECK(v.clause == "iv");
    CHECK(v.witness_case == std::optional<std::string>("H1"));
    DeformVerdict w = is_deformation_of_hyperelliptic(make(19, 3, 1, 8, 0, 1),
                                                      DeformFlags{false, false});
    CHECK_FALSE(w.deformable);
  }
  // clause (ii)
  {
    DeformVerdict v = is_deformation_of_hyperelliptic(make(10, 10, 0, 20, 1, 1), std::nullopt);
    CHECK(v.deformable);
    CHECK(v.clause == "ii");
    DeformVerdict w = is_deformation_of_hyperelliptic(make(17, 5, 1, 14, 0, 0), std::nullopt);
    CHECK_FALSE(w.deformable);  // sphere boundary with delta_phiP = 0
  }
  // missing flags
  CHECK_THROWS_AS(
      (void)is_deformation_of_hyperelliptic(make(19, 1, 1, 12, 1, 1), std::nullopt), error);
}
