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

#pragma once

#include <vector>

#include "finite_form.hpp"
#include "intmat.hpp"

namespace rk3 {

// Even lattice given by its Gram matrix: symmetric, even diagonal, det != 0.
class EvenLattice {
public:
  explicit EvenLattice(IntMat gram);

  const IntMat& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const Int& det() const { return det_; }
  std::pair<int, int> signature() const { return sig_; }
  bool is_unimodular() const { return det_ == 1 || det_ == -1; }

private:
  IntMat gram_;
  Int det_;
  std::pair<int, int> sig_;
};

EvenLattice lat_U();
EvenLattice lat_E8();
EvenLattice lat_rank1(const Int& n);                              // <n>, n even nonzero
EvenLattice lat_gram2x2(const Int& a, const Int& b, const Int& c);  // [[a,b],[b,c]]
EvenLattice lat_direct_sum(const std::vector<EvenLattice>& parts);

// Multiply the form by a nonzero rational; errors not_integral / odd_result.
EvenLattice rescale(const EvenLattice& l, const Rat& m);

// G/2 as an integral (possibly odd) Gram matrix; errors not_integral.
IntMat half_gram(const EvenLattice& l);

// The discriminant group L*/L together with its form and rational lifts.
struct DiscriminantData {
  FiniteForm form;
  RatMat lifts;  // column j = coordinates of generator j in the lattice basis
  IntMat gram;   // the Gram matrix the data was computed from

  // snf bookkeeping for mapping dual vectors to group coordinates
  IntMat u;
  std::vector<Int> diag;
  std::vector<std::size_t> keep;

  // Class of a dual vector (rational coordinates in the lattice basis).
  FiniteAbelianGroup::Elem coords_of(const std::vector<Rat>& x) const;
};

DiscriminantData discriminant_form(const EvenLattice& l);
// Same group with the bilinear form only; accepts odd integral lattices.
DiscriminantData discriminant_bilinear(const IntMat& gram);

// An isotropic glue group inside the discriminant sum of l1 (+) l2.
struct GlueGroup {
  EvenLattice l1, l2;
  // generators: rational coordinates in the concatenated basis of l1 (+) l2,
  // with the l1-part in l1* and the l2-part in l2*.
  std::vector<std::vector<Rat>> gens;
};

struct Overlattice {
  EvenLattice lattice;
  RatMat basis;  // rows: overlattice basis in the base coordinates
  Int index;     // [overlattice : base]
};

// General glued overlattice: validates that the glue vectors lie in the dual,
// pair integrally and have even squares, then takes the Hermite basis of
// [identity; glue] over a common denominator. No graph condition.
Overlattice glued_overlattice(const EvenLattice& base, const std::vector<std::vector<Rat>>& gens);

// Two-block version with the graph condition of the standard construction.
Overlattice overlattice_from_glue(const GlueGroup& glue);

struct TwoElementaryInvariants {
  int r;
  int a;
  int delta;
};

TwoElementaryInvariants two_elementary_invariants(const EvenLattice& l);

// Gram matrix of the sublattice spanned by the given basis rows.
IntMat sublattice_gram(const IntMat& ambient_gram, const IntMat& basis_rows);
// Saturated basis of { x : x . row = 0 for all rows }, as rows.
IntMat orthogonal_complement(const IntMat& ambient_gram, const IntMat& basis_rows);

}  // namespace rk3
