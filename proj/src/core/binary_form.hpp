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

#include <optional>
#include <vector>

#include "lattice.hpp"

namespace rk3 {

// A x^2 + B xy + C y^2; corresponds to the even lattice [[2A,B],[B,2C]].
struct BinaryForm {
  Int a, b, c;

  Int disc() const { return b * b - Int(4) * a * c; }
  bool operator==(const BinaryForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

bool form_less(const BinaryForm& x, const BinaryForm& y);
BinaryForm form_of_gram(const IntMat& gram);
IntMat gram_of_form(const BinaryForm& f);

// g(x) = f(m x)
BinaryForm transform(const BinaryForm& f, const IntMat& m);

bool is_reduced_indefinite(const BinaryForm& f);

struct ReduceResult {
  BinaryForm form;
  IntMat t;  // form = input o t
};

// Continued-fraction reduction for nonsquare positive discriminant; the
// canonical (a, k, 0) representing-zero shape for square discriminant.
// Errors: definite_form (disc < 0), zero_disc.
ReduceResult reduce(const BinaryForm& f);

ReduceResult canonical_square(const BinaryForm& f);

struct Cycle {
  std::vector<BinaryForm> forms;      // forms[0] is the starting reduced form
  std::vector<IntMat> transforms;     // forms[i] = forms[0] o transforms[i]
};

Cycle cycle_of(const BinaryForm& reduced);

// M with g = f o M and det M = 1, if the forms are properly equivalent.
std::optional<IntMat> proper_transform(const BinaryForm& f, const BinaryForm& g);
// Same with improper transforms allowed (det +-1).
std::optional<IntMat> gl_transform(const BinaryForm& f, const BinaryForm& g);

// Least solution (t, u), u > 0, of t^2 - disc u^2 = 4, as the automorph
// [[(t-Bu)/2, -Cu], [Au, (t+Bu)/2]]. Errors square_disc.
IntMat fundamental_automorph(const BinaryForm& f);
std::pair<Int, Int> automorph_tu(const BinaryForm& f, const IntMat& m);

// Full (finite) automorphism group of a form of square discriminant.
std::vector<IntMat> isotropic_automorphisms(const BinaryForm& f);

// Is the class of f stable under improper equivalence?
bool is_ambiguous(const BinaryForm& f);

// Generators of the automorphism group of the lattice [[2A,B],[B,2C]]:
// -identity, the fundamental automorph (nonsquare disc) or the finite
// square-disc group, plus one improper automorphism when ambiguous.
std::vector<IntMat> lattice_aut_generators(const BinaryForm& f);

struct BinaryClass {
  BinaryForm canonical;           // lexicographically minimal representative
  std::vector<BinaryForm> cycle;  // reduced cycle(s) merged into this class
  bool ambiguous;
};

enum class Equivalence { proper, improper };

// One representative per equivalence class in the genus of l0 (same
// signature (1,1) and isomorphic discriminant quadratic form).
std::vector<BinaryClass> classes_in_genus(const EvenLattice& l0, Equivalence eq,
                                          long bound = kDefaultGroupBound);

// All equivalence classes of the given discriminant (no genus filter).
std::vector<BinaryClass> classes_of_disc(const Int& disc, Equivalence eq);

// Image of the lattice automorphism group in the orthogonal group of the
// given discriminant data (quadratic or bilinear), as a closed subgroup.
std::vector<FormIsometry> aut_image(const IntMat& gram, const DiscriminantData& dd, long bound);

// Number of double cosets A \ G / B inside the orthogonal group of f.
Int count_cosets(const FiniteForm& f, const std::vector<FormIsometry>& all,
                 const std::vector<FormIsometry>& sub_a, const std::vector<FormIsometry>& sub_b);

}  // namespace rk3
