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

#include <string>
#include <vector>

#include "binary_form.hpp"
#include "k3_invariants.hpp"

namespace rk3 {

enum class CaseTag { UNIQUE, R1911, R1910, R1931, R1930, R202 };

const char* case_tag_name(CaseTag tag);

// Which counting regime applies to valid invariants; errors
// invalid_invariants when validate_full fails.
CaseTag resolve_case(const GenusInvariants& inv);

// Reference lattice of the r = 19 regimes (the class whose identity labeling
// is the standard component).
EvenLattice reference_lattice(CaseTag tag, const Int& n);

struct ComponentDescriptor {
  CaseTag tag = CaseTag::UNIQUE;
  bool rank1 = false;          // R202: the lattice class is <n>
  BinaryForm lattice_class{};  // canonical class representative (rank-2 regimes)
  std::string label;           // canonical coset representative / unit label
  bool is_standard = false;
  bool is_over2 = false;  // the labeling coset meets the 2-component of O(q)
};

struct ClassCount {
  bool rank1 = false;
  BinaryForm lattice_class{};
  Int count{0};
};

struct ComponentCount {
  Int total{0};
  CaseTag method = CaseTag::UNIQUE;
  std::vector<ClassCount> per_class;
};

ComponentCount count_components(const GenusInvariants& inv, long bound = kDefaultGroupBound);
std::vector<ComponentDescriptor> list_components(const GenusInvariants& inv,
                                                 long bound = kDefaultGroupBound);

// Upper bound on the number of components different from the standard one
// only over 2 (regimes R1911 and R1931; errors wrong_case otherwise).
Int over2_component_bound(const GenusInvariants& inv);

// Units k of Z/m with k^2 = -1, one per pair {k, m-k}, ascending. For
// m <= 2 the single class is represented by k = 1 (or k = 0 for m = 1).
std::vector<Int> tau_units_mod(const Int& m);

// Shared per-class analysis of the rank-2 regimes.
struct ClassAnalysis {
  BinaryClass cls;
  DiscriminantData dd;                  // quadratic (R1911/R1910) or bilinear (R1931/R1930)
  std::vector<FormIsometry> ortho;      // O(q) resp. O(b)
  std::vector<FormIsometry> aut_img;    // image of the lattice automorphisms
  bool is_reference = false;
};

struct CaseAnalysis {
  CaseTag tag;
  std::vector<ClassAnalysis> classes;
};

CaseAnalysis analyze_case(const GenusInvariants& inv, long bound = kDefaultGroupBound);

// Flags of the labeling coset g * aut_img inside the orthogonal group.
struct LabelFlags {
  bool is_standard;
  bool is_over2;
};

LabelFlags flags_of_label(const FiniteForm& form, const std::vector<FormIsometry>& aut_img,
                          const FormIsometry& g);

}  // namespace rk3
