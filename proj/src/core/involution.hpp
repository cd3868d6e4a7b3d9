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
#include <string>

#include "components.hpp"

namespace rk3 {

// The hyper-elliptic construction families.
enum class HypTag { F4_1, F4_2, F1_19_1, H1, F1_19_3, F0_2, F2 };

const char* hyp_tag_name(HypTag tag);
std::optional<HypTag> hyp_tag_parse(const std::string& name);

struct HypCase {
  HypTag tag;
  std::string name;
  std::string constraint;   // admissibility condition on n
  std::string recipe;       // polarization recipe in the named basis
  std::string annotations;  // opaque source-classification marks of the family
  std::optional<HypTag> folds_into;
  GenusInvariants targets;  // expected derived invariants at this n (k = 1)
};

// All families admissible at this even n. Errors odd_degree.
std::vector<HypCase> case_table(const Int& n);

bool hyp_admissible(HypTag tag, const Int& n);
GenusInvariants hyp_targets(HypTag tag, const Int& n);

// A rank-22 even unimodular lattice with involution and polarization,
// together with the sublattices derived from them. Vectors are coordinate
// columns in the constructed basis; phi acts by x -> phi x.
struct PolarizedInvolution {
  EvenLattice l;
  IntMat phi;
  std::vector<Int> p;

  IntMat fixed_basis;  // rows: basis of the +1 eigenlattice
  IntMat anti_basis;   // rows: basis of the -1 eigenlattice
  IntMat s_basis;      // rows: primitive closure of (fixed lattice, P)
  IntMat m_basis;      // rows: orthogonal complement of the above

  // marked vectors of the construction, in the constructed basis
  std::vector<Int> q_vec;  // Q with Q^2 = -n, orthogonal to P
  std::vector<Int> g_vec;  // the square-2 vector completing Q in the -1 part

  GenusInvariants invariants;  // derived, k = 1
};

// Errors glue_rejected / invariant_mismatch.
PolarizedInvolution build_involution(HypTag tag, const Int& n,
                                     long bound = kDefaultGroupBound);

struct ComponentLabel {
  CaseTag regime;
  FormIsometry raw;  // labeling element of O(q_ref) resp. O(b_ref)
  LabelFlags flags;  // coset flags relative to the automorphism image
};

// The component the construction lands in, labeled against the standard one.
ComponentLabel component_label(HypTag tag, const Int& n, long bound = kDefaultGroupBound);
ComponentLabel component_label(const PolarizedInvolution& pi, long bound = kDefaultGroupBound);

}  // namespace rk3
