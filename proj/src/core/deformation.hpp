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

#include "involution.hpp"

namespace rk3 {

// Genus-level criterion: deformable unless n > 4 on the two boundary strata
// ((r,a) = (20,2), or r + a = 22 with delta_phiP = 0).
bool genus_deformable(const GenusInvariants& inv);

struct DeformFlags {
  bool standard = false;
  bool over2 = false;
};

struct DeformVerdict {
  bool deformable = false;
  std::string clause;  // "i", "ii", "iii", "iv" or "none"
  std::optional<std::string> witness_case;
};

// Component-level criterion. Flags are required exactly when
// (r, a, delta_phi) is (19,1,1) or (19,3,1) and n >= 6; errors missing_flags.
DeformVerdict is_deformation_of_hyperelliptic(const GenusInvariants& inv,
                                              const std::optional<DeformFlags>& flags);

}  // namespace rk3
