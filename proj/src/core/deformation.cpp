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

#include "deformation.hpp"

namespace rk3 {

bool genus_deformable(const GenusInvariants& inv) {
  require(validate_full(inv).valid, errc::invalid_invariants, "invalid genus invariants");
  bool boundary = (inv.r == 20 && inv.a == 2) || (inv.r + inv.a == 22 && inv.delta_phiP == 0);
  if (!boundary) return true;
  return inv.n <= 4;
}

DeformVerdict is_deformation_of_hyperelliptic(const GenusInvariants& inv,
                                              const std::optional<DeformFlags>& flags) {
  require(validate_full(inv).valid, errc::invalid_invariants, "invalid genus invariants");
  const Int& n = inv.n;
  if (n == 2 || n == 4) return {true, "i", std::nullopt};

  bool is191 = (inv.r == 19 && inv.a == 1);
  bool is193 = (inv.r == 19 && inv.a == 3);
  bool is202 = (inv.r == 20 && inv.a == 2);

  if (is191 || is193) {
    require(flags.has_value(), errc::missing_flags,
            "component flags are required for (19,1) and (19,3) at n >= 6");
  }

  if (is202) return {false, "none", std::nullopt};

  if (is191) {
    int n8 = static_cast<int>(mod_floor(n, 8).get_si());
    bool ok = (n8 == 0 || n8 == 2) ? flags->standard : flags->over2;
    if (!ok) return {false, "none", std::nullopt};
    std::string witness;
    if (flags->standard)
      witness = (inv.delta_P == 1) ? "F4_1" : "F1_19_1";
    else
      witness = (n8 == 4) ? "F4_2" : "F1_19_1";
    return {true, "iii", witness};
  }

  if (is193) {
    if (inv.delta_phiP != 1 || !flags->standard) return {false, "none", std::nullopt};
    std::string witness = (mod_floor(n, 4) == 0) ? "H1" : "F1_19_3";
    return {true, "iv", witness};
  }

  // clause (ii): every remaining type except the boundary stratum of sphere
  // unions that are congruent to P mod 2
  if (inv.r + inv.a == 22 && inv.delta_phiP == 0) return {false, "none", std::nullopt};
  return {true, "ii", std::nullopt};
}

}  // namespace rk3
