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

#include <stdexcept>
#include <string>

namespace rk3 {

enum class errc {
  dimension_mismatch,
  degenerate_matrix,
  kind_mismatch,
  group_too_large,
  odd_lattice,
  not_integral,
  odd_result,
  not_isotropic,
  not_a_graph,
  not_two_elementary,
  definite_form,
  zero_disc,
  square_disc,
  wrong_rank,
  wrong_signature,
  not_subgroup,
  invalid_triple,
  odd_degree,
  invalid_invariants,
  wrong_case,
  no_standard,
  glue_rejected,
  invariant_mismatch,
  missing_flags,
  bad_input,
  internal
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

const char* errc_name(errc code);

}  // namespace rk3
