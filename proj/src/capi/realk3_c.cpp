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

#include "realk3/realk3.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "../core/json_io.hpp"

using namespace rk3;
using jsonio::ojson;

struct rk3_session {
  long group_bound = kDefaultGroupBound;
  std::string last_error;
};

namespace {

rk3_status status_of(errc code) {
  switch (code) {
    case errc::invalid_invariants:
    case errc::invalid_triple:
      return RK3_ERR_INVALID_INVARIANTS;
    case errc::missing_flags:
      return RK3_ERR_MISSING_FLAGS;
    case errc::group_too_large:
      return RK3_ERR_GROUP_TOO_LARGE;
    case errc::bad_input:
      return RK3_ERR_BAD_INPUT;
    case errc::internal:
      return RK3_ERR_INTERNAL;
    default:
      return RK3_ERR_DOMAIN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ojson parse_json(const char* text, const char* what) {
  require(text != nullptr, errc::bad_input, std::string(what) + " is null");
  ojson j = ojson::parse(text, nullptr, false);
  require(!j.is_discarded(), errc::bad_input, std::string("malformed JSON in ") + what);
  return j;
}

Int parse_decimal(const char* text, const char* what) {
  require(text != nullptr, errc::bad_input, std::string(what) + " is null");
  try {
    return Int(std::string(text));
  } catch (const std::invalid_argument&) {
    fail(errc::bad_input, std::string("not a decimal integer: ") + what);
  }
}

template <typename Fn>
rk3_status run(rk3_session* s, char** out_json, Fn&& fn) {
  if (s == nullptr || out_json == nullptr) return RK3_ERR_BAD_INPUT;
  *out_json = nullptr;
  s->last_error.clear();
  try {
    ojson j = fn();
    *out_json = dup_string(j.dump(2) + "\n");
    if (*out_json == nullptr) {
      s->last_error = "out of memory";
      return RK3_ERR_INTERNAL;
    }
    return RK3_OK;
  } catch (const error& e) {
    s->last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    s->last_error = std::string("InternalError: ") + e.what();
    return RK3_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

rk3_session* rk3_session_new(void) { return new (std::nothrow) rk3_session; }

void rk3_session_free(rk3_session* s) { delete s; }

void rk3_session_set_group_bound(rk3_session* s, long bound) {
  if (s && bound > 0) s->group_bound = bound;
}

long rk3_session_group_bound(const rk3_session* s) { return s ? s->group_bound : 0; }

const char* rk3_session_last_error(const rk3_session* s) {
  return s ? s->last_error.c_str() : "";
}

void rk3_string_free(char* s) { std::free(s); }

rk3_status rk3_validate(rk3_session* s, const char* inv_json, char** out_json) {
  return run(s, out_json, [&] {
    GenusInvariants inv = jsonio::parse_invariants(parse_json(inv_json, "invariants"));
    return jsonio::validation_json(inv, validate_full(inv));
  });
}

rk3_status rk3_enumerate_rad(rk3_session* s, char** out_json) {
  return run(s, out_json, [] { return jsonio::rad_table_json(); });
}

rk3_status rk3_enumerate_genus(rk3_session* s, const char* n_decimal, char** out_json) {
  return run(s, out_json, [&] {
    return jsonio::enumerate_genus_json(parse_decimal(n_decimal, "n"));
  });
}

rk3_status rk3_components_count(rk3_session* s, const char* inv_json, char** out_json) {
  return run(s, out_json, [&] {
    GenusInvariants inv = jsonio::parse_invariants(parse_json(inv_json, "invariants"));
    return jsonio::component_count_json(count_components(inv, s->group_bound));
  });
}

rk3_status rk3_components_list(rk3_session* s, const char* inv_json, char** out_json) {
  return run(s, out_json, [&] {
    GenusInvariants inv = jsonio::parse_invariants(parse_json(inv_json, "invariants"));
    return jsonio::component_list_json(list_components(inv, s->group_bound));
  });
}

rk3_status rk3_deformable(rk3_session* s, const char* inv_json, const char* flags_json,
                          char** out_json) {
  return run(s, out_json, [&] {
    GenusInvariants inv = jsonio::parse_invariants(parse_json(inv_json, "invariants"));
    std::optional<DeformFlags> flags;
    if (flags_json != nullptr) flags = jsonio::parse_flags(parse_json(flags_json, "flags"));
    return jsonio::deform_verdict_json(is_deformation_of_hyperelliptic(inv, flags));
  });
}

rk3_status rk3_case_table(rk3_session* s, const char* n_decimal, char** out_json) {
  return run(s, out_json, [&] {
    return jsonio::case_table_json(case_table(parse_decimal(n_decimal, "n")));
  });
}

rk3_status rk3_lattice_disc_form(rk3_session* s, const char* gram_json, char** out_json) {
  return run(s, out_json, [&] {
    EvenLattice l{jsonio::parse_gram(parse_json(gram_json, "gram"))};
    return jsonio::disc_form_json(discriminant_form(l));
  });
}

rk3_status rk3_form_aut(rk3_session* s, const char* form_json, char** out_json) {
  return run(s, out_json, [&] {
    FiniteForm f = jsonio::parse_form(parse_json(form_json, "form"));
    return jsonio::form_aut_json(f, orthogonal_group(f, s->group_bound));
  });
}

}  // extern "C"
