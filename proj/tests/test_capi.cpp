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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "realk3/realk3.h"

using json = nlohmann::json;

namespace {

struct Session {
  rk3_session* s;
  Session() : s(rk3_session_new()) {}
  ~Session() { rk3_session_free(s); }
};

json call(rk3_status (*fn)(rk3_session*, const char*, char**), rk3_session* s, const char* arg,
          rk3_status expect = RK3_OK) {
  char* out = nullptr;
  rk3_status st = fn(s, arg, &out);
  REQUIRE(st == expect);
  json j;
  if (st == RK3_OK) {
    REQUIRE(out != nullptr);
    j = json::parse(out);
  }
  rk3_string_free(out);
  return j;
}

}  // namespace

TEST_CASE("session lifecycle and bound") {
  Session s;
  REQUIRE(s.s != nullptr);
  CHECK(rk3_session_group_bound(s.s) == 20000);
  rk3_session_set_group_bound(s.s, 123);
  CHECK(rk3_session_group_bound(s.s) == 123);
  CHECK(std::string(rk3_session_last_error(s.s)).empty());
}

TEST_CASE("validate round trip") {
  Session s;
  json j = call(rk3_validate, s.s,
                R"({"r":19,"a":1,"delta_phi":1,"k":1,"n":10,"delta_P":0,"delta_phiP":0})");
  CHECK(j["valid"] == true);
  CHECK(j["topology"]["kind"] == "general");
  // invalid tuples produce a report, not an error
  json bad = call(rk3_validate, s.s,
                  R"({"r":20,"a":2,"delta_phi":1,"k":1,"n":6,"delta_P":0,"delta_phiP":1})");
  CHECK(bad["valid"] == false);
  bool has_19 = false;
  for (const auto& v : bad["violated"])
    if (v["id"] == "I.19") has_19 = true;
  CHECK(has_19);
}

TEST_CASE("enumerate-rad has 75 rows") {
  Session s;
  char* out = nullptr;
  REQUIRE(rk3_enumerate_rad(s.s, &out) == RK3_OK);
  json j = json::parse(out);
  rk3_string_free(out);
  CHECK(j.size() == 75);
}

TEST_CASE("component counts through the C API") {
  Session s;
  json j = call(rk3_components_count, s.s,
                R"({"r":20,"a":2,"delta_phi":1,"k":1,"n":130,"delta_P":0,"delta_phiP":1})");
  CHECK(j["total"] == 2);
  CHECK(j["method"] == "R202");
  // invalid invariants map to the documented status
  char* out = nullptr;
  rk3_status st = rk3_components_count(
      s.s, R"({"r":20,"a":2,"delta_phi":1,"k":1,"n":6,"delta_P":0,"delta_phiP":1})", &out);
  CHECK(st == RK3_ERR_INVALID_INVARIANTS);
  CHECK(out == nullptr);
  CHECK(std::string(rk3_session_last_error(s.s)).find("I.19") != std::string::npos);
}

TEST_CASE("deformable through the C API") {
  Session s;
  char* out = nullptr;
  rk3_status st = rk3_deformable(
      s.s, R"({"r":10,"a":10,"delta_phi":0,"k":1,"n":4,"delta_P":1,"delta_phiP":1})", nullptr,
      &out);
  REQUIRE(st == RK3_OK);
  json j = json::parse(out);
  rk3_string_free(out);
  CHECK(j["deformable"] == true);
  CHECK(j["clause"] == "i");
  CHECK(j["witness_case"].is_null());
  // missing flags
  out = nullptr;
  st = rk3_deformable(s.s, R"({"r":19,"a":1,"delta_phi":1,"k":1,"n":12,"delta_P":1,"delta_phiP":1})",
                      nullptr, &out);
  CHECK(st == RK3_ERR_MISSING_FLAGS);
  // with flags
  out = nullptr;
  st = rk3_deformable(s.s, R"({"r":19,"a":1,"delta_phi":1,"k":1,"n":12,"delta_P":1,"delta_phiP":1})",
                      R"({"standard":true,"over2":true})", &out);
  REQUIRE(st == RK3_OK);
  json v = json::parse(out);
  rk3_string_free(out);
  CHECK(v["deformable"] == true);
  CHECK(v["clause"] == "iii");
  CHECK(v["witness_case"] == "F4_1");
}

TEST_CASE("disc form and form aut through the C API") {
  Session s;
  json j = call(rk3_lattice_disc_form, s.s, "[[2,0],[0,-10]]");
  CHECK(j["orders"] == json::array({2, 10}));
  CHECK(j["q"][0] == "1/2");
  json a = call(rk3_form_aut, s.s, R"({"orders":[5],"b":[["1/5"]]})");
  CHECK(a["size"] == 2);
  json bad;
  char* out = nullptr;
  CHECK(rk3_form_aut(s.s, "{not json", &out) == RK3_ERR_BAD_INPUT);
  CHECK(rk3_lattice_disc_form(s.s, "[[1,0],[0,2]]", &out) == RK3_ERR_DOMAIN);  // odd diagonal
}

TEST_CASE("enumerate genus and case table") {
  Session s;
  char* out = nullptr;
  REQUIRE(rk3_enumerate_genus(s.s, "6", &out) == RK3_OK);
  json j = json::parse(out);
  rk3_string_free(out);
  for (const auto& g : j["groups"]) CHECK_FALSE((g["r"] == 20 && g["a"] == 2));
  out = nullptr;
  REQUIRE(rk3_case_table(s.s, "12", &out) == RK3_OK);
  json t = json::parse(out);
  rk3_string_free(out);
  bool f41 = false, f42 = false;
  for (const auto& c : t) {
    if (c["case"] == "F4_1") f41 = true;
    if (c["case"] == "F4_2") f42 = true;
  }
  CHECK(f41);
  CHECK(f42);
  out = nullptr;
  CHECK(rk3_case_table(s.s, "7", &out) == RK3_ERR_DOMAIN);
}

TEST_CASE("output strings are byte stable") {
  Session s;
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(rk3_enumerate_rad(s.s, &a) == RK3_OK);
  REQUIRE(rk3_enumerate_rad(s.s, &b) == RK3_OK);
  CHECK(std::string(a) == std::string(b));
  rk3_string_free(a);
  rk3_string_free(b);
}
