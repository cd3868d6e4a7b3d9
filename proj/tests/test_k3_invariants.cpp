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

#include <algorithm>

#include "core/k3_invariants.hpp"

using namespace rk3;

namespace {

// Golden transcription of the (r, a, delta_phi) chart: 16 circle marks
// (delta_phi = 0) and 59 dot marks (delta_phi = 1), 75 in total. Both marks
// are present at (10, 10).
const std::vector<RadTriple> kGoldenRad = [] {
  std::vector<RadTriple> v;
  auto circles = {std::pair{2, 0},  std::pair{10, 0}, std::pair{18, 0}, std::pair{2, 2},
                  std::pair{6, 2},  std::pair{10, 2}, std::pair{14, 2}, std::pair{18, 2},
                  std::pair{6, 4},  std::pair{10, 4}, std::pair{14, 4}, std::pair{18, 4},
                  std::pair{10, 6}, std::pair{14, 6}, std::pair{10, 8}, std::pair{10, 10}};
  for (auto [r, a] : circles) v.push_back({r, a, 0});
  auto dots = {
      std::pair{1, 1},   std::pair{3, 1},   std::pair{9, 1},   std::pair{11, 1},
      std::pair{17, 1},  std::pair{19, 1},  std::pair{2, 2},   std::pair{4, 2},
      std::pair{8, 2},   std::pair{10, 2},  std::pair{12, 2},  std::pair{16, 2},
      std::pair{18, 2},  std::pair{20, 2},  std::pair{3, 3},   std::pair{5, 3},
      std::pair{7, 3},   std::pair{9, 3},   std::pair{11, 3},  std::pair{13, 3},
      std::pair{15, 3},  std::pair{17, 3},  std::pair{19, 3},  std::pair{4, 4},
      std::pair{6, 4},   std::pair{8, 4},   std::pair{10, 4},  std::pair{12, 4},
      std::pair{14, 4},  std::pair{16, 4},  std::pair{18, 4},  std::pair{5, 5},
      std::pair{7, 5},   std::pair{9, 5},   std::pair{11, 5},  std::pair{13, 5},
      std::pair{15, 5},  std::pair{17, 5},  std::pair{6, 6},   std::pair{8, 6},
      std::pair{10, 6},  std::pair{12, 6},  std::pair{14, 6},  std::pair{16, 6},
      std::pair{7, 7},   std::pair{9, 7},   std::pair{11, 7},  std::pair{13, 7},
      std::pair{15, 7},  std::pair{8, 8},   std::pair{10, 8},  std::pair{12, 8},
      std::pair{14, 8},  std::pair{9, 9},   std::pair{11, 9},  std::pair{13, 9},
      std::pair{10, 10}, std::pair{12, 10}, std::pair{11, 11}};
  for (auto [r, a] : dots) v.push_back({r, a, 1});
  std::sort(v.begin(), v.end());
  return v;
}();

GenusInvariants make(int r, int a, int dphi, long n, int dP, int dpp, long k = 0) {
  GenusInvariants inv;
  inv.r = r;
  inv.a = a;
  inv.delta_phi = dphi;
  inv.n = n;
  inv.delta_P = dP;
  inv.delta_phiP = dpp;
  inv.k = (k > 0) ? Int(k) : (n == 2 ? Int(3) : Int(1));
  return inv;
}

bool violates(const ValidationReport& rep, const std::string& id) {
  for (const auto& v : rep.violated)
    if (v.id == id) return true;
  return false;
}

}  // namespace

TEST_CASE("triple chart matches the golden transcription") {
  auto got = enumerate_rad();
  REQUIRE(got.size() == kGoldenRad.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == kGoldenRad[i]);
  // both marks at (10, 10)
  CHECK(std::count_if(got.begin(), got.end(),
                      [](const RadTriple& t) { return t.r == 10 && t.a == 10; }) == 2);
  CHECK(std::find(got.begin(), got.end(), RadTriple{10, 8, 0}) != got.end());
  for (const auto& t : got) CHECK((t.r + t.a) % 2 == 0);
}

TEST_CASE("triple validation spot checks") {
  CHECK(validate_rad(10, 10, 0).valid);
  {
    auto rep = validate_rad(20, 2, 0);
    CHECK_FALSE(rep.valid);
    CHECK(violates(rep, "0.2"));
  }
  CHECK(validate_rad(2, 0, 0).valid);
  {
    auto rep = validate_rad(2, 0, 1);
    CHECK_FALSE(rep.valid);
    CHECK(violates(rep, "0.3"));
  }
  // 0 <= a <= min(r, 22 - r) on every valid triple with a > 0
  for (const auto& t : enumerate_rad())
    if (t.a > 0) CHECK(t.a <= std::min(t.r, 22 - t.r));
}

TEST_CASE("full validation spot checks") {
  CHECK(validate_full(make(19, 1, 1, 10, 0, 0, 3)).valid);
  {
    auto rep = validate_full(make(20, 2, 1, 6, 0, 1));
    CHECK_FALSE(rep.valid);
    CHECK(violates(rep, "I.19"));
  }
  {
    auto rep = validate_full(make(19, 1, 1, 4, 0, 1));
    CHECK_FALSE(rep.valid);
    CHECK(violates(rep, "I.8"));
  }
  // fail fast: a broken 0-condition reports no I-conditions
  {
    auto rep = validate_full(make(20, 2, 0, 6, 0, 1));
    CHECK_FALSE(rep.valid);
    for (const auto& v : rep.violated) CHECK(v.id[0] == '0');
  }
  // k constraints
  CHECK_FALSE(validate_full(make(10, 10, 0, 2, 1, 1, 1)).valid);
  CHECK(validate_full(make(10, 10, 0, 2, 1, 1, 3)).valid);
  CHECK(validate_full(make(10, 10, 0, 4, 1, 1)).valid);  // k defaults to 1
}

TEST_CASE("degree enumeration") {
  auto n2 = enumerate_full(Int(2));
  bool has_even_boundary = false;
  for (const auto& inv : n2) {
    CHECK(validate_full(inv).valid);
    if (inv.r == 19 && inv.a == 3 && inv.delta_phi == 1 && inv.delta_P == 0 && inv.delta_phiP == 0)
      has_even_boundary = true;
    CHECK(inv.k == 3);
  }
  CHECK(has_even_boundary);  // n = 2 = 2 (mod 16) admits the even boundary case
  auto n6 = enumerate_full(Int(6));
  for (const auto& inv : n6) {
    bool boundary = (inv.r == 20 && inv.a == 2);
    CHECK_FALSE(boundary);
  }
  CHECK_THROWS_AS((void)enumerate_full(Int(5)), error);
}

TEST_CASE("topology dictionary") {
  CHECK(topology(10, 10, 0).kind == SurfaceTopology::Kind::empty);
  CHECK(topology(10, 8, 0).kind == SurfaceTopology::Kind::two_tori);
  {
    auto t = topology(19, 3, 1);
    CHECK(t.kind == SurfaceTopology::Kind::general);
    CHECK(t.genus == 0);
    CHECK(t.spheres == 8);
  }
  {
    auto t = topology(20, 2, 1);
    CHECK(t.genus == 0);
    CHECK(t.spheres == 9);
  }
  CHECK_THROWS_AS((void)topology(20, 2, 0), error);
  // total on valid triples, never negative
  for (const auto& tr : enumerate_rad()) {
    auto t = topology(tr.r, tr.a, tr.delta_phi);
    if (t.kind == SurfaceTopology::Kind::general) {
      CHECK(t.genus >= 0);
      CHECK(t.spheres >= 0);
    }
  }
}

TEST_CASE("mod 2 classes") {
  auto [z0, zP] = mod2_classes(make(10, 10, 0, 4, 1, 1));
  CHECK(z0);
  CHECK_FALSE(zP);
  auto [y0, yP] = mod2_classes(make(19, 3, 1, 2, 0, 0));
  CHECK_FALSE(y0);
  CHECK(yP);
}

TEST_CASE("odd prime divisors") {
  CHECK(odd_prime_divisors(Int(130)) == std::vector<Int>{Int(5), Int(13)});
  CHECK(odd_prime_divisors(Int(4)).empty());
  CHECK(odd_prime_divisors(Int(290)) == std::vector<Int>{Int(5), Int(29)});
}
