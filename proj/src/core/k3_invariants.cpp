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

#include "k3_invariants.hpp"

#include <algorithm>

namespace rk3 {

namespace {

int imod(int x, int m) { return ((x % m) + m) % m; }

int nmod(const Int& n, int m) { return static_cast<int>(mod_floor(n, m).get_si()); }

void check(ValidationReport& rep, bool ok, const char* id, const std::string& clause) {
  if (!ok) {
    rep.valid = false;
    rep.violated.push_back({id, clause});
  }
}

}  // namespace

ValidationReport validate_rad(int r, int a, int delta_phi) {
  ValidationReport rep;
  check(rep, 1 <= r && r <= 20 && 0 <= a && a <= std::min(r, 22 - r), "0.1",
        "1 <= r <= 20 and 0 <= a <= min(r, 22-r)");
  check(rep,
        imod(r + a, 2) == 0 && (delta_phi != 0 || imod(r, 4) == 2), "0.2",
        "r + a = 0 (mod 2); and if delta_phi = 0 then r = 2 (mod 4)");
  check(rep, a != 0 || (delta_phi == 0 && imod(r, 8) == 2), "0.3",
        "if a = 0 then delta_phi = 0 and r = 2 (mod 8)");
  check(rep, a != 1 || imod(r, 8) == 1 || imod(r, 8) == 3, "0.4",
        "if a = 1 then r = 1 or 3 (mod 8)");
  check(rep, !(a == 2 && imod(r, 8) == 6) || delta_phi == 0, "0.5",
        "if a = 2 and r = 6 (mod 8) then delta_phi = 0");
  check(rep, !(a == r && delta_phi == 0) || imod(r, 8) == 2, "0.6",
        "if a = r and delta_phi = 0 then r = 2 (mod 8)");
  check(rep, !(a == 22 - r && delta_phi == 0) || imod(r, 8) == 2, "0.7",
        "if a = 22 - r and delta_phi = 0 then r = 2 (mod 8)");
  return rep;
}

std::vector<RadTriple> enumerate_rad() {
  std::vector<RadTriple> out;
  for (int r = 1; r <= 20; ++r)
    for (int a = 0; a <= std::min(r, 22 - r); ++a)
      for (int d = 0; d <= 1; ++d)
        if (validate_rad(r, a, d).valid) out.push_back({r, a, d});
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate_full(const GenusInvariants& inv) {
  ValidationReport rep = validate_rad(inv.r, inv.a, inv.delta_phi);
  if (!rep.valid) return rep;  // report no I-conditions when 0-conditions fail

  const int r = inv.r, a = inv.a, dphi = inv.delta_phi, dP = inv.delta_P, dpp = inv.delta_phiP;
  const Int& n = inv.n;

  check(rep, inv.k >= 1, "k.1", "k >= 1");
  check(rep, !(n == 2) || inv.k >= 3, "k.2", "if n = 2 then k >= 3");

  bool n_ok = sgn(n) > 0 && nmod(n, 2) == 0;
  check(rep, n_ok, "I.1", "n > 0 and n = 0 (mod 2)");
  if (!n_ok) return rep;  // the mod-n clauses below assume an even n

  const int n4 = nmod(n, 4), n8 = nmod(n, 8);

  check(rep, !(n4 == 2 && dP == 0) || dphi == 1, "I.2",
        "if n = 2 (mod 4) and delta_P = 0 then delta_phi = 1");
  {
    bool ok = true;
    if (dpp == 0) {
      int nh4 = static_cast<int>(mod_floor(exact_div(n, 2), 4).get_si());
      ok = (dP == 0) && (dphi == 1) && (imod(r, 4) == imod(2 + nh4, 4));
    }
    check(rep, ok, "I.3",
          "if delta_phiP = 0 then delta_P = 0, delta_phi = 1 and r = 2 + n/2 (mod 4)");
  }

  check(rep, a != 22 - r || dP == 0, "I.4", "if a = 22 - r then delta_P = 0");
  {
    bool ok = true;
    if (a == 22 - r && dpp == 0) {
      int nh8 = static_cast<int>(mod_floor(exact_div(n, 2), 8).get_si());
      ok = imod(r, 8) == imod(2 + nh8, 8);
    }
    check(rep, ok, "I.5", "if a = 22 - r and delta_phiP = 0 then r = 2 + n/2 (mod 8)");
  }
  check(rep, !(a == 20 - r && n4 == 0 && dP == 1 && dphi == 0) || imod(r, 8) == 2, "I.6",
        "if a = 20 - r, n = 0 (mod 4), delta_P = 1 and delta_phi = 0 then r = 2 (mod 8)");
  check(rep, a != 0 || dP == 1, "I.7", "if a = 0 then delta_P = 1");
  check(rep, !(a == 1 && n4 == 0) || dP == 1, "I.8",
        "if a = 1 and n = 0 (mod 4) then delta_P = 1");
  {
    bool ok = true;
    if (a == 1 && dP == 0) {
      if (n8 == 2) ok = imod(r, 8) == 3;
      if (n8 == 6) ok = imod(r, 8) == 1;
    }
    check(rep, ok, "I.9",
          "if a = 1, delta_P = 0 and n = +-2 (mod 8) then r = 2 +- 1 (mod 8)");
  }
  {
    bool ok = true;
    if (a == 2 && dP == 0) {
      if (n8 == 2) ok = imod(r, 8) == 2 || imod(r, 8) == 4;
      if (n8 == 6) ok = imod(r, 8) == 2 || imod(r, 8) == 0;
    }
    check(rep, ok, "I.10",
          "if a = 2, delta_P = 0 and n = +-2 (mod 8) then r = 2 or 2 +- 2 (mod 8)");
  }
  check(rep, !(a == 2 && dP == 0 && n8 == 0) || imod(r, 8) == 2, "I.11",
        "if a = 2, delta_P = 0 and n = 0 (mod 8) then r = 2 (mod 8)");
  check(rep, !(a == 3 && dP == 0 && n8 == 0) || imod(r, 8) == 1 || imod(r, 8) == 3, "I.12",
        "if a = 3, delta_P = 0 and n = 0 (mod 8) then r = 1 or 3 (mod 8)");
  check(rep, !(a == 2 && dP == 0 && n8 == 4 && imod(r, 8) == 2) || dphi == 0, "I.13",
        "if a = 2, delta_P = 0, n = 4 (mod 8) and r = 2 (mod 8) then delta_phi = 0");
  check(rep, !(a == 1 && dP == 0) || dpp == 0, "I.14",
        "if a = 1 and delta_P = 0 then delta_phiP = 0");
  check(rep, !(a == 2 && dP == 0 && n8 == 4 && imod(r, 4) == 0) || dpp == 0, "I.15",
        "if a = 2, delta_P = 0, n = 4 (mod 8) and r = 0 (mod 4) then delta_phiP = 0");
  {
    bool ok = true;
    if (a == 3 && dP == 0) {
      if (n8 == 2 && imod(r, 8) == 7) ok = dpp == 0;
      if (n8 == 6 && imod(r, 8) == 5) ok = dpp == 0;
    }
    check(rep, ok, "I.16",
          "if a = 3, delta_P = 0, n = +-2 (mod 8) and r = 2 +- 5 (mod 8) then delta_phiP = 0");
  }
  check(rep, !(a == 2 && dP == 0 && n8 == 0 && imod(r, 8) == 2 && dphi == 1) || dpp == 0, "I.17",
        "if a = 2, delta_P = 0, n = 0 (mod 8), r = 2 (mod 8) and delta_phi = 1 then delta_phiP = 0");
  check(rep, !(a == 4 && dP == 0 && n8 == 0 && imod(r, 8) == 6 && dphi == 1) || dpp == 0, "I.18",
        "if a = 4, delta_P = 0, n = 0 (mod 8), r = 6 (mod 8) and delta_phi = 1 then delta_phiP = 0");
  {
    bool ok = true;
    if (r == 20) {
      Int m = n;
      int eps = 0;
      while (divides(Int(2), m)) {
        m = exact_div(m, 2);
        ++eps;
      }
      if (eps > 2) ok = false;
      Int p(3);
      while (ok && m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
          // the remaining cofactor is itself prime
          if (nmod(m, 4) != 1) ok = false;
          break;
        }
        if (divides(p, m)) {
          if (nmod(p, 4) != 1) {
            ok = false;
            break;
          }
          while (divides(p, m)) m = exact_div(m, p);
        }
        p += 2;
        if (p * p > m && m > 1) {
          if (nmod(m, 4) != 1) ok = false;
          break;
        }
      }
    }
    check(rep, ok, "I.19",
          "if r = 20 then n = 2^e p1^a1 ... pm^am with e <= 2 and every pi = 1 (mod 4)");
  }
  rep.valid = rep.violated.empty();
  return rep;
}

std::vector<GenusInvariants> enumerate_full(const Int& n) {
  require(sgn(n) > 0 && nmod(n, 2) == 0, errc::odd_degree, "n must be a positive even integer");
  Int k = (n == 2) ? Int(3) : Int(1);
  std::vector<GenusInvariants> out;
  for (const auto& t : enumerate_rad())
    for (int dP = 0; dP <= 1; ++dP)
      for (int dpp = 0; dpp <= 1; ++dpp) {
        GenusInvariants inv{t.r, t.a, t.delta_phi, k, n, dP, dpp};
        if (validate_full(inv).valid) out.push_back(inv);
      }
  return out;
}

SurfaceTopology topology(int r, int a, int delta_phi) {
  require(validate_rad(r, a, delta_phi).valid, errc::invalid_triple,
          "(r, a, delta_phi) is not realizable");
  SurfaceTopology t;
  if (r == 10 && a == 10 && delta_phi == 0) {
    t.kind = SurfaceTopology::Kind::empty;
  } else if (r == 10 && a == 8 && delta_phi == 0) {
    t.kind = SurfaceTopology::Kind::two_tori;
  } else {
    t.kind = SurfaceTopology::Kind::general;
    t.genus = (22 - r - a) / 2;
    t.spheres = (r - a) / 2;
  }
  return t;
}

std::pair<bool, bool> mod2_classes(const GenusInvariants& inv) {
  return {inv.delta_phi == 0, inv.delta_phiP == 0};
}

std::vector<Int> odd_prime_divisors(const Int& n) {
  std::vector<Int> out;
  Int m = abs(n);
  while (divides(Int(2), m)) m = exact_div(m, 2);
  Int p(3);
  while (m > 1) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
      out.push_back(m);
      break;
    }
    if (divides(p, m)) {
      out.push_back(p);
      while (divides(p, m)) m = exact_div(m, p);
    }
    p += 2;
    if (p * p > m && m > 1) {
      out.push_back(m);
      break;
    }
  }
  return out;
}

}  // namespace rk3
