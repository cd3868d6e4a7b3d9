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

#include "rational.hpp"

namespace rk3 {

// The genus invariants (r, a, delta_phi; k, n, delta_P, delta_phiP) of a
// real polarized K3 surface. r is the rank of the +1 eigenlattice, a its
// discriminant exponent, n the primitive degree, k the polarization
// multiple.
struct GenusInvariants {
  int r = 1;
  int a = 0;
  int delta_phi = 0;
  Int k = 1;
  Int n = 2;
  int delta_P = 0;
  int delta_phiP = 0;

  bool operator==(const GenusInvariants& o) const {
    return r == o.r && a == o.a && delta_phi == o.delta_phi && k == o.k && n == o.n &&
           delta_P == o.delta_P && delta_phiP == o.delta_phiP;
  }
};

struct RadTriple {
  int r, a, delta_phi;
  bool operator==(const RadTriple& o) const { return r == o.r && a == o.a && delta_phi == o.delta_phi; }
  bool operator<(const RadTriple& o) const {
    if (r != o.r) return r < o.r;
    if (a != o.a) return a < o.a;
    return delta_phi < o.delta_phi;
  }
};

struct Violation {
  std::string id;      // "0.3", "I.17", "k.1", ...
  std::string clause;  // the clause, spelled out
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violated;
};

// Conditions 0.(1)-(7) on (r, a, delta_phi).
ValidationReport validate_rad(int r, int a, int delta_phi);

// All valid (r, a, delta_phi), sorted.
std::vector<RadTriple> enumerate_rad();

// Conditions 0.(1)-(7) and I.(1)-(19) plus the k constraints (k >= 1, and
// k >= 3 when n = 2). Checks fail fast: when a 0-condition fails no
// I-condition is reported.
ValidationReport validate_full(const GenusInvariants& inv);

// All valid invariant tuples for the given even n > 0, with k normalized to
// its minimum admissible value; sorted by (r, a, delta_phi, delta_P,
// delta_phiP). Errors odd_degree.
std::vector<GenusInvariants> enumerate_full(const Int& n);

// Topological type of the real point set.
struct SurfaceTopology {
  enum class Kind { empty, two_tori, general };
  Kind kind = Kind::general;
  int genus = 0;    // g in T_g || (T_0)^s
  int spheres = 0;  // s
};

// Dictionary from a valid (r, a, delta_phi); errors invalid_triple.
SurfaceTopology topology(int r, int a, int delta_phi);

// (X(R) ~ 0 mod 2, X(R) ~ P mod 2) as booleans.
std::pair<bool, bool> mod2_classes(const GenusInvariants& inv);

// Distinct odd primes of n, ascending (trial division).
std::vector<Int> odd_prime_divisors(const Int& n);

}  // namespace rk3
