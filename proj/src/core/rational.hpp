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

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace rk3 {

// All integer and rational arithmetic in this project is exact. GMP values
// are kept canonical: rationals in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_si(long v) { return Int(v); }

inline bool is_zero(const Int& v) { return sgn(v) == 0; }
inline bool is_zero(const Rat& v) { return sgn(v) == 0; }

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Non-negative residue of a mod b (b > 0).
inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (is_zero(d)) return is_zero(a);
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& d) {
  require(divides(d, a), errc::internal, "exact_div: not divisible");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int isqrt(const Int& a) {
  require(sgn(a) >= 0, errc::internal, "isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& a) {
  return sgn(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

// Residue of a rational in [0, m) for a positive integer modulus m.
inline Rat rat_mod(const Rat& v, const Int& m) {
  Rat r = v;
  Rat mm(m);
  if (sgn(r) < 0) {
    Rat k = -r / mm;
    Int kk = Int(k.get_num() / k.get_den()) + 1;
    r += Rat(kk) * mm;
  }
  if (r >= mm) {
    Rat k = r / mm;
    Int kk(k.get_num() / k.get_den());
    r -= Rat(kk) * mm;
  }
  if (sgn(r) < 0) r += mm;       // guard against boundary rounding
  if (r >= mm) r -= mm;
  return r;
}

inline Rat mod1(const Rat& v) { return rat_mod(v, 1); }
inline Rat mod2(const Rat& v) { return rat_mod(v, 2); }

inline std::string rat_str(const Rat& v) {
  if (is_integer(v)) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  Rat v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    fail(errc::bad_input, "cannot parse rational: " + s);
  v.canonicalize();
  require(sgn(v.get_den()) > 0, errc::bad_input, "zero denominator: " + s);
  return v;
}

}  // namespace rk3
