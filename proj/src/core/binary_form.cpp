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

#include "binary_form.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rk3 {

bool form_less(const BinaryForm& x, const BinaryForm& y) {
  int c = cmp(x.a, y.a);
  if (c != 0) return c < 0;
  c = cmp(x.b, y.b);
  if (c != 0) return c < 0;
  return cmp(x.c, y.c) < 0;
}

BinaryForm form_of_gram(const IntMat& gram) {
  require(gram.rows() == 2 && gram.cols() == 2, errc::wrong_rank, "binary form needs a 2x2 Gram");
  require(divides(Int(2), gram.at(0, 0)) && divides(Int(2), gram.at(1, 1)), errc::odd_lattice,
          "Gram diagonal must be even");
  return BinaryForm{exact_div(gram.at(0, 0), 2), gram.at(0, 1), exact_div(gram.at(1, 1), 2)};
}

IntMat gram_of_form(const BinaryForm& f) {
  IntMat g(2, 2);
  g.at(0, 0) = 2 * f.a;
  g.at(0, 1) = f.b;
  g.at(1, 0) = f.b;
  g.at(1, 1) = 2 * f.c;
  return g;
}

BinaryForm transform(const BinaryForm& f, const IntMat& m) {
  const Int &p = m.at(0, 0), &q = m.at(0, 1), &r = m.at(1, 0), &s = m.at(1, 1);
  BinaryForm g;
  g.a = f.a * p * p + f.b * p * r + f.c * r * r;
  g.b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
  g.c = f.a * q * q + f.b * q * s + f.c * s * s;
  return g;
}

bool is_reduced_indefinite(const BinaryForm& f) {
  Int d = f.disc();
  if (sgn(f.b) <= 0) return false;
  if (f.b * f.b >= d) return false;
  Int twoa = 2 * abs(f.a);
  if ((twoa + f.b) * (twoa + f.b) <= d) return false;
  if (twoa > f.b && (twoa - f.b) * (twoa - f.b) >= d) return false;
  return true;
}

namespace {

// One reduction-neighbor step (requires c != 0).
void rho_step(BinaryForm& f, IntMat& t, const Int& d, const Int& sq) {
  Int c2 = 2 * abs(f.c);
  Int bp;
  if (f.c * f.c > d) {
    // |c| > sqrt(d): symmetric residue of -b in (-|c|, |c|]
    bp = mod_floor(-f.b, c2);
    if (bp > abs(f.c)) bp -= c2;
  } else {
    // largest value congruent to -b below sqrt(d)
    bp = sq - mod_floor(sq + f.b, c2);
  }
  Int s = exact_div(f.b + bp, 2 * f.c);
  IntMat step(2, 2);
  step.at(0, 0) = 0;
  step.at(0, 1) = -1;
  step.at(1, 0) = 1;
  step.at(1, 1) = s;
  Int cp = exact_div(bp * bp - d, 4 * f.c);
  f = BinaryForm{f.c, bp, cp};
  t = t * step;
}

// Primitive integer vectors spanning the two isotropic lines of a form of
// square discriminant d = k^2, k > 0.
std::pair<std::vector<Int>, std::vector<Int>> isotropic_lines(const BinaryForm& f, const Int& k) {
  auto normalize = [](Int x, Int y) {
    Int g = gcd(x, y);
    x = exact_div(x, g);
    y = exact_div(y, g);
    if (sgn(x) < 0 || (is_zero(x) && sgn(y) < 0)) {
      x = -x;
      y = -y;
    }
    return std::vector<Int>{x, y};
  };
  if (is_zero(f.a)) {
    // f = y (bx + cy)
    return {normalize(Int(1), Int(0)), normalize(f.c, -f.b)};
  }
  return {normalize(-f.b + k, 2 * f.a), normalize(-f.b - k, 2 * f.a)};
}

// b_f(u, v) = f(u+v) - f(u) - f(v)
Int bilinear(const BinaryForm& f, const std::vector<Int>& u, const std::vector<Int>& v) {
  return 2 * f.a * u[0] * v[0] + f.b * (u[0] * v[1] + u[1] * v[0]) + 2 * f.c * u[1] * v[1];
}

Int eval(const BinaryForm& f, const std::vector<Int>& v) {
  return f.a * v[0] * v[0] + f.b * v[0] * v[1] + f.c * v[1] * v[1];
}

}  // namespace

ReduceResult canonical_square(const BinaryForm& f) {
  Int d = f.disc();
  require(sgn(d) > 0, errc::zero_disc, "square canonicalization needs positive discriminant");
  require(is_perfect_square(d), errc::internal, "canonical_square needs square discriminant");
  Int k = isqrt(d);
  auto [v1, v2] = isotropic_lines(f, k);
  for (const auto& v : {v1, v2}) {
    // complete v to a basis (u, v) with det [u v] = 1
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), v[1].get_mpz_t(), v[0].get_mpz_t());
    require(g == 1, errc::internal, "isotropic vector must be primitive");
    // u0 * v1 - u1 * v0 = 1 with u = (p, -q)
    std::vector<Int> u{p, -q};
    Int beta = bilinear(f, u, v);
    require(beta == k || beta == -k, errc::internal, "isotropic basis pairing");
    if (beta != k) continue;
    Int a0 = eval(f, u);
    Int aa = mod_floor(a0, k);
    Int t = exact_div(aa - a0, k);
    // shift u by t*v
    u[0] += t * v[0];
    u[1] += t * v[1];
    IntMat m(2, 2);
    m.at(0, 0) = u[0];
    m.at(0, 1) = v[0];
    m.at(1, 0) = u[1];
    m.at(1, 1) = v[1];
    BinaryForm out{aa, k, Int(0)};
    require(transform(f, m) == out, errc::internal, "square canonical transform check");
    return ReduceResult{out, m};
  }
  fail(errc::internal, "no isotropic line produced +k pairing");
}

ReduceResult reduce(const BinaryForm& f) {
  Int d = f.disc();
  require(sgn(d) != 0, errc::zero_disc, "zero discriminant");
  require(sgn(d) > 0, errc::definite_form, "definite form (negative discriminant)");
  if (is_perfect_square(d)) return canonical_square(f);
  Int sq = isqrt(d);
  BinaryForm g = f;
  IntMat t = IntMat::identity(2);
  int guard = 0;
  while (!is_reduced_indefinite(g)) {
    rho_step(g, t, d, sq);
    require(++guard < 100000, errc::internal, "reduction did not terminate");
  }
  require(transform(f, t) == g, errc::internal, "reduction transform check");
  return ReduceResult{g, t};
}

Cycle cycle_of(const BinaryForm& reduced) {
  require(is_reduced_indefinite(reduced), errc::internal, "cycle_of needs a reduced form");
  Int d = reduced.disc();
  Int sq = isqrt(d);
  Cycle cy;
  BinaryForm g = reduced;
  IntMat t = IntMat::identity(2);
  int guard = 0;
  do {
    cy.forms.push_back(g);
    cy.transforms.push_back(t);
    rho_step(g, t, d, sq);
    require(++guard < 100000, errc::internal, "cycle did not close");
  } while (!(g == reduced));
  return cy;
}

std::optional<IntMat> proper_transform(const BinaryForm& f, const BinaryForm& g) {
  if (f.disc() != g.disc()) return std::nullopt;
  Int d = f.disc();
  if (sgn(d) <= 0) fail(is_zero(d) ? errc::zero_disc : errc::definite_form, "needs positive discriminant");
  if (is_perfect_square(d)) {
    ReduceResult rf = canonical_square(f), rg = canonical_square(g);
    if (!(rf.form == rg.form)) return std::nullopt;
    // f o rf.t = rg.form = g o rg.t  =>  g = f o (rf.t rg.t^{-1})
    IntMat m = rf.t * rg.t.inverse_unimodular();
    require(transform(f, m) == g, errc::internal, "square transform check");
    return m;
  }
  ReduceResult rf = reduce(f), rg = reduce(g);
  Cycle cy = cycle_of(rf.form);
  for (std::size_t i = 0; i < cy.forms.size(); ++i) {
    if (cy.forms[i] == rg.form) {
      IntMat m = rf.t * cy.transforms[i] * rg.t.inverse_unimodular();
      require(transform(f, m) == g, errc::internal, "cycle transform check");
      return m;
    }
  }
  return std::nullopt;
}

std::optional<IntMat> gl_transform(const BinaryForm& f, const BinaryForm& g) {
  if (auto m = proper_transform(f, g)) return m;
  IntMat sigma{{1, 0}, {0, -1}};
  BinaryForm fs = transform(f, sigma);
  if (auto m = proper_transform(fs, g)) {
    IntMat w = sigma * *m;
    require(transform(f, w) == g, errc::internal, "improper transform check");
    return w;
  }
  return std::nullopt;
}

std::pair<Int, Int> automorph_tu(const BinaryForm& f, const IntMat& m) {
  Int t = m.at(0, 0) + m.at(1, 1);
  require(!is_zero(f.a), errc::internal, "automorph_tu needs a != 0");
  Int u = exact_div(m.at(1, 0), f.a);
  return {t, u};
}

IntMat fundamental_automorph(const BinaryForm& f) {
  Int d = f.disc();
  require(sgn(d) > 0, errc::definite_form, "needs positive discriminant");
  require(!is_perfect_square(d), errc::square_disc, "square discriminant is handled separately");
  ReduceResult r = reduce(f);
  // product of the reduction steps around one full period
  IntMat p = IntMat::identity(2);
  {
    BinaryForm g = r.form;
    IntMat t = IntMat::identity(2);
    Int sq = isqrt(d);
    do {
      rho_step(g, t, d, sq);
    } while (!(g == r.form));
    p = t;
  }
  IntMat m = r.t * p * r.t.inverse_unimodular();
  require(transform(f, m) == f, errc::internal, "automorph does not preserve the form");
  if (sgn(m.at(0, 0) + m.at(1, 1)) < 0) m = -m;
  auto [t, u] = automorph_tu(f, m);
  if (sgn(u) < 0) {
    m = m.inverse_unimodular();
    std::tie(t, u) = automorph_tu(f, m);
  }
  require(t * t - d * u * u == 4 && sgn(u) > 0, errc::internal, "Pell identity for automorph");
  require(m.at(0, 0) == exact_div(t - f.b * u, 2) && m.at(0, 1) == -f.c * u &&
              m.at(1, 0) == f.a * u && m.at(1, 1) == exact_div(t + f.b * u, 2),
          errc::internal, "automorph matrix shape");
  return m;
}

std::vector<IntMat> isotropic_automorphisms(const BinaryForm& f) {
  Int d = f.disc();
  require(sgn(d) > 0 && is_perfect_square(d), errc::internal, "needs square discriminant");
  Int k = isqrt(d);
  auto [v1, v2] = isotropic_lines(f, k);
  RatMat basis(2, 2);
  basis.at(0, 0) = Rat(v1[0]);
  basis.at(1, 0) = Rat(v1[1]);
  basis.at(0, 1) = Rat(v2[0]);
  basis.at(1, 1) = Rat(v2[1]);
  RatMat binv = basis.inverse();
  std::vector<IntMat> out;
  auto add_candidate = [&](const RatMat& core) {
    RatMat w = basis * core * binv;
    if (!w.is_integral()) return;
    IntMat m = w.to_int();
    if (!(transform(f, m) == f)) return;
    Int det = m.det();
    if (det != 1 && det != -1) return;
    for (const auto& e : out)
      if (e == m) return;
    out.push_back(m);
  };
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      RatMat core(2, 2);
      core.at(0, 0) = e1;
      core.at(1, 1) = e2;
      add_candidate(core);
    }
  for (int e : {1, -1}) {
    RatMat core(2, 2);
    core.at(0, 1) = e;
    core.at(1, 0) = e;
    add_candidate(core);
  }
  std::sort(out.begin(), out.end(), [](const IntMat& x, const IntMat& y) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        int c = cmp(x.at(i, j), y.at(i, j));
        if (c != 0) return c < 0;
      }
    return false;
  });
  return out;
}

bool is_ambiguous(const BinaryForm& f) {
  IntMat sigma{{1, 0}, {0, -1}};
  return proper_transform(f, transform(f, sigma)).has_value();
}

std::vector<IntMat> lattice_aut_generators(const BinaryForm& f) {
  std::vector<IntMat> gens;
  gens.push_back(-IntMat::identity(2));
  Int d = f.disc();
  require(sgn(d) > 0, errc::definite_form, "needs an indefinite form");
  if (is_perfect_square(d)) {
    for (const auto& m : isotropic_automorphisms(f)) gens.push_back(m);
    return gens;
  }
  gens.push_back(fundamental_automorph(f));
  IntMat sigma{{1, 0}, {0, -1}};
  if (auto n = proper_transform(transform(f, sigma), f)) {
    IntMat w = sigma * *n;
    require(transform(f, w) == f && w.det() == -1, errc::internal, "improper automorphism check");
    gens.push_back(w);
  }
  return gens;
}

std::vector<BinaryClass> classes_of_disc(const Int& disc, Equivalence eq) {
  require(sgn(disc) > 0, errc::definite_form, "class enumeration needs positive discriminant");
  Int m4 = mod_floor(disc, 4);
  require(m4 == 0 || m4 == 1, errc::bad_input, "discriminant must be 0 or 1 mod 4");
  std::vector<BinaryClass> classes;
  IntMat sigma{{1, 0}, {0, -1}};
  if (is_perfect_square(disc)) {
    Int k = isqrt(disc);
    std::set<std::string> used;
    for (Int a(0); a < k; ++a) {
      BinaryForm f{a, k, Int(0)};
      if (used.count(f.a.get_str())) continue;
      BinaryClass cls;
      cls.cycle = {f};
      cls.canonical = f;
      BinaryForm partner = canonical_square(transform(f, sigma)).form;
      cls.ambiguous = (partner == f);
      if (eq == Equivalence::improper && !cls.ambiguous) {
        used.insert(partner.a.get_str());
        cls.cycle.push_back(partner);
        if (form_less(partner, cls.canonical)) cls.canonical = partner;
      }
      used.insert(f.a.get_str());
      classes.push_back(cls);
    }
  } else {
    // enumerate all reduced forms of this discriminant
    std::vector<BinaryForm> reduced;
    Int sq = isqrt(disc);
    for (Int b(1); b <= sq; ++b) {
      if (mod_floor(b, 2) != mod_floor(disc, 2)) continue;
      Int n4 = disc - b * b;
      if (!divides(Int(4), n4)) continue;
      Int n = exact_div(n4, 4);  // = |a c|
      for (Int a(1); a * a <= n; ++a) {
        if (!divides(a, n)) continue;
        for (const Int& aa : {a, exact_div(n, a)}) {
          Int cc = exact_div(n, aa);
          for (int sa : {1, -1}) {
            BinaryForm f{sa * aa, b, -sa * cc};
            if (is_reduced_indefinite(f)) reduced.push_back(f);
          }
          if (aa == cc) break;
        }
      }
    }
    std::sort(reduced.begin(), reduced.end(), form_less);
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    // group into cycles
    std::map<std::string, std::size_t> where;
    auto key = [](const BinaryForm& f) { return f.a.get_str() + "|" + f.b.get_str() + "|" + f.c.get_str(); };
    std::vector<std::vector<BinaryForm>> cycles;
    for (const auto& f : reduced) {
      if (where.count(key(f))) continue;
      Cycle cy = cycle_of(f);
      for (const auto& g : cy.forms) where[key(g)] = cycles.size();
      cycles.push_back(cy.forms);
    }
    std::vector<bool> taken(cycles.size(), false);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      BinaryClass cls;
      cls.cycle = cycles[i];
      BinaryForm partner = reduce(transform(cycles[i][0], sigma)).form;
      std::size_t pi = where.at(key(partner));
      cls.ambiguous = (pi == i);
      if (eq == Equivalence::improper && pi != i) {
        taken[pi] = true;
        cls.cycle.insert(cls.cycle.end(), cycles[pi].begin(), cycles[pi].end());
      }
      cls.canonical = cls.cycle[0];
      for (const auto& g : cls.cycle)
        if (form_less(g, cls.canonical)) cls.canonical = g;
      classes.push_back(cls);
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const BinaryClass& x, const BinaryClass& y) { return form_less(x.canonical, y.canonical); });
  return classes;
}

std::vector<BinaryClass> classes_in_genus(const EvenLattice& l0, Equivalence eq, long bound) {
  require(l0.rank() == 2, errc::wrong_rank, "classes_in_genus needs a rank-2 lattice");
  require(l0.signature() == std::make_pair(1, 1), errc::wrong_signature,
          "classes_in_genus needs signature (1,1)");
  Int disc = -l0.det();
  DiscriminantData d0 = discriminant_form(l0);
  std::vector<BinaryClass> out;
  for (const auto& cls : classes_of_disc(disc, eq)) {
    EvenLattice cand{gram_of_form(cls.canonical)};
    DiscriminantData dc = discriminant_form(cand);
    if (find_isometry(dc.form, d0.form, bound).has_value()) out.push_back(cls);
  }
  return out;
}

std::vector<FormIsometry> aut_image(const IntMat& gram, const DiscriminantData& dd, long bound) {
  require(dd.form.group().order() <= bound, errc::group_too_large,
          "discriminant group exceeds the configured bound");
  BinaryForm f = form_of_gram(gram);
  std::vector<FormIsometry> images;
  std::size_t n = gram.rows();
  std::size_t k = dd.form.group().num_gens();
  for (const auto& m : lattice_aut_generators(f)) {
    IntMat iso(k, k);
    RatMat mr(m);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Rat> lift(n);
      for (std::size_t i = 0; i < n; ++i) lift[i] = dd.lifts.at(i, j);
      std::vector<Rat> img = mat_apply(mr, lift);
      FiniteAbelianGroup::Elem e = dd.coords_of(img);
      for (std::size_t i = 0; i < k; ++i) iso.at(i, j) = e[i];
    }
    require(is_isometry(dd.form, dd.form, iso), errc::internal,
            "lattice automorphism does not act on the discriminant form");
    images.push_back(FormIsometry{iso});
  }
  return group_closure(dd.form, images);
}

Int count_cosets(const FiniteForm& f, const std::vector<FormIsometry>& all,
                 const std::vector<FormIsometry>& sub_a, const std::vector<FormIsometry>& sub_b) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i].map.str()] = i;
  for (const auto& x : sub_a)
    require(index.count(x.map.str()), errc::not_subgroup, "left subgroup not inside the group");
  for (const auto& x : sub_b)
    require(index.count(x.map.str()), errc::not_subgroup, "right subgroup not inside the group");
  std::vector<bool> seen(all.size(), false);
  Int orbits(0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      std::size_t g = stack.back();
      stack.pop_back();
      for (const auto& a : sub_a)
        for (const auto& b : sub_b) {
          FormIsometry y = compose(f, compose(f, a, all[g]), b);
          std::size_t j = index.at(y.map.str());
          if (!seen[j]) {
            seen[j] = true;
            stack.push_back(j);
          }
        }
    }
  }
  return orbits;
}

}  // namespace rk3
