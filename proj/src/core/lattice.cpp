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

#include "lattice.hpp"

#include <algorithm>

namespace rk3 {

EvenLattice::EvenLattice(IntMat gram) : gram_(std::move(gram)) {
  require(gram_.is_symmetric(), errc::bad_input, "Gram matrix must be symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    require(divides(Int(2), gram_.at(i, i)), errc::odd_lattice,
            "Gram diagonal must be even for an even lattice");
  det_ = gram_.det();
  require(!is_zero(det_), errc::degenerate_matrix, "Gram matrix must be nondegenerate");
  sig_ = signature_of_symmetric(gram_);
}

EvenLattice lat_U() { return EvenLattice(IntMat{{0, 1}, {1, 0}}); }

EvenLattice lat_E8() {
  // Negative definite: diagonal -2, adjacency +1 along the chain 1..7 with
  // node 8 attached to node 5.
  IntMat g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = -2;
  auto link = [&](std::size_t i, std::size_t j) {
    g.at(i, j) = 1;
    g.at(j, i) = 1;
  };
  for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  return EvenLattice(g);
}

EvenLattice lat_rank1(const Int& n) {
  require(!is_zero(n), errc::degenerate_matrix, "<n> needs n != 0");
  IntMat g(1, 1);
  g.at(0, 0) = n;
  return EvenLattice(g);
}

EvenLattice lat_gram2x2(const Int& a, const Int& b, const Int& c) {
  IntMat g(2, 2);
  g.at(0, 0) = a;
  g.at(0, 1) = b;
  g.at(1, 0) = b;
  g.at(1, 1) = c;
  return EvenLattice(g);
}

EvenLattice lat_direct_sum(const std::vector<EvenLattice>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMat g(n, n);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g.at(off + i, off + j) = p.gram().at(i, j);
    off += p.rank();
  }
  return EvenLattice(g);
}

EvenLattice rescale(const EvenLattice& l, const Rat& m) {
  require(!is_zero(m), errc::bad_input, "rescale by zero");
  std::size_t n = l.rank();
  IntMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = Rat(l.gram().at(i, j)) * m;
      require(is_integer(v), errc::not_integral, "rescaled Gram is not integral");
      g.at(i, j) = v.get_num();
    }
  for (std::size_t i = 0; i < n; ++i)
    require(divides(Int(2), g.at(i, i)), errc::odd_result, "rescaled Gram has odd diagonal");
  return EvenLattice(g);
}

IntMat half_gram(const EvenLattice& l) {
  std::size_t n = l.rank();
  IntMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(divides(Int(2), l.gram().at(i, j)), errc::not_integral, "Gram/2 is not integral");
      g.at(i, j) = exact_div(l.gram().at(i, j), 2);
    }
  return g;
}

FiniteAbelianGroup::Elem DiscriminantData::coords_of(const std::vector<Rat>& x) const {
  std::size_t n = gram.rows();
  require(x.size() == n, errc::dimension_mismatch, "coords_of: vector size");
  // dual coordinates w = G x must be integral
  std::vector<Int> w(n, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rat s(0);
    for (std::size_t j = 0; j < n; ++j) s += Rat(gram.at(i, j)) * x[j];
    require(is_integer(s), errc::not_integral, "vector is not in the dual lattice");
    w[i] = s.get_num();
  }
  std::vector<Int> y(n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += u.at(i, j) * w[j];
  FiniteAbelianGroup::Elem e(keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) e[j] = mod_floor(y[keep[j]], diag[keep[j]]);
  return e;
}

namespace {

DiscriminantData disc_data_impl(const IntMat& gram, bool quadratic) {
  std::size_t n = gram.rows();
  require(gram.is_symmetric(), errc::bad_input, "Gram matrix must be symmetric");
  require(!is_zero(gram.det()), errc::degenerate_matrix, "degenerate Gram matrix");
  SnfResult s = smith_normal_form(gram);
  DiscriminantData dd{FiniteForm::trivial(quadratic ? FormKind::quadratic : FormKind::bilinear),
                      RatMat(), gram, s.u, {}, {}};
  dd.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) dd.diag[i] = s.d.at(i, i);
  for (std::size_t i = 0; i < n; ++i)
    if (dd.diag[i] >= 2) dd.keep.push_back(i);
  std::size_t k = dd.keep.size();
  // lift of generator j: G^{-1} U^{-1} e_{keep[j]}
  RatMat ginv = RatMat(gram).inverse();
  IntMat uinv = s.u.inverse_unimodular();
  dd.lifts = RatMat(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rat> w(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) w[i] = Rat(uinv.at(i, dd.keep[j]));
    std::vector<Rat> lift = mat_apply(ginv, w);
    for (std::size_t i = 0; i < n; ++i) dd.lifts.at(i, j) = lift[i];
  }
  std::vector<Int> orders;
  for (auto idx : dd.keep) orders.push_back(dd.diag[idx]);
  RatMat b(k, k);
  std::vector<Rat> q(k, Rat(0));
  RatMat gq(gram);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rat> li(n), gli;
    for (std::size_t r = 0; r < n; ++r) li[r] = dd.lifts.at(r, i);
    gli = mat_apply(gq, li);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Rat> lj(n);
      for (std::size_t r = 0; r < n; ++r) lj[r] = dd.lifts.at(r, j);
      b.at(i, j) = mod1(dot(gli, lj));
    }
    if (quadratic) q[i] = mod2(dot(gli, li));
  }
  FiniteAbelianGroup grp{orders};
  dd.form = quadratic ? FiniteForm::quadratic(grp, q, b) : FiniteForm::bilinear(grp, b);
  return dd;
}

}  // namespace

DiscriminantData discriminant_form(const EvenLattice& l) { return disc_data_impl(l.gram(), true); }

DiscriminantData discriminant_bilinear(const IntMat& gram) { return disc_data_impl(gram, false); }

Overlattice glued_overlattice(const EvenLattice& base, const std::vector<std::vector<Rat>>& gens) {
  std::size_t n = base.rank();
  RatMat gs(base.gram());
  for (const auto& g : gens) require(g.size() == n, errc::dimension_mismatch, "glue vector size");
  // the glue must lie in the dual lattice
  for (const auto& g : gens) {
    std::vector<Rat> pg = mat_apply(gs, g);
    for (const auto& v : pg)
      require(is_integer(v), errc::not_isotropic, "glue vector is not in the dual lattice");
  }
  // isotropy of the generated subgroup: q even on generators, pairings integral
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Rat> gi = mat_apply(gs, gens[i]);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Rat v = dot(gi, gens[j]);
      if (i == j)
        require(is_integer(v) && divides(Int(2), v.get_num()), errc::not_isotropic,
                "glue vector is not isotropic (q != 0 mod 2Z)");
      else
        require(is_integer(v), errc::not_isotropic, "glue vectors do not pair integrally");
    }
  }
  // new basis: HNF of the stack [identity; glue generators]
  Int den(1);
  for (const auto& g : gens)
    for (const auto& v : g) den = lcm(den, v.get_den());
  IntMat stack(n + gens.size(), n);
  for (std::size_t i = 0; i < n; ++i) stack.at(i, i) = den;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = gens[i][j] * Rat(den);
      stack.at(n + i, j) = v.get_num();
    }
  IntMat h = hermite_row_basis(stack);
  require(h.rows() == n, errc::internal, "overlattice basis rank");
  RatMat basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = Rat(h.at(i, j)) / Rat(den);
  RatMat gram_new = basis * gs * basis.transpose();
  require(gram_new.is_integral(), errc::not_isotropic, "overlattice is not integral");
  EvenLattice result{gram_new.to_int()};
  // index^2 = det(base) / det(result)
  require(divides(result.det(), base.det()), errc::internal, "overlattice determinant mismatch");
  Int isq = exact_div(base.det(), result.det());
  require(is_perfect_square(isq), errc::internal, "overlattice index is not integral");
  return Overlattice{result, basis, isqrt(isq)};
}

Overlattice overlattice_from_glue(const GlueGroup& glue) {
  std::size_t n1 = glue.l1.rank(), n2 = glue.l2.rank();
  std::size_t n = n1 + n2;
  EvenLattice sum = lat_direct_sum({glue.l1, glue.l2});
  for (const auto& g : glue.gens)
    require(g.size() == n, errc::dimension_mismatch, "glue vector size");
  // graph condition on the generated subgroup of A_1 x A_2
  DiscriminantData d1 = discriminant_form(glue.l1);
  DiscriminantData d2 = discriminant_form(glue.l2);
  const auto& g1 = d1.form.group();
  const auto& g2 = d2.form.group();
  std::vector<std::pair<FiniteAbelianGroup::Elem, FiniteAbelianGroup::Elem>> gens;
  for (const auto& g : glue.gens) {
    std::vector<Rat> xp(g.begin(), g.begin() + n1);
    std::vector<Rat> xm(g.begin() + n1, g.end());
    gens.emplace_back(d1.coords_of(xp), d2.coords_of(xm));
  }
  std::vector<std::pair<FiniteAbelianGroup::Elem, FiniteAbelianGroup::Elem>> closure;
  closure.emplace_back(g1.zero(), g2.zero());
  std::vector<std::size_t> frontier{0};
  auto find_in = [&](const std::pair<FiniteAbelianGroup::Elem, FiniteAbelianGroup::Elem>& p) {
    for (std::size_t i = 0; i < closure.size(); ++i)
      if (closure[i] == p) return i;
    return closure.size();
  };
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto idx : frontier)
      for (const auto& [a, b] : gens) {
        std::pair<FiniteAbelianGroup::Elem, FiniteAbelianGroup::Elem> p{
            g1.add(closure[idx].first, a), g2.add(closure[idx].second, b)};
        if (find_in(p) == closure.size()) {
          next.push_back(closure.size());
          closure.push_back(p);
          require(closure.size() <= (1u << 20), errc::internal, "glue group too large");
        }
      }
    frontier = std::move(next);
  }
  for (const auto& [a, b] : closure) {
    bool az = g1.is_zero_elem(a), bz = g2.is_zero_elem(b);
    require(az == bz, errc::not_a_graph,
            "glue group is not the graph of an isomorphism between the spanned subgroups");
  }
  Int index(closure.size());
  Overlattice out = glued_overlattice(sum, glue.gens);
  require(out.index == index, errc::internal, "glue group order disagrees with the index");
  return out;
}

TwoElementaryInvariants two_elementary_invariants(const EvenLattice& l) {
  DiscriminantData dd = discriminant_form(l);
  for (const auto& d : dd.form.group().orders())
    require(d == 2, errc::not_two_elementary, "discriminant group is not 2-elementary");
  TwoElementaryInvariants out{};
  out.r = static_cast<int>(l.rank());
  out.a = static_cast<int>(dd.form.group().num_gens());
  out.delta = 0;
  for (const auto& q : dd.form.gen_q())
    if (!is_integer(q)) out.delta = 1;
  return out;
}

IntMat sublattice_gram(const IntMat& ambient_gram, const IntMat& basis_rows) {
  return basis_rows * ambient_gram * basis_rows.transpose();
}

IntMat orthogonal_complement(const IntMat& ambient_gram, const IntMat& basis_rows) {
  // x with basis_rows * G * x^T = 0; kernel columns transposed to rows
  IntMat a = basis_rows * ambient_gram;
  IntMat ker = kernel_basis(a);
  return hermite_row_basis(ker.transpose());
}

}  // namespace rk3
