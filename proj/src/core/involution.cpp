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

#include "involution.hpp"

#include <algorithm>

namespace rk3 {

const char* hyp_tag_name(HypTag tag) {
  switch (tag) {
    case HypTag::F4_1: return "F4_1";
    case HypTag::F4_2: return "F4_2";
    case HypTag::F1_19_1: return "F1_19_1";
    case HypTag::H1: return "H1";
    case HypTag::F1_19_3: return "F1_19_3";
    case HypTag::F0_2: return "F0_2";
    case HypTag::F2: return "F2";
  }
  return "?";
}

std::optional<HypTag> hyp_tag_parse(const std::string& name) {
  for (HypTag t : {HypTag::F4_1, HypTag::F4_2, HypTag::F1_19_1, HypTag::H1, HypTag::F1_19_3,
                   HypTag::F0_2, HypTag::F2})
    if (name == hyp_tag_name(t)) return t;
  return std::nullopt;
}

bool hyp_admissible(HypTag tag, const Int& n) {
  if (sgn(n) <= 0 || mod_floor(n, 2) != 0) return false;
  switch (tag) {
    case HypTag::F4_1: return n >= 6;
    case HypTag::F4_2: return mod_floor(n, 8) == 4 && n >= 12;
    case HypTag::F1_19_1: return mod_floor(n, 4) == 2 && n >= 6;
    case HypTag::H1: return mod_floor(n, 4) == 0 && n >= 4;
    case HypTag::F1_19_3: return mod_floor(n, 4) == 2 && n >= 6;
    case HypTag::F0_2: return mod_floor(n, 4) == 0 && n >= 4;
    case HypTag::F2: return mod_floor(n, 4) == 0 && n >= 8;
  }
  return false;
}

GenusInvariants hyp_targets(HypTag tag, const Int& n) {
  GenusInvariants t;
  t.k = 1;
  t.n = n;
  switch (tag) {
    case HypTag::F4_1:
    case HypTag::F4_2:
      t.r = 19;
      t.a = 1;
      t.delta_phi = 1;
      t.delta_P = 1;
      t.delta_phiP = 1;
      break;
    case HypTag::F1_19_1: {
      int d = (mod_floor(n, 8) == 2) ? 0 : 1;
      t.r = 19;
      t.a = 1;
      t.delta_phi = 1;
      t.delta_P = d;
      t.delta_phiP = d;
      break;
    }
    case HypTag::H1:
    case HypTag::F1_19_3:
    case HypTag::F0_2:
    case HypTag::F2:
      t.r = 19;
      t.a = 3;
      t.delta_phi = 1;
      t.delta_P = 0;
      t.delta_phiP = 1;
      break;
  }
  return t;
}

namespace {

struct CaseMeta {
  const char* constraint;
  const char* recipe;
  const char* annotations;  // source double-cover classification marks, opaque
  std::optional<HypTag> folds_into;
};

CaseMeta case_meta(HypTag tag) {
  switch (tag) {
    case HypTag::F4_1:
      return {"n = 0 (mod 2), n >= 6", "P = (n/2+1) C + E", "H=0, delta_phiS=1", std::nullopt};
    case HypTag::F4_2:
      return {"n = 4 (mod 8), n >= 12", "P = (n/4+2) C + 2 E", "H=0, delta_phiS=1", std::nullopt};
    case HypTag::F1_19_1:
      return {"n = 2 (mod 4), n >= 6", "P = ((n+2)/4) h + ((2-n)/4) e", "H=[h], delta_phiS=0, v=h",
              std::nullopt};
    case HypTag::H1:
      return {"n = 0 (mod 4), n >= 4", "P = (n/4) e1 + e2", "H=[e1,e2], delta_phiS=1", std::nullopt};
    case HypTag::F1_19_3:
      return {"n = 2 (mod 4), n >= 6", "P = ((n+2)/4) h + ((2-n)/4) e", "H=[h,e], delta_phiS=1",
              std::nullopt};
    case HypTag::F0_2:
      return {"n = 0 (mod 4), n >= 4", "P = e1 + (n/4) e2", "H=[e1,e2], delta_phiS=1", HypTag::H1};
    case HypTag::F2:
      return {"n = 0 (mod 4), n >= 8", "P = ((n+4)/4) c + e", "H=[e1,e2], delta_phiS=1", HypTag::H1};
  }
  return {"", "", "", std::nullopt};
}

// description of an ambient glued construction
struct Ambient {
  std::vector<EvenLattice> blocks;
  std::vector<int> signs;  // one per block: the eigenvalue of phi
  std::vector<std::vector<std::pair<std::size_t, Rat>>> glue;  // sparse base coordinates
  std::vector<std::pair<std::size_t, Int>> p;                  // sparse P
  std::vector<std::pair<std::size_t, Int>> q;                  // sparse Q
  std::size_t g_index = 0;                                     // base index of the square-2 vector
};

EvenLattice lat_u2(int scale) {  // [[0, 2s], [2s, 0]]
  return lat_gram2x2(Int(0), Int(2 * scale), Int(0));
}

Ambient ambient_for(HypTag tag, const Int& n) {
  Ambient am;
  Rat h(1, 2);
  switch (tag) {
    case HypTag::F4_1:
    case HypTag::F4_2: {
      am.blocks = {lat_gram2x2(Int(0), Int(1), Int(-2)), lat_rank1(Int(2)), lat_rank1(Int(-2)),
                   lat_U(), lat_E8(), lat_E8()};
      am.signs = {-1, -1, 1, 1, 1, 1};
      am.glue = {{{2, h}, {3, h}}};
      if (tag == HypTag::F4_1) {
        am.p = {{0, exact_div(n, 2) + 1}, {1, Int(1)}};
        am.q = {{0, exact_div(n, 2) - 1}, {1, Int(-1)}};
      } else {
        am.p = {{0, exact_div(n, 4) + 2}, {1, Int(2)}};
        am.q = {{0, exact_div(n, 4) - 2}, {1, Int(-2)}};
      }
      am.g_index = 2;
      break;
    }
    case HypTag::F1_19_1: {
      am.blocks = {lat_rank1(Int(2)), lat_rank1(Int(-2)), lat_rank1(Int(2)), lat_rank1(Int(-2)),
                   lat_U(), lat_E8(), lat_E8()};
      am.signs = {-1, -1, -1, 1, 1, 1, 1};
      am.glue = {{{0, h}, {3, h}}, {{1, h}, {2, h}}};
      am.p = {{0, exact_div(n + 2, 4)}, {1, exact_div(Int(2) - n, 4)}};
      am.q = {{0, exact_div(n - 2, 4)}, {1, -exact_div(n + 2, 4)}};
      am.g_index = 2;
      break;
    }
    case HypTag::H1:
    case HypTag::F0_2: {
      am.blocks = {lat_u2(1), lat_u2(-1), lat_rank1(Int(2)), lat_rank1(Int(-2)), lat_E8(), lat_E8()};
      am.signs = {-1, 1, -1, 1, 1, 1};
      am.glue = {{{0, h}, {2, h}}, {{1, h}, {3, h}}, {{4, h}, {5, h}}};
      if (tag == HypTag::H1) {
        am.p = {{0, exact_div(n, 4)}, {1, Int(1)}};
        am.q = {{0, exact_div(n, 4)}, {1, Int(-1)}};
      } else {
        am.p = {{0, Int(1)}, {1, exact_div(n, 4)}};
        am.q = {{0, Int(1)}, {1, -exact_div(n, 4)}};
      }
      am.g_index = 4;
      break;
    }
    case HypTag::F1_19_3: {
      am.blocks = {lat_rank1(Int(2)), lat_rank1(Int(-2)), lat_rank1(Int(-2)), lat_rank1(Int(2)),
                   lat_rank1(Int(2)), lat_rank1(Int(-2)), lat_E8(), lat_E8()};
      am.signs = {-1, -1, 1, 1, -1, 1, 1, 1};
      am.glue = {{{0, h}, {2, h}}, {{1, h}, {3, h}}, {{4, h}, {5, h}}};
      am.p = {{0, exact_div(n + 2, 4)}, {1, exact_div(Int(2) - n, 4)}};
      am.q = {{0, exact_div(n - 2, 4)}, {1, -exact_div(n + 2, 4)}};
      am.g_index = 4;
      break;
    }
    case HypTag::F2: {
      am.blocks = {lat_gram2x2(Int(0), Int(2), Int(-4)), lat_u2(-1), lat_rank1(Int(2)),
                   lat_rank1(Int(-2)), lat_E8(), lat_E8()};
      am.signs = {-1, 1, -1, 1, 1, 1};
      // e1 = c, e2 = c + e translate the square-0 glue basis
      am.glue = {{{0, h}, {2, h}}, {{0, h}, {1, h}, {3, h}}, {{4, h}, {5, h}}};
      am.p = {{0, exact_div(n + 4, 4)}, {1, Int(1)}};
      am.q = {{0, exact_div(n - 4, 4)}, {1, Int(-1)}};
      am.g_index = 4;
      break;
    }
  }
  // The sparse glue/P/Q entries above are absolute coordinate indices in the
  // direct-sum basis.
  return am;
}

// row vector x with x * rows = v (exact rational); nullopt when v is outside
// the row span.
std::optional<std::vector<Rat>> rat_row_solve(const IntMat& rows, const std::vector<Rat>& v) {
  std::size_t m = rows.rows(), n = rows.cols();
  require(v.size() == n, errc::dimension_mismatch, "rat_row_solve shape");
  // Gaussian elimination on the transposed augmented system
  RatMat a(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a.at(i, j) = Rat(rows.at(j, i));
    a.at(i, m) = v[i];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < m && rank < n; ++c) {
    std::size_t p = rank;
    while (p < n && is_zero(a.at(p, c))) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j <= m; ++j) std::swap(a.at(p, j), a.at(rank, j));
    Rat piv = a.at(rank, c);
    for (std::size_t j = 0; j <= m; ++j) a.at(rank, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || is_zero(a.at(i, c))) continue;
      Rat f = a.at(i, c);
      for (std::size_t j = 0; j <= m; ++j) a.at(i, j) -= f * a.at(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < n; ++i)
    if (!is_zero(a.at(i, m))) return std::nullopt;
  std::vector<Rat> x(m, Rat(0));
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = a.at(i, m);
  return x;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
  std::vector<Rat> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

std::vector<Rat> int_row(const IntMat& m, std::size_t i) {
  std::vector<Rat> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = Rat(m.at(i, j));
  return out;
}

}  // namespace

std::vector<HypCase> case_table(const Int& n) {
  require(sgn(n) > 0 && mod_floor(n, 2) == 0, errc::odd_degree, "n must be a positive even integer");
  std::vector<HypCase> out;
  for (HypTag t : {HypTag::F1_19_1, HypTag::F4_1, HypTag::F4_2, HypTag::H1, HypTag::F1_19_3,
                   HypTag::F0_2, HypTag::F2}) {
    if (!hyp_admissible(t, n)) continue;
    CaseMeta meta = case_meta(t);
    out.push_back(HypCase{t, hyp_tag_name(t), meta.constraint, meta.recipe, meta.annotations,
                          meta.folds_into, hyp_targets(t, n)});
  }
  return out;
}

PolarizedInvolution build_involution(HypTag tag, const Int& n, long bound) {
  require(hyp_admissible(tag, n), errc::wrong_case,
          std::string(hyp_tag_name(tag)) + " is not admissible at n = " + n.get_str());
  Ambient am = ambient_for(tag, n);
  EvenLattice base = lat_direct_sum(am.blocks);
  std::size_t dim = base.rank();
  require(dim == 22, errc::internal, "ambient dimension");
  // glue vectors in absolute coordinates
  std::vector<std::vector<Rat>> glue;
  for (const auto& sparse : am.glue) {
    std::vector<Rat> v(dim, Rat(0));
    for (const auto& [idx, val] : sparse) v[idx] = val;
    glue.push_back(v);
  }
  std::optional<Overlattice> ov;
  try {
    ov = glued_overlattice(base, glue);
  } catch (const error& e) {
    if (e.code() == errc::not_isotropic || e.code() == errc::not_integral ||
        e.code() == errc::dimension_mismatch)
      fail(errc::glue_rejected, std::string("glue rejected: ") + e.what());
    throw;
  }
  PolarizedInvolution pi{ov->lattice, IntMat(), {}, IntMat(), IntMat(), IntMat(), IntMat(),
                         {},          {},       GenusInvariants{}};
  const IntMat& G = pi.l.gram();
  // involution in the overlattice basis: column action (B Phi B^{-1})^T
  RatMat bmat = ov->basis;
  RatMat binv = bmat.inverse();
  RatMat phi_base(dim, dim);
  {
    std::size_t off = 0;
    for (std::size_t b = 0; b < am.blocks.size(); ++b) {
      for (std::size_t i = 0; i < am.blocks[b].rank(); ++i)
        phi_base.at(off + i, off + i) = am.signs[b];
      off += am.blocks[b].rank();
    }
  }
  RatMat phi_rows = bmat * phi_base * binv;
  require(phi_rows.is_integral(), errc::glue_rejected,
          "the involution does not preserve the overlattice");
  pi.phi = phi_rows.to_int().transpose();
  require(pi.phi * pi.phi == IntMat::identity(dim), errc::internal, "phi is not an involution");
  require(pi.phi.transpose() * G * pi.phi == G, errc::internal, "phi is not an isometry");
  // base-coordinate vectors rewritten in the overlattice basis (x with x B = v)
  auto to_new = [&](const std::vector<Rat>& v) {
    std::vector<Int> out(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Rat s(0);
      for (std::size_t i = 0; i < dim; ++i) s += v[i] * binv.at(i, j);
      require(is_integer(s), errc::internal, "vector is not in the overlattice");
      out[j] = s.get_num();
    }
    return out;
  };
  auto sparse_vec = [&](const std::vector<std::pair<std::size_t, Int>>& sparse) {
    std::vector<Rat> v(dim, Rat(0));
    for (const auto& [idx, val] : sparse) v[idx] = Rat(val);
    return v;
  };
  pi.p = to_new(sparse_vec(am.p));
  pi.q_vec = to_new(sparse_vec(am.q));
  {
    std::vector<Rat> v(dim, Rat(0));
    v[am.g_index] = 1;
    pi.g_vec = to_new(v);
  }
  // global checks
  require(pi.l.is_unimodular(), errc::invariant_mismatch, "ambient lattice is not unimodular");
  require(pi.l.signature() == std::make_pair(3, 19), errc::invariant_mismatch,
          "ambient signature is not (3,19)");
  auto pairing = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
    Int s(0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) s += x[i] * G.at(i, j) * y[j];
    return s;
  };
  require(pairing(pi.p, pi.p) == n, errc::invariant_mismatch, "P^2 != n");
  {
    // phi(P) = -P and P primitive
    std::vector<Int> img(dim, Int(0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) img[i] += pi.phi.at(i, j) * pi.p[j];
    for (std::size_t i = 0; i < dim; ++i)
      require(img[i] == -pi.p[i], errc::invariant_mismatch, "phi(P) != -P");
    Int g(0);
    for (const auto& v : pi.p) g = gcd(g, v);
    require(g == 1, errc::invariant_mismatch, "P is not primitive");
  }
  // eigenlattices
  pi.fixed_basis = hermite_row_basis(kernel_basis(pi.phi - IntMat::identity(dim)).transpose());
  pi.anti_basis = hermite_row_basis(kernel_basis(pi.phi + IntMat::identity(dim)).transpose());
  // S = primitive closure of [fixed; P]; M = complement
  {
    IntMat stack(pi.fixed_basis.rows() + 1, dim);
    for (std::size_t i = 0; i < pi.fixed_basis.rows(); ++i)
      for (std::size_t j = 0; j < dim; ++j) stack.at(i, j) = pi.fixed_basis.at(i, j);
    for (std::size_t j = 0; j < dim; ++j) stack.at(pi.fixed_basis.rows(), j) = pi.p[j];
    pi.s_basis = hermite_row_basis(row_saturation(stack));
    pi.m_basis = orthogonal_complement(G, pi.s_basis);
  }
  // derived invariants
  GenusInvariants inv;
  inv.k = 1;
  inv.n = n;
  inv.r = static_cast<int>(pi.fixed_basis.rows());
  EvenLattice fixed{sublattice_gram(G, pi.fixed_basis)};
  TwoElementaryInvariants tei = two_elementary_invariants(fixed);
  inv.a = tei.a;
  // delta_phi: parity of x . phi(x) on a basis
  IntMat gphi = G * pi.phi;
  int dphi = 0;
  for (std::size_t i = 0; i < dim; ++i)
    if (!divides(Int(2), gphi.at(i, i))) dphi = 1;
  inv.delta_phi = dphi;
  require(dphi == tei.delta, errc::internal,
          "x.phi(x) parity disagrees with the 2-elementary delta of the fixed lattice");
  // delta_P: parity of P . L_phi
  std::vector<Int> gp(dim, Int(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) gp[i] += G.at(i, j) * pi.p[j];
  int dP = 0;
  for (std::size_t i = 0; i < pi.anti_basis.rows(); ++i) {
    Int s(0);
    for (std::size_t j = 0; j < dim; ++j) s += pi.anti_basis.at(i, j) * gp[j];
    if (!divides(Int(2), s)) dP = 1;
  }
  inv.delta_P = dP;
  // delta_phiP: parity of x . phi(x) - x . P on a basis
  int dpp = 0;
  for (std::size_t i = 0; i < dim; ++i)
    if (!divides(Int(2), gphi.at(i, i) - gp[i])) dpp = 1;
  inv.delta_phiP = dpp;
  pi.invariants = inv;
  GenusInvariants expect = hyp_targets(tag, n);
  require(inv == expect, errc::invariant_mismatch, "derived invariants do not match the case line");
  require(validate_full(inv).valid, errc::internal, "derived invariants fail validation");
  (void)bound;
  return pi;
}

namespace {

// hom defined on a generating set of src: returns the matrix on the
// invariant generators, or fails.
IntMat hom_from_generating_set(const FiniteAbelianGroup& src,
                               const std::vector<FiniteAbelianGroup::Elem>& gens,
                               const FiniteAbelianGroup& tgt,
                               const std::vector<FiniteAbelianGroup::Elem>& images) {
  std::size_t k = src.num_gens(), g = gens.size(), kt = tgt.num_gens();
  IntMat sys(k, g + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < g; ++j) sys.at(i, j) = gens[j][i];
    sys.at(i, g + i) = src.orders()[i];
  }
  IntMat out(kt, k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Int> e(k, Int(0));
    e[c] = 1;
    auto sol = solve_integer(sys, e);
    require(sol.has_value(), errc::internal, "marked vectors do not generate the group");
    FiniteAbelianGroup::Elem img = tgt.zero();
    for (std::size_t j = 0; j < g; ++j) img = tgt.add(img, tgt.smul((*sol)[j], images[j]));
    for (std::size_t i = 0; i < kt; ++i) out.at(i, c) = img[i];
  }
  return out;
}

IntMat reduce_rows_mod(const FiniteAbelianGroup& g, IntMat m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = mod_floor(m.at(i, j), g.orders()[i]);
  return m;
}

}  // namespace

ComponentLabel component_label(const PolarizedInvolution& pi, long bound) {
  CaseTag regime = resolve_case(pi.invariants);
  require(regime == CaseTag::R1911 || regime == CaseTag::R1910 || regime == CaseTag::R1931,
          errc::wrong_case, "labels are computed for the r = 19 regimes");
  const IntMat& G = pi.l.gram();
  const Int& n = pi.invariants.n;
  std::size_t dim = pi.l.rank();
  bool bilinear_side = (regime == CaseTag::R1931);
  EvenLattice ref = reference_lattice(regime, n);
  IntMat gram_m = sublattice_gram(G, pi.m_basis);

  // coordinates of the marked vectors g, Q (and (g+Q)/2 for the index-2
  // regime) with respect to the m-basis
  auto m_coords = [&](const std::vector<Rat>& v) {
    auto x = rat_row_solve(pi.m_basis, v);
    require(x.has_value(), errc::internal, "marked vector is not in the complement");
    return *x;
  };
  std::vector<Rat> gq1 = m_coords(to_rat(pi.g_vec));
  std::vector<Rat> amb_q = to_rat(pi.q_vec);
  std::vector<Rat> gq2;
  if (regime == CaseTag::R1910) {
    std::vector<Rat> half(dim);
    for (std::size_t i = 0; i < dim; ++i) half[i] = (Rat(pi.g_vec[i]) + Rat(pi.q_vec[i])) / 2;
    gq2 = m_coords(half);
  } else {
    gq2 = m_coords(amb_q);
  }
  IntMat w(2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    require(is_integer(gq1[j]) && is_integer(gq2[j]), errc::internal,
            "marked basis is not integral in the complement");
    w.at(0, j) = gq1[j].get_num();
    w.at(1, j) = gq2[j].get_num();
  }
  Int dw = w.det();
  require(dw == 1 || dw == -1, errc::internal, "marked vectors do not span the complement");
  require(w * gram_m * w.transpose() == ref.gram(), errc::internal,
          "marked basis Gram does not match the reference lattice");
  IntMat psi = w.inverse_unimodular().transpose();  // ref coords of m-basis images

  DiscriminantData dd_m =
      bilinear_side ? discriminant_bilinear(half_gram(EvenLattice{gram_m})) : discriminant_form(EvenLattice{gram_m});
  DiscriminantData dd_ref =
      bilinear_side ? discriminant_bilinear(half_gram(ref)) : discriminant_form(ref);

  // psi-bar on the discriminant side
  std::size_t km = dd_m.form.group().num_gens();
  IntMat psibar(dd_ref.form.group().num_gens(), km);
  {
    RatMat psir(psi);
    for (std::size_t j = 0; j < km; ++j) {
      std::vector<Rat> lift(2);
      for (std::size_t i = 0; i < 2; ++i) lift[i] = dd_m.lifts.at(i, j);
      auto img = mat_apply(psir, lift);
      auto e = dd_ref.coords_of(img);
      for (std::size_t i = 0; i < e.size(); ++i) psibar.at(i, j) = e[i];
    }
  }
  require(is_isometry(dd_m.form, dd_ref.form, psibar), errc::internal,
          "complement class does not match the reference class");

  // glue graph gamma and the marking mu
  IntMat gamma;
  IntMat mu;
  if (!bilinear_side) {
    EvenLattice s_lat{sublattice_gram(G, pi.s_basis)};
    DiscriminantData dd_s = discriminant_form(s_lat);
    // graph pairs from the ambient basis
    IntMat stack(dim, dim);
    for (std::size_t i = 0; i < pi.s_basis.rows(); ++i)
      for (std::size_t j = 0; j < dim; ++j) stack.at(i, j) = pi.s_basis.at(i, j);
    for (std::size_t i = 0; i < pi.m_basis.rows(); ++i)
      for (std::size_t j = 0; j < dim; ++j) stack.at(pi.s_basis.rows() + i, j) = pi.m_basis.at(i, j);
    std::vector<FiniteAbelianGroup::Elem> m_parts, s_parts;
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Rat> unit(dim, Rat(0));
      unit[i] = 1;
      auto x = rat_row_solve(stack, unit);
      require(x.has_value(), errc::internal, "ambient vector outside S + M span");
      std::vector<Rat> xs(x->begin(), x->begin() + pi.s_basis.rows());
      std::vector<Rat> xm(x->begin() + pi.s_basis.rows(), x->end());
      m_parts.push_back(dd_m.coords_of(xm));
      s_parts.push_back(dd_s.coords_of(xs));
    }
    gamma = reduce_rows_mod(dd_s.form.group(),
                            hom_from_generating_set(dd_m.form.group(), m_parts,
                                                    dd_s.form.group(), s_parts));
    require(is_isometry(dd_m.form, negate(dd_s.form), gamma), errc::internal,
            "glue graph is not an anti-isometry");
    // markings of disc(S)
    std::vector<FiniteAbelianGroup::Elem> marks_s, marks_ref;
    {
      // P/n (R1911) or P/(n/2) (R1910)
      auto ps = rat_row_solve(pi.s_basis, to_rat(pi.p));
      require(ps.has_value(), errc::internal, "P outside S");
      Int denom = (regime == CaseTag::R1911) ? n : exact_div(n, 2);
      std::vector<Rat> pdual(*ps);
      for (auto& v : pdual) v /= Rat(denom);
      marks_s.push_back(dd_s.coords_of(pdual));
      if (regime == CaseTag::R1911) {
        // the order-2 generator coming from the fixed lattice
        EvenLattice fixed{sublattice_gram(G, pi.fixed_basis)};
        DiscriminantData dd_f = discriminant_form(fixed);
        require(dd_f.form.group().orders() == std::vector<Int>{Int(2)}, errc::internal,
                "fixed lattice discriminant is not Z/2");
        std::vector<Rat> lift_fixed(pi.fixed_basis.rows());
        for (std::size_t i = 0; i < lift_fixed.size(); ++i) lift_fixed[i] = dd_f.lifts.at(i, 0);
        std::vector<Rat> amb(dim, Rat(0));
        for (std::size_t i = 0; i < pi.fixed_basis.rows(); ++i)
          for (std::size_t j = 0; j < dim; ++j)
            amb[j] += lift_fixed[i] * Rat(pi.fixed_basis.at(i, j));
        auto sx = rat_row_solve(pi.s_basis, amb);
        require(sx.has_value(), errc::internal, "fixed dual generator outside S*");
        marks_s.push_back(dd_s.coords_of(*sx));
      }
    }
    {
      Int denom = (regime == CaseTag::R1911) ? n : exact_div(n, 2);
      if (regime == CaseTag::R1911) {
        marks_ref.push_back(dd_ref.coords_of({Rat(0), Rat(1) / Rat(denom)}));  // u2/n
        marks_ref.push_back(dd_ref.coords_of({Rat(1, 2), Rat(0)}));            // u1/2
      } else {
        // R = 2 u2 - u1, marked by R/(n/2)
        marks_ref.push_back(dd_ref.coords_of({Rat(-1) / Rat(denom), Rat(2) / Rat(denom)}));
      }
    }
    // q-value sanity of the markings
    {
      Rat qp = dd_s.form.q_value(marks_s[0]);
      Rat expect = (regime == CaseTag::R1911) ? mod2(Rat(1) / Rat(n)) : mod2(Rat(4) / Rat(n));
      require(qp == expect, errc::internal, "marked P class has the wrong q value");
    }
    mu = reduce_rows_mod(dd_ref.form.group(),
                         hom_from_generating_set(dd_s.form.group(), marks_s,
                                                 dd_ref.form.group(), marks_ref));
    require(is_isometry(negate(dd_s.form), dd_ref.form, mu), errc::internal,
            "marking is not an anti-isometry onto the reference form");
  } else {
    // bilinear route through the -1 eigenlattice rescaled by 1/2
    IntMat gram_phi = sublattice_gram(G, pi.anti_basis);
    EvenLattice anti{gram_phi};
    IntMat gram_t = half_gram(anti);
    // coordinates of P and of the m-basis inside the -1 eigenlattice
    auto p_phi = rat_row_solve(pi.anti_basis, to_rat(pi.p));
    require(p_phi.has_value(), errc::internal, "P outside the -1 eigenlattice");
    std::size_t ra = pi.anti_basis.rows();
    IntMat stack(1 + pi.m_basis.rows(), ra);
    for (std::size_t j = 0; j < ra; ++j) {
      require(is_integer((*p_phi)[j]), errc::internal, "P coordinates not integral");
      stack.at(0, j) = (*p_phi)[j].get_num();
    }
    for (std::size_t i = 0; i < pi.m_basis.rows(); ++i) {
      auto mc = rat_row_solve(pi.anti_basis, int_row(pi.m_basis, i));
      require(mc.has_value(), errc::internal, "M outside the -1 eigenlattice");
      for (std::size_t j = 0; j < ra; ++j) {
        require(is_integer((*mc)[j]), errc::internal, "M coordinates not integral");
        stack.at(1 + i, j) = (*mc)[j].get_num();
      }
    }
    IntMat w_gram(1, 1);
    w_gram.at(0, 0) = exact_div(n, 2);
    DiscriminantData dd_w = discriminant_bilinear(w_gram);
    // graph pairs from the eigenlattice basis vectors (T is unimodular)
    std::vector<FiniteAbelianGroup::Elem> m_parts, w_parts;
    for (std::size_t i = 0; i < ra; ++i) {
      std::vector<Rat> unit(ra, Rat(0));
      unit[i] = 1;
      auto x = rat_row_solve(stack, unit);
      require(x.has_value(), errc::internal, "eigenlattice vector outside P + M span");
      std::vector<Rat> xw{(*x)[0]};
      std::vector<Rat> xm(x->begin() + 1, x->end());
      m_parts.push_back(dd_m.coords_of(xm));
      w_parts.push_back(dd_w.coords_of(xw));
    }
    gamma = reduce_rows_mod(dd_w.form.group(),
                            hom_from_generating_set(dd_m.form.group(), m_parts,
                                                    dd_w.form.group(), w_parts));
    require(is_isometry(dd_m.form, negate(dd_w.form), gamma), errc::internal,
            "glue graph is not an anti-isometry (bilinear side)");
    std::vector<FiniteAbelianGroup::Elem> marks_w{dd_w.form.group().gen(0)};
    std::vector<FiniteAbelianGroup::Elem> marks_ref{
        dd_ref.coords_of({Rat(0), Rat(2) / Rat(n)})};  // u2 / (n/2) in the rescaled dual
    require(dd_w.form.b_value(marks_w[0], marks_w[0]) == mod1(Rat(2) / Rat(n)), errc::internal,
            "marked class has the wrong b value");
    mu = reduce_rows_mod(dd_ref.form.group(),
                         hom_from_generating_set(dd_w.form.group(), marks_w,
                                                 dd_ref.form.group(), marks_ref));
    require(is_isometry(negate(dd_w.form), dd_ref.form, mu), errc::internal,
            "marking is not an anti-isometry onto the reference form (bilinear side)");
  }

  FormIsometry psibar_iso{psibar};
  FormIsometry psibar_inv = inverse(dd_ref.form, psibar_iso);
  IntMat raw = reduce_rows_mod(dd_ref.form.group(), mu * gamma * psibar_inv.map);
  require(is_isometry(dd_ref.form, dd_ref.form, raw), errc::internal,
          "label is not a self-isometry of the reference form");
  FormIsometry g_raw{raw};
  std::vector<FormIsometry> aut_img = aut_image(ref.gram(), dd_ref, bound);
  ComponentLabel out{regime, g_raw, flags_of_label(dd_ref.form, aut_img, g_raw)};
  return out;
}

ComponentLabel component_label(HypTag tag, const Int& n, long bound) {
  return component_label(build_involution(tag, n, bound), bound);
}

}  // namespace rk3
