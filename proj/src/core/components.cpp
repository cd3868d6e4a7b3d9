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

#include "components.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rk3 {

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::UNIQUE: return "UNIQUE";
    case CaseTag::R1911: return "R1911";
    case CaseTag::R1910: return "R1910";
    case CaseTag::R1931: return "R1931";
    case CaseTag::R1930: return "R1930";
    case CaseTag::R202: return "R202";
  }
  return "?";
}

CaseTag resolve_case(const GenusInvariants& inv) {
  ValidationReport rep = validate_full(inv);
  if (!rep.valid) {
    std::string what = "invalid genus invariants:";
    for (const auto& v : rep.violated) what += " " + v.id;
    fail(errc::invalid_invariants, what);
  }
  if (inv.r <= 18) return CaseTag::UNIQUE;
  if (inv.r == 19 && inv.a == 1) return inv.delta_P == 1 ? CaseTag::R1911 : CaseTag::R1910;
  if (inv.r == 19 && inv.a == 3) return inv.delta_phiP == 1 ? CaseTag::R1931 : CaseTag::R1930;
  if (inv.r == 20 && inv.a == 2) return CaseTag::R202;
  fail(errc::internal, "unreachable r >= 19 configuration");
}

EvenLattice reference_lattice(CaseTag tag, const Int& n) {
  switch (tag) {
    case CaseTag::R1911:
    case CaseTag::R1931:
      return lat_direct_sum({lat_rank1(Int(2)), lat_rank1(-n)});
    case CaseTag::R1910: {
      require(mod_floor(n, 8) == 2, errc::wrong_case, "regime needs n = 2 (mod 8)");
      return lat_gram2x2(Int(2), Int(1), exact_div(Int(2) - n, 4));
    }
    case CaseTag::R1930: {
      require(mod_floor(n, 16) == 2, errc::wrong_case, "regime needs n = 2 (mod 16)");
      return lat_gram2x2(Int(8), Int(2), exact_div(Int(2) - n, 4));
    }
    default:
      fail(errc::wrong_case, "no reference lattice for this regime");
  }
}

std::vector<Int> tau_units_mod(const Int& m) {
  require(m >= 1, errc::bad_input, "modulus must be positive");
  std::vector<Int> out;
  if (m == 1) {
    out.push_back(Int(0));
    return out;
  }
  for (Int k(1); k <= m; ++k) {
    if (gcd(k, m) != 1) continue;
    if (mod_floor(k * k + 1, m) != 0) continue;
    Int mk = m - k;
    Int canon = (k < mk) ? k : mk;
    if (std::find(out.begin(), out.end(), canon) == out.end()) out.push_back(canon);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CaseAnalysis analyze_case(const GenusInvariants& inv, long bound) {
  CaseTag tag = resolve_case(inv);
  CaseAnalysis out{tag, {}};
  if (tag == CaseTag::UNIQUE || tag == CaseTag::R202) return out;
  bool bilinear_side = (tag == CaseTag::R1931 || tag == CaseTag::R1930);
  EvenLattice ref = reference_lattice(tag, inv.n);
  for (const auto& cls : classes_in_genus(ref, Equivalence::improper, bound)) {
    EvenLattice lat{gram_of_form(cls.canonical)};
    DiscriminantData dd =
        bilinear_side ? discriminant_bilinear(half_gram(lat)) : discriminant_form(lat);
    ClassAnalysis ca{cls, std::move(dd), {}, {}, false};
    ca.ortho = orthogonal_group(ca.dd.form, bound);
    ca.aut_img = aut_image(lat.gram(), ca.dd, bound);
    ca.is_reference = gl_transform(form_of_gram(ref.gram()), cls.canonical).has_value();
    out.classes.push_back(std::move(ca));
  }
  std::size_t nref = 0;
  for (const auto& c : out.classes)
    if (c.is_reference) ++nref;
  require(nref == 1, errc::internal, "the reference lattice must lie in exactly one class");
  return out;
}

LabelFlags flags_of_label(const FiniteForm& form, const std::vector<FormIsometry>& aut_img,
                          const FormIsometry& g) {
  LabelFlags flags{false, false};
  for (const auto& h : aut_img) {
    FormIsometry x = compose(form, g, h);
    if (is_identity(x)) flags.is_standard = true;
    if (acts_trivially_on_odd_part(form, x)) flags.is_over2 = true;
  }
  return flags;
}

ComponentCount count_components(const GenusInvariants& inv, long bound) {
  CaseTag tag = resolve_case(inv);
  ComponentCount out;
  out.method = tag;
  if (tag == CaseTag::UNIQUE) {
    out.total = 1;
    out.per_class.push_back({false, BinaryForm{Int(0), Int(0), Int(0)}, Int(1)});
    return out;
  }
  if (tag == CaseTag::R202) {
    Int m = exact_div(inv.n, 2);
    std::vector<Int> units = tau_units_mod(m);
    Int count(static_cast<long>(units.size()));
    // Must agree with 2^{max(0, m-1)} over the odd primes of n.
    std::size_t odd = odd_prime_divisors(inv.n).size();
    Int expect(1);
    for (std::size_t i = 1; i < odd; ++i) expect *= 2;
    require(count == expect, errc::internal, "unit count disagrees with the closed formula");
    out.total = count;
    out.per_class.push_back({true, BinaryForm{Int(0), Int(0), Int(0)}, count});
    return out;
  }
  CaseAnalysis ca = analyze_case(inv, bound);
  out.total = 0;
  for (const auto& c : ca.classes) {
    require(c.ortho.size() % c.aut_img.size() == 0, errc::internal, "subgroup order must divide");
    Int cnt(static_cast<long>(c.ortho.size() / c.aut_img.size()));
    out.per_class.push_back({false, c.cls.canonical, cnt});
    out.total += cnt;
  }
  return out;
}

std::vector<ComponentDescriptor> list_components(const GenusInvariants& inv, long bound) {
  CaseTag tag = resolve_case(inv);
  std::vector<ComponentDescriptor> out;
  if (tag == CaseTag::UNIQUE) {
    ComponentDescriptor d;
    d.tag = tag;
    d.label = "unique";
    out.push_back(d);
    return out;
  }
  if (tag == CaseTag::R202) {
    Int m = exact_div(inv.n, 2);
    for (const auto& u : tau_units_mod(m)) {
      ComponentDescriptor d;
      d.tag = tag;
      d.rank1 = true;
      d.label = u.get_str();
      out.push_back(d);
    }
    return out;
  }
  CaseAnalysis ca = analyze_case(inv, bound);
  for (const auto& c : ca.classes) {
    // enumerate right cosets g * aut_img
    std::set<std::string> seen;
    for (const auto& g : c.ortho) {
      if (seen.count(g.map.str())) continue;
      FormIsometry rep = g;
      bool has_id = false, has_over2 = false;
      std::vector<FormIsometry> coset;
      for (const auto& h : c.aut_img) {
        FormIsometry x = compose(c.dd.form, g, h);
        coset.push_back(x);
        if (is_identity(x)) has_id = true;
        if (acts_trivially_on_odd_part(c.dd.form, x)) has_over2 = true;
        if (isometry_less(x, rep)) rep = x;
      }
      for (const auto& x : coset) seen.insert(x.map.str());
      ComponentDescriptor d;
      d.tag = tag;
      d.lattice_class = c.cls.canonical;
      d.label = rep.map.str();
      d.is_standard = c.is_reference && has_id;
      d.is_over2 = c.is_reference && has_over2;
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), [](const ComponentDescriptor& x, const ComponentDescriptor& y) {
    if (!(x.lattice_class == y.lattice_class)) return form_less(x.lattice_class, y.lattice_class);
    if (x.is_standard != y.is_standard) return x.is_standard;
    return x.label < y.label;
  });
  return out;
}

Int over2_component_bound(const GenusInvariants& inv) {
  CaseTag tag = resolve_case(inv);
  Int n8 = mod_floor(inv.n, 8);
  Int n16 = mod_floor(inv.n, 16);
  if (tag == CaseTag::R1911) {
    if (n8 == 2) return Int(1);
    if (n16 == 0) return Int(4);
    return Int(2);
  }
  if (tag == CaseTag::R1931) {
    if (mod_floor(inv.n, 4) == 2 || n8 == 4) return Int(1);
    if (n16 == 8) return Int(2);
    require(n16 == 0, errc::internal, "unreachable residue");
    return Int(4);
  }
  fail(errc::wrong_case, "over-2 bound applies to the R1911 and R1931 regimes only");
}

}  // namespace rk3
