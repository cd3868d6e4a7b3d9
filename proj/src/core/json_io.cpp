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

#include "json_io.hpp"

namespace rk3::jsonio {

namespace {

Int parse_int(const ojson& j, const char* what) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(errc::bad_input, std::string("not an integer: ") + what);
    }
  }
  fail(errc::bad_input, std::string("expected an integer for ") + what);
}

int parse_bit(const ojson& j, const char* what) {
  Int v = parse_int(j, what);
  require(v == 0 || v == 1, errc::bad_input, std::string(what) + " must be 0 or 1");
  return static_cast<int>(v.get_si());
}

ojson int_json(const Int& v) {
  if (v.fits_slong_p()) return ojson(v.get_si());
  return ojson(v.get_str());
}

ojson rat_json(const Rat& v) { return ojson(rat_str(v)); }

ojson gram_json(const IntMat& g) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(int_json(g.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ojson class_json(bool rank1, const BinaryForm& f) {
  if (rank1) return ojson("rank1");
  return ojson::array({int_json(f.a), int_json(f.b), int_json(f.c)});
}

const char* topology_str(SurfaceTopology::Kind k) {
  switch (k) {
    case SurfaceTopology::Kind::empty: return "empty";
    case SurfaceTopology::Kind::two_tori: return "two_tori";
    case SurfaceTopology::Kind::general: return "general";
  }
  return "?";
}

}  // namespace

GenusInvariants parse_invariants(const ojson& j) {
  require(j.is_object(), errc::bad_input, "invariants must be a JSON object");
  for (const char* key : {"r", "a", "delta_phi", "n"})
    require(j.contains(key), errc::bad_input, std::string("missing invariant field ") + key);
  GenusInvariants inv;
  Int r = parse_int(j.at("r"), "r");
  Int a = parse_int(j.at("a"), "a");
  require(r.fits_sint_p() && a.fits_sint_p(), errc::bad_input, "r and a out of range");
  inv.r = static_cast<int>(r.get_si());
  inv.a = static_cast<int>(a.get_si());
  inv.delta_phi = parse_bit(j.at("delta_phi"), "delta_phi");
  inv.n = parse_int(j.at("n"), "n");
  inv.delta_P = j.contains("delta_P") ? parse_bit(j.at("delta_P"), "delta_P") : 0;
  inv.delta_phiP = j.contains("delta_phiP") ? parse_bit(j.at("delta_phiP"), "delta_phiP") : 0;
  if (j.contains("k"))
    inv.k = parse_int(j.at("k"), "k");
  else
    inv.k = (inv.n == 2) ? Int(3) : Int(1);
  return inv;
}

IntMat parse_gram(const ojson& j) {
  require(j.is_array() && !j.empty(), errc::bad_input, "Gram matrix must be an array of rows");
  std::size_t n = j.size();
  IntMat g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    require(j[i].is_array() && j[i].size() == n, errc::bad_input, "Gram matrix must be square");
    for (std::size_t k = 0; k < n; ++k) g.at(i, k) = parse_int(j[i][k], "Gram entry");
  }
  return g;
}

FiniteForm parse_form(const ojson& j) {
  require(j.is_object() && j.contains("orders"), errc::bad_input,
          "form spec needs an 'orders' array");
  std::vector<Int> orders;
  for (const auto& o : j.at("orders")) orders.push_back(parse_int(o, "order"));
  std::size_t k = orders.size();
  RatMat b(k, k);
  bool has_b = j.contains("b");
  if (has_b) {
    const auto& jb = j.at("b");
    require(jb.is_array() && jb.size() == k, errc::bad_input, "b must be a k x k array");
    for (std::size_t i = 0; i < k; ++i) {
      require(jb[i].is_array() && jb[i].size() == k, errc::bad_input, "b must be a k x k array");
      for (std::size_t c = 0; c < k; ++c) b.at(i, c) = rat_parse(jb[i][c].get<std::string>());
    }
  }
  if (j.contains("q")) {
    const auto& jq = j.at("q");
    require(jq.is_array() && jq.size() == k, errc::bad_input, "q must have one value per order");
    std::vector<Rat> q(k);
    for (std::size_t i = 0; i < k; ++i) q[i] = rat_parse(jq[i].get<std::string>());
    if (!has_b)
      for (std::size_t i = 0; i < k; ++i) b.at(i, i) = mod1(q[i]);
    return FiniteForm::quadratic(FiniteAbelianGroup(orders), q, b);
  }
  require(has_b, errc::bad_input, "form spec needs 'q' or 'b'");
  return FiniteForm::bilinear(FiniteAbelianGroup(orders), b);
}

std::optional<DeformFlags> parse_flags(const ojson& j) {
  if (j.is_null()) return std::nullopt;
  require(j.is_object(), errc::bad_input, "flags must be an object");
  DeformFlags f;
  if (j.contains("standard")) f.standard = j.at("standard").get<bool>();
  if (j.contains("over2")) f.over2 = j.at("over2").get<bool>();
  return f;
}

ojson invariants_json(const GenusInvariants& inv) {
  ojson j;
  j["r"] = inv.r;
  j["a"] = inv.a;
  j["delta_phi"] = inv.delta_phi;
  j["k"] = int_json(inv.k);
  j["n"] = int_json(inv.n);
  j["delta_P"] = inv.delta_P;
  j["delta_phiP"] = inv.delta_phiP;
  return j;
}

ojson validation_json(const GenusInvariants& inv, const ValidationReport& rep) {
  ojson j;
  j["invariants"] = invariants_json(inv);
  j["valid"] = rep.valid;
  ojson viol = ojson::array();
  for (const auto& v : rep.violated) {
    ojson e;
    e["id"] = v.id;
    e["clause"] = v.clause;
    viol.push_back(e);
  }
  j["violated"] = viol;
  if (rep.valid) {
    SurfaceTopology t = topology(inv.r, inv.a, inv.delta_phi);
    ojson tj;
    tj["kind"] = topology_str(t.kind);
    if (t.kind == SurfaceTopology::Kind::general) {
      tj["genus"] = t.genus;
      tj["spheres"] = t.spheres;
    }
    j["topology"] = tj;
    auto [m0, mP] = mod2_classes(inv);
    j["XR_zero_mod2"] = m0;
    j["XR_P_mod2"] = mP;
  }
  return j;
}

ojson rad_table_json() {
  ojson rows = ojson::array();
  for (const auto& t : enumerate_rad()) {
    ojson e;
    e["r"] = t.r;
    e["a"] = t.a;
    e["delta_phi"] = t.delta_phi;
    rows.push_back(e);
  }
  return rows;
}

ojson enumerate_genus_json(const Int& n) {
  ojson out;
  out["n"] = int_json(n);
  ojson groups = ojson::array();
  RadTriple last{-1, -1, -1};
  ojson* cur = nullptr;
  for (const auto& inv : enumerate_full(n)) {
    RadTriple t{inv.r, inv.a, inv.delta_phi};
    if (!(t == last)) {
      ojson g;
      g["r"] = t.r;
      g["a"] = t.a;
      g["delta_phi"] = t.delta_phi;
      g["entries"] = ojson::array();
      groups.push_back(g);
      cur = &groups.back();
      last = t;
    }
    ojson e;
    e["delta_P"] = inv.delta_P;
    e["delta_phiP"] = inv.delta_phiP;
    e["k"] = int_json(inv.k);
    (*cur)["entries"].push_back(e);
  }
  out["groups"] = groups;
  return out;
}

ojson component_count_json(const ComponentCount& c) {
  ojson j;
  j["total"] = int_json(c.total);
  j["method"] = case_tag_name(c.method);
  ojson classes = ojson::array();
  for (const auto& pc : c.per_class) {
    ojson e;
    e["lattice_class"] = (c.method == CaseTag::UNIQUE) ? ojson("unique") : class_json(pc.rank1, pc.lattice_class);
    e["count"] = int_json(pc.count);
    classes.push_back(e);
  }
  j["classes"] = classes;
  return j;
}

ojson component_list_json(const std::vector<ComponentDescriptor>& list) {
  ojson j;
  j["total"] = static_cast<std::int64_t>(list.size());
  ojson cases = ojson::array();
  for (const auto& d : list) {
    ojson e;
    e["case"] = case_tag_name(d.tag);
    e["lattice_class"] = (d.tag == CaseTag::UNIQUE) ? ojson(nullptr) : class_json(d.rank1, d.lattice_class);
    e["label"] = d.label;
    e["standard"] = d.is_standard;
    e["over2"] = d.is_over2;
    cases.push_back(e);
  }
  j["cases"] = cases;
  return j;
}

ojson deform_verdict_json(const DeformVerdict& v) {
  ojson j;
  j["deformable"] = v.deformable;
  j["clause"] = v.clause;
  j["witness_case"] = v.witness_case ? ojson(*v.witness_case) : ojson(nullptr);
  return j;
}

ojson case_table_json(const std::vector<HypCase>& cases) {
  ojson rows = ojson::array();
  for (const auto& c : cases) {
    ojson e;
    e["case"] = c.name;
    e["constraint"] = c.constraint;
    e["recipe"] = c.recipe;
    e["annotations"] = c.annotations;
    e["folds_into"] = c.folds_into ? ojson(hyp_tag_name(*c.folds_into)) : ojson(nullptr);
    ojson t;
    t["r"] = c.targets.r;
    t["a"] = c.targets.a;
    t["delta_phi"] = c.targets.delta_phi;
    t["delta_P"] = c.targets.delta_P;
    t["delta_phiP"] = c.targets.delta_phiP;
    e["targets"] = t;
    rows.push_back(e);
  }
  return rows;
}

ojson disc_form_json(const DiscriminantData& dd) {
  ojson j;
  ojson orders = ojson::array();
  for (const auto& d : dd.form.group().orders()) orders.push_back(int_json(d));
  j["orders"] = orders;
  if (dd.form.is_quadratic()) {
    ojson q = ojson::array();
    for (const auto& v : dd.form.gen_q()) q.push_back(rat_json(v));
    j["q"] = q;
  }
  ojson b = ojson::array();
  for (std::size_t i = 0; i < dd.form.group().num_gens(); ++i) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < dd.form.group().num_gens(); ++c)
      row.push_back(rat_json(dd.form.gen_b().at(i, c)));
    b.push_back(row);
  }
  j["b"] = b;
  ojson lifts = ojson::array();
  for (std::size_t c = 0; c < dd.lifts.cols(); ++c) {
    ojson col = ojson::array();
    for (std::size_t i = 0; i < dd.lifts.rows(); ++i) col.push_back(rat_json(dd.lifts.at(i, c)));
    lifts.push_back(col);
  }
  j["lifts"] = lifts;
  return j;
}

ojson form_aut_json(const FiniteForm& f, const std::vector<FormIsometry>& group) {
  ojson j;
  j["kind"] = f.is_quadratic() ? "quadratic" : "bilinear";
  ojson orders = ojson::array();
  for (const auto& d : f.group().orders()) orders.push_back(int_json(d));
  j["orders"] = orders;
  j["size"] = static_cast<std::int64_t>(group.size());
  ojson elems = ojson::array();
  for (const auto& g : group) elems.push_back(gram_json(g.map));
  j["elements"] = elems;
  return j;
}

}  // namespace rk3::jsonio
