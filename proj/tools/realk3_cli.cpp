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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "realk3/realk3.h"

namespace {

using json = nlohmann::json;

struct SessionDeleter {
  void operator()(rk3_session* s) const { rk3_session_free(s); }
};

// "@file" arguments are read from disk, everything else is taken inline.
std::string read_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw CLI::ValidationError("cannot read file: " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code_of(rk3_status st) {
  switch (st) {
    case RK3_OK: return 0;
    case RK3_ERR_INVALID_INVARIANTS:
    case RK3_ERR_MISSING_FLAGS: return 2;
    default: return 1;
  }
}

std::string tsv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

void print_tsv_rows(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i)
    std::cout << header[i] << (i + 1 < header.size() ? '\t' : '\n');
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << row[i] << (i + 1 < row.size() ? '\t' : '\n');
}

int render(rk3_session* session, rk3_status st, char* out, const std::string& format,
           const std::string& command) {
  if (st != RK3_OK) {
    std::cerr << "realk3: " << rk3_session_last_error(session) << "\n";
    rk3_string_free(out);
    return exit_code_of(st);
  }
  std::string text(out);
  rk3_string_free(out);
  if (format == "json") {
    std::cout << text;
    return 0;
  }
  json j = json::parse(text);
  if (command == "enumerate-rad") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : j)
      rows.push_back({tsv_cell(e["r"]), tsv_cell(e["a"]), tsv_cell(e["delta_phi"])});
    print_tsv_rows({"r", "a", "delta_phi"}, rows);
    return 0;
  }
  if (command == "enumerate-genus") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& g : j["groups"])
      for (const auto& e : g["entries"])
        rows.push_back({tsv_cell(g["r"]), tsv_cell(g["a"]), tsv_cell(g["delta_phi"]),
                        tsv_cell(e["delta_P"]), tsv_cell(e["delta_phiP"]), tsv_cell(e["k"]),
                        tsv_cell(j["n"])});
    print_tsv_rows({"r", "a", "delta_phi", "delta_P", "delta_phiP", "k", "n"}, rows);
    return 0;
  }
  if (command == "case-table") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : j) {
      const auto& t = e["targets"];
      rows.push_back({tsv_cell(e["case"]), tsv_cell(e["constraint"]), tsv_cell(e["recipe"]),
                      tsv_cell(e["annotations"]), tsv_cell(e["folds_into"]), tsv_cell(t["r"]),
                      tsv_cell(t["a"]), tsv_cell(t["delta_phi"]), tsv_cell(t["delta_P"]),
                      tsv_cell(t["delta_phiP"])});
    }
    print_tsv_rows({"case", "constraint", "recipe", "annotations", "folds_into", "r", "a",
                    "delta_phi", "delta_P", "delta_phiP"},
                   rows);
    return 0;
  }
  if (command == "components-count") {
    print_tsv_rows({"total", "method"}, {{tsv_cell(j["total"]), tsv_cell(j["method"])}});
    return 0;
  }
  if (command == "components-list") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : j["cases"])
      rows.push_back({tsv_cell(e["case"]), tsv_cell(e["lattice_class"]), tsv_cell(e["label"]),
                      tsv_cell(e["standard"]), tsv_cell(e["over2"])});
    print_tsv_rows({"case", "lattice_class", "label", "standard", "over2"}, rows);
    return 0;
  }
  std::cerr << "realk3: --format tsv is not supported for this subcommand\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"realk3: connected components of moduli of real polarized K3 surfaces"};
  app.require_subcommand(1);

  std::string format = "json";
  long group_bound = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--group-bound", group_bound, "orthogonal-group search bound (default 20000)");

  std::string inv_arg, gram_arg, spec_arg, n_arg;
  bool flag_standard = false, flag_over2 = false, flag_other = false;

  auto* validate = app.add_subcommand("validate", "check a genus-invariant tuple");
  validate->add_option("--inv", inv_arg, "invariants JSON (or @file)")->required();

  app.add_subcommand("enumerate-rad", "all realizable (r, a, delta_phi) triples");

  auto* egen = app.add_subcommand("enumerate-genus", "all valid tuples for a degree");
  egen->add_option("--n", n_arg, "even degree")->required();

  auto* comp = app.add_subcommand("components", "connected components of moduli");
  comp->require_subcommand(1);
  auto* ccount = comp->add_subcommand("count", "number of components");
  ccount->add_option("--inv", inv_arg, "invariants JSON (or @file)")->required();
  auto* clist = comp->add_subcommand("list", "one descriptor per component");
  clist->add_option("--inv", inv_arg, "invariants JSON (or @file)")->required();

  auto* deform = app.add_subcommand("deformable", "hyper-elliptic deformability");
  deform->add_option("--inv", inv_arg, "invariants JSON (or @file)")->required();
  deform->add_flag("--standard", flag_standard, "component is standard");
  deform->add_flag("--over2", flag_over2, "component differs from standard only over 2");
  deform->add_flag("--other", flag_other, "component is neither");

  auto* ctable = app.add_subcommand("case-table", "hyper-elliptic construction families");
  ctable->add_option("--n", n_arg, "even degree")->required();

  auto* lattice = app.add_subcommand("lattice", "lattice computations");
  lattice->require_subcommand(1);
  auto* dform = lattice->add_subcommand("disc-form", "discriminant form of an even Gram matrix");
  dform->add_option("--gram", gram_arg, "Gram matrix JSON (or @file)")->required();

  auto* form = app.add_subcommand("form", "finite form computations");
  form->require_subcommand(1);
  auto* faut = form->add_subcommand("aut", "orthogonal group of a finite form");
  faut->add_option("--spec", spec_arg, "form JSON (or @file)")->required();

  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<rk3_session, SessionDeleter> session(rk3_session_new());
  if (!session) {
    std::cerr << "realk3: cannot create session\n";
    return 1;
  }
  if (group_bound > 0) rk3_session_set_group_bound(session.get(), group_bound);

  char* out = nullptr;
  try {
    if (validate->parsed()) {
      rk3_status st = rk3_validate(session.get(), read_arg(inv_arg).c_str(), &out);
      return render(session.get(), st, out, format, "validate");
    }
    if (app.get_subcommand("enumerate-rad")->parsed()) {
      rk3_status st = rk3_enumerate_rad(session.get(), &out);
      return render(session.get(), st, out, format, "enumerate-rad");
    }
    if (egen->parsed()) {
      rk3_status st = rk3_enumerate_genus(session.get(), n_arg.c_str(), &out);
      return render(session.get(), st, out, format, "enumerate-genus");
    }
    if (ccount->parsed()) {
      rk3_status st = rk3_components_count(session.get(), read_arg(inv_arg).c_str(), &out);
      return render(session.get(), st, out, format, "components-count");
    }
    if (clist->parsed()) {
      rk3_status st = rk3_components_list(session.get(), read_arg(inv_arg).c_str(), &out);
      return render(session.get(), st, out, format, "components-list");
    }
    if (deform->parsed()) {
      int nflags = (flag_standard ? 1 : 0) + (flag_over2 ? 1 : 0) + (flag_other ? 1 : 0);
      if (nflags > 1) {
        std::cerr << "realk3: --standard, --over2 and --other are mutually exclusive\n";
        return 1;
      }
      std::string flags_json;
      if (flag_standard) flags_json = "{\"standard\":true,\"over2\":true}";
      if (flag_over2) flags_json = "{\"standard\":false,\"over2\":true}";
      if (flag_other) flags_json = "{\"standard\":false,\"over2\":false}";
      rk3_status st = rk3_deformable(session.get(), read_arg(inv_arg).c_str(),
                                     flags_json.empty() ? nullptr : flags_json.c_str(), &out);
      return render(session.get(), st, out, format, "deformable");
    }
    if (ctable->parsed()) {
      rk3_status st = rk3_case_table(session.get(), n_arg.c_str(), &out);
      return render(session.get(), st, out, format, "case-table");
    }
    if (dform->parsed()) {
      rk3_status st = rk3_lattice_disc_form(session.get(), read_arg(gram_arg).c_str(), &out);
      return render(session.get(), st, out, format, "lattice-disc-form");
    }
    if (faut->parsed()) {
      rk3_status st = rk3_form_aut(session.get(), read_arg(spec_arg).c_str(), &out);
      return render(session.get(), st, out, format, "form-aut");
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  std::cerr << "realk3: no subcommand\n";
  return 1;
}
