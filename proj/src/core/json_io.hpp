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

#include <json.hpp>

#include "deformation.hpp"

namespace rk3::jsonio {

using ojson = nlohmann::ordered_json;

// parsing
GenusInvariants parse_invariants(const ojson& j);
IntMat parse_gram(const ojson& j);
FiniteForm parse_form(const ojson& j);
std::optional<DeformFlags> parse_flags(const ojson& j);

// rendering
ojson validation_json(const GenusInvariants& inv, const ValidationReport& rep);
ojson rad_table_json();
ojson enumerate_genus_json(const Int& n);
ojson component_count_json(const ComponentCount& c);
ojson component_list_json(const std::vector<ComponentDescriptor>& list);
ojson deform_verdict_json(const DeformVerdict& v);
ojson case_table_json(const std::vector<HypCase>& cases);
ojson disc_form_json(const DiscriminantData& dd);
ojson form_aut_json(const FiniteForm& f, const std::vector<FormIsometry>& group);
ojson invariants_json(const GenusInvariants& inv);

}  // namespace rk3::jsonio
