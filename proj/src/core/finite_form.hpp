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

#include <cstdint>
#include <optional>
#include <vector>

#include "intmat.hpp"

namespace rk3 {

inline constexpr long kDefaultGroupBound = 20000;

// Finite abelian group in invariant-factor presentation d1 | d2 | ... | dk,
// every di >= 2. Elements are coordinate vectors reduced mod di.
class FiniteAbelianGroup {
public:
  using Elem = std::vector<Int>;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<Int> orders);

  std::size_t num_gens() const { return orders_.size(); }
  const std::vector<Int>& orders() const { return orders_; }
  Int order() const;

  Elem zero() const { return Elem(orders_.size(), Int(0)); }
  Elem gen(std::size_t i) const;
  Elem reduce(Elem x) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem smul(const Int& m, const Elem& x) const;
  Int elem_order(const Elem& x) const;
  bool is_zero_elem(const Elem& x) const;

  // All elements in deterministic order (first coordinate most significant).
  std::vector<Elem> elements(long bound) const;

  bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }

private:
  std::vector<Int> orders_;
};

enum class FormKind { quadratic, bilinear };

// A finite quadratic form (values in Q/2Z, with its bilinear form in Q/Z) or
// a plain finite symmetric bilinear form (values in Q/Z) on a finite abelian
// group. Stored on invariant-factor generators; immutable.
class FiniteForm {
public:
  static FiniteForm quadratic(FiniteAbelianGroup g, std::vector<Rat> q, RatMat b);
  static FiniteForm bilinear(FiniteAbelianGroup g, RatMat b);
  static FiniteForm trivial(FormKind kind);

  FormKind kind() const { return kind_; }
  bool is_quadratic() const { return kind_ == FormKind::quadratic; }
  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<Rat>& gen_q() const { return q_; }
  const RatMat& gen_b() const { return b_; }

  Rat q_value(const FiniteAbelianGroup::Elem& x) const;  // mod 2Z
  Rat b_value(const FiniteAbelianGroup::Elem& x, const FiniteAbelianGroup::Elem& y) const;  // mod Z

  bool same_kind(const FiniteForm& o) const { return kind_ == o.kind_; }

private:
  FiniteForm() = default;
  FormKind kind_ = FormKind::quadratic;
  FiniteAbelianGroup group_;
  std::vector<Rat> q_;  // empty for bilinear forms
  RatMat b_;
};

// Isomorphism/self-isometry of finite forms: column j holds the target
// coordinates of the image of source generator j, entries reduced mod the
// target orders.
struct FormIsometry {
  IntMat map;

  bool operator==(const FormIsometry& o) const { return map == o.map; }
};

bool isometry_less(const FormIsometry& a, const FormIsometry& b);
bool is_identity(const FormIsometry& f);

FiniteAbelianGroup::Elem apply_isometry(const FiniteForm& target, const FormIsometry& f,
                                        const FiniteAbelianGroup::Elem& x);
FormIsometry compose(const FiniteForm& f, const FormIsometry& a, const FormIsometry& b);
FormIsometry inverse(const FiniteForm& f, const FormIsometry& a);
FormIsometry identity_isometry(const FiniteForm& f);

// Checks that `m` (target coords of source generator images) defines an
// isomorphism of groups carrying form1 to form2 exactly.
bool is_isometry(const FiniteForm& from, const FiniteForm& to, const IntMat& m);

// Build a form from values on a presentation whose orders need not be a
// divisibility chain; re-normalizes to invariant factors. `new_gens_in_old`
// receives the old coordinates of the new generators (one column each).
FiniteForm renormalize_form(FormKind kind, const std::vector<Int>& orders, const std::vector<Rat>& q,
                            const RatMat& b, IntMat* new_gens_in_old = nullptr);

FiniteForm direct_sum(const FiniteForm& f1, const FiniteForm& f2);
FiniteForm p_component(const FiniteForm& f, const Int& p);
FiniteForm negate(const FiniteForm& f);

// All distinct primes dividing the group order, ascending.
std::vector<Int> group_primes(const FiniteForm& f);

// Full list of self-isometries: a group under compose, identity first, then
// lexicographic; deterministic. Errors group_too_large over the bound.
std::vector<FormIsometry> orthogonal_group(const FiniteForm& f, long bound = kDefaultGroupBound);

// First isomorphism from f1 to f2 in deterministic order, if any.
std::optional<FormIsometry> find_isometry(const FiniteForm& f1, const FiniteForm& f2,
                                          long bound = kDefaultGroupBound);

// Every isomorphism from f1 to f2.
std::vector<FormIsometry> all_isometries(const FiniteForm& f1, const FiniteForm& f2,
                                         long bound = kDefaultGroupBound);

// Closure of the given self-isometries of f under composition.
std::vector<FormIsometry> group_closure(const FiniteForm& f, const std::vector<FormIsometry>& gens);

// Does the self-isometry fix every element of odd order?  (Equivalently, it
// lies in the factor O(q_2) of O(q) = prod_p O(q_p).)
bool acts_trivially_on_odd_part(const FiniteForm& f, const FormIsometry& iso);

}  // namespace rk3
