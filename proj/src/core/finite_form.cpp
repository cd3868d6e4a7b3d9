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

#include "finite_form.hpp"

#include <algorithm>
#include <map>

namespace rk3 {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> orders) : orders_(std::move(orders)) {
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    require(orders_[i] >= 2, errc::bad_input, "invariant factor must be >= 2");
    if (i + 1 < orders_.size())
      require(divides(orders_[i], orders_[i + 1]), errc::bad_input,
              "invariant factors must form a divisibility chain");
  }
}

Int FiniteAbelianGroup::order() const {
  Int n(1);
  for (const auto& d : orders_) n *= d;
  return n;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::gen(std::size_t i) const {
  Elem e = zero();
  e[i] = 1;
  return e;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::reduce(Elem x) const {
  require(x.size() == orders_.size(), errc::dimension_mismatch, "element size");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], orders_[i]);
  return x;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::add(const Elem& x, const Elem& y) const {
  Elem z(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) z[i] = mod_floor(x[i] + y[i], orders_[i]);
  return z;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::neg(const Elem& x) const {
  Elem z(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) z[i] = mod_floor(-x[i], orders_[i]);
  return z;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::smul(const Int& m, const Elem& x) const {
  Elem z(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) z[i] = mod_floor(m * x[i], orders_[i]);
  return z;
}

Int FiniteAbelianGroup::elem_order(const Elem& x) const {
  Int o(1);
  for (std::size_t i = 0; i < orders_.size(); ++i) o = lcm(o, exact_div(orders_[i], gcd(x[i], orders_[i])));
  return o;
}

bool FiniteAbelianGroup::is_zero_elem(const Elem& x) const {
  for (const auto& v : x)
    if (!is_zero(v)) return false;
  return true;
}

std::vector<FiniteAbelianGroup::Elem> FiniteAbelianGroup::elements(long bound) const {
  require(order() <= bound, errc::group_too_large,
          "group of order " + order().get_str() + " exceeds bound " + std::to_string(bound));
  std::vector<Elem> out;
  out.reserve(order().get_ui());
  Elem cur = zero();
  for (;;) {
    out.push_back(cur);
    std::size_t i = orders_.size();
    while (i > 0) {
      --i;
      cur[i] += 1;
      if (cur[i] < orders_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (orders_.empty()) return out;
  }
}

FiniteForm FiniteForm::quadratic(FiniteAbelianGroup g, std::vector<Rat> q, RatMat b) {
  std::size_t k = g.num_gens();
  require(q.size() == k, errc::bad_input, "q value count");
  require(b.rows() == k && b.cols() == k, errc::bad_input, "b matrix shape");
  FiniteForm f;
  f.kind_ = FormKind::quadratic;
  for (auto& v : q) v = mod2(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b.at(i, j) = mod1(b.at(i, j));
  for (std::size_t i = 0; i < k; ++i) {
    require(mod1(b.at(i, i) - q[i]) == 0, errc::bad_input, "b diagonal must equal q mod Z");
    require(mod2(q[i] * g.orders()[i] * g.orders()[i]) == 0, errc::bad_input,
            "q value incompatible with generator order");
    for (std::size_t j = 0; j < k; ++j) {
      require(b.at(i, j) == b.at(j, i), errc::bad_input, "b must be symmetric");
      require(is_integer(b.at(i, j) * Rat(g.orders()[i])), errc::bad_input,
              "b value incompatible with generator order");
    }
  }
  f.group_ = std::move(g);
  f.q_ = std::move(q);
  f.b_ = std::move(b);
  return f;
}

FiniteForm FiniteForm::bilinear(FiniteAbelianGroup g, RatMat b) {
  std::size_t k = g.num_gens();
  require(b.rows() == k && b.cols() == k, errc::bad_input, "b matrix shape");
  FiniteForm f;
  f.kind_ = FormKind::bilinear;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b.at(i, j) = mod1(b.at(i, j));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      require(b.at(i, j) == b.at(j, i), errc::bad_input, "b must be symmetric");
      require(is_integer(b.at(i, j) * Rat(g.orders()[i])), errc::bad_input,
              "b value incompatible with generator order");
    }
  f.group_ = std::move(g);
  f.b_ = std::move(b);
  return f;
}

FiniteForm FiniteForm::trivial(FormKind kind) {
  if (kind == FormKind::quadratic)
    return quadratic(FiniteAbelianGroup(std::vector<Int>{}), {}, RatMat(0, 0));
  return bilinear(FiniteAbelianGroup(std::vector<Int>{}), RatMat(0, 0));
}

Rat FiniteForm::q_value(const FiniteAbelianGroup::Elem& x) const {
  require(is_quadratic(), errc::kind_mismatch, "q_value on a bilinear form");
  Rat s(0);
  std::size_t k = group_.num_gens();
  for (std::size_t i = 0; i < k; ++i) {
    if (is_zero(x[i])) continue;
    s += Rat(x[i] * x[i]) * q_[i];
    for (std::size_t j = i + 1; j < k; ++j) s += Rat(2 * x[i] * x[j]) * b_.at(i, j);
  }
  return mod2(s);
}

Rat FiniteForm::b_value(const FiniteAbelianGroup::Elem& x, const FiniteAbelianGroup::Elem& y) const {
  Rat s(0);
  std::size_t k = group_.num_gens();
  for (std::size_t i = 0; i < k; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < k; ++j) s += Rat(x[i] * y[j]) * b_.at(i, j);
  }
  return mod1(s);
}

bool isometry_less(const FormIsometry& a, const FormIsometry& b) {
  if (a.map.rows() != b.map.rows()) return a.map.rows() < b.map.rows();
  if (a.map.cols() != b.map.cols()) return a.map.cols() < b.map.cols();
  for (std::size_t i = 0; i < a.map.rows(); ++i)
    for (std::size_t j = 0; j < a.map.cols(); ++j) {
      int c = cmp(a.map.at(i, j), b.map.at(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

bool is_identity(const FormIsometry& f) {
  if (f.map.rows() != f.map.cols()) return false;
  for (std::size_t i = 0; i < f.map.rows(); ++i)
    for (std::size_t j = 0; j < f.map.cols(); ++j)
      if (f.map.at(i, j) != Int(i == j ? 1 : 0)) return false;
  return true;
}

FiniteAbelianGroup::Elem apply_isometry(const FiniteForm& target, const FormIsometry& f,
                                        const FiniteAbelianGroup::Elem& x) {
  const auto& g = target.group();
  FiniteAbelianGroup::Elem y = g.zero();
  for (std::size_t i = 0; i < f.map.rows(); ++i) {
    Int s(0);
    for (std::size_t j = 0; j < f.map.cols(); ++j) s += f.map.at(i, j) * x[j];
    y[i] = mod_floor(s, g.orders()[i]);
  }
  return y;
}

static IntMat reduce_map(const FiniteAbelianGroup& target, IntMat m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = mod_floor(m.at(i, j), target.orders()[i]);
  return m;
}

FormIsometry compose(const FiniteForm& f, const FormIsometry& a, const FormIsometry& b) {
  return FormIsometry{reduce_map(f.group(), a.map * b.map)};
}

FormIsometry identity_isometry(const FiniteForm& f) {
  return FormIsometry{IntMat::identity(f.group().num_gens())};
}

FormIsometry inverse(const FiniteForm& f, const FormIsometry& a) {
  std::size_t k = f.group().num_gens();
  // Solve a.map * X = I modulo the generator orders, column by column.
  IntMat sys(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sys.at(i, j) = a.map.at(i, j);
    sys.at(i, k + i) = f.group().orders()[i];
  }
  IntMat inv(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Int> e(k, Int(0));
    e[c] = 1;
    auto sol = solve_integer(sys, e);
    require(sol.has_value(), errc::internal, "isometry not invertible");
    for (std::size_t i = 0; i < k; ++i) inv.at(i, c) = (*sol)[i];
  }
  return FormIsometry{reduce_map(f.group(), inv)};
}

bool is_isometry(const FiniteForm& from, const FiniteForm& to, const IntMat& m) {
  const auto& gs = from.group();
  const auto& gt = to.group();
  if (m.rows() != gt.num_gens() || m.cols() != gs.num_gens()) return false;
  if (gs.order() != gt.order()) return false;
  std::size_t k = gs.num_gens();
  std::vector<FiniteAbelianGroup::Elem> img(k);
  for (std::size_t j = 0; j < k; ++j) {
    FiniteAbelianGroup::Elem col(gt.num_gens());
    for (std::size_t i = 0; i < gt.num_gens(); ++i) col[i] = m.at(i, j);
    img[j] = gt.reduce(col);
    if (!gt.is_zero_elem(gt.smul(gs.orders()[j], img[j]))) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (from.is_quadratic() && to.q_value(img[i]) != from.gen_q()[i]) return false;
    for (std::size_t j = i; j < k; ++j)
      if (to.b_value(img[i], img[j]) != from.gen_b().at(i, j)) return false;
  }
  // Surjectivity: images together with the relations must span Z^k.
  std::size_t kt = gt.num_gens();
  IntMat span(kt, k + kt);
  for (std::size_t i = 0; i < kt; ++i) {
    for (std::size_t j = 0; j < k; ++j) span.at(i, j) = m.at(i, j);
    span.at(i, k + i) = gt.orders()[i];
  }
  SnfResult s = smith_normal_form(span);
  if (s.rank != kt) return false;
  for (std::size_t i = 0; i < kt; ++i)
    if (s.d.at(i, i) != 1) return false;
  return true;
}

FiniteForm renormalize_form(FormKind kind, const std::vector<Int>& orders, const std::vector<Rat>& q,
                            const RatMat& b, IntMat* new_gens_in_old) {
  std::size_t k = orders.size();
  for (const auto& d : orders) require(d >= 1, errc::bad_input, "orders must be positive");
  SnfResult s = smith_normal_form(IntMat::diagonal(orders));
  IntMat uinv = s.u.inverse_unimodular();
  // New generator j is uinv * e_j in old coordinates; keep indices with
  // diagonal >= 2, ordered ascending.
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < k; ++j)
    if (s.d.at(j, j) >= 2) keep.push_back(j);
  std::vector<Int> new_orders;
  for (auto j : keep) new_orders.push_back(s.d.at(j, j));
  std::vector<std::vector<Int>> gens_old;
  for (auto j : keep) {
    std::vector<Int> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = uinv.at(i, j);
    gens_old.push_back(col);
  }
  auto eval_b = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
    Rat sum(0);
    for (std::size_t i = 0; i < k; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < k; ++j) sum += Rat(x[i] * y[j]) * b.at(i, j);
    }
    return mod1(sum);
  };
  auto eval_q = [&](const std::vector<Int>& x) {
    Rat sum(0);
    for (std::size_t i = 0; i < k; ++i) {
      if (is_zero(x[i])) continue;
      sum += Rat(x[i] * x[i]) * q[i];
      for (std::size_t j = i + 1; j < k; ++j) sum += Rat(2 * x[i] * x[j]) * b.at(i, j);
    }
    return mod2(sum);
  };
  std::size_t nk = keep.size();
  RatMat nb(nk, nk);
  for (std::size_t i = 0; i < nk; ++i)
    for (std::size_t j = 0; j < nk; ++j) nb.at(i, j) = eval_b(gens_old[i], gens_old[j]);
  if (new_gens_in_old) {
    IntMat g(k, nk);
    for (std::size_t j = 0; j < nk; ++j)
      for (std::size_t i = 0; i < k; ++i) g.at(i, j) = gens_old[j][i];
    *new_gens_in_old = g;
  }
  if (kind == FormKind::bilinear) return FiniteForm::bilinear(FiniteAbelianGroup(new_orders), nb);
  std::vector<Rat> nq(nk);
  for (std::size_t i = 0; i < nk; ++i) nq[i] = eval_q(gens_old[i]);
  return FiniteForm::quadratic(FiniteAbelianGroup(new_orders), nq, nb);
}

FiniteForm direct_sum(const FiniteForm& f1, const FiniteForm& f2) {
  require(f1.same_kind(f2), errc::kind_mismatch, "direct_sum of different form kinds");
  std::size_t k1 = f1.group().num_gens(), k2 = f2.group().num_gens();
  std::vector<Int> orders;
  for (const auto& d : f1.group().orders()) orders.push_back(d);
  for (const auto& d : f2.group().orders()) orders.push_back(d);
  RatMat b(k1 + k2, k1 + k2);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) b.at(i, j) = f1.gen_b().at(i, j);
  for (std::size_t i = 0; i < k2; ++i)
    for (std::size_t j = 0; j < k2; ++j) b.at(k1 + i, k1 + j) = f2.gen_b().at(i, j);
  std::vector<Rat> q;
  if (f1.is_quadratic()) {
    q = f1.gen_q();
    q.insert(q.end(), f2.gen_q().begin(), f2.gen_q().end());
  }
  return renormalize_form(f1.kind(), orders, q, b);
}

FiniteForm p_component(const FiniteForm& f, const Int& p) {
  require(p >= 2, errc::bad_input, "p must be a prime");
  std::size_t k = f.group().num_gens();
  // generator i contributes m_i * g_i where m_i is the prime-to-p part of d_i
  std::vector<Int> orders;
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Int d = f.group().orders()[i];
    Int pa(1);
    while (divides(p, d)) {
      d = exact_div(d, p);
      pa *= p;
    }
    if (pa == 1) continue;
    orders.push_back(pa);
    std::vector<Int> g(k, Int(0));
    g[i] = d;  // the cofactor m_i
    gens.push_back(g);
  }
  std::size_t nk = orders.size();
  RatMat b(nk, nk);
  std::vector<Rat> q(nk, Rat(0));
  for (std::size_t i = 0; i < nk; ++i) {
    FiniteAbelianGroup::Elem xi = f.group().reduce(gens[i]);
    if (f.is_quadratic()) q[i] = f.q_value(xi);
    for (std::size_t j = 0; j < nk; ++j) b.at(i, j) = f.b_value(xi, f.group().reduce(gens[j]));
  }
  if (f.is_quadratic()) return FiniteForm::quadratic(FiniteAbelianGroup(orders), q, b);
  return FiniteForm::bilinear(FiniteAbelianGroup(orders), b);
}

FiniteForm negate(const FiniteForm& f) {
  std::size_t k = f.group().num_gens();
  RatMat b(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b.at(i, j) = mod1(-f.gen_b().at(i, j));
  if (!f.is_quadratic()) return FiniteForm::bilinear(f.group(), b);
  std::vector<Rat> q(k);
  for (std::size_t i = 0; i < k; ++i) q[i] = mod2(-f.gen_q()[i]);
  return FiniteForm::quadratic(f.group(), q, b);
}

std::vector<Int> group_primes(const FiniteForm& f) {
  std::vector<Int> primes;
  Int n = f.group().order();
  Int p(2);
  while (n > 1) {
    if (divides(p, n)) {
      primes.push_back(p);
      while (divides(p, n)) n = exact_div(n, p);
    }
    p = (p == 2) ? Int(3) : p + 2;
    if (p * p > n && n > 1) {
      primes.push_back(n);
      break;
    }
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

namespace {

struct IsoSearch {
  const FiniteForm& from;
  const FiniteForm& to;
  long bound;
  bool collect_all;
  std::vector<FiniteAbelianGroup::Elem> pool;  // elements of the target group
  std::vector<FiniteAbelianGroup::Elem> chosen;
  std::vector<FormIsometry> out;

  bool candidate_ok(std::size_t i, const FiniteAbelianGroup::Elem& e) const {
    const auto& gt = to.group();
    if (!gt.is_zero_elem(gt.smul(from.group().orders()[i], e))) return false;
    if (from.is_quadratic()) {
      if (to.q_value(e) != from.gen_q()[i]) return false;
    } else {
      if (to.b_value(e, e) != from.gen_b().at(i, i)) return false;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (to.b_value(e, chosen[j]) != from.gen_b().at(i, j)) return false;
    return true;
  }

  bool leaf_bijective() const {
    std::size_t k = from.group().num_gens();
    std::size_t kt = to.group().num_gens();
    IntMat span(kt, k + kt);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < kt; ++i) span.at(i, j) = chosen[j][i];
    for (std::size_t i = 0; i < kt; ++i) span.at(i, k + i) = to.group().orders()[i];
    SnfResult s = smith_normal_form(span);
    if (s.rank != kt) return false;
    for (std::size_t i = 0; i < kt; ++i)
      if (s.d.at(i, i) != 1) return false;
    return true;
  }

  // returns true when a single hit suffices and was found
  bool dfs(std::size_t i) {
    std::size_t k = from.group().num_gens();
    if (i == k) {
      if (!leaf_bijective()) return false;
      IntMat m(to.group().num_gens(), k);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t r = 0; r < to.group().num_gens(); ++r) m.at(r, j) = chosen[j][r];
      out.push_back(FormIsometry{m});
      return !collect_all;
    }
    for (const auto& e : pool) {
      if (!candidate_ok(i, e)) continue;
      chosen[i] = e;
      if (dfs(i + 1)) return true;
    }
    return false;
  }

  void run() {
    if (from.group().order() != to.group().order()) return;
    if (from.group().orders() != to.group().orders()) return;  // invariant factors match or no iso
    pool = to.group().elements(bound);
    chosen.assign(from.group().num_gens(), to.group().zero());
    dfs(0);
  }
};

}  // namespace

std::vector<FormIsometry> orthogonal_group(const FiniteForm& f, long bound) {
  IsoSearch search{f, f, bound, /*collect_all=*/true, {}, {}, {}};
  search.run();
  std::vector<FormIsometry> out = std::move(search.out);
  std::sort(out.begin(), out.end(), [](const FormIsometry& a, const FormIsometry& b) {
    bool ia = is_identity(a), ib = is_identity(b);
    if (ia != ib) return ia;
    return isometry_less(a, b);
  });
  return out;
}

std::optional<FormIsometry> find_isometry(const FiniteForm& f1, const FiniteForm& f2, long bound) {
  require(f1.same_kind(f2), errc::kind_mismatch, "find_isometry of different form kinds");
  require(f1.group().order() <= bound && f2.group().order() <= bound, errc::group_too_large,
          "group order exceeds bound");
  IsoSearch search{f1, f2, bound, /*collect_all=*/false, {}, {}, {}};
  search.run();
  if (search.out.empty()) return std::nullopt;
  return search.out.front();
}

std::vector<FormIsometry> all_isometries(const FiniteForm& f1, const FiniteForm& f2, long bound) {
  require(f1.same_kind(f2), errc::kind_mismatch, "all_isometries of different form kinds");
  require(f1.group().order() <= bound && f2.group().order() <= bound, errc::group_too_large,
          "group order exceeds bound");
  IsoSearch search{f1, f2, bound, /*collect_all=*/true, {}, {}, {}};
  search.run();
  std::vector<FormIsometry> out = std::move(search.out);
  std::sort(out.begin(), out.end(), isometry_less);
  return out;
}

std::vector<FormIsometry> group_closure(const FiniteForm& f, const std::vector<FormIsometry>& gens) {
  std::map<std::string, FormIsometry> seen;
  auto key = [](const FormIsometry& m) { return m.map.str(); };
  std::vector<FormIsometry> frontier;
  FormIsometry id = identity_isometry(f);
  seen.emplace(key(id), id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<FormIsometry> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        FormIsometry y = compose(f, g, x);
        auto k = key(y);
        if (!seen.count(k)) {
          seen.emplace(k, y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::vector<FormIsometry> out;
  out.reserve(seen.size());
  for (auto& [k, v] : seen) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const FormIsometry& a, const FormIsometry& b) {
    bool ia = is_identity(a), ib = is_identity(b);
    if (ia != ib) return ia;
    return isometry_less(a, b);
  });
  return out;
}

bool acts_trivially_on_odd_part(const FiniteForm& f, const FormIsometry& iso) {
  const auto& g = f.group();
  for (std::size_t j = 0; j < g.num_gens(); ++j) {
    FiniteAbelianGroup::Elem img = apply_isometry(f, iso, g.gen(j));
    FiniteAbelianGroup::Elem diff = g.add(img, g.neg(g.gen(j)));
    Int o = g.elem_order(diff);
    // identity on every odd Sylow component <=> g(x)-x is 2-primary
    while (divides(Int(2), o)) o = exact_div(o, 2);
    if (o != 1) return false;
  }
  return true;
}

}  // namespace rk3
