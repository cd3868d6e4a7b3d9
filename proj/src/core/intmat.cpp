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

#include "intmat.hpp"

#include <algorithm>
#include <sstream>

namespace rk3 {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::degenerate_matrix: return "DegenerateMatrix";
    case errc::kind_mismatch: return "KindMismatch";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::odd_lattice: return "OddLattice";
    case errc::not_integral: return "NotIntegral";
    case errc::odd_result: return "OddResult";
    case errc::not_isotropic: return "NotIsotropic";
    case errc::not_a_graph: return "NotAGraph";
    case errc::not_two_elementary: return "NotTwoElementary";
    case errc::definite_form: return "DefiniteForm";
    case errc::zero_disc: return "ZeroDisc";
    case errc::square_disc: return "SquareDisc";
    case errc::wrong_rank: return "WrongRank";
    case errc::wrong_signature: return "WrongSignature";
    case errc::not_subgroup: return "NotSubgroup";
    case errc::invalid_triple: return "InvalidTriple";
    case errc::odd_degree: return "OddDegree";
    case errc::invalid_invariants: return "InvalidInvariants";
    case errc::wrong_case: return "WrongCase";
    case errc::no_standard: return "NoStandard";
    case errc::glue_rejected: return "GlueRejected";
    case errc::invariant_mismatch: return "InvariantMismatch";
    case errc::missing_flags: return "MissingFlags";
    case errc::bad_input: return "BadInput";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, errc::dimension_mismatch, "ragged initializer");
    for (long v : r) e_.emplace_back(v);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::diagonal(const std::vector<Int>& d) {
  IntMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  require(cols_ == o.rows_, errc::dimension_mismatch, "matrix product shape");
  IntMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r = *this;
  for (auto& v : r.e_) v = -v;
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, errc::dimension_mismatch, "matrix sum shape");
  IntMat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, errc::dimension_mismatch, "matrix difference shape");
  IntMat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

bool IntMat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Int IntMat::det() const {
  require(is_square(), errc::dimension_mismatch, "det of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return Int(1);
  IntMat a = *this;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a.at(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a.at(p, k))) ++p;
      if (p == n) return Int(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMat IntMat::inverse_unimodular() const {
  RatMat inv = RatMat(*this).inverse();
  require(inv.is_integral(), errc::internal, "inverse_unimodular: matrix is not unimodular");
  return inv.to_int();
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMat::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMat::addmul_row(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMat::addmul_col(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()), e_(m.rows() * m.cols(), Rat(0)) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
  require(cols_ == o.rows_, errc::dimension_mismatch, "matrix product shape");
  RatMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RatMat RatMat::inverse() const {
  require(rows_ == cols_, errc::dimension_mismatch, "inverse of non-square matrix");
  std::size_t n = rows_;
  RatMat a = *this;
  RatMat inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a.at(p, c))) ++p;
    require(p < n, errc::degenerate_matrix, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    Rat piv = a.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) /= piv;
      inv.at(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a.at(i, c))) continue;
      Rat f = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

bool RatMat::is_integral() const {
  for (const auto& v : e_)
    if (!is_integer(v)) return false;
  return true;
}

IntMat RatMat::to_int() const {
  require(is_integral(), errc::not_integral, "matrix has non-integer entries");
  IntMat m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).get_num();
  return m;
}

namespace {

// Pivot with the smallest absolute value in the trailing block, ties by
// lowest row then column index.
bool find_pivot(const IntMat& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& v = a.at(i, j);
      if (is_zero(v)) continue;
      Int av = abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
  SnfResult r;
  IntMat a = m;
  std::size_t nr = a.rows(), nc = a.cols();
  r.u = IntMat::identity(nr);
  r.v = IntMat::identity(nc);
  std::size_t k = std::min(nr, nc);
  std::size_t t = 0;
  while (t < k) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(a, t, pi, pj)) break;
    a.swap_rows(t, pi);
    r.u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    r.v.swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (is_zero(a.at(i, t))) continue;
        Int q = floor_div(a.at(i, t), a.at(t, t));
        a.addmul_row(i, t, -q);
        r.u.addmul_row(i, t, -q);
        if (!is_zero(a.at(i, t))) {
          a.swap_rows(t, i);
          r.u.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (is_zero(a.at(t, j))) continue;
        Int q = floor_div(a.at(t, j), a.at(t, t));
        a.addmul_col(j, t, -q);
        r.v.addmul_col(j, t, -q);
        if (!is_zero(a.at(t, j))) {
          a.swap_cols(t, j);
          r.v.swap_cols(t, j);
          clean = false;
        }
      }
    }
    ++t;
  }
  r.rank = t;
  for (std::size_t i = 0; i < t; ++i)
    if (sgn(a.at(i, i)) < 0) {
      a.negate_row(i);
      r.u.negate_row(i);
    }
  // Repair the divisibility chain on the diagonal.
  for (std::size_t i = 0; i + 1 < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      Int ai = a.at(i, i), aj = a.at(j, j);
      if (divides(ai, aj)) continue;
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), ai.get_mpz_t(), aj.get_mpz_t());
      Int l = exact_div(ai * aj, g);
      Int adg = exact_div(ai, g), bdg = exact_div(aj, g);
      // Rows i,j of u get [[p, q], [-bdg, adg]]; columns i,j of v get
      // [[1, -q*bdg], [1, p*adg]]. Then diag becomes (g, l).
      for (std::size_t c = 0; c < nr; ++c) {
        Int ui = r.u.at(i, c), uj = r.u.at(j, c);
        r.u.at(i, c) = p * ui + q * uj;
        r.u.at(j, c) = -bdg * ui + adg * uj;
      }
      for (std::size_t rr = 0; rr < nc; ++rr) {
        Int vi = r.v.at(rr, i), vj = r.v.at(rr, j);
        r.v.at(rr, i) = vi + vj;
        r.v.at(rr, j) = -q * bdg * vi + p * adg * vj;
      }
      a.at(i, i) = g;
      a.at(j, j) = l;
    }
  r.d = a;
  return r;
}

IntMat hermite_row_basis(const IntMat& m) {
  IntMat a = m;
  std::size_t nr = a.rows(), nc = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < nc && r < nr; ++col) {
    // gcd elimination below row r in this column
    bool any = false;
    for (std::size_t i = r; i < nr; ++i)
      if (!is_zero(a.at(i, col))) {
        any = true;
        break;
      }
    if (!any) continue;
    for (;;) {
      std::size_t best = nr;
      for (std::size_t i = r; i < nr; ++i) {
        if (is_zero(a.at(i, col))) continue;
        if (best == nr || abs(a.at(i, col)) < abs(a.at(best, col))) best = i;
      }
      a.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (is_zero(a.at(i, col))) continue;
        Int q = floor_div(a.at(i, col), a.at(r, col));
        a.addmul_row(i, r, -q);
        if (!is_zero(a.at(i, col))) done = false;
      }
      if (done) break;
    }
    if (sgn(a.at(r, col)) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a.at(i, col), a.at(r, col));
      if (!is_zero(q)) a.addmul_row(i, r, -q);
    }
    ++r;
  }
  IntMat h(r, nc);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < nc; ++j) h.at(i, j) = a.at(i, j);
  return h;
}

IntMat kernel_basis(const IntMat& m) {
  SnfResult s = smith_normal_form(m);
  std::size_t n = m.cols();
  std::size_t k = n - s.rank;
  IntMat ker(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) ker.at(i, j) = s.v.at(i, s.rank + j);
  return ker;
}

IntMat row_saturation(const IntMat& m) {
  SnfResult s = smith_normal_form(m);
  IntMat vinv = s.v.inverse_unimodular();
  IntMat out(s.rank, m.cols());
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = vinv.at(i, j);
  return out;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b) {
  require(b.size() == m.rows(), errc::dimension_mismatch, "solve_integer shape");
  SnfResult s = smith_normal_form(m);
  std::vector<Int> c(m.rows(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) c[i] += s.u.at(i, j) * b[j];
  std::vector<Int> y(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (!divides(s.d.at(i, i), c[i])) return std::nullopt;
      if (i < m.cols()) y[i] = exact_div(c[i], s.d.at(i, i));
    } else if (!is_zero(c[i])) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x[i] += s.v.at(i, j) * y[j];
  return x;
}

std::pair<int, int> signature_of_symmetric(const IntMat& g) {
  require(g.is_symmetric(), errc::dimension_mismatch, "signature needs a symmetric matrix");
  std::size_t n = g.rows();
  RatMat a(g);
  int plus = 0, minus = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (is_zero(a.at(t, t))) {
      std::size_t p = t;
      while (p < n && is_zero(a.at(p, p))) ++p;
      if (p < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(p, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, t), a.at(i, p));
      } else {
        // all remaining diagonal entries vanish: split a hyperbolic pair
        std::size_t i2 = n, j2 = n;
        for (std::size_t i = t; i < n && i2 == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (!is_zero(a.at(i, j))) {
              i2 = i;
              j2 = j;
              break;
            }
        require(i2 < n, errc::degenerate_matrix, "degenerate symmetric matrix");
        for (std::size_t k = 0; k < n; ++k) a.at(i2, k) += a.at(j2, k);
        for (std::size_t k = 0; k < n; ++k) a.at(k, i2) += a.at(k, j2);
        if (i2 != t) {
          for (std::size_t j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(i2, j));
          for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, t), a.at(i, i2));
        }
      }
    }
    const Rat piv = a.at(t, t);
    require(!is_zero(piv), errc::degenerate_matrix, "degenerate symmetric matrix");
    if (sgn(piv) > 0)
      ++plus;
    else
      ++minus;
    for (std::size_t i = t + 1; i < n; ++i) {
      if (is_zero(a.at(i, t))) continue;
      Rat f = a.at(i, t) / piv;
      for (std::size_t j = t; j < n; ++j) a.at(i, j) -= f * a.at(t, j);
      for (std::size_t j = t; j < n; ++j) a.at(j, i) = a.at(i, j);
    }
  }
  return {plus, minus};
}

bool lattice_membership(const std::vector<Rat>& v, const RatMat& generators) {
  require(v.size() == generators.cols(), errc::dimension_mismatch, "lattice_membership shape");
  Int den(1);
  for (const auto& x : v) den = lcm(den, x.get_den());
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) den = lcm(den, generators.at(i, j).get_den());
  IntMat g(generators.rows(), generators.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Rat s = generators.at(i, j) * Rat(den);
      g.at(i, j) = s.get_num();
    }
  std::vector<Int> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    Rat s = v[j] * Rat(den);
    w[j] = s.get_num();
  }
  // v in row span(g) over Z  <=>  the transposed system has a solution
  return solve_integer(g.transpose(), w).has_value();
}

std::vector<Rat> mat_apply(const RatMat& m, const std::vector<Rat>& x) {
  require(x.size() == m.cols(), errc::dimension_mismatch, "mat_apply shape");
  std::vector<Rat> y(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
  return y;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  require(a.size() == b.size(), errc::dimension_mismatch, "dot shape");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace rk3
