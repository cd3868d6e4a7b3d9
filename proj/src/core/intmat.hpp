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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace rk3 {

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMat {
public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat diagonal(const std::vector<Int>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator-() const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  bool is_symmetric() const;
  bool is_square() const { return rows_ == cols_; }

  // Exact determinant (Bareiss fraction-free elimination).
  Int det() const;

  // Inverse of a matrix with determinant +-1.
  IntMat inverse_unimodular() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row i += c * row j
  void addmul_row(std::size_t i, std::size_t j, const Int& c);
  // col i += c * col j
  void addmul_col(std::size_t i, std::size_t j, const Int& c);

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

// Dense rational matrix; used for dual bases, lifts and coordinate solves.
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
  explicit RatMat(const IntMat& m);

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  RatMat transpose() const;
  RatMat operator*(const RatMat& o) const;
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  // Gauss-Jordan inverse; error degenerate_matrix if singular.
  RatMat inverse() const;

  bool is_integral() const;
  IntMat to_int() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

struct SnfResult {
  IntMat u, d, v;  // u * m * v = d, u and v unimodular, d diagonal with d1 | d2 | ...
  std::size_t rank;
};

// Smith normal form. Deterministic: pivot of smallest absolute value,
// ties broken by lowest row then column index.
SnfResult smith_normal_form(const IntMat& m);

// Row-style Hermite normal form of the row lattice of m: returns the
// rank x cols basis with positive pivots and reduced entries above them.
IntMat hermite_row_basis(const IntMat& m);

// Basis of the integer kernel {x : m x = 0}, returned as columns.
IntMat kernel_basis(const IntMat& m);

// Primitive closure of the row span of m inside Z^cols (basis rows).
IntMat row_saturation(const IntMat& m);

// One integral solution of m x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b);

// Signs of a nondegenerate symmetric matrix over Q, computed by exact
// congruent diagonalization (zero pivots split via hyperbolic pairs).
std::pair<int, int> signature_of_symmetric(const IntMat& g);

// Is v (rational coordinates in the ambient basis) a Z-combination of the
// generator rows?
bool lattice_membership(const std::vector<Rat>& v, const RatMat& generators);

std::vector<Rat> mat_apply(const RatMat& m, const std::vector<Rat>& x);
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace rk3
