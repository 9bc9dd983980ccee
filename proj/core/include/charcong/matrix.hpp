/*
   Copyright 2026 The charcong Authors

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
#include <span>
#include <vector>

#include "charcong/ring.hpp"

namespace charcong {

/// Dense row-major matrix of ring elements. Arithmetic goes through a Ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Element& fill);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix zeros(const Ring& ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool row_is_zero(std::size_t i) const;
  bool col_is_zero(std::size_t j) const;
  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b);
std::vector<Element> multiply(const Ring& ring, const Matrix& a, std::span<const Element> v);

/// Entrywise image in another ring with the same root order (e.g. reduction mod M).
Matrix lift(const Ring& target, const Matrix& a);

}  // namespace charcong
