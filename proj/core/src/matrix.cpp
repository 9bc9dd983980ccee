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

#include "charcong/matrix.hpp"

#include <algorithm>
#include <utility>

#include "charcong/error.hpp"

namespace charcong {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Element& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix out(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = ring.one();
  return out;
}

Matrix Matrix::zeros(const Ring& ring, std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, ring.zero());
}

bool Matrix::row_is_zero(std::size_t i) const {
  auto r = row(i);
  return std::all_of(r.begin(), r.end(), [](const Element& a) { return a.is_zero(); });
}

bool Matrix::col_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!at(i, j).is_zero()) return false;
  }
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Element& a) { return a.is_zero(); });
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap_ranges(row(i).begin(), row(i).end(), row(j).begin());
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: inner dimensions differ");
  Matrix out = Matrix::zeros(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) = ring.add(out.at(i, j), ring.mul(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

std::vector<Element> multiply(const Ring& ring, const Matrix& a, std::span<const Element> v) {
  if (a.cols() != v.size()) throw DomainError("matrix-vector product: length mismatch");
  std::vector<Element> out(a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] = ring.add(out[i], ring.mul(a.at(i, j), v[j]));
    }
  }
  return out;
}

Matrix lift(const Ring& target, const Matrix& a) {
  Matrix out = Matrix::zeros(target, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = target.lift(a.at(i, j));
  }
  return out;
}

}  // namespace charcong
