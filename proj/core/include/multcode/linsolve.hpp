/*
   Copyright 2026 the multcode authors

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

#include "multcode/field.hpp"

namespace multcode {

/// Dense row-major matrix over GF(p).
class Matrix {
  public:
    Matrix(const PrimeField& field, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }

    FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  private:
    std::uint64_t p_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

/// A nonzero v with Mv = 0, or nullopt when the kernel is trivial.
///
/// The result is canonical and deterministic: Gaussian elimination with
/// partial pivoting by lowest row index, then the first free column (in
/// column order) set to 1 and every other free column to 0.
std::optional<std::vector<FieldElement>> kernel_vector(const Matrix& m);

}  // namespace multcode
