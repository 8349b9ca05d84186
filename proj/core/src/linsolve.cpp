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

#include "multcode/linsolve.hpp"

#include <algorithm>

namespace multcode {

Matrix::Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : p_(field.modulus()), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

std::optional<std::vector<FieldElement>> kernel_vector(const Matrix& m) {
    Matrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    const FieldElement zero(0, w.modulus());

    std::vector<std::size_t> pivot_col_of_row;  // in elimination order
    std::vector<bool> is_pivot_col(cols, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && w.at(pr, col).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != row)
            for (std::size_t c = col; c < cols; ++c) std::swap(w.at(row, c), w.at(pr, c));
        FieldElement inv = w.at(row, col).inv();
        for (std::size_t c = col; c < cols; ++c) w.at(row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            FieldElement f = w.at(r, col);
            if (f.is_zero()) continue;
            for (std::size_t c = col; c < cols; ++c) w.at(r, c) -= f * w.at(row, c);
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++row;
    }

    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot_col[c]) {
            free_col = c;
            break;
        }
    }
    if (free_col == cols) return std::nullopt;

    std::vector<FieldElement> v(cols, zero);
    v[free_col] = FieldElement(1, w.modulus());
    // rows are fully reduced, so each pivot variable reads off directly
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        v[pivot_col_of_row[r]] = -w.at(r, free_col);
    return v;
}

}  // namespace multcode
