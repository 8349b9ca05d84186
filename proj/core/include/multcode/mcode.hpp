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
#include <span>
#include <vector>

#include "multcode/field.hpp"
#include "multcode/halfint.hpp"
#include "multcode/poly.hpp"

namespace multcode {

/// Product evaluation set T_1 x ... x T_m. Every axis may be a different
/// subset of the field, but all must have the same size n and be listed in
/// strictly increasing representative order (the canonical form used by
/// every iteration order and file format in this project).
class Grid {
  public:
    Grid(const PrimeField& field, std::vector<std::vector<FieldElement>> sets);

    int dims() const { return static_cast<int>(sets_.size()); }
    std::size_t axis_size() const { return n_; }
    std::uint64_t modulus() const { return p_; }

    const std::vector<FieldElement>& axis(int i) const { return sets_[static_cast<std::size_t>(i)]; }
    const std::vector<std::vector<FieldElement>>& axes() const { return sets_; }

    std::size_t point_count() const;
    /// Points are indexed row-major: the first coordinate is most
    /// significant, so index order is lexicographic in the axis indices.
    std::vector<FieldElement> point(std::size_t index) const;

    bool operator==(const Grid& rhs) const { return p_ == rhs.p_ && sets_ == rhs.sets_; }
    bool operator!=(const Grid& rhs) const { return !(*this == rhs); }

  private:
    std::uint64_t p_;
    std::size_t n_;
    std::vector<std::vector<FieldElement>> sets_;
};

/// Parameters of an m-variate order-s multiplicity code for degree-d
/// messages on a grid; requires d < s*n.
struct CodeParams {
    CodeParams(Grid grid, int order, std::int64_t degree);

    int dims() const { return grid.dims(); }
    std::int64_t n() const { return static_cast<std::int64_t>(grid.axis_size()); }
    std::uint64_t modulus() const { return grid.modulus(); }
    /// Number of jet coefficients per symbol, C(s+m-1, m).
    std::size_t symbol_width() const;

    bool operator==(const CodeParams& rhs) const {
        return grid == rhs.grid && s == rhs.s && d == rhs.d;
    }
    bool operator!=(const CodeParams& rhs) const { return !(*this == rhs); }

    Grid grid;
    int s;
    std::int64_t d;
};

/// A function from the grid to order-s jets: either a codeword or a noisy
/// word handed to the decoder. Symbols are stored in grid index order.
class ReceivedWord {
  public:
    explicit ReceivedWord(CodeParams params);  // all-zero word
    ReceivedWord(CodeParams params, std::vector<Jet> symbols);

    const CodeParams& params() const { return params_; }
    std::size_t size() const { return symbols_.size(); }

    const Jet& symbol(std::size_t index) const { return symbols_[index]; }
    void set_symbol(std::size_t index, Jet jet);

    bool operator==(const ReceivedWord& rhs) const {
        return params_ == rhs.params_ && symbols_ == rhs.symbols_;
    }
    bool operator!=(const ReceivedWord& rhs) const { return !(*this == rhs); }

  private:
    CodeParams params_;
    std::vector<Jet> symbols_;
};

/// Enc(P): symbol at a is P(a + z) mod <z>^s. Requires deg P <= d.
ReceivedWord encode(const MultiPoly& p, const CodeParams& params);

/// min(s, degree of the lowest nonzero monomial of r); s when r = 0.
std::int64_t dmin_s(const Jet& r, int s);

/// The multiplicity distance: sum over grid points of s - dmin_s(f - g).
std::int64_t delta_mult(const ReceivedWord& f, const ReceivedWord& g);

/// Varying-multiplicity variant on univariate jet words: point a
/// contributes svec[a] - min(dmin(f[a] - g[a]), svec[a]).
std::int64_t delta_mult_varying(std::span<const Jet> f, std::span<const Jet> g,
                                std::span<const int> svec);

/// Number of grid points where the symbols differ.
std::int64_t hamming(const ReceivedWord& f, const ReceivedWord& g);

/// Half the minimum multiplicity distance, n^(m-1) (sn - d) / 2. The
/// decoders guarantee unique decoding strictly below this.
HalfInt unique_decoding_radius(const CodeParams& params);

}  // namespace multcode
