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

#include <optional>
#include <vector>

#include "multcode/mcode.hpp"
#include "multcode/wdec.hpp"

namespace multcode {

/// Per-iteration observables of the layer-peeling decoders, for tests that
/// assert the promise-propagation invariants. One entry per extracted
/// univariate piece P_{ell, e}.
struct LayerExtraction {
    std::int64_t ell;
    Exponents tail_monomial;  // e_{-1}, exponents of x_2..x_m; degree d - ell
    WeightedInstance instance;
    UniPoly recovered;
};

struct DecodeTrace {
    std::vector<LayerExtraction> extractions;
};

/// The residual word after subtracting the encodings of already-recovered
/// layers: symbol (i1, e_{-1}) coefficients of the first coordinate peeled
/// off at x_1 = a, keeping z_1-degree exactly `level`. The result is an
/// (m-1)-variate word of order s - level for degree-(out_degree) messages.
ReceivedWord slice(const ReceivedWord& f, const FieldElement& a, int level,
                   std::int64_t out_degree);

/// Unique decoder for bivariate words: peels x_2-degree layers, column
/// decodes with the varying-multiplicity decoder, extracts each layer from
/// the resulting fractional word, and accepts only within the strict
/// radius. Returns nullopt when no codeword lies strictly within
/// n (sn - d) / 2 of f.
std::optional<MultiPoly> decode_bivariate(const ReceivedWord& f, DecodeTrace* trace = nullptr);

/// Unique decoder for any m >= 2: the bivariate algorithm with the column
/// decode replaced by recursion for m > 2. Never returns a polynomial
/// failing the strict radius check.
std::optional<MultiPoly> decode(const ReceivedWord& f, DecodeTrace* trace = nullptr);

}  // namespace multcode
