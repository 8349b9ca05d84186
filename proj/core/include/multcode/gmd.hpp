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
#include <utility>
#include <vector>

#include "multcode/field.hpp"

namespace multcode {

/// Outer Reed-Solomon code: messages are coefficient vectors of length K,
/// codewords their evaluations on a set of N distinct points of GF(p_out).
/// Minimum distance D = N - K + 1.
struct RsOuterParams {
    RsOuterParams(const PrimeField& field, std::vector<FieldElement> eval_set, std::int64_t dimension);

    std::int64_t block_count() const { return static_cast<std::int64_t>(eval_set.size()); }  // N
    std::int64_t min_distance() const { return block_count() - dimension + 1; }              // D

    std::uint64_t modulus;
    std::vector<FieldElement> eval_set;
    std::int64_t dimension;  // K
};

/// Concatenated code C_out o C_in. The outer alphabet GF(p_out) is labeled
/// into inner messages by base-q digits of the representative (least
/// significant digit first), which needs p_out <= q^k. The inner code is
/// given by a k x n_in generator matrix over GF(q); its minimum distance
/// restricted to the used labels is verified exhaustively at construction
/// for desk-scale sizes and must match the declared value.
class ConcatCode {
  public:
    ConcatCode(RsOuterParams outer, const PrimeField& inner_field,
               std::vector<std::vector<FieldElement>> generator, std::int64_t inner_distance);

    const RsOuterParams& outer() const { return outer_; }
    std::uint64_t inner_modulus() const { return q_; }
    std::int64_t inner_dim() const { return static_cast<std::int64_t>(gen_.size()); }      // k
    std::int64_t inner_length() const { return static_cast<std::int64_t>(gen_[0].size()); }  // n_in
    std::int64_t inner_distance() const { return d_in_; }

    /// Base-q digits of an outer symbol, the inner message for its block.
    std::vector<FieldElement> label(const FieldElement& outer_symbol) const;
    /// Inner codeword of an outer symbol.
    std::vector<FieldElement> inner_encode(const FieldElement& outer_symbol) const;

  private:
    RsOuterParams outer_;
    std::uint64_t q_;
    std::vector<std::vector<FieldElement>> gen_;
    std::int64_t d_in_;
};

/// N blocks of n_in symbols over GF(q).
using GmdReceived = std::vector<std::vector<FieldElement>>;

/// Outer RS encoding, labeling, then per-block inner encoding.
GmdReceived concat_encode(const std::vector<FieldElement>& msg, const ConcatCode& code);

/// Brute-force maximum-likelihood inner decoding over the used labels:
/// the nearest inner codeword's outer symbol and its Hamming distance,
/// ties broken toward the smallest representative.
std::pair<FieldElement, std::int64_t> inner_ml_decode(const std::vector<FieldElement>& block,
                                                      const ConcatCode& code);

/// Forney GMD decoding: inner ML decoding, integer confidence weights
/// W(i) = min(2 dist_i, d_in), and for each observed threshold an outer
/// errors-and-erasures pass (the varying-multiplicity decoder with svec in
/// {0,1}). Accepts the first message whose re-encoding lies strictly
/// within Hamming distance D d_in / 2 of f; nullopt when none does.
std::optional<std::vector<FieldElement>> gmd_decode(const GmdReceived& f, const ConcatCode& code);

}  // namespace multcode
