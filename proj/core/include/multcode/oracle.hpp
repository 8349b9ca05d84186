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

#include "multcode/mcode.hpp"

namespace multcode {

/// Enumeration cap: the MULTCODE_ENUM_CAP environment variable when set,
/// otherwise 10^6 message polynomials.
std::uint64_t default_enum_cap();

/// The full message space F_{<=d}[x_1..x_m] of a code, enumerable when
/// p^dim fits under the cap. Intentionally naive: this is the ground truth
/// the decoders are checked against, and it shares only the encoding
/// primitives with them.
class PolySpace {
  public:
    explicit PolySpace(CodeParams params, std::uint64_t cap = default_enum_cap());

    const CodeParams& params() const { return params_; }
    /// Number of monomials of degree <= d, i.e. C(d+m, m).
    std::int64_t dim() const { return static_cast<std::int64_t>(monomials_.size()); }
    /// p^dim, the number of message polynomials.
    std::uint64_t size() const { return count_; }

    /// The index-th polynomial: index written base p, digit j (least
    /// significant first) the coefficient of the j-th monomial in
    /// graded-lex order. Index 0 is the zero polynomial.
    MultiPoly poly_at(std::uint64_t index) const;

  private:
    CodeParams params_;
    std::vector<Exponents> monomials_;
    std::uint64_t count_;
};

struct NearestResult {
    MultiPoly poly;
    std::int64_t dist;
    bool unique;
};

/// Exhaustive nearest-codeword search under the multiplicity distance.
/// Ties are broken by enumeration order for the returned polynomial and
/// reported via unique = false.
NearestResult nearest_codeword(const ReceivedWord& f, const PolySpace& space);

}  // namespace multcode
